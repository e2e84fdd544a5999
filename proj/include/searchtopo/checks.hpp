#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "searchtopo/search.hpp"
#include "searchtopo/topology.hpp"

namespace searchtopo {

/// One named property evaluated over a corpus and word set.
///  - asserted: a failure is an invariant violation (CLI exit code 2).
///  - diagnostic: failures are expected for some inputs and only listed.
struct CheckOutcome {
    std::string name;
    bool asserted = true;
    bool passed = true;
    std::size_t cases = 0;
    std::vector<std::string> details;
};

struct SuiteOptions {
    int max_m = 4;
    /// Working sets up to this size get every (A, B) subset pair; larger ones sample.
    std::size_t exhaustive_family_limit = 5;
    std::size_t random_pairs = 1000;
    std::uint64_t seed = 0;
    std::size_t topology_cap = kDefaultGroundCap;
    /// Details kept per check; counts are always complete.
    std::size_t max_details = 8;
};

struct SuiteReport {
    WordList words;
    std::size_t documents = 0;
    std::vector<CheckOutcome> outcomes;

    std::size_t asserted_failures() const;
    std::size_t flagged_diagnostics() const;
};

/// S(keyword) by scanning every document's token list; independent of the index.
DocSet scan_search(const Corpus& corpus, const Keyword& keyword);

/// Runs every relation, topology, family-algebra, m-step, neighborhood, primal and
/// graph property over `words`.
SuiteReport run_suite(const Searcher& searcher, const WordSet& words, const SuiteOptions& options = {});

/// Highest document frequency first, ties alphabetical.
WordSet default_working_words(const Searcher& searcher, std::size_t limit);

}  // namespace searchtopo
