#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "searchtopo/search.hpp"

namespace searchtopo {

inline constexpr std::uint64_t kDefaultClosureCap = 4096;

/// A keyword set M with x, y ∈ M ⟺ x∨y ∈ M. Members are composite keywords over a
/// token pool; each is stored with sorted tokens.
class VeeClosedWordSet {
public:
    const WordList& pool() const noexcept { return pool_; }
    const std::vector<Keyword>& members() const noexcept { return members_; }
    /// Member labels.
    WordSet labels() const;
    bool contains(const Keyword& k) const;

    /// True when every pair's ∨ is a member and every member's tokens are members.
    bool is_closed() const;

private:
    friend VeeClosedWordSet vee_closure(const WordSet&, std::uint64_t);
    friend VeeClosedWordSet vee_members(const std::vector<Keyword>&);

    WordList pool_;
    std::vector<Keyword> members_;  // ordered by (token count, label)
};

/// Smallest ∨-closed superset of the seed: every non-empty subset of the seed's
/// token pool, 2^n - 1 keywords. Throws when that exceeds `cap`, quoting the size.
VeeClosedWordSet vee_closure(const WordSet& seed, std::uint64_t cap = kDefaultClosureCap);

/// Wraps an arbitrary keyword list without closing it (used for unions of closures).
VeeClosedWordSet vee_members(const std::vector<Keyword>& keywords);

/// {S(x) : x ∈ M}, keyed by keyword label.
struct PrimalFamily {
    std::map<std::string, Keyword> keywords;
    SearchFamily members;
    std::size_t universe_size = 0;
    std::uint64_t corpus_fingerprint = 0;

    friend bool operator==(const PrimalFamily& a, const PrimalFamily& b) {
        return a.members == b.members && a.universe_size == b.universe_size &&
               a.corpus_fingerprint == b.corpus_fingerprint;
    }
};

PrimalFamily primal_of(const Searcher& searcher, const VeeClosedWordSet& m);

struct AxiomStatus {
    bool holds = true;
    std::size_t checked = 0;
    /// Human-readable witnesses, e.g. "a" or "a | b -> a b".
    std::vector<std::string> witnesses;
};

struct AxiomReport {
    AxiomStatus excludes_universe;       // (i)   B ∉ P
    AxiomStatus downward_closed;         // (ii)  S(x) ∈ P, x∨y ∈ M ⟹ S(x∨y) ⊆ S(x), S(x∨y) ∈ P
    AxiomStatus prime;                   // (iii) S(x) ∩ S(y) ∈ P ⟹ S(x) ∈ P or S(y) ∈ P
    /// Independent corpus scan: keywords contained in every document.
    WordSet universal_keywords;
    /// (i) agrees with the scan.
    bool universe_cross_check = true;
    bool all_hold() const { return excludes_universe.holds && downward_closed.holds && prime.holds; }
};

AxiomReport check_axioms(const Searcher& searcher, const PrimalFamily& family);

struct PrimalUnionReport {
    PrimalFamily united;
    AxiomReport axioms;
    /// Keyed equality with the primal of the closure of M ∪ N.
    bool equals_closure_family = false;
    WordSet missing_from_union;
};

/// Keyed union of two primals over the same corpus (else throws), its axiom check,
/// and the comparison against the closure of the combined token pools.
PrimalUnionReport union_primal(const Searcher& searcher, const PrimalFamily& pm, const PrimalFamily& pn,
                               std::uint64_t cap = kDefaultClosureCap);

}  // namespace searchtopo
