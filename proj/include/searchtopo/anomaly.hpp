#pragma once

#include <string>
#include <vector>

#include "searchtopo/search.hpp"

namespace searchtopo {

/// |A ∩ B| / |A ∪ B| over sorted, duplicate-free word lists. J(∅, ∅) = 1.
double jaccard(const WordList& a, const WordList& b);
double jaccard(const WordSet& a, const WordSet& b);

/// Which documents get scored.
enum class CandidatePool {
    Union,  // documents containing at least one reference keyword
    All,    // every document in the corpus
};

struct ReferenceSpec {
    WordSet keywords;
    double delta0 = 0.4;
    int max_iterations = 10;
    double epsilon = 1e-12;
    CandidatePool pool = CandidatePool::Union;

    /// Throws unless 0 < delta0 < 1, max_iterations >= 1, epsilon > 0 and keywords is non-empty.
    void validate() const;
};

struct ScoredDoc {
    DocIndex doc = 0;
    double similarity = 0.0;
};

/// One δ split of the candidate pool: similarity > δ goes to the neighborhood,
/// the rest are anomalies.
struct NeighborhoodSplit {
    double delta = 0.0;
    DocSet pool;
    DocSet neighborhood;
    DocSet anomalies;
};

/// Scores every pool document against the normalized reference keywords.
class SimilarityScorer {
public:
    /// Throws on an empty keyword set.
    SimilarityScorer(const Searcher& searcher, const WordSet& keywords, CandidatePool pool = CandidatePool::Union);

    const WordList& reference() const noexcept { return reference_; }
    const std::vector<ScoredDoc>& scores() const noexcept { return scores_; }
    const DocSet& pool() const noexcept { return pool_; }

    NeighborhoodSplit split(double delta) const;
    /// Mean similarity over `docs` (which must lie in the pool); 0 for an empty set.
    double mean_similarity(const DocSet& docs) const;
    double similarity(DocIndex doc) const;

private:
    WordList reference_;
    DocSet pool_;
    std::vector<ScoredDoc> scores_;  // in pool order
};

/// Throws unless 0 < delta < 1.
NeighborhoodSplit delta_neighborhood(const Searcher& searcher, const WordSet& keywords, double delta,
                                     CandidatePool pool = CandidatePool::Union);

enum class Termination { EmptyAnomalies, MaxIterations, Converged };

const char* to_string(Termination t);

struct IterationRecord {
    double delta = 0.0;
    DocSet neighborhood;
    DocSet anomalies;
    /// Mean similarity of this round's anomalies (the next candidate delta).
    double anomaly_mean = 0.0;
};

struct AnomalyReport {
    WordList reference;
    DocSet pool;
    std::vector<ScoredDoc> scores;
    /// Round 0 uses delta0; each later round uses the previous round's anomaly mean.
    std::vector<IterationRecord> iterations;
    double final_delta = 0.0;
    DocSet ultimate_anomalies;
    Termination termination = Termination::EmptyAnomalies;
};

/// Iterative threshold refinement. Stops when a round has no anomalies, when the
/// next delta differs from the current one by less than epsilon, or after
/// max_iterations refinements.
AnomalyReport detect(const Searcher& searcher, const ReferenceSpec& spec);

struct NestedReport {
    std::vector<double> deltas;
    std::vector<std::size_t> sizes;
    bool nested = true;
    /// Index k where N_{δ_{k+1}} ⊄ N_{δ_k}, if any.
    std::vector<std::size_t> violations;
};

/// Deltas must be strictly ascending inside (0, 1).
NestedReport check_nested(const Searcher& searcher, const WordSet& keywords, const std::vector<double>& deltas,
                          CandidatePool pool = CandidatePool::Union);

}  // namespace searchtopo
