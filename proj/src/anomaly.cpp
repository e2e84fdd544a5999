#include "searchtopo/anomaly.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>

namespace searchtopo {

namespace {

void require_open_unit(double delta, const char* what) {
    if (!(delta > 0.0 && delta < 1.0)) {
        std::ostringstream msg;
        msg << what << " must lie strictly between 0 and 1, got " << delta;
        throw Error(msg.str());
    }
}

}  // namespace

double jaccard(const WordList& a, const WordList& b) {
    if (a.empty() && b.empty()) return 1.0;
    std::size_t common = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++common;
            ++i;
            ++j;
        }
    }
    const std::size_t total = a.size() + b.size() - common;
    return static_cast<double>(common) / static_cast<double>(total);
}

double jaccard(const WordSet& a, const WordSet& b) {
    return jaccard(WordList(a.begin(), a.end()), WordList(b.begin(), b.end()));
}

void ReferenceSpec::validate() const {
    if (keywords.empty()) throw Error("anomaly: reference keyword set is empty");
    require_open_unit(delta0, "delta0");
    if (max_iterations < 1) throw Error("anomaly: max_iterations must be at least 1");
    if (!(epsilon > 0.0)) throw Error("anomaly: epsilon must be positive");
}

SimilarityScorer::SimilarityScorer(const Searcher& searcher, const WordSet& keywords, CandidatePool pool) {
    WordSet ref;
    for (const auto& k : keywords) {
        for (auto& t : tokenize(k)) ref.insert(std::move(t));
    }
    if (ref.empty()) throw Error("anomaly: reference keyword set is empty");
    reference_.assign(ref.begin(), ref.end());

    if (pool == CandidatePool::All) {
        pool_ = searcher.corpus().universe();
    } else {
        for (const auto& w : reference_) pool_ = pool_.unite(searcher.index().lookup(w));
    }
    scores_.reserve(pool_.size());
    for (DocIndex d : pool_) scores_.push_back({d, jaccard(reference_, searcher.corpus().document(d).tokens)});
}

double SimilarityScorer::similarity(DocIndex doc) const {
    auto it = std::lower_bound(scores_.begin(), scores_.end(), doc,
                               [](const ScoredDoc& s, DocIndex d) { return s.doc < d; });
    if (it == scores_.end() || it->doc != doc) throw Error("document is not in the candidate pool");
    return it->similarity;
}

NeighborhoodSplit SimilarityScorer::split(double delta) const {
    std::vector<DocIndex> inside, outside;
    for (const auto& s : scores_) (s.similarity > delta ? inside : outside).push_back(s.doc);
    NeighborhoodSplit r;
    r.delta = delta;
    r.pool = pool_;
    r.neighborhood = DocSet::from_unsorted(std::move(inside));
    r.anomalies = DocSet::from_unsorted(std::move(outside));
    return r;
}

double SimilarityScorer::mean_similarity(const DocSet& docs) const {
    if (docs.empty()) return 0.0;
    double sum = 0.0;
    for (DocIndex d : docs) sum += similarity(d);
    return sum / static_cast<double>(docs.size());
}

NeighborhoodSplit delta_neighborhood(const Searcher& searcher, const WordSet& keywords, double delta,
                                     CandidatePool pool) {
    require_open_unit(delta, "delta");
    return SimilarityScorer(searcher, keywords, pool).split(delta);
}

const char* to_string(Termination t) {
    switch (t) {
        case Termination::EmptyAnomalies:
            return "EMPTY_ANOMALIES";
        case Termination::MaxIterations:
            return "MAX_ITERATIONS";
        case Termination::Converged:
            return "CONVERGED";
    }
    return "?";
}

AnomalyReport detect(const Searcher& searcher, const ReferenceSpec& spec) {
    spec.validate();
    SimilarityScorer scorer(searcher, spec.keywords, spec.pool);

    AnomalyReport r;
    r.reference = scorer.reference();
    r.pool = scorer.pool();
    r.scores = scorer.scores();

    auto record = [&](double delta) {
        auto s = scorer.split(delta);
        r.iterations.push_back({delta, s.neighborhood, s.anomalies, scorer.mean_similarity(s.anomalies)});
    };

    double delta = spec.delta0;
    record(delta);
    int refinements = 0;
    for (;;) {
        const auto& last = r.iterations.back();
        if (last.anomalies.empty()) {
            r.termination = Termination::EmptyAnomalies;
            break;
        }
        if (refinements >= spec.max_iterations) {
            r.termination = Termination::MaxIterations;
            break;
        }
        const double next = last.anomaly_mean;
        if (std::fabs(next - delta) < spec.epsilon) {
            r.termination = Termination::Converged;
            break;
        }
        delta = next;
        ++refinements;
        record(delta);
    }
    r.final_delta = delta;
    r.ultimate_anomalies = r.iterations.back().anomalies;
    return r;
}

NestedReport check_nested(const Searcher& searcher, const WordSet& keywords, const std::vector<double>& deltas,
                          CandidatePool pool) {
    if (deltas.empty()) throw Error("nestedness check needs at least one delta");
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        require_open_unit(deltas[i], "delta");
        if (i > 0 && !(deltas[i - 1] < deltas[i])) throw Error("deltas must be strictly ascending");
    }
    SimilarityScorer scorer(searcher, keywords, pool);
    NestedReport r;
    r.deltas = deltas;
    DocSet prev;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        auto s = scorer.split(deltas[i]);
        r.sizes.push_back(s.neighborhood.size());
        if (i > 0 && !prev.includes(s.neighborhood)) {
            r.nested = false;
            r.violations.push_back(i - 1);
        }
        prev = std::move(s.neighborhood);
    }
    return r;
}

}  // namespace searchtopo
