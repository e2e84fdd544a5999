#include "searchtopo/random_corpus.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <vector>

namespace searchtopo {

std::uint64_t Rng::below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    for (;;) {
        const std::uint64_t v = next();
        if (v < limit) return v % n;
    }
}

double Rng::unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Corpus random_corpus(const RandomCorpusOptions& options) {
    if (options.words == 0 || options.docs == 0) throw Error("random corpus needs at least one word and one document");
    Rng rng(options.seed);
    const std::size_t n_docs = options.docs;

    std::vector<double> cdf(n_docs);
    double total = 0.0;
    for (std::size_t d = 1; d <= n_docs; ++d) {
        total += std::pow(static_cast<double>(d), -options.exponent);
        cdf[d - 1] = total;
    }

    std::vector<DocIndex> order(n_docs);
    std::iota(order.begin(), order.end(), DocIndex{0});
    for (std::size_t i = n_docs; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

    std::vector<WordList> doc_words(n_docs);
    for (std::size_t w = 0; w < options.words; ++w) {
        char name[16];
        std::snprintf(name, sizeof name, "w%02zu", w);

        const double u = rng.unit() * total;
        std::size_t df = 1;
        while (df < n_docs && cdf[df - 1] <= u) ++df;

        if (rng.coin()) {
            for (std::size_t i = 0; i < df; ++i) doc_words[order[i]].push_back(name);
        } else {
            std::vector<DocIndex> pick(n_docs);
            std::iota(pick.begin(), pick.end(), DocIndex{0});
            for (std::size_t i = 0; i < df; ++i) {
                std::swap(pick[i], pick[i + rng.below(n_docs - i)]);
                doc_words[pick[i]].push_back(name);
            }
        }
    }

    std::vector<Record> records;
    records.reserve(n_docs);
    for (std::size_t d = 0; d < n_docs; ++d) records.push_back({"d" + std::to_string(d), std::move(doc_words[d])});
    return Corpus::ingest(std::move(records));
}

}  // namespace searchtopo
