#pragma once

#include <cstdint>
#include <random>

#include "searchtopo/corpus.hpp"

namespace searchtopo {

/// Portable sampling helpers over std::mt19937_64, whose raw output sequence is
/// fixed by the standard (the std distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [0, 1).
    double unit();
    bool coin() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

struct RandomCorpusOptions {
    std::size_t words = 8;
    std::size_t docs = 40;
    std::uint64_t seed = 0;
    /// P(df = d) ∝ d^-exponent for d in 1..docs.
    double exponent = 1.2;
};

/// Words w00, w01, ... with power-law document frequencies. Half of the words take
/// a prefix of one shared random document order (so their spaces nest), the rest a
/// uniform sample, giving a mix of comparable and incomparable pairs.
Corpus random_corpus(const RandomCorpusOptions& options);

}  // namespace searchtopo
