#include "doctest.h"
#include "oracles.hpp"
#include "searchtopo/checks.hpp"
#include "searchtopo/fixtures.hpp"
#include "searchtopo/random_corpus.hpp"

using namespace searchtopo;

namespace {

const CheckOutcome* find(const SuiteReport& r, const std::string& name) {
    for (const auto& o : r.outcomes) {
        if (o.name == name) return &o;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("suite on the chain corpus") {
    Searcher s(fixtures::chain3());
    const auto r = run_suite(s, {"a", "b", "c"});
    CHECK(r.asserted_failures() == 0);
    CHECK(r.documents == 3);
    const auto* one_sided = find(r, "one_sided_open_structure");
    REQUIRE(one_sided);
    CHECK_FALSE(one_sided->asserted);
    CHECK_FALSE(one_sided->passed);
    const auto* preorder = find(r, "preorder");
    REQUIRE(preorder);
    CHECK(preorder->asserted);
    CHECK(preorder->cases > 0);
}

TEST_CASE("suite on the sample and phrase fixtures") {
    Searcher sample(fixtures::sample5());
    const auto& vocab = sample.corpus().vocabulary();
    CHECK(run_suite(sample, WordSet(vocab.begin(), vocab.end())).asserted_failures() == 0);
    Searcher phrases(fixtures::big_phrases());
    CHECK(run_suite(phrases, fixtures::big_phrase_words()).asserted_failures() == 0);
}

TEST_CASE("large word sets skip topologies instead of failing") {
    RandomCorpusOptions o;
    o.words = 20;
    o.seed = 4;
    Searcher s(random_corpus(o));
    SuiteOptions opt;
    opt.random_pairs = 50;
    const auto r = run_suite(s, default_working_words(s, 20), opt);
    CHECK(r.asserted_failures() == 0);
    const auto* skipped = find(r, "topology_skipped");
    REQUIRE(skipped);
    CHECK_FALSE(skipped->asserted);
}

TEST_CASE("scan search matches the oracle") {
    Searcher s(fixtures::sample5());
    for (const auto* q : {"data", "data science", "machine learning", "nothing here"}) {
        const auto k = Keyword::parse(q);
        CHECK(oracle::to_docs(scan_search(s.corpus(), k)) == oracle::scan(s.corpus(), k.tokens()));
    }
}

TEST_CASE("default working words") {
    Searcher s(fixtures::sample5());
    const auto w = default_working_words(s, 3);
    CHECK(w.size() == 3);
    CHECK(w.count("data") == 1);
    CHECK(default_working_words(s, 1000).size() == s.corpus().vocabulary().size());
}

TEST_CASE("random corpus generator") {
    RandomCorpusOptions o;
    o.seed = 11;
    const auto a = random_corpus(o);
    const auto b = random_corpus(o);
    CHECK(a.fingerprint() == b.fingerprint());
    o.seed = 12;
    CHECK(random_corpus(o).fingerprint() != a.fingerprint());
    CHECK(a.size() == 40);
    CHECK(a.vocabulary().size() == 8);
    o.words = 0;
    CHECK_THROWS_AS(random_corpus(o), Error);

    // over a batch of seeds both comparable and incomparable pairs turn up
    std::size_t comparable = 0, incomparable = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RandomCorpusOptions p;
        p.seed = seed;
        Searcher s(random_corpus(p));
        const auto& v = s.corpus().vocabulary();
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                const auto x = s.search(v[i]), y = s.search(v[j]);
                if (x.includes(y) || y.includes(x)) ++comparable;
                else ++incomparable;
            }
        }
    }
    CHECK(comparable > 0);
    CHECK(incomparable > 0);
}

TEST_CASE("rng") {
    Rng a(5), b(5);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng r(1);
    for (int i = 0; i < 1000; ++i) {
        REQUIRE(r.below(7) < 7);
        const double u = r.unit();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}
