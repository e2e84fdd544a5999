#include "doctest.h"
#include "oracles.hpp"
#include "searchtopo/fixtures.hpp"
#include "searchtopo/relation.hpp"

using namespace searchtopo;

namespace {

ContainmentRelation chain_relation(const Searcher& s) { return ContainmentRelation::build(s, {"a", "b", "c"}); }

}  // namespace

TEST_CASE("chain corpus pairs and neighborhoods") {
    Searcher s(fixtures::chain3());
    const auto rel = chain_relation(s);
    const std::vector<WordPair> expected{{"a", "a"}, {"a", "b"}, {"a", "c"}, {"b", "b"}, {"b", "c"}, {"c", "c"}};
    CHECK(rel.pairs() == expected);
    CHECK(rel.after("a") == WordSet{"a", "b", "c"});
    CHECK(rel.fore("c") == WordSet{"a", "b", "c"});
    CHECK(rel.after("c") == WordSet{"c"});
    CHECK(rel.is_serial());
    CHECK(rel.is_reflexive());
    CHECK(rel.is_transitive());
    CHECK(rel.preceq({"a"}, {"b", "c"}));
    CHECK_FALSE(rel.preceq({"c"}, {"a"}));
    CHECK(rel.succeq({"c"}, {"a"}));
}

TEST_CASE("strict m-step chains on the chain corpus") {
    Searcher s(fixtures::chain3());
    const auto rel = chain_relation(s);
    const auto two = rel.m_step("a", "c", 2, ChainMode::Strict);
    CHECK(two.holds);
    REQUIRE(two.witness);
    CHECK(*two.witness == WordList{"b"});
    CHECK_FALSE(rel.m_step("a", "c", 3, ChainMode::Strict).holds);
    CHECK(rel.m_after("a", 2, ChainMode::Strict) == WordSet{"c"});
    CHECK(rel.m_after("a", 1, ChainMode::Strict) == WordSet{"b", "c"});
    CHECK(rel.m_fore("c", 2, ChainMode::Strict) == WordSet{"a"});
    CHECK(rel.m_after("c", 1, ChainMode::Strict).empty());
}

TEST_CASE("reflexive m-step relation equals R") {
    Searcher s(fixtures::chain3());
    const auto rel = chain_relation(s);
    for (int m = 1; m <= 5; ++m) {
        for (const auto& x : rel.ground()) {
            CHECK(rel.m_after(x, m) == rel.after(x));
            CHECK(rel.m_fore(x, m) == rel.fore(x));
        }
    }
    const auto r = rel.m_step("a", "c", 3);
    CHECK(r.holds);
    REQUIRE(r.witness);
    CHECK(r.witness->size() == 2);
}

TEST_CASE("relation errors") {
    Searcher s(fixtures::chain3());
    CHECK_THROWS_AS(ContainmentRelation::build(s, {}), Error);
    const auto rel = chain_relation(s);
    CHECK_THROWS_AS(rel.index_of("q"), Error);
    CHECK_THROWS_AS(rel.m_step("a", "b", 0), Error);
    CHECK_THROWS_AS(ContainmentRelation::from_pairs({"a"}, {{"a", "q"}}), Error);
}

TEST_CASE("relation checks detect non-preorders") {
    const auto r = ContainmentRelation::from_pairs({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    CHECK_FALSE(r.is_reflexive());
    CHECK_FALSE(r.is_transitive());
    CHECK_FALSE(r.is_serial());
    const auto loops = ContainmentRelation::from_pairs({"x", "y"}, {{"x", "x"}, {"y", "x"}});
    CHECK(loops.is_serial());
    CHECK(loops.is_transitive());
}

TEST_CASE("absent words have empty spaces and sit below everything") {
    Searcher s(fixtures::chain3());
    const auto rel = ContainmentRelation::build(s, {"c", "zzz"});
    CHECK(rel.related("c", "zzz"));
    CHECK_FALSE(rel.related("zzz", "c"));
}

TEST_CASE("multi-token keywords use the intersection of their tokens") {
    Searcher s(fixtures::big_phrases());
    const auto rel = ContainmentRelation::build(s, {"Big", "Big Data", "big data analytics"});
    CHECK(rel.ground() == WordList{"big", "big data", "big data analytics"});
    CHECK(rel.after("big") == WordSet{"big", "big data", "big data analytics"});
    CHECK(rel.fore("big data analytics") == WordSet{"big", "big data", "big data analytics"});
}

TEST_CASE("equal spaces form classes") {
    const auto c = Corpus::ingest({{"1", std::string("x y")}, {"2", std::string("x y z")}});
    Searcher s(c);
    const auto rel = ContainmentRelation::build(s, {"x", "y", "z"});
    const std::vector<WordSet> classes{{"x", "y"}, {"z"}};
    CHECK(rel.equivalence_classes() == classes);
}

// Relation against a scan, and the m-step properties against a direct layered
// reachability count over the scanned containment matrix.
TEST_CASE("random corpora: relation properties") {
    oracle::Generator gen(41);
    for (int trial = 0; trial < 60; ++trial) {
        Searcher s(gen.corpus(1 + gen.below(40), 2 + gen.below(7)));
        const auto& vocab = s.corpus().vocabulary();
        if (vocab.empty()) continue;
        const auto rel = ContainmentRelation::build(s, WordSet(vocab.begin(), vocab.end()));
        const std::size_t n = rel.size();
        std::vector<oracle::Docs> sp;
        for (const auto& w : rel.ground()) sp.push_back(oracle::scan(s.corpus(), {w}));

        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) REQUIRE(rel.related(x, y) == oracle::subset(sp[y], sp[x]));
        }
        REQUIRE(rel.is_reflexive());
        REQUIRE(rel.is_transitive());

        // strict chains of exactly m links, by dynamic programming over lengths
        auto strict = [&](std::size_t x, std::size_t y) { return oracle::subset(sp[y], sp[x]) && sp[x] != sp[y]; };
        for (std::size_t x = 0; x < n; ++x) {
            std::vector<char> layer(n, 0);
            layer[x] = 1;
            for (int m = 1; m <= 4; ++m) {
                std::vector<char> nxt(n, 0);
                for (std::size_t u = 0; u < n; ++u) {
                    if (!layer[u]) continue;
                    for (std::size_t v = 0; v < n; ++v) nxt[v] |= strict(u, v);
                }
                layer = nxt;
                WordSet expect;
                for (std::size_t v = 0; v < n; ++v) {
                    if (layer[v]) expect.insert(rel.ground()[v]);
                }
                const auto& xw = rel.ground()[x];
                REQUIRE(rel.m_after(xw, m, ChainMode::Strict) == expect);
                REQUIRE(rel.m_after(xw, m) == rel.after(xw));
                REQUIRE(rel.preceq(rel.m_after(xw, m, ChainMode::Strict), rel.m_after(xw, m + 1, ChainMode::Strict)));
                REQUIRE(rel.succeq(rel.m_fore(xw, m, ChainMode::Strict), rel.m_fore(xw, m + 1, ChainMode::Strict)));
                for (const auto& y : expect) {
                    const auto w = rel.m_step(xw, y, m, ChainMode::Strict);
                    REQUIRE(w.holds);
                    REQUIRE(w.witness->size() == static_cast<std::size_t>(m - 1));
                    WordList chain{xw};
                    chain.insert(chain.end(), w.witness->begin(), w.witness->end());
                    chain.push_back(y);
                    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
                        REQUIRE(strict(rel.index_of(chain[i]), rel.index_of(chain[i + 1])));
                    }
                }
            }
        }
    }
}
