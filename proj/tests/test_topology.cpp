#include "doctest.h"
#include "oracles.hpp"
#include "searchtopo/fixtures.hpp"
#include "searchtopo/topology.hpp"

using namespace searchtopo;

namespace {

std::vector<WordList> opens_of(std::initializer_list<WordList> sets) { return sets; }

ContainmentRelation chain_relation(const Searcher& s) { return ContainmentRelation::build(s, {"a", "b", "c"}); }

std::set<Mask> as_set(const FiniteTopology& t) { return std::set<Mask>(t.opens().begin(), t.opens().end()); }

}  // namespace

TEST_CASE("chain corpus topologies") {
    Searcher s(fixtures::chain3());
    const auto rel = chain_relation(s);
    const auto tb = tau_b(rel);
    const auto tf = tau_f(rel);
    CHECK(tb.open_sets() == opens_of({{}, {"c"}, {"b", "c"}, {"a", "b", "c"}}));
    CHECK(tf.open_sets() == opens_of({{}, {"a"}, {"a", "b"}, {"a", "b", "c"}}));
    CHECK(tb.minimal_open_neighborhood("b") == WordSet{"b", "c"});
    CHECK(tf.minimal_open_neighborhood("b") == WordSet{"a", "b"});
    CHECK(tb.is_topology());
    CHECK(tb.is_alexandrov());

    const auto lb = check_open_union_identity(tb, rel, Side::After);
    CHECK(lb.checked == 4);
    CHECK(lb.passed());
    CHECK(check_open_union_identity(tf, rel, Side::Fore).passed());
    CHECK(check_minimal_opens(tb, rel, Side::After).passed());
    CHECK(check_minimal_opens(tf, rel, Side::Fore).passed());
    CHECK(check_duality(tb, tf).passed());
}

TEST_CASE("open structure on the chain corpus") {
    Searcher s(fixtures::chain3());
    const auto rel = chain_relation(s);
    const auto o = check_open_structure(tau_b(rel), tau_f(rel), rel);
    CHECK(o.common_opens == 2);
    CHECK(o.passed());
    CHECK(o.one_sided_opens == 4);
    const auto& ce = o.equality_counterexamples;
    CHECK(std::find(ce.begin(), ce.end(), WordSet{"a"}) != ce.end());
}

TEST_CASE("m-step topologies on the chain corpus") {
    Searcher s(fixtures::chain3());
    const auto rel = chain_relation(s);
    const auto plain = n_topologies(rel, 2, ChainMode::Reflexive);
    CHECK(plain.matches_tau);
    CHECK(plain.fore == tau_f(rel));
    CHECK(plain.after == tau_b(rel));
    CHECK(plain.after_union_violations.empty());

    const auto strict = n_topologies(rel, 2, ChainMode::Strict);
    CHECK(strict.after.open_sets() == opens_of({{}, {"c"}, {"a", "b", "c"}}));
    CHECK(strict.after.is_topology());
}

TEST_CASE("subbase generation") {
    const auto t = generate_from_subbase({"p", "q", "r"}, {{"p", "q"}, {"q", "r"}});
    CHECK(t.open_sets() == opens_of({{}, {"q"}, {"p", "q"}, {"q", "r"}, {"p", "q", "r"}}));
    const auto trivial = generate_from_subbase({"p"}, {});
    CHECK(trivial.open_sets() == opens_of({{}, {"p"}}));
    CHECK_THROWS_AS(generate_from_subbase({"p"}, {{"z"}}), Error);
}

TEST_CASE("ground cap") {
    WordSet big;
    for (int i = 0; i < 17; ++i) big.insert("w" + std::to_string(100 + i));
    try {
        generate_from_subbase(big, {});
        FAIL("cap not enforced");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("16") != std::string::npos);
    }
    CHECK(generate_from_subbase(big, {}, 17).size() == 2);
    WordSet huge;
    for (int i = 0; i < 25; ++i) huge.insert("w" + std::to_string(100 + i));
    CHECK_THROWS_AS(generate_from_subbase(huge, {}, 25), Error);
}

TEST_CASE("canonical order is size then lexicographic") {
    CHECK(canonical_less(0b100, 0b011));
    CHECK(canonical_less(0b011, 0b101));
    CHECK_FALSE(canonical_less(0b101, 0b101));
}

TEST_CASE("generation agrees with the brute-force enumerator") {
    oracle::Generator gen(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + gen.below(7);
        WordList ground;
        for (std::size_t i = 0; i < n; ++i) ground.push_back("g" + std::to_string(i));
        std::vector<WordSet> subbase;
        std::vector<Mask> masks;
        const std::size_t k = gen.below(5);
        for (std::size_t j = 0; j < k; ++j) {
            WordSet member;
            Mask m = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (gen.below(2)) {
                    member.insert(ground[i]);
                    m |= Mask{1} << i;
                }
            }
            subbase.push_back(member);
            masks.push_back(m);
        }
        const auto t = generate_from_subbase(WordSet(ground.begin(), ground.end()), subbase);
        REQUIRE(as_set(t) == oracle::generate(n, masks));
        REQUIRE(std::is_sorted(t.opens().begin(), t.opens().end(), canonical_less));
        REQUIRE(t.is_topology());
    }
}

// Topology properties over random corpora, every topology compared with the
// brute-force enumerator fed the scanned after/fore sets.
TEST_CASE("random corpora: topology properties") {
    oracle::Generator gen(77);
    for (int trial = 0; trial < 60; ++trial) {
        Searcher s(gen.corpus(1 + gen.below(30), 1 + gen.below(8)));
        const auto& vocab = s.corpus().vocabulary();
        if (vocab.empty()) continue;
        const auto rel = ContainmentRelation::build(s, WordSet(vocab.begin(), vocab.end()));
        const std::size_t n = rel.size();
        std::vector<oracle::Docs> sp;
        for (const auto& w : rel.ground()) sp.push_back(oracle::scan(s.corpus(), {w}));
        std::vector<Mask> after(n, 0), fore(n, 0);
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                if (oracle::subset(sp[y], sp[x])) after[x] |= Mask{1} << y;
                if (oracle::subset(sp[x], sp[y])) fore[x] |= Mask{1} << y;
            }
        }
        const auto tb = tau_b(rel);
        const auto tf = tau_f(rel);
        REQUIRE(as_set(tb) == oracle::generate(n, after));
        REQUIRE(as_set(tf) == oracle::generate(n, fore));
        REQUIRE(check_open_union_identity(tb, rel, Side::After).passed());
        REQUIRE(check_open_union_identity(tf, rel, Side::Fore).passed());
        REQUIRE(check_minimal_opens(tb, rel, Side::After).passed());
        REQUIRE(check_minimal_opens(tf, rel, Side::Fore).passed());
        for (std::size_t x = 0; x < n; ++x) {
            REQUIRE(tb.minimal_open(x) == after[x]);
            REQUIRE(tf.minimal_open(x) == fore[x]);
        }
        REQUIRE(check_duality(tb, tf).passed());
        std::set<Mask> flipped;
        for (Mask d : tf.opens()) flipped.insert(tb.full() & ~d);
        REQUIRE(flipped == as_set(tb));
        REQUIRE(check_open_structure(tb, tf, rel).passed());
        for (int m = 2; m <= 4; ++m) REQUIRE(n_topologies(rel, m, ChainMode::Reflexive).matches_tau);
    }
}

TEST_CASE("grounds above the default cap need an explicit cap") {
    Searcher s(Corpus::ingest({{"1", std::string("a b c d e f g h i j k l m n o p q")}}));
    const auto& vocab = s.corpus().vocabulary();
    const auto rel = ContainmentRelation::build(s, WordSet(vocab.begin(), vocab.end()));
    CHECK_THROWS_AS(tau_b(rel), Error);
    CHECK(tau_b(rel, 17).size() == 2);
}
