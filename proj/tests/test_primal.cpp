#include "doctest.h"
#include "oracles.hpp"
#include "searchtopo/fixtures.hpp"
#include "searchtopo/primal.hpp"
#include "searchtopo/random_corpus.hpp"

using namespace searchtopo;

TEST_CASE("vee closure") {
    const auto m = vee_closure({"b", "c"});
    CHECK(m.labels() == WordSet{"b", "c", "b c"});
    CHECK(m.pool() == WordList{"b", "c"});
    CHECK(m.is_closed());
    CHECK(m.contains(Keyword::parse("c b")));
    CHECK(vee_closure({"a b", "c"}).members().size() == 7);
    CHECK_THROWS_AS(vee_closure({}), Error);
    try {
        vee_closure({"a", "b", "c", "d"}, 10);
        FAIL("cap not enforced");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("15") != std::string::npos);
    }
    CHECK_FALSE(vee_members({Keyword::parse("a b")}).is_closed());
}

TEST_CASE("axioms on the chain corpus") {
    Searcher s(fixtures::chain3());
    const auto ok = check_axioms(s, primal_of(s, vee_closure({"b", "c"})));
    CHECK(ok.all_hold());
    CHECK(ok.universe_cross_check);
    CHECK(ok.universal_keywords.empty());

    const auto bad = check_axioms(s, primal_of(s, vee_closure({"a"})));
    CHECK_FALSE(bad.excludes_universe.holds);
    CHECK(bad.excludes_universe.witnesses == std::vector<std::string>{"a"});
    CHECK(bad.universal_keywords == WordSet{"a"});
    CHECK(bad.universe_cross_check);
    CHECK(bad.downward_closed.holds);
    CHECK(bad.prime.holds);
}

TEST_CASE("disjoint postings give an empty member") {
    Searcher s(Corpus::ingest({{"1", std::string("p")}, {"2", std::string("q")}, {"3", std::string("r")}}));
    const auto p = primal_of(s, vee_closure({"p", "q"}));
    CHECK(p.members.entries.at("p q").empty());
    const auto r = check_axioms(s, p);
    CHECK(r.downward_closed.holds);
    CHECK(r.prime.holds);
    CHECK(r.all_hold());
}

TEST_CASE("unions of primals") {
    Searcher s(fixtures::chain3());
    const auto pb = primal_of(s, vee_closure({"b"}));
    const auto pc = primal_of(s, vee_closure({"c"}));
    const auto u = union_primal(s, pb, pc);
    CHECK(u.united.members.keys() == WordSet{"b", "c"});
    CHECK(u.axioms.all_hold());
    CHECK_FALSE(u.equals_closure_family);
    CHECK(u.missing_from_union == WordSet{"b c"});

    CHECK(union_primal(s, pb, pb).united == pb);
    CHECK(union_primal(s, pb, pb).equals_closure_family);

    const auto ab = primal_of(s, vee_closure({"a", "b"}));
    const auto bc = primal_of(s, vee_closure({"b", "c"}));
    const auto left = union_primal(s, ab, bc);
    CHECK_FALSE(left.equals_closure_family);
    CHECK(left.missing_from_union.count("a c") == 1);
    CHECK(left.missing_from_union.count("a b c") == 1);

    Searcher other(fixtures::sample5());
    CHECK_THROWS_AS(union_primal(s, pb, primal_of(other, vee_closure({"data"}))), Error);
}

// Closures of up to four non-universal words on generated corpora: members match
// the scanned intersection, and the axioms hold on each closure and on unions.
TEST_CASE("random corpora: primal axioms") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        RandomCorpusOptions o;
        o.words = 6 + seed % 6;
        o.docs = 10 + seed % 50;
        o.seed = seed;
        Searcher s(random_corpus(o));
        const auto& vocab = s.corpus().vocabulary();
        WordList plain;
        for (const auto& w : vocab) {
            if (s.search(w).size() < s.universe_size()) plain.push_back(w);
        }
        if (plain.empty()) continue;
        std::vector<PrimalFamily> families;
        for (std::size_t k = 1; k <= 4; ++k) {
            WordSet seedw;
            for (std::size_t j = 0; j < k; ++j) seedw.insert(plain[(seed + j * 3) % plain.size()]);
            const auto m = vee_closure(seedw);
            REQUIRE(m.is_closed());
            const auto p = primal_of(s, m);
            for (const auto& k2 : m.members()) {
                REQUIRE(oracle::to_docs(p.members.entries.at(k2.label())) == oracle::scan(s.corpus(), k2.tokens()));
            }
            const auto r = check_axioms(s, p);
            REQUIRE(r.all_hold());
            REQUIRE(r.universe_cross_check);
            families.push_back(p);
        }
        for (std::size_t i = 0; i + 1 < families.size(); ++i) {
            REQUIRE(union_primal(s, families[i], families[i + 1]).axioms.all_hold());
        }
    }
}

TEST_CASE("a universal word is reported with its witness") {
    RandomCorpusOptions o;
    o.seed = 9;
    auto base = random_corpus(o);
    std::vector<Record> recs;
    for (const auto& d : base.documents()) {
        auto words = d.tokens;
        words.push_back("everywhere");
        recs.push_back({d.id, words});
    }
    Searcher s(Corpus::ingest(recs));
    std::string plain;
    for (const auto& w : s.corpus().vocabulary()) {
        if (plain.empty() && s.search(w).size() < s.universe_size()) plain = w;
    }
    REQUIRE_FALSE(plain.empty());
    const auto r = check_axioms(s, primal_of(s, vee_closure({"everywhere", plain})));
    CHECK_FALSE(r.excludes_universe.holds);
    CHECK(r.excludes_universe.witnesses == std::vector<std::string>{"everywhere"});
    CHECK(r.universe_cross_check);
}
