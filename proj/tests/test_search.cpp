#include "doctest.h"
#include "oracles.hpp"
#include "searchtopo/fixtures.hpp"
#include "searchtopo/search.hpp"

using namespace searchtopo;

namespace {

std::vector<std::string> ids(const Searcher& s, const DocSet& d) { return s.corpus().ids_of(d); }

WordSet keys(const SearchFamily& f) { return f.keys(); }

}  // namespace

TEST_CASE("search on the chain corpus") {
    Searcher s(fixtures::chain3());
    CHECK(ids(s, s.search("b")) == std::vector<std::string>{"d2", "d3"});
    CHECK(s.search("B") == s.search("b"));
    CHECK(s.search("zzz").empty());
    CHECK(s.search(Keyword::parse("a b")) == DocSet{1, 2});
}

TEST_CASE("search on sample5") {
    Searcher s(fixtures::sample5());
    CHECK(ids(s, s.search("data")) == std::vector<std::string>{"3", "4"});
}

TEST_CASE("vee intersects and wedge unites") {
    Searcher s(fixtures::chain3());
    CHECK(s.eval(parse_query("a | b")) == DocSet{1, 2});
    CHECK(s.eval(parse_query("b & c")) == DocSet{1, 2});
    CHECK(s.eval(parse_query("a b")) == DocSet{1, 2});
    CHECK(s.eval(parse_query("c | c")) == s.search("c"));
    CHECK(s.eval(parse_query("(a & c) | b")) == DocSet{1, 2});
    CHECK(s.eval(parse_query("zzz | a")).empty());
}

TEST_CASE("query parsing") {
    CHECK(parse_query("a | b & c").to_string() == "((a | b) & c)");
    CHECK(parse_query("a (b & c)").to_string() == "(a | (b & c))");
    CHECK(parse_query("Big-Data").to_string() == "(big | data)");
    CHECK(parse_query("x").to_string() == "x");
    CHECK_THROWS_AS(parse_query(""), Error);
    CHECK_THROWS_AS(parse_query("a |"), Error);
    CHECK_THROWS_AS(parse_query("(a"), Error);
    CHECK_THROWS_AS(parse_query("a )"), Error);
    CHECK_THROWS_AS(parse_query("--"), Error);
}

TEST_CASE("keywords") {
    const auto k = Keyword::parse("Movie big movie");
    CHECK(k.tokens() == WordList{"movie", "big"});
    CHECK(k.label() == "movie big");
    CHECK(Keyword::from_tokens({"b", "a", "b"}).label() == "a b");
    CHECK(k.vee(Keyword::parse("a")).label() == "a big movie");
    CHECK_THROWS_AS(Keyword::parse(" ,; "), Error);
    CHECK(normalize_keywords({"Big  Data", "x"}) == WordSet{"big data", "x"});
}

TEST_CASE("families are keyed by label") {
    Searcher s(fixtures::chain3());
    const auto f = s.family({"a", "c"});
    CHECK(f.entries.size() == 2);
    CHECK(f.entries.at("a") == DocSet{0, 1, 2});
    CHECK(f.entries.at("c") == DocSet{2});
    CHECK(s.family({}).entries.empty());
    CHECK(s.family({"zzz"}).entries.at("zzz").empty());

    Searcher p(fixtures::sample5());
    const auto g = p.family({"machine", "data"});
    CHECK(ids(p, g.entries.at("machine")) == std::vector<std::string>{"0", "2"});
    CHECK(ids(p, g.entries.at("data")) == std::vector<std::string>{"3", "4"});
}

TEST_CASE("keyed families keep duplicate values apart") {
    const auto c = Corpus::ingest({{"1", std::string("x y")}, {"2", std::string("z")}});
    Searcher s(c);
    const auto f = s.family({"x", "y", "z"});
    CHECK(f.entries.size() == 3);
    CHECK(f.value_set().size() == 2);
    FamilyAlgebra alg(s, WordSet{"x", "y", "z"});
    const auto comp = alg.complement({"x"});
    CHECK(comp.holds);
    CHECK(keys(comp.family) == WordSet{"y", "z"});
}

TEST_CASE("family algebra on the chain corpus") {
    Searcher s(fixtures::chain3());
    FamilyAlgebra alg(s, WordSet{"a", "b", "c"});
    const auto u = alg.unite({"a"}, {"b"});
    CHECK(u.holds);
    CHECK(keys(u.family) == WordSet{"a", "b"});
    const auto c = alg.complement({"a"});
    CHECK(c.holds);
    CHECK(keys(c.family) == WordSet{"b", "c"});
    const auto i = alg.intersect({"a", "b"}, {"b", "c"});
    CHECK(i.holds);
    CHECK(keys(i.family) == WordSet{"b"});
    CHECK(i.family.entries.at("b") == DocSet{1, 2});
    CHECK(alg.complement_of_union({"a"}, {"b"}).family.keys() == WordSet{"c"});
    CHECK(alg.complement_of_intersection({"a", "b"}, {"b"}).family.keys() == WordSet{"a", "c"});
}

TEST_CASE("complement needs a declared working set") {
    Searcher s(fixtures::chain3());
    FamilyAlgebra open_alg(s);
    CHECK(open_alg.unite({"a"}, {"b"}).holds);
    CHECK_THROWS_AS(open_alg.complement({"a"}), Error);
    FamilyAlgebra alg(s, WordSet{"a", "b"});
    CHECK_THROWS_AS(alg.complement({"c"}), Error);
}

TEST_CASE("keyed operations") {
    SearchFamily a{{{"x", DocSet{1}}, {"y", DocSet{2}}}};
    SearchFamily b{{{"y", DocSet{2}}, {"z", DocSet{3}}}};
    CHECK(keyed_union(a, b).keys() == WordSet{"x", "y", "z"});
    CHECK(keyed_intersection(a, b).keys() == WordSet{"y"});
    CHECK(keyed_difference(a, b).keys() == WordSet{"x"});
    CHECK(keyed_union(a, b).includes(a));
    CHECK_FALSE(a.includes(b));
}

// Identities over every subset pair of a small working set, with the expected
// families built entry by entry from a document scan.
TEST_CASE("family identities against a scan") {
    oracle::Generator gen(23);
    for (int trial = 0; trial < 8; ++trial) {
        Searcher s(gen.corpus(12, 5));
        const WordList ground{"v0", "v1", "v2", "v3", "v4"};
        FamilyAlgebra alg(s, WordSet(ground.begin(), ground.end()));
        auto subset = [&](unsigned bits) {
            WordSet out;
            for (unsigned i = 0; i < ground.size(); ++i) {
                if (bits & (1u << i)) out.insert(ground[i]);
            }
            return out;
        };
        auto scanned = [&](const WordSet& words) {
            std::map<std::string, oracle::Docs> out;
            for (const auto& w : words) out[w] = oracle::scan(s.corpus(), {w});
            return out;
        };
        auto as_map = [](const SearchFamily& f) {
            std::map<std::string, oracle::Docs> out;
            for (const auto& [k, v] : f.entries) out[k] = oracle::to_docs(v);
            return out;
        };
        for (unsigned a = 0; a < 32; ++a) {
            for (unsigned b = 0; b < 32; ++b) {
                const auto A = subset(a), B = subset(b);
                const auto AuB = subset(a | b), AnB = subset(a & b), Ac = subset(~a & 31u);
                const auto u = alg.unite(A, B);
                const auto i = alg.intersect(A, B);
                const auto c = alg.complement(A);
                const auto cu = alg.complement_of_union(A, B);
                const auto ci = alg.complement_of_intersection(A, B);
                REQUIRE(u.holds);
                REQUIRE(i.holds);
                REQUIRE(c.holds);
                REQUIRE(cu.holds);
                REQUIRE(ci.holds);
                REQUIRE(as_map(u.family) == scanned(AuB));
                REQUIRE(as_map(i.family) == scanned(AnB));
                REQUIRE(as_map(c.family) == scanned(Ac));
                REQUIRE(as_map(cu.family) == scanned(subset(~(a | b) & 31u)));
                REQUIRE(as_map(ci.family) == scanned(subset(~(a & b) & 31u)));
                if ((a & b) == a) REQUIRE(s.family(B).includes(s.family(A)));
            }
        }
    }
}

TEST_CASE("vee of n leaves equals the scan of their conjunction") {
    oracle::Generator gen(31);
    for (int trial = 0; trial < 40; ++trial) {
        Searcher s(gen.corpus(1 + gen.below(100), 6));
        std::vector<Query> leaves;
        std::vector<std::string> words;
        oracle::Docs any;
        const std::size_t n = 1 + gen.below(4);
        for (std::size_t i = 0; i < n; ++i) {
            words.push_back("v" + std::to_string(gen.below(7)));
            leaves.push_back(Query::leaf(words.back()));
            const auto d = oracle::scan(s.corpus(), {words.back()});
            any.insert(d.begin(), d.end());
        }
        CHECK(oracle::to_docs(s.eval(Query::vee(leaves))) == oracle::scan(s.corpus(), words));
        CHECK(oracle::to_docs(s.eval(Query::wedge(leaves))) == any);
    }
}
