#include "searchtopo/checks.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <sstream>

#include "searchtopo/anomaly.hpp"
#include "searchtopo/graph.hpp"
#include "searchtopo/primal.hpp"
#include "searchtopo/random_corpus.hpp"
#include "searchtopo/relation.hpp"

namespace searchtopo {

namespace {

std::string join(const WordSet& ws) {
    std::string out = "{";
    for (const auto& w : ws) {
        if (out.size() > 1) out += ",";
        out += w;
    }
    return out + "}";
}

std::string join(const WordList& ws, const char* sep) {
    std::string out;
    for (const auto& w : ws) {
        if (!out.empty()) out += sep;
        out += w;
    }
    return out;
}

class Collector {
public:
    explicit Collector(std::size_t max_details) : max_details_(max_details) {}

    // deque: references handed out stay valid while more checks are added
    CheckOutcome& begin(std::string name, bool asserted) {
        outcomes_.push_back({std::move(name), asserted, true, 0, {}});
        return outcomes_.back();
    }

    void expect(CheckOutcome& c, bool ok, const std::string& what) {
        ++c.cases;
        if (ok) return;
        c.passed = false;
        if (c.details.size() < max_details_) c.details.push_back(what);
    }

    void note(CheckOutcome& c, const std::string& what) {
        if (c.details.size() < max_details_) c.details.push_back(what);
    }

    std::vector<CheckOutcome> take() { return {std::make_move_iterator(outcomes_.begin()), std::make_move_iterator(outcomes_.end())}; }

private:
    std::deque<CheckOutcome> outcomes_;
    std::size_t max_details_;
};

WordSet subset_of(const WordList& ground, std::uint64_t bits) {
    WordSet out;
    for (std::size_t i = 0; i < ground.size(); ++i) {
        if (bits & (std::uint64_t{1} << i)) out.insert(ground[i]);
    }
    return out;
}

WordSet random_subset(const WordList& ground, Rng& rng) {
    WordSet out;
    for (const auto& w : ground) {
        if (rng.coin()) out.insert(w);
    }
    return out;
}

void relation_checks(Collector& col, const Searcher& s, const ContainmentRelation& rel, int max_m) {
    const auto& corpus = s.corpus();
    const std::size_t n = rel.size();

    auto& pre = col.begin("preorder", true);
    col.expect(pre, rel.is_reflexive(), "relation is not reflexive");
    col.expect(pre, rel.is_transitive(), "relation is not transitive");

    auto& oracle = col.begin("relation_matches_scan", true);
    std::vector<DocSet> scanned;
    for (const auto& w : rel.ground()) scanned.push_back(scan_search(corpus, Keyword::parse(w)));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            col.expect(oracle, rel.related(x, y) == scanned[x].includes(scanned[y]),
                       "pair (" + rel.ground()[x] + "," + rel.ground()[y] + ") disagrees with corpus scan");
        }
    }

    auto& serial = col.begin("serial", true);
    col.expect(serial, rel.is_serial(), "relation is not serial");
    for (int m = 1; m <= max_m; ++m) {
        for (std::size_t x = 0; x < n; ++x) {
            col.expect(serial, !rel.m_after_indices(x, m, ChainMode::Reflexive).empty(),
                       rel.ground()[x] + " has no " + std::to_string(m) + "-step successor");
        }
    }

    auto& mpre = col.begin("m_step_preorder", true);
    for (int m = 1; m <= max_m; ++m) {
        std::vector<std::vector<char>> rm(n, std::vector<char>(n, 0));
        for (std::size_t x = 0; x < n; ++x) {
            for (auto y : rel.m_after_indices(x, m, ChainMode::Reflexive)) rm[x][y] = 1;
        }
        for (std::size_t x = 0; x < n; ++x) {
            col.expect(mpre, rm[x][x] != 0, "R^" + std::to_string(m) + " not reflexive at " + rel.ground()[x]);
            for (std::size_t y = 0; y < n; ++y) {
                if (!rm[x][y]) continue;
                for (std::size_t z = 0; z < n; ++z) {
                    if (rm[y][z] && !rm[x][z]) {
                        col.expect(mpre, false, "R^" + std::to_string(m) + " not transitive on " + rel.ground()[x] +
                                                    "," + rel.ground()[y] + "," + rel.ground()[z]);
                    }
                }
            }
        }
    }

    auto& collapse = col.begin("m_step_collapse", true);
    auto& after_chain = col.begin("m_step_after_chain", true);
    auto& fore_chain = col.begin("m_step_fore_chain", true);
    auto& witness = col.begin("m_step_strict_witness", true);
    for (const auto& x : rel.ground()) {
        const auto after = rel.after(x);
        const auto fore = rel.fore(x);
        for (int m = 1; m <= max_m; ++m) {
            col.expect(collapse, rel.m_after(x, m) == after && rel.m_fore(x, m) == fore,
                       "R^" + std::to_string(m) + " neighborhoods of " + x + " differ from R");
            for (auto mode : {ChainMode::Reflexive, ChainMode::Strict}) {
                const char* tag = mode == ChainMode::Strict ? " strict" : "";
                col.expect(after_chain, rel.preceq(rel.m_after(x, m, mode), rel.m_after(x, m + 1, mode)),
                           x + " m=" + std::to_string(m) + tag);
                col.expect(fore_chain, rel.succeq(rel.m_fore(x, m, mode), rel.m_fore(x, m + 1, mode)),
                           x + " m=" + std::to_string(m) + tag);
            }
            if (rel.spaces().empty()) continue;
            for (const auto& y : rel.m_after(x, m, ChainMode::Strict)) {
                auto r = rel.m_step(x, y, m, ChainMode::Strict);
                bool ok = r.holds && r.witness && r.witness->size() == static_cast<std::size_t>(m - 1);
                if (ok) {
                    WordList chain{x};
                    chain.insert(chain.end(), r.witness->begin(), r.witness->end());
                    chain.push_back(y);
                    for (std::size_t i = 0; i + 1 < chain.size() && ok; ++i) {
                        const auto& hi = rel.spaces()[rel.index_of(chain[i])];
                        const auto& lo = rel.spaces()[rel.index_of(chain[i + 1])];
                        ok = hi.includes(lo) && hi != lo;
                    }
                }
                col.expect(witness, ok, "bad strict witness " + x + " -> " + y + " m=" + std::to_string(m));
            }
        }
    }
}

void topology_checks(Collector& col, const ContainmentRelation& rel, const SuiteOptions& opt) {
    if (rel.size() > std::min(opt.topology_cap, kMaxGroundCap)) {
        auto& skipped = col.begin("topology_skipped", false);
        col.note(skipped, "ground of " + std::to_string(rel.size()) + " words exceeds cap " +
                              std::to_string(opt.topology_cap));
        skipped.passed = false;
        return;
    }
    const auto tb = tau_b(rel, opt.topology_cap);
    const auto tf = tau_f(rel, opt.topology_cap);

    auto& is_top = col.begin("topology_closure", true);
    col.expect(is_top, tb.is_topology(), "after-set family is not a topology");
    col.expect(is_top, tf.is_topology(), "fore-set family is not a topology");
    col.expect(is_top, tb.is_alexandrov() && tf.is_alexandrov(), "intersection of opens is not open");

    auto& identity = col.begin("open_union_identity", true);
    for (auto [top, side, tag] : {std::tuple{&tb, Side::After, "after"}, std::tuple{&tf, Side::Fore, "fore"}}) {
        auto r = check_open_union_identity(*top, rel, side);
        identity.cases += r.checked;
        for (const auto& v : r.violations) col.expect(identity, false, std::string(tag) + " open " + join(v));
    }

    auto& minimal = col.begin("minimal_open_neighborhood", true);
    for (auto [top, side, tag] : {std::tuple{&tb, Side::After, "after"}, std::tuple{&tf, Side::Fore, "fore"}}) {
        auto r = check_minimal_opens(*top, rel, side);
        minimal.cases += r.checked;
        for (const auto& w : r.mismatched_words) col.expect(minimal, false, std::string(tag) + " at " + w);
    }

    auto& dual = col.begin("duality", true);
    auto d = check_duality(tb, tf);
    col.expect(dual, d.fore_complements_are_after, "complements of fore opens differ from after opens");
    col.expect(dual, d.after_complements_are_fore, "complements of after opens differ from fore opens");

    auto s = check_open_structure(tb, tf, rel);
    auto& common = col.begin("common_open_structure", true);
    common.cases = s.common_opens;
    for (const auto& v : s.inclusion_violations) col.expect(common, false, "inclusion fails for " + join(v));
    for (const auto& v : s.equality_violations) col.expect(common, false, "equality fails for " + join(v));
    auto& one_sided = col.begin("one_sided_open_structure", false);
    one_sided.cases = s.one_sided_opens;
    for (const auto& v : s.equality_counterexamples) {
        one_sided.passed = false;
        col.note(one_sided, "counterexample " + join(v));
    }

    auto& nrefl = col.begin("m_step_topology", true);
    auto& nstrict = col.begin("m_step_topology_strict", false);
    for (int m = 1; m <= opt.max_m; ++m) {
        auto r = n_topologies(rel, m, ChainMode::Reflexive, opt.topology_cap);
        col.expect(nrefl, r.matches_tau, "m=" + std::to_string(m) + " topologies differ from the m=1 ones");
        col.expect(nrefl, r.fore.is_topology() && r.after.is_topology(), "m=" + std::to_string(m) + " not a topology");
        for (const auto& v : r.fore_union_violations) col.expect(nrefl, false, "fore open " + join(v));
        for (const auto& v : r.after_union_violations) col.expect(nrefl, false, "after open " + join(v));

        auto st = n_topologies(rel, m, ChainMode::Strict, opt.topology_cap);
        col.expect(nrefl, st.fore.is_topology() && st.after.is_topology(),
                   "strict m=" + std::to_string(m) + " not a topology");
        nstrict.cases += st.fore.size() + st.after.size();
        for (const auto& v : st.fore_union_violations) {
            nstrict.passed = false;
            col.note(nstrict, "m=" + std::to_string(m) + " fore open " + join(v));
        }
        for (const auto& v : st.after_union_violations) {
            nstrict.passed = false;
            col.note(nstrict, "m=" + std::to_string(m) + " after open " + join(v));
        }
    }
}

void family_checks(Collector& col, const Searcher& s, const WordList& ground, const SuiteOptions& opt) {
    FamilyAlgebra alg(s, WordSet(ground.begin(), ground.end()));
    auto& mono = col.begin("family_monotone", true);
    auto& uni = col.begin("family_union", true);
    auto& inter = col.begin("family_intersection", true);
    auto& comp = col.begin("family_complement", true);
    auto& morgan = col.begin("family_de_morgan", true);

    auto run = [&](const WordSet& a, const WordSet& b) {
        const bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
        if (a_in_b) col.expect(mono, s.family(b).includes(s.family(a)), join(a) + " in " + join(b));
        col.expect(uni, alg.unite(a, b).holds, join(a) + " u " + join(b));
        col.expect(inter, alg.intersect(a, b).holds, join(a) + " n " + join(b));
        col.expect(comp, alg.complement(a).holds, "complement of " + join(a));
        col.expect(morgan, alg.complement_of_union(a, b).holds, "(A u B)^c for " + join(a) + "," + join(b));
        col.expect(morgan, alg.complement_of_intersection(a, b).holds, "(A n B)^c for " + join(a) + "," + join(b));
    };

    if (ground.size() <= opt.exhaustive_family_limit) {
        const std::uint64_t count = std::uint64_t{1} << ground.size();
        for (std::uint64_t a = 0; a < count; ++a) {
            for (std::uint64_t b = 0; b < count; ++b) run(subset_of(ground, a), subset_of(ground, b));
        }
    } else {
        Rng rng(opt.seed ^ 0x5eedf00dULL);
        for (std::size_t i = 0; i < opt.random_pairs; ++i) {
            auto a = random_subset(ground, rng);
            auto b = random_subset(ground, rng);
            if (i % 4 == 0) b.insert(a.begin(), a.end());  // keep monotonicity cases flowing
            run(a, b);
        }
    }

    auto& ev = col.begin("eval_matches_scan", true);
    Rng rng(opt.seed ^ 0xe7a1ULL);
    for (std::size_t t = 0; t < 64; ++t) {
        std::vector<Query> leaves;
        WordList picked;
        const std::size_t k = 1 + rng.below(std::min<std::size_t>(4, ground.size()));
        for (std::size_t i = 0; i < k; ++i) {
            const auto& w = ground[rng.below(ground.size())];
            picked.push_back(w);
        }
        DocSet scan_and = DocSet::all(s.universe_size());
        DocSet scan_or;
        for (const auto& w : picked) {
            auto sw = scan_search(s.corpus(), Keyword::parse(w));
            scan_and = scan_and.intersect(sw);
            scan_or = scan_or.unite(sw);
            leaves.push_back(parse_query(w));
        }
        col.expect(ev, s.eval(Query::vee(leaves)) == scan_and, "vee of " + join(picked, ","));
        col.expect(ev, s.eval(Query::wedge(leaves)) == scan_or, "wedge of " + join(picked, ","));
    }
}

void neighborhood_checks(Collector& col, const Searcher& s, const WordList& ground) {
    WordSet reference;
    for (std::size_t i = 0; i < ground.size() && i < 3; ++i) reference.insert(ground[i]);

    std::vector<double> grid;
    for (int k = 1; k <= 99; ++k) grid.push_back(k / 100.0);
    auto& nested = col.begin("neighborhood_nested", true);
    for (auto pool : {CandidatePool::Union, CandidatePool::All}) {
        auto r = check_nested(s, reference, grid, pool);
        nested.cases += grid.size();
        for (std::size_t i = 1; i < r.sizes.size(); ++i) {
            col.expect(nested, r.sizes[i] <= r.sizes[i - 1], "size grows at delta " + std::to_string(grid[i]));
        }
        col.expect(nested, r.nested, "neighborhoods not nested");
    }

    auto& part = col.begin("anomaly_partition", true);
    ReferenceSpec spec;
    spec.keywords = reference;
    auto report = detect(s, spec);
    for (const auto& it : report.iterations) {
        col.expect(part, it.neighborhood.intersect(it.anomalies).empty(), "neighborhood meets anomalies");
        col.expect(part, it.neighborhood.unite(it.anomalies) == report.pool, "split does not cover the pool");
    }
}

void primal_checks(Collector& col, const Searcher& s, const WordList& ground) {
    const auto universe = s.corpus().universe();
    // plain: no token of the word occurs everywhere, so no closure member is universal
    WordList plain, universal;
    for (const auto& w : ground) {
        const auto k = Keyword::parse(w);
        if (s.search(k) == universe) universal.push_back(w);
        const bool clean = std::none_of(k.tokens().begin(), k.tokens().end(),
                                        [&](const std::string& t) { return s.search(t) == universe; });
        if (clean) plain.push_back(w);
    }

    auto& vee = col.begin("vee_is_intersection", true);
    auto& ax = col.begin("primal_axioms", true);
    auto& cross = col.begin("primal_universe_scan", true);
    auto& uni = col.begin("primal_union_axioms", true);
    auto& clos = col.begin("primal_union_closure", false);

    // seeds of 1..4 words from staggered offsets; pools above 10 tokens are skipped
    std::vector<WordSet> seeds;
    for (std::size_t size = 1; size <= 4 && !plain.empty(); ++size) {
        WordSet seed, pool;
        for (std::size_t j = 0; j < size && j < plain.size(); ++j) {
            const auto& w = plain[(size * (size - 1) / 2 + j) % plain.size()];
            seed.insert(w);
            const auto k = Keyword::parse(w);
            pool.insert(k.tokens().begin(), k.tokens().end());
        }
        if (pool.size() <= 10) seeds.push_back(std::move(seed));
    }

    std::vector<PrimalFamily> families;
    for (const auto& seed : seeds) {
        auto m = vee_closure(seed);
        for (const auto& k : m.members()) {
            DocSet meet = DocSet::all(s.universe_size());
            for (const auto& t : k.tokens()) meet = meet.intersect(scan_search(s.corpus(), Keyword::from_tokens({t})));
            col.expect(vee, s.search(k) == meet, k.label());
        }
        auto p = primal_of(s, m);
        auto r = check_axioms(s, p);
        col.expect(ax, r.all_hold(), "closure of " + join(seed));
        col.expect(cross, r.universe_cross_check, "closure of " + join(seed));
        families.push_back(std::move(p));
    }
    for (std::size_t i = 0; i + 1 < families.size(); ++i) {
        auto r = union_primal(s, families[i], families[i + 1]);
        col.expect(uni, r.axioms.all_hold(), "union of closures " + std::to_string(i) + "," + std::to_string(i + 1));
        col.expect(cross, r.axioms.universe_cross_check, "union " + std::to_string(i));
        ++clos.cases;
        if (!r.equals_closure_family) {
            clos.passed = false;
            WordSet sample;
            for (const auto& k : r.missing_from_union) {
                if (sample.size() == 3) break;
                sample.insert(k);
            }
            col.note(clos, std::to_string(r.missing_from_union.size()) + " keywords missing, e.g. " + join(sample));
        }
    }

    auto& neg = col.begin("primal_universal_word", false);
    for (const auto& w : universal) {
        auto r = check_axioms(s, primal_of(s, vee_closure({w})));
        ++neg.cases;
        col.expect(cross, r.universe_cross_check, "closure of universal " + w);
        if (!r.excludes_universe.holds) {
            neg.passed = false;
            col.note(neg, "universe attained by " + join(WordSet(r.excludes_universe.witnesses.begin(),
                                                                   r.excludes_universe.witnesses.end())));
        }
    }
}

void graph_checks(Collector& col, const Searcher& s, const ContainmentRelation& rel) {
    const auto g = build_ddg(rel);
    std::vector<DocSet> scanned;
    for (const auto& w : g.nodes()) scanned.push_back(scan_search(s.corpus(), Keyword::parse(w)));
    const std::size_t n = g.size();

    auto& sound = col.begin("ddg_edges_sound", true);
    for (auto [x, y] : g.edges()) col.expect(sound, scanned[x].includes(scanned[y]), g.nodes()[x] + "->" + g.nodes()[y]);
    for (auto x : g.self_loops()) col.expect(sound, true, g.nodes()[x]);
    col.expect(sound, g.edges().size() + g.self_loops().size() == rel.pairs().size(), "edge count differs from relation");

    auto& loops = col.begin("ddg_loop_directed", true);
    col.expect(loops, is_loop_directed(g) == (n > 0), "loop-directed flag");
    col.expect(loops, g.self_loops().size() == n, "missing self-loops");

    auto& atoms = col.begin("ddg_atoms", true);
    const auto report = find_atoms(g);
    for (std::size_t x = 0; x < n; ++x) {
        bool dominates = true;
        for (std::size_t y = 0; y < n && dominates; ++y) {
            dominates = y == x || (scanned[x].includes(scanned[y]) && scanned[x] != scanned[y]);
        }
        col.expect(atoms, report.atoms.count(g.nodes()[x]) == (dominates ? 1u : 0u), "atom status of " + g.nodes()[x]);
    }

    auto& cyc = col.begin("ddg_cycles", true);
    bool equal_pair = false;
    for (std::size_t x = 0; x < n && !equal_pair; ++x) {
        for (std::size_t y = x + 1; y < n && !equal_pair; ++y) equal_pair = scanned[x] == scanned[y];
    }
    const auto c = has_cycle(g);
    col.expect(cyc, c.found == equal_pair, "cycle detection disagrees with equal-space scan");
    if (c.found) {
        bool ok = c.witness.size() >= 3 && c.witness.front() == c.witness.back();
        for (std::size_t i = 0; ok && i + 1 < c.witness.size(); ++i) {
            ok = g.has_edge(g.index_of(c.witness[i]), g.index_of(c.witness[i + 1]));
        }
        col.expect(cyc, ok, "invalid cycle witness");
    }

    auto& dist = col.begin("ddg_distance_witness", true);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            auto d = distance(g, g.nodes()[x], g.nodes()[y]);
            const bool below = x == y || (scanned[x].includes(scanned[y]) && scanned[x] != scanned[y]);
            col.expect(dist, d.has_value() == below, "reachability " + g.nodes()[x] + "->" + g.nodes()[y]);
            if (!d) continue;
            bool ok = d->chain.size() == d->steps + 1;
            for (std::size_t i = 0; ok && i + 1 < d->chain.size(); ++i) {
                const auto& hi = scanned[g.index_of(d->chain[i])];
                const auto& lo = scanned[g.index_of(d->chain[i + 1])];
                ok = hi.includes(lo) && hi != lo;
            }
            col.expect(dist, ok, "witness " + g.nodes()[x] + "->" + g.nodes()[y]);
        }
    }

    auto& total = col.begin("ddg_totality", false);
    const auto inc = incomparable_pairs(g);
    total.cases = n * (n > 0 ? n - 1 : 0) / 2;
    for (const auto& [a, b] : inc) {
        total.passed = false;
        col.note(total, a + " vs " + b);
    }
}

}  // namespace

std::size_t SuiteReport::asserted_failures() const {
    return static_cast<std::size_t>(
        std::count_if(outcomes.begin(), outcomes.end(), [](const CheckOutcome& c) { return c.asserted && !c.passed; }));
}

std::size_t SuiteReport::flagged_diagnostics() const {
    return static_cast<std::size_t>(
        std::count_if(outcomes.begin(), outcomes.end(), [](const CheckOutcome& c) { return !c.asserted && !c.passed; }));
}

DocSet scan_search(const Corpus& corpus, const Keyword& keyword) {
    std::vector<DocIndex> hits;
    for (DocIndex i = 0; i < corpus.size(); ++i) {
        const auto& toks = corpus.document(i).tokens;
        bool all = true;
        for (const auto& t : keyword.tokens()) {
            if (std::find(toks.begin(), toks.end(), t) == toks.end()) {
                all = false;
                break;
            }
        }
        if (all) hits.push_back(i);
    }
    return DocSet::from_unsorted(std::move(hits));
}

SuiteReport run_suite(const Searcher& searcher, const WordSet& words, const SuiteOptions& options) {
    const auto rel = ContainmentRelation::build(searcher, words);
    SuiteReport report;
    report.words = rel.ground();
    report.documents = searcher.universe_size();
    Collector col(options.max_details);

    relation_checks(col, searcher, rel, options.max_m);
    topology_checks(col, rel, options);
    family_checks(col, searcher, rel.ground(), options);
    neighborhood_checks(col, searcher, rel.ground());
    primal_checks(col, searcher, rel.ground());
    graph_checks(col, searcher, rel);
    report.outcomes = col.take();
    return report;
}

WordSet default_working_words(const Searcher& searcher, std::size_t limit) {
    std::vector<std::pair<std::size_t, std::string>> ranked;
    for (const auto& [w, docs] : searcher.index().postings()) ranked.emplace_back(docs.size(), w);
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    WordSet out;
    for (std::size_t i = 0; i < ranked.size() && out.size() < limit; ++i) out.insert(ranked[i].second);
    return out;
}

}  // namespace searchtopo
