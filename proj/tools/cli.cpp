#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "searchtopo/anomaly.hpp"
#include "searchtopo/checks.hpp"
#include "searchtopo/fixtures.hpp"
#include "searchtopo/graph.hpp"
#include "searchtopo/primal.hpp"
#include "searchtopo/random_corpus.hpp"
#include "searchtopo/relation.hpp"
#include "searchtopo/topology.hpp"

namespace searchtopo::cli {

namespace {

using json = nlohmann::json;

struct Config {
    std::string corpus_path;
    std::string format = "json";
    std::uint64_t seed = 0;

    std::string query;
    bool postings = false;

    std::string words;
    bool strict = false;
    int m = 1;
    std::string side = "both";
    bool reports = false;

    std::string dot_path;
    bool atoms = false;
    std::vector<std::string> distance;
    bool check_total = false;
    bool covering = false;

    std::string keywords;
    double delta = 0.4;
    int max_iter = 10;
    double epsilon = 1e-12;
    std::string pool = "union";

    std::string seed_words;
    std::uint64_t closure_cap = kDefaultClosureCap;
    std::string union_words;

    bool random = false;
    std::size_t docs = 40;
    std::size_t trials = 100;
    int max_m = 4;
};

WordSet split_list(const std::string& text) {
    WordSet out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        auto item = text.substr(start, end - start);
        const auto first = item.find_first_not_of(" \t");
        if (first != std::string::npos) out.insert(item.substr(first, item.find_last_not_of(" \t") - first + 1));
        start = end + 1;
    }
    return out;
}

std::string hex64(std::uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::size_t topology_cap() {
    const char* env = std::getenv("SEARCHTOPO_CAP");
    if (!env || !*env) return kDefaultGroundCap;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v < 1 || v > kMaxGroundCap) {
        throw Error("SEARCHTOPO_CAP must be an integer between 1 and " + std::to_string(kMaxGroundCap) + ", got '" +
                    env + "'");
    }
    return v;
}

json corpus_json(const Config& cfg, const Corpus& c) {
    return {{"path", cfg.corpus_path}, {"documents", c.size()}, {"fingerprint", hex64(c.fingerprint())}};
}

json ids(const Corpus& c, const DocSet& d) { return c.ids_of(d); }

json opens_json(const FiniteTopology& t) { return {{"opens", t.open_sets()}, {"count", t.size()}}; }

json sets_json(const std::vector<WordSet>& sets) {
    json out = json::array();
    for (const auto& s : sets) out.push_back(s);
    return out;
}

json axiom_json(const AxiomStatus& a) {
    return {{"holds", a.holds}, {"checked", a.checked}, {"witnesses", a.witnesses}};
}

json axioms_json(const AxiomReport& r) {
    return {{"excludes_universe", axiom_json(r.excludes_universe)},
            {"downward_closed", axiom_json(r.downward_closed)},
            {"prime", axiom_json(r.prime)},
            {"universal_keywords", r.universal_keywords},
            {"universe_cross_check", r.universe_cross_check},
            {"all_hold", r.all_hold()}};
}

json suite_json(const SuiteReport& r) {
    json checks = json::array();
    for (const auto& c : r.outcomes) {
        checks.push_back({{"name", c.name},
                          {"asserted", c.asserted},
                          {"passed", c.passed},
                          {"cases", c.cases},
                          {"details", c.details}});
    }
    return {{"words", r.words},
            {"documents", r.documents},
            {"asserted_failures", r.asserted_failures()},
            {"flagged_diagnostics", r.flagged_diagnostics()},
            {"checks", checks}};
}

void report_outcomes(const SuiteReport& r, const std::string& where, std::ostream& err) {
    for (const auto& c : r.outcomes) {
        if (c.passed) continue;
        const char* tag = c.asserted ? "FAILED" : "diagnostic";
        if (c.details.empty()) err << tag << where << ": " << c.name << "\n";
        for (const auto& d : c.details) err << tag << where << ": " << c.name << ": " << d << "\n";
    }
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
        return;
    }
    if (j.is_array()) {
        const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
        if (flat) {
            out << prefix << ":";
            for (const auto& e : j) out << " " << (e.is_string() ? e.get<std::string>() : e.dump());
            out << "\n";
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
        return;
    }
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

void emit(const json& report, const Config& cfg, std::ostream& out) {
    if (cfg.format == "text") {
        flatten(report, "", out);
    } else {
        out << report.dump(2) << "\n";
    }
}

json header(const std::string& command, const Config& cfg) {
    return {{"command", command}, {"seed", cfg.seed}};
}

Searcher open_corpus(const Config& cfg) {
    if (cfg.corpus_path.empty()) throw Error("--corpus is required for this command");
    return Searcher(load_corpus(cfg.corpus_path));
}

WordSet working_words(const Config& cfg, const Searcher& s) {
    if (!cfg.words.empty()) {
        auto w = split_list(cfg.words);
        if (w.empty()) throw Error("--words is empty");
        return w;
    }
    const auto& v = s.corpus().vocabulary();
    return WordSet(v.begin(), v.end());
}

ChainMode mode_of(const Config& cfg) { return cfg.strict ? ChainMode::Strict : ChainMode::Reflexive; }

int cmd_ingest(const Config& cfg, std::ostream& out) {
    const auto s = open_corpus(cfg);
    const auto& c = s.corpus();
    json r = header("ingest", cfg);
    r["corpus"] = corpus_json(cfg, c);
    r["vocabulary_size"] = c.vocabulary().size();
    json empty = json::array();
    for (const auto& d : c.documents()) {
        if (d.tokens.empty()) empty.push_back(d.id);
    }
    r["empty_documents"] = empty;
    if (cfg.postings) {
        json p = json::object();
        for (const auto& [w, docs] : s.index().postings()) p[w] = ids(c, docs);
        r["postings"] = p;
    }
    emit(r, cfg, out);
    return kExitOk;
}

void collect_leaves(const Query& q, WordSet& out) {
    if (q.kind == Query::Kind::Leaf) out.insert(q.word);
    for (const auto& c : q.children) collect_leaves(c, out);
}

int cmd_search(const Config& cfg, std::ostream& out, std::ostream& err) {
    const auto s = open_corpus(cfg);
    const auto q = parse_query(cfg.query);
    const auto docs = s.eval(q);
    WordSet leaves, absent;
    collect_leaves(q, leaves);
    for (const auto& w : leaves) {
        if (!s.index().contains(w)) {
            absent.insert(w);
            err << "note: '" << w << "' does not occur in the corpus\n";
        }
    }
    json r = header("search", cfg);
    r["corpus"] = corpus_json(cfg, s.corpus());
    r["query"] = q.to_string();
    r["docs"] = ids(s.corpus(), docs);
    r["count"] = docs.size();
    r["absent_words"] = absent;
    emit(r, cfg, out);
    return kExitOk;
}

int cmd_relate(const Config& cfg, std::ostream& out) {
    const auto s = open_corpus(cfg);
    const auto rel = ContainmentRelation::build(s, working_words(cfg, s));
    json r = header("relate", cfg);
    r["corpus"] = corpus_json(cfg, s.corpus());
    r["ground"] = rel.ground();
    json pairs = json::array();
    for (const auto& [x, y] : rel.pairs()) pairs.push_back({x, y});
    r["pairs"] = pairs;
    json after = json::object(), fore = json::object();
    for (const auto& x : rel.ground()) {
        after[x] = rel.after(x);
        fore[x] = rel.fore(x);
    }
    r["after"] = after;
    r["fore"] = fore;
    r["properties"] = {{"reflexive", rel.is_reflexive()}, {"transitive", rel.is_transitive()}, {"serial", rel.is_serial()}};
    r["equivalence_classes"] = sets_json(rel.equivalence_classes());

    json links = json::array();
    for (const auto& x : rel.ground()) {
        for (const auto& y : rel.ground()) {
            auto link = rel.m_step(x, y, cfg.m, mode_of(cfg));
            if (link.holds) links.push_back({{"from", x}, {"to", y}, {"witness", *link.witness}});
        }
    }
    r["m_step"] = {{"m", cfg.m}, {"mode", cfg.strict ? "strict" : "reflexive"}, {"links", links}};
    emit(r, cfg, out);
    return kExitOk;
}

int cmd_topology(const Config& cfg, std::ostream& out, std::ostream& err) {
    const auto s = open_corpus(cfg);
    const auto cap = topology_cap();
    const auto rel = ContainmentRelation::build(s, working_words(cfg, s));
    const bool plain = cfg.m == 1 && !cfg.strict;
    if (cfg.side != "both" && cfg.side != "B" && cfg.side != "F") throw Error("--side must be B, F or both");

    json r = header("topology", cfg);
    r["corpus"] = corpus_json(cfg, s.corpus());
    r["ground"] = rel.ground();
    r["cap"] = cap;
    r["m"] = cfg.m;
    r["mode"] = cfg.strict ? "strict" : "reflexive";

    const auto tb = tau_b(rel, cap);
    const auto tf = tau_f(rel, cap);
    std::optional<MStepTopologies> nt;
    if (!plain) nt = n_topologies(rel, cfg.m, mode_of(cfg), cap);
    const auto& after = nt ? nt->after : tb;
    const auto& fore = nt ? nt->fore : tf;
    if (cfg.side != "F") r["after"] = opens_json(after);
    if (cfg.side != "B") r["fore"] = opens_json(fore);

    if (cfg.reports) {
        json rep;
        if (plain) {
            const auto lb = check_open_union_identity(tb, rel, Side::After);
            const auto lf = check_open_union_identity(tf, rel, Side::Fore);
            rep["union_identity"] = {{"after", {{"checked", lb.checked}, {"violations", sets_json(lb.violations)}}},
                                     {"fore", {{"checked", lf.checked}, {"violations", sets_json(lf.violations)}}}};
            const auto mb = check_minimal_opens(tb, rel, Side::After);
            const auto mf = check_minimal_opens(tf, rel, Side::Fore);
            rep["minimal_opens"] = {{"after", {{"checked", mb.checked}, {"mismatched", mb.mismatched_words}}},
                                    {"fore", {{"checked", mf.checked}, {"mismatched", mf.mismatched_words}}}};
        } else {
            rep["union_identity"] = {{"after", {{"violations", sets_json(nt->after_union_violations)}}},
                                     {"fore", {{"violations", sets_json(nt->fore_union_violations)}}}};
            rep["matches_one_step"] = nt->matches_tau;
            for (const auto& v : nt->after_union_violations) {
                err << "diagnostic: " << cfg.m << "-step after open is not a union of neighborhoods: "
                    << json(v).dump() << "\n";
            }
            for (const auto& v : nt->fore_union_violations) {
                err << "diagnostic: " << cfg.m << "-step fore open is not a union of neighborhoods: "
                    << json(v).dump() << "\n";
            }
        }
        const auto d = check_duality(tb, tf);
        rep["duality"] = {{"fore_complements_are_after", d.fore_complements_are_after},
                          {"after_complements_are_fore", d.after_complements_are_fore}};
        const auto o = check_open_structure(tb, tf, rel);
        rep["open_structure"] = {{"common_opens", o.common_opens},
                                 {"inclusion_violations", sets_json(o.inclusion_violations)},
                                 {"equality_violations", sets_json(o.equality_violations)},
                                 {"one_sided_opens", o.one_sided_opens},
                                 {"one_sided_counterexamples", sets_json(o.equality_counterexamples)}};
        for (const auto& v : o.equality_counterexamples) {
            err << "diagnostic: open in one topology only is not the union of its after- and fore-sets: "
                << json(v).dump() << "\n";
        }
        r["reports"] = rep;
    }
    emit(r, cfg, out);
    return kExitOk;
}

int cmd_graph(const Config& cfg, std::ostream& out, std::ostream& err) {
    const auto s = open_corpus(cfg);
    const auto rel = ContainmentRelation::build(s, working_words(cfg, s));
    const auto g = build_ddg(rel);
    DotOptions dot_opts;
    dot_opts.covering_only = cfg.covering;
    const auto dot = export_dot(g, dot_opts);
    if (!cfg.dot_path.empty()) {
        std::ofstream f(cfg.dot_path, std::ios::binary);
        if (!f) throw Error("cannot write " + cfg.dot_path);
        f << dot;
    }
    if (cfg.format == "dot") {
        out << dot;
        return kExitOk;
    }

    auto pairs_json = [](const std::vector<std::pair<std::string, std::string>>& ps) {
        json a = json::array();
        for (const auto& [x, y] : ps) a.push_back({x, y});
        return a;
    };
    json r = header("graph", cfg);
    r["corpus"] = corpus_json(cfg, s.corpus());
    r["nodes"] = g.nodes();
    r["edges"] = pairs_json(g.edge_names());
    r["covering_edges"] = pairs_json(g.covering_edge_names());
    json loops = json::array();
    for (auto x : g.self_loops()) loops.push_back(g.nodes()[x]);
    r["self_loops"] = loops;
    r["loop_directed"] = is_loop_directed(g);
    const auto c = has_cycle(g);
    r["cycle"] = {{"found", c.found}, {"witness", c.witness}};
    if (cfg.atoms) {
        const auto a = find_atoms(g);
        r["atoms"] = {{"atoms", a.atoms}, {"reach_counts", a.reach_counts}};
    }
    if (!cfg.distance.empty()) {
        const auto z = Keyword::parse(cfg.distance[0]).label();
        const auto y = Keyword::parse(cfg.distance[1]).label();
        const auto d = distance(g, z, y);
        r["distance"] = {{"from", z}, {"to", y}, {"steps", d ? json(d->steps) : json(nullptr)},
                         {"chain", d ? json(d->chain) : json::array()}};
    }
    if (cfg.check_total) {
        const auto inc = incomparable_pairs(g);
        r["totality"] = {{"total", inc.empty()}, {"incomparable", pairs_json(inc)}};
        for (const auto& [x, y] : inc) err << "diagnostic: incomparable nodes: " << x << ", " << y << "\n";
    }
    if (!cfg.dot_path.empty()) r["dot_file"] = cfg.dot_path;
    emit(r, cfg, out);
    return kExitOk;
}

int cmd_anomaly(const Config& cfg, std::ostream& out) {
    const auto s = open_corpus(cfg);
    ReferenceSpec spec;
    spec.keywords = split_list(cfg.keywords);
    spec.delta0 = cfg.delta;
    spec.max_iterations = cfg.max_iter;
    spec.epsilon = cfg.epsilon;
    if (cfg.pool == "union") {
        spec.pool = CandidatePool::Union;
    } else if (cfg.pool == "all") {
        spec.pool = CandidatePool::All;
    } else {
        throw Error("--pool must be union or all");
    }
    const auto rep = detect(s, spec);
    const auto& c = s.corpus();

    json r = header("anomaly", cfg);
    r["corpus"] = corpus_json(cfg, c);
    r["reference"] = rep.reference;
    r["delta0"] = spec.delta0;
    r["max_iterations"] = spec.max_iterations;
    r["epsilon"] = spec.epsilon;
    r["pool_mode"] = cfg.pool;
    r["pool"] = ids(c, rep.pool);
    json scores = json::array();
    for (const auto& sd : rep.scores) scores.push_back({{"doc", c.doc_id(sd.doc)}, {"similarity", sd.similarity}});
    r["scores"] = scores;
    json rounds = json::array();
    for (std::size_t i = 0; i < rep.iterations.size(); ++i) {
        const auto& it = rep.iterations[i];
        rounds.push_back({{"round", i},
                          {"delta", it.delta},
                          {"neighborhood", ids(c, it.neighborhood)},
                          {"anomalies", ids(c, it.anomalies)},
                          {"anomaly_mean", it.anomaly_mean}});
    }
    r["iterations"] = rounds;
    r["final_delta"] = rep.final_delta;
    r["ultimate_anomalies"] = ids(c, rep.ultimate_anomalies);
    r["termination"] = to_string(rep.termination);
    emit(r, cfg, out);
    return kExitOk;
}

json primal_json(const Corpus& c, const PrimalFamily& p) {
    json members = json::object();
    for (const auto& [label, space] : p.members.entries) members[label] = ids(c, space);
    return members;
}

int cmd_primal(const Config& cfg, std::ostream& out, std::ostream& err) {
    const auto s = open_corpus(cfg);
    const auto& c = s.corpus();
    const auto m = vee_closure(split_list(cfg.seed_words), cfg.closure_cap);
    const auto p = primal_of(s, m);
    const auto ax = check_axioms(s, p);

    json r = header("primal", cfg);
    r["corpus"] = corpus_json(cfg, c);
    r["pool"] = m.pool();
    r["members"] = primal_json(c, p);
    r["axioms"] = axioms_json(ax);
    for (const auto& w : ax.excludes_universe.witnesses) {
        err << "diagnostic: '" << w << "' occurs in every document, so the universe is a member\n";
    }
    if (!cfg.union_words.empty()) {
        const auto n = vee_closure(split_list(cfg.union_words), cfg.closure_cap);
        const auto u = union_primal(s, p, primal_of(s, n), cfg.closure_cap);
        r["union"] = {{"other_pool", n.pool()},
                      {"keys", u.united.members.keys()},
                      {"axioms", axioms_json(u.axioms)},
                      {"equals_closure_family", u.equals_closure_family},
                      {"missing_from_union", u.missing_from_union}};
        if (!u.equals_closure_family) {
            err << "diagnostic: union of the two families differs from the family of the joint closure; missing "
                << json(u.missing_from_union).dump() << "\n";
        }
    }
    emit(r, cfg, out);
    return kExitOk;
}

SuiteOptions suite_options(const Config& cfg, std::uint64_t seed) {
    SuiteOptions o;
    o.max_m = cfg.max_m;
    o.seed = seed;
    o.topology_cap = topology_cap();
    return o;
}

int cmd_check(const Config& cfg, std::ostream& out, std::ostream& err) {
    json r = header("check", cfg);
    std::size_t failures = 0;
    std::size_t diagnostics = 0;
    json reports = json::array();

    if (!cfg.random) {
        const auto s = open_corpus(cfg);
        const auto words = cfg.words.empty() ? default_working_words(s, 10) : split_list(cfg.words);
        const auto rep = run_suite(s, words, suite_options(cfg, cfg.seed));
        r["corpus"] = corpus_json(cfg, s.corpus());
        reports.push_back(suite_json(rep));
        report_outcomes(rep, "", err);
        failures = rep.asserted_failures();
        diagnostics = rep.flagged_diagnostics();
    } else {
        std::size_t n_words = 8;
        if (!cfg.words.empty()) {
            try {
                n_words = std::stoul(cfg.words);
            } catch (const std::exception&) {
                throw Error("--words must be a count with --random");
            }
        }
        if (n_words < 1 || n_words > kMaxGroundCap) {
            throw Error("--words must be between 1 and " + std::to_string(kMaxGroundCap));
        }
        const auto options = suite_options(cfg, 0);
        std::vector<SuiteReport> results(cfg.trials);
        std::vector<std::exception_ptr> errors(cfg.trials);
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t t; (t = next++) < cfg.trials;) {
                try {
                    RandomCorpusOptions rc;
                    rc.words = n_words;
                    rc.docs = cfg.docs;
                    rc.seed = cfg.seed + t;
                    Searcher s(random_corpus(rc));
                    const auto& v = s.corpus().vocabulary();
                    auto o = options;
                    o.seed = rc.seed;
                    results[t] = run_suite(s, WordSet(v.begin(), v.end()), o);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            }
        };
        const unsigned n_threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();

        for (std::size_t t = 0; t < cfg.trials; ++t) {
            if (errors[t]) std::rethrow_exception(errors[t]);
            auto j = suite_json(results[t]);
            j["trial"] = t;
            j["seed"] = cfg.seed + t;
            reports.push_back(std::move(j));
            report_outcomes(results[t], " [trial " + std::to_string(t) + "]", err);
            failures += results[t].asserted_failures();
            diagnostics += results[t].flagged_diagnostics();
        }
        r["random"] = {{"words", n_words}, {"docs", cfg.docs}, {"trials", cfg.trials}};
    }
    r["reports"] = reports;
    r["summary"] = {{"asserted_failures", failures}, {"flagged_diagnostics", diagnostics}};
    emit(r, cfg, out);
    return failures == 0 ? kExitOk : kExitInvariant;
}

int cmd_selftest(const Config& cfg, std::ostream& out, std::ostream& err) {
    json r = header("selftest", cfg);
    json results = json::array();
    bool ok = true;
    auto record = [&](const std::string& name, bool passed) {
        results.push_back({{"name", name}, {"passed", passed}});
        if (!passed) {
            ok = false;
            err << "FAILED: " << name << "\n";
        }
    };

    struct Fixture {
        const char* name;
        Corpus corpus;
        WordSet words;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({"chain3", fixtures::chain3(), {"a", "b", "c"}});
    {
        auto c = fixtures::sample5();
        WordSet w(c.vocabulary().begin(), c.vocabulary().end());
        fixtures.push_back({"sample5", std::move(c), std::move(w)});
    }
    fixtures.push_back({"big_phrases", fixtures::big_phrases(), fixtures::big_phrase_words()});
    for (auto& f : fixtures) {
        Searcher s(std::move(f.corpus));
        const auto rep = run_suite(s, f.words, suite_options(cfg, cfg.seed));
        report_outcomes(rep, std::string(" [") + f.name + "]", err);
        record(std::string("suite ") + f.name, rep.asserted_failures() == 0);
    }

    {
        Searcher s(fixtures::sample5());
        ReferenceSpec spec;
        spec.keywords = {"data", "science", "machine", "learning"};
        const auto rep = detect(s, spec);
        const bool trace = rep.termination == Termination::Converged && rep.iterations.size() == 4 &&
                           rep.ultimate_anomalies == DocSet::from_unsorted({1}) &&
                           std::abs(rep.final_delta - 1.0 / 7.0) < 1e-9;
        record("anomaly trace on sample5", trace);
    }
    {
        Searcher s(fixtures::big_phrases());
        const auto g = build_ddg(ContainmentRelation::build(s, fixtures::big_phrase_words()));
        const auto a = find_atoms(g);
        const auto d = distance(g, "big", "big data analytics");
        record("phrase graph atoms", a.atoms == WordSet{"big"});
        record("phrase graph covering edges", g.covering_edges().size() == 6);
        record("phrase graph distance", d && d->steps == 2);
        record("phrase graph loop-directed", is_loop_directed(g));
    }
    r["results"] = results;
    r["passed"] = ok;
    emit(r, cfg, out);
    return ok ? kExitOk : kExitInvariant;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Search-space topology toolkit over a JSONL corpus", args.empty() ? "searchtopo" : args[0]};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--corpus", cfg.corpus_path, "JSONL corpus file");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));

    auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", cfg.seed, "Seed recorded in the report"); };
    auto add_words = [&](CLI::App* sub) {
        sub->add_option("--words", cfg.words, "Comma-separated keywords (default: whole vocabulary)");
    };

    auto* ingest = app.add_subcommand("ingest", "Load a corpus and summarize it");
    ingest->add_flag("--postings", cfg.postings, "Include every posting list");
    add_seed(ingest);

    auto* search = app.add_subcommand("search", "Evaluate a query ('|' intersects, '&' unites)");
    search->add_option("query,--query", cfg.query, "Query text")->required();
    add_seed(search);

    auto* relate = app.add_subcommand("relate", "Containment preorder, neighborhoods and m-step links");
    add_words(relate);
    relate->add_flag("--strict", cfg.strict, "Strict m-step chains");
    relate->add_option("--m", cfg.m, "Chain length")->check(CLI::PositiveNumber);
    add_seed(relate);

    auto* topology = app.add_subcommand("topology", "Topologies generated by after-sets (B) and fore-sets (F)");
    add_words(topology);
    topology->add_option("--side", cfg.side, "B, F or both");
    topology->add_option("--m", cfg.m, "Neighborhood chain length")->check(CLI::PositiveNumber);
    topology->add_flag("--strict", cfg.strict, "Strict m-step neighborhoods");
    topology->add_flag("--reports", cfg.reports, "Include union, minimal-open, duality and open-structure checks");
    add_seed(topology);

    auto* graph = app.add_subcommand("graph", "Data directed graph over the keywords");
    add_words(graph);
    graph->add_option("--dot", cfg.dot_path, "Also write DOT to this file");
    graph->add_flag("--atoms", cfg.atoms, "Report atoms");
    graph->add_option("--distance", cfg.distance, "Shortest strict chain z -> y")->expected(2);
    graph->add_flag("--check-total", cfg.check_total, "Report incomparable pairs");
    graph->add_flag("--covering", cfg.covering, "DOT shows covering edges only");
    add_seed(graph);

    auto* anomaly = app.add_subcommand("anomaly", "Iterative Jaccard threshold anomaly detection");
    anomaly->add_option("--keywords", cfg.keywords, "Comma-separated reference keywords")->required();
    anomaly->add_option("--delta", cfg.delta, "Initial threshold in (0, 1)");
    anomaly->add_option("--max-iter", cfg.max_iter, "Refinement limit");
    anomaly->add_option("--epsilon", cfg.epsilon, "Convergence tolerance on delta");
    anomaly->add_option("--pool", cfg.pool, "union or all");
    add_seed(anomaly);

    auto* primal = app.add_subcommand("primal", "Family of a vee-closed keyword set and its axioms");
    primal->add_option("--seed", cfg.seed_words, "Comma-separated seed words")->required();
    primal->add_option("--cap", cfg.closure_cap, "Largest closure allowed");
    primal->add_option("--union", cfg.union_words, "Second seed; report the union of both families");

    auto* check = app.add_subcommand("check", "Run the property suite on a corpus or on random corpora");
    check->add_flag("--random", cfg.random, "Generate random corpora");
    check->add_option("--words", cfg.words, "Keyword list, or word count with --random");
    check->add_option("--docs", cfg.docs, "Documents per random corpus")->check(CLI::PositiveNumber);
    check->add_option("--trials", cfg.trials, "Random corpora to generate");
    check->add_option("--max-m", cfg.max_m, "Longest m-step chain checked")->check(CLI::PositiveNumber);
    add_seed(check);

    auto* selftest = app.add_subcommand("selftest", "Run the suite on built-in fixtures");
    add_seed(selftest);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cfg.format == "dot" && !graph->parsed()) throw Error("--format dot is only available for graph");
        if (ingest->parsed()) return cmd_ingest(cfg, out);
        if (search->parsed()) return cmd_search(cfg, out, err);
        if (relate->parsed()) return cmd_relate(cfg, out);
        if (topology->parsed()) return cmd_topology(cfg, out, err);
        if (graph->parsed()) return cmd_graph(cfg, out, err);
        if (anomaly->parsed()) return cmd_anomaly(cfg, out);
        if (primal->parsed()) return cmd_primal(cfg, out, err);
        if (check->parsed()) return cmd_check(cfg, out, err);
        if (selftest->parsed()) return cmd_selftest(cfg, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace searchtopo::cli
