#include "searchtopo/primal.hpp"

#include <algorithm>
#include <bit>

namespace searchtopo {

namespace {

bool member_order(const Keyword& a, const Keyword& b) {
    if (a.tokens().size() != b.tokens().size()) return a.tokens().size() < b.tokens().size();
    return a.tokens() < b.tokens();
}

bool document_has_all(const Document& d, const WordList& tokens) {
    return std::all_of(tokens.begin(), tokens.end(),
                       [&](const std::string& t) { return std::binary_search(d.tokens.begin(), d.tokens.end(), t); });
}

}  // namespace

WordSet VeeClosedWordSet::labels() const {
    WordSet out;
    for (const auto& k : members_) out.insert(k.label());
    return out;
}

bool VeeClosedWordSet::contains(const Keyword& k) const {
    return std::binary_search(members_.begin(), members_.end(), Keyword::from_tokens(k.tokens()), member_order);
}

bool VeeClosedWordSet::is_closed() const {
    for (const auto& x : members_) {
        for (const auto& t : x.tokens()) {
            if (!contains(Keyword::from_tokens({t}))) return false;
        }
        for (const auto& y : members_) {
            if (!contains(x.vee(y))) return false;
        }
    }
    return true;
}

VeeClosedWordSet vee_closure(const WordSet& seed, std::uint64_t cap) {
    if (seed.empty()) throw Error("vee closure: seed is empty");
    WordSet pool;
    for (const auto& s : seed) {
        const auto k = Keyword::parse(s);
        pool.insert(k.tokens().begin(), k.tokens().end());
    }
    const std::size_t n = pool.size();
    // 2^n - 1, saturating
    const std::uint64_t size = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if (size > cap) {
        throw Error("vee closure of " + std::to_string(n) + " tokens has " +
                    (n >= 64 ? std::string("2^") + std::to_string(n) + " - 1" : std::to_string(size)) +
                    " keywords, above the cap of " + std::to_string(cap));
    }
    VeeClosedWordSet m;
    m.pool_.assign(pool.begin(), pool.end());
    m.members_.reserve(size);
    for (std::uint64_t bits = 1; bits <= size; ++bits) {
        WordList tokens;
        for (std::size_t i = 0; i < n; ++i) {
            if (bits & (std::uint64_t{1} << i)) tokens.push_back(m.pool_[i]);
        }
        m.members_.push_back(Keyword::from_tokens(std::move(tokens)));
    }
    std::sort(m.members_.begin(), m.members_.end(), member_order);
    return m;
}

VeeClosedWordSet vee_members(const std::vector<Keyword>& keywords) {
    VeeClosedWordSet m;
    WordSet pool;
    for (const auto& k : keywords) {
        auto sorted = Keyword::from_tokens(k.tokens());
        pool.insert(sorted.tokens().begin(), sorted.tokens().end());
        m.members_.push_back(std::move(sorted));
    }
    std::sort(m.members_.begin(), m.members_.end(), member_order);
    m.members_.erase(std::unique(m.members_.begin(), m.members_.end()), m.members_.end());
    m.pool_.assign(pool.begin(), pool.end());
    return m;
}

PrimalFamily primal_of(const Searcher& searcher, const VeeClosedWordSet& m) {
    PrimalFamily p;
    p.universe_size = searcher.universe_size();
    p.corpus_fingerprint = searcher.corpus().fingerprint();
    for (const auto& k : m.members()) {
        p.keywords.emplace(k.label(), k);
        p.members.entries.emplace(k.label(), searcher.search(k));
    }
    return p;
}

AxiomReport check_axioms(const Searcher& searcher, const PrimalFamily& family) {
    AxiomReport r;
    const auto universe = DocSet::all(family.universe_size);
    const auto values = family.members.value_set();

    WordSet universal_members;
    for (const auto& [label, space] : family.members.entries) {
        ++r.excludes_universe.checked;
        if (space == universe) {
            r.excludes_universe.holds = false;
            r.excludes_universe.witnesses.push_back(label);
            universal_members.insert(label);
        }
    }

    for (const auto& [lx, kx] : family.keywords) {
        const auto& sx = family.members.entries.at(lx);
        for (const auto& [ly, ky] : family.keywords) {
            const auto joined = kx.vee(ky);
            const auto lj = joined.label();
            auto it = family.members.entries.find(lj);
            if (it == family.members.entries.end()) continue;

            ++r.downward_closed.checked;
            if (!sx.includes(it->second)) {
                r.downward_closed.holds = false;
                r.downward_closed.witnesses.push_back(lx + " | " + ly + " -> " + lj);
            }

            ++r.prime.checked;
            const auto meet = sx.intersect(family.members.entries.at(ly));
            if (values.count(meet) && !family.members.contains_key(lx) && !family.members.contains_key(ly)) {
                r.prime.holds = false;
                r.prime.witnesses.push_back(lx + " , " + ly);
            }
        }
    }

    // Corpus scan, independent of the posting lists.
    const auto& corpus = searcher.corpus();
    for (const auto& [label, k] : family.keywords) {
        bool everywhere = corpus.size() > 0;
        for (const auto& d : corpus.documents()) {
            if (!document_has_all(d, k.tokens())) {
                everywhere = false;
                break;
            }
        }
        if (everywhere) r.universal_keywords.insert(label);
    }
    r.universe_cross_check = universal_members == r.universal_keywords;
    return r;
}

PrimalUnionReport union_primal(const Searcher& searcher, const PrimalFamily& pm, const PrimalFamily& pn,
                               std::uint64_t cap) {
    if (pm.corpus_fingerprint != pn.corpus_fingerprint || pm.universe_size != pn.universe_size ||
        pm.corpus_fingerprint != searcher.corpus().fingerprint()) {
        throw Error("primal union: families were built over different corpora");
    }
    PrimalUnionReport r;
    r.united = pm;
    for (const auto& [label, k] : pn.keywords) {
        r.united.keywords.emplace(label, k);
        r.united.members.entries.emplace(label, pn.members.entries.at(label));
    }
    r.axioms = check_axioms(searcher, r.united);

    WordSet pool;
    for (const auto& [label, k] : r.united.keywords) pool.insert(k.tokens().begin(), k.tokens().end());
    const auto closed = primal_of(searcher, vee_closure(pool, cap));
    r.equals_closure_family = closed.members == r.united.members;
    for (const auto& [label, space] : closed.members.entries) {
        if (!r.united.members.contains_key(label)) r.missing_from_union.insert(label);
    }
    return r;
}

}  // namespace searchtopo
