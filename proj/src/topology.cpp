#include "searchtopo/topology.hpp"

#include <algorithm>
#include <bit>

namespace searchtopo {

namespace {

Mask bit(std::size_t i) { return Mask{1} << i; }

Mask mask_from_indices(const std::vector<std::size_t>& idx) {
    Mask m = 0;
    for (auto i : idx) m |= bit(i);
    return m;
}

std::vector<WordSet> subbase_from(const ContainmentRelation& rel, Side side) {
    std::vector<WordSet> out;
    for (std::size_t x = 0; x < rel.size(); ++x) {
        auto idx = side == Side::After ? rel.after_indices(x) : rel.fore_indices(x);
        WordSet s;
        for (auto i : idx) s.insert(rel.ground()[i]);
        out.push_back(std::move(s));
    }
    return out;
}

WordSet ground_set(const ContainmentRelation& rel) {
    return WordSet(rel.ground().begin(), rel.ground().end());
}

// ∪_{x∈D} f(x), with f given as one mask per ground index.
Mask union_over(Mask d, const std::vector<Mask>& per_point) {
    Mask out = 0;
    for (std::size_t i = 0; i < per_point.size(); ++i) {
        if (d & bit(i)) out |= per_point[i];
    }
    return out;
}

std::vector<Mask> neighborhood_masks(const ContainmentRelation& rel, Side side) {
    std::vector<Mask> out;
    for (std::size_t x = 0; x < rel.size(); ++x) {
        out.push_back(mask_from_indices(side == Side::After ? rel.after_indices(x) : rel.fore_indices(x)));
    }
    return out;
}

void require_same_ground(const FiniteTopology& a, const FiniteTopology& b) {
    if (a.ground() != b.ground()) throw Error("topologies are over different ground sets");
}

}  // namespace

bool canonical_less(Mask a, Mask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    const Mask diff = a ^ b;
    if (diff == 0) return false;
    const Mask low = diff & (~diff + 1);
    return (a & low) != 0;
}

bool FiniteTopology::is_open(Mask m) const {
    return std::binary_search(opens_.begin(), opens_.end(), m, canonical_less);
}

std::size_t FiniteTopology::index_of(std::string_view word) const {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), word);
    if (it == ground_.end() || *it != word) throw Error("word '" + std::string(word) + "' is not in the ground set");
    return static_cast<std::size_t>(it - ground_.begin());
}

Mask FiniteTopology::mask_of(const WordSet& words) const {
    Mask m = 0;
    for (const auto& w : words) m |= bit(index_of(w));
    return m;
}

WordSet FiniteTopology::words_of(Mask m) const {
    WordSet out;
    for (std::size_t i = 0; i < ground_.size(); ++i) {
        if (m & bit(i)) out.insert(ground_[i]);
    }
    return out;
}

std::vector<WordList> FiniteTopology::open_sets() const {
    std::vector<WordList> out;
    out.reserve(opens_.size());
    for (Mask m : opens_) {
        auto ws = words_of(m);
        out.emplace_back(ws.begin(), ws.end());
    }
    return out;
}

Mask FiniteTopology::minimal_open(std::size_t x) const {
    Mask acc = full();
    for (Mask m : opens_) {
        if (m & bit(x)) acc &= m;
    }
    return acc;
}

WordSet FiniteTopology::minimal_open_neighborhood(std::string_view word) const {
    return words_of(minimal_open(index_of(word)));
}

bool FiniteTopology::is_topology() const {
    if (!is_open(0) || !is_open(full())) return false;
    for (Mask a : opens_) {
        for (Mask b : opens_) {
            if (!is_open(a | b) || !is_open(a & b)) return false;
        }
    }
    return true;
}

bool FiniteTopology::is_alexandrov() const {
    for (std::size_t x = 0; x < ground_.size(); ++x) {
        if (!is_open(minimal_open(x))) return false;
    }
    return true;
}

FiniteTopology generate_from_subbase(const WordSet& ground, const std::vector<WordSet>& subbase, std::size_t cap) {
    cap = std::min(cap, kMaxGroundCap);
    if (ground.size() > cap) {
        throw Error("topology ground set has " + std::to_string(ground.size()) + " words; the cap is " +
                    std::to_string(cap));
    }
    FiniteTopology top;
    top.ground_.assign(ground.begin(), ground.end());
    const std::size_t n = top.ground_.size();

    std::vector<Mask> members;
    members.reserve(subbase.size());
    for (const auto& s : subbase) {
        for (const auto& w : s) {
            if (!ground.count(w)) throw Error("subbase member mentions '" + w + "', which is outside the ground set");
        }
        members.push_back(top.mask_of(s));
    }

    // Smallest basic open around each point: the intersection of every subbase
    // member containing it (the empty intersection is the ground set). Every finite
    // intersection of members is the union of these, so they generate the same opens.
    std::vector<Mask> point_base(n, top.full());
    for (std::size_t x = 0; x < n; ++x) {
        for (Mask s : members) {
            if (s & bit(x)) point_base[x] &= s;
        }
    }
    std::sort(point_base.begin(), point_base.end());
    point_base.erase(std::unique(point_base.begin(), point_base.end()), point_base.end());

    std::vector<char> seen(std::size_t{1} << n, 0);
    std::vector<Mask> found{0};
    seen[0] = 1;
    if (n > 0) {
        for (std::size_t i = 0; i < found.size(); ++i) {
            for (Mask b : point_base) {
                Mask u = found[i] | b;
                if (!seen[u]) {
                    seen[u] = 1;
                    found.push_back(u);
                }
            }
        }
    }
    std::sort(found.begin(), found.end(), canonical_less);
    top.opens_ = std::move(found);
    return top;
}

FiniteTopology tau_b(const ContainmentRelation& rel, std::size_t cap) {
    return generate_from_subbase(ground_set(rel), subbase_from(rel, Side::After), cap);
}

FiniteTopology tau_f(const ContainmentRelation& rel, std::size_t cap) {
    return generate_from_subbase(ground_set(rel), subbase_from(rel, Side::Fore), cap);
}

UnionIdentityReport check_open_union_identity(const FiniteTopology& top, const ContainmentRelation& rel, Side side) {
    if (top.ground() != rel.ground()) throw Error("topology and relation have different ground sets");
    const auto hoods = neighborhood_masks(rel, side);
    UnionIdentityReport r;
    for (Mask d : top.opens()) {
        ++r.checked;
        if (union_over(d, hoods) != d) r.violations.push_back(top.words_of(d));
    }
    return r;
}

MinimalOpenReport check_minimal_opens(const FiniteTopology& top, const ContainmentRelation& rel, Side side) {
    if (top.ground() != rel.ground()) throw Error("topology and relation have different ground sets");
    const auto hoods = neighborhood_masks(rel, side);
    MinimalOpenReport r;
    for (std::size_t x = 0; x < top.ground().size(); ++x) {
        ++r.checked;
        if (top.minimal_open(x) != hoods[x]) r.mismatched_words.push_back(top.ground()[x]);
    }
    return r;
}

DualityReport check_duality(const FiniteTopology& after_top, const FiniteTopology& fore_top) {
    require_same_ground(after_top, fore_top);
    const Mask full = after_top.full();
    auto complements = [full](const FiniteTopology& t) {
        std::vector<Mask> out;
        for (Mask m : t.opens()) out.push_back(full & ~m);
        std::sort(out.begin(), out.end(), canonical_less);
        return out;
    };
    DualityReport r;
    r.fore_complements_are_after = complements(fore_top) == after_top.opens();
    r.after_complements_are_fore = complements(after_top) == fore_top.opens();
    return r;
}

OpenStructureReport check_open_structure(const FiniteTopology& after_top, const FiniteTopology& fore_top,
                                         const ContainmentRelation& rel) {
    require_same_ground(after_top, fore_top);
    if (after_top.ground() != rel.ground()) throw Error("topology and relation have different ground sets");
    const auto after = neighborhood_masks(rel, Side::After);
    const auto fore = neighborhood_masks(rel, Side::Fore);
    const std::size_t n = rel.size();

    auto both_sides_union = [&](Mask a) {
        Mask out = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if (a & bit(x)) out |= after[x] | fore[x];
        }
        return out;
    };

    OpenStructureReport r;
    for (Mask a : after_top.opens()) {
        const bool common = fore_top.is_open(a);
        if (common) {
            ++r.common_opens;
            Mask cover = 0;
            for (std::size_t x = 0; x < n; ++x) {
                if (!(a & bit(x))) continue;
                for (std::size_t z = 0; z < n; ++z) {
                    if (a & bit(z)) cover |= after[x] & fore[z];
                }
            }
            if ((a & ~cover) != 0) r.inclusion_violations.push_back(after_top.words_of(a));
            if (both_sides_union(a) != a) r.equality_violations.push_back(after_top.words_of(a));
        } else {
            ++r.one_sided_opens;
            if (both_sides_union(a) != a) r.equality_counterexamples.push_back(after_top.words_of(a));
        }
    }
    for (Mask a : fore_top.opens()) {
        if (after_top.is_open(a)) continue;
        ++r.one_sided_opens;
        if (both_sides_union(a) != a) r.equality_counterexamples.push_back(fore_top.words_of(a));
    }
    return r;
}

MStepTopologies n_topologies(const ContainmentRelation& rel, int m, ChainMode mode, std::size_t cap) {
    const auto ground = ground_set(rel);
    std::vector<WordSet> fore_sub, after_sub;
    std::vector<Mask> fore_hoods, after_hoods;
    for (std::size_t x = 0; x < rel.size(); ++x) {
        auto f = rel.m_fore_indices(x, m, mode);
        auto a = rel.m_after_indices(x, m, mode);
        fore_hoods.push_back(mask_from_indices(f));
        after_hoods.push_back(mask_from_indices(a));
        WordSet fs, as;
        for (auto i : f) fs.insert(rel.ground()[i]);
        for (auto i : a) as.insert(rel.ground()[i]);
        fore_sub.push_back(std::move(fs));
        after_sub.push_back(std::move(as));
    }
    MStepTopologies r;
    r.fore = generate_from_subbase(ground, fore_sub, cap);
    r.after = generate_from_subbase(ground, after_sub, cap);
    r.matches_tau = r.fore == tau_f(rel, cap) && r.after == tau_b(rel, cap);
    for (Mask d : r.fore.opens()) {
        if (union_over(d, fore_hoods) != d) r.fore_union_violations.push_back(r.fore.words_of(d));
    }
    for (Mask d : r.after.opens()) {
        if (union_over(d, after_hoods) != d) r.after_union_violations.push_back(r.after.words_of(d));
    }
    return r;
}

}  // namespace searchtopo
