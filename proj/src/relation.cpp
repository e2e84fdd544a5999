#include "searchtopo/relation.hpp"

#include <algorithm>
#include <limits>

namespace searchtopo {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}

ContainmentRelation ContainmentRelation::build(const Searcher& searcher, const WordSet& words) {
    if (words.empty()) throw Error("relation: word set is empty");
    WordSet labels = normalize_keywords(words);
    ContainmentRelation rel(WordList(labels.begin(), labels.end()));
    rel.spaces_.reserve(rel.size());
    for (const auto& w : rel.ground_) rel.spaces_.push_back(searcher.search(Keyword::parse(w)));
    for (std::size_t x = 0; x < rel.size(); ++x) {
        for (std::size_t y = 0; y < rel.size(); ++y) {
            if (rel.spaces_[x].includes(rel.spaces_[y])) rel.set(x, y);
        }
    }
    return rel;
}

ContainmentRelation ContainmentRelation::from_pairs(const WordSet& ground, const std::vector<WordPair>& pairs) {
    if (ground.empty()) throw Error("relation: word set is empty");
    ContainmentRelation rel(WordList(ground.begin(), ground.end()));
    for (const auto& [x, y] : pairs) rel.set(rel.index_of(x), rel.index_of(y));
    return rel;
}

std::size_t ContainmentRelation::index_of(std::string_view word) const {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), word);
    if (it == ground_.end() || *it != word) {
        throw Error("word '" + std::string(word) + "' is not in the relation's ground set");
    }
    return static_cast<std::size_t>(it - ground_.begin());
}

std::vector<WordPair> ContainmentRelation::pairs() const {
    std::vector<WordPair> out;
    for (std::size_t x = 0; x < size(); ++x) {
        for (std::size_t y = 0; y < size(); ++y) {
            if (related(x, y)) out.emplace_back(ground_[x], ground_[y]);
        }
    }
    return out;
}

WordSet ContainmentRelation::names(const std::vector<std::size_t>& idx) const {
    WordSet out;
    for (auto i : idx) out.insert(ground_[i]);
    return out;
}

std::vector<std::size_t> ContainmentRelation::after_indices(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < size(); ++y) {
        if (related(x, y)) out.push_back(y);
    }
    return out;
}

std::vector<std::size_t> ContainmentRelation::fore_indices(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < size(); ++y) {
        if (related(y, x)) out.push_back(y);
    }
    return out;
}

WordSet ContainmentRelation::after(std::string_view x) const {
    return names(after_indices(index_of(x)));
}

WordSet ContainmentRelation::fore(std::string_view x) const {
    return names(fore_indices(index_of(x)));
}

bool ContainmentRelation::is_serial() const {
    for (std::size_t x = 0; x < size(); ++x) {
        bool any = false;
        for (std::size_t y = 0; y < size() && !any; ++y) any = related(x, y);
        if (!any) return false;
    }
    return true;
}

bool ContainmentRelation::is_reflexive() const {
    for (std::size_t x = 0; x < size(); ++x) {
        if (!related(x, x)) return false;
    }
    return true;
}

bool ContainmentRelation::is_transitive() const {
    const std::size_t n = size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (!related(x, y)) continue;
            for (std::size_t z = 0; z < n; ++z) {
                if (related(y, z) && !related(x, z)) return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<std::size_t>> ContainmentRelation::layers(
    std::size_t x, int m, ChainMode mode, bool forward, std::vector<std::vector<std::size_t>>* parents) const {
    if (m < 1) throw Error("m-step relation needs m >= 1, got " + std::to_string(m));
    const std::size_t n = size();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur{x};
    out.push_back(cur);
    if (parents) parents->assign(static_cast<std::size_t>(m) + 1, std::vector<std::size_t>(n, kNone));
    for (int k = 1; k <= m; ++k) {
        std::vector<std::size_t> next;
        std::vector<char> seen(n, 0);
        for (auto u : cur) {
            for (std::size_t v = 0; v < n; ++v) {
                if (seen[v]) continue;
                if (forward ? edge(u, v, mode) : edge(v, u, mode)) {
                    seen[v] = 1;
                    if (parents) (*parents)[static_cast<std::size_t>(k)][v] = u;
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (seen[v]) next.push_back(v);
        }
        cur = std::move(next);
        out.push_back(cur);
        if (cur.empty()) {
            out.resize(static_cast<std::size_t>(m) + 1);
            break;
        }
    }
    return out;
}

MStepResult ContainmentRelation::m_step(std::string_view x, std::string_view y, int m, ChainMode mode) const {
    const auto xi = index_of(x);
    const auto yi = index_of(y);
    std::vector<std::vector<std::size_t>> parents;
    auto ls = layers(xi, m, mode, true, &parents);
    const auto& last = ls.back();
    MStepResult r;
    r.holds = std::find(last.begin(), last.end(), yi) != last.end();
    if (r.holds) {
        WordList chain;
        auto v = yi;
        for (int k = m; k > 1; --k) {
            v = parents[static_cast<std::size_t>(k)][v];
            chain.push_back(ground_[v]);
        }
        std::reverse(chain.begin(), chain.end());
        r.witness = std::move(chain);
    }
    return r;
}

std::vector<std::size_t> ContainmentRelation::m_after_indices(std::size_t x, int m, ChainMode mode) const {
    return layers(x, m, mode, true, nullptr).back();
}

std::vector<std::size_t> ContainmentRelation::m_fore_indices(std::size_t x, int m, ChainMode mode) const {
    return layers(x, m, mode, false, nullptr).back();
}

WordSet ContainmentRelation::m_after(std::string_view x, int m, ChainMode mode) const {
    return names(m_after_indices(index_of(x), m, mode));
}

WordSet ContainmentRelation::m_fore(std::string_view x, int m, ChainMode mode) const {
    return names(m_fore_indices(index_of(x), m, mode));
}

bool ContainmentRelation::preceq(const WordSet& e, const WordSet& f) const {
    for (const auto& y : f) {
        const auto yi = index_of(y);
        bool found = false;
        for (const auto& z : e) {
            if (related(index_of(z), yi)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool ContainmentRelation::succeq(const WordSet& e, const WordSet& f) const {
    for (const auto& y : f) {
        const auto yi = index_of(y);
        bool found = false;
        for (const auto& z : e) {
            if (related(yi, index_of(z))) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::vector<WordSet> ContainmentRelation::equivalence_classes() const {
    std::vector<WordSet> out;
    std::vector<char> done(size(), 0);
    for (std::size_t x = 0; x < size(); ++x) {
        if (done[x]) continue;
        WordSet cls{ground_[x]};
        done[x] = 1;
        for (std::size_t y = x + 1; y < size(); ++y) {
            if (!done[y] && related(x, y) && related(y, x)) {
                cls.insert(ground_[y]);
                done[y] = 1;
            }
        }
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace searchtopo
