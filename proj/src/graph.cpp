#include "searchtopo/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace searchtopo {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::size_t DataDirectedGraph::index_of(std::string_view word) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), word);
    if (it == nodes_.end() || *it != word) throw Error("'" + std::string(word) + "' is not a node of the graph");
    return static_cast<std::size_t>(it - nodes_.begin());
}

std::vector<std::pair<std::string, std::string>> DataDirectedGraph::edge_names() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [x, y] : edges_) out.emplace_back(nodes_[x], nodes_[y]);
    return out;
}

std::vector<std::pair<std::string, std::string>> DataDirectedGraph::covering_edge_names() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [x, y] : covering_) out.emplace_back(nodes_[x], nodes_[y]);
    return out;
}

DataDirectedGraph build_ddg(const ContainmentRelation& rel, const WordSet& nodes) {
    DataDirectedGraph g;
    std::vector<std::size_t> idx;
    for (const auto& w : normalize_keywords(nodes)) {
        idx.push_back(rel.index_of(w));
        g.nodes_.push_back(w);
    }
    const std::size_t n = g.nodes_.size();
    g.adjacency_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!rel.related(idx[i], idx[j])) continue;
            g.adjacency_[i * n + j] = 1;
            if (i == j) {
                g.self_loops_.push_back(i);
            } else {
                g.edges_.emplace_back(i, j);
            }
        }
    }
    for (auto [x, y] : g.edges_) {
        if (!g.strict_edge(x, y)) continue;
        bool between = false;
        for (std::size_t z = 0; z < n && !between; ++z) {
            between = z != x && z != y && g.strict_edge(x, z) && g.strict_edge(z, y);
        }
        if (!between) g.covering_.emplace_back(x, y);
    }
    return g;
}

DataDirectedGraph build_ddg(const ContainmentRelation& rel) {
    return build_ddg(rel, WordSet(rel.ground().begin(), rel.ground().end()));
}

AtomReport find_atoms(const DataDirectedGraph& g) {
    const std::size_t n = g.size();
    AtomReport r;
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<char> seen(n, 0);
        std::deque<std::size_t> queue{x};
        seen[x] = 1;
        std::size_t count = 1;
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (std::size_t v = 0; v < n; ++v) {
                if (!seen[v] && g.has_edge(u, v)) {
                    seen[v] = 1;
                    ++count;
                    queue.push_back(v);
                }
            }
        }
        r.reach_counts[g.nodes()[x]] = count;
        bool entered = false;
        for (std::size_t y = 0; y < n && !entered; ++y) entered = y != x && g.has_edge(y, x);
        if (count == n && !entered) r.atoms.insert(g.nodes()[x]);
    }
    return r;
}

bool is_loop_directed(const DataDirectedGraph& g) {
    return !g.self_loops().empty();
}

CycleReport has_cycle(const DataDirectedGraph& g) {
    const std::size_t n = g.size();
    enum : char { White, Grey, Black };
    std::vector<char> colour(n, White);
    std::vector<std::size_t> parent(n, kNone);
    CycleReport r;

    // Iterative DFS; a grey successor closes a cycle.
    for (std::size_t root = 0; root < n && !r.found; ++root) {
        if (colour[root] != White) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        colour[root] = Grey;
        while (!stack.empty() && !r.found) {
            auto& [u, next] = stack.back();
            if (next == n) {
                colour[u] = Black;
                stack.pop_back();
                continue;
            }
            const std::size_t v = next++;
            if (v == u || !g.has_edge(u, v)) continue;
            if (colour[v] == Grey) {
                WordList cycle;
                for (std::size_t w = u; w != v; w = parent[w]) cycle.push_back(g.nodes()[w]);
                cycle.push_back(g.nodes()[v]);
                std::reverse(cycle.begin(), cycle.end());
                cycle.push_back(g.nodes()[v]);
                r.found = true;
                r.witness = std::move(cycle);
            } else if (colour[v] == White) {
                colour[v] = Grey;
                parent[v] = u;
                stack.emplace_back(v, 0);
            }
        }
    }
    return r;
}

std::optional<DistanceResult> distance(const DataDirectedGraph& g, std::string_view z, std::string_view y) {
    const auto from = g.index_of(z);
    const auto to = g.index_of(y);
    if (from == to) return DistanceResult{0, {g.nodes()[from]}};

    const std::size_t n = g.size();
    std::vector<std::vector<std::size_t>> down(n);
    for (auto [a, b] : g.covering_edges()) down[a].push_back(b);

    std::vector<std::size_t> parent(n, kNone);
    std::vector<char> seen(n, 0);
    std::deque<std::size_t> queue{from};
    seen[from] = 1;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (auto v : down[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    if (!seen[to]) return std::nullopt;
    DistanceResult r;
    for (std::size_t w = to; w != kNone; w = parent[w]) r.chain.push_back(g.nodes()[w]);
    std::reverse(r.chain.begin(), r.chain.end());
    r.steps = r.chain.size() - 1;
    return r;
}

std::vector<std::pair<std::string, std::string>> incomparable_pairs(const DataDirectedGraph& g) {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t x = 0; x < g.size(); ++x) {
        for (std::size_t y = x + 1; y < g.size(); ++y) {
            if (!g.has_edge(x, y) && !g.has_edge(y, x)) out.emplace_back(g.nodes()[x], g.nodes()[y]);
        }
    }
    return out;
}

std::string export_dot(const DataDirectedGraph& g, const DotOptions& options) {
    const WordSet atoms = options.highlight_atoms ? find_atoms(g).atoms : WordSet{};
    std::ostringstream out;
    out << "digraph ddg {\n";
    if (g.size() > 0) out << "  node [shape=ellipse];\n";
    for (const auto& w : g.nodes()) {
        out << "  " << dot_quote(w);
        if (atoms.count(w)) out << " [style=filled, fillcolor=gold, penwidth=2]";
        out << ";\n";
    }
    if (options.self_loops) {
        for (auto i : g.self_loops()) out << "  " << dot_quote(g.nodes()[i]) << " -> " << dot_quote(g.nodes()[i]) << ";\n";
    }
    const auto& edges = options.covering_only ? g.covering_edges() : g.edges();
    for (auto [x, y] : edges) out << "  " << dot_quote(g.nodes()[x]) << " -> " << dot_quote(g.nodes()[y]) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace searchtopo
