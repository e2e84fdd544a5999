#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "searchtopo/relation.hpp"

namespace searchtopo {

/// Words as nodes, (x, y) an edge when S(y) ⊆ S(x). Self-loops are kept apart from
/// the other edges. Node order follows the relation's ground order.
class DataDirectedGraph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    const WordList& nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    /// Non-loop containment edges, sorted.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::size_t>& self_loops() const noexcept { return self_loops_; }
    /// Strict edges with nothing strictly in between (transitive reduction of the
    /// strict part), sorted.
    const std::vector<Edge>& covering_edges() const noexcept { return covering_; }

    bool has_edge(std::size_t x, std::size_t y) const { return adjacency_[x * nodes_.size() + y] != 0; }
    bool strict_edge(std::size_t x, std::size_t y) const { return has_edge(x, y) && !has_edge(y, x); }
    std::size_t index_of(std::string_view word) const;

    std::vector<std::pair<std::string, std::string>> edge_names() const;
    std::vector<std::pair<std::string, std::string>> covering_edge_names() const;

private:
    friend DataDirectedGraph build_ddg(const ContainmentRelation&, const WordSet&);

    WordList nodes_;
    std::vector<char> adjacency_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> self_loops_;
    std::vector<Edge> covering_;
};

/// Rejects nodes outside the relation's ground set.
DataDirectedGraph build_ddg(const ContainmentRelation& rel, const WordSet& nodes);
/// Every ground word as a node.
DataDirectedGraph build_ddg(const ContainmentRelation& rel);

struct AtomReport {
    WordSet atoms;
    /// Nodes reachable from each node over non-loop edges, itself included.
    std::map<std::string, std::size_t> reach_counts;
};

/// x is an atom when it reaches every node and no other node has an edge into it.
AtomReport find_atoms(const DataDirectedGraph& g);

bool is_loop_directed(const DataDirectedGraph& g);

struct CycleReport {
    bool found = false;
    /// x_0 → x_1 → ... → x_0 (first node repeated at the end).
    WordList witness;
};

/// Directed cycles among non-loop edges.
CycleReport has_cycle(const DataDirectedGraph& g);

struct DistanceResult {
    std::size_t steps = 0;
    /// z = chain[0], ..., chain[steps] = y; consecutive pairs are strict containments.
    WordList chain;
};

/// Length of the shortest chain of covering edges from z down to y (breadth-first);
/// 0 for z == y, nullopt when y is not strictly below z.
std::optional<DistanceResult> distance(const DataDirectedGraph& g, std::string_view z, std::string_view y);

/// Unordered pairs with neither (x, y) nor (y, x) an edge.
std::vector<std::pair<std::string, std::string>> incomparable_pairs(const DataDirectedGraph& g);

struct DotOptions {
    /// Draw only covering edges instead of every containment edge.
    bool covering_only = false;
    bool highlight_atoms = true;
    bool self_loops = true;
};

/// Deterministic Graphviz digraph text.
std::string export_dot(const DataDirectedGraph& g, const DotOptions& options = {});

}  // namespace searchtopo
