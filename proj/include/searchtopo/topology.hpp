#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "searchtopo/relation.hpp"

namespace searchtopo {

/// Subset of a topology's ground set; bit i stands for ground()[i].
using Mask = std::uint64_t;

inline constexpr std::size_t kDefaultGroundCap = 16;
/// Upper bound for cap overrides; generation keeps a 2^n membership table.
inline constexpr std::size_t kMaxGroundCap = 24;

/// Explicit finite topology. Opens are stored in canonical order: by size, then
/// lexicographically by their sorted word lists.
class FiniteTopology {
public:
    const WordList& ground() const noexcept { return ground_; }
    const std::vector<Mask>& opens() const noexcept { return opens_; }
    std::size_t size() const noexcept { return opens_.size(); }
    Mask full() const noexcept { return ground_.size() == 64 ? ~Mask{0} : (Mask{1} << ground_.size()) - 1; }

    bool is_open(Mask m) const;
    Mask mask_of(const WordSet& words) const;
    WordSet words_of(Mask m) const;
    std::size_t index_of(std::string_view word) const;

    std::vector<WordList> open_sets() const;

    /// Intersection of all opens containing ground()[x].
    Mask minimal_open(std::size_t x) const;
    WordSet minimal_open_neighborhood(std::string_view word) const;

    /// ∅ and ground are open; pairwise unions and intersections stay open.
    bool is_topology() const;
    /// For every point, the intersection of all opens containing it is open.
    bool is_alexandrov() const;

    friend bool operator==(const FiniteTopology&, const FiniteTopology&) = default;

private:
    friend FiniteTopology generate_from_subbase(const WordSet&, const std::vector<WordSet>&, std::size_t);

    WordList ground_;
    std::vector<Mask> opens_;
};

bool canonical_less(Mask a, Mask b);

/// All unions of finite intersections of subbase members, with ∅ and ground.
/// Rejects grounds larger than `cap` and subbase members outside the ground.
FiniteTopology generate_from_subbase(const WordSet& ground, const std::vector<WordSet>& subbase,
                                     std::size_t cap = kDefaultGroundCap);

/// Generated by the after-sets {xR}.
FiniteTopology tau_b(const ContainmentRelation& rel, std::size_t cap = kDefaultGroundCap);
/// Generated by the fore-sets {Rx}.
FiniteTopology tau_f(const ContainmentRelation& rel, std::size_t cap = kDefaultGroundCap);

enum class Side { After, Fore };

/// D = ∪_{x∈D} xR for each open D (Fore: the same with Rx).
struct UnionIdentityReport {
    std::size_t checked = 0;
    std::vector<WordSet> violations;
    bool passed() const { return violations.empty(); }
};

UnionIdentityReport check_open_union_identity(const FiniteTopology& top, const ContainmentRelation& rel, Side side);

/// Minimal open neighborhood of every ground word against xR (or Rx).
struct MinimalOpenReport {
    std::size_t checked = 0;
    std::vector<std::string> mismatched_words;
    bool passed() const { return mismatched_words.empty(); }
};

MinimalOpenReport check_minimal_opens(const FiniteTopology& top, const ContainmentRelation& rel, Side side);

struct DualityReport {
    bool fore_complements_are_after = false;  // {D^c : D ∈ τ_F} = τ_B
    bool after_complements_are_fore = false;  // {D^c : D ∈ τ_B} = τ_F
    bool passed() const { return fore_complements_are_after && after_complements_are_fore; }
};

DualityReport check_duality(const FiniteTopology& after_top, const FiniteTopology& fore_top);

/// For A ∈ τ_B ∩ τ_F: A ⊆ ∪_{x,z∈A}(xR ∩ Rz) and A = ∪_{x∈A}(xR ∪ Rx), both asserted.
/// For A in exactly one of the two topologies the equality is only evaluated and
/// failures are collected as counterexamples.
struct OpenStructureReport {
    std::size_t common_opens = 0;
    std::vector<WordSet> inclusion_violations;
    std::vector<WordSet> equality_violations;
    std::size_t one_sided_opens = 0;
    std::vector<WordSet> equality_counterexamples;
    bool passed() const { return inclusion_violations.empty() && equality_violations.empty(); }
};

OpenStructureReport check_open_structure(const FiniteTopology& after_top, const FiniteTopology& fore_top,
                                         const ContainmentRelation& rel);

/// Topologies generated by m-step fore/after neighborhoods.
struct MStepTopologies {
    FiniteTopology fore;   // subbase {R^m_F(x)}
    FiniteTopology after;  // subbase {R^m_A(x)}
    /// Only meaningful in Reflexive mode, where both must equal τ_F / τ_B.
    bool matches_tau = false;
    /// D = ∪_{x∈D} R^m_F(x) (resp. R^m_A) over every open.
    std::vector<WordSet> fore_union_violations;
    std::vector<WordSet> after_union_violations;
};

MStepTopologies n_topologies(const ContainmentRelation& rel, int m, ChainMode mode,
                             std::size_t cap = kDefaultGroundCap);

}  // namespace searchtopo
