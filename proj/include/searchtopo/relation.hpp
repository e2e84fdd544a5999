#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "searchtopo/search.hpp"

namespace searchtopo {

/// How m-step chains are formed.
///  - Reflexive: every link is an R edge, so a chain may repeat a word. For the
///    containment preorder this makes R^m equal R.
///  - Strict: every link is a strict containment S(next) ⊊ S(prev); the spaces along
///    the chain are therefore pairwise distinct.
enum class ChainMode { Reflexive, Strict };

using WordPair = std::pair<std::string, std::string>;

struct MStepResult {
    bool holds = false;
    /// y_1 .. y_{m-1}, present when holds.
    std::optional<WordList> witness;
};

/// The relation x R y ⟺ S(y) ⊆ S(x) over a finite ground set of keywords.
/// Ground words are keyword labels, kept sorted; indices below refer to that order.
class ContainmentRelation {
public:
    /// Pairwise posting containment. Rejects an empty word set.
    static ContainmentRelation build(const Searcher& searcher, const WordSet& words);
    /// Arbitrary pair set; used to exercise the relation checks on relations that
    /// are not containment preorders. Pairs must mention ground words only.
    static ContainmentRelation from_pairs(const WordSet& ground, const std::vector<WordPair>& pairs);

    const WordList& ground() const noexcept { return ground_; }
    std::size_t size() const noexcept { return ground_.size(); }
    /// Throws for words outside the ground set.
    std::size_t index_of(std::string_view word) const;

    bool related(std::size_t x, std::size_t y) const { return matrix_[x * ground_.size() + y] != 0; }
    bool related(std::string_view x, std::string_view y) const { return related(index_of(x), index_of(y)); }
    bool strictly_related(std::size_t x, std::size_t y) const { return related(x, y) && !related(y, x); }

    std::vector<WordPair> pairs() const;

    /// xR = {y : S(y) ⊆ S(x)}
    WordSet after(std::string_view x) const;
    /// Rx = {y : S(x) ⊆ S(y)}
    WordSet fore(std::string_view x) const;
    std::vector<std::size_t> after_indices(std::size_t x) const;
    std::vector<std::size_t> fore_indices(std::size_t x) const;

    bool is_serial() const;
    bool is_reflexive() const;
    bool is_transitive() const;

    /// Throws when m < 1.
    MStepResult m_step(std::string_view x, std::string_view y, int m, ChainMode mode = ChainMode::Reflexive) const;
    WordSet m_after(std::string_view x, int m, ChainMode mode = ChainMode::Reflexive) const;
    WordSet m_fore(std::string_view x, int m, ChainMode mode = ChainMode::Reflexive) const;
    std::vector<std::size_t> m_after_indices(std::size_t x, int m, ChainMode mode) const;
    std::vector<std::size_t> m_fore_indices(std::size_t x, int m, ChainMode mode) const;

    /// E ⪯ F: each y ∈ F has some z ∈ E with S(y) ⊆ S(z).
    bool preceq(const WordSet& e, const WordSet& f) const;
    /// E ⪰ F: each y ∈ F has some z ∈ E with S(z) ⊆ S(y).
    bool succeq(const WordSet& e, const WordSet& f) const;

    /// Groups of mutually related words (equal search spaces), in ground order.
    std::vector<WordSet> equivalence_classes() const;

    /// Per-word search spaces; empty for relations built from pairs.
    const std::vector<SearchSpace>& spaces() const noexcept { return spaces_; }

private:
    ContainmentRelation(WordList ground) : ground_(std::move(ground)), matrix_(ground_.size() * ground_.size(), 0) {}

    void set(std::size_t x, std::size_t y) { matrix_[x * ground_.size() + y] = 1; }
    bool edge(std::size_t from, std::size_t to, ChainMode mode) const {
        return mode == ChainMode::Strict ? strictly_related(from, to) : related(from, to);
    }
    /// Layers[k] = words reachable from `x` in exactly k links; parents for backtracking.
    std::vector<std::vector<std::size_t>> layers(std::size_t x, int m, ChainMode mode, bool forward,
                                                 std::vector<std::vector<std::size_t>>* parents) const;
    WordSet names(const std::vector<std::size_t>& idx) const;

    WordList ground_;
    std::vector<char> matrix_;
    std::vector<SearchSpace> spaces_;
};

}  // namespace searchtopo
