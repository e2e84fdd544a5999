#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace searchtopo {

/// Raised for any rejected input: bad records, unknown words, caps exceeded.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Position of a document inside a Corpus (documents are kept in canonical id order).
using DocIndex = std::uint32_t;

/// Sorted, duplicate-free set of document positions. This is the value type of a
/// search space S(x).
class DocSet {
public:
    DocSet() = default;
    DocSet(std::initializer_list<DocIndex> ids);

    /// Sorts and deduplicates.
    static DocSet from_unsorted(std::vector<DocIndex> ids);
    /// {0, 1, ..., n-1}
    static DocSet all(std::size_t n);

    std::span<const DocIndex> ids() const noexcept { return ids_; }
    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }

    bool contains(DocIndex id) const;
    /// True when every member of `other` is a member of this set.
    bool includes(const DocSet& other) const;

    DocSet unite(const DocSet& other) const;
    DocSet intersect(const DocSet& other) const;
    DocSet minus(const DocSet& other) const;
    /// Complement relative to the universe {0..universe_size-1}.
    DocSet complement(std::size_t universe_size) const;

    friend bool operator==(const DocSet&, const DocSet&) = default;
    friend auto operator<=>(const DocSet&, const DocSet&) = default;

private:
    explicit DocSet(std::vector<DocIndex> sorted) : ids_(std::move(sorted)) {}

    std::vector<DocIndex> ids_;
};

/// Search spaces are plain document sets.
using SearchSpace = DocSet;

}  // namespace searchtopo
