#include "searchtopo/doc_set.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

namespace searchtopo {

DocSet::DocSet(std::initializer_list<DocIndex> ids) : DocSet(from_unsorted(std::vector<DocIndex>(ids))) {}

DocSet DocSet::from_unsorted(std::vector<DocIndex> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return DocSet(std::move(ids));
}

DocSet DocSet::all(std::size_t n) {
    std::vector<DocIndex> ids(n);
    std::iota(ids.begin(), ids.end(), DocIndex{0});
    return DocSet(std::move(ids));
}

bool DocSet::contains(DocIndex id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool DocSet::includes(const DocSet& other) const {
    return std::includes(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end());
}

DocSet DocSet::unite(const DocSet& other) const {
    std::vector<DocIndex> out;
    out.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(), std::back_inserter(out));
    return DocSet(std::move(out));
}

DocSet DocSet::intersect(const DocSet& other) const {
    std::vector<DocIndex> out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                          std::back_inserter(out));
    return DocSet(std::move(out));
}

DocSet DocSet::minus(const DocSet& other) const {
    std::vector<DocIndex> out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
    return DocSet(std::move(out));
}

DocSet DocSet::complement(std::size_t universe_size) const {
    return all(universe_size).minus(*this);
}

}  // namespace searchtopo
