#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "searchtopo/corpus.hpp"
#include "searchtopo/doc_set.hpp"

namespace searchtopo {

using WordSet = std::set<std::string>;

/// A keyword made of one or more normalized tokens. Multi-token keywords denote
/// the semantic union (VEE) of their tokens, so S("big data") = S(big) ∩ S(data).
class Keyword {
public:
    /// Tokenizes `text`; duplicate tokens collapse, first-occurrence order is kept.
    /// Throws when no token remains.
    static Keyword parse(std::string_view text);
    /// Tokens sorted, for order-insensitive composite keywords.
    static Keyword from_tokens(WordList tokens);

    const WordList& tokens() const noexcept { return tokens_; }
    /// Tokens joined by single spaces.
    std::string label() const;

    /// x VEE y: union of token sets, sorted.
    Keyword vee(const Keyword& other) const;

    friend bool operator==(const Keyword&, const Keyword&) = default;

private:
    WordList tokens_;
};

/// Query tree. VEE evaluates to the intersection of its children, WEDGE to the union.
struct Query {
    enum class Kind { Leaf, Vee, Wedge };

    Kind kind = Kind::Leaf;
    std::string word;               // leaves only
    std::vector<Query> children;    // internal nodes only

    static Query leaf(std::string word);
    static Query vee(std::vector<Query> children);
    static Query wedge(std::vector<Query> children);

    /// Canonical infix rendering, fully parenthesized internal nodes.
    std::string to_string() const;
};

/// Infix syntax: `|` is VEE, `&` is WEDGE, parentheses group, adjacent words are
/// an implicit `|`. `|` binds tighter than `&`.
Query parse_query(std::string_view text);

/// Keyed family {(x, S(x))}. Distinct keys may share a value.
struct SearchFamily {
    std::map<std::string, SearchSpace> entries;

    bool contains_key(const std::string& key) const { return entries.count(key) != 0; }
    /// Keyed containment: every (key, value) of `other` is present here.
    bool includes(const SearchFamily& other) const;
    /// Read-only view of the distinct search spaces.
    std::set<SearchSpace> value_set() const;
    WordSet keys() const;

    friend bool operator==(const SearchFamily&, const SearchFamily&) = default;
};

SearchFamily keyed_union(const SearchFamily& a, const SearchFamily& b);
SearchFamily keyed_intersection(const SearchFamily& a, const SearchFamily& b);
/// Entries of `whole` whose key is absent from `part`.
SearchFamily keyed_difference(const SearchFamily& whole, const SearchFamily& part);

/// Owns a corpus and its inverted index and realizes the search function.
class Searcher {
public:
    explicit Searcher(Corpus corpus);

    const Corpus& corpus() const noexcept { return corpus_; }
    const InvertedIndex& index() const noexcept { return index_; }
    std::size_t universe_size() const noexcept { return corpus_.size(); }

    /// Exact single-word lookup after lowercasing; empty for absent words.
    SearchSpace search(std::string_view word) const;
    SearchSpace search(const Keyword& keyword) const;
    SearchSpace eval(const Query& query) const;

    /// Keys are keyword labels (see Keyword::label); absent keywords map to ∅.
    SearchFamily family(const WordSet& words) const;

private:
    Corpus corpus_;
    InvertedIndex index_;
};

/// Canonical keyword labels for a set of raw keyword strings.
WordSet normalize_keywords(const WordSet& raw);

/// Result of a family identity: the family computed from the combined word set,
/// and whether it equals the keyed combination of the operands' families.
struct FamilyIdentity {
    SearchFamily family;
    bool holds = false;
};

/// Set algebra of search families over an optional declared working word set W'.
class FamilyAlgebra {
public:
    explicit FamilyAlgebra(const Searcher& searcher, std::optional<WordSet> ground = std::nullopt);

    const std::optional<WordSet>& ground() const noexcept { return ground_; }

    /// family(A ∪ B) against family(A) ∪ family(B).
    FamilyIdentity unite(const WordSet& a, const WordSet& b) const;
    /// family(A ∩ B) against family(A) ∩ family(B).
    FamilyIdentity intersect(const WordSet& a, const WordSet& b) const;
    /// family(W' \ A) against family(W') minus the keys of family(A). Requires W'.
    FamilyIdentity complement(const WordSet& a) const;
    /// family((A ∪ B)^c) against family(A)^c ∩ family(B)^c.
    FamilyIdentity complement_of_union(const WordSet& a, const WordSet& b) const;
    /// family((A ∩ B)^c) against family(A)^c ∪ family(B)^c.
    FamilyIdentity complement_of_intersection(const WordSet& a, const WordSet& b) const;

private:
    WordSet checked(const WordSet& a) const;
    const WordSet& require_ground(const char* op) const;
    SearchFamily keyed_complement(const SearchFamily& f) const;

    const Searcher& searcher_;
    std::optional<WordSet> ground_;
};

}  // namespace searchtopo
