#include "searchtopo/search.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

namespace searchtopo {

Keyword Keyword::parse(std::string_view text) {
    Keyword k;
    for (auto& t : tokenize(text)) {
        if (std::find(k.tokens_.begin(), k.tokens_.end(), t) == k.tokens_.end()) k.tokens_.push_back(std::move(t));
    }
    if (k.tokens_.empty()) throw Error("keyword '" + std::string(text) + "' has no tokens");
    return k;
}

Keyword Keyword::from_tokens(WordList tokens) {
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    if (tokens.empty()) throw Error("keyword has no tokens");
    Keyword k;
    k.tokens_ = std::move(tokens);
    return k;
}

std::string Keyword::label() const {
    std::string out;
    for (const auto& t : tokens_) {
        if (!out.empty()) out.push_back(' ');
        out += t;
    }
    return out;
}

Keyword Keyword::vee(const Keyword& other) const {
    WordList all = tokens_;
    all.insert(all.end(), other.tokens_.begin(), other.tokens_.end());
    return from_tokens(std::move(all));
}

Query Query::leaf(std::string word) {
    Query q;
    q.word = std::move(word);
    return q;
}

Query Query::vee(std::vector<Query> children) {
    Query q;
    q.kind = Kind::Vee;
    q.children = std::move(children);
    return q;
}

Query Query::wedge(std::vector<Query> children) {
    Query q;
    q.kind = Kind::Wedge;
    q.children = std::move(children);
    return q;
}

std::string Query::to_string() const {
    if (kind == Kind::Leaf) return word;
    const char* op = kind == Kind::Vee ? " | " : " & ";
    std::string out = "(";
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += op;
        out += children[i].to_string();
    }
    return out + ")";
}

namespace {

// expr   := term ('&' term)*
// term   := factor ('|'? factor)*
// factor := WORD | '(' expr ')'
class QueryParser {
public:
    explicit QueryParser(std::string_view text) : text_(text) {}

    Query parse() {
        Query q = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return q;
    }

private:
    Query expr() {
        std::vector<Query> parts;
        parts.push_back(term());
        while (peek() == '&') {
            ++pos_;
            parts.push_back(term());
        }
        return parts.size() == 1 ? std::move(parts.front()) : Query::wedge(std::move(parts));
    }

    Query term() {
        std::vector<Query> parts;
        parts.push_back(factor());
        for (;;) {
            char c = peek();
            if (c == '|') {
                ++pos_;
                parts.push_back(factor());
            } else if (c != '\0' && c != '&' && c != ')') {
                parts.push_back(factor());
            } else {
                break;
            }
        }
        return parts.size() == 1 ? std::move(parts.front()) : Query::vee(std::move(parts));
    }

    Query factor() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Query q = expr();
            if (peek() != ')') fail("missing ')'");
            ++pos_;
            return q;
        }
        if (c == '\0' || c == '|' || c == '&' || c == ')') fail("expected a word");
        std::size_t start = pos_;
        while (pos_ < text_.size() && !is_operator(text_[pos_]) &&
               !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        auto tokens = tokenize(text_.substr(start, pos_ - start));
        if (tokens.empty()) fail("'" + std::string(text_.substr(start, pos_ - start)) + "' has no word characters");
        if (tokens.size() == 1) return Query::leaf(std::move(tokens.front()));
        std::vector<Query> leaves;
        for (auto& t : tokens) leaves.push_back(Query::leaf(std::move(t)));
        return Query::vee(std::move(leaves));
    }

    static bool is_operator(char c) { return c == '|' || c == '&' || c == '(' || c == ')'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error("query parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Query parse_query(std::string_view text) {
    return QueryParser(text).parse();
}

bool SearchFamily::includes(const SearchFamily& other) const {
    for (const auto& [k, v] : other.entries) {
        auto it = entries.find(k);
        if (it == entries.end() || it->second != v) return false;
    }
    return true;
}

std::set<SearchSpace> SearchFamily::value_set() const {
    std::set<SearchSpace> out;
    for (const auto& [k, v] : entries) out.insert(v);
    return out;
}

WordSet SearchFamily::keys() const {
    WordSet out;
    for (const auto& [k, v] : entries) out.insert(k);
    return out;
}

SearchFamily keyed_union(const SearchFamily& a, const SearchFamily& b) {
    SearchFamily out = a;
    for (const auto& [k, v] : b.entries) out.entries.emplace(k, v);
    return out;
}

SearchFamily keyed_intersection(const SearchFamily& a, const SearchFamily& b) {
    SearchFamily out;
    for (const auto& [k, v] : a.entries) {
        auto it = b.entries.find(k);
        if (it != b.entries.end() && it->second == v) out.entries.emplace(k, v);
    }
    return out;
}

SearchFamily keyed_difference(const SearchFamily& whole, const SearchFamily& part) {
    SearchFamily out;
    for (const auto& [k, v] : whole.entries) {
        if (!part.contains_key(k)) out.entries.emplace(k, v);
    }
    return out;
}

Searcher::Searcher(Corpus corpus) : corpus_(std::move(corpus)), index_(build_index(corpus_)) {}

SearchSpace Searcher::search(std::string_view word) const {
    return index_.lookup(normalize_word(word));
}

SearchSpace Searcher::search(const Keyword& keyword) const {
    const auto& tokens = keyword.tokens();
    SearchSpace acc = index_.lookup(tokens.front());
    for (std::size_t i = 1; i < tokens.size() && !acc.empty(); ++i) acc = acc.intersect(index_.lookup(tokens[i]));
    return acc;
}

SearchSpace Searcher::eval(const Query& query) const {
    switch (query.kind) {
        case Query::Kind::Leaf:
            return search(query.word);
        case Query::Kind::Vee: {
            SearchSpace acc = eval(query.children.at(0));
            for (std::size_t i = 1; i < query.children.size(); ++i) acc = acc.intersect(eval(query.children[i]));
            return acc;
        }
        case Query::Kind::Wedge: {
            SearchSpace acc = eval(query.children.at(0));
            for (std::size_t i = 1; i < query.children.size(); ++i) acc = acc.unite(eval(query.children[i]));
            return acc;
        }
    }
    return {};
}

SearchFamily Searcher::family(const WordSet& words) const {
    SearchFamily f;
    for (const auto& w : words) {
        auto k = Keyword::parse(w);
        f.entries.emplace(k.label(), search(k));
    }
    return f;
}

WordSet normalize_keywords(const WordSet& raw) {
    WordSet out;
    for (const auto& w : raw) out.insert(Keyword::parse(w).label());
    return out;
}

FamilyAlgebra::FamilyAlgebra(const Searcher& searcher, std::optional<WordSet> ground)
    : searcher_(searcher) {
    if (ground) ground_ = normalize_keywords(*ground);
}

WordSet FamilyAlgebra::checked(const WordSet& a) const {
    WordSet n = normalize_keywords(a);
    if (ground_) {
        for (const auto& w : n) {
            if (!ground_->count(w)) throw Error("word '" + w + "' is outside the working word set");
        }
    }
    return n;
}

const WordSet& FamilyAlgebra::require_ground(const char* op) const {
    if (!ground_) throw Error(std::string(op) + ": complement needs a declared working word set");
    return *ground_;
}

SearchFamily FamilyAlgebra::keyed_complement(const SearchFamily& f) const {
    return keyed_difference(searcher_.family(*ground_), f);
}

namespace {

WordSet set_union(const WordSet& a, const WordSet& b) {
    WordSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

WordSet set_intersection(const WordSet& a, const WordSet& b) {
    WordSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

WordSet set_difference(const WordSet& a, const WordSet& b) {
    WordSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

}  // namespace

FamilyIdentity FamilyAlgebra::unite(const WordSet& a, const WordSet& b) const {
    auto na = checked(a), nb = checked(b);
    FamilyIdentity r;
    r.family = searcher_.family(set_union(na, nb));
    r.holds = r.family == keyed_union(searcher_.family(na), searcher_.family(nb));
    return r;
}

FamilyIdentity FamilyAlgebra::intersect(const WordSet& a, const WordSet& b) const {
    auto na = checked(a), nb = checked(b);
    FamilyIdentity r;
    r.family = searcher_.family(set_intersection(na, nb));
    r.holds = r.family == keyed_intersection(searcher_.family(na), searcher_.family(nb));
    return r;
}

FamilyIdentity FamilyAlgebra::complement(const WordSet& a) const {
    const auto& g = require_ground("complement");
    auto na = checked(a);
    FamilyIdentity r;
    r.family = searcher_.family(set_difference(g, na));
    r.holds = r.family == keyed_complement(searcher_.family(na));
    return r;
}

FamilyIdentity FamilyAlgebra::complement_of_union(const WordSet& a, const WordSet& b) const {
    const auto& g = require_ground("complement_of_union");
    auto na = checked(a), nb = checked(b);
    FamilyIdentity r;
    r.family = searcher_.family(set_difference(g, set_union(na, nb)));
    r.holds = r.family ==
              keyed_intersection(keyed_complement(searcher_.family(na)), keyed_complement(searcher_.family(nb)));
    return r;
}

FamilyIdentity FamilyAlgebra::complement_of_intersection(const WordSet& a, const WordSet& b) const {
    const auto& g = require_ground("complement_of_intersection");
    auto na = checked(a), nb = checked(b);
    FamilyIdentity r;
    r.family = searcher_.family(set_difference(g, set_intersection(na, nb)));
    r.holds =
        r.family == keyed_union(keyed_complement(searcher_.family(na)), keyed_complement(searcher_.family(nb)));
    return r;
}

}  // namespace searchtopo
