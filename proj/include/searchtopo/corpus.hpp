#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "searchtopo/doc_set.hpp"

namespace searchtopo {

using WordList = std::vector<std::string>;

/// Lowercase (ASCII), split on every non-alphanumeric ASCII byte, drop empty
/// fragments. Bytes >= 0x80 are treated as word characters so UTF-8 words survive.
WordList tokenize(std::string_view text);

/// Lowercasing only; used for pre-tokenized word lists.
std::string normalize_word(std::string_view word);

/// One input line: either free text or a word list.
struct Record {
    std::string id;
    std::variant<std::string, WordList> content;
};

struct Document {
    std::string id;
    WordList tokens;  // sorted, unique, normalized
    std::size_t source_len = 0;
};

/// Total order on document ids: all-digit ids first, compared numerically, then
/// everything else lexicographically.
bool doc_id_less(std::string_view a, std::string_view b);

class Corpus {
public:
    /// Rejects an empty record list and duplicate ids. The result does not depend
    /// on record order.
    static Corpus ingest(std::vector<Record> records);

    const std::vector<Document>& documents() const noexcept { return documents_; }
    const Document& document(DocIndex i) const { return documents_.at(i); }
    const std::string& doc_id(DocIndex i) const { return documents_.at(i).id; }
    std::optional<DocIndex> find(std::string_view id) const;
    std::size_t size() const noexcept { return documents_.size(); }

    /// Sorted union of all document token sets.
    const WordList& vocabulary() const noexcept { return vocabulary_; }
    DocSet universe() const { return DocSet::all(documents_.size()); }

    /// FNV-1a over ids and tokens; identifies the collection families were built on.
    std::uint64_t fingerprint() const noexcept { return fingerprint_; }

    /// Doc positions rendered as ids, in corpus order.
    std::vector<std::string> ids_of(const DocSet& docs) const;

private:
    std::vector<Document> documents_;
    WordList vocabulary_;
    std::uint64_t fingerprint_ = 0;
};

/// Parses JSON Lines: {"id": ..., "text": ...} or {"id": ..., "words": [...]}.
/// Numeric ids are accepted and stringified. Blank lines are skipped.
std::vector<Record> parse_jsonl(std::istream& in);
Corpus load_corpus(const std::string& path);

/// word -> S(word), for every vocabulary word.
class InvertedIndex {
public:
    const std::map<std::string, DocSet, std::less<>>& postings() const noexcept { return postings_; }
    /// Empty set for words outside the vocabulary.
    const DocSet& lookup(std::string_view word) const;
    bool contains(std::string_view word) const;

private:
    friend InvertedIndex build_index(const Corpus& corpus);
    std::map<std::string, DocSet, std::less<>> postings_;
};

InvertedIndex build_index(const Corpus& corpus);

}  // namespace searchtopo
