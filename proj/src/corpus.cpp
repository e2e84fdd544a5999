#include "searchtopo/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>

#include <json.hpp>

namespace searchtopo {

namespace {

bool is_word_byte(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
}

char lower(unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_leading_zeros(std::string_view s) {
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    return s;
}

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, std::string_view s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= kFnvPrime;
    }
    // field separator so ("ab","c") != ("a","bc")
    h ^= 0xff;
    h *= kFnvPrime;
}

}  // namespace

WordList tokenize(std::string_view text) {
    WordList out;
    std::string cur;
    for (unsigned char c : text) {
        if (is_word_byte(c)) {
            cur.push_back(lower(c));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::string normalize_word(std::string_view word) {
    std::string out;
    out.reserve(word.size());
    for (unsigned char c : word) out.push_back(lower(c));
    return out;
}

bool doc_id_less(std::string_view a, std::string_view b) {
    const bool na = all_digits(a);
    const bool nb = all_digits(b);
    if (na != nb) return na;
    if (na) {
        auto sa = strip_leading_zeros(a);
        auto sb = strip_leading_zeros(b);
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        if (sa != sb) return sa < sb;
    }
    return a < b;
}

Corpus Corpus::ingest(std::vector<Record> records) {
    if (records.empty()) throw Error("ingest: no records");

    Corpus c;
    c.documents_.reserve(records.size());
    for (auto& r : records) {
        Document d;
        d.id = std::move(r.id);
        WordList raw;
        if (auto* text = std::get_if<std::string>(&r.content)) {
            raw = tokenize(*text);
        } else {
            for (const auto& w : std::get<WordList>(r.content)) {
                auto n = normalize_word(w);
                if (!n.empty()) raw.push_back(std::move(n));
            }
        }
        d.source_len = raw.size();
        std::sort(raw.begin(), raw.end());
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
        d.tokens = std::move(raw);
        c.documents_.push_back(std::move(d));
    }

    std::sort(c.documents_.begin(), c.documents_.end(),
              [](const Document& a, const Document& b) { return doc_id_less(a.id, b.id); });
    for (std::size_t i = 1; i < c.documents_.size(); ++i) {
        if (c.documents_[i - 1].id == c.documents_[i].id) {
            throw Error("ingest: duplicate document id '" + c.documents_[i].id + "'");
        }
    }

    std::set<std::string> vocab;
    std::uint64_t h = kFnvOffset;
    for (const auto& d : c.documents_) {
        fnv_mix(h, d.id);
        for (const auto& t : d.tokens) {
            vocab.insert(t);
            fnv_mix(h, t);
        }
        h ^= 0xfe;
        h *= kFnvPrime;
    }
    c.vocabulary_.assign(vocab.begin(), vocab.end());
    c.fingerprint_ = h;
    return c;
}

std::optional<DocIndex> Corpus::find(std::string_view id) const {
    auto it = std::lower_bound(documents_.begin(), documents_.end(), id,
                               [](const Document& d, std::string_view key) { return doc_id_less(d.id, key); });
    if (it != documents_.end() && it->id == id) return static_cast<DocIndex>(it - documents_.begin());
    return std::nullopt;
}

std::vector<std::string> Corpus::ids_of(const DocSet& docs) const {
    std::vector<std::string> out;
    out.reserve(docs.size());
    for (DocIndex i : docs) out.push_back(doc_id(i));
    return out;
}

std::vector<Record> parse_jsonl(std::istream& in) {
    std::vector<Record> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error("line " + std::to_string(lineno) + ": invalid JSON: " + e.what());
        }
        if (!j.is_object() || !j.contains("id")) {
            throw Error("line " + std::to_string(lineno) + ": expected an object with an \"id\" field");
        }
        Record r;
        const auto& id = j["id"];
        if (id.is_string()) {
            r.id = id.get<std::string>();
        } else if (id.is_number_integer()) {
            r.id = std::to_string(id.get<long long>());
        } else {
            throw Error("line " + std::to_string(lineno) + ": \"id\" must be a string or integer");
        }

        const bool has_text = j.contains("text");
        const bool has_words = j.contains("words");
        if (has_text == has_words) {
            throw Error("line " + std::to_string(lineno) + ": exactly one of \"text\" or \"words\" is required");
        }
        if (has_text) {
            if (!j["text"].is_string()) throw Error("line " + std::to_string(lineno) + ": \"text\" must be a string");
            r.content = j["text"].get<std::string>();
        } else {
            if (!j["words"].is_array()) throw Error("line " + std::to_string(lineno) + ": \"words\" must be an array");
            WordList words;
            for (const auto& w : j["words"]) {
                if (!w.is_string()) throw Error("line " + std::to_string(lineno) + ": words must be strings");
                words.push_back(w.get<std::string>());
            }
            r.content = std::move(words);
        }
        out.push_back(std::move(r));
    }
    return out;
}

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus file '" + path + "'");
    return Corpus::ingest(parse_jsonl(in));
}

const DocSet& InvertedIndex::lookup(std::string_view word) const {
    static const DocSet empty;
    auto it = postings_.find(word);
    return it == postings_.end() ? empty : it->second;
}

bool InvertedIndex::contains(std::string_view word) const {
    return postings_.find(word) != postings_.end();
}

InvertedIndex build_index(const Corpus& corpus) {
    std::map<std::string, std::vector<DocIndex>, std::less<>> acc;
    for (DocIndex i = 0; i < corpus.size(); ++i) {
        for (const auto& t : corpus.document(i).tokens) acc[t].push_back(i);
    }
    InvertedIndex idx;
    for (auto& [w, ids] : acc) idx.postings_.emplace(w, DocSet::from_unsorted(std::move(ids)));
    return idx;
}

}  // namespace searchtopo
