#include "searchtopo/fixtures.hpp"

namespace searchtopo::fixtures {

Corpus chain3() {
    return Corpus::ingest({{"d1", std::string("a")}, {"d2", std::string("a b")}, {"d3", std::string("a b c")}});
}

Corpus sample5() {
    return Corpus::ingest({
        {"0", WordList{"machine", "learning", "basics"}},
        {"1", WordList{"deep", "learning", "neural", "networks"}},
        {"2", WordList{"machine", "learning", "advanced"}},
        {"3", WordList{"statistics", "data", "analysis"}},
        {"4", WordList{"science", "data", "visualization"}},
    });
}

WordSet big_phrase_words() {
    return {"big", "big data", "big data analytics", "big movie", "big movie review", "big architecture",
            "big architecture project"};
}

Corpus big_phrases() {
    std::vector<Record> records;
    int n = 1;
    for (const char* text : {"Big", "Big Data", "Big Data Analytics", "Big Movie", "Big Movie Review", "Big Architecture",
                             "Big Architecture Project"}) {
        records.push_back({"b" + std::to_string(n++), std::string(text)});
    }
    return Corpus::ingest(std::move(records));
}

}  // namespace searchtopo::fixtures
