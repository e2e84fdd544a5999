#pragma once

#include "searchtopo/search.hpp"

namespace searchtopo::fixtures {

/// d1 "a", d2 "a b", d3 "a b c": a three-word strict chain.
Corpus chain3();

/// Five word lists 0..4 ("machine learning basics" ... "science data visualization")
/// used by the anomaly golden trace.
Corpus sample5();

/// Seven documents, one per phrase: big, big data, big data analytics, big movie,
/// big movie review, big architecture, big architecture project.
Corpus big_phrases();

/// The seven phrases above, as keywords.
WordSet big_phrase_words();

}  // namespace searchtopo::fixtures
