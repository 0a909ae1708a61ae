#pragma once

#include "veer/braid.hpp"

namespace veer {

// word = conjugator * input * conjugator^{-1}
struct ConjugateWord {
    BraidWord word;
    BraidWord conjugator;
    int grid_size = 0;  // compact layout
};

// The conjugate with the smallest compact grid found, plus every conjugate expanded on the
// way in the order the search visited them (cheapest first).
struct Shortened : ConjugateWord {
    std::vector<ConjugateWord> explored;
};

Shortened shorten_conjugate(const BraidWord& w, int max_expansions = 4000);

}  // namespace veer
