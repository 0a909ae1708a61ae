#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "veer/rv.hpp"

namespace veer {

// All sweeps draw from std::mt19937_64 and reduce with operator%, so a seed gives the
// same words on every platform.
BraidWord random_word(std::mt19937_64& rng, int strands, int max_length);

std::string describe(const MurasugiForm& f);

// d in {-1,0,1}; B: |m| <= 3; C: m in {-1,-2,-3}; A: vectors of length 1 or 2, entries <= 2.
std::vector<MurasugiForm> murasugi_sweep_forms();

struct MurasugiCase {
    MurasugiForm form;
    BraidWord word;
    RvVerdict classified;
    BraidTheta theta;
    bool agrees = false;
    double seconds = 0;
};
MurasugiCase run_murasugi_case(const MurasugiForm& f, const ThetaOptions& opt = {});

// Random words of length <= max_length with dehornoy_floor >= 1.
std::vector<BraidWord> sample_floor_words(std::uint64_t seed, int count, int strands = 4, int max_length = 8);
// Random words on 2..4 strands certified sigma_1-negative, with compact grid size <= max_grid.
std::vector<BraidWord> sample_sigma1_negative_words(std::uint64_t seed, int count, int max_grid = 9);
// Negative Markov stabilizations of random words, with compact grid size <= max_grid.
std::vector<BraidWord> sample_negative_stabilizations(std::uint64_t seed, int count, int max_grid = 9);

}  // namespace veer
