#pragma once

#include <optional>

#include "veer/gridhf.hpp"

namespace veer {

struct ThetaOptions {
    bool shorten = true;
    bool recognize_model = true;
    int shorten_expansions = 4000;
    SolverLimits limits;
};

struct BraidTheta {
    NonvanishingResult result;
    BraidWord word;        // the word whose grid was used
    BraidWord conjugator;  // word = conjugator * input * conjugator^{-1}
    GridDiagram grid;
    bool helix = false;
};

// k such that w equals model_braid(k, strands), k >= 1.
std::optional<int> model_parameter(const BraidWord& w);

BraidTheta theta_of_braid(const BraidWord& w, const ThetaOptions& opt = {});

}  // namespace veer
