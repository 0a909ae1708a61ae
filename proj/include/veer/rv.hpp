#pragma once

#include <optional>
#include <string>
#include <vector>

#include "veer/dehornoy.hpp"
#include "veer/theta.hpp"

namespace veer {

struct MurasugiForm {
    enum class Variant { A, B, C };
    Variant variant = Variant::B;
    int d = 0;
    std::vector<int> a;  // variant A exponents
    int m = 0;           // variant B or C exponent
};

struct RvVerdict {
    enum class Status { RightVeering, NonRightVeering, Unknown };
    enum class Certificate {
        PositiveWord,
        QuasipositiveInput,
        FloorAtLeastOne,
        ThreeBraidTheta,
        NormalFormClass,
        Sigma1NegativeWord,
        ConjugateWitness,
        Budget,
    };
    Status status = Status::Unknown;
    Certificate certificate = Certificate::Budget;
    std::optional<BraidWord> witness;
};

struct SearchBudget {
    int radius = 4;
    int escalation_radius = 7;
    ReduceLimits reduce;
    ThetaOptions theta;
};

bool sigma1_negative_witness(const BraidWord& w, const ReduceLimits& limits = {});
// Shortlex-first conjugator g (letters ordered by integer value) with g w g^{-1} sigma_1-negative.
std::optional<BraidWord> nonrv_search(const BraidWord& w, int radius, const ReduceLimits& limits = {});

void validate(const MurasugiForm& f);
BraidWord murasugi_word(const MurasugiForm& f);
RvVerdict murasugi_classify_rv(const MurasugiForm& f);

RvVerdict rv_status(const BraidWord& w, const SearchBudget& budget = {});

struct QuasipositiveVerdict {
    RvVerdict verdict;
    BraidWord word;
};
QuasipositiveVerdict quasipositive_verdict(const QuasipositiveForm& q);

const char* to_string(RvVerdict::Status s);
const char* to_string(RvVerdict::Certificate c);

}  // namespace veer
