#include "veer/rv.hpp"

#include <cstdlib>
#include <functional>

namespace veer {

bool sigma1_negative_witness(const BraidWord& w, const ReduceLimits& limits)
{
    const ReducedWord r = handle_reduce(w, limits);
    return r.kind == ReducedWord::Kind::SigmaNegative && r.index == 1;
}

std::optional<BraidWord> nonrv_search(const BraidWord& w, int radius, const ReduceLimits& limits)
{
    if (radius < 0) throw std::invalid_argument("radius must be non-negative");
    const int m = w.strands();
    std::vector<int> alphabet;
    for (int e = -(m - 1); e <= m - 1; ++e)
        if (e != 0) alphabet.push_back(e);

    std::vector<int> g;
    std::optional<BraidWord> found;
    std::function<bool(int)> extend = [&](int len) {
        if (static_cast<int>(g.size()) == len) {
            const BraidWord gamma(m, g);
            if (sigma1_negative_witness(conjugate(w, gamma), limits)) {
                found = gamma;
                return true;
            }
            return false;
        }
        for (int e : alphabet) {
            if (!g.empty() && g.back() == -e) continue;
            g.push_back(e);
            const bool hit = extend(len);
            g.pop_back();
            if (hit) return true;
        }
        return false;
    };
    for (int len = 0; len <= radius; ++len)
        if (extend(len)) return found;
    return std::nullopt;
}

void validate(const MurasugiForm& f)
{
    switch (f.variant) {
    case MurasugiForm::Variant::A: {
        bool some = false;
        for (int x : f.a) {
            if (x < 0) throw std::invalid_argument("variant A exponents must be non-negative");
            some = some || x > 0;
        }
        if (!some) throw std::invalid_argument("variant A needs a positive exponent");
        break;
    }
    case MurasugiForm::Variant::B: break;
    case MurasugiForm::Variant::C:
        if (f.m > -1 || f.m < -3) throw std::invalid_argument("variant C exponent must be -1, -2 or -3");
        break;
    }
}

BraidWord murasugi_word(const MurasugiForm& f)
{
    validate(f);
    std::vector<int> l;
    const std::vector<int> h = f.d >= 0 ? std::vector<int>{1, 2, 1, 2, 1, 2} : std::vector<int>{-2, -1, -2, -1, -2, -1};
    for (int i = 0; i < std::abs(f.d); ++i) l.insert(l.end(), h.begin(), h.end());
    auto repeat = [&l](int letter, int times) {
        for (int i = 0; i < std::abs(times); ++i) l.push_back(times > 0 ? letter : -letter);
    };
    switch (f.variant) {
    case MurasugiForm::Variant::A:
        for (int x : f.a) {
            l.push_back(1);
            repeat(2, -x);
        }
        break;
    case MurasugiForm::Variant::B: repeat(2, f.m); break;
    case MurasugiForm::Variant::C:
        repeat(1, f.m);
        l.push_back(-2);
        break;
    }
    return BraidWord(3, std::move(l));
}

RvVerdict murasugi_classify_rv(const MurasugiForm& f)
{
    validate(f);
    bool rv = f.d > 0;
    if (f.variant == MurasugiForm::Variant::B && f.d == 0 && f.m >= 0) rv = true;
    RvVerdict v;
    v.status = rv ? RvVerdict::Status::RightVeering : RvVerdict::Status::NonRightVeering;
    v.certificate = RvVerdict::Certificate::NormalFormClass;
    return v;
}

namespace {

RvVerdict nonrv(const BraidWord& gamma)
{
    RvVerdict v;
    v.status = RvVerdict::Status::NonRightVeering;
    if (gamma.empty()) {
        v.certificate = RvVerdict::Certificate::Sigma1NegativeWord;
    } else {
        v.certificate = RvVerdict::Certificate::ConjugateWitness;
        v.witness = gamma;
    }
    return v;
}

RvVerdict rightveering(RvVerdict::Certificate c)
{
    RvVerdict v;
    v.status = RvVerdict::Status::RightVeering;
    v.certificate = c;
    return v;
}

}  // namespace

RvVerdict rv_status(const BraidWord& w, const SearchBudget& budget)
{
    try {
        if (is_positive_word(w)) return rightveering(RvVerdict::Certificate::PositiveWord);
        if (w.strands() >= 2 && dehornoy_floor(w, budget.reduce) >= 1)
            return rightveering(RvVerdict::Certificate::FloorAtLeastOne);
        if (w.strands() == 3) {
            const BraidTheta t = theta_of_braid(w, budget.theta);
            if (t.result.status == NonvanishingResult::Status::Nonzero)
                return rightveering(RvVerdict::Certificate::ThreeBraidTheta);
            if (t.result.status == NonvanishingResult::Status::Zero) {
                if (const auto g = nonrv_search(w, std::max(budget.radius, budget.escalation_radius), budget.reduce))
                    return nonrv(*g);
                return RvVerdict{};
            }
        }
        if (const auto g = nonrv_search(w, budget.radius, budget.reduce)) return nonrv(*g);
    } catch (const BudgetExceeded&) {
    }
    return RvVerdict{};
}

QuasipositiveVerdict quasipositive_verdict(const QuasipositiveForm& q)
{
    return {rightveering(RvVerdict::Certificate::QuasipositiveInput), expand(q)};
}

const char* to_string(RvVerdict::Status s)
{
    switch (s) {
    case RvVerdict::Status::RightVeering: return "right-veering";
    case RvVerdict::Status::NonRightVeering: return "non-right-veering";
    default: return "unknown";
    }
}

const char* to_string(RvVerdict::Certificate c)
{
    switch (c) {
    case RvVerdict::Certificate::PositiveWord: return "positive-word";
    case RvVerdict::Certificate::QuasipositiveInput: return "quasipositive-input";
    case RvVerdict::Certificate::FloorAtLeastOne: return "floor-at-least-one";
    case RvVerdict::Certificate::ThreeBraidTheta: return "three-braid-theta";
    case RvVerdict::Certificate::NormalFormClass: return "normal-form-class";
    case RvVerdict::Certificate::Sigma1NegativeWord: return "sigma1-negative-word";
    case RvVerdict::Certificate::ConjugateWitness: return "conjugate-witness";
    default: return "budget";
    }
}

}  // namespace veer
