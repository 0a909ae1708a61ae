#pragma once

#include <cstdint>
#include <string>

#include "veer/braid.hpp"

namespace veer {

enum class OrderSign { Negative, Zero, Positive };

struct ReducedWord {
    enum class Kind { Empty, SigmaPositive, SigmaNegative };
    BraidWord word;
    Kind kind = Kind::Empty;
    int index = 0;  // minimal generator index present, 0 when empty
    std::int64_t steps = 0;
};

struct ReduceLimits {
    std::int64_t max_steps = 1'000'000;
    std::int64_t max_length = 1'000'000;
};

ReducedWord handle_reduce(const BraidWord& w, const ReduceLimits& limits = {});
ReducedWord handle_reduce(const BraidWord& w, std::int64_t budget);
OrderSign order_sign(const BraidWord& w, const ReduceLimits& limits = {});
bool less(const BraidWord& a, const BraidWord& b, const ReduceLimits& limits = {});
bool equals(const BraidWord& a, const BraidWord& b, const ReduceLimits& limits = {});

int dehornoy_floor(const BraidWord& w, const ReduceLimits& limits = {});

class Rational {
public:
    Rational(std::int64_t num = 0, std::int64_t den = 1);
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

private:
    std::int64_t num_;
    std::int64_t den_;
};

struct FdtcBounds {
    Rational lower;
    Rational upper;
    int depth = 1;
};

FdtcBounds fdtc_bounds(const BraidWord& w, int depth, const ReduceLimits& limits = {});

const char* to_string(OrderSign s);

}  // namespace veer
