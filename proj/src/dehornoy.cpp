#include "veer/dehornoy.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace veer {

namespace {

// Replaces the handle w[j] v w[q] by the conjugated middle, freely cancelling as it goes.
void reduce_handle(std::vector<int>& w, std::size_t j, std::size_t q, std::vector<int>& seg)
{
    const int i = std::abs(w[j]);
    const int e = w[j] > 0 ? 1 : -1;
    seg.clear();
    auto push = [&seg](int x) {
        if (!seg.empty() && seg.back() == -x)
            seg.pop_back();
        else
            seg.push_back(x);
    };
    for (std::size_t p = j + 1; p < q; ++p) {
        const int x = w[p];
        if (std::abs(x) == i + 1) {
            const int d = x > 0 ? 1 : -1;
            push(-e * (i + 1));
            push(d * i);
            push(e * (i + 1));
        } else {
            push(x);
        }
    }
    const std::size_t old_len = q - j + 1;
    if (seg.size() <= old_len) {
        std::copy(seg.begin(), seg.end(), w.begin() + j);
        w.erase(w.begin() + j + seg.size(), w.begin() + q + 1);
    } else {
        std::copy(seg.begin(), seg.begin() + old_len, w.begin() + j);
        w.insert(w.begin() + q + 1, seg.begin() + old_len, seg.end());
    }
}

}  // namespace

ReducedWord handle_reduce(const BraidWord& input, const ReduceLimits& limits)
{
    std::vector<int> w = input.letters();
    const int K = std::max(1, input.strands());
    // snap[p*K + t]: position of the last letter with index t strictly before p.
    std::vector<int> snap;
    std::vector<int> last(K, -1);
    std::vector<int> seg;
    std::int64_t steps = 0;
    std::size_t q = 0;
    while (q < w.size()) {
        if (snap.size() < (q + 1) * K) snap.resize((q + 1) * K * 2);
        std::copy(last.begin(), last.end(), snap.begin() + q * K);
        const int x = w[q];
        const int i = std::abs(x);
        int j = -1;
        for (int t = 1; t <= i; ++t) j = std::max(j, last[t]);
        if (j >= 0 && w[j] == -x) {
            if (++steps > limits.max_steps)
                throw BudgetExceeded("handle reduction exceeded " + std::to_string(limits.max_steps) +
                                     " steps");
            reduce_handle(w, static_cast<std::size_t>(j), q, seg);
            if (static_cast<std::int64_t>(w.size()) > limits.max_length)
                throw BudgetExceeded("handle reduction exceeded word length " +
                                     std::to_string(limits.max_length));
            q = static_cast<std::size_t>(j);
            std::copy(snap.begin() + q * K, snap.begin() + (q + 1) * K, last.begin());
            continue;
        }
        last[i] = static_cast<int>(q);
        ++q;
    }

    ReducedWord r;
    r.steps = steps;
    r.word = BraidWord(input.strands(), w);
    if (w.empty()) return r;
    int lo = K;
    for (int x : w) lo = std::min(lo, std::abs(x));
    r.index = lo;
    for (int x : w) {
        if (std::abs(x) == lo) {
            r.kind = x > 0 ? ReducedWord::Kind::SigmaPositive : ReducedWord::Kind::SigmaNegative;
            break;
        }
    }
    return r;
}

ReducedWord handle_reduce(const BraidWord& w, std::int64_t budget)
{
    ReduceLimits limits;
    limits.max_steps = budget;
    return handle_reduce(w, limits);
}

OrderSign order_sign(const BraidWord& w, const ReduceLimits& limits)
{
    switch (handle_reduce(w, limits).kind) {
    case ReducedWord::Kind::Empty: return OrderSign::Zero;
    case ReducedWord::Kind::SigmaPositive: return OrderSign::Positive;
    default: return OrderSign::Negative;
    }
}

bool less(const BraidWord& a, const BraidWord& b, const ReduceLimits& limits)
{
    return order_sign(product(inverse(a), b), limits) == OrderSign::Positive;
}

bool equals(const BraidWord& a, const BraidWord& b, const ReduceLimits& limits)
{
    return order_sign(product(inverse(a), b), limits) == OrderSign::Zero;
}

int dehornoy_floor(const BraidWord& w, const ReduceLimits& limits)
{
    const int n = w.strands();
    if (n < 2) throw StrandMismatch("the floor is undefined on one strand");
    const BraidWord d2 = delta_sq(n);
    // Delta^{2m} <= w
    auto at_least = [&](long m) {
        BraidWord probe = product(power(d2, static_cast<int>(-m)), w);
        return order_sign(probe, limits) != OrderSign::Negative;
    };
    long lo, hi;
    if (at_least(0)) {
        lo = 0;
        hi = 1;
        while (at_least(hi)) {
            lo = hi;
            hi *= 2;
        }
    } else {
        hi = 0;
        lo = -1;
        while (!at_least(lo)) {
            hi = lo;
            lo *= 2;
        }
    }
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        if (at_least(mid))
            lo = mid;
        else
            hi = mid;
    }
    return static_cast<int>(lo);
}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = g ? num / g : num;
    den_ = g ? den / g : den;
}

std::string Rational::str() const
{
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b)
{
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b)
{
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

bool operator<(const Rational& a, const Rational& b)
{
    return a.num_ * b.den_ < b.num_ * a.den_;
}

FdtcBounds fdtc_bounds(const BraidWord& w, int depth, const ReduceLimits& limits)
{
    if (depth < 1) throw std::invalid_argument("depth must be at least 1");
    FdtcBounds b;
    b.depth = depth;
    b.lower = Rational(dehornoy_floor(power(w, depth), limits), depth);
    b.upper = b.lower + Rational(1, depth);
    return b;
}

const char* to_string(OrderSign s)
{
    switch (s) {
    case OrderSign::Negative: return "negative";
    case OrderSign::Zero: return "zero";
    default: return "positive";
    }
}

}  // namespace veer
