#include "veer/braid.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

namespace veer {

namespace {

void check_letters(int strands, const std::vector<int>& letters)
{
    if (strands < 1)
        throw MalformedWord("strand count must be at least 1");
    for (int e : letters) {
        if (e == 0 || std::abs(e) >= strands)
            throw MalformedWord("letter " + std::to_string(e) + " out of range for " +
                                std::to_string(strands) + " strands");
    }
}

void require_same(const BraidWord& a, const BraidWord& b)
{
    if (a.strands() != b.strands())
        throw StrandMismatch("strand counts differ: " + std::to_string(a.strands()) + " vs " +
                             std::to_string(b.strands()));
}

std::vector<int> reduce_letters(const std::vector<int>& in)
{
    std::vector<int> out;
    out.reserve(in.size());
    for (int e : in) {
        if (!out.empty() && out.back() == -e)
            out.pop_back();
        else
            out.push_back(e);
    }
    return out;
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters))
{
    check_letters(strands_, letters_);
}

Permutation Permutation::identity(int n)
{
    Permutation p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

bool Permutation::is_identity() const
{
    for (int i = 0; i < size(); ++i)
        if (images[i] != i) return false;
    return true;
}

int Permutation::cycle_count() const
{
    std::vector<char> seen(images.size(), 0);
    int cycles = 0;
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = images[j]) seen[j] = 1;
    }
    return cycles;
}

Permutation Permutation::inverse() const
{
    Permutation p;
    p.images.resize(images.size());
    for (int i = 0; i < size(); ++i) p.images[images[i]] = i;
    return p;
}

Permutation Permutation::operator*(const Permutation& b) const
{
    Permutation p;
    p.images.resize(images.size());
    for (int i = 0; i < size(); ++i) p.images[i] = b.images[images[i]];
    return p;
}

BraidWord parse_braid(std::string_view text, int strands)
{
    std::vector<int> letters;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (i < text.size()) {
        if (is_sep(text[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j])) ++j;
        std::string_view tok = text.substr(i, j - i);
        if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
        int value = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || end != tok.data() + tok.size() || tok.empty())
            throw MalformedWord("not an integer: '" + std::string(text.substr(i, j - i)) + "'");
        if (value == 0) throw MalformedWord("zero is not a generator");
        letters.push_back(value);
        i = j;
    }
    return BraidWord(strands, std::move(letters));
}

std::string format_letters(const BraidWord& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w.letters()[i]);
    }
    return s;
}

BraidWord free_reduce(const BraidWord& w)
{
    return BraidWord(w.strands(), reduce_letters(w.letters()));
}

BraidWord product(const BraidWord& a, const BraidWord& b)
{
    require_same(a, b);
    std::vector<int> l = a.letters();
    l.insert(l.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.strands(), reduce_letters(l));
}

BraidWord inverse(const BraidWord& w)
{
    std::vector<int> l(w.letters().rbegin(), w.letters().rend());
    for (int& e : l) e = -e;
    return BraidWord(w.strands(), std::move(l));
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g)
{
    require_same(w, g);
    std::vector<int> l = g.letters();
    l.insert(l.end(), w.letters().begin(), w.letters().end());
    for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it) l.push_back(-*it);
    return BraidWord(w.strands(), reduce_letters(l));
}

BraidWord power(const BraidWord& w, int k)
{
    const BraidWord base = k >= 0 ? w : inverse(w);
    std::vector<int> l;
    for (int i = 0; i < std::abs(k); ++i)
        l.insert(l.end(), base.letters().begin(), base.letters().end());
    return BraidWord(w.strands(), std::move(l));
}

BraidWord embed(const BraidWord& w, int strands)
{
    if (strands < w.strands())
        throw StrandMismatch("cannot embed into fewer strands");
    return BraidWord(strands, w.letters());
}

Permutation permutation(const BraidWord& w)
{
    // pos[s] is the current position of the strand that started at s.
    std::vector<int> at(w.strands());
    std::iota(at.begin(), at.end(), 0);
    std::vector<int> pos = at;
    for (int e : w.letters()) {
        int i = std::abs(e) - 1;
        std::swap(at[i], at[i + 1]);
        pos[at[i]] = i;
        pos[at[i + 1]] = i + 1;
    }
    return Permutation{pos};
}

int component_count(const BraidWord& w)
{
    return permutation(w).cycle_count();
}

int exponent_sum(const BraidWord& w)
{
    int s = 0;
    for (int e : w.letters()) s += e > 0 ? 1 : -1;
    return s;
}

int self_linking(const BraidWord& w)
{
    return exponent_sum(w) - w.strands();
}

bool is_positive_word(const BraidWord& w)
{
    for (int e : w.letters())
        if (e < 0) return false;
    return true;
}

BraidWord markov_stab_pos(const BraidWord& w)
{
    std::vector<int> l = w.letters();
    l.push_back(w.strands());
    return BraidWord(w.strands() + 1, std::move(l));
}

BraidWord markov_stab_neg(const BraidWord& w)
{
    std::vector<int> l = w.letters();
    l.push_back(-w.strands());
    return BraidWord(w.strands() + 1, std::move(l));
}

BraidWord stabilize_along(const BraidWord& w, const BraidWord& gamma, int sign)
{
    if (gamma.strands() != w.strands() + 1)
        throw StrandMismatch("arc word must live on one more strand than the braid");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("stabilization sign must be +1 or -1");
    const int m = w.strands();
    BraidWord twist(m + 1, {sign * m});
    return product(embed(w, m + 1), conjugate(twist, gamma));
}

BraidWord delta(int n)
{
    if (n < 1) throw MalformedWord("strand count must be at least 1");
    std::vector<int> l;
    for (int top = n - 1; top >= 1; --top)
        for (int i = 1; i <= top; ++i) l.push_back(i);
    return BraidWord(n, std::move(l));
}

BraidWord delta_sq(int n)
{
    return power(delta(n), 2);
}

BraidWord full_twist_3()
{
    return BraidWord(3, {1, 2, 1, 2, 1, 2});
}

BraidWord model_braid(int k, int n)
{
    if (n < 2) throw MalformedWord("model braid needs at least 2 strands");
    if (k < 0) throw std::invalid_argument("model braid exponent must be non-negative");
    std::vector<int> l;
    for (int i = 1; i <= n - 1; ++i) l.push_back(i);
    for (int i = n - 1; i >= 1; --i) l.push_back(i);
    for (int r = 0; r < k; ++r)
        for (int i = n - 1; i >= 2; --i) l.push_back(-i);
    return BraidWord(n, std::move(l));
}

BraidWord expand(const QuasipositiveForm& q)
{
    std::vector<int> l;
    for (const auto& [w, i] : q.factors) {
        if (w.strands() != q.strands)
            throw StrandMismatch("factor conjugator has the wrong strand count");
        if (i < 1 || i >= q.strands)
            throw MalformedWord("factor generator out of range");
        l.insert(l.end(), w.letters().begin(), w.letters().end());
        l.push_back(i);
        for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) l.push_back(-*it);
    }
    return BraidWord(q.strands, std::move(l));
}

}  // namespace veer
