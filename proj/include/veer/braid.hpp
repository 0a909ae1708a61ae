#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "veer/errors.hpp"

namespace veer {

// Letter e > 0 is sigma_e, e < 0 is sigma_{-e}^{-1}; generator indices are 1-based.
class BraidWord {
public:
    BraidWord() = default;
    explicit BraidWord(int strands, std::vector<int> letters = {});

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    bool operator==(const BraidWord&) const = default;

private:
    int strands_ = 1;
    std::vector<int> letters_;
};

// images[i] is the top position reached by the strand starting at bottom position i.
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int n);
    int size() const { return static_cast<int>(images.size()); }
    bool is_identity() const;
    int cycle_count() const;
    Permutation inverse() const;
    // (a * b) applies a first, then b.
    Permutation operator*(const Permutation& b) const;
    bool operator==(const Permutation&) const = default;
};

struct QuasipositiveForm {
    int strands = 1;
    std::vector<std::pair<BraidWord, int>> factors;
};

BraidWord parse_braid(std::string_view text, int strands);
std::string format_letters(const BraidWord& w);

BraidWord free_reduce(const BraidWord& w);
BraidWord product(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);
BraidWord conjugate(const BraidWord& w, const BraidWord& g);
BraidWord power(const BraidWord& w, int k);
BraidWord embed(const BraidWord& w, int strands);

Permutation permutation(const BraidWord& w);
int component_count(const BraidWord& w);
int exponent_sum(const BraidWord& w);
int self_linking(const BraidWord& w);
bool is_positive_word(const BraidWord& w);

BraidWord markov_stab_pos(const BraidWord& w);
BraidWord markov_stab_neg(const BraidWord& w);
BraidWord stabilize_along(const BraidWord& w, const BraidWord& gamma, int sign);

BraidWord delta(int n);
BraidWord delta_sq(int n);
BraidWord full_twist_3();
BraidWord model_braid(int k, int n);

BraidWord expand(const QuasipositiveForm& q);

}  // namespace veer
