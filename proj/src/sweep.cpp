#include "veer/sweep.hpp"

#include <chrono>

namespace veer {

BraidWord random_word(std::mt19937_64& rng, int strands, int max_length)
{
    std::vector<int> l;
    if (strands >= 2) {
        const int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_length + 1));
        for (int i = 0; i < len; ++i) {
            int e = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(strands - 1));
            l.push_back(rng() % 2 ? -e : e);
        }
    }
    return BraidWord(strands, std::move(l));
}

std::string describe(const MurasugiForm& f)
{
    std::string s;
    switch (f.variant) {
    case MurasugiForm::Variant::A:
        s = "A(d=" + std::to_string(f.d) + ", a=[";
        for (std::size_t i = 0; i < f.a.size(); ++i) s += (i ? "," : "") + std::to_string(f.a[i]);
        return s + "])";
    case MurasugiForm::Variant::B: return "B(d=" + std::to_string(f.d) + ", m=" + std::to_string(f.m) + ")";
    default: return "C(d=" + std::to_string(f.d) + ", m=" + std::to_string(f.m) + ")";
    }
}

std::vector<MurasugiForm> murasugi_sweep_forms()
{
    std::vector<MurasugiForm> out;
    for (int d = -1; d <= 1; ++d) {
        for (int a1 = 0; a1 <= 2; ++a1) {
            if (a1 > 0) out.push_back({MurasugiForm::Variant::A, d, {a1}, 0});
            for (int a2 = 0; a2 <= 2; ++a2)
                if (a1 + a2 > 0) out.push_back({MurasugiForm::Variant::A, d, {a1, a2}, 0});
        }
        for (int m = -3; m <= 3; ++m) out.push_back({MurasugiForm::Variant::B, d, {}, m});
        for (int m = -1; m >= -3; --m) out.push_back({MurasugiForm::Variant::C, d, {}, m});
    }
    return out;
}

MurasugiCase run_murasugi_case(const MurasugiForm& f, const ThetaOptions& opt)
{
    const auto t0 = std::chrono::steady_clock::now();
    MurasugiCase c;
    c.form = f;
    c.word = murasugi_word(f);
    c.classified = murasugi_classify_rv(f);
    c.theta = theta_of_braid(c.word, opt);
    const bool rv = c.classified.status == RvVerdict::Status::RightVeering;
    const auto st = c.theta.result.status;
    c.agrees = st != NonvanishingResult::Status::Aborted && rv == (st == NonvanishingResult::Status::Nonzero);
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

std::vector<BraidWord> sample_floor_words(std::uint64_t seed, int count, int strands, int max_length)
{
    std::mt19937_64 rng(seed);
    std::vector<BraidWord> out;
    while (static_cast<int>(out.size()) < count) {
        const BraidWord w = random_word(rng, strands, max_length);
        if (dehornoy_floor(w) >= 1) out.push_back(w);
    }
    return out;
}

std::vector<BraidWord> sample_sigma1_negative_words(std::uint64_t seed, int count, int max_grid)
{
    std::mt19937_64 rng(seed);
    std::vector<BraidWord> out;
    while (static_cast<int>(out.size()) < count) {
        const int strands = 2 + static_cast<int>(rng() % 3);
        const BraidWord w = free_reduce(random_word(rng, strands, 6));
        if (!sigma1_negative_witness(w)) continue;
        if (braid_to_grid(w, GridLayout::Compact).n > max_grid) continue;
        out.push_back(w);
    }
    return out;
}

std::vector<BraidWord> sample_negative_stabilizations(std::uint64_t seed, int count, int max_grid)
{
    std::mt19937_64 rng(seed);
    std::vector<BraidWord> out;
    while (static_cast<int>(out.size()) < count) {
        const int strands = 1 + static_cast<int>(rng() % 3);
        const BraidWord w = markov_stab_neg(free_reduce(random_word(rng, strands, 5)));
        if (braid_to_grid(w, GridLayout::Compact).n > max_grid) continue;
        out.push_back(w);
    }
    return out;
}

}  // namespace veer
