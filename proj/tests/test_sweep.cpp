#include "doctest.h"
#include "veer/dehornoy.hpp"
#include "veer/rv.hpp"
#include "veer/shorten.hpp"
#include "veer/sweep.hpp"

using namespace veer;

TEST_SUITE("sampling")
{
    TEST_CASE("random words are reproducible from the seed")
    {
        std::mt19937_64 a(5), b(5);
        for (int t = 0; t < 200; ++t) CHECK(random_word(a, 4, 8) == random_word(b, 4, 8));
        std::mt19937_64 c(0);
        // First draws of mt19937_64 seeded with 0, reduced with %, are fixed forever.
        const BraidWord first = random_word(c, 4, 8);
        std::mt19937_64 d(0);
        const std::uint64_t len = d() % 9;
        CHECK(first.length() == len);
    }

    TEST_CASE("floor samples")
    {
        const auto a = sample_floor_words(3, 20), b = sample_floor_words(3, 20);
        CHECK(a == b);
        REQUIRE(a.size() == 20);
        for (const BraidWord& w : a) {
            CHECK(w.strands() == 4);
            CHECK(w.length() <= 8);
            CHECK(dehornoy_floor(w) >= 1);
        }
    }

    TEST_CASE("sigma_1-negative samples")
    {
        const auto a = sample_sigma1_negative_words(4, 20);
        CHECK(a == sample_sigma1_negative_words(4, 20));
        for (const BraidWord& w : a) {
            CHECK(sigma1_negative_witness(w));
            CHECK(braid_to_grid(w, GridLayout::Compact).n <= 9);
        }
    }

    TEST_CASE("negative stabilization samples")
    {
        for (const BraidWord& w : sample_negative_stabilizations(5, 20)) {
            CHECK(w.letters().back() == -(w.strands() - 1));
            CHECK(braid_to_grid(w, GridLayout::Compact).n <= 9);
        }
    }

    TEST_CASE("conjugate shortening")
    {
        std::mt19937_64 rng(6);
        for (int t = 0; t < 40; ++t) {
            const BraidWord w = random_word(rng, 3, 10);
            const Shortened s = shorten_conjugate(w, 500);
            CHECK(equals(s.word, conjugate(w, s.conjugator)));
            CHECK(s.grid_size == braid_to_grid(s.word, GridLayout::Compact).n);
            CHECK(s.grid_size <= braid_to_grid(w, GridLayout::Compact).n);
        }
    }
}
