#include "doctest.h"
#include "oracle.hpp"
#include "veer/dehornoy.hpp"
#include "veer/errors.hpp"
#include "veer/grid.hpp"

using namespace veer;

namespace {

const GridDiagram kUnknot{2, {0, 1}, {1, 0}};

std::vector<BraidWord> twist_family(int k)
{
    std::vector<int> l{1, 2, 2, 1};
    for (int i = 0; i < k; ++i) l.push_back(-2);
    return {BraidWord(3, l)};
}

}  // namespace

TEST_SUITE("grid diagrams")
{
    TEST_CASE("unknot grid")
    {
        CHECK(grid_to_braid(kUnknot) == BraidWord(1));
        CHECK(braid_to_grid(BraidWord(1)) == kUnknot);
        CHECK(to_json(kUnknot) == R"({"n":2,"X":[0,1],"O":[1,0]})");
    }

    TEST_CASE("round trips on small words")
    {
        for (const BraidWord& w : {BraidWord(2, {1}), BraidWord(2, {1, 1, 1}), BraidWord(3, {1, -2}), BraidWord(2, {-1})})
            for (GridLayout layout : {GridLayout::Standard, GridLayout::Compact})
                CHECK(grid_to_braid(braid_to_grid(w, layout)) == w);
        CHECK(grid_to_braid(braid_to_grid(BraidWord(2, {1}))) == BraidWord(2, {1}));
    }

    TEST_CASE("trefoil grid")
    {
        const GridDiagram g = braid_to_grid(BraidWord(2, {1, 1, 1}));
        CHECK(g.n == 5);
        CHECK(grid_components(g) == 1);
        CHECK(grid_writhe(g) == 3);
        CHECK(wrapped_columns(g) == 2);
    }

    TEST_CASE("model family grids")
    {
        for (int k = 1; k <= 8; ++k)
            for (const BraidWord& w : twist_family(k)) {
                const GridDiagram g = braid_to_grid(w);
                validate(g);
                CHECK(grid_to_braid(g) == w);
            }
        for (int n = 3; n <= 6; ++n)
            for (int k = 1; k <= 4; ++k) {
                const GridDiagram g = helix_grid(k, n);
                validate(g);
                CHECK(grid_to_braid(g) == model_braid(k, n));
                CHECK(g.n == (n - 1) * (k + n - 1));
                CHECK(is_model_word(model_braid(k, n)));
            }
        int k = 0;
        CHECK(is_model_word(model_braid(3, 4), &k));
        CHECK(k == 3);
        CHECK_FALSE(is_model_word(BraidWord(3, {1, 2, 2, 1})));
    }

    TEST_CASE("validation")
    {
        CHECK_THROWS_AS(validate(GridDiagram{2, {0, 1}, {0, 1}}), InvalidGrid);
        CHECK_THROWS_AS(validate(GridDiagram{2, {0, 0}, {1, 1}}), InvalidGrid);
        CHECK_THROWS_AS(validate(GridDiagram{1, {0}, {0}}), InvalidGrid);
        CHECK_THROWS_AS(validate(GridDiagram{3, {0, 1}, {1, 0}}), InvalidGrid);
        CHECK_THROWS_AS(grid_to_braid(GridDiagram{2, {0, 1}, {0, 1}}), InvalidGrid);
    }

    TEST_CASE("json")
    {
        CHECK(from_json(R"({"n":2,"X":[0,1],"O":[1,0]})") == kUnknot);
        CHECK(from_json(" { \"O\": [1,0], \"X\": [0,1], \"n\": 2 } ") == kUnknot);
        CHECK_THROWS_AS(from_json(R"({"n":3,"X":[0,0,1],"O":[1,2,0]})"), InvalidGrid);
        CHECK_THROWS_AS(from_json(R"({"n":2,"X":[0,1]})"), MalformedJson);
        CHECK_THROWS_AS(from_json(R"({"n":2,"X":[0,1],"O":"x"})"), MalformedJson);
        CHECK_THROWS_AS(from_json("not json"), MalformedJson);
        CHECK_THROWS_AS(from_json(R"({"n":2,"X":[0,1],"O":[1,0.5]})"), MalformedJson);
    }

    TEST_CASE("ascii")
    {
        CHECK(render_ascii(kUnknot) == "OX\nXO\n");
    }

    TEST_CASE("translation")
    {
        const GridDiagram g = braid_to_grid(BraidWord(3, {1, -2, 1}));
        const GridDiagram t = translate(g, 2, 3);
        validate(t);
        CHECK(translate(t, -2, -3) == g);
        CHECK(grid_components(t) == grid_components(g));
    }
}

TEST_SUITE("grid properties")
{
    TEST_CASE("letter-exact round trip")
    {
        std::mt19937_64 rng(31);
        for (int t = 0; t < 3000; ++t) {
            const BraidWord w = oracle::random_word(rng, 1 + t % 5, 10);
            for (GridLayout layout : {GridLayout::Standard, GridLayout::Compact}) {
                const GridDiagram g = braid_to_grid(w, layout);
                validate(g);
                CHECK(grid_to_braid(g) == free_reduce(w));
                CHECK(grid_writhe(g) == exponent_sum(w));
                CHECK(grid_components(g) == component_count(w));
                CHECK(grid_components(g) == oracle::naive_components(g));
                CHECK(wrapped_columns(g) == w.strands());
                CHECK(grid_writhe(g) - wrapped_columns(g) == self_linking(w));
            }
        }
    }

    TEST_CASE("standard layout size")
    {
        std::mt19937_64 rng(32);
        for (int t = 0; t < 500; ++t) {
            const BraidWord w = oracle::random_reduced_word(rng, 1 + t % 5, 10);
            if (is_model_word(w)) continue;
            const GridDiagram g = braid_to_grid(w);
            CHECK(g.n >= w.strands() + static_cast<int>(w.length()));
            CHECK(braid_to_grid(w, GridLayout::Compact).n <= g.n);
        }
    }

    TEST_CASE("random grids read back consistently")
    {
        std::mt19937_64 rng(33);
        for (int t = 0; t < 1500; ++t) {
            const GridDiagram g = oracle::random_grid(rng, 2 + t % 8);
            const BraidWord w = grid_to_braid(g);
            int above = 0;
            for (int c = 0; c < g.n; ++c) above += g.X[c] > g.O[c];
            CHECK(w.strands() == above);
            CHECK(component_count(w) == grid_components(g));
            CHECK(exponent_sum(w) == grid_writhe(g));
            CHECK(from_json(to_json(g)) == g);
        }
    }
}
