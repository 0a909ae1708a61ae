#include "doctest.h"
#include "oracle.hpp"
#include "veer/errors.hpp"
#include "veer/rv.hpp"
#include "veer/sweep.hpp"

using namespace veer;

namespace {

using St = RvVerdict::Status;
using Cert = RvVerdict::Certificate;

MurasugiForm form_a(int d, std::vector<int> a) { return {MurasugiForm::Variant::A, d, std::move(a), 0}; }
MurasugiForm form_b(int d, int m) { return {MurasugiForm::Variant::B, d, {}, m}; }
MurasugiForm form_c(int d, int m) { return {MurasugiForm::Variant::C, d, {}, m}; }

BraidWord cat(const BraidWord& a, const BraidWord& b)
{
    auto l = a.letters();
    l.insert(l.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.strands(), l);
}

bool consistent(const RvVerdict& v)
{
    switch (v.status) {
    case St::NonRightVeering: return v.certificate == Cert::Sigma1NegativeWord || v.certificate == Cert::ConjugateWitness;
    case St::RightVeering:
        return v.certificate == Cert::PositiveWord || v.certificate == Cert::QuasipositiveInput ||
               v.certificate == Cert::FloorAtLeastOne || v.certificate == Cert::ThreeBraidTheta ||
               v.certificate == Cert::NormalFormClass;
    default: return v.certificate == Cert::Budget;
    }
}

}  // namespace

TEST_SUITE("right-veering")
{
    TEST_CASE("word-level witness")
    {
        CHECK(sigma1_negative_witness(BraidWord(3, {2, -1})));
        CHECK_FALSE(sigma1_negative_witness(BraidWord(3, {1, 2})));
        CHECK_FALSE(sigma1_negative_witness(BraidWord(2, {-1, 1})));
    }

    TEST_CASE("conjugate search")
    {
        const auto id = nonrv_search(BraidWord(3, {-1, 2}), 0);
        REQUIRE(id.has_value());
        CHECK(id->empty());
        CHECK_FALSE(nonrv_search(BraidWord(2, {1}), 4).has_value());
        // sigma_1 sigma_2^-2 is sigma_1-positive as written; its conjugate by sigma_1 reduces to
        // sigma_2^-1 sigma_1^-1 sigma_2 sigma_1^-1 sigma_2.
        const BraidWord w(3, {1, -2, -2});
        CHECK_FALSE(sigma1_negative_witness(w));
        CHECK_FALSE(nonrv_search(w, 0).has_value());
        const auto g = nonrv_search(w, 1);
        REQUIRE(g.has_value());
        CHECK(*g == BraidWord(3, {1}));
        CHECK(sigma1_negative_witness(conjugate(w, *g)));
        CHECK_THROWS(nonrv_search(w, -1));
    }

    TEST_CASE("normal form words")
    {
        std::vector<int> b = full_twist_3().letters();
        for (int i = 0; i < 6; ++i) b.push_back(-2);
        CHECK(murasugi_word(form_b(1, -6)) == BraidWord(3, b));
        CHECK(murasugi_word(form_a(0, {1})) == BraidWord(3, {1, -2}));
        std::vector<int> c = full_twist_3().letters();
        for (int x : {-1, -1, -1, -2}) c.push_back(x);
        CHECK(murasugi_word(form_c(1, -3)) == BraidWord(3, c));
        CHECK(murasugi_word(form_b(-1, 0)) == BraidWord(3, {-2, -1, -2, -1, -2, -1}));
        CHECK_THROWS(murasugi_word(form_a(0, {0, 0})));
        CHECK_THROWS(murasugi_word(form_a(0, {-1})));
        CHECK_THROWS(murasugi_word(form_c(0, 1)));
    }

    TEST_CASE("normal form classification")
    {
        CHECK(murasugi_classify_rv(form_b(1, -5)).status == St::RightVeering);
        CHECK(murasugi_classify_rv(form_b(0, -2)).status == St::NonRightVeering);
        CHECK(murasugi_classify_rv(form_c(1, -3)).status == St::RightVeering);
        CHECK(murasugi_classify_rv(form_a(0, {2, 1})).status == St::NonRightVeering);
        CHECK(murasugi_classify_rv(form_b(0, 2)).status == St::RightVeering);
        CHECK(murasugi_classify_rv(form_c(0, -1)).status == St::NonRightVeering);
        CHECK(murasugi_classify_rv(form_a(-1, {1})).status == St::NonRightVeering);
    }

    TEST_CASE("verdict examples")
    {
        const RvVerdict a = rv_status(BraidWord(3, {2, -1}));
        CHECK(a.status == St::NonRightVeering);
        CHECK(a.certificate == Cert::Sigma1NegativeWord);

        std::vector<int> l = full_twist_3().letters();
        for (int i = 0; i < 4; ++i) l.push_back(-2);
        CHECK(rv_status(BraidWord(3, l)).status == St::RightVeering);

        CHECK(rv_status(BraidWord(2, {1, 1})).certificate == Cert::PositiveWord);

        // Delta^2 sigma_3 sigma_2^-1 in B4: sigma_3 sigma_2^-1 is sigma_2-negative, so the floor is
        // 0 and the floor certificate does not apply. Its mirror sigma_2 sigma_3^-1 gives floor 1.
        const BraidWord d = cat(delta_sq(4), BraidWord(4, {3, -2}));
        CHECK(dehornoy_floor(d) == 0);
        const RvVerdict vd = rv_status(d);
        CHECK(vd.status != St::NonRightVeering);
        const BraidWord e = cat(delta_sq(4), BraidWord(4, {2, -3}));
        CHECK(dehornoy_floor(e) == 1);
        const RvVerdict ve = rv_status(e);
        CHECK(ve.status == St::RightVeering);
        CHECK(ve.certificate == Cert::FloorAtLeastOne);
    }

    TEST_CASE("quasipositive input")
    {
        const QuasipositiveVerdict a = quasipositive_verdict({2, {{BraidWord(2), 1}}});
        CHECK(a.verdict.status == St::RightVeering);
        CHECK(a.verdict.certificate == Cert::QuasipositiveInput);
        CHECK(a.word == BraidWord(2, {1}));
        const QuasipositiveVerdict b = quasipositive_verdict({3, {{BraidWord(3, {2}), 1}, {BraidWord(3), 2}}});
        CHECK(b.word == BraidWord(3, {2, 1, -2, 2}));
        std::mt19937_64 rng(61);
        for (int t = 0; t < 300; ++t) {
            const int m = 2 + t % 3;
            QuasipositiveForm q{m, {}};
            const int k = 1 + rng() % 3;
            for (int i = 0; i < k; ++i)
                q.factors.push_back({oracle::random_word(rng, m, 4), 1 + static_cast<int>(rng() % (m - 1))});
            CHECK(order_sign(quasipositive_verdict(q).word) == OrderSign::Positive);
        }
    }
}

TEST_SUITE("right-veering properties")
{
    TEST_CASE("witnesses replay")
    {
        std::mt19937_64 rng(62);
        int found = 0;
        for (int t = 0; t < 400; ++t) {
            const BraidWord w = oracle::random_word(rng, 2 + t % 3, 6);
            if (const auto g = nonrv_search(w, 2)) {
                ++found;
                CHECK(sigma1_negative_witness(conjugate(w, *g)));
            }
        }
        CHECK(found > 50);
    }

    TEST_CASE("verdicts are certified and stable across budgets")
    {
        std::mt19937_64 rng(63);
        for (int t = 0; t < 150; ++t) {
            const BraidWord w = oracle::random_word(rng, 2 + t % 3, 6);
            SearchBudget small, large;
            small.radius = 0;
            small.escalation_radius = 1;
            large.radius = 3;
            const RvVerdict a = rv_status(w, small), b = rv_status(w, large);
            CHECK(consistent(a));
            CHECK(consistent(b));
            CHECK_FALSE((a.status == St::RightVeering && b.status == St::NonRightVeering));
            CHECK_FALSE((a.status == St::NonRightVeering && b.status == St::RightVeering));
            if (a.witness) CHECK(sigma1_negative_witness(conjugate(w, *a.witness)));
        }
    }

    TEST_CASE("sigma_1-negative words have vanishing theta")
    {
        for (const BraidWord& w : sample_sigma1_negative_words(64, 25, 8)) {
            const BraidTheta t = theta_of_braid(w);
            CHECK(t.result.status == NonvanishingResult::Status::Zero);
        }
    }

    TEST_CASE("normal form sweep is well formed")
    {
        const auto forms = murasugi_sweep_forms();
        CHECK(forms.size() == 60);
        for (const MurasugiForm& f : forms) {
            validate(f);
            const RvVerdict v = murasugi_classify_rv(f);
            CHECK(v.status != St::Unknown);
            CHECK(murasugi_word(f).strands() == 3);
        }
    }
}
