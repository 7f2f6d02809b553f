#include <gtest/gtest.h>

#include <random>

#include "superint/crosscheck.hpp"

using namespace superint;

namespace {

std::vector<Point> points_for(const LadderSystem& sys, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Point> pts;
    for (int j = 0; j < n; ++j) pts.push_back(sample_ladder_point(sys, rng));
    return pts;
}

const ParamsTTW kTtw = ParamsTTW::polar(1.3, 0.7, 0.9);
const ParamsHolo kHolo{cd(1.2, 0.3)};

/// Relative size of an identity lhs = rhs.
double rel(cd lhs, cd rhs) { return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)}); }

}  // namespace

TEST(Ladder, OrderLawAndLabels) {
    EXPECT_EQ(ladder_order(Family::ttw, 3, 2, kP000), 10);
    EXPECT_EQ(ladder_order(Family::ttw, 3, 2, kP1), 9);
    EXPECT_EQ(ladder_order(Family::holo, 3, 1, kP000), 4);
    EXPECT_EQ(ladder_order(Family::holo, 3, 1, kP1), 3);
    EXPECT_EQ(ladder_label(1, 1, true), "C");
    EXPECT_EQ(ladder_label(1, 1, false), "D");
    EXPECT_EQ(ladder_label(1, 2, true), "C'");
    EXPECT_EQ(predicted_cosh_component(1, 1), kP000);
    EXPECT_EQ(predicted_cosh_component(1, 2), kP1);
}

class LadderIndex : public ::testing::TestWithParam<std::tuple<Family, long, long>> {};

TEST_P(LadderIndex, PairsAreHyperbolicAndConstantsPure) {
    auto [fam, p, q] = GetParam();
    LadderSystem sys = fam == Family::ttw ? LadderSystem::make_ttw(kTtw, RationalIndex(p, q))
                                          : LadderSystem::make_holo(kHolo, RationalIndex(p, q));
    Observable h = sys.hamiltonian();
    Observable c = ladder_constant(sys, true), d = ladder_constant(sys, false);
    int used = 0;
    for (const auto& pt : points_for(sys, 20, 17)) {
        PairSet<cd> pairs;
        try {
            pairs = make_pairs(sys, pt);
        } catch (const DegenerateRadicalError&) {
            continue;
        }
        ++used;
        for (const auto* pr : {&pairs.a, &pairs.b}) {
            auto id = pr->identity_value();
            for (int e = 0; e < 8; ++e) EXPECT_LT(std::abs(id[e] - (e == kP000 ? cd(1.0) : cd(0.0))), 1e-10);
        }
        auto [lo, hi] = extract_constants(sys, pt);
        EXPECT_TRUE(lo.table_agrees && hi.table_agrees);
        EXPECT_EQ(hi.order - lo.order, 1);
        EXPECT_EQ(hi.order, ladder_order(fam, p, q, kP000));
        EXPECT_LT(std::max(lo.impurity, hi.impurity), 1e-10);
        EXPECT_LT(bracket_residual(c, h, pt), 1e-9);
        EXPECT_LT(bracket_residual(d, h, pt), 1e-9);
    }
    EXPECT_GE(used, 10);
}

INSTANTIATE_TEST_SUITE_P(Indices, LadderIndex,
                         ::testing::Values(std::tuple{Family::ttw, 1L, 1L}, std::tuple{Family::ttw, 2L, 1L},
                                           std::tuple{Family::ttw, 1L, 2L}, std::tuple{Family::ttw, 3L, 2L},
                                           std::tuple{Family::holo, 3L, 1L}, std::tuple{Family::holo, 2L, 3L}));

TEST(Ladder, CorruptedNormalizerIsCaught) {
    auto sys = LadderSystem::make_ttw(kTtw, RationalIndex(3, 2));
    auto pts = points_for(sys, 5, 2);
    EXPECT_THROW(extract_constants(sys, pts[0], ExtractOptions{1e-10, 1}), PurityViolation);
    ConstantsCheckOptions opt;
    opt.points = 10;
    opt.drift = false;
    opt.normalizer_shift = 1;
    EXPECT_FALSE(verify_constants(sys, opt).ok());
}

TEST(Ladder, VerifyConstantsIsDeterministic) {
    auto sys = LadderSystem::make_holo(kHolo, RationalIndex(2, 1));
    ConstantsCheckOptions opt;
    opt.points = 15;
    opt.drift = false;
    auto a = verify_constants(sys, opt), b = verify_constants(sys, opt);
    ASSERT_TRUE(a.ok());
    ASSERT_EQ(a.checks.size(), b.checks.size());
    for (std::size_t n = 0; n < a.checks.size(); ++n) EXPECT_EQ(a.checks[n].residual, b.checks[n].residual);
}

// Closed forms: conserved, and the k = 3 holomorphic relations at 20 random points.
TEST(ClosedForms, TtwK2ConstantsCommuteWithH) {
    Observable h = ttw_k2_cartesian_h(kTtw), c1 = ttw_k2_c1(kTtw), c2 = ttw_k2_c2(kTtw);
    auto sys = LadderSystem::make_ttw(kTtw, RationalIndex(2, 1));
    Observable l2 = sys.separation_constant();
    for (const auto& pt : points_for(sys, 20, 9)) {
        EXPECT_LT(bracket_residual(c1, h, pt), 1e-12);
        EXPECT_LT(bracket_residual(c2, h, pt), 1e-12);
        // L2 = C1 + b + 2c' (Cartesian c' = gamma/4)
        EXPECT_LT(rel(l2(pt), c1(pt) + kTtw.b + 2.0 * kTtw.cartesian_c()), 1e-12);
    }
}

TEST(ClosedForms, HoloK3RelationsAtRandomPoints) {
    const cd i(0.0, 1.0), a = kHolo.a;
    Observable h = holo_hamiltonian(kHolo, 3.0);
    Observable k1 = holo_k3_constant(kHolo, 1), k2 = holo_k3_constant(kHolo, 2), k3 = holo_k3_constant(kHolo, 3);
    auto sys = LadderSystem::make_holo(kHolo, RationalIndex(3, 1));
    for (const auto& pt : points_for(sys, 20, 21)) {
        cd v1 = k1(pt), v2 = k2(pt), v3 = k3(pt), e = h(pt);
        for (const auto* k : {&k1, &k2, &k3}) EXPECT_LT(bracket_residual(*k, h, pt), 1e-12);
        EXPECT_LT(rel(bracket(k1, k2, pt), 3.0 * i * v1 * v1), 1e-12);
        EXPECT_LT(rel(bracket(k1, k3, pt), 6.0 * i * v2), 1e-12);
        EXPECT_LT(rel(bracket(k2, k3, pt), 6.0 * i * v1 * (v3 + a)), 1e-12);
        EXPECT_LT(rel(v1 * v1 * v3 - v2 * v2 + a * (v1 * v1 - e * e * e), 0.0), 1e-12);
    }
}

TEST(ClosedForms, EngineAgreesUpToRecordedFactor) {
    auto rep = cross_check_closed_forms({20, 7, 1e-10});
    EXPECT_TRUE(rep.ok());
}
