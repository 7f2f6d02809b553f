#include <gtest/gtest.h>

#include <random>

#include "superint/cas/models.hpp"
#include "superint/cas/repair.hpp"
#include "superint/cas/suites.hpp"

using namespace superint;
using namespace superint::cas;
using namespace superint::cas::expr;

namespace {

GaussRat rand_gauss(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> n(-9, 9), d(1, 7);
    return GaussRat(mpq_class(n(rng), d(rng)), mpq_class(n(rng), d(rng)));
}

/// A few terms in x, y, px, py with Laurent exponents in the positions.
RatFun rand_phase(std::mt19937_64& rng, int terms = 3) {
    std::uniform_int_distribution<int> qe(-2, 2), pe(0, 2);
    RatFun f;
    for (int t = 0; t < terms; ++t)
        f += RatFun(rand_gauss(rng)) * v(X, qe(rng)) * v(Y, qe(rng)) * v(PX, pe(rng)) * v(PY, pe(rng));
    return f;
}

DiffOp rand_op(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> o(0, 2);
    return rand_phase(rng, 2) * DiffOp::partial(o(rng), o(rng)) + DiffOp(rand_phase(rng, 1));
}

const Derivation kCart(SymChart::cartesian);

}  // namespace

TEST(GaussRat, FieldAxioms) {
    std::mt19937_64 rng(1);
    for (int n = 0; n < 200; ++n) {
        GaussRat a = rand_gauss(rng), b = rand_gauss(rng), c = rand_gauss(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
        EXPECT_EQ(a - a, GaussRat(0));
    }
    EXPECT_EQ(GaussRat::i() * GaussRat::i(), GaussRat(-1));
    EXPECT_EQ(GaussRat::ratio(6, 4).str(), "3/2");
}

TEST(Poly, RingAxiomsAndDerivative) {
    std::mt19937_64 rng(2);
    for (int n = 0; n < 50; ++n) {
        Poly f = rand_phase(rng).num(), g = rand_phase(rng).num(), h = rand_phase(rng).num();
        EXPECT_EQ(f * g, g * f);
        EXPECT_EQ((f * g) * h, f * (g * h));
        EXPECT_EQ(f * (g + h), f * g + f * h);
        EXPECT_TRUE((f - f).is_zero());
        EXPECT_EQ((f * g).derivative(X), f.derivative(X) * g + f * g.derivative(X));
    }
}

TEST(RatFun, FieldOperationsWithAtomDenominators) {
    std::mt19937_64 rng(3);
    RatFun d = ttw2::d();  // x^2 - y^2
    for (int n = 0; n < 30; ++n) {
        RatFun f = rand_phase(rng), g = rand_phase(rng) * ttw2::d2inv();
        EXPECT_EQ(g * d * d, g * d.pow(2));
        EXPECT_TRUE(((f + g) - g - f).is_zero());
        EXPECT_EQ((f * g).derivative(Y), f.derivative(Y) * g + f * g.derivative(Y));
    }
    EXPECT_TRUE((ttw2::d2inv() * d.pow(2) - RatFun(1)).is_zero());
}

TEST(RatFun, ExactAndFloatingEvaluationAgree) {
    std::mt19937_64 rng(4);
    RatFun f = rand_phase(rng, 4);
    std::array<GaussRat, kNumVars> ex{};
    VarValues fl{};
    for (int k = 0; k < kNumVars; ++k) {
        ex[k] = GaussRat(mpq_class(k + 2, 3));
        fl[k] = ex[k].to_complex();
    }
    cd exact = f.eval_exact(ex).to_complex();
    EXPECT_LT(std::abs(f.eval(fl) - exact), 1e-12 * std::max(1.0, std::abs(exact)));
}

TEST(SymBracket, CanonicalAntisymmetricLeibnizJacobi) {
    EXPECT_EQ(sym_bracket(v(X), v(PX), kCart), RatFun(1));
    EXPECT_TRUE(sym_bracket(v(X), v(PY), kCart).is_zero());
    std::mt19937_64 rng(5);
    for (int n = 0; n < 10; ++n) {
        RatFun f = rand_phase(rng), g = rand_phase(rng), h = rand_phase(rng);
        EXPECT_TRUE((sym_bracket(f, g, kCart) + sym_bracket(g, f, kCart)).is_zero());
        EXPECT_EQ(sym_bracket(f, g * h, kCart), sym_bracket(f, g, kCart) * h + g * sym_bracket(f, h, kCart));
        RatFun jac = sym_bracket(f, sym_bracket(g, h, kCart), kCart) + sym_bracket(g, sym_bracket(h, f, kCart), kCart) +
                     sym_bracket(h, sym_bracket(f, g, kCart), kCart);
        EXPECT_TRUE(jac.is_zero());
    }
}

TEST(SymBracket, RejectsForeignChartVariables) {
    EXPECT_THROW(sym_bracket(v(W), v(PX), kCart), Error);
}

TEST(DiffOp, AssociativeActionAndJacobi) {
    std::mt19937_64 rng(6);
    for (int n = 0; n < 8; ++n) {
        DiffOp a = rand_op(rng), b = rand_op(rng), c = rand_op(rng);
        RatFun f = rand_phase(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a * b).apply(f), a.apply(b.apply(f)));
        DiffOp jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
        EXPECT_TRUE(jac.is_zero());
    }
    EXPECT_EQ(commutator(DiffOp::dx(), DiffOp(v(X))), DiffOp(1));
}

TEST(DiffOp, SymmetrizersCountOrderings) {
    DiffOp x = DiffOp(v(X)), d = DiffOp::dx();
    EXPECT_EQ(sym2(x, d), x * d + d * x);
    // six orderings of (x, x, d) give twice the three distinct ones
    EXPECT_EQ(sym3(x, x, d), (x * x * d + x * d * x + d * x * x).scaled(GaussRat(2)));
    EXPECT_NE(sym3(x, x, d), sym3_distinct(x, x, d));
}

TEST(Exact, TtwK2ConstantsCommuteWithH) {
    RatFun h = ttw2::hamiltonian();
    EXPECT_TRUE(sym_bracket(ttw2::c1(), h, kCart).is_zero());
    EXPECT_TRUE(sym_bracket(ttw2::c2(), h, kCart).is_zero());
    EXPECT_TRUE(commutator(ttw2::c1_op(), ttw2::hamiltonian_op()).is_zero());
    EXPECT_TRUE(commutator(ttw2::c2_op(), ttw2::hamiltonian_op()).is_zero());
}

TEST(Exact, HoloK3ConstantsCommuteWithH) {
    RatFun h = holo3::hamiltonian();
    for (const RatFun& k : {holo3::k1(), holo3::k2(), holo3::k3()}) EXPECT_TRUE(sym_bracket(k, h, kCart).is_zero());
}

TEST(Suites, ClassicalTtwK2) {
    auto rep = suite_ttw_k2_classical(20);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.count(CheckStatus::fail), 0u);
    const auto& cl = ttw_k2_classical_closure();
    EXPECT_TRUE(cl.c1_conserved && cl.c2_conserved);
}

TEST(Suites, ClassicalHoloK3) { EXPECT_TRUE(suite_holo_k3_classical(20).ok()); }

TEST(Suites, QuantumTtwK2) { EXPECT_TRUE(suite_quantum(QuantumTarget::ttw_k2).ok()); }

TEST(Suites, QuantumHoloK3) { EXPECT_TRUE(suite_quantum(QuantumTarget::holo_k3).ok()); }

TEST(Suites, GeneralLadderSmallIndices) {
    EXPECT_TRUE(suite_ttw_general(1, 2, 5).ok());
    EXPECT_TRUE(suite_ttw_general(2, 1, 5).ok());
    EXPECT_THROW(suite_ttw_general(2, 4), ParseError);
    EXPECT_THROW(suite_ttw_general(0, 1), ParseError);
}

TEST(Suites, Models) { EXPECT_TRUE(suite_models(5).ok()); }

TEST(Repair, AllTargetsUniqueAndCertified) {
    for (const auto& t : repair_targets()) {
        auto r = repair(t);
        EXPECT_TRUE(r.unique()) << t;
        EXPECT_TRUE(r.solution.certified) << t;
        EXPECT_EQ(r.solution.names.size(), r.solution.values.size()) << t;
    }
    EXPECT_THROW(repair("nope"), ParseError);
}

TEST(Repair, KnownValues) {
    auto c2 = repair("c2-classical");
    ASSERT_EQ(c2.solution.values.size(), 2u);
    EXPECT_EQ(c2.solution.values[0], GaussRat(8));
    EXPECT_EQ(c2.solution.values[1], GaussRat(0));
    auto k2 = repair("k2-holo");
    EXPECT_EQ(k2.solution.values[0], -GaussRat::i());
    EXPECT_EQ(k2.solution.values[1], GaussRat::i());
}

TEST(Repair, InconsistentAnsatzIsRejected) { EXPECT_THROW(repair_negative_control(), InconsistentSystemError); }
