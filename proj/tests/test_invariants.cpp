#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "darx/bell.hpp"
#include "darx/errors.hpp"
#include "darx/invariants.hpp"
#include "darx/operators.hpp"
#include "darx/randgen.hpp"

using namespace darx;

namespace {

DiffPolynomial V(const std::string& s, int nx = 0, int ny = 0) {
    return DiffPolynomial::variable(jet(s, nx, ny));
}

DiffPolynomial M(int i) { return DiffPolynomial::variable(jet(indexed_symbol("m", i))); }

}  // namespace

TEST(LaplacePair, SymbolicValues) {
    LaplaceInvariants inv = laplace_invariants(LaplaceOperator::symbolic());
    EXPECT_EQ(inv.h, V("a", 1, 0) + V("a") * V("b") - V("c"));
    EXPECT_EQ(inv.k, V("b", 0, 1) + V("a") * V("b") - V("c"));
    EXPECT_EQ(inv.m, inv.h - inv.k);
    EXPECT_EQ(inv.m, V("a", 1, 0) - V("b", 0, 1));
}

TEST(LaplacePair, FactoredOperatorHasVanishingH) {
    // (Dx + b) o (Dy + a) has free term a b + a_x, so h = 0 while k = b_y - a_x.
    LaplaceOperator lc{V("a"), V("b"), V("a") * V("b") + V("a", 1, 0)};
    LaplaceInvariants inv = laplace_invariants(lc);
    EXPECT_TRUE(inv.h.is_zero());
    EXPECT_EQ(inv.k, V("b", 0, 1) - V("a", 1, 0));
}

TEST(Frame, SubstitutionTable) {
    GaugeParameter alpha;
    auto bind = frame_substitution(alpha, 3);
    ASSERT_EQ(bind.size(), 6u);
    EXPECT_EQ(bind.at(jet("alpha", 1, 0)), -V("b"));
    EXPECT_EQ(bind.at(jet("alpha", 2, 0)), -V("b", 1, 0));
    EXPECT_EQ(bind.at(jet("alpha", 3, 0)), -V("b", 2, 0));
    EXPECT_EQ(bind.at(jet("alpha", 0, 1)), -V("a"));
    EXPECT_EQ(bind.at(jet("alpha", 0, 2)), -V("a", 0, 1));
    EXPECT_EQ(bind.at(jet("alpha", 0, 3)), -V("a", 0, 2));
}

TEST(Frame, RestrictExamples) {
    GaugeParameter alpha;
    DiffPolynomial ax = V("alpha", 1, 0), axx = V("alpha", 2, 0);
    EXPECT_EQ(frame_restrict(ax, alpha), -V("b"));
    EXPECT_EQ(frame_restrict(ax * ax + axx, alpha), V("b") * V("b") - V("b", 1, 0));
    EXPECT_EQ(frame_restrict(V("c"), alpha), V("c"));
    EXPECT_THROW(frame_restrict(V("alpha", 1, 1), alpha), MixedAlphaJet);
}

TEST(Omega, PowersAndPolynomials) {
    DiffPolynomial b = V("b");
    EXPECT_EQ(omega_power(b, OmegaMode::x_with_b, 0), b);
    EXPECT_EQ(omega_power(b, OmegaMode::x_with_b, 1), V("b", 1, 0) - b * b);
    EXPECT_EQ(omega_power(b, b, Var::x, 1), V("b", 1, 0) - b * b);
    EXPECT_THROW(omega_power(b, b, Var::x, -1), BadIndex);

    EXPECT_EQ(p_op(b, Var::x, 0), DiffPolynomial(1));
    EXPECT_EQ(p_op(b, Var::x, 1), -b);
    EXPECT_EQ(p_op(b, Var::x, 2), -V("b", 1, 0) + b * b);
    EXPECT_EQ(p_op(b, Var::x, 3),
              -V("b", 2, 0) + Rational(3) * (b * V("b", 1, 0)) - b.pow(3));
}

TEST(Omega, PolynomialsMatchNegatedBellChains) {
    for (int i = 0; i <= 8; ++i) {
        DiffPolynomial via_omega = p_op(V("b"), Var::x, i);
        DiffPolynomial via_bell = bell_complete(i, negated_derivative_chain(V("b"), Var::x, i));
        ASSERT_EQ(via_omega, via_bell) << "i=" << i;
        DiffPolynomial other = p_op(V("a"), Var::y, i);
        ASSERT_EQ(other, bell_complete(i, negated_derivative_chain(V("a"), Var::y, i)));
    }
}

TEST(GeneratingSet, FirstOrderValues) {
    InvariantSet set = invariants_bell(LaplaceOperator::symbolic(), NormalizedM::symbolic(1));
    EXPECT_EQ(set.d, 1);
    ASSERT_EQ(set.R.size(), 3u);
    EXPECT_EQ(set.R.at(1), M(1));
    EXPECT_EQ(set.R.at(-1), M(-1));
    EXPECT_EQ(set.R.at(0), M(0) - V("b") * M(1) - V("a") * M(-1));
    EXPECT_EQ(set.m, V("a", 1, 0) - V("b", 0, 1));
    EXPECT_EQ(set.h, V("a", 1, 0) + V("a") * V("b") - V("c"));
}

TEST(GeneratingSet, FifthOrderSpotChecks) {
    InvariantSet set = invariants_bell(LaplaceOperator::symbolic(), NormalizedM::symbolic(5));
    EXPECT_EQ(set.d, 5);
    ASSERT_EQ(set.R.size(), 11u);
    EXPECT_EQ(set.R.at(5), M(5));
    EXPECT_EQ(set.R.at(-5), M(-5));
    EXPECT_EQ(set.R.at(4), M(4) - Rational(5) * (M(5) * V("b")));
    EXPECT_EQ(set.R.at(-4), M(-4) - Rational(5) * (M(-5) * V("a")));
    DiffPolynomial b = V("b"), bx = V("b", 1, 0);
    EXPECT_EQ(set.R.at(3),
              M(3) - Rational(4) * (M(4) * b) + (Rational(10) * (b * b) - Rational(10) * bx) * M(5));
}

TEST(GeneratingSet, TopCoefficientsPassThrough) {
    for (int d = 1; d <= 6; ++d) {
        InvariantSet set = invariants_bell(LaplaceOperator::symbolic(), NormalizedM::symbolic(d));
        EXPECT_EQ(set.R.at(d), M(d));
        EXPECT_EQ(set.R.at(-d), M(-d));
        EXPECT_EQ(static_cast<int>(set.R.size()), 2 * d + 1);
    }
}

TEST(GeneratingSet, TwoConstructionsAgree) {
    for (int d = 1; d <= 4; ++d) {
        LaplaceOperator lc = LaplaceOperator::symbolic();
        NormalizedM m = NormalizedM::symbolic(d);
        ASSERT_EQ(invariants_bell(lc, m), invariants_omega(lc, m)) << "d=" << d;
    }
}

TEST(GeneratingSet, FixedUnderGaugeSymbolically) {
    GaugeParameter alpha;
    for (int d = 1; d <= 5; ++d) {
        ASSERT_TRUE(verify_gauge_invariance(LaplaceOperator::symbolic(), NormalizedM::symbolic(d),
                                            alpha));
    }
}

TEST(GeneratingSet, RandomCoefficientsStayFixed) {
    GaugeParameter alpha;
    RandomSource rng(555);
    std::vector<std::string> syms = {"a", "b", "c"};
    for (int t = 0; t < 3; ++t) {
        LaplaceOperator lc = rng.laplace(syms);
        std::map<int, DiffPolynomial> coeffs;
        for (int i = -2; i <= 2; ++i) coeffs[i] = rng.polynomial(syms, 2, 1, 1);
        NormalizedM m(2, coeffs);
        ASSERT_TRUE(verify_gauge_invariance(lc, m, alpha));
    }
}

TEST(GeneratingSet, SecondOrderTraceIsNotInvariant) {
    // The naive trace m_tilde = a_x + b_y picks up 2 alpha_xy under the gauge
    // action, so only the difference a_x - b_y survives.
    GaugeParameter alpha;
    LaplaceOperator lc = LaplaceOperator::symbolic();
    LaplaceOperator moved = gauge_action_laplace(lc, alpha);
    DiffPolynomial trace = total_derivative(lc.a, Var::x) + total_derivative(lc.b, Var::y);
    DiffPolynomial moved_trace =
        total_derivative(moved.a, Var::x) + total_derivative(moved.b, Var::y);
    EXPECT_EQ(moved_trace - trace, Rational(2) * V("alpha", 1, 1));

    DiffPolynomial diff = total_derivative(lc.a, Var::x) - total_derivative(lc.b, Var::y);
    DiffPolynomial moved_diff =
        total_derivative(moved.a, Var::x) - total_derivative(moved.b, Var::y);
    EXPECT_EQ(moved_diff, diff);
}

TEST(GeneratingSet, IdentityGaugeIsNeutral) {
    GaugeParameter alpha;
    LaplaceOperator lc = LaplaceOperator::symbolic();
    NormalizedM m = NormalizedM::symbolic(3);
    InvariantSet base = invariants_bell(lc, m);

    // Killing every jet of alpha in the transformed data recovers the originals.
    std::map<JetVariable, DiffPolynomial> kill;
    for (int nx = 0; nx <= 8; ++nx)
        for (int ny = 0; ny + nx <= 8; ++ny) kill[jet("alpha", nx, ny)] = DiffPolynomial(0);
    LaplaceOperator moved = gauge_action_laplace(lc, alpha);
    EXPECT_EQ(substitute(moved.embed(), kill), lc.embed());
    NormalizedM moved_m = gauge_conjugate_M(m, alpha);
    EXPECT_EQ(substitute(moved_m.embed(), kill), m.embed());
    InvariantSet again = invariants_bell(lc, m);
    EXPECT_EQ(base, again);
}

TEST(FrameReplay, RestrictedCoefficientsReproduceInvariants) {
    GaugeParameter alpha;
    for (int d = 1; d <= 3; ++d) {
        LaplaceOperator lc = LaplaceOperator::symbolic();
        NormalizedM m = NormalizedM::symbolic(d);
        InvariantSet set = invariants_bell(lc, m);
        NormalizedM moved = gauge_conjugate_M(m, alpha);
        for (int j = -d; j <= d; ++j) {
            ASSERT_EQ(frame_restrict(moved.coeff(j), alpha), set.R.at(j))
                << "d=" << d << " j=" << j;
        }
    }
}
