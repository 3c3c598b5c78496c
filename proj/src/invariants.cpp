#include "darx/invariants.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "darx/bell.hpp"
#include "darx/errors.hpp"
#include "darx/rational.hpp"

namespace darx {

LaplaceInvariants laplace_invariants(const LaplaceOperator& lc) {
    LaplaceInvariants out;
    DiffPolynomial ab = lc.a * lc.b;
    out.h = total_derivative(lc.a, Var::x) + ab - lc.c;
    out.k = total_derivative(lc.b, Var::y) + ab - lc.c;
    out.m = out.h - out.k;
    return out;
}

InvariantSet invariants_bell(const LaplaceOperator& lc, const NormalizedM& m) {
    const int d = m.order();
    InvariantSet out;
    out.d = d;
    LaplaceInvariants li = laplace_invariants(lc);
    out.m = li.m;
    out.h = li.h;

    // One chain per side, at full length; shorter Bell evaluations reuse it.
    BellArgs chain_b = negated_derivative_chain(lc.b, Var::x, d);
    BellArgs chain_a = negated_derivative_chain(lc.a, Var::y, d);
    std::vector<DiffPolynomial> bells_b, bells_a;
    for (int n = 0; n <= d; ++n) {
        bells_b.push_back(bell_complete(n, chain_b));
        bells_a.push_back(bell_complete(n, chain_a));
    }

    for (int j = 1; j <= d; ++j) {
        DiffPolynomial pos, neg;
        for (int w = j; w <= d; ++w) {
            Rational cwj = binomial(w, j);
            pos += cwj * m.coeff(w) * bells_b[w - j];
            neg += cwj * m.coeff(-w) * bells_a[w - j];
        }
        out.R[j] = std::move(pos);
        out.R[-j] = std::move(neg);
    }

    DiffPolynomial r0 = m.coeff(0);
    for (int w = 1; w <= d; ++w) {
        r0 += m.coeff(w) * bells_b[w] + m.coeff(-w) * bells_a[w];
    }
    out.R[0] = std::move(r0);
    return out;
}

DiffPolynomial omega_power(const DiffPolynomial& f, const DiffPolynomial& mult, Var dir,
                           int iterations) {
    if (iterations < 0) throw BadIndex("omega_power: negative iteration count");
    DiffPolynomial g = f;
    for (int i = 0; i < iterations; ++i) {
        g = total_derivative(g, dir) - mult * g;
    }
    return g;
}

DiffPolynomial omega_power(const DiffPolynomial& f, OmegaMode mode, int iterations) {
    if (mode == OmegaMode::x_with_b) {
        return omega_power(f, DiffPolynomial::variable(jet("b")), Var::x, iterations);
    }
    return omega_power(f, DiffPolynomial::variable(jet("a")), Var::y, iterations);
}

DiffPolynomial p_op(const DiffPolynomial& f, Var dir, int i) {
    if (i < 0) throw BadIndex("p_op: negative index");
    if (i == 0) return DiffPolynomial(1);
    return -omega_power(f, f, dir, i - 1);
}

InvariantSet invariants_omega(const LaplaceOperator& lc, const NormalizedM& m) {
    const int d = m.order();
    InvariantSet out;
    out.d = d;
    LaplaceInvariants li = laplace_invariants(lc);
    out.m = li.m;
    out.h = li.h;

    std::vector<DiffPolynomial> pb, pa;
    for (int i = 0; i <= d; ++i) {
        pb.push_back(p_op(lc.b, Var::x, i));
        pa.push_back(p_op(lc.a, Var::y, i));
    }

    for (int j = 1; j <= d; ++j) {
        DiffPolynomial pos, neg;
        for (int i = 0; i + j <= d; ++i) {
            Rational cji = binomial(j + i, j);
            pos += cji * m.coeff(i + j) * pb[i];
            neg += cji * m.coeff(-(i + j)) * pa[i];
        }
        out.R[j] = std::move(pos);
        out.R[-j] = std::move(neg);
    }

    DiffPolynomial r0 = m.coeff(0);
    for (int i = 1; i <= d; ++i) {
        r0 += m.coeff(i) * pb[i] + m.coeff(-i) * pa[i];
    }
    out.R[0] = std::move(r0);
    return out;
}

std::map<JetVariable, DiffPolynomial> frame_substitution(const GaugeParameter& alpha,
                                                         int max_order) {
    if (max_order < 0) throw BadIndex("frame_substitution: negative order");
    std::map<JetVariable, DiffPolynomial> bindings;
    for (int k = 1; k <= max_order; ++k) {
        bindings[jet(alpha.symbol, k, 0)] = -DiffPolynomial::variable(jet("b", k - 1, 0));
        bindings[jet(alpha.symbol, 0, k)] = -DiffPolynomial::variable(jet("a", 0, k - 1));
    }
    return bindings;
}

DiffPolynomial frame_restrict(const DiffPolynomial& p, const GaugeParameter& alpha) {
    int max_order = 0;
    for (const JetVariable& v : p.jets()) {
        if (v.symbol != alpha.symbol) continue;
        if (v.nx > 0 && v.ny > 0) {
            throw MixedAlphaJet("frame_restrict: mixed jet " + v.name() +
                                " has no frame value");
        }
        max_order = std::max(max_order, v.nx + v.ny);
    }
    if (max_order == 0) return p;
    return substitute(p, frame_substitution(alpha, max_order));
}

bool verify_gauge_invariance(const LaplaceOperator& lc, const NormalizedM& m,
                             const GaugeParameter& alpha) {
    InvariantSet base = invariants_bell(lc, m);
    LaplaceOperator lc2 = gauge_action_laplace(lc, alpha);
    NormalizedM m2 = gauge_conjugate_M(m, alpha);
    InvariantSet moved = invariants_bell(lc2, m2);
    return base == moved;
}

}  // namespace darx
