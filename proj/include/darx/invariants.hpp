#pragma once

#include <map>

#include "darx/operators.hpp"
#include "darx/poly.hpp"

namespace darx {

/// The classical invariants of Dx Dy + a Dx + b Dy + c, plus their
/// difference m. Either pair {h, k} or {m, h} generates the other.
struct LaplaceInvariants {
    DiffPolynomial h;  ///< a_x + a b - c
    DiffPolynomial k;  ///< b_y + a b - c
    DiffPolynomial m;  ///< a_x - b_y = h - k
};

LaplaceInvariants laplace_invariants(const LaplaceOperator& lc);

/// The 2d+3 generating invariants of a pair (L, M): m and h from L, and
/// R_j for j = -d..d mixing the coefficients of M with jets of a and b.
/// R_d = m_d and R_{-d} = m_{-d} always.
struct InvariantSet {
    int d = 0;
    DiffPolynomial m;
    DiffPolynomial h;
    std::map<int, DiffPolynomial> R;  ///< all 2d+1 entries, including zeros

    bool operator==(const InvariantSet& other) const = default;
};

/// R_j as weighted sums of complete Bell polynomials in the negated
/// derivative chains of b (for j > 0) and a (for j < 0):
///   R_j  = sum over w = j..d of m_w C(w,j) B_{w-j}(-b, -db, ..., -d^(w-j-1) b)
///   R_0  = m_0 + sum over w of m_w B_w(-b, ...) + m_{-w} B_w(-a, ...).
InvariantSet invariants_bell(const LaplaceOperator& lc, const NormalizedM& m);

/// Same set computed through the first-order operator Omega = d - f:
///   R_j = sum over i = 0..d-j of C(j+i, j) m_{i+j} P_i,
/// with P_0 = 1 and P_i = -Omega^(i-1)(f). An independent route to
/// invariants_bell; the two must agree.
InvariantSet invariants_omega(const LaplaceOperator& lc, const NormalizedM& m);

/// i-fold application of Omega(g) = d_dir(g) - mult * g, starting from f.
DiffPolynomial omega_power(const DiffPolynomial& f, const DiffPolynomial& mult, Var dir,
                           int iterations);

/// Mode form with the pure-jet multipliers b (x direction) and a (y).
enum class OmegaMode { x_with_b, y_with_a };
DiffPolynomial omega_power(const DiffPolynomial& f, OmegaMode mode, int iterations);

/// P_0 = 1, P_i = -Omega^(i-1)(f) for i >= 1 with multiplier f itself.
DiffPolynomial p_op(const DiffPolynomial& f, Var dir, int i);

/// The moving-frame normalization as a substitution on jets of the gauge
/// exponent: dx^k alpha -> -dx^(k-1) b, dy^k alpha -> -dy^(k-1) a, k = 1..max_order.
std::map<JetVariable, DiffPolynomial> frame_substitution(const GaugeParameter& alpha,
                                                         int max_order);

/// Applies the frame substitution; the needed order is read off the input.
/// Throws MixedAlphaJet if p carries a mixed jet of alpha.
DiffPolynomial frame_restrict(const DiffPolynomial& p, const GaugeParameter& alpha);

/// True iff the invariant set of (L, M) equals the one of the conjugated
/// pair, entry by entry after canonicalization.
bool verify_gauge_invariance(const LaplaceOperator& lc, const NormalizedM& m,
                             const GaugeParameter& alpha);

}  // namespace darx
