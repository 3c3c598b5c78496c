#pragma once

#include <vector>

#include "darx/poly.hpp"

namespace darx {

/// Ordered argument list x_1..x_n for a Bell polynomial. B_n reads the first
/// n entries, B_{n,k} the first n-k+1; extra entries are ignored.
using BellArgs = std::vector<DiffPolynomial>;

/// [f, df, d2f, ...]: `count` successive derivatives in direction `dir`,
/// starting from f itself.
BellArgs derivative_chain(const DiffPolynomial& f, Var dir, int count);

/// Negated chain [-f, -df, ...], the argument shape used by the invariant
/// formulas.
BellArgs negated_derivative_chain(const DiffPolynomial& f, Var dir, int count);

/// Partial Bell polynomial B_{n,k}: the multinomial sum over sequences
/// j_1, j_2, ... of non-negative integers with sum(j_i) = k and
/// sum(i*j_i) = n. B_{0,0} = 1 and B_{n,0} = 0 for n > 0.
/// Throws BadIndex if k > n, Error if xs is too short.
DiffPolynomial bell_partial(int n, int k, const BellArgs& xs);

/// Complete Bell polynomial B_n = sum over k = 1..n of B_{n,k}, with the
/// empty-sum convention B_0 = 1.
DiffPolynomial bell_complete(int n, const BellArgs& xs);

/// B_n through its n x n determinant representation (first row
/// x_1, C(n-1,1) x_2, ..., x_n; subdiagonal -1), expanded by exact
/// cofactors over the polynomial ring. An independent route to
/// bell_complete, kept separate on purpose.
DiffPolynomial bell_complete_det(int n, const BellArgs& xs);

}  // namespace darx
