#pragma once

#include "darx/operators.hpp"

namespace darx {

/// Candidate intertwining data N * L = L1 * M. L and L1 must both be of
/// the form Dx*Dy + a*Dx + b*Dy + c; construction rejects anything else.
struct DarbouxQuadruple {
    LinearDiffOperator N;
    LinearDiffOperator L;
    LinearDiffOperator L1;
    LinearDiffOperator M;

    DarbouxQuadruple(LinearDiffOperator n, LinearDiffOperator l, LinearDiffOperator l1,
                     LinearDiffOperator m);
};

/// N * L - L1 * M; zero iff the intertwining relation holds.
LinearDiffOperator darboux_residual(const DarbouxQuadruple& q);

bool darboux_holds(const DarbouxQuadruple& q);

/// Order of the transforming operator M.
int darboux_order(const DarbouxQuadruple& q);

/// Conjugates all four operators by the same gauge exponent.
DarbouxQuadruple conjugate_quadruple(const DarbouxQuadruple& q, const GaugeParameter& alpha);

/// Conjugation distributes over the residual: conj(N*L - L1*M) must equal
/// the residual of the conjugated quadruple. Checks that identity.
bool verify_darboux_gauge_covariance(const DarbouxQuadruple& q, const GaugeParameter& alpha);

}  // namespace darx
