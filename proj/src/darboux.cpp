#include "darx/darboux.hpp"

#include <utility>

namespace darx {

DarbouxQuadruple::DarbouxQuadruple(LinearDiffOperator n, LinearDiffOperator l,
                                   LinearDiffOperator l1, LinearDiffOperator m)
    : N(std::move(n)), L(std::move(l)), L1(std::move(l1)), M(std::move(m)) {
    LaplaceOperator::from_operator(L);
    LaplaceOperator::from_operator(L1);
}

LinearDiffOperator darboux_residual(const DarbouxQuadruple& q) {
    return compose(q.N, q.L) - compose(q.L1, q.M);
}

bool darboux_holds(const DarbouxQuadruple& q) { return darboux_residual(q).is_zero(); }

int darboux_order(const DarbouxQuadruple& q) { return q.M.order(); }

DarbouxQuadruple conjugate_quadruple(const DarbouxQuadruple& q, const GaugeParameter& alpha) {
    return DarbouxQuadruple(gauge_conjugate(q.N, alpha), gauge_conjugate(q.L, alpha),
                            gauge_conjugate(q.L1, alpha), gauge_conjugate(q.M, alpha));
}

bool verify_darboux_gauge_covariance(const DarbouxQuadruple& q, const GaugeParameter& alpha) {
    LinearDiffOperator direct = gauge_conjugate(darboux_residual(q), alpha);
    LinearDiffOperator moved = darboux_residual(conjugate_quadruple(q, alpha));
    return direct == moved;
}

}  // namespace darx
