#pragma once

#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "darx/poly.hpp"

namespace darx {

/// Derivative monomial Dx^i * Dy^j.
struct DerivKey {
    int i = 0;
    int j = 0;
    auto operator<=>(const DerivKey&) const = default;
    int order() const { return i + j; }
};

/// Element of K[Dx,Dy]: finite map from derivative monomials to polynomial
/// coefficients, in normal form (coefficients left of the derivatives).
/// Zero coefficients are never stored.
class LinearDiffOperator {
public:
    /// Sentinel order of the zero operator (stands in for minus infinity).
    static constexpr int kZeroOrder = std::numeric_limits<int>::min();

    LinearDiffOperator() = default;

    static LinearDiffOperator identity() { return term(DiffPolynomial(1), 0, 0); }
    static LinearDiffOperator dx(int power = 1) { return term(DiffPolynomial(1), power, 0); }
    static LinearDiffOperator dy(int power = 1) { return term(DiffPolynomial(1), 0, power); }
    /// Multiplication by a function.
    static LinearDiffOperator mul(const DiffPolynomial& f) { return term(f, 0, 0); }
    static LinearDiffOperator term(const DiffPolynomial& coeff, int i, int j);

    const std::map<DerivKey, DiffPolynomial>& terms() const { return terms_; }
    /// Coefficient at Dx^i Dy^j (zero polynomial if absent).
    const DiffPolynomial& coeff(int i, int j) const;
    bool is_zero() const { return terms_.empty(); }
    int order() const;

    LinearDiffOperator operator+(const LinearDiffOperator& other) const;
    LinearDiffOperator operator-(const LinearDiffOperator& other) const;
    LinearDiffOperator operator-() const;
    LinearDiffOperator& operator+=(const LinearDiffOperator& other);
    LinearDiffOperator& operator-=(const LinearDiffOperator& other);
    /// Composition in K[Dx,Dy] (noncommutative).
    LinearDiffOperator operator*(const LinearDiffOperator& other) const;
    /// Left multiplication of every coefficient by f.
    LinearDiffOperator scaled(const DiffPolynomial& f) const;

    bool operator==(const LinearDiffOperator& other) const { return terms_ == other.terms_; }

private:
    void add_term(const DerivKey& key, const DiffPolynomial& coeff);
    std::map<DerivKey, DiffPolynomial> terms_;

    friend LinearDiffOperator compose(const LinearDiffOperator&, const LinearDiffOperator&);
};

/// P o Q by the general Leibniz rule; apply(compose(P,Q), f) = apply(P, apply(Q, f)).
LinearDiffOperator compose(const LinearDiffOperator& p, const LinearDiffOperator& q);

/// Application P(f): sum over keys of coeff * dx^i dy^j (f).
DiffPolynomial apply(const LinearDiffOperator& p, const DiffPolynomial& f);

/// Top-order coefficient map. Throws ZeroOperator on the zero operator.
std::map<DerivKey, DiffPolynomial> principal_symbol(const LinearDiffOperator& p);

/// Coefficient-wise substitution into every stored polynomial.
LinearDiffOperator substitute(const LinearDiffOperator& p,
                              const std::map<JetVariable, DiffPolynomial>& bindings);

/// The gauge exponent symbol: the transformation is conjugation by exp(alpha).
struct GaugeParameter {
    std::string symbol = "alpha";

    JetVariable jet_x(int k = 1) const { return {symbol, k, 0}; }
    JetVariable jet_y(int k = 1) const { return {symbol, 0, k}; }
};

/// exp(-alpha) o P o exp(alpha), computed by the substitution homomorphism
/// Dx -> Dx + alpha_x, Dy -> Dy + alpha_y applied to each derivative
/// monomial, coefficients unchanged.
LinearDiffOperator gauge_conjugate(const LinearDiffOperator& p, const GaugeParameter& alpha);

/// The operator Dx Dy + a Dx + b Dy + c.
struct LaplaceOperator {
    DiffPolynomial a, b, c;

    /// Coefficients as the pure jets a, b, c.
    static LaplaceOperator symbolic();
    /// Extracts (a,b,c) from an operator of the right shape; throws Error
    /// otherwise.
    static LaplaceOperator from_operator(const LinearDiffOperator& p);

    LinearDiffOperator embed() const;
};

/// The induced action on the coefficient triple:
/// (a, b, c) -> (a + alpha_y, b + alpha_x, c + a alpha_x + b alpha_y + alpha_xy + alpha_x alpha_y).
LaplaceOperator gauge_action_laplace(const LaplaceOperator& lc, const GaugeParameter& alpha);

/// Operator of order d with no mixed derivatives: coefficient m_i multiplies
/// Dx^i for i > 0, Dy^(-i) for i < 0, and 1 for i = 0.
class NormalizedM {
public:
    NormalizedM(int d, std::map<int, DiffPolynomial> coeffs);

    /// Generic coefficients: the jets m[-d] .. m[d].
    static NormalizedM symbolic(int d, const std::string& base = "m");
    /// Re-wraps an operator; throws MixedDerivative if it has a mixed term.
    /// d defaults to the operator order (at least 1); missing coefficients
    /// are zero.
    static NormalizedM from_operator(const LinearDiffOperator& p,
                                     std::optional<int> d = std::nullopt);

    int order() const { return d_; }
    /// m_i (zero polynomial if absent); |i| must be <= d.
    const DiffPolynomial& coeff(int i) const;

    LinearDiffOperator embed() const;

    bool operator==(const NormalizedM& other) const = default;

private:
    int d_;
    std::map<int, DiffPolynomial> coeffs_;
};

/// Conjugation of a mixed-free operator stays mixed-free; result is re-wrapped
/// with the same order.
NormalizedM gauge_conjugate_M(const NormalizedM& m, const GaugeParameter& alpha);

/// Order to use for an operator meant as a NormalizedM: the maximum of the
/// operator order and every |i| over indexed symbols base[i] occurring in the
/// coefficients, clamped to at least 1.
int infer_normalized_order(const LinearDiffOperator& p, const std::string& base = "m");

}  // namespace darx
