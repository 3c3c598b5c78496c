#include "darx/operators.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "darx/errors.hpp"

namespace darx {

namespace {
const DiffPolynomial kZeroPoly;
}

LinearDiffOperator LinearDiffOperator::term(const DiffPolynomial& coeff, int i, int j) {
    LinearDiffOperator p;
    if (!coeff.is_zero()) p.terms_.emplace(DerivKey{i, j}, coeff);
    return p;
}

const DiffPolynomial& LinearDiffOperator::coeff(int i, int j) const {
    auto it = terms_.find(DerivKey{i, j});
    return it == terms_.end() ? kZeroPoly : it->second;
}

int LinearDiffOperator::order() const {
    int order = kZeroOrder;
    for (const auto& [key, c] : terms_) order = std::max(order, key.order());
    return order;
}

void LinearDiffOperator::add_term(const DerivKey& key, const DiffPolynomial& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LinearDiffOperator& LinearDiffOperator::operator+=(const LinearDiffOperator& other) {
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
}

LinearDiffOperator& LinearDiffOperator::operator-=(const LinearDiffOperator& other) {
    for (const auto& [key, c] : other.terms_) add_term(key, -c);
    return *this;
}

LinearDiffOperator LinearDiffOperator::operator+(const LinearDiffOperator& other) const {
    LinearDiffOperator out = *this;
    out += other;
    return out;
}

LinearDiffOperator LinearDiffOperator::operator-(const LinearDiffOperator& other) const {
    LinearDiffOperator out = *this;
    out -= other;
    return out;
}

LinearDiffOperator LinearDiffOperator::operator-() const {
    LinearDiffOperator out;
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

LinearDiffOperator LinearDiffOperator::operator*(const LinearDiffOperator& other) const {
    return compose(*this, other);
}

LinearDiffOperator LinearDiffOperator::scaled(const DiffPolynomial& f) const {
    LinearDiffOperator out;
    for (const auto& [key, c] : terms_) out.add_term(key, f * c);
    return out;
}

LinearDiffOperator compose(const LinearDiffOperator& p, const LinearDiffOperator& q) {
    int max_i = 0, max_j = 0;
    for (const auto& [pk, pc] : p.terms()) {
        max_i = std::max(max_i, pk.i);
        max_j = std::max(max_j, pk.j);
    }
    LinearDiffOperator out;
    for (const auto& [qk, qc] : q.terms()) {
        // d[s][t] = dx^s dy^t of the coefficient of Q.
        std::vector<std::vector<DiffPolynomial>> d(
            static_cast<size_t>(max_i) + 1,
            std::vector<DiffPolynomial>(static_cast<size_t>(max_j) + 1));
        d[0][0] = qc;
        for (int s = 1; s <= max_i; ++s)
            d[static_cast<size_t>(s)][0] =
                total_derivative(d[static_cast<size_t>(s - 1)][0], Var::x);
        for (int s = 0; s <= max_i; ++s)
            for (int t = 1; t <= max_j; ++t)
                d[static_cast<size_t>(s)][static_cast<size_t>(t)] =
                    total_derivative(d[static_cast<size_t>(s)][static_cast<size_t>(t - 1)], Var::y);
        // Leibniz: Dx^i Dy^j o (q Dx^k Dy^l) sums over how many derivatives
        // land on q.
        for (const auto& [pk, pc] : p.terms()) {
            for (int s = 0; s <= pk.i; ++s) {
                for (int t = 0; t <= pk.j; ++t) {
                    const DiffPolynomial& dq =
                        d[static_cast<size_t>(pk.i - s)][static_cast<size_t>(pk.j - t)];
                    if (dq.is_zero()) continue;
                    const Rational factor = binomial(pk.i, s) * binomial(pk.j, t);
                    out.add_term(DerivKey{s + qk.i, t + qk.j}, pc * dq * factor);
                }
            }
        }
    }
    return out;
}

DiffPolynomial apply(const LinearDiffOperator& p, const DiffPolynomial& f) {
    DiffPolynomial out;
    for (const auto& [key, c] : p.terms()) {
        DiffPolynomial df = total_derivative(f, Var::x, key.i);
        df = total_derivative(df, Var::y, key.j);
        out += c * df;
    }
    return out;
}

std::map<DerivKey, DiffPolynomial> principal_symbol(const LinearDiffOperator& p) {
    if (p.is_zero()) throw ZeroOperator("principal symbol of the zero operator");
    const int order = p.order();
    std::map<DerivKey, DiffPolynomial> out;
    for (const auto& [key, c] : p.terms())
        if (key.order() == order) out.emplace(key, c);
    return out;
}

LinearDiffOperator substitute(const LinearDiffOperator& p,
                              const std::map<JetVariable, DiffPolynomial>& bindings) {
    LinearDiffOperator out;
    for (const auto& [key, c] : p.terms()) out += LinearDiffOperator::term(substitute(c, bindings), key.i, key.j);
    return out;
}

LinearDiffOperator gauge_conjugate(const LinearDiffOperator& p, const GaugeParameter& alpha) {
    int max_i = 0, max_j = 0;
    for (const auto& [key, c] : p.terms()) {
        max_i = std::max(max_i, key.i);
        max_j = std::max(max_j, key.j);
    }
    const LinearDiffOperator x_image =
        LinearDiffOperator::dx() + LinearDiffOperator::mul(DiffPolynomial::variable(alpha.jet_x()));
    const LinearDiffOperator y_image =
        LinearDiffOperator::dy() + LinearDiffOperator::mul(DiffPolynomial::variable(alpha.jet_y()));
    std::vector<LinearDiffOperator> x_pow{LinearDiffOperator::identity()};
    for (int i = 1; i <= max_i; ++i) x_pow.push_back(compose(x_pow.back(), x_image));
    std::vector<LinearDiffOperator> y_pow{LinearDiffOperator::identity()};
    for (int j = 1; j <= max_j; ++j) y_pow.push_back(compose(y_pow.back(), y_image));

    LinearDiffOperator out;
    for (const auto& [key, c] : p.terms())
        out += compose(x_pow[static_cast<size_t>(key.i)], y_pow[static_cast<size_t>(key.j)]).scaled(c);
    return out;
}

LaplaceOperator LaplaceOperator::symbolic() {
    return {DiffPolynomial::variable(jet("a")), DiffPolynomial::variable(jet("b")),
            DiffPolynomial::variable(jet("c"))};
}

LaplaceOperator LaplaceOperator::from_operator(const LinearDiffOperator& p) {
    for (const auto& [key, c] : p.terms()) {
        const bool allowed = (key.i == 1 && key.j == 1) || key.order() <= 1;
        if (!allowed)
            throw Error("operator is not of the form Dx*Dy + a*Dx + b*Dy + c");
    }
    if (!p.coeff(1, 1).is_one())
        throw Error("operator is not of the form Dx*Dy + a*Dx + b*Dy + c: "
                    "the Dx*Dy coefficient must be 1");
    return {p.coeff(1, 0), p.coeff(0, 1), p.coeff(0, 0)};
}

LinearDiffOperator LaplaceOperator::embed() const {
    LinearDiffOperator out = LinearDiffOperator::term(DiffPolynomial(1), 1, 1);
    out += LinearDiffOperator::term(a, 1, 0);
    out += LinearDiffOperator::term(b, 0, 1);
    out += LinearDiffOperator::term(c, 0, 0);
    return out;
}

LaplaceOperator gauge_action_laplace(const LaplaceOperator& lc, const GaugeParameter& alpha) {
    const DiffPolynomial ax = DiffPolynomial::variable(alpha.jet_x());
    const DiffPolynomial ay = DiffPolynomial::variable(alpha.jet_y());
    const DiffPolynomial axy = DiffPolynomial::variable(jet(alpha.symbol, 1, 1));
    return {lc.a + ay, lc.b + ax, lc.c + lc.a * ax + lc.b * ay + axy + ax * ay};
}

NormalizedM::NormalizedM(int d, std::map<int, DiffPolynomial> coeffs) : d_(d) {
    if (d < 1) throw Error("NormalizedM: order must be at least 1");
    for (auto& [i, c] : coeffs) {
        if (i < -d || i > d)
            throw Error("NormalizedM: coefficient index " + std::to_string(i) +
                        " out of range for order " + std::to_string(d));
        if (!c.is_zero()) coeffs_.emplace(i, std::move(c));
    }
}

NormalizedM NormalizedM::symbolic(int d, const std::string& base) {
    std::map<int, DiffPolynomial> coeffs;
    for (int i = -d; i <= d; ++i)
        coeffs.emplace(i, DiffPolynomial::variable(jet(indexed_symbol(base, i))));
    return NormalizedM(d, std::move(coeffs));
}

NormalizedM NormalizedM::from_operator(const LinearDiffOperator& p, std::optional<int> d) {
    std::map<int, DiffPolynomial> coeffs;
    for (const auto& [key, c] : p.terms()) {
        if (key.i > 0 && key.j > 0)
            throw MixedDerivative("operator has a mixed derivative term Dx^" +
                                  std::to_string(key.i) + "*Dy^" + std::to_string(key.j));
        coeffs.emplace(key.i > 0 ? key.i : -key.j, c);
    }
    const int order = std::max(p.is_zero() ? 0 : p.order(), 1);
    return NormalizedM(d.value_or(order), std::move(coeffs));
}

const DiffPolynomial& NormalizedM::coeff(int i) const {
    if (i < -d_ || i > d_)
        throw Error("NormalizedM: coefficient index " + std::to_string(i) +
                    " out of range for order " + std::to_string(d_));
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? kZeroPoly : it->second;
}

LinearDiffOperator NormalizedM::embed() const {
    LinearDiffOperator out;
    for (const auto& [i, c] : coeffs_)
        out += LinearDiffOperator::term(c, i > 0 ? i : 0, i < 0 ? -i : 0);
    return out;
}

NormalizedM gauge_conjugate_M(const NormalizedM& m, const GaugeParameter& alpha) {
    return NormalizedM::from_operator(gauge_conjugate(m.embed(), alpha), m.order());
}

int infer_normalized_order(const LinearDiffOperator& p, const std::string& base) {
    int d = 1;
    for (const auto& [key, c] : p.terms()) {
        d = std::max(d, key.order());
        for (const JetVariable& v : c.jets()) {
            std::string b;
            int index;
            if (parse_symbol_index(v.symbol, &b, &index) && b == base)
                d = std::max(d, std::abs(index));
        }
    }
    return d;
}

}  // namespace darx
