#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "darx/rational.hpp"

namespace darx {

/// Direction of a derivation.
enum class Var { x, y };

/// A formal derivative coordinate of a named coefficient function,
/// e.g. a_xxy = (symbol "a", nx 2, ny 1). Jets of the same symbol with
/// different (nx, ny) are algebraically independent indeterminates.
struct JetVariable {
    std::string symbol;
    int nx = 0;
    int ny = 0;

    // Total order: symbol, then nx, then ny.
    auto operator<=>(const JetVariable&) const = default;

    JetVariable derivative(Var dir) const {
        return {symbol, nx + (dir == Var::x ? 1 : 0), ny + (dir == Var::y ? 1 : 0)};
    }

    /// Canonical name, x-suffix letters before y: "a_xxy", "m[-3]_y".
    std::string name() const;
};

inline JetVariable jet(std::string symbol, int nx = 0, int ny = 0) {
    return {std::move(symbol), nx, ny};
}

/// Symbol housing the i-th coefficient of a mixed-free operator: "m[i]".
std::string indexed_symbol(const std::string& base, int index);

/// If the symbol has the form base[i], returns the index.
bool parse_symbol_index(const std::string& symbol, std::string* base, int* index);

/// Power product of jet variables. Factors are kept sorted with positive
/// exponents; the empty product is the unit.
class Monomial {
public:
    using Factor = std::pair<JetVariable, int>;

    Monomial() = default;
    /// Canonicalizes: sorts, merges repeats, drops zero exponents.
    explicit Monomial(std::vector<Factor> factors);

    static Monomial unit() { return {}; }
    static Monomial variable(const JetVariable& v, int exp = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    int degree() const { return degree_; }
    bool is_unit() const { return factors_.empty(); }

    Monomial operator*(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return factors_ == other.factors_; }
    // Graded order: total degree first, then lexicographic on the factor list.
    std::strong_ordering operator<=>(const Monomial& other) const {
        if (auto c = degree_ <=> other.degree_; c != std::strong_ordering::equal) return c;
        return factors_ <=> other.factors_;
    }

private:
    std::vector<Factor> factors_;
    int degree_ = 0;
};

/// Sparse multivariate polynomial in jet variables over exact rationals.
/// No zero coefficients are stored, so structural equality of the term map
/// coincides with algebraic equality.
class DiffPolynomial {
public:
    DiffPolynomial() = default;
    DiffPolynomial(int value) : DiffPolynomial(Rational(value)) {}
    DiffPolynomial(const Rational& value);

    static DiffPolynomial variable(const JetVariable& v);
    static DiffPolynomial term(const Rational& coeff, Monomial m);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// The coefficient if the polynomial is constant, nothing otherwise.
    bool constant_value(Rational* out) const;
    int degree() const;

    /// Set of jet variables occurring with nonzero exponent.
    std::set<JetVariable> jets() const;

    DiffPolynomial operator-() const;
    DiffPolynomial& operator+=(const DiffPolynomial& other);
    DiffPolynomial& operator-=(const DiffPolynomial& other);
    DiffPolynomial operator+(const DiffPolynomial& other) const;
    DiffPolynomial operator-(const DiffPolynomial& other) const;
    DiffPolynomial operator*(const DiffPolynomial& other) const;
    DiffPolynomial& operator*=(const DiffPolynomial& other);
    DiffPolynomial operator*(const Rational& scalar) const;
    DiffPolynomial pow(unsigned exp) const;

    bool operator==(const DiffPolynomial& other) const { return terms_ == other.terms_; }

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;

    friend DiffPolynomial total_derivative(const DiffPolynomial&, Var);
};

inline DiffPolynomial operator*(const Rational& scalar, const DiffPolynomial& p) {
    return p * scalar;
}

/// The derivation d/dx or d/dy: product rule over monomials, jet (s,nx,ny)
/// maps to (s,nx+1,ny) resp. (s,nx,ny+1), constants to zero.
DiffPolynomial total_derivative(const DiffPolynomial& p, Var dir);

inline DiffPolynomial total_derivative(const DiffPolynomial& p, Var dir, int times) {
    DiffPolynomial out = p;
    for (int i = 0; i < times; ++i) out = total_derivative(out, dir);
    return out;
}

/// Simultaneous substitution; unbound variables are left unchanged.
DiffPolynomial substitute(const DiffPolynomial& p,
                          const std::map<JetVariable, DiffPolynomial>& bindings);

/// Exact value at a rational point. Throws UnboundJet if a variable of p is
/// missing from the point.
Rational evaluate(const DiffPolynomial& p, const std::map<JetVariable, Rational>& point);

}  // namespace darx
