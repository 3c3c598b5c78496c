#include "darx/poly.hpp"

#include <algorithm>

#include "darx/errors.hpp"

namespace darx {

std::string JetVariable::name() const {
    std::string out = symbol;
    if (nx > 0 || ny > 0) {
        out += '_';
        out.append(static_cast<size_t>(nx), 'x');
        out.append(static_cast<size_t>(ny), 'y');
    }
    return out;
}

std::string indexed_symbol(const std::string& base, int index) {
    return base + "[" + std::to_string(index) + "]";
}

bool parse_symbol_index(const std::string& symbol, std::string* base, int* index) {
    auto open = symbol.find('[');
    if (open == std::string::npos || symbol.back() != ']') return false;
    const std::string digits = symbol.substr(open + 1, symbol.size() - open - 2);
    if (digits.empty()) return false;
    size_t pos = 0;
    int value;
    try {
        value = std::stoi(digits, &pos);
    } catch (const std::exception&) {
        return false;
    }
    if (pos != digits.size()) return false;
    if (base) *base = symbol.substr(0, open);
    if (index) *index = value;
    return true;
}

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    for (auto& [v, e] : factors) {
        if (e == 0) continue;
        if (!factors_.empty() && factors_.back().first == v) {
            factors_.back().second += e;
            if (factors_.back().second == 0) factors_.pop_back();
        } else {
            factors_.emplace_back(v, e);
        }
    }
    for (const auto& [v, e] : factors_) degree_ += e;
}

Monomial Monomial::variable(const JetVariable& v, int exp) {
    Monomial m;
    if (exp != 0) {
        m.factors_.emplace_back(v, exp);
        m.degree_ = exp;
    }
    return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first < b->first) {
            out.factors_.push_back(*a++);
        } else if (b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, other.factors_.end());
    out.degree_ = degree_ + other.degree_;
    return out;
}

DiffPolynomial::DiffPolynomial(const Rational& value) {
    if (value != 0) terms_.emplace(Monomial::unit(), value);
}

DiffPolynomial DiffPolynomial::variable(const JetVariable& v) {
    DiffPolynomial p;
    p.terms_.emplace(Monomial::variable(v), Rational(1));
    return p;
}

DiffPolynomial DiffPolynomial::term(const Rational& coeff, Monomial m) {
    DiffPolynomial p;
    if (coeff != 0) p.terms_.emplace(std::move(m), coeff);
    return p;
}

bool DiffPolynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
           terms_.begin()->second == 1;
}

bool DiffPolynomial::constant_value(Rational* out) const {
    if (terms_.empty()) {
        if (out) *out = 0;
        return true;
    }
    if (terms_.size() == 1 && terms_.begin()->first.is_unit()) {
        if (out) *out = terms_.begin()->second;
        return true;
    }
    return false;
}

int DiffPolynomial::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::set<JetVariable> DiffPolynomial::jets() const {
    std::set<JetVariable> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) out.insert(v);
    return out;
}

void DiffPolynomial::add_term(const Monomial& m, const Rational& c) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DiffPolynomial DiffPolynomial::operator-() const {
    DiffPolynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

DiffPolynomial& DiffPolynomial::operator+=(const DiffPolynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

DiffPolynomial& DiffPolynomial::operator-=(const DiffPolynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

DiffPolynomial DiffPolynomial::operator+(const DiffPolynomial& other) const {
    DiffPolynomial out = *this;
    out += other;
    return out;
}

DiffPolynomial DiffPolynomial::operator-(const DiffPolynomial& other) const {
    DiffPolynomial out = *this;
    out -= other;
    return out;
}

DiffPolynomial DiffPolynomial::operator*(const DiffPolynomial& other) const {
    DiffPolynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

DiffPolynomial& DiffPolynomial::operator*=(const DiffPolynomial& other) {
    *this = *this * other;
    return *this;
}

DiffPolynomial DiffPolynomial::operator*(const Rational& scalar) const {
    if (scalar == 0) return {};
    DiffPolynomial out = *this;
    for (auto& [m, c] : out.terms_) c *= scalar;
    return out;
}

DiffPolynomial DiffPolynomial::pow(unsigned exp) const {
    DiffPolynomial out(1);
    DiffPolynomial base = *this;
    while (exp > 0) {
        if (exp & 1u) out *= base;
        exp >>= 1u;
        if (exp > 0) base *= base;
    }
    return out;
}

DiffPolynomial total_derivative(const DiffPolynomial& p, Var dir) {
    DiffPolynomial out;
    for (const auto& [m, c] : p.terms_) {
        const auto& factors = m.factors();
        for (size_t i = 0; i < factors.size(); ++i) {
            // Product rule: differentiate factor i, keep the rest.
            std::vector<Monomial::Factor> rest;
            rest.reserve(factors.size() + 1);
            for (size_t j = 0; j < factors.size(); ++j) {
                if (j == i) {
                    if (factors[j].second > 1)
                        rest.emplace_back(factors[j].first, factors[j].second - 1);
                    rest.emplace_back(factors[j].first.derivative(dir), 1);
                } else {
                    rest.push_back(factors[j]);
                }
            }
            out.add_term(Monomial(std::move(rest)), c * factors[i].second);
        }
    }
    return out;
}

DiffPolynomial substitute(const DiffPolynomial& p,
                          const std::map<JetVariable, DiffPolynomial>& bindings) {
    DiffPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        DiffPolynomial acc(c);
        std::vector<Monomial::Factor> untouched;
        for (const auto& [v, e] : m.factors()) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                untouched.emplace_back(v, e);
            } else {
                acc *= it->second.pow(static_cast<unsigned>(e));
            }
        }
        if (!untouched.empty())
            acc *= DiffPolynomial::term(1, Monomial(std::move(untouched)));
        out += acc;
    }
    return out;
}

Rational evaluate(const DiffPolynomial& p, const std::map<JetVariable, Rational>& point) {
    Rational out = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational value = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = point.find(v);
            if (it == point.end())
                throw UnboundJet("unbound jet variable '" + v.name() + "' in evaluation");
            value *= rational_pow(it->second, static_cast<unsigned long>(e));
        }
        out += value;
    }
    return out;
}

}  // namespace darx
