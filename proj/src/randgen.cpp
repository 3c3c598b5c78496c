#include "darx/randgen.hpp"

namespace darx {

int RandomSource::uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rational RandomSource::rational(int max_num, int max_den) {
    Rational q(uniform(-max_num, max_num), uniform(1, max_den));
    q.canonicalize();
    return q;
}

Rational RandomSource::nonzero_rational(int max_num, int max_den) {
    for (;;) {
        Rational q = rational(max_num, max_den);
        if (q != 0) return q;
    }
}

JetVariable RandomSource::jet_variable(const std::vector<std::string>& symbols,
                                       int max_jet_order) {
    const std::string& s = symbols[static_cast<std::size_t>(
        uniform(0, static_cast<int>(symbols.size()) - 1))];
    int nx = uniform(0, max_jet_order);
    int ny = uniform(0, max_jet_order - nx);
    return jet(s, nx, ny);
}

DiffPolynomial RandomSource::polynomial(const std::vector<std::string>& symbols, int max_terms,
                                        int max_degree, int max_jet_order) {
    DiffPolynomial out;
    int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int degree = uniform(0, max_degree);
        for (int k = 0; k < degree; ++k)
            m = m * Monomial::variable(jet_variable(symbols, max_jet_order));
        out += DiffPolynomial::term(nonzero_rational(), m);
    }
    return out;
}

LinearDiffOperator RandomSource::linear_operator(int max_order,
                                                 const std::vector<std::string>& symbols) {
    LinearDiffOperator out;
    int terms = uniform(1, 3);
    for (int t = 0; t < terms; ++t) {
        int i = uniform(0, max_order);
        int j = uniform(0, max_order - i);
        out += LinearDiffOperator::term(polynomial(symbols), i, j);
    }
    return out;
}

LaplaceOperator RandomSource::laplace(const std::vector<std::string>& symbols) {
    return {polynomial(symbols), polynomial(symbols), polynomial(symbols)};
}

std::map<JetVariable, Rational> RandomSource::point(const std::set<JetVariable>& jets,
                                                    int max_num, int max_den) {
    std::map<JetVariable, Rational> out;
    for (const JetVariable& v : jets) out[v] = rational(max_num, max_den);
    return out;
}

}  // namespace darx
