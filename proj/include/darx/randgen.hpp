#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "darx/operators.hpp"
#include "darx/poly.hpp"

namespace darx {

/// Deterministic source of random expressions for property tests. Same
/// seed, same sequence of draws.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& engine() { return rng_; }

    int uniform(int lo, int hi);

    /// Numerator in [-max_num, max_num], denominator in [1, max_den].
    Rational rational(int max_num = 9, int max_den = 4);
    Rational nonzero_rational(int max_num = 9, int max_den = 4);

    JetVariable jet_variable(const std::vector<std::string>& symbols, int max_jet_order);

    DiffPolynomial polynomial(const std::vector<std::string>& symbols, int max_terms = 3,
                              int max_degree = 2, int max_jet_order = 2);

    /// Up to max_order in each of Dx, Dy combined; polynomial coefficients.
    LinearDiffOperator linear_operator(int max_order, const std::vector<std::string>& symbols);

    /// Dx*Dy + a*Dx + b*Dy + c with random polynomial a, b, c.
    LaplaceOperator laplace(const std::vector<std::string>& symbols);

    /// A random point: every listed jet gets a rational value.
    std::map<JetVariable, Rational> point(const std::set<JetVariable>& jets, int max_num = 7,
                                          int max_den = 5);

  private:
    std::mt19937_64 rng_;
};

}  // namespace darx
