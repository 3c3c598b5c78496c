#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace darx {

/// Exact arbitrary-precision rational scalar. GMP keeps values canonical:
/// lowest terms, positive denominator, no rounding anywhere.
using Rational = mpq_class;

/// num/den reduced to canonical form.
inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_pow(const Rational& base, unsigned long exp) {
    if (exp == 0) return 1;
    Rational out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
    return out;
}

inline Rational factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

/// Binomial coefficient by the Pascal recurrence, exact.
inline Rational binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    std::vector<mpz_class> row(static_cast<size_t>(n) + 1);
    row[0] = 1;
    for (int r = 1; r <= n; ++r)
        for (int j = r; j >= 1; --j) row[j] += row[j - 1];
    return Rational(row[k]);
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace darx
