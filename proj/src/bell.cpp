#include "darx/bell.hpp"

#include <algorithm>
#include <string>

#include "darx/errors.hpp"

namespace darx {

BellArgs derivative_chain(const DiffPolynomial& f, Var dir, int count) {
    BellArgs out;
    out.reserve(static_cast<size_t>(count));
    DiffPolynomial cur = f;
    for (int i = 0; i < count; ++i) {
        out.push_back(cur);
        if (i + 1 < count) cur = total_derivative(cur, dir);
    }
    return out;
}

BellArgs negated_derivative_chain(const DiffPolynomial& f, Var dir, int count) {
    BellArgs out = derivative_chain(f, dir, count);
    for (auto& p : out) p = -p;
    return out;
}

namespace {

void require_args(const BellArgs& xs, int needed, const char* what) {
    if (static_cast<int>(xs.size()) < needed)
        throw Error(std::string(what) + ": needs " + std::to_string(needed) +
                    " arguments, got " + std::to_string(xs.size()));
}

// Enumerates sequences (j_1..j_m) with sum j_i = k and sum i*j_i = n,
// accumulating each multinomial term into `sum`. Bounded recursion; at the
// orders used here (n <= 12) nothing smarter is needed.
void enumerate_terms(int index, int m, int remaining_k, int remaining_n,
                     std::vector<int>& js, const BellArgs& xs, const Rational& n_fact,
                     DiffPolynomial& sum) {
    if (index > m) {
        if (remaining_k != 0 || remaining_n != 0) return;
        Rational coeff = n_fact;
        DiffPolynomial product(1);
        for (int i = 1; i <= m; ++i) {
            const int j = js[static_cast<size_t>(i - 1)];
            if (j == 0) continue;
            coeff /= factorial(j) * rational_pow(factorial(i), static_cast<unsigned long>(j));
            product *= xs[static_cast<size_t>(i - 1)].pow(static_cast<unsigned>(j));
        }
        sum += product * coeff;
        return;
    }
    const int max_j = std::min(remaining_k, remaining_n / index);
    for (int j = 0; j <= max_j; ++j) {
        js[static_cast<size_t>(index - 1)] = j;
        enumerate_terms(index + 1, m, remaining_k - j, remaining_n - index * j, js, xs,
                        n_fact, sum);
    }
    js[static_cast<size_t>(index - 1)] = 0;
}

DiffPolynomial det_cofactor(const std::vector<std::vector<DiffPolynomial>>& a) {
    const size_t n = a.size();
    if (n == 1) return a[0][0];
    DiffPolynomial det;
    for (size_t r = 0; r < n; ++r) {
        if (a[r][0].is_zero()) continue;
        std::vector<std::vector<DiffPolynomial>> minor;
        minor.reserve(n - 1);
        for (size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            minor.emplace_back(a[i].begin() + 1, a[i].end());
        }
        DiffPolynomial contribution = a[r][0] * det_cofactor(minor);
        if (r % 2 == 0)
            det += contribution;
        else
            det -= contribution;
    }
    return det;
}

}  // namespace

DiffPolynomial bell_partial(int n, int k, const BellArgs& xs) {
    if (n < 0 || k < 0 || k > n)
        throw BadIndex("bell_partial: bad indices n=" + std::to_string(n) +
                       ", k=" + std::to_string(k));
    if (n == 0) return DiffPolynomial(1);  // k == 0 here
    if (k == 0) return {};
    const int m = n - k + 1;
    require_args(xs, m, "bell_partial");
    DiffPolynomial sum;
    std::vector<int> js(static_cast<size_t>(m), 0);
    enumerate_terms(1, m, k, n, js, xs, factorial(n), sum);
    return sum;
}

DiffPolynomial bell_complete(int n, const BellArgs& xs) {
    if (n < 0) throw BadIndex("bell_complete: negative n");
    if (n == 0) return DiffPolynomial(1);
    require_args(xs, n, "bell_complete");
    DiffPolynomial sum;
    for (int k = 1; k <= n; ++k) sum += bell_partial(n, k, xs);
    return sum;
}

DiffPolynomial bell_complete_det(int n, const BellArgs& xs) {
    if (n < 1) throw BadIndex("bell_complete_det: n must be positive");
    require_args(xs, n, "bell_complete_det");
    std::vector<std::vector<DiffPolynomial>> a(
        static_cast<size_t>(n), std::vector<DiffPolynomial>(static_cast<size_t>(n)));
    for (int r = 0; r < n; ++r) {
        if (r > 0) a[static_cast<size_t>(r)][static_cast<size_t>(r - 1)] = DiffPolynomial(-1);
        for (int c = r; c < n; ++c)
            a[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                xs[static_cast<size_t>(c - r)] * binomial(n - 1 - r, c - r);
    }
    return det_cofactor(a);
}

}  // namespace darx
