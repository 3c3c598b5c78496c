#include "darx/selftest.hpp"

#include <functional>
#include <ostream>
#include <set>
#include <utility>
#include <vector>

#include "darx/bell.hpp"
#include "darx/darboux.hpp"
#include "darx/errors.hpp"
#include "darx/invariants.hpp"
#include "darx/operators.hpp"
#include "darx/poly.hpp"
#include "darx/randgen.hpp"
#include "darx/textio.hpp"

namespace darx {

namespace {

const std::vector<std::string> kSymbols = {"a", "b", "c"};

// Every partition of an n-set, visited once: each element joins one of the
// blocks opened so far or starts a new one. Leaf count = number of
// partitions. Deliberately enumerative; the Bell machinery is what it
// cross-checks.
long partition_count(int element, int blocks, int n) {
    if (element == n) return 1;
    long total = 0;
    for (int b = 0; b < blocks; ++b) total += partition_count(element + 1, blocks, n);
    return total + partition_count(element + 1, blocks + 1, n);
}

long count_set_partitions(int n) { return partition_count(0, 0, n); }

bool fail_with(std::string* detail, const std::string& msg) {
    *detail = msg;
    return false;
}

class Harness {
  public:
    explicit Harness(std::ostream& log) : log_(log) {}

    void check(const std::string& name, const std::function<bool(std::string*)>& body) {
        CheckResult r;
        r.name = name;
        try {
            r.passed = body(&r.detail);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        log_ << (r.passed ? "[ ok ] " : "[FAIL] ") << r.name;
        if (!r.passed && !r.detail.empty()) log_ << ": " << r.detail;
        log_ << '\n';
        results_.push_back(std::move(r));
    }

    std::vector<CheckResult> take() { return std::move(results_); }

  private:
    std::ostream& log_;
    std::vector<CheckResult> results_;
};

std::set<JetVariable> union_jets(const DiffPolynomial& p, std::set<JetVariable> acc) {
    for (const JetVariable& v : p.jets()) acc.insert(v);
    return acc;
}

}  // namespace

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.passed) return false;
    return true;
}

std::vector<CheckResult> run_selftest(const SelftestOptions& opt, std::ostream& log) {
    Harness h(log);
    RandomSource rng(opt.seed);

    const DiffPolynomial a = DiffPolynomial::variable(jet("a"));
    const DiffPolynomial b = DiffPolynomial::variable(jet("b"));
    const GaugeParameter alpha;

    h.check("ring axioms on random polynomials", [&](std::string* d) {
        for (int t = 0; t < 150; ++t) {
            DiffPolynomial p = rng.polynomial(kSymbols);
            DiffPolynomial q = rng.polynomial(kSymbols);
            DiffPolynomial r = rng.polynomial(kSymbols);
            if (!((p + q) + r == p + (q + r))) return fail_with(d, "addition associativity");
            if (!(p * q == q * p)) return fail_with(d, "multiplication commutativity");
            if (!((p * q) * r == p * (q * r))) return fail_with(d, "multiplication associativity");
            if (!(p * (q + r) == p * q + p * r)) return fail_with(d, "distributivity");
            if (!(p - p).is_zero()) return fail_with(d, "additive inverse");
        }
        return true;
    });

    h.check("mixed partials commute", [&](std::string* d) {
        for (int t = 0; t < 100; ++t) {
            DiffPolynomial p = rng.polynomial(kSymbols);
            if (!(total_derivative(total_derivative(p, Var::x), Var::y) ==
                  total_derivative(total_derivative(p, Var::y), Var::x)))
                return fail_with(d, "dx dy != dy dx");
        }
        return true;
    });

    h.check("product rule", [&](std::string* d) {
        for (int t = 0; t < 100; ++t) {
            DiffPolynomial p = rng.polynomial(kSymbols);
            DiffPolynomial q = rng.polynomial(kSymbols);
            for (Var v : {Var::x, Var::y}) {
                if (!(total_derivative(p * q, v) ==
                      total_derivative(p, v) * q + p * total_derivative(q, v)))
                    return fail_with(d, "d(pq) != dp q + p dq");
            }
        }
        return true;
    });

    h.check("evaluation is a ring homomorphism", [&](std::string* d) {
        for (int t = 0; t < 100; ++t) {
            DiffPolynomial p = rng.polynomial(kSymbols);
            DiffPolynomial q = rng.polynomial(kSymbols);
            auto pt = rng.point(union_jets(p, q.jets()));
            if (evaluate(p + q, pt) != evaluate(p, pt) + evaluate(q, pt))
                return fail_with(d, "sum");
            if (evaluate(p * q, pt) != evaluate(p, pt) * evaluate(q, pt))
                return fail_with(d, "product");
        }
        return true;
    });

    h.check("identity substitution", [&](std::string* d) {
        for (int t = 0; t < 50; ++t) {
            DiffPolynomial p = rng.polynomial(kSymbols);
            std::map<JetVariable, DiffPolynomial> id;
            for (const JetVariable& v : p.jets()) id[v] = DiffPolynomial::variable(v);
            if (!(substitute(p, id) == p)) return fail_with(d, "p[id] != p");
        }
        return true;
    });

    h.check("composition is associative", [&](std::string* d) {
        for (int t = 0; t < 50; ++t) {
            LinearDiffOperator p = rng.linear_operator(2, kSymbols);
            LinearDiffOperator q = rng.linear_operator(2, kSymbols);
            LinearDiffOperator r = rng.linear_operator(2, kSymbols);
            if (!(compose(compose(p, q), r) == compose(p, compose(q, r))))
                return fail_with(d, "(PQ)R != P(QR)");
        }
        return true;
    });

    h.check("composition with the identity", [&](std::string* d) {
        for (int t = 0; t < 50; ++t) {
            LinearDiffOperator p = rng.linear_operator(3, kSymbols);
            LinearDiffOperator one = LinearDiffOperator::identity();
            if (!(compose(one, p) == p && compose(p, one) == p))
                return fail_with(d, "identity is not neutral");
        }
        return true;
    });

    h.check("composition matches nested application", [&](std::string* d) {
        for (int t = 0; t < 50; ++t) {
            LinearDiffOperator p = rng.linear_operator(2, kSymbols);
            LinearDiffOperator q = rng.linear_operator(2, kSymbols);
            DiffPolynomial f = rng.polynomial(kSymbols);
            if (!(apply(compose(p, q), f) == apply(p, apply(q, f))))
                return fail_with(d, "(PQ)f != P(Qf)");
        }
        return true;
    });

    h.check("conjugation is a ring homomorphism", [&](std::string* d) {
        for (int t = 0; t < 30; ++t) {
            LinearDiffOperator p = rng.linear_operator(4, kSymbols);
            LinearDiffOperator q = rng.linear_operator(4, kSymbols);
            if (!(gauge_conjugate(compose(p, q), alpha) ==
                  compose(gauge_conjugate(p, alpha), gauge_conjugate(q, alpha))))
                return fail_with(d, "conj(PQ) != conj(P) conj(Q)");
            if (!(gauge_conjugate(p + q, alpha) ==
                  gauge_conjugate(p, alpha) + gauge_conjugate(q, alpha)))
                return fail_with(d, "conj(P+Q) != conj(P) + conj(Q)");
        }
        return true;
    });

    h.check("conjugation fixes multiplication operators", [&](std::string* d) {
        for (int t = 0; t < 30; ++t) {
            DiffPolynomial f = rng.polynomial(kSymbols);
            LinearDiffOperator m = LinearDiffOperator::mul(f);
            if (!(gauge_conjugate(m, alpha) == m)) return fail_with(d, "conj(f) != f");
        }
        return true;
    });

    h.check("gauge action on the second-order form", [&](std::string* d) {
        LaplaceOperator lc = LaplaceOperator::symbolic();
        LinearDiffOperator direct = gauge_conjugate(lc.embed(), alpha);
        LaplaceOperator moved = gauge_action_laplace(lc, alpha);
        if (!(direct == moved.embed())) return fail_with(d, "coefficient formulas disagree");
        return true;
    });

    h.check("classical second-order invariants are gauge fixed", [&](std::string* d) {
        LaplaceOperator lc = LaplaceOperator::symbolic();
        LaplaceInvariants base = laplace_invariants(lc);
        LaplaceInvariants moved = laplace_invariants(gauge_action_laplace(lc, alpha));
        if (!(base.h == moved.h)) return fail_with(d, "h moved");
        if (!(base.k == moved.k)) return fail_with(d, "k moved");
        if (!(base.m == moved.m)) return fail_with(d, "m moved");
        return true;
    });

    h.check("factored forms and their free terms", [&](std::string* d) {
        LinearDiffOperator dxb = LinearDiffOperator::dx() + LinearDiffOperator::mul(b);
        LinearDiffOperator dya = LinearDiffOperator::dy() + LinearDiffOperator::mul(a);
        LaplaceOperator right{a, b, a * b + total_derivative(b, Var::y)};
        if (!(compose(dya, dxb) == right.embed())) return fail_with(d, "(Dy+a)(Dx+b)");
        LaplaceInvariants ri = laplace_invariants(right);
        if (!ri.k.is_zero()) return fail_with(d, "k of (Dy+a)(Dx+b)");
        if (!(ri.h == ri.m)) return fail_with(d, "h != m for (Dy+a)(Dx+b)");
        LaplaceOperator left{a, b, a * b + total_derivative(a, Var::x)};
        if (!(compose(dxb, dya) == left.embed())) return fail_with(d, "(Dx+b)(Dy+a)");
        if (!laplace_invariants(left).h.is_zero()) return fail_with(d, "h of (Dx+b)(Dy+a)");
        return true;
    });

    h.check("Bell values count set partitions", [&](std::string* d) {
        for (int n = 0; n <= 8; ++n) {
            BellArgs ones(static_cast<std::size_t>(n), DiffPolynomial(1));
            Rational value;
            if (!bell_complete(n, ones).constant_value(&value))
                return fail_with(d, "non-constant at ones");
            if (value != count_set_partitions(n))
                return fail_with(d, "n=" + std::to_string(n));
        }
        return true;
    });

    h.check("Bell determinant form agrees with the sum form", [&](std::string* d) {
        BellArgs xs;
        for (int i = 1; i <= 8; ++i)
            xs.push_back(DiffPolynomial::variable(jet("x" + std::to_string(i))));
        for (int n = 1; n <= 8; ++n) {
            if (!(bell_complete_det(n, xs) == bell_complete(n, xs)))
                return fail_with(d, "n=" + std::to_string(n));
        }
        return true;
    });

    h.check("partial Bell recurrence", [&](std::string* d) {
        BellArgs xs;
        for (int i = 1; i <= 7; ++i)
            xs.push_back(DiffPolynomial::variable(jet("x" + std::to_string(i))));
        for (int n = 1; n <= 7; ++n) {
            for (int k = 1; k <= n; ++k) {
                DiffPolynomial sum;
                for (int j = 1; j <= n - k + 1; ++j)
                    sum += binomial(n - 1, j - 1) * xs[static_cast<std::size_t>(j - 1)] *
                           bell_partial(n - j, k - 1, xs);
                if (!(bell_partial(n, k, xs) == sum))
                    return fail_with(d, "n=" + std::to_string(n) + " k=" + std::to_string(k));
            }
        }
        return true;
    });

    h.check("first-order recursion matches Bell chains", [&](std::string* d) {
        for (int i = 0; i <= 8; ++i) {
            if (!(p_op(b, Var::x, i) == bell_complete(i, negated_derivative_chain(b, Var::x, i))))
                return fail_with(d, "x side, i=" + std::to_string(i));
            if (!(p_op(a, Var::y, i) == bell_complete(i, negated_derivative_chain(a, Var::y, i))))
                return fail_with(d, "y side, i=" + std::to_string(i));
        }
        return true;
    });

    h.check("conjugated pure-power coefficients", [&](std::string* d) {
        for (int i = 0; i <= 5; ++i) {
            DiffPolynomial mi = DiffPolynomial::variable(jet(indexed_symbol("m", i)));
            LinearDiffOperator cx =
                gauge_conjugate(LinearDiffOperator::term(mi, i, 0), alpha);
            LinearDiffOperator cy =
                gauge_conjugate(LinearDiffOperator::term(mi, 0, i), alpha);
            DiffPolynomial ax = DiffPolynomial::variable(alpha.jet_x(1));
            DiffPolynomial ay = DiffPolynomial::variable(alpha.jet_y(1));
            for (int k = 0; k <= i; ++k) {
                DiffPolynomial expected_x =
                    mi * binomial(i, k) *
                    bell_complete(i - k, derivative_chain(ax, Var::x, i - k));
                if (!(cx.coeff(k, 0) == expected_x))
                    return fail_with(d, "Dx^" + std::to_string(i) + " at k=" + std::to_string(k));
                DiffPolynomial expected_y =
                    mi * binomial(i, k) *
                    bell_complete(i - k, derivative_chain(ay, Var::y, i - k));
                if (!(cy.coeff(0, k) == expected_y))
                    return fail_with(d, "Dy^" + std::to_string(i) + " at k=" + std::to_string(k));
            }
        }
        return true;
    });

    h.check("the two invariant constructions agree", [&](std::string* d) {
        for (int deg = 1; deg <= opt.symbolic_max_order; ++deg) {
            LaplaceOperator lc = LaplaceOperator::symbolic();
            NormalizedM m = NormalizedM::symbolic(deg);
            if (!(invariants_bell(lc, m) == invariants_omega(lc, m)))
                return fail_with(d, "d=" + std::to_string(deg));
        }
        return true;
    });

    h.check("invariants are gauge fixed, symbolically", [&](std::string* d) {
        for (int deg = 1; deg <= opt.symbolic_max_order; ++deg) {
            if (!verify_gauge_invariance(LaplaceOperator::symbolic(), NormalizedM::symbolic(deg),
                                         alpha))
                return fail_with(d, "d=" + std::to_string(deg));
        }
        return true;
    });

    h.check("invariants are gauge fixed at random points", [&](std::string* d) {
        for (int deg = 1; deg <= opt.max_order; ++deg) {
            LaplaceOperator lc = LaplaceOperator::symbolic();
            NormalizedM m = NormalizedM::symbolic(deg);
            InvariantSet base = invariants_bell(lc, m);
            InvariantSet moved =
                invariants_bell(gauge_action_laplace(lc, alpha), gauge_conjugate_M(m, alpha));
            std::vector<std::pair<const DiffPolynomial*, const DiffPolynomial*>> entries;
            entries.emplace_back(&base.m, &moved.m);
            entries.emplace_back(&base.h, &moved.h);
            for (int j = -deg; j <= deg; ++j)
                entries.emplace_back(&base.R.at(j), &moved.R.at(j));
            std::set<JetVariable> jets;
            for (const auto& [lhs, rhs] : entries) {
                jets = union_jets(*lhs, std::move(jets));
                jets = union_jets(*rhs, std::move(jets));
            }
            for (int pt = 0; pt < opt.points; ++pt) {
                auto point = rng.point(jets);
                for (std::size_t e = 0; e < entries.size(); ++e) {
                    if (evaluate(*entries[e].first, point) != evaluate(*entries[e].second, point))
                        return fail_with(d, "d=" + std::to_string(deg) + ", entry " +
                                                std::to_string(e));
                }
            }
        }
        return true;
    });

    h.check("restricted conjugated coefficients reproduce the invariants", [&](std::string* d) {
        for (int deg = 1; deg <= std::min(4, opt.symbolic_max_order); ++deg) {
            LaplaceOperator lc = LaplaceOperator::symbolic();
            NormalizedM m = NormalizedM::symbolic(deg);
            InvariantSet base = invariants_bell(lc, m);
            NormalizedM moved = gauge_conjugate_M(m, alpha);
            for (int j = -deg; j <= deg; ++j) {
                if (!(frame_restrict(moved.coeff(j), alpha) == base.R.at(j)))
                    return fail_with(d, "d=" + std::to_string(deg) + ", j=" + std::to_string(j));
            }
        }
        return true;
    });

    h.check("known intertwinings have zero residual", [&](std::string* d) {
        LinearDiffOperator l = LaplaceOperator::symbolic().embed();
        if (!darboux_holds(DarbouxQuadruple(l, l, l, l))) return fail_with(d, "all equal");
        LinearDiffOperator dxb = LinearDiffOperator::dx() + LinearDiffOperator::mul(b);
        LinearDiffOperator dya = LinearDiffOperator::dy() + LinearDiffOperator::mul(a);
        LinearDiffOperator left = compose(dxb, dya);
        LinearDiffOperator right = compose(dya, dxb);
        DarbouxQuadruple factored(dya, left, right, dya);
        if (!darboux_holds(factored)) return fail_with(d, "factored");
        DiffPolynomial by = total_derivative(b, Var::y);
        DarbouxQuadruple broken(dya, left, right - LinearDiffOperator::mul(by), dya);
        LinearDiffOperator expected =
            LinearDiffOperator::term(by, 0, 1) + LinearDiffOperator::mul(a * by);
        if (!(darboux_residual(broken) == expected)) return fail_with(d, "perturbed residual");
        return true;
    });

    h.check("conjugation distributes over the residual", [&](std::string* d) {
        for (int t = 0; t < 15; ++t) {
            DarbouxQuadruple q(rng.linear_operator(2, kSymbols), rng.laplace(kSymbols).embed(),
                               rng.laplace(kSymbols).embed(), rng.linear_operator(2, kSymbols));
            if (!verify_darboux_gauge_covariance(q, alpha))
                return fail_with(d, "t=" + std::to_string(t));
        }
        return true;
    });

    h.check("parse then format round trip", [&](std::string* d) {
        const std::vector<std::string> symbols = {"a", "b", "c", "m[2]", "m[-1]", "x1"};
        for (int t = 0; t < 200; ++t) {
            LinearDiffOperator p = rng.linear_operator(6, symbols);
            if (!(parse_operator(format_operator(p)) == p))
                return fail_with(d, "operator: " + format_operator(p));
        }
        for (int t = 0; t < 100; ++t) {
            DiffPolynomial p = rng.polynomial(symbols, 4, 3, 2);
            if (!(parse_polynomial(format_polynomial(p)) == p))
                return fail_with(d, "polynomial: " + format_polynomial(p));
        }
        return true;
    });

    h.check("formatting is deterministic and canonical", [&](std::string* d) {
        for (int t = 0; t < 50; ++t) {
            LinearDiffOperator p = rng.linear_operator(4, kSymbols);
            std::string s = format_operator(p);
            if (s != format_operator(p)) return fail_with(d, "two prints differ");
            if (s != format_operator(parse_operator(s)))
                return fail_with(d, "not a fixed point: " + s);
        }
        return true;
    });

    h.check("malformed input is rejected", [&](std::string* d) {
        auto rejects = [](const std::string& text) {
            try {
                parse_operator(text);
                return false;
            } catch (const SyntaxError&) {
                return true;
            }
        };
        for (const char* text : {"", "a +", "(a", "a^", "m[", "m[]", "a**b", "2^2", "a_z", "a b"})
            if (!rejects(text)) return fail_with(d, std::string("accepted: \"") + text + '"');
        try {
            parse_operator("Dx^-1");
            return fail_with(d, "negative power accepted");
        } catch (const NegativePower&) {
        }
        try {
            parse_polynomial("Dx*a");
            return fail_with(d, "scalar context accepted Dx");
        } catch (const SyntaxError&) {
        }
        try {
            NormalizedM::from_operator(parse_operator("Dx*Dy"), {});
            return fail_with(d, "mixed derivative accepted");
        } catch (const MixedDerivative&) {
        }
        try {
            frame_restrict(DiffPolynomial::variable(jet(alpha.symbol, 1, 1)), alpha);
            return fail_with(d, "mixed gauge jet accepted");
        } catch (const MixedAlphaJet&) {
        }
        try {
            evaluate(a, {});
            return fail_with(d, "unbound jet accepted");
        } catch (const UnboundJet&) {
        }
        try {
            principal_symbol(LinearDiffOperator());
            return fail_with(d, "principal symbol of zero accepted");
        } catch (const ZeroOperator&) {
        }
        try {
            bell_partial(2, 5, {});
            return fail_with(d, "k > n accepted");
        } catch (const BadIndex&) {
        }
        return true;
    });

    std::vector<CheckResult> results = h.take();
    int passed = 0;
    for (const CheckResult& r : results) passed += r.passed ? 1 : 0;
    log << passed << "/" << results.size() << " checks passed\n";
    return results;
}

}  // namespace darx
