#include "darx/cli.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "darx/bell.hpp"
#include "darx/darboux.hpp"
#include "darx/errors.hpp"
#include "darx/invariants.hpp"
#include "darx/operators.hpp"
#include "darx/selftest.hpp"
#include "darx/textio.hpp"

namespace darx {

namespace {

/// Hands out expression texts either from the per-flag values or, when
/// --in was given, from the file lines in documented flag order.
struct ExprSource {
    std::vector<std::string> lines;
    bool from_file = false;
    std::size_t next = 0;

    std::string take(const std::string& flag_value, const char* name) {
        if (from_file) {
            if (!flag_value.empty())
                throw Error(std::string("--in replaces --") + name + "; do not pass both");
            if (next >= lines.size()) throw Error("input file has too few expressions");
            return lines[next++];
        }
        if (flag_value.empty()) throw Error(std::string("missing --") + name);
        return flag_value;
    }

    void finish() const {
        if (from_file && next != lines.size()) throw Error("input file has extra expressions");
    }
};

ExprSource make_source(const std::string& path) {
    ExprSource s;
    if (path.empty()) return s;
    s.from_file = true;
    for (const auto& [line, text] : read_expression_lines(path)) s.lines.push_back(text);
    return s;
}

std::vector<std::string> split_on_commas(const std::string& joined) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : joined) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!joined.empty()) out.push_back(cur);
    return out;
}

bool valid_symbol(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c))) return false;
    return s != "Dx" && s != "Dy";
}

int do_invariants(const CliConfig& cfg, const std::string& l_text, const std::string& m_text,
                  std::ostream& out) {
    LaplaceOperator lc = LaplaceOperator::from_operator(parse_operator(l_text));
    LinearDiffOperator mop = parse_operator(m_text);
    int d = cfg.order ? *cfg.order : infer_normalized_order(mop);
    NormalizedM m = NormalizedM::from_operator(mop, d);

    InvariantSet set = cfg.method == "omega" ? invariants_omega(lc, m) : invariants_bell(lc, m);
    bool agree = true;
    if (cfg.method == "both") agree = set == invariants_omega(lc, m);

    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["d"] = set.d;
        j["m"] = format_polynomial(set.m);
        j["h"] = format_polynomial(set.h);
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        for (int i = -set.d; i <= set.d; ++i) r[std::to_string(i)] = format_polynomial(set.R.at(i));
        j["R"] = r;
        out << j.dump(2) << '\n';
    } else {
        out << "d = " << set.d << '\n';
        out << "m = " << format_polynomial(set.m) << '\n';
        out << "h = " << format_polynomial(set.h) << '\n';
        for (int i = -set.d; i <= set.d; ++i)
            out << "R[" << i << "] = " << format_polynomial(set.R.at(i)) << '\n';
        if (cfg.method == "both") out << (agree ? "methods agree" : "methods disagree") << '\n';
    }
    return agree ? 0 : 1;
}

int do_gauge(const CliConfig& cfg, const std::string& op_text, std::ostream& out) {
    if (!valid_symbol(cfg.alpha_symbol))
        throw Error("invalid gauge symbol '" + cfg.alpha_symbol + "'");
    LinearDiffOperator op = parse_operator(op_text);
    for (const auto& [key, c] : op.terms())
        for (const JetVariable& v : c.jets())
            if (v.symbol == cfg.alpha_symbol)
                throw Error("expression already uses '" + cfg.alpha_symbol +
                            "'; pick a different --alpha");
    out << format_operator(gauge_conjugate(op, GaugeParameter{cfg.alpha_symbol})) << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact joint differential invariants of operator pairs under gauge "
                 "transformations, with Darboux intertwining checks",
                 "darx"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string l_text, m_text, op_text, left_text, right_text, n_text, l1_text;
    std::string in_path, args_text;
    std::vector<int> partial;
    int complete_n = 0;
    int order_flag = 0;

    CLI::App* inv = app.add_subcommand(
        "invariants", "generating invariants of a pair (L, M), 2d+3 of them");
    inv->add_option("--L", l_text, "operator of the form Dx*Dy + a*Dx + b*Dy + c");
    inv->add_option("--M", m_text, "operator free of mixed derivatives");
    inv->add_option("--method", cfg.method, "bell | omega | both")
        ->check(CLI::IsMember({"bell", "omega", "both"}));
    CLI::Option* order_opt =
        inv->add_option("--order", order_flag, "override d; missing coefficients become zero")
            ->check(CLI::PositiveNumber);
    inv->add_option("--format", cfg.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    inv->add_option("--in", in_path, "file with L then M, one expression per line");

    CLI::App* gauge = app.add_subcommand(
        "gauge", "conjugate an operator, leaving the exponent's jets symbolic");
    gauge->add_option("--op", op_text, "operator to conjugate");
    gauge->add_option("--alpha", cfg.alpha_symbol, "symbol for the gauge exponent");
    gauge->add_option("--in", in_path, "file with the operator expression");

    CLI::App* comp = app.add_subcommand("compose", "compose two operators");
    comp->add_option("--left", left_text, "outer operator");
    comp->add_option("--right", right_text, "inner operator");
    comp->add_option("--in", in_path, "file with left then right");

    CLI::App* vd = app.add_subcommand("verify-darboux",
                                      "print the residual N*L - L1*M; exit 0 iff it is zero");
    vd->add_option("--N", n_text, "transforming operator on the left");
    vd->add_option("--L", l_text, "source operator, Dx*Dy + a*Dx + b*Dy + c form");
    vd->add_option("--L1", l1_text, "target operator, same form");
    vd->add_option("--M", m_text, "transforming operator on the right");
    vd->add_option("--in", in_path, "file with N, L, L1, M");

    CLI::App* bell = app.add_subcommand("bell", "partial or complete Bell polynomials");
    CLI::Option* popt = bell->add_option("--partial", partial, "n k")->expected(2);
    CLI::Option* copt = bell->add_option("--complete", complete_n, "n");
    popt->excludes(copt);
    bell->add_option("--args", args_text, "comma-separated arguments; default x1..xn");
    bell->add_option("--in", in_path, "file with one argument expression per line");

    CLI::App* st = app.add_subcommand("selftest", "run the symbolic and randomized suites");
    st->add_option("--max-order", cfg.max_order, "numeric checks run to this order")
        ->check(CLI::PositiveNumber);
    st->add_option("--seed", cfg.seed, "seed for the randomized checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (inv->parsed()) {
            if (order_opt->count() > 0) cfg.order = order_flag;
            ExprSource src = make_source(in_path);
            std::string lt = src.take(l_text, "L");
            std::string mt = src.take(m_text, "M");
            src.finish();
            return do_invariants(cfg, lt, mt, out);
        }
        if (gauge->parsed()) {
            ExprSource src = make_source(in_path);
            std::string text = src.take(op_text, "op");
            src.finish();
            return do_gauge(cfg, text, out);
        }
        if (comp->parsed()) {
            ExprSource src = make_source(in_path);
            LinearDiffOperator left = parse_operator(src.take(left_text, "left"));
            LinearDiffOperator right = parse_operator(src.take(right_text, "right"));
            src.finish();
            out << format_operator(compose(left, right)) << '\n';
            return 0;
        }
        if (vd->parsed()) {
            ExprSource src = make_source(in_path);
            LinearDiffOperator n = parse_operator(src.take(n_text, "N"));
            LinearDiffOperator l = parse_operator(src.take(l_text, "L"));
            LinearDiffOperator l1 = parse_operator(src.take(l1_text, "L1"));
            LinearDiffOperator m = parse_operator(src.take(m_text, "M"));
            src.finish();
            DarbouxQuadruple q(std::move(n), std::move(l), std::move(l1), std::move(m));
            LinearDiffOperator residual = darboux_residual(q);
            out << format_operator(residual) << '\n';
            return residual.is_zero() ? 0 : 1;
        }
        if (bell->parsed()) {
            bool have_partial = popt->count() > 0;
            bool have_complete = copt->count() > 0;
            if (have_partial == have_complete)
                throw Error("exactly one of --partial or --complete is required");
            int n = have_partial ? partial[0] : complete_n;
            int k = have_partial ? partial[1] : 0;
            if (n < 0 || k < 0) throw Error("Bell indices must be nonnegative");
            BellArgs xs;
            if (!in_path.empty()) {
                for (const auto& [line, text] : read_expression_lines(in_path))
                    xs.push_back(parse_polynomial(text));
                if (!args_text.empty()) throw Error("--in replaces --args; do not pass both");
            } else if (!args_text.empty()) {
                for (const std::string& piece : split_on_commas(args_text))
                    xs.push_back(parse_polynomial(piece));
            } else {
                for (int i = 1; i <= n; ++i)
                    xs.push_back(DiffPolynomial::variable(jet("x" + std::to_string(i))));
            }
            DiffPolynomial result =
                have_partial ? bell_partial(n, k, xs) : bell_complete(n, xs);
            out << format_polynomial(result) << '\n';
            return 0;
        }
        if (st->parsed()) {
            SelftestOptions o;
            o.max_order = cfg.max_order;
            o.symbolic_max_order = std::min(6, cfg.max_order);
            o.seed = cfg.seed;
            return all_passed(run_selftest(o, out)) ? 0 : 1;
        }
    } catch (const SyntaxError& e) {
        err << "syntax error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

}  // namespace darx
