#include "darx/textio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "darx/errors.hpp"

namespace darx {

namespace {

class Parser {
  public:
    Parser(const std::string& text, bool allow_derivatives)
        : text_(text), allow_derivatives_(allow_derivatives) {}

    LinearDiffOperator parse() {
        LinearDiffOperator out = expression();
        skip_ws();
        if (!eof()) fail(std::string("unexpected character '") + peek() + "'");
        return out;
    }

  private:
    const std::string& text_;
    bool allow_derivatives_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, line_, col_); }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    LinearDiffOperator expression() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = advance() == '-';
        LinearDiffOperator acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            advance();
            LinearDiffOperator t = term();
            if (c == '+')
                acc += t;
            else
                acc -= t;
        }
        return acc;
    }

    LinearDiffOperator term() {
        LinearDiffOperator acc = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            advance();
            acc = compose(acc, factor());
        }
        return acc;
    }

    LinearDiffOperator factor() {
        skip_ws();
        if (eof()) fail("unexpected end of input");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return LinearDiffOperator::mul(DiffPolynomial(rational_literal()));
        if (c == '(') {
            advance();
            LinearDiffOperator inner = expression();
            skip_ws();
            expect(')');
            return with_power(std::move(inner));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return with_power(atom());
        fail(std::string("unexpected character '") + c + "'");
    }

    LinearDiffOperator with_power(LinearDiffOperator base) {
        skip_ws();
        if (peek() != '^') return base;
        advance();
        skip_ws();
        int eline = line_, ecol = col_;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            advance();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
        long e = digits(1000000, "exponent");
        if (neg) throw NegativePower("negative exponent", eline, ecol);
        LinearDiffOperator out = LinearDiffOperator::identity();
        for (long k = 0; k < e; ++k) out = compose(out, base);
        return out;
    }

    LinearDiffOperator atom() {
        int aline = line_, acol = col_;
        std::string base;
        while (!eof() && std::isalnum(static_cast<unsigned char>(peek()))) base += advance();
        if (base == "Dx" || base == "Dy") {
            if (peek() == '[' || peek() == '_')
                fail("'" + base + "' cannot carry an index or derivative suffix");
            if (!allow_derivatives_)
                throw SyntaxError("derivative symbol '" + base + "' in a scalar expression",
                                  aline, acol);
            return base == "Dx" ? LinearDiffOperator::dx() : LinearDiffOperator::dy();
        }
        std::string symbol = base;
        if (peek() == '[') {
            advance();
            skip_ws();
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                advance();
            }
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an index");
            long idx = digits(1000000000L, "index");
            if (neg) idx = -idx;
            skip_ws();
            expect(']');
            symbol = indexed_symbol(base, static_cast<int>(idx));
        }
        int nx = 0, ny = 0;
        if (peek() == '_') {
            advance();
            if (peek() != 'x' && peek() != 'y') fail("expected 'x' or 'y' after '_'");
            while (peek() == 'x' || peek() == 'y') {
                if (advance() == 'x')
                    ++nx;
                else
                    ++ny;
            }
        }
        return LinearDiffOperator::mul(DiffPolynomial::variable(jet(symbol, nx, ny)));
    }

    long digits(long limit, const char* what) {
        long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (advance() - '0');
            if (v > limit) fail(std::string(what) + " out of range");
        }
        return v;
    }

    Rational rational_literal() {
        std::string num = digit_string();
        std::size_t save_pos = pos_;
        int save_line = line_, save_col = col_;
        skip_ws();
        if (peek() != '/') {
            pos_ = save_pos;
            line_ = save_line;
            col_ = save_col;
            return Rational(mpz_class(num));
        }
        advance();
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
        std::string den = digit_string();
        mpz_class den_z(den);
        if (den_z == 0) fail("zero denominator");
        Rational q(mpz_class(num), den_z);
        q.canonicalize();
        return q;
    }

    std::string digit_string() {
        std::string out;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) out += advance();
        return out;
    }
};

// Print rank of a jet: indexed symbols (m[5], ...) come before plain ones.
// Indexed symbols sort by base, then |index| with the positive one first,
// so coefficient chains read m[0], m[1], m[-1], m[2], ... Plain symbols are
// alphabetical, then by derivative counts. Smaller tuple prints first.
struct PrintRank {
    int cls;
    std::string symbol;
    int idx_abs;
    int idx_sign;
    int nx;
    int ny;

    auto operator<=>(const PrintRank&) const = default;
};

PrintRank rank_of(const JetVariable& v) {
    std::string base;
    int index = 0;
    if (parse_symbol_index(v.symbol, &base, &index))
        return {0, base, index < 0 ? -index : index, index < 0 ? 1 : 0, v.nx, v.ny};
    return {1, v.symbol, 0, 0, v.nx, v.ny};
}

std::vector<Monomial::Factor> print_factors(const Monomial& m) {
    std::vector<Monomial::Factor> fs = m.factors();
    std::sort(fs.begin(), fs.end(), [](const Monomial::Factor& a, const Monomial::Factor& b) {
        return rank_of(a.first) < rank_of(b.first);
    });
    return fs;
}

// True if a prints strictly before b: walk the rank-ordered factor lists;
// at the first difference the higher-ranked variable wins, and for the
// same variable the larger exponent wins. A strict prefix prints later,
// so the constant term always comes last.
bool prints_before(const Monomial& a, const Monomial& b) {
    std::vector<Monomial::Factor> fa = print_factors(a);
    std::vector<Monomial::Factor> fb = print_factors(b);
    std::size_t n = std::min(fa.size(), fb.size());
    for (std::size_t i = 0; i < n; ++i) {
        PrintRank ra = rank_of(fa[i].first), rb = rank_of(fb[i].first);
        if (ra != rb) return ra < rb;
        if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
    }
    return fa.size() > fb.size();
}

struct Piece {
    bool neg;
    std::string text;
};

std::string join_pieces(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0)
            out = (pieces[i].neg ? "-" : "") + pieces[i].text;
        else
            out += (pieces[i].neg ? " - " : " + ") + pieces[i].text;
    }
    return out;
}

std::string factor_text(const Monomial& m) {
    std::string out;
    for (const auto& [v, e] : print_factors(m)) {
        if (!out.empty()) out += '*';
        out += v.name();
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

// One polynomial term without its sign; "1*" is dropped before factors.
Piece term_piece(const Monomial& m, const Rational& coeff) {
    Piece p;
    p.neg = coeff < 0;
    Rational mag = abs(coeff);
    if (m.is_unit()) {
        p.text = format_rational(mag);
    } else if (mag == 1) {
        p.text = factor_text(m);
    } else {
        p.text = format_rational(mag) + '*' + factor_text(m);
    }
    return p;
}

std::vector<std::pair<Monomial, Rational>> print_terms(const DiffPolynomial& p) {
    std::vector<std::pair<Monomial, Rational>> ts(p.terms().begin(), p.terms().end());
    std::sort(ts.begin(), ts.end(),
              [](const auto& a, const auto& b) { return prints_before(a.first, b.first); });
    return ts;
}

std::string derivative_text(const DerivKey& k) {
    std::string out;
    if (k.i > 0) {
        out = "Dx";
        if (k.i > 1) out += '^' + std::to_string(k.i);
    }
    if (k.j > 0) {
        if (!out.empty()) out += '*';
        out += "Dy";
        if (k.j > 1) out += '^' + std::to_string(k.j);
    }
    return out;
}

}  // namespace

LinearDiffOperator parse_operator(const std::string& text) {
    return Parser(text, /*allow_derivatives=*/true).parse();
}

DiffPolynomial parse_polynomial(const std::string& text) {
    LinearDiffOperator op = Parser(text, /*allow_derivatives=*/false).parse();
    return op.coeff(0, 0);
}

std::string format_rational(const Rational& r) { return r.get_str(); }

std::string format_polynomial(const DiffPolynomial& p) {
    std::vector<Piece> pieces;
    for (const auto& [m, c] : print_terms(p)) pieces.push_back(term_piece(m, c));
    return join_pieces(pieces);
}

std::string format_operator(const LinearDiffOperator& p) {
    std::vector<DerivKey> keys;
    for (const auto& [k, c] : p.terms()) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const DerivKey& a, const DerivKey& b) {
        if (a.order() != b.order()) return a.order() > b.order();
        return a.i > b.i;
    });

    std::vector<Piece> pieces;
    for (const DerivKey& k : keys) {
        const DiffPolynomial& c = p.coeff(k.i, k.j);
        if (k.i == 0 && k.j == 0) {
            for (const auto& [m, r] : print_terms(c)) pieces.push_back(term_piece(m, r));
            continue;
        }
        std::string dtext = derivative_text(k);
        if (c.terms().size() == 1) {
            const auto& [m, r] = *c.terms().begin();
            Piece p1 = term_piece(m, r);
            if (m.is_unit() && abs(r) == 1)
                p1.text = dtext;
            else
                p1.text += '*' + dtext;
            pieces.push_back(std::move(p1));
        } else {
            pieces.push_back({false, '(' + format_polynomial(c) + ")*" + dtext});
        }
    }
    return join_pieces(pieces);
}

std::vector<std::pair<int, std::string>> read_expression_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.emplace_back(n, line);
    }
    return out;
}

std::vector<std::pair<int, std::string>> read_expression_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return read_expression_lines(in);
}

}  // namespace darx
