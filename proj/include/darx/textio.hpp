#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "darx/operators.hpp"
#include "darx/poly.hpp"

namespace darx {

/// Grammar:
///   expression := [sign] term (('+'|'-') term)*
///   term       := factor ('*' factor)*
///   factor     := rational | atom ['^' uint]
///   atom       := 'Dx' | 'Dy' | ident ['[' int ']'] ['_' [xy]+] | '(' expression ')'
/// Rationals are "p" or "p/q". Whitespace is insignificant between tokens.
/// Products elaborate left to right as operator composition, so "Dx*a"
/// becomes a*Dx + a_x while "a*Dx" stays a*Dx.
LinearDiffOperator parse_operator(const std::string& text);

/// Same grammar, but Dx and Dy are rejected; returns the resulting scalar.
DiffPolynomial parse_polynomial(const std::string& text);

/// Canonical text: derivative monomials by decreasing total order, ties by
/// Dx power; multi-term coefficients parenthesized; the free term spliced
/// into the top-level sum. parse_operator(format_operator(P)) == P.
std::string format_operator(const LinearDiffOperator& p);

std::string format_polynomial(const DiffPolynomial& p);

std::string format_rational(const Rational& r);

/// Lines of a golden/input file with their 1-based line numbers, skipping
/// blank lines and lines whose first non-space character is '#'.
std::vector<std::pair<int, std::string>> read_expression_lines(std::istream& in);
std::vector<std::pair<int, std::string>> read_expression_lines(const std::string& path);

}  // namespace darx
