#ifndef TSURF_EXPR_HPP
#define TSURF_EXPR_HPP

#include <array>
#include <stdexcept>
#include <string>

#include "tsurf/ratfn.hpp"

namespace tsurf {

/// Position-annotated syntax or semantic error from the expression grammar.
struct ParseError : std::runtime_error {
    ParseError(std::string msg, int line, int col)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(col)),
          line(line), col(col) {}
    int line, col;
};

/// Polynomial expression text over the given variables.
///
/// Grammar: integer and rational literals (3, 3/4), named variables,
/// binary + - * ^ with explicit '*', unary minus, nonnegative integer
/// exponents, parentheses; whitespace insignificant. '/' is allowed only
/// inside a rational literal (digits on both sides).
MPoly parse_poly(const std::string& text, const VarSet& vars);

/// One rational expression: polynomial, optionally '/' polynomial at top
/// level. Used for curve coordinates.
RatFn parse_ratexpr(const std::string& text, const VarSet& vars);

/// Three comma-separated rational expressions in one named parameter.
std::array<RatFn, 3> parse_param_triple(const std::string& text, const std::string& param);

} // namespace tsurf

#endif
