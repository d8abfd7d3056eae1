#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "nsatz/poly.hpp"
#include "nsatz/ring.hpp"

namespace nsatz {

/// Parse tree for polynomial expressions. Grammar, loosest binding first:
///   expr   := term (('+'|'-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := primary ('^' INTEGER)?
///   primary:= INTEGER ('/' INTEGER)? | 'x' INDEX | '(' expr ')'
/// Whitespace is insignificant; exponents are literal nonnegative integers.
struct PolyExpr {
    enum class Kind { Constant, Variable, Neg, Add, Sub, Mul, Pow };

    Kind kind;
    mpz_class num, den; // Constant: den > 0, usually 1
    int var_index = 0;  // Variable (1-based)
    int exponent = 0;   // Pow
    std::unique_ptr<PolyExpr> lhs, rhs;
};

struct ParseOptions {
    /// 0 means infer: variable indices must then be contiguous from 1.
    int nvars = 0;
    int max_exponent = 64;
};

/// Parses the expression text into a tree. Throws ParseError with the
/// offending position.
std::unique_ptr<PolyExpr> parse_expression(std::string_view text, const ParseOptions& options = {});

/// Number of variables an expression tree needs (max index used, at least 1).
int expression_nvars(const PolyExpr& expr);

/// Evaluates the tree into an expanded, normalized polynomial over the
/// ring. Fraction constants require the denominator to be a unit.
MultivarPoly expression_to_poly(const PolyExpr& expr, const RingSpec& ring, int nvars);

/// One-call convenience: parse and expand.
MultivarPoly parse_poly(std::string_view text, const RingSpec& ring,
                        const ParseOptions& options = {});

} // namespace nsatz
