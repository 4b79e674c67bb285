#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "orelab/i1/b1.hpp"
#include "orelab/i1/element.hpp"

namespace orelab::i1 {

/// Operator expression tree. Grammar (whitespace ignored):
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' ['-'] nat)?
///   atom   := 'D' | 'I' | 'H' | 'x' | 'e(' nat ',' nat ')' | nat ['/' nat] | '(' expr ')'
/// The UTF-8 symbols for the derivation and the integral are accepted for
/// D and I. Negative exponents parse only in B1 mode, on D and I.
struct Expr {
    enum class Kind { d, i, h, x, e, num, add, sub, neg, mul, pow };
    Kind kind;
    std::size_t position = 0;
    long a = 0, b = 0;  // e(a,b); exponent in a for pow
    Rational value;
    std::vector<std::unique_ptr<Expr>> args;
};

std::unique_ptr<Expr> parse_expression(std::string_view text, bool b1_mode = false);

I1Element normalize(const Expr& e);
B1Element normalize_b1(const Expr& e);

I1Element parse_i1(std::string_view text);
B1Element parse_b1(std::string_view text);

}  // namespace orelab::i1
