#pragma once

#include <functional>
#include <string>

#include "vac/expr.hpp"

namespace vac {

// Resolves `name(arg)` applications, used for map application like nu(F).
// Returns null when the name is unknown (turns into a ParseError).
using ApplyResolver = std::function<ExprPtr(const std::string& name, const ExprPtr& arg)>;

// Field expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := '-'? [scalar '*']? atom | '-'? scalar
//   atom   := name | 'd' ['^' int] '(' expr ')' | ':(' atom+ '):' | name '(' expr ')'
//   scalar := product of integers, k, parenthesized scalar sums, '/', '^'
// Whitespace separates normal-product elements and is otherwise ignored.
// Throws ParseError(position, expected) on malformed input.
ExprPtr parse_expr(const std::string& text, const ApplyResolver& resolver = {});

// Whole-string exact scalar in Q(k).
Scalar parse_scalar(const std::string& text);

} // namespace vac
