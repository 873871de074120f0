#pragma once

#include <string>

#include "vac/expr.hpp"

namespace vac {

// Canonical display forms. Scalar output reparses through parse_scalar to the
// same value; expression output reparses through parse_expr to an equal tree.

// Factored form: integer content, linear factors over rational roots, then
// any residual polynomial, numerator and denominator separately.
// Examples: "2*(k+2)", "(2*k+1)/4", "-(k+2)*(2*k+1)*(3*k+4)/2", "-1/2".
std::string renderScalar(const Scalar& s);

std::string renderMonomial(MonoId id);

// Terms in structural order joined by " + "; negative coefficients appear as
// "(-c)*mono". Zero renders as "0".
std::string renderField(const Field& f);

// Singular OPE part: n-th product coefficients over descending poles,
// "c/(z-w)^p" with "/(z-w)" at pole 1; "0" when regular.
std::string renderOPE(const LambdaPoly& p);

std::string renderExpr(const ExprPtr& e);

} // namespace vac
