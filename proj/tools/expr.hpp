#pragma once

#include <string>

#include "pommiez/classify.hpp"
#include "pommiez/domain.hpp"

namespace pommiez::cli {

/// Parses the surface syntax over the tokens: scalar literals, `i`, the
/// variable, `g0`, `+ - * / ^` and parentheses. `g0` may only occur linearly
/// (as a factor of a rational expression) and never in a denominator.
/// Returns A + g0*B split into the engine's function classes; the context's
/// holomorphy invariants are enforced on construction.
Holo parse_function(const std::string& src, const ContextPtr& ctx);

/// Same grammar without `g0`; the result must be a plain rational function.
RationalFunction parse_rational_expr(const std::string& src, char variable);

/// A constant expression, e.g. "-3/4+5/2*i".
GaussianRational parse_scalar(const std::string& src);

std::string print_polynomial(const Polynomial& p, char variable = 'z');
/// Product-of-factors form "(1-z)^2*(1-z/2)"; requires a full split over
/// Q(i) and p(0) = 1.
std::string print_polynomial_factored(const Polynomial& p);
std::string print_rational(const RationalFunction& r, char variable = 'z');
std::string print_function(const Holo& f);

}  // namespace pommiez::cli
