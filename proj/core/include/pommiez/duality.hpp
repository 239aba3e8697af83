#pragma once

#include <vector>

#include "pommiez/domain.hpp"

namespace pommiez {

/// Rational germ at infinity h(t) = sum_{j>=1} c_j t^{-j} (no constant term,
/// h(inf) = 0); the dual-side object of the Cauchy-transform pairing.
class CoFunction {
 public:
  CoFunction() = default;
  /// coeffs[j] is the coefficient of t^{-(j+1)}.
  static CoFunction from_coeffs(std::vector<GaussianRational> coeffs);

  bool is_zero() const { return c_.empty(); }
  /// Highest index M with c_M != 0 (0 for the zero cofunction).
  int max_index() const { return static_cast<int>(c_.size()); }
  /// Coefficient of t^{-k}, k >= 1.
  GaussianRational coeff(int k) const;

  /// As a rational function of t (for derivative-based cross-checks).
  RationalFunction as_rational() const;

  friend CoFunction operator+(const CoFunction& a, const CoFunction& b);
  friend CoFunction operator*(const GaussianRational& s, const CoFunction& a);
  friend bool operator==(const CoFunction& a, const CoFunction& b) { return a.c_ == b.c_; }

 private:
  std::vector<GaussianRational> c_;
};

/// <f, h> = -(coefficient of t^{-1} in the Laurent expansion of f*h at 0);
/// f must be holomorphic at the origin.
GaussianRational pair_residue(const RationalFunction& f, const CoFunction& h);

/// The adjoint of the backward shift: h(t) -> h(t)/t (index shift).
CoFunction adjoint_backward_shift(const CoFunction& h);

/// [D^k f](0) for k = 0..n, i.e. the first Taylor coefficients of R where
/// f = g0 * R; the values of the moment functionals.
std::vector<GaussianRational> moments(const GMultiple& f, int n);

}  // namespace pommiez
