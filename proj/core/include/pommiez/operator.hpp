#pragma once

#include <vector>

#include "pommiez/domain.hpp"

namespace pommiez {

/// An element of the commutative algebra C[D]: sum a_j D^j, represented by
/// its coefficient list (no trailing zero; the identity is [1]).
class OperatorPolynomial {
 public:
  OperatorPolynomial() = default;  // the zero operator
  static OperatorPolynomial identity() { return from_coeffs({GaussianRational(1)}); }
  static OperatorPolynomial shift() { return from_coeffs({GaussianRational(), GaussianRational(1)}); }
  /// D - mu * I
  static OperatorPolynomial shifted(const GaussianRational& mu) {
    return from_coeffs({-mu, GaussianRational(1)});
  }
  static OperatorPolynomial from_coeffs(std::vector<GaussianRational> coeffs);

  bool is_zero() const { return a_.empty(); }
  bool is_identity() const { return a_.size() == 1 && a_[0].is_one(); }
  int degree() const;
  const std::vector<GaussianRational>& coeffs() const { return a_; }

  friend OperatorPolynomial operator*(const OperatorPolynomial& p, const OperatorPolynomial& q);
  friend OperatorPolynomial operator+(const OperatorPolynomial& p, const OperatorPolynomial& q);
  OperatorPolynomial pow(int e) const;
  friend bool operator==(const OperatorPolynomial& p, const OperatorPolynomial& q) {
    return p.a_ == q.a_;
  }

 private:
  std::vector<GaussianRational> a_;
};

/// One step of the plain backward shift on rationals: (R - R(0)) / z.
/// Requires R holomorphic at the origin.
RationalFunction backward_shift(const RationalFunction& r);
/// P applied through the plain backward shift.
RationalFunction apply_d0(const OperatorPolynomial& p, const RationalFunction& r);

/// One step of D_{0,p} on polynomials: (s - p * s(0)) / z; p(0) = 1.
Polynomial backward_shift_poly(const Polynomial& p, const Polynomial& s);
Polynomial apply_d0_poly(const OperatorPolynomial& op, const Polynomial& p, const Polynomial& s);

/// D_{0,g0}(f) for f = g0 * R: equals g0 * D_0(R) by the splitting property,
/// so the class of g0-multiples is closed under the operator.
GMultiple apply_pommiez(const GMultiple& f);
/// P(D_{0,g0}) applied to f.
GMultiple apply_operator(const OperatorPolynomial& p, const GMultiple& f);

/// Basis {g0 * z^j | 0 <= j < n} of ker D_{0,g0}^n.
std::vector<GMultiple> kernel_basis(const ContextPtr& ctx, int n);

/// Product of (D - I/lambda)^k over the given (lambda, k); annihilates
/// g0 * h for every h supported on those poles with orders <= k.
/// All points must be nonzero and pairwise distinct.
OperatorPolynomial annihilator(const std::vector<std::pair<GaussianRational, int>>& poles);

/// For a proper fraction R supported on a single nonzero pole lambda with
/// top order k (top coefficient nonzero), returns A in C[D] of degree <= k
/// with A(R) = 1/(t-lambda)^m exactly, 1 <= m <= k. The result is verified
/// by direct application before returning.
OperatorPolynomial extractor(const RationalFunction& r, int m);

struct IsolateResult {
  OperatorPolynomial op;
  GMultiple result;  // g0 / (t - target)^m
};

/// Extracts g0 * q_{lambda,m} from f by composing the annihilator of the
/// foreign poles, an annihilator of the polynomial-part orbit, and an
/// extractor. lambda must be a pole of the proper outside part of f with
/// order >= m.
IsolateResult isolate(const GMultiple& f, const GaussianRational& lambda, int m);

struct DegreeRaiseResult {
  OperatorPolynomial op;
  GMultiple result;
  Polynomial r_tilde;  // result = (g0/p) * r_tilde
};

/// Produces A with A(f) = (g0/p) * r_tilde where deg r_tilde is exactly
/// max(deg r, deg p - 1), for f with canonical parts (p, r, u, v), r != 0.
DegreeRaiseResult degree_raise(const GMultiple& f);

}  // namespace pommiez
