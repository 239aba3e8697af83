#pragma once

#include <vector>

#include "pommiez/rational_function.hpp"

namespace pommiez {

/// Exact truncated power series at the origin. A jet of order N stores the
/// coefficients of t^0..t^N; arithmetic tracks the order through which the
/// result is reliable instead of padding with zeros.
class Jet {
 public:
  explicit Jet(int order) : order_(check_order(order)), c_(static_cast<std::size_t>(order) + 1) {}
  static Jet constant(const GaussianRational& value, int order);
  static Jet of_polynomial(const Polynomial& p, int order);
  /// Taylor jet of f at 0; requires den(f)(0) != 0.
  static Jet of_rational(const RationalFunction& f, int order);
  /// exp(c t) truncated: coefficients c^k / k!.
  static Jet exp_unit(const GaussianRational& c, int order);
  /// 1/(1 - c t) truncated: coefficients c^k.
  static Jet geometric_unit(const GaussianRational& c, int order);

  int order() const { return order_; }
  const GaussianRational& coeff(int k) const;
  const std::vector<GaussianRational>& coeffs() const { return c_; }
  GaussianRational& mutable_coeff(int k) { return c_[k]; }
  bool is_zero() const;

  Jet truncated(int new_order) const;
  /// a * recip(a) = 1 + O(t^{N+1}); requires a nonzero constant term.
  Jet recip() const;

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(const GaussianRational& s, const Jet& a);

  /// Equality of all coefficients through min(orders, through).
  static bool agree_through(const Jet& a, const Jet& b, int through);

  /// Exact equality: same reliable order and same coefficients.
  friend bool operator==(const Jet& a, const Jet& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

 private:
  static int check_order(int order);
  int order_;
  std::vector<GaussianRational> c_;
};

/// One application of the generalized backward shift at the jet level:
/// (f - g0 f(0)) / t. Both inputs must carry the coefficients used, so the
/// result order is min(orders) - 1; requires g0 constant term 1 and a
/// nonexhausted input (min order >= 1).
Jet jet_apply_pommiez(const Jet& g0, const Jet& f);

}  // namespace pommiez
