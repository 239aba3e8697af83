#pragma once

#include <utility>
#include <vector>

#include "pommiez/polynomial.hpp"

namespace pommiez {

/// Rational function over Q(i) in canonical form: monic denominator,
/// coprime numerator and denominator, nonzero denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::one()) {}
  RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::one()) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);
  /// q_{root,order}(t) = 1 / (t - root)^order
  static RationalFunction simple_fraction(const GaussianRational& root, int order);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// deg num - deg den < 0 (and nonzero).
  bool is_proper() const;

  GaussianRational eval(const GaussianRational& z) const;
  /// Zero multiplicity (> 0), pole order (< 0) or 0 at a point; *this != 0.
  int order_at(const GaussianRational& z) const;
  RationalFunction derivative() const;
  /// Splits into polynomial part and proper part.
  std::pair<Polynomial, RationalFunction> poly_and_proper() const;
  /// Taylor coefficients at `at`, orders 0..order; requires den(at) != 0.
  std::vector<GaussianRational> taylor_at(const GaussianRational& at, int order) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const GaussianRational& s, const RationalFunction& a);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

 private:
  void canonicalize();
  Polynomial num_, den_;
};

struct PartialFractionTerm {
  GaussianRational pole;
  int order;                // exponent of 1/(t - pole)^order
  GaussianRational coeff;   // nonzero
};

/// Exact decomposition f = poly_part + sum coeff / (t - pole)^order,
/// terms sorted canonically, top-order coefficient of every pole nonzero.
struct PartialFractionExpansion {
  Polynomial poly_part;
  std::vector<PartialFractionTerm> terms;
  RationalFunction recombine() const;
};

/// Requires the denominator to split over Q(i); recombination is checked
/// before returning.
PartialFractionExpansion partial_fractions(const RationalFunction& f);

/// Coefficient of (t - at)^{-k} in the Laurent expansion of f at `at`; k >= 1.
/// k = 1 gives the residue.
GaussianRational laurent_coefficient(const RationalFunction& f, const GaussianRational& at, int k);

/// Truncated series quotient a/b with b[0] != 0; orders 0..order.
std::vector<GaussianRational> series_divide(const std::vector<GaussianRational>& a,
                                            const std::vector<GaussianRational>& b, int order);

}  // namespace pommiez
