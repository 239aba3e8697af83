#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pommiez/scalar.hpp"

namespace pommiez {

/// Univariate polynomial over Q(i), coefficients stored lowest degree first
/// with no trailing zero. The zero polynomial is the empty list; its degree
/// is minus infinity and degree() may not be called on it.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(GaussianRational c0);
  static Polynomial from_coeffs(std::vector<GaussianRational> coeffs);
  static Polynomial one() { return Polynomial(GaussianRational(1)); }
  /// c * z^k
  static Polynomial monomial(int k, GaussianRational c = GaussianRational(1));
  static Polynomial variable() { return monomial(1); }
  /// 1 - z/root (the building block of normalized zero parts); root != 0.
  static Polynomial one_minus_z_over(const GaussianRational& root);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Degree of a nonzero polynomial; throws on the zero polynomial.
  int degree() const;
  /// Coefficient of z^k; zero beyond the degree.
  GaussianRational coeff(int k) const;
  const std::vector<GaussianRational>& coeffs() const { return c_; }
  GaussianRational leading() const;

  GaussianRational eval(const GaussianRational& z) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  /// Multiply by z^k.
  Polynomial shift_up(int k) const;
  /// Exact division by z^k; every coefficient below k must vanish.
  Polynomial shift_down(int k) const;
  Polynomial pow(int e) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const GaussianRational& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Quotient and remainder with deg(rem) < deg(divisor); divisor != 0.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Exact quotient; throws InternalError if the remainder is nonzero.
  static Polynomial div_exact(const Polynomial& a, const Polynomial& b);
  /// Synthetic division by (z - root): returns (quotient, remainder value).
  std::pair<Polynomial, GaussianRational> divide_linear(const GaussianRational& root) const;
  /// True iff b divides a (b != 0).
  static bool divides(const Polynomial& b, const Polynomial& a);

  /// Taylor coefficients of this polynomial at `at`, orders 0..order.
  std::vector<GaussianRational> taylor_at(const GaussianRational& at, int order) const;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

/// Monic gcd (gcd(0,0) = 0).
Polynomial poly_gcd(Polynomial a, Polynomial b);
/// Extended Euclid: returns (g, x, y) with x*a + y*b = g, g monic (or zero).
struct PolyEgcd {
  Polynomial g, x, y;
};
PolyEgcd poly_egcd(const Polynomial& a, const Polynomial& b);

struct RootMult {
  GaussianRational root;
  int mult;
};

/// Result of exhaustive root search over Q(i). `residual` is the (monic)
/// unfactorable cofactor; degree zero means the split is complete.
struct RootSplit {
  std::vector<RootMult> roots;
  Polynomial residual;
  bool complete() const { return residual.is_constant(); }
};

/// Carries the first factor that has no root in Q(i).
class IrreducibleError : public DomainError {
 public:
  IrreducibleError(const std::string& what, Polynomial residual)
      : DomainError(what), residual_(std::move(residual)) {}
  const Polynomial& residual() const { return residual_; }

 private:
  Polynomial residual_;
};

/// Finds every root of p in Q(i) with multiplicity, by exhaustive search over
/// divisor candidates built from the norms of the extreme coefficients. p != 0.
RootSplit linear_roots(const Polynomial& p);

/// linear_roots, but a partial split is a hard error.
std::vector<RootMult> linear_roots_checked(const Polynomial& p, const char* what);

}  // namespace pommiez
