#pragma once

#include <gmpxx.h>

#include <vector>

namespace pommiez {

/// Gaussian integer a + b*i. Support type for root search and
/// fraction-free elimination; not part of the public scalar field.
struct GaussianInteger {
  mpz_class a, b;

  GaussianInteger() : a(0), b(0) {}
  GaussianInteger(mpz_class re, mpz_class im) : a(std::move(re)), b(std::move(im)) {}

  bool is_zero() const { return a == 0 && b == 0; }
  mpz_class norm() const { return a * a + b * b; }
  GaussianInteger conj() const { return {a, -b}; }

  friend GaussianInteger operator+(const GaussianInteger& x, const GaussianInteger& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend GaussianInteger operator-(const GaussianInteger& x, const GaussianInteger& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend GaussianInteger operator*(const GaussianInteger& x, const GaussianInteger& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const GaussianInteger& x, const GaussianInteger& y) {
    return x.a == y.a && x.b == y.b;
  }
};

/// Nearest-lattice-point quotient; the remainder x - q*y has norm < norm(y).
GaussianInteger gi_div_nearest(const GaussianInteger& x, const GaussianInteger& y);

/// True iff y divides x exactly in Z[i]; y != 0.
bool gi_divides(const GaussianInteger& y, const GaussianInteger& x);

/// Exact quotient x / y; precondition gi_divides(y, x).
GaussianInteger gi_div_exact(const GaussianInteger& x, const GaussianInteger& y);

/// Euclidean gcd, defined up to units.
GaussianInteger gi_gcd(GaussianInteger x, GaussianInteger y);

/// All divisors of x (including associates). x != 0.
std::vector<GaussianInteger> gi_divisors(const GaussianInteger& x);

}  // namespace pommiez
