#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "pommiez/errors.hpp"

namespace pommiez {

/// Exact scalar of the engine: an element of Q(i) with arbitrary-precision
/// rational parts. mpq_class keeps each part in lowest terms with a positive
/// denominator, so equality is structural.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
  explicit GaussianRational(mpq_class re) : re_(std::move(re)), im_(0) {}
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
  static GaussianRational from_ratio(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 = re^2 + im^2, an exact nonnegative rational.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re_ + y.re_, x.im_ + y.im_};
  }
  friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re_ - y.re_, x.im_ - y.im_};
  }
  friend GaussianRational operator-(const GaussianRational& x) { return {-x.re_, -x.im_}; }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
  }
  friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
    return x * y.inverse();
  }
  GaussianRational& operator+=(const GaussianRational& y) { return *this = *this + y; }
  GaussianRational& operator-=(const GaussianRational& y) { return *this = *this - y; }
  GaussianRational& operator*=(const GaussianRational& y) { return *this = *this * y; }

  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }
  friend bool operator!=(const GaussianRational& x, const GaussianRational& y) {
    return !(x == y);
  }

 private:
  mpq_class re_, im_;
};

/// Canonical total order used for normal forms: by |z|^2, then re, then im.
bool scalar_less(const GaussianRational& x, const GaussianRational& y);

/// Canonical textual form: "3", "-3/4", "1*i", "1+1*i", "-3/4+5/2*i", "0".
std::string to_string(const GaussianRational& x);
std::string to_string(const mpq_class& q);

}  // namespace pommiez
