#include "pommiez/jet.hpp"

#include <algorithm>

namespace pommiez {

int Jet::check_order(int order) {
  if (order < 0) throw DomainError("jet: negative order");
  return order;
}

Jet Jet::constant(const GaussianRational& value, int order) {
  Jet j(order);
  j.c_[0] = value;
  return j;
}

Jet Jet::of_polynomial(const Polynomial& p, int order) {
  Jet j(order);
  for (int k = 0; k <= order; ++k) j.c_[k] = p.coeff(k);
  return j;
}

Jet Jet::of_rational(const RationalFunction& f, int order) {
  Jet j(order);
  std::vector<GaussianRational> t = f.taylor_at(GaussianRational(), order);
  std::copy(t.begin(), t.end(), j.c_.begin());
  return j;
}

Jet Jet::exp_unit(const GaussianRational& c, int order) {
  Jet j(order);
  j.c_[0] = GaussianRational(1);
  for (int k = 1; k <= order; ++k)
    j.c_[k] = j.c_[k - 1] * c * GaussianRational(mpq_class(1, k));
  return j;
}

Jet Jet::geometric_unit(const GaussianRational& c, int order) {
  Jet j(order);
  j.c_[0] = GaussianRational(1);
  for (int k = 1; k <= order; ++k) j.c_[k] = j.c_[k - 1] * c;
  return j;
}

const GaussianRational& Jet::coeff(int k) const {
  if (k < 0 || k > order_) throw DomainError("jet: coefficient index beyond reliable order");
  return c_[k];
}

bool Jet::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const GaussianRational& x) { return x.is_zero(); });
}

Jet Jet::truncated(int new_order) const {
  if (new_order > order_) throw DomainError("jet: cannot extend the reliable order");
  Jet j(new_order);
  std::copy(c_.begin(), c_.begin() + new_order + 1, j.c_.begin());
  return j;
}

Jet Jet::recip() const {
  if (c_[0].is_zero()) throw DomainError("jet: reciprocal of a jet with zero constant term");
  Jet j(order_);
  j.c_ = series_divide({GaussianRational(1)}, c_, order_);
  return j;
}

Jet operator+(const Jet& a, const Jet& b) {
  int n = std::min(a.order_, b.order_);
  Jet j(n);
  for (int k = 0; k <= n; ++k) j.c_[k] = a.c_[k] + b.c_[k];
  return j;
}

Jet operator-(const Jet& a, const Jet& b) {
  int n = std::min(a.order_, b.order_);
  Jet j(n);
  for (int k = 0; k <= n; ++k) j.c_[k] = a.c_[k] - b.c_[k];
  return j;
}

Jet operator*(const Jet& a, const Jet& b) {
  int n = std::min(a.order_, b.order_);
  Jet j(n);
  for (int i = 0; i <= n; ++i) {
    for (int k = i; k <= n; ++k) j.c_[k] += a.c_[i] * b.c_[k - i];
  }
  return j;
}

Jet operator*(const GaussianRational& s, const Jet& a) {
  Jet j = a;
  for (auto& x : j.c_) x *= s;
  return j;
}

bool Jet::agree_through(const Jet& a, const Jet& b, int through) {
  int n = std::min({a.order_, b.order_, through});
  for (int k = 0; k <= n; ++k) {
    if (a.c_[k] != b.c_[k]) return false;
  }
  return true;
}

Jet jet_apply_pommiez(const Jet& g0, const Jet& f) {
  if (!g0.coeff(0).is_one()) throw DomainError("jet: g0 jet must have constant term 1");
  int n = std::min(g0.order(), f.order());
  if (n < 1) throw DomainError("jet: order exhausted, cannot apply the operator");
  Jet out(n - 1);
  const GaussianRational f0 = f.coeff(0);
  for (int k = 0; k + 1 <= n; ++k) out.mutable_coeff(k) = f.coeff(k + 1) - f0 * g0.coeff(k + 1);
  return out;
}

}  // namespace pommiez
