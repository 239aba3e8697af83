#include "pommiez/duality.hpp"

namespace pommiez {

CoFunction CoFunction::from_coeffs(std::vector<GaussianRational> coeffs) {
  CoFunction h;
  h.c_ = std::move(coeffs);
  while (!h.c_.empty() && h.c_.back().is_zero()) h.c_.pop_back();
  return h;
}

GaussianRational CoFunction::coeff(int k) const {
  if (k < 1) throw DomainError("cofunction: indices start at 1");
  if (static_cast<std::size_t>(k) > c_.size()) return GaussianRational();
  return c_[k - 1];
}

RationalFunction CoFunction::as_rational() const {
  RationalFunction acc;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (!c_[j].is_zero())
      acc += c_[j] * RationalFunction::simple_fraction(GaussianRational(), static_cast<int>(j) + 1);
  }
  return acc;
}

CoFunction operator+(const CoFunction& a, const CoFunction& b) {
  std::vector<GaussianRational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k < a.c_.size()) v[k] += a.c_[k];
    if (k < b.c_.size()) v[k] += b.c_[k];
  }
  return CoFunction::from_coeffs(std::move(v));
}

CoFunction operator*(const GaussianRational& s, const CoFunction& a) {
  std::vector<GaussianRational> v = a.c_;
  for (auto& x : v) x *= s;
  return CoFunction::from_coeffs(std::move(v));
}

GaussianRational pair_residue(const RationalFunction& f, const CoFunction& h) {
  if (f.den().eval(GaussianRational()).is_zero())
    throw DomainError("pairing: f has a pole at the origin");
  if (f.is_zero() || h.is_zero()) return GaussianRational();
  // res_0(f h) = sum_j c_j * a_{j-1} with a_i the Taylor coefficients of f
  int m = h.max_index();
  std::vector<GaussianRational> a = f.taylor_at(GaussianRational(), m - 1);
  GaussianRational acc;
  for (int j = 1; j <= m; ++j) acc += h.coeff(j) * a[j - 1];
  return -acc;
}

CoFunction adjoint_backward_shift(const CoFunction& h) {
  std::vector<GaussianRational> v;
  v.reserve(static_cast<std::size_t>(h.max_index()) + 1);
  v.push_back(GaussianRational());
  for (int k = 1; k <= h.max_index(); ++k) v.push_back(h.coeff(k));
  return CoFunction::from_coeffs(std::move(v));
}

std::vector<GaussianRational> moments(const GMultiple& f, int n) {
  if (n < 0) throw DomainError("moments: negative order");
  if (f.is_zero()) return std::vector<GaussianRational>(static_cast<std::size_t>(n) + 1);
  return f.R().taylor_at(GaussianRational(), n);
}

}  // namespace pommiez
