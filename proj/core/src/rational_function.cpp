#include "pommiez/rational_function.hpp"

#include <algorithm>

namespace pommiez {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function: zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::one();
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = Polynomial::div_exact(num_, g);
    den_ = Polynomial::div_exact(den_, g);
  }
  GaussianRational inv = den_.leading().inverse();
  num_ = inv * num_;
  den_ = inv * den_;
}

RationalFunction RationalFunction::simple_fraction(const GaussianRational& root, int order) {
  if (order < 1) throw DomainError("simple_fraction: order must be positive");
  Polynomial lin = Polynomial::from_coeffs({-root, GaussianRational(1)});
  return RationalFunction(Polynomial::one(), lin.pow(order));
}

bool RationalFunction::is_proper() const {
  if (num_.is_zero()) return false;
  return num_.degree() < den_.degree();
}

GaussianRational RationalFunction::eval(const GaussianRational& z) const {
  GaussianRational d = den_.eval(z);
  if (d.is_zero()) throw DomainError("rational function: evaluation at a pole (" + to_string(z) + ")");
  return num_.eval(z) / d;
}

int RationalFunction::order_at(const GaussianRational& z) const {
  if (is_zero()) throw DomainError("order_at: zero function");
  auto count = [&](const Polynomial& p) {
    int k = 0;
    Polynomial cur = p;
    while (true) {
      auto [q, rem] = cur.divide_linear(z);
      if (!rem.is_zero()) break;
      cur = q;
      ++k;
    }
    return k;
  };
  return count(num_) - count(den_);
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::pair<Polynomial, RationalFunction> RationalFunction::poly_and_proper() const {
  auto [q, r] = Polynomial::divmod(num_, den_);
  return {q, RationalFunction(r, den_)};
}

std::vector<GaussianRational> series_divide(const std::vector<GaussianRational>& a,
                                            const std::vector<GaussianRational>& b, int order) {
  if (b.empty() || b[0].is_zero()) throw DomainError("series division: constant term is zero");
  std::vector<GaussianRational> c(static_cast<std::size_t>(order) + 1);
  GaussianRational inv = b[0].inverse();
  for (int k = 0; k <= order; ++k) {
    GaussianRational acc = k < static_cast<int>(a.size()) ? a[k] : GaussianRational();
    for (int j = 1; j <= k; ++j) {
      if (j < static_cast<int>(b.size())) acc -= b[j] * c[k - j];
    }
    c[k] = acc * inv;
  }
  return c;
}

std::vector<GaussianRational> RationalFunction::taylor_at(const GaussianRational& at,
                                                          int order) const {
  if (den_.eval(at).is_zero()) throw DomainError("taylor_at: pole at the expansion point");
  return series_divide(num_.taylor_at(at, order), den_.taylor_at(at, order), order);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator*(const GaussianRational& s, const RationalFunction& a) {
  return RationalFunction(s * a.num_, a.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DomainError("rational function: division by the zero function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction PartialFractionExpansion::recombine() const {
  RationalFunction acc(poly_part);
  for (const auto& t : terms)
    acc += t.coeff * RationalFunction::simple_fraction(t.pole, t.order);
  return acc;
}

PartialFractionExpansion partial_fractions(const RationalFunction& f) {
  PartialFractionExpansion out;
  auto [poly, proper] = f.poly_and_proper();
  out.poly_part = poly;
  if (proper.is_zero()) return out;

  std::vector<RootMult> poles = linear_roots_checked(proper.den(), "partial fractions");
  for (const auto& [pole, mult] : poles) {
    // proper = num / ((z - pole)^mult * dhat); the Laurent part at `pole`
    // is read off the Taylor expansion of num/dhat there.
    Polynomial lin = Polynomial::from_coeffs({-pole, GaussianRational(1)});
    Polynomial dhat = Polynomial::div_exact(proper.den(), lin.pow(mult));
    std::vector<GaussianRational> a =
        series_divide(proper.num().taylor_at(pole, mult - 1), dhat.taylor_at(pole, mult - 1),
                      mult - 1);
    for (int j = 0; j < mult; ++j) {
      if (!a[j].is_zero()) out.terms.push_back({pole, mult - j, a[j]});
    }
  }
  std::sort(out.terms.begin(), out.terms.end(),
            [](const PartialFractionTerm& x, const PartialFractionTerm& y) {
              if (x.pole != y.pole) return scalar_less(x.pole, y.pole);
              return x.order < y.order;
            });
  if (out.recombine() != f)
    throw InternalError("partial fractions: recombination mismatch");
  return out;
}

GaussianRational laurent_coefficient(const RationalFunction& f, const GaussianRational& at,
                                     int k) {
  if (f.is_zero()) throw DomainError("laurent_coefficient: zero function");
  if (k < 1) throw DomainError("laurent_coefficient: index must be >= 1");
  int ord = f.order_at(at);
  int m = std::max(k, ord < 0 ? -ord : 0);
  Polynomial lin = Polynomial::from_coeffs({-at, GaussianRational(1)});
  RationalFunction g = f * RationalFunction(lin.pow(m));
  return g.taylor_at(at, m - k)[m - k];
}

}  // namespace pommiez
