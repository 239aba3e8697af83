#include "pommiez/operator.hpp"

#include <algorithm>

#include "pommiez/classify.hpp"
#include "pommiez/linalg.hpp"

namespace pommiez {

OperatorPolynomial OperatorPolynomial::from_coeffs(std::vector<GaussianRational> coeffs) {
  OperatorPolynomial p;
  p.a_ = std::move(coeffs);
  while (!p.a_.empty() && p.a_.back().is_zero()) p.a_.pop_back();
  return p;
}

int OperatorPolynomial::degree() const {
  if (a_.empty()) throw InternalError("operator polynomial: degree of the zero operator");
  return static_cast<int>(a_.size()) - 1;
}

OperatorPolynomial operator*(const OperatorPolynomial& p, const OperatorPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<GaussianRational> v(p.a_.size() + q.a_.size() - 1);
  for (std::size_t i = 0; i < p.a_.size(); ++i)
    for (std::size_t j = 0; j < q.a_.size(); ++j) v[i + j] += p.a_[i] * q.a_[j];
  return OperatorPolynomial::from_coeffs(std::move(v));
}

OperatorPolynomial operator+(const OperatorPolynomial& p, const OperatorPolynomial& q) {
  std::vector<GaussianRational> v(std::max(p.a_.size(), q.a_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k < p.a_.size()) v[k] += p.a_[k];
    if (k < q.a_.size()) v[k] += q.a_[k];
  }
  return OperatorPolynomial::from_coeffs(std::move(v));
}

OperatorPolynomial OperatorPolynomial::pow(int e) const {
  OperatorPolynomial acc = identity();
  for (int j = 0; j < e; ++j) acc = acc * *this;
  return acc;
}

RationalFunction backward_shift(const RationalFunction& r) {
  if (r.is_zero()) return r;
  GaussianRational r0 = r.eval(GaussianRational());
  Polynomial shifted_num = (r.num() - r0 * r.den()).shift_down(1);
  return RationalFunction(shifted_num, r.den());
}

RationalFunction apply_d0(const OperatorPolynomial& p, const RationalFunction& r) {
  RationalFunction acc;
  RationalFunction cur = r;
  const auto& a = p.coeffs();
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!a[j].is_zero()) acc += a[j] * cur;
    if (j + 1 < a.size()) cur = backward_shift(cur);
  }
  return acc;
}

Polynomial backward_shift_poly(const Polynomial& p, const Polynomial& s) {
  if (!p.eval(GaussianRational()).is_one())
    throw DomainError("backward shift: p(0) must be 1");
  if (s.is_zero()) return s;
  GaussianRational s0 = s.coeff(0);
  return (s - s0 * p).shift_down(1);
}

Polynomial apply_d0_poly(const OperatorPolynomial& op, const Polynomial& p, const Polynomial& s) {
  Polynomial acc;
  Polynomial cur = s;
  const auto& a = op.coeffs();
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!a[j].is_zero()) acc = acc + a[j] * cur;
    if (j + 1 < a.size()) cur = backward_shift_poly(p, cur);
  }
  return acc;
}

GMultiple apply_pommiez(const GMultiple& f) {
  return GMultiple(f.ctx(), backward_shift(f.R()));
}

GMultiple apply_operator(const OperatorPolynomial& p, const GMultiple& f) {
  return GMultiple(f.ctx(), apply_d0(p, f.R()));
}

std::vector<GMultiple> kernel_basis(const ContextPtr& ctx, int n) {
  if (n < 1) throw DomainError("kernel basis: n must be positive");
  std::vector<GMultiple> out;
  out.reserve(n);
  for (int j = 0; j < n; ++j) out.emplace_back(ctx, RationalFunction(Polynomial::monomial(j)));
  return out;
}

OperatorPolynomial annihilator(const std::vector<std::pair<GaussianRational, int>>& poles) {
  OperatorPolynomial acc = OperatorPolynomial::identity();
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const auto& [lambda, order] = poles[i];
    if (lambda.is_zero()) throw DomainError("annihilator: pole at the origin is not allowed");
    if (order < 1) throw DomainError("annihilator: orders must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      if (poles[j].first == lambda) throw DomainError("annihilator: duplicate pole");
    }
    acc = acc * OperatorPolynomial::shifted(lambda.inverse()).pow(order);
  }
  return acc;
}

namespace {

// Coordinates of R in the basis q_{lambda,1}..q_{lambda,k}; R must be a
// proper fraction supported on that single pole.
std::vector<GaussianRational> single_pole_coords(const RationalFunction& r,
                                                 const GaussianRational& lambda, int k) {
  std::vector<GaussianRational> v(static_cast<std::size_t>(k));
  if (r.is_zero()) return v;
  PartialFractionExpansion pf = partial_fractions(r);
  if (!pf.poly_part.is_zero())
    throw InternalError("extractor: fraction unexpectedly has a polynomial part");
  for (const auto& t : pf.terms) {
    if (t.pole != lambda || t.order > k)
      throw InternalError("extractor: fraction left the invariant single-pole space");
    v[t.order - 1] = t.coeff;
  }
  return v;
}

// Smallest monic P with P(D_{0,p})(r) = 0, by exact Krylov iteration on the
// polynomial coefficient vectors. r != 0, p(0) = 1.
OperatorPolynomial poly_min_annihilator(const Polynomial& p, const Polynomial& r) {
  int bound = std::max(r.degree(), p.is_constant() ? 0 : p.degree());
  auto as_vector = [&](const Polynomial& s) {
    std::vector<GaussianRational> v(static_cast<std::size_t>(bound) + 1);
    for (int k = 0; k <= bound; ++k) v[k] = s.coeff(k);
    return v;
  };
  std::vector<std::vector<GaussianRational>> iterates;
  Polynomial cur = r;
  for (int j = 0; j <= bound + 1; ++j) {
    std::vector<GaussianRational> vec = as_vector(cur);
    if (auto sol = solve_exact(iterates, vec)) {
      std::vector<GaussianRational> coeffs = *sol;
      for (auto& c : coeffs) c = -c;
      coeffs.push_back(GaussianRational(1));
      return OperatorPolynomial::from_coeffs(std::move(coeffs));
    }
    iterates.push_back(std::move(vec));
    cur = backward_shift_poly(p, cur);
  }
  throw InternalError("polynomial orbit failed to close within its dimension bound");
}

}  // namespace

OperatorPolynomial extractor(const RationalFunction& r, int m) {
  if (r.is_zero() || !r.is_proper())
    throw DomainError("extractor: input must be a nonzero proper fraction");
  PartialFractionExpansion pf = partial_fractions(r);
  GaussianRational lambda = pf.terms.front().pole;
  int k = 0;
  for (const auto& t : pf.terms) {
    if (t.pole != lambda) throw DomainError("extractor: more than one pole");
    k = std::max(k, t.order);
  }
  if (lambda.is_zero()) throw DomainError("extractor: pole at the origin");
  if (m < 1 || m > k) throw DomainError("extractor: target order out of range");

  std::vector<std::vector<GaussianRational>> columns;
  RationalFunction cur = r;
  for (int j = 0; j <= k; ++j) {
    columns.push_back(single_pole_coords(cur, lambda, k));
    cur = backward_shift(cur);
  }
  std::vector<GaussianRational> rhs(static_cast<std::size_t>(k));
  rhs[m - 1] = GaussianRational(1);
  auto sol = solve_exact(columns, rhs);
  if (!sol) throw InternalError("extractor: the triangular system has no solution");
  OperatorPolynomial op = OperatorPolynomial::from_coeffs(std::move(*sol));
  if (apply_d0(op, r) != RationalFunction::simple_fraction(lambda, m))
    throw InternalError("extractor: verification by direct application failed");
  return op;
}

IsolateResult isolate(const GMultiple& f, const GaussianRational& lambda, int m) {
  if (f.is_zero()) throw DomainError("isolate: zero function");
  if (m < 1) throw DomainError("isolate: target order must be positive");
  CanonicalDecomposition cd = canonical_decomposition(f);
  if (cd.v.is_one()) throw DomainError("isolate: the function has no proper outside part");

  std::vector<RootMult> vroots = linear_roots_checked(cd.v, "isolate");
  int target_order = 0;
  std::vector<std::pair<GaussianRational, int>> foreign;
  for (const auto& [pole, order] : vroots) {
    if (pole == lambda)
      target_order = order;
    else
      foreign.emplace_back(pole, order);
  }
  if (target_order < m)
    throw DomainError("isolate: " + to_string(lambda) +
                      " is not a pole of the proper part of the required order");

  OperatorPolynomial op1 = annihilator(foreign);
  if (!cd.r.is_zero()) op1 = op1 * poly_min_annihilator(cd.p, cd.r);
  RationalFunction r1 = apply_d0(op1, f.R());
  OperatorPolynomial op = extractor(r1, m) * op1;

  RationalFunction res = apply_d0(op, f.R());
  if (res != RationalFunction::simple_fraction(lambda, m))
    throw InternalError("isolate: verification by direct application failed");
  return {op, GMultiple(f.ctx(), res)};
}

DegreeRaiseResult degree_raise(const GMultiple& f) {
  if (f.is_zero()) throw DomainError("degree raise: zero function");
  CanonicalDecomposition cd = canonical_decomposition(f);
  if (cd.r.is_zero()) throw DomainError("degree raise: the polynomial part is zero");

  std::vector<std::pair<GaussianRational, int>> vpoles;
  if (!cd.v.is_one()) {
    for (const auto& [pole, order] : linear_roots_checked(cd.v, "degree raise"))
      vpoles.emplace_back(pole, order);
  }
  OperatorPolynomial op = annihilator(vpoles);
  Polynomial r2 = apply_d0_poly(op, cd.p, cd.r);
  if (r2.is_zero())
    throw InternalError("degree raise: the annihilator killed the polynomial part");

  int dp = cd.p.is_constant() ? 0 : cd.p.degree();
  int target = std::max(cd.r.degree(), dp - 1);
  Polynomial rt = r2;
  if (rt.degree() != target) {
    // deg r2 < deg p - 1: strip t^s, then one more shift reaches deg p - 1
    int s = 0;
    while (rt.coeff(s).is_zero()) ++s;
    Polynomial r0 = rt.shift_down(s);
    rt = (r0 - r0.coeff(0) * cd.p).shift_down(1);
    op = OperatorPolynomial::shift().pow(s + 1) * op;
  }
  if (rt.degree() != target)
    throw InternalError("degree raise: produced degree misses max(deg r, deg p - 1)");

  RationalFunction res(rt, cd.p);
  if (apply_d0(op, f.R()) != res)
    throw InternalError("degree raise: verification by direct application failed");
  return {op, GMultiple(f.ctx(), res), rt};
}

}  // namespace pommiez
