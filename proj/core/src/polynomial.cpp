#include "pommiez/polynomial.hpp"

#include <algorithm>

#include "pommiez/gint.hpp"

namespace pommiez {

Polynomial::Polynomial(GaussianRational c0) {
  if (!c0.is_zero()) c_.push_back(std::move(c0));
}

Polynomial Polynomial::from_coeffs(std::vector<GaussianRational> coeffs) {
  Polynomial p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

Polynomial Polynomial::monomial(int k, GaussianRational c) {
  if (c.is_zero()) return {};
  std::vector<GaussianRational> v(static_cast<std::size_t>(k) + 1);
  v[k] = std::move(c);
  return from_coeffs(std::move(v));
}

Polynomial Polynomial::one_minus_z_over(const GaussianRational& root) {
  if (root.is_zero()) throw DomainError("polynomial: zero root in normalized factor");
  return from_coeffs({GaussianRational(1), -root.inverse()});
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Polynomial::degree() const {
  if (is_zero()) throw InternalError("degree() called on the zero polynomial");
  return static_cast<int>(c_.size()) - 1;
}

GaussianRational Polynomial::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return GaussianRational();
  return c_[k];
}

GaussianRational Polynomial::leading() const {
  if (is_zero()) throw InternalError("leading() called on the zero polynomial");
  return c_.back();
}

GaussianRational Polynomial::eval(const GaussianRational& z) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussianRational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = GaussianRational(static_cast<long>(k)) * c_[k];
  return from_coeffs(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  GaussianRational inv = leading().inverse();
  std::vector<GaussianRational> v(c_);
  for (auto& x : v) x *= inv;
  return from_coeffs(std::move(v));
}

Polynomial Polynomial::shift_up(int k) const {
  if (is_zero()) return {};
  std::vector<GaussianRational> v(static_cast<std::size_t>(k), GaussianRational());
  v.insert(v.end(), c_.begin(), c_.end());
  return from_coeffs(std::move(v));
}

Polynomial Polynomial::shift_down(int k) const {
  if (is_zero()) return {};
  for (int j = 0; j < k; ++j) {
    if (!coeff(j).is_zero()) throw InternalError("shift_down: polynomial not divisible by z^k");
  }
  if (static_cast<std::size_t>(k) >= c_.size()) return {};
  return from_coeffs({c_.begin() + k, c_.end()});
}

Polynomial Polynomial::pow(int e) const {
  Polynomial acc = one();
  for (int j = 0; j < e; ++j) acc = acc * *this;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<GaussianRational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k)
    v[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return Polynomial::from_coeffs(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator-(const Polynomial& a) {
  std::vector<GaussianRational> v(a.c_);
  for (auto& x : v) x = -x;
  return Polynomial::from_coeffs(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Polynomial::from_coeffs(std::move(v));
}

Polynomial operator*(const GaussianRational& s, const Polynomial& a) {
  std::vector<GaussianRational> v(a.c_);
  for (auto& x : v) x *= s;
  return Polynomial::from_coeffs(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial: division by zero");
  if (a.is_zero() || a.c_.size() < b.c_.size()) return {Polynomial(), a};
  std::vector<GaussianRational> rem(a.c_);
  std::vector<GaussianRational> quo(a.c_.size() - b.c_.size() + 1);
  GaussianRational lead_inv = b.leading().inverse();
  for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
    GaussianRational q = rem[k + b.c_.size() - 1] * lead_inv;
    quo[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
  }
  return {from_coeffs(std::move(quo)), from_coeffs(std::move(rem))};
}

Polynomial Polynomial::div_exact(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("polynomial: division expected to be exact");
  return q;
}

std::pair<Polynomial, GaussianRational> Polynomial::divide_linear(const GaussianRational& root) const {
  if (is_zero()) return {Polynomial(), GaussianRational()};
  std::vector<GaussianRational> q(c_.size() - 1);
  GaussianRational carry;
  for (int k = static_cast<int>(c_.size()) - 1; k >= 1; --k) {
    carry = c_[k] + root * carry;
    q[k - 1] = carry;
  }
  GaussianRational rem = c_[0] + root * carry;
  return {from_coeffs(std::move(q)), rem};
}

bool Polynomial::divides(const Polynomial& b, const Polynomial& a) {
  if (a.is_zero()) return true;
  auto [q, r] = divmod(a, b);
  (void)q;
  return r.is_zero();
}

std::vector<GaussianRational> Polynomial::taylor_at(const GaussianRational& at, int order) const {
  std::vector<GaussianRational> out(static_cast<std::size_t>(order) + 1);
  Polynomial cur = *this;
  for (int k = 0; k <= order && !cur.is_zero(); ++k) {
    auto [q, rem] = cur.divide_linear(at);
    out[k] = rem;
    cur = q;
  }
  return out;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto [q, r] = Polynomial::divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyEgcd poly_egcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial x0 = Polynomial::one(), x1;
  Polynomial y0, y1 = Polynomial::one();
  while (!r1.is_zero()) {
    auto [q, r] = Polynomial::divmod(r0, r1);
    r0 = std::exchange(r1, r);
    Polynomial nx = x0 - q * x1;
    x0 = std::exchange(x1, nx);
    Polynomial ny = y0 - q * y1;
    y0 = std::exchange(y1, ny);
  }
  if (r0.is_zero()) return {Polynomial(), Polynomial(), Polynomial()};
  GaussianRational s = r0.leading().inverse();
  return {s * r0, s * x0, s * y0};
}

namespace {

// Scale to a primitive Z[i] coefficient vector.
std::vector<GaussianInteger> integerize_primitive(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    l = lcm(l, c.re().get_den());
    l = lcm(l, c.im().get_den());
  }
  std::vector<GaussianInteger> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    mpq_class a = c.re() * l, b = c.im() * l;
    v.emplace_back(a.get_num(), b.get_num());
  }
  GaussianInteger g;
  for (const auto& c : v) g = gi_gcd(g, c);
  if (!(g == GaussianInteger{1, 0})) {
    for (auto& c : v) c = gi_div_exact(c, g);
  }
  return v;
}

std::optional<GaussianRational> find_rational_root(const Polynomial& p) {
  // p has nonzero constant term and degree >= 1.
  std::vector<GaussianInteger> c = integerize_primitive(p);
  const GaussianInteger& c0 = c.front();
  const GaussianInteger& cn = c.back();
  for (const GaussianInteger& num : gi_divisors(c0)) {
    for (const GaussianInteger& den : gi_divisors(cn)) {
      mpq_class na(num.a), nb(num.b), d(den.norm());
      GaussianRational numer(na, nb);
      GaussianRational denom_conj(mpq_class(den.a), mpq_class(-den.b));
      GaussianRational cand = numer * denom_conj;
      cand = GaussianRational(cand.re() / d, cand.im() / d);
      if (p.eval(cand).is_zero()) return cand;
    }
  }
  return std::nullopt;
}

}  // namespace

RootSplit linear_roots(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("linear_roots: zero polynomial");
  RootSplit out;
  Polynomial cur = p;
  int zeros = 0;
  while (!cur.is_constant() && cur.coeff(0).is_zero()) {
    cur = cur.shift_down(1);
    ++zeros;
  }
  if (zeros > 0) out.roots.push_back({GaussianRational(), zeros});
  while (!cur.is_constant()) {
    auto root = find_rational_root(cur);
    if (!root) break;
    int mult = 0;
    while (true) {
      auto [q, rem] = cur.divide_linear(*root);
      if (!rem.is_zero()) break;
      cur = q;
      ++mult;
      if (cur.is_constant()) break;
    }
    out.roots.push_back({*root, mult});
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const RootMult& a, const RootMult& b) { return scalar_less(a.root, b.root); });
  out.residual = cur.monic();
  return out;
}

std::vector<RootMult> linear_roots_checked(const Polynomial& p, const char* what) {
  RootSplit s = linear_roots(p);
  if (!s.complete())
    throw IrreducibleError(std::string(what) + ": factor with no root in Q(i) of degree " +
                               std::to_string(s.residual.degree()),
                           s.residual);
  return std::move(s.roots);
}

}  // namespace pommiez
