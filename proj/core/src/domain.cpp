#include "pommiez/domain.hpp"

#include <algorithm>

namespace pommiez {

Omega Omega::disk(mpq_class radius) {
  if (radius <= 0) throw DomainError("omega: disk radius must be positive");
  return Omega(std::optional<mpq_class>(std::move(radius)));
}

const mpq_class& Omega::radius() const {
  if (is_plane()) throw DomainError("omega: the plane has no radius");
  return *radius_;
}

bool Omega::contains(const GaussianRational& z) const {
  if (is_plane()) return true;
  return z.norm2() < *radius_ * *radius_;
}

MultiplicityVariety::MultiplicityVariety(std::vector<std::pair<GaussianRational, int>> entries)
    : entries_(std::move(entries)) {
  for (const auto& [point, mult] : entries_) {
    (void)point;
    if (mult < 1) throw DomainError("variety: multiplicities must be positive");
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& x, const auto& y) { return scalar_less(x.first, y.first); });
  for (std::size_t k = 1; k < entries_.size(); ++k) {
    if (entries_[k].first == entries_[k - 1].first)
      throw DomainError("variety: duplicate point " + to_string(entries_[k].first));
  }
}

int MultiplicityVariety::multiplicity_at(const GaussianRational& point) const {
  for (const auto& [p, m] : entries_) {
    if (p == point) return m;
  }
  return 0;
}

long MultiplicityVariety::total_multiplicity() const {
  long total = 0;
  for (const auto& [p, m] : entries_) total += m;
  return total;
}

bool MultiplicityVariety::prec(const MultiplicityVariety& other) const {
  for (const auto& [p, m] : entries_) {
    if (other.multiplicity_at(p) < m) return false;
  }
  return true;
}

MultiplicityVariety variety_min(const MultiplicityVariety& a, const MultiplicityVariety& b) {
  std::vector<std::pair<GaussianRational, int>> out;
  for (const auto& [p, m] : a.entries()) {
    int n = b.multiplicity_at(p);
    if (n > 0) out.emplace_back(p, std::min(m, n));
  }
  return MultiplicityVariety(std::move(out));
}

MultiplicityVariety variety_max(const MultiplicityVariety& a, const MultiplicityVariety& b) {
  std::vector<std::pair<GaussianRational, int>> out = a.entries();
  for (const auto& [p, m] : b.entries()) {
    bool found = false;
    for (auto& [q, n] : out) {
      if (q == p) {
        n = std::max(n, m);
        found = true;
        break;
      }
    }
    if (!found) out.emplace_back(p, m);
  }
  return MultiplicityVariety(std::move(out));
}

UnitSpec UnitSpec::exp_unit(GaussianRational c, int truncation) {
  UnitSpec u;
  u.kind = Kind::Exp;
  u.c = std::move(c);
  u.truncation = truncation;
  return u;
}

UnitSpec UnitSpec::geometric_unit(GaussianRational c, int truncation) {
  UnitSpec u;
  u.kind = Kind::Geometric;
  u.c = std::move(c);
  u.truncation = truncation;
  return u;
}

G0Context::G0Context(Omega omega, std::vector<RootMult> q_roots, UnitSpec unit)
    : omega_(std::move(omega)), q_roots_(std::move(q_roots)), unit_(std::move(unit)) {
  std::sort(q_roots_.begin(), q_roots_.end(),
            [](const RootMult& a, const RootMult& b) { return scalar_less(a.root, b.root); });
  Polynomial q = Polynomial::one();
  std::vector<std::pair<GaussianRational, int>> inside;
  for (std::size_t k = 0; k < q_roots_.size(); ++k) {
    const auto& [root, mult] = q_roots_[k];
    if (root.is_zero()) throw DomainError("g0 context: q may not vanish at the origin");
    if (mult < 1) throw DomainError("g0 context: root multiplicities must be positive");
    if (k > 0 && q_roots_[k - 1].root == root)
      throw DomainError("g0 context: duplicate root " + to_string(root));
    q = q * Polynomial::one_minus_z_over(root).pow(mult);
    if (omega_.contains(root)) inside.emplace_back(root, mult);
  }
  q_ = std::move(q);
  omega_zeros_ = MultiplicityVariety(std::move(inside));

  if (unit_.kind == UnitSpec::Kind::Geometric) {
    if (omega_.is_plane())
      throw DomainError("g0 context: geometric unit is not zero-free-representable on the plane");
    if (!unit_.c.is_zero()) {
      // pole of 1/(1 - c t) must not fall inside the disk: |c| * radius <= 1
      mpq_class r = omega_.radius();
      if (unit_.c.norm2() * r * r > 1)
        throw DomainError("g0 context: geometric unit has a singularity inside the disk");
    }
  }
  if (unit_.concrete() && unit_.truncation < 1)
    throw DomainError("g0 context: concrete unit requires a positive truncation order");
}

int G0Context::q_mult_at(const GaussianRational& z) const {
  for (const auto& [root, mult] : q_roots_) {
    if (root == z) return mult;
  }
  return 0;
}

Jet G0Context::unit_jet() const {
  switch (unit_.kind) {
    case UnitSpec::Kind::Exp:
      return Jet::exp_unit(unit_.c, unit_.truncation);
    case UnitSpec::Kind::Geometric:
      return Jet::geometric_unit(unit_.c, unit_.truncation);
    default:
      throw DomainError("g0 context: the generic unit has no jet");
  }
}

Jet G0Context::g0_jet() const { return Jet::of_polynomial(q_, unit_.truncation) * unit_jet(); }

ContextPtr make_context(Omega omega, std::vector<RootMult> q_roots, UnitSpec unit) {
  return std::make_shared<const G0Context>(std::move(omega), std::move(q_roots), std::move(unit));
}

GMultiple::GMultiple(ContextPtr ctx, RationalFunction r)
    : ctx_(std::move(ctx)), r_(std::move(r)) {
  if (!ctx_) throw DomainError("g-multiple: missing context");
  if (r_.is_zero()) return;
  if (r_.den().eval(GaussianRational()).is_zero())
    throw DomainError("g-multiple: R has a pole at the origin");
  poles_ = linear_roots_checked(r_.den(), "g-multiple denominator");
  for (const auto& [pole, order] : poles_) {
    if (!ctx_->omega().contains(pole)) continue;
    int mq = ctx_->q_mult_at(pole);
    if (mq == 0)
      throw DomainError("g-multiple: pole " + to_string(pole) +
                        " lies inside the region but is not a zero of g0");
    if (mq < order)
      throw DomainError("g-multiple: pole " + to_string(pole) + " of order " +
                        std::to_string(order) + " exceeds the zero order " + std::to_string(mq) +
                        " of g0");
  }
}

MultiplicityVariety GMultiple::zero_variety_in_omega() const {
  if (is_zero()) throw DomainError("zero variety: zero function");
  std::vector<std::pair<GaussianRational, int>> out;
  for (const auto& [point, mult] : ctx_->zero_variety().entries()) {
    int m = mult + r_.order_at(point);
    if (m > 0) out.emplace_back(point, m);
  }
  return MultiplicityVariety(std::move(out));
}

int GMultiple::zero_order_at(const GaussianRational& z) const {
  if (is_zero()) throw DomainError("zero order: zero function");
  if (!ctx_->omega().contains(z)) throw DomainError("zero order: point outside the region");
  return ctx_->q_mult_at(z) + r_.order_at(z);
}

Jet GMultiple::jet(int order) const {
  if (order < 0) order = ctx_->unit().truncation;
  return Jet::of_rational(r_, order) * ctx_->g0_jet().truncated(order);
}

GMultiple operator+(const GMultiple& a, const GMultiple& b) {
  if (a.ctx_ != b.ctx_) throw DomainError("g-multiple: mixed contexts");
  return GMultiple(a.ctx_, a.r_ + b.r_);
}

GMultiple operator*(const GaussianRational& s, const GMultiple& a) {
  return GMultiple(a.ctx_, s * a.r_);
}

SymFunction::SymFunction(ContextPtr ctx, RationalFunction a, RationalFunction b)
    : ctx_(std::move(ctx)), a_(std::move(a)), b_(std::move(b)) {
  if (!ctx_) throw DomainError("function: missing context");
  if (!a_.is_zero() && !a_.is_polynomial()) {
    for (const auto& [pole, order] : linear_roots_checked(a_.den(), "function denominator")) {
      (void)order;
      if (ctx_->omega().contains(pole))
        throw DomainError("function: the rational part has a pole at " + to_string(pole) +
                          " inside the region");
    }
  }
  GMultiple check(ctx_, b_);  // validates the g0*B part
  (void)check;
}

GenericValue SymFunction::value_at(const GaussianRational& z) const {
  if (!ctx_->omega().contains(z)) throw DomainError("value: point outside the region");
  RationalFunction qb = RationalFunction(ctx_->q()) * b_;
  return {a_.is_zero() ? GaussianRational() : a_.eval(z),
          qb.is_zero() ? GaussianRational() : qb.eval(z)};
}

GenericValue SymFunction::taylor_coeff_at(const GaussianRational& z, int m) const {
  if (!ctx_->omega().contains(z)) throw DomainError("taylor: point outside the region");
  RationalFunction qb = RationalFunction(ctx_->q()) * b_;
  GaussianRational a = a_.is_zero() ? GaussianRational() : a_.taylor_at(z, m)[m];
  GaussianRational b = qb.is_zero() ? GaussianRational() : qb.taylor_at(z, m)[m];
  return {a, b};
}

int SymFunction::zero_order_at(const GaussianRational& z) const {
  if (is_zero()) throw DomainError("zero order: zero function");
  if (!ctx_->omega().contains(z)) throw DomainError("zero order: point outside the region");
  constexpr int kInfinite = 1 << 20;  // stands in for the order of the zero function
  int ma = a_.is_zero() ? kInfinite : a_.order_at(z);
  int mb = b_.is_zero() ? kInfinite : ctx_->q_mult_at(z) + b_.order_at(z);
  return std::min(ma, mb);
}

MultiplicityVariety SymFunction::zero_variety_in_omega() const {
  if (is_zero()) throw DomainError("zero variety: zero function");
  std::vector<std::pair<GaussianRational, int>> out;
  for (const auto& [point, mult] : ctx_->zero_variety().entries()) {
    (void)mult;
    int m = zero_order_at(point);
    if (m > 0) out.emplace_back(point, m);
  }
  return MultiplicityVariety(std::move(out));
}

Jet SymFunction::jet(int order) const {
  if (order < 0) order = ctx_->unit().truncation;
  Jet bj = Jet::of_rational(b_, order) * ctx_->g0_jet().truncated(order);
  return Jet::of_rational(a_, order) + bj;
}

SymFunction operator+(const SymFunction& x, const SymFunction& y) {
  if (x.ctx_ != y.ctx_) throw DomainError("function: mixed contexts");
  return SymFunction(x.ctx_, x.a_ + y.a_, x.b_ + y.b_);
}

SymFunction operator*(const GaussianRational& s, const SymFunction& x) {
  return SymFunction(x.ctx_, s * x.a_, s * x.b_);
}

Holo make_holo(ContextPtr ctx, const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return GMultiple(std::move(ctx), b);
  return SymFunction(std::move(ctx), a, b);
}

const ContextPtr& holo_ctx(const Holo& f) {
  return std::visit([](const auto& g) -> const ContextPtr& { return g.ctx(); }, f);
}

bool holo_is_zero(const Holo& f) {
  return std::visit([](const auto& g) { return g.is_zero(); }, f);
}

int holo_zero_order_at(const Holo& f, const GaussianRational& z) {
  return std::visit([&](const auto& g) { return g.zero_order_at(z); }, f);
}

}  // namespace pommiez
