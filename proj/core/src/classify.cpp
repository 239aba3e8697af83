#include "pommiez/classify.hpp"

#include <algorithm>

#include "pommiez/linalg.hpp"

namespace pommiez {

namespace {

int pdeg(const Polynomial& p) { return p.is_constant() ? 0 : p.degree(); }

MultiplicityVariety variety_from_roots(const std::vector<RootMult>& roots) {
  std::vector<std::pair<GaussianRational, int>> entries;
  entries.reserve(roots.size());
  for (const auto& [root, mult] : roots) entries.emplace_back(root, mult);
  return MultiplicityVariety(std::move(entries));
}

MultiplicityVariety poles_of(const Polynomial& v) {
  if (v.is_constant()) return {};
  return variety_from_roots(linear_roots_checked(v, "pole variety"));
}

// W(g0 / p) inside the region: the q-multiplicities lowered by p.
MultiplicityVariety w_g0_over_p(const ContextPtr& ctx, const Polynomial& p) {
  std::vector<RootMult> proots;
  if (!p.is_constant()) proots = linear_roots_checked(p, "descriptor p");
  std::vector<std::pair<GaussianRational, int>> out;
  for (const auto& [point, mult] : ctx->zero_variety().entries()) {
    int mp = 0;
    for (const auto& [root, k] : proots) {
      if (root == point) mp = k;
    }
    if (mult - mp > 0) out.emplace_back(point, mult - mp);
  }
  return MultiplicityVariety(std::move(out));
}

Polynomial poly_from_variety(const MultiplicityVariety& w) {
  Polynomial p = Polynomial::one();
  for (const auto& [point, mult] : w.entries())
    p = p * Polynomial::one_minus_z_over(point).pow(mult);
  return p;
}

}  // namespace

CanonicalDecomposition canonical_decomposition(const GMultiple& f) {
  if (f.is_zero()) throw DomainError("canonical decomposition: zero function");
  const RationalFunction& r = f.R();
  auto [poly_part, proper] = r.poly_and_proper();

  Polynomial d_in = Polynomial::one();
  Polynomial d_out = Polynomial::one();
  for (const auto& [pole, order] : f.poles()) {
    Polynomial lin = Polynomial::from_coeffs({-pole, GaussianRational(1)}).pow(order);
    if (f.ctx()->omega().contains(pole))
      d_in = d_in * lin;
    else
      d_out = d_out * lin;
  }

  CanonicalDecomposition cd;
  if (d_in.is_constant()) {
    cd.p = Polynomial::one();
    cd.r = poly_part;
    cd.u = proper.num();
    cd.v = proper.is_zero() ? Polynomial::one() : proper.den();
  } else {
    GaussianRational c = d_in.eval(GaussianRational());
    cd.p = c.inverse() * d_in;
    if (d_out.is_constant()) {
      cd.r = cd.p * poly_part + c.inverse() * proper.num();
      cd.u = Polynomial();
      cd.v = Polynomial::one();
    } else {
      PolyEgcd e = poly_egcd(d_in, d_out);
      if (!e.g.is_one()) throw InternalError("canonical decomposition: pole parts not coprime");
      Polynomial rem = proper.num();
      Polynomial a = Polynomial::divmod(rem * e.y, d_in).second;
      Polynomial b = Polynomial::divmod(rem * e.x, d_out).second;
      cd.r = cd.p * poly_part + c.inverse() * a;
      cd.u = b;
      cd.v = d_out;
    }
  }
  if (!cd.u.is_zero() && !poly_gcd(cd.u, cd.v).is_one())
    throw InternalError("canonical decomposition: u and v share a root");
  if (!cd.r.is_zero() && !poly_gcd(cd.r, cd.p).is_one())
    throw InternalError("canonical decomposition: r and p share a root");
  if (RationalFunction(cd.r, cd.p) + RationalFunction(cd.u, cd.v) != r)
    throw InternalError("canonical decomposition: recombination mismatch");
  return cd;
}

SubspaceDescriptor SubspaceDescriptor::full() {
  SubspaceDescriptor d;
  d.kind_ = Kind::Full;
  return d;
}

SubspaceDescriptor SubspaceDescriptor::trivial() {
  SubspaceDescriptor d;
  d.kind_ = Kind::Trivial;
  return d;
}

SubspaceDescriptor SubspaceDescriptor::rational(Polynomial p, ExtendedDegree n,
                                                MultiplicityVariety upsilon) {
  if (!n) {
    if (upsilon.empty()) return trivial();
    p = Polynomial::one();
  } else {
    if (p.is_zero() || !p.eval(GaussianRational()).is_one())
      throw DomainError("descriptor: p must satisfy p(0) = 1");
    if (*n < pdeg(p) - 1)
      throw DomainError("descriptor: n must be at least deg p - 1");
  }
  SubspaceDescriptor d;
  d.kind_ = Kind::Rational;
  d.p_ = std::move(p);
  d.n_ = n;
  d.upsilon_ = std::move(upsilon);
  return d;
}

SubspaceDescriptor SubspaceDescriptor::zero_variety(MultiplicityVariety w) {
  if (w.empty()) throw DomainError("descriptor: a zero-variety descriptor needs points");
  SubspaceDescriptor d;
  d.kind_ = Kind::ZeroVariety;
  d.upsilon_ = std::move(w);
  return d;
}

const Polynomial& SubspaceDescriptor::p() const {
  if (kind_ != Kind::Rational) throw InternalError("descriptor: p on a non-rational kind");
  return p_;
}

const ExtendedDegree& SubspaceDescriptor::n() const {
  if (kind_ != Kind::Rational) throw InternalError("descriptor: n on a non-rational kind");
  return n_;
}

const MultiplicityVariety& SubspaceDescriptor::upsilon() const {
  if (kind_ != Kind::Rational) throw InternalError("descriptor: upsilon on a non-rational kind");
  return upsilon_;
}

const MultiplicityVariety& SubspaceDescriptor::w() const {
  if (kind_ != Kind::ZeroVariety) throw InternalError("descriptor: w on a non-variety kind");
  return upsilon_;
}

bool operator==(const SubspaceDescriptor& a, const SubspaceDescriptor& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case SubspaceDescriptor::Kind::Full:
    case SubspaceDescriptor::Kind::Trivial:
      return true;
    case SubspaceDescriptor::Kind::ZeroVariety:
      return a.upsilon_ == b.upsilon_;
    case SubspaceDescriptor::Kind::Rational:
      return a.p_ == b.p_ && a.n_ == b.n_ && a.upsilon_ == b.upsilon_;
  }
  return false;
}

void validate_descriptor(const ContextPtr& ctx, const SubspaceDescriptor& d) {
  switch (d.kind()) {
    case SubspaceDescriptor::Kind::Full:
    case SubspaceDescriptor::Kind::Trivial:
      return;
    case SubspaceDescriptor::Kind::Rational: {
      if (!d.p().is_constant()) {
        for (const auto& [root, mult] : linear_roots_checked(d.p(), "descriptor p")) {
          if (!ctx->omega().contains(root))
            throw DomainError("descriptor: root " + to_string(root) + " of p lies outside the region");
          if (ctx->q_mult_at(root) < mult)
            throw DomainError("descriptor: g0/p is not holomorphic at " + to_string(root));
        }
      }
      for (const auto& [point, order] : d.upsilon().entries()) {
        (void)order;
        if (ctx->omega().contains(point))
          throw DomainError("descriptor: upsilon point " + to_string(point) + " lies inside the region");
      }
      return;
    }
    case SubspaceDescriptor::Kind::ZeroVariety: {
      for (const auto& [point, order] : d.w().entries()) {
        (void)order;
        if (!ctx->omega().contains(point))
          throw DomainError("descriptor: variety point " + to_string(point) + " lies outside the region");
      }
      if (!d.w().prec(ctx->zero_variety()))
        throw DomainError("descriptor: the variety is not dominated by the zeros of g0");
      return;
    }
  }
}

SubspaceDescriptor generated_subspace(const Holo& f) {
  if (std::holds_alternative<GMultiple>(f)) {
    const GMultiple& g = std::get<GMultiple>(f);
    if (g.is_zero()) return SubspaceDescriptor::trivial();
    CanonicalDecomposition cd = canonical_decomposition(g);
    MultiplicityVariety upsilon = poles_of(cd.v);
    if (cd.r.is_zero())
      return SubspaceDescriptor::rational(Polynomial::one(), std::nullopt, std::move(upsilon));
    int n = std::max(cd.r.degree(), pdeg(cd.p) - 1);
    return SubspaceDescriptor::rational(cd.p, n, std::move(upsilon));
  }
  const SymFunction& s = std::get<SymFunction>(f);
  if (s.is_zero()) return SubspaceDescriptor::trivial();
  if (s.is_g0_multiple()) return generated_subspace(GMultiple(s.ctx(), s.B()));
  MultiplicityVariety w0 = variety_min(s.zero_variety_in_omega(), s.ctx()->zero_variety());
  if (w0.empty()) return SubspaceDescriptor::full();
  return SubspaceDescriptor::zero_variety(std::move(w0));
}

bool is_cyclic(const Holo& f) {
  if (holo_is_zero(f)) throw DomainError("cyclicity: zero function");
  if (std::holds_alternative<GMultiple>(f)) return false;  // f = R g0 exists
  const SymFunction& s = std::get<SymFunction>(f);
  if (s.is_g0_multiple()) return false;
  return variety_min(s.zero_variety_in_omega(), s.ctx()->zero_variety()).empty();
}

bool membership(const Holo& f, const SubspaceDescriptor& d) {
  switch (d.kind()) {
    case SubspaceDescriptor::Kind::Full:
      return true;
    case SubspaceDescriptor::Kind::Trivial:
      return holo_is_zero(f);
    case SubspaceDescriptor::Kind::ZeroVariety: {
      if (holo_is_zero(f)) return true;
      for (const auto& [point, order] : d.w().entries()) {
        if (holo_zero_order_at(f, point) < order) return false;
      }
      return true;
    }
    case SubspaceDescriptor::Kind::Rational: {
      if (holo_is_zero(f)) return true;
      if (!std::holds_alternative<GMultiple>(f)) {
        const SymFunction& s = std::get<SymFunction>(f);
        if (!s.is_g0_multiple()) return false;
        return membership(GMultiple(s.ctx(), s.B()), d);
      }
      const GMultiple& g = std::get<GMultiple>(f);
      CanonicalDecomposition cd = canonical_decomposition(g);
      if (!Polynomial::divides(cd.p, d.p())) return false;
      if (!cd.r.is_zero()) {
        if (!d.n()) return false;
        if (cd.r.degree() + pdeg(d.p()) - pdeg(cd.p) > *d.n()) return false;
      }
      return poles_of(cd.v).prec(d.upsilon());
    }
  }
  return false;
}

bool inclusion(const ContextPtr& ctx, const SubspaceDescriptor& d1, const SubspaceDescriptor& d2) {
  using Kind = SubspaceDescriptor::Kind;
  if (d1.kind() == Kind::Trivial) return true;
  if (d2.kind() == Kind::Full) return true;
  if (d1.kind() == Kind::Full || d2.kind() == Kind::Trivial) return false;
  if (d1.kind() == Kind::Rational && d2.kind() == Kind::Rational) {
    if (!Polynomial::divides(d1.p(), d2.p())) return false;
    if (d1.n()) {
      if (!d2.n()) return false;
      if (*d1.n() + pdeg(d2.p()) - pdeg(d1.p()) > *d2.n()) return false;
    }
    return d1.upsilon().prec(d2.upsilon());
  }
  if (d1.kind() == Kind::Rational && d2.kind() == Kind::ZeroVariety) {
    const MultiplicityVariety base =
        d1.n() ? w_g0_over_p(ctx, d1.p()) : ctx->zero_variety();
    return d2.w().prec(base);
  }
  if (d1.kind() == Kind::ZeroVariety && d2.kind() == Kind::Rational) return false;
  return d2.w().prec(d1.w());
}

SubspaceDescriptor join(const ContextPtr& ctx, const SubspaceDescriptor& d1,
                        const SubspaceDescriptor& d2) {
  using Kind = SubspaceDescriptor::Kind;
  if (d1.kind() == Kind::Full || d2.kind() == Kind::Full) return SubspaceDescriptor::full();
  if (d1.kind() == Kind::Trivial) return d2;
  if (d2.kind() == Kind::Trivial) return d1;

  if (d1.kind() == Kind::Rational && d2.kind() == Kind::Rational) {
    MultiplicityVariety upsilon = variety_max(d1.upsilon(), d2.upsilon());
    std::vector<const SubspaceDescriptor*> finite;
    for (const auto* d : {&d1, &d2}) {
      if (d->n()) finite.push_back(d);
    }
    if (finite.empty())
      return SubspaceDescriptor::rational(Polynomial::one(), std::nullopt, std::move(upsilon));

    MultiplicityVariety proots;
    for (const auto* d : finite)
      proots = variety_max(proots, poles_of(d->p()));
    Polynomial l = poly_from_variety(proots);

    int closed = -1;
    int width = 0;
    for (const auto* d : finite) {
      int nd = *d->n() + pdeg(l) - pdeg(d->p());
      closed = std::max(closed, nd);
      width = std::max(width, nd + 1);
    }
    RowSpan span(width);
    for (const auto* d : finite) {
      Polynomial cofactor = Polynomial::div_exact(l, d->p());
      for (int j = 0; j <= *d->n(); ++j) {
        Polynomial row_poly = cofactor.shift_up(j);
        std::vector<GaussianRational> row(static_cast<std::size_t>(width));
        for (int k = 0; k < width; ++k) row[k] = row_poly.coeff(k);
        span.insert(row);
      }
    }
    int n = span.rank() - 1;
    if (n != closed)
      throw InternalError("join: exact polynomial-span rank disagrees with the closed form");
    return SubspaceDescriptor::rational(std::move(l), n, std::move(upsilon));
  }

  if (d1.kind() == Kind::ZeroVariety && d2.kind() == Kind::ZeroVariety) {
    MultiplicityVariety m = variety_min(d1.w(), d2.w());
    if (m.empty()) return SubspaceDescriptor::full();
    return SubspaceDescriptor::zero_variety(std::move(m));
  }

  const SubspaceDescriptor& zv = d1.kind() == Kind::ZeroVariety ? d1 : d2;
  const SubspaceDescriptor& rt = d1.kind() == Kind::ZeroVariety ? d2 : d1;
  const MultiplicityVariety base = rt.n() ? w_g0_over_p(ctx, rt.p()) : ctx->zero_variety();
  MultiplicityVariety m = variety_min(zv.w(), base);
  if (m.empty()) return SubspaceDescriptor::full();
  return SubspaceDescriptor::zero_variety(std::move(m));
}

std::optional<long> dimension(const SubspaceDescriptor& d) {
  switch (d.kind()) {
    case SubspaceDescriptor::Kind::Trivial:
      return 0;
    case SubspaceDescriptor::Kind::Rational: {
      long dim = d.n() ? *d.n() + 1 : 0;
      return dim + d.upsilon().total_multiplicity();
    }
    default:
      return std::nullopt;
  }
}

UnicellularityResult is_unicellular(const ContextPtr& ctx, int witness_length) {
  UnicellularityResult out;
  out.unicellular = ctx->omega().is_plane() && ctx->q_is_one();
  if (out.unicellular) {
    for (int j = 0; j < witness_length; ++j)
      out.witness_chain.push_back(
          SubspaceDescriptor::rational(Polynomial::one(), j, MultiplicityVariety()));
  }
  return out;
}

namespace {

void check_spec_points(const ContextPtr& ctx, const ExtremalSpec& spec) {
  std::vector<GaussianRational> all;
  for (const auto& [point, order] : spec.zeros) {
    if (order < 1) throw DomainError("extremal spec: zero orders must be positive");
    all.push_back(point);
  }
  for (const auto& point : spec.avoid) all.push_back(point);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!ctx->omega().contains(all[i]))
      throw DomainError("extremal spec: point " + to_string(all[i]) + " outside the region");
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j])
        throw DomainError("extremal spec: duplicate point " + to_string(all[i]));
    }
  }
}

// Values of c with prev + c * step = 0 under generic-unit semantics;
// at most one such c exists when step != 0.
std::optional<GaussianRational> bad_coefficient(const GenericValue& prev,
                                                const GenericValue& step) {
  if (step.is_zero()) return std::nullopt;
  GaussianRational c;
  if (!step.a.is_zero()) {
    c = -(prev.a / step.a);
    if ((prev.b + c * step.b).is_zero()) return c;
    return std::nullopt;
  }
  c = -(prev.b / step.b);
  if (prev.a.is_zero()) return c;
  return std::nullopt;
}

bool satisfies_spec(const SymFunction& w, const ExtremalSpec& spec) {
  if (w.is_zero()) return spec.zeros.empty() && spec.avoid.empty();
  for (const auto& [point, order] : spec.zeros) {
    if (w.zero_order_at(point) != order) return false;
  }
  for (const auto& point : spec.avoid) {
    if (w.value_at(point).is_zero()) return false;
  }
  return true;
}

}  // namespace

GaussianRational extremal_alpha(const SymFunction& f, const SymFunction& v,
                                const ExtremalSpec& spec) {
  check_spec_points(v.ctx(), spec);
  if (v.is_zero() || !satisfies_spec(v, spec))
    throw DomainError("extremal alpha: v does not satisfy the spec");

  std::vector<GaussianRational> bad;
  if (!f.is_zero()) {
    for (const auto& point : spec.avoid) {
      if (auto c = bad_coefficient(f.value_at(point), v.value_at(point))) bad.push_back(*c);
    }
    for (const auto& [point, order] : spec.zeros) {
      if (f.zero_order_at(point) < order)
        throw DomainError("extremal alpha: f vanishes to order below the spec at " +
                          to_string(point));
      if (auto c = bad_coefficient(f.taylor_coeff_at(point, order),
                                   v.taylor_coeff_at(point, order)))
        bad.push_back(*c);
    }
  }
  GaussianRational alpha(1);
  auto is_bad = [&](const GaussianRational& a) {
    return std::any_of(bad.begin(), bad.end(), [&](const GaussianRational& b) { return a == b; });
  };
  while (is_bad(alpha)) alpha += GaussianRational(1);

  SymFunction w = f + alpha * v;
  if (!satisfies_spec(w, spec))
    throw InternalError("extremal alpha: the re-verification failed");
  return alpha;
}

SymFunction extremal_combination(const std::vector<SymFunction>& fs, const ExtremalSpec& spec) {
  if (fs.empty()) throw DomainError("extremal combination: empty function list");
  const ContextPtr& ctx = fs.front().ctx();
  check_spec_points(ctx, spec);
  for (const auto& f : fs) {
    if (f.ctx() != ctx) throw DomainError("extremal combination: mixed contexts");
  }

  // feasibility: some member nonzero at each avoid point; the common zero
  // order must meet each prescribed order exactly
  for (const auto& point : spec.avoid) {
    bool any = false;
    for (const auto& f : fs) any = any || (!f.is_zero() && !f.value_at(point).is_zero());
    if (!any)
      throw DomainError("extremal combination: infeasible, every member vanishes at " +
                        to_string(point));
  }
  for (const auto& [point, order] : spec.zeros) {
    int common = -1;
    for (const auto& f : fs) {
      if (f.is_zero()) continue;
      int o = f.zero_order_at(point);
      common = common < 0 ? o : std::min(common, o);
    }
    if (common != order)
      throw DomainError("extremal combination: infeasible, common order at " + to_string(point) +
                        " is " + std::to_string(common) + ", spec wants " + std::to_string(order));
  }

  SymFunction w(ctx, RationalFunction(), RationalFunction());
  GaussianRational scale(1);
  const GaussianRational half = GaussianRational::from_ratio(1, 2);
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    std::vector<GaussianRational> bad;
    for (const auto& point : spec.avoid) {
      if (auto c = bad_coefficient(w.value_at(point), f.value_at(point))) bad.push_back(*c);
    }
    for (const auto& [point, order] : spec.zeros) {
      if (auto c = bad_coefficient(w.taylor_coeff_at(point, order),
                                   f.taylor_coeff_at(point, order)))
        bad.push_back(*c);
    }
    GaussianRational c = scale;
    auto is_bad = [&](const GaussianRational& x) {
      return x.is_zero() ||
             std::any_of(bad.begin(), bad.end(), [&](const GaussianRational& b) { return x == b; });
    };
    while (is_bad(c)) c *= half;
    w = w + c * f;
    scale *= half;  // later members enter with smaller weight
  }
  if (!satisfies_spec(w, spec))
    throw InternalError("extremal combination: the re-verification failed");
  return w;
}

}  // namespace pommiez
