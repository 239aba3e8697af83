#include "pommiez/oracle.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "pommiez/operator.hpp"

namespace pommiez {

namespace {

int pdeg(const Polynomial& p) { return p.is_constant() ? 0 : p.degree(); }

}  // namespace

CoordinateFrame CoordinateFrame::for_rationals(const std::vector<RationalFunction>& rs) {
  CoordinateFrame frame;
  for (const RationalFunction& r : rs) {
    if (r.is_zero()) continue;
    PartialFractionExpansion pf = partial_fractions(r);
    if (!pf.poly_part.is_zero()) frame.jmax_ = std::max(frame.jmax_, pf.poly_part.degree());
    for (const auto& t : pf.terms) {
      bool found = false;
      for (auto& [point, cap] : frame.poles_) {
        if (point == t.pole) {
          cap = std::max(cap, t.order);
          found = true;
        }
      }
      if (!found) frame.poles_.emplace_back(t.pole, t.order);
    }
  }
  std::sort(frame.poles_.begin(), frame.poles_.end(),
            [](const auto& a, const auto& b) { return scalar_less(a.first, b.first); });
  return frame;
}

int CoordinateFrame::dimension() const {
  int dim = jmax_ + 1;
  for (const auto& [point, cap] : poles_) {
    (void)point;
    dim += cap;
  }
  return dim;
}

std::vector<GaussianRational> CoordinateFrame::embed(const RationalFunction& r) const {
  std::vector<GaussianRational> v(static_cast<std::size_t>(dimension()));
  if (r.is_zero()) return v;
  PartialFractionExpansion pf = partial_fractions(r);
  if (!pf.poly_part.is_zero()) {
    if (pf.poly_part.degree() > jmax_)
      throw InternalError("frame overflow: polynomial degree beyond the frame");
    for (int k = 0; k <= pf.poly_part.degree(); ++k) v[k] = pf.poly_part.coeff(k);
  }
  for (const auto& t : pf.terms) {
    int offset = jmax_ + 1;
    bool placed = false;
    for (const auto& [point, cap] : poles_) {
      if (point == t.pole) {
        if (t.order > cap) throw InternalError("frame overflow: pole order beyond the frame");
        v[offset + t.order - 1] = t.coeff;
        placed = true;
        break;
      }
      offset += cap;
    }
    if (!placed) throw InternalError("frame overflow: pole outside the frame");
  }
  return v;
}

namespace {

OrbitSpan orbit_span_in_frame(const RationalFunction& r0, const CoordinateFrame& frame,
                              int max_iter) {
  OrbitSpan out;
  if (max_iter < 0) max_iter = frame.dimension() + 2;
  RowSpan span(frame.dimension());
  RationalFunction cur = r0;
  for (int it = 0; it <= max_iter; ++it) {
    out.iterates.push_back(cur);
    if (!span.insert(frame.embed(cur))) {
      // a dependent iterate closes the span for good
      out.stabilized = true;
      break;
    }
    out.ranks.push_back(span.rank());
    cur = backward_shift(cur);
  }
  return out;
}

}  // namespace

OrbitSpan orbit_span(const GMultiple& f, int max_iter) {
  if (f.is_zero()) {
    OrbitSpan out;
    out.stabilized = true;
    out.iterates.push_back(f.R());
    return out;
  }
  CoordinateFrame frame = CoordinateFrame::for_rationals({f.R()});
  return orbit_span_in_frame(f.R(), frame, max_iter);
}

std::vector<RationalFunction> descriptor_generators(const SubspaceDescriptor& d) {
  std::vector<RationalFunction> gens;
  if (d.kind() == SubspaceDescriptor::Kind::Trivial) return gens;
  if (d.kind() != SubspaceDescriptor::Kind::Rational)
    throw DomainError("generators: only finite descriptors have finite generator sets");
  if (d.n()) {
    for (int j = 0; j <= *d.n(); ++j)
      gens.emplace_back(Polynomial::monomial(j), d.p());
  }
  for (const auto& [point, order] : d.upsilon().entries()) {
    for (int k = 1; k <= order; ++k) gens.push_back(RationalFunction::simple_fraction(point, k));
  }
  return gens;
}

namespace {

std::string describe(const RationalFunction& r) {
  std::string num = "[";
  for (const auto& c : r.num().coeffs()) num += " " + to_string(c);
  std::string den = "[";
  for (const auto& c : r.den().coeffs()) den += " " + to_string(c);
  return num + " ] / " + den + " ]";
}

void verify_finite(const GMultiple& f, const SubspaceDescriptor& d, VerifyReport& report) {
  if (d.kind() != SubspaceDescriptor::Kind::Rational &&
      d.kind() != SubspaceDescriptor::Kind::Trivial) {
    report.fail("a g0-multiple classified as an infinite-dimensional subspace");
    return;
  }
  std::vector<RationalFunction> gens = descriptor_generators(d);
  std::vector<RationalFunction> all = gens;
  all.push_back(f.R());
  CoordinateFrame frame = CoordinateFrame::for_rationals(all);

  OrbitSpan orbit = f.is_zero() ? OrbitSpan{{}, true, {f.R()}}
                                : orbit_span_in_frame(f.R(), frame, -1);
  if (!orbit.stabilized) report.fail("orbit did not stabilize within the frame bound");
  long dim = *dimension(d);
  if (orbit.rank() != dim)
    report.fail("orbit rank " + std::to_string(orbit.rank()) + " != descriptor dimension " +
                std::to_string(dim));
  if (!f.is_zero()) {
    CanonicalDecomposition cd = canonical_decomposition(f);
    long bound = (cd.r.is_zero() ? 0 : cd.r.degree() + 1) + pdeg(cd.p);
    if (!cd.v.is_one()) bound += cd.v.degree();
    if (orbit.rank() > bound)
      throw InternalError("orbit rank exceeded the a-priori frame bound");
  }

  RowSpan generator_span(frame.dimension());
  for (const auto& g : gens) generator_span.insert(frame.embed(g));
  for (std::size_t k = 0; k < orbit.iterates.size(); ++k) {
    if (!generator_span.contains(frame.embed(orbit.iterates[k])))
      report.fail("orbit iterate " + std::to_string(k) + " is not in the descriptor span");
  }

  RowSpan orbit_rows(frame.dimension());
  for (const auto& it : orbit.iterates) orbit_rows.insert(frame.embed(it));
  for (const auto& g : gens) {
    if (!orbit_rows.contains(frame.embed(g)))
      report.fail("descriptor generator " + describe(g) + " is not in the orbit span");
  }
}

// Concrete instance with unit 1 (g0 = q) matching the generic vanishing
// orders of A + g0 B at every zero of q in the region. A scale on the B part
// dodges the finitely many accidental leading-term cancellations.
RationalFunction concrete_representative(const SymFunction& s) {
  const auto& ctx = s.ctx();
  RationalFunction qb = RationalFunction(ctx->q()) * s.B();
  for (long scale = 1;; ++scale) {
    RationalFunction fc = s.A() + GaussianRational(scale) * qb;
    bool ok = !fc.is_zero();
    for (const auto& [point, mult] : ctx->zero_variety().entries()) {
      (void)mult;
      ok = ok && fc.order_at(point) == s.zero_order_at(point);
    }
    if (ok) return fc;
    if (scale > static_cast<long>(ctx->zero_variety().size()) + 2)
      throw InternalError("concrete representative: could not dodge cancellations");
  }
}

void verify_orders(const SymFunction& s, const SubspaceDescriptor& d, VerifyReport& report) {
  const auto& ctx = s.ctx();
  RationalFunction fc = concrete_representative(s);
  RationalFunction rc = fc / RationalFunction(ctx->q());
  CoordinateFrame frame = CoordinateFrame::for_rationals({rc});
  OrbitSpan orbit = orbit_span_in_frame(rc, frame, -1);
  if (!orbit.stabilized) {
    report.fail("concrete orbit did not stabilize within the frame bound");
    return;
  }
  for (const auto& [point, mult] : ctx->zero_variety().entries()) {
    (void)mult;
    int min_order = -1;
    for (const auto& it : orbit.iterates) {
      if (it.is_zero()) continue;
      int ord = ctx->q_mult_at(point) + it.order_at(point);
      min_order = min_order < 0 ? ord : std::min(min_order, ord);
    }
    int expected = 0;
    if (d.kind() == SubspaceDescriptor::Kind::ZeroVariety)
      expected = d.w().multiplicity_at(point);
    if (min_order != expected)
      report.fail("orbit order at " + to_string(point) + " is " + std::to_string(min_order) +
                  ", descriptor requires " + std::to_string(expected));
  }
  if (d.kind() == SubspaceDescriptor::Kind::ZeroVariety &&
      !d.w().prec(ctx->zero_variety()))
    report.fail("zero-variety descriptor exceeds the zeros of g0");
}

}  // namespace

VerifyReport verify_descriptor(const Holo& f, const SubspaceDescriptor& d) {
  VerifyReport report;
  if (std::holds_alternative<GMultiple>(f)) {
    verify_finite(std::get<GMultiple>(f), d, report);
    return report;
  }
  const SymFunction& s = std::get<SymFunction>(f);
  if (s.is_g0_multiple()) {
    verify_finite(GMultiple(s.ctx(), s.B()), d, report);
    return report;
  }
  if (d.kind() != SubspaceDescriptor::Kind::ZeroVariety &&
      d.kind() != SubspaceDescriptor::Kind::Full) {
    report.fail("a function outside g0 C(z) classified as a finite descriptor");
    return report;
  }
  verify_orders(s, d, report);
  return report;
}

CanonicalDecomposition decomposition_by_undetermined_coefficients(const GMultiple& f) {
  if (f.is_zero()) throw DomainError("decomposition: zero function");
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
  cd.p = d_in.is_constant() ? Polynomial::one()
                            : d_in.eval(GaussianRational()).inverse() * d_in;
  cd.v = d_out;
  // solve r v + u p = M with deg u < deg v, via u = M p^{-1} mod v
  RationalFunction m_rat = f.R() * RationalFunction(cd.p) * RationalFunction(cd.v);
  if (!m_rat.is_polynomial())
    throw InternalError("decomposition: R p v is not a polynomial");
  Polynomial m = m_rat.num();
  PolyEgcd e = poly_egcd(cd.p, cd.v);
  if (!e.g.is_one()) throw InternalError("decomposition: p and v are not coprime");
  cd.u = Polynomial::divmod(m * e.x, cd.v).second;
  cd.r = Polynomial::div_exact(m - cd.u * cd.p, cd.v);
  return cd;
}

// ---- randomized sweep ----

namespace {

// Documented coefficient grid: small Gaussian rationals including units,
// halves and a complex point. Index 0 is reserved for zero.
const std::array<GaussianRational, 9> kCoeffGrid = {
    GaussianRational(0),
    GaussianRational(1),
    GaussianRational(-1),
    GaussianRational(2),
    GaussianRational::from_ratio(1, 2),
    GaussianRational::from_ratio(-1, 2),
    GaussianRational::i(),
    GaussianRational(1) + GaussianRational::i(),
    GaussianRational(-2),
};

GaussianRational grid_coeff(std::mt19937_64& rng, bool allow_zero) {
  std::size_t lo = allow_zero ? 0 : 1;
  return kCoeffGrid[lo + rng() % (kCoeffGrid.size() - lo)];
}

// Documented pole grid outside the disk of radius 2 (|point| >= 2).
const std::array<GaussianRational, 6> kOutsideGrid = {
    GaussianRational(2),
    GaussianRational(3),
    GaussianRational(-2),
    GaussianRational(0) + GaussianRational(2) * GaussianRational::i(),
    GaussianRational(-3),
    GaussianRational(2) + GaussianRational(2) * GaussianRational::i(),
};

Polynomial random_poly(std::mt19937_64& rng, int max_degree) {
  int deg = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 2)) - 1;
  if (deg < 0) return {};
  std::vector<GaussianRational> c(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k < deg; ++k) c[k] = grid_coeff(rng, true);
  c[deg] = grid_coeff(rng, false);
  return Polynomial::from_coeffs(std::move(c));
}

RationalFunction random_gmultiple_part(const ContextPtr& ctx, std::mt19937_64& rng) {
  RationalFunction r(random_poly(rng, 3));
  // inside poles: bounded by the zero orders of q
  for (const auto& [root, mult] : ctx->q_roots()) {
    if (!ctx->omega().contains(root)) continue;
    int order = static_cast<int>(rng() % static_cast<std::uint64_t>(mult + 1));
    for (int k = 1; k <= order; ++k) {
      GaussianRational c = grid_coeff(rng, k != order);
      if (!c.is_zero()) r += c * RationalFunction::simple_fraction(root, k);
    }
  }
  // outside poles (none exist for the plane)
  if (!ctx->omega().is_plane()) {
    int npoles = static_cast<int>(rng() % 3);
    std::vector<GaussianRational> used;
    for (int j = 0; j < npoles; ++j) {
      GaussianRational pole = kOutsideGrid[rng() % kOutsideGrid.size()];
      if (std::find(used.begin(), used.end(), pole) != used.end()) continue;
      used.push_back(pole);
      int order = 1 + static_cast<int>(rng() % 3);
      for (int k = 1; k <= order; ++k) {
        GaussianRational c = grid_coeff(rng, k != order);
        if (!c.is_zero()) r += c * RationalFunction::simple_fraction(pole, k);
      }
    }
  }
  if (r.is_zero()) r = RationalFunction(Polynomial::one());
  return r;
}

RationalFunction random_a_part(const ContextPtr& ctx, std::mt19937_64& rng) {
  Polynomial base = random_poly(rng, 2);
  if (base.is_zero()) base = Polynomial::one();
  // plant zeros at the zeros of g0 with orders around the q multiplicities
  for (const auto& [point, mult] : ctx->zero_variety().entries()) {
    int e = static_cast<int>(rng() % static_cast<std::uint64_t>(mult + 2));
    base = base * Polynomial::from_coeffs({-point, GaussianRational(1)}).pow(e);
  }
  RationalFunction a(base);
  if (!ctx->omega().is_plane() && rng() % 2 == 0) {
    GaussianRational pole = kOutsideGrid[rng() % kOutsideGrid.size()];
    a += grid_coeff(rng, false) * RationalFunction::simple_fraction(pole, 1);
  }
  return a;
}

}  // namespace

Holo random_instance(const ContextPtr& ctx, std::uint64_t seed, int index) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(index) * 2654435761ULL + 17);
  if (index % 2 == 0) return GMultiple(ctx, random_gmultiple_part(ctx, rng));
  RationalFunction b = rng() % 2 == 0 ? random_gmultiple_part(ctx, rng) : RationalFunction();
  return SymFunction(ctx, random_a_part(ctx, rng), b);
}

std::vector<ContextPtr> selfcheck_contexts() {
  const GaussianRational one(1);
  const GaussianRational two(2);
  std::vector<std::vector<RootMult>> qs = {
      {},
      {{one, 1}},
      {{one, 2}, {two, 1}},
  };
  std::vector<ContextPtr> out;
  for (const Omega& omega : {Omega::disk(mpq_class(2)), Omega::plane()}) {
    for (const auto& q : qs) out.push_back(make_context(omega, q));
  }
  return out;
}

SelfCheckResult selfcheck(const SelfCheckOptions& options) {
  SelfCheckResult result;
  std::vector<ContextPtr> contexts = selfcheck_contexts();
  result.contexts = static_cast<int>(contexts.size());
  int global = 0;
  for (std::size_t c = 0; c < contexts.size(); ++c) {
    for (int k = 0; k < options.cases_per_context; ++k, ++global) {
      Holo f = random_instance(contexts[c], options.seed, global);
      std::string where = "context " + std::to_string(c) + " case " + std::to_string(k);
      try {
        SubspaceDescriptor d = generated_subspace(f);
        VerifyReport report = verify_descriptor(f, d);
        bool cyclic_consistent =
            is_cyclic(f) == (d.kind() == SubspaceDescriptor::Kind::Full);
        if (report.pass && cyclic_consistent) {
          ++result.passed;
        } else {
          ++result.failed;
          for (const auto& line : report.failures) result.failures.push_back(where + ": " + line);
          if (!cyclic_consistent)
            result.failures.push_back(where + ": cyclicity disagrees with the descriptor");
        }
      } catch (const Error& e) {
        ++result.failed;
        result.failures.push_back(where + ": exception: " + e.what());
      }
    }
  }
  return result;
}

}  // namespace pommiez
