#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pommiez/jet.hpp"
#include "pommiez/rational_function.hpp"

namespace pommiez {

/// The region the functions live on: the whole plane or an open disk
/// centered at the origin. Membership is an exact rational comparison.
class Omega {
 public:
  static Omega plane() { return Omega({}); }
  static Omega disk(mpq_class radius);

  bool is_plane() const { return !radius_.has_value(); }
  const mpq_class& radius() const;
  bool contains(const GaussianRational& z) const;

  friend bool operator==(const Omega& a, const Omega& b) { return a.radius_ == b.radius_; }

 private:
  explicit Omega(std::optional<mpq_class> radius) : radius_(std::move(radius)) {}
  std::optional<mpq_class> radius_;  // empty = plane
};

/// Finite multiset of (point, multiplicity) pairs with pairwise distinct
/// points, kept in the canonical scalar order so equality is structural.
class MultiplicityVariety {
 public:
  MultiplicityVariety() = default;
  explicit MultiplicityVariety(std::vector<std::pair<GaussianRational, int>> entries);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::pair<GaussianRational, int>>& entries() const { return entries_; }
  int multiplicity_at(const GaussianRational& point) const;
  long total_multiplicity() const;

  /// True iff every point of *this occurs in other with at least the same
  /// multiplicity (the containment order on varieties).
  bool prec(const MultiplicityVariety& other) const;

  friend bool operator==(const MultiplicityVariety& a, const MultiplicityVariety& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const MultiplicityVariety& a, const MultiplicityVariety& b) {
    return !(a == b);
  }

 private:
  std::vector<std::pair<GaussianRational, int>> entries_;
};

/// Pointwise minimum: common points only, with the smaller multiplicity.
MultiplicityVariety variety_min(const MultiplicityVariety& a, const MultiplicityVariety& b);
/// Pointwise maximum: union of points with the larger multiplicity.
MultiplicityVariety variety_max(const MultiplicityVariety& a, const MultiplicityVariety& b);

/// The zero-free factor g1 of g0 = q * g1. By default it is a formal
/// symbolic unit (its values at nonzero points are treated as generic);
/// the two concrete presets exist for the jet cross-checks.
struct UnitSpec {
  enum class Kind { Generic, Exp, Geometric };
  Kind kind = Kind::Generic;
  GaussianRational c;  // exp(c t) or 1/(1 - c t)
  int truncation = 0;  // reliable jet order for the concrete presets

  static UnitSpec generic() { return {}; }
  static UnitSpec exp_unit(GaussianRational c, int truncation);
  static UnitSpec geometric_unit(GaussianRational c, int truncation);
  bool concrete() const { return kind != Kind::Generic; }
};

/// The fixed pair (Omega, g0 = q * g1): q is an explicit polynomial with
/// q(0) = 1 carrying the zeros, g1 a unit without zeros in Omega.
/// Immutable; shared read-only by every function value built on it.
class G0Context {
 public:
  G0Context(Omega omega, std::vector<RootMult> q_roots, UnitSpec unit = UnitSpec::generic());

  const Omega& omega() const { return omega_; }
  const Polynomial& q() const { return q_; }
  const std::vector<RootMult>& q_roots() const { return q_roots_; }
  bool q_is_one() const { return q_roots_.empty(); }
  /// Multiplicity of z as a root of q (0 when z is not a root).
  int q_mult_at(const GaussianRational& z) const;
  /// W(g0): the zeros of g0 inside Omega, i.e. the Omega-roots of q.
  const MultiplicityVariety& zero_variety() const { return omega_zeros_; }

  const UnitSpec& unit() const { return unit_; }
  /// Jets exist only for the concrete unit presets.
  Jet unit_jet() const;
  Jet g0_jet() const;

 private:
  Omega omega_;
  std::vector<RootMult> q_roots_;
  Polynomial q_;
  MultiplicityVariety omega_zeros_;
  UnitSpec unit_;
};

using ContextPtr = std::shared_ptr<const G0Context>;

ContextPtr make_context(Omega omega, std::vector<RootMult> q_roots,
                        UnitSpec unit = UnitSpec::generic());

/// f = g0 * R with R rational. Holomorphy on Omega is enforced: every pole
/// of R inside Omega is covered by a zero of q of at least that order, and
/// R has no pole at the origin.
class GMultiple {
 public:
  GMultiple(ContextPtr ctx, RationalFunction r);

  const ContextPtr& ctx() const { return ctx_; }
  const RationalFunction& R() const { return r_; }
  bool is_zero() const { return r_.is_zero(); }
  /// Poles of R with orders (the denominator's roots), precomputed.
  const std::vector<RootMult>& poles() const { return poles_; }

  /// W(f) restricted to Omega: at a point z of Omega the zero multiplicity
  /// is m(z, q) + order_at(R, z). f != 0.
  MultiplicityVariety zero_variety_in_omega() const;
  int zero_order_at(const GaussianRational& z) const;

  /// Taylor jet of f at 0 (concrete unit required).
  Jet jet(int order = -1) const;

  friend GMultiple operator+(const GMultiple& a, const GMultiple& b);
  friend GMultiple operator*(const GaussianRational& s, const GMultiple& a);
  friend bool operator==(const GMultiple& a, const GMultiple& b) {
    return a.r_ == b.r_ && a.ctx_ == b.ctx_;
  }

 private:
  ContextPtr ctx_;
  RationalFunction r_;
  std::vector<RootMult> poles_;
};

/// Value of a function at a point under generic-unit semantics:
/// a + g1(z) * b where g1(z) is treated as transcendental, so the value is
/// zero exactly when both components vanish.
struct GenericValue {
  GaussianRational a, b;
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  friend GenericValue operator+(const GenericValue& x, const GenericValue& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend GenericValue operator*(const GaussianRational& s, const GenericValue& x) {
    return {s * x.a, s * x.b};
  }
};

/// f = A + g0 * B with A rational without poles in Omega and g0 * B
/// holomorphic on Omega. Under generic-unit semantics the pair (A, B) is
/// uniquely recoverable from f.
class SymFunction {
 public:
  SymFunction(ContextPtr ctx, RationalFunction a, RationalFunction b);

  const ContextPtr& ctx() const { return ctx_; }
  const RationalFunction& A() const { return a_; }
  const RationalFunction& B() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_g0_multiple() const { return a_.is_zero(); }

  GenericValue value_at(const GaussianRational& z) const;
  /// Coefficient of (t - z)^m in the generic expansion of f at z.
  GenericValue taylor_coeff_at(const GaussianRational& z, int m) const;
  /// min(order_at(A, z), m(z, q) + order_at(B, z)); f != 0, z in Omega.
  int zero_order_at(const GaussianRational& z) const;
  /// W(f) restricted to the zero set of q inside Omega.
  MultiplicityVariety zero_variety_in_omega() const;

  /// Taylor jet of f at 0 (concrete unit required).
  Jet jet(int order = -1) const;

  friend SymFunction operator+(const SymFunction& x, const SymFunction& y);
  friend SymFunction operator*(const GaussianRational& s, const SymFunction& x);
  friend bool operator==(const SymFunction& x, const SymFunction& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.ctx_ == y.ctx_;
  }

 private:
  ContextPtr ctx_;
  RationalFunction a_, b_;
};

/// The function class the engine works on. A SymFunction with A = 0 is
/// normalized to a GMultiple by make_holo.
using Holo = std::variant<GMultiple, SymFunction>;

Holo make_holo(ContextPtr ctx, const RationalFunction& a, const RationalFunction& b);
const ContextPtr& holo_ctx(const Holo& f);
bool holo_is_zero(const Holo& f);
int holo_zero_order_at(const Holo& f, const GaussianRational& z);

}  // namespace pommiez
