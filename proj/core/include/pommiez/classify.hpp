#pragma once

#include <optional>
#include <vector>

#include "pommiez/domain.hpp"

namespace pommiez {

/// The unique representation f = (g0/p) r + g0 (u/v) of a g0-multiple:
/// p(0) = 1 and p collects the poles of R inside the region (so its roots
/// are zeros of q with no greater multiplicity), v is monic without roots
/// in the region, deg u < deg v, gcd(u, v) = 1.
struct CanonicalDecomposition {
  Polynomial p, r, u, v;
};

/// Splits by pole location and recombines exactly before returning. f != 0.
CanonicalDecomposition canonical_decomposition(const GMultiple& f);

/// Degree extended by minus infinity (empty optional), ordered below all
/// integers; the polynomial span C[z]_n is {0} there.
using ExtendedDegree = std::optional<int>;

/// Classification result: one of
///   Rational(p, n, Upsilon)  =  (g0/p) C[z]_n + g0 C^-_Upsilon(z)
///   ZeroVariety(W)           =  S(W), functions vanishing per W
///   Full                     =  H(Omega)
///   Trivial                  =  {0}
/// Rational descriptors are canonical: p = 1 whenever n is minus infinity,
/// and Rational(1, -inf, empty) collapses to Trivial.
class SubspaceDescriptor {
 public:
  enum class Kind { Rational, ZeroVariety, Full, Trivial };

  static SubspaceDescriptor full();
  static SubspaceDescriptor trivial();
  static SubspaceDescriptor rational(Polynomial p, ExtendedDegree n, MultiplicityVariety upsilon);
  static SubspaceDescriptor zero_variety(MultiplicityVariety w);

  Kind kind() const { return kind_; }
  const Polynomial& p() const;
  const ExtendedDegree& n() const;
  const MultiplicityVariety& upsilon() const;
  const MultiplicityVariety& w() const;

  friend bool operator==(const SubspaceDescriptor& a, const SubspaceDescriptor& b);
  friend bool operator!=(const SubspaceDescriptor& a, const SubspaceDescriptor& b) {
    return !(a == b);
  }

 private:
  SubspaceDescriptor() = default;
  Kind kind_ = Kind::Trivial;
  Polynomial p_;
  ExtendedDegree n_;
  MultiplicityVariety upsilon_;  // doubles as W for ZeroVariety
};

/// Checks a descriptor against a context: p must divide the zero part of q
/// inside the region, Upsilon must live outside, W inside with W below W(g0).
void validate_descriptor(const ContextPtr& ctx, const SubspaceDescriptor& d);

/// The smallest closed invariant subspace containing f (f = 0 gives Trivial).
SubspaceDescriptor generated_subspace(const Holo& f);

/// f is cyclic iff it shares no zero with g0 in the region and is not a
/// rational multiple of g0. f != 0.
bool is_cyclic(const Holo& f);

/// Exact membership of f in the subspace denoted by d.
bool membership(const Holo& f, const SubspaceDescriptor& d);

/// Exact containment of descriptor subspaces.
bool inclusion(const ContextPtr& ctx, const SubspaceDescriptor& d1, const SubspaceDescriptor& d2);

/// Smallest descriptor containing both. The polynomial-part degree of a
/// Rational join is computed by exact rank and cross-checked against the
/// closed form; a mismatch is an internal inconsistency.
SubspaceDescriptor join(const ContextPtr& ctx, const SubspaceDescriptor& d1,
                        const SubspaceDescriptor& d2);

/// Linear dimension; empty optional means infinite.
std::optional<long> dimension(const SubspaceDescriptor& d);

struct UnicellularityResult {
  bool unicellular;
  /// First few members of the single chain of proper closed invariant
  /// subspaces (only when unicellular).
  std::vector<SubspaceDescriptor> witness_chain;
};

/// True exactly for the plane with zero-free g0.
UnicellularityResult is_unicellular(const ContextPtr& ctx, int witness_length = 5);

/// Finite extremality data: prescribed exact zero orders and points where
/// the function must not vanish. All points lie in the region and are
/// pairwise distinct across both lists.
struct ExtremalSpec {
  std::vector<std::pair<GaussianRational, int>> zeros;
  std::vector<GaussianRational> avoid;
};

/// Smallest positive integer alpha (as a scalar) such that f + alpha v
/// still satisfies the spec; v must satisfy it exactly. The result is
/// re-verified by order computations before returning.
GaussianRational extremal_alpha(const SymFunction& f, const SymFunction& v,
                                const ExtremalSpec& spec);

/// A finite combination w = sum c_s f_s meeting the spec, coefficients
/// chosen sequentially so that every constraint reached stays satisfied.
SymFunction extremal_combination(const std::vector<SymFunction>& fs, const ExtremalSpec& spec);

}  // namespace pommiez
