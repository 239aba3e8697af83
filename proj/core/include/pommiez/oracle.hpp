#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pommiez/classify.hpp"
#include "pommiez/linalg.hpp"

namespace pommiez {

/// Exact coordinates for the span computations: monomials t^0..t^jmax plus
/// the fractions 1/(t-pole)^k up to a per-pole cap. Every function in play
/// embeds through its partial fractions.
class CoordinateFrame {
 public:
  /// A frame large enough for all given functions (and, by invariance of
  /// the pole structure, for their whole operator orbits).
  static CoordinateFrame for_rationals(const std::vector<RationalFunction>& rs);

  int dimension() const;
  int monomial_degree_cap() const { return jmax_; }
  const std::vector<std::pair<GaussianRational, int>>& poles() const { return poles_; }
  /// Throws InternalError on frame overflow (a label outside the frame).
  std::vector<GaussianRational> embed(const RationalFunction& r) const;

 private:
  int jmax_ = -1;
  std::vector<std::pair<GaussianRational, int>> poles_;  // (point, order cap), canonical order
};

/// Result of iterating the operator and row-reducing the embedded orbit.
/// Ranks grow strictly until stabilization, so the first rank() iterates
/// are a basis of the span.
struct OrbitSpan {
  std::vector<int> ranks;  // rank after each inserted iterate
  bool stabilized = false;
  std::vector<RationalFunction> iterates;  // the R-side orbit, as computed
  int rank() const { return ranks.empty() ? 0 : ranks.back(); }
};

/// Iterates D_{0,g0} on f = g0 R (exactly, in R coordinates), embedding each
/// iterate and tracking the exact rank; stops as soon as an iterate is
/// dependent, which closes the span. max_iter < 0 means frame dimension + 2.
OrbitSpan orbit_span(const GMultiple& f, int max_iter = -1);

struct VerifyReport {
  bool pass = true;
  std::vector<std::string> failures;  // one witness line per failed check
  void fail(const std::string& witness) {
    pass = false;
    failures.push_back(witness);
  }
};

/// Brute-force check of a classification result:
///  - finite descriptors: stabilized orbit rank equals the descriptor
///    dimension, every orbit element solves in the generator span and every
///    generator solves in the orbit span;
///  - zero-variety and full descriptors: in the concrete world with unit 1
///    (g0 = q), the minimal vanishing order of the orbit at each relevant
///    point is compared against the descriptor exactly.
VerifyReport verify_descriptor(const Holo& f, const SubspaceDescriptor& d);

/// Generators of a finite descriptor on the R side: t^j / p and the simple
/// fractions of Upsilon.
std::vector<RationalFunction> descriptor_generators(const SubspaceDescriptor& d);

/// Second, independent route to the canonical decomposition: undetermined
/// coefficients via a modular inverse instead of the partial-fraction split.
CanonicalDecomposition decomposition_by_undetermined_coefficients(const GMultiple& f);

struct SelfCheckOptions {
  std::uint64_t seed = 1;
  int cases_per_context = 25;
};

struct SelfCheckResult {
  int contexts = 0;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;
};

/// Randomized verification sweep over the built-in context grid
/// {disk of radius 2, plane} x {q = 1, q = 1-z, q = (1-z)^2 (1-z/2)}:
/// classify each instance, run verify_descriptor, and check that cyclicity
/// agrees with a Full classification.
SelfCheckResult selfcheck(const SelfCheckOptions& options);

/// Deterministic instance generator used by the suite (exposed for tests):
/// index selects the built-in context, parity alternates between g0-multiples
/// and general functions.
Holo random_instance(const ContextPtr& ctx, std::uint64_t seed, int index);

/// The six built-in contexts of the sweep.
std::vector<ContextPtr> selfcheck_contexts();

}  // namespace pommiez
