#pragma once

#include <random>

#include "pommiez/oracle.hpp"

// Shared helpers for the randomized checks. All randomness is seeded and
// drawn from small documented grids over Q(i).
namespace testsupport {

using namespace pommiez;

inline GaussianRational gr(long n, long d = 1) { return GaussianRational::from_ratio(n, d); }
inline GaussianRational gi(long re, long im) {
  return GaussianRational(mpq_class(re), mpq_class(im));
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t pick(std::uint64_t n) { return eng() % n; }

  // coefficient grid: 0, +-1, +-2, +-1/2, i, 1+i, 3/2
  GaussianRational coeff(bool allow_zero = true) {
    static const GaussianRational grid[] = {
        gr(0), gr(1), gr(-1), gr(2), gr(-2), gr(1, 2), gr(-1, 2), gi(0, 1), gi(1, 1), gr(3, 2)};
    std::size_t lo = allow_zero ? 0 : 1;
    return grid[lo + pick(std::size(grid) - lo)];
  }

  // nonzero points usable as poles or spectral parameters
  GaussianRational nonzero_point() {
    static const GaussianRational grid[] = {gr(1),     gr(-1), gr(2),    gr(3),    gr(-2),
                                            gr(1, 2),  gi(0, 1), gi(1, 1), gi(0, 2), gr(5, 2)};
    return grid[pick(std::size(grid))];
  }

  // points outside the disk of radius 2
  GaussianRational outside_point() {
    static const GaussianRational grid[] = {gr(2), gr(3), gr(-2), gi(0, 2), gr(-3), gi(2, 2)};
    return grid[pick(std::size(grid))];
  }

  Polynomial poly(int max_degree, bool nonzero = false) {
    int deg = static_cast<int>(pick(static_cast<std::uint64_t>(max_degree) + 2)) - 1;
    if (deg < 0) return nonzero ? Polynomial::one() : Polynomial();
    std::vector<GaussianRational> c(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k < deg; ++k) c[k] = coeff(true);
    c[deg] = coeff(false);
    return Polynomial::from_coeffs(std::move(c));
  }

  // rational function with poles on the grid, degrees <= 8
  RationalFunction rational(int max_poles = 3) {
    RationalFunction r(poly(4));
    int npoles = static_cast<int>(pick(static_cast<std::uint64_t>(max_poles) + 1));
    for (int j = 0; j < npoles; ++j) {
      GaussianRational pole = nonzero_point();
      int order = 1 + static_cast<int>(pick(2));
      r += coeff(false) * RationalFunction::simple_fraction(pole, order);
    }
    return r;
  }
};

inline Polynomial linear(const GaussianRational& root) {
  return Polynomial::from_coeffs({-root, GaussianRational(1)});
}

inline int pdeg(const Polynomial& p) { return p.is_constant() ? 0 : p.degree(); }

inline RationalFunction q_frac(long root, int order) {
  return RationalFunction::simple_fraction(gr(root), order);
}

}  // namespace testsupport
