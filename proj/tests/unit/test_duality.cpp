#include <doctest.h>

#include "pommiez/duality.hpp"
#include "pommiez/operator.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

CoFunction one_over_t() { return CoFunction::from_coeffs({gr(1)}); }

// h^{(k-1)}(at) / (k-1)! computed through rational derivatives: the
// independent route for the duality identity.
GaussianRational derivative_route(const CoFunction& h, const GaussianRational& at, int k) {
  RationalFunction r = h.as_rational();
  GaussianRational fact(1);
  for (int j = 1; j < k; ++j) {
    r = r.derivative();
    fact *= GaussianRational(j);
  }
  return r.eval(at) / fact;
}

CoFunction random_cofunction(Rng& rng, int max_index) {
  std::vector<GaussianRational> c(static_cast<std::size_t>(max_index));
  for (auto& x : c) x = rng.coeff();
  c.back() = rng.coeff(false);
  return CoFunction::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("pairing against 1/t evaluates at the pole") {
  CHECK(pair_residue(q_frac(2, 1), one_over_t()) == gr(1, 2));
  CHECK(pair_residue(q_frac(2, 2), one_over_t()) == gr(-1, 4));  // h'(2) for h = 1/t
  CHECK(pair_residue(RationalFunction(Polynomial::one()), one_over_t()) == gr(-1));
  CHECK_THROWS_AS(pair_residue(q_frac(0, 1), one_over_t()), DomainError);
}

TEST_CASE("pairing of simple fractions equals the derivative formula") {
  Rng rng(71);
  for (int t = 0; t < 50; ++t) {
    GaussianRational lambda = rng.nonzero_point();
    int k = 1 + static_cast<int>(rng.pick(5));
    CoFunction h = random_cofunction(rng, 1 + static_cast<int>(rng.pick(5)));
    CHECK(pair_residue(RationalFunction::simple_fraction(lambda, k), h) ==
          derivative_route(h, lambda, k));
  }
}

TEST_CASE("adjoint of the backward shift divides by t") {
  CoFunction h = adjoint_backward_shift(one_over_t());
  CHECK(h.coeff(1).is_zero());
  CHECK(h.coeff(2) == gr(1));

  // pair(D0 t, 1/t) = pair(1, 1/t) = -1 = pair(t, 1/t^2)
  RationalFunction t(Polynomial::variable());
  CHECK(pair_residue(backward_shift(t), one_over_t()) == gr(-1));
  CHECK(pair_residue(t, h) == gr(-1));
}

TEST_CASE("adjoint identity on random data") {
  Rng rng(72);
  for (int t = 0; t < 50; ++t) {
    RationalFunction f = rng.rational();
    if (f.is_zero() || f.den().eval(gr(0)).is_zero()) continue;
    CoFunction h = random_cofunction(rng, 1 + static_cast<int>(rng.pick(5)));
    CHECK(pair_residue(backward_shift(f), h) == pair_residue(f, adjoint_backward_shift(h)));
  }
}

TEST_CASE("spectral shift moves through the pairing") {
  Rng rng(73);
  for (int t = 0; t < 30; ++t) {
    GaussianRational lambda = rng.nonzero_point();
    RationalFunction f = rng.rational();
    if (f.is_zero() || f.den().eval(gr(0)).is_zero()) continue;
    CoFunction h = random_cofunction(rng, 3);
    GaussianRational lhs =
        pair_residue(apply_d0(OperatorPolynomial::shifted(lambda.inverse()), f), h);
    CoFunction rhs_h = adjoint_backward_shift(h) + (-lambda.inverse()) * h;
    CHECK(lhs == pair_residue(f, rhs_h));
  }
}

TEST_CASE("moment sequences") {
  auto ctx = make_context(Omega::disk(2), {{gr(1), 1}});
  std::vector<GaussianRational> m = moments(GMultiple(ctx, RationalFunction(Polynomial::one())), 4);
  CHECK(m[0] == gr(1));
  for (int k = 1; k <= 4; ++k) CHECK(m[k].is_zero());

  m = moments(GMultiple(ctx, RationalFunction(Polynomial::variable())), 4);
  CHECK(m[0].is_zero());
  CHECK(m[1] == gr(1));
  CHECK(m[2].is_zero());
}

TEST_CASE("moments equal the values of the iterated operator at the origin") {
  Rng rng(74);
  auto ctx = make_context(Omega::disk(2), {{gr(1), 1}});
  for (int t = 0; t < 20; ++t) {
    GMultiple f = std::get<GMultiple>(random_instance(ctx, 740, 2 * t));
    std::vector<GaussianRational> m = moments(f, 6);
    GMultiple cur = f;
    for (int k = 0; k <= 6; ++k) {
      GaussianRational direct = cur.is_zero() ? gr(0) : cur.R().eval(gr(0));
      CHECK(m[k] == direct);
      cur = apply_pommiez(cur);
    }
  }
}

TEST_CASE("moments equal the jet path under a concrete unit") {
  Rng rng(75);
  auto ctx = make_context(Omega::disk(2), {{gr(1), 1}}, UnitSpec::exp_unit(gr(1, 2), 16));
  for (int t = 0; t < 15; ++t) {
    GMultiple f = std::get<GMultiple>(random_instance(ctx, 750, 2 * t));
    if (f.is_zero()) continue;
    std::vector<GaussianRational> m = moments(f, 6);
    Jet g0 = ctx->g0_jet();
    Jet cur = f.jet();
    for (int k = 0; k <= 6; ++k) {
      CHECK(m[k] == cur.coeff(0));
      cur = jet_apply_pommiez(g0, cur);
    }
  }
}

TEST_CASE("vanishing moments inside a finite descriptor force the zero function") {
  // the moment functionals separate points of a finite descriptor space:
  // the d x d moment matrix of its generators has full rank
  auto ctx = make_context(Omega::disk(2), {{gr(1), 1}});
  SubspaceDescriptor d = SubspaceDescriptor::rational(
      Polynomial::from_coeffs({1, -1}), 1, MultiplicityVariety({{gr(3), 2}}));
  long dim = *dimension(d);
  RowSpan span(static_cast<int>(dim));
  for (const auto& g : descriptor_generators(d)) {
    std::vector<GaussianRational> row = moments(GMultiple(ctx, g), static_cast<int>(dim) - 1);
    CHECK(span.insert(row));
  }
  CHECK(span.rank() == dim);
}
