#include <doctest.h>

#include "support.hpp"

using namespace testsupport;

TEST_CASE("division with remainder and exactness") {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    Polynomial a = rng.poly(5), b = rng.poly(3, true);
    auto [q, r] = Polynomial::divmod(a, b);
    CHECK(q * b + r == a);
    if (!r.is_zero()) CHECK(r.degree() < b.degree());
    CHECK(Polynomial::div_exact(a * b, b) == a);
  }
  CHECK_THROWS_AS(Polynomial::divmod(Polynomial::one(), Polynomial()), DomainError);
}

TEST_CASE("gcd and extended gcd") {
  Rng rng(12);
  for (int k = 0; k < 60; ++k) {
    Polynomial a = rng.poly(3, true), b = rng.poly(3, true), g = rng.poly(2, true);
    Polynomial d = poly_gcd(a * g, b * g);
    CHECK(Polynomial::divides(g.monic(), d));
    PolyEgcd e = poly_egcd(a, b);
    CHECK(e.x * a + e.y * b == e.g);
  }
}

TEST_CASE("degree of the zero polynomial is rejected") {
  CHECK_THROWS_AS(Polynomial().degree(), InternalError);
  CHECK(Polynomial().is_zero());
}

TEST_CASE("roots of a factored product") {
  Polynomial p = linear(gr(1)).pow(2) * linear(gr(3));  // (z-1)^2 (z-3)
  RootSplit s = linear_roots(p);
  REQUIRE(s.complete());
  REQUIRE(s.roots.size() == 2);
  CHECK(s.roots[0].root == gr(1));
  CHECK(s.roots[0].mult == 2);
  CHECK(s.roots[1].root == gr(3));
  CHECK(s.roots[1].mult == 1);
}

TEST_CASE("z^2 + 1 splits into +-i") {
  RootSplit s = linear_roots(Polynomial::from_coeffs({1, 0, 1}));
  REQUIRE(s.complete());
  REQUIRE(s.roots.size() == 2);
  for (const auto& [root, mult] : s.roots) {
    CHECK(mult == 1);
    CHECK((root == GaussianRational::i() || root == -GaussianRational::i()));
  }
}

TEST_CASE("z^2 - 2 has no root in Q(i)") {
  Polynomial p = Polynomial::from_coeffs({-2, 0, 1});
  RootSplit s = linear_roots(p);
  CHECK(!s.complete());
  CHECK(s.residual == p);
  CHECK_THROWS_AS(linear_roots_checked(p, "test"), IrreducibleError);
  try {
    linear_roots_checked(p, "test");
  } catch (const IrreducibleError& e) {
    CHECK(e.residual() == p);
  }
}

TEST_CASE("random products: multiplicities account for the degree, roots substitute to zero") {
  Rng rng(13);
  for (int k = 0; k < 60; ++k) {
    Polynomial p = Polynomial(rng.coeff(false));
    int nfactors = 1 + static_cast<int>(rng.pick(3));
    for (int j = 0; j < nfactors; ++j)
      p = p * linear(rng.nonzero_point()).pow(1 + static_cast<int>(rng.pick(2)));
    RootSplit s = linear_roots(p);
    REQUIRE(s.complete());
    int total = 0;
    for (const auto& [root, mult] : s.roots) {
      total += mult;
      CHECK(p.eval(root).is_zero());
    }
    CHECK(total == p.degree());
  }
}

TEST_CASE("taylor shift agrees with evaluation") {
  Rng rng(14);
  for (int k = 0; k < 40; ++k) {
    Polynomial p = rng.poly(5, true);
    GaussianRational at = rng.coeff();
    auto t = p.taylor_at(at, p.degree());
    // reassemble sum t_j (z - at)^j
    Polynomial acc;
    for (int j = static_cast<int>(t.size()) - 1; j >= 0; --j)
      acc = acc * linear(at) + Polynomial(t[j]);
    CHECK(acc == p);
  }
}
