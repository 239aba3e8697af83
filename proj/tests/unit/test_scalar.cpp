#include <doctest.h>

#include "support.hpp"

using namespace testsupport;

TEST_CASE("conjugate product (1/2 + i)(1/2 - i) = 5/4") {
  GaussianRational a = gr(1, 2) + GaussianRational::i();
  GaussianRational b = gr(1, 2) - GaussianRational::i();
  CHECK(a * b == gr(5, 4));
}

TEST_CASE("field axioms on the grid") {
  Rng rng(101);
  for (int k = 0; k < 200; ++k) {
    GaussianRational x = rng.coeff(), y = rng.coeff(false), z = rng.coeff();
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x * y / y == x);
    CHECK((x - x).is_zero());
  }
  CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), DomainError);
  CHECK_THROWS_AS(GaussianRational(0).inverse(), DomainError);
}

TEST_CASE("norm and conjugation") {
  GaussianRational x = gi(3, -4);
  CHECK(x.norm2() == mpq_class(25));
  CHECK(x * x.conj() == GaussianRational(mpq_class(25)));
  CHECK(x.inverse() * x == GaussianRational(1));
}

TEST_CASE("textual form") {
  CHECK(to_string(gr(0)) == "0");
  CHECK(to_string(gr(3)) == "3");
  CHECK(to_string(gr(-3, 4)) == "-3/4");
  CHECK(to_string(GaussianRational::i()) == "1*i");
  CHECK(to_string(-GaussianRational::i()) == "-1*i");
  CHECK(to_string(gi(1, 1)) == "1+1*i");
  CHECK(to_string(gr(-3, 4) + gr(5, 2) * GaussianRational::i()) == "-3/4+5/2*i");
  CHECK(to_string(gr(1, 2) - gr(7, 3) * GaussianRational::i()) == "1/2-7/3*i");
}

TEST_CASE("canonical order is a strict total order on the grid") {
  Rng rng(7);
  for (int k = 0; k < 100; ++k) {
    GaussianRational x = rng.coeff(), y = rng.coeff();
    if (x == y) {
      CHECK(!scalar_less(x, y));
      CHECK(!scalar_less(y, x));
    } else {
      CHECK(scalar_less(x, y) != scalar_less(y, x));
    }
  }
  CHECK(scalar_less(gr(1), gr(2)));
  CHECK(scalar_less(gr(-1), gr(1)));  // ties in norm break on the real part
}
