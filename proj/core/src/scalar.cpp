#include "pommiez/scalar.hpp"

#include "pommiez/gint.hpp"

namespace pommiez {

GaussianRational GaussianRational::from_ratio(long num, long den) {
  if (den == 0) throw DomainError("scalar: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussianRational(q);
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DomainError("scalar: division by zero");
  mpq_class n = norm2();
  return {re_ / n, -im_ / n};
}

bool scalar_less(const GaussianRational& x, const GaussianRational& y) {
  mpq_class nx = x.norm2(), ny = y.norm2();
  int c = cmp(nx, ny);
  if (c != 0) return c < 0;
  c = cmp(x.re(), y.re());
  if (c != 0) return c < 0;
  return cmp(x.im(), y.im()) < 0;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

std::string to_string(const GaussianRational& x) {
  if (x.is_zero()) return "0";
  std::string out;
  if (x.re() != 0 || x.im() == 0) out = x.re().get_str();
  if (x.im() != 0) {
    if (!out.empty() && x.im() > 0) out += "+";
    mpq_class im = x.im();
    if (im < 0) {
      out += "-";
      im = -im;
    }
    out += im.get_str() + "*i";
  }
  return out;
}

// ---- Gaussian integer helpers ----

GaussianInteger gi_div_nearest(const GaussianInteger& x, const GaussianInteger& y) {
  mpz_class n = y.norm();
  GaussianInteger t = x * y.conj();
  auto round_div = [&](const mpz_class& num) {
    // round num/n to the nearest integer, ties toward zero
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    if (2 * r > n) q += 1;
    return q;
  };
  return {round_div(t.a), round_div(t.b)};
}

bool gi_divides(const GaussianInteger& y, const GaussianInteger& x) {
  GaussianInteger t = x * y.conj();
  mpz_class n = y.norm();
  return t.a % n == 0 && t.b % n == 0;
}

GaussianInteger gi_div_exact(const GaussianInteger& x, const GaussianInteger& y) {
  GaussianInteger t = x * y.conj();
  mpz_class n = y.norm();
  return {t.a / n, t.b / n};
}

GaussianInteger gi_gcd(GaussianInteger x, GaussianInteger y) {
  while (!y.is_zero()) {
    GaussianInteger q = gi_div_nearest(x, y);
    GaussianInteger r = x - q * y;
    x = y;
    y = r;
  }
  return x;
}

namespace {

// All (a, b) with a^2 + b^2 == d, signs and swaps included.
std::vector<GaussianInteger> two_square_representations(const mpz_class& d) {
  std::vector<GaussianInteger> out;
  mpz_class x = 0;
  while (x * x * 2 <= d) {
    mpz_class y2 = d - x * x;
    if (mpz_perfect_square_p(y2.get_mpz_t())) {
      mpz_class y;
      mpz_sqrt(y.get_mpz_t(), y2.get_mpz_t());
      std::vector<GaussianInteger> base = {{x, y}, {y, x}};
      for (const auto& g : base) {
        for (int sa = 0; sa < 2; ++sa) {
          for (int sb = 0; sb < 2; ++sb) {
            GaussianInteger c{sa ? -g.a : g.a, sb ? -g.b : g.b};
            bool seen = false;
            for (const auto& o : out) {
              if (o == c) {
                seen = true;
                break;
              }
            }
            if (!seen) out.push_back(c);
          }
        }
      }
    }
    ++x;
  }
  return out;
}

std::vector<mpz_class> integer_divisors(mpz_class n) {
  // n > 0; exhaustive factorization by trial division (desk scale inputs).
  std::vector<std::pair<mpz_class, int>> factors;
  mpz_class p = 2;
  while (p * p <= n) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> divs = {1};
  for (const auto& [q, e] : factors) {
    std::size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= q;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<GaussianInteger> gi_divisors(const GaussianInteger& x) {
  std::vector<GaussianInteger> out;
  for (const mpz_class& d : integer_divisors(x.norm())) {
    for (const GaussianInteger& g : two_square_representations(d)) {
      if (!g.is_zero() && gi_divides(g, x)) out.push_back(g);
    }
  }
  return out;
}

}  // namespace pommiez
