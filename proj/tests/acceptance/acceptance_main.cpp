// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. All checks are exact (zero tolerance); runtime limits are
// asserted where stated. Usage: pommiez_acceptance <cli-binary> <golden-dir>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "pommiez/duality.hpp"
#include "pommiez/operator.hpp"
#include "pommiez/oracle.hpp"

using namespace pommiez;

namespace {

GaussianRational gr(long n, long d = 1) { return GaussianRational::from_ratio(n, d); }
GaussianRational gi(long re, long im) { return GaussianRational(mpq_class(re), mpq_class(im)); }

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

struct Suite {
  bool all_passed = true;
  void criterion(int number, const std::string& name, double time_limit_seconds,
                 const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      body();
    } catch (const Failure& f) {
      verdict = "FAIL";
      detail = f.what;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (verdict == "PASS" && time_limit_seconds > 0 && seconds > time_limit_seconds) {
      verdict = "FAIL";
      detail = "time limit exceeded";
    }
    std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", verdict.c_str(), number, name.c_str(),
                seconds, detail.empty() ? "" : " -- ", detail.c_str());
    if (verdict != "PASS") all_passed = false;
  }
};

const std::array<GaussianRational, 6> kOutside = {gr(2),    gr(3),   gr(-2),
                                                  gi(0, 2), gr(-3), gi(2, 2)};
const std::array<GaussianRational, 9> kNonzero = {gr(1),    gr(-1),   gr(2),   gr(1, 2), gr(-3),
                                                  gi(0, 1), gi(1, 1), gr(5, 2), gr(-1, 2)};
const std::array<GaussianRational, 9> kCoeffs = {gr(1),  gr(-1),   gr(2),    gr(1, 2), gr(-1, 2),
                                                 gi(0, 1), gi(1, 1), gr(3, 2), gr(-2)};

GaussianRational pick(std::mt19937_64& rng, const auto& grid) { return grid[rng() % grid.size()]; }

std::string run_cli(const std::string& cli, const std::string& args) {
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  require(pipe != nullptr, "could not launch the CLI");
  std::string out;
  char buf[512];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "missing golden file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int pdeg(const Polynomial& p) { return p.is_constant() ? 0 : p.degree(); }

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "./build/tools/pommiez";
  const std::string golden_dir = argc > 2 ? argv[2] : "tests/golden";
  Suite suite;

  // 1. identity suite for the elementary fraction actions
  suite.criterion(1, "shifted-operator coefficient formula, nilpotency, eigenvectors", 10, [] {
    std::mt19937_64 rng(101);
    auto ctx = make_context(Omega::disk(2), {});
    int done = 0;
    while (done < 100) {
      GaussianRational lambda = pick(rng, kOutside);
      GaussianRational mu = pick(rng, kNonzero);
      if (mu == lambda) continue;
      int k = 1 + static_cast<int>(rng() % 6);
      // alpha-coefficient formula, exact
      RationalFunction out = apply_d0(OperatorPolynomial::shifted(mu.inverse()),
                                      RationalFunction::simple_fraction(lambda, k));
      RationalFunction expected =
          (lambda.inverse() - mu.inverse()) * RationalFunction::simple_fraction(lambda, k);
      GaussianRational sign(-1);
      GaussianRational power = lambda.inverse() * lambda.inverse();
      for (int j = k - 1; j >= 1; --j) {
        expected += (sign * power) * RationalFunction::simple_fraction(lambda, j);
        sign = -sign;
        power = power * lambda.inverse();
      }
      require(out == expected, "coefficient formula mismatch");
      // nilpotency on the block of order k
      GMultiple block(ctx, RationalFunction::simple_fraction(lambda, k));
      require(apply_operator(OperatorPolynomial::shifted(lambda.inverse()).pow(k), block).is_zero(),
              "nilpotency failed");
      // eigenvector relation
      GMultiple ev(ctx, RationalFunction::simple_fraction(lambda, 1));
      require(apply_pommiez(ev).R() == lambda.inverse() * ev.R(), "eigenvector relation failed");
      ++done;
    }
  });

  // 2. extractor on random single-pole fractions, every target order
  suite.criterion(2, "extractor reaches every order of a single-pole fraction", 30, [] {
    std::mt19937_64 rng(202);
    for (int t = 0; t < 100; ++t) {
      GaussianRational lambda = pick(rng, kNonzero);
      int top = 1 + static_cast<int>(rng() % 5);
      RationalFunction r;
      for (int j = 1; j < top; ++j) {
        GaussianRational c = pick(rng, kCoeffs);
        if (rng() % 3 == 0) continue;
        r += c * RationalFunction::simple_fraction(lambda, j);
      }
      r += pick(rng, kCoeffs) * RationalFunction::simple_fraction(lambda, top);
      for (int m = 1; m <= top; ++m) {
        require(apply_d0(extractor(r, m), r) == RationalFunction::simple_fraction(lambda, m),
                "extraction missed the target");
      }
    }
  });

  // 3. canonical decomposition: recombination plus second-route uniqueness
  suite.criterion(3, "canonical decomposition round-trip and uniqueness", 0, [] {
    std::vector<ContextPtr> contexts = selfcheck_contexts();
    int done = 0, index = 0;
    while (done < 200) {
      const ContextPtr& ctx = contexts[index % contexts.size()];
      Holo h = random_instance(ctx, 303, 2 * index++);
      const GMultiple& f = std::get<GMultiple>(h);
      if (f.is_zero()) continue;
      CanonicalDecomposition cd = canonical_decomposition(f);
      require(RationalFunction(cd.r, cd.p) + RationalFunction(cd.u, cd.v) == f.R(),
              "recombination mismatch");
      CanonicalDecomposition other = decomposition_by_undetermined_coefficients(f);
      require(cd.p == other.p && cd.r == other.r && cd.u == other.u && cd.v == other.v,
              "the two decomposition routes disagree");
      ++done;
    }
  });

  // 4. classification versus the orbit-span oracle over the context grid
  suite.criterion(4, "classification agrees with the orbit-span oracle (1200 cases)", 300, [] {
    SelfCheckResult r = selfcheck({404, 200});
    require(r.failed == 0,
            r.failures.empty() ? "failures" : std::to_string(r.failed) + " failures, first: " +
                                                  r.failures.front());
    require(r.passed == 1200, "unexpected case count");
  });

  // 5. degree raising reaches exactly max(deg r, deg p - 1)
  suite.criterion(5, "degree raising hits max(deg r, deg p - 1) with a replayable operator", 0, [] {
    std::vector<ContextPtr> contexts = selfcheck_contexts();
    int done = 0, index = 0;
    while (done < 100) {
      const ContextPtr& ctx = contexts[index % contexts.size()];
      Holo h = random_instance(ctx, 505, 2 * index++);
      const GMultiple& f = std::get<GMultiple>(h);
      if (f.is_zero()) continue;
      CanonicalDecomposition cd = canonical_decomposition(f);
      if (cd.r.is_zero()) continue;
      DegreeRaiseResult dr = degree_raise(f);
      require(dr.r_tilde.degree() == std::max(cd.r.degree(), pdeg(cd.p) - 1),
              "wrong raised degree");
      require(apply_d0(dr.op, f.R()) == dr.result.R(), "operator replay mismatch");
      require(dr.result.R() == RationalFunction(dr.r_tilde, cd.p), "result is not (g0/p) r-tilde");
      ++done;
    }
  });

  // 6. kernel dimensions for n <= 8
  suite.criterion(6, "dim ker D^n = n for n <= 8", 0, [] {
    for (const ContextPtr& ctx : {make_context(Omega::disk(2), {{gr(1), 1}}),
                                  make_context(Omega::plane(), {})}) {
      for (int n = 1; n <= 8; ++n) {
        std::vector<GMultiple> basis = kernel_basis(ctx, n);
        require(static_cast<int>(basis.size()) == n, "basis size");
        RowSpan span(n);
        for (const auto& g : basis) {
          GMultiple cur = g;
          for (int j = 0; j < n; ++j) cur = apply_pommiez(cur);
          require(cur.is_zero(), "kernel member survived n applications");
          std::vector<GaussianRational> row(static_cast<std::size_t>(n));
          for (int k = 0; k < n; ++k) row[k] = g.R().num().coeff(k);
          require(span.insert(row), "kernel basis is dependent");
        }
        require(span.rank() == n, "kernel rank");
        GMultiple top = basis.back();
        for (int j = 0; j + 1 < n; ++j) top = apply_pommiez(top);
        require(!top.is_zero(), "top kernel member died early");
      }
    }
  });

  // 7. duality: evaluation formula and adjoint identity
  suite.criterion(7, "pairing evaluation formula and adjoint identity", 0, [] {
    std::mt19937_64 rng(707);
    auto random_h = [&](int max_index) {
      std::vector<GaussianRational> c(static_cast<std::size_t>(1 + rng() % max_index));
      for (auto& x : c) x = pick(rng, kCoeffs);
      return CoFunction::from_coeffs(std::move(c));
    };
    for (int t = 0; t < 50; ++t) {
      GaussianRational lambda = pick(rng, kNonzero);
      int k = 1 + static_cast<int>(rng() % 5);
      CoFunction h = random_h(5);
      RationalFunction hr = h.as_rational();
      GaussianRational fact(1);
      for (int j = 1; j < k; ++j) {
        hr = hr.derivative();
        fact = fact * GaussianRational(j);
      }
      require(pair_residue(RationalFunction::simple_fraction(lambda, k), h) ==
                  hr.eval(lambda) / fact,
              "evaluation formula mismatch");
    }
    for (int t = 0; t < 50; ++t) {
      std::vector<GaussianRational> pc(static_cast<std::size_t>(1 + rng() % 4));
      for (auto& x : pc) x = pick(rng, kCoeffs);
      RationalFunction f(Polynomial::from_coeffs(pc));
      if (rng() % 2) f += pick(rng, kCoeffs) * RationalFunction::simple_fraction(pick(rng, kNonzero), 1 + rng() % 3);
      if (f.is_zero() || f.den().eval(gr(0)).is_zero()) continue;
      CoFunction h = random_h(5);
      require(pair_residue(backward_shift(f), h) == pair_residue(f, adjoint_backward_shift(h)),
              "adjoint identity mismatch");
    }
  });

  // 8. jet cross-path for the exponential unit presets
  suite.criterion(8, "symbolic and jet operator paths agree (exp units, N = 32)", 0, [] {
    std::mt19937_64 rng(808);
    for (const GaussianRational& c : {gr(1), gr(1, 2), GaussianRational(mpq_class(0), mpq_class(1, 3))}) {
      auto ctx = make_context(Omega::disk(2), {{gr(1), 1}}, UnitSpec::exp_unit(c, 32));
      Jet g0 = ctx->g0_jet();
      int done = 0, index = 0;
      while (done < 50) {
        Holo h = random_instance(ctx, 808 + done, 2 * index++);
        const GMultiple& f = std::get<GMultiple>(h);
        if (f.is_zero()) continue;
        Jet lhs = apply_pommiez(f).jet(31);
        Jet rhs = jet_apply_pommiez(g0, f.jet());
        require(Jet::agree_through(lhs, rhs, 31), "jet and symbolic paths disagree");
        ++done;
      }
    }
  });

  // 9. unicellularity truth table
  suite.criterion(9, "unicellularity truth table", 0, [] {
    require(is_unicellular(make_context(Omega::plane(), {})).unicellular, "plane, zero-free");
    require(!is_unicellular(make_context(Omega::disk(2), {})).unicellular, "disk, zero-free");
    require(!is_unicellular(make_context(Omega::plane(), {{gr(1), 1}})).unicellular,
            "plane with zeros");
    require(!is_unicellular(make_context(Omega::disk(2), {{gr(1), 1}})).unicellular,
            "disk with zeros");
  });

  // 10. reduction to the plain backward shift when g0 has no zeros
  suite.criterion(10, "classification of g0 R matches R under g0 = 1", 0, [] {
    for (const Omega& omega : {Omega::disk(2), Omega::plane()}) {
      auto generic = make_context(omega, {});                                // g0 = unit
      auto trivial_unit = make_context(omega, {}, UnitSpec::exp_unit(gr(0), 8));  // g0 = 1
      int done = 0, index = 0;
      while (done < 25) {
        Holo h = random_instance(generic, 1010, 2 * index++);
        const GMultiple& f = std::get<GMultiple>(h);
        SubspaceDescriptor d1 = generated_subspace(h);
        SubspaceDescriptor d2 = generated_subspace(Holo(GMultiple(trivial_unit, f.R())));
        require(d1.kind() == d2.kind(), "kind mismatch");
        if (d1.kind() == SubspaceDescriptor::Kind::Rational) {
          require(d1.n() == d2.n() && d1.upsilon() == d2.upsilon() && d1.p() == d2.p(),
                  "descriptor data mismatch");
        }
        ++done;
      }
    }
  });

  // 11. cyclicity vs the generated subspace, both failure modes present
  suite.criterion(11, "cyclic iff the generated subspace is everything", 0, [] {
    std::vector<ContextPtr> contexts = selfcheck_contexts();
    int multiples = 0, common_zero = 0, cyclic_count = 0;
    for (int k = 0; k < 100; ++k) {
      Holo f = random_instance(contexts[k % contexts.size()], 1111, k);
      require(!holo_is_zero(f), "generator produced zero");
      bool cyc = is_cyclic(f);
      SubspaceDescriptor d = generated_subspace(f);
      require(cyc == (d.kind() == SubspaceDescriptor::Kind::Full), "cyclicity disagreement");
      if (std::holds_alternative<GMultiple>(f)) ++multiples;
      else if (d.kind() == SubspaceDescriptor::Kind::ZeroVariety) ++common_zero;
      if (cyc) ++cyclic_count;
    }
    require(multiples > 0, "no rational-multiple failure mode sampled");
    require(common_zero > 0, "no common-zero failure mode sampled");
    require(cyclic_count > 0, "no cyclic instance sampled");
  });

  // 12. CLI golden outputs, byte for byte
  suite.criterion(12, "documented CLI runs match the golden files", 0, [&] {
    struct Case {
      const char* file;
      const char* args;
    };
    const Case cases[] = {
        {"classify.json", "classify --omega disk:2 --q \"(1-z)\" --f \"g0*(z/(1-z)+1/(z-3))\""},
        {"cyclic.json", "cyclic --omega disk:2 --q \"(1-z)\" --f \"1 + g0*(0)\""},
        {"unicellular.json", "unicellular --omega plane --q \"1\""},
    };
    for (const Case& c : cases) {
      std::string expected = read_file(golden_dir + "/" + c.file);
      std::string got = run_cli(cli, c.args);
      require(got == expected, std::string("mismatch for ") + c.file);
    }
  });

  return suite.all_passed ? 0 : 1;
}
