#include <benchmark/benchmark.h>

#include "pommiez/operator.hpp"
#include "pommiez/oracle.hpp"

using namespace pommiez;

namespace {

GaussianRational gr(long n, long d = 1) { return GaussianRational::from_ratio(n, d); }

Polynomial dense_poly(int degree) {
  std::vector<GaussianRational> c(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) c[k] = gr(2 * k + 1, k + 2);
  return Polynomial::from_coeffs(std::move(c));
}

RationalFunction worked_example() {
  return RationalFunction(Polynomial::variable(), Polynomial::from_coeffs({1, -1})) +
         RationalFunction::simple_fraction(gr(3), 1);
}

void bm_polynomial_mul(benchmark::State& state) {
  Polynomial a = dense_poly(static_cast<int>(state.range(0)));
  Polynomial b = dense_poly(static_cast<int>(state.range(0)) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_polynomial_mul)->Arg(8)->Arg(16)->Arg(32);

void bm_partial_fractions(benchmark::State& state) {
  RationalFunction f = worked_example() + RationalFunction::simple_fraction(gr(2), 3) +
                       RationalFunction::simple_fraction(GaussianRational::i() * gr(2), 2);
  for (auto _ : state) benchmark::DoNotOptimize(partial_fractions(f));
}
BENCHMARK(bm_partial_fractions);

void bm_backward_shift(benchmark::State& state) {
  RationalFunction f = worked_example();
  for (auto _ : state) benchmark::DoNotOptimize(backward_shift(f));
}
BENCHMARK(bm_backward_shift);

void bm_orbit_span(benchmark::State& state) {
  auto ctx = make_context(Omega::disk(2), {{gr(1), 1}});
  GMultiple f(ctx, worked_example());
  for (auto _ : state) benchmark::DoNotOptimize(orbit_span(f));
}
BENCHMARK(bm_orbit_span);

void bm_classify_and_verify(benchmark::State& state) {
  auto ctx = make_context(Omega::disk(2), {{gr(1), 1}});
  Holo f{GMultiple(ctx, worked_example())};
  for (auto _ : state) {
    SubspaceDescriptor d = generated_subspace(f);
    benchmark::DoNotOptimize(verify_descriptor(f, d));
  }
}
BENCHMARK(bm_classify_and_verify);

void bm_jet_of_rational(benchmark::State& state) {
  RationalFunction f = worked_example();
  for (auto _ : state) benchmark::DoNotOptimize(Jet::of_rational(f, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_jet_of_rational)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
