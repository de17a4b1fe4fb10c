#include <benchmark/benchmark.h>

#include "fe/lattice.hpp"

namespace {

std::vector<fe::SymReal> symbols(std::size_t d) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= d; ++k) names.push_back("theta" + std::to_string(k));
  const auto t = fe::SymbolTable::create(names, fe::IndependenceMode::QLinear);
  std::vector<fe::SymReal> out;
  for (std::size_t k = 0; k < d; ++k) out.push_back(fe::SymReal::symbol(t, k));
  return out;
}

void BM_Represent(benchmark::State& state) {
  const auto theta = symbols(static_cast<std::size_t>(state.range(0)));
  const fe::GeneratorSet gamma = fe::kronecker_generators(theta);
  std::vector<long> n(gamma.size());
  for (std::size_t k = 0; k < n.size(); ++k) n[k] = static_cast<long>(3 * k) - 4;
  const fe::Point x = gamma.embed(n);
  for (auto _ : state) benchmark::DoNotOptimize(fe::represent(x, gamma));
}
BENCHMARK(BM_Represent)->DenseRange(1, 4);

void BM_KroneckerDensity(benchmark::State& state) {
  const auto theta = symbols(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fe::kronecker_density_check(theta));
}
BENCHMARK(BM_KroneckerDensity)->DenseRange(1, 4);

void BM_PiPowerDensity(benchmark::State& state) {
  const auto t = fe::SymbolTable::create({"pi"}, fe::IndependenceMode::Algebraic);
  const fe::SymReal pi = fe::SymReal::symbol(t, 0);
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fe::pi_power_density_certificate(d, d + 1, pi));
}
BENCHMARK(BM_PiPowerDensity)->DenseRange(1, 3);

}  // namespace
