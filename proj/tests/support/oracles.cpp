#include "oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fe::testing {

std::vector<std::complex<double>> companion_roots(std::span<const double> coeffs) {
  const std::size_t n = coeffs.size() - 1;
  if (n == 0) return {};
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 1; i < n; ++i) c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -coeffs[i] / coeffs[n];
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  std::vector<std::complex<double>> roots;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) roots.push_back(es.eigenvalues()[i]);
  return roots;
}

double max_root_modulus(std::span<const double> coeffs) {
  double best = 0.0;
  for (const auto& r : companion_roots(coeffs)) best = std::max(best, std::abs(r));
  return best;
}

std::optional<std::vector<long>> brute_force_relation(std::span<const Rational> theta, long bound) {
  const std::size_t d = theta.size();
  // Σ n_k p_k/q_k ∈ ℤ  ⇔  Σ n_k p_k (L/q_k) ≡ 0 (mod L)
  long lcm = 1;
  for (const auto& t : theta) lcm = std::lcm(lcm, t.denominator().get_si());
  std::vector<long> w;
  for (const auto& t : theta) w.push_back(BigInt(t.numerator() * (lcm / t.denominator().get_si())).get_si() % lcm);
  for (long norm = 1; norm <= bound; ++norm) {
    std::vector<long> n(d, -norm);
    while (true) {
      long maxabs = 0;
      for (long v : n) maxabs = std::max(maxabs, std::labs(v));
      if (maxabs == norm) {
        long acc = 0;
        for (std::size_t k = 0; k < d; ++k) acc = (acc + n[k] * w[k]) % lcm;
        if (acc == 0) return n;
      }
      std::size_t k = 0;
      while (k < d && n[k] == norm) n[k++] = -norm;
      if (k == d) break;
      ++n[k];
    }
  }
  return std::nullopt;
}

SymReal recursive_delta(const SampledFunction& f, const Point& h, unsigned n, const Point& x) {
  if (n == 0) return f(x);
  return recursive_delta(f, h, n - 1, x + h) - recursive_delta(f, h, n - 1, x);
}

MultiPoly generic_mixed_delta(const MultiPoly& p, unsigned r) {
  const std::size_t nv = p.nvars();
  const std::size_t total = nv * (r + 1);
  std::vector<MultiPoly> lift;
  for (std::size_t k = 0; k < nv; ++k) lift.push_back(MultiPoly::variable(total, k));
  MultiPoly q = substitute(p, lift);
  for (unsigned j = 1; j <= r; ++j) {
    std::vector<MultiPoly> step;
    for (std::size_t k = 0; k < total; ++k) {
      MultiPoly v = MultiPoly::variable(total, k);
      if (k < nv) v += MultiPoly::variable(total, j * nv + k);
      step.push_back(std::move(v));
    }
    q = substitute(q, step) - q;
  }
  return q;
}

SymReal specialize(const SymReal& v, std::size_t offset, std::span<const BigInt> values) {
  SymReal out;
  for (const auto& [mono, c] : v.terms()) {
    SymReal term(c);
    std::vector<unsigned> rest = mono.exponents();
    for (std::size_t k = 0; k < values.size(); ++k) {
      const unsigned e = mono.exponent(offset + k);
      if (e == 0) continue;
      BigInt pw;
      mpz_pow_ui(pw.get_mpz_t(), values[k].get_mpz_t(), e);
      term *= Rational(pw);
      rest[offset + k] = 0;
    }
    SymMonomial m(rest);
    if (!m.is_constant()) {
      term = SymReal::from_terms(v.table(), {{m, Rational(1)}}) * term;
    }
    out += term;
  }
  return out;
}

}  // namespace fe::testing
