#include "random.hpp"

#include <algorithm>

namespace fe::testing {

long Rng::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(engine_);
}

Rational Rng::rational(long num_lo, long num_hi, long den_hi) {
  const long p = integer(num_lo, num_hi);
  const long q = integer(1, den_hi);
  return Rational(BigInt(p), BigInt(q));
}

Rational Rng::nonzero_rational(long num_lo, long num_hi, long den_hi) {
  while (true) {
    Rational r = rational(num_lo, num_hi, den_hi);
    if (!r.is_zero()) return r;
  }
}

MultiPoly random_max_degree_poly(Rng& rng, std::size_t nvars, unsigned m, double density) {
  MultiPoly p(nvars);
  MultiIndex idx(nvars, 0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  while (true) {
    if (u(rng.engine()) < density) p.add_term(idx, rng.rational());
    std::size_t k = 0;
    while (k < nvars && idx[k] == m) idx[k++] = 0;
    if (k == nvars) break;
    ++idx[k];
  }
  return p;
}

MultiPoly random_total_degree_poly(Rng& rng, std::size_t nvars, unsigned bound, bool exact) {
  MultiPoly p(nvars);
  MultiIndex idx(nvars, 0);
  while (true) {
    if (total_degree(idx) <= bound && rng.coin()) p.add_term(idx, rng.rational());
    std::size_t k = 0;
    while (k < nvars && idx[k] == bound) idx[k++] = 0;
    if (k == nvars) break;
    ++idx[k];
  }
  if (exact) {
    MultiIndex top(nvars, 0);
    top[static_cast<std::size_t>(rng.integer(0, static_cast<long>(nvars) - 1))] = bound;
    // nonzero coefficient on one pure power of the top degree
    p.add_term(top, SymReal(rng.nonzero_rational()) - p.coefficient(top));
  }
  return p;
}

SymReal random_linear_value(Rng& rng, std::span<const SymReal> symbols) {
  SymReal v(rng.rational());
  for (const auto& s : symbols) v += s * SymReal(rng.rational(-3, 3, 4));
  return v;
}

GeneratorSet random_injective_generators(Rng& rng, std::size_t s,
                                         std::span<const SymReal> symbols) {
  while (true) {
    const std::size_t d = static_cast<std::size_t>(rng.integer(1, static_cast<long>(std::min<std::size_t>(s, 2))));
    std::vector<Point> gens;
    for (std::size_t k = 0; k < s; ++k) {
      Point h(d);
      if (k < d) {
        h[k] = SymReal(rng.nonzero_rational(-3, 3, 3));
      } else {
        for (std::size_t j = 0; j < d; ++j) {
          h[j] = symbols[(k - d + j) % symbols.size()] * SymReal(rng.nonzero_rational(-3, 3, 3));
          if (rng.coin()) h[j] += SymReal(rng.rational(-2, 2, 3));
        }
      }
      gens.push_back(std::move(h));
    }
    GeneratorSet g(std::move(gens));
    if (is_injective(g).injective) return g;
  }
}

GridValues random_grid(Rng& rng, std::size_t max_dim, std::size_t max_nodes,
                       std::span<const SymReal> symbols) {
  GridValues g;
  const std::size_t d = static_cast<std::size_t>(rng.integer(1, static_cast<long>(max_dim)));
  std::size_t total = 1;
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t budget = std::max<std::size_t>(1, max_nodes / total);
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, static_cast<long>(std::min<std::size_t>(budget, 5))));
    total *= n;
    SymReal shift;
    if (!symbols.empty() && rng.integer(0, 3) == 0) shift = symbols[0];
    std::vector<Rational> used;
    std::vector<SymReal> axis;
    while (axis.size() < n) {
      const Rational r = rng.rational(-6, 6, 4);
      if (std::find(used.begin(), used.end(), r) != used.end()) continue;
      used.push_back(r);
      axis.push_back(shift + SymReal(r));
    }
    g.grid.axes.push_back(std::move(axis));
  }
  const bool symbolic = !symbols.empty() && rng.coin();
  for (std::size_t i = 0; i < g.grid.size(); ++i) {
    g.values.push_back(symbolic ? random_linear_value(rng, symbols) : SymReal(rng.rational()));
  }
  return g;
}

std::vector<SymReal> make_symbols(const std::string& prefix, std::size_t n, IndependenceMode mode) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(prefix + std::to_string(k + 1));
  const auto table = SymbolTable::create(names, mode);
  std::vector<SymReal> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(SymReal::symbol(table, k));
  return out;
}

}  // namespace fe::testing
