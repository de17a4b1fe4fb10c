#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "fe/interp.hpp"
#include "fe/lattice.hpp"
#include "fe/report.hpp"
#include "fe/sampled_function.hpp"

namespace fe {

inline constexpr std::size_t kDefaultNodeCap = 20000;

/// Axis-aligned box of integer tuples [lo₁, hi₁] × ⋯ × [lo_s, hi_s].
struct IntBox {
  std::vector<std::pair<long, long>> ranges;

  static IntBox cube(std::size_t dim, long lo, long hi);

  std::size_t dim() const { return ranges.size(); }
  std::size_t size() const;
  bool contains(std::span<const long> tuple) const;
  bool contains(const IntBox& inner) const;
  std::size_t flat_index(std::span<const long> tuple) const;
  /// Visits every tuple in lexicographic order.
  void for_each(const std::function<void(std::span<const long>)>& visit) const;
};

/// Values on every tuple of an integer box, row-major (last axis fastest).
struct IntGridValues {
  IntBox box;
  std::vector<SymReal> values;

  const SymReal& at(std::span<const long> tuple) const { return values[box.flat_index(tuple)]; }
  SymReal& at(std::span<const long> tuple) { return values[box.flat_index(tuple)]; }
};

/// P_{a,γ}: the Π^s_{m,max} interpolant of i ↦ f(a + Σ i_k h_k) on {0..m}^s.
struct Interpolant {
  Point base;
  GeneratorSet generators;
  unsigned m = 0;
  MultiPoly poly;
};

Interpolant build_interpolant(const SampledFunction& f, const Point& base,
                              const GeneratorSet& gamma, unsigned m);

/// Extends values from a seed box of extent m+1 per axis to `target`, one
/// axis at a time, using only
///   v(j + m + 1) = −Σ_{k=0}^{m} C(m+1,k)(−1)^{m+1−k} v(j + k)
/// and its backward mirror.
IntGridValues recurrence_extend(const IntGridValues& seed, unsigned m, const IntBox& target);

/// The default verification box [−3, m+3]^s.
IntBox default_box(std::size_t s, unsigned m);

/// Checks P_{a,γ}(i) = f(a + Σ i_k h_k) on every tuple of `box`, with values
/// re-derived by the recurrence, plus Δ_{h_k}^{m+1} f = 0 on the box nodes.
VerificationReport verify_extension(const Interpolant& ip, const SampledFunction& f,
                                    const IntBox& box, std::size_t node_cap = kDefaultNodeCap);

/// Checks Δ_h^{sm+1} f(x) = 0 for every h = Σ i_k h_k with i in `coeff_box`
/// and every sample x, cross-checked against the interpolants P_{x,γ}.
VerificationReport verify_montel_bound(const SampledFunction& f, const GeneratorSet& gamma,
                                       unsigned m, const IntBox& coeff_box,
                                       std::span<const Point> samples,
                                       std::size_t node_cap = kDefaultNodeCap);

bool total_degree_check(const MultiPoly& p, int bound);

}  // namespace fe
