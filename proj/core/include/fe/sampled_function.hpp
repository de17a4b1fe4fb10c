#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <variant>

#include "fe/lattice.hpp"
#include "fe/multipoly.hpp"
#include "fe/symreal.hpp"

namespace fe {

class SampledFunction;

/// f = P on all of ℝ^d.
struct WholeSpacePoly {
  MultiPoly poly;
};

/// f(Σ i_k h_k) = P(i₁, …, i_s) on H, `default_value` elsewhere.
struct LatticePiecewise {
  GeneratorSet generators;
  MultiPoly lattice_poly;
  SymReal default_value;
};

/// Explicit values; a missing point is an evaluation error.
struct TableSource {
  std::map<Point, SymReal, PointLess> values;
};

/// F(x₁, …, x_d) = g(x₁) + ⋯ + g(x_d) for a one-dimensional g.
struct CoordinateSum {
  std::shared_ptr<const SampledFunction> component;
};

/// Black-box evaluation source for f : ℝ^d → ℝ over the symbol ring.
class SampledFunction {
 public:
  using Source = std::variant<WholeSpacePoly, LatticePiecewise, TableSource, CoordinateSum>;

  static SampledFunction whole_space(MultiPoly poly);
  /// Throws InputError unless the generator set is injective and the
  /// lattice polynomial has one variable per generator.
  static SampledFunction lattice_piecewise(GeneratorSet generators, MultiPoly lattice_poly,
                                           SymReal default_value = SymReal());
  static SampledFunction table(std::size_t dim, std::map<Point, SymReal, PointLess> values);
  static SampledFunction coordinate_sum(std::size_t dim, SampledFunction component);

  std::size_t dim() const { return dim_; }
  const Source& source() const { return source_; }

  /// Exact value at x; throws EvaluationError when the source cannot supply it.
  SymReal operator()(std::span<const SymReal> x) const;

 private:
  SampledFunction(std::size_t dim, Source source) : dim_(dim), source_(std::move(source)) {}

  std::size_t dim_;
  Source source_;
};

}  // namespace fe
