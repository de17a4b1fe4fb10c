#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fe/multipoly.hpp"
#include "fe/symreal.hpp"

namespace fe {

/// Tensor grid X₁ × ⋯ × X_d of per-axis node lists.
struct RectGrid {
  std::vector<std::vector<SymReal>> axes;

  std::size_t dim() const { return axes.size(); }
  std::size_t size() const;
  std::vector<unsigned> degrees() const;
};

/// Data on a rectangular grid, row-major with the last axis fastest.
struct GridValues {
  RectGrid grid;
  std::vector<SymReal> values;

  std::size_t flat_index(std::span<const std::size_t> index) const;
  Point node(std::span<const std::size_t> index) const;
};

/// The unique P ∈ Π^d_{m,max} (per-axis degrees m_k) matching the data,
/// by iterated one-dimensional Newton divided differences. Grids whose
/// axis nodes are 0, 1, …, m use forward differences.
MultiPoly tensor_interpolate(const GridValues& data);

inline constexpr std::size_t kVandermondeCap = 4096;

/// Brute-force interpolant: dense solve of the monomial-basis Vandermonde
/// system by fraction-free elimination. Independent of tensor_interpolate.
MultiPoly vandermonde_oracle(const GridValues& data, std::size_t cap = kVandermondeCap);

struct InterpolationSetCertificate {
  bool correct = false;
  /// det of the generalized Vandermonde matrix.
  SymReal determinant;
};

/// Whether W is a correct interpolation set for Π^d with the given per-axis
/// degree ceilings. Requires |W| = Π (m_k + 1).
InterpolationSetCertificate is_correct_interpolation_set(std::span<const Point> points,
                                                         std::span<const unsigned> degrees);

/// Every point of {0, …, m_1} × ⋯ × {0, …, m_d}, lexicographic.
std::vector<Point> integer_grid_points(std::span<const unsigned> degrees);

}  // namespace fe
