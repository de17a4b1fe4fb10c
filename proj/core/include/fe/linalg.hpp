#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fe/rational.hpp"
#include "fe/symreal.hpp"

namespace fe::linalg {

using RationalMatrix = std::vector<std::vector<Rational>>;
using SymMatrix = std::vector<std::vector<SymReal>>;

/// Reduced row echelon form over ℚ.
struct Echelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

Echelon row_reduce(RationalMatrix m, std::size_t columns);

/// Basis of {v : M v = 0}; one vector per free column, with that column set
/// to 1 and the other free columns to 0.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m, std::size_t columns);

/// Scales a nonzero rational vector to coprime integers whose first nonzero
/// entry is positive.
std::vector<BigInt> primitive_integer_vector(std::span<const Rational> v);

/// Fraction-free (Bareiss) determinant over the symbol ring. Every division
/// performed is exact.
SymReal bareiss_determinant(SymMatrix m);

/// Solves A x = b by Bareiss elimination followed by fraction-free back
/// substitution. Throws SingularSystem when det A = 0 and InputError when
/// det A is not an invertible (rational) element of the ring.
std::vector<SymReal> bareiss_solve(SymMatrix a, std::vector<SymReal> b);

}  // namespace fe::linalg
