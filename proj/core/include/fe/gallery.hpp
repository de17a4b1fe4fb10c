#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "fe/lattice.hpp"
#include "fe/multipoly.hpp"
#include "fe/report.hpp"
#include "fe/sampled_function.hpp"

namespace fe::gallery {

/// A constructed function with the evidence that it behaves as claimed.
struct Exhibit {
  SampledFunction function;
  std::optional<GeneratorSet> generators;
  std::optional<DensityCertificate> density;
  /// Polynomial that f agrees with on its lattice (in the ambient variables).
  std::optional<MultiPoly> lattice_polynomial;
  VerificationReport report;
};

/// p(x) = x(x−1)⋯(x−(m−1)) in one variable.
MultiPoly falling_factorial(unsigned m);

/// f = p on h₁ℤ + h₂ℤ and 0 elsewhere, with γ = (h₁, h₂) ⊂ ℝ injective.
Exhibit popoviciu_counterexample_1d(unsigned m, const GeneratorSet& gamma,
                                    std::size_t samples = 50);

/// f = x₁^m ⋯ x_s^m in lattice coordinates over the π-power generators.
Exhibit montel_optimality_instance(std::size_t d, std::size_t s, unsigned m);

enum class Gating {
  /// g gated on ℤ + θ₁ℤ + ⋯ + θ_dℤ; both difference equations hold.
  IntegersAndTheta,
  /// g gated on θ₁ℤ + ⋯ + θ_dℤ only; Δ_{e_k}^{m+1}F fails at points with
  /// a coordinate in that group.
  ThetaOnly,
};

/// F(x) = Σ_i g(x_i) with g the gated falling factorial.
Exhibit multivariate_counterexample(std::size_t d, unsigned m, std::span<const SymReal> theta,
                                    Gating gating = Gating::IntegersAndTheta,
                                    std::size_t samples = 50);

/// Algebraic table {theta1, …, theta_d} and its symbols.
std::vector<SymReal> default_theta(std::size_t d);

}  // namespace fe::gallery
