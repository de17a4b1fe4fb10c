#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fe/montel.hpp"
#include "fe/multipoly.hpp"
#include "fe/report.hpp"
#include "fe/sampled_function.hpp"

namespace fe {

/// P(t₁, …, t_s) = Σ_k A_k(t₁ + θ₁t_s, …, t_{s−1} + θ_{s−1}t_s) t_s^k.
struct StripDecomposition {
  std::vector<SymReal> theta;
  /// A₀, …, A_N in s−1 variables; trailing zero components are trimmed.
  std::vector<MultiPoly> components;

  int degree() const { return static_cast<int>(components.size()) - 1; }
};

/// The strip map u_k = t_k + θ_k t_s (k < s) as polynomials in s variables.
std::vector<MultiPoly> strip_map(std::span<const SymReal> theta);

StripDecomposition decompose(const MultiPoly& p, std::span<const SymReal> theta);
MultiPoly recompose(const StripDecomposition& dec);

/// A₀ when P depends on t only through the strip combinations (N = 0).
std::optional<MultiPoly> strip_form(const MultiPoly& p, std::span<const SymReal> theta);

/// max{1, Σ_{k<N} |a_k| / |a_N|} for coefficients a₀, …, a_N.
Rational cauchy_root_bound(std::span<const SymReal> coefficients);

/// max{1, Σ_{k<N} 2(|a_N|/2 + |a_k|) / |a_N|}: every polynomial whose
/// coefficients differ from p's by less than |a_N|/2 has its roots in the
/// disc of this radius. Requires perturbation < |a_N|/2.
Rational stability_radius(std::span<const SymReal> coefficients, const Rational& perturbation);

/// Per variable k: Δ_{e_k}^{m+1} P = 0 iff deg_k P ≤ m. Passes when every
/// axis is annihilated; axes that are not are flagged with witnesses.
VerificationReport degree_reduction_check(const MultiPoly& p, unsigned m);

struct PopoviciuOptions {
  /// Coefficient box over ℤ^{d+1} for hypothesis sampling (default [−1,1]).
  std::optional<IntBox> box;
  std::size_t node_cap = kDefaultNodeCap;
};

/// End-to-end pipeline for f over the Kronecker generators (e₁, …, e_d, θ).
/// Throws InputError if W is not a correct interpolation set for Π^d_{dm,max}.
VerificationReport verify_popoviciu_instance(const SampledFunction& f,
                                             std::span<const SymReal> theta, unsigned m,
                                             std::span<const Point> w,
                                             const PopoviciuOptions& options = {});

}  // namespace fe
