#pragma once

#include <span>
#include <vector>

#include "fe/multipoly.hpp"
#include "fe/sampled_function.hpp"

namespace fe {

/// Δ_h f(x) = f(x + h) − f(x).
SymReal delta_step(const SampledFunction& f, const Point& h, const Point& x);

/// Δ_h^n f(x) = Σ_{k=0}^{n} C(n,k) (−1)^{n−k} f(x + kh).
SymReal delta_power(const SampledFunction& f, const Point& h, unsigned n, const Point& x);

/// Δ_{h₁⋯h_r} f(x) = Σ_{S ⊆ {1..r}} (−1)^{r−|S|} f(x + Σ_{k∈S} h_k).
SymReal mixed_delta(const SampledFunction& f, std::span<const Point> hs, const Point& x);

/// The polynomial Δ_h^n P.
MultiPoly delta_poly(const MultiPoly& p, std::span<const SymReal> h, unsigned n);

/// Δ_u^n P with a generic step: a polynomial in 2·nvars variables, the first
/// block being x and the second block the step u. It vanishes identically
/// iff Δ_h^n P = 0 for every h.
MultiPoly delta_poly_generic(const MultiPoly& p, unsigned n);

}  // namespace fe
