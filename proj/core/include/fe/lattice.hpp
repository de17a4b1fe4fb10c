#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fe/rational.hpp"
#include "fe/symreal.hpp"

namespace fe {

using IntTuple = std::vector<BigInt>;

/// Ordered generators γ = (h₁, …, h_s) of a subgroup H = h₁ℤ + ⋯ + h_sℤ of ℝ^d.
///
/// The coordinate matrix A_γ has the generators as columns. On construction
/// the exact coefficient-matching system used by `represent` is factored
/// once, so repeated membership queries are cheap.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<Point> generators);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return generators_.size(); }
  const std::vector<Point>& generators() const { return generators_; }
  const Point& generator(std::size_t k) const { return generators_.at(k); }
  /// Entry a_{jk} of A_γ: coordinate j of generator k.
  const SymReal& coordinate(std::size_t j, std::size_t k) const { return generators_.at(k).at(j); }
  const TablePtr& table() const { return table_; }

  /// Σ i_k h_k.
  Point embed(std::span<const BigInt> coefficients) const;
  Point embed(std::span<const long> coefficients) const;

  struct Solver;
  const Solver& solver() const { return *solver_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Point> generators_;
  TablePtr table_;
  std::shared_ptr<const Solver> solver_;
};

struct InjectivityResult {
  bool injective = false;
  /// Nonzero integer tuple with Σ w_k h_k = 0 when not injective.
  IntTuple witness;
};

/// Whether (i₁, …, i_s) ↦ Σ i_k h_k is injective on ℤ^s.
InjectivityResult is_injective(const GeneratorSet& gamma);

/// The unique integer tuple with x = Σ i_k h_k, or nullopt when x ∉ H.
/// Throws InputError if the generator set is not injective.
std::optional<IntTuple> represent(const Point& x, const GeneratorSet& gamma);

enum class DensityVerdict { Dense, NotDense, Undecided };
enum class CertificateKind { Kronecker, SymbolicDeterminant, IntegerWitness };

std::string_view to_string(DensityVerdict v);
std::string_view to_string(CertificateKind k);

/// Machine-checkable evidence for or against density of H in ℝ^d.
///
/// `minors` are the maximal minors of A(n₁, …, n_s) (the coordinate matrix
/// with an extra row of integer unknowns), expressed over `parameter_table`:
/// the generator symbols followed by the unknowns. Each minor is linear in
/// the unknowns; `linear_forms[i][k]` is the coefficient of unknown k in
/// minor i, over the generator table. A dense verdict means no nonzero
/// integer tuple annihilates every minor.
struct DensityCertificate {
  DensityVerdict verdict = DensityVerdict::Undecided;
  CertificateKind kind = CertificateKind::SymbolicDeterminant;
  TablePtr parameter_table;
  std::vector<std::string> unknowns;
  std::vector<SymReal> minors;
  std::vector<std::vector<SymReal>> linear_forms;
  /// Integer tuple refuting density (layout depends on `kind`).
  IntTuple witness;
  /// For closed-form certificates: whether the computed determinant matches.
  std::optional<bool> closed_form_matches;
  std::optional<SymReal> closed_form;
  std::string note;
};

/// Decides density of h₁ℤ + ⋯ + h_sℤ in ℝ^d from the rank condition on
/// A(n₁, …, n_s). `first_unknown` is the index used to name the unknowns
/// (n1.. by default).
DensityCertificate density_check(const GeneratorSet& gamma, std::size_t first_unknown = 1);

/// Generators (θ, e₁, …, e_d) of ℤ^d + θℤ, in the column order whose
/// determinant is (−1)^d(n₀ − Σ n_kθ_k).
GeneratorSet kronecker_generators(std::span<const SymReal> theta);

/// Kronecker density certificate. A not-dense witness is (n₁, …, n_d, k)
/// with Σ n_kθ_k = k ∈ ℤ.
DensityCertificate kronecker_density_check(std::span<const SymReal> theta);

/// Generator matrix with first column (π, π², …, π^d), second column e₁,
/// column k+1 equal to π^k e₁ + e_k (k = 2..d), and extra columns
/// π^{d+1} e₁, …, π^{s−1} e₁.
GeneratorSet pi_power_generators(std::size_t d, std::size_t s, const SymReal& pi);

/// Density certificate for the π-power family, checked against the closed
/// form (−1)^d n₀ + (−1)^{d+1} Σ π^k n_k + (−1)^d Σ_{k≥2} π^{2k} n₁.
DensityCertificate pi_power_density_certificate(std::size_t d, std::size_t s, const SymReal& pi);

}  // namespace fe
