#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fe/symreal.hpp"

namespace fe {

/// Exponent vector (i₁, …, i_n) of a monomial in the real variables.
using MultiIndex = std::vector<unsigned>;

unsigned total_degree(const MultiIndex& index);

/// Graded lexicographic order on multi-indices.
struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Sparse multivariate polynomial with SymReal coefficients. Zero
/// coefficients are never stored; the zero polynomial is the empty map.
class MultiPoly {
 public:
  using TermMap = std::map<MultiIndex, SymReal, GrlexLess>;

  explicit MultiPoly(std::size_t nvars);

  static MultiPoly constant(std::size_t nvars, const SymReal& value);
  /// The coordinate polynomial x_k (0-based).
  static MultiPoly variable(std::size_t nvars, std::size_t k);
  static MultiPoly monomial(const MultiIndex& index, const SymReal& coefficient);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  SymReal coefficient(const MultiIndex& index) const;
  /// Common table of all coefficients (null when all are rational).
  TablePtr table() const;

  /// Adds `coefficient · x^index` to the polynomial.
  void add_term(const MultiIndex& index, const SymReal& coefficient);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const SymReal& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const SymReal& c) { return a *= c; }
  friend MultiPoly operator*(const SymReal& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;
  MultiPoly pow(unsigned exponent) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// e.g. "x1^2*x2 + (1/2 + theta1)*x1".
  std::string str() const;

 private:
  void check_arity(const MultiIndex& index) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// Per-variable maximum degrees (−1 for the zero polynomial) and total degree.
struct Degrees {
  std::vector<int> per_variable;
  int total = -1;
};

Degrees degrees(const MultiPoly& p);

/// Exact value P(x).
SymReal evaluate(const MultiPoly& p, std::span<const SymReal> x);

/// Q(x) = P(x + h), expanded by the binomial theorem.
MultiPoly shift(const MultiPoly& p, std::span<const SymReal> h);

/// Composition P(subst₁, …, subst_n); all substituents share one variable count.
MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> subst);

/// Polynomial in `nvars` variables with the given per-variable degree ceiling
/// membership test (Π^n_{m,max}).
bool within_max_degree(const MultiPoly& p, std::span<const unsigned> max_degrees);

}  // namespace fe
