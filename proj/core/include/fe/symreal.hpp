#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fe/rational.hpp"

namespace fe {

/// How the declared symbols are assumed to be independent.
///
/// `QLinear` only declares {1, θ₁, …, θ_p} linearly independent over ℚ, so
/// every stored value must stay of total symbol degree ≤ 1. `Algebraic`
/// declares the symbols algebraically independent (a full polynomial ring).
enum class IndependenceMode { QLinear, Algebraic };

std::string_view to_string(IndependenceMode mode);
IndependenceMode parse_mode(std::string_view text);

class SymbolTable;
using TablePtr = std::shared_ptr<const SymbolTable>;

/// Ordered list of distinct irrational symbols with an immutable mode.
class SymbolTable {
 public:
  static TablePtr create(std::vector<std::string> names, IndependenceMode mode);

  const std::vector<std::string>& names() const { return names_; }
  IndependenceMode mode() const { return mode_; }
  std::size_t size() const { return names_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Structural equality: same names in the same order and the same mode.
  bool same_as(const SymbolTable& other) const;

 private:
  SymbolTable(std::vector<std::string> names, IndependenceMode mode)
      : names_(std::move(names)), mode_(mode) {}

  std::vector<std::string> names_;
  IndependenceMode mode_;
};

/// Returns whichever table is non-null; throws TableMismatch when both are
/// set and differ.
TablePtr common_table(const TablePtr& a, const TablePtr& b);

/// Power product of symbols; the empty product is the constant monomial.
/// Trailing zero exponents are trimmed so equal monomials compare equal.
class SymMonomial {
 public:
  SymMonomial() = default;
  explicit SymMonomial(std::vector<unsigned> exponents);
  static SymMonomial variable(std::size_t index, unsigned power = 1);

  unsigned exponent(std::size_t index) const {
    return index < exps_.size() ? exps_[index] : 0U;
  }
  const std::vector<unsigned>& exponents() const { return exps_; }
  unsigned degree() const { return degree_; }
  bool is_constant() const { return degree_ == 0; }

  SymMonomial operator*(const SymMonomial& other) const;
  /// this / other when other divides this.
  std::optional<SymMonomial> divide(const SymMonomial& other) const;

  friend bool operator==(const SymMonomial& a, const SymMonomial& b) {
    return a.exps_ == b.exps_;
  }
  /// Graded lexicographic order.
  friend std::strong_ordering operator<=>(const SymMonomial& a, const SymMonomial& b);

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

/// Exact real number: a polynomial with rational coefficients in the symbols
/// of a SymbolTable. Purely rational values carry no table, which makes them
/// compatible with every table.
class SymReal {
 public:
  using Term = std::pair<SymMonomial, Rational>;

  SymReal() = default;
  SymReal(Rational value);  // NOLINT(google-explicit-constructor)
  SymReal(long value) : SymReal(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  static SymReal symbol(const TablePtr& table, std::size_t index);
  static SymReal symbol(const TablePtr& table, std::string_view name);
  static SymReal from_terms(const TablePtr& table, std::vector<Term> terms);

  const TablePtr& table() const { return table_; }
  /// Nonzero terms in ascending graded lexicographic order.
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return table_ == nullptr; }
  /// The rational value; throws InputError if a symbol is present.
  Rational rational() const;
  Rational coefficient(const SymMonomial& mono) const;
  /// Largest total symbol degree among the terms (0 for rationals).
  unsigned degree() const;

  SymReal pow(unsigned exponent) const;
  /// Exact quotient in the polynomial ring; throws Error if `divisor` does
  /// not divide this value and SingularSystem if it is zero.
  SymReal exact_div(const SymReal& divisor) const;
  /// Rebinds the symbols to a structurally compatible larger table whose
  /// first names coincide with the current table.
  SymReal embed_into(const TablePtr& wider) const;

  SymReal& operator+=(const SymReal& o);
  SymReal& operator-=(const SymReal& o);
  SymReal& operator*=(const SymReal& o);
  SymReal& operator*=(const Rational& r);
  SymReal& operator/=(const Rational& r);

  friend SymReal operator+(SymReal a, const SymReal& b) { return a += b; }
  friend SymReal operator-(SymReal a, const SymReal& b) { return a -= b; }
  friend SymReal operator*(const SymReal& a, const SymReal& b);
  friend SymReal operator/(SymReal a, const Rational& r) { return a /= r; }
  SymReal operator-() const;

  friend bool operator==(const SymReal& a, const SymReal& b);
  /// Deterministic total order (for use as an ordered-map key only).
  friend bool operator<(const SymReal& a, const SymReal& b);

  /// Human-readable form, e.g. "3/2 + 1/2*theta1 - pi^2".
  std::string str() const;

 private:
  void normalize();
  static SymReal multiply(const SymReal& a, const SymReal& b, bool check_mode);

  TablePtr table_;
  std::vector<Term> terms_;
};

/// "1" for the constant monomial, otherwise "a^2*b" using the table names.
std::string monomial_key(const SymMonomial& mono, const SymbolTable* table);
SymMonomial parse_monomial_key(std::string_view key, const TablePtr& table);

/// Parses a sum of terms such as "3/2 + 1/2*theta1 - pi^2" against `table`.
SymReal parse_symreal(std::string_view text, const TablePtr& table);

using Point = std::vector<SymReal>;

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const SymReal& c, const Point& p);
std::string to_string(const Point& p);
/// Common table of every coordinate (null if all are rational).
TablePtr common_table(const Point& p);

struct PointLess {
  bool operator()(const Point& a, const Point& b) const;
};

}  // namespace fe
