#include "fe/linalg.hpp"

#include <utility>

#include "fe/error.hpp"

namespace fe::linalg {

Echelon row_reduce(RationalMatrix m, std::size_t columns) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const Rational inv = m[row][col].inverse();
    for (std::size_t j = col; j < columns; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < columns; ++j) m[i][j] -= f * m[row][j];
    }
    e.pivot_columns.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m, std::size_t columns) {
  const Echelon e = row_reduce(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns);
    v[free] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivot_columns[r]] = -e.reduced[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BigInt> primitive_integer_vector(std::span<const Rational> v) {
  BigInt l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const auto& x : v) {
    BigInt n = x.numerator() * (l / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    out.push_back(std::move(n));
  }
  if (g == 0) throw InputError("primitive vector of the zero vector");
  int sign = 0;
  for (const auto& n : out) {
    if (n != 0) {
      sign = sgn(n);
      break;
    }
  }
  for (auto& n : out) n = n / g * sign;
  return out;
}

namespace {

void check_square(const SymMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw InputError("matrix is not square");
  }
}

// Fraction-free elimination on the first n columns of an n-row matrix that
// may carry extra columns. Returns the sign from row swaps, or 0 if singular.
int bareiss_eliminate(SymMatrix& m, std::size_t n) {
  int sign = 1;
  SymReal prev(1);
  const std::size_t width = m.empty() ? 0 : m.front().size();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
      }
      m[i][k] = SymReal();
    }
    prev = m[k][k];
  }
  if (n > 0 && m[n - 1][n - 1].is_zero()) return 0;
  return sign;
}

}  // namespace

SymReal bareiss_determinant(SymMatrix m) {
  check_square(m);
  const std::size_t n = m.size();
  if (n == 0) return SymReal(1);
  const int sign = bareiss_eliminate(m, n);
  if (sign == 0) return SymReal();
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::vector<SymReal> bareiss_solve(SymMatrix a, std::vector<SymReal> b) {
  check_square(a);
  const std::size_t n = a.size();
  if (b.size() != n) throw InputError("right-hand side has wrong length");
  if (n == 0) return {};
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(std::move(b[i]));
  if (bareiss_eliminate(a, n) == 0) throw SingularSystem("singular linear system");
  const SymReal det = a[n - 1][n - 1];
  if (!det.is_rational()) {
    throw InputError("determinant " + det.str() + " is not invertible over the rationals");
  }
  // x'_i = det * x_i; every division below is exact
  std::vector<SymReal> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    SymReal acc = det * a[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= a[ii][j] * x[j];
    x[ii] = acc.exact_div(a[ii][ii]);
  }
  const Rational inv = det.rational().inverse();
  for (auto& v : x) v *= inv;
  return x;
}

}  // namespace fe::linalg
