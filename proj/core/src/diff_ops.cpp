#include "fe/diff_ops.hpp"

#include "fe/error.hpp"

namespace fe {

namespace {

void check_dims(const SampledFunction& f, const Point& h, const Point& x) {
  if (h.size() != f.dim() || x.size() != f.dim()) {
    throw InputError("step or point does not match the function dimension");
  }
}

}  // namespace

SymReal delta_step(const SampledFunction& f, const Point& h, const Point& x) {
  check_dims(f, h, x);
  return f(x + h) - f(x);
}

SymReal delta_power(const SampledFunction& f, const Point& h, unsigned n, const Point& x) {
  check_dims(f, h, x);
  SymReal sum;
  Point y = x;
  for (unsigned k = 0; k <= n; ++k) {
    Rational c(binomial(n, k));
    if ((n - k) % 2 == 1) c = -c;
    sum += f(y) * SymReal(c);
    if (k < n) y = y + h;
  }
  return sum;
}

SymReal mixed_delta(const SampledFunction& f, std::span<const Point> hs, const Point& x) {
  const std::size_t r = hs.size();
  if (r > 24) throw InputError("too many steps for a mixed difference");
  for (const auto& h : hs) check_dims(f, h, x);
  SymReal sum;
  for (unsigned long mask = 0; mask < (1UL << r); ++mask) {
    Point y = x;
    unsigned bits = 0;
    for (std::size_t k = 0; k < r; ++k) {
      if (mask & (1UL << k)) {
        y = y + hs[k];
        ++bits;
      }
    }
    const SymReal v = f(y);
    if ((r - bits) % 2 == 1) {
      sum -= v;
    } else {
      sum += v;
    }
  }
  return sum;
}

MultiPoly delta_poly(const MultiPoly& p, std::span<const SymReal> h, unsigned n) {
  MultiPoly q = p;
  for (unsigned k = 0; k < n && !q.is_zero(); ++k) q = shift(q, h) - q;
  return q;
}

MultiPoly delta_poly_generic(const MultiPoly& p, unsigned n) {
  // P(x + u) = Σ c·x^a·u^b, and Δ_u^n scales each x^a u^b by
  // w_j = Σ_k C(n,k)(−1)^{n−k} k^j with j = |b|.
  const std::size_t nv = p.nvars();
  const auto deg = degrees(p);
  const unsigned top = deg.total < 0 ? 0U : static_cast<unsigned>(deg.total);
  std::vector<Rational> w(top + 1);
  for (unsigned j = 0; j <= top; ++j) {
    BigInt sum = 0;
    for (unsigned k = 0; k <= n; ++k) {
      BigInt kj;
      mpz_ui_pow_ui(kj.get_mpz_t(), k, j);
      BigInt term = binomial(n, k) * kj;
      if ((n - k) % 2 == 1) term = -term;
      sum += term;
    }
    w[j] = Rational(sum);
  }
  MultiPoly out(2 * nv);
  MultiIndex idx(2 * nv);
  for (const auto& [e, c] : p.terms()) {
    MultiIndex b(nv, 0);
    while (true) {
      unsigned ub = 0;
      Rational coef(1);
      for (std::size_t k = 0; k < nv; ++k) {
        idx[k] = e[k] - b[k];
        idx[nv + k] = b[k];
        ub += b[k];
        coef *= Rational(binomial(e[k], b[k]));
      }
      if (!w[ub].is_zero()) out.add_term(idx, c * SymReal(coef * w[ub]));
      std::size_t k = 0;
      while (k < nv && b[k] == e[k]) b[k++] = 0;
      if (k == nv) break;
      ++b[k];
    }
  }
  return out;
}

}  // namespace fe
