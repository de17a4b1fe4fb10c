#include "fe/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "fe/error.hpp"

namespace fe {

unsigned total_degree(const MultiIndex& index) {
  return std::accumulate(index.begin(), index.end(), 0U);
}

bool GrlexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) {}

MultiPoly MultiPoly::constant(std::size_t nvars, const SymReal& value) {
  MultiPoly p(nvars);
  p.add_term(MultiIndex(nvars, 0), value);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t k) {
  if (k >= nvars) throw InputError("variable index out of range");
  MultiIndex idx(nvars, 0);
  idx[k] = 1;
  MultiPoly p(nvars);
  p.add_term(idx, SymReal(1));
  return p;
}

MultiPoly MultiPoly::monomial(const MultiIndex& index, const SymReal& coefficient) {
  MultiPoly p(index.size());
  p.add_term(index, coefficient);
  return p;
}

void MultiPoly::check_arity(const MultiIndex& index) const {
  if (index.size() != nvars_) {
    throw InputError("exponent vector of length " + std::to_string(index.size()) +
                     " in a polynomial of " + std::to_string(nvars_) + " variables");
  }
}

SymReal MultiPoly::coefficient(const MultiIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? SymReal() : it->second;
}

TablePtr MultiPoly::table() const {
  TablePtr t;
  for (const auto& [idx, c] : terms_) t = common_table(t, c.table());
  return t;
}

void MultiPoly::add_term(const MultiIndex& index, const SymReal& coefficient) {
  check_arity(index);
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw InputError("polynomial arity mismatch");
  for (const auto& [idx, c] : o.terms_) add_term(idx, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw InputError("polynomial arity mismatch");
  for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const SymReal& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw InputError("polynomial arity mismatch");
  MultiPoly r(a.nvars_);
  MultiIndex idx(a.nvars_);
  for (const auto& [ia, ca] : a.terms_) {
    for (const auto& [ib, cb] : b.terms_) {
      for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = ia[k] + ib[k];
      r.add_term(idx, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [idx, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(nvars_, SymReal(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [idx, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(k + 1);
      if (idx[k] > 1) mono += "^" + std::to_string(idx[k]);
    }
    std::string coef = c.str();
    const bool compound = c.terms().size() > 1;
    std::string piece;
    if (mono.empty()) {
      piece = compound ? "(" + coef + ")" : coef;
    } else if (coef == "1") {
      piece = mono;
    } else if (coef == "-1") {
      piece = "-" + mono;
    } else {
      piece = (compound ? "(" + coef + ")" : coef) + "*" + mono;
    }
    if (out.empty()) {
      out = piece;
    } else if (piece.front() == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

Degrees degrees(const MultiPoly& p) {
  Degrees d;
  d.per_variable.assign(p.nvars(), -1);
  for (const auto& [idx, c] : p.terms()) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      d.per_variable[k] = std::max(d.per_variable[k], static_cast<int>(idx[k]));
    }
    d.total = std::max(d.total, static_cast<int>(total_degree(idx)));
  }
  return d;
}

namespace {

template <typename T, typename One>
std::vector<std::vector<T>> power_tables(std::span<const T> base, const std::vector<int>& max_deg,
                                         One one) {
  std::vector<std::vector<T>> out(base.size());
  for (std::size_t k = 0; k < base.size(); ++k) {
    out[k].push_back(one);
    for (int e = 1; e <= max_deg[k]; ++e) out[k].push_back(out[k].back() * base[k]);
  }
  return out;
}

}  // namespace

SymReal evaluate(const MultiPoly& p, std::span<const SymReal> x) {
  if (x.size() != p.nvars()) throw InputError("evaluation point has wrong dimension");
  const auto deg = degrees(p);
  const auto pw = power_tables<SymReal>(x, deg.per_variable, SymReal(1));
  SymReal sum;
  for (const auto& [idx, c] : p.terms()) {
    SymReal term = c;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] > 0) term *= pw[k][idx[k]];
    }
    sum += term;
  }
  return sum;
}

MultiPoly shift(const MultiPoly& p, std::span<const SymReal> h) {
  const std::size_t n = p.nvars();
  if (h.size() != n) throw InputError("shift vector has wrong dimension");
  const auto deg = degrees(p);
  const auto pw = power_tables<SymReal>(h, deg.per_variable, SymReal(1));
  MultiPoly out(n);
  for (const auto& [idx, c] : p.terms()) {
    // enumerate j <= idx componentwise
    MultiIndex j(n, 0);
    while (true) {
      SymReal coef = c;
      for (std::size_t k = 0; k < n; ++k) {
        const unsigned rest = idx[k] - j[k];
        if (rest > 0) coef *= pw[k][rest] * SymReal(Rational(binomial(idx[k], j[k])));
      }
      out.add_term(j, coef);
      std::size_t k = 0;
      while (k < n && j[k] == idx[k]) j[k++] = 0;
      if (k == n) break;
      ++j[k];
    }
  }
  return out;
}

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> subst) {
  if (subst.size() != p.nvars()) throw InputError("substitution has wrong arity");
  const std::size_t m = subst.empty() ? 0 : subst.front().nvars();
  for (const auto& s : subst) {
    if (s.nvars() != m) throw InputError("substituents must share one variable count");
  }
  const auto deg = degrees(p);
  const auto pw = power_tables<MultiPoly>(subst, deg.per_variable, MultiPoly::constant(m, 1));
  MultiPoly out(m);
  for (const auto& [idx, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(m, c);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] > 0) term = term * pw[k][idx[k]];
    }
    out += term;
  }
  return out;
}

bool within_max_degree(const MultiPoly& p, std::span<const unsigned> max_degrees) {
  if (max_degrees.size() != p.nvars()) throw InputError("degree bound has wrong dimension");
  for (const auto& [idx, c] : p.terms()) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] > max_degrees[k]) return false;
    }
  }
  return true;
}

}  // namespace fe
