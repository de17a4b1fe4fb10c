#include "fe/lattice.hpp"

#include <algorithm>
#include <map>

#include "fe/error.hpp"
#include "fe/linalg.hpp"

namespace fe {

// Coefficient-matching form of Σ i_k h_k = x: one row per (coordinate,
// symbol monomial) pair that occurs in some generator.
struct GeneratorSet::Solver {
  std::map<std::pair<std::size_t, SymMonomial>, std::size_t> row_of;
  linalg::RationalMatrix matrix;            // rows × s
  std::vector<std::size_t> pivot_rows;      // s independent rows when injective
  linalg::RationalMatrix pivot_inverse;     // s × s
  bool injective = false;
  IntTuple witness;
};

GeneratorSet::GeneratorSet(std::vector<Point> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw InputError("generator set is empty");
  dim_ = generators_.front().size();
  if (dim_ == 0) throw InputError("generators must have positive dimension");
  for (const auto& h : generators_) {
    if (h.size() != dim_) throw InputError("generators have inconsistent dimensions");
    table_ = common_table(table_, common_table(h));
  }

  auto solver = std::make_shared<Solver>();
  const std::size_t s = generators_.size();
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& [mono, c] : generators_[k][j].terms()) {
        auto [it, inserted] = solver->row_of.try_emplace({j, mono}, solver->matrix.size());
        if (inserted) solver->matrix.emplace_back(s);
        solver->matrix[it->second][k] = c;
      }
    }
  }

  const std::size_t rows = solver->matrix.size();
  linalg::RationalMatrix transposed(s, std::vector<Rational>(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < s; ++k) transposed[k][r] = solver->matrix[r][k];
  }
  const auto ech = linalg::row_reduce(transposed, rows);
  solver->injective = ech.rank() == s;
  if (solver->injective) {
    solver->pivot_rows = ech.pivot_columns;
    linalg::RationalMatrix aug(s, std::vector<Rational>(2 * s));
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t k = 0; k < s; ++k) aug[a][k] = solver->matrix[solver->pivot_rows[a]][k];
      aug[a][s + a] = 1;
    }
    const auto inv = linalg::row_reduce(aug, 2 * s);
    solver->pivot_inverse.assign(s, std::vector<Rational>(s));
    for (std::size_t k = 0; k < s; ++k) {
      for (std::size_t a = 0; a < s; ++a) solver->pivot_inverse[k][a] = inv.reduced[k][s + a];
    }
  } else {
    const auto kernel = linalg::kernel_basis(solver->matrix, s);
    solver->witness = linalg::primitive_integer_vector(kernel.front());
  }
  solver_ = std::move(solver);
}

Point GeneratorSet::embed(std::span<const BigInt> coefficients) const {
  if (coefficients.size() != size()) throw InputError("coefficient tuple has wrong length");
  Point x(dim_);
  for (std::size_t k = 0; k < size(); ++k) {
    if (coefficients[k] == 0) continue;
    const Rational c(coefficients[k]);
    for (std::size_t j = 0; j < dim_; ++j) x[j] += generators_[k][j] * SymReal(c);
  }
  return x;
}

Point GeneratorSet::embed(std::span<const long> coefficients) const {
  IntTuple big(coefficients.begin(), coefficients.end());
  return embed(std::span<const BigInt>(big));
}

InjectivityResult is_injective(const GeneratorSet& gamma) {
  const auto& s = gamma.solver();
  return {s.injective, s.witness};
}

std::optional<IntTuple> represent(const Point& x, const GeneratorSet& gamma) {
  const auto& sol = gamma.solver();
  if (!sol.injective) throw InputError("represent needs an injective generator set");
  if (x.size() != gamma.dim()) throw InputError("point has wrong dimension");
  common_table(gamma.table(), common_table(x));

  std::vector<Rational> b(sol.matrix.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (const auto& [mono, c] : x[j].terms()) {
      auto it = sol.row_of.find({j, mono});
      if (it == sol.row_of.end()) return std::nullopt;
      b[it->second] = c;
    }
  }
  const std::size_t s = gamma.size();
  std::vector<Rational> coeffs(s);
  for (std::size_t k = 0; k < s; ++k) {
    Rational acc;
    for (std::size_t a = 0; a < s; ++a) {
      const auto& f = sol.pivot_inverse[k][a];
      if (!f.is_zero()) acc += f * b[sol.pivot_rows[a]];
    }
    if (!acc.is_integer()) return std::nullopt;
    coeffs[k] = std::move(acc);
  }
  for (std::size_t r = 0; r < sol.matrix.size(); ++r) {
    Rational acc;
    for (std::size_t k = 0; k < s; ++k) {
      if (!sol.matrix[r][k].is_zero()) acc += sol.matrix[r][k] * coeffs[k];
    }
    if (acc != b[r]) return std::nullopt;
  }
  IntTuple out;
  out.reserve(s);
  for (const auto& c : coeffs) out.push_back(c.numerator());
  return out;
}

std::string_view to_string(DensityVerdict v) {
  switch (v) {
    case DensityVerdict::Dense: return "dense";
    case DensityVerdict::NotDense: return "not-dense";
    case DensityVerdict::Undecided: return "undecided";
  }
  return "undecided";
}

std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::Kronecker: return "kronecker";
    case CertificateKind::SymbolicDeterminant: return "symbolic-determinant";
    case CertificateKind::IntegerWitness: return "integer-witness";
  }
  return "symbolic-determinant";
}

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

struct ParameterSpace {
  TablePtr table;
  std::vector<std::string> unknowns;
  std::size_t offset = 0;  // index of the first unknown in the table
};

ParameterSpace make_parameter_space(const TablePtr& base, std::size_t s, std::size_t first) {
  std::vector<std::string> names = base ? base->names() : std::vector<std::string>{};
  const auto taken = [&](const std::string& candidate) {
    return std::find(names.begin(), names.end(), candidate) != names.end();
  };
  std::string prefix = "n";
  for (bool clash = true; clash;) {
    clash = false;
    for (std::size_t k = 0; k < s; ++k) {
      if (taken(prefix + std::to_string(first + k))) clash = true;
    }
    if (clash) prefix += "_";
  }
  ParameterSpace ps;
  ps.offset = names.size();
  for (std::size_t k = 0; k < s; ++k) {
    ps.unknowns.push_back(prefix + std::to_string(first + k));
    names.push_back(ps.unknowns.back());
  }
  ps.table = SymbolTable::create(std::move(names), IndependenceMode::Algebraic);
  return ps;
}

}  // namespace

DensityCertificate density_check(const GeneratorSet& gamma, std::size_t first_unknown) {
  const std::size_t d = gamma.dim();
  const std::size_t s = gamma.size();
  DensityCertificate cert;
  const ParameterSpace ps = make_parameter_space(gamma.table(), s, first_unknown);
  cert.parameter_table = ps.table;
  cert.unknowns = ps.unknowns;

  if (s <= d) {
    cert.verdict = DensityVerdict::NotDense;
    cert.kind = CertificateKind::IntegerWitness;
    cert.note = "fewer than d+1 generators never span a dense subgroup";
    return cert;
  }

  std::vector<std::vector<SymReal>> a(d, std::vector<SymReal>(s));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < s; ++k) a[j][k] = gamma.coordinate(j, k).embed_into(ps.table);
  }
  std::map<std::vector<std::size_t>, SymReal> cofactor_cache;
  const auto minor_of = [&](const std::vector<std::size_t>& cols) -> const SymReal& {
    auto it = cofactor_cache.find(cols);
    if (it != cofactor_cache.end()) return it->second;
    linalg::SymMatrix m(d, std::vector<SymReal>(d));
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t c = 0; c < d; ++c) m[j][c] = a[j][cols[c]];
    }
    return cofactor_cache.emplace(cols, linalg::bareiss_determinant(std::move(m))).first->second;
  };

  for (const auto& cols : subsets(s, d + 1)) {
    std::vector<SymReal> form(s);
    SymReal minor;
    for (std::size_t p = 0; p <= d; ++p) {
      std::vector<std::size_t> rest;
      for (std::size_t q = 0; q <= d; ++q) {
        if (q != p) rest.push_back(cols[q]);
      }
      SymReal c = minor_of(rest);
      if ((d + p) % 2 == 1) c = -c;
      form[cols[p]] = c;
      minor += c * SymReal::symbol(ps.table, ps.offset + cols[p]);
    }
    cert.minors.push_back(std::move(minor));
    cert.linear_forms.push_back(std::move(form));
  }

  // Each minor vanishes identically iff every symbol-monomial coefficient of
  // its linear form vanishes.
  linalg::RationalMatrix eqs;
  bool low_degree = true;
  for (std::size_t i = 0; i < cert.linear_forms.size(); ++i) {
    std::map<SymMonomial, std::size_t> row_for;
    for (std::size_t k = 0; k < s; ++k) {
      for (const auto& [mono, c] : cert.linear_forms[i][k].terms()) {
        if (mono.degree() > 1) low_degree = false;
        auto [it, inserted] = row_for.try_emplace(mono, eqs.size());
        if (inserted) eqs.emplace_back(s);
        eqs[it->second][k] = c;
      }
    }
  }
  const auto kernel = linalg::kernel_basis(eqs, s);
  if (!kernel.empty()) {
    cert.verdict = DensityVerdict::NotDense;
    cert.kind = CertificateKind::IntegerWitness;
    cert.witness = linalg::primitive_integer_vector(kernel.front());
    cert.note = "nonzero integer unknowns annihilate every maximal minor";
    return cert;
  }
  const bool algebraic = !gamma.table() || gamma.table()->mode() == IndependenceMode::Algebraic;
  if (algebraic || low_degree) {
    cert.verdict = DensityVerdict::Dense;
    cert.note = "no nonzero integer unknowns annihilate every maximal minor";
  } else {
    cert.verdict = DensityVerdict::Undecided;
    cert.note = "minors have symbol degree above 1 under q-linear independence only";
  }
  return cert;
}

GeneratorSet kronecker_generators(std::span<const SymReal> theta) {
  const std::size_t d = theta.size();
  if (d == 0) throw InputError("theta must be nonempty");
  std::vector<Point> gens;
  gens.emplace_back(theta.begin(), theta.end());
  for (std::size_t k = 0; k < d; ++k) {
    Point e(d);
    e[k] = 1;
    gens.push_back(std::move(e));
  }
  return GeneratorSet(std::move(gens));
}

DensityCertificate kronecker_density_check(std::span<const SymReal> theta) {
  const std::size_t d = theta.size();
  const GeneratorSet gens = kronecker_generators(theta);
  DensityCertificate cert = density_check(gens, 0);
  cert.kind = CertificateKind::Kronecker;

  SymReal closed = SymReal::symbol(cert.parameter_table, cert.unknowns[0]);
  for (std::size_t k = 0; k < d; ++k) {
    closed -= theta[k].embed_into(cert.parameter_table) *
              SymReal::symbol(cert.parameter_table, cert.unknowns[k + 1]);
  }
  if (d % 2 == 1) closed = -closed;
  cert.closed_form_matches = cert.minors.size() == 1 && cert.minors.front() == closed;
  cert.closed_form = std::move(closed);

  if (cert.verdict == DensityVerdict::NotDense) {
    // (n₀, n₁..n_d) -> (n₁..n_d, n₀)
    IntTuple w(cert.witness.begin() + 1, cert.witness.end());
    w.push_back(cert.witness.front());
    cert.witness = std::move(w);
    cert.note = "integer relation among 1 and the theta entries";
  }
  return cert;
}

GeneratorSet pi_power_generators(std::size_t d, std::size_t s, const SymReal& pi) {
  if (d == 0) throw InputError("dimension must be positive");
  if (s < d + 1) throw InputError("the pi-power family needs s >= d+1 generators");
  std::vector<Point> gens;
  Point first(d);
  for (std::size_t k = 0; k < d; ++k) first[k] = pi.pow(static_cast<unsigned>(k + 1));
  gens.push_back(std::move(first));
  Point e1(d);
  e1[0] = 1;
  gens.push_back(e1);
  for (std::size_t k = 2; k <= d; ++k) {
    Point col(d);
    col[0] = pi.pow(static_cast<unsigned>(k));
    col[k - 1] = 1;
    gens.push_back(std::move(col));
  }
  for (std::size_t p = d + 1; p < s; ++p) {
    Point col(d);
    col[0] = pi.pow(static_cast<unsigned>(p));
    gens.push_back(std::move(col));
  }
  return GeneratorSet(std::move(gens));
}

DensityCertificate pi_power_density_certificate(std::size_t d, std::size_t s, const SymReal& pi) {
  const GeneratorSet gens = pi_power_generators(d, s, pi);
  DensityCertificate cert = density_check(gens, 0);
  cert.kind = CertificateKind::SymbolicDeterminant;
  if (s == d + 1) {
    const auto& t = cert.parameter_table;
    const SymReal p = pi.embed_into(t);
    const auto n = [&](std::size_t k) { return SymReal::symbol(t, cert.unknowns[k]); };
    const SymReal sign(d % 2 == 0 ? 1 : -1);
    SymReal closed = sign * n(0);
    for (std::size_t k = 1; k <= d; ++k) closed -= sign * p.pow(static_cast<unsigned>(k)) * n(k);
    for (std::size_t k = 2; k <= d; ++k) {
      closed += sign * p.pow(static_cast<unsigned>(2 * k)) * n(1);
    }
    cert.closed_form_matches = cert.minors.size() == 1 && cert.minors.front() == closed;
    cert.closed_form = std::move(closed);
  }
  return cert;
}

}  // namespace fe
