#include "fe/popoviciu.hpp"

#include "fe/diff_ops.hpp"
#include "fe/error.hpp"
#include "fe/interp.hpp"

namespace fe {

std::vector<MultiPoly> strip_map(std::span<const SymReal> theta) {
  const std::size_t s = theta.size() + 1;
  std::vector<MultiPoly> u;
  for (std::size_t k = 0; k + 1 < s; ++k) {
    u.push_back(MultiPoly::variable(s, k) + MultiPoly::variable(s, s - 1) * theta[k]);
  }
  return u;
}

namespace {

void check_strip_args(const MultiPoly& p, std::span<const SymReal> theta) {
  if (p.nvars() < 2) throw InputError("strip decomposition needs at least two variables");
  if (theta.size() + 1 != p.nvars()) {
    throw InputError("theta must have one entry fewer than the polynomial has variables");
  }
  for (std::size_t k = 0; k < theta.size(); ++k) {
    if (theta[k].is_zero()) throw InputError("theta" + std::to_string(k + 1) + " is zero");
  }
}

}  // namespace

StripDecomposition decompose(const MultiPoly& p, std::span<const SymReal> theta) {
  check_strip_args(p, theta);
  const std::size_t s = p.nvars();
  std::vector<MultiPoly> inverse;
  for (std::size_t k = 0; k + 1 < s; ++k) {
    inverse.push_back(MultiPoly::variable(s, k) - MultiPoly::variable(s, s - 1) * theta[k]);
  }
  inverse.push_back(MultiPoly::variable(s, s - 1));
  const MultiPoly q = substitute(p, inverse);

  StripDecomposition dec{std::vector<SymReal>(theta.begin(), theta.end()), {}};
  for (const auto& [idx, c] : q.terms()) {
    const unsigned k = idx.back();
    while (dec.components.size() <= k) dec.components.emplace_back(s - 1);
    dec.components[k].add_term(MultiIndex(idx.begin(), idx.end() - 1), c);
  }
  while (!dec.components.empty() && dec.components.back().is_zero()) dec.components.pop_back();
  if (dec.components.empty()) dec.components.emplace_back(s - 1);
  return dec;
}

MultiPoly recompose(const StripDecomposition& dec) {
  const std::size_t s = dec.theta.size() + 1;
  const auto u = strip_map(dec.theta);
  MultiPoly out(s);
  MultiPoly ts_pow = MultiPoly::constant(s, 1);
  const MultiPoly ts = MultiPoly::variable(s, s - 1);
  for (const auto& a : dec.components) {
    if (a.nvars() != s - 1) throw InputError("component has wrong arity");
    if (!a.is_zero()) out += substitute(a, u) * ts_pow;
    ts_pow = ts_pow * ts;
  }
  return out;
}

std::optional<MultiPoly> strip_form(const MultiPoly& p, std::span<const SymReal> theta) {
  auto dec = decompose(p, theta);
  if (dec.degree() != 0) return std::nullopt;
  return std::move(dec.components.front());
}

namespace {

std::vector<Rational> rational_coeffs(std::span<const SymReal> coefficients) {
  if (coefficients.empty()) throw InputError("no coefficients");
  std::vector<Rational> a;
  for (const auto& c : coefficients) a.push_back(c.rational());
  if (a.back().is_zero()) throw InputError("leading coefficient is zero");
  return a;
}

}  // namespace

Rational cauchy_root_bound(std::span<const SymReal> coefficients) {
  const auto a = rational_coeffs(coefficients);
  const Rational lead = a.back().abs();
  Rational sum;
  for (std::size_t k = 0; k + 1 < a.size(); ++k) sum += a[k].abs();
  sum /= lead;
  return sum > Rational(1) ? sum : Rational(1);
}

Rational stability_radius(std::span<const SymReal> coefficients, const Rational& perturbation) {
  const auto a = rational_coeffs(coefficients);
  const Rational lead = a.back().abs();
  if (perturbation.sign() < 0) throw InputError("perturbation bound must be nonnegative");
  if (!(perturbation < lead / Rational(2))) {
    throw InputError("perturbation bound " + perturbation.str() + " is not below |a_N|/2 = " +
                     (lead / Rational(2)).str());
  }
  Rational sum;
  for (std::size_t k = 0; k + 1 < a.size(); ++k) {
    sum += Rational(2) * (lead / Rational(2) + a[k].abs()) / lead;
  }
  return sum > Rational(1) ? sum : Rational(1);
}

VerificationReport degree_reduction_check(const MultiPoly& p, unsigned m) {
  VerificationReport report("degree-reduction");
  report.declare("annihilated");
  report.declare("degree-consistency");
  const auto deg = degrees(p);
  for (std::size_t k = 0; k < p.nvars(); ++k) {
    std::vector<SymReal> e(p.nvars());
    e[k] = 1;
    const MultiPoly d = delta_poly(p, e, m + 1);
    const bool zero = d.is_zero();
    const bool low = deg.per_variable[k] <= static_cast<int>(m);
    const std::string loc = "x" + std::to_string(k + 1);
    report.record("annihilated", zero, loc,
                  {{"leading", zero ? SymReal() : d.terms().rbegin()->second}});
    report.record("degree-consistency", zero == low, loc,
                  {{"degree", SymReal(static_cast<long>(deg.per_variable[k]))}});
    report.set_fact("degree_" + loc, std::to_string(deg.per_variable[k]));
  }
  return report;
}

VerificationReport verify_popoviciu_instance(const SampledFunction& f,
                                             std::span<const SymReal> theta, unsigned m,
                                             std::span<const Point> w,
                                             const PopoviciuOptions& options) {
  const std::size_t d = theta.size();
  if (d == 0) throw InputError("theta must be nonempty");
  if (f.dim() != d) throw InputError("function dimension must equal the length of theta");
  const unsigned dm = static_cast<unsigned>(d) * m;

  VerificationReport report("popoviciu");
  std::vector<unsigned> wdeg(d, dm);
  const auto cert = is_correct_interpolation_set(w, wdeg);
  if (!cert.correct) {
    throw InputError("W is not a correct interpolation set for degree " + std::to_string(dm) +
                     " per variable");
  }
  report.set_fact("continuity_set_determinant", cert.determinant.str());

  std::vector<Point> gens;
  for (std::size_t k = 0; k < d; ++k) {
    Point e(d);
    e[k] = 1;
    gens.push_back(std::move(e));
  }
  const Point theta_pt(theta.begin(), theta.end());
  gens.push_back(theta_pt);
  const GeneratorSet gamma(gens);

  // (1) difference equations on lattice samples and a few off-lattice points
  const IntBox box = options.box.value_or(IntBox::cube(d + 1, -1, 1));
  if (box.dim() != d + 1) throw InputError("sampling box needs d+1 axes");
  if (box.size() > options.node_cap) throw InputError("sampling box exceeds the node cap");
  std::vector<Point> samples;
  box.for_each([&](std::span<const long> i) { samples.push_back(gamma.embed(i)); });
  samples.push_back(Point(d, SymReal(Rational(1, 2))));
  {
    Point odd(d);
    for (std::size_t k = 0; k < d; ++k) odd[k] = Rational(1, static_cast<long>(2 * k + 3));
    samples.push_back(std::move(odd));
  }
  report.declare("difference-e");
  report.declare("difference-theta");
  for (const auto& x : samples) {
    for (std::size_t k = 0; k <= d; ++k) {
      const std::string check = k < d ? "difference-e" : "difference-theta";
      const std::string loc = to_string(x) + (k < d ? " along e" + std::to_string(k + 1) : "");
      try {
        const SymReal v = delta_power(f, gens[k], m + 1, x);
        report.record(check, v.is_zero(), loc, {{"delta", v}});
      } catch (const EvaluationError& e) {
        report.record(check, false, loc + ": " + e.what());
      }
    }
  }

  // (2) interpolant P_{0,γ}
  std::optional<Interpolant> ip;
  try {
    ip = build_interpolant(f, Point(d), gamma, m);
    report.record("interpolant", true);
  } catch (const EvaluationError& e) {
    report.record("interpolant", false, e.what());
    return report;
  }
  report.set_fact("interpolant", ip->poly.str());

  // (3) strip form A with A ∈ Π^d_{dm,max}, then degree reduction to m
  const auto a = strip_form(ip->poly, theta);
  report.record("strip-form", a.has_value(), "P_0",
                {{"components", SymReal(static_cast<long>(decompose(ip->poly, theta).components.size()))}});
  if (!a) return report;
  report.set_fact("strip_form", a->str());
  report.record("strip-degree-bound", within_max_degree(*a, wdeg));
  report.merge(degree_reduction_check(*a, m), "reduction/");

  // (4) comparison with f
  std::vector<unsigned> mdeg(d, m);
  if (const auto* poly = std::get_if<WholeSpacePoly>(&f.source())) {
    report.record("membership", within_max_degree(poly->poly, mdeg), "f",
                  {{"total_degree", SymReal(static_cast<long>(degrees(poly->poly).total))}});
    report.record("recovered-equals-f", *a == poly->poly);
    for (const auto& x : w) {
      const SymReal av = evaluate(*a, x);
      const SymReal fx = f(x);
      report.record("continuity-set-agreement", av == fx, to_string(x), {{"A", av}, {"f", fx}});
    }
  } else {
    std::vector<Point> probes(w.begin(), w.end());
    probes.push_back(Point(d, SymReal(Rational(1, 2))));
    std::optional<std::string> where;
    for (const auto& x : probes) {
      try {
        const SymReal av = evaluate(*a, x);
        const SymReal fx = f(x);
        if (!(av == fx)) {
          where = to_string(x) + ": A=" + av.str() + ", f=" + fx.str();
          break;
        }
      } catch (const EvaluationError&) {
        continue;
      }
    }
    if (where) {
      report.set_fact("off_lattice_disagreement", *where);
      report.add_label("hypothesis-violating: continuity set too small");
    } else {
      report.set_fact("off_lattice_disagreement", "none found");
    }
  }
  return report;
}

}  // namespace fe
