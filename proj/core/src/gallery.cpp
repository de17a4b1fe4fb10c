#include "fe/gallery.hpp"

#include <random>

#include "fe/diff_ops.hpp"
#include "fe/error.hpp"
#include "fe/interp.hpp"
#include "fe/montel.hpp"

namespace fe::gallery {

namespace {

constexpr std::uint64_t kSampleSeed = 0x5eed'f00d'2024ULL;

Rational random_fraction(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(2, 7);
  const long q = den(rng);
  std::uniform_int_distribution<long> num(1, q - 1);
  return Rational(BigInt(num(rng)), BigInt(q));
}

// Alternates lattice points Σ i_k h_k and lattice points shifted by a
// non-integer rational in every coordinate.
std::vector<Point> mixed_samples(const GeneratorSet& gamma, std::size_t count) {
  std::mt19937_64 rng(kSampleSeed);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::vector<Point> out;
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<long> i(gamma.size());
    for (auto& v : i) v = coeff(rng);
    Point x = gamma.embed(i);
    if (n % 2 == 1) {
      for (auto& c : x) c += SymReal(random_fraction(rng));
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::string index_suffix(std::size_t k) { return std::to_string(k + 1); }

void check_differences(VerificationReport& report, const std::string& check,
                       const SampledFunction& f, const Point& h, unsigned order,
                       std::span<const Point> samples) {
  report.declare(check);
  for (const auto& x : samples) {
    const SymReal v = delta_power(f, h, order, x);
    report.record(check, v.is_zero(), to_string(x), {{"delta", v}});
  }
}

}  // namespace

MultiPoly falling_factorial(unsigned m) {
  MultiPoly p = MultiPoly::constant(1, 1);
  const MultiPoly x = MultiPoly::variable(1, 0);
  for (unsigned j = 0; j < m; ++j) p = p * (x - MultiPoly::constant(1, static_cast<long>(j)));
  return p;
}

std::vector<SymReal> default_theta(std::size_t d) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < d; ++k) names.push_back("theta" + index_suffix(k));
  const auto table = SymbolTable::create(names, IndependenceMode::Algebraic);
  std::vector<SymReal> theta;
  for (std::size_t k = 0; k < d; ++k) theta.push_back(SymReal::symbol(table, k));
  return theta;
}

Exhibit popoviciu_counterexample_1d(unsigned m, const GeneratorSet& gamma, std::size_t samples) {
  if (m == 0) throw InputError("m must be at least 1");
  if (gamma.dim() != 1 || gamma.size() != 2) {
    throw InputError("the one-variable counterexample needs two generators in R^1");
  }
  if (!is_injective(gamma).injective) throw InputError("generators h1, h2 are not injective");

  const MultiPoly p = falling_factorial(m);
  const MultiPoly embedded = MultiPoly::variable(2, 0) * gamma.coordinate(0, 0) +
                             MultiPoly::variable(2, 1) * gamma.coordinate(0, 1);
  const MultiPoly lattice_poly = substitute(p, std::vector<MultiPoly>{embedded});
  SampledFunction f = SampledFunction::lattice_piecewise(gamma, lattice_poly);

  VerificationReport report("popoviciu-counterexample-1d");
  report.set_fact("lattice_polynomial", p.str());
  const auto pts = mixed_samples(gamma, samples);
  for (std::size_t k = 0; k < 2; ++k) {
    check_differences(report, "difference-h" + index_suffix(k), f, gamma.generator(k), m + 1, pts);
  }

  std::vector<Point> w;
  for (unsigned k = 0; k < m; ++k) {
    Point x{SymReal(static_cast<long>(k))};
    const SymReal v = f(x);
    report.record("continuity-points-vanish", v.is_zero(), to_string(x), {{"f", v}});
    w.push_back(std::move(x));
  }
  const std::vector<unsigned> wdeg{m - 1};
  const auto cert = is_correct_interpolation_set(w, wdeg);
  report.record("continuity-grid-certificate", cert.correct, "W", {{"determinant", cert.determinant}});

  std::optional<Point> witness;
  for (long q = 2; q <= 64 && !witness; ++q) {
    Point x{SymReal(Rational(BigInt(1), BigInt(q)))};
    if (represent(x, gamma)) continue;
    if (!(f(x) == evaluate(p, x))) witness = x;
  }
  report.record("off-lattice-disagreement", witness.has_value(), witness ? to_string(*witness) : "none");
  if (witness) {
    report.set_fact("off_lattice_witness", to_string(*witness));
    report.set_fact("f_at_witness", f(*witness).str());
    report.set_fact("p_at_witness", evaluate(p, *witness).str());
  }
  return Exhibit{std::move(f), gamma, std::nullopt, p, std::move(report)};
}

Exhibit montel_optimality_instance(std::size_t d, std::size_t s, unsigned m) {
  if (d == 0 || s < d + 1) throw InputError("need d >= 1 and s >= d+1");
  if (m == 0) throw InputError("m must be at least 1");
  const auto table = SymbolTable::create({"pi"}, IndependenceMode::Algebraic);
  const SymReal pi = SymReal::symbol(table, 0);
  GeneratorSet gamma = pi_power_generators(d, s, pi);
  DensityCertificate density = pi_power_density_certificate(d, s, pi);

  MultiPoly p = MultiPoly::constant(s, 1);
  for (std::size_t k = 0; k < s; ++k) p = p * MultiPoly::variable(s, k).pow(m);
  SampledFunction f = SampledFunction::lattice_piecewise(gamma, p);

  VerificationReport report("montel-optimality");
  report.set_fact("lattice_polynomial", p.str());
  std::vector<Point> pts;
  IntBox::cube(s, -1, 1).for_each([&](std::span<const long> i) { pts.push_back(gamma.embed(i)); });
  pts.push_back(Point(d, SymReal(Rational(1, 2))));
  for (std::size_t k = 0; k < s; ++k) {
    check_differences(report, "difference-h" + index_suffix(k), f, gamma.generator(k), m + 1, pts);
  }

  Point sum(d);
  for (const auto& h : gamma.generators()) sum = sum + h;
  const unsigned sm = static_cast<unsigned>(s) * m;
  const Point origin(d);
  const SymReal at_sm = delta_power(f, sum, sm, origin);
  const SymReal expected(Rational(factorial(sm)));
  report.record("delta-sm-at-zero", at_sm == expected, "0", {{"delta", at_sm}, {"expected", expected}});
  report.set_fact("delta_sm_at_zero", at_sm.str());
  const SymReal at_next = delta_power(f, sum, sm + 1, origin);
  report.record("delta-sm-plus-one-at-zero", at_next.is_zero(), "0", {{"delta", at_next}});

  report.record("density-certificate", density.verdict == DensityVerdict::Dense &&
                                           density.closed_form_matches.value_or(true));
  report.set_fact("density", std::string(to_string(density.verdict)));
  return Exhibit{std::move(f), std::move(gamma), std::move(density), std::nullopt, std::move(report)};
}

Exhibit multivariate_counterexample(std::size_t d, unsigned m, std::span<const SymReal> theta,
                                    Gating gating, std::size_t samples) {
  if (d == 0 || theta.size() != d) throw InputError("theta must have d entries");
  if (m == 0) throw InputError("m must be at least 1");
  std::vector<Point> gate;
  if (gating == Gating::IntegersAndTheta) gate.push_back(Point{SymReal(1)});
  for (const auto& t : theta) {
    if (t.is_rational()) throw InputError("theta entries must be symbolic");
    gate.push_back(Point{t});
  }
  const GeneratorSet gate_gens(gate);
  const auto inj = is_injective(gate_gens);
  if (!inj.injective) throw InputError("the gating generators are not independent");

  const MultiPoly p = falling_factorial(m);
  MultiPoly embedded(gate_gens.size());
  for (std::size_t k = 0; k < gate_gens.size(); ++k) {
    embedded += MultiPoly::variable(gate_gens.size(), k) * gate_gens.coordinate(0, k);
  }
  const MultiPoly gate_poly = substitute(p, std::vector<MultiPoly>{embedded});
  SampledFunction g = SampledFunction::lattice_piecewise(gate_gens, gate_poly);
  SampledFunction F = SampledFunction::coordinate_sum(d, g);

  MultiPoly ambient(d);
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<MultiPoly> xk{MultiPoly::variable(d, k)};
    ambient += substitute(p, xk);
  }

  VerificationReport report("multivariate-counterexample");
  report.set_fact("gating", gating == Gating::IntegersAndTheta ? "integers+theta" : "theta-only");
  report.set_fact("component_polynomial", p.str());

  // lattice ℤ^d + θℤ: the points where F is claimed to be polynomial
  std::vector<Point> kron;
  for (std::size_t k = 0; k < d; ++k) {
    Point e(d);
    e[k] = 1;
    kron.push_back(std::move(e));
  }
  const Point theta_pt(theta.begin(), theta.end());
  kron.push_back(theta_pt);
  const auto pts = mixed_samples(GeneratorSet(kron), samples);

  for (std::size_t k = 0; k < d; ++k) {
    check_differences(report, "difference-e", F, kron[k], m + 1, pts);
  }
  check_differences(report, "difference-theta", F, theta_pt, m + 1, pts);
  report.declare("theta-identity");
  for (const auto& x : pts) {
    SymReal split;
    for (std::size_t i = 0; i < d; ++i) {
      split += delta_power(g, Point{theta[i]}, m + 1, Point{x[i]});
    }
    const SymReal whole = delta_power(F, theta_pt, m + 1, x);
    report.record("theta-identity", split == whole, to_string(x), {{"sum", split}, {"delta", whole}});
  }

  const std::vector<Point> w = integer_grid_points(std::vector<unsigned>(d, m - 1));
  const auto cert = is_correct_interpolation_set(w, std::vector<unsigned>(d, m - 1));
  report.record("continuity-grid-certificate", cert.correct, "W", {{"determinant", cert.determinant}});
  for (const auto& x : w) {
    const SymReal v = F(x);
    report.record("continuity-grid-vanish", v.is_zero(), to_string(x), {{"F", v}});
  }

  std::optional<Point> witness;
  for (long q = 2; q <= 64 && !witness; ++q) {
    Point x(d);
    x[0] = Rational(BigInt(1), BigInt(q));
    if (!(F(x) == evaluate(ambient, x))) witness = x;
  }
  report.record("off-lattice-disagreement", witness.has_value(), witness ? to_string(*witness) : "none");
  if (witness) {
    report.set_fact("off_lattice_witness", to_string(*witness));
    report.set_fact("F_at_witness", F(*witness).str());
    report.set_fact("polynomial_at_witness", evaluate(ambient, *witness).str());
  }
  return Exhibit{std::move(F), std::nullopt, std::nullopt, std::move(ambient), std::move(report)};
}

}  // namespace fe::gallery
