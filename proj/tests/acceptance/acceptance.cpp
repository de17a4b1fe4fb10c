#include "acceptance.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include "fe/diff_ops.hpp"
#include "fe/error.hpp"
#include "fe/gallery.hpp"
#include "fe/interp.hpp"
#include "fe/lattice.hpp"
#include "fe/montel.hpp"
#include "fe/popoviciu.hpp"
#include "oracles.hpp"
#include "random.hpp"

namespace fe::acceptance {

namespace {

using testing::Rng;

struct LatticeInstance {
  GeneratorSet gamma;
  MultiPoly p0;
  unsigned m;
};

// Shared by criteria 2 and 4.
std::vector<LatticeInstance> lattice_instances() {
  Rng rng(20240101);
  const auto symbols = testing::make_symbols("theta", 2, IndependenceMode::QLinear);
  std::vector<LatticeInstance> out;
  for (int i = 0; i < 100; ++i) {
    const std::size_t s = 1 + static_cast<std::size_t>(i % 3);
    const unsigned m = static_cast<unsigned>((i / 3) % 4);
    GeneratorSet gamma = testing::random_injective_generators(rng, s, symbols);
    MultiPoly p0 = testing::random_max_degree_poly(rng, s, m);
    out.push_back({std::move(gamma), std::move(p0), m});
  }
  return out;
}

const std::vector<std::array<unsigned, 3>> kOptimalityShapes = {{1, 2, 1}, {1, 2, 2}, {2, 3, 1}, {2, 3, 2}};

bool optimality_constant(std::string& detail) {
  std::ostringstream out;
  bool ok = true;
  for (const auto& [d, s, m] : kOptimalityShapes) {
    const auto ex = gallery::montel_optimality_instance(d, s, m);
    const std::string expected = factorial(s * m).get_str();
    const auto it = ex.report.facts().find("delta_sm_at_zero");
    const std::string got = it == ex.report.facts().end() ? "?" : it->second;
    const bool good = ex.report.pass() && got == expected;
    ok = ok && good;
    out << "(" << d << "," << s << "," << m << ")=" << got << (good ? "" : "!") << " ";
  }
  detail = out.str();
  return ok;
}

bool lattice_reconstruction(std::string& detail) {
  std::size_t recovered = 0;
  std::size_t extended = 0;
  std::size_t nodes = 0;
  const auto instances = lattice_instances();
  for (const auto& inst : instances) {
    const auto f = SampledFunction::lattice_piecewise(inst.gamma, inst.p0);
    const Point origin(inst.gamma.dim());
    const auto ip = build_interpolant(f, origin, inst.gamma, inst.m);
    if (ip.poly == inst.p0) ++recovered;
    const IntBox box = default_box(inst.gamma.size(), inst.m);
    nodes += box.size();
    if (verify_extension(ip, f, box).pass()) ++extended;
  }
  detail = std::to_string(recovered) + "/100 recovered, " + std::to_string(extended) +
           "/100 extensions pass, " + std::to_string(nodes) + " box nodes";
  return recovered == instances.size() && extended == instances.size();
}

bool interpolation_oracle(std::string& detail) {
  Rng rng(20240202);
  const auto symbols = testing::make_symbols("theta", 1, IndependenceMode::Algebraic);
  std::size_t agree = 0;
  std::size_t nodes = 0;
  for (int i = 0; i < 200; ++i) {
    const auto data = testing::random_grid(rng, 3, 36, symbols);
    nodes += data.grid.size();
    if (tensor_interpolate(data) == vandermonde_oracle(data)) ++agree;
  }
  detail = std::to_string(agree) + "/200 identical, " + std::to_string(nodes) + " nodes";
  return agree == 200;
}

bool montel_bound(std::string& detail) {
  Rng rng(20240303);
  std::size_t passed = 0;
  const auto instances = lattice_instances();
  for (const auto& inst : instances) {
    const auto f = SampledFunction::lattice_piecewise(inst.gamma, inst.p0);
    const std::size_t s = inst.gamma.size();
    std::vector<long> i(s);
    for (auto& v : i) v = rng.integer(-3, 3);
    const std::vector<Point> samples{Point(inst.gamma.dim()), inst.gamma.embed(i)};
    if (verify_montel_bound(f, inst.gamma, inst.m, IntBox::cube(s, -2, 2), samples).pass()) ++passed;
  }
  std::size_t sharp = 0;
  for (const auto& [d, s, m] : kOptimalityShapes) {
    const auto ex = gallery::montel_optimality_instance(d, s, m);
    Point sum(d);
    for (const auto& h : ex.generators->generators()) sum = sum + h;
    if (!delta_power(ex.function, sum, s * m, Point(d)).is_zero()) ++sharp;
  }
  detail = std::to_string(passed) + "/100 bounds pass, " + std::to_string(sharp) +
           "/4 sharp at exponent sm";
  return passed == instances.size() && sharp == kOptimalityShapes.size();
}

std::vector<SymReal> random_theta(Rng& rng, std::size_t n, const std::vector<SymReal>& symbols) {
  std::vector<SymReal> theta;
  const bool symbolic = rng.coin();
  for (std::size_t k = 0; k < n; ++k) {
    theta.push_back(symbolic ? symbols[k] * SymReal(rng.nonzero_rational(-3, 3, 3))
                             : SymReal(rng.nonzero_rational(-5, 5, 4)));
  }
  return theta;
}

bool decomposition_roundtrip(std::string& detail) {
  Rng rng(20240404);
  const auto symbols = testing::make_symbols("theta", 2, IndependenceMode::Algebraic);
  std::size_t ok = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t s = 2 + static_cast<std::size_t>(i % 2);
    const unsigned m = 1 + static_cast<unsigned>((i / 2) % 3);
    const MultiPoly p = testing::random_max_degree_poly(rng, s, m);
    const auto theta = random_theta(rng, s - 1, symbols);
    const auto dec = decompose(p, theta);
    bool good = recompose(dec) == p && dec.degree() <= static_cast<int>(s * m);
    const std::vector<unsigned> bound(s - 1, static_cast<unsigned>(s - 1) * m);
    for (const auto& a : dec.components) good = good && within_max_degree(a, bound);
    if (good) ++ok;
  }
  detail = std::to_string(ok) + "/200 exact with degree bounds";
  return ok == 200;
}

bool strip_detection(std::string& detail) {
  Rng rng(20240505);
  const auto symbols = testing::make_symbols("theta", 2, IndependenceMode::Algebraic);
  std::size_t pos = 0;
  std::size_t neg = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t s = 2 + static_cast<std::size_t>(i % 2);
    const unsigned m = 1 + static_cast<unsigned>((i / 2) % 3);
    const auto theta = random_theta(rng, s - 1, symbols);
    const auto u = strip_map(theta);
    MultiPoly a0 = testing::random_max_degree_poly(rng, s - 1, m);
    const MultiPoly p = substitute(a0, u);
    const auto got = strip_form(p, theta);
    if (got && *got == a0) ++pos;

    MultiPoly b = testing::random_max_degree_poly(rng, s - 1, m);
    if (b.is_zero()) b = MultiPoly::constant(s - 1, 1);
    const unsigned k = 1 + static_cast<unsigned>(rng.integer(0, m - 1));
    const MultiPoly q = p + substitute(b, u) * MultiPoly::variable(s, s - 1).pow(k);
    if (!strip_form(q, theta)) ++neg;
  }
  detail = std::to_string(pos) + "/50 positives recovered, " + std::to_string(neg) +
           "/50 negatives rejected";
  return pos == 50 && neg == 50;
}

bool root_bounds(std::string& detail) {
  Rng rng(20240606);
  constexpr double kTol = 1e-9;
  std::size_t ok = 0;
  std::size_t sweeps = 0;
  std::size_t sweep_ok = 0;
  for (int i = 0; i < 100; ++i) {
    const long n = rng.integer(1, 6);
    std::vector<SymReal> coeffs;
    std::vector<double> fl;
    for (long k = 0; k <= n; ++k) {
      long a = rng.integer(-20, 20);
      if (k == n && a == 0) a = rng.coin() ? 1 : -1;
      coeffs.emplace_back(a);
      fl.push_back(static_cast<double>(a));
    }
    const Rational bound = cauchy_root_bound(coeffs);
    if (testing::max_root_modulus(fl) <= bound.raw().get_d() + kTol) ++ok;

    if (i % 5 != 0) continue;
    const Rational lead = coeffs.back().rational().abs();
    const Rational delta = lead / Rational(2) * Rational(BigInt(999), BigInt(1000));
    const double radius = stability_radius(coeffs, delta).raw().get_d();
    for (int trial = 0; trial < 32; ++trial) {
      std::vector<double> q;
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const double sign = rng.coin() ? 1.0 : -1.0;
        const double scale = trial % 2 == 0 ? 1.0 : static_cast<double>(rng.integer(0, 1000)) / 1000.0;
        q.push_back(fl[k] + sign * scale * delta.raw().get_d());
      }
      ++sweeps;
      if (testing::max_root_modulus(q) <= radius + kTol) ++sweep_ok;
    }
  }
  detail = std::to_string(ok) + "/100 within Cauchy bound, " + std::to_string(sweep_ok) + "/" +
           std::to_string(sweeps) + " perturbed within radius";
  return ok == 100 && sweep_ok == sweeps;
}

bool density_certificates(std::string& detail) {
  std::ostringstream out;
  bool ok = true;
  std::size_t sym = 0;
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto theta = testing::make_symbols("theta", d, IndependenceMode::QLinear);
    const auto cert = kronecker_density_check(theta);
    if (cert.verdict == DensityVerdict::Dense && cert.closed_form_matches.value_or(false)) ++sym;
  }
  ok = ok && sym == 4;
  out << sym << "/4 symbolic dense; ";

  Rng rng(20240707);
  std::size_t agree = 0;
  for (int i = 0; i < 40; ++i) {
    const std::size_t d = 1 + static_cast<std::size_t>(i % 3);
    std::vector<SymReal> theta;
    std::vector<Rational> rat;
    for (std::size_t k = 0; k < d; ++k) {
      const long q = rng.integer(1, 50);
      rat.emplace_back(BigInt(rng.integer(-50, 50)), BigInt(q));
      theta.emplace_back(rat.back());
    }
    const auto cert = kronecker_density_check(theta);
    const auto brute = testing::brute_force_relation(rat, 50);
    bool good = cert.verdict == DensityVerdict::NotDense && brute.has_value();
    if (good) {
      // witness (n₁..n_d, k): Σ n_kθ_k = k
      Rational sum;
      for (std::size_t k = 0; k < d; ++k) sum += Rational(cert.witness[k]) * rat[k];
      good = sum == Rational(cert.witness[d]);
    }
    if (good) ++agree;
  }
  ok = ok && agree == 40;
  out << agree << "/40 rational refutations agree; ";

  const auto pi_table = SymbolTable::create({"pi"}, IndependenceMode::Algebraic);
  const SymReal pi = SymReal::symbol(pi_table, 0);
  std::size_t pi_ok = 0;
  for (const auto& [d, s] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 3}, {3, 4}}) {
    const auto cert = pi_power_density_certificate(d, s, pi);
    if (cert.verdict == DensityVerdict::Dense && cert.closed_form_matches.value_or(false)) ++pi_ok;
  }
  ok = ok && pi_ok == 3;
  out << pi_ok << "/3 pi-power expansions match";
  detail = out.str();
  return ok;
}

bool counterexamples(std::string& detail) {
  std::size_t pass1 = 0;
  const auto theta1 = gallery::default_theta(1);
  const GeneratorSet gamma({Point{SymReal(1)}, Point{theta1[0]}});
  for (unsigned m = 1; m <= 4; ++m) {
    if (gallery::popoviciu_counterexample_1d(m, gamma).report.pass()) ++pass1;
  }
  std::size_t passd = 0;
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto theta = gallery::default_theta(d);
    for (unsigned m = 1; m <= 3; ++m) {
      if (gallery::multivariate_counterexample(d, m, theta).report.pass()) ++passd;
    }
  }
  detail = std::to_string(pass1) + "/4 one-variable, " + std::to_string(passd) + "/9 multivariate";
  return pass1 == 4 && passd == 9;
}

bool djokovic(std::string& detail) {
  Rng rng(20240808);
  std::size_t ok = 0;
  std::size_t negatives = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t nv = 1 + static_cast<std::size_t>(i % 3);
    const unsigned m = static_cast<unsigned>((i / 3) % 5);
    const bool negative = i % 2 == 1;
    negatives += negative ? 1 : 0;
    const MultiPoly p = testing::random_total_degree_poly(rng, nv, negative ? m + 1 : m, negative);
    const auto f = SampledFunction::whole_space(p);

    const MultiPoly mixed_generic = testing::generic_mixed_delta(p, m + 1);
    const MultiPoly power_generic = delta_poly_generic(p, m + 1);
    const bool low = degrees(p).total <= static_cast<int>(m);
    bool good = mixed_generic.is_zero() == power_generic.is_zero() && power_generic.is_zero() == low;

    // black-box and symbolic values at random rational data must match
    Point x(nv);
    for (auto& v : x) v = rng.rational(-5, 5, 3);
    std::vector<Point> hs(m + 1, Point(nv));
    for (auto& h : hs) {
      for (auto& v : h) v = rng.rational(-5, 5, 3);
    }
    const SymReal bb_mixed = mixed_delta(f, hs, x);
    std::vector<SymReal> at(x);
    for (const auto& h : hs) at.insert(at.end(), h.begin(), h.end());
    good = good && bb_mixed == evaluate(mixed_generic, at);
    const MultiPoly pw = delta_poly(p, hs[0], m + 1);
    std::vector<SymReal> at2(x);
    at2.insert(at2.end(), hs[0].begin(), hs[0].end());
    good = good && evaluate(pw, x) == evaluate(power_generic, at2);
    good = good && (pw.is_zero() || !low);
    if (good) ++ok;
  }
  detail = std::to_string(ok) + "/100 consistent (" + std::to_string(negatives) + " of degree m+1)";
  return ok == 100;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "optimality-constant", 10.0, optimality_constant},
      {2, "lattice-reconstruction", 60.0, lattice_reconstruction},
      {3, "interpolation-oracle", 30.0, interpolation_oracle},
      {4, "montel-bound", 60.0, montel_bound},
      {5, "decomposition-roundtrip", 30.0, decomposition_roundtrip},
      {6, "strip-form-detection", 20.0, strip_detection},
      {7, "root-bounds", 20.0, root_bounds},
      {8, "density-certificates", 20.0, density_certificates},
      {9, "counterexamples", 30.0, counterexamples},
      {10, "djokovic-consistency", 30.0, djokovic},
  };
  return all;
}

std::vector<CriterionResult> run(const Options& options) {
  std::vector<const Criterion*> selected;
  for (const auto& c : criteria()) {
    if (options.only.empty() || options.only.count(c.id)) selected.push_back(&c);
  }
  std::vector<CriterionResult> results(selected.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      const Criterion& c = *selected[i];
      CriterionResult& r = results[i];
      r.id = c.id;
      r.name = c.name;
      r.limit_seconds = c.limit_seconds;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        r.correct = c.run(r.detail);
      } catch (const std::exception& e) {
        r.correct = false;
        r.detail = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const unsigned n = std::max(1U, std::min<unsigned>(options.parallel, static_cast<unsigned>(selected.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::string format_line(const CriterionResult& r) {
  char buf[96];
  std::snprintf(buf, sizeof buf, " (%.2f s / %.0f s): ", r.seconds, r.limit_seconds);
  return std::string(r.pass() ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + buf +
         r.detail + (r.correct && !r.pass() ? " [over time limit]" : "");
}

}  // namespace fe::acceptance
