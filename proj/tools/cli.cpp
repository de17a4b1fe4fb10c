#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fe/diff_ops.hpp"
#include "fe/error.hpp"
#include "fe/gallery.hpp"
#include "fe/interp.hpp"
#include "fe/io/json.hpp"
#include "fe/lattice.hpp"
#include "fe/montel.hpp"
#include "fe/popoviciu.hpp"

#ifdef FE_WITH_SELFTEST
#include "acceptance.hpp"
#endif

namespace fe::cli {

namespace {

using io::Json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kError = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw InputError("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw InputError("expected an integer, got '" + s + "'");
  return v;
}

std::pair<long, long> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw InputError("expected a range lo..hi, got '" + s + "'");
  const long lo = parse_long(s.substr(0, dots));
  const long hi = parse_long(s.substr(dots + 2));
  if (lo > hi) throw InputError("empty range '" + s + "'");
  return {lo, hi};
}

// "lo..hi" for every axis, or one comma-separated range per axis.
IntBox parse_box(const std::string& s, std::size_t dim) {
  const auto parts = split(s, ',');
  IntBox box;
  if (parts.size() == 1) {
    box.ranges.assign(dim, parse_range(parts[0]));
  } else {
    if (parts.size() != dim) {
      throw InputError("box has " + std::to_string(parts.size()) + " ranges, expected " +
                       std::to_string(dim));
    }
    for (const auto& p : parts) box.ranges.push_back(parse_range(p));
  }
  return box;
}

Point parse_point(const std::string& s, const TablePtr& table) { return io::read_point(Json(s), table); }

std::size_t node_cap() {
  const char* env = std::getenv("FE_NODE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultNodeCap;
  const long v = parse_long(env);
  if (v <= 0) throw InputError("FE_NODE_CAP must be positive");
  return static_cast<std::size_t>(v);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int emit_report(std::ostream& out, const VerificationReport& r, Json extra = Json::object()) {
  Json j = io::write_report(r);
  for (auto& [k, v] : extra.items()) j[k] = v;
  emit(out, j);
  return r.pass() ? kOk : kFailed;
}

TablePtr first_table(const std::vector<SymReal>& values) {
  for (const auto& v : values) {
    if (v.table()) return v.table();
  }
  return nullptr;
}

struct Commands {
  explicit Commands(std::ostream& o) : out(o) {}

  std::ostream& out;
  std::function<int()> action;

  // interp
  std::string values_path, out_path;
  bool oracle = false;
  // checkset
  std::string points_path, degrees;
  // delta
  std::string func_path, h, at;
  unsigned power = 1;
  // density
  std::string generators_path, theta_path;
  // montel / popoviciu
  unsigned m = 1;
  std::string box, base, coeff_box;
  // decompose
  std::string poly_path;
  // rootbound
  std::string coeffs, perturbation;
  // gallery
  std::size_t d = 1, s = 2;
  std::string gating = "integers";
  std::size_t samples = 50;
  // selftest
  unsigned parallel = 1;
  std::vector<int> only;

  int interp() {
    const GridValues data = io::read_grid(io::read_file(values_path));
    const MultiPoly p = oracle ? vandermonde_oracle(data) : tensor_interpolate(data);
    TablePtr table;
    for (const auto& v : data.values) table = common_table(table, v.table());
    const Json j = io::write_poly(p, table);
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw InputError("cannot write '" + out_path + "'");
      f << j.dump(2) << '\n';
    }
    emit(out, j);
    return kOk;
  }

  int checkset() {
    const auto points = io::read_points(io::read_file(points_path));
    std::vector<unsigned> degs;
    for (const auto& part : split(degrees, ',')) {
      const long v = parse_long(part);
      if (v < 0) throw InputError("degrees must be nonnegative");
      degs.push_back(static_cast<unsigned>(v));
    }
    const auto cert = is_correct_interpolation_set(points, degs);
    Json j = Json::object();
    j["correct"] = cert.correct;
    j["determinant"] = io::write_value(cert.determinant);
    emit(out, j);
    return cert.correct ? kOk : kFailed;
  }

  int delta() {
    const Json jf = io::read_file(func_path);
    const TablePtr table = io::read_table(jf);
    const SampledFunction f = io::read_function(jf);
    const Point x = parse_point(at, table);
    std::vector<Point> steps;
    for (const auto& part : split(h, ';')) steps.push_back(parse_point(part, table));
    for (const auto& p : steps) {
      if (p.size() != f.dim()) throw InputError("step dimension does not match the function");
    }
    if (x.size() != f.dim()) throw InputError("point dimension does not match the function");
    Json j = Json::object();
    if (steps.size() == 1) {
      j["value"] = io::write_value(delta_power(f, steps[0], power, x));
      j["nodes_evaluated"] = power + 1;
    } else {
      j["value"] = io::write_value(mixed_delta(f, steps, x));
      j["nodes_evaluated"] = std::size_t{1} << steps.size();
    }
    emit(out, j);
    return kOk;
  }

  int density() {
    if (generators_path.empty() == theta_path.empty()) {
      throw InputError("give exactly one of --generators and --theta");
    }
    const DensityCertificate cert =
        theta_path.empty() ? density_check(io::read_generators(io::read_file(generators_path)))
                           : kronecker_density_check(io::read_theta(io::read_file(theta_path)));
    emit(out, io::write_density(cert));
    return kOk;
  }

  int montel_verify() {
    const GeneratorSet gamma = io::read_generators(io::read_file(generators_path));
    const SampledFunction f = io::read_function(io::read_file(func_path), gamma.table());
    if (f.dim() != gamma.dim()) throw InputError("function and generators differ in dimension");
    const Point a = base.empty() ? Point(gamma.dim()) : parse_point(base, gamma.table());
    if (a.size() != gamma.dim()) throw InputError("base point has the wrong dimension");
    const IntBox b = box.empty() ? default_box(gamma.size(), m) : parse_box(box, gamma.size());
    const std::size_t cap = node_cap();
    const Interpolant ip = build_interpolant(f, a, gamma, m);
    VerificationReport r = verify_extension(ip, f, b, cap);
    if (!coeff_box.empty()) {
      const std::vector<Point> samples{a};
      r.merge(verify_montel_bound(f, gamma, m, parse_box(coeff_box, gamma.size()), samples, cap),
              "bound/");
    }
    Json extra = Json::object();
    extra["interpolant"] = io::write_poly(ip.poly, gamma.table());
    return emit_report(out, r, extra);
  }

  int decompose_cmd() {
    const auto theta = io::read_theta(io::read_file(theta_path));
    const MultiPoly p = io::read_poly(io::read_file(poly_path), first_table(theta));
    if (p.nvars() != theta.size() + 1) {
      throw InputError("polynomial must have one more variable than theta has entries");
    }
    emit(out, io::write_decomposition(decompose(p, theta), first_table(theta)));
    return kOk;
  }

  int rootbound() {
    std::vector<SymReal> cs;
    for (const auto& part : split(coeffs, ',')) cs.emplace_back(Rational::parse(part));
    Json j = Json::object();
    j["bound"] = cauchy_root_bound(cs).str();
    if (!perturbation.empty()) {
      const Rational delta = Rational::parse(perturbation);
      j["perturbation"] = delta.str();
      j["stability_radius"] = stability_radius(cs, delta).str();
    }
    emit(out, j);
    return kOk;
  }

  int popoviciu_verify() {
    const auto theta = io::read_theta(io::read_file(theta_path));
    const SampledFunction f = io::read_function(io::read_file(func_path), first_table(theta));
    const std::size_t dim = theta.size();
    std::vector<Point> w;
    if (points_path.empty()) {
      w = integer_grid_points(std::vector<unsigned>(dim, static_cast<unsigned>(dim) * m));
    } else {
      w = io::read_points(io::read_file(points_path));
    }
    PopoviciuOptions options;
    if (!box.empty()) options.box = parse_box(box, dim + 1);
    options.node_cap = node_cap();
    return emit_report(out, verify_popoviciu_instance(f, theta, m, w, options));
  }

  int exhibit(const gallery::Exhibit& ex) {
    Json j = Json::object();
    j["function"] = io::write_function(ex.function);
    if (ex.generators) j["generators"] = io::write_generators(*ex.generators);
    if (ex.density) j["density"] = io::write_density(*ex.density);
    if (ex.lattice_polynomial) j["lattice_polynomial"] = io::write_poly(*ex.lattice_polynomial);
    j["report"] = io::write_report(ex.report);
    emit(out, j);
    return ex.report.pass() ? kOk : kFailed;
  }

  int gallery_popoviciu1d() {
    const auto theta = gallery::default_theta(1);
    const GeneratorSet gamma({Point{SymReal(1)}, Point{theta[0]}});
    return exhibit(gallery::popoviciu_counterexample_1d(m, gamma, samples));
  }

  int gallery_montel() { return exhibit(gallery::montel_optimality_instance(d, s, m)); }

  int gallery_multivariate() {
    gallery::Gating g = gallery::Gating::IntegersAndTheta;
    if (gating == "theta") {
      g = gallery::Gating::ThetaOnly;
    } else if (gating != "integers") {
      throw InputError("--gating must be 'integers' or 'theta'");
    }
    return exhibit(gallery::multivariate_counterexample(d, m, gallery::default_theta(d), g, samples));
  }

  int selftest() {
#ifdef FE_WITH_SELFTEST
    acceptance::Options options;
    options.parallel = parallel;
    options.only.insert(only.begin(), only.end());
    bool all = true;
    for (const auto& r : acceptance::run(options)) {
      out << acceptance::format_line(r) << '\n';
      all = all && r.pass();
    }
    return all ? kOk : kFailed;
#else
    throw InputError("this build of fe does not include the self-test suite");
#endif
  }
};

void add_gallery(CLI::App& app, Commands& c) {
  auto* gal = app.add_subcommand("gallery", "Constructed functions with their verification reports");
  gal->require_subcommand(1);

  auto* p1 = gal->add_subcommand("popoviciu1d", "Lattice-supported polynomial on Z + theta1 Z");
  p1->add_option("--m", c.m, "Degree parameter")->check(CLI::Range(1U, 64U));
  p1->add_option("--samples", c.samples, "Number of mixed sample points");
  p1->callback([&c] { c.action = [&c] { return c.gallery_popoviciu1d(); }; });

  auto* mo = gal->add_subcommand("montel-opt", "x1^m...xs^m over the pi-power generators");
  mo->add_option("--d", c.d, "Ambient dimension")->check(CLI::Range(std::size_t{1}, std::size_t{8}));
  mo->add_option("--s", c.s, "Number of generators")->check(CLI::Range(std::size_t{1}, std::size_t{8}));
  mo->add_option("--m", c.m, "Degree parameter")->check(CLI::Range(0U, 16U));
  mo->callback([&c] { c.action = [&c] { return c.gallery_montel(); }; });

  auto* mv = gal->add_subcommand("multivariate", "Sum of gated falling factorials");
  mv->add_option("--d", c.d, "Dimension")->check(CLI::Range(std::size_t{1}, std::size_t{8}));
  mv->add_option("--m", c.m, "Degree parameter")->check(CLI::Range(1U, 16U));
  mv->add_option("--gating", c.gating, "integers (Z + Gamma) or theta (Gamma only)");
  mv->add_option("--samples", c.samples, "Number of mixed sample points");
  mv->callback([&c] { c.action = [&c] { return c.gallery_multivariate(); }; });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Commands c(out);
  CLI::App app{"Exact verification tools for polynomial functional equations", "fe"};
  app.require_subcommand(1);

  auto* interp = app.add_subcommand("interp", "Tensor-grid interpolation");
  interp->add_option("--values", c.values_path, "Grid JSON")->required();
  interp->add_option("--out", c.out_path, "Also write the polynomial here");
  interp->add_flag("--oracle", c.oracle, "Use the dense Vandermonde solver");
  interp->callback([&c] { c.action = [&c] { return c.interp(); }; });

  auto* checkset = app.add_subcommand("checkset", "Interpolation-set correctness");
  checkset->add_option("--points", c.points_path, "Points JSON")->required();
  checkset->add_option("--degrees", c.degrees, "Per-axis degrees, e.g. 2,2")->required();
  checkset->callback([&c] { c.action = [&c] { return c.checkset(); }; });

  auto* delta = app.add_subcommand("delta", "Finite differences of a sampled function");
  delta->set_help_flag("--help", "Print this help message and exit");
  delta->add_option("--func", c.func_path, "Function JSON")->required();
  delta->add_option("--h", c.h, "Step, or steps separated by ';' for a mixed difference")->required();
  delta->add_option("--power", c.power, "Power of a single step");
  delta->add_option("--at", c.at, "Evaluation point")->required();
  delta->callback([&c] { c.action = [&c] { return c.delta(); }; });

  auto* density = app.add_subcommand("density", "Density certificate for a subgroup");
  density->add_option("--generators", c.generators_path, "Generators JSON");
  density->add_option("--theta", c.theta_path, "Theta JSON (Z^d + theta Z)");
  density->callback([&c] { c.action = [&c] { return c.density(); }; });

  auto* montel = app.add_subcommand("montel", "Lattice extension and degree bounds");
  montel->require_subcommand(1);
  auto* mverify = montel->add_subcommand("verify", "Verify f against its lattice interpolant");
  mverify->add_option("--func", c.func_path, "Function JSON")->required();
  mverify->add_option("--generators", c.generators_path, "Generators JSON")->required();
  mverify->add_option("--m", c.m, "Degree parameter")->required();
  mverify->add_option("--box", c.box, "Tuple box lo..hi (default -3..m+3)");
  mverify->add_option("--base", c.base, "Base point (default origin)");
  mverify->add_option("--coeff-box", c.coeff_box, "Also check the degree bound over this box");
  mverify->callback([&c] { c.action = [&c] { return c.montel_verify(); }; });

  auto* decompose = app.add_subcommand("decompose", "Strip decomposition of a polynomial");
  decompose->add_option("--poly", c.poly_path, "Polynomial JSON")->required();
  decompose->add_option("--theta", c.theta_path, "Theta JSON")->required();
  decompose->callback([&c] { c.action = [&c] { return c.decompose_cmd(); }; });

  auto* rootbound = app.add_subcommand("rootbound", "Cauchy root bound");
  rootbound->add_option("--coeffs", c.coeffs, "Coefficients a0,...,aN")->required();
  rootbound->add_option("--perturbation", c.perturbation, "Coefficient perturbation size");
  rootbound->callback([&c] { c.action = [&c] { return c.rootbound(); }; });

  auto* popoviciu = app.add_subcommand("popoviciu", "Two-step difference equations over Z^d + theta Z");
  popoviciu->require_subcommand(1);
  auto* pverify = popoviciu->add_subcommand("verify", "Run the full pipeline on a function");
  pverify->add_option("--func", c.func_path, "Function JSON")->required();
  pverify->add_option("--theta", c.theta_path, "Theta JSON")->required();
  pverify->add_option("--m", c.m, "Degree parameter")->required();
  pverify->add_option("--points", c.points_path, "Continuity set W (default integer grid)");
  pverify->add_option("--box", c.box, "Coefficient box over Z^(d+1) (default -1..1)");
  pverify->callback([&c] { c.action = [&c] { return c.popoviciu_verify(); }; });

  add_gallery(app, c);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--parallel", c.parallel, "Criteria to run concurrently")->check(CLI::Range(1U, 64U));
  selftest->add_option("--only", c.only, "Criterion ids")->delimiter(',');
  selftest->callback([&c] { c.action = [&c] { return c.selftest(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    Json j = Json::object();
    j["error"] = {{"kind", "usage"}, {"message", e.what()}};
    emit(out, j);
    err << e.what() << '\n';
    return kError;
  }

  try {
    return c.action ? c.action() : kError;
  } catch (const InputError& e) {
    Json j = Json::object();
    j["error"] = {{"kind", "input"}, {"message", e.what()}};
    emit(out, j);
    return kError;
  } catch (const std::exception& e) {
    Json j = Json::object();
    j["error"] = {{"kind", "runtime"}, {"message", e.what()}};
    emit(out, j);
    return kError;
  }
}

}  // namespace fe::cli
