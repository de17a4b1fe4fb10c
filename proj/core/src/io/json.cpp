#include "fe/io/json.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "fe/error.hpp"

namespace fe::io {

Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": malformed JSON (byte " + std::to_string(e.byte) + "): " + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

const Json& require_array(const Json& j, const char* key) {
  const Json& a = require(j, key);
  if (!a.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  return a;
}

long read_long(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    const Rational r = Rational::parse(j.get<std::string>());
    if (r.is_integer() && r.numerator().fits_slong_p()) return r.numerator().get_si();
  }
  throw InputError(std::string(what) + " must be an integer");
}

unsigned read_unsigned(const Json& j, const char* what) {
  const long v = read_long(j, what);
  if (v < 0 || v > std::numeric_limits<int>::max()) {
    throw InputError(std::string(what) + " must be a nonnegative integer");
  }
  return static_cast<unsigned>(v);
}

Json write_bigint(const BigInt& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

}  // namespace

TablePtr read_table(const Json& j, const TablePtr& inherited) {
  if (!j.is_object() || !j.contains("symbols")) return inherited;
  const Json& syms = j.at("symbols");
  if (!syms.is_array()) throw InputError("\"symbols\" must be an array of names");
  std::vector<std::string> names;
  for (const auto& s : syms) {
    if (!s.is_string()) throw InputError("symbol names must be strings");
    names.push_back(s.get<std::string>());
  }
  IndependenceMode mode = IndependenceMode::QLinear;
  if (j.contains("mode")) {
    if (!j.at("mode").is_string()) throw InputError("\"mode\" must be a string");
    mode = parse_mode(j.at("mode").get<std::string>());
  }
  if (names.empty()) return inherited;
  TablePtr t = SymbolTable::create(std::move(names), mode);
  if (inherited) return common_table(inherited, t);
  return t;
}

void write_table(Json& j, const TablePtr& table) {
  Json names = Json::array();
  if (table) {
    for (const auto& n : table->names()) names.push_back(n);
  }
  j["symbols"] = names;
  j["mode"] = std::string(to_string(table ? table->mode() : IndependenceMode::QLinear));
}

SymReal read_value(const Json& j, const TablePtr& table) {
  if (j.is_string()) return parse_symreal(j.get<std::string>(), table);
  if (j.is_number_integer()) return SymReal(j.get<long>());
  if (j.is_object()) {
    std::vector<SymReal::Term> terms;
    for (const auto& [key, coef] : j.items()) {
      if (!coef.is_string() && !coef.is_number_integer()) {
        throw InputError("coefficient of \"" + key + "\" must be a \"p/q\" string");
      }
      const Rational c = coef.is_string() ? Rational::parse(coef.get<std::string>())
                                          : Rational(coef.get<long>());
      terms.emplace_back(parse_monomial_key(key, table), c);
    }
    return SymReal::from_terms(table, std::move(terms));
  }
  if (j.is_number()) throw InputError("floating-point values are not accepted; use \"p/q\"");
  throw InputError("unrecognized value " + j.dump());
}

Json write_coefficient_map(const SymReal& v) {
  Json m = Json::object();
  for (const auto& [mono, c] : v.terms()) m[monomial_key(mono, v.table().get())] = c.str();
  return m;
}

Json write_value(const SymReal& v) {
  if (v.is_rational()) return v.rational().str();
  return write_coefficient_map(v);
}

Point read_point(const Json& j, const TablePtr& table) {
  if (j.is_string()) {
    // "1,0,1/2"
    Point p;
    std::string s = j.get<std::string>();
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) p.push_back(parse_symreal(item, table));
    return p;
  }
  if (!j.is_array()) throw InputError("a point must be an array of values");
  Point p;
  for (const auto& v : j) p.push_back(read_value(v, table));
  return p;
}

Json write_point(const Point& p) {
  Json a = Json::array();
  for (const auto& v : p) a.push_back(write_value(v));
  return a;
}

MultiPoly read_poly(const Json& j, const TablePtr& inherited) {
  if (!j.is_object()) throw InputError("a polynomial must be a JSON object");
  const TablePtr table = read_table(j, inherited);
  const long nvars = read_long(require(j, "nvars"), "nvars");
  if (nvars <= 0) throw InputError("nvars must be positive");
  MultiPoly p(static_cast<std::size_t>(nvars));
  for (const auto& t : require_array(j, "terms")) {
    MultiIndex idx;
    for (const auto& e : require_array(t, "exp")) idx.push_back(read_unsigned(e, "exponent"));
    if (idx.size() != p.nvars()) {
      throw InputError("term exponent has " + std::to_string(idx.size()) + " entries, expected " +
                       std::to_string(p.nvars()));
    }
    p.add_term(idx, read_value(require(t, "coef"), table));
  }
  return p;
}

Json write_poly(const MultiPoly& p, const TablePtr& table) {
  Json j = Json::object();
  j["nvars"] = p.nvars();
  TablePtr t = p.table();
  write_table(j, t ? t : table);
  Json terms = Json::array();
  for (const auto& [idx, c] : p.terms()) {
    Json term = Json::object();
    term["exp"] = idx;
    term["coef"] = write_coefficient_map(c);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

GeneratorSet read_generators(const Json& j, const TablePtr& inherited) {
  const TablePtr table = read_table(j, inherited);
  std::vector<Point> gens;
  for (const auto& g : require_array(j, "generators")) gens.push_back(read_point(g, table));
  GeneratorSet gamma(std::move(gens));
  if (j.contains("d") && read_long(j.at("d"), "d") != static_cast<long>(gamma.dim())) {
    throw InputError("\"d\" does not match the generator length");
  }
  return gamma;
}

Json write_generators(const GeneratorSet& gamma) {
  Json j = Json::object();
  j["d"] = gamma.dim();
  write_table(j, gamma.table());
  Json gens = Json::array();
  for (const auto& h : gamma.generators()) {
    Json g = Json::array();
    for (const auto& v : h) g.push_back(write_coefficient_map(v));
    gens.push_back(std::move(g));
  }
  j["generators"] = std::move(gens);
  return j;
}

SampledFunction read_function(const Json& j, const TablePtr& inherited) {
  if (!j.is_object()) throw InputError("a function must be a JSON object");
  const std::string kind = require(j, "kind").get<std::string>();
  const TablePtr table = read_table(j, inherited);
  if (kind == "poly") {
    return SampledFunction::whole_space(read_poly(require(j, "poly"), table));
  }
  if (kind == "lattice") {
    GeneratorSet gamma = read_generators(j, table);
    MultiPoly p = read_poly(require(j, "poly"), table);
    SymReal dflt = j.contains("default") ? read_value(j.at("default"), table) : SymReal();
    return SampledFunction::lattice_piecewise(std::move(gamma), std::move(p), std::move(dflt));
  }
  if (kind == "table") {
    const long dim = read_long(require(j, "dim"), "dim");
    if (dim <= 0) throw InputError("dim must be positive");
    std::map<Point, SymReal, PointLess> values;
    for (const auto& e : require_array(j, "values")) {
      Point x = read_point(require(e, "point"), table);
      if (!values.emplace(x, read_value(require(e, "value"), table)).second) {
        throw InputError("duplicate table point " + to_string(x));
      }
    }
    return SampledFunction::table(static_cast<std::size_t>(dim), std::move(values));
  }
  if (kind == "coordinate_sum") {
    const long dim = read_long(require(j, "dim"), "dim");
    if (dim <= 0) throw InputError("dim must be positive");
    return SampledFunction::coordinate_sum(static_cast<std::size_t>(dim),
                                           read_function(require(j, "component"), table));
  }
  throw InputError("unknown function kind \"" + kind + "\"");
}

Json write_function(const SampledFunction& f) {
  Json j = Json::object();
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, WholeSpacePoly>) {
          j["kind"] = "poly";
          j["poly"] = write_poly(s.poly);
        } else if constexpr (std::is_same_v<S, LatticePiecewise>) {
          j["kind"] = "lattice";
          j["d"] = s.generators.dim();
          TablePtr t = common_table(s.generators.table(), s.lattice_poly.table());
          t = common_table(t, s.default_value.table());
          write_table(j, t);
          const Json g = write_generators(s.generators);
          j["generators"] = g.at("generators");
          j["poly"] = write_poly(s.lattice_poly, t);
          j["default"] = write_value(s.default_value);
        } else if constexpr (std::is_same_v<S, TableSource>) {
          j["kind"] = "table";
          j["dim"] = f.dim();
          TablePtr t;
          for (const auto& [x, v] : s.values) t = common_table(common_table(t, common_table(x)), v.table());
          write_table(j, t);
          Json vals = Json::array();
          for (const auto& [x, v] : s.values) {
            Json e = Json::object();
            e["point"] = write_point(x);
            e["value"] = write_value(v);
            vals.push_back(std::move(e));
          }
          j["values"] = std::move(vals);
        } else {
          j["kind"] = "coordinate_sum";
          j["dim"] = f.dim();
          j["component"] = write_function(*s.component);
        }
      },
      f.source());
  return j;
}

GridValues read_grid(const Json& j) {
  const TablePtr table = read_table(j);
  GridValues g;
  for (const auto& axis : require_array(j, "axes")) {
    if (!axis.is_array() || axis.empty()) throw InputError("each axis must be a nonempty array");
    std::vector<SymReal> nodes;
    for (const auto& v : axis) nodes.push_back(read_value(v, table));
    g.grid.axes.push_back(std::move(nodes));
  }
  if (g.grid.axes.empty()) throw InputError("grid needs at least one axis");
  std::vector<std::optional<SymReal>> slots(g.grid.size());
  for (const auto& e : require_array(j, "values")) {
    std::vector<std::size_t> idx;
    for (const auto& i : require_array(e, "index")) idx.push_back(read_unsigned(i, "grid index"));
    const std::size_t at = g.flat_index(idx);
    if (slots[at]) throw InputError("duplicate value for a grid node");
    slots[at] = read_value(require(e, "value"), table);
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) throw InputError("missing value for grid node #" + std::to_string(i));
    g.values.push_back(std::move(*slots[i]));
  }
  return g;
}

Json write_grid(const GridValues& g) {
  Json j = Json::object();
  TablePtr t;
  for (const auto& ax : g.grid.axes) t = common_table(t, common_table(ax));
  for (const auto& v : g.values) t = common_table(t, v.table());
  write_table(j, t);
  Json axes = Json::array();
  for (const auto& ax : g.grid.axes) axes.push_back(write_point(ax));
  j["axes"] = std::move(axes);
  Json vals = Json::array();
  std::vector<std::size_t> idx(g.grid.dim(), 0);
  for (std::size_t flat = 0; flat < g.values.size(); ++flat) {
    Json e = Json::object();
    e["index"] = idx;
    e["value"] = write_value(g.values[flat]);
    vals.push_back(std::move(e));
    for (std::size_t k = idx.size(); k-- > 0;) {
      if (++idx[k] < g.grid.axes[k].size()) break;
      idx[k] = 0;
    }
  }
  j["values"] = std::move(vals);
  return j;
}

std::vector<Point> read_points(const Json& j) {
  const TablePtr table = read_table(j);
  std::vector<Point> pts;
  for (const auto& p : require_array(j, "points")) pts.push_back(read_point(p, table));
  return pts;
}

std::vector<SymReal> read_theta(const Json& j) {
  const TablePtr table = read_table(j);
  return read_point(require(j, "theta"), table);
}

Json write_report(const VerificationReport& r) {
  Json j = Json::object();
  if (!r.subject().empty()) j["subject"] = r.subject();
  j["pass"] = r.pass();
  j["checked"] = r.checked();
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json e = Json::object();
    e["name"] = c.name;
    e["checked"] = c.checked;
    e["failed"] = c.failed;
    e["pass"] = c.pass();
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  Json wit = Json::array();
  for (const auto& w : r.witnesses()) {
    Json e = Json::object();
    e["check"] = w.check;
    e["location"] = w.location;
    Json vals = Json::object();
    for (const auto& [k, v] : w.values) vals[k] = write_value(v);
    e["values"] = std::move(vals);
    wit.push_back(std::move(e));
  }
  j["witnesses"] = std::move(wit);
  j["labels"] = r.labels();
  for (const auto& [k, v] : r.facts()) {
    if (!j.contains(k)) j[k] = v;
  }
  return j;
}

Json write_density(const DensityCertificate& c) {
  Json j = Json::object();
  j["verdict"] = std::string(to_string(c.verdict));
  j["kind"] = std::string(to_string(c.kind));
  Json syms = Json::array();
  if (c.parameter_table) {
    for (const auto& n : c.parameter_table->names()) syms.push_back(n);
  }
  j["parameter_symbols"] = std::move(syms);
  j["unknowns"] = c.unknowns;
  Json minors = Json::array();
  for (const auto& m : c.minors) minors.push_back(m.str());
  j["minors"] = std::move(minors);
  Json forms = Json::array();
  for (const auto& row : c.linear_forms) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.str());
    forms.push_back(std::move(r));
  }
  j["linear_forms"] = std::move(forms);
  Json w = Json::array();
  for (const auto& n : c.witness) w.push_back(write_bigint(n));
  j["witness"] = std::move(w);
  if (c.closed_form) j["closed_form"] = c.closed_form->str();
  if (c.closed_form_matches) j["closed_form_matches"] = *c.closed_form_matches;
  j["note"] = c.note;
  return j;
}

Json write_decomposition(const StripDecomposition& dec, const TablePtr& table) {
  Json j = Json::object();
  j["theta"] = write_point(dec.theta);
  j["N"] = dec.degree();
  Json comps = Json::array();
  for (const auto& a : dec.components) comps.push_back(write_poly(a, table));
  j["components"] = std::move(comps);
  return j;
}

}  // namespace fe::io
