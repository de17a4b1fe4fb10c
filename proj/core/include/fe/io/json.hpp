#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "fe/interp.hpp"
#include "fe/lattice.hpp"
#include "fe/multipoly.hpp"
#include "fe/popoviciu.hpp"
#include "fe/report.hpp"
#include "fe/sampled_function.hpp"

namespace fe::io {

/// Insertion-ordered JSON, so serialized output is deterministic.
using Json = nlohmann::ordered_json;

/// Parses text, turning syntax errors into InputError with the byte offset.
Json parse_text(const std::string& text, const std::string& origin = "input");
Json read_file(const std::string& path);

/// Reads "symbols" and "mode" if present, else returns `inherited`.
/// The mode defaults to "q-linear" when symbols are given without one.
TablePtr read_table(const Json& j, const TablePtr& inherited = nullptr);
void write_table(Json& j, const TablePtr& table);

/// Accepts "p/q", an expression such as "1/2 + theta1", or a map
/// {"1": "p/q", "theta1": "p/q", "theta1^2*pi": ...}.
SymReal read_value(const Json& j, const TablePtr& table);
/// "p/q" for rationals, otherwise a monomial-key map.
Json write_value(const SymReal& v);
/// Always a monomial-key map (the polynomial coefficient format).
Json write_coefficient_map(const SymReal& v);

Point read_point(const Json& j, const TablePtr& table);
Json write_point(const Point& p);

MultiPoly read_poly(const Json& j, const TablePtr& inherited = nullptr);
/// `table` is written when the polynomial's own coefficients carry none.
Json write_poly(const MultiPoly& p, const TablePtr& table = nullptr);

GeneratorSet read_generators(const Json& j, const TablePtr& inherited = nullptr);
Json write_generators(const GeneratorSet& gamma);

SampledFunction read_function(const Json& j, const TablePtr& inherited = nullptr);
Json write_function(const SampledFunction& f);

GridValues read_grid(const Json& j);
Json write_grid(const GridValues& g);

std::vector<Point> read_points(const Json& j);
std::vector<SymReal> read_theta(const Json& j);

Json write_report(const VerificationReport& r);
Json write_density(const DensityCertificate& c);
Json write_decomposition(const StripDecomposition& dec, const TablePtr& table = nullptr);

}  // namespace fe::io
