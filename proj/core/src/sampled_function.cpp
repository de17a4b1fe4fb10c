#include "fe/sampled_function.hpp"

#include "fe/error.hpp"

namespace fe {

SampledFunction SampledFunction::whole_space(MultiPoly poly) {
  const std::size_t d = poly.nvars();
  if (d == 0) throw InputError("polynomial must have at least one variable");
  return SampledFunction(d, WholeSpacePoly{std::move(poly)});
}

SampledFunction SampledFunction::lattice_piecewise(GeneratorSet generators, MultiPoly lattice_poly,
                                                   SymReal default_value) {
  const auto inj = is_injective(generators);
  if (!inj.injective) throw InputError("lattice-piecewise function needs injective generators");
  if (lattice_poly.nvars() != generators.size()) {
    throw InputError("lattice polynomial needs one variable per generator");
  }
  const std::size_t d = generators.dim();
  return SampledFunction(
      d, LatticePiecewise{std::move(generators), std::move(lattice_poly), std::move(default_value)});
}

SampledFunction SampledFunction::table(std::size_t dim, std::map<Point, SymReal, PointLess> values) {
  if (dim == 0) throw InputError("table dimension must be positive");
  for (const auto& [x, v] : values) {
    if (x.size() != dim) throw InputError("table point " + to_string(x) + " has wrong dimension");
  }
  return SampledFunction(dim, TableSource{std::move(values)});
}

SampledFunction SampledFunction::coordinate_sum(std::size_t dim, SampledFunction component) {
  if (component.dim() != 1) throw InputError("coordinate sum needs a one-dimensional component");
  if (dim == 0) throw InputError("dimension must be positive");
  return SampledFunction(
      dim, CoordinateSum{std::make_shared<const SampledFunction>(std::move(component))});
}

namespace {

struct Evaluator {
  std::span<const SymReal> x;

  SymReal operator()(const WholeSpacePoly& s) const { return evaluate(s.poly, x); }

  SymReal operator()(const LatticePiecewise& s) const {
    const auto rep = represent(Point(x.begin(), x.end()), s.generators);
    if (!rep) return s.default_value;
    std::vector<SymReal> idx;
    idx.reserve(rep->size());
    for (const auto& i : *rep) idx.emplace_back(Rational(i));
    return evaluate(s.lattice_poly, idx);
  }

  SymReal operator()(const TableSource& s) const {
    auto it = s.values.find(Point(x.begin(), x.end()));
    if (it == s.values.end()) {
      throw EvaluationError("no tabulated value at " + to_string(Point(x.begin(), x.end())));
    }
    return it->second;
  }

  SymReal operator()(const CoordinateSum& s) const {
    SymReal sum;
    for (const auto& xk : x) sum += (*s.component)(std::span<const SymReal>(&xk, 1));
    return sum;
  }
};

}  // namespace

SymReal SampledFunction::operator()(std::span<const SymReal> x) const {
  if (x.size() != dim_) {
    throw InputError("evaluation point of dimension " + std::to_string(x.size()) +
                     " for a function on R^" + std::to_string(dim_));
  }
  return std::visit(Evaluator{x}, source_);
}

}  // namespace fe
