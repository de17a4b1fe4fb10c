#include "fe/interp.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "fe/error.hpp"
#include "fe/linalg.hpp"

namespace fe {

std::size_t RectGrid::size() const {
  if (axes.empty()) return 0;
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.size();
  return n;
}

std::vector<unsigned> RectGrid::degrees() const {
  std::vector<unsigned> m;
  for (const auto& a : axes) {
    if (a.empty()) throw InputError("grid axis is empty");
    m.push_back(static_cast<unsigned>(a.size() - 1));
  }
  return m;
}

std::size_t GridValues::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != grid.dim()) throw InputError("grid index has wrong dimension");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] >= grid.axes[k].size()) throw InputError("grid index out of range");
    flat = flat * grid.axes[k].size() + index[k];
  }
  return flat;
}

Point GridValues::node(std::span<const std::size_t> index) const {
  Point x(index.size());
  for (std::size_t k = 0; k < index.size(); ++k) x[k] = grid.axes.at(k).at(index[k]);
  return x;
}

namespace {

// Offsets of each node from the first node of its axis; all must be rational.
std::vector<std::vector<Rational>> axis_offsets(const RectGrid& grid) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t k = 0; k < grid.dim(); ++k) {
    const auto& ax = grid.axes[k];
    if (ax.empty()) throw InputError("grid axis is empty");
    std::vector<Rational> off;
    for (const auto& t : ax) {
      const SymReal diff = t - ax.front();
      if (!diff.is_rational()) {
        throw InputError("nodes on axis " + std::to_string(k + 1) +
                         " must differ by rational amounts");
      }
      off.push_back(diff.rational());
    }
    for (std::size_t i = 0; i < off.size(); ++i) {
      for (std::size_t j = i + 1; j < off.size(); ++j) {
        if (off[i] == off[j]) {
          throw InputError("repeated node on axis " + std::to_string(k + 1));
        }
      }
    }
    out.push_back(std::move(off));
  }
  return out;
}

void check_data(const GridValues& data) {
  if (data.grid.dim() == 0) throw InputError("grid has no axes");
  if (data.values.size() != data.grid.size()) {
    throw InputError("grid has " + std::to_string(data.grid.size()) + " nodes but " +
                     std::to_string(data.values.size()) + " values");
  }
}

bool is_unit_axis(const std::vector<SymReal>& nodes) {
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (!(nodes[j] == SymReal(static_cast<long>(j)))) return false;
  }
  return true;
}

// Values on one axis -> monomial coefficients of the 1D interpolant.
void interpolate_fiber(std::vector<SymReal>& y, const std::vector<SymReal>& nodes,
                       const std::vector<Rational>& off, bool unit) {
  const std::size_t n = y.size();
  for (std::size_t l = 1; l < n; ++l) {
    for (std::size_t j = n - 1; j >= l; --j) {
      y[j] -= y[j - 1];
      if (!unit) y[j] /= off[j] - off[j - l];
      if (j == l) break;
    }
  }
  if (unit) {
    Rational fact(1);
    for (std::size_t l = 2; l < n; ++l) {
      fact *= Rational(static_cast<long>(l));
      y[l] /= fact;
    }
  }
  // Newton form -> monomial form by Horner in (x - t_j)
  std::vector<SymReal> c{y[n - 1]};
  for (std::size_t j = n - 1; j-- > 0;) {
    std::vector<SymReal> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      if (!nodes[j].is_zero()) next[i] -= nodes[j] * c[i];
    }
    next[0] += y[j];
    c = std::move(next);
  }
  y = std::move(c);
}

}  // namespace

MultiPoly tensor_interpolate(const GridValues& data) {
  check_data(data);
  const auto& grid = data.grid;
  const auto offsets = axis_offsets(grid);
  const std::size_t d = grid.dim();
  std::vector<SymReal> coef = data.values;

  std::size_t stride = grid.size();
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t nk = grid.axes[k].size();
    stride /= nk;
    const std::size_t outer = grid.size() / (nk * stride);
    const bool unit = is_unit_axis(grid.axes[k]);
    std::vector<SymReal> fiber(nk);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t in = 0; in < stride; ++in) {
        const std::size_t base = o * nk * stride + in;
        for (std::size_t j = 0; j < nk; ++j) fiber[j] = coef[base + j * stride];
        interpolate_fiber(fiber, grid.axes[k], offsets[k], unit);
        for (std::size_t j = 0; j < nk; ++j) coef[base + j * stride] = fiber[j];
      }
    }
  }

  MultiPoly p(d);
  const auto m = grid.degrees();
  MultiIndex idx(d, 0);
  for (std::size_t flat = 0; flat < coef.size(); ++flat) {
    p.add_term(idx, coef[flat]);
    for (std::size_t k = d; k-- > 0;) {
      if (++idx[k] <= m[k]) break;
      idx[k] = 0;
    }
  }
  return p;
}

namespace {

std::vector<MultiIndex> box_indices(std::span<const unsigned> degrees) {
  std::vector<MultiIndex> out;
  const std::size_t d = degrees.size();
  MultiIndex idx(d, 0);
  bool more = true;
  while (more) {
    out.push_back(idx);
    more = false;
    for (std::size_t k = d; k-- > 0;) {
      if (++idx[k] <= degrees[k]) {
        more = true;
        break;
      }
      idx[k] = 0;
    }
  }
  return out;
}

SymReal monomial_value(const Point& x, const MultiIndex& alpha) {
  SymReal v(1);
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] > 0) v *= x[k].pow(alpha[k]);
  }
  return v;
}

}  // namespace

MultiPoly vandermonde_oracle(const GridValues& data, std::size_t cap) {
  check_data(data);
  const std::size_t n = data.grid.size();
  if (n > cap) {
    throw InputError("Vandermonde oracle limited to " + std::to_string(cap) + " nodes");
  }
  const auto offsets = axis_offsets(data.grid);
  const auto m = data.grid.degrees();
  const auto alphas = box_indices(m);
  const auto nodes = box_indices(m);  // same enumeration, read as node indices
  linalg::SymMatrix v(n, std::vector<SymReal>(n));
  for (std::size_t r = 0; r < n; ++r) {
    Point x(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) x[k] = offsets[k][nodes[r][k]];
    for (std::size_t c = 0; c < n; ++c) v[r][c] = monomial_value(x, alphas[c]);
  }
  const auto sol = linalg::bareiss_solve(std::move(v), data.values);
  MultiPoly q(m.size());
  for (std::size_t c = 0; c < n; ++c) q.add_term(alphas[c], sol[c]);
  std::vector<SymReal> back(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) back[k] = -data.grid.axes[k].front();
  return shift(q, back);
}

namespace {

// Axis node lists when `points` is exactly a tensor grid with the given
// per-axis sizes, in order of first appearance.
std::optional<std::vector<std::vector<SymReal>>> tensor_axes(std::span<const Point> points,
                                                             std::span<const unsigned> degrees) {
  const std::size_t d = degrees.size();
  std::vector<std::vector<SymReal>> axes(d);
  std::vector<std::vector<std::size_t>> pos(points.size(), std::vector<std::size_t>(d));
  for (std::size_t r = 0; r < points.size(); ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      auto& ax = axes[k];
      auto it = std::find(ax.begin(), ax.end(), points[r][k]);
      if (it == ax.end()) {
        if (ax.size() > degrees[k]) return std::nullopt;
        ax.push_back(points[r][k]);
        it = ax.end() - 1;
      }
      pos[r][k] = static_cast<std::size_t>(it - ax.begin());
    }
  }
  std::set<Point, PointLess> distinct(points.begin(), points.end());
  if (distinct.size() != points.size()) return std::nullopt;
  for (std::size_t k = 0; k < d; ++k) {
    if (axes[k].size() != degrees[k] + 1) return std::nullopt;
  }
  return axes;
}

}  // namespace

InterpolationSetCertificate is_correct_interpolation_set(std::span<const Point> points,
                                                         std::span<const unsigned> degrees) {
  std::size_t need = 1;
  for (unsigned m : degrees) need *= m + 1;
  if (points.size() != need) {
    throw InputError("interpolation set needs exactly " + std::to_string(need) + " points, got " +
                     std::to_string(points.size()));
  }
  for (const auto& p : points) {
    if (p.size() != degrees.size()) throw InputError("point has wrong dimension");
  }
  InterpolationSetCertificate cert;

  if (const auto axes = tensor_axes(points, degrees)) {
    // Kronecker product of 1D Vandermonde matrices, up to a row permutation
    const std::size_t d = degrees.size();
    std::vector<std::size_t> perm(need);
    for (std::size_t r = 0; r < need; ++r) {
      std::size_t flat = 0;
      for (std::size_t k = 0; k < d; ++k) {
        const auto& ax = (*axes)[k];
        const auto at = static_cast<std::size_t>(std::find(ax.begin(), ax.end(), points[r][k]) - ax.begin());
        flat = flat * ax.size() + at;
      }
      perm[r] = flat;
    }
    bool odd = false;
    std::vector<bool> seen(need, false);
    for (std::size_t r = 0; r < need; ++r) {
      if (seen[r]) continue;
      std::size_t len = 0;
      for (std::size_t q = r; !seen[q]; q = perm[q]) {
        seen[q] = true;
        ++len;
      }
      if (len % 2 == 0) odd = !odd;
    }
    SymReal det(odd ? -1 : 1);
    for (std::size_t k = 0; k < d; ++k) {
      const auto& ax = (*axes)[k];
      SymReal v(1);
      for (std::size_t i = 0; i < ax.size(); ++i) {
        for (std::size_t j = i + 1; j < ax.size(); ++j) v *= ax[j] - ax[i];
      }
      det *= v.pow(static_cast<unsigned>(need / ax.size()));
    }
    cert.determinant = det;
    cert.correct = !det.is_zero();
    return cert;
  }

  const auto alphas = box_indices(degrees);
  linalg::SymMatrix v(need, std::vector<SymReal>(need));
  for (std::size_t r = 0; r < need; ++r) {
    // translation by the first point leaves the determinant unchanged
    const Point x = points[r] - points.front();
    for (std::size_t c = 0; c < need; ++c) v[r][c] = monomial_value(x, alphas[c]);
  }
  cert.determinant = linalg::bareiss_determinant(std::move(v));
  cert.correct = !cert.determinant.is_zero();
  return cert;
}

std::vector<Point> integer_grid_points(std::span<const unsigned> degrees) {
  std::vector<Point> out;
  for (const auto& idx : box_indices(degrees)) {
    Point x;
    for (unsigned i : idx) x.emplace_back(static_cast<long>(i));
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace fe
