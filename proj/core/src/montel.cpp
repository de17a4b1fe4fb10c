#include "fe/montel.hpp"

#include "fe/diff_ops.hpp"
#include "fe/error.hpp"

namespace fe {

IntBox IntBox::cube(std::size_t dim, long lo, long hi) {
  return IntBox{std::vector<std::pair<long, long>>(dim, {lo, hi})};
}

std::size_t IntBox::size() const {
  if (ranges.empty()) return 0;
  std::size_t n = 1;
  for (const auto& [lo, hi] : ranges) {
    if (hi < lo) return 0;
    n *= static_cast<std::size_t>(hi - lo + 1);
  }
  return n;
}

bool IntBox::contains(std::span<const long> tuple) const {
  if (tuple.size() != ranges.size()) return false;
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (tuple[k] < ranges[k].first || tuple[k] > ranges[k].second) return false;
  }
  return true;
}

bool IntBox::contains(const IntBox& inner) const {
  if (inner.dim() != dim()) return false;
  for (std::size_t k = 0; k < dim(); ++k) {
    if (inner.ranges[k].first < ranges[k].first || inner.ranges[k].second > ranges[k].second) {
      return false;
    }
  }
  return true;
}

std::size_t IntBox::flat_index(std::span<const long> tuple) const {
  if (!contains(tuple)) throw InputError("tuple outside the box");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    const auto width = static_cast<std::size_t>(ranges[k].second - ranges[k].first + 1);
    flat = flat * width + static_cast<std::size_t>(tuple[k] - ranges[k].first);
  }
  return flat;
}

void IntBox::for_each(const std::function<void(std::span<const long>)>& visit) const {
  if (size() == 0) return;
  std::vector<long> t(dim());
  for (std::size_t k = 0; k < dim(); ++k) t[k] = ranges[k].first;
  while (true) {
    visit(t);
    std::size_t k = dim();
    while (k > 0) {
      --k;
      if (++t[k] <= ranges[k].second) break;
      t[k] = ranges[k].first;
      if (k == 0) return;
    }
  }
}

namespace {

std::string tuple_string(std::span<const long> t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(t[k]);
  }
  return out + ")";
}

Point lattice_point(const Point& base, const GeneratorSet& gamma, std::span<const long> i) {
  return base + gamma.embed(i);
}

}  // namespace

Interpolant build_interpolant(const SampledFunction& f, const Point& base,
                              const GeneratorSet& gamma, unsigned m) {
  if (base.size() != gamma.dim() || f.dim() != gamma.dim()) {
    throw InputError("base point, generators and function must share one dimension");
  }
  const std::size_t s = gamma.size();
  GridValues data;
  for (std::size_t k = 0; k < s; ++k) {
    std::vector<SymReal> axis;
    for (unsigned j = 0; j <= m; ++j) axis.emplace_back(static_cast<long>(j));
    data.grid.axes.push_back(std::move(axis));
  }
  IntBox::cube(s, 0, m).for_each([&](std::span<const long> i) {
    data.values.push_back(f(lattice_point(base, gamma, i)));
  });
  return Interpolant{base, gamma, m, tensor_interpolate(data)};
}

IntBox default_box(std::size_t s, unsigned m) {
  return IntBox::cube(s, -3, static_cast<long>(m) + 3);
}

IntGridValues recurrence_extend(const IntGridValues& seed, unsigned m, const IntBox& target) {
  const std::size_t s = seed.box.dim();
  if (seed.values.size() != seed.box.size()) throw InputError("seed values do not fill the box");
  if (!target.contains(seed.box)) throw InputError("target box must contain the seed box");
  for (const auto& [lo, hi] : seed.box.ranges) {
    if (hi - lo < static_cast<long>(m)) {
      throw InputError("seed box needs at least m+1 nodes per axis");
    }
  }
  // forward: v(j) = Σ_{k=0}^{m} c_k v(j-m-1+k), c_k = -C(m+1,k)(-1)^{m+1-k}
  // backward: v(j) = Σ_{k=1}^{m+1} b_k v(j+k),   b_k = (-1)^m C(m+1,k)(-1)^{m+1-k}
  std::vector<Rational> fwd(m + 1);
  std::vector<Rational> bwd(m + 2);
  for (unsigned k = 0; k <= m + 1; ++k) {
    Rational c(binomial(m + 1, k));
    if ((m + 1 - k) % 2 == 1) c = -c;
    if (k <= m) fwd[k] = -c;
    if (k >= 1) bwd[k] = (m % 2 == 0) ? c : -c;
  }

  IntGridValues cur = seed;
  for (std::size_t axis = 0; axis < s; ++axis) {
    IntBox next_box = cur.box;
    next_box.ranges[axis] = target.ranges[axis];
    IntGridValues next{next_box, std::vector<SymReal>(next_box.size())};
    cur.box.for_each([&](std::span<const long> t) { next.at(t) = cur.at(t); });

    const long old_lo = cur.box.ranges[axis].first;
    const long old_hi = cur.box.ranges[axis].second;
    const long new_lo = next_box.ranges[axis].first;
    const long new_hi = next_box.ranges[axis].second;
    IntBox fibers = next_box;
    fibers.ranges[axis] = {0, 0};
    fibers.for_each([&](std::span<const long> base) {
      std::vector<long> t(base.begin(), base.end());
      const auto val = [&](long j) -> SymReal& {
        t[axis] = j;
        return next.at(t);
      };
      for (long j = old_hi + 1; j <= new_hi; ++j) {
        SymReal v;
        for (unsigned k = 0; k <= m; ++k) v += val(j - static_cast<long>(m) - 1 + k) * SymReal(fwd[k]);
        val(j) = std::move(v);
      }
      for (long j = old_lo - 1; j >= new_lo; --j) {
        SymReal v;
        for (unsigned k = 1; k <= m + 1; ++k) v += val(j + static_cast<long>(k)) * SymReal(bwd[k]);
        val(j) = std::move(v);
      }
    });
    cur = std::move(next);
  }
  return cur;
}

VerificationReport verify_extension(const Interpolant& ip, const SampledFunction& f,
                                    const IntBox& box, std::size_t node_cap) {
  const std::size_t s = ip.generators.size();
  if (box.dim() != s) throw InputError("box dimension must equal the number of generators");
  if (box.size() > node_cap) {
    throw InputError("box has " + std::to_string(box.size()) + " nodes, above the cap of " +
                     std::to_string(node_cap));
  }
  const IntBox base_grid = IntBox::cube(s, 0, ip.m);
  if (!box.contains(base_grid)) throw InputError("box must contain the base grid {0..m}^s");

  VerificationReport report("extension");
  for (const char* c : {"difference-equation", "interpolant-matches-f",
                        "recurrence-matches-interpolant", "recurrence-matches-f"}) {
    report.declare(c);
  }

  // f on the box, with evaluation failures remembered
  std::vector<std::optional<SymReal>> fv(box.size());
  std::vector<std::string> ferr(box.size());
  box.for_each([&](std::span<const long> i) {
    const std::size_t at = box.flat_index(i);
    try {
      fv[at] = f(lattice_point(ip.base, ip.generators, i));
    } catch (const EvaluationError& e) {
      ferr[at] = e.what();
    }
  });

  IntGridValues seed{base_grid, {}};
  base_grid.for_each([&](std::span<const long> i) {
    const auto& v = fv[box.flat_index(i)];
    seed.values.push_back(v ? *v : SymReal());
  });
  const IntGridValues extended = recurrence_extend(seed, ip.m, box);

  std::vector<Rational> stencil(ip.m + 2);
  for (unsigned k = 0; k <= ip.m + 1; ++k) {
    Rational c(binomial(ip.m + 1, k));
    stencil[k] = ((ip.m + 1 - k) % 2 == 1) ? -c : c;
  }

  box.for_each([&](std::span<const long> i) {
    const std::size_t at = box.flat_index(i);
    const std::string loc = tuple_string(i);
    std::vector<SymReal> iv(i.begin(), i.end());
    const SymReal p = evaluate(ip.poly, iv);
    const SymReal& r = extended.values[at];
    if (!fv[at]) {
      report.record("interpolant-matches-f", false, loc + ": " + ferr[at], {{"P", p}});
      report.record("recurrence-matches-f", false, loc + ": " + ferr[at], {{"recurrence", r}});
    } else {
      const SymReal& fx = *fv[at];
      report.record("interpolant-matches-f", p == fx, loc, {{"P", p}, {"f", fx}});
      report.record("recurrence-matches-f", r == fx, loc, {{"recurrence", r}, {"f", fx}});
    }
    report.record("recurrence-matches-interpolant", r == p, loc, {{"recurrence", r}, {"P", p}});

    for (std::size_t k = 0; k < s; ++k) {
      std::vector<long> t(i.begin(), i.end());
      t[k] += static_cast<long>(ip.m) + 1;
      if (!box.contains(t)) continue;
      SymReal diff;
      bool ok = true;
      for (unsigned q = 0; q <= ip.m + 1; ++q) {
        t[k] = i[k] + static_cast<long>(q);
        const auto& v = fv[box.flat_index(t)];
        if (!v) {
          ok = false;
          break;
        }
        diff += *v * SymReal(stencil[q]);
      }
      const std::string where = loc + " along h" + std::to_string(k + 1);
      if (!ok) {
        report.record("difference-equation", false, where + ": evaluation failed");
      } else {
        report.record("difference-equation", diff.is_zero(), where, {{"delta", diff}});
      }
    }
  });
  return report;
}

VerificationReport verify_montel_bound(const SampledFunction& f, const GeneratorSet& gamma,
                                       unsigned m, const IntBox& coeff_box,
                                       std::span<const Point> samples, std::size_t node_cap) {
  const std::size_t s = gamma.size();
  if (coeff_box.dim() != s) throw InputError("coefficient box must have one axis per generator");
  if (coeff_box.size() * std::max<std::size_t>(samples.size(), 1) > node_cap) {
    throw InputError("coefficient box times samples exceeds the node cap");
  }
  const unsigned n = static_cast<unsigned>(s) * m + 1;
  VerificationReport report("montel-bound");
  report.set_fact("exponent", std::to_string(n));
  for (const char* c : {"delta-power", "interpolant-annihilated", "interpolant-cross-check"}) {
    report.declare(c);
  }

  std::vector<Rational> stencil(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    Rational c(binomial(n, k));
    stencil[k] = ((n - k) % 2 == 1) ? -c : c;
  }

  for (const auto& x : samples) {
    const std::string xs = to_string(x);
    std::optional<Interpolant> ip;
    try {
      ip = build_interpolant(f, x, gamma, m);
    } catch (const EvaluationError& e) {
      report.record("interpolant-annihilated", false, xs + ": " + e.what());
    }
    if (ip) {
      const MultiPoly g = delta_poly_generic(ip->poly, n);
      report.record("interpolant-annihilated", g.is_zero(), xs,
                    {{"leading", g.is_zero() ? SymReal() : g.terms().rbegin()->second}});
    }
    coeff_box.for_each([&](std::span<const long> i) {
      const std::string loc = xs + " h=" + tuple_string(i);
      const Point h = gamma.embed(i);
      SymReal bb;
      try {
        bb = delta_power(f, h, n, x);
      } catch (const EvaluationError& e) {
        report.record("delta-power", false, loc + ": " + e.what());
        return;
      }
      report.record("delta-power", bb.is_zero(), loc, {{"delta", bb}});
      if (ip) {
        SymReal viap;
        std::vector<SymReal> arg(s);
        for (unsigned k = 0; k <= n; ++k) {
          for (std::size_t q = 0; q < s; ++q) arg[q] = SymReal(static_cast<long>(k) * i[q]);
          viap += evaluate(ip->poly, arg) * SymReal(stencil[k]);
        }
        report.record("interpolant-cross-check", viap == bb, loc,
                      {{"via_interpolant", viap}, {"delta", bb}});
      }
    });
  }
  return report;
}

bool total_degree_check(const MultiPoly& p, int bound) { return degrees(p).total <= bound; }

}  // namespace fe
