#include "lta/hypervolume.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lta/errors.hpp"
#include "lta/kernels.hpp"

namespace lta {
namespace detail {

namespace {

bool row_weakly_dominates(const double* a, const double* b, std::size_t dim) {
  for (std::size_t j = 0; j < dim; ++j) {
    if (a[j] > b[j]) return false;
  }
  return true;
}

// Drops rows weakly dominated by another row; of several identical rows the
// first one survives.
std::vector<double> nondominated_rows(const std::vector<double>& points, std::size_t dim) {
  const std::size_t n = points.size() / dim;
  std::vector<char> keep(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double* pi = points.data() + i * dim;
    for (std::size_t k = 0; k < n && keep[i]; ++k) {
      if (k == i || !keep[k]) continue;
      const double* pk = points.data() + k * dim;
      if (row_weakly_dominates(pk, pi, dim)) {
        const bool identical = std::equal(pk, pk + dim, pi);
        if (!identical || k < i) keep[i] = 0;
      }
    }
  }
  std::vector<double> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (keep[i]) out.insert(out.end(), points.begin() + i * dim, points.begin() + (i + 1) * dim);
  }
  return out;
}

double hypervolume_2d(std::vector<double> points, std::span<const double> ref) {
  const std::size_t n = points.size() / 2;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[2 * a] != points[2 * b]) return points[2 * a] < points[2 * b];
    return points[2 * a + 1] < points[2 * b + 1];
  });
  double volume = 0.0;
  double ceiling = ref[1];
  for (std::size_t i : order) {
    const double x = points[2 * i];
    const double y = points[2 * i + 1];
    if (y < ceiling) {
      volume += (ref[0] - x) * (ceiling - y);
      ceiling = y;
    }
  }
  return volume;
}

double box_volume(const double* p, std::span<const double> ref, std::size_t dim) {
  double v = 1.0;
  for (std::size_t j = 0; j < dim; ++j) v *= ref[j] - p[j];
  return v;
}

}  // namespace

double hypervolume_raw(std::vector<double> points, std::size_t dim, std::span<const double> ref) {
  if (points.empty()) return 0.0;
  if (dim == 1) {
    double best = points[0];
    for (double v : points) best = std::min(best, v);
    return ref[0] - best;
  }
  if (dim == 2) return hypervolume_2d(std::move(points), ref);

  points = nondominated_rows(points, dim);
  const std::size_t n = points.size() / dim;
  if (n == 1) return box_volume(points.data(), ref, dim);

  // Worst-first in the last objective: every limit set of point k then shares
  // point k's last coordinate, so it is a slab over an (m-1)-dim hypervolume.
  const std::size_t last = dim - 1;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a * dim + last] > points[b * dim + last];
  });

  const auto sub_ref = ref.first(last);
  std::vector<double> limit;
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double* p = points.data() + order[k] * dim;
    limit.clear();
    for (std::size_t t = k + 1; t < n; ++t) {
      const double* q = points.data() + order[t] * dim;
      for (std::size_t j = 0; j < last; ++j) limit.push_back(std::max(p[j], q[j]));
    }
    const double inclusive = box_volume(p, ref, dim);
    const double shadowed = limit.empty() ? 0.0 : (ref[last] - p[last]) * hypervolume_raw(limit, last, sub_ref);
    total += inclusive - shadowed;
  }
  return total;
}

double exclusive_volume(std::span<const double> s, std::span<const double> others, std::size_t dim,
                        std::span<const double> ref) {
  const std::size_t n = others.size() / dim;
  std::vector<double> limit;
  limit.reserve(others.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double* q = others.data() + i * dim;
    if (row_weakly_dominates(q, s.data(), dim)) return 0.0;
    for (std::size_t j = 0; j < dim; ++j) limit.push_back(std::max(s[j], q[j]));
  }
  const double inclusive = box_volume(s.data(), ref, dim);
  if (limit.empty()) return inclusive;
  return std::max(0.0, inclusive - hypervolume_raw(std::move(limit), dim, ref));
}

}  // namespace detail

namespace {

void require_inside(const SolutionSet& set, const ReferencePoint& ref) {
  if (set.dim() != ref.dim()) detail::contract_failure("reference point dimension mismatch");
  if (!strictly_bounded_by(set, ref)) {
    detail::contract_failure("a point does not strictly dominate the reference point");
  }
}

}  // namespace

double hypervolume(const SolutionSet& set, const ReferencePoint& ref) {
  require_inside(set, ref);
  const auto flat = set.flat();
  return detail::hypervolume_raw(std::vector<double>(flat.begin(), flat.end()), set.dim(), ref.coords());
}

double hvc_exact(std::span<const double> s, const SolutionSet& set, const ReferencePoint& ref) {
  require_inside(set, ref);
  if (s.size() != ref.dim()) detail::contract_failure("candidate dimension mismatch");
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (!(s[j] < ref[j])) detail::contract_failure("candidate does not strictly dominate the reference point");
  }
  if (auto idx = set.find(s)) {
    const auto others = set.without(*idx);
    return detail::exclusive_volume(s, others.flat(), set.dim(), ref.coords());
  }
  return detail::exclusive_volume(s, set.flat(), set.dim(), ref.coords());
}

std::vector<double> hvc_all(const SolutionSet& set, const ReferencePoint& ref) {
  require_inside(set, ref);
  return kernels::omp::hvc_all(set, ref);
}

MonteCarloEstimate mc_hypervolume(const SolutionSet& set, const ReferencePoint& ref,
                                  std::size_t samples, Rng& rng) {
  require_inside(set, ref);
  detail::require(samples >= 1000, "mc_hypervolume needs at least 1000 samples");
  detail::require(!set.empty(), "mc_hypervolume of an empty set");
  const std::size_t m = set.dim();
  std::vector<double> lower(set[0].begin(), set[0].end());
  for (std::size_t i = 1; i < set.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) lower[j] = std::min(lower[j], set[i][j]);
  }
  double box = 1.0;
  for (std::size_t j = 0; j < m; ++j) box *= ref[j] - lower[j];

  std::vector<std::uniform_real_distribution<double>> axis;
  axis.reserve(m);
  for (std::size_t j = 0; j < m; ++j) axis.emplace_back(lower[j], ref[j]);

  std::vector<double> x(m);
  std::size_t hits = 0;
  for (std::size_t t = 0; t < samples; ++t) {
    for (std::size_t j = 0; j < m; ++j) x[j] = axis[j](rng);
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (weakly_dominates(set[i], x)) {
        ++hits;
        break;
      }
    }
  }
  const double frac = static_cast<double>(hits) / static_cast<double>(samples);
  return {box * frac, box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples))};
}

}  // namespace lta
