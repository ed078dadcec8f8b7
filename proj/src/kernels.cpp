#include "lta/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lta/hypervolume.hpp"
#include "lta/trainer.hpp"

namespace lta::kernels {

namespace {

double member_length(const SolutionSet& set, std::size_t i, std::span<const double> lambda,
                     std::span<const double> ref) {
  const auto s = set[i];
  double best = g_mtch(ref, lambda, s);
  for (std::size_t j = 0; j < set.size(); ++j) {
    if (j != i) best = std::min(best, g_star_2tch(set[j], lambda, s));
  }
  return best;
}

double member_hvc(const SolutionSet& set, std::size_t i, const ReferencePoint& ref) {
  const std::size_t m = set.dim();
  const auto flat = set.flat();
  std::vector<double> others;
  others.reserve(flat.size() - m);
  others.insert(others.end(), flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(i * m));
  others.insert(others.end(), flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * m), flat.end());
  return lta::detail::exclusive_volume(set[i], others, m, ref.coords());
}

double euclidean(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) d += (a[j] - b[j]) * (a[j] - b[j]);
  return std::sqrt(d);
}

void nearest(std::span<const double> points, std::span<const double> centroids, std::size_t m,
             std::size_t i, std::span<std::size_t> label, std::span<double> dist2) {
  const std::size_t k = centroids.size() / m;
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < k; ++c) {
    double d = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double t = points[i * m + j] - centroids[c * m + j];
      d += t * t;
    }
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  label[i] = best;
  dist2[i] = best_d;
}

void score_target(const ScoringTarget& target, std::span<double> row, std::vector<double>& scratch) {
  const std::size_t K = target.matrix->cols();
  scratch.resize(target.matrix->rows());
  for (std::size_t k = 0; k < K; ++k) {
    target.matrix->leave_one_out_values(k, scratch);
    row[k] = pearson_q(target.hvc, scratch);
  }
}

double gahss_score(std::span<const double> running, std::size_t c, std::size_t n, std::size_t m) {
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) total += length_power(running[c * n + k], m);
  return total / static_cast<double>(n);
}

void gahss_update_one(const SolutionSet& candidates, const DirectionSet& directions,
                      std::span<const double> member, std::size_t c, std::span<double> running) {
  const std::size_t n = directions.size();
  for (std::size_t k = 0; k < n; ++k) {
    double& slot = running[c * n + k];
    slot = std::min(slot, g_star_2tch(member, directions[k], candidates[c]));
  }
}

constexpr double kTakenScore = -std::numeric_limits<double>::infinity();

}  // namespace

namespace serial {

std::vector<double> hvc_all(const SolutionSet& set, const ReferencePoint& ref) {
  std::vector<double> out(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) out[i] = member_hvc(set, i, ref);
  return out;
}

void length_column(const SolutionSet& set, std::span<const double> lambda, const ReferencePoint& ref,
                   std::span<double> lengths, std::span<double> powers) {
  const std::size_t m = set.dim();
  for (std::size_t i = 0; i < set.size(); ++i) {
    lengths[i] = member_length(set, i, lambda, ref.coords());
    powers[i] = length_power(lengths[i], m);
  }
}

void update_min_distance(std::span<const double> pool, std::size_t m, std::span<const double> v,
                         std::span<double> min_dist) {
  for (std::size_t i = 0; i < min_dist.size(); ++i) {
    min_dist[i] = std::min(min_dist[i], euclidean(pool.subspan(i * m, m), v));
  }
}

void assign_nearest(std::span<const double> points, std::span<const double> centroids, std::size_t m,
                    std::span<std::size_t> label, std::span<double> dist2) {
  for (std::size_t i = 0; i < label.size(); ++i) nearest(points, centroids, m, i, label, dist2);
}

void append_all(std::span<const ScoringTarget> targets, std::span<const double> lambda) {
  for (const auto& t : targets) t.matrix->append(lambda);
}

void score_removals(std::span<const ScoringTarget> targets, std::span<double> table) {
  if (targets.empty()) return;
  const std::size_t K = targets.front().matrix->cols();
  std::vector<double> scratch;
  for (std::size_t s = 0; s < targets.size(); ++s) score_target(targets[s], table.subspan(s * K, K), scratch);
}

void gahss_scores(std::span<const double> running, std::size_t n, std::size_t m,
                  std::span<const char> taken, std::span<double> scores) {
  for (std::size_t c = 0; c < scores.size(); ++c) {
    scores[c] = taken[c] ? kTakenScore : gahss_score(running, c, n, m);
  }
}

void gahss_update(const SolutionSet& candidates, const DirectionSet& directions,
                  std::span<const double> member, std::span<const char> taken,
                  std::span<double> running) {
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (!taken[c]) gahss_update_one(candidates, directions, member, c, running);
  }
}

}  // namespace serial

namespace omp {

std::vector<double> hvc_all(const SolutionSet& set, const ReferencePoint& ref) {
  const auto n = static_cast<std::ptrdiff_t>(set.size());
  std::vector<double> out(set.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = member_hvc(set, static_cast<std::size_t>(i), ref);
  return out;
}

void length_column(const SolutionSet& set, std::span<const double> lambda, const ReferencePoint& ref,
                   std::span<double> lengths, std::span<double> powers) {
  const std::size_t m = set.dim();
  const auto n = static_cast<std::ptrdiff_t>(set.size());
#pragma omp parallel for schedule(static) if (n >= 256)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto row = static_cast<std::size_t>(i);
    lengths[row] = member_length(set, row, lambda, ref.coords());
    powers[row] = length_power(lengths[row], m);
  }
}

void update_min_distance(std::span<const double> pool, std::size_t m, std::span<const double> v,
                         std::span<double> min_dist) {
  const auto n = static_cast<std::ptrdiff_t>(min_dist.size());
#pragma omp parallel for schedule(static) if (n >= 4096)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto row = static_cast<std::size_t>(i);
    min_dist[row] = std::min(min_dist[row], euclidean(pool.subspan(row * m, m), v));
  }
}

void assign_nearest(std::span<const double> points, std::span<const double> centroids, std::size_t m,
                    std::span<std::size_t> label, std::span<double> dist2) {
  const auto n = static_cast<std::ptrdiff_t>(label.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) nearest(points, centroids, m, static_cast<std::size_t>(i), label, dist2);
}

void append_all(std::span<const ScoringTarget> targets, std::span<const double> lambda) {
  const auto n = static_cast<std::ptrdiff_t>(targets.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t s = 0; s < n; ++s) targets[static_cast<std::size_t>(s)].matrix->append(lambda);
}

void score_removals(std::span<const ScoringTarget> targets, std::span<double> table) {
  if (targets.empty()) return;
  const std::size_t K = targets.front().matrix->cols();
  const auto n = static_cast<std::ptrdiff_t>(targets.size());
#pragma omp parallel
  {
    std::vector<double> scratch;
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t s = 0; s < n; ++s) {
      const auto idx = static_cast<std::size_t>(s);
      score_target(targets[idx], table.subspan(idx * K, K), scratch);
    }
  }
}

void gahss_scores(std::span<const double> running, std::size_t n, std::size_t m,
                  std::span<const char> taken, std::span<double> scores) {
  const auto count = static_cast<std::ptrdiff_t>(scores.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < count; ++c) {
    const auto idx = static_cast<std::size_t>(c);
    scores[idx] = taken[idx] ? kTakenScore : gahss_score(running, idx, n, m);
  }
}

void gahss_update(const SolutionSet& candidates, const DirectionSet& directions,
                  std::span<const double> member, std::span<const char> taken,
                  std::span<double> running) {
  const auto count = static_cast<std::ptrdiff_t>(candidates.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < count; ++c) {
    const auto idx = static_cast<std::size_t>(c);
    if (!taken[idx]) gahss_update_one(candidates, directions, member, idx, running);
  }
}

}  // namespace omp
}  // namespace lta::kernels
