#include "lta/directions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lta/errors.hpp"
#include "lta/kernels.hpp"

namespace lta {

namespace {

constexpr double kUnitTolerance = 1e-12;

void check_direction(std::span<const double> v) {
  double sq = 0.0;
  for (double x : v) {
    if (!(x >= 0.0) || !std::isfinite(x)) detail::contract_failure("direction vector has a negative or non-finite component");
    sq += x * x;
  }
  if (std::abs(std::sqrt(sq) - 1.0) > kUnitTolerance) {
    detail::contract_failure("direction vector is not unit norm");
  }
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double t = a[j] - b[j];
    d += t * t;
  }
  return d;
}

void enumerate_compositions(std::size_t m, std::size_t H, std::vector<std::size_t>& current,
                            std::size_t remaining, std::vector<double>& out) {
  const std::size_t pos = current.size();
  if (pos + 1 == m) {
    current.push_back(remaining);
    std::vector<double> w(current.begin(), current.end());
    for (double& x : w) x /= static_cast<double>(H);
    const auto dir = weight_to_direction(w);
    out.insert(out.end(), dir.coords().begin(), dir.coords().end());
    current.pop_back();
    return;
  }
  for (std::size_t k = 0; k <= remaining; ++k) {
    current.push_back(k);
    enumerate_compositions(m, H, current, remaining - k, out);
    current.pop_back();
  }
}

}  // namespace

DirectionVector::DirectionVector(std::vector<double> v) : v_(std::move(v)) {
  detail::require(!v_.empty(), "empty direction vector");
  check_direction(v_);
}

DirectionSet::DirectionSet(std::size_t m, Provenance provenance)
    : m_(m), provenance_(std::move(provenance)) {
  detail::require(m >= 1, "direction dimension must be positive");
}

DirectionSet::DirectionSet(std::size_t m, std::vector<double> row_major, Provenance provenance)
    : m_(m), data_(std::move(row_major)), provenance_(std::move(provenance)) {
  detail::require(m >= 1, "direction dimension must be positive");
  if (data_.size() % m_ != 0) detail::contract_failure("direction data is not a multiple of m");
  for (std::size_t k = 0; k < size(); ++k) check_direction((*this)[k]);
}

void DirectionSet::push_back(std::span<const double> v) {
  if (v.size() != m_) detail::contract_failure("direction dimension mismatch");
  check_direction(v);
  data_.insert(data_.end(), v.begin(), v.end());
}

void DirectionSet::erase(std::size_t k) {
  if (k >= size()) throw std::out_of_range("DirectionSet::erase index out of range");
  const auto first = data_.begin() + static_cast<std::ptrdiff_t>(k * m_);
  data_.erase(first, first + static_cast<std::ptrdiff_t>(m_));
}

DirectionVector weight_to_direction(std::span<const double> w) {
  double sq = 0.0;
  for (double x : w) {
    if (!(x >= 0.0)) detail::contract_failure("weight vector has a negative component");
    sq += x * x;
  }
  if (!(sq > 0.0)) detail::contract_failure("weight vector is zero");
  const double norm = std::sqrt(sq);
  std::vector<double> v(w.begin(), w.end());
  for (double& x : v) x /= norm;
  return DirectionVector(std::move(v));
}

std::size_t das_count(std::size_t m, std::size_t H) {
  detail::require(m >= 1, "das_count needs m >= 1");
  std::size_t result = 1;
  for (std::size_t i = 1; i < m; ++i) {
    // result == C(H + i - 1, i - 1) here; C(H + i, i) = result * (H + i) / i
    const std::size_t factor = H + i;
    if (factor < H || result > std::numeric_limits<std::size_t>::max() / factor) {
      throw SizeError("DAS count C(H+m-1, m-1) overflows for m=" + std::to_string(m) +
                      ", H=" + std::to_string(H));
    }
    result = result * factor / i;
  }
  return result;
}

DirectionSet gen_das(std::size_t m, std::size_t H) {
  detail::require(m >= 2, "gen_das needs m >= 2");
  detail::require(H >= 1, "gen_das needs H >= 1");
  const std::size_t count = das_count(m, H);
  std::vector<double> flat;
  flat.reserve(count * m);
  std::vector<std::size_t> current;
  current.reserve(m);
  enumerate_compositions(m, H, current, H, flat);
  return DirectionSet(m, std::move(flat),
                      Provenance{"das", {{"m", static_cast<std::int64_t>(m)}, {"H", static_cast<std::int64_t>(H)}}, std::nullopt});
}

std::vector<double> sample_unv(std::size_t m, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> x(m);
  for (;;) {
    double sq = 0.0;
    for (double& v : x) {
      v = std::abs(normal(rng));
      sq += v * v;
    }
    if (sq > 0.0) {
      const double norm = std::sqrt(sq);
      for (double& v : x) v /= norm;
      return x;
    }
  }
}

DirectionSet gen_unv(std::size_t m, std::size_t n, Rng& rng) {
  detail::require(m >= 2, "gen_unv needs m >= 2");
  detail::require(n >= 1, "gen_unv needs n >= 1");
  DirectionSet out(m, Provenance{"unv", {{"m", static_cast<std::int64_t>(m)}, {"n", static_cast<std::int64_t>(n)}}, std::nullopt});
  for (std::size_t k = 0; k < n; ++k) out.push_back(sample_unv(m, rng));
  return out;
}

DirectionSet gen_jas(std::size_t m, std::size_t n, Rng& rng) {
  detail::require(m >= 2, "gen_jas needs m >= 2");
  detail::require(n >= 1, "gen_jas needs n >= 1");
  DirectionSet out(m, Provenance{"jas", {{"m", static_cast<std::int64_t>(m)}, {"n", static_cast<std::int64_t>(n)}}, std::nullopt});
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(weight_to_direction(sample_simplex_weight(m, rng)).coords());
  }
  return out;
}

DirectionSet gen_mss(const DirectionSet& base, std::size_t n) {
  const std::size_t m = base.dim();
  detail::require(n >= m, "gen_mss needs n >= m");

  std::vector<double> pool;
  pool.reserve(base.flat().size() + m * m);
  auto contains = [&](std::span<const double> v) {
    for (std::size_t i = 0; i * m < pool.size(); ++i) {
      if (std::equal(v.begin(), v.end(), pool.begin() + static_cast<std::ptrdiff_t>(i * m))) return true;
    }
    return false;
  };
  for (std::size_t k = 0; k < base.size(); ++k) {
    if (!contains(base[k])) pool.insert(pool.end(), base[k].begin(), base[k].end());
  }
  std::vector<std::size_t> axis_index(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> axis(m, 0.0);
    axis[j] = 1.0;
    std::size_t found = pool.size() / m;
    for (std::size_t i = 0; i * m < pool.size(); ++i) {
      if (std::equal(axis.begin(), axis.end(), pool.begin() + static_cast<std::ptrdiff_t>(i * m))) {
        found = i;
        break;
      }
    }
    if (found == pool.size() / m) pool.insert(pool.end(), axis.begin(), axis.end());
    axis_index[j] = found;
  }
  const std::size_t count = pool.size() / m;
  if (count < n) {
    throw SizeError("gen_mss: base has " + std::to_string(count) + " distinct vectors, need " + std::to_string(n));
  }

  std::vector<double> min_dist(count, std::numeric_limits<double>::infinity());
  std::vector<char> taken(count, 0);
  DirectionSet out(m, Provenance{"mss", {{"n", static_cast<std::int64_t>(n)}, {"base_size", static_cast<std::int64_t>(base.size())}}, base.provenance().seed});
  auto select = [&](std::size_t i) {
    taken[i] = 1;
    std::span<const double> v(pool.data() + i * m, m);
    out.push_back(v);
    kernels::omp::update_min_distance(pool, m, v, min_dist);
  };
  for (std::size_t j = 0; j < m; ++j) select(axis_index[j]);
  while (out.size() < n) {
    std::size_t best = count;
    double best_dist = -1.0;
    for (std::size_t i = 0; i < count; ++i) {
      if (!taken[i] && min_dist[i] > best_dist) {
        best = i;
        best_dist = min_dist[i];
      }
    }
    select(best);
  }
  return out;
}

std::size_t default_pool_size(std::size_t n) {
  return std::min<std::size_t>(100 * n, 100000);
}

std::size_t das_level_for_count(std::size_t m, std::size_t count) {
  std::size_t H = 1;
  while (das_count(m, H) < count) ++H;
  return H;
}

DirectionSet gen_mss_d(std::size_t m, std::size_t n, std::size_t H) {
  auto out = gen_mss(gen_das(m, H), n);
  out.provenance() = Provenance{"mss-d", {{"m", static_cast<std::int64_t>(m)}, {"n", static_cast<std::int64_t>(n)}, {"H", static_cast<std::int64_t>(H)}}, std::nullopt};
  return out;
}

DirectionSet gen_mss_u(std::size_t m, std::size_t n, std::size_t pool, Rng& rng) {
  auto out = gen_mss(gen_unv(m, pool, rng), n);
  out.provenance() = Provenance{"mss-u", {{"m", static_cast<std::int64_t>(m)}, {"n", static_cast<std::int64_t>(n)}, {"pool", static_cast<std::int64_t>(pool)}}, std::nullopt};
  return out;
}

DirectionSet gen_kmeans_u(std::size_t m, std::size_t n, std::size_t pool_size, Rng& rng,
                          const KMeansOptions& options) {
  detail::require(n >= 1, "gen_kmeans_u needs n >= 1");
  detail::require(pool_size >= 10 * n, "gen_kmeans_u needs pool >= 10 n");
  const DirectionSet pool = gen_unv(m, pool_size, rng);
  const auto points = pool.flat();
  const std::size_t count = pool.size();

  // k-means++ seeding
  std::vector<double> centroids;
  centroids.reserve(n * m);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> any(0, count - 1);
  const std::size_t first = any(rng);
  centroids.insert(centroids.end(), pool[first].begin(), pool[first].end());
  std::vector<double> d2(count, std::numeric_limits<double>::infinity());
  while (centroids.size() < n * m) {
    std::span<const double> last(centroids.data() + centroids.size() - m, m);
    double total = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      d2[i] = std::min(d2[i], squared_distance(pool[i], last));
      total += d2[i];
    }
    std::size_t pick = count - 1;
    if (total > 0.0) {
      const double target = unit(rng) * total;
      double acc = 0.0;
      for (std::size_t i = 0; i < count; ++i) {
        acc += d2[i];
        if (acc > target) {
          pick = i;
          break;
        }
      }
    } else {
      pick = any(rng);
    }
    centroids.insert(centroids.end(), pool[pick].begin(), pool[pick].end());
  }

  std::vector<std::size_t> label(count);
  std::vector<double> dist2(count);
  std::vector<double> next(n * m);
  std::vector<std::size_t> members(n);
  for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
    kernels::omp::assign_nearest(points, centroids, m, label, dist2);
    std::fill(next.begin(), next.end(), 0.0);
    std::fill(members.begin(), members.end(), 0);
    for (std::size_t i = 0; i < count; ++i) {
      ++members[label[i]];
      for (std::size_t j = 0; j < m; ++j) next[label[i] * m + j] += points[i * m + j];
    }
    // Empty clusters are re-seeded to the pool points farthest from their centroid.
    std::vector<char> reseeded(count, 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (members[c] > 0) {
        for (std::size_t j = 0; j < m; ++j) next[c * m + j] /= static_cast<double>(members[c]);
        continue;
      }
      std::size_t far = count;
      for (std::size_t i = 0; i < count; ++i) {
        if (!reseeded[i] && (far == count || dist2[i] > dist2[far])) far = i;
      }
      reseeded[far] = 1;
      for (std::size_t j = 0; j < m; ++j) next[c * m + j] = points[far * m + j];
    }
    double movement = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      movement = std::max(movement, std::sqrt(squared_distance({next.data() + c * m, m}, {centroids.data() + c * m, m})));
    }
    centroids.swap(next);
    if (movement < options.tolerance) break;
  }

  DirectionSet out(m, Provenance{"kmeans-u", {{"m", static_cast<std::int64_t>(m)}, {"n", static_cast<std::int64_t>(n)}, {"pool", static_cast<std::int64_t>(pool_size)}}, std::nullopt});
  std::vector<char> used(count, 0);
  for (std::size_t c = 0; c < n; ++c) {
    std::span<const double> centre(centroids.data() + c * m, m);
    std::size_t best = count;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i) {
      if (used[i]) continue;
      const double d = squared_distance(pool[i], centre);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    used[best] = 1;
    out.push_back(pool[best]);
  }
  return out;
}

}  // namespace lta
