/**
 * @file directions.hpp
 * @brief Direction vectors (unit norm, non-negative) and the six set
 *        generators: DAS, UNV, JAS, MSS (on a DAS or UNV base) and k-means.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lta/objective_space.hpp"

namespace lta {

class DirectionVector {
 public:
  /// Throws ContractError unless ||v||_2 = 1 (1e-12) and every v_j >= 0.
  explicit DirectionVector(std::vector<double> v);

  std::size_t dim() const { return v_.size(); }
  std::span<const double> coords() const { return v_; }
  double operator[](std::size_t j) const { return v_[j]; }
  operator std::span<const double>() const { return v_; }

  friend bool operator==(const DirectionVector&, const DirectionVector&) = default;

 private:
  std::vector<double> v_;
};

/// Generator name, integer parameters, and seed (if randomized).
struct Provenance {
  std::string generator;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// n direction vectors of dimension m, stored row-major.
class DirectionSet {
 public:
  explicit DirectionSet(std::size_t m, Provenance provenance = {});
  DirectionSet(std::size_t m, std::vector<double> row_major, Provenance provenance = {});

  std::size_t dim() const { return m_; }
  std::size_t size() const { return data_.size() / m_; }
  bool empty() const { return data_.empty(); }

  std::span<const double> operator[](std::size_t k) const { return {data_.data() + k * m_, m_}; }
  std::span<const double> flat() const { return data_; }

  void push_back(std::span<const double> v);
  void erase(std::size_t k);

  const Provenance& provenance() const { return provenance_; }
  Provenance& provenance() { return provenance_; }

  friend bool operator==(const DirectionSet&, const DirectionSet&) = default;

 private:
  std::size_t m_;
  std::vector<double> data_;
  Provenance provenance_;
};

/// lambda = w / ||w||_2 for a non-zero, non-negative weight vector.
DirectionVector weight_to_direction(std::span<const double> w);

/// C(H + m - 1, m - 1); throws SizeError on overflow.
std::size_t das_count(std::size_t m, std::size_t H);

DirectionSet gen_das(std::size_t m, std::size_t H);

/// One UNV direction: |x| / ||x|| with x ~ N(0, I_m).
std::vector<double> sample_unv(std::size_t m, Rng& rng);

DirectionSet gen_unv(std::size_t m, std::size_t n, Rng& rng);

DirectionSet gen_jas(std::size_t m, std::size_t n, Rng& rng);

/**
 * Maximally sparse selection: start from the m axis vectors, then repeatedly
 * add the base vector with the largest chordal distance to the selection.
 * Ties go to the lowest base index. The base is deduplicated and augmented
 * with missing axes before selection.
 */
DirectionSet gen_mss(const DirectionSet& base, std::size_t n);

struct KMeansOptions {
  std::size_t max_iterations = 300;
  double tolerance = 1e-10;
};

/**
 * Sample `pool` UNV vectors, cluster them with k-means (k = n, k-means++
 * seeding) and return, per centroid, the nearest pool member not already
 * taken by an earlier cluster.
 */
DirectionSet gen_kmeans_u(std::size_t m, std::size_t n, std::size_t pool, Rng& rng,
                          const KMeansOptions& options = {});

/// Pool size used by MSS-U / Kmeans-U when none is given: 100 n, at most 1e5.
std::size_t default_pool_size(std::size_t n);

/// Smallest H whose DAS lattice has at least `count` points.
std::size_t das_level_for_count(std::size_t m, std::size_t count);

/// MSS-D: MSS over a DAS base of level H.
DirectionSet gen_mss_d(std::size_t m, std::size_t n, std::size_t H);

/// MSS-U: MSS over a UNV base of `pool` vectors.
DirectionSet gen_mss_u(std::size_t m, std::size_t n, std::size_t pool, Rng& rng);

}  // namespace lta
