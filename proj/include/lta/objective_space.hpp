/**
 * @file objective_space.hpp
 * @brief Points, solution sets and reference points in a minimization
 *        objective space, plus samplers for triangular / inverted fronts.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace lta {

using Rng = std::mt19937_64;

/// Seed of the i-th independent task derived from a base seed.
constexpr std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) {
  return base_seed ^ index;
}

/// A single point in objective space (m >= 2, all coordinates finite).
class ObjectivePoint {
 public:
  explicit ObjectivePoint(std::vector<double> coords);
  ObjectivePoint(std::initializer_list<double> coords)
      : ObjectivePoint(std::vector<double>(coords)) {}

  std::size_t dim() const { return coords_.size(); }
  std::span<const double> coords() const { return coords_; }
  double operator[](std::size_t j) const { return coords_[j]; }

  operator std::span<const double>() const { return coords_; }

  friend bool operator==(const ObjectivePoint&, const ObjectivePoint&) = default;

 private:
  std::vector<double> coords_;
};

/// Reference point bounding the dominated region from above.
class ReferencePoint {
 public:
  explicit ReferencePoint(std::vector<double> coords);
  ReferencePoint(std::initializer_list<double> coords)
      : ReferencePoint(std::vector<double>(coords)) {}

  /// (value, value, ..., value) in m dimensions.
  static ReferencePoint uniform(std::size_t m, double value);

  std::size_t dim() const { return coords_.size(); }
  std::span<const double> coords() const { return coords_; }
  double operator[](std::size_t j) const { return coords_[j]; }

  operator std::span<const double>() const { return coords_; }

  friend bool operator==(const ReferencePoint&, const ReferencePoint&) = default;

 private:
  std::vector<double> coords_;
};

/**
 * Ordered collection of N points of equal dimension m, stored row-major.
 *
 * Construction always rejects non-finite coordinates and identical points.
 * With Check::kNondominated it additionally rejects sets in which one member
 * dominates another. An empty set (N = 0) is legal; it arises as S \ {s}.
 */
class SolutionSet {
 public:
  enum class Check { kBasic, kNondominated };

  explicit SolutionSet(std::size_t m);
  SolutionSet(std::size_t m, std::vector<double> row_major, Check check = Check::kBasic);
  SolutionSet(std::initializer_list<std::initializer_list<double>> rows,
              Check check = Check::kBasic);

  static SolutionSet from_rows(const std::vector<std::vector<double>>& rows,
                               Check check = Check::kBasic);

  std::size_t size() const { return m_ == 0 ? 0 : data_.size() / m_; }
  std::size_t dim() const { return m_; }
  bool empty() const { return data_.empty(); }

  std::span<const double> operator[](std::size_t i) const {
    return {data_.data() + i * m_, m_};
  }
  std::span<const double> flat() const { return data_; }

  /// Index of the member equal (coordinate-wise, exactly) to p.
  std::optional<std::size_t> find(std::span<const double> p) const;

  SolutionSet without(std::size_t i) const;
  SolutionSet subset(std::span<const std::size_t> indices) const;

  /// Componentwise maximum over members (requires a non-empty set).
  std::vector<double> nadir() const;

  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;

 private:
  std::size_t m_;
  std::vector<double> data_;
};

enum class FrontShape { kTriangular, kInverted };

/// Front sum_i f_i^p = 1 (triangular) or sum_i (1 - f_i)^p = 1 (inverted).
struct FrontSpec {
  FrontShape shape = FrontShape::kTriangular;
  double p = 1.0;
  std::size_t m = 3;

  void validate() const;
};

/// a Pareto-dominates b (minimization).
bool dominates(std::span<const double> a, std::span<const double> b);

/// a is no worse than b in every objective.
bool weakly_dominates(std::span<const double> a, std::span<const double> b);

bool validate_nondominated(const SolutionSet& set);

/// Uniform simplex weight from m - 1 uniforms in [0, 1) via the
/// probabilistic filling recursion; returns m weights summing to one.
std::vector<double> simplex_weight_from_uniforms(std::span<const double> uniforms);

std::vector<double> sample_simplex_weight(std::size_t m, Rng& rng);

/// Map a simplex weight onto the front described by spec.
std::vector<double> project_to_front(std::span<const double> weight, const FrontSpec& spec);

/// N distinct mutually non-dominated points on the front.
SolutionSet sample_front(const FrontSpec& spec, std::size_t count, Rng& rng);

/// r_j = factor * max_s s_j.
ReferencePoint reference_from_factor(const SolutionSet& set, double factor);

/// Every member strictly dominates r in every coordinate.
bool strictly_bounded_by(const SolutionSet& set, const ReferencePoint& ref);

namespace detail {

using WeightSource = std::function<std::vector<double>(std::size_t m)>;

/// sample_front with the simplex weights drawn from `weights`.
SolutionSet sample_front_from(const FrontSpec& spec, std::size_t count, const WeightSource& weights);

}  // namespace detail

}  // namespace lta
