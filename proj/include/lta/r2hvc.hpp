/**
 * @file r2hvc.hpp
 * @brief Line-based hypervolume-contribution approximation and the
 *        per-(solution, direction) length cache used for leave-one-out
 *        evaluation.
 *
 * Division by a zero direction component follows the limit lambda_j -> 0+:
 * inside the max of g_star_2tch, t/0 is +inf for t > 0 and -inf for t <= 0;
 * inside the min of g_mtch, t/0 is +inf. Every length is therefore capped by
 * a finite reference term.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lta/directions.hpp"
#include "lta/objective_space.hpp"

namespace lta {

/// max_j (other_j - s_j) / lambda_j.
double g_star_2tch(std::span<const double> other, std::span<const double> lambda,
                   std::span<const double> s);

/// min_j |s_j - r_j| / lambda_j.
double g_mtch(std::span<const double> ref, std::span<const double> lambda, std::span<const double> s);

/// x^m by repeated multiplication; shared by every code path that raises a
/// length to the objective count so cached and naive values agree bitwise.
inline double length_power(double x, std::size_t m) {
  double out = 1.0;
  for (std::size_t j = 0; j < m; ++j) out *= x;
  return out;
}

/// Segment length along lambda from s, truncated by `others` and by ref.
double segment_length(std::span<const double> s, std::span<const double> others, std::size_t m,
                      std::span<const double> lambda, std::span<const double> ref);

/**
 * (1/n) sum over lambda of min(min_{s' in set \ {s}} g_star_2tch(s', lambda, s),
 * g_mtch(r, lambda, s))^m. If s is a member of set (exact match) it is left
 * out of the inner min. s must not be dominated by a member of set.
 */
double r2hvc(std::span<const double> s, const SolutionSet& set, const DirectionSet& directions,
             const ReferencePoint& ref);

/**
 * Cache of segment lengths l[i][k] for every member i of a solution set
 * (against the rest of the set) and every direction k, with c[i][k] = l^m
 * and row sums of c. Columns are stored contiguously so appending or
 * dropping a direction touches only that column and the row sums.
 *
 * Dropping the column appended last restores the row sums saved before that
 * append bit-for-bit, and leave-one-out values for that column are read from
 * the same saved sums. This makes "add one direction, then remove it" an
 * exact no-op.
 */
class LengthMatrix {
 public:
  LengthMatrix(SolutionSet set, ReferencePoint ref, const DirectionSet& directions);

  std::size_t rows() const { return set_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return set_.dim(); }

  double length(std::size_t i, std::size_t k) const { return lengths_[k * rows() + i]; }
  double power(std::size_t i, std::size_t k) const { return powers_[k * rows() + i]; }
  std::span<const double> column_lengths(std::size_t k) const { return {lengths_.data() + k * rows(), rows()}; }
  std::span<const double> column_powers(std::size_t k) const { return {powers_.data() + k * rows(), rows()}; }
  std::span<const double> row_sums() const { return row_sums_; }

  const SolutionSet& solutions() const { return set_; }
  const ReferencePoint& reference() const { return ref_; }

  void append(std::span<const double> lambda);
  void drop(std::size_t k);

  /// (row_sums[i] - c[i][k]) / (K - 1); throws std::out_of_range for bad k.
  void leave_one_out_values(std::size_t k, std::span<double> out) const;
  std::vector<double> leave_one_out_values(std::size_t k) const;

  /// row_sums[i] / K, i.e. r2hvc of every member against the rest.
  std::vector<double> values() const;

 private:
  SolutionSet set_;
  ReferencePoint ref_;
  std::size_t cols_ = 0;
  std::vector<double> lengths_;
  std::vector<double> powers_;
  std::vector<double> row_sums_;
  std::vector<double> sums_before_append_;
  bool last_append_undoable_ = false;
};

LengthMatrix build_length_matrix(const SolutionSet& set, const DirectionSet& directions,
                                 const ReferencePoint& ref);

LengthMatrix append_direction(LengthMatrix matrix, std::span<const double> lambda);

std::vector<double> leave_one_out_values(const LengthMatrix& matrix, std::size_t k);

namespace detail {

enum class Orientation { kMinimize, kMaximize };

/// g_star_2tch for either orientation; maximization uses (s_j - other_j).
double g_star_2tch_oriented(std::span<const double> other, std::span<const double> lambda,
                            std::span<const double> s, Orientation orientation);

}  // namespace detail
}  // namespace lta
