/**
 * @file hypervolume.hpp
 * @brief Exact hypervolume and hypervolume contributions (WFG recursion with
 *        last-objective slicing), and a Monte-Carlo estimator used by tests.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lta/objective_space.hpp"

namespace lta {

/// Lebesgue measure of the union of boxes [s, r], s in set.
/// Every member must strictly dominate r; members dominated by other members
/// are discarded first.
double hypervolume(const SolutionSet& set, const ReferencePoint& ref);

/**
 * Hypervolume contribution of s.
 *
 * If s is a member of set (exact coordinate match) this is
 * HV(set) - HV(set \ {s}); otherwise HV(set + {s}) - HV(set). Both are
 * evaluated as the exclusive volume of s, i.e. vol([s, r]) minus the
 * hypervolume of the limit set, which avoids subtracting two large numbers.
 */
double hvc_exact(std::span<const double> s, const SolutionSet& set, const ReferencePoint& ref);

/// hvc_exact for every member, aligned with set order.
std::vector<double> hvc_all(const SolutionSet& set, const ReferencePoint& ref);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
};

/// Uniform sampling in the box [componentwise min of set, r].
MonteCarloEstimate mc_hypervolume(const SolutionSet& set, const ReferencePoint& ref,
                                  std::size_t samples, Rng& rng);

namespace detail {

/// Raw-buffer entry point used by the recursion and by the kernels: `points`
/// is row-major with `dim` columns, every row strictly below `ref`.
double hypervolume_raw(std::vector<double> points, std::size_t dim, std::span<const double> ref);

/// Exclusive volume of `s` with respect to `others` (rows of dim columns).
double exclusive_volume(std::span<const double> s, std::span<const double> others, std::size_t dim,
                        std::span<const double> ref);

}  // namespace detail
}  // namespace lta
