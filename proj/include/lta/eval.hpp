/**
 * @file eval.hpp
 * @brief Downstream evaluation of direction sets: correct identification
 *        rate of the least contributor, greedy approximated hypervolume
 *        subset selection, and the statistics used to compare methods.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lta/directions.hpp"
#include "lta/objective_space.hpp"

namespace lta {

struct CirTestCase {
  SolutionSet set;
  ReferencePoint ref;
};

/// Maps a solution set to one contribution estimate per member.
using ContributionIndicator = std::function<std::vector<double>(const SolutionSet&, const ReferencePoint&)>;

struct CirOutcome {
  double rate = 0.0;
  std::vector<char> correct;
  std::vector<std::size_t> exact_argmin;
  std::vector<std::size_t> approx_argmin;
};

/// r2hvc of every member of `set` against the rest.
std::vector<double> r2hvc_all(const SolutionSet& set, const DirectionSet& directions, const ReferencePoint& ref);

/// Relative width of the exact-contribution tie band around the minimum.
inline constexpr double kCirTieTolerance = 1e-12;

/**
 * Fraction of test sets where the least contributor under `indicator`
 * (lowest index on ties) lies in the exact least-contributor tie set.
 */
CirOutcome cir_with(const ContributionIndicator& indicator, std::span<const CirTestCase> tests);

CirOutcome cir(const DirectionSet& directions, std::span<const CirTestCase> tests);

/// Named front families used by the evaluation suites.
struct FrontFamily {
  std::string name;
  FrontSpec spec;
};

/// linear/concave/convex x triangular/inverted, in that order.
std::vector<FrontFamily> standard_fronts(std::size_t m);

/// Looks up a family by name (e.g. "linear-triangular"); throws ContractError.
FrontFamily front_family(const std::string& name, std::size_t m);

/// M sets of N points on one front with r = (1.2, ..., 1.2); set i uses
/// derive_seed(seed, i).
std::vector<CirTestCase> make_cir_suite(const FrontSpec& front, std::size_t sets, std::size_t set_size,
                                        std::uint64_t seed);

struct GahssReport {
  std::vector<std::size_t> selected;
  double hypervolume = 0.0;
  std::vector<double> reference;
  std::size_t candidate_count = 0;
  Provenance directions;
};

/// Called after scoring in every greedy step, before the argmax is added.
using GahssObserver = std::function<void(std::size_t step, std::span<const double> scores,
                                         std::span<const std::size_t> selected)>;

/**
 * Greedy subset selection: starting from an empty subset, add the
 * candidate with the largest approximated contribution (lowest index on
 * ties) until k members are selected. Each candidate keeps, per direction,
 * the running minimum of its segment length, so adding a member costs
 * O(|candidates| n m).
 */
GahssReport gahss(const SolutionSet& candidates, std::size_t k, const DirectionSet& directions,
                  const ReferencePoint& ref, const GahssObserver& observer = {});

struct RankSumResult {
  double statistic = 0.0;  // rank sum of x
  double z = 0.0;
  double p_value = 1.0;
};

/// Two-sided Wilcoxon rank-sum test, normal approximation with tie and
/// continuity correction.
RankSumResult wilcoxon_rank_sum(std::span<const double> x, std::span<const double> y);

/// '+' if x is significantly better than y, '-' if worse, '~' otherwise.
char compare_marker(std::span<const double> x, std::span<const double> y, bool higher_is_better,
                    double alpha = 0.05);

struct RankTable {
  std::vector<std::vector<double>> ranks;  // [method][instance], 1 = best
  std::vector<double> average;             // per method
};

/// scores[method][instance]; tied methods share their mean rank.
RankTable rank_methods(const std::vector<std::vector<double>>& scores, bool higher_is_better);

}  // namespace lta
