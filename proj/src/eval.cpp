#include "lta/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "lta/errors.hpp"
#include "lta/hypervolume.hpp"
#include "lta/kernels.hpp"
#include "lta/r2hvc.hpp"

namespace lta {

std::vector<double> r2hvc_all(const SolutionSet& set, const DirectionSet& directions, const ReferencePoint& ref) {
  if (directions.empty()) detail::contract_failure("r2hvc needs a non-empty direction set");
  return LengthMatrix(set, ref, directions).values();
}

namespace {

std::size_t lowest_argmin(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
}

struct CaseOutcome {
  char correct = 0;
  std::size_t exact = 0;
  std::size_t approx = 0;
};

CaseOutcome evaluate_case(const ContributionIndicator& indicator, const CirTestCase& test) {
  const auto exact = kernels::serial::hvc_all(test.set, test.ref);
  const auto approx = indicator(test.set, test.ref);
  if (approx.size() != exact.size()) detail::contract_failure("indicator returned the wrong number of values");
  CaseOutcome out;
  out.exact = lowest_argmin(exact);
  out.approx = lowest_argmin(approx);
  const double floor = exact[out.exact];
  const double band = kCirTieTolerance * std::max(std::abs(floor), std::numeric_limits<double>::min());
  out.correct = exact[out.approx] - floor <= band ? 1 : 0;
  return out;
}

}  // namespace

CirOutcome cir_with(const ContributionIndicator& indicator, std::span<const CirTestCase> tests) {
  detail::require(!tests.empty(), "cir needs at least one test set");
  for (const auto& t : tests) {
    if (t.set.size() < 1 || t.set.dim() != t.ref.dim()) detail::contract_failure("malformed CIR test set");
    if (!strictly_bounded_by(t.set, t.ref)) detail::contract_failure("CIR test set does not dominate its reference point");
  }
  std::vector<CaseOutcome> cases(tests.size());
  const auto count = static_cast<std::ptrdiff_t>(tests.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    cases[idx] = evaluate_case(indicator, tests[idx]);
  }
  CirOutcome out;
  std::size_t hits = 0;
  for (const auto& c : cases) {
    out.correct.push_back(c.correct);
    out.exact_argmin.push_back(c.exact);
    out.approx_argmin.push_back(c.approx);
    hits += static_cast<std::size_t>(c.correct);
  }
  out.rate = static_cast<double>(hits) / static_cast<double>(tests.size());
  return out;
}

CirOutcome cir(const DirectionSet& directions, std::span<const CirTestCase> tests) {
  for (const auto& t : tests) {
    if (t.set.dim() != directions.dim()) detail::contract_failure("direction and test-set dimensions differ");
  }
  return cir_with(
      [&directions](const SolutionSet& set, const ReferencePoint& ref) { return r2hvc_all(set, directions, ref); },
      tests);
}

std::vector<FrontFamily> standard_fronts(std::size_t m) {
  return {
      {"linear-triangular", {FrontShape::kTriangular, 1.0, m}},
      {"concave-triangular", {FrontShape::kTriangular, 2.0, m}},
      {"convex-triangular", {FrontShape::kTriangular, 0.5, m}},
      {"linear-inverted", {FrontShape::kInverted, 1.0, m}},
      {"convex-inverted", {FrontShape::kInverted, 2.0, m}},
      {"concave-inverted", {FrontShape::kInverted, 0.5, m}},
  };
}

FrontFamily front_family(const std::string& name, std::size_t m) {
  for (auto& f : standard_fronts(m)) {
    if (f.name == name) return f;
  }
  detail::contract_failure("unknown front family '" + name + "'");
}

std::vector<CirTestCase> make_cir_suite(const FrontSpec& front, std::size_t sets, std::size_t set_size,
                                        std::uint64_t seed) {
  std::vector<CirTestCase> out;
  out.reserve(sets);
  for (std::size_t i = 0; i < sets; ++i) {
    Rng rng(derive_seed(seed, i));
    out.push_back({sample_front(front, set_size, rng), ReferencePoint::uniform(front.m, 1.2)});
  }
  return out;
}

GahssReport gahss(const SolutionSet& candidates, std::size_t k, const DirectionSet& directions,
                  const ReferencePoint& ref, const GahssObserver& observer) {
  if (k > candidates.size()) {
    throw SizeError("gahss: k=" + std::to_string(k) + " exceeds the " + std::to_string(candidates.size()) +
                    " candidates");
  }
  detail::require(!directions.empty(), "gahss needs a non-empty direction set");
  if (candidates.dim() != directions.dim() || candidates.dim() != ref.dim()) {
    detail::contract_failure("gahss inputs have mismatched dimensions");
  }
  if (!strictly_bounded_by(candidates, ref)) detail::contract_failure("gahss candidates must dominate the reference point");

  const std::size_t count = candidates.size();
  const std::size_t n = directions.size();
  const std::size_t m = candidates.dim();
  std::vector<double> running(count * n);
  for (std::size_t c = 0; c < count; ++c) {
    for (std::size_t d = 0; d < n; ++d) running[c * n + d] = g_mtch(ref.coords(), directions[d], candidates[c]);
  }
  std::vector<char> taken(count, 0);
  std::vector<double> scores(count);

  GahssReport report;
  report.selected.reserve(k);
  for (std::size_t step = 0; step < k; ++step) {
    kernels::omp::gahss_scores(running, n, m, taken, scores);
    if (observer) observer(step, scores, report.selected);
    const auto best = static_cast<std::size_t>(std::max_element(scores.begin(), scores.end()) - scores.begin());
    taken[best] = 1;
    report.selected.push_back(best);
    kernels::omp::gahss_update(candidates, directions, candidates[best], taken, running);
  }
  report.hypervolume = hypervolume(candidates.subset(report.selected), ref);
  report.reference.assign(ref.coords().begin(), ref.coords().end());
  report.candidate_count = count;
  report.directions = directions.provenance();
  return report;
}

namespace {

// Mid-ranks (1-based) of the pooled sample plus the tie term sum(t^3 - t).
std::vector<double> pooled_ranks(const std::vector<double>& pooled, double& tie_term) {
  const std::size_t n = pooled.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });
  std::vector<double> ranks(n);
  tie_term = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    const double mid = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = mid;
    const auto size = static_cast<double>(j - i + 1);
    tie_term += size * size * size - size;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

RankSumResult wilcoxon_rank_sum(std::span<const double> x, std::span<const double> y) {
  detail::require(x.size() >= 5 && y.size() >= 5, "wilcoxon_rank_sum needs at least 5 values per sample");
  std::vector<double> pooled(x.begin(), x.end());
  pooled.insert(pooled.end(), y.begin(), y.end());
  double tie_term = 0.0;
  const auto ranks = pooled_ranks(pooled, tie_term);

  const auto n1 = static_cast<double>(x.size());
  const auto n2 = static_cast<double>(y.size());
  const double total = n1 + n2;
  RankSumResult out;
  for (std::size_t i = 0; i < x.size(); ++i) out.statistic += ranks[i];

  const double mean = n1 * (total + 1.0) / 2.0;
  const double variance = n1 * n2 / 12.0 * ((total + 1.0) - tie_term / (total * (total - 1.0)));
  if (!(variance > 0.0)) {
    out.p_value = 1.0;
    return out;
  }
  const double diff = out.statistic - mean;
  const double corrected = std::max(0.0, std::abs(diff) - 0.5);
  out.z = std::copysign(corrected / std::sqrt(variance), diff);
  out.p_value = std::min(1.0, std::erfc(corrected / std::sqrt(variance) / std::sqrt(2.0)));
  return out;
}

char compare_marker(std::span<const double> x, std::span<const double> y, bool higher_is_better, double alpha) {
  const auto test = wilcoxon_rank_sum(x, y);
  if (test.p_value >= alpha) return '~';
  const bool x_higher = test.z > 0.0;
  return x_higher == higher_is_better ? '+' : '-';
}

RankTable rank_methods(const std::vector<std::vector<double>>& scores, bool higher_is_better) {
  detail::require(!scores.empty(), "rank_methods needs at least one method");
  const std::size_t instances = scores.front().size();
  for (const auto& row : scores) {
    if (row.size() != instances) detail::contract_failure("rank_methods: score vectors differ in length");
  }
  const std::size_t methods = scores.size();
  RankTable table;
  table.ranks.assign(methods, std::vector<double>(instances, 0.0));
  table.average.assign(methods, 0.0);
  for (std::size_t inst = 0; inst < instances; ++inst) {
    std::vector<double> column(methods);
    for (std::size_t meth = 0; meth < methods; ++meth) {
      column[meth] = higher_is_better ? -scores[meth][inst] : scores[meth][inst];
    }
    double unused = 0.0;
    const auto ranks = pooled_ranks(column, unused);
    for (std::size_t meth = 0; meth < methods; ++meth) table.ranks[meth][inst] = ranks[meth];
  }
  if (instances > 0) {
    for (std::size_t meth = 0; meth < methods; ++meth) {
      double sum = 0.0;
      for (double r : table.ranks[meth]) sum += r;
      table.average[meth] = sum / static_cast<double>(instances);
    }
  }
  return table;
}

}  // namespace lta
