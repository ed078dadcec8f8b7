/**
 * @file kernels.hpp
 * @brief Data-parallel inner loops. Every kernel exists twice with the same
 *        signature: `serial` is the reference implementation kept for tests
 *        and benchmarks, `omp` is the OpenMP version used by the library.
 *
 * The OpenMP kernels only partition independent output slots across
 * threads and never reduce across threads, so their results are bitwise
 * identical to the serial ones for any thread count.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lta/objective_space.hpp"
#include "lta/r2hvc.hpp"

namespace lta::kernels {

/// Fixed per-set data for scoring direction removals in training.
struct ScoringTarget {
  LengthMatrix* matrix = nullptr;
  std::span<const double> hvc;
};

namespace serial {

std::vector<double> hvc_all(const SolutionSet& set, const ReferencePoint& ref);

/// Lengths and their m-th powers of one direction column, every member of set.
void length_column(const SolutionSet& set, std::span<const double> lambda, const ReferencePoint& ref,
                   std::span<double> lengths, std::span<double> powers);

/// min_dist[i] = min(min_dist[i], ||pool_i - v||).
void update_min_distance(std::span<const double> pool, std::size_t m, std::span<const double> v,
                         std::span<double> min_dist);

/// Nearest centroid per point (lowest index on ties) and its squared distance.
void assign_nearest(std::span<const double> points, std::span<const double> centroids, std::size_t m,
                    std::span<std::size_t> label, std::span<double> dist2);

void append_all(std::span<const ScoringTarget> targets, std::span<const double> lambda);

/// table[s * K + k] = Pearson(hvc of set s, leave-one-out values of column k).
void score_removals(std::span<const ScoringTarget> targets, std::span<double> table);

/// score[c] = (1/n) sum_k running[c][k]^m; -inf for taken candidates.
void gahss_scores(std::span<const double> running, std::size_t n, std::size_t m,
                  std::span<const char> taken, std::span<double> scores);

/// running[c][k] = min(running[c][k], g_star_2tch(member, lambda_k, candidate c)).
void gahss_update(const SolutionSet& candidates, const DirectionSet& directions,
                  std::span<const double> member, std::span<const char> taken,
                  std::span<double> running);

}  // namespace serial

namespace omp {

std::vector<double> hvc_all(const SolutionSet& set, const ReferencePoint& ref);

/// Lengths and their m-th powers of one direction column, every member of set.
void length_column(const SolutionSet& set, std::span<const double> lambda, const ReferencePoint& ref,
                   std::span<double> lengths, std::span<double> powers);

/// min_dist[i] = min(min_dist[i], ||pool_i - v||).
void update_min_distance(std::span<const double> pool, std::size_t m, std::span<const double> v,
                         std::span<double> min_dist);

/// Nearest centroid per point (lowest index on ties) and its squared distance.
void assign_nearest(std::span<const double> points, std::span<const double> centroids, std::size_t m,
                    std::span<std::size_t> label, std::span<double> dist2);

void append_all(std::span<const ScoringTarget> targets, std::span<const double> lambda);

/// table[s * K + k] = Pearson(hvc of set s, leave-one-out values of column k).
void score_removals(std::span<const ScoringTarget> targets, std::span<double> table);

/// score[c] = (1/n) sum_k running[c][k]^m; -inf for taken candidates.
void gahss_scores(std::span<const double> running, std::size_t n, std::size_t m,
                  std::span<const char> taken, std::span<double> scores);

/// running[c][k] = min(running[c][k], g_star_2tch(member, lambda_k, candidate c)).
void gahss_update(const SolutionSet& candidates, const DirectionSet& directions,
                  std::span<const double> member, std::span<const char> taken,
                  std::span<double> running);

}  // namespace omp

}  // namespace lta::kernels
