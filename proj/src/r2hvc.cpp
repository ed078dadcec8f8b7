#include "lta/r2hvc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lta/errors.hpp"
#include "lta/kernels.hpp"

namespace lta {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same_dim(std::size_t a, std::size_t b, std::size_t c) {
  if (a != b || b != c) detail::contract_failure("scalarizing function called with mismatched dimensions");
}

}  // namespace

namespace detail {

double g_star_2tch_oriented(std::span<const double> other, std::span<const double> lambda,
                            std::span<const double> s, Orientation orientation) {
  require_same_dim(other.size(), lambda.size(), s.size());
  double out = -kInf;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double t = orientation == Orientation::kMinimize ? other[j] - s[j] : s[j] - other[j];
    const double term = lambda[j] > 0.0 ? t / lambda[j] : (t > 0.0 ? kInf : -kInf);
    out = std::max(out, term);
  }
  return out;
}

}  // namespace detail

double g_star_2tch(std::span<const double> other, std::span<const double> lambda,
                   std::span<const double> s) {
  return detail::g_star_2tch_oriented(other, lambda, s, detail::Orientation::kMinimize);
}

double g_mtch(std::span<const double> ref, std::span<const double> lambda, std::span<const double> s) {
  require_same_dim(ref.size(), lambda.size(), s.size());
  double out = kInf;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (lambda[j] > 0.0) out = std::min(out, std::abs(s[j] - ref[j]) / lambda[j]);
  }
  return out;
}

double segment_length(std::span<const double> s, std::span<const double> others, std::size_t m,
                      std::span<const double> lambda, std::span<const double> ref) {
  double best = g_mtch(ref, lambda, s);
  for (std::size_t j = 0; j * m < others.size(); ++j) {
    best = std::min(best, g_star_2tch(others.subspan(j * m, m), lambda, s));
  }
  return best;
}

double r2hvc(std::span<const double> s, const SolutionSet& set, const DirectionSet& directions,
             const ReferencePoint& ref) {
  if (directions.empty()) detail::contract_failure("r2hvc needs a non-empty direction set");
  const std::size_t m = s.size();
  if (set.dim() != m || directions.dim() != m || ref.dim() != m) {
    detail::contract_failure("r2hvc called with mismatched dimensions");
  }
  const auto self = set.find(s);
  double total = 0.0;
  for (std::size_t k = 0; k < directions.size(); ++k) {
    const auto lambda = directions[k];
    double best = g_mtch(ref.coords(), lambda, s);
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (self && *self == i) continue;
      best = std::min(best, g_star_2tch(set[i], lambda, s));
    }
    if (best < 0.0) detail::contract_failure("r2hvc candidate is dominated by a member of the set");
    total += length_power(best, m);
  }
  return total / static_cast<double>(directions.size());
}

LengthMatrix::LengthMatrix(SolutionSet set, ReferencePoint ref, const DirectionSet& directions)
    : set_(std::move(set)), ref_(std::move(ref)), row_sums_(set_.size(), 0.0) {
  if (set_.dim() != ref_.dim() || directions.dim() != set_.dim()) {
    detail::contract_failure("length matrix inputs have mismatched dimensions");
  }
  lengths_.reserve((directions.size() + 1) * rows());
  powers_.reserve((directions.size() + 1) * rows());
  for (std::size_t k = 0; k < directions.size(); ++k) append(directions[k]);
  last_append_undoable_ = false;
}

void LengthMatrix::append(std::span<const double> lambda) {
  if (lambda.size() != dim()) detail::contract_failure("appended direction has wrong dimension");
  const std::size_t n = rows();
  lengths_.resize(lengths_.size() + n);
  powers_.resize(powers_.size() + n);
  std::span<double> new_lengths(lengths_.data() + cols_ * n, n);
  std::span<double> new_powers(powers_.data() + cols_ * n, n);
  kernels::omp::length_column(set_, lambda, ref_, new_lengths, new_powers);
  sums_before_append_ = row_sums_;
  for (std::size_t i = 0; i < n; ++i) row_sums_[i] += new_powers[i];
  ++cols_;
  last_append_undoable_ = true;
}

void LengthMatrix::drop(std::size_t k) {
  if (k >= cols_) throw std::out_of_range("LengthMatrix::drop column out of range");
  const std::size_t n = rows();
  if (last_append_undoable_ && k + 1 == cols_) {
    row_sums_ = sums_before_append_;
  } else {
    for (std::size_t i = 0; i < n; ++i) row_sums_[i] -= powers_[k * n + i];
  }
  const auto off = static_cast<std::ptrdiff_t>(k * n);
  lengths_.erase(lengths_.begin() + off, lengths_.begin() + off + static_cast<std::ptrdiff_t>(n));
  powers_.erase(powers_.begin() + off, powers_.begin() + off + static_cast<std::ptrdiff_t>(n));
  --cols_;
  last_append_undoable_ = false;
}

void LengthMatrix::leave_one_out_values(std::size_t k, std::span<double> out) const {
  if (k >= cols_) throw std::out_of_range("leave_one_out_values: column out of range");
  if (cols_ < 2) detail::contract_failure("leave_one_out_values needs at least two columns");
  const std::size_t n = rows();
  const double denom = static_cast<double>(cols_ - 1);
  if (last_append_undoable_ && k + 1 == cols_) {
    for (std::size_t i = 0; i < n; ++i) out[i] = sums_before_append_[i] / denom;
    return;
  }
  if (cols_ == 2) {
    const std::size_t other = 1 - k;
    for (std::size_t i = 0; i < n; ++i) out[i] = powers_[other * n + i];
    return;
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = (row_sums_[i] - powers_[k * n + i]) / denom;
}

std::vector<double> LengthMatrix::leave_one_out_values(std::size_t k) const {
  std::vector<double> out(rows());
  leave_one_out_values(k, out);
  return out;
}

std::vector<double> LengthMatrix::values() const {
  std::vector<double> out(rows());
  if (cols_ == 0) return out;
  for (std::size_t i = 0; i < rows(); ++i) out[i] = row_sums_[i] / static_cast<double>(cols_);
  return out;
}

LengthMatrix build_length_matrix(const SolutionSet& set, const DirectionSet& directions,
                                 const ReferencePoint& ref) {
  return LengthMatrix(set, ref, directions);
}

LengthMatrix append_direction(LengthMatrix matrix, std::span<const double> lambda) {
  matrix.append(lambda);
  return matrix;
}

std::vector<double> leave_one_out_values(const LengthMatrix& matrix, std::size_t k) {
  return matrix.leave_one_out_values(k);
}

}  // namespace lta
