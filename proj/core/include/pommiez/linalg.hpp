#pragma once

#include <optional>
#include <vector>

#include "pommiez/gint.hpp"
#include "pommiez/scalar.hpp"

namespace pommiez {

/// Incrementally maintained exact row space over Q(i). Rows are scaled to
/// Gaussian-integer vectors and reduced fraction-free (cross-multiplication
/// with content normalization after every elimination step).
class RowSpan {
 public:
  explicit RowSpan(int cols) : cols_(cols) {}

  /// Inserts a row; returns true when the rank grew.
  bool insert(const std::vector<GaussianRational>& row);
  /// True iff the row already lies in the span.
  bool contains(const std::vector<GaussianRational>& row) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

 private:
  struct Row {
    int lead;
    std::vector<GaussianInteger> v;
  };
  std::vector<GaussianInteger> reduce(const std::vector<GaussianRational>& row) const;
  int cols_;
  std::vector<Row> rows_;  // sorted by leading column
};

/// Exact solve of sum_j x_j * columns[j] = rhs (free unknowns set to zero);
/// empty result when the system is inconsistent.
std::optional<std::vector<GaussianRational>> solve_exact(
    const std::vector<std::vector<GaussianRational>>& columns,
    const std::vector<GaussianRational>& rhs);

}  // namespace pommiez
