#pragma once

#include "superweyl/gaussian_rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace superweyl {

using CoordinateVector = Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1>;
using CoordinateMatrix = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;
using Coefficients = std::vector<GaussianRational>;

/// Sparse right-hand side: (row, value) pairs.
using SparseColumn = std::vector<std::pair<Eigen::Index, GaussianRational>>;

/// Exact Gaussian elimination on a fixed set of columns, reusable for many
/// right-hand sides. Pivots are the first nonzero entry scanning columns
/// left to right; free variables are set to zero.
class LinearSolver {
 public:
  explicit LinearSolver(const CoordinateMatrix& columns);
  LinearSolver(const std::vector<CoordinateVector>& columns, Eigen::Index rows);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_cols_.size()); }
  const std::vector<Eigen::Index>& pivot_columns() const { return pivot_cols_; }

  std::optional<Coefficients> solve(const CoordinateVector& target) const;
  std::optional<Coefficients> solve(const SparseColumn& target) const;

 private:
  void factor(CoordinateMatrix a);
  std::optional<Coefficients> finish(const CoordinateVector& transformed) const;

  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
  // transform_ * columns == reduced row echelon form
  CoordinateMatrix transform_;
  std::vector<Eigen::Index> pivot_cols_;
};

/// Solves sum_i c_i * columns[i] == target exactly; std::nullopt when the
/// target is outside the span. Throws std::invalid_argument on a length
/// mismatch.
std::optional<Coefficients> solve_linear_system(const std::vector<CoordinateVector>& columns,
                                                const CoordinateVector& target);

/// Rank of a set of columns.
Eigen::Index column_rank(const std::vector<CoordinateVector>& columns, Eigen::Index rows);

}  // namespace superweyl
