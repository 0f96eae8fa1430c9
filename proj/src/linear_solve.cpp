#include "superweyl/linear_solve.hpp"

#include <stdexcept>

namespace superweyl {

LinearSolver::LinearSolver(const CoordinateMatrix& columns) { factor(columns); }

LinearSolver::LinearSolver(const std::vector<CoordinateVector>& columns, Eigen::Index rows) {
  CoordinateMatrix a(rows, static_cast<Eigen::Index>(columns.size()));
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length does not match basis size");
    a.col(c) = columns[c];
  }
  factor(std::move(a));
}

void LinearSolver::factor(CoordinateMatrix a) {
  rows_ = a.rows();
  cols_ = a.cols();
  transform_ = CoordinateMatrix::Identity(rows_, rows_);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols_ && r < rows_; ++c) {
    Eigen::Index p = r;
    while (p < rows_ && a(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r) {
      a.row(p).swap(a.row(r));
      transform_.row(p).swap(transform_.row(r));
    }
    GaussianRational inv = a(r, c).inverse();
    if (!inv.is_one()) {
      for (Eigen::Index j = c; j < cols_; ++j)
        if (!a(r, j).is_zero()) a(r, j) *= inv;
      for (Eigen::Index j = 0; j < rows_; ++j)
        if (!transform_(r, j).is_zero()) transform_(r, j) *= inv;
    }
    for (Eigen::Index i = 0; i < rows_; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      GaussianRational f = a(i, c);
      for (Eigen::Index j = c; j < cols_; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      for (Eigen::Index j = 0; j < rows_; ++j)
        if (!transform_(r, j).is_zero()) transform_(i, j) -= f * transform_(r, j);
    }
    pivot_cols_.push_back(c);
    ++r;
  }
}

std::optional<Coefficients> LinearSolver::finish(const CoordinateVector& y) const {
  for (Eigen::Index i = rank(); i < rows_; ++i)
    if (!y(i).is_zero()) return std::nullopt;
  Coefficients x(static_cast<std::size_t>(cols_), GaussianRational(0));
  for (Eigen::Index i = 0; i < rank(); ++i) x[static_cast<std::size_t>(pivot_cols_[i])] = y(i);
  return x;
}

std::optional<Coefficients> LinearSolver::solve(const CoordinateVector& target) const {
  if (target.size() != rows_) throw std::invalid_argument("target length does not match basis size");
  SparseColumn sparse;
  for (Eigen::Index i = 0; i < rows_; ++i)
    if (!target(i).is_zero()) sparse.emplace_back(i, target(i));
  return solve(sparse);
}

std::optional<Coefficients> LinearSolver::solve(const SparseColumn& target) const {
  CoordinateVector y = CoordinateVector::Zero(rows_);
  for (const auto& [row, value] : target) {
    if (row < 0 || row >= rows_) throw std::invalid_argument("target row out of range");
    for (Eigen::Index i = 0; i < rows_; ++i)
      if (!transform_(i, row).is_zero()) y(i).add_product(transform_(i, row), value);
  }
  return finish(y);
}

std::optional<Coefficients> solve_linear_system(const std::vector<CoordinateVector>& columns,
                                                const CoordinateVector& target) {
  return LinearSolver(columns, target.size()).solve(target);
}

Eigen::Index column_rank(const std::vector<CoordinateVector>& columns, Eigen::Index rows) {
  return LinearSolver(columns, rows).rank();
}

}  // namespace superweyl
