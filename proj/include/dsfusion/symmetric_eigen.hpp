#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dsfusion {

/// Dense square matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  Matrix(std::size_t n, std::vector<double> row_major);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> diag);

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const double> data() const noexcept { return data_; }

  Matrix& operator+=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  double max_abs() const noexcept;
  /// Largest |C(i,j) - C(j,i)|.
  double asymmetry() const noexcept;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct EigenPair {
  double value;
  std::vector<double> vector;  // unit length
};

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffDiagonalTolerance = 1e-12;

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps until the off-diagonal Frobenius norm falls below 1e-12 relative to
/// the matrix norm (or 1e-12 absolute for tiny matrices), at most 100 sweeps.
/// Pairs come back sorted by descending eigenvalue, each eigenvector signed so
/// its largest-magnitude component is positive. Throws ConvergenceFailure if
/// the sweep budget runs out.
std::vector<EigenPair> symmetric_eigen(const Matrix& symmetric);

}  // namespace dsfusion
