// Copyright 2026 The amis library authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AMIS_LINALG_HPP
#define AMIS_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace amis {

using Vector = std::vector<double>;

/// Dense row-major matrix. Just enough linear algebra for moment
/// estimates and density evaluations in dimensions up to a few dozen.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double trace() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Symmetric positive-definite matrix with a cached lower Cholesky factor
/// and log-determinant.
///
/// Construction symmetrizes the input (after checking it is symmetric to
/// 1e-12 relative) and factorizes once. When the factorization hits a
/// non-positive pivot it is retried with ridge jitter 1e-8 * (trace / p)
/// added to the diagonal; a second failure raises
/// DegenerateCovarianceError. Weighted covariance estimates from
/// near-degenerate weight sets are the expected source of such failures.
class SpdMatrix {
 public:
  explicit SpdMatrix(Matrix m);
  static SpdMatrix identity(std::size_t p);
  static SpdMatrix diagonal(const Vector& d);

  std::size_t dim() const { return a_.rows(); }
  const Matrix& dense() const { return a_; }
  const Matrix& cholesky() const { return chol_; }
  double log_det() const { return log_det_; }

  /// Solves L u = b with the cached factor.
  Vector forward_solve(const Vector& b) const;
  /// (x - mean)' A^{-1} (x - mean)
  double quad_form(const Vector& x, const Vector& mean) const;
  /// L z, the map from standard draws to correlated ones.
  Vector unit_to_correlated(const Vector& z) const;

 private:
  Matrix a_;
  Matrix chol_;
  double log_det_ = 0.0;
};

/// log(exp(a) + exp(b)) without overflow; propagates -inf pairs correctly.
double log_add_exp(double a, double b);

/// log sum_i exp(v_i); returns -inf on an empty or all -inf input.
double log_sum_exp(std::span<const double> values);

/// (sum w)^2 / sum w^2 of nonnegative weights; 0 when all weights vanish.
double ess_of_weights(std::span<const double> weights);

/// Same diagnostic computed from log-weights, shift-invariant.
double ess_of_log_weights(std::span<const double> log_weights);

}  // namespace amis

#endif  // AMIS_LINALG_HPP
