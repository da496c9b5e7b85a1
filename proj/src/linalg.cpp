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

#include "amis/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "amis/errors.hpp"

namespace amis {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

double Matrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

namespace {

// Plain Cholesky; returns the factor unless a pivot is non-positive or
// non-finite.
std::optional<Matrix> try_cholesky(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      if (i == j) {
        if (!(s > 0.0) || !std::isfinite(s)) return std::nullopt;
        l(i, i) = std::sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  return l;
}

}  // namespace

SpdMatrix::SpdMatrix(Matrix m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw ArgumentError("SpdMatrix: matrix must be square and non-empty");
  }
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double scale = std::max({1.0, std::abs(m(i, j)), std::abs(m(j, i))});
      if (std::abs(m(i, j) - m(j, i)) > 1e-12 * scale) {
        throw ArgumentError("SpdMatrix: matrix is not symmetric");
      }
      const double avg = 0.5 * (m(i, j) + m(j, i));
      m(i, j) = avg;
      m(j, i) = avg;
    }
  }
  auto chol = try_cholesky(m);
  if (!chol) {
    const double ridge = 1e-8 * (m.trace() / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) m(i, i) += ridge;
    chol = try_cholesky(m);
    if (!chol) {
      throw DegenerateCovarianceError(
          "SpdMatrix: factorization failed even with ridge jitter");
    }
  }
  a_ = std::move(m);
  chol_ = std::move(*chol);
  log_det_ = 0.0;
  for (std::size_t i = 0; i < n; ++i) log_det_ += 2.0 * std::log(chol_(i, i));
}

SpdMatrix SpdMatrix::identity(std::size_t p) { return SpdMatrix(Matrix::identity(p)); }

SpdMatrix SpdMatrix::diagonal(const Vector& d) { return SpdMatrix(Matrix::diagonal(d)); }

Vector SpdMatrix::forward_solve(const Vector& b) const {
  const std::size_t n = dim();
  if (b.size() != n) throw ArgumentError("forward_solve: dimension mismatch");
  Vector u(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= chol_(i, k) * u[k];
    u[i] = s / chol_(i, i);
  }
  return u;
}

double SpdMatrix::quad_form(const Vector& x, const Vector& mean) const {
  const std::size_t n = dim();
  if (x.size() != n || mean.size() != n) {
    throw ArgumentError("quad_form: dimension mismatch");
  }
  Vector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = x[i] - mean[i];
  const Vector u = forward_solve(d);
  double q = 0.0;
  for (double v : u) q += v * v;
  return q;
}

Vector SpdMatrix::unit_to_correlated(const Vector& z) const {
  const std::size_t n = dim();
  if (z.size() != n) throw ArgumentError("unit_to_correlated: dimension mismatch");
  Vector out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k <= i; ++k) s += chol_(i, k) * z[k];
    out[i] = s;
  }
  return out;
}

double log_add_exp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

double log_sum_exp(std::span<const double> values) {
  double m = -kInf;
  for (double v : values) m = std::max(m, v);
  if (m == -kInf) return -kInf;
  double s = 0.0;
  for (double v : values) s += std::exp(v - m);
  return m + std::log(s);
}

double ess_of_weights(std::span<const double> weights) {
  double s = 0.0, s2 = 0.0;
  for (double w : weights) {
    s += w;
    s2 += w * w;
  }
  if (s2 <= 0.0) return 0.0;
  return s * s / s2;
}

double ess_of_log_weights(std::span<const double> log_weights) {
  double m = -kInf;
  for (double lw : log_weights) m = std::max(m, lw);
  if (m == -kInf) return 0.0;
  double s = 0.0, s2 = 0.0;
  for (double lw : log_weights) {
    const double u = std::exp(lw - m);
    s += u;
    s2 += u * u;
  }
  if (s2 <= 0.0) return 0.0;
  return s * s / s2;
}

}  // namespace amis
