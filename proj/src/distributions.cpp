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

#include "amis/distributions.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "amis/errors.hpp"

namespace amis {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLog2Pi = 1.8378770664093454836;

void check_dim(std::size_t got, std::size_t want, const char* where) {
  if (got != want) throw ArgumentError(std::string(where) + ": dimension mismatch");
}
}  // namespace

StudentTParams::StudentTParams(Vector mean_in, SpdMatrix scale_in)
    : mean(std::move(mean_in)), scale(std::move(scale_in)) {
  if (mean.size() != scale.dim()) {
    throw ArgumentError("StudentTParams: mean/scale dimension mismatch");
  }
}

GaussianMixtureParams::GaussianMixtureParams(std::vector<double> weights_in,
                                             std::vector<Vector> means_in,
                                             std::vector<SpdMatrix> covariances_in)
    : weights(std::move(weights_in)),
      means(std::move(means_in)),
      covariances(std::move(covariances_in)) {
  if (weights.empty() || weights.size() != means.size() ||
      weights.size() != covariances.size()) {
    throw ArgumentError("GaussianMixtureParams: inconsistent component counts");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw ArgumentError("GaussianMixtureParams: weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ArgumentError("GaussianMixtureParams: weights must sum to 1");
  }
  const std::size_t p = means.front().size();
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (means[j].size() != p || covariances[j].dim() != p) {
      throw ArgumentError("GaussianMixtureParams: component dimension mismatch");
    }
  }
}

LogisticProductParams::LogisticProductParams(Vector scales_in)
    : scales(std::move(scales_in)) {
  if (scales.empty()) throw ArgumentError("LogisticProductParams: empty scales");
  for (double s : scales) {
    if (!(s > 0.0)) throw ArgumentError("LogisticProductParams: scales must be positive");
  }
}

DiscretePmfParams::DiscretePmfParams(std::vector<Vector> points_in,
                                     std::vector<double> probabilities_in)
    : points(std::move(points_in)), probabilities(std::move(probabilities_in)) {
  if (points.empty() || points.size() != probabilities.size()) {
    throw ArgumentError("DiscretePmfParams: inconsistent sizes");
  }
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p > 0.0)) throw ArgumentError("DiscretePmfParams: probabilities must be positive");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ArgumentError("DiscretePmfParams: probabilities must sum to 1");
  }
  const std::size_t p = points.front().size();
  for (const Vector& pt : points) {
    if (pt.size() != p) throw ArgumentError("DiscretePmfParams: point dimension mismatch");
  }
}

double logpdf_gaussian(const Vector& y, const Vector& mean, const SpdMatrix& cov) {
  check_dim(y.size(), mean.size(), "logpdf_gaussian");
  check_dim(y.size(), cov.dim(), "logpdf_gaussian");
  const double p = static_cast<double>(y.size());
  return -0.5 * p * kLog2Pi - 0.5 * cov.log_det() - 0.5 * cov.quad_form(y, mean);
}

double logpdf_student_t3(const Vector& y, const StudentTParams& params) {
  check_dim(y.size(), params.dim(), "logpdf_student_t3");
  const double p = static_cast<double>(y.size());
  const double nu = StudentTParams::kDof;
  const double q = params.scale.quad_form(y, params.mean);
  return std::lgamma(0.5 * (nu + p)) - std::lgamma(0.5 * nu) -
         0.5 * p * std::log(nu * M_PI) - 0.5 * params.scale.log_det() -
         0.5 * (nu + p) * std::log1p(q / nu);
}

double logpdf_gaussian_mixture(const Vector& y, const GaussianMixtureParams& params) {
  check_dim(y.size(), params.dim(), "logpdf_gaussian_mixture");
  std::vector<double> terms(params.component_count());
  for (std::size_t j = 0; j < terms.size(); ++j) {
    terms[j] = std::log(params.weights[j]) +
               logpdf_gaussian(y, params.means[j], params.covariances[j]);
  }
  return log_sum_exp(terms);
}

double logpdf_logistic_product(const Vector& y, const LogisticProductParams& params) {
  check_dim(y.size(), params.dim(), "logpdf_logistic_product");
  double lp = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double z = std::abs(y[j] / params.scales[j]);
    // z - 2 log(1 + e^z) rewritten to avoid overflow for |z| large.
    lp += -z - 2.0 * std::log1p(std::exp(-z)) - std::log(params.scales[j]);
  }
  return lp;
}

double logpmf_discrete(const Vector& y, const DiscretePmfParams& params) {
  check_dim(y.size(), params.dim(), "logpmf_discrete");
  for (std::size_t i = 0; i < params.points.size(); ++i) {
    if (params.points[i] == y) return std::log(params.probabilities[i]);
  }
  return -kInf;
}

std::vector<Vector> sample_gaussian(const Vector& mean, const SpdMatrix& cov,
                                    std::size_t n, Rng& rng) {
  check_dim(mean.size(), cov.dim(), "sample_gaussian");
  const std::size_t p = mean.size();
  std::vector<Vector> out(n);
  Vector z(p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) z[j] = rng.normal();
    Vector y = cov.unit_to_correlated(z);
    for (std::size_t j = 0; j < p; ++j) y[j] += mean[j];
    out[i] = std::move(y);
  }
  return out;
}

std::vector<Vector> sample_student_t3(const StudentTParams& params, std::size_t n,
                                      Rng& rng) {
  // Gaussian draw rescaled by an independent chi-square mixing variable.
  const std::size_t p = params.dim();
  const double nu = StudentTParams::kDof;
  std::vector<Vector> out(n);
  Vector z(p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) z[j] = rng.normal();
    const double w = rng.chi_squared(static_cast<int>(nu));
    const double scale = std::sqrt(nu / w);
    Vector y = params.scale.unit_to_correlated(z);
    for (std::size_t j = 0; j < p; ++j) y[j] = params.mean[j] + scale * y[j];
    out[i] = std::move(y);
  }
  return out;
}

std::vector<Vector> sample_gaussian_mixture(const GaussianMixtureParams& params,
                                            std::size_t n, Rng& rng) {
  const std::size_t p = params.dim();
  std::vector<Vector> out(n);
  Vector z(p);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform();
    std::size_t comp = params.component_count() - 1;
    double cum = 0.0;
    for (std::size_t j = 0; j < params.component_count(); ++j) {
      cum += params.weights[j];
      if (u <= cum) {
        comp = j;
        break;
      }
    }
    for (std::size_t j = 0; j < p; ++j) z[j] = rng.normal();
    Vector y = params.covariances[comp].unit_to_correlated(z);
    for (std::size_t j = 0; j < p; ++j) y[j] += params.means[comp][j];
    out[i] = std::move(y);
  }
  return out;
}

std::vector<Vector> sample_logistic_product(const LogisticProductParams& params,
                                            std::size_t n, Rng& rng) {
  const std::size_t p = params.dim();
  std::vector<Vector> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector y(p);
    for (std::size_t j = 0; j < p; ++j) y[j] = params.scales[j] * rng.logistic();
    out[i] = std::move(y);
  }
  return out;
}

std::vector<Vector> sample_discrete(const DiscretePmfParams& params, std::size_t n,
                                    Rng& rng) {
  std::vector<Vector> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform();
    std::size_t idx = params.points.size() - 1;
    double cum = 0.0;
    for (std::size_t j = 0; j < params.points.size(); ++j) {
      cum += params.probabilities[j];
      if (u <= cum) {
        idx = j;
        break;
      }
    }
    out[i] = params.points[idx];
  }
  return out;
}

double proposal_logpdf(const Proposal& proposal, const Vector& y) {
  return std::visit(
      [&y](const auto& params) -> double {
        using T = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<T, LogisticProductParams>) {
          return logpdf_logistic_product(y, params);
        } else if constexpr (std::is_same_v<T, StudentTParams>) {
          return logpdf_student_t3(y, params);
        } else if constexpr (std::is_same_v<T, GaussianMixtureParams>) {
          return logpdf_gaussian_mixture(y, params);
        } else {
          return logpmf_discrete(y, params);
        }
      },
      proposal);
}

std::vector<Vector> proposal_sample(const Proposal& proposal, std::size_t n, Rng& rng) {
  return std::visit(
      [n, &rng](const auto& params) -> std::vector<Vector> {
        using T = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<T, LogisticProductParams>) {
          return sample_logistic_product(params, n, rng);
        } else if constexpr (std::is_same_v<T, StudentTParams>) {
          return sample_student_t3(params, n, rng);
        } else if constexpr (std::is_same_v<T, GaussianMixtureParams>) {
          return sample_gaussian_mixture(params, n, rng);
        } else {
          return sample_discrete(params, n, rng);
        }
      },
      proposal);
}

std::size_t proposal_dim(const Proposal& proposal) {
  return std::visit([](const auto& params) { return params.dim(); }, proposal);
}

}  // namespace amis
