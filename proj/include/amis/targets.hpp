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

#ifndef AMIS_TARGETS_HPP
#define AMIS_TARGETS_HPP

#include <memory>
#include <optional>

#include "amis/distributions.hpp"
#include "amis/linalg.hpp"

namespace amis {

/// Exact first and second marginal moments, for targets that know them.
struct Moments {
  Vector mean;
  Vector variance;
};

/// Unnormalized target density on R^p. Estimators are self-normalized
/// throughout, so implementations never need a normalizing constant.
/// log_density may return -inf outside the support.
class TargetDensity {
 public:
  virtual ~TargetDensity() = default;
  virtual std::size_t dim() const = 0;
  virtual double log_density(const Vector& y) const = 0;
  /// Exact moments when available (benchmark targets).
  virtual std::optional<Moments> known_moments() const { return std::nullopt; }
  /// A sampling distribution to use as the run's initial proposal, for
  /// targets that come with one (e.g. a Bayesian prior). Benchmark
  /// targets return nothing.
  virtual std::optional<Proposal> prior() const { return std::nullopt; }
};

/// Twisted-Gaussian benchmark: N(0, diag(sigma2, 1, ..., 1)) with the
/// second coordinate shifted by b (y1^2 - sigma2). The twist has unit
/// Jacobian, zero mean, and uncorrelated components with known marginal
/// variances, so estimator error is measurable exactly.
struct BananaParams {
  std::size_t p;
  double sigma2;
  double b;
};

double banana_logpdf(const Vector& y, const BananaParams& params);

/// mean = 0, variance = (sigma2, 1 + 2 b^2 sigma2^2, 1, ..., 1).
Moments banana_true_moments(const BananaParams& params);

/// Draws exact banana variates through the generative transform
/// (x from the untwisted Gaussian, then y2 = x2 - b (x1^2 - sigma2)).
std::vector<Vector> banana_generative_sample(const BananaParams& params, std::size_t n,
                                             Rng& rng);

class BananaTarget final : public TargetDensity {
 public:
  explicit BananaTarget(BananaParams params);
  std::size_t dim() const override { return params_.p; }
  double log_density(const Vector& y) const override { return banana_logpdf(y, params_); }
  std::optional<Moments> known_moments() const override {
    return banana_true_moments(params_);
  }
  const BananaParams& params() const { return params_; }

 private:
  BananaParams params_;
};

/// Plain multivariate Gaussian sanity target.
class GaussianTarget final : public TargetDensity {
 public:
  GaussianTarget(Vector mean, SpdMatrix cov);
  std::size_t dim() const override { return mean_.size(); }
  double log_density(const Vector& y) const override {
    return logpdf_gaussian(y, mean_, cov_);
  }
  std::optional<Moments> known_moments() const override;

 private:
  Vector mean_;
  SpdMatrix cov_;
};

/// Product of scaled logistics as a target; proposal self-match case.
class LogisticProductTarget final : public TargetDensity {
 public:
  explicit LogisticProductTarget(LogisticProductParams params);
  std::size_t dim() const override { return params_.dim(); }
  double log_density(const Vector& y) const override {
    return logpdf_logistic_product(y, params_);
  }
  std::optional<Moments> known_moments() const override;

 private:
  LogisticProductParams params_;
};

/// Finite-support target for exact-enumeration checks.
class DiscreteTarget final : public TargetDensity {
 public:
  explicit DiscreteTarget(DiscretePmfParams pmf);
  std::size_t dim() const override { return pmf_.dim(); }
  double log_density(const Vector& y) const override { return logpmf_discrete(y, pmf_); }
  std::optional<Moments> known_moments() const override;
  const DiscretePmfParams& pmf() const { return pmf_; }

 private:
  DiscretePmfParams pmf_;
};

/// Validates the probability vector and builds a finite target.
DiscreteTarget discrete_target(std::vector<Vector> points, std::vector<double> probabilities);

/// Wraps a target with a multiplicative constant c > 0 on the
/// unnormalized density (an additive log-domain shift). Self-normalized
/// estimators do not depend on c.
class ScaledTarget final : public TargetDensity {
 public:
  ScaledTarget(std::shared_ptr<const TargetDensity> base, double scale);
  std::size_t dim() const override { return base_->dim(); }
  double log_density(const Vector& y) const override {
    return base_->log_density(y) + log_scale_;
  }
  std::optional<Moments> known_moments() const override { return base_->known_moments(); }

 private:
  std::shared_ptr<const TargetDensity> base_;
  double log_scale_;
};

}  // namespace amis

#endif  // AMIS_TARGETS_HPP
