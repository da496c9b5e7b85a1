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

#include "amis/targets.hpp"

#include <cmath>
#include <utility>

#include "amis/errors.hpp"

namespace amis {

namespace {
constexpr double kLog2Pi = 1.8378770664093454836;

void check_banana(const BananaParams& params) {
  if (params.p < 2) throw ArgumentError("banana: dimension must be at least 2");
  if (!(params.sigma2 > 0.0)) throw ArgumentError("banana: sigma2 must be positive");
}
}  // namespace

double banana_logpdf(const Vector& y, const BananaParams& params) {
  check_banana(params);
  if (y.size() != params.p) throw ArgumentError("banana_logpdf: dimension mismatch");
  // Gaussian log density at the twisted point; the twist has unit Jacobian.
  const double t1 = y[0];
  const double t2 = y[1] + params.b * (y[0] * y[0] - params.sigma2);
  double q = t1 * t1 / params.sigma2 + t2 * t2;
  for (std::size_t j = 2; j < y.size(); ++j) q += y[j] * y[j];
  const double p = static_cast<double>(params.p);
  return -0.5 * p * kLog2Pi - 0.5 * std::log(params.sigma2) - 0.5 * q;
}

Moments banana_true_moments(const BananaParams& params) {
  check_banana(params);
  Moments m;
  m.mean.assign(params.p, 0.0);
  m.variance.assign(params.p, 1.0);
  m.variance[0] = params.sigma2;
  // y2 = x2 - b (x1^2 - sigma2) with x1 ~ N(0, sigma2):
  // V(y2) = 1 + b^2 Var(x1^2) = 1 + 2 b^2 sigma2^2.
  m.variance[1] = 1.0 + 2.0 * params.b * params.b * params.sigma2 * params.sigma2;
  return m;
}

std::vector<Vector> banana_generative_sample(const BananaParams& params, std::size_t n,
                                             Rng& rng) {
  check_banana(params);
  const double sigma = std::sqrt(params.sigma2);
  std::vector<Vector> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector y(params.p);
    for (std::size_t j = 0; j < params.p; ++j) y[j] = rng.normal();
    y[0] *= sigma;
    y[1] -= params.b * (y[0] * y[0] - params.sigma2);
    out[i] = std::move(y);
  }
  return out;
}

BananaTarget::BananaTarget(BananaParams params) : params_(params) { check_banana(params_); }

GaussianTarget::GaussianTarget(Vector mean, SpdMatrix cov)
    : mean_(std::move(mean)), cov_(std::move(cov)) {
  if (mean_.size() != cov_.dim()) {
    throw ArgumentError("GaussianTarget: mean/cov dimension mismatch");
  }
}

std::optional<Moments> GaussianTarget::known_moments() const {
  Moments m;
  m.mean = mean_;
  m.variance.resize(mean_.size());
  for (std::size_t j = 0; j < mean_.size(); ++j) m.variance[j] = cov_.dense()(j, j);
  return m;
}

LogisticProductTarget::LogisticProductTarget(LogisticProductParams params)
    : params_(std::move(params)) {}

std::optional<Moments> LogisticProductTarget::known_moments() const {
  Moments m;
  m.mean.assign(params_.dim(), 0.0);
  m.variance.resize(params_.dim());
  const double unit_var = M_PI * M_PI / 3.0;
  for (std::size_t j = 0; j < params_.dim(); ++j) {
    m.variance[j] = unit_var * params_.scales[j] * params_.scales[j];
  }
  return m;
}

DiscreteTarget::DiscreteTarget(DiscretePmfParams pmf) : pmf_(std::move(pmf)) {}

std::optional<Moments> DiscreteTarget::known_moments() const {
  const std::size_t p = pmf_.dim();
  Moments m;
  m.mean.assign(p, 0.0);
  m.variance.assign(p, 0.0);
  for (std::size_t i = 0; i < pmf_.points.size(); ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      m.mean[j] += pmf_.probabilities[i] * pmf_.points[i][j];
    }
  }
  for (std::size_t i = 0; i < pmf_.points.size(); ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      const double d = pmf_.points[i][j] - m.mean[j];
      m.variance[j] += pmf_.probabilities[i] * d * d;
    }
  }
  return m;
}

DiscreteTarget discrete_target(std::vector<Vector> points,
                               std::vector<double> probabilities) {
  return DiscreteTarget(DiscretePmfParams(std::move(points), std::move(probabilities)));
}

ScaledTarget::ScaledTarget(std::shared_ptr<const TargetDensity> base, double scale)
    : base_(std::move(base)), log_scale_(std::log(scale)) {
  if (!base_) throw ArgumentError("ScaledTarget: null base target");
  if (!(scale > 0.0)) throw ArgumentError("ScaledTarget: scale must be positive");
}

}  // namespace amis
