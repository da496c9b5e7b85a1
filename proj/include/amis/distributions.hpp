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

#ifndef AMIS_DISTRIBUTIONS_HPP
#define AMIS_DISTRIBUTIONS_HPP

#include <cstddef>
#include <variant>
#include <vector>

#include "amis/linalg.hpp"
#include "amis/rng.hpp"

namespace amis {

/// Multivariate Student-t proposal parameters. The degrees of freedom are
/// fixed at 3, the smallest value with finite first moments, so only the
/// location and scale matrix adapt.
struct StudentTParams {
  Vector mean;
  SpdMatrix scale;

  static constexpr double kDof = 3.0;

  StudentTParams(Vector mean_in, SpdMatrix scale_in);
  std::size_t dim() const { return mean.size(); }
};

/// Gaussian mixture proposal parameters: component weights (positive,
/// summing to 1 within 1e-12), means, and covariances, all
/// dimension-consistent.
struct GaussianMixtureParams {
  std::vector<double> weights;
  std::vector<Vector> means;
  std::vector<SpdMatrix> covariances;

  GaussianMixtureParams(std::vector<double> weights_in, std::vector<Vector> means_in,
                        std::vector<SpdMatrix> covariances_in);
  std::size_t component_count() const { return weights.size(); }
  std::size_t dim() const { return means.front().size(); }
};

/// Product of independent scaled logistic distributions; scales are
/// strictly positive.
struct LogisticProductParams {
  Vector scales;

  explicit LogisticProductParams(Vector scales_in);
  std::size_t dim() const { return scales.size(); }
};

/// Finite point mass distribution. Used as target and proposal in the
/// exhaustive-enumeration checks, where weight identities can be verified
/// against exact sums.
struct DiscretePmfParams {
  std::vector<Vector> points;
  std::vector<double> probabilities;

  DiscretePmfParams(std::vector<Vector> points_in, std::vector<double> probabilities_in);
  std::size_t dim() const { return points.front().size(); }
};

double logpdf_gaussian(const Vector& y, const Vector& mean, const SpdMatrix& cov);
double logpdf_student_t3(const Vector& y, const StudentTParams& params);
double logpdf_gaussian_mixture(const Vector& y, const GaussianMixtureParams& params);
double logpdf_logistic_product(const Vector& y, const LogisticProductParams& params);
double logpmf_discrete(const Vector& y, const DiscretePmfParams& params);

std::vector<Vector> sample_gaussian(const Vector& mean, const SpdMatrix& cov,
                                    std::size_t n, Rng& rng);
std::vector<Vector> sample_student_t3(const StudentTParams& params, std::size_t n,
                                      Rng& rng);
std::vector<Vector> sample_gaussian_mixture(const GaussianMixtureParams& params,
                                            std::size_t n, Rng& rng);
std::vector<Vector> sample_logistic_product(const LogisticProductParams& params,
                                            std::size_t n, Rng& rng);
std::vector<Vector> sample_discrete(const DiscretePmfParams& params, std::size_t n,
                                    Rng& rng);

/// Any distribution usable as a generation's proposal.
using Proposal = std::variant<LogisticProductParams, StudentTParams,
                              GaussianMixtureParams, DiscretePmfParams>;

double proposal_logpdf(const Proposal& proposal, const Vector& y);
std::vector<Vector> proposal_sample(const Proposal& proposal, std::size_t n, Rng& rng);
std::size_t proposal_dim(const Proposal& proposal);

}  // namespace amis

#endif  // AMIS_DISTRIBUTIONS_HPP
