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

#ifndef AMIS_ADAPTATION_HPP
#define AMIS_ADAPTATION_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "amis/distributions.hpp"
#include "amis/linalg.hpp"
#include "amis/rng.hpp"

namespace amis {

struct EmOptions {
  int max_iterations = 200;
  /// Stop when the weighted log-likelihood improves by less than this.
  double tolerance = 1e-6;
  /// Extra random initializations; the best final likelihood wins.
  int restarts = 2;
  /// Diagonal floor added to covariance estimates. Negative means
  /// automatic: 1e-8 * trace(global weighted covariance) / dim.
  double ridge_floor = -1.0;
};

struct EmFit {
  GaussianMixtureParams params;
  double log_likelihood;
  int iterations;
  bool converged;
  /// Weighted log-likelihood after each iteration of the winning start;
  /// non-decreasing (restarted if a component had to be dropped).
  std::vector<double> log_likelihood_trace;
  int dropped_components = 0;
};

/// Weighted first and second moments: mean sum w_i y_i and covariance
/// sum w_i (y_i - mean)(y_i - mean)', with the degrees of freedom fixed
/// at 3. Weights must be normalized. Requires at least two distinct
/// points with positive weight.
StudentTParams moment_match(const std::vector<Vector>& points,
                            const std::vector<double>& normalized_weights);

/// sum_i w_i log q(y_i; params) for a Gaussian mixture.
double weighted_log_likelihood(const std::vector<Vector>& points,
                               const std::vector<double>& normalized_weights,
                               const GaussianMixtureParams& params);

/// EM for a k-component Gaussian mixture under importance weights:
/// responsibilities r_ij proportional to rho_j phi(y_i; mu_j, Sigma_j),
/// then rho_j = sum_i w_i r_ij and weighted means/covariances. Requires
/// the weight ESS to be at least 5k. Components whose weight or
/// covariance collapses are dropped and the fit continues with fewer.
EmFit weighted_em(const std::vector<Vector>& points,
                  const std::vector<double>& normalized_weights, std::size_t k,
                  const EmOptions& options, Rng& rng);

/// Fits every k in [k_min, k_max] and keeps the one with the highest ICL
/// score: n_eff * sum_i w_i log(rho_z(i) phi_z(i)(y_i)) minus
/// (nu_k / 2) log(n_eff), with z the MAP component assignment, nu_k the
/// free-parameter count, and n_eff the weight ESS standing in for the
/// sample size. Ties go to the smaller k.
std::pair<std::size_t, EmFit> icl_select(const std::vector<Vector>& points,
                                         const std::vector<double>& normalized_weights,
                                         std::size_t k_min, std::size_t k_max,
                                         const EmOptions& options, Rng& rng);

/// The ICL score of a given fit (exposed for inspection and tests).
double icl_score(const std::vector<Vector>& points,
                 const std::vector<double>& normalized_weights,
                 const GaussianMixtureParams& params);

}  // namespace amis

#endif  // AMIS_ADAPTATION_HPP
