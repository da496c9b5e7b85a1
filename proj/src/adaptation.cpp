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

#include "amis/adaptation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#include "amis/errors.hpp"

namespace amis {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLog2Pi = 1.8378770664093454836;
constexpr double kComponentWeightFloor = 1e-10;

void check_weighted_input(const std::vector<Vector>& points,
                          const std::vector<double>& weights) {
  if (points.empty()) throw ArgumentError("weighted fit: no points");
  if (points.size() != weights.size()) {
    throw ArgumentError("weighted fit: point/weight count mismatch");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw ArgumentError("weighted fit: weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-8) {
    throw ArgumentError("weighted fit: weights must be normalized");
  }
  const std::size_t p = points.front().size();
  for (const Vector& y : points) {
    if (y.size() != p) throw ArgumentError("weighted fit: point dimension mismatch");
  }
}

Vector weighted_mean(const std::vector<Vector>& points, const std::vector<double>& w) {
  const std::size_t p = points.front().size();
  Vector mean(p, 0.0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < p; ++j) mean[j] += w[i] * points[i][j];
  }
  return mean;
}

Matrix weighted_covariance(const std::vector<Vector>& points,
                           const std::vector<double>& w, const Vector& mean) {
  const std::size_t p = mean.size();
  Matrix cov(p, p);
  Vector d(p);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (w[i] == 0.0) continue;
    for (std::size_t j = 0; j < p; ++j) d[j] = points[i][j] - mean[j];
    for (std::size_t a = 0; a < p; ++a) {
      const double wa = w[i] * d[a];
      for (std::size_t b = a; b < p; ++b) cov(a, b) += wa * d[b];
    }
  }
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < a; ++b) cov(a, b) = cov(b, a);
  }
  return cov;
}

// Log density of one Gaussian component from precomputed Cholesky pieces,
// tight loop form used by the E-step.
struct ComponentEval {
  const SpdMatrix* cov;
  Vector mean;
  double log_norm;  // log rho - p/2 log 2pi - 1/2 log|Sigma|
};

double component_logpdf(const ComponentEval& comp, const Vector& y, Vector& scratch) {
  const std::size_t p = y.size();
  for (std::size_t j = 0; j < p; ++j) scratch[j] = y[j] - comp.mean[j];
  const Matrix& l = comp.cov->cholesky();
  double q = 0.0;
  for (std::size_t i = 0; i < p; ++i) {
    double s = scratch[i];
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * scratch[k];
    scratch[i] = s / l(i, i);
    q += scratch[i] * scratch[i];
  }
  return comp.log_norm - 0.5 * q;
}

// Weighted k-means++ seeding: means drawn by weight, then by weight times
// squared distance to the nearest chosen mean.
std::vector<Vector> seed_means(const std::vector<Vector>& points,
                               const std::vector<double>& w, std::size_t k, Rng& rng) {
  const std::size_t n = points.size();
  std::vector<Vector> centers;
  centers.reserve(k);
  const auto draw_index = [&](const std::vector<double>& prob, double total) {
    const double u = rng.uniform() * total;
    double cum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cum += prob[i];
      if (u <= cum) return i;
    }
    return n - 1;
  };
  double wtotal = std::accumulate(w.begin(), w.end(), 0.0);
  centers.push_back(points[draw_index(w, wtotal)]);
  std::vector<double> d2(n, kInf);
  std::vector<double> prob(n);
  while (centers.size() < k) {
    const Vector& c = centers.back();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double dist = 0.0;
      for (std::size_t j = 0; j < c.size(); ++j) {
        const double diff = points[i][j] - c[j];
        dist += diff * diff;
      }
      d2[i] = std::min(d2[i], dist);
      prob[i] = w[i] * d2[i];
      total += prob[i];
    }
    if (total <= 0.0) {
      centers.push_back(points[draw_index(w, wtotal)]);
    } else {
      centers.push_back(points[draw_index(prob, total)]);
    }
  }
  return centers;
}

struct EmState {
  std::vector<double> rho;
  std::vector<Vector> means;
  std::vector<SpdMatrix> covs;
};

GaussianMixtureParams to_params(const EmState& state) {
  std::vector<double> rho = state.rho;
  double total = std::accumulate(rho.begin(), rho.end(), 0.0);
  for (double& r : rho) r /= total;
  return GaussianMixtureParams(rho, state.means, state.covs);
}

}  // namespace

StudentTParams moment_match(const std::vector<Vector>& points,
                            const std::vector<double>& normalized_weights) {
  check_weighted_input(points, normalized_weights);
  const std::size_t p = points.front().size();
  std::size_t support = 0;
  const Vector* first_support = nullptr;
  bool distinct = false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (normalized_weights[i] > 0.0) {
      ++support;
      if (!first_support) {
        first_support = &points[i];
      } else if (points[i] != *first_support) {
        distinct = true;
      }
    }
  }
  if (support < 2 || !distinct) {
    throw DegenerateCovarianceError(
        "moment_match: fewer than two distinct points carry weight");
  }
  Vector mean = weighted_mean(points, normalized_weights);
  Matrix cov = weighted_covariance(points, normalized_weights, mean);
  return StudentTParams(std::move(mean), SpdMatrix(std::move(cov)));
}

double weighted_log_likelihood(const std::vector<Vector>& points,
                               const std::vector<double>& normalized_weights,
                               const GaussianMixtureParams& params) {
  check_weighted_input(points, normalized_weights);
  double ll = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (normalized_weights[i] == 0.0) continue;
    ll += normalized_weights[i] * logpdf_gaussian_mixture(points[i], params);
  }
  return ll;
}

EmFit weighted_em(const std::vector<Vector>& points,
                  const std::vector<double>& normalized_weights, std::size_t k,
                  const EmOptions& options, Rng& rng) {
  check_weighted_input(points, normalized_weights);
  if (k < 1) throw ArgumentError("weighted_em: k must be >= 1");
  if (options.max_iterations < 1 || !(options.tolerance > 0.0)) {
    throw ArgumentError("weighted_em: invalid options");
  }
  const std::size_t n = points.size();
  const std::size_t p = points.front().size();
  const double n_eff = ess_of_weights(normalized_weights);
  if (n_eff < 5.0 * static_cast<double>(k)) {
    throw TooFewEffectivePointsError(
        "weighted_em: weight ESS below 5k; not enough effective points");
  }

  const Vector global_mean = weighted_mean(points, normalized_weights);
  Matrix global_cov = weighted_covariance(points, normalized_weights, global_mean);
  const double ridge = options.ridge_floor >= 0.0
                           ? options.ridge_floor
                           : 1e-8 * global_cov.trace() / static_cast<double>(p);
  for (std::size_t j = 0; j < p; ++j) global_cov(j, j) += ridge;

  std::optional<EmFit> best;
  for (int start = 0; start <= std::max(0, options.restarts); ++start) {
    EmState state;
    state.means = seed_means(points, normalized_weights, k, rng);
    state.rho.assign(k, 1.0 / static_cast<double>(k));
    state.covs.assign(k, SpdMatrix(global_cov));

    std::vector<double> trace;
    int dropped = 0;
    int iterations = 0;
    bool converged = false;

    std::vector<ComponentEval> comps;
    Vector scratch(p);
    std::vector<std::vector<double>> resp;  // k x n
    std::vector<double> terms;

    double prev_ll = -kInf;
    while (iterations < options.max_iterations) {
      const std::size_t kk = state.rho.size();
      comps.clear();
      for (std::size_t j = 0; j < kk; ++j) {
        comps.push_back(ComponentEval{
            &state.covs[j], state.means[j],
            std::log(state.rho[j]) - 0.5 * static_cast<double>(p) * kLog2Pi -
                0.5 * state.covs[j].log_det()});
      }
      resp.assign(kk, std::vector<double>(n));
      terms.resize(kk);
      double ll = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (normalized_weights[i] == 0.0) {
          for (std::size_t j = 0; j < kk; ++j) resp[j][i] = 0.0;
          continue;
        }
        for (std::size_t j = 0; j < kk; ++j) {
          terms[j] = component_logpdf(comps[j], points[i], scratch);
        }
        const double lse = log_sum_exp(terms);
        ll += normalized_weights[i] * lse;
        for (std::size_t j = 0; j < kk; ++j) {
          resp[j][i] = normalized_weights[i] * std::exp(terms[j] - lse);
        }
      }
      trace.push_back(ll);
      ++iterations;
      if (ll - prev_ll < options.tolerance && iterations > 1) {
        converged = true;
        break;
      }
      prev_ll = ll;

      // M-step.
      bool structure_changed = false;
      EmState next;
      for (std::size_t j = 0; j < kk; ++j) {
        const double rj = std::accumulate(resp[j].begin(), resp[j].end(), 0.0);
        if (rj < kComponentWeightFloor) {
          ++dropped;
          structure_changed = true;
          continue;
        }
        Vector mu(p, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
          if (resp[j][i] == 0.0) continue;
          for (std::size_t d = 0; d < p; ++d) mu[d] += resp[j][i] * points[i][d];
        }
        for (std::size_t d = 0; d < p; ++d) mu[d] /= rj;
        Matrix cov(p, p);
        Vector diff(p);
        for (std::size_t i = 0; i < n; ++i) {
          if (resp[j][i] == 0.0) continue;
          for (std::size_t d = 0; d < p; ++d) diff[d] = points[i][d] - mu[d];
          for (std::size_t a = 0; a < p; ++a) {
            const double fa = resp[j][i] * diff[a];
            for (std::size_t b = a; b < p; ++b) cov(a, b) += fa * diff[b];
          }
        }
        for (std::size_t a = 0; a < p; ++a) {
          for (std::size_t b = 0; b < a; ++b) cov(a, b) = cov(b, a);
          cov(a, a) = cov(a, a) / rj + ridge;
          for (std::size_t b = a + 1; b < p; ++b) cov(a, b) /= rj;
        }
        for (std::size_t a = 0; a < p; ++a) {
          for (std::size_t b = 0; b < a; ++b) cov(a, b) = cov(b, a);
        }
        try {
          SpdMatrix cov_spd{std::move(cov)};
          next.covs.push_back(std::move(cov_spd));
          next.rho.push_back(rj);
          next.means.push_back(std::move(mu));
        } catch (const DegenerateCovarianceError&) {
          ++dropped;
          structure_changed = true;
        }
      }
      if (next.rho.empty()) {
        throw DegenerateCovarianceError("weighted_em: every component collapsed");
      }
      double rho_total = std::accumulate(next.rho.begin(), next.rho.end(), 0.0);
      for (double& r : next.rho) r /= rho_total;
      state = std::move(next);
      if (structure_changed) {
        // The model changed size; the likelihood trace restarts with it.
        trace.clear();
        prev_ll = -kInf;
      }
    }

    // Likelihood of the final parameters, so restarts compare end states.
    GaussianMixtureParams params = to_params(state);
    const double final_ll = weighted_log_likelihood(points, normalized_weights, params);
    if (trace.empty() || final_ll > trace.back()) trace.push_back(final_ll);

    if (!best || final_ll > best->log_likelihood) {
      best = EmFit{std::move(params), final_ll, iterations, converged, std::move(trace),
                   dropped};
    }
  }
  return *best;
}

double icl_score(const std::vector<Vector>& points,
                 const std::vector<double>& normalized_weights,
                 const GaussianMixtureParams& params) {
  check_weighted_input(points, normalized_weights);
  const std::size_t n = points.size();
  const std::size_t p = points.front().size();
  const std::size_t k = params.component_count();
  const double n_eff = ess_of_weights(normalized_weights);

  double complete_ll = 0.0;
  std::vector<double> terms(k);
  for (std::size_t i = 0; i < n; ++i) {
    if (normalized_weights[i] == 0.0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      terms[j] = std::log(params.weights[j]) +
                 logpdf_gaussian(points[i], params.means[j], params.covariances[j]);
    }
    complete_ll += normalized_weights[i] * *std::max_element(terms.begin(), terms.end());
  }
  const double free_params = static_cast<double>(k - 1) +
                             static_cast<double>(k * p) +
                             static_cast<double>(k * p * (p + 1)) / 2.0;
  return n_eff * complete_ll - 0.5 * free_params * std::log(n_eff);
}

std::pair<std::size_t, EmFit> icl_select(const std::vector<Vector>& points,
                                         const std::vector<double>& normalized_weights,
                                         std::size_t k_min, std::size_t k_max,
                                         const EmOptions& options, Rng& rng) {
  if (k_min < 1 || k_min > k_max) throw ArgumentError("icl_select: invalid k range");
  std::optional<std::pair<std::size_t, EmFit>> best;
  double best_score = -kInf;
  std::string last_error;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    try {
      EmFit fit = weighted_em(points, normalized_weights, k, options, rng);
      const double score = icl_score(points, normalized_weights, fit.params);
      if (!best || score > best_score) {  // strict: ties keep the smaller k
        best_score = score;
        best = {k, std::move(fit)};
      }
    } catch (const Error& e) {
      last_error = e.what();
    }
  }
  if (!best) {
    throw SelectionError("icl_select: every candidate k failed (last error: " +
                         last_error + ")");
  }
  return std::move(*best);
}

}  // namespace amis
