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

#ifndef AMIS_ARCHIVE_HPP
#define AMIS_ARCHIVE_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "amis/distributions.hpp"
#include "amis/linalg.hpp"

namespace amis {

/// How pooled particles are weighted.
///
/// deterministic_mixture: every particle is weighted as if the whole pool
/// had been drawn from the mixture (1/M) sum_l N_l q_l, so each new
/// proposal re-weights all past particles.
///
/// classical: each particle keeps pi / q of its own generation forever.
enum class WeightMode { deterministic_mixture, classical };

/// One pooled sample point.
struct Particle {
  Vector y;
  double log_pi;      // unnormalized log target at y; -inf allowed
  double log_delta;   // log sum_l N_l q_l(y), grown as proposals arrive
  double log_q_own;   // log density of the generation that drew y
  int generation;
};

/// One generation's proposal with its batch size.
struct ProposalRecord {
  Proposal proposal;
  std::size_t batch_size;
  int generation;
};

/// Materialized weight snapshot: unnormalized weights and their
/// normalized counterparts (summing to 1). Consumers read a snapshot so
/// estimates and adaptation see one consistent state.
struct WeightVector {
  std::vector<double> unnormalized;
  std::vector<double> normalized;
  double total;  // sum of unnormalized weights
};

/// The growing pooled sample behind an adaptive run: all particles ever
/// simulated, their delta accumulators, and the proposal records needed
/// to re-weight them.
class ParticleArchive {
 public:
  explicit ParticleArchive(std::size_t dim,
                           WeightMode mode = WeightMode::deterministic_mixture);

  /// Registers one generation: batch points, their log target values, and
  /// the proposal that produced them. Points of earlier generations get
  /// their delta accumulators augmented with the new proposal's
  /// N_t q_t(y) term; new points accumulate every registered proposal.
  void add_batch(const std::vector<Vector>& points, const std::vector<double>& log_pi,
                 const ProposalRecord& record);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return particles_.size(); }
  WeightMode mode() const { return mode_; }
  const std::vector<Particle>& particles() const { return particles_; }
  const std::vector<ProposalRecord>& records() const { return records_; }

  /// Per-particle log weights under the archive's weight mode.
  std::vector<double> log_weights() const;

  /// Normalized weight snapshot; DegenerateSampleError when every weight
  /// is zero.
  WeightVector normalized_weights() const;

  /// Self-normalized estimate of E[h(y)].
  Vector estimate(const std::function<Vector(const Vector&)>& h) const;
  double estimate_scalar(const std::function<double(const Vector&)>& h) const;

  /// Weighted mean and variance of each coordinate (variance as
  /// E[y^2] - E[y]^2 under the normalized weights).
  struct MomentEstimate {
    Vector mean;
    Vector variance;
  };
  MomentEstimate moment_estimate() const;

  /// Effective sample size (sum w)^2 / sum w^2, in [1, size()].
  double ess() const;

  /// One row per particle: generation, y components, log_pi, log_delta
  /// (log q_own in classical mode), normalized weight.
  void write_csv(std::ostream& out) const;

 private:
  std::size_t dim_;
  WeightMode mode_;
  std::vector<Particle> particles_;
  std::vector<ProposalRecord> records_;
  double log_total_count_ = 0.0;  // log M, kept in step with particles_
};

}  // namespace amis

#endif  // AMIS_ARCHIVE_HPP
