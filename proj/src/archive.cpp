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

#include "amis/archive.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "amis/errors.hpp"

namespace amis {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ParticleArchive::ParticleArchive(std::size_t dim, WeightMode mode)
    : dim_(dim), mode_(mode) {
  if (dim == 0) throw ArgumentError("ParticleArchive: dimension must be positive");
}

void ParticleArchive::add_batch(const std::vector<Vector>& points,
                                const std::vector<double>& log_pi,
                                const ProposalRecord& record) {
  if (record.batch_size < 1) throw ArgumentError("add_batch: batch size must be >= 1");
  if (points.size() != record.batch_size) {
    throw ArgumentError("add_batch: point count does not match the record's batch size");
  }
  if (log_pi.size() != points.size()) {
    throw ArgumentError("add_batch: log_pi count does not match point count");
  }
  if (record.generation != static_cast<int>(records_.size())) {
    throw ArgumentError("add_batch: generation indices must be consecutive from 0");
  }
  if (proposal_dim(record.proposal) != dim_) {
    throw ArgumentError("add_batch: proposal dimension mismatch");
  }
  for (const Vector& y : points) {
    if (y.size() != dim_) throw ArgumentError("add_batch: point dimension mismatch");
  }
  for (double lp : log_pi) {
    if (std::isnan(lp) || lp == kInf) {
      throw ArgumentError("add_batch: log_pi must be finite or -inf");
    }
  }

  const double log_nt = std::log(static_cast<double>(record.batch_size));

  if (mode_ == WeightMode::deterministic_mixture) {
    // Fold the new proposal into every past particle's accumulator.
    for (Particle& particle : particles_) {
      const double lq = proposal_logpdf(record.proposal, particle.y);
      particle.log_delta = log_add_exp(particle.log_delta, log_nt + lq);
    }
  }

  records_.push_back(record);

  std::vector<double> terms(records_.size());
  particles_.reserve(particles_.size() + points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    Particle particle;
    particle.y = points[i];
    particle.log_pi = log_pi[i];
    particle.generation = record.generation;
    particle.log_q_own = proposal_logpdf(record.proposal, particle.y);
    if (mode_ == WeightMode::deterministic_mixture) {
      for (std::size_t l = 0; l < records_.size(); ++l) {
        const double lq = (l + 1 == records_.size())
                              ? particle.log_q_own
                              : proposal_logpdf(records_[l].proposal, particle.y);
        terms[l] = std::log(static_cast<double>(records_[l].batch_size)) + lq;
      }
      particle.log_delta = log_sum_exp(terms);
    } else {
      particle.log_delta = log_nt + particle.log_q_own;
    }
    particles_.push_back(std::move(particle));
  }
  log_total_count_ = std::log(static_cast<double>(particles_.size()));
}

std::vector<double> ParticleArchive::log_weights() const {
  std::vector<double> lw(particles_.size());
  const bool single_mixture =
      mode_ == WeightMode::classical || records_.size() == 1;
  for (std::size_t i = 0; i < particles_.size(); ++i) {
    const Particle& particle = particles_[i];
    if (particle.log_pi == -kInf) {
      lw[i] = -kInf;
    } else if (single_mixture) {
      // A mixture of one proposal (and the classical rule in general)
      // reduces to the plain ratio pi / q_own.
      lw[i] = particle.log_pi - particle.log_q_own;
    } else {
      lw[i] = particle.log_pi - particle.log_delta + log_total_count_;
    }
  }
  return lw;
}

WeightVector ParticleArchive::normalized_weights() const {
  if (particles_.empty()) throw ArgumentError("normalized_weights: empty archive");
  const std::vector<double> lw = log_weights();
  double m = -kInf;
  for (double v : lw) m = std::max(m, v);
  if (m == -kInf) {
    throw DegenerateSampleError(
        "normalized_weights: every particle has zero weight; the proposals "
        "missed the target support");
  }
  WeightVector snapshot;
  snapshot.unnormalized.resize(lw.size());
  snapshot.normalized.resize(lw.size());
  double total_shifted = 0.0;
  for (std::size_t i = 0; i < lw.size(); ++i) {
    snapshot.unnormalized[i] = lw[i] == -kInf ? 0.0 : std::exp(lw[i]);
    total_shifted += lw[i] == -kInf ? 0.0 : std::exp(lw[i] - m);
  }
  snapshot.total = std::exp(m) * total_shifted;
  for (std::size_t i = 0; i < lw.size(); ++i) {
    snapshot.normalized[i] = lw[i] == -kInf ? 0.0 : std::exp(lw[i] - m) / total_shifted;
  }
  return snapshot;
}

Vector ParticleArchive::estimate(const std::function<Vector(const Vector&)>& h) const {
  const WeightVector w = normalized_weights();
  Vector acc;
  for (std::size_t i = 0; i < particles_.size(); ++i) {
    if (w.normalized[i] == 0.0 && !acc.empty()) continue;
    const Vector hv = h(particles_[i].y);
    if (acc.empty()) acc.assign(hv.size(), 0.0);
    if (hv.size() != acc.size()) throw ArgumentError("estimate: h output size changed");
    for (std::size_t j = 0; j < hv.size(); ++j) acc[j] += w.normalized[i] * hv[j];
  }
  return acc;
}

double ParticleArchive::estimate_scalar(
    const std::function<double(const Vector&)>& h) const {
  const WeightVector w = normalized_weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < particles_.size(); ++i) {
    acc += w.normalized[i] * h(particles_[i].y);
  }
  return acc;
}

ParticleArchive::MomentEstimate ParticleArchive::moment_estimate() const {
  const WeightVector w = normalized_weights();
  MomentEstimate est;
  est.mean.assign(dim_, 0.0);
  est.variance.assign(dim_, 0.0);
  for (std::size_t i = 0; i < particles_.size(); ++i) {
    const double wi = w.normalized[i];
    if (wi == 0.0) continue;
    const Vector& y = particles_[i].y;
    for (std::size_t j = 0; j < dim_; ++j) {
      est.mean[j] += wi * y[j];
      est.variance[j] += wi * y[j] * y[j];
    }
  }
  for (std::size_t j = 0; j < dim_; ++j) {
    est.variance[j] -= est.mean[j] * est.mean[j];
  }
  return est;
}

double ParticleArchive::ess() const {
  if (particles_.empty()) throw ArgumentError("ess: empty archive");
  const std::vector<double> lw = log_weights();
  const double value = ess_of_log_weights(lw);
  if (value <= 0.0) {
    throw DegenerateSampleError("ess: every particle has zero weight");
  }
  return value;
}

void ParticleArchive::write_csv(std::ostream& out) const {
  out << "generation";
  for (std::size_t j = 0; j < dim_; ++j) out << ",y" << (j + 1);
  out << ",log_pi,log_delta,weight\n";
  const WeightVector w = normalized_weights();
  char buf[32];
  const auto put = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf;
  };
  for (std::size_t i = 0; i < particles_.size(); ++i) {
    const Particle& particle = particles_[i];
    out << particle.generation;
    for (std::size_t j = 0; j < dim_; ++j) {
      out << ',';
      put(particle.y[j]);
    }
    out << ',';
    put(particle.log_pi);
    out << ',';
    put(mode_ == WeightMode::classical ? particle.log_q_own : particle.log_delta);
    out << ',';
    put(w.normalized[i]);
    out << '\n';
  }
}

}  // namespace amis
