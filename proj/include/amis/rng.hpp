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

#ifndef AMIS_RNG_HPP
#define AMIS_RNG_HPP

#include <cstdint>
#include <random>

namespace amis {

/// Seeded generator with the handful of variate transforms the samplers
/// need. The transforms are written out here (Box-Muller, inverse CDF,
/// sums of squared normals) instead of going through <random>
/// distributions, so a seed pins the exact output stream regardless of
/// standard-library version.
///
/// One generator per task; generators are never shared between threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform on the open interval (0, 1).
  double uniform();

  /// Standard normal via Box-Muller; draws come in cached pairs.
  double normal();

  /// Chi-square with a small integer number of degrees of freedom,
  /// as a sum of squared normals.
  double chi_squared(int dof);

  /// Standard logistic via inverse CDF.
  double logistic();

 private:
  std::mt19937_64 gen_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

/// Derives a stream seed from a master seed and up to three path
/// components (replication, iteration, role). Fixed sub-seeding keeps
/// paired runs and parallel replications reproducible.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

}  // namespace amis

#endif  // AMIS_RNG_HPP
