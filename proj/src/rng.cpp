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

#include "amis/rng.hpp"

#include <cmath>

#include "amis/errors.hpp"

namespace amis {

double Rng::uniform() {
  // 53-bit mantissa; reject 0 so log(u) and log(u/(1-u)) stay finite.
  for (;;) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    if (u > 0.0) return u;
  }
}

double Rng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  cached_normal_ = r * std::sin(theta);
  has_cached_normal_ = true;
  return r * std::cos(theta);
}

double Rng::chi_squared(int dof) {
  if (dof < 1) throw ArgumentError("chi_squared: dof must be >= 1");
  double s = 0.0;
  for (int i = 0; i < dof; ++i) {
    const double z = normal();
    s += z * z;
  }
  return s;
}

double Rng::logistic() {
  const double u = uniform();
  return std::log(u / (1.0 - u));
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
  std::uint64_t s = mix64(master);
  s = mix64(s ^ mix64(a + 0x1ULL));
  s = mix64(s ^ mix64(b + 0x2ULL));
  s = mix64(s ^ mix64(c + 0x3ULL));
  return s;
}

}  // namespace amis
