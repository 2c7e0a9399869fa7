/*
 * Copyright 2026 The gablab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "gablab/group.hpp"

namespace gablab {

/// xorshift64* (Vigna), seeded through one splitmix64 step so that every
/// seed, including 0, yields a nonzero state. Constants are part of the
/// reproducibility contract for "random" windows:
///   splitmix64: z += 0x9E3779B97F4A7C15; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
///               z = (z ^ z>>27) * 0x94D049BB133111EB; z ^= z>>31
///   step:       s ^= s>>12; s ^= s<<25; s ^= s>>27; out = s * 0x2545F4914F6CDD1D
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;
  /// Uniform on [0, 1) from the top 53 bits.
  double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform on [-1, 1).
  double symmetric() noexcept { return 2.0 * unit() - 1.0; }
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi) noexcept;

 private:
  std::uint64_t state_;
};

/// Length-n vector with re/im parts drawn (in that order) from symmetric().
[[nodiscard]] Eigen::VectorXcd random_complex_vector(int n, Xorshift64Star& rng);

/// Product of n Householder reflectors I - 2 v v^H / (v^H v) with random v.
[[nodiscard]] Eigen::MatrixXcd random_unitary(int n, Xorshift64Star& rng);

}  // namespace gablab
