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

#include "gablab/random.hpp"

namespace gablab {

Xorshift64Star::Xorshift64Star(std::uint64_t seed) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  state_ = z == 0 ? 0x9E3779B97F4A7C15ULL : z;
}

std::uint64_t Xorshift64Star::next() noexcept {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

int Xorshift64Star::integer(int lo, int hi) noexcept {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(next() % span);
}

Eigen::VectorXcd random_complex_vector(int n, Xorshift64Star& rng) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) {
    const double re = rng.symmetric();
    const double im = rng.symmetric();
    v[i] = {re, im};
  }
  return v;
}

Eigen::MatrixXcd random_unitary(int n, Xorshift64Star& rng) {
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Identity(n, n);
  for (int r = 0; r < n; ++r) {
    Eigen::VectorXcd v = random_complex_vector(n, rng);
    const double vv = v.squaredNorm();
    if (vv == 0.0) continue;
    // q <- (I - 2 v v^H / vv) q
    const Eigen::RowVectorXcd w = v.adjoint() * q;
    q.noalias() -= (2.0 / vv) * v * w;
  }
  return q;
}

}  // namespace gablab
