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

#include <stdexcept>
#include <string>

namespace gablab {

/// Input and precondition failures. Each kind is distinct so callers (and
/// the CLI exit-code logic) can tell them apart without parsing messages.
enum class Errc {
  empty_moduli,
  nonpositive_modulus,
  order_cap_exceeded,
  side_mismatch,
  arity_mismatch,
  foreign_element,
  group_mismatch,
  size_mismatch,
  not_in_lattice,
  nonpositive_weight,
  nonpositive_theta,
  invalid_theta_grid,
  not_hermitian,
  not_orthonormal,
  not_a_frame,
  not_parseval,
  not_tight,
  not_critically_sampled,
  residual_exceeded,
  empty_family,
  no_convergence,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gablab
