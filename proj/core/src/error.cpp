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

#include "gablab/error.hpp"

namespace gablab {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::empty_moduli: return "empty moduli";
    case Errc::nonpositive_modulus: return "nonpositive modulus";
    case Errc::order_cap_exceeded: return "order cap exceeded";
    case Errc::side_mismatch: return "side mismatch";
    case Errc::arity_mismatch: return "arity mismatch";
    case Errc::foreign_element: return "foreign element";
    case Errc::group_mismatch: return "group mismatch";
    case Errc::size_mismatch: return "size mismatch";
    case Errc::not_in_lattice: return "element not in lattice";
    case Errc::nonpositive_weight: return "nonpositive weight";
    case Errc::nonpositive_theta: return "nonpositive theta";
    case Errc::invalid_theta_grid: return "invalid theta grid";
    case Errc::not_hermitian: return "matrix is not Hermitian";
    case Errc::not_orthonormal: return "vectors are not orthonormal";
    case Errc::not_a_frame: return "system is not a frame";
    case Errc::not_parseval: return "system is not a Parseval frame";
    case Errc::not_tight: return "system is not a tight frame";
    case Errc::not_critically_sampled: return "frequency lattice is not the annihilator";
    case Errc::residual_exceeded: return "residual exceeded tolerance";
    case Errc::empty_family: return "empty family";
    case Errc::no_convergence: return "iteration did not converge";
  }
  return "unknown error";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code) {}

}  // namespace gablab
