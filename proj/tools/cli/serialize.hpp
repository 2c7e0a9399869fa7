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

// JSON and CSV encodings of the library's result types. Doubles go through
// nlohmann::json, which prints the shortest decimal that round-trips.

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "gablab/density.hpp"
#include "gablab/rdual.hpp"
#include "gablab/spectral.hpp"

namespace gablab::cli {

using json = nlohmann::ordered_json;

/// Shortest round-trip decimal for a finite double.
[[nodiscard]] std::string format_double(double v);

/// SHA-256 (hex) of the row-major little-endian float64 stream re, im, re, im, ...
[[nodiscard]] std::string matrix_sha256(const CMatrix& m);

[[nodiscard]] json to_json(const Rational& r);
[[nodiscard]] json to_json(const Elem& e);
[[nodiscard]] json to_json(const Subgroup& s);
[[nodiscard]] json to_json(const CMatrix& m);
[[nodiscard]] json to_json(const SpectralReport& r);
[[nodiscard]] json to_json(const DualityVerdict& v);
[[nodiscard]] json to_json(const TightnessVerdict& v);
[[nodiscard]] json to_json(const ExcessDeficit& e);
[[nodiscard]] json to_json(const CriticalRDualReport& r);
[[nodiscard]] json to_json(const OrthonormalBasis& b, bool hashes_only);
[[nodiscard]] json to_json(const RDualWitness& w, bool hashes_only);
[[nodiscard]] json to_json(const LatticeSize& s);
[[nodiscard]] json to_json(const ThetaSweep& s);
[[nodiscard]] json to_json(const CompletenessVerdict& v);

inline constexpr const char* kSweepCsvHeader = "theta,inner_product,psi,bound_1_over_d,identity_defect";

/// One CSV row per theta, no header.
void write_sweep_rows(std::ostream& os, const ThetaSweep& s);

}  // namespace gablab::cli
