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

// Experiment specs: parsing, execution over lattice pairs, report assembly.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/serialize.hpp"

namespace gablab::cli {

/// Malformed, unreadable or out-of-range input. Maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class WindowKind { random, delta, values, canonical_parseval };

struct WindowSpec {
  WindowKind kind = WindowKind::random;
  std::uint64_t seed = 0;
  std::vector<Complex> values;
};

struct LatticeSpec {
  bool all = false;
  std::vector<std::vector<int>> generators;  // residue lists
};

struct ExperimentSpec {
  std::vector<int> moduli;
  WindowSpec window;
  LatticeSpec time;
  LatticeSpec freq;
  std::vector<std::string> tasks;  // sorted, unique
  std::optional<std::vector<double>> theta_grid;
  double tol = 1e-9;
  bool hashes_only = true;
};

inline constexpr const char* kVerdictPass = "pass";
inline constexpr const char* kVerdictFail = "fail";
inline constexpr const char* kVerdictSkipped = "skipped: precondition";

[[nodiscard]] ExperimentSpec parse_spec(const json& j);
[[nodiscard]] ExperimentSpec load_spec(const std::string& path);
[[nodiscard]] json spec_to_json(const ExperimentSpec& s);

/// Group with the order cap taken from GABLAB_MAX_ORDER.
[[nodiscard]] GroupSpec spec_group(const ExperimentSpec& s);

/// All (Lambda, Gamma) pairs in report order.
[[nodiscard]] std::vector<std::pair<Subgroup, Subgroup>> lattice_pairs(const ExperimentSpec& s,
                                                                       const GroupSpec& g);

struct CaseResult {
  Subgroup time;
  Subgroup freq;
  std::string task;
  std::string verdict;
  json payload;
  double tolerance = 0.0;
};

struct RunResult {
  std::vector<CaseResult> cases;
  int passed = 0;  // includes skipped
  int failed = 0;
  int skipped = 0;

  [[nodiscard]] bool ok() const noexcept { return failed == 0; }
};

/// Throws InputError for lattice or group problems.
[[nodiscard]] RunResult run_experiment(const ExperimentSpec& s);

[[nodiscard]] json report_json(const ExperimentSpec& s, const RunResult& r,
                               const std::string& timestamp);

[[nodiscard]] std::string utc_timestamp();

/// Subgroups of the primal group with annihilators and sections.
[[nodiscard]] json enumerate_json(const GroupSpec& g);

struct SweepOutput {
  std::string csv;
  bool ok = true;
};

/// Requires a density or completeness task.
[[nodiscard]] SweepOutput run_sweep(const ExperimentSpec& s);

}  // namespace gablab::cli
