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

// Lattice size, section coverings, the functional psi and the regularized
// frame operator R_theta = theta I + S used by the completeness argument.
// S is the raw (weight-one) frame operator here; the factor 1/d is carried
// explicitly wherever it appears.

#include <span>
#include <vector>

#include "gablab/gabor.hpp"
#include "gablab/rational.hpp"
#include "gablab/spectral.hpp"

namespace gablab {

struct LatticeSize {
  Rational value;  // N / (|Lambda| |Gamma|)
  int group_order = 0;
  int time_order = 0;
  int freq_order = 0;
};

/// Throws side_mismatch unless time is primal and freq dual.
[[nodiscard]] LatticeSize lattice_size(const Subgroup& time, const Subgroup& freq);

/// Cells E_alpha = (alpha + S_{Gamma^perp}) cap S_Lambda for alpha in Gamma^perp, nonempty only.
struct Covering {
  std::vector<int> alphas;
  std::vector<std::vector<int>> cells;
  Rational section_measure;  // mu_G(S_Lambda) = N / |Lambda|
  int group_order = 0;
};

[[nodiscard]] Covering covering(const Subgroup& time, const Subgroup& freq);

/// (1 / mu_G(S_Lambda)) sum_i <T chi_{E_i}, chi_{E_i}>.
[[nodiscard]] Complex psi(const CMatrix& t, const Covering& cov);

/// Spectral calculus for the raw frame operator of one system; one
/// decomposition serves every theta. Eigenvalues at or below the rank cut
/// are treated as exact zeros.
class Resolvent {
 public:
  explicit Resolvent(const GaborSystem& sys, double rank_tolerance = kRankTolerance);

  [[nodiscard]] const EigenDecomposition& decomposition() const noexcept { return eig_; }
  [[nodiscard]] int rank() const noexcept { return rank_; }
  /// Solves (theta I + S) h = f.
  [[nodiscard]] CVector solve(const CVector& f, double theta) const;
  /// S R_theta^{-1}.
  [[nodiscard]] CMatrix regularized_product(double theta) const;
  /// Orthogonal projection onto the span of the atoms.
  [[nodiscard]] CMatrix range_projection() const;

 private:
  [[nodiscard]] CMatrix spectral_function(const RVector& values) const;

  GaborSystem sys_;
  EigenDecomposition eig_;
  RVector clean_;  // eigenvalues with the numerical kernel set to zero
  int rank_ = 0;
};

/// h_theta with (theta I + S) h_theta = f. Throws nonpositive_theta.
[[nodiscard]] Window regularized_vector(const GaborSystem& sys, const Window& f, double theta);

/// ||(theta I + S) h - f||
[[nodiscard]] double regularized_residual(const GaborSystem& sys, const Window& f,
                                          const Window& h, double theta);

struct ThetaSweepTolerances {
  double identity = 1e-9;     // relative, psi vs (1/d) <f, h>
  double energy = 1e-10;      // relative, <f,h> vs theta ||h||^2 + ||T h||^2
  double inner_slack = 1e-12; // <f, h> <= 1 + slack
  double psi_slack = 1e-9;    // psi <= 1/d + slack
  double monotone_slack = 1e-12;
};

struct ThetaSweep {
  std::vector<double> thetas;  // descending
  std::vector<double> inner_products;
  std::vector<double> psi_values;
  std::vector<double> identity_defects;  // relative
  std::vector<double> energy_defects;    // relative
  Rational d_inverse;
  double psi_limit = 0.0;  // psi(P)
  int rank = 0;
  int dimension = 0;
  bool identity_holds = false;
  bool energy_holds = false;
  bool inner_bounded = false;
  bool psi_bounded = false;
  bool monotone = false;
  ThetaSweepTolerances tolerances;

  [[nodiscard]] bool holds() const noexcept {
    return identity_holds && energy_holds && inner_bounded && psi_bounded && monotone;
  }
  /// |psi(last theta) - psi(P)|
  [[nodiscard]] double limit_gap() const;
};

/// {1, 1e-1, ..., 1e-6}
[[nodiscard]] std::vector<double> default_theta_grid();

/// Runs with f = g. Throws invalid_theta_grid unless the grid is nonempty,
/// positive, finite and strictly descending.
[[nodiscard]] ThetaSweep completeness_sweep(const GaborSystem& sys, std::span<const double> thetas,
                                            const ThetaSweepTolerances& tol = {});

struct CompletenessVerdict {
  bool complete = false;
  int rank = 0;
  int atom_count = 0;
  int dimension = 0;
  Rational d;
  bool counting_witness = false;  // d > 1, hence fewer atoms than dimensions
  bool holds = false;             // not (complete and d > 1)
};

[[nodiscard]] CompletenessVerdict completeness_verdict(const GaborSystem& sys,
                                                       double tol = kRankTolerance);

}  // namespace gablab
