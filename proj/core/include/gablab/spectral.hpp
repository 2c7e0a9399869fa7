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

// Hermitian eigendecomposition and the frame quantities read off spectra:
// frame and Riesz bounds, rank, excess and deficit, tightness, canonical
// Parseval windows, and the Gabor duality checks.

#include <vector>

#include "gablab/gabor.hpp"
#include "gablab/linalg.hpp"
#include "gablab/rational.hpp"

namespace gablab {

/// Eigenvalue count above kRankTolerance * lambda_max defines rank.
inline constexpr double kRankTolerance = 1e-10;

struct EigenDecomposition {
  RVector values;   // ascending
  CMatrix vectors;  // columns, unitary
};

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius mass is <= this times ||H||_F.
  double relative_tolerance = 1e-13;
  /// Accept inputs with ||H - H^*||_F <= this times ||H||_F.
  double hermitian_tolerance = 1e-12;
  int max_sweeps = 64;
};

/// Cyclic Jacobi with complex plane rotations.
[[nodiscard]] EigenDecomposition hermitian_eig(const CMatrix& h, const JacobiOptions& opts = {});

/// raw: plain sum of rank-one atom projections. weighted: the same scaled by
/// d(Lambda x Gamma), which makes the bounds coincide with the raw Riesz
/// bounds of the adjoint system.
enum class Convention { raw, weighted };

[[nodiscard]] const char* to_string(Convention c) noexcept;

/// N / (|Lambda| |Gamma|) as an exact rational.
[[nodiscard]] Rational lattice_density_ratio(const GaborSystem& sys);
[[nodiscard]] double convention_weight(const GaborSystem& sys, Convention c);

struct SpectralReport {
  std::vector<double> eigenvalues;  // ascending
  int rank = 0;
  double lower_bound = 0.0;  // A
  double upper_bound = 0.0;  // B
  bool is_frame = false;
  bool is_riesz_sequence = false;
  bool is_tight = false;
  double tolerance = kRankTolerance;
};

/// Report over a Hermitian operator. `dimension` is the ambient space and
/// `family_size` the number of vectors whose frame operator or Gram matrix
/// `h` is; both are needed to decide the frame and Riesz flags.
[[nodiscard]] SpectralReport spectral_report(const CMatrix& h, bool is_gram, int family_size,
                                             int dimension, double tol);

/// Eigen-bounds of weight * T^* T.
[[nodiscard]] SpectralReport frame_bounds(const GaborSystem& sys, Convention c,
                                          double tol = kRankTolerance);
/// Frame bounds of an arbitrary family (rows).
[[nodiscard]] SpectralReport family_frame_bounds(const CMatrix& family, double tol = kRankTolerance);
/// Extremal eigenvalues of the Gram matrix of the rows.
[[nodiscard]] SpectralReport riesz_bounds(const CMatrix& atoms, double tol = kRankTolerance);

struct ExcessDeficit {
  int excess = 0;
  int deficit = 0;
  int rank = 0;
  int atom_count = 0;
};

/// Rank from the nonzero spectrum of the Gram matrix (equivalently of the
/// frame operator; the smaller of the two is decomposed).
[[nodiscard]] ExcessDeficit excess_deficit(const CMatrix& atoms, double tol = kRankTolerance);

/// S^{-1/2} g for the convention-weighted frame operator S.
[[nodiscard]] Window canonical_parseval(const GaborSystem& sys, Convention c,
                                        double tol = kRankTolerance);

struct DualityVerdict {
  SpectralReport frame;    // weighted convention, Gabor system
  SpectralReport adjoint;  // raw Gram, adjoint system
  double lower_gap = 0.0;
  double upper_gap = 0.0;
  bool holds = false;
  double tolerance = 0.0;
};

/// Frame bounds of (g, Lambda, Gamma) against Riesz bounds of the adjoint
/// system. Holds iff both properties fail, or both hold with bounds equal up
/// to tol relative to the larger upper bound.
[[nodiscard]] DualityVerdict verify_duality(const GaborSystem& sys, double tol);

struct TightnessVerdict {
  SpectralReport frame;  // weighted convention
  double window_norm_sq = 0.0;
  double max_off_diagonal = 0.0;  // adjoint Gram
  double bound_defect = 0.0;      // |A - ||g||^2| when tight
  bool tight = false;
  bool orthogonal = false;
  bool holds = false;
  double tolerance = 0.0;
};

/// Tight frame <=> orthogonal adjoint system, with A = ||g||^2.
[[nodiscard]] TightnessVerdict verify_tight_orthogonal(const GaborSystem& sys, double tol);

}  // namespace gablab
