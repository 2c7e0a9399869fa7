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

// R-dual sequences and the adjoint-system-as-R-dual constructions.
//
// For a family {f_i} (i < M) in C^N, an orthonormal basis {e_j} of C^N and an
// orthonormal basis {h_i} of C^M, the R-dual sequence is
//   w_j = sum_i <f_i, e_j> h_i,   j < N.
// Because a Gabor system over Lambda x Gamma has M = N / d atoms, the basis
// {h_i} lives in the coefficient space C^M, and the tight-frame witness
// realizes the unitary on C^M = L^2(G) (+) C^{M-N}, with L^2(G) embedded as
// the leading coordinates. The Gabor family entering the witness is weighted
// by sqrt(d(Lambda x Gamma)), matching the weighted frame operator.

#include <cstdint>
#include <vector>

#include "gablab/gabor.hpp"
#include "gablab/linalg.hpp"
#include "gablab/spectral.hpp"

namespace gablab {

struct BasisLabel {
  int first = -1;   // e.g. flat index of alpha or lambda
  int second = -1;  // e.g. flat index of beta or gamma
  bool filler = true;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Rows form an orthonormal basis of C^dim (Gram = I entrywise within tol).
class OrthonormalBasis {
 public:
  static constexpr double kDefaultTolerance = 1e-12;

  explicit OrthonormalBasis(CMatrix vectors, std::vector<BasisLabel> labels = {},
                            double tol = kDefaultTolerance);

  [[nodiscard]] static OrthonormalBasis standard(int dim);
  /// Rows of a seeded product of Householder reflectors.
  [[nodiscard]] static OrthonormalBasis random(int dim, std::uint64_t seed);

  [[nodiscard]] const CMatrix& vectors() const noexcept { return vectors_; }
  [[nodiscard]] const std::vector<BasisLabel>& labels() const noexcept { return labels_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(vectors_.rows()); }
  [[nodiscard]] int dimension() const noexcept { return static_cast<int>(vectors_.cols()); }
  [[nodiscard]] double gram_defect() const;
  [[nodiscard]] OrthonormalBasis relabeled(std::vector<BasisLabel> labels) const;

 private:
  CMatrix vectors_;
  std::vector<BasisLabel> labels_;
};

/// w_j = sum_i <f_i, e_j> h_i for every j; rows of the result.
[[nodiscard]] CMatrix rdual_sequence(const CMatrix& family, const OrthonormalBasis& e,
                                     const OrthonormalBasis& h);

struct CklVerdict {
  std::vector<double> column_sums;  // sum_i |<f_i, e_j>|^2
  double column_min = 0.0;
  double column_max = 0.0;
  SpectralReport frame;  // of the family
  SpectralReport riesz;  // of the R-dual sequence
  bool holds = false;
  double tolerance = 0.0;
};

/// Frame <=> R-dual is a Riesz sequence, with equal bounds when both hold.
[[nodiscard]] CklVerdict ckl_duality_check(const CMatrix& family, const OrthonormalBasis& e,
                                           const OrthonormalBasis& h, double tol);

/// { |S_Lambda|^{-1/2} E_gamma T_lambda chi_{S_Lambda} } over Lambda x Lambda^perp.
[[nodiscard]] OrthonormalBasis section_onb(const Subgroup& lattice);

struct CriticalRDualReport {
  double max_residual = 0.0;
  double window_norm = 0.0;
  double bound = 0.0;  // tol * max(1, ||f||)
  int vector_count = 0;
  bool holds = false;
};

/// Checks that the R-dual of the critically sampled system over
/// Lambda x Lambda^perp, taken with respect to the negated section basis
/// |S|^{-1/2} E_{-beta} T_{-alpha} chi_S on both sides, reproduces the
/// adjoint atoms E_beta T_alpha f. `freq` must equal annihilator(time).
[[nodiscard]] CriticalRDualReport critical_rdual_verify(const Window& f, const Subgroup& time,
                                               const Subgroup& freq, double tol);

/// w_{alpha beta} = sum_{lambda gamma} <sqrt(d) E_gamma T_lambda g, e_{alpha beta}> h_{lambda gamma},
/// with (alpha, beta) running over the adjoint lattice in atom order and
/// e_{alpha beta} the leading rows of e. Rows of the result live in C^M.
/// The sqrt(d) weight makes the plain frame operator of the family equal to
/// the weighted one, so Gram(w) = I exactly for Parseval systems.
[[nodiscard]] CMatrix adjoint_w_sequence(const GaborSystem& sys, const OrthonormalBasis& e,
                                         const OrthonormalBasis& h_tilde);

/// max |Gram(w) - I| for a Parseval system (weighted convention).
[[nodiscard]] double parseval_w_orthonormality(const GaborSystem& sys, const OrthonormalBasis& e,
                                               const OrthonormalBasis& h_tilde, double tol);

struct RDualWitness {
  OrthonormalBasis e_basis;  // C^N, leading rows labelled by the adjoint lattice
  OrthonormalBasis h_basis;  // C^M, rows U h~_{lambda gamma}
  CMatrix w_sequence;        // labelled count x M
  CMatrix complement_w;      // phi: ONB of span(w)^perp in C^M
  CMatrix complement_adjoint;  // psi: ONB of span(embedded adjoint atoms)^perp in C^M
  CMatrix unitary;           // M x M
  double tight_bound = 0.0;  // A, the window was rescaled by 1/sqrt(A)
  double unitarity_defect = 0.0;  // ||U^* U - I||_F
  double w_gram_defect = 0.0;     // max |Gram(w) - I|
  double max_residual = 0.0;      // R-dual identity, original window
  int labelled_count = 0;         // |Gamma^perp x Lambda^perp| = N d
  int ambient_dimension = 0;      // M = |Lambda x Gamma|
  int complement_dimension = 0;   // M - N d
};

/// Constructive witness that the adjoint system is an R-dual of a tight
/// Gabor frame. Throws not_tight for non-tight input and residual_exceeded
/// if the identity fails by more than tol * max(1, ||g||).
[[nodiscard]] RDualWitness adjoint_rdual_witness(const GaborSystem& sys, const OrthonormalBasis& e,
                                                 const OrthonormalBasis& h_tilde, double tol);

}  // namespace gablab
