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

// Windows on a finite abelian group, time-frequency shifts, Gabor systems
// and the operators built from them.
//
// Conventions: the inner product on L^2(G) is the counting-measure sum
// <a, b> = sum_x a(x) conj(b(x)); the atom indexed by (lambda, gamma) is
// E_gamma T_lambda g, i.e. x -> gamma(x) g(x - lambda); atoms are ordered
// lexicographically by (flat index of lambda, flat index of gamma).

#include "gablab/group.hpp"
#include "gablab/linalg.hpp"

namespace gablab {

class Window {
 public:
  Window(GroupSpec group, CVector values);

  [[nodiscard]] static Window zero(const GroupSpec& g);
  [[nodiscard]] static Window delta(const GroupSpec& g, int index = 0);
  /// Indicator of a set of flat indices.
  [[nodiscard]] static Window indicator(const GroupSpec& g, std::span<const int> support);

  [[nodiscard]] const GroupSpec& group() const noexcept { return group_; }
  [[nodiscard]] const CVector& values() const noexcept { return values_; }
  [[nodiscard]] Complex operator[](int index) const { return values_[index]; }
  [[nodiscard]] double norm() const { return values_.norm(); }

 private:
  GroupSpec group_;
  CVector values_;
};

/// <a, b> with conjugation on the second argument.
[[nodiscard]] Complex inner(const CVector& a, const CVector& b);

/// T_u f(x) = f(x - u).
[[nodiscard]] Window translate(const Window& f, const Elem& u);
/// E_xi f(x) = xi(x) f(x).
[[nodiscard]] Window modulate(const Window& f, const Elem& xi);
/// E_gamma T_lambda f by flat indices (lambda primal, gamma dual).
[[nodiscard]] CVector time_frequency_shift(const GroupSpec& g, const CVector& f, int lambda,
                                           int gamma);

/// || E_gamma T_lambda f - gamma(lambda) T_lambda E_gamma f ||
[[nodiscard]] double commutation_defect(const Elem& lambda, const Elem& gamma, const Window& f);

class GaborSystem {
 public:
  GaborSystem(Window window, Subgroup time_lattice, Subgroup freq_lattice);

  [[nodiscard]] const Window& window() const noexcept { return window_; }
  [[nodiscard]] const GroupSpec& group() const noexcept { return window_.group(); }
  [[nodiscard]] const Subgroup& time_lattice() const noexcept { return time_; }
  [[nodiscard]] const Subgroup& freq_lattice() const noexcept { return freq_; }
  [[nodiscard]] int atom_count() const noexcept { return time_.order() * freq_.order(); }
  /// Row of atom (lambda, gamma), or -1 if either index is off-lattice.
  [[nodiscard]] int atom_position(int lambda, int gamma) const noexcept;

  /// Same window over Gamma^perp x Lambda^perp.
  [[nodiscard]] GaborSystem adjoint() const;
  [[nodiscard]] GaborSystem with_window(Window w) const;

 private:
  Window window_;
  Subgroup time_;
  Subgroup freq_;
};

/// Coefficients indexed by Lambda x Gamma in atom order.
struct CoefficientArray {
  Subgroup time_lattice;
  Subgroup freq_lattice;
  CVector values;

  [[nodiscard]] Complex at(int lambda, int gamma) const;
};

/// M x N, row (lambda, gamma) = E_gamma T_lambda g.
[[nodiscard]] CMatrix gabor_atoms(const GaborSystem& sys);
/// Atoms of sys.adjoint(): M' = (N/|Gamma|)(N/|Lambda|) rows.
[[nodiscard]] CMatrix adjoint_atoms(const GaborSystem& sys);

/// c_{lambda gamma} = <f, E_gamma T_lambda g>.
[[nodiscard]] CoefficientArray analysis(const GaborSystem& sys, const Window& f);
/// sum c_{lambda gamma} E_gamma T_lambda g.
[[nodiscard]] Window synthesis(const GaborSystem& sys, const CoefficientArray& c);

/// weight * sum_atoms a a^*.
[[nodiscard]] CMatrix frame_operator(const GaborSystem& sys, double weight = 1.0);
/// Mixed operator x -> sum <x, E T h> E T f (synthesis by f, analysis by h).
[[nodiscard]] CMatrix cross_frame_operator(const GaborSystem& synth, const Window& h);
/// G_ij = <atom_i, atom_j>.
[[nodiscard]] CMatrix gram(const CMatrix& atoms);

/// (U c)_{lambda, gamma} = conj(gamma(lambda')) c_{lambda - lambda', gamma}
[[nodiscard]] CoefficientArray intertwiner_U(const Elem& lambda_prime, const CoefficientArray& c);
/// (V c)_{lambda, gamma} = c_{lambda, gamma - gamma'}
[[nodiscard]] CoefficientArray intertwiner_V(const Elem& gamma_prime, const CoefficientArray& c);

}  // namespace gablab
