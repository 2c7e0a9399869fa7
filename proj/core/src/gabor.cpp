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

#include "gablab/gabor.hpp"

#include <string>

#include "gablab/error.hpp"

namespace gablab {

Window::Window(GroupSpec group, CVector values) : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.order()) {
    throw Error(Errc::size_mismatch, "window length " + std::to_string(values_.size()) +
                                         " != group order " + std::to_string(group_.order()));
  }
}

Window Window::zero(const GroupSpec& g) { return {g, CVector::Zero(g.order())}; }

Window Window::delta(const GroupSpec& g, int index) {
  CVector v = CVector::Zero(g.order());
  v[index] = 1.0;
  return {g, std::move(v)};
}

Window Window::indicator(const GroupSpec& g, std::span<const int> support) {
  CVector v = CVector::Zero(g.order());
  for (int x : support) v[x] = 1.0;
  return {g, std::move(v)};
}

Complex inner(const CVector& a, const CVector& b) {
  // Eigen's dot conjugates its first argument.
  return b.dot(a);
}

Window translate(const Window& f, const Elem& u) {
  const auto& g = f.group();
  const int shift = g.index_of(u, Side::primal);
  CVector out(g.order());
  for (int x = 0; x < g.order(); ++x) out[x] = f[g.sub(x, shift)];
  return {g, std::move(out)};
}

Window modulate(const Window& f, const Elem& xi) {
  const auto& g = f.group();
  const int k = g.index_of(xi, Side::dual);
  CVector out(g.order());
  for (int x = 0; x < g.order(); ++x) out[x] = g.pairing(k, x) * f[x];
  return {g, std::move(out)};
}

CVector time_frequency_shift(const GroupSpec& g, const CVector& f, int lambda, int gamma) {
  CVector out(g.order());
  for (int x = 0; x < g.order(); ++x) out[x] = g.pairing(gamma, x) * f[g.sub(x, lambda)];
  return out;
}

double commutation_defect(const Elem& lambda, const Elem& gamma, const Window& f) {
  const auto& g = f.group();
  const Complex phase = pairing(g, gamma, lambda);
  const Window lhs = modulate(translate(f, lambda), gamma);
  const Window rhs = translate(modulate(f, gamma), lambda);
  return (lhs.values() - phase * rhs.values()).norm();
}

// --- Gabor systems ----------------------------------------------------------

GaborSystem::GaborSystem(Window window, Subgroup time_lattice, Subgroup freq_lattice)
    : window_(std::move(window)), time_(std::move(time_lattice)), freq_(std::move(freq_lattice)) {
  if (time_.side() != Side::primal) throw Error(Errc::side_mismatch, "time lattice must be primal");
  if (freq_.side() != Side::dual) throw Error(Errc::side_mismatch, "frequency lattice must be dual");
  if (!(time_.group() == window_.group()) || !(freq_.group() == window_.group())) {
    throw Error(Errc::group_mismatch, "lattices and window live on different groups");
  }
}

int GaborSystem::atom_position(int lambda, int gamma) const noexcept {
  const int pl = time_.position(lambda);
  const int pg = freq_.position(gamma);
  if (pl < 0 || pg < 0) return -1;
  return pl * freq_.order() + pg;
}

GaborSystem GaborSystem::adjoint() const {
  return {window_, annihilator(freq_), annihilator(time_)};
}

GaborSystem GaborSystem::with_window(Window w) const { return {std::move(w), time_, freq_}; }

Complex CoefficientArray::at(int lambda, int gamma) const {
  const int pl = time_lattice.position(lambda);
  const int pg = freq_lattice.position(gamma);
  if (pl < 0 || pg < 0) throw Error(Errc::not_in_lattice, "coefficient index off lattice");
  return values[pl * freq_lattice.order() + pg];
}

CMatrix gabor_atoms(const GaborSystem& sys) {
  const auto& g = sys.group();
  const auto& w = sys.window().values();
  CMatrix atoms(sys.atom_count(), g.order());
  int row = 0;
  for (int lambda : sys.time_lattice().elements()) {
    for (int gamma : sys.freq_lattice().elements()) {
      for (int x = 0; x < g.order(); ++x) atoms(row, x) = g.pairing(gamma, x) * w[g.sub(x, lambda)];
      ++row;
    }
  }
  return atoms;
}

CMatrix adjoint_atoms(const GaborSystem& sys) { return gabor_atoms(sys.adjoint()); }

CoefficientArray analysis(const GaborSystem& sys, const Window& f) {
  if (!(f.group() == sys.group())) throw Error(Errc::group_mismatch, "analysis input");
  const CMatrix atoms = gabor_atoms(sys);
  return {sys.time_lattice(), sys.freq_lattice(), atoms.conjugate() * f.values()};
}

Window synthesis(const GaborSystem& sys, const CoefficientArray& c) {
  if (c.values.size() != sys.atom_count()) {
    throw Error(Errc::size_mismatch, "coefficient length " + std::to_string(c.values.size()) +
                                         " != atom count " + std::to_string(sys.atom_count()));
  }
  const CMatrix atoms = gabor_atoms(sys);
  return {sys.group(), atoms.transpose() * c.values};
}

namespace {

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

CMatrix frame_operator(const GaborSystem& sys, double weight) {
  if (!(weight > 0.0)) throw Error(Errc::nonpositive_weight, std::to_string(weight));
  const CMatrix atoms = gabor_atoms(sys);
  return hermitian_part(weight * (atoms.transpose() * atoms.conjugate()));
}

CMatrix cross_frame_operator(const GaborSystem& synth, const Window& h) {
  if (!(h.group() == synth.group())) throw Error(Errc::group_mismatch, "cross operator window");
  const CMatrix f_atoms = gabor_atoms(synth);
  const CMatrix h_atoms = gabor_atoms(synth.with_window(h));
  return f_atoms.transpose() * h_atoms.conjugate();
}

CMatrix gram(const CMatrix& atoms) {
  if (atoms.rows() == 0) throw Error(Errc::empty_family, "gram of an empty family");
  return hermitian_part(atoms * atoms.adjoint());
}

CoefficientArray intertwiner_U(const Elem& lambda_prime, const CoefficientArray& c) {
  const auto& time = c.time_lattice;
  const auto& freq = c.freq_lattice;
  const auto& g = time.group();
  const int shift = g.index_of(lambda_prime, Side::primal);
  if (!time.contains(shift)) throw Error(Errc::not_in_lattice, "translation not in time lattice");
  CoefficientArray out{time, freq, CVector(c.values.size())};
  int row = 0;
  for (int lambda : time.elements()) {
    const int src = time.position(g.sub(lambda, shift));
    for (int gamma : freq.elements()) {
      const int pg = freq.position(gamma);
      out.values[row++] =
          std::conj(g.pairing(gamma, shift)) * c.values[src * freq.order() + pg];
    }
  }
  return out;
}

CoefficientArray intertwiner_V(const Elem& gamma_prime, const CoefficientArray& c) {
  const auto& time = c.time_lattice;
  const auto& freq = c.freq_lattice;
  const auto& g = time.group();
  const int shift = g.index_of(gamma_prime, Side::dual);
  if (!freq.contains(shift)) throw Error(Errc::not_in_lattice, "modulation not in frequency lattice");
  CoefficientArray out{time, freq, CVector(c.values.size())};
  int row = 0;
  for (int lambda : time.elements()) {
    const int pl = time.position(lambda);
    for (int gamma : freq.elements()) {
      const int src = freq.position(g.sub(gamma, shift));
      out.values[row++] = c.values[pl * freq.order() + src];
    }
  }
  return out;
}

}  // namespace gablab
