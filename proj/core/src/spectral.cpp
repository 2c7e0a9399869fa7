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

#include "gablab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gablab/error.hpp"

namespace gablab {

EigenDecomposition hermitian_eig(const CMatrix& h, const JacobiOptions& opts) {
  const Eigen::Index n = h.rows();
  if (h.cols() != n) throw Error(Errc::not_hermitian, "a Hermitian matrix must be square");
  const double norm = h.norm();
  if (hermitian_defect(h) > opts.hermitian_tolerance * norm) {
    throw Error(Errc::not_hermitian, "||H - H*|| = " + std::to_string(hermitian_defect(h)));
  }

  CMatrix a = 0.5 * (h + h.adjoint());
  CMatrix v = CMatrix::Identity(n, n);
  const double target = opts.relative_tolerance * norm;
  // Entries below this cannot matter for the stopping test.
  const double skip = n > 1 ? target / static_cast<double>(n) * 1e-3 : 0.0;

  auto off_mass = [&] {
    double s = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  bool converged = false;
  for (int sweep = 0; sweep <= opts.max_sweeps; ++sweep) {
    if (off_mass() <= target) {
      converged = true;
      break;
    }
    if (sweep == opts.max_sweeps) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double mag = std::abs(b);
        if (mag <= skip) continue;
        const Complex ph = b / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex sph = s * std::conj(ph);  // s e^{-i phi}
        const Complex cph = c * std::conj(ph);  // c e^{-i phi}

        for (Eigen::Index k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          const Complex nkp = c * akp - sph * akq;
          const Complex nkq = s * akp + cph * akq;
          a(k, p) = nkp;
          a(p, k) = std::conj(nkp);
          a(k, q) = nkq;
          a(q, k) = std::conj(nkq);
        }
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - sph * vkq;
          v(k, q) = s * vkp + cph * vkq;
        }
      }
    }
  }
  if (!converged) throw Error(Errc::no_convergence, "Jacobi sweep limit reached");

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto i, auto j) { return a(i, i).real() < a(j, j).real(); });
  EigenDecomposition out{RVector(n), CMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

const char* to_string(Convention c) noexcept { return c == Convention::raw ? "raw" : "weighted"; }

Rational lattice_density_ratio(const GaborSystem& sys) {
  return {sys.group().order(),
          static_cast<std::int64_t>(sys.time_lattice().order()) * sys.freq_lattice().order()};
}

double convention_weight(const GaborSystem& sys, Convention c) {
  return c == Convention::raw ? 1.0 : lattice_density_ratio(sys).to_double();
}

namespace {

// Nonzero spectrum of the Gram matrix (rows x rows) and of the frame
// operator (cols x cols) coincide; decompose the smaller one and pad zeros.
std::vector<double> family_spectrum(const CMatrix& family, bool gram_side) {
  const auto m = family.rows();
  const auto n = family.cols();
  const bool use_gram = m <= n;
  const CMatrix h = use_gram ? CMatrix(family * family.adjoint())
                             : CMatrix(family.transpose() * family.conjugate());
  const auto eig = hermitian_eig(0.5 * (h + h.adjoint()));
  std::vector<double> ev(eig.values.data(), eig.values.data() + eig.values.size());
  const auto wanted = gram_side ? m : n;
  if (static_cast<Eigen::Index>(ev.size()) < wanted) ev.insert(ev.begin(), wanted - ev.size(), 0.0);
  return ev;
}

SpectralReport report_from_spectrum(std::vector<double> ev, bool is_gram, int family_size,
                                    int dimension, double tol) {
  SpectralReport r;
  r.tolerance = tol;
  r.eigenvalues = std::move(ev);
  if (r.eigenvalues.empty()) return r;
  r.lower_bound = r.eigenvalues.front();
  r.upper_bound = r.eigenvalues.back();
  const double cut = tol * r.upper_bound;
  r.rank = r.upper_bound > 0.0
               ? static_cast<int>(std::count_if(r.eigenvalues.begin(), r.eigenvalues.end(),
                                                [cut](double x) { return x > cut; }))
               : 0;
  r.is_frame = r.rank == dimension && dimension > 0;
  r.is_riesz_sequence = r.rank == family_size && family_size > 0;
  const bool primary = is_gram ? r.is_riesz_sequence : r.is_frame;
  r.is_tight = primary && (r.upper_bound - r.lower_bound) <= tol * r.upper_bound;
  return r;
}

}  // namespace

SpectralReport spectral_report(const CMatrix& h, bool is_gram, int family_size, int dimension,
                               double tol) {
  const auto eig = hermitian_eig(h);
  return report_from_spectrum({eig.values.data(), eig.values.data() + eig.values.size()}, is_gram,
                              family_size, dimension, tol);
}

SpectralReport frame_bounds(const GaborSystem& sys, Convention c, double tol) {
  const CMatrix s = frame_operator(sys, convention_weight(sys, c));
  return spectral_report(s, false, sys.atom_count(), sys.group().order(), tol);
}

SpectralReport family_frame_bounds(const CMatrix& family, double tol) {
  if (family.rows() == 0) throw Error(Errc::empty_family, "frame bounds of an empty family");
  return report_from_spectrum(family_spectrum(family, false), false,
                              static_cast<int>(family.rows()), static_cast<int>(family.cols()), tol);
}

SpectralReport riesz_bounds(const CMatrix& atoms, double tol) {
  if (atoms.rows() == 0) throw Error(Errc::empty_family, "Riesz bounds of an empty family");
  return report_from_spectrum(family_spectrum(atoms, true), true, static_cast<int>(atoms.rows()),
                              static_cast<int>(atoms.cols()), tol);
}

ExcessDeficit excess_deficit(const CMatrix& atoms, double tol) {
  const auto r = riesz_bounds(atoms, tol);
  ExcessDeficit ed;
  ed.atom_count = static_cast<int>(atoms.rows());
  ed.rank = r.rank;
  ed.excess = ed.atom_count - r.rank;
  ed.deficit = static_cast<int>(atoms.cols()) - r.rank;
  return ed;
}

Window canonical_parseval(const GaborSystem& sys, Convention c, double tol) {
  const CMatrix s = frame_operator(sys, convention_weight(sys, c));
  const auto eig = hermitian_eig(s);
  const double top = eig.values[eig.values.size() - 1];
  const double bottom = eig.values[0];
  if (!(top > 0.0) || !(bottom > tol * top)) {
    throw Error(Errc::not_a_frame, "lower frame bound " + std::to_string(bottom));
  }
  const RVector inv_sqrt = eig.values.array().rsqrt();
  const CMatrix s_inv_half = eig.vectors * inv_sqrt.asDiagonal() * eig.vectors.adjoint();
  return {sys.group(), s_inv_half * sys.window().values()};
}

DualityVerdict verify_duality(const GaborSystem& sys, double tol) {
  DualityVerdict v;
  v.tolerance = tol;
  v.frame = frame_bounds(sys, Convention::weighted);
  v.adjoint = riesz_bounds(adjoint_atoms(sys));
  v.lower_gap = std::abs(v.frame.lower_bound - v.adjoint.lower_bound);
  v.upper_gap = std::abs(v.frame.upper_bound - v.adjoint.upper_bound);
  const double scale = std::max(v.frame.upper_bound, v.adjoint.upper_bound);
  const bool same_verdict = v.frame.is_frame == v.adjoint.is_riesz_sequence;
  const bool bounds_match = v.lower_gap <= tol * scale && v.upper_gap <= tol * scale;
  v.holds = same_verdict && (!v.frame.is_frame || bounds_match);
  return v;
}

TightnessVerdict verify_tight_orthogonal(const GaborSystem& sys, double tol) {
  TightnessVerdict v;
  v.tolerance = tol;
  v.frame = frame_bounds(sys, Convention::weighted);
  v.window_norm_sq = sys.window().values().squaredNorm();
  const CMatrix g = gram(adjoint_atoms(sys));
  for (Eigen::Index j = 0; j < g.cols(); ++j)
    for (Eigen::Index i = 0; i < g.rows(); ++i)
      if (i != j) v.max_off_diagonal = std::max(v.max_off_diagonal, std::abs(g(i, j)));

  const double a = v.frame.lower_bound;
  const double b = v.frame.upper_bound;
  v.tight = v.frame.is_frame && (b - a) <= tol * b;
  v.orthogonal = v.window_norm_sq > 0.0 && v.max_off_diagonal <= tol * v.window_norm_sq;
  v.bound_defect = std::abs(a - v.window_norm_sq);
  v.holds = v.tight == v.orthogonal && (!v.tight || v.bound_defect <= tol * v.window_norm_sq);
  return v;
}

}  // namespace gablab
