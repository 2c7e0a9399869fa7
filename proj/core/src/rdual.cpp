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


#include "gablab/rdual.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gablab/error.hpp"
#include "gablab/random.hpp"

namespace gablab {
namespace {

std::vector<BasisLabel> default_labels(int n) {
  std::vector<BasisLabel> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = {i, -1, true};
  return out;
}

std::vector<BasisLabel> atom_labels(const Subgroup& time, const Subgroup& freq) {
  std::vector<BasisLabel> out;
  out.reserve(static_cast<std::size_t>(time.order()) * static_cast<std::size_t>(freq.order()));
  for (int l : time.elements())
    for (int c : freq.elements()) out.push_back({l, c, false});
  return out;
}

// Atoms of sys scaled by sqrt(d), so that their plain frame operator is the
// density-weighted one.
CMatrix weighted_atoms(const GaborSystem& sys) {
  return std::sqrt(lattice_density_ratio(sys).to_double()) * gabor_atoms(sys);
}

CMatrix r_dual(const CMatrix& family, const CMatrix& e_rows, const CMatrix& h_rows) {
  // C_ij = <f_i, e_j>, w_j = sum_i C_ij h_i.
  const CMatrix c = family * e_rows.adjoint();
  return c.transpose() * h_rows;
}

double max_row_residual(const CMatrix& a, const CMatrix& b) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) worst = std::max(worst, (a.row(i) - b.row(i)).norm());
  return worst;
}

}  // namespace

OrthonormalBasis::OrthonormalBasis(CMatrix vectors, std::vector<BasisLabel> labels, double tol)
    : vectors_(std::move(vectors)), labels_(std::move(labels)) {
  if (vectors_.rows() != vectors_.cols() || vectors_.rows() == 0) {
    throw Error(Errc::not_orthonormal, "a basis of C^" + std::to_string(vectors_.cols()) +
                                           " needs that many vectors, got " +
                                           std::to_string(vectors_.rows()));
  }
  if (labels_.empty()) labels_ = default_labels(size());
  if (static_cast<int>(labels_.size()) != size()) {
    throw Error(Errc::size_mismatch, "one label per basis vector");
  }
  const double defect = gram_defect();
  if (!(defect <= tol)) {
    throw Error(Errc::not_orthonormal, "Gram defect " + std::to_string(defect));
  }
}

OrthonormalBasis OrthonormalBasis::standard(int dim) {
  return OrthonormalBasis(CMatrix::Identity(dim, dim));
}

OrthonormalBasis OrthonormalBasis::random(int dim, std::uint64_t seed) {
  Xorshift64Star rng(seed);
  return OrthonormalBasis(random_unitary(dim, rng));
}

double OrthonormalBasis::gram_defect() const {
  return identity_defect_max(vectors_ * vectors_.adjoint());
}

OrthonormalBasis OrthonormalBasis::relabeled(std::vector<BasisLabel> labels) const {
  OrthonormalBasis out = *this;
  if (static_cast<int>(labels.size()) != size()) {
    throw Error(Errc::size_mismatch, "one label per basis vector");
  }
  out.labels_ = std::move(labels);
  return out;
}

CMatrix rdual_sequence(const CMatrix& family, const OrthonormalBasis& e, const OrthonormalBasis& h) {
  if (family.rows() == 0) throw Error(Errc::empty_family, "R-dual of an empty family");
  if (family.cols() != e.dimension()) {
    throw Error(Errc::size_mismatch, "family lives in C^" + std::to_string(family.cols()) +
                                         ", basis e in C^" + std::to_string(e.dimension()));
  }
  if (family.rows() != h.size()) {
    throw Error(Errc::size_mismatch, std::to_string(family.rows()) + " vectors but " +
                                         std::to_string(h.size()) + " h vectors");
  }
  return r_dual(family, e.vectors(), h.vectors());
}

CklVerdict ckl_duality_check(const CMatrix& family, const OrthonormalBasis& e,
                             const OrthonormalBasis& h, double tol) {
  const CMatrix w = rdual_sequence(family, e, h);
  CklVerdict v;
  v.tolerance = tol;
  const CMatrix c = family * e.vectors().adjoint();
  v.column_sums.resize(static_cast<std::size_t>(c.cols()));
  for (Eigen::Index j = 0; j < c.cols(); ++j)
    v.column_sums[static_cast<std::size_t>(j)] = c.col(j).squaredNorm();
  const auto [lo, hi] = std::minmax_element(v.column_sums.begin(), v.column_sums.end());
  v.column_min = *lo;
  v.column_max = *hi;

  v.frame = family_frame_bounds(family);
  v.riesz = riesz_bounds(w);
  if (v.frame.is_frame != v.riesz.is_riesz_sequence) return v;
  if (!v.frame.is_frame) {
    v.holds = true;
    return v;
  }
  const double scale = std::max(v.frame.upper_bound, v.riesz.upper_bound);
  v.holds = std::abs(v.frame.lower_bound - v.riesz.lower_bound) <= tol * scale &&
            std::abs(v.frame.upper_bound - v.riesz.upper_bound) <= tol * scale;
  return v;
}

namespace {

// Rows (lambda, gamma) over lattice x lattice^perp of
// mu^{-1/2} E_{sign gamma} T_{sign lambda} chi_S.
CMatrix section_basis_rows(const Subgroup& lattice, bool negated) {
  const GroupSpec& g = lattice.group();
  const Section s = section(lattice);
  const Subgroup perp = annihilator(lattice);
  CVector chi = CVector::Zero(g.order());
  for (int r : s.reps) chi[r] = 1.0;
  const double scale = 1.0 / std::sqrt(static_cast<double>(s.reps.size()));

  CMatrix rows(lattice.order() * perp.order(), g.order());
  Eigen::Index row = 0;
  for (int l : lattice.elements()) {
    for (int c : perp.elements()) {
      const int tl = negated ? g.negate(l) : l;
      const int fc = negated ? g.negate(c) : c;
      rows.row(row++) = scale * time_frequency_shift(g, chi, tl, fc).transpose();
    }
  }
  return rows;
}

}  // namespace

OrthonormalBasis section_onb(const Subgroup& lattice) {
  if (lattice.side() != Side::primal) {
    throw Error(Errc::side_mismatch, "time lattice must be a primal subgroup");
  }
  return OrthonormalBasis(section_basis_rows(lattice, false),
                          atom_labels(lattice, annihilator(lattice)), 1e-10);
}

CriticalRDualReport critical_rdual_verify(const Window& f, const Subgroup& time, const Subgroup& freq,
                                 double tol) {
  const GaborSystem sys(f, time, freq);
  if (!(freq == annihilator(time))) {
    throw Error(Errc::not_critically_sampled, "frequency lattice must be the annihilator");
  }
  const OrthonormalBasis basis(section_basis_rows(time, true), atom_labels(time, freq), 1e-10);
  const CMatrix atoms = gabor_atoms(sys);
  // With Gamma = Lambda^perp the adjoint system runs over the same index set.
  const CMatrix w = rdual_sequence(atoms, basis, basis);

  CriticalRDualReport r;
  r.vector_count = static_cast<int>(atoms.rows());
  r.window_norm = f.norm();
  r.max_residual = max_row_residual(w, atoms);
  r.bound = tol * std::max(1.0, r.window_norm);
  r.holds = r.max_residual <= r.bound;
  return r;
}

CMatrix adjoint_w_sequence(const GaborSystem& sys, const OrthonormalBasis& e,
                           const OrthonormalBasis& h_tilde) {
  const int n = sys.group().order();
  const int m = sys.atom_count();
  const GaborSystem adj = sys.adjoint();
  const int k = adj.atom_count();
  if (e.dimension() != n) throw Error(Errc::size_mismatch, "e must be a basis of L^2(G)");
  if (h_tilde.dimension() != m) {
    throw Error(Errc::size_mismatch, "h~ must be a basis of C^" + std::to_string(m));
  }
  if (k > n) {
    throw Error(Errc::size_mismatch, "adjoint lattice has " + std::to_string(k) +
                                         " points, more than dim L^2(G) = " + std::to_string(n));
  }
  return r_dual(weighted_atoms(sys), e.vectors().topRows(k), h_tilde.vectors());
}

double parseval_w_orthonormality(const GaborSystem& sys, const OrthonormalBasis& e,
                                 const OrthonormalBasis& h_tilde, double tol) {
  const SpectralReport frame = frame_bounds(sys, Convention::weighted);
  if (!frame.is_frame || std::abs(frame.lower_bound - 1.0) > tol ||
      std::abs(frame.upper_bound - 1.0) > tol) {
    throw Error(Errc::not_parseval, "frame bounds [" + std::to_string(frame.lower_bound) + ", " +
                                        std::to_string(frame.upper_bound) + "]");
  }
  const CMatrix w = adjoint_w_sequence(sys, e, h_tilde);
  return identity_defect_max(w * w.adjoint());
}

RDualWitness adjoint_rdual_witness(const GaborSystem& sys, const OrthonormalBasis& e,
                                   const OrthonormalBasis& h_tilde, double tol) {
  const SpectralReport frame = frame_bounds(sys, Convention::weighted);
  if (!frame.is_frame || frame.upper_bound - frame.lower_bound > tol * frame.upper_bound) {
    throw Error(Errc::not_tight, "frame bounds [" + std::to_string(frame.lower_bound) + ", " +
                                     std::to_string(frame.upper_bound) + "]");
  }
  const int n = sys.group().order();
  const int m = sys.atom_count();
  const double a = 0.5 * (frame.lower_bound + frame.upper_bound);

  const GaborSystem parseval =
      sys.with_window(Window(sys.group(), sys.window().values() / std::sqrt(a)));
  const GaborSystem adj = sys.adjoint();
  const int k = adj.atom_count();

  const CMatrix w = adjoint_w_sequence(parseval, e, h_tilde);
  CMatrix embedded = CMatrix::Zero(k, m);
  embedded.leftCols(n) = adjoint_atoms(parseval);

  const CMatrix phi = orthonormal_complement(w, m);
  const CMatrix psi = orthonormal_complement(embedded, m);
  if (phi.rows() != psi.rows()) {
    throw Error(Errc::residual_exceeded, "complement dimensions differ: " +
                                             std::to_string(phi.rows()) + " vs " +
                                             std::to_string(psi.rows()));
  }

  CMatrix x(m, m);
  x << w, phi;
  CMatrix y(m, m);
  y << embedded, psi;
  // U x_j = y_j for the orthonormal rows x_j, y_j.
  const CMatrix u = y.transpose() * x.conjugate();

  std::vector<BasisLabel> e_labels = default_labels(n);
  {
    std::size_t i = 0;
    for (int al : adj.time_lattice().elements())
      for (int be : adj.freq_lattice().elements()) e_labels[i++] = {al, be, false};
  }
  std::vector<BasisLabel> h_labels = atom_labels(sys.time_lattice(), sys.freq_lattice());

  RDualWitness out{
      e.relabeled(std::move(e_labels)),
      OrthonormalBasis(h_tilde.vectors() * u.transpose(), std::move(h_labels), 1e-10),
      w,
      phi,
      psi,
      u,
  };
  out.tight_bound = a;
  out.unitarity_defect = (u.adjoint() * u - CMatrix::Identity(m, m)).norm();
  out.w_gram_defect = identity_defect_max(w * w.adjoint());
  out.labelled_count = k;
  out.ambient_dimension = m;
  out.complement_dimension = m - k;

  // R-dual of the original weighted family against (e, U h~).
  const CMatrix rd = r_dual(weighted_atoms(sys), e.vectors().topRows(k), out.h_basis.vectors());
  out.max_residual = max_row_residual(rd, adjoint_atoms(sys));
  const double bound = tol * std::max(1.0, sys.window().norm());
  if (!(out.max_residual <= bound)) {
    throw Error(Errc::residual_exceeded, "R-dual residual " + std::to_string(out.max_residual));
  }
  return out;
}

}  // namespace gablab
