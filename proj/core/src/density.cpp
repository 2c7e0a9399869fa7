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


#include "gablab/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gablab/error.hpp"

namespace gablab {

LatticeSize lattice_size(const Subgroup& time, const Subgroup& freq) {
  if (time.side() != Side::primal) throw Error(Errc::side_mismatch, "time lattice must be primal");
  if (freq.side() != Side::dual) throw Error(Errc::side_mismatch, "frequency lattice must be dual");
  if (!(time.group() == freq.group())) throw Error(Errc::group_mismatch, "lattices over different groups");
  const int n = time.group().order();
  return {Rational(n, static_cast<std::int64_t>(time.order()) * freq.order()), n, time.order(),
          freq.order()};
}

Covering covering(const Subgroup& time, const Subgroup& freq) {
  const LatticeSize size = lattice_size(time, freq);
  const GroupSpec& g = time.group();
  const Section s_time = section(time);
  const Subgroup adj_time = annihilator(freq);
  const std::vector<char> in_adj_section = section_mask(section(adj_time));

  Covering cov;
  cov.group_order = size.group_order;
  cov.section_measure = MeasureConvention::section_measure(time);
  for (int alpha : adj_time.elements()) {
    std::vector<int> cell;
    for (int x : s_time.reps)
      if (in_adj_section[static_cast<std::size_t>(g.sub(x, alpha))]) cell.push_back(x);
    if (cell.empty()) continue;
    cov.alphas.push_back(alpha);
    cov.cells.push_back(std::move(cell));
  }

  // Disjoint cells exhausting S_Lambda.
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  std::size_t total = 0;
  for (const auto& cell : cov.cells) {
    for (int x : cell) {
      if (seen[static_cast<std::size_t>(x)]++ != 0) {
        throw Error(Errc::size_mismatch, "covering cells overlap at " + std::to_string(x));
      }
    }
    total += cell.size();
  }
  if (total != s_time.reps.size()) {
    throw Error(Errc::size_mismatch, "covering cells do not exhaust the section");
  }
  return cov;
}

Complex psi(const CMatrix& t, const Covering& cov) {
  if (t.rows() != cov.group_order || t.cols() != cov.group_order) {
    throw Error(Errc::size_mismatch, "psi needs an operator on L^2(G)");
  }
  Complex sum = 0.0;
  for (const auto& cell : cov.cells)
    for (int y : cell)
      for (int x : cell) sum += t(y, x);
  return sum / cov.section_measure.to_double();
}

Resolvent::Resolvent(const GaborSystem& sys, double rank_tolerance)
    : sys_(sys), eig_(hermitian_eig(frame_operator(sys))) {
  clean_ = eig_.values;
  const double top = clean_.size() > 0 ? clean_.maxCoeff() : 0.0;
  const double cut = rank_tolerance * std::max(top, 0.0);
  for (Eigen::Index i = 0; i < clean_.size(); ++i) {
    if (clean_[i] <= cut) {
      clean_[i] = 0.0;
    } else {
      ++rank_;
    }
  }
}

CMatrix Resolvent::spectral_function(const RVector& values) const {
  return eig_.vectors * values.asDiagonal() * eig_.vectors.adjoint();
}

namespace {

void check_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw Error(Errc::nonpositive_theta, "theta = " + std::to_string(theta));
  }
}

}  // namespace

CVector Resolvent::solve(const CVector& f, double theta) const {
  check_theta(theta);
  if (f.size() != eig_.vectors.rows()) throw Error(Errc::size_mismatch, "vector length");
  const RVector inv = (clean_.array() + theta).inverse();
  return eig_.vectors * (inv.asDiagonal() * (eig_.vectors.adjoint() * f));
}

CMatrix Resolvent::regularized_product(double theta) const {
  check_theta(theta);
  return spectral_function((clean_.array() / (clean_.array() + theta)).matrix());
}

CMatrix Resolvent::range_projection() const {
  return spectral_function((clean_.array() > 0.0).cast<double>().matrix());
}

Window regularized_vector(const GaborSystem& sys, const Window& f, double theta) {
  check_theta(theta);
  if (!(f.group() == sys.group())) throw Error(Errc::group_mismatch, "vector over another group");
  return Window(sys.group(), Resolvent(sys).solve(f.values(), theta));
}

double regularized_residual(const GaborSystem& sys, const Window& f, const Window& h,
                            double theta) {
  const CMatrix s = frame_operator(sys);
  return (theta * h.values() + s * h.values() - f.values()).norm();
}

double ThetaSweep::limit_gap() const {
  return psi_values.empty() ? 0.0 : std::abs(psi_values.back() - psi_limit);
}

std::vector<double> default_theta_grid() { return {1.0, 1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}; }

ThetaSweep completeness_sweep(const GaborSystem& sys, std::span<const double> thetas,
                              const ThetaSweepTolerances& tol) {
  if (thetas.empty()) throw Error(Errc::invalid_theta_grid, "empty theta grid");
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (!(thetas[i] > 0.0) || !std::isfinite(thetas[i])) {
      throw Error(Errc::invalid_theta_grid, "theta values must be positive and finite");
    }
    if (i > 0 && !(thetas[i] < thetas[i - 1])) {
      throw Error(Errc::invalid_theta_grid, "theta grid must be strictly descending");
    }
  }

  const Covering cov = covering(sys.time_lattice(), sys.freq_lattice());
  const Resolvent res(sys);
  const CMatrix atoms = gabor_atoms(sys);
  const CVector& f = sys.window().values();

  ThetaSweep out;
  out.tolerances = tol;
  out.thetas.assign(thetas.begin(), thetas.end());
  out.d_inverse = lattice_density_ratio(sys).inverse();
  out.rank = res.rank();
  out.dimension = sys.group().order();
  out.psi_limit = psi(res.range_projection(), cov).real();
  const double inv_d = out.d_inverse.to_double();

  out.identity_holds = out.energy_holds = out.inner_bounded = out.psi_bounded = out.monotone = true;
  for (double theta : thetas) {
    const CVector h = res.solve(f, theta);
    const double ip = inner(f, h).real();
    const double ps = psi(res.regularized_product(theta), cov).real();
    const double rhs = inv_d * ip;
    const double id_defect = rhs != 0.0 ? std::abs(ps - rhs) / std::abs(rhs) : std::abs(ps);
    const double energy = theta * h.squaredNorm() + (atoms.conjugate() * h).squaredNorm();
    const double en_defect = ip != 0.0 ? std::abs(ip - energy) / std::abs(ip) : std::abs(energy);

    if (!out.psi_values.empty() && ps < out.psi_values.back() - tol.monotone_slack) {
      out.monotone = false;
    }
    out.inner_products.push_back(ip);
    out.psi_values.push_back(ps);
    out.identity_defects.push_back(id_defect);
    out.energy_defects.push_back(en_defect);
    out.identity_holds = out.identity_holds && id_defect <= tol.identity;
    out.energy_holds = out.energy_holds && en_defect <= tol.energy;
    out.inner_bounded = out.inner_bounded && ip <= 1.0 + tol.inner_slack;
    out.psi_bounded = out.psi_bounded && ps <= inv_d + tol.psi_slack;
  }
  return out;
}

CompletenessVerdict completeness_verdict(const GaborSystem& sys, double tol) {
  const ExcessDeficit ed = excess_deficit(gabor_atoms(sys), tol);
  CompletenessVerdict v;
  v.rank = ed.rank;
  v.atom_count = ed.atom_count;
  v.dimension = sys.group().order();
  v.complete = v.rank == v.dimension;
  v.d = lattice_density_ratio(sys);
  v.counting_witness = v.d > Rational(1) && v.atom_count < v.dimension;
  v.holds = !(v.complete && v.d > Rational(1));
  return v;
}

}  // namespace gablab
