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

#include "gablab/linalg.hpp"

#include <vector>

namespace gablab {

double identity_defect_max(const CMatrix& a) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const auto target = (i == j) ? std::complex<double>(1.0, 0.0) : std::complex<double>(0.0, 0.0);
      worst = std::max(worst, std::abs(a(i, j) - target));
    }
  }
  return worst;
}

double hermitian_defect(const CMatrix& h) { return (h - h.adjoint()).norm(); }

CMatrix orthonormal_complement(const CMatrix& spanning, int dim) {
  const int have = static_cast<int>(spanning.rows());
  const int need = dim - have;
  CMatrix basis(dim, dim);  // rows; first `have` copied from spanning
  if (have > 0) basis.topRows(have) = spanning;
  int filled = have;

  // Residuals of all standard basis vectors against the current basis.
  // Rows of `resid` are e_k minus its projection onto span(basis rows).
  CMatrix resid = CMatrix::Identity(dim, dim);
  auto project_out = [&](int upto) {
    if (upto == 0) return;
    // resid <- resid - (resid * B^H) * B, B = basis rows [0, upto)
    const auto b = basis.topRows(upto);
    CMatrix coeff = resid * b.adjoint();
    resid.noalias() -= coeff * b;
  };
  project_out(filled);
  project_out(filled);

  std::vector<char> used(dim, 0);
  for (int k = 0; k < need; ++k) {
    int best = -1;
    double best_norm = -1.0;
    for (int c = 0; c < dim; ++c) {
      if (used[c]) continue;
      const double nr = resid.row(c).squaredNorm();
      if (nr > best_norm) {
        best_norm = nr;
        best = c;
      }
    }
    used[best] = 1;
    Eigen::RowVectorXcd v = resid.row(best);
    for (int pass = 0; pass < 2; ++pass) {
      const auto b = basis.topRows(filled);
      const Eigen::VectorXcd coeff = b.conjugate() * v.transpose();
      v -= coeff.transpose() * b;
    }
    v /= v.norm();
    basis.row(filled) = v;
    ++filled;
    // Remove the new direction from the remaining residuals.
    const Eigen::VectorXcd c = resid * v.adjoint();
    resid.noalias() -= c * v;
  }
  return basis.bottomRows(need);
}

}  // namespace gablab
