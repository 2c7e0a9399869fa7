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

// Dense complex linear algebra shared by the frame-theory modules.
// Families of vectors (atoms, bases) are stored as matrix rows throughout.

#include <Eigen/Dense>

namespace gablab {

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

/// max_ij |a_ij - delta_ij|
[[nodiscard]] double identity_defect_max(const CMatrix& a);

/// Frobenius norm of H - H^*.
[[nodiscard]] double hermitian_defect(const CMatrix& h);

/// Orthonormal basis (rows) of the orthogonal complement of span(rows of
/// `spanning`) in C^dim. `spanning` must have orthonormal rows. Standard basis
/// vectors are orthogonalized against the growing basis, picking the
/// candidate with the largest residual norm each round; every candidate is
/// orthogonalized twice.
[[nodiscard]] CMatrix orthonormal_complement(const CMatrix& spanning, int dim);

}  // namespace gablab
