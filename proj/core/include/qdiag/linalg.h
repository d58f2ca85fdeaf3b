// Copyright 2026 The qdiag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDIAG_LINALG_H
#define QDIAG_LINALG_H

#include <cstddef>

#include "qdiag/tensor.h"

namespace qdiag {

/// Descending singular values.
Eigen::VectorXd singular_values(const Matrix &m);

/// Count of values > tol * max(values); 0 when all vanish.
std::size_t numerical_rank(const Eigen::VectorXd &singular_values, double tol = kDefaultRankTol);
std::size_t matrix_rank(const Matrix &m, double tol = kDefaultRankTol);

struct HermitianEigen {
    Eigen::VectorXd values;  // ascending
    Matrix vectors;          // columns
};
HermitianEigen hermitian_eigen(const Matrix &m);

/// max|m - m^dagger| / max|m|, or 0 for the zero matrix.
double hermiticity_defect(const Matrix &m);

bool is_unitary(const Matrix &m, double tol = 1e-10);
/// m^dagger m = I.
bool is_isometry(const Matrix &m, double tol = 1e-10);
/// Columns orthonormal within tol.
bool is_orthonormal_basis(const Matrix &basis, double tol = 1e-10);

/// Appends columns to an isometry until it is square and unitary, taking standard basis
/// vectors in order and orthogonalizing each against everything kept so far.
Matrix complete_to_unitary(const Matrix &isometry);

/// Positive square root of a positive semidefinite Hermitian matrix. Small negative
/// eigenvalues from rounding are clamped to zero.
Matrix positive_sqrt(const Matrix &m);

Matrix kron(const Matrix &x, const Matrix &y);

/// Cyclic shift |j> -> |j+1 mod d>.
Matrix shift_operator(std::size_t d);
/// Diagonal clock, |j> -> w^j |j> with w = exp(2 pi i / d).
Matrix clock_operator(std::size_t d);

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix cnot();
Matrix swap_gate(std::size_t d);

}  // namespace qdiag

#endif
