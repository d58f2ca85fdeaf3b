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

#include "qdiag/linalg.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdiag {

Eigen::VectorXd singular_values(const Matrix &m) {
    if (m.size() == 0) {
        return {};
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues();
}

std::size_t numerical_rank(const Eigen::VectorXd &sv, double tol) {
    if (sv.size() == 0) {
        return 0;
    }
    double top = sv.maxCoeff();
    if (!(top > 0)) {
        return 0;
    }
    std::size_t r = 0;
    for (double s : sv) {
        if (s > tol * top) {
            r++;
        }
    }
    return r;
}

std::size_t matrix_rank(const Matrix &m, double tol) {
    return numerical_rank(singular_values(m), tol);
}

HermitianEigen hermitian_eigen(const Matrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("hermitian_eigen: matrix is not square");
    }
    // Symmetrize so rounding-level anti-Hermitian parts don't leak into the solver.
    Matrix h = (m + m.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double hermiticity_defect(const Matrix &m) {
    double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0) {
        return 0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff() / scale;
}

bool is_isometry(const Matrix &m, double tol) {
    Matrix g = m.adjoint() * m;
    return (g - Matrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Matrix &m, double tol) {
    return m.rows() == m.cols() && is_isometry(m, tol);
}

bool is_orthonormal_basis(const Matrix &basis, double tol) {
    return basis.rows() == basis.cols() && is_isometry(basis, tol);
}

Matrix complete_to_unitary(const Matrix &isometry) {
    auto n = isometry.rows();
    if (isometry.cols() > n) {
        throw std::invalid_argument("complete_to_unitary: more columns than rows");
    }
    Matrix out(n, n);
    out.leftCols(isometry.cols()) = isometry;
    auto filled = isometry.cols();
    for (Eigen::Index k = 0; k < n && filled < n; k++) {
        Vector v = Vector::Unit(n, k);
        // Two passes of Gram-Schmidt keep the result orthonormal to rounding.
        for (int pass = 0; pass < 2; pass++) {
            for (Eigen::Index j = 0; j < filled; j++) {
                v -= out.col(j) * out.col(j).dot(v);
            }
        }
        double norm = v.norm();
        if (norm > 1e-6) {
            out.col(filled++) = v / norm;
        }
    }
    if (filled != n) {
        throw std::runtime_error("complete_to_unitary: could not complete basis");
    }
    return out;
}

Matrix positive_sqrt(const Matrix &m) {
    auto eig = hermitian_eigen(m);
    Eigen::VectorXd root = eig.values.cwiseMax(0.0).cwiseSqrt();
    return eig.vectors * root.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

Matrix kron(const Matrix &x, const Matrix &y) {
    Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); i++) {
        for (Eigen::Index j = 0; j < x.cols(); j++) {
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        }
    }
    return out;
}

Matrix shift_operator(std::size_t d) {
    auto n = static_cast<Eigen::Index>(d);
    Matrix x = Matrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; j++) {
        x((j + 1) % n, j) = 1;
    }
    return x;
}

Matrix clock_operator(std::size_t d) {
    auto n = static_cast<Eigen::Index>(d);
    Matrix z = Matrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; j++) {
        z(j, j) = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(d));
    }
    return z;
}

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix cnot() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return m;
}

Matrix swap_gate(std::size_t d) {
    auto n = static_cast<Eigen::Index>(d);
    Matrix m = Matrix::Zero(n * n, n * n);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            m(j * n + i, i * n + j) = 1;
        }
    }
    return m;
}

}  // namespace qdiag
