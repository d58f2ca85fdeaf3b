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

#include <gtest/gtest.h>

#include "test_util.h"

using namespace qdiag;
using namespace qdiag::testutil;

TEST(linalg, singular_values_and_rank) {
    Matrix m = Matrix::Zero(3, 2);
    m(0, 0) = 3;
    m(1, 1) = 1e-12;
    Eigen::VectorXd s = singular_values(m);
    EXPECT_NEAR(s(0), 3, 1e-15);
    EXPECT_EQ(matrix_rank(m), 1u);
    EXPECT_EQ(matrix_rank(m, 1e-14), 2u);
    EXPECT_EQ(matrix_rank(Matrix::Zero(2, 2)), 0u);
}

TEST(linalg, hermitian_eigen_ascending) {
    auto e = hermitian_eigen(pauli_x());
    EXPECT_NEAR(e.values(0), -1, 1e-15);
    EXPECT_NEAR(e.values(1), 1, 1e-15);
    EXPECT_LT(max_abs(e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint() - pauli_x()), 1e-14);
}

TEST(linalg, unitary_and_isometry_checks) {
    EXPECT_TRUE(is_unitary(pauli_y()));
    EXPECT_FALSE(is_unitary(Matrix::Ones(2, 2)));
    Matrix v = Matrix::Zero(3, 2);
    v(0, 0) = v(2, 1) = 1;
    EXPECT_TRUE(is_isometry(v));
    EXPECT_FALSE(is_unitary(v));
    Matrix u = complete_to_unitary(v);
    EXPECT_TRUE(is_unitary(u));
    EXPECT_EQ(u.leftCols(2), v);
}

TEST(linalg, complete_random_isometry) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 10; k++) {
        Matrix v = random_unitary(6, rng).leftCols(2 + k % 3);
        Matrix u = complete_to_unitary(v);
        EXPECT_TRUE(is_unitary(u));
        EXPECT_LT(max_abs(u.leftCols(v.cols()) - v), 1e-14);
    }
}

TEST(linalg, positive_sqrt_squares_back) {
    std::mt19937_64 rng(2);
    Matrix g = random_matrix(3, 3, rng);
    Matrix p = g.adjoint() * g;
    Matrix r = positive_sqrt(p);
    EXPECT_LT(max_abs(r * r - p), 1e-12);
    EXPECT_LT(hermiticity_defect(r), 1e-12);
}

TEST(linalg, kron_and_gates) {
    Matrix k = kron(pauli_x(), Matrix::Identity(2, 2));
    EXPECT_EQ(k(2, 0), Complex(1));
    EXPECT_EQ(cnot()(3, 2), Complex(1));
    EXPECT_EQ(swap_gate(3)(1 * 3 + 2, 2 * 3 + 1), Complex(1));
    EXPECT_TRUE(is_unitary(swap_gate(3)));
}

TEST(linalg, clock_and_shift_weyl_relation) {
    for (std::size_t d : {2u, 3u, 4u}) {
        Matrix x = shift_operator(d), z = clock_operator(d);
        Complex w = std::polar(1.0, 2 * M_PI / double(d));
        EXPECT_LT(max_abs(z * x - w * x * z), 1e-14);
        EXPECT_TRUE(is_unitary(x));
        EXPECT_TRUE(is_unitary(z));
    }
    EXPECT_LT(max_abs(shift_operator(2) - pauli_x()), 1e-15);
    EXPECT_LT(max_abs(clock_operator(2) - pauli_z()), 1e-15);
}
