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


#include "qdiag/duality.h"

#include <gtest/gtest.h>

#include "qdiag/linalg.h"
#include "test_util.h"

using namespace qdiag;
using namespace qdiag::testutil;

namespace {

const Space A{"a", 2};
const Space B{"b", 2};

TensorObject apply_a(const TensorObject &op, const TensorObject &psi) {
    return contract_legs(op, 1, psi, 0);  // (a+, b+)
}

TensorObject apply_b(const TensorObject &op, const TensorObject &psi) {
    return permute_legs(contract_legs(op, 1, psi, 1), {1, 0});
}

Eigen::VectorXd sorted_singular_values(const TensorObject &psi) {
    Eigen::VectorXd s = singular_values(matricize(psi, {0}, {1}));
    std::sort(s.data(), s.data() + s.size(), std::greater<>());
    return s;
}

}  // namespace

TEST(transposer, standard_basis_data_and_norm) {
    auto t = transposer(A);
    EXPECT_EQ(t.leg(0), open_leg(A));
    EXPECT_EQ(t.leg(1), open_leg(A));
    std::vector<Complex> expect{1, 0, 0, 1};
    EXPECT_EQ(max_abs_diff(t.data(), expect), 0);
    const Space c3{"c", 3};
    EXPECT_NEAR(transposer(c3).norm() * transposer(c3).norm(), 3.0, 1e-14);
}

TEST(transposer, completeness_gives_identity) {
    std::mt19937_64 rng(1);
    const Space c3{"c", 3};
    auto t = transposer(c3, random_unitary(3, rng));
    auto id = contract_legs(t, 1, adjoint(t), 1);
    EXPECT_LT(max_abs(to_matrix(id, 1) - Matrix::Identity(3, 3)), 1e-14);
}

TEST(transposer, rejects_non_orthonormal_basis) {
    Matrix m = Matrix::Ones(2, 2);
    EXPECT_THROW(transposer(A, m), std::invalid_argument);
}

TEST(ket_to_map, bell_gives_identity) {
    TensorObject psi("psi", {open_leg(A), open_leg(B)}, {1, 0, 0, 1});
    auto m = ket_to_map(psi, transposer(A));
    EXPECT_EQ(m.leg(0), open_leg(B));
    EXPECT_EQ(m.leg(1), closed_leg(A));
    EXPECT_LT(max_abs(to_matrix(m, 1) - Matrix::Identity(2, 2)), 1e-15);
    EXPECT_TRUE(is_unitary(to_matrix(m, 1)));
}

TEST(ket_to_map, basis_ket_gives_rank_one_map) {
    TensorObject psi("psi", {open_leg(A), open_leg(B)}, {0, 1, 0, 0});  // |01>
    Matrix expect = Matrix::Zero(2, 2);
    expect(1, 0) = 1;  // |1><0|
    auto m = ket_to_map(psi, transposer(A));
    EXPECT_LT(max_abs(to_matrix(m, 1) - expect), 1e-15);
    EXPECT_EQ(rank(m, {0}, {1}), 1u);
}

TEST(ket_to_map, round_trip_any_basis) {
    std::mt19937_64 rng(2);
    const Space c3{"c", 3};
    for (int trial = 0; trial < 10; trial++) {
        auto t = transposer(c3, random_unitary(3, rng));
        auto psi = random_ket(c3, B, rng);
        auto back = map_to_ket(ket_to_map(psi, t), t);
        EXPECT_LT(max_abs(back.as_vector() - psi.as_vector()), 1e-12);
    }
}

TEST(schmidt, bell_product_and_partial) {
    const double s = std::sqrt(0.5);
    auto bell = schmidt(diagonal_ket(A, B, {s, s}));
    EXPECT_NEAR(bell.coefficients(0), s, 1e-15);
    EXPECT_NEAR(bell.coefficients(1), s, 1e-15);
    EXPECT_EQ(bell.rank, 2u);

    auto prod = schmidt(diagonal_ket(A, B, {1}));
    EXPECT_NEAR(prod.coefficients(0), 1, 1e-15);
    EXPECT_NEAR(prod.coefficients(1), 0, 1e-15);
    EXPECT_EQ(prod.rank, 1u);

    auto partial = schmidt(diagonal_ket(A, B, {std::sqrt(0.8), std::sqrt(0.2)}));
    EXPECT_NEAR(partial.coefficients(0), std::sqrt(0.8), 1e-15);
    EXPECT_NEAR(partial.min_coefficient(), std::sqrt(0.2), 1e-15);
}

TEST(reduced_density, examples) {
    const double s = std::sqrt(0.5);
    auto bell = reduced_density(diagonal_ket(A, B, {s, s}), Subsystem::a);
    EXPECT_LT(max_abs(to_matrix(bell, 1) - 0.5 * Matrix::Identity(2, 2)), 1e-15);

    TensorObject k01("psi", {open_leg(A), open_leg(B)}, {0, 1, 0, 0});
    Matrix p0 = Matrix::Zero(2, 2);
    p0(0, 0) = 1;
    EXPECT_LT(max_abs(to_matrix(reduced_density(k01, Subsystem::a), 1) - p0), 1e-15);

    auto rb = reduced_density(diagonal_ket(A, B, {std::sqrt(0.8), std::sqrt(0.2)}), Subsystem::b);
    EXPECT_EQ(rb.leg(0), open_leg(B));
    Matrix expect = Matrix::Zero(2, 2);
    expect(0, 0) = 0.8;
    expect(1, 1) = 0.2;
    EXPECT_LT(max_abs(to_matrix(rb, 1) - expect), 1e-15);
}

TEST(invert_ket, bell_inverse) {
    const double s = std::sqrt(0.5);
    auto psi = diagonal_ket(A, B, {s, s});
    auto inv = invert_ket(psi);
    EXPECT_EQ(inv.leg(0), closed_leg(A));
    EXPECT_EQ(inv.leg(1), closed_leg(B));
    auto sv = sorted_singular_values(inv);
    EXPECT_NEAR(sv(0), std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(sv(1), std::sqrt(2.0), 1e-14);
    EXPECT_LT(max_abs(to_matrix(contract_legs(psi, 0, inv, 0), 1) - Matrix::Identity(2, 2)), 1e-14);
}

TEST(invert_ket, partial_coefficients) {
    auto inv = invert_ket(diagonal_ket(A, B, {std::sqrt(0.8), std::sqrt(0.2)}));
    auto sv = sorted_singular_values(inv);
    EXPECT_NEAR(sv(0), 1 / std::sqrt(0.2), 1e-14);
    EXPECT_NEAR(sv(1), 1 / std::sqrt(0.8), 1e-14);
}

TEST(invert_ket, product_is_not_invertible) {
    EXPECT_THROW(invert_ket(diagonal_ket(A, B, {1})), NotInvertibleError);
    EXPECT_THROW(invert_ket_schmidt(diagonal_ket(A, B, {1})), NotInvertibleError);
    const Space c3{"c", 3};
    std::mt19937_64 rng(0);
    EXPECT_THROW(invert_ket(random_ket(A, c3, rng)), NotInvertibleError);
}

TEST(interchange_exact, diagonal_and_bell) {
    const double s = std::sqrt(0.5);
    auto bell = diagonal_ket(A, B, {s, s});
    auto z = TensorObject::linear_map("A", A, A, pauli_z());
    auto x = TensorObject::linear_map("A", A, A, pauli_x());
    EXPECT_LT(max_abs(to_matrix(interchange_exact(z, bell), 1) - pauli_z()), 1e-14);
    EXPECT_LT(max_abs(to_matrix(interchange_exact(x, bell), 1) - pauli_x()), 1e-14);
}

TEST(interchange_exact, partial_resource) {
    auto psi = diagonal_ket(A, B, {std::sqrt(0.8), std::sqrt(0.2)});
    auto x = TensorObject::linear_map("A", A, A, pauli_x());
    auto b = interchange_exact(x, psi);
    // (A (x) I)|Psi> = (I (x) B)|Psi> with mu = diag(sqrt .8, sqrt .2) forces B = (mu^-1 X mu)^T.
    Matrix expect(2, 2);
    expect << 0, 2, 0.5, 0;
    EXPECT_LT(max_abs(to_matrix(b, 1) - expect), 1e-12);
    EXPECT_LT(max_abs((apply_a(x, psi) - apply_b(b, psi)).as_vector()), 1e-9);
}

TEST(interchange_unitary, rank_one_resource) {
    auto psi = diagonal_ket(A, B, {1});
    auto x = TensorObject::linear_map("A", A, A, pauli_x());
    EXPECT_THROW(interchange_exact(x, psi), NotInvertibleError);
    auto r = interchange_unitary(x, psi);
    auto lhs = apply_a(x, psi);
    auto rhs = apply_a(r.u, apply_b(r.v, apply_b(r.b_op, psi)));
    EXPECT_LT(max_abs(lhs.as_vector() - rhs.as_vector()), 1e-9);
    EXPECT_TRUE(is_unitary(to_matrix(r.u, 1)));
    EXPECT_TRUE(is_unitary(to_matrix(r.v, 1)));
}

TEST(interchange_unitary, identity_operator) {
    std::mt19937_64 rng(3);
    auto psi = random_ket(A, B, rng);
    auto r = interchange_unitary(identity(A), psi);
    EXPECT_LT(max_abs(to_matrix(r.b_op, 1) - Matrix::Identity(2, 2)), 1e-9);
    auto rhs = apply_a(r.u, apply_b(r.v, apply_b(r.b_op, psi)));
    EXPECT_LT(max_abs(psi.as_vector() - rhs.as_vector()), 1e-9);
}

TEST(interchange_unitary, agrees_with_exact_on_full_rank) {
    std::mt19937_64 rng(4);
    auto psi = random_ket(A, B, rng);
    auto op = TensorObject::linear_map("A", A, A, random_matrix(2, 2, rng));
    auto exact = interchange_exact(op, psi);
    EXPECT_LT(max_abs((apply_a(op, psi) - apply_b(exact, psi)).as_vector()), 1e-9);
    auto r = interchange_unitary(op, psi);
    auto rhs = apply_a(r.u, apply_b(r.v, apply_b(r.b_op, psi)));
    EXPECT_LT(max_abs(apply_a(op, psi).as_vector() - rhs.as_vector()), 1e-9);
}

TEST(interchange_unitary, rejects_unequal_dimensions) {
    const Space c3{"c", 3};
    std::mt19937_64 rng(5);
    EXPECT_THROW(interchange_unitary(identity(A), random_ket(A, c3, rng)), std::invalid_argument);
}

// Properties

TEST(property, transpose_rule_any_basis) {
    std::mt19937_64 rng(10);
    const Space c3{"c", 3};
    for (int trial = 0; trial < 10; trial++) {
        Matrix w = random_unitary(3, rng);
        auto t = transposer(c3, w);
        Vector psi = random_state(3, rng);
        auto bra = contract_legs(adjoint(t), 0, TensorObject::ket("psi", c3, psi), 0);
        for (int k = 0; k < 3; k++) {
            Complex applied = contract_legs(TensorObject::ket("ak", c3, w.col(k)), 0, bra, 0).value();
            EXPECT_NEAR(std::abs(applied - w.col(k).dot(psi)), 0, 1e-14);
        }
    }
}

TEST(property, double_transposer_transposes_operator) {
    std::mt19937_64 rng(11);
    const Space c3{"c", 3};
    for (int trial = 0; trial < 10; trial++) {
        Matrix w = random_unitary(3, rng);
        auto t = transposer(c3, w);
        Matrix p = random_matrix(3, 3, rng);
        auto op = TensorObject::linear_map("P", c3, c3, p);
        Diagram d({adjoint(t), op, t}, {});
        d.connect({1, 0}, {0, 0});
        d.connect({2, 0}, {1, 1});
        auto r = contract_all(d);  // (c-, c+)
        Matrix m = matricize(r, {1}, {0});
        Matrix lhs = w.adjoint() * m * w;
        Matrix rhs = (w.adjoint() * p * w).transpose();
        EXPECT_LT(max_abs(lhs - rhs), 1e-14 * 10);
    }
}

TEST(property, schmidt_reconstruction) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; trial++) {
        const Space a{"a", 2 + static_cast<std::size_t>(trial % 3)};
        const Space b{"b", 2 + static_cast<std::size_t>((trial / 3) % 3)};
        auto psi = random_ket(a, b, rng);
        auto s = schmidt(psi);
        EXPECT_LT(max_abs(s.reconstruct().as_vector() - psi.as_vector()), 1e-10);
        EXPECT_TRUE(is_isometry(s.left_basis));
        EXPECT_TRUE(is_isometry(s.right_basis));
    }
}

TEST(property, inverse_identities_and_double_inverse) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; trial++) {
        std::size_t d = 2 + trial % 3;
        const Space a{"a", d}, b{"b", d};
        auto psi = random_ket(a, b, rng);
        auto inv = invert_ket(psi);
        EXPECT_LT(max_abs(to_matrix(contract_legs(psi, 0, inv, 0), 1) - Matrix::Identity(d, d)), 1e-9);
        EXPECT_LT(max_abs(to_matrix(contract_legs(psi, 1, inv, 1), 1) - Matrix::Identity(d, d)), 1e-9);
        EXPECT_LT(max_abs(inv.as_vector() - invert_ket_schmidt(psi).as_vector()), 1e-9);
        auto again = invert_ket(inv.with_legs({open_leg(a), open_leg(b)}));
        EXPECT_LT(max_abs(again.as_vector() - psi.as_vector()), 1e-9);
    }
}

TEST(property, interchange_preserves_schmidt_coefficients) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 30; trial++) {
        std::size_t d = 2 + trial % 3;
        const Space a{"a", d}, b{"b", d};
        auto psi = random_ket(a, b, rng);
        auto op = TensorObject::linear_map("A", a, a, random_matrix(d, d, rng));
        auto r = interchange_unitary(op, psi);
        auto sa = sorted_singular_values(apply_a(op, psi));
        auto sb = sorted_singular_values(apply_b(r.b_op, psi));
        EXPECT_LT((sa - sb).cwiseAbs().maxCoeff(), 1e-10);
    }
}
