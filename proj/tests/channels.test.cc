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


#include "qdiag/channels.h"

#include <gtest/gtest.h>

#include "qdiag/duality.h"
#include "qdiag/linalg.h"
#include "test_util.h"

using namespace qdiag;
using namespace qdiag::testutil;

namespace {

const Space A{"a", 2};
const Space B{"b", 2};
const Space E{"e", 2};
const Space F{"f", 2};

Isometry from_gate(const Matrix &g) {
    auto t = TensorObject::from_matrix("T", {open_leg(B), open_leg(F)}, {closed_leg(A), closed_leg(E)}, g);
    return isometry_from_unitary(t, TensorObject::ket("e0", E, Vector::Unit(2, 0)));
}

Isometry copy_isometry() {
    return from_gate(cnot());
}

std::vector<Matrix> matrices(const std::vector<TensorObject> &ops) {
    std::vector<Matrix> out;
    for (const auto &k : ops) {
        out.push_back(to_matrix(k, 1));
    }
    return out;
}

/// Transpose map: Q[x][x'][y][y'] = delta(y, x') delta(y', x).
TensorObject transpose_q() {
    std::vector<Complex> q(16, 0.0);
    for (std::size_t x = 0; x < 2; x++) {
        for (std::size_t xp = 0; xp < 2; xp++) {
            q[((x * 2 + xp) * 2 + xp) * 2 + x] = 1;
        }
    }
    return TensorObject("Q", {closed_leg(A), open_leg(A), open_leg(B), closed_leg(B)}, q);
}

Matrix rho_plus() {
    return Matrix::Constant(2, 2, 0.5);
}

}  // namespace

TEST(isometry, identity_gate_appends_environment_zero) {
    auto v = from_gate(Matrix::Identity(4, 4));
    Matrix expect = Matrix::Zero(4, 2);
    expect(0, 0) = 1;  // |0>|0>
    expect(2, 1) = 1;  // |1>|0>
    EXPECT_LT(max_abs(v.matrix() - expect), 1e-15);
}

TEST(isometry, cnot_gives_copy_isometry) {
    Matrix expect = Matrix::Zero(4, 2);
    expect(0, 0) = 1;
    expect(3, 1) = 1;
    EXPECT_LT(max_abs(copy_isometry().matrix() - expect), 1e-15);
}

TEST(isometry, haar_gate_passes_check) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 5; k++) {
        EXPECT_TRUE(is_isometry(random_isometry(2, 3, rng).matrix()));
    }
}

TEST(isometry, rejects_non_isometry) {
    TensorObject v("V", {open_leg(B), open_leg(F), closed_leg(A)}, std::vector<Complex>(8, 1.0));
    EXPECT_THROW(Isometry{v}, std::invalid_argument);
    TensorObject wrong("V", {open_leg(B), closed_leg(A)}, {1, 0, 0, 1});
    EXPECT_THROW(Isometry{wrong}, std::invalid_argument);
}

TEST(channel_ket, identity_and_copy) {
    auto id = channel_ket(from_gate(Matrix::Identity(4, 4)), transposer(A));
    std::vector<Complex> expect(8, 0.0);
    expect[0] = 1;  // |0>_a |0>_b |0>_f
    expect[6] = 1;  // |1>_a |1>_b |0>_f
    EXPECT_LT(max_abs_diff(id.data(), expect), 1e-15);

    auto copy = channel_ket(copy_isometry(), transposer(A));
    std::vector<Complex> ghz(8, 0.0);
    ghz[0] = ghz[7] = 1;
    EXPECT_LT(max_abs_diff(copy.data(), ghz), 1e-15);
}

TEST(kraus_ops, identity_and_dephasing) {
    auto id = matrices(kraus_ops(from_gate(Matrix::Identity(4, 4))));
    ASSERT_EQ(id.size(), 2u);
    EXPECT_LT(max_abs(id[0] - Matrix::Identity(2, 2)), 1e-15);
    EXPECT_LT(max_abs(id[1]), 1e-15);

    auto deph = matrices(kraus_ops(copy_isometry()));
    Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
    p0(0, 0) = 1;
    p1(1, 1) = 1;
    EXPECT_LT(max_abs(deph[0] - p0), 1e-15);
    EXPECT_LT(max_abs(deph[1] - p1), 1e-15);
}

TEST(transition_operator, identity_and_dephasing) {
    Channel id(from_gate(Matrix::Identity(4, 4)));
    EXPECT_LT(max_abs_diff(id.transition().data(), transition_oracle({Matrix::Identity(2, 2)})), 1e-15);
    EXPECT_EQ(id.transition().leg(0), closed_leg(A));
    EXPECT_EQ(id.transition().leg(1), open_leg(A));
    EXPECT_EQ(id.transition().leg(2), open_leg(B));
    EXPECT_EQ(id.transition().leg(3), closed_leg(B));

    Channel deph(copy_isometry());
    EXPECT_LT(max_abs_diff(deph.transition().data(), transition_oracle(matrices(deph.kraus()))), 1e-15);
    std::vector<Complex> expect(16, 0.0);
    expect[0] = expect[15] = 1;
    EXPECT_LT(max_abs_diff(deph.transition().data(), expect), 1e-15);
}

TEST(apply_superop, identity_and_dephasing) {
    std::mt19937_64 rng(2);
    Matrix m = random_matrix(2, 2, rng);
    Channel id(from_gate(Matrix::Identity(4, 4)));
    auto out = apply_superop(id, TensorObject::linear_map("A", A, A, m));
    EXPECT_EQ(out.leg(0), open_leg(B));
    EXPECT_LT(max_abs(to_matrix(out, 1) - m), 1e-14);

    Channel deph(copy_isometry());
    auto plus = apply_superop(deph, TensorObject::linear_map("rho", A, A, rho_plus()));
    EXPECT_LT(max_abs(to_matrix(plus, 1) - 0.5 * Matrix::Identity(2, 2)), 1e-15);
}

TEST(dynamical_operator, identity_and_dephasing) {
    Channel id(from_gate(Matrix::Identity(4, 4)));
    Matrix r = matricize(id.dynamical(), {0, 1}, {2, 3});
    Vector phi = Vector::Zero(4);
    phi(0) = phi(3) = 1;  // sqrt(2) |Phi+>
    EXPECT_LT(max_abs(r - phi * phi.adjoint()), 1e-15);
    EXPECT_EQ(dynamical_rank(id.dynamical()), 1u);

    Channel deph(copy_isometry());
    auto eig = hermitian_eigen(matricize(deph.dynamical(), {0, 1}, {2, 3}));
    EXPECT_NEAR(eig.values(0), 0, 1e-15);
    EXPECT_NEAR(eig.values(1), 0, 1e-15);
    EXPECT_NEAR(eig.values(2), 1, 1e-15);
    EXPECT_NEAR(eig.values(3), 1, 1e-15);
}

TEST(kraus_rank, unitary_dephasing_depolarizing) {
    std::mt19937_64 rng(3);
    Matrix u = random_unitary(2, rng);
    EXPECT_EQ(kraus_rank(Channel(from_gate(kron(u, Matrix::Identity(2, 2))))), 1u);
    EXPECT_EQ(kraus_rank(Channel(copy_isometry())), 2u);

    const Space f4{"f", 4};
    std::vector<TensorObject> paulis;
    for (const Matrix &p : {Matrix(Matrix::Identity(2, 2)), pauli_x(), pauli_y(), pauli_z()}) {
        paulis.push_back(TensorObject::linear_map("K", B, A, 0.5 * p));
    }
    Channel dep(isometry_from_kraus(paulis, f4));
    EXPECT_EQ(kraus_rank(dep), 4u);
    EXPECT_EQ(cross_operator_rank(dep.isometry()), 4u);
    auto out = apply_superop(dep, TensorObject::linear_map("rho", A, A, rho_plus()));
    EXPECT_LT(max_abs(to_matrix(out, 1) - 0.5 * Matrix::Identity(2, 2)), 1e-15);
}

TEST(cp, isometry_derived_channels_pass) {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 10; k++) {
        Channel ch(random_isometry(2 + k % 2, 1 + k % 3, rng));
        auto v = is_completely_positive(ch.transition());
        EXPECT_TRUE(v.completely_positive);
        EXPECT_GE(v.min_eigenvalue, -1e-10);
    }
}

TEST(cp, transpose_map_fails) {
    auto q = transpose_q();
    auto r = dynamical_operator(q, transposer(A));
    EXPECT_LT(max_abs(matricize(r, {0, 1}, {2, 3}) - swap_gate(2)), 1e-15);
    auto v = is_completely_positive(q);
    EXPECT_FALSE(v.completely_positive);
    EXPECT_NEAR(v.min_eigenvalue, -1, 1e-10);
    EXPECT_THROW(kraus_from_transition(q), std::domain_error);
}

TEST(cp, identity_transpose_mixture_threshold) {
    // R(p) = (1 - p) 2|Phi+><Phi+| + p SWAP has the singlet eigenvalue -p, so CP holds only at p = 0.
    auto id = Channel(from_gate(Matrix::Identity(4, 4))).transition();
    auto tq = transpose_q();
    for (double p : {0.0, 0.01, 0.1, 0.5}) {
        auto v = is_completely_positive(Complex(1 - p) * id + Complex(p) * tq);
        EXPECT_NEAR(v.min_eigenvalue, -p, 1e-12);
        EXPECT_EQ(v.completely_positive, p == 0.0);
    }
    auto mix = is_completely_positive(Complex(0.9) * id + Complex(0.1) * tq);
    EXPECT_FALSE(mix.completely_positive);
}

TEST(cp, accepts_non_trace_preserving) {
    auto q = Channel(copy_isometry()).transition();
    EXPECT_TRUE(is_completely_positive(Complex(0.5) * q).completely_positive);
}

// Properties

TEST(property, kraus_basis_independence) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; trial++) {
        Channel ch(random_isometry(2, 3, rng));
        auto rotated = kraus_ops(ch.isometry(), random_unitary(3, rng));
        auto q = transition_operator(rotated);
        EXPECT_LT(max_abs_diff(q, ch.transition()), 1e-12);
        auto r = dynamical_operator(q, transposer(ch.isometry().a()));
        EXPECT_LT(max_abs_diff(r, ch.dynamical()), 1e-12);
        EXPECT_EQ(dynamical_rank(r), kraus_rank(ch));
    }
}

TEST(property, kraus_completeness) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 10; trial++) {
        std::size_t d = 2 + trial % 2;
        Channel ch(random_isometry(d, 1 + trial % 3, rng));
        Matrix sum = Matrix::Zero(d, d);
        for (const auto &k : matrices(ch.kraus())) {
            sum += k.adjoint() * k;
        }
        EXPECT_LT(max_abs(sum - Matrix::Identity(d, d)), 1e-10);
    }
}

TEST(property, kraus_rank_three_ways) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; trial++) {
        std::size_t d = 2 + trial % 2;
        Channel ch(random_isometry(d, 1 + trial % 4, rng));
        auto r = matricize(ch.dynamical(), {0, 1}, {2, 3});
        auto eig = hermitian_eigen(r);
        std::size_t nonzero = (eig.values.array().abs() > 1e-8 * eig.values.cwiseAbs().maxCoeff()).count();
        EXPECT_EQ(cross_operator_rank(ch.isometry()), nonzero);
        EXPECT_EQ(kraus_rank(ch), nonzero);
    }
}

TEST(property, kraus_reconstruction_from_cp_verdict) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; trial++) {
        Channel ch(random_isometry(2 + trial % 2, 1 + trial % 3, rng));
        auto ys = kraus_from_transition(ch.transition());
        EXPECT_LT(max_abs_diff(transition_operator(ys), ch.transition()), 1e-10);
        EXPECT_LT(max_abs_diff(ch.transition().data(), transition_oracle(matrices(ys))), 1e-10);
    }
}

TEST(property, superop_paths_agree) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; trial++) {
        Channel ch(random_isometry(3, 2, rng));
        auto in = TensorObject::linear_map("A", ch.isometry().a(), ch.isometry().a(), random_matrix(3, 3, rng));
        EXPECT_LT(max_abs_diff(apply_superop(ch, in), apply_superop_kraus(ch, in)), 1e-12);
    }
}

TEST(property, extended_channel_positivity) {
    std::mt19937_64 rng(10);
    const Space s{"s", 2};
    for (int trial = 0; trial < 20; trial++) {
        Channel ch(random_isometry(2, 2, rng));
        Matrix g = random_matrix(4, 4, rng);
        auto p = TensorObject::from_matrix(
            "P", {open_leg(A), open_leg(s)}, {closed_leg(A), closed_leg(s)}, g.adjoint() * g);
        auto out = apply_extended(ch, p);
        EXPECT_EQ(out.leg(0), open_leg(B));
        EXPECT_EQ(out.leg(1), open_leg(s));
        EXPECT_GE(is_positive(out, {0, 1}, {2, 3}).min_eigenvalue, -1e-9);
    }
}
