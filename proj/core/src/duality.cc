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

#include <cmath>

#include "qdiag/linalg.h"

namespace qdiag {

namespace {

void check_operator_on(const TensorObject &op, const Space &s, const char *what) {
    if (op.num_legs() != 2 || op.leg(0) != open_leg(s) || op.leg(1) != closed_leg(s)) {
        throw std::invalid_argument(std::string(what) + " must have legs (" + s.label + "+, " + s.label + "-)");
    }
}

void check_invertible(const TensorObject &psi, const SchmidtDecomposition &sd) {
    if (psi.leg(0).dim() != psi.leg(1).dim()) {
        throw NotInvertibleError("ket is not invertible: d_a != d_b");
    }
    if (sd.rank != psi.leg(0).dim()) {
        throw NotInvertibleError(
            "ket is not invertible: Schmidt rank " + std::to_string(sd.rank) + " < " +
            std::to_string(psi.leg(0).dim()));
    }
}

}  // namespace

void check_bipartite_ket(const TensorObject &psi) {
    if (psi.num_legs() != 2 || psi.leg(0).polarity != Polarity::open || psi.leg(1).polarity != Polarity::open) {
        throw std::invalid_argument("'" + psi.name() + "' must have exactly two open legs");
    }
}

TensorObject transposer(const Space &space) {
    auto n = static_cast<Eigen::Index>(space.dim);
    return transposer(space, Matrix::Identity(n, n));
}

TensorObject transposer(const Space &space, const Matrix &basis) {
    auto n = static_cast<Eigen::Index>(space.dim);
    if (basis.rows() != n || !is_orthonormal_basis(basis, 1e-10)) {
        throw std::invalid_argument("transposer: basis is not orthonormal on '" + space.label + "'");
    }
    Matrix m = basis * basis.transpose();
    return TensorObject::from_matrix("A_" + space.label, {open_leg(space)}, {open_leg(space)}, m);
}

TensorObject ket_to_map(const TensorObject &psi, const TensorObject &transposer) {
    check_bipartite_ket(psi);
    TensorObject m = contract_legs(adjoint(transposer), 1, psi, 0);
    return permute_legs(m, {1, 0}).renamed("M_" + psi.name());
}

TensorObject map_to_ket(const TensorObject &map, const TensorObject &transposer) {
    if (map.num_legs() != 2 || map.leg(0).polarity != Polarity::open || map.leg(1).polarity != Polarity::closed) {
        throw std::invalid_argument("map_to_ket: map must have legs (b+, a-)");
    }
    return contract_legs(transposer, 1, map, 1).renamed(map.name());
}

TensorObject SchmidtDecomposition::reconstruct() const {
    Matrix mu = Matrix::Zero(static_cast<Eigen::Index>(a.dim), static_cast<Eigen::Index>(b.dim));
    for (Eigen::Index j = 0; j < coefficients.size(); j++) {
        mu += coefficients(j) * left_basis.col(j) * right_basis.col(j).transpose();
    }
    return TensorObject::from_matrix("", {open_leg(a)}, {open_leg(b)}, mu);
}

SchmidtDecomposition schmidt(const TensorObject &psi, double tol) {
    check_bipartite_ket(psi);
    Matrix mu = matricize(psi, {0}, {1});
    Eigen::JacobiSVD<Matrix> svd(mu, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SchmidtDecomposition sd;
    sd.a = psi.leg(0).space;
    sd.b = psi.leg(1).space;
    sd.coefficients = svd.singularValues();
    sd.left_basis = svd.matrixU();
    sd.right_basis = svd.matrixV().conjugate();
    sd.rank = numerical_rank(sd.coefficients, tol);
    for (Eigen::Index j = 0; j < sd.coefficients.size(); j++) {
        Eigen::Index top;
        sd.left_basis.col(j).cwiseAbs().maxCoeff(&top);
        Complex phase = sd.left_basis(top, j) / std::abs(sd.left_basis(top, j));
        sd.left_basis.col(j) *= std::conj(phase);
        sd.right_basis.col(j) *= phase;
    }
    return sd;
}

TensorObject reduced_density(const TensorObject &psi, Subsystem keep) {
    check_bipartite_ket(psi);
    std::size_t traced = keep == Subsystem::a ? 1 : 0;
    Diagram d({psi, adjoint(psi)}, {Edge{{0, traced}, {1, traced}}});
    return contract_all(d).renamed("rho_" + psi.leg(1 - traced).space.label);
}

TensorObject invert_ket(const TensorObject &psi, double tol) {
    auto sd = schmidt(psi, tol);
    check_invertible(psi, sd);
    Matrix nu = matricize(psi, {0}, {1}).inverse();
    return TensorObject::from_matrix(
        psi.name() + "^-1", {closed_leg(sd.a)}, {closed_leg(sd.b)}, nu.transpose());
}

TensorObject invert_ket_schmidt(const TensorObject &psi, double tol) {
    auto sd = schmidt(psi, tol);
    check_invertible(psi, sd);
    auto n = static_cast<Eigen::Index>(sd.a.dim);
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; j++) {
        m += (1.0 / sd.coefficients(j)) * sd.left_basis.col(j).conjugate() * sd.right_basis.col(j).adjoint();
    }
    return TensorObject::from_matrix(psi.name() + "^-1", {closed_leg(sd.a)}, {closed_leg(sd.b)}, m);
}

TensorObject interchange_exact(const TensorObject &a_op, const TensorObject &psi, double tol) {
    check_bipartite_ket(psi);
    check_operator_on(a_op, psi.leg(0).space, "A");
    TensorObject inv = invert_ket(psi, tol);
    Diagram d({psi, a_op, inv}, {});
    d.connect({1, 0}, {2, 0});
    d.connect({0, 0}, {1, 1});
    return contract_all(d).renamed("B");
}

InterchangeResult interchange_unitary(const TensorObject &a_op, const TensorObject &psi) {
    check_bipartite_ket(psi);
    const Space &sa = psi.leg(0).space;
    const Space &sb = psi.leg(1).space;
    check_operator_on(a_op, sa, "A");
    if (sa.dim != sb.dim) {
        throw std::invalid_argument("interchange_unitary: d_a != d_b");
    }
    auto sd = schmidt(psi);
    auto k = sd.coefficients.size();

    Matrix s = Matrix::Zero(static_cast<Eigen::Index>(sb.dim), static_cast<Eigen::Index>(sa.dim));
    for (Eigen::Index j = 0; j < k; j++) {
        s += sd.right_basis.col(j) * sd.left_basis.col(j).adjoint();
    }
    Matrix a = to_matrix(a_op, 1);
    Matrix b = s * a * s.adjoint();

    Matrix mu = matricize(psi, {0}, {1});
    auto psi_a = TensorObject::from_matrix("", {open_leg(sa)}, {open_leg(sb)}, a * mu);
    auto psi_b = TensorObject::from_matrix("", {open_leg(sa)}, {open_leg(sb)}, mu * b.transpose());
    auto sa_ = schmidt(psi_a);
    auto sb_ = schmidt(psi_b);
    Matrix u = sa_.left_basis * sb_.left_basis.adjoint();
    Matrix v = sa_.right_basis * sb_.right_basis.adjoint();

    return InterchangeResult{
        TensorObject::linear_map("B", sb, sb, b),
        TensorObject::linear_map("U", sa, sa, u),
        TensorObject::linear_map("V", sb, sb, v),
        TensorObject::linear_map("S", sb, sa, s),
    };
}

}  // namespace qdiag
