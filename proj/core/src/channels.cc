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

#include <cmath>
#include <stdexcept>

#include "qdiag/duality.h"
#include "qdiag/linalg.h"

namespace qdiag {

namespace {

void check_transition_legs(const TensorObject &q) {
    bool ok = q.num_legs() == 4 && q.leg(0).polarity == Polarity::closed && q.leg(1).polarity == Polarity::open &&
              q.leg(0).space == q.leg(1).space && q.leg(2).polarity == Polarity::open &&
              q.leg(3).polarity == Polarity::closed && q.leg(2).space == q.leg(3).space;
    if (!ok) {
        throw std::invalid_argument("transition operator must have legs (a-, a+, b+, b-)");
    }
}

void check_kraus_op(const TensorObject &k, const TensorObject &first) {
    if (k.num_legs() != 2 || k.leg(0).polarity != Polarity::open || k.leg(1).polarity != Polarity::closed ||
        k.legs() != first.legs()) {
        throw std::invalid_argument("Kraus operators must share legs (b+, a-)");
    }
}

}  // namespace

Isometry::Isometry(TensorObject v, double tol) : v_(std::move(v)) {
    if (v_.num_legs() != 3 || v_.leg(0).polarity != Polarity::open || v_.leg(1).polarity != Polarity::open ||
        v_.leg(2).polarity != Polarity::closed) {
        throw std::invalid_argument("isometry must have legs (b+, f+, a-)");
    }
    if (!is_isometry(matrix(), tol)) {
        throw std::invalid_argument("'" + v_.name() + "' is not an isometry");
    }
}

Matrix Isometry::matrix() const {
    return to_matrix(v_, 2);
}

Isometry isometry_from_unitary(const TensorObject &t, const TensorObject &e0) {
    if (t.num_legs() != 4 || t.leg(0).polarity != Polarity::open || t.leg(1).polarity != Polarity::open ||
        t.leg(2).polarity != Polarity::closed || t.leg(3).polarity != Polarity::closed) {
        throw std::invalid_argument("T must have legs (b+, f+, a-, e-)");
    }
    if (!is_unitary(to_matrix(t, 2), 1e-10)) {
        throw std::invalid_argument("T is not unitary");
    }
    if (e0.num_legs() != 1 || std::abs(e0.norm() - 1) > 1e-10) {
        throw std::invalid_argument("e0 must be a normalized ket");
    }
    return Isometry(contract_legs(t, 3, e0, 0).renamed("V"));
}

Isometry isometry_from_kraus(std::span<const TensorObject> kraus, const Space &f) {
    if (kraus.size() != f.dim) {
        throw std::invalid_argument("need one Kraus operator per basis vector of f");
    }
    for (const auto &k : kraus) {
        check_kraus_op(k, kraus[0]);
    }
    const Space &b = kraus[0].leg(0).space;
    const Space &a = kraus[0].leg(1).space;
    std::vector<Complex> data(b.dim * f.dim * a.dim);
    for (std::size_t y = 0; y < b.dim; y++) {
        for (std::size_t l = 0; l < f.dim; l++) {
            for (std::size_t x = 0; x < a.dim; x++) {
                data[(y * f.dim + l) * a.dim + x] = kraus[l].at({y, x});
            }
        }
    }
    return Isometry(TensorObject("V", {open_leg(b), open_leg(f), closed_leg(a)}, std::move(data)));
}

TensorObject channel_ket(const Isometry &v, const TensorObject &transposer) {
    return contract_legs(transposer, 1, v.tensor(), 2).renamed("Psi_V");
}

std::vector<TensorObject> kraus_ops(const Isometry &v, const Matrix &f_basis) {
    const Space &f = v.f();
    if (f_basis.rows() != static_cast<Eigen::Index>(f.dim) || !is_orthonormal_basis(f_basis, 1e-10)) {
        throw std::invalid_argument("kraus_ops: f basis is not orthonormal");
    }
    std::vector<TensorObject> out;
    for (Eigen::Index l = 0; l < f_basis.cols(); l++) {
        auto bra = adjoint(TensorObject::ket("f", f, f_basis.col(l)));
        auto k = contract_legs(v.tensor(), 1, bra, 0);
        out.push_back(k.renamed("K" + std::to_string(l)));
    }
    return out;
}

std::vector<TensorObject> kraus_ops(const Isometry &v) {
    auto n = static_cast<Eigen::Index>(v.f().dim);
    return kraus_ops(v, Matrix::Identity(n, n));
}

TensorObject transition_operator(const Isometry &v) {
    Diagram d({v.tensor(), adjoint(v.tensor())}, {Edge{{0, 1}, {1, 1}}});
    // Canonical legs are (b+, a-, b-, a+).
    return permute_legs(contract_all(d), {1, 3, 0, 2}).renamed("Q");
}

TensorObject transition_operator(std::span<const TensorObject> kraus) {
    if (kraus.empty()) {
        throw std::invalid_argument("transition_operator: empty Kraus set");
    }
    for (const auto &k : kraus) {
        check_kraus_op(k, kraus[0]);
    }
    const Space &b = kraus[0].leg(0).space;
    const Space &a = kraus[0].leg(1).space;
    auto na = static_cast<Eigen::Index>(a.dim);
    auto nb = static_cast<Eigen::Index>(b.dim);
    // Rows (x, x'), columns (y, y').
    Matrix m = Matrix::Zero(na * na, nb * nb);
    for (const auto &k : kraus) {
        Matrix km = to_matrix(k, 1);
        m += kron(km.transpose(), km.adjoint());
    }
    return TensorObject::from_matrix(
        "Q", {closed_leg(a), open_leg(a)}, {open_leg(b), closed_leg(b)}, m);
}

TensorObject dynamical_operator(const TensorObject &q, const TensorObject &transposer) {
    check_transition_legs(q);
    Diagram d({q, adjoint(transposer), transposer}, {});
    d.connect({2, 1}, {0, 0});
    d.connect({0, 1}, {1, 1});
    // Canonical legs are (b+, b-, a-, a+).
    return permute_legs(contract_all(d), {3, 0, 2, 1}).renamed("R");
}

Channel::Channel(Isometry v)
    : v_(std::move(v)),
      kraus_(kraus_ops(v_)),
      q_(transition_operator(v_)),
      r_(dynamical_operator(q_, transposer(v_.a()))) {
}

TensorObject apply_superop(const TensorObject &q, const TensorObject &a_op) {
    check_transition_legs(q);
    const Space &a = q.leg(0).space;
    if (a_op.num_legs() != 2 || a_op.leg(0) != open_leg(a) || a_op.leg(1) != closed_leg(a)) {
        throw std::invalid_argument("apply_superop: input must be an operator on '" + a.label + "'");
    }
    Diagram d({a_op, q}, {});
    d.connect({0, 0}, {1, 0});
    d.connect({1, 1}, {0, 1});
    return contract_all(d).renamed("V(A)");
}

TensorObject apply_superop(const Channel &channel, const TensorObject &a_op) {
    return apply_superop(channel.transition(), a_op);
}

TensorObject apply_superop_kraus(const Channel &channel, const TensorObject &a_op) {
    const Space &a = channel.isometry().a();
    if (a_op.num_legs() != 2 || a_op.leg(0) != open_leg(a) || a_op.leg(1) != closed_leg(a)) {
        throw std::invalid_argument("apply_superop: input must be an operator on '" + a.label + "'");
    }
    Matrix am = to_matrix(a_op, 1);
    const Space &b = channel.isometry().b();
    auto nb = static_cast<Eigen::Index>(b.dim);
    Matrix out = Matrix::Zero(nb, nb);
    for (const auto &k : channel.kraus()) {
        Matrix km = to_matrix(k, 1);
        out += km * am * km.adjoint();
    }
    return TensorObject::linear_map("V(A)", b, b, out);
}

TensorObject apply_extended(const Channel &channel, const TensorObject &p) {
    const Space &a = channel.isometry().a();
    if (p.num_legs() != 4 || p.leg(0) != open_leg(a) || p.leg(2) != closed_leg(a) ||
        p.leg(1).polarity != Polarity::open || p.leg(3).polarity != Polarity::closed ||
        p.leg(1).space != p.leg(3).space) {
        throw std::invalid_argument("apply_extended: input must have legs (a+, s+, a-, s-)");
    }
    Diagram d({p, channel.transition()}, {});
    d.connect({0, 0}, {1, 0});
    d.connect({1, 1}, {0, 2});
    // Canonical legs are (s+, s-, b+, b-).
    return permute_legs(contract_all(d), {2, 0, 3, 1}).renamed("W(P)");
}

std::size_t cross_operator_rank(const Isometry &v, double tol) {
    return rank(v.tensor(), {0, 2}, {1}, tol);
}

std::size_t dynamical_rank(const TensorObject &r, double tol) {
    return rank(r, {0, 1}, {2, 3}, tol);
}

std::size_t kraus_rank(const Channel &channel, double tol) {
    auto cross = cross_operator_rank(channel.isometry(), tol);
    auto dyn = dynamical_rank(channel.dynamical(), tol);
    if (cross != dyn) {
        throw std::logic_error(
            "Kraus rank disagreement: cross operator " + std::to_string(cross) + ", dynamical operator " +
            std::to_string(dyn));
    }
    return cross;
}

CpVerdict is_completely_positive(const TensorObject &q, double tol) {
    check_transition_legs(q);
    auto r = dynamical_operator(q, transposer(q.leg(0).space));
    auto v = is_positive(r, {0, 1}, {2, 3}, tol);
    return {v.positive, v.min_eigenvalue};
}

std::vector<TensorObject> kraus_from_transition(const TensorObject &q, double tol) {
    auto verdict = is_completely_positive(q, tol);
    if (!verdict.completely_positive) {
        throw std::domain_error("transition operator is not completely positive");
    }
    const Space &a = q.leg(0).space;
    const Space &b = q.leg(2).space;
    auto r = dynamical_operator(q, transposer(a));
    auto eig = hermitian_eigen(matricize(r, {0, 1}, {2, 3}));
    double top = eig.values.cwiseAbs().maxCoeff();
    auto na = static_cast<Eigen::Index>(a.dim);
    auto nb = static_cast<Eigen::Index>(b.dim);
    std::vector<TensorObject> out;
    for (Eigen::Index l = eig.values.size(); l-- > 0;) {
        double e = eig.values(l);
        if (!(e > tol * top)) {
            continue;
        }
        Matrix y(nb, na);
        for (Eigen::Index x = 0; x < na; x++) {
            for (Eigen::Index k = 0; k < nb; k++) {
                y(k, x) = std::sqrt(e) * eig.vectors(x * nb + k, l);
            }
        }
        out.push_back(TensorObject::linear_map("Y" + std::to_string(out.size()), b, a, y));
    }
    return out;
}

}  // namespace qdiag
