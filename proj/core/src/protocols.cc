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

#include "qdiag/protocols.h"

#include <cmath>
#include <stdexcept>

#include "qdiag/duality.h"
#include "qdiag/linalg.h"

namespace qdiag {

namespace {

TensorObject scaled_to(const TensorObject &t, double target_norm) {
    double n = t.norm();
    if (!(n > 0)) {
        throw std::invalid_argument("'" + t.name() + "' is the zero vector");
    }
    return Complex(target_norm / n) * t;
}

void check_resource(const TensorObject &psi) {
    check_bipartite_ket(psi);
    if (psi.leg(0).dim() != psi.leg(1).dim()) {
        throw std::invalid_argument("resource must have d_a = d_b");
    }
}

void check_meas_ket(const TensorObject &phi, const TensorObject &psi) {
    if (phi.num_legs() != 2 || phi.leg(0).polarity != Polarity::open || phi.leg(1) != psi.leg(0) ||
        phi.leg(0).dim() != psi.leg(1).dim()) {
        throw std::invalid_argument("measurement ket must have legs (c+, a+) with d_c = d_b");
    }
}

void check_correction(const TensorObject &u, const Space &b) {
    if (u.num_legs() != 2 || u.leg(0) != open_leg(b) || u.leg(1) != closed_leg(b)) {
        throw std::invalid_argument("correction must have legs (" + b.label + "+, " + b.label + "-)");
    }
}

/// Unnormalized Bob-side ket <Gamma|Omega> for Omega = c (x) Psi.
TensorObject branch_ket(const TensorObject &gamma, const TensorObject &input, const TensorObject &psi) {
    Diagram d({adjoint(gamma), input, psi}, {});
    d.connect({1, 0}, {0, 0});
    d.connect({2, 0}, {0, 1});
    return contract_all(d);
}

ProtocolOutcome run_branches(
    const TensorObject &psi,
    std::span<const TensorObject> gammas,
    std::span<const TensorObject> corrections,
    const TensorObject &input) {
    if (input.num_legs() != 1 || input.leg(0).polarity != Polarity::open ||
        (!gammas.empty() && input.leg(0) != gammas[0].leg(0))) {
        throw std::invalid_argument("input must be a ket on the measured space c");
    }
    TensorObject c = scaled_to(input, 1);
    Vector target = c.as_vector();

    ProtocolOutcome out;
    double q_total = 0;
    for (std::size_t j = 0; j < gammas.size(); j++) {
        TensorObject w = branch_ket(gammas[j], c, psi);
        TensorObject v = contract_legs(corrections[j], 1, w, 0);
        double q = w.norm() * w.norm();
        double p = v.norm() * v.norm();
        out.q.push_back(q);
        out.p.push_back(p);
        out.r.push_back(q > 0 ? p / q : 0.0);
        out.p_s += p;
        q_total += q;
        if (p > 1e-14) {
            Complex overlap = target.dot(v.as_vector());
            out.fidelity.emplace_back(std::norm(overlap) / p);
        } else {
            out.fidelity.emplace_back(std::nullopt);
        }
    }
    out.q0 = 1 - q_total;
    return out;
}

Matrix spectral_power(const Matrix &basis, const Eigen::VectorXd &lambda, double exponent) {
    double lm = lambda(lambda.size() - 1);
    Matrix m = Matrix::Zero(basis.rows(), basis.rows());
    for (Eigen::Index j = 0; j < lambda.size(); j++) {
        m += std::pow(lm / lambda(j), exponent) * basis.col(j) * basis.col(j).adjoint();
    }
    return m;
}

SchmidtDecomposition invertible_schmidt(const TensorObject &psi, double tol) {
    check_resource(psi);
    auto sd = schmidt(scaled_to(psi, 1), tol);
    if (sd.rank != psi.leg(0).dim()) {
        throw NotInvertibleError("resource is not invertible: Schmidt rank " + std::to_string(sd.rank));
    }
    return sd;
}

std::vector<TensorObject> normalized_basis(std::span<const TensorObject> basis, const TensorObject &psi) {
    std::vector<TensorObject> out;
    double d = static_cast<double>(psi.leg(0).dim());
    for (const auto &phi : basis) {
        check_meas_ket(phi, psi);
        out.push_back(Complex(1 / std::sqrt(d)) * phi);
    }
    return out;
}

TensorObject apply_on_a(const TensorObject &ket_ca, const Matrix &op, const Space &a) {
    auto o = TensorObject::linear_map("", a, a, op);
    return contract_legs(ket_ca, 1, o, 1);
}

std::vector<TensorObject> times(std::span<const TensorObject> us, const Matrix &l, const Space &b) {
    std::vector<TensorObject> out;
    for (const auto &u : us) {
        out.push_back(TensorObject::linear_map("L", b, b, to_matrix(u, 1) * l));
    }
    return out;
}

}  // namespace

std::vector<TensorObject> bell_basis(const Space &c, const Space &a) {
    if (c.dim != a.dim) {
        throw std::invalid_argument("bell_basis: d_c != d_a");
    }
    Matrix x = shift_operator(a.dim);
    Matrix z = clock_operator(a.dim);
    std::vector<TensorObject> out;
    auto n = static_cast<Eigen::Index>(a.dim);
    Matrix xm = Matrix::Identity(n, n);
    for (std::size_t m = 0; m < a.dim; m++) {
        Matrix p = xm;
        for (std::size_t k = 0; k < a.dim; k++) {
            out.push_back(TensorObject::from_matrix(
                "Phi" + std::to_string(m) + std::to_string(k), {open_leg(c)}, {open_leg(a)}, p.transpose()));
            p = p * z;
        }
        xm = xm * x;
    }
    return out;
}

TensorObject teleport_operator(const TensorObject &resource, const TensorObject &phi) {
    check_resource(resource);
    check_meas_ket(phi, resource);
    return permute_legs(contract_legs(adjoint(phi), 1, resource, 0), {1, 0}).renamed("M");
}

std::vector<TensorObject> standard_corrections(const TensorObject &resource, std::span<const TensorObject> basis) {
    check_resource(resource);
    auto psi = scaled_to(resource, std::sqrt(static_cast<double>(resource.leg(0).dim())));
    const Space &b = resource.leg(1).space;
    std::vector<TensorObject> out;
    for (const auto &phi : basis) {
        Matrix m = to_matrix(teleport_operator(psi, phi), 1);
        out.push_back(TensorObject::linear_map("U" + std::to_string(out.size()), b, b, m.adjoint()));
    }
    return out;
}

ProtocolOutcome run_teleport(
    const TensorObject &resource,
    std::span<const TensorObject> basis,
    std::span<const TensorObject> corrections,
    const TensorObject &input) {
    check_resource(resource);
    if (corrections.size() != basis.size()) {
        throw std::invalid_argument("need one correction per measurement outcome");
    }
    for (const auto &u : corrections) {
        check_correction(u, resource.leg(1).space);
        if (!is_unitary(to_matrix(u, 1), 1e-10)) {
            throw std::domain_error("teleport corrections must be unitary");
        }
    }
    auto psi = scaled_to(resource, 1);
    auto gammas = normalized_basis(basis, psi);
    return run_branches(psi, gammas, corrections, input);
}

Eigen::MatrixXd dense_coding_probs(
    const TensorObject &resource, std::span<const TensorObject> encodings, std::span<const TensorObject> basis) {
    check_resource(resource);
    const Space &a = resource.leg(0).space;
    const Space &b = resource.leg(1).space;
    double d = static_cast<double>(a.dim);
    auto psi = scaled_to(resource, std::sqrt(d));
    Eigen::MatrixXd probs(static_cast<Eigen::Index>(encodings.size()), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < encodings.size(); k++) {
        check_correction(encodings[k], b);
        for (std::size_t j = 0; j < basis.size(); j++) {
            check_meas_ket(basis[j], psi);
            const Space &c = basis[j].leg(0).space;
            auto n = static_cast<Eigen::Index>(c.dim);
            auto wire = TensorObject::linear_map("I", c, b, Matrix::Identity(n, n));
            Diagram loop({psi, encodings[k], wire, adjoint(basis[j])}, {});
            loop.connect({0, 1}, {1, 1});
            loop.connect({1, 0}, {2, 1});
            loop.connect({2, 0}, {3, 0});
            loop.connect({0, 0}, {3, 1});
            Complex v = contract_all(loop).value();
            probs(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = std::norm(v) / (d * d);
        }
    }
    return probs;
}

Concentration concentration_operator(const TensorObject &resource, double tol) {
    auto sd = invertible_schmidt(resource, tol);
    double d = static_cast<double>(sd.a.dim);
    double lm = sd.min_coefficient();
    Matrix k = spectral_power(sd.left_basis, sd.coefficients, 1);
    auto n = static_cast<Eigen::Index>(sd.a.dim);
    Matrix f = Matrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; j++) {
        f += sd.left_basis.col(j) * sd.right_basis.col(j).transpose();
    }
    f /= std::sqrt(d);
    return Concentration{
        TensorObject::linear_map("K", sd.a, sd.a, k),
        d * lm * lm,
        TensorObject::from_matrix("Psi_f", {open_leg(sd.a)}, {open_leg(sd.b)}, f),
    };
}

double success_bound(const TensorObject &resource) {
    check_resource(resource);
    auto sd = schmidt(scaled_to(resource, 1));
    double lm = sd.min_coefficient();
    return static_cast<double>(sd.a.dim) * lm * lm;
}

UnambiguousProtocol::UnambiguousProtocol(
    TensorObject resource, std::vector<TensorObject> gammas, std::vector<TensorObject> corrections)
    : gammas_(std::move(gammas)), corrections_(std::move(corrections)) {
    check_resource(resource);
    resource_ = scaled_to(resource, 1);
    if (gammas_.size() != corrections_.size()) {
        throw std::invalid_argument("need one correction per conclusive outcome");
    }
    if (gammas_.empty()) {
        return;
    }
    for (const auto &g : gammas_) {
        check_meas_ket(g, resource_);
        if (g.legs() != gammas_[0].legs()) {
            throw std::invalid_argument("POVM kets must share legs");
        }
    }
    auto n = static_cast<Eigen::Index>(gammas_[0].size());
    Matrix g0 = Matrix::Identity(n, n);
    for (const auto &g : gammas_) {
        Vector v = g.as_vector();
        g0 -= v * v.adjoint();
    }
    double min_eig = hermitian_eigen(g0).values.minCoeff();
    if (min_eig < -1e-10) {
        throw std::domain_error("POVM is not physical: G_0 has eigenvalue " + std::to_string(min_eig));
    }
    for (const auto &l : corrections_) {
        check_correction(l, resource_.leg(1).space);
        double top = singular_values(to_matrix(l, 1)).maxCoeff();
        if (top > 1 + 1e-10) {
            throw std::domain_error("correction has singular value " + std::to_string(top) + " > 1");
        }
    }
}

UnambiguousProtocol build_povm_alice_concentrates(const TensorObject &resource, std::span<const TensorObject> basis) {
    auto conc = concentration_operator(resource);
    const Space &a = resource.leg(0).space;
    Matrix k_dag = to_matrix(conc.k, 1).adjoint();
    std::vector<TensorObject> gammas;
    for (const auto &phi : normalized_basis(basis, resource)) {
        gammas.push_back(apply_on_a(phi, k_dag, a).renamed("Gamma"));
    }
    return UnambiguousProtocol(resource, std::move(gammas), standard_corrections(conc.psi_f, basis));
}

UnambiguousProtocol build_bob_corrects(const TensorObject &resource, std::span<const TensorObject> basis) {
    auto sd = invertible_schmidt(resource, kDefaultRankTol);
    auto conc = concentration_operator(resource);
    Matrix l = spectral_power(sd.right_basis, sd.coefficients, 1);
    auto us = standard_corrections(conc.psi_f, basis);
    return UnambiguousProtocol(resource, normalized_basis(basis, resource), times(us, l, sd.b));
}

UnambiguousProtocol build_split_concentration(const TensorObject &resource, std::span<const TensorObject> basis) {
    auto sd = invertible_schmidt(resource, kDefaultRankTol);
    auto conc = concentration_operator(resource);
    Matrix half_a = spectral_power(sd.left_basis, sd.coefficients, 0.5);
    Matrix half_b = spectral_power(sd.right_basis, sd.coefficients, 0.5);
    std::vector<TensorObject> gammas;
    for (const auto &phi : normalized_basis(basis, resource)) {
        gammas.push_back(apply_on_a(phi, half_a.adjoint(), sd.a).renamed("Gamma"));
    }
    auto us = standard_corrections(conc.psi_f, basis);
    return UnambiguousProtocol(resource, std::move(gammas), times(us, half_b, sd.b));
}

ProtocolOutcome run_unambiguous(const UnambiguousProtocol &protocol, const TensorObject &input) {
    return run_branches(protocol.resource(), protocol.gammas(), protocol.corrections(), input);
}

double povm_trace_gap(const UnambiguousProtocol &protocol) {
    const auto &gammas = protocol.gammas();
    const Space &a = protocol.resource().leg(0).space;
    auto n = static_cast<Eigen::Index>(a.dim);
    double d = gammas.empty() ? static_cast<double>(a.dim) : static_cast<double>(gammas[0].leg(0).dim());
    Matrix m = d * Matrix::Identity(n, n);
    for (const auto &g : gammas) {
        Matrix gm = to_matrix(g, 1);
        m -= gm.transpose() * gm.conjugate();
    }
    return hermitian_eigen(m).values.minCoeff();
}

UnambiguousRealization realize_unambiguous(const TensorObject &k, double tol) {
    if (k.num_legs() != 2 || k.leg(0).polarity != Polarity::open || k.leg(1).polarity != Polarity::closed) {
        throw std::invalid_argument("K must have legs (b+, a-)");
    }
    const Space &b = k.leg(0).space;
    const Space &a = k.leg(1).space;
    if (a.dim != b.dim) {
        throw std::invalid_argument("realize_unambiguous: K must map between spaces of equal dimension");
    }
    Matrix km = to_matrix(k, 1);
    double top = singular_values(km).maxCoeff();
    if (!(top > tol)) {
        throw std::domain_error("cannot realize K = 0");
    }
    auto n = static_cast<Eigen::Index>(a.dim);
    Matrix khat = km / top;
    Matrix lhat = positive_sqrt(Matrix::Identity(n, n) - khat.adjoint() * khat);

    Space y{"y", 2};
    Space x{"x", 2};
    Matrix v(2 * n, n);
    for (Eigen::Index r = 0; r < n; r++) {
        v.row(2 * r) = khat.row(r);
        v.row(2 * r + 1) = lhat.row(r);
    }
    Matrix full = complete_to_unitary(v);
    Matrix t(2 * n, 2 * n);
    for (Eigen::Index col = 0; col < n; col++) {
        t.col(2 * col) = full.col(col);
        t.col(2 * col + 1) = full.col(n + col);
    }
    Matrix proj = Matrix::Zero(2, 2);
    proj(0, 0) = 1;

    return UnambiguousRealization{
        TensorObject::linear_map("Khat", b, a, khat),
        TensorObject::linear_map("Lhat", a, a, lhat),
        Isometry(TensorObject::from_matrix("V", {open_leg(b), open_leg(y)}, {closed_leg(a)}, v)),
        TensorObject::linear_map("S", y, y, proj),
        TensorObject::ket("eta0", y, Vector::Unit(2, 0)),
        TensorObject::from_matrix("T", {open_leg(b), open_leg(y)}, {closed_leg(a), closed_leg(x)}, t),
    };
}

double success_probability(const UnambiguousRealization &realization, const TensorObject &alpha) {
    auto va = contract_legs(realization.isometry.tensor(), 2, scaled_to(alpha, 1), 0);
    auto sva = permute_legs(contract_legs(realization.success_projector, 1, va, 1), {1, 0});
    return sva.norm() * sva.norm();
}

}  // namespace qdiag
