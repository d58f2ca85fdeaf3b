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

#include "qdiag/census.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "qdiag/linalg.h"

namespace qdiag {

namespace {

constexpr double kGapScale = 1e-6;

struct SampleResult {
    std::size_t rank = 0;
    bool gap_violation = false;
};

SampleResult classify(const Matrix &u, const CensusConfig &config) {
    auto sv = cross_singular_values(u, config.d_a, config.d_e);
    SampleResult r;
    r.rank = numerical_rank(sv, config.tol);
    if (sv.size() >= 4) {
        double floor = kGapScale * sv(0);
        r.gap_violation = sv(2) > floor && !(sv(3) > floor);
    }
    return r;
}

}  // namespace

Matrix haar_unitary(std::size_t dim, std::uint64_t seed) {
    if (dim == 0) {
        throw std::invalid_argument("haar_unitary: dim must be >= 1");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto n = static_cast<Eigen::Index>(dim);
    Matrix z(n, n);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            double re = normal(rng);
            double im = normal(rng);
            z(i, j) = Complex(re, im) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; j++) {
        Complex d = r(j, j);
        q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1);
    }
    return q;
}

TensorObject unitary_tensor(const Matrix &u, std::size_t d_a, std::size_t d_e) {
    auto n = static_cast<Eigen::Index>(d_a * d_e);
    if (u.rows() != n || u.cols() != n) {
        throw std::invalid_argument("unitary must be (d_a d_e) x (d_a d_e)");
    }
    Space a{"a", d_a}, b{"b", d_a}, c{"c", d_e}, e{"e", d_e};
    return TensorObject::from_matrix("U", {open_leg(b), open_leg(c)}, {closed_leg(a), closed_leg(e)}, u);
}

Matrix cross_matrix(const Matrix &u, std::size_t d_a, std::size_t d_e) {
    return matricize(unitary_tensor(u, d_a, d_e), {0, 2}, {1, 3});
}

Eigen::VectorXd cross_singular_values(const Matrix &u, std::size_t d_a, std::size_t d_e) {
    return singular_values(cross_matrix(u, d_a, d_e));
}

std::size_t cross_rank(const Matrix &u, std::size_t d_a, std::size_t d_e, double tol) {
    return numerical_rank(cross_singular_values(u, d_a, d_e), tol);
}

std::vector<Matrix> structured_family(std::size_t d_a, std::size_t d_e) {
    std::vector<Matrix> out;
    auto na = static_cast<Eigen::Index>(d_a);
    auto ne = static_cast<Eigen::Index>(d_e);
    out.push_back(Matrix::Identity(na * ne, na * ne));
    for (std::uint64_t s = 0; s < 8; s++) {
        out.push_back(kron(haar_unitary(d_a, 1000 + 2 * s), haar_unitary(d_e, 1001 + 2 * s)));
    }
    if (d_a == 2 && d_e == 2) {
        Matrix xx = kron(pauli_x(), pauli_x());
        for (int k = 0; k <= 100; k++) {
            double theta = (std::numbers::pi / 2) * k / 100.0;
            out.push_back(std::cos(theta) * Matrix::Identity(4, 4) + Complex(0, std::sin(theta)) * xx);
        }
        out.push_back(cnot());
    }
    if (d_a == d_e) {
        out.push_back(swap_gate(d_a));
    }
    return out;
}

std::size_t RankHistogram::total() const {
    std::size_t t = 0;
    for (const auto &[rank, count] : counts) {
        t += count;
    }
    return t;
}

RankHistogram rank_census(const CensusConfig &config) {
    if (config.n == 0 && !config.structured) {
        throw std::invalid_argument("rank_census: need at least one sample");
    }
    std::vector<SampleResult> results(config.n);
    std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
    workers = std::min(workers, std::max<std::size_t>(1, config.n));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; w++) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < config.n; i += workers) {
                results[i] = classify(haar_unitary(config.d_a * config.d_e, config.seed + i), config);
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }

    RankHistogram h;
    h.config = config;
    if (config.structured) {
        for (const auto &u : structured_family(config.d_a, config.d_e)) {
            results.push_back(classify(u, config));
            h.structured_samples++;
        }
    }
    for (const auto &r : results) {
        h.counts[r.rank]++;
        h.gap_violations += r.gap_violation ? 1 : 0;
    }
    return h;
}

std::string to_json(const RankHistogram &h) {
    nlohmann::ordered_json j;
    j["config"] = {
        {"d_a", h.config.d_a},
        {"d_e", h.config.d_e},
        {"n", h.config.n},
        {"seed", h.config.seed},
        {"tol", h.config.tol},
        {"structured", h.config.structured},
        {"structured_samples", h.structured_samples},
    };
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto &[rank, count] : h.counts) {
        counts[std::to_string(rank)] = count;
    }
    j["counts"] = counts;
    j["gap_violations"] = h.gap_violations;
    return j.dump(2);
}

MixedEnvChannel mixed_env_channel(
    const Matrix &u, std::size_t d_a, std::size_t d_e, const Matrix &phi, double tol) {
    auto ne = static_cast<Eigen::Index>(d_e);
    if (phi.rows() != ne || phi.cols() != ne) {
        throw std::invalid_argument("phi must be d_e x d_e (rows e, columns g)");
    }
    TensorObject ut = unitary_tensor(u, d_a, d_e);
    if (!is_unitary(u, 1e-10)) {
        throw std::invalid_argument("U is not unitary");
    }
    if (std::abs(phi.norm() - 1) > 1e-10) {
        throw std::invalid_argument("phi must be normalized");
    }
    Space e{"e", d_e}, g{"g", d_e}, f{"f", d_e * d_e};
    TensorObject phit = TensorObject::from_matrix("phi", {open_leg(e)}, {open_leg(g)}, phi);
    // (b+, c+, a-, g+) -> (b+, c+, g+, a-) -> (b+, f+, a-)
    TensorObject v = permute_legs(contract_legs(ut, 3, phit, 0), {0, 1, 3, 2});
    v = fuse_legs(v, 1, 2, f).renamed("V");
    std::size_t sigma = matrix_rank(phi, tol);
    return MixedEnvChannel{u, d_a, d_e, phit, sigma, Channel(Isometry(v))};
}

std::size_t product_form_rank(const MixedEnvChannel &m, double tol) {
    auto ne = static_cast<Eigen::Index>(m.d_e);
    Matrix phi = to_matrix(m.phi, 1);
    Matrix s = kron(Matrix::Identity(ne, ne), phi);
    return matrix_rank(cross_matrix(m.u, m.d_a, m.d_e) * s, tol);
}

KrausBound kraus_bound_check(const MixedEnvChannel &m, double tol) {
    KrausBound r;
    r.kappa = kraus_rank(m.channel, tol);
    r.census_kappa = product_form_rank(m, tol);
    r.bound = std::min(cross_rank(m.u, m.d_a, m.d_e, tol), m.d_e * m.sigma);
    r.holds = r.kappa <= r.bound;
    return r;
}

}  // namespace qdiag
