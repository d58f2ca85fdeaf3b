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

#ifndef QDIAG_CENSUS_H
#define QDIAG_CENSUS_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qdiag/channels.h"
#include "qdiag/tensor.h"

namespace qdiag {

/// Ginibre sample orthonormalized by QR, with R's diagonal phases folded back in.
/// Deterministic per seed.
Matrix haar_unitary(std::size_t dim, std::uint64_t seed);

/// Unitary U on H_a (x) H_e as a matrix, viewed as H_ae -> H_bc with d_b = d_a, d_c = d_e.
/// Legs (b+, c+, a-, e-).
TensorObject unitary_tensor(const Matrix &u, std::size_t d_a, std::size_t d_e);

/// U[(b,c)][(a,e)] rearranged to rows (b,a), columns (c,e).
Matrix cross_matrix(const Matrix &u, std::size_t d_a, std::size_t d_e);
Eigen::VectorXd cross_singular_values(const Matrix &u, std::size_t d_a, std::size_t d_e);
/// Operator-Schmidt rank.
std::size_t cross_rank(const Matrix &u, std::size_t d_a, std::size_t d_e, double tol = kDefaultRankTol);

/// Deterministic unitaries that cover low cross ranks. For two qubits: products,
/// exp(i theta X (x) X) on a 101-point grid over [0, pi/2], CNOT and SWAP. Otherwise
/// products, plus SWAP when d_a = d_e.
std::vector<Matrix> structured_family(std::size_t d_a, std::size_t d_e);

struct CensusConfig {
    std::size_t d_a = 2;
    std::size_t d_e = 2;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double tol = kDefaultRankTol;
    bool structured = false;
};

struct RankHistogram {
    CensusConfig config;
    /// Rank -> count over the n Haar samples and, if enabled, the structured family.
    std::map<std::size_t, std::size_t> counts;
    std::size_t structured_samples = 0;
    /// Samples whose third singular value exceeds 1e-6 s1 while the fourth does not.
    std::size_t gap_violations = 0;

    std::size_t total() const;
};

/// Haar sample i uses seed + i, so results do not depend on the thread count.
RankHistogram rank_census(const CensusConfig &config);

/// {"config": {...}, "counts": {"rank": count}, "gap_violations": n}.
std::string to_json(const RankHistogram &histogram);

/// One-qubit (or qudit) channel whose environment starts in the mixed state carried by
/// the purification phi on H_eg.
struct MixedEnvChannel {
    Matrix u;
    std::size_t d_a = 0;
    std::size_t d_e = 0;
    TensorObject phi;   // (e+, g+), normalized
    std::size_t sigma;  // Schmidt rank of phi
    Channel channel;    // isometry (b+, f+, a-) with f = c (x) g
};

/// V = U_{ba;ce} S_{ce;cg} built by contracting U with phi over e.
MixedEnvChannel mixed_env_channel(
    const Matrix &u, std::size_t d_a, std::size_t d_e, const Matrix &phi, double tol = kDefaultRankTol);

/// Rank of the product U_cross S with S[(c,e)][(c',g)] = delta_{cc'} phi[e][g].
std::size_t product_form_rank(const MixedEnvChannel &m, double tol = kDefaultRankTol);

struct KrausBound {
    std::size_t kappa = 0;         // channels::kraus_rank
    std::size_t census_kappa = 0;  // product_form_rank
    std::size_t bound = 0;         // min(cross_rank(U), d_e sigma)
    bool holds = false;
};

KrausBound kraus_bound_check(const MixedEnvChannel &m, double tol = kDefaultRankTol);

}  // namespace qdiag

#endif
