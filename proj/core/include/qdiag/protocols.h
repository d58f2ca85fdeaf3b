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

// Teleportation, dense coding and unambiguous teleportation.
//
// Conventions: the resource Psi has legs (a+, b+); measurement kets Phi_j have legs
// (c+, a+) and squared norm d; corrections are operators on b with legs (b+, b-). The
// reference map from H_c to H_b is the identity on basis indices.

#ifndef QDIAG_PROTOCOLS_H
#define QDIAG_PROTOCOLS_H

#include <optional>
#include <span>
#include <vector>

#include "qdiag/channels.h"
#include "qdiag/tensor.h"

namespace qdiag {

/// Phi_{m,n} = (I (x) X^m Z^n) sum_j |j>_c |j>_a, indexed m * d + n.
std::vector<TensorObject> bell_basis(const Space &c, const Space &a);

/// M_j = <Phi_j|Psi> with legs (b+, c-). Unitary when both kets have squared norm d.
TensorObject teleport_operator(const TensorObject &resource, const TensorObject &phi);

/// U_j = M_j^dagger (as operators on b), with the resource rescaled to squared norm d.
std::vector<TensorObject> standard_corrections(const TensorObject &resource, std::span<const TensorObject> basis);

struct ProtocolOutcome {
    std::vector<double> q;  // Alice obtains j
    std::vector<double> r;  // Bob's correction succeeds given j
    std::vector<double> p;  // q_j * r_j
    double q0 = 0;          // inconclusive
    double p_s = 0;
    /// |<Vc|out_j>|^2 for normalized output; empty when branch j never succeeds.
    std::vector<std::optional<double>> fidelity;
};

/// Standard protocol. Resource and input are normalized internally; corrections must be
/// unitary.
ProtocolOutcome run_teleport(
    const TensorObject &resource,
    std::span<const TensorObject> basis,
    std::span<const TensorObject> corrections,
    const TensorObject &input);

/// p(j|k) = |<Phi_j|(I (x) U_k)|Psi>|^2 / d^2 with the resource rescaled to squared norm d.
/// Rows are encodings k, columns outcomes j.
Eigen::MatrixXd dense_coding_probs(
    const TensorObject &resource, std::span<const TensorObject> encodings, std::span<const TensorObject> basis);

struct Concentration {
    TensorObject k;      // (a+, a-), largest eigenvalue of K^dagger K is 1
    double p_c = 0;      // <Psi|K^dagger K|Psi> = d lambda_m^2
    TensorObject psi_f;  // normalized, fully entangled, K|Psi> = sqrt(d) lambda_m |Psi_f>
};

/// Procrustean concentration of the normalized resource.
Concentration concentration_operator(const TensorObject &resource, double tol = kDefaultRankTol);

/// d * lambda_m^2 of the normalized resource.
double success_bound(const TensorObject &resource);

/// Rank-one conclusive POVM elements |Gamma_j><Gamma_j| (j >= 1) on H_ca followed by
/// corrections L_j on b. G_0 takes up the remainder.
class UnambiguousProtocol {
   public:
    /// Validates G_0 >= 0 and sigma_max(L_j) <= 1 within 1e-10. The resource is normalized.
    UnambiguousProtocol(TensorObject resource, std::vector<TensorObject> gammas, std::vector<TensorObject> corrections);

    const TensorObject &resource() const {
        return resource_;
    }
    /// Legs (c+, a+).
    const std::vector<TensorObject> &gammas() const {
        return gammas_;
    }
    const std::vector<TensorObject> &corrections() const {
        return corrections_;
    }

   private:
    TensorObject resource_;
    std::vector<TensorObject> gammas_;
    std::vector<TensorObject> corrections_;
};

/// Gamma_j = (I (x) K^dagger) Phi_j / sqrt(d); unitary corrections.
UnambiguousProtocol build_povm_alice_concentrates(const TensorObject &resource, std::span<const TensorObject> basis);
/// Projective measurement; L_j = U_j L with L the concentration operator on b.
UnambiguousProtocol build_bob_corrects(const TensorObject &resource, std::span<const TensorObject> basis);
/// Each side applies sqrt(lambda_m) sum_j lambda_j^{-1/2} |x_j><x_j| on its half.
UnambiguousProtocol build_split_concentration(const TensorObject &resource, std::span<const TensorObject> basis);

/// p_j = ||L_j <Gamma_j|Omega>||^2 with Omega = c (x) Psi normalized.
ProtocolOutcome run_unambiguous(const UnambiguousProtocol &protocol, const TensorObject &input);

/// Smallest eigenvalue of d I_a - sum_j Tr_c G_j.
double povm_trace_gap(const UnambiguousProtocol &protocol);

struct UnambiguousRealization {
    TensorObject khat;               // (b+, a-)
    TensorObject lhat;               // (a+, a-)
    Isometry isometry;               // (b+, y+, a-), y of dimension 2
    TensorObject success_projector;  // |eta0><eta0|, (y+, y-)
    TensorObject eta0;               // (y+)
    TensorObject unitary;            // (b+, y+, a-, x-), V = T|xi0> with xi0 = |0>
};

/// V|alpha> = Khat|alpha> |eta0> + Lhat|alpha> |eta1>, with Khat = K / sigma_max(K) and
/// Lhat = sqrt(I - Khat^dagger Khat). K must map a space to one of equal dimension.
UnambiguousRealization realize_unambiguous(const TensorObject &k, double tol = kDefaultRankTol);

/// <alpha|V^dagger S V|alpha> for normalized alpha.
double success_probability(const UnambiguousRealization &realization, const TensorObject &alpha);

}  // namespace qdiag

#endif
