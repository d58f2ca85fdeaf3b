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

#ifndef QDIAG_CHANNELS_H
#define QDIAG_CHANNELS_H

#include <span>
#include <vector>

#include "qdiag/tensor.h"

namespace qdiag {

/// Map H_a -> H_b (x) H_f with legs (b+, f+, a-) and V^dagger V = I_a.
class Isometry {
   public:
    explicit Isometry(TensorObject v, double tol = 1e-10);

    const TensorObject &tensor() const {
        return v_;
    }
    const Space &a() const {
        return v_.leg(2).space;
    }
    const Space &b() const {
        return v_.leg(0).space;
    }
    const Space &f() const {
        return v_.leg(1).space;
    }
    /// Rows (b, f), columns a.
    Matrix matrix() const;

   private:
    TensorObject v_;
};

/// V = T|e0> for a unitary T with legs (b+, f+, a-, e-).
Isometry isometry_from_unitary(const TensorObject &t, const TensorObject &e0);

/// V = sum_l K_l (x) |f_l>; each K_l has legs (b+, a-) and there are f.dim of them.
Isometry isometry_from_kraus(std::span<const TensorObject> kraus, const Space &f);

/// Sum_j |a_j> (x) V|a_j>: legs (a+, b+, f+).
TensorObject channel_ket(const Isometry &v, const TensorObject &transposer);

/// K_l = <f_l|V for the columns f_l of `f_basis`; legs (b+, a-).
std::vector<TensorObject> kraus_ops(const Isometry &v, const Matrix &f_basis);
std::vector<TensorObject> kraus_ops(const Isometry &v);

/// Q = Tr_f(V (x) V^dagger) built as a diagram. Legs (a-, a+, b+, b-):
/// Q[x][x'][y][y'] = sum_l K_l[y][x] conj(K_l[y'][x']).
TensorObject transition_operator(const Isometry &v);
/// Q = sum_l K_l (x) K_l^dagger, same leg layout.
TensorObject transition_operator(std::span<const TensorObject> kraus);

/// R = A^dagger Q A with legs (a+, b+, a-, b-).
TensorObject dynamical_operator(const TensorObject &q, const TensorObject &transposer);

/// Immutable channel with its Kraus set (standard f basis), Q and R computed up front.
class Channel {
   public:
    explicit Channel(Isometry v);

    const Isometry &isometry() const {
        return v_;
    }
    const std::vector<TensorObject> &kraus() const {
        return kraus_;
    }
    const TensorObject &transition() const {
        return q_;
    }
    const TensorObject &dynamical() const {
        return r_;
    }

   private:
    Isometry v_;
    std::vector<TensorObject> kraus_;
    TensorObject q_;
    TensorObject r_;
};

/// Tr_a[(A (x) I) Q]; A has legs (a+, a-), the result (b+, b-).
TensorObject apply_superop(const TensorObject &q, const TensorObject &a_op);
TensorObject apply_superop(const Channel &channel, const TensorObject &a_op);
/// Sum_l K_l A K_l^dagger.
TensorObject apply_superop_kraus(const Channel &channel, const TensorObject &a_op);

/// The channel tensored with the identity on a spectator s. P has legs (a+, s+, a-, s-);
/// the result has legs (b+, s+, b-, s-).
TensorObject apply_extended(const Channel &channel, const TensorObject &p);

/// Rank of V read as (b, a | f).
std::size_t cross_operator_rank(const Isometry &v, double tol = kDefaultRankTol);
/// Rank of R read as (a, b | a, b).
std::size_t dynamical_rank(const TensorObject &r, double tol = kDefaultRankTol);
/// Both ranks; throws std::logic_error if they disagree.
std::size_t kraus_rank(const Channel &channel, double tol = kDefaultRankTol);

struct CpVerdict {
    bool completely_positive = false;
    double min_eigenvalue = 0;
};

/// Positivity of R for any Q with legs (a-, a+, b+, b-). Trace preservation is not required.
CpVerdict is_completely_positive(const TensorObject &q, double tol = kDefaultRankTol);

/// Kraus operators Y_l (legs b+, a-) with Q = sum_l Y_l (x) Y_l^dagger, from the
/// eigendecomposition of R. Throws std::domain_error if Q is not completely positive.
std::vector<TensorObject> kraus_from_transition(const TensorObject &q, double tol = kDefaultRankTol);

}  // namespace qdiag

#endif
