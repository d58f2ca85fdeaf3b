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

#ifndef QDIAG_DUALITY_H
#define QDIAG_DUALITY_H

#include <stdexcept>

#include "qdiag/tensor.h"

namespace qdiag {

/// Raised when an entangled ket has no inverse (Schmidt rank below d, or d_a != d_b).
class NotInvertibleError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Throws unless `psi` has exactly two open legs.
void check_bipartite_ket(const TensorObject &psi);

/// Sum_j |a_j>|a_j> over the standard basis; two open legs on `space`.
TensorObject transposer(const Space &space);
/// Same, over the orthonormal basis held in the columns of `basis`.
TensorObject transposer(const Space &space, const Matrix &basis);

/// <A|Psi>: the map H_a -> H_b with legs (b+, a-) whose matrix is mu transposed.
TensorObject ket_to_map(const TensorObject &psi, const TensorObject &transposer);
/// Inverse of ket_to_map. `map` has legs (b+, a-); result has legs (a+, b+).
TensorObject map_to_ket(const TensorObject &map, const TensorObject &transposer);

struct SchmidtDecomposition {
    Space a, b;
    /// min(d_a, d_b) values, descending.
    Eigen::VectorXd coefficients;
    /// Full unitary bases; column j pairs with coefficient j.
    Matrix left_basis;
    Matrix right_basis;
    /// Count of coefficients above tol * coefficients[0].
    std::size_t rank = 0;

    double min_coefficient() const {
        return coefficients(coefficients.size() - 1);
    }
    /// Sum_j lambda_j |a_j>|b_j> as an object with legs (a+, b+).
    TensorObject reconstruct() const;
};

/// Each left vector's largest-modulus entry is made real positive; the matching right
/// vector absorbs the conjugate phase.
SchmidtDecomposition schmidt(const TensorObject &psi, double tol = kDefaultRankTol);

enum class Subsystem { a, b };

/// Partial trace of |Psi><Psi| over the other factor; legs (x+, x-).
TensorObject reduced_density(const TensorObject &psi, Subsystem keep);

/// Bra-type inverse with legs (a-, b-); contracting it with psi over either space leaves
/// the identity on the other.
TensorObject invert_ket(const TensorObject &psi, double tol = kDefaultRankTol);
/// The same object built from the Schmidt form, sum_j lambda_j^-1 <a_j|<b_j|.
TensorObject invert_ket_schmidt(const TensorObject &psi, double tol = kDefaultRankTol);

/// Solves (I (x) B)|Psi> = (A (x) I)|Psi> for B (legs b+, b-) by inserting Psi^-1 Psi.
TensorObject interchange_exact(const TensorObject &a_op, const TensorObject &psi, double tol = kDefaultRankTol);

struct InterchangeResult {
    TensorObject b_op;  // (b+, b-)
    TensorObject u;     // (a+, a-)
    TensorObject v;     // (b+, b-)
    TensorObject s;     // (b+, a-)
};

/// B = S A S^dagger with S = sum_j |b_j><a_j| in the Schmidt bases of psi, plus local
/// unitaries with (U (x) V)(I (x) B)|Psi> = (A (x) I)|Psi>. Works at any Schmidt rank.
InterchangeResult interchange_unitary(const TensorObject &a_op, const TensorObject &psi);

}  // namespace qdiag

#endif
