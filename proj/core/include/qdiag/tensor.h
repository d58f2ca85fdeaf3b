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

#ifndef QDIAG_TENSOR_H
#define QDIAG_TENSOR_H

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qdiag {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Relative singular-value threshold used wherever a numerical rank is taken.
inline constexpr double kDefaultRankTol = 1e-8;

/// A named Hilbert space of finite dimension.
struct Space {
    std::string label;
    std::size_t dim = 1;

    bool operator==(const Space &) const = default;
};

/// Keeps space labels unique. Used by the diagram language when resolving declarations.
class SpaceRegistry {
   public:
    const Space &add(std::string label, std::size_t dim);
    const Space &get(std::string_view label) const;
    bool contains(std::string_view label) const;
    const std::vector<Space> &spaces() const {
        return spaces_;
    }

   private:
    std::vector<Space> spaces_;
};

/// Open legs carry kets (H), closed legs carry bras (H dagger).
enum class Polarity { open, closed };

inline Polarity flipped(Polarity p) {
    return p == Polarity::open ? Polarity::closed : Polarity::open;
}

struct Leg {
    Space space;
    Polarity polarity = Polarity::open;

    std::size_t dim() const {
        return space.dim;
    }
    bool operator==(const Leg &) const = default;
};

inline Leg open_leg(const Space &s) {
    return Leg{s, Polarity::open};
}
inline Leg closed_leg(const Space &s) {
    return Leg{s, Polarity::closed};
}

/// Dense complex tensor with an ordered list of polarized legs.
///
/// Data is row-major over the legs in declared order: the last leg varies fastest.
/// A tensor with no legs is a scalar. Instances are immutable once built; every
/// operation returns a new object.
class TensorObject {
   public:
    /// The scalar 1.
    TensorObject();
    TensorObject(std::string name, std::vector<Leg> legs, std::vector<Complex> data);

    static TensorObject scalar(Complex value, std::string name = "");
    static TensorObject ket(std::string name, const Space &space, const Vector &amplitudes);
    /// Legs are row_legs followed by col_legs; rows/cols of `m` are the row-major
    /// multi-indices of the respective groups.
    static TensorObject from_matrix(
        std::string name, std::vector<Leg> row_legs, std::vector<Leg> col_legs, const Matrix &m);
    /// Operator from `in` to `out`, legs (out open, in closed).
    static TensorObject linear_map(std::string name, const Space &out, const Space &in, const Matrix &m);

    const std::string &name() const {
        return name_;
    }
    const std::vector<Leg> &legs() const {
        return legs_;
    }
    const Leg &leg(std::size_t i) const;
    std::span<const Complex> data() const {
        return data_;
    }
    std::size_t num_legs() const {
        return legs_.size();
    }
    std::size_t size() const {
        return data_.size();
    }
    std::vector<std::size_t> dims() const;
    bool is_scalar() const {
        return legs_.empty();
    }

    Complex at(std::span<const std::size_t> index) const;
    Complex at(std::initializer_list<std::size_t> index) const {
        return at(std::span<const std::size_t>(index.begin(), index.size()));
    }
    /// Value of a zero-leg object.
    Complex value() const;
    /// Flat data as a column vector.
    Vector as_vector() const;
    double norm() const;

    TensorObject renamed(std::string name) const;
    /// Same data, legs replaced one for one (dims must match).
    TensorObject with_legs(std::vector<Leg> legs) const;

   private:
    std::string name_;
    std::vector<Leg> legs_;
    std::vector<Complex> data_;
};

TensorObject operator*(Complex factor, const TensorObject &t);
TensorObject operator+(const TensorObject &x, const TensorObject &y);
TensorObject operator-(const TensorObject &x, const TensorObject &y);

/// Largest entrywise |x - y|; legs must match exactly.
double max_abs_diff(const TensorObject &x, const TensorObject &y);

/// Result leg i is input leg perm[i].
TensorObject permute_legs(const TensorObject &t, std::span<const std::size_t> perm);
TensorObject permute_legs(const TensorObject &t, std::initializer_list<std::size_t> perm);

/// Outer product; legs of x then legs of y.
TensorObject tensor_product(const TensorObject &x, const TensorObject &y);

/// Sums x's leg `x_leg` against y's leg `y_leg`. One must be open and the other closed,
/// on the same space. Surviving legs: x's in order, then y's in order.
TensorObject contract_legs(const TensorObject &x, std::size_t x_leg, const TensorObject &y, std::size_t y_leg);

/// Self-contraction of two legs of one object (trace / partial trace).
TensorObject trace_legs(const TensorObject &t, std::size_t leg_a, std::size_t leg_b);

/// Merges legs [first, first + count) into one leg on `fused`, whose dim must equal the
/// product of the merged dims. Merged legs must share polarity.
TensorObject fuse_legs(const TensorObject &t, std::size_t first, std::size_t count, const Space &fused);

/// Flip every polarity and conjugate the data; index layout is unchanged.
TensorObject adjoint(const TensorObject &t);

/// Kronecker delta with legs (open, closed) on `space`.
TensorObject identity(const Space &space);

/// Rows indexed by the row-leg multi-index, columns by the col-leg multi-index,
/// row-major within each group in the order given.
Matrix matricize(const TensorObject &t, std::span<const std::size_t> row_legs, std::span<const std::size_t> col_legs);
Matrix matricize(
    const TensorObject &t, std::initializer_list<std::size_t> row_legs, std::initializer_list<std::size_t> col_legs);

/// Matrix of an object whose first `n_row_legs` legs index rows.
Matrix to_matrix(const TensorObject &t, std::size_t n_row_legs);

/// Number of singular values above tol * (largest). Zero for the zero object.
std::size_t rank(
    const TensorObject &t,
    std::span<const std::size_t> row_legs,
    std::span<const std::size_t> col_legs,
    double tol = kDefaultRankTol);
std::size_t rank(
    const TensorObject &t,
    std::initializer_list<std::size_t> row_legs,
    std::initializer_list<std::size_t> col_legs,
    double tol = kDefaultRankTol);

struct PositivityVerdict {
    bool positive = false;
    double min_eigenvalue = 0;
    double max_abs_eigenvalue = 0;
};

/// Hermiticity of the split is required within 1e-10 * max|entry|.
PositivityVerdict is_positive(
    const TensorObject &t,
    std::span<const std::size_t> row_legs,
    std::span<const std::size_t> col_legs,
    double tol = kDefaultRankTol);
PositivityVerdict is_positive(
    const TensorObject &t,
    std::initializer_list<std::size_t> row_legs,
    std::initializer_list<std::size_t> col_legs,
    double tol = kDefaultRankTol);
/// Same test applied to an explicit square matrix.
PositivityVerdict is_positive_matrix(const Matrix &m, double tol = kDefaultRankTol);

/// A position of a leg inside a diagram.
struct LegRef {
    std::size_t object = 0;
    std::size_t leg = 0;

    auto operator<=>(const LegRef &) const = default;
};

/// Joins an open leg to a closed leg of the same space.
struct Edge {
    LegRef open;
    LegRef closed;

    bool operator==(const Edge &) const = default;
};

/// Tensor objects plus contraction edges.
class Diagram {
   public:
    Diagram() = default;
    Diagram(std::vector<TensorObject> objects, std::vector<Edge> edges);

    std::size_t add_object(TensorObject t);
    /// Validates the edge; returns its index.
    std::size_t connect(LegRef open, LegRef closed);

    const std::vector<TensorObject> &objects() const {
        return objects_;
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }

   private:
    void check_edge(const Edge &e) const;

    std::vector<TensorObject> objects_;
    std::vector<Edge> edges_;
};

/// Contracts one edge. The merged object replaces the lower-indexed endpoint; its legs are
/// that object's surviving legs followed by the other's. Remaining edges keep their order.
Diagram contract_pair(const Diagram &d, std::size_t edge);

/// Contracts every edge in `order` (a permutation of edge indices), then takes the outer
/// product of whatever disconnected pieces remain. The result's legs are the diagram's
/// uncontracted legs in declaration order (object, then leg), so it does not depend on
/// `order`.
TensorObject contract_all(const Diagram &d, std::span<const std::size_t> order);
/// Declaration order.
TensorObject contract_all(const Diagram &d);

}  // namespace qdiag

#endif
