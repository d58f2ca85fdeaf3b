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

#include "qdiag/tensor.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "edge_remap.h"
#include "qdiag/linalg.h"

namespace qdiag {

namespace {

using RowMajorMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::size_t product_of_dims(const std::vector<Leg> &legs) {
    std::size_t n = 1;
    for (const auto &l : legs) {
        n *= l.dim();
    }
    return n;
}

std::vector<std::size_t> strides_of(const std::vector<std::size_t> &dims) {
    std::vector<std::size_t> s(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;) {
        s[k - 1] = s[k] * dims[k];
    }
    return s;
}

// Advances a row-major multi-index; returns false after the last one.
bool next_index(std::vector<std::size_t> &idx, const std::vector<std::size_t> &dims) {
    for (std::size_t k = dims.size(); k-- > 0;) {
        if (++idx[k] < dims[k]) {
            return true;
        }
        idx[k] = 0;
    }
    return false;
}

void check_pairable(const Leg &a, const Leg &b, const char *where) {
    if (a.space != b.space) {
        throw std::invalid_argument(
            std::string(where) + ": space mismatch ('" + a.space.label + "' vs '" + b.space.label + "')");
    }
    if (a.polarity == b.polarity) {
        throw std::invalid_argument(std::string(where) + ": polarity mismatch (both legs " +
                                    (a.polarity == Polarity::open ? "open" : "closed") + ")");
    }
}

std::string join_names(const std::string &x, const std::string &y) {
    if (x.empty()) {
        return y;
    }
    if (y.empty()) {
        return x;
    }
    return x + "*" + y;
}

void check_partition(const TensorObject &t, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    std::vector<int> seen(t.num_legs(), 0);
    for (auto i : rows) {
        if (i >= t.num_legs()) {
            throw std::invalid_argument("matricize: leg index out of range");
        }
        seen[i]++;
    }
    for (auto i : cols) {
        if (i >= t.num_legs()) {
            throw std::invalid_argument("matricize: leg index out of range");
        }
        seen[i]++;
    }
    for (int s : seen) {
        if (s != 1) {
            throw std::invalid_argument("matricize: row and column legs must partition the legs");
        }
    }
}

}  // namespace

const Space &SpaceRegistry::add(std::string label, std::size_t dim) {
    if (dim == 0) {
        throw std::invalid_argument("space '" + label + "' must have dimension >= 1");
    }
    if (contains(label)) {
        throw std::invalid_argument("space '" + label + "' already declared");
    }
    spaces_.push_back(Space{std::move(label), dim});
    return spaces_.back();
}

const Space &SpaceRegistry::get(std::string_view label) const {
    for (const auto &s : spaces_) {
        if (s.label == label) {
            return s;
        }
    }
    throw std::out_of_range("unknown space '" + std::string(label) + "'");
}

bool SpaceRegistry::contains(std::string_view label) const {
    return std::any_of(spaces_.begin(), spaces_.end(), [&](const Space &s) { return s.label == label; });
}

TensorObject::TensorObject() : data_{Complex(1)} {
}

TensorObject::TensorObject(std::string name, std::vector<Leg> legs, std::vector<Complex> data)
    : name_(std::move(name)), legs_(std::move(legs)), data_(std::move(data)) {
    for (const auto &l : legs_) {
        if (l.dim() == 0) {
            throw std::invalid_argument("tensor '" + name_ + "': leg on zero-dimensional space");
        }
    }
    if (data_.size() != product_of_dims(legs_)) {
        throw std::invalid_argument(
            "tensor '" + name_ + "': data length " + std::to_string(data_.size()) + " does not match leg dims (" +
            std::to_string(product_of_dims(legs_)) + ")");
    }
    for (const auto &z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("tensor '" + name_ + "': non-finite entry");
        }
    }
}

TensorObject TensorObject::scalar(Complex value, std::string name) {
    return TensorObject(std::move(name), {}, {value});
}

TensorObject TensorObject::ket(std::string name, const Space &space, const Vector &amplitudes) {
    std::vector<Complex> data(amplitudes.data(), amplitudes.data() + amplitudes.size());
    return TensorObject(std::move(name), {open_leg(space)}, std::move(data));
}

TensorObject TensorObject::from_matrix(
    std::string name, std::vector<Leg> row_legs, std::vector<Leg> col_legs, const Matrix &m) {
    auto rows = product_of_dims(row_legs);
    auto cols = product_of_dims(col_legs);
    if (static_cast<std::size_t>(m.rows()) != rows || static_cast<std::size_t>(m.cols()) != cols) {
        throw std::invalid_argument("from_matrix: matrix shape does not match legs");
    }
    std::vector<Complex> data(rows * cols);
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t c = 0; c < cols; c++) {
            data[r * cols + c] = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    row_legs.insert(row_legs.end(), col_legs.begin(), col_legs.end());
    return TensorObject(std::move(name), std::move(row_legs), std::move(data));
}

TensorObject TensorObject::linear_map(std::string name, const Space &out, const Space &in, const Matrix &m) {
    return from_matrix(std::move(name), {open_leg(out)}, {closed_leg(in)}, m);
}

const Leg &TensorObject::leg(std::size_t i) const {
    if (i >= legs_.size()) {
        throw std::out_of_range("tensor '" + name_ + "': leg index " + std::to_string(i) + " out of range");
    }
    return legs_[i];
}

std::vector<std::size_t> TensorObject::dims() const {
    std::vector<std::size_t> d;
    d.reserve(legs_.size());
    for (const auto &l : legs_) {
        d.push_back(l.dim());
    }
    return d;
}

Complex TensorObject::at(std::span<const std::size_t> index) const {
    if (index.size() != legs_.size()) {
        throw std::invalid_argument("tensor '" + name_ + "': index arity mismatch");
    }
    std::size_t flat = 0;
    for (std::size_t k = 0; k < legs_.size(); k++) {
        if (index[k] >= legs_[k].dim()) {
            throw std::out_of_range("tensor '" + name_ + "': index out of range");
        }
        flat = flat * legs_[k].dim() + index[k];
    }
    return data_[flat];
}

Complex TensorObject::value() const {
    if (!legs_.empty()) {
        throw std::logic_error("tensor '" + name_ + "' is not a scalar");
    }
    return data_[0];
}

Vector TensorObject::as_vector() const {
    return Eigen::Map<const Vector>(data_.data(), static_cast<Eigen::Index>(data_.size()));
}

double TensorObject::norm() const {
    return as_vector().norm();
}

TensorObject TensorObject::renamed(std::string name) const {
    TensorObject t = *this;
    t.name_ = std::move(name);
    return t;
}

TensorObject TensorObject::with_legs(std::vector<Leg> legs) const {
    if (legs.size() != legs_.size()) {
        throw std::invalid_argument("with_legs: leg count mismatch");
    }
    for (std::size_t k = 0; k < legs.size(); k++) {
        if (legs[k].dim() != legs_[k].dim()) {
            throw std::invalid_argument("with_legs: dimension mismatch on leg " + std::to_string(k));
        }
    }
    return TensorObject(name_, std::move(legs), data_);
}

TensorObject operator*(Complex factor, const TensorObject &t) {
    std::vector<Complex> data(t.data().begin(), t.data().end());
    for (auto &z : data) {
        z *= factor;
    }
    return TensorObject(t.name(), t.legs(), std::move(data));
}

namespace {
TensorObject combine(const TensorObject &x, const TensorObject &y, double sign) {
    if (x.legs() != y.legs()) {
        throw std::invalid_argument("cannot add tensors with different legs");
    }
    std::vector<Complex> data(x.size());
    for (std::size_t k = 0; k < data.size(); k++) {
        data[k] = x.data()[k] + sign * y.data()[k];
    }
    return TensorObject(x.name(), x.legs(), std::move(data));
}
}  // namespace

TensorObject operator+(const TensorObject &x, const TensorObject &y) {
    return combine(x, y, 1);
}

TensorObject operator-(const TensorObject &x, const TensorObject &y) {
    return combine(x, y, -1);
}

double max_abs_diff(const TensorObject &x, const TensorObject &y) {
    if (x.legs() != y.legs()) {
        throw std::invalid_argument("max_abs_diff: tensors have different legs");
    }
    double m = 0;
    for (std::size_t k = 0; k < x.size(); k++) {
        m = std::max(m, std::abs(x.data()[k] - y.data()[k]));
    }
    return m;
}

TensorObject permute_legs(const TensorObject &t, std::span<const std::size_t> perm) {
    auto n = t.num_legs();
    if (perm.size() != n) {
        throw std::invalid_argument("permute_legs: permutation has wrong length");
    }
    std::vector<bool> used(n, false);
    for (auto p : perm) {
        if (p >= n || used[p]) {
            throw std::invalid_argument("permute_legs: not a permutation");
        }
        used[p] = true;
    }
    bool is_identity = true;
    for (std::size_t k = 0; k < n; k++) {
        is_identity = is_identity && perm[k] == k;
    }
    if (is_identity) {
        return t;
    }

    auto in_dims = t.dims();
    auto in_strides = strides_of(in_dims);
    std::vector<Leg> legs;
    std::vector<std::size_t> out_dims;
    std::vector<std::size_t> gather;  // input stride for each output axis
    for (auto p : perm) {
        legs.push_back(t.legs()[p]);
        out_dims.push_back(in_dims[p]);
        gather.push_back(in_strides[p]);
    }
    std::vector<Complex> data(t.size());
    std::vector<std::size_t> idx(n, 0);
    std::size_t out = 0;
    do {
        std::size_t src = 0;
        for (std::size_t k = 0; k < n; k++) {
            src += idx[k] * gather[k];
        }
        data[out++] = t.data()[src];
    } while (next_index(idx, out_dims));
    return TensorObject(t.name(), std::move(legs), std::move(data));
}

TensorObject permute_legs(const TensorObject &t, std::initializer_list<std::size_t> perm) {
    return permute_legs(t, std::span<const std::size_t>(perm.begin(), perm.size()));
}

TensorObject tensor_product(const TensorObject &x, const TensorObject &y) {
    std::vector<Leg> legs = x.legs();
    legs.insert(legs.end(), y.legs().begin(), y.legs().end());
    std::vector<Complex> data;
    data.reserve(x.size() * y.size());
    for (auto a : x.data()) {
        for (auto b : y.data()) {
            data.push_back(a * b);
        }
    }
    return TensorObject(join_names(x.name(), y.name()), std::move(legs), std::move(data));
}

TensorObject contract_legs(const TensorObject &x, std::size_t x_leg, const TensorObject &y, std::size_t y_leg) {
    check_pairable(x.leg(x_leg), y.leg(y_leg), "contract");
    std::size_t d = x.leg(x_leg).dim();

    std::vector<std::size_t> px;
    for (std::size_t k = 0; k < x.num_legs(); k++) {
        if (k != x_leg) {
            px.push_back(k);
        }
    }
    px.push_back(x_leg);
    std::vector<std::size_t> py{y_leg};
    for (std::size_t k = 0; k < y.num_legs(); k++) {
        if (k != y_leg) {
            py.push_back(k);
        }
    }
    TensorObject xs = permute_legs(x, px);
    TensorObject ys = permute_legs(y, py);
    auto x_rest = static_cast<Eigen::Index>(x.size() / d);
    auto y_rest = static_cast<Eigen::Index>(y.size() / d);
    auto dd = static_cast<Eigen::Index>(d);

    Eigen::Map<const RowMajorMatrix> mx(xs.data().data(), x_rest, dd);
    Eigen::Map<const RowMajorMatrix> my(ys.data().data(), dd, y_rest);
    RowMajorMatrix prod = mx * my;

    std::vector<Leg> legs(xs.legs().begin(), xs.legs().end() - 1);
    legs.insert(legs.end(), ys.legs().begin() + 1, ys.legs().end());
    std::vector<Complex> data(prod.data(), prod.data() + prod.size());
    return TensorObject(join_names(x.name(), y.name()), std::move(legs), std::move(data));
}

TensorObject trace_legs(const TensorObject &t, std::size_t leg_a, std::size_t leg_b) {
    if (leg_a == leg_b) {
        throw std::invalid_argument("trace: a leg cannot be contracted with itself");
    }
    check_pairable(t.leg(leg_a), t.leg(leg_b), "trace");
    std::size_t d = t.leg(leg_a).dim();
    std::vector<std::size_t> perm;
    for (std::size_t k = 0; k < t.num_legs(); k++) {
        if (k != leg_a && k != leg_b) {
            perm.push_back(k);
        }
    }
    perm.push_back(leg_a);
    perm.push_back(leg_b);
    TensorObject p = permute_legs(t, perm);
    std::size_t rest = t.size() / (d * d);
    std::vector<Complex> data(rest, Complex(0));
    for (std::size_t r = 0; r < rest; r++) {
        for (std::size_t j = 0; j < d; j++) {
            data[r] += p.data()[r * d * d + j * d + j];
        }
    }
    std::vector<Leg> legs(p.legs().begin(), p.legs().end() - 2);
    return TensorObject(t.name(), std::move(legs), std::move(data));
}

TensorObject fuse_legs(const TensorObject &t, std::size_t first, std::size_t count, const Space &fused) {
    if (count == 0 || first + count > t.num_legs()) {
        throw std::invalid_argument("fuse_legs: leg range out of bounds");
    }
    std::size_t dim = 1;
    auto polarity = t.legs()[first].polarity;
    for (std::size_t k = first; k < first + count; k++) {
        dim *= t.legs()[k].dim();
        if (t.legs()[k].polarity != polarity) {
            throw std::invalid_argument("fuse_legs: merged legs must share polarity");
        }
    }
    if (dim != fused.dim) {
        throw std::invalid_argument("fuse_legs: fused space has the wrong dimension");
    }
    std::vector<Leg> legs(t.legs().begin(), t.legs().begin() + static_cast<std::ptrdiff_t>(first));
    legs.push_back(Leg{fused, polarity});
    legs.insert(legs.end(), t.legs().begin() + static_cast<std::ptrdiff_t>(first + count), t.legs().end());
    return TensorObject(t.name(), std::move(legs), std::vector<Complex>(t.data().begin(), t.data().end()));
}

TensorObject adjoint(const TensorObject &t) {
    std::vector<Leg> legs = t.legs();
    for (auto &l : legs) {
        l.polarity = flipped(l.polarity);
    }
    std::vector<Complex> data(t.data().begin(), t.data().end());
    for (auto &z : data) {
        z = std::conj(z);
    }
    return TensorObject(t.name().empty() ? "" : t.name() + "^", std::move(legs), std::move(data));
}

TensorObject identity(const Space &space) {
    auto n = static_cast<Eigen::Index>(space.dim);
    return TensorObject::linear_map("I_" + space.label, space, space, Matrix::Identity(n, n));
}

Matrix matricize(const TensorObject &t, std::span<const std::size_t> row_legs, std::span<const std::size_t> col_legs) {
    check_partition(t, row_legs, col_legs);
    std::vector<std::size_t> perm(row_legs.begin(), row_legs.end());
    perm.insert(perm.end(), col_legs.begin(), col_legs.end());
    TensorObject p = permute_legs(t, perm);
    std::size_t rows = 1;
    for (auto i : row_legs) {
        rows *= t.legs()[i].dim();
    }
    std::size_t cols = t.size() / rows;
    Eigen::Map<const RowMajorMatrix> m(
        p.data().data(), static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    return m;
}

Matrix matricize(
    const TensorObject &t, std::initializer_list<std::size_t> row_legs, std::initializer_list<std::size_t> col_legs) {
    return matricize(
        t,
        std::span<const std::size_t>(row_legs.begin(), row_legs.size()),
        std::span<const std::size_t>(col_legs.begin(), col_legs.size()));
}

Matrix to_matrix(const TensorObject &t, std::size_t n_row_legs) {
    if (n_row_legs > t.num_legs()) {
        throw std::invalid_argument("to_matrix: more row legs than legs");
    }
    std::vector<std::size_t> rows(n_row_legs);
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<std::size_t> cols(t.num_legs() - n_row_legs);
    std::iota(cols.begin(), cols.end(), n_row_legs);
    return matricize(t, rows, cols);
}

std::size_t rank(
    const TensorObject &t, std::span<const std::size_t> row_legs, std::span<const std::size_t> col_legs, double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("rank: tolerance must be positive");
    }
    return matrix_rank(matricize(t, row_legs, col_legs), tol);
}

std::size_t rank(
    const TensorObject &t,
    std::initializer_list<std::size_t> row_legs,
    std::initializer_list<std::size_t> col_legs,
    double tol) {
    return rank(
        t,
        std::span<const std::size_t>(row_legs.begin(), row_legs.size()),
        std::span<const std::size_t>(col_legs.begin(), col_legs.size()),
        tol);
}

PositivityVerdict is_positive_matrix(const Matrix &m, double tol) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("is_positive: split is not square");
    }
    if (hermiticity_defect(m) > 1e-10) {
        throw std::invalid_argument("is_positive: matrix is not Hermitian");
    }
    if (m.size() == 0) {
        return {true, 0, 0};
    }
    auto eig = hermitian_eigen(m);
    PositivityVerdict v;
    v.min_eigenvalue = eig.values.minCoeff();
    v.max_abs_eigenvalue = eig.values.cwiseAbs().maxCoeff();
    v.positive = v.min_eigenvalue >= -tol * v.max_abs_eigenvalue;
    return v;
}

PositivityVerdict is_positive(
    const TensorObject &t, std::span<const std::size_t> row_legs, std::span<const std::size_t> col_legs, double tol) {
    return is_positive_matrix(matricize(t, row_legs, col_legs), tol);
}

PositivityVerdict is_positive(
    const TensorObject &t,
    std::initializer_list<std::size_t> row_legs,
    std::initializer_list<std::size_t> col_legs,
    double tol) {
    return is_positive(
        t,
        std::span<const std::size_t>(row_legs.begin(), row_legs.size()),
        std::span<const std::size_t>(col_legs.begin(), col_legs.size()),
        tol);
}

Diagram::Diagram(std::vector<TensorObject> objects, std::vector<Edge> edges) : objects_(std::move(objects)) {
    for (const auto &e : edges) {
        connect(e.open, e.closed);
    }
}

std::size_t Diagram::add_object(TensorObject t) {
    objects_.push_back(std::move(t));
    return objects_.size() - 1;
}

void Diagram::check_edge(const Edge &e) const {
    for (auto r : {e.open, e.closed}) {
        if (r.object >= objects_.size() || r.leg >= objects_[r.object].num_legs()) {
            throw std::invalid_argument(
                "edge references dangling leg (object " + std::to_string(r.object) + ", leg " +
                std::to_string(r.leg) + ")");
        }
    }
    if (e.open == e.closed) {
        throw std::invalid_argument("edge joins a leg to itself");
    }
    const Leg &a = objects_[e.open.object].legs()[e.open.leg];
    const Leg &b = objects_[e.closed.object].legs()[e.closed.leg];
    if (a.space != b.space) {
        throw std::invalid_argument("edge: space mismatch ('" + a.space.label + "' vs '" + b.space.label + "')");
    }
    if (a.polarity != Polarity::open || b.polarity != Polarity::closed) {
        throw std::invalid_argument("edge: polarity mismatch (expected open then closed)");
    }
    for (const auto &other : edges_) {
        for (auto r : {other.open, other.closed}) {
            if (r == e.open || r == e.closed) {
                throw std::invalid_argument("edge: leg already contracted");
            }
        }
    }
}

std::size_t Diagram::connect(LegRef open, LegRef closed) {
    Edge e{open, closed};
    check_edge(e);
    edges_.push_back(e);
    return edges_.size() - 1;
}

namespace {

// Diagram state that remembers which original leg every surviving leg came from.
struct Tracked {
    std::vector<TensorObject> objects;
    std::vector<std::vector<LegRef>> origin;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_ids;

    explicit Tracked(const Diagram &d) : objects(d.objects()), edges(d.edges()) {
        for (std::size_t o = 0; o < objects.size(); o++) {
            std::vector<LegRef> legs;
            for (std::size_t l = 0; l < objects[o].num_legs(); l++) {
                legs.push_back({o, l});
            }
            origin.push_back(std::move(legs));
        }
        edge_ids.resize(edges.size());
        std::iota(edge_ids.begin(), edge_ids.end(), 0);
    }

    void step(std::size_t pos) {
        Edge e = edges[pos];
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pos));
        edge_ids.erase(edge_ids.begin() + static_cast<std::ptrdiff_t>(pos));

        if (e.open.object == e.closed.object) {
            auto o = e.open.object;
            objects[o] = trace_legs(objects[o], e.open.leg, e.closed.leg);
            auto &org = origin[o];
            auto hi = std::max(e.open.leg, e.closed.leg);
            auto lo = std::min(e.open.leg, e.closed.leg);
            org.erase(org.begin() + static_cast<std::ptrdiff_t>(hi));
            org.erase(org.begin() + static_cast<std::ptrdiff_t>(lo));
            for (auto &r : edges) {
                r.open = detail::remap_after_loop(r.open, o, e.open.leg, e.closed.leg);
                r.closed = detail::remap_after_loop(r.closed, o, e.open.leg, e.closed.leg);
            }
            return;
        }

        auto s = detail::order_pair(e);
        auto x_legs = objects[s.x].num_legs();
        objects[s.x] = contract_legs(objects[s.x], s.x_leg, objects[s.y], s.y_leg);
        objects.erase(objects.begin() + static_cast<std::ptrdiff_t>(s.y));

        auto org_y = std::move(origin[s.y]);
        org_y.erase(org_y.begin() + static_cast<std::ptrdiff_t>(s.y_leg));
        auto &org_x = origin[s.x];
        org_x.erase(org_x.begin() + static_cast<std::ptrdiff_t>(s.x_leg));
        org_x.insert(org_x.end(), org_y.begin(), org_y.end());
        origin.erase(origin.begin() + static_cast<std::ptrdiff_t>(s.y));

        for (auto &r : edges) {
            r.open = detail::remap_after_pair(r.open, s, x_legs);
            r.closed = detail::remap_after_pair(r.closed, s, x_legs);
        }
    }
};

}  // namespace

Diagram contract_pair(const Diagram &d, std::size_t edge) {
    if (edge >= d.edges().size()) {
        throw std::invalid_argument("contract_pair: edge index out of range");
    }
    Tracked t(d);
    t.step(edge);
    return Diagram(std::move(t.objects), std::move(t.edges));
}

TensorObject contract_all(const Diagram &d, std::span<const std::size_t> order) {
    auto n = d.edges().size();
    if (order.size() != n) {
        throw std::invalid_argument("contract_all: order must list every edge exactly once");
    }
    std::vector<bool> seen(n, false);
    for (auto k : order) {
        if (k >= n || seen[k]) {
            throw std::invalid_argument("contract_all: order must list every edge exactly once");
        }
        seen[k] = true;
    }

    Tracked t(d);
    for (auto id : order) {
        auto it = std::find(t.edge_ids.begin(), t.edge_ids.end(), id);
        t.step(static_cast<std::size_t>(it - t.edge_ids.begin()));
    }

    if (t.objects.empty()) {
        return TensorObject();
    }
    TensorObject result = t.objects[0];
    std::vector<LegRef> origin = t.origin[0];
    for (std::size_t k = 1; k < t.objects.size(); k++) {
        result = tensor_product(result, t.objects[k]);
        origin.insert(origin.end(), t.origin[k].begin(), t.origin[k].end());
    }
    std::vector<std::size_t> perm(origin.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return origin[a] < origin[b]; });
    return permute_legs(result, perm);
}

TensorObject contract_all(const Diagram &d) {
    std::vector<std::size_t> order(d.edges().size());
    std::iota(order.begin(), order.end(), 0);
    return contract_all(d, order);
}

}  // namespace qdiag
