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

#include "qdiag/planner.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "edge_remap.h"

namespace qdiag {

namespace {

/// Shapes-only replay of the contraction engine.
struct ShapeState {
    std::vector<std::vector<double>> dims;
    std::vector<Edge> edges;
    std::vector<std::size_t> ids;

    explicit ShapeState(const Diagram &d) : edges(d.edges()) {
        for (const auto &o : d.objects()) {
            std::vector<double> ds;
            for (const auto &l : o.legs()) {
                ds.push_back(static_cast<double>(l.dim()));
            }
            dims.push_back(std::move(ds));
        }
        ids.resize(edges.size());
        std::iota(ids.begin(), ids.end(), 0);
    }

    double size_of(std::size_t o) const {
        double s = 1;
        for (double x : dims[o]) {
            s *= x;
        }
        return s;
    }

    double edge_dim(const Edge &e) const {
        return dims[e.open.object][e.open.leg];
    }

    /// Size of the object produced by contracting edge `pos`.
    double result_size(std::size_t pos) const {
        const Edge &e = edges[pos];
        double d = edge_dim(e);
        if (e.open.object == e.closed.object) {
            return size_of(e.open.object) / (d * d);
        }
        return size_of(e.open.object) * size_of(e.closed.object) / (d * d);
    }

    /// Product of every distinct index dimension in step `pos`.
    double step_cost(std::size_t pos) const {
        const Edge &e = edges[pos];
        double d = edge_dim(e);
        if (e.open.object == e.closed.object) {
            return size_of(e.open.object) / d;
        }
        return size_of(e.open.object) * size_of(e.closed.object) / d;
    }

    void step(std::size_t pos) {
        Edge e = edges[pos];
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pos));
        ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(pos));
        if (e.open.object == e.closed.object) {
            auto &ds = dims[e.open.object];
            ds.erase(ds.begin() + static_cast<std::ptrdiff_t>(std::max(e.open.leg, e.closed.leg)));
            ds.erase(ds.begin() + static_cast<std::ptrdiff_t>(std::min(e.open.leg, e.closed.leg)));
            for (auto &r : edges) {
                r.open = detail::remap_after_loop(r.open, e.open.object, e.open.leg, e.closed.leg);
                r.closed = detail::remap_after_loop(r.closed, e.open.object, e.open.leg, e.closed.leg);
            }
            return;
        }
        auto s = detail::order_pair(e);
        auto x_legs = dims[s.x].size();
        auto dy = std::move(dims[s.y]);
        dy.erase(dy.begin() + static_cast<std::ptrdiff_t>(s.y_leg));
        auto &dx = dims[s.x];
        dx.erase(dx.begin() + static_cast<std::ptrdiff_t>(s.x_leg));
        dx.insert(dx.end(), dy.begin(), dy.end());
        dims.erase(dims.begin() + static_cast<std::ptrdiff_t>(s.y));
        for (auto &r : edges) {
            r.open = detail::remap_after_pair(r.open, s, x_legs);
            r.closed = detail::remap_after_pair(r.closed, s, x_legs);
        }
    }
};

}  // namespace

double plan_cost(const Diagram &d, std::span<const std::size_t> order) {
    std::vector<bool> seen(d.edges().size(), false);
    if (order.size() != seen.size()) {
        throw std::invalid_argument("plan_cost: order must list every edge exactly once");
    }
    ShapeState st(d);
    double cost = 0;
    for (auto id : order) {
        if (id >= seen.size() || seen[id]) {
            throw std::invalid_argument("plan_cost: order must list every edge exactly once");
        }
        seen[id] = true;
        auto pos = static_cast<std::size_t>(std::find(st.ids.begin(), st.ids.end(), id) - st.ids.begin());
        cost += st.step_cost(pos);
        st.step(pos);
    }
    return cost;
}

ContractionPlan plan_greedy(const Diagram &d) {
    ShapeState st(d);
    ContractionPlan p;
    while (!st.edges.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < st.edges.size(); k++) {
            double rk = st.result_size(k);
            double rb = st.result_size(best);
            if (rk < rb || (rk == rb && st.ids[k] < st.ids[best])) {
                best = k;
            }
        }
        p.order.push_back(st.ids[best]);
        p.cost += st.step_cost(best);
        st.step(best);
    }
    return p;
}

ContractionPlan plan_declaration(const Diagram &d) {
    ContractionPlan p;
    p.order.resize(d.edges().size());
    std::iota(p.order.begin(), p.order.end(), 0);
    p.cost = plan_cost(d, p.order);
    return p;
}

ContractionPlan plan(const Diagram &d) {
    auto greedy = plan_greedy(d);
    auto decl = plan_declaration(d);
    return decl.cost < greedy.cost ? decl : greedy;
}

}  // namespace qdiag
