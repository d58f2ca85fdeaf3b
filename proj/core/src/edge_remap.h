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

// Leg bookkeeping shared by the contraction engine and the planner, which must agree on
// where every leg lands after each step.

#ifndef QDIAG_EDGE_REMAP_H
#define QDIAG_EDGE_REMAP_H

#include <cstddef>
#include <utility>

#include "qdiag/tensor.h"

namespace qdiag::detail {

/// Endpoints of a two-object edge, lower object index first.
struct PairStep {
    std::size_t x, x_leg, y, y_leg;
};

inline PairStep order_pair(const Edge &e) {
    if (e.open.object < e.closed.object) {
        return {e.open.object, e.open.leg, e.closed.object, e.closed.leg};
    }
    return {e.closed.object, e.closed.leg, e.open.object, e.open.leg};
}

/// Where a surviving leg goes after objects x < y merge into x (x had `x_legs` legs).
inline LegRef remap_after_pair(LegRef r, const PairStep &s, std::size_t x_legs) {
    if (r.object == s.x) {
        return {s.x, r.leg - (r.leg > s.x_leg ? 1 : 0)};
    }
    if (r.object == s.y) {
        return {s.x, (x_legs - 1) + r.leg - (r.leg > s.y_leg ? 1 : 0)};
    }
    if (r.object > s.y) {
        return {r.object - 1, r.leg};
    }
    return r;
}

/// Where a surviving leg goes after legs l1, l2 of `object` are traced out.
inline LegRef remap_after_loop(LegRef r, std::size_t object, std::size_t l1, std::size_t l2) {
    if (r.object != object) {
        return r;
    }
    std::size_t shift = (r.leg > l1 ? 1 : 0) + (r.leg > l2 ? 1 : 0);
    return {r.object, r.leg - shift};
}

}  // namespace qdiag::detail

#endif
