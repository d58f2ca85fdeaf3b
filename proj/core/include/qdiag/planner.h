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

#ifndef QDIAG_PLANNER_H
#define QDIAG_PLANNER_H

#include <span>
#include <vector>

#include "qdiag/tensor.h"

namespace qdiag {

struct ContractionPlan {
    /// A permutation of the diagram's edge indices.
    std::vector<std::size_t> order;
    /// Sum over steps of the product of every distinct index dimension in the step.
    double cost = 0;
};

/// Cost of contracting in `order`, from leg shapes alone.
double plan_cost(const Diagram &d, std::span<const std::size_t> order);

/// Repeatedly contracts the edge whose result is smallest; ties go to the earlier edge.
ContractionPlan plan_greedy(const Diagram &d);
ContractionPlan plan_declaration(const Diagram &d);
/// The greedy plan, or declaration order when that is strictly cheaper.
ContractionPlan plan(const Diagram &d);

}  // namespace qdiag

#endif
