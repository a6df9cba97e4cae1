# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.

"""Best-first branch-and-bound over simplex relaxations.

Nodes are ordered by relaxation bound, then by creation order; the down
branch of a node is created before the up branch. Branching picks the most
fractional integer variable, the lowest index on ties. Together these make
the integer solution returned among equivalent optima reproducible.
"""

import heapq
import itertools

import numpy as np
from oslo_log import log as logging

from pareto_metasolver.backend import simplex
from pareto_metasolver.backend import subproblem
from pareto_metasolver.common import constants

LOG = logging.getLogger(__name__)

SolveStatus = subproblem.SolveStatus


def _fractionality(x, integer_indices):
    values = np.asarray(x)[integer_indices]
    return np.abs(values - np.round(values))


def _snap(x, integer_indices):
    x = np.array(x, dtype=float)
    x[integer_indices] = np.round(x[integer_indices])
    return x


def solve_milp(sub, time_limit=None,
               max_iterations=constants.DEFAULT_MAX_SIMPLEX_ITERATIONS,
               max_nodes=None):
    """Solve a ScalarSubproblem to integer optimality."""
    watch = simplex.start_watch(time_limit)
    lp = simplex.from_subproblem(sub)
    integer_indices = np.array(sub.base.integer_indices, dtype=int)
    if integer_indices.size == 0:
        return simplex.solve_dense(lp, watch=watch,
                                   max_iterations=max_iterations)

    lower = lp.lower.copy()
    upper = lp.upper.copy()
    tol = constants.INTEGRALITY_TOL
    lower[integer_indices] = np.ceil(lower[integer_indices] - tol)
    upper[integer_indices] = np.floor(upper[integer_indices] + tol)

    def relax(node_lower, node_upper):
        return simplex.solve_dense(lp.with_bounds(node_lower, node_upper),
                                   watch=watch,
                                   max_iterations=max_iterations)

    root = relax(lower, upper)
    if not root.is_optimal:
        return root

    counter = itertools.count()
    heap = [(root.value, next(counter), lower, upper, root.x)]
    incumbent = None
    incumbent_value = constants.INF
    nodes = 0
    while heap:
        if watch.expired():
            return subproblem.ScalarResult(SolveStatus.TIME_LIMIT)
        bound, _order, node_lower, node_upper, x = heapq.heappop(heap)
        if bound >= incumbent_value - constants.IMPROVEMENT_TOL:
            break
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            LOG.warning("Branch-and-bound stopped after %d nodes", nodes)
            return subproblem.ScalarResult(SolveStatus.OTHER_ERROR)

        fractionality = _fractionality(x, integer_indices)
        branch = int(np.argmax(fractionality))
        if fractionality[branch] <= tol:
            incumbent = _snap(x, integer_indices)
            incumbent_value = bound
            continue

        j = integer_indices[branch]
        down_upper = node_upper.copy()
        down_upper[j] = np.floor(x[j])
        up_lower = node_lower.copy()
        up_lower[j] = np.ceil(x[j])
        for child_lower, child_upper in ((node_lower, down_upper),
                                         (up_lower, node_upper)):
            child = relax(child_lower, child_upper)
            if child.status is SolveStatus.INFEASIBLE:
                continue
            if not child.is_optimal:
                return child
            if child.value < incumbent_value - constants.IMPROVEMENT_TOL:
                heapq.heappush(heap, (child.value, next(counter),
                                      child_lower, child_upper, child.x))

    LOG.debug("Branch-and-bound explored %d nodes", nodes)
    if incumbent is None:
        return subproblem.ScalarResult(SolveStatus.INFEASIBLE)
    return subproblem.ScalarResult(SolveStatus.OPTIMAL, x=tuple(incumbent),
                                   value=sub.value_of(incumbent))
