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

import heapq
import itertools

import numpy as np
from oslo_log import log as logging

from pareto_metasolver.algorithms import base
from pareto_metasolver.algorithms import utils
from pareto_metasolver.backend import subproblem
from pareto_metasolver.common import constants
from pareto_metasolver import model

LOG = logging.getLogger(__name__)

TCHEBYCHEV_VARIABLE = '__tchebychev__'


class Box:

    def __init__(self, lower, upper):
        self.lower = np.asarray(lower, dtype=float)
        self.upper = np.asarray(upper, dtype=float)

    def is_above(self, y):
        return bool(np.all(y < self.upper))

    def is_narrower(self, width):
        return bool(np.any(self.upper - self.lower < width))

    def split(self, y):
        """Disjoint boxes covering this box minus {z : y <= z}."""
        pieces = []
        for j in range(y.size):
            if not self.lower[j] < y[j]:
                continue
            lower, upper = self.lower.copy(), self.upper.copy()
            lower[:j] = np.maximum(self.lower[:j], y[:j])
            upper[j] = y[j]
            pieces.append(Box(lower, upper))
        return pieces


def tchebychev_problem(p):
    """Copy of p with a free variable t appended as an extra objective."""
    count = p.num_variables
    objective = p.objective
    matrix = [row + (0.0,) for row in objective.matrix]
    matrix.append((0.0,) * count + (1.0,))
    return model.Problem(
        variables=p.variables + (model.VariableSpec(
            TCHEBYCHEV_VARIABLE, -constants.INF, constants.INF),),
        rows=p.rows,
        objective=model.VectorObjective(
            matrix=matrix, offsets=objective.offsets + (0.0,),
            sense=model.ObjectiveSense.MIN),
        name=p.name)


def tchebychev_rows(p, box):
    """Rows lambda_j * (f_j(x) - lower_j) <= t of an extended problem."""
    count = p.num_variables - 1
    rows = []
    for j in range(p.num_objectives - 1):
        span = box.upper[j] - box.lower[j]
        if np.isfinite(span) and span > constants.DEDUP_TOL:
            scale = 1.0 / span
        else:
            scale = 0.0
        coefficients = {i: scale * v for i, v in
                        enumerate(p.objective.matrix[j][:count])}
        coefficients[count] = -1.0
        rows.append(model.LinearRow(
            coefficients=coefficients, sense=model.RowSense.LE,
            rhs=scale * (box.lower[j] - p.objective.offsets[j])))
    return rows


class DominguezRios(base.MultiObjectiveAlgorithm):
    """Box decomposition explored with an augmented Tchebychev scalarization.

    Boxes are taken by decreasing volume scaled to the initial box. A
    point found in a box splits every box lying above it.
    """

    name = constants.DOMINGUEZ_RIOS
    uses_epsilon = True

    def search(self, run):
        size = run.num_objectives
        ideal = utils.compute_ideal_point(run.problem, run.solver)
        nadir = utils.compute_anti_ideal(run.problem, run.solver,
                                         run.epsilon)
        extended = tchebychev_problem(run.problem)
        weights = (run.config.tchebychev_rho,) * size + (1.0,)
        spans = nadir - ideal

        def scaled_volume(box):
            with np.errstate(invalid='ignore', divide='ignore'):
                ratios = np.where(np.isinf(spans), 1.0,
                                  (box.upper - box.lower) / spans)
            return float(np.prod(np.nan_to_num(ratios, nan=1.0)))

        counter = itertools.count()
        alive = {}
        heap = []

        def push(box):
            # f_j <= upper_j - epsilon leaves nothing inside a narrower box
            if box.is_narrower(run.epsilon - constants.DEDUP_TOL):
                return
            key = next(counter)
            alive[key] = box
            heapq.heappush(heap, (-scaled_volume(box), key))

        push(Box(ideal, nadir))
        while heap:
            _volume, key = heapq.heappop(heap)
            box = alive.pop(key, None)
            if box is None:
                continue
            bounds = tuple(box.upper - run.epsilon) + (constants.INF,)
            sub = subproblem.build_subproblem(
                extended, weights, bounds, tchebychev_rows(extended, box))
            result = run.solve(sub)
            if not result.is_optimal:
                continue
            point, new = run.add_point(result.x[:-1])
            if not new:
                continue
            y = np.asarray(point.y)
            split = [k for k, other in alive.items() if other.is_above(y)]
            for other_key in split:
                for piece in alive.pop(other_key).split(y):
                    push(piece)
            for piece in box.split(y):
                push(piece)
            LOG.debug("Point %s split %d boxes", point.y, len(split) + 1)
            if run.limit_reached:
                break
        return base.SolveStatus.OPTIMAL
