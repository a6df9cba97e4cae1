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

"""Scalarized single-objective subproblems.

A ScalarSubproblem minimizes w^T f0(x) over the feasible set of a
minimization Problem, further restricted by f0_k(x) <= u_k for every finite
u_k and by the temporary rows an algorithm adds.
"""

import dataclasses
import enum
import functools
import math

import numpy as np

from pareto_metasolver._i18n import _
from pareto_metasolver.common import constants
from pareto_metasolver import exceptions
from pareto_metasolver import model


class SolveStatus(enum.Enum):
    OPTIMAL = 'OPTIMAL'
    INFEASIBLE = 'INFEASIBLE'
    UNBOUNDED = 'UNBOUNDED'
    TIME_LIMIT = 'TIME_LIMIT'
    OTHER_ERROR = 'OTHER_ERROR'


@dataclasses.dataclass(frozen=True)
class ScalarResult:
    status: SolveStatus
    x: tuple = None
    value: float = None

    @property
    def is_optimal(self):
        return self.status is SolveStatus.OPTIMAL


@dataclasses.dataclass(frozen=True)
class ScalarSubproblem:
    base: model.Problem
    weights: tuple
    upper_bounds: tuple
    extra_rows: tuple = ()

    @property
    def num_variables(self):
        return self.base.num_variables

    @functools.cached_property
    def cost(self):
        return np.asarray(self.weights) @ self.base.objective.matrix_array

    @functools.cached_property
    def constant(self):
        return float(np.asarray(self.weights) @
                     self.base.objective.offsets_array)

    @functools.cached_property
    def bound_rows(self):
        return tuple(objective_row(self.base, k, bound)
                     for k, bound in enumerate(self.upper_bounds)
                     if not math.isinf(bound))

    @property
    def rows(self):
        return self.base.rows + self.bound_rows + self.extra_rows

    @property
    def has_integers(self):
        return bool(self.base.integer_indices)

    def value_of(self, x):
        return float(self.cost @ np.asarray(x, dtype=float)) + self.constant


def objective_row(p, k, bound):
    """Row f0_k(x) <= bound of a problem."""
    return weighted_objective_row(p, _unit(p.num_objectives, k), bound)


def weighted_objective_row(p, weights, bound):
    """Row w^T f0(x) <= bound of a problem."""
    weights = np.asarray(weights, dtype=float)
    coefficients = weights @ p.objective.matrix_array
    constant = float(weights @ p.objective.offsets_array)
    return model.LinearRow(
        coefficients={j: v for j, v in enumerate(coefficients)},
        sense=model.RowSense.LE,
        rhs=bound - constant)


def _unit(size, k):
    weights = np.zeros(size)
    weights[k] = 1.0
    return weights


def build_subproblem(p, w, u=None, extra=()):
    if p.sense is not model.ObjectiveSense.MIN:
        raise exceptions.NotMinimization(name=p.name)
    count = p.num_objectives
    weights = tuple(float(v) for v in w)
    if u is None:
        u = (constants.INF,) * count
    upper_bounds = tuple(float(v) for v in u)
    if len(weights) != count or len(upper_bounds) != count:
        raise exceptions.DimensionMismatch(
            reason=_("%(w)d weights and %(u)d upper bounds for %(o)d "
                     "objectives") %
            {'w': len(weights), 'u': len(upper_bounds), 'o': count})
    if not any(weights):
        raise exceptions.AllZeroWeights(weights=list(weights))
    extra = tuple(extra)
    for row in extra:
        for index, _value in row.coefficients:
            if not 0 <= index < p.num_variables:
                raise exceptions.BadIndex(index=index,
                                          count=p.num_variables)
    return ScalarSubproblem(base=p, weights=weights,
                            upper_bounds=upper_bounds, extra_rows=extra)


def unit_weights(size, k):
    return tuple(_unit(size, k))
