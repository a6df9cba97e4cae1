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

"""Multi-objective linear and integer programs.

A Problem carries bounded, possibly integral variables, scalar affine
constraint rows and one vector objective with a single sense. Every type is
an immutable value: coefficient containers are normalized to tuples when the
object is built and the numpy views are computed once and cached.
"""

import dataclasses
import enum
import functools
import math

import numpy as np

from pareto_metasolver._i18n import _
from pareto_metasolver.common import constants
from pareto_metasolver import exceptions


class VariableKind(enum.Enum):
    CONTINUOUS = 'continuous'
    INTEGER = 'integer'
    BINARY = 'binary'


class ObjectiveSense(enum.Enum):
    MIN = 'min'
    MAX = 'max'


class RowSense(enum.Enum):
    LE = 'le'
    EQ = 'eq'
    GE = 'ge'


def _freeze(obj, **fields):
    for name, value in fields.items():
        object.__setattr__(obj, name, value)


@dataclasses.dataclass(frozen=True)
class VariableSpec:
    name: str
    lower: float = 0.0
    upper: float = constants.INF
    kind: VariableKind = VariableKind.CONTINUOUS

    def __post_init__(self):
        kind = VariableKind(self.kind)
        lower, upper = float(self.lower), float(self.upper)
        if kind is VariableKind.BINARY:
            kind, lower, upper = VariableKind.INTEGER, 0.0, 1.0
        _freeze(self, kind=kind, lower=lower, upper=upper)

    @property
    def is_integer(self):
        return self.kind is VariableKind.INTEGER


@dataclasses.dataclass(frozen=True)
class LinearRow:
    """sum(coefficients[j] * x[j]) <sense> rhs.

    ``coefficients`` accepts a mapping or pairs of index and value and is
    stored as index-sorted pairs without zero entries.
    """
    coefficients: tuple
    sense: RowSense
    rhs: float

    def __post_init__(self):
        items = self.coefficients
        if hasattr(items, 'items'):
            items = items.items()
        merged = {}
        for index, value in items:
            merged[int(index)] = merged.get(int(index), 0.0) + float(value)
        coefficients = tuple(sorted((index, value)
                                    for index, value in merged.items()
                                    if value != 0.0))
        _freeze(self, coefficients=coefficients,
                sense=RowSense(self.sense), rhs=float(self.rhs))

    def as_dict(self):
        return dict(self.coefficients)

    def dense(self, num_variables):
        row = np.zeros(num_variables)
        for index, value in self.coefficients:
            row[index] = value
        return row

    def activity(self, x):
        return math.fsum(value * float(x[index])
                         for index, value in self.coefficients)


@dataclasses.dataclass(frozen=True)
class VectorObjective:
    matrix: tuple
    offsets: tuple = None
    sense: ObjectiveSense = ObjectiveSense.MIN

    def __post_init__(self):
        matrix = tuple(tuple(float(v) for v in row) for row in self.matrix)
        if self.offsets is None:
            offsets = (0.0,) * len(matrix)
        else:
            offsets = tuple(float(v) for v in self.offsets)
        _freeze(self, matrix=matrix, offsets=offsets,
                sense=ObjectiveSense(self.sense))

    @property
    def num_objectives(self):
        return len(self.matrix)

    @functools.cached_property
    def matrix_array(self):
        array = np.array(self.matrix, dtype=float)
        array.setflags(write=False)
        return array

    @functools.cached_property
    def offsets_array(self):
        array = np.array(self.offsets, dtype=float)
        array.setflags(write=False)
        return array


@dataclasses.dataclass(frozen=True)
class Problem:
    variables: tuple
    rows: tuple
    objective: VectorObjective
    name: str = ''

    def __post_init__(self):
        _freeze(self, variables=tuple(self.variables), rows=tuple(self.rows))
        validate_problem(self)

    @property
    def num_variables(self):
        return len(self.variables)

    @property
    def num_objectives(self):
        return self.objective.num_objectives

    @property
    def sense(self):
        return self.objective.sense

    @property
    def variable_names(self):
        return tuple(var.name for var in self.variables)

    @functools.cached_property
    def lower_bounds(self):
        return np.array([var.lower for var in self.variables], dtype=float)

    @functools.cached_property
    def upper_bounds(self):
        return np.array([var.upper for var in self.variables], dtype=float)

    @functools.cached_property
    def integer_indices(self):
        return tuple(j for j, var in enumerate(self.variables)
                     if var.is_integer)

    def is_feasible(self, x, tol=constants.FEASIBILITY_TOL):
        """Check bounds, integrality and rows of x within tol."""
        x = np.asarray(x, dtype=float)
        if x.shape != (self.num_variables,):
            return False
        if np.any(x < self.lower_bounds - tol) or np.any(
                x > self.upper_bounds + tol):
            return False
        for j in self.integer_indices:
            if abs(x[j] - round(x[j])) > tol:
                return False
        for row in self.rows:
            activity = row.activity(x)
            if row.sense is RowSense.LE and activity > row.rhs + tol:
                return False
            if row.sense is RowSense.GE and activity < row.rhs - tol:
                return False
            if row.sense is RowSense.EQ and abs(activity - row.rhs) > tol:
                return False
        return True


def _check_finite(value, where):
    if math.isnan(value) or math.isinf(value):
        raise exceptions.InvalidCoefficient(value=value, where=where)


def validate_problem(p):
    """Check every invariant of a Problem without modifying it."""
    objective = p.objective
    count = p.num_variables
    if objective.num_objectives < 2:
        raise exceptions.DimensionMismatch(
            reason=_("a vector objective needs at least 2 objectives, "
                     "got %d") % objective.num_objectives)
    if len(objective.offsets) != objective.num_objectives:
        raise exceptions.DimensionMismatch(
            reason=_("%(offsets)d offsets for %(rows)d objectives") %
            {'offsets': len(objective.offsets),
             'rows': objective.num_objectives})
    for k, row in enumerate(objective.matrix):
        if len(row) != count:
            raise exceptions.DimensionMismatch(
                reason=_("objective %(k)d has %(width)d coefficients for "
                         "%(count)d variables") %
                {'k': k, 'width': len(row), 'count': count})
        for value in row:
            _check_finite(value, _("objective %d") % k)
    for value in objective.offsets:
        _check_finite(value, _("objective offsets"))
    for var in p.variables:
        if (math.isnan(var.lower) or math.isnan(var.upper) or
                var.lower > var.upper or var.lower == constants.INF or
                var.upper == -constants.INF):
            raise exceptions.BadBounds(name=var.name, lower=var.lower,
                                       upper=var.upper)
    for i, row in enumerate(p.rows):
        for index, value in row.coefficients:
            if not 0 <= index < count:
                raise exceptions.BadIndex(index=index, count=count)
            _check_finite(value, _("row %d") % i)
        _check_finite(row.rhs, _("row %d") % i)


def evaluate_objective(p, x):
    x = np.asarray(x, dtype=float)
    if x.shape != (p.num_variables,):
        raise exceptions.DimensionMismatch(
            reason=_("point of shape %(shape)s for %(count)d variables") %
            {'shape': x.shape, 'count': p.num_variables})
    # + 0.0 turns -0.0 into 0.0
    return p.objective.matrix_array @ x + p.objective.offsets_array + 0.0


def _flip_sense(p):
    objective = p.objective
    sense = (ObjectiveSense.MIN if objective.sense is ObjectiveSense.MAX
             else ObjectiveSense.MAX)
    flipped = VectorObjective(
        matrix=tuple(tuple(-v for v in row) for row in objective.matrix),
        offsets=tuple(-v for v in objective.offsets),
        sense=sense)
    return dataclasses.replace(p, objective=flipped)


def negate_objective(p):
    """Return the minimization form of a maximization problem."""
    if p.sense is ObjectiveSense.MIN:
        raise exceptions.AlreadyMin(name=p.name)
    return _flip_sense(p)


def as_minimization(p):
    if p.sense is ObjectiveSense.MAX:
        return negate_objective(p)
    return p


def has_integral_data(p):
    """True when every variable is integer and objective data is integral."""
    if any(not var.is_integer for var in p.variables):
        return False
    values = list(p.objective.offsets)
    for row in p.objective.matrix:
        values.extend(row)
    return all(float(v).is_integer() for v in values)
