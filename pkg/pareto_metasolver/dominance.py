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

"""Componentwise dominance in minimization convention."""

import dataclasses

import numpy as np

from pareto_metasolver._i18n import _
from pareto_metasolver.common import constants
from pareto_metasolver import exceptions


def _as_floats(values):
    # + 0.0 turns -0.0 into 0.0
    return tuple(float(v) + 0.0 for v in values)


@dataclasses.dataclass(frozen=True)
class SolutionPoint:
    x: tuple
    y: tuple

    def __post_init__(self):
        object.__setattr__(self, 'x', _as_floats(self.x))
        object.__setattr__(self, 'y', _as_floats(self.y))

    def negated(self):
        return SolutionPoint(self.x, tuple(-v for v in self.y))


@dataclasses.dataclass(frozen=True)
class Frontier:
    """Mutually nondominated points sorted ascending by y."""
    points: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'points', tuple(self.points))

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, index):
        return self.points[index]

    @property
    def ys(self):
        return [point.y for point in self.points]


def _check_dimensions(a, b):
    if len(a) != len(b):
        raise exceptions.DimensionMismatch(
            reason=_("objective vectors of length %(a)d and %(b)d") %
            {'a': len(a), 'b': len(b)})


def dominates(a, b):
    """True iff a <= b componentwise and a != b."""
    _check_dimensions(a, b)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return bool(np.all(a <= b) and np.any(a < b))


def same_objective(a, b, tol=constants.DEDUP_TOL):
    _check_dimensions(a, b)
    return all(abs(u - v) <= tol for u, v in zip(a, b))


def _covered(kept, y):
    return any(dominates(other.y, y) or same_objective(other.y, y)
               for other in kept)


def filter_nondominated(points):
    """Return the nondominated points of the input as a Frontier.

    Among points sharing the same y the first one in input order is kept.
    """
    points = list(points)
    if not points:
        return Frontier()
    for point in points[1:]:
        _check_dimensions(point.y, points[0].y)
    # A dominating point always sorts before the points it dominates.
    order = sorted(range(len(points)), key=lambda i: (points[i].y, i))
    kept = []
    for i in order:
        if not _covered(kept, points[i].y):
            kept.append(points[i])
    return Frontier(kept)


def merge_into(frontier, point):
    """Insert point into frontier, returning (frontier, changed)."""
    if len(frontier):
        _check_dimensions(frontier[0].y, point.y)
    if _covered(frontier, point.y):
        return frontier, False
    survivors = [other for other in frontier
                 if not dominates(point.y, other.y)]
    survivors.append(point)
    survivors.sort(key=lambda other: other.y)
    return Frontier(survivors), True
