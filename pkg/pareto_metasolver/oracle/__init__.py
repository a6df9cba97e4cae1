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

"""Brute-force ground truth for small bounded integer problems.

enumerate_frontier walks the whole integer lattice of a problem and keeps
the nondominated images. It does not use the backend, so tests comparing
an algorithm against it compare two independent code paths. Supported
points are found with a hull sweep for two objectives; with more
objectives each frontier point is certified by a small LP solved with the
bundled simplex, the only place the oracle relies on the backend.

Results are always reported in minimization convention.
"""

import dataclasses
import itertools
import math
import os

import numpy as np
from oslo_log import log as logging

from pareto_metasolver.backend import simplex
from pareto_metasolver.backend import subproblem
from pareto_metasolver.common import constants
from pareto_metasolver import dominance
from pareto_metasolver import exceptions
from pareto_metasolver import model
from pareto_metasolver import serialization

LOG = logging.getLogger(__name__)

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), 'fixtures')
GOLDEN_DIR = os.path.join(FIXTURE_DIR, 'golden')
FIXTURE_NAMES = ('k1', 'k2', 'k3', 'k4')

# Strictness margin of the supported point certificate.
_CERTIFICATE_TOL = 1e-9


@dataclasses.dataclass(frozen=True)
class Fixture:
    name: str
    problem: model.Problem
    expected_frontier: tuple
    expected_supported: tuple


def _lattice_ranges(p):
    ranges = []
    for var in p.variables:
        if not var.is_integer:
            raise exceptions.ContinuousUnsupported(name=var.name)
        if math.isinf(var.lower) or math.isinf(var.upper):
            raise exceptions.TooLarge(size='inf',
                                      limit=constants.LATTICE_LIMIT)
        ranges.append(range(math.ceil(var.lower),
                            math.floor(var.upper) + 1))
    size = math.prod(len(r) for r in ranges)
    if size > constants.LATTICE_LIMIT:
        raise exceptions.TooLarge(size=size, limit=constants.LATTICE_LIMIT)
    return ranges, size


def _feasible_mask(p, xs):
    mask = np.ones(len(xs), dtype=bool)
    for row in p.rows:
        activity = xs @ row.dense(p.num_variables)
        if row.sense is model.RowSense.LE:
            mask &= activity <= row.rhs + constants.DEDUP_TOL
        elif row.sense is model.RowSense.GE:
            mask &= activity >= row.rhs - constants.DEDUP_TOL
        else:
            mask &= np.abs(activity - row.rhs) <= constants.DEDUP_TOL
    return mask


def _nondominated_rows(ys):
    """Indices of the nondominated rows of ys, given sorted ascending."""
    kept = []
    for i, y in enumerate(ys):
        if kept and np.any(np.all(ys[kept] <= y, axis=1)):
            continue
        kept.append(i)
    return kept


def enumerate_frontier(p):
    """Nondominated points of p found by enumerating its integer lattice."""
    p = model.as_minimization(p)
    ranges, size = _lattice_ranges(p)
    LOG.debug("Enumerating %d lattice points of problem %s", size, p.name)

    matrix = p.objective.matrix_array
    offsets = p.objective.offsets_array
    first_x = {}
    lattice = itertools.product(*ranges)
    while True:
        chunk = list(itertools.islice(lattice, constants.LATTICE_CHUNK))
        if not chunk:
            break
        xs = np.array(chunk, dtype=float).reshape(len(chunk),
                                                  p.num_variables)
        xs = xs[_feasible_mask(p, xs)]
        if not len(xs):
            continue
        ys = xs @ matrix.T + offsets + 0.0
        unique, index = np.unique(ys, axis=0, return_index=True)
        for y, i in zip(unique, index):
            first_x.setdefault(tuple(y), xs[i])

    if not first_x:
        return dominance.Frontier()
    ys = np.array(sorted(first_x))
    points = [dominance.SolutionPoint(first_x[tuple(ys[i])], ys[i])
              for i in _nondominated_rows(ys)]
    return dominance.filter_nondominated(points)


def _lower_hull_2d(points):
    hull = []
    for point in sorted(points, key=lambda p: p.y):
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2].y, hull[-1].y
            x2, y2 = point.y
            cross = (x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0)
            if cross > _CERTIFICATE_TOL:
                break
            hull.pop()
        hull.append(point)
    return hull


def _is_supported(point, others):
    """Search weights w >= 0 making point the unique minimizer of w.y.

    Maximizes s subject to w.(z - y) >= s for every other point z and
    sum(w) = 1, with s capped at 1.
    """
    size = len(point.y)
    y = np.asarray(point.y)
    a = [np.append(np.asarray(z.y) - y, -1.0) for z in others]
    a.append(np.append(np.ones(size), 0.0))
    senses = ((model.RowSense.GE,) * len(others) + (model.RowSense.EQ,))
    b = np.append(np.zeros(len(others)), 1.0)
    lp = simplex.DenseLP(
        c=np.append(np.zeros(size), -1.0),
        a=np.array(a).reshape(len(senses), size + 1),
        senses=senses,
        b=b,
        lower=np.append(np.zeros(size), -constants.INF),
        upper=np.append(np.full(size, constants.INF), 1.0))
    result = simplex.solve_dense(lp)
    if result.status is not subproblem.SolveStatus.OPTIMAL:
        LOG.warning("Certificate LP for %s ended with %s", point.y,
                    result.status.value)
        return False
    return -result.value > _CERTIFICATE_TOL


def enumerate_supported(p):
    """Frontier points that are vertices of conv(Y) + R^o_+."""
    frontier = enumerate_frontier(p)
    points = frontier.points
    if len(points) <= 1:
        return frontier
    if len(points[0].y) == 2:
        return dominance.Frontier(_lower_hull_2d(points))
    return dominance.Frontier([
        point for i, point in enumerate(points)
        if _is_supported(point, points[:i] + points[i + 1:])])


def generate_knapsack(n, objectives=2, seed=0):
    """Random binary multi-objective knapsack, maximized.

    Costs and item weights are integers in 1..20 and the capacity is half
    the total item weight.
    """
    rng = np.random.Generator(np.random.Philox(seed))
    costs = rng.integers(1, 21, size=(objectives, n))
    weights = rng.integers(1, 21, size=n)
    names = ['x%d' % (j + 1) for j in range(n)]
    return model.Problem(
        variables=[model.VariableSpec(name, kind=model.VariableKind.BINARY)
                   for name in names],
        rows=[model.LinearRow(
            coefficients=[(j, int(w)) for j, w in enumerate(weights)],
            sense=model.RowSense.LE,
            rhs=float(weights.sum()) / 2.0)],
        objective=model.VectorObjective(
            matrix=costs.tolist(), sense=model.ObjectiveSense.MAX),
        name='knapsack-%d-%d-%d' % (n, objectives, seed))


def fixture_path(name):
    return os.path.join(FIXTURE_DIR, '%s.json' % name)


def golden_path(name, algorithm):
    return os.path.join(GOLDEN_DIR, '%s-%s.json' % (name, algorithm))


def load_fixture(name):
    with open(fixture_path(name), 'rb') as f:
        problem = serialization.parse_instance(f.read())
    return Fixture(name=name,
                   problem=problem,
                   expected_frontier=tuple(enumerate_frontier(problem).ys),
                   expected_supported=tuple(
                       enumerate_supported(problem).ys))
