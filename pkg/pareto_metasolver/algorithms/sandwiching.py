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

"""Inner and outer polyhedral approximation of the supported frontier.

The inner approximation is the convex hull of the points found plus the
nonnegative orthant; the outer approximation is the intersection of the
halfspaces w^T y >= min w^T f0(x) of every weight solved. Facets of the
inner approximation are explored by decreasing distance to the outer one
until the largest distance falls under the configured gap.
"""

import numpy as np
from oslo_log import log as logging

from pareto_metasolver.algorithms import base
from pareto_metasolver.algorithms import utils
from pareto_metasolver.backend import simplex
from pareto_metasolver.common import constants
from pareto_metasolver import model

LOG = logging.getLogger(__name__)


def _key(weights):
    return tuple(np.round(weights, 12))


def inner_facets(points):
    """(weights, level) of the lower facets through the points."""
    ys = np.array([p.y for p in points], dtype=float)
    facets = {}
    if ys.shape[1] == 2:
        hull = [np.asarray(p.y) for p in utils.supported_extremes_2d(points)]
        for a, b in zip(hull, hull[1:]):
            weights = np.array([a[1] - b[1], b[0] - a[0]])
            weights /= weights.sum()
            facets.setdefault(_key(weights), (weights, float(weights @ a)))
        return list(facets.values())

    hull = utils.cone_hull(ys)
    if hull is None:
        return []
    for vertices, equation in zip(hull.simplices, hull.equations):
        inward = -equation[:-1]
        if np.any(inward < -constants.HULL_TOL):
            continue
        weights = np.clip(inward, 0.0, None)
        originals = [v for v in vertices if v < len(ys)]
        if not originals or weights.sum() <= 0.0:
            continue
        weights /= weights.sum()
        level = min(float(weights @ ys[v]) for v in originals)
        facets.setdefault(_key(weights), (weights, level))
    return list(facets.values())


def outer_minimum(weights, halfspaces):
    """min w^T y over the outer approximation."""
    size = len(weights)
    lp = simplex.DenseLP(
        c=np.asarray(weights, dtype=float),
        a=np.array([h for h, _level in halfspaces], dtype=float),
        senses=(model.RowSense.GE,) * len(halfspaces),
        b=np.array([level for _h, level in halfspaces], dtype=float),
        lower=np.full(size, -constants.INF),
        upper=np.full(size, constants.INF))
    result = simplex.solve_dense(lp)
    if not result.is_optimal:
        LOG.warning("Outer approximation minimum not found: %s",
                    result.status.value)
        return None
    return result.value


class Sandwiching(base.MultiObjectiveAlgorithm):

    name = constants.SANDWICHING

    def explore(self, run, weights, halfspaces):
        stages = [weights]
        if np.any(np.asarray(weights) == 0.0):
            # Zero weights may leave a weakly efficient optimum.
            stages.append((1.0,) * len(weights))
        result, values = utils.lexicographic_optimum(run, stages)
        run.require(result)
        halfspaces.append((np.asarray(weights, dtype=float), values[0]))
        return run.add_point(result.x)

    def search(self, run):
        size = run.num_objectives
        halfspaces = []
        solved = set()
        for k in range(size):
            weights = utils.unit(size, k)
            solved.add(_key(weights))
            self.explore(run, weights, halfspaces)
            if run.limit_reached:
                break

        while not run.limit_reached:
            best = None
            for weights, level in inner_facets(run.frontier.points):
                if _key(weights) in solved:
                    continue
                outer = outer_minimum(weights, halfspaces)
                if outer is None:
                    continue
                gap = (level - outer) / max(1.0, abs(level))
                if best is None or gap > best[0]:
                    best = (gap, weights)
            if best is None or best[0] <= run.config.sandwich_gap:
                break
            gap, weights = best
            solved.add(_key(weights))
            point, _new = self.explore(run, tuple(weights), halfspaces)
            LOG.debug("Facet with gap %(gap)s explored, found %(y)s",
                      {'gap': gap, 'y': point.y})
        run.points[:] = utils.supported_extremes(run.frontier.points)
        return base.SolveStatus.OPTIMAL
