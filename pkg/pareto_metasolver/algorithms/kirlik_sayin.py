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

import itertools

import numpy as np
from oslo_log import log as logging

from pareto_metasolver.algorithms import base
from pareto_metasolver.algorithms import utils
from pareto_metasolver.common import constants

LOG = logging.getLogger(__name__)


class Rectangle:
    """Half-open box [lower, upper) over objectives 2..o."""

    def __init__(self, lower, upper):
        self.lower = np.asarray(lower, dtype=float)
        self.upper = np.asarray(upper, dtype=float)

    @property
    def volume(self):
        return float(np.prod(self.upper - self.lower))

    def is_empty(self):
        return bool(np.any(self.lower >= self.upper))

    def inside(self, lower, upper):
        return bool(np.all(self.lower >= lower) and
                    np.all(self.upper <= upper))

    def split(self, point):
        """Cut the rectangle at point in every dimension it crosses."""
        if np.any(point >= self.upper):
            return [self]
        cuts = [j for j in range(self.lower.size) if point[j] > self.lower[j]]
        pieces = []
        for halves in itertools.product((0, 1), repeat=len(cuts)):
            lower, upper = self.lower.copy(), self.upper.copy()
            for j, half in zip(cuts, halves):
                if half:
                    lower[j] = point[j]
                else:
                    upper[j] = point[j]
            piece = Rectangle(lower, upper)
            if not piece.is_empty():
                pieces.append(piece)
        return pieces


class KirlikSayin(base.MultiObjectiveAlgorithm):
    """Rectangle search over the projection onto objectives 2..o.

    The largest rectangle is explored by minimizing f1 strictly below its
    upper corner, then the sum of objectives with f1 held. A new point
    splits every rectangle it crosses. The region between the projected
    point and the explored upper corner, or the whole region below that
    corner when that subproblem is infeasible, holds no further nondominated
    point and is dropped.
    """

    name = constants.KIRLIK_SAYIN
    uses_epsilon = True

    def search(self, run):
        size = run.num_objectives
        ideal = utils.compute_ideal_point(run.problem, run.solver)
        nadir = utils.compute_anti_ideal(run.problem, run.solver,
                                         run.epsilon)
        rectangles = [Rectangle(ideal[1:], nadir[1:])]
        while rectangles:
            selected = max(rectangles, key=lambda r: r.volume)
            upper = selected.upper
            bounds = np.concatenate([[constants.INF], upper - run.epsilon])
            result, _values = utils.lexicographic_optimum(
                run, utils.objective_order(size, 0), upper_bounds=bounds)
            if not result.is_optimal:
                rectangles = [r for r in rectangles
                              if not np.all(r.upper <= upper)]
                continue
            point, new = run.add_point(result.x)
            projected = np.asarray(point.y[1:])
            if new:
                rectangles = [piece for r in rectangles
                              for piece in r.split(projected)]
                LOG.debug("Point %s leaves %d rectangles",
                          point.y, len(rectangles))
                if run.limit_reached:
                    break
            rectangles = [r for r in rectangles
                          if not r.inside(projected, upper)]
        return base.SolveStatus.OPTIMAL
