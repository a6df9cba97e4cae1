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

from oslo_log import log as logging

from pareto_metasolver.algorithms import base
from pareto_metasolver.algorithms import utils
from pareto_metasolver.backend import subproblem
from pareto_metasolver.common import constants

LOG = logging.getLogger(__name__)


class Dichotomy(base.MultiObjectiveAlgorithm):
    """Supported extreme points of a bi-objective problem.

    Starting from the two lexicographic anchors, every pair of adjacent
    points is explored with the weighted sum whose level lines are parallel
    to the segment joining them. A strictly better point splits the pair.
    """

    name = constants.DICHOTOMY
    max_objectives = 2

    def anchor(self, run, first):
        result, _values = utils.lexicographic_optimum(
            run, [utils.unit(2, first), utils.unit(2, 1 - first)])
        run.require(result)
        point, _new = run.add_point(result.x)
        return point

    def search(self, run):
        left = self.anchor(run, 0)
        if run.limit_reached:
            return base.SolveStatus.OPTIMAL
        right = self.anchor(run, 1)
        pending = []
        if left.y != right.y:
            pending.append((left, right))
        while pending and not run.limit_reached:
            left, right = pending.pop()
            weights = (left.y[1] - right.y[1], right.y[0] - left.y[0])
            reference = weights[0] * left.y[0] + weights[1] * left.y[1]
            result = run.solve_required(
                subproblem.build_subproblem(run.problem, weights))
            threshold = constants.IMPROVEMENT_TOL * max(1.0, abs(reference))
            if result.value < reference - threshold:
                middle, _new = run.add_point(result.x)
                LOG.debug("Segment %s - %s split at %s",
                          left.y, right.y, middle.y)
                pending.append((middle, right))
                pending.append((left, middle))
        run.points[:] = utils.supported_extremes_2d(run.frontier.points)
        return base.SolveStatus.OPTIMAL
