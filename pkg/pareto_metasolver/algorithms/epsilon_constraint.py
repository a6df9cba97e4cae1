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
from pareto_metasolver.common import constants
from pareto_metasolver import model

LOG = logging.getLogger(__name__)


class EpsilonConstraint(base.MultiObjectiveAlgorithm):
    """Sweep of the first objective bound, from worst to best.

    Each step minimizes f2 under f1 <= bound and then f1 with f2 held at
    that optimum, so every point found is efficient. The bound then moves
    epsilon below the f1 value just found.
    """

    name = constants.EPSILON_CONSTRAINT
    max_objectives = 2
    uses_epsilon = True

    def search(self, run):
        best, _values = utils.lexicographic_optimum(
            run, [utils.unit(2, 0), utils.unit(2, 1)])
        run.require(best)
        worst, _values = utils.lexicographic_optimum(
            run, [utils.unit(2, 1), utils.unit(2, 0)])
        run.require(worst)
        lowest = model.evaluate_objective(run.problem, best.x)[0]
        bound = model.evaluate_objective(run.problem, worst.x)[0]

        while bound >= lowest - constants.FEASIBILITY_TOL:
            result, _values = utils.lexicographic_optimum(
                run, [utils.unit(2, 1), utils.unit(2, 0)],
                upper_bounds=(bound, constants.INF))
            if not result.is_optimal:
                break
            point, _new = run.add_point(result.x)
            if run.limit_reached:
                break
            bound = point.y[0] - run.epsilon
            LOG.debug("First objective bound moved to %s", bound)
        return base.SolveStatus.OPTIMAL
