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

import collections

from pareto_metasolver.algorithms import base
from pareto_metasolver.backend import subproblem
from pareto_metasolver.common import constants


class Chalmet(base.MultiObjectiveAlgorithm):
    """Bi-objective rectangle splitting with a sum scalarization.

    Each work item is a pair of objective upper bounds. Its rectangle is
    searched for the point minimizing f1 + f2 strictly below both bounds;
    a point found splits the rectangle into the part left of it and the
    part below it.
    """

    name = constants.CHALMET
    max_objectives = 2
    uses_epsilon = True

    def search(self, run):
        pending = collections.deque([(constants.INF, constants.INF)])
        while pending:
            bounds = pending.popleft()
            sub = subproblem.build_subproblem(
                run.problem, (1.0, 1.0),
                [bound - run.epsilon for bound in bounds])
            result = run.solve(sub)
            if not result.is_optimal:
                if not run.points:
                    run.require(result)
                continue
            point, _new = run.add_point(result.x)
            if run.limit_reached:
                break
            pending.append((point.y[0], bounds[1]))
            pending.append((bounds[0], point.y[1]))
        return base.SolveStatus.OPTIMAL
