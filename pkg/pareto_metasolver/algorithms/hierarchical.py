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

import numpy as np

from pareto_metasolver._i18n import _
from pareto_metasolver.algorithms import base
from pareto_metasolver.algorithms import utils
from pareto_metasolver.common import constants
from pareto_metasolver import exceptions


class Hierarchical(base.MultiObjectiveAlgorithm):
    """Single point from weighted priority levels.

    Objectives sharing a priority form one level, minimized as a weighted
    sum; levels are handled by descending priority and each optimum is
    kept as a constraint, relaxed by the largest relative tolerance of the
    level.
    """

    name = constants.HIERARCHICAL

    def levels(self, config):
        weights = np.asarray(config.weights)
        for priority in sorted(set(config.priorities), reverse=True):
            members = [k for k, p in enumerate(config.priorities)
                       if p == priority]
            level = np.zeros(weights.size)
            level[members] = weights[members]
            tolerance = max(config.relative_tolerance(k) for k in members)
            yield tuple(level), tolerance

    def search(self, run):
        if run.config.weights is None or run.config.priorities is None:
            raise exceptions.InvalidConfig(
                reason=_("hierarchical needs weights and priorities"))
        stages, tolerances = zip(*self.levels(run.config))
        result, _values = utils.lexicographic_optimum(
            run, stages, tolerances=tolerances)
        run.require(result)
        run.add_point(result.x)
        return base.SolveStatus.OPTIMAL
