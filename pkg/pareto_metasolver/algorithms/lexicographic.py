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

from pareto_metasolver.algorithms import base
from pareto_metasolver.algorithms import utils
from pareto_metasolver.common import constants


class Lexicographic(base.MultiObjectiveAlgorithm):
    """Lexicographic optimum of every permutation of the objectives."""

    name = constants.LEXICOGRAPHIC

    def search(self, run):
        size = run.num_objectives
        if run.config.all_permutations:
            orders = itertools.permutations(range(size))
        else:
            orders = [tuple(range(size))]
        for order in orders:
            stages = [utils.unit(size, k) for k in order]
            tolerances = [run.config.relative_tolerance(k) for k in order]
            result, _values = utils.lexicographic_optimum(
                run, stages, tolerances=tolerances)
            run.require(result)
            run.add_point(result.x)
            if run.limit_reached:
                break
        return base.SolveStatus.OPTIMAL
