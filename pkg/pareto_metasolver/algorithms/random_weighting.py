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

from pareto_metasolver.algorithms import base
from pareto_metasolver.backend import subproblem
from pareto_metasolver.common import constants


def weight_sampler(seed, size):
    """Uniform samples of the unit simplex from a Philox generator.

    Normalized exponential spacings are uniform on the simplex.
    """
    generator = np.random.Generator(np.random.Philox(seed))
    while True:
        draws = generator.standard_exponential(size)
        yield draws / draws.sum()


class RandomWeighting(base.MultiObjectiveAlgorithm):
    """Weighted sums with weights drawn from a seeded generator.

    solution_limit is the number of weight vectors drawn.
    """

    name = constants.RANDOM_WEIGHTING

    def iterations(self, config, size):
        if config.solution_limit is None:
            return constants.RANDOM_WEIGHTING_ITERATIONS_PER_OBJECTIVE * size
        return config.solution_limit

    def search(self, run):
        size = run.num_objectives
        sampler = weight_sampler(run.config.seed, size)
        for _iteration in range(self.iterations(run.config, size)):
            weights = next(sampler)
            result = run.solve_required(
                subproblem.build_subproblem(run.problem, weights))
            run.add_point(result.x)
        return base.SolveStatus.OPTIMAL
