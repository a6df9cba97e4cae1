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

"""Search-region method with local upper bounds.

The part of objective space not yet shown to be free of new nondominated
points is the union of the open boxes below a set of local upper bounds.
Each bound remembers, per objective, the point that defines that
component. Adding a point replaces every bound lying strictly above it by
its projections onto the point, dropping redundant ones.
"""

import dataclasses

import numpy as np
from oslo_log import log as logging

from pareto_metasolver.algorithms import base
from pareto_metasolver.algorithms import utils
from pareto_metasolver.common import constants

LOG = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class SearchRegion:
    lower: tuple
    upper: tuple
    defining_points: dict = dataclasses.field(default_factory=dict,
                                              compare=False)

    def is_empty(self):
        return any(lo >= up for lo, up in zip(self.lower, self.upper))

    def covers(self, other):
        return all(a <= b for a, b in zip(other.upper, self.upper))


def update_regions(regions, point):
    """Remove {z : point <= z} from the union of search regions."""
    y = point.y
    affected = [r for r in regions
                if all(v < u for v, u in zip(y, r.upper))]
    if not affected:
        return regions
    kept = [r for r in regions if not any(r is a for a in affected)]
    candidates = []
    for region in affected:
        for j in range(len(y)):
            upper = list(region.upper)
            upper[j] = y[j]
            defining = {k: z for k, z in region.defining_points.items()
                        if k != j and z.y[j] < y[j]}
            defining[j] = point
            candidate = SearchRegion(region.lower, tuple(upper), defining)
            if not candidate.is_empty():
                candidates.append(candidate)
    fresh = []
    for i, candidate in enumerate(candidates):
        redundant = any(
            other.covers(candidate) and (other.upper != candidate.upper or
                                         k < i)
            for k, other in enumerate(candidates) if k != i)
        if not redundant and not any(r.covers(candidate) for r in kept):
            fresh.append(candidate)
    return kept + fresh


class TambyVanderpooten(base.MultiObjectiveAlgorithm):

    name = constants.TAMBY_VANDERPOOTEN
    uses_epsilon = True

    def select(self, regions, ideal):
        best = None
        for index, region in enumerate(regions):
            spans = np.asarray(region.upper) - ideal
            for k in range(ideal.size):
                score = float(np.prod(np.delete(spans, k)))
                if best is None or score > best[0]:
                    best = (score, index, k)
        return regions[best[1]], best[2]

    def search(self, run):
        size = run.num_objectives
        ideal = utils.compute_ideal_point(run.problem, run.solver)
        nadir = utils.compute_anti_ideal(run.problem, run.solver,
                                         run.epsilon)
        regions = [SearchRegion(tuple(ideal), tuple(nadir))]
        while regions:
            region, k = self.select(regions, ideal)
            bounds = [u - run.epsilon for u in region.upper]
            bounds[k] = constants.INF
            result, _values = utils.lexicographic_optimum(
                run, utils.objective_order(size, k), upper_bounds=bounds)
            if result.is_optimal:
                point, new = run.add_point(result.x)
                if new:
                    regions = update_regions(regions, point)
                    LOG.debug("Point %s leaves %d search regions",
                              point.y, len(regions))
                    if run.limit_reached:
                        break
            # Either the region was replaced or nothing lies below it.
            regions = [r for r in regions if r is not region]
        return base.SolveStatus.OPTIMAL
