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

import abc
import dataclasses
import math

from oslo_config import cfg
from oslo_log import log as logging

from pareto_metasolver._i18n import _
from pareto_metasolver.backend import subproblem
from pareto_metasolver.common import config as ms_config
from pareto_metasolver.common import constants
from pareto_metasolver import dominance
from pareto_metasolver import exceptions
from pareto_metasolver import model

LOG = logging.getLogger(__name__)

SolveStatus = subproblem.SolveStatus

_CONF_FIELDS = ('epsilon', 'time_limit', 'solution_limit', 'seed',
                'all_permutations', 'sandwich_gap', 'tchebychev_rho')


def _optional_tuple(values, cast):
    if values is None:
        return None
    return tuple(cast(v) for v in values)


@dataclasses.dataclass(frozen=True)
class AlgorithmConfig:
    epsilon: float = constants.DEFAULT_EPSILON
    time_limit: float = None
    solution_limit: int = None
    seed: int = constants.DEFAULT_SEED
    weights: tuple = None
    priorities: tuple = None
    relative_tolerances: tuple = None
    all_permutations: bool = True
    sandwich_gap: float = constants.DEFAULT_SANDWICH_GAP
    tchebychev_rho: float = constants.DEFAULT_TCHEBYCHEV_RHO

    def __post_init__(self):
        object.__setattr__(self, 'weights',
                           _optional_tuple(self.weights, float))
        object.__setattr__(self, 'priorities',
                           _optional_tuple(self.priorities, int))
        object.__setattr__(self, 'relative_tolerances',
                           _optional_tuple(self.relative_tolerances, float))
        self._validate()

    def _validate(self):
        def positive(name):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise exceptions.InvalidConfig(
                    reason=_("%(name)s must be a positive number, got "
                             "%(value)s") % {'name': name, 'value': value})

        positive('epsilon')
        positive('sandwich_gap')
        positive('tchebychev_rho')
        if self.time_limit is not None and not self.time_limit >= 0:
            raise exceptions.InvalidConfig(
                reason=_("time_limit must not be negative"))
        if self.solution_limit is not None and self.solution_limit < 0:
            raise exceptions.InvalidConfig(
                reason=_("solution_limit must not be negative"))
        if not 0 <= self.seed <= constants.MAX_SEED:
            raise exceptions.InvalidConfig(
                reason=_("seed must be a 64-bit unsigned integer"))
        if self.weights is not None and not all(
                w > 0 and math.isfinite(w) for w in self.weights):
            raise exceptions.InvalidConfig(
                reason=_("weights must be strictly positive"))
        if self.relative_tolerances is not None and not all(
                t >= 0 for t in self.relative_tolerances):
            raise exceptions.InvalidConfig(
                reason=_("relative_tolerances must not be negative"))

    def check_objectives(self, count):
        for name in ('weights', 'priorities', 'relative_tolerances'):
            values = getattr(self, name)
            if values is not None and len(values) != count:
                raise exceptions.InvalidConfig(
                    reason=_("%(name)s has %(size)d entries for %(count)d "
                             "objectives") %
                    {'name': name, 'size': len(values), 'count': count})

    def relative_tolerance(self, k):
        if self.relative_tolerances is None:
            return 0.0
        return self.relative_tolerances[k]

    @classmethod
    def from_conf(cls, conf=None, **overrides):
        """Build a config from the [algorithm] group.

        Overrides set to None keep the configured value.
        """
        options = (conf or cfg.CONF)[ms_config.ALGORITHM_GROUP]
        values = {name: getattr(options, name) for name in _CONF_FIELDS}
        values.update((name, value) for name, value in overrides.items()
                      if value is not None)
        return cls(**values)


class SearchRun:
    """State of one algorithm invocation."""

    def __init__(self, problem, config, solver):
        self.problem = problem
        self.config = config
        self.solver = solver
        self.points = []
        self.frontier = dominance.Frontier()

    @property
    def num_objectives(self):
        return self.problem.num_objectives

    @property
    def epsilon(self):
        return self.config.epsilon

    @property
    def limit_reached(self):
        limit = self.config.solution_limit
        return limit is not None and len(self.frontier) >= limit

    def solve(self, sub):
        """Solve sub, raising SubproblemFailed unless it is decided."""
        result = self.solver.solve(sub)
        if result.status in (SolveStatus.OPTIMAL, SolveStatus.INFEASIBLE):
            return result
        raise exceptions.SubproblemFailed(status=result.status)

    def solve_required(self, sub):
        """Solve a subproblem that is feasible whenever the problem is."""
        return self.require(self.solve(sub))

    def require(self, result):
        """Stop the search unless result is optimal."""
        if result.is_optimal:
            return result
        if self.points:
            LOG.warning("Subproblem infeasible although %d points are "
                        "known", len(self.points))
            raise exceptions.SubproblemFailed(
                status=SolveStatus.OTHER_ERROR)
        raise exceptions.SubproblemFailed(status=SolveStatus.INFEASIBLE)

    def add_point(self, x):
        """Record x, returning its SolutionPoint and whether it is new."""
        point = dominance.SolutionPoint(
            x, model.evaluate_objective(self.problem, x))
        self.points.append(point)
        self.frontier, changed = dominance.merge_into(self.frontier, point)
        if not changed:
            LOG.debug("Point %s is already known", point.y)
        return point, changed


class MultiObjectiveAlgorithm(metaclass=abc.ABCMeta):
    """Base class of the scalarization algorithms.

    Subclasses implement search() against a SearchRun. The base class
    handles the checks shared by every algorithm and turns a failing
    subproblem into the (status, points) result.
    """

    name = None
    # Largest supported number of objectives, None for any.
    max_objectives = None
    # Relies on epsilon to emulate strict objective inequalities.
    uses_epsilon = False

    def check_dimension(self, count):
        if self.max_objectives is not None and count > self.max_objectives:
            raise exceptions.UnsupportedDimension(algorithm=self.name,
                                                  objectives=count)

    def minimize_multiobjective(self, problem, config, solver):
        if problem.sense is not model.ObjectiveSense.MIN:
            raise exceptions.NotMinimization(name=problem.name)
        self.check_dimension(problem.num_objectives)
        config.check_objectives(problem.num_objectives)
        if config.solution_limit == 0:
            return SolveStatus.OTHER_ERROR, ()

        run = SearchRun(problem, config, solver)
        LOG.info("Running %(algorithm)s on problem %(problem)s",
                 {'algorithm': self.name, 'problem': problem.name})
        try:
            status = self.search(run)
        except exceptions.SubproblemFailed as exc:
            status = exc.status
            if status in (SolveStatus.INFEASIBLE, SolveStatus.UNBOUNDED):
                LOG.info("%(algorithm)s stopped: problem is %(status)s",
                         {'algorithm': self.name, 'status': status.value})
                return status, ()
        points = dominance.filter_nondominated(run.points).points
        LOG.info("%(algorithm)s found %(count)d points with status "
                 "%(status)s", {'algorithm': self.name,
                                'count': len(points),
                                'status': status.value})
        return status, points

    __call__ = minimize_multiobjective

    @abc.abstractmethod
    def search(self, run):
        """Add points to run and return the final SolveStatus."""
