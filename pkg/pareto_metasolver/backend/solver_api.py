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

from oslo_config import cfg
from oslo_log import helpers as log_helpers
from oslo_log import log as logging
from oslo_utils import timeutils

from pareto_metasolver.backend import branch_and_bound
from pareto_metasolver.backend import simplex
from pareto_metasolver.backend import subproblem
from pareto_metasolver.common import config

LOG = logging.getLogger(__name__)


class SolverBase(metaclass=abc.ABCMeta):
    """Single-objective solver contract.

    An implementation solves one ScalarSubproblem per call and keeps no
    state between calls. It reports OPTIMAL with an integer-feasible x and
    its weighted value, or one of the other SolveStatus values without x.
    """

    @abc.abstractmethod
    def solve(self, sub, time_limit=None):
        pass


class BundledSolver(SolverBase):
    """Dense simplex, with branch-and-bound when integers are present."""

    def __init__(self, max_iterations=None, max_nodes=None, conf=None):
        options = (conf or cfg.CONF)[config.SOLVER_GROUP]
        if max_iterations is None:
            max_iterations = options.max_simplex_iterations
        if max_nodes is None:
            max_nodes = options.max_nodes
        self.max_iterations = max_iterations
        self.max_nodes = max_nodes

    @log_helpers.log_method_call
    def solve(self, sub, time_limit=None):
        if sub.has_integers:
            return branch_and_bound.solve_milp(
                sub, time_limit=time_limit,
                max_iterations=self.max_iterations,
                max_nodes=self.max_nodes)
        return simplex.solve_lp(sub, time_limit=time_limit,
                                max_iterations=self.max_iterations)


class SolverSession(SolverBase):
    """Instrumented wrapper shared by all solves of one optimize call.

    Counts delegated solves and enforces one wall clock budget over all of
    them: each solve gets the remaining time and once the budget is spent
    TIME_LIMIT is answered without delegating.
    """

    def __init__(self, solver, time_limit=None):
        self.solver = solver
        self.subproblem_count = 0
        self._watch = timeutils.StopWatch(duration=time_limit).start()

    @property
    def expired(self):
        return self._watch.expired()

    def remaining(self):
        return self._watch.leftover(return_none=True)

    def solve(self, sub, time_limit=None):
        if self.expired:
            LOG.debug("Time limit reached after %d subproblems",
                      self.subproblem_count)
            return subproblem.ScalarResult(subproblem.SolveStatus.TIME_LIMIT)
        remaining = self.remaining()
        if remaining is not None and (time_limit is None or
                                      remaining < time_limit):
            time_limit = remaining
        self.subproblem_count += 1
        result = self.solver.solve(sub, time_limit=time_limit)
        LOG.debug("Subproblem %d finished with status %s",
                  self.subproblem_count, result.status.value)
        return result
