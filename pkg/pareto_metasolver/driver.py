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

"""Meta-solver facade.

optimize() converts a maximization problem to minimization, dispatches it
to a registered algorithm through an instrumented solver session, filters
and orders the returned points and converts them back to the user's sense.
"""

import dataclasses

from oslo_config import cfg
from oslo_log import helpers as log_helpers
from oslo_log import log as logging
from oslo_utils import importutils
from oslo_utils import timeutils

from pareto_metasolver._i18n import _
from pareto_metasolver.algorithms import base
from pareto_metasolver.backend import solver_api
from pareto_metasolver.backend import subproblem
from pareto_metasolver.common import config
from pareto_metasolver.common import constants
from pareto_metasolver import dominance
from pareto_metasolver import exceptions
from pareto_metasolver import model

LOG = logging.getLogger(__name__)

_ALGORITHM_PATH = 'pareto_metasolver.algorithms.'

BUILTIN_ALGORITHMS = {
    constants.CHALMET: _ALGORITHM_PATH + 'chalmet.Chalmet',
    constants.DICHOTOMY: _ALGORITHM_PATH + 'dichotomy.Dichotomy',
    constants.DOMINGUEZ_RIOS:
        _ALGORITHM_PATH + 'dominguez_rios.DominguezRios',
    constants.EPSILON_CONSTRAINT:
        _ALGORITHM_PATH + 'epsilon_constraint.EpsilonConstraint',
    constants.HIERARCHICAL: _ALGORITHM_PATH + 'hierarchical.Hierarchical',
    constants.KIRLIK_SAYIN: _ALGORITHM_PATH + 'kirlik_sayin.KirlikSayin',
    constants.LEXICOGRAPHIC:
        _ALGORITHM_PATH + 'lexicographic.Lexicographic',
    constants.RANDOM_WEIGHTING:
        _ALGORITHM_PATH + 'random_weighting.RandomWeighting',
    constants.SANDWICHING: _ALGORITHM_PATH + 'sandwiching.Sandwiching',
    constants.TAMBY_VANDERPOOTEN:
        _ALGORITHM_PATH + 'tamby_vanderpooten.TambyVanderpooten',
}

_registry = {}


def _load_builtin_algorithms():
    for identifier, path in BUILTIN_ALGORITHMS.items():
        if identifier not in _registry:
            _registry[identifier] = importutils.import_object(path)


@log_helpers.log_method_call
def register_algorithm(identifier, implementation):
    """Make implementation dispatchable under identifier.

    implementation is either a MultiObjectiveAlgorithm or any callable
    taking (problem, config, solver) and returning (status, points).
    """
    _load_builtin_algorithms()
    if identifier in _registry:
        raise exceptions.DuplicateIdentifier(algorithm=identifier)
    _registry[identifier] = implementation


def list_algorithms():
    _load_builtin_algorithms()
    return sorted(_registry)


def get_algorithm(identifier):
    _load_builtin_algorithms()
    try:
        return _registry[identifier]
    except KeyError:
        raise exceptions.UnknownAlgorithm(
            algorithm=identifier, valid=', '.join(list_algorithms()))


def load_algorithm_providers(conf=None):
    """Register the algorithms listed in [driver] algorithm_providers."""
    providers = (conf or cfg.CONF)[config.DRIVER_GROUP].algorithm_providers
    for provider in providers:
        identifier, sep, path = provider.partition(':')
        if not sep or not identifier or not path:
            raise exceptions.InvalidConfig(
                reason=_("algorithm provider %s is not of the form "
                         "<identifier>:<dotted.path>") % provider)
        if identifier in list_algorithms():
            LOG.warning("Algorithm %(id)s is already registered, provider "
                        "%(path)s ignored",
                        {'id': identifier, 'path': path})
            continue
        register_algorithm(identifier, importutils.import_object(path))
        LOG.info("Loaded algorithm provider %(id)s from %(path)s",
                 {'id': identifier, 'path': path})


def requires_epsilon(identifier):
    return getattr(get_algorithm(identifier), 'uses_epsilon', False)


@dataclasses.dataclass(frozen=True)
class SolveStats:
    subproblem_count: int
    wall_time: float


@dataclasses.dataclass(frozen=True)
class ResultSet:
    status: subproblem.SolveStatus
    points: tuple
    stats: SolveStats
    variable_names: tuple = ()

    @property
    def result_count(self):
        return len(self.points)


def optimize(p, algorithm, algorithm_config=None, solver=None):
    """Compute nondominated points of p with a registered algorithm."""
    implementation = get_algorithm(algorithm)
    check_dimension = getattr(implementation, 'check_dimension', None)
    if check_dimension is not None:
        check_dimension(p.num_objectives)
    if algorithm_config is None:
        algorithm_config = base.AlgorithmConfig()
    if solver is None:
        solver = solver_api.BundledSolver()

    maximize = p.sense is model.ObjectiveSense.MAX
    minimization = model.negate_objective(p) if maximize else p
    session = solver_api.SolverSession(
        solver, time_limit=algorithm_config.time_limit)
    watch = timeutils.StopWatch().start()
    status, points = implementation(minimization, algorithm_config,
                                    session)
    frontier = dominance.filter_nondominated(points)
    points = frontier.points
    if maximize:
        points = tuple(point.negated() for point in points)
    stats = SolveStats(subproblem_count=session.subproblem_count,
                       wall_time=watch.elapsed())
    LOG.info("%(algorithm)s returned %(count)d points with status "
             "%(status)s after %(solves)d subproblems",
             {'algorithm': algorithm, 'count': len(points),
              'status': status.value, 'solves': stats.subproblem_count})
    return ResultSet(status=status, points=tuple(points), stats=stats,
                     variable_names=p.variable_names)
