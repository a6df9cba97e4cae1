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

"""pareto-metasolver command line entry point."""

import sys

from oslo_config import cfg
from oslo_config import types
from oslo_log import log as logging

from pareto_metasolver._i18n import _
from pareto_metasolver.algorithms import base
from pareto_metasolver.backend import solver_api
from pareto_metasolver.backend import subproblem
from pareto_metasolver.common import config
from pareto_metasolver.common import constants
from pareto_metasolver import driver
from pareto_metasolver import exceptions
from pareto_metasolver import model
from pareto_metasolver import serialization
from pareto_metasolver import version

LOG = logging.getLogger(__name__)

PROJECT = 'pareto-metasolver'

cli_opts = [
    cfg.StrOpt('instance',
               help=_('Path of the JSON instance document to solve.')),
    cfg.StrOpt('algorithm',
               dest='algorithm_name',
               help=_('Identifier of the algorithm, see '
                      '--list-algorithms.')),
    cfg.FloatOpt('epsilon',
                 help=_('Strict inequality step. Required by the epsilon '
                        'based algorithms when objective data is not '
                        'integral.')),
    cfg.FloatOpt('time-limit',
                 help=_('Wall clock limit in seconds.')),
    cfg.IntOpt('solution-limit',
               help=_('Stop after this many nondominated points.')),
    cfg.IntOpt('seed',
               help=_('Seed of the random-weighting generator.')),
    cfg.ListOpt('weights',
                item_type=types.Float(),
                help=_('Comma separated objective weights of '
                       'hierarchical.')),
    cfg.ListOpt('priorities',
                item_type=types.Integer(),
                help=_('Comma separated objective priorities of '
                       'hierarchical, larger first.')),
    cfg.StrOpt('output',
               dest='output_path',
               help=_('Write results to this path instead of standard '
                      'output.')),
    cfg.StrOpt('format',
               default='json',
               choices=constants.OUTPUT_FORMATS,
               help=_('Result format.')),
    cfg.BoolOpt('list-algorithms',
                default=False,
                help=_('Print the available algorithms and exit.')),
]

_STATUS_EXIT_CODES = {
    subproblem.SolveStatus.OPTIMAL: constants.EXIT_OK,
    subproblem.SolveStatus.INFEASIBLE: constants.EXIT_INFEASIBLE,
    subproblem.SolveStatus.UNBOUNDED: constants.EXIT_UNBOUNDED,
    subproblem.SolveStatus.TIME_LIMIT: constants.EXIT_TIME_LIMIT,
    subproblem.SolveStatus.OTHER_ERROR: constants.EXIT_OTHER_ERROR,
}


def _error(message):
    sys.stderr.write('%s: %s\n' % (PROJECT, message))


def _setup(argv):
    conf = cfg.ConfigOpts()
    conf.register_cli_opts(cli_opts)
    config.register_opts(conf)
    logging.register_options(conf)
    conf.set_default('use_stderr', True)
    conf(argv, project=PROJECT,
         version=version.version_info.version_string(),
         default_config_files=[])
    if not conf.debug:
        conf.set_default('default_log_levels',
                         logging.get_default_log_levels() +
                         ['pareto_metasolver=WARNING'])
    logging.setup(conf, PROJECT)
    return conf


def _read_instance(path):
    with open(path, 'rb') as f:
        return serialization.parse_instance(f.read())


def _write(text, path):
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, 'w', encoding='utf-8', newline='') as f:
        f.write(text)


def _algorithm_config(conf):
    return base.AlgorithmConfig.from_conf(
        conf,
        epsilon=conf.epsilon,
        time_limit=conf.time_limit,
        solution_limit=conf.solution_limit,
        seed=conf.seed,
        weights=conf.weights,
        priorities=conf.priorities)


def _solve(conf):
    try:
        driver.load_algorithm_providers(conf)
    except (exceptions.InvalidConfig, ImportError) as exc:
        _error(exc)
        return constants.EXIT_USAGE

    if conf.list_algorithms:
        _write(''.join('%s\n' % name for name in driver.list_algorithms()),
               conf.output_path)
        return constants.EXIT_OK
    for flag, value in (('--instance', conf.instance),
                        ('--algorithm', conf.algorithm_name)):
        if value is None:
            _error(_('%s is required') % flag)
            return constants.EXIT_USAGE
    try:
        driver.get_algorithm(conf.algorithm_name)
    except exceptions.UnknownAlgorithm as exc:
        _error(exc)
        return constants.EXIT_USAGE

    try:
        problem = _read_instance(conf.instance)
    except OSError as exc:
        _error(_('cannot read instance %(path)s: %(error)s') %
               {'path': conf.instance, 'error': exc.strerror})
        return constants.EXIT_USAGE
    except exceptions.InstanceError as exc:
        _error(exc)
        return constants.EXIT_DATA_ERROR

    if (conf.epsilon is None and
            driver.requires_epsilon(conf.algorithm_name) and
            not model.has_integral_data(problem)):
        _error(_('--epsilon is required by %s on instances with '
                 'continuous variables or fractional objective data') %
               conf.algorithm_name)
        return constants.EXIT_USAGE

    try:
        result = driver.optimize(
            problem, conf.algorithm_name,
            algorithm_config=_algorithm_config(conf),
            solver=solver_api.BundledSolver(conf=conf))
    except (exceptions.InvalidConfig,
            exceptions.UnsupportedDimension) as exc:
        _error(exc)
        return constants.EXIT_USAGE

    text = serialization.write_results(
        result, conf.format,
        include_wall_time=conf[config.OUTPUT_GROUP].include_wall_time)
    try:
        _write(text, conf.output_path)
    except OSError as exc:
        _error(_('cannot write %(path)s: %(error)s') %
               {'path': conf.output_path, 'error': exc.strerror})
        return constants.EXIT_USAGE
    return _STATUS_EXIT_CODES[result.status]


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    try:
        conf = _setup(argv)
    except SystemExit as exc:
        return constants.EXIT_OK if not exc.code else constants.EXIT_USAGE
    except cfg.Error as exc:
        _error(exc)
        return constants.EXIT_USAGE
    try:
        return _solve(conf)
    except exceptions.MetasolverException as exc:
        LOG.exception("Solve failed")
        _error(exc)
        return constants.EXIT_OTHER_ERROR


if __name__ == '__main__':
    sys.exit(main())
