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

from oslo_config import cfg

from pareto_metasolver._i18n import _
from pareto_metasolver.common import constants


ALGORITHM_GROUP = 'algorithm'
SOLVER_GROUP = 'solver'
DRIVER_GROUP = 'driver'
OUTPUT_GROUP = 'output'

algorithm_opts = [
    cfg.FloatOpt('epsilon',
                 default=constants.DEFAULT_EPSILON,
                 min=0,
                 help=_('Step used to turn strict objective inequalities '
                        'into non-strict ones. 1.0 is exact for integer '
                        'objective data.')),
    cfg.FloatOpt('time_limit',
                 min=0,
                 help=_('Wall clock limit in seconds for a whole optimize '
                        'call. Unset means no limit.')),
    cfg.IntOpt('solution_limit',
               min=0,
               help=_('Stop once this many nondominated points were found. '
                      'For random-weighting this is the number of sampled '
                      'weight vectors.')),
    cfg.IntOpt('seed',
               default=constants.DEFAULT_SEED,
               min=0,
               max=constants.MAX_SEED,
               help=_('Seed of the counter based generator used by '
                      'random-weighting.')),
    cfg.BoolOpt('all_permutations',
                default=True,
                help=_('Solve every permutation of the objectives in '
                       'lexicographic, instead of the identity order '
                       'only.')),
    cfg.FloatOpt('sandwich_gap',
                 default=constants.DEFAULT_SANDWICH_GAP,
                 min=0,
                 help=_('Largest inner/outer approximation gap accepted by '
                        'sandwiching.')),
    cfg.FloatOpt('tchebychev_rho',
                 default=constants.DEFAULT_TCHEBYCHEV_RHO,
                 min=0,
                 help=_('Augmentation weight of the Tchebychev scalarization '
                        'used by dominguez-rios.')),
]

solver_opts = [
    cfg.IntOpt('max_simplex_iterations',
               default=constants.DEFAULT_MAX_SIMPLEX_ITERATIONS,
               min=1,
               help=_('Pivot limit for one linear relaxation. Reaching it '
                      'ends the subproblem with OTHER_ERROR.')),
    cfg.IntOpt('max_nodes',
               min=1,
               help=_('Node limit for one branch-and-bound search. Unset '
                      'means no limit.')),
]

driver_opts = [
    cfg.ListOpt('algorithm_providers',
                default=[],
                help=_('Additional algorithms, as '
                       '<identifier>:<dotted.path.to.Implementation> '
                       'entries.')),
]

output_opts = [
    cfg.BoolOpt('include_wall_time',
                default=False,
                help=_('Report wall time in result statistics. Output is '
                       'not reproducible byte for byte when enabled.')),
]


def list_opts():
    return [
        (ALGORITHM_GROUP, algorithm_opts),
        (SOLVER_GROUP, solver_opts),
        (DRIVER_GROUP, driver_opts),
        (OUTPUT_GROUP, output_opts),
    ]


def register_opts(conf=cfg.CONF):
    for group, opts in list_opts():
        conf.register_opts(opts, group=group)


register_opts()
