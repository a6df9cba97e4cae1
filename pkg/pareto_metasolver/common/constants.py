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

INF = float('inf')

# Numerical tolerances
DEDUP_TOL = 1e-9
FEASIBILITY_TOL = 1e-6
INFEASIBILITY_TOL = 1e-7
REDUCED_COST_TOL = 1e-9
PIVOT_TOL = 1e-9
INTEGRALITY_TOL = 1e-6
IMPROVEMENT_TOL = 1e-9
HULL_TOL = 1e-9

# Algorithm defaults
DEFAULT_EPSILON = 1.0
DEFAULT_SEED = 0
DEFAULT_SANDWICH_GAP = 1e-6
DEFAULT_TCHEBYCHEV_RHO = 1e-4
DEFAULT_MAX_SIMPLEX_ITERATIONS = 50000
RANDOM_WEIGHTING_ITERATIONS_PER_OBJECTIVE = 10
MAX_SEED = 2 ** 64 - 1

# Oracle
LATTICE_LIMIT = 2 ** 22
LATTICE_CHUNK = 2 ** 16

# Algorithm identifiers
CHALMET = 'chalmet'
DICHOTOMY = 'dichotomy'
DOMINGUEZ_RIOS = 'dominguez-rios'
EPSILON_CONSTRAINT = 'epsilon-constraint'
HIERARCHICAL = 'hierarchical'
KIRLIK_SAYIN = 'kirlik-sayin'
LEXICOGRAPHIC = 'lexicographic'
RANDOM_WEIGHTING = 'random-weighting'
SANDWICHING = 'sandwiching'
TAMBY_VANDERPOOTEN = 'tamby-vanderpooten'

# Instance documents
INSTANCE_FORMAT_VERSION = '1'
INFINITY_STRINGS = {'inf': INF, '-inf': -INF}
OUTPUT_FORMATS = ('json', 'csv')

# CLI exit codes
EXIT_OK = 0
EXIT_OTHER_ERROR = 1
EXIT_INFEASIBLE = 2
EXIT_UNBOUNDED = 3
EXIT_TIME_LIMIT = 4
EXIT_USAGE = 64
EXIT_DATA_ERROR = 65
