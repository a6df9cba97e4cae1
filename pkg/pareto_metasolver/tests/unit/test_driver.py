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

from pareto_metasolver.algorithms import base as algorithm_base
from pareto_metasolver.algorithms import utils
from pareto_metasolver.backend import solver_api
from pareto_metasolver.backend import subproblem
from pareto_metasolver.common import constants
from pareto_metasolver import dominance
from pareto_metasolver import driver
from pareto_metasolver import exceptions
from pareto_metasolver import model
from pareto_metasolver import oracle
from pareto_metasolver.tests import base

OPTIMAL = subproblem.SolveStatus.OPTIMAL


class IdealAnchors(algorithm_base.MultiObjectiveAlgorithm):
    """Returns the minimizer of every single objective."""

    name = 'ideal-anchors'

    def search(self, run):
        for k in range(run.num_objectives):
            result = run.solve_required(subproblem.build_subproblem(
                run.problem, utils.unit(run.num_objectives, k)))
            run.add_point(result.x)
        return algorithm_base.SolveStatus.OPTIMAL


def constant_algorithm(problem, config, solver):
    x = (0.0,) * problem.num_variables
    return OPTIMAL, [dominance.SolutionPoint(
        x, model.evaluate_objective(problem, x))]


class TestRegistry(base.BaseTestCase):

    def test_builtin_algorithms(self):
        self.assertEqual(
            ['chalmet', 'dichotomy', 'dominguez-rios', 'epsilon-constraint',
             'hierarchical', 'kirlik-sayin', 'lexicographic',
             'random-weighting', 'sandwiching', 'tamby-vanderpooten'],
            driver.list_algorithms())

    def test_register_algorithm(self):
        driver.register_algorithm('ideal-anchors', IdealAnchors())
        self.assertIn('ideal-anchors', driver.list_algorithms())
        self.assertIsInstance(driver.get_algorithm('ideal-anchors'),
                              IdealAnchors)

    def test_duplicate_identifier(self):
        self.assertRaises(exceptions.DuplicateIdentifier,
                          driver.register_algorithm, 'chalmet',
                          IdealAnchors())

    def test_unknown_algorithm_lists_valid_names(self):
        exc = self.assertRaises(exceptions.UnknownAlgorithm,
                                driver.get_algorithm, 'bogus')
        self.assertIn('bogus', str(exc))
        self.assertIn('tamby-vanderpooten', str(exc))

    def test_requires_epsilon(self):
        self.assertTrue(driver.requires_epsilon('kirlik-sayin'))
        self.assertFalse(driver.requires_epsilon('dichotomy'))
        driver.register_algorithm('constant', constant_algorithm)
        self.assertFalse(driver.requires_epsilon('constant'))

    def test_load_algorithm_providers(self):
        self.config(algorithm_providers=[
            'ideal-anchors:%s.IdealAnchors' % __name__], group='driver')
        driver.load_algorithm_providers()
        self.assertIsInstance(driver.get_algorithm('ideal-anchors'),
                              IdealAnchors)
        # A second load leaves the registered provider in place.
        driver.load_algorithm_providers()

    def test_malformed_provider(self):
        self.config(algorithm_providers=['no-path'], group='driver')
        self.assertRaises(exceptions.InvalidConfig,
                          driver.load_algorithm_providers)


class TestOptimize(base.BaseTestCase):

    def test_max_problem_is_reported_in_its_own_sense(self):
        result = driver.optimize(oracle.load_fixture('k1').problem,
                                 constants.EPSILON_CONSTRAINT)
        self.assertEqual(OPTIMAL, result.status)
        self.assertEqual([(9.0, 7.0), (8.0, 8.0)],
                         [p.y for p in result.points])
        self.assertEqual([(1.0, 1.0, 0.0), (1.0, 0.0, 1.0)],
                         [p.x for p in result.points])
        self.assertEqual(2, result.result_count)
        self.assertEqual(('x1', 'x2', 'x3'), result.variable_names)

    def test_sense_conversion_is_point_for_point(self):
        for name in ('k1', 'k2', 'k3'):
            problem = oracle.load_fixture(name).problem
            for algorithm in (constants.KIRLIK_SAYIN,
                              constants.LEXICOGRAPHIC):
                maximized = driver.optimize(problem, algorithm)
                minimized = driver.optimize(model.negate_objective(problem),
                                            algorithm)
                self.assertEqual(
                    [p.negated() for p in minimized.points],
                    list(maximized.points))

    def test_subproblem_count(self):
        result = driver.optimize(oracle.load_fixture('k4').problem,
                                 constants.RANDOM_WEIGHTING,
                                 algorithm_base.AlgorithmConfig(
                                     solution_limit=5))
        self.assertEqual(5, result.stats.subproblem_count)
        self.assertGreaterEqual(result.stats.wall_time, 0.0)

    def test_time_limit(self):
        class SlowSolver(solver_api.SolverBase):
            def solve(self, sub, time_limit=None):
                return subproblem.ScalarResult(
                    subproblem.SolveStatus.TIME_LIMIT)

        result = driver.optimize(oracle.load_fixture('k4').problem,
                                 constants.CHALMET,
                                 algorithm_base.AlgorithmConfig(
                                     time_limit=1.0),
                                 solver=SlowSolver())
        self.assertEqual(subproblem.SolveStatus.TIME_LIMIT, result.status)
        self.assertEqual((), result.points)

    def test_unsupported_dimension(self):
        self.assertRaises(exceptions.UnsupportedDimension,
                          driver.optimize,
                          oracle.load_fixture('k3').problem,
                          constants.DICHOTOMY)

    def test_plain_callable_algorithm(self):
        driver.register_algorithm('constant', constant_algorithm)
        result = driver.optimize(oracle.load_fixture('k1').problem,
                                 'constant')
        self.assertEqual([(0.0, 0.0)], [p.y for p in result.points])

    def test_extension_algorithm(self):
        driver.register_algorithm('ideal-anchors', IdealAnchors())
        result = driver.optimize(oracle.load_fixture('k4').problem,
                                 'ideal-anchors')
        self.assertEqual([(0.0, 4.0), (4.0, 0.0)],
                         [p.y for p in result.points])
