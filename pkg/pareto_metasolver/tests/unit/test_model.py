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

import math

import numpy as np

from pareto_metasolver.common import constants
from pareto_metasolver import exceptions
from pareto_metasolver import model
from pareto_metasolver.tests import base

LE = model.RowSense.LE


def _k1():
    return base.make_problem([[5, 4, 3], [3, 4, 5]],
                             rows=[({0: 3, 1: 4, 2: 5}, LE, 8)],
                             sense=model.ObjectiveSense.MAX, name='k1')


class TestVariableSpec(base.BaseTestCase):

    def test_binary_becomes_bounded_integer(self):
        var = model.VariableSpec('b', -3, 7, 'binary')
        self.assertEqual(model.VariableKind.INTEGER, var.kind)
        self.assertEqual((0.0, 1.0), (var.lower, var.upper))
        self.assertTrue(var.is_integer)

    def test_defaults_are_nonnegative_continuous(self):
        var = model.VariableSpec('x')
        self.assertEqual(0.0, var.lower)
        self.assertEqual(constants.INF, var.upper)
        self.assertFalse(var.is_integer)


class TestLinearRow(base.BaseTestCase):

    def test_coefficients_are_merged_and_sorted(self):
        row = model.LinearRow([(2, 1.0), (0, 2.0), (2, 3.0), (1, 0.0)],
                              'le', 4)
        self.assertEqual(((0, 2.0), (2, 4.0)), row.coefficients)
        self.assertEqual(LE, row.sense)

    def test_activity(self):
        row = model.LinearRow({0: 1.5, 2: -1}, 'ge', 0)
        self.assertEqual(1.0, row.activity([2, 100, 2]))
        self.assertEqual([1.5, 0.0, -1.0], list(row.dense(3)))


class TestValidateProblem(base.BaseTestCase):

    def test_valid_problem(self):
        p = _k1()
        self.assertEqual(3, p.num_variables)
        self.assertEqual(2, p.num_objectives)
        self.assertEqual(('x1', 'x2', 'x3'), p.variable_names)
        self.assertEqual((0, 1, 2), p.integer_indices)

    def test_single_objective_is_rejected(self):
        self.assertRaises(exceptions.DimensionMismatch,
                          base.make_problem, [[1, 2]])

    def test_ragged_objective_is_rejected(self):
        self.assertRaises(exceptions.DimensionMismatch,
                          base.make_problem, [[1, 2], [1]])

    def test_wrong_offset_count_is_rejected(self):
        self.assertRaises(exceptions.DimensionMismatch,
                          base.make_problem, [[1], [2]], offsets=[1, 2, 3])

    def test_nan_coefficient_is_rejected(self):
        self.assertRaises(exceptions.InvalidCoefficient,
                          base.make_problem, [[math.nan], [1]])

    def test_infinite_rhs_is_rejected(self):
        self.assertRaises(exceptions.InvalidCoefficient,
                          base.make_problem, [[1], [1]],
                          rows=[({0: 1}, LE, math.inf)])

    def test_crossed_bounds_are_rejected(self):
        self.assertRaises(exceptions.BadBounds,
                          base.make_problem, [[1], [1]], lower=2, upper=1)

    def test_infinite_lower_bound_at_plus_infinity_is_rejected(self):
        self.assertRaises(exceptions.BadBounds,
                          base.make_problem, [[1], [1]],
                          lower=math.inf, upper=math.inf)

    def test_row_index_out_of_range_is_rejected(self):
        self.assertRaises(exceptions.BadIndex,
                          base.make_problem, [[1], [1]],
                          rows=[({1: 1}, LE, 1)])

    def test_invalid_problem_family(self):
        self.assertTrue(issubclass(exceptions.BadBounds,
                                   exceptions.InvalidProblem))


class TestEvaluateObjective(base.BaseTestCase):

    def test_evaluate(self):
        p = base.make_problem([[5, 4, 3], [3, 4, 5]], offsets=[1, -1])
        self.assertEqual([10.0, 6.0],
                         list(model.evaluate_objective(p, [1, 1, 0])))

    def test_negative_zero_is_normalized(self):
        p = base.make_problem([[-1], [0]])
        y = model.evaluate_objective(p, [0])
        self.assertEqual('0.0', repr(float(y[0])))

    def test_wrong_length_is_rejected(self):
        p = base.make_problem([[1, 1], [1, 1]])
        self.assertRaises(exceptions.DimensionMismatch,
                          model.evaluate_objective, p, [1])

    def test_affine_combinations(self):
        rng = np.random.Generator(np.random.Philox(3))
        matrix = rng.uniform(-5.0, 5.0, size=(3, 4))
        offsets = rng.uniform(-2.0, 2.0, size=3)
        p = base.make_problem(matrix.tolist(), offsets=offsets.tolist(),
                              kind=model.VariableKind.CONTINUOUS)
        for _i in range(10):
            x, z = rng.uniform(-3.0, 3.0, size=(2, 4))
            alpha, beta = rng.uniform(-2.0, 2.0, size=2)
            combined = model.evaluate_objective(p, alpha * x + beta * z)
            expected = (alpha * model.evaluate_objective(p, x) +
                        beta * model.evaluate_objective(p, z) -
                        (alpha + beta - 1.0) * offsets)
            np.testing.assert_allclose(expected, combined, atol=1e-9)


class TestNegateObjective(base.BaseTestCase):

    def test_negate_max_problem(self):
        p = model.negate_objective(_k1())
        self.assertEqual(model.ObjectiveSense.MIN, p.sense)
        self.assertEqual(((-5.0, -4.0, -3.0), (-3.0, -4.0, -5.0)),
                         p.objective.matrix)
        self.assertEqual(_k1().rows, p.rows)
        self.assertEqual('k1', p.name)

    def test_negate_min_problem_fails(self):
        p = base.make_problem([[1], [1]])
        self.assertRaises(exceptions.AlreadyMin, model.negate_objective, p)

    def test_as_minimization_keeps_min_problem(self):
        p = base.make_problem([[1], [1]])
        self.assertIs(p, model.as_minimization(p))

    def test_negation_flips_objective_values(self):
        p = _k1()
        x = [1, 0, 1]
        self.assertEqual(
            [-v for v in model.evaluate_objective(p, x)],
            list(model.evaluate_objective(model.negate_objective(p), x)))


class TestFeasibility(base.BaseTestCase):

    def test_is_feasible(self):
        p = _k1()
        self.assertTrue(p.is_feasible([1, 1, 0]))
        self.assertTrue(p.is_feasible([1, 0, 1]))
        self.assertFalse(p.is_feasible([0, 1, 1]))
        self.assertFalse(p.is_feasible([0.5, 0, 0]))
        self.assertFalse(p.is_feasible([1, 1]))

    def test_has_integral_data(self):
        self.assertTrue(model.has_integral_data(_k1()))
        self.assertFalse(model.has_integral_data(
            base.make_problem([[0.5], [1]])))
        self.assertFalse(model.has_integral_data(
            base.make_problem([[1], [1]],
                              kind=model.VariableKind.CONTINUOUS)))
