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
import testscenarios

from pareto_metasolver.backend import simplex
from pareto_metasolver.backend import subproblem
from pareto_metasolver import model
from pareto_metasolver.tests import base

load_tests = testscenarios.load_tests_apply_scenarios

LE = model.RowSense.LE
GE = model.RowSense.GE
EQ = model.RowSense.EQ
INF = math.inf
OPTIMAL = subproblem.SolveStatus.OPTIMAL


def _lp(c, a, senses, b, lower=None, upper=None, constant=0.0):
    count = len(c)
    return simplex.DenseLP(
        c=np.array(c, dtype=float),
        a=np.array(a, dtype=float).reshape(len(senses), count),
        senses=tuple(senses),
        b=np.array(b, dtype=float),
        lower=np.array(lower if lower is not None else [0.0] * count,
                       dtype=float),
        upper=np.array(upper if upper is not None else [INF] * count,
                       dtype=float),
        constant=constant)


class TestTextbookLPs(base.BaseTestCase):

    scenarios = [
        ('product_mix', {
            'lp': _lp([-3, -5], [[1, 0], [0, 2], [3, 2]], [LE, LE, LE],
                      [4, 12, 18]),
            'status': OPTIMAL, 'value': -36.0, 'x': [2.0, 6.0]}),
        ('diet', {
            'lp': _lp([2, 3], [[1, 1], [1, 3]], [GE, GE], [4, 6]),
            'status': OPTIMAL, 'value': 9.0, 'x': [3.0, 1.0]}),
        ('equalities', {
            'lp': _lp([1, 1], [[1, 2], [1, -1]], [EQ, EQ], [4, 1]),
            'status': OPTIMAL, 'value': 3.0, 'x': [2.0, 1.0]}),
        ('negative_rhs', {
            'lp': _lp([1, 1], [[-1, -1], [1, -1]], [LE, EQ], [-3, 1]),
            'status': OPTIMAL, 'value': 3.0, 'x': [2.0, 1.0]}),
        ('redundant_equality', {
            'lp': _lp([1, 2], [[1, 1], [2, 2]], [EQ, EQ], [2, 4]),
            'status': OPTIMAL, 'value': 2.0, 'x': [2.0, 0.0]}),
        ('degenerate_vertex', {
            'lp': _lp([-1, -1], [[1, 0], [0, 1], [1, 1]], [LE, LE, LE],
                      [1, 1, 2]),
            'status': OPTIMAL, 'value': -2.0, 'x': [1.0, 1.0]}),
        ('cycling_example', {
            'lp': _lp([-0.75, 20, -0.5, 6],
                      [[0.25, -8, -1, 9], [0.5, -12, -0.5, 3],
                       [0, 0, 1, 0]],
                      [LE, LE, LE], [0, 0, 1]),
            'status': OPTIMAL, 'value': -1.25, 'x': None}),
        ('variable_bounds', {
            'lp': _lp([-1, -2], [[1, 1]], [LE], [4], upper=[3, 2]),
            'status': OPTIMAL, 'value': -6.0, 'x': [2.0, 2.0]}),
        ('free_and_mirrored_variables', {
            'lp': _lp([1, 1], [[1, 0], [0, 1]], [GE, GE], [-5, -4],
                      lower=[-INF, -INF], upper=[INF, -1]),
            'status': OPTIMAL, 'value': -9.0, 'x': [-5.0, -4.0]}),
        ('constant_and_no_rows', {
            'lp': _lp([1, -1], [], [], [], lower=[1, 0], upper=[2, 3],
                      constant=10.0),
            'status': OPTIMAL, 'value': 8.0, 'x': [1.0, 3.0]}),
        ('infeasible', {
            'lp': _lp([1, 1], [[1, 1], [1, 1]], [LE, GE], [1, 2]),
            'status': subproblem.SolveStatus.INFEASIBLE, 'value': None,
            'x': None}),
        ('infeasible_beside_large_rhs', {
            'lp': _lp([1, 1], [[1, 0], [1, 0], [0, 1]], [GE, LE, LE],
                      [2, 1.5, 1e8]),
            'status': subproblem.SolveStatus.INFEASIBLE, 'value': None,
            'x': None}),
        ('infeasible_badly_scaled_row', {
            'lp': _lp([1], [[1e6]], [GE], [3e6], upper=[2.5]),
            'status': subproblem.SolveStatus.INFEASIBLE, 'value': None,
            'x': None}),
        ('large_rhs', {
            'lp': _lp([1, 1], [[1, 0], [0, 1]], [GE, GE], [2, 1e8]),
            'status': OPTIMAL, 'value': 1e8 + 2, 'x': [2.0, 1e8]}),
        ('crossed_bounds', {
            'lp': _lp([1], [], [], [], lower=[2], upper=[1]),
            'status': subproblem.SolveStatus.INFEASIBLE, 'value': None,
            'x': None}),
        ('unbounded', {
            'lp': _lp([-1, -1], [[1, -1]], [LE], [1]),
            'status': subproblem.SolveStatus.UNBOUNDED, 'value': None,
            'x': None}),
    ]

    def test_solve(self):
        result = simplex.solve_dense(self.lp)
        self.assertEqual(self.status, result.status)
        if self.value is not None:
            self.assertAlmostEqual(self.value, result.value, places=9)
        if self.x is not None:
            np.testing.assert_allclose(self.x, result.x, atol=1e-9)
        if result.is_optimal:
            x = np.asarray(result.x)
            self.assertTrue(np.all(x >= self.lp.lower - 1e-9))
            self.assertTrue(np.all(x <= self.lp.upper + 1e-9))
            self.assertLessEqual(simplex.max_violation(self.lp, x), 1e-6)


class TestSimplexLimits(base.BaseTestCase):

    def test_iteration_limit_is_other_error(self):
        lp = _lp([-3, -5], [[1, 0], [0, 2], [3, 2]], [LE, LE, LE],
                 [4, 12, 18])
        result = simplex.solve_dense(lp, max_iterations=0)
        self.assertEqual(subproblem.SolveStatus.OTHER_ERROR, result.status)

    def test_solve_lp_relaxes_integers(self):
        p = base.make_problem([[-1, -1], [0, 1]],
                              rows=[({0: 2, 1: 2}, LE, 3)])
        result = simplex.solve_lp(subproblem.build_subproblem(p, [1, 0]))
        self.assertEqual(OPTIMAL, result.status)
        self.assertAlmostEqual(-1.5, result.value)


class TestMaxViolation(base.BaseTestCase):

    def setUp(self):
        super().setUp()
        self.lp = _lp([0, 0], [[2, 0], [0, 1], [1, 1]], [LE, GE, EQ],
                      [2, 1, 3], upper=[2, 2])

    def test_feasible_point(self):
        self.assertEqual(0.0, simplex.max_violation(self.lp,
                                                    np.array([1.0, 2.0])))

    def test_rows_are_scaled_by_their_norm(self):
        # 2 x1 <= 2 is off by 1, that is 0.5 in units of x1
        self.assertAlmostEqual(
            0.5, simplex.max_violation(self.lp, np.array([1.5, 1.5])))

    def test_equality_and_bounds(self):
        self.assertAlmostEqual(
            1.0, simplex.max_violation(self.lp, np.array([0.0, 2.0])))
        self.assertAlmostEqual(
            0.5, simplex.max_violation(self.lp, np.array([0.5, 2.5])))

    def test_no_rows(self):
        lp = _lp([1], [], [], [], lower=[0], upper=[1])
        self.assertAlmostEqual(0.25,
                               simplex.max_violation(lp, np.array([1.25])))
