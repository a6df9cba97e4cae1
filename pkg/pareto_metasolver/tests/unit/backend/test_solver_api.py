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

from unittest import mock

from pareto_metasolver.backend import solver_api
from pareto_metasolver.backend import subproblem
from pareto_metasolver.tests import base


class FakeSolver(solver_api.SolverBase):

    def __init__(self):
        self.time_limits = []

    def solve(self, sub, time_limit=None):
        self.time_limits.append(time_limit)
        return subproblem.ScalarResult(subproblem.SolveStatus.OPTIMAL,
                                       x=(0.0,), value=0.0)


def _sub():
    p = base.make_problem([[1], [1]])
    return subproblem.build_subproblem(p, [1, 1])


class TestBundledSolver(base.BaseTestCase):

    def test_limits_come_from_config(self):
        self.config(max_simplex_iterations=7, max_nodes=3, group='solver')
        solver = solver_api.BundledSolver()
        self.assertEqual(7, solver.max_iterations)
        self.assertEqual(3, solver.max_nodes)

    def test_explicit_limits_win(self):
        solver = solver_api.BundledSolver(max_iterations=5)
        self.assertEqual(5, solver.max_iterations)

    def test_continuous_problem_uses_simplex(self):
        p = base.make_problem([[1], [1]], kind='continuous')
        with mock.patch.object(solver_api.simplex, 'solve_lp') as solve_lp:
            solver_api.BundledSolver().solve(
                subproblem.build_subproblem(p, [1, 1]))
        solve_lp.assert_called_once()

    def test_integer_problem_uses_branch_and_bound(self):
        with mock.patch.object(solver_api.branch_and_bound,
                               'solve_milp') as solve_milp:
            solver_api.BundledSolver().solve(_sub())
        solve_milp.assert_called_once()


class TestSolverSession(base.BaseTestCase):

    def test_counts_delegated_solves(self):
        fake = FakeSolver()
        session = solver_api.SolverSession(fake)
        for _i in range(3):
            session.solve(_sub())
        self.assertEqual(3, session.subproblem_count)
        self.assertEqual([None, None, None], fake.time_limits)

    def test_remaining_time_is_passed_down(self):
        fake = FakeSolver()
        session = solver_api.SolverSession(fake, time_limit=100)
        session.solve(_sub())
        self.assertIsNotNone(fake.time_limits[0])
        self.assertLessEqual(fake.time_limits[0], 100)

    def test_expired_session_answers_time_limit(self):
        fake = FakeSolver()
        session = solver_api.SolverSession(fake, time_limit=1)
        with mock.patch.object(solver_api.SolverSession, 'expired',
                               new_callable=mock.PropertyMock,
                               return_value=True):
            result = session.solve(_sub())
        self.assertEqual(subproblem.SolveStatus.TIME_LIMIT, result.status)
        self.assertEqual(0, session.subproblem_count)
        self.assertEqual([], fake.time_limits)
