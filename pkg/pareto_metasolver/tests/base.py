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

import fixtures
import numpy as np
from oslo_config import cfg
from oslo_config import fixture as config_fixture
from oslotest import base

from pareto_metasolver.backend import solver_api
from pareto_metasolver.common import config
from pareto_metasolver import driver
from pareto_metasolver import model


class AlgorithmRegistryFixture(fixtures.Fixture):
    """Restore the driver's algorithm registry on cleanup."""

    def _setUp(self):
        saved = dict(driver._registry)

        def restore():
            driver._registry.clear()
            driver._registry.update(saved)

        self.addCleanup(restore)


class BaseTestCase(base.BaseTestCase):

    def setUp(self):
        super().setUp()
        self.config_fixture = self.useFixture(config_fixture.Config(cfg.CONF))
        config.register_opts(self.config_fixture.conf)
        self.useFixture(AlgorithmRegistryFixture())

    def config(self, **kwargs):
        self.config_fixture.config(**kwargs)

    def solver(self):
        return solver_api.SolverSession(solver_api.BundledSolver())

    def assertYsAlmostEqual(self, expected, observed, tol=1e-6):
        expected = sorted(tuple(y) for y in expected)
        observed = sorted(tuple(y) for y in observed)
        self.assertEqual(len(expected), len(observed),
                         '%s != %s' % (expected, observed))
        for a, b in zip(expected, observed):
            np.testing.assert_allclose(a, b, atol=tol, rtol=0)


def make_problem(matrix, rows=(), lower=0.0, upper=1.0,
                 kind=model.VariableKind.INTEGER,
                 sense=model.ObjectiveSense.MIN, offsets=None, name=''):
    """Problem over len(matrix[0]) identically bounded variables x1..xn.

    rows are (coefficients, sense, rhs) triples.
    """
    count = len(matrix[0])
    return model.Problem(
        variables=[model.VariableSpec('x%d' % (j + 1), lower, upper, kind)
                   for j in range(count)],
        rows=[model.LinearRow(coefficients, sense, rhs)
              for coefficients, sense, rhs in rows],
        objective=model.VectorObjective(matrix, offsets, sense),
        name=name)
