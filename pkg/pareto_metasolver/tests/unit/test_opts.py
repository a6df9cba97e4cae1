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

from pareto_metasolver.common import config
from pareto_metasolver import opts
from pareto_metasolver.tests import base


class TestListOpts(base.BaseTestCase):

    def test_groups(self):
        self.assertEqual(['algorithm', 'solver', 'driver', 'output'],
                         [group for group, _opts in opts.list_opts()])

    def test_options_are_copies(self):
        listed = dict(opts.list_opts())
        for group, options in config.list_opts():
            self.assertEqual([o.name for o in options],
                             [o.name for o in listed[group]])
            for original, copied in zip(options, listed[group]):
                self.assertIsNot(original, copied)

    def test_defaults_register(self):
        conf = cfg.ConfigOpts()
        for group, options in opts.list_opts():
            conf.register_opts(options, group=group)
        conf([], default_config_files=[])
        self.assertEqual(1.0, conf.algorithm.epsilon)
        self.assertTrue(conf.algorithm.all_permutations)
        self.assertEqual([], conf.driver.algorithm_providers)
        self.assertFalse(conf.output.include_wall_time)
