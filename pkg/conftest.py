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

"""Apply testscenarios under pytest.

The test modules use the unittest ``load_tests`` protocol
(``testscenarios.load_tests_apply_scenarios``), which stestr honours but
pytest ignores. Expand every TestCase class that declares ``scenarios``
into one subclass per scenario so pytest collects the same tests.
"""

import unittest

from _pytest import unittest as pytest_unittest


def pytest_pycollect_makeitem(collector, name, obj):
    if not (isinstance(obj, type) and issubclass(obj, unittest.TestCase)):
        return None
    scenarios = getattr(obj, 'scenarios', None)
    if not scenarios:
        return None
    classes = []
    for scenario_name, parameters in scenarios:
        attrs = dict(parameters)
        attrs['scenarios'] = None
        attrs['__module__'] = obj.__module__
        scenario_name = '%s(%s)' % (name, scenario_name)
        scenario_class = type(scenario_name, (obj,), attrs)
        item = pytest_unittest.UnitTestCase.from_parent(
            collector, name=scenario_name)
        item._obj = scenario_class
        classes.append(item)
    return classes
