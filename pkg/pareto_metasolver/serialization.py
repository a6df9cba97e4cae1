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

"""Instance documents and result output.

Instances are JSON documents checked against the attribute maps below:
unknown attributes are rejected, missing optional ones take their default
and infinite bounds are written as the strings "inf" and "-inf".
"""

import csv
import io
import math

from oslo_serialization import jsonutils

from pareto_metasolver._i18n import _
from pareto_metasolver.common import constants
from pareto_metasolver import exceptions
from pareto_metasolver import model

_REQUIRED = object()


def _is_number(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _real(value, path, allow_infinity=False):
    if (allow_infinity and isinstance(value, str) and
            value in constants.INFINITY_STRINGS):
        return constants.INFINITY_STRINGS[value]
    if not _is_number(value) or not math.isfinite(value):
        raise exceptions.SchemaError(
            reason=_("%(path)s must be a finite number, got %(value)r") %
            {'path': path, 'value': value})
    return float(value)


def _bound(value, path):
    return _real(value, path, allow_infinity=True)


def _string(value, path):
    if not isinstance(value, str):
        raise exceptions.SchemaError(
            reason=_("%s must be a string") % path)
    return value


def _identifier(value, path):
    if not _string(value, path):
        raise exceptions.SchemaError(
            reason=_("%s must not be empty") % path)
    return value


def _choice(*choices):
    def convert(value, path):
        if value not in choices:
            raise exceptions.SchemaError(
                reason=_("%(path)s must be one of %(choices)s") %
                {'path': path, 'choices': ', '.join(choices)})
        return value
    return convert


def _format_version(value, path):
    if value != constants.INSTANCE_FORMAT_VERSION:
        raise exceptions.SchemaError(
            reason=_("%(path)s must be \"%(version)s\"") %
            {'path': path, 'version': constants.INSTANCE_FORMAT_VERSION})
    return value


def _coefficients(value, path):
    if not isinstance(value, dict):
        raise exceptions.SchemaError(
            reason=_("%s must be an object") % path)
    return {_string(name, path): _real(v, '%s.%s' % (path, name))
            for name, v in value.items()}


def _list_of(attributes):
    def convert(value, path):
        if not isinstance(value, list):
            raise exceptions.SchemaError(
                reason=_("%s must be an array") % path)
        return [_convert(item, attributes, '%s[%d]' % (path, i))
                for i, item in enumerate(value)]
    return convert


VARIABLE_ATTRIBUTES = {
    'name': {'default': _REQUIRED, 'convert': _identifier},
    'lb': {'default': 0.0, 'convert': _bound},
    'ub': {'default': 'inf', 'convert': _bound},
    'kind': {'default': model.VariableKind.CONTINUOUS.value,
             'convert': _choice(*(k.value for k in model.VariableKind))},
}

OBJECTIVE_ATTRIBUTES = {
    'coefficients': {'default': _REQUIRED, 'convert': _coefficients},
    'constant': {'default': 0.0, 'convert': _real},
}

CONSTRAINT_ATTRIBUTES = {
    'coefficients': {'default': _REQUIRED, 'convert': _coefficients},
    'op': {'default': _REQUIRED,
           'convert': _choice(*(s.value for s in model.RowSense))},
    'rhs': {'default': _REQUIRED, 'convert': _real},
}

INSTANCE_ATTRIBUTES = {
    'format_version': {'default': _REQUIRED, 'convert': _format_version},
    'name': {'default': '', 'convert': _string},
    'sense': {'default': _REQUIRED,
              'convert': _choice(*(s.value for s in model.ObjectiveSense))},
    'variables': {'default': _REQUIRED,
                  'convert': _list_of(VARIABLE_ATTRIBUTES)},
    'objectives': {'default': _REQUIRED,
                   'convert': _list_of(OBJECTIVE_ATTRIBUTES)},
    'constraints': {'default': [],
                    'convert': _list_of(CONSTRAINT_ATTRIBUTES)},
}


def _convert(document, attributes, path):
    if not isinstance(document, dict):
        raise exceptions.SchemaError(
            reason=_("%s must be an object") % path)
    unknown = sorted(set(document) - set(attributes))
    if unknown:
        raise exceptions.SchemaError(
            reason=_("unknown attributes %(names)s in %(path)s") %
            {'names': ', '.join(unknown), 'path': path})
    converted = {}
    for name, spec in attributes.items():
        attr_path = '%s.%s' % (path, name)
        if name in document:
            value = document[name]
        elif spec['default'] is _REQUIRED:
            raise exceptions.SchemaError(
                reason=_("missing attribute %s") % attr_path)
        else:
            value = spec['default']
        converted[name] = spec['convert'](value, attr_path)
    return converted


def _row_coefficients(coefficients, indices, path):
    row = {}
    for name, value in coefficients.items():
        if name not in indices:
            raise exceptions.SchemaError(
                reason=_("%(path)s refers to unknown variable %(name)s") %
                {'path': path, 'name': name})
        row[indices[name]] = value
    return row


def parse_instance(text):
    """Parse a UTF-8 JSON instance document into a validated Problem."""
    if isinstance(text, bytes):
        try:
            text = text.decode('utf-8')
        except UnicodeDecodeError as exc:
            raise exceptions.ParseError(reason=str(exc))
    try:
        raw = jsonutils.loads(text)
    except ValueError as exc:
        raise exceptions.ParseError(reason=str(exc))
    document = _convert(raw, INSTANCE_ATTRIBUTES, 'instance')

    indices = {}
    for i, variable in enumerate(document['variables']):
        if variable['name'] in indices:
            raise exceptions.SchemaError(
                reason=_("duplicate variable name %s") % variable['name'])
        indices[variable['name']] = i
    if len(document['objectives']) < 2:
        raise exceptions.SchemaError(
            reason=_("at least 2 objectives are required, got %d") %
            len(document['objectives']))

    matrix = []
    for k, objective in enumerate(document['objectives']):
        row = _row_coefficients(objective['coefficients'], indices,
                                'instance.objectives[%d]' % k)
        matrix.append([row.get(j, 0.0) for j in range(len(indices))])
    rows = [
        model.LinearRow(
            coefficients=_row_coefficients(
                constraint['coefficients'], indices,
                'instance.constraints[%d]' % i),
            sense=constraint['op'], rhs=constraint['rhs'])
        for i, constraint in enumerate(document['constraints'])
    ]
    try:
        return model.Problem(
            variables=[model.VariableSpec(v['name'], v['lb'], v['ub'],
                                          v['kind'])
                       for v in document['variables']],
            rows=rows,
            objective=model.VectorObjective(
                matrix=matrix,
                offsets=[o['constant'] for o in document['objectives']],
                sense=document['sense']),
            name=document['name'])
    except exceptions.InvalidProblem as exc:
        raise exceptions.ValidationError(reason=str(exc))


def _bound_value(value):
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return value


def serialize_instance(p):
    """Instance document text of a Problem, the inverse of parse_instance."""
    names = p.variable_names
    document = {
        'format_version': constants.INSTANCE_FORMAT_VERSION,
        'name': p.name,
        'sense': p.sense.value,
        'variables': [
            {'name': var.name, 'lb': _bound_value(var.lower),
             'ub': _bound_value(var.upper), 'kind': var.kind.value}
            for var in p.variables],
        'objectives': [
            {'coefficients': {names[j]: v for j, v in enumerate(row)
                              if v != 0.0},
             'constant': offset}
            for row, offset in zip(p.objective.matrix, p.objective.offsets)],
        'constraints': [
            {'coefficients': {names[j]: v for j, v in row.coefficients},
             'op': row.sense.value, 'rhs': row.rhs}
            for row in p.rows],
    }
    return jsonutils.dumps(document, indent=2)


def result_document(result, include_wall_time=False):
    stats = {'subproblem_count': result.stats.subproblem_count}
    if include_wall_time:
        stats['wall_time'] = result.stats.wall_time
    names = result.variable_names
    return {
        'status': result.status.value,
        'stats': stats,
        'points': [
            {'x': {name: float(v) for name, v in zip(names, point.x)},
             'y': [float(v) for v in point.y]}
            for point in result.points],
    }


def write_results(result, output_format='json', include_wall_time=False):
    """Render a ResultSet as JSON or CSV text."""
    if output_format == 'json':
        return jsonutils.dumps(result_document(result, include_wall_time),
                               indent=2) + '\n'
    if output_format != 'csv':
        raise ValueError(_("Unknown output format %s") % output_format)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    size = len(result.points[0].y) if result.points else 0
    writer.writerow(['y%d' % (k + 1) for k in range(size)] +
                    ['x_%s' % name for name in result.variable_names])
    for point in result.points:
        writer.writerow([repr(float(v)) for v in point.y + point.x])
    return buf.getvalue()
