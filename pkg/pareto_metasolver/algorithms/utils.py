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

"""Building blocks shared by the scalarization algorithms."""

import numpy as np
from oslo_log import log as logging
from scipy import spatial

from pareto_metasolver.backend import subproblem
from pareto_metasolver.common import constants
from pareto_metasolver import exceptions

LOG = logging.getLogger(__name__)

SolveStatus = subproblem.SolveStatus


def unit(size, k):
    return subproblem.unit_weights(size, k)


def compute_ideal_point(p, solver):
    """Per-objective minima of a minimization problem."""
    ideal = []
    for k in range(p.num_objectives):
        result = solver.solve(
            subproblem.build_subproblem(p, unit(p.num_objectives, k)))
        if not result.is_optimal:
            raise exceptions.SubproblemFailed(status=result.status)
        ideal.append(result.value)
    return np.array(ideal)


def compute_anti_ideal(p, solver, padding):
    """Per-objective maxima plus padding, +inf where unbounded."""
    anti_ideal = []
    for k in range(p.num_objectives):
        weights = -np.asarray(unit(p.num_objectives, k))
        result = solver.solve(subproblem.build_subproblem(p, weights))
        if result.status is SolveStatus.UNBOUNDED:
            anti_ideal.append(constants.INF)
        elif result.is_optimal:
            anti_ideal.append(-result.value + padding)
        else:
            raise exceptions.SubproblemFailed(status=result.status)
    return np.array(anti_ideal)


def stage_slack(value, relative_tolerance=0.0):
    return relative_tolerance * abs(value)


def lexicographic_optimum(run, stages, upper_bounds=None, extra=(),
                          tolerances=None):
    """Optimize weight vectors one after another.

    After each stage the row stage_weights^T f0(x) <= optimum + slack is
    kept for the following stages. Returns the last ScalarResult together
    with the optimum of every solved stage; an infeasible first stage is
    returned as is.
    """
    rows = list(extra)
    values = []
    result = None
    for i, weights in enumerate(stages):
        sub = subproblem.build_subproblem(run.problem, weights,
                                          upper_bounds, rows)
        result = run.solve(sub)
        if not result.is_optimal:
            if i == 0:
                return result, values
            raise exceptions.SubproblemFailed(status=SolveStatus.OTHER_ERROR)
        values.append(result.value)
        tolerance = tolerances[i] if tolerances else 0.0
        rows.append(subproblem.weighted_objective_row(
            run.problem, weights,
            result.value + stage_slack(result.value, tolerance)))
    return result, values


def objective_order(size, first):
    """Stages minimizing objective `first`, then the sum of objectives."""
    return [unit(size, first), (1.0,) * size]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def supported_extremes_2d(points):
    """Points that are vertices of conv(Y) + R^2_+, sorted by y."""
    hull = []
    for point in sorted(points, key=lambda p: p.y):
        while len(hull) >= 2:
            o, a = np.asarray(hull[-2].y), np.asarray(hull[-1].y)
            b = np.asarray(point.y)
            scale = max(1.0, np.linalg.norm(a - o) * np.linalg.norm(b - o))
            if _cross(o, a, b) > constants.HULL_TOL * scale:
                break
            hull.pop()
        hull.append(point)
    return hull


def cone_hull(ys):
    """Convex hull of ys extended far along every objective axis.

    The extension turns conv(Y) + R^o_+ into a bounded polytope whose
    facets with nonnegative inward normal are the lower facets of Y.
    Returns None for degenerate inputs.
    """
    ys = np.asarray(ys, dtype=float)
    count, size = ys.shape
    spread = float(np.ptp(ys, axis=0).max()) if count > 1 else 0.0
    reach = 1.0 + 4.0 * spread
    far = [y + reach * np.eye(size)[j] for y in ys for j in range(size)]
    try:
        return spatial.ConvexHull(np.vstack([ys, far]))
    except (spatial.QhullError, ValueError) as exc:
        LOG.debug("Convex hull unavailable: %s", exc)
        return None


def supported_extremes(points):
    points = list(points)
    if not points or len(points[0].y) == 2:
        return supported_extremes_2d(points)
    hull = cone_hull([p.y for p in points])
    if hull is None:
        return sorted(points, key=lambda p: p.y)
    vertices = set(int(v) for v in hull.vertices if v < len(points))
    return sorted((p for i, p in enumerate(points) if i in vertices),
                  key=lambda p: p.y)
