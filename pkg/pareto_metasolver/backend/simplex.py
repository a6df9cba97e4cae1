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

"""Dense tableau simplex for the continuous relaxation.

Variables are shifted and mirrored onto x' >= 0 (free variables are split),
finite upper bounds become rows, and the resulting standard form is solved
with the two phase method. Pivoting follows Bland's rule so degenerate
problems terminate.
"""

import dataclasses

import numpy as np
from oslo_log import log as logging
from oslo_utils import timeutils

from pareto_metasolver.backend import subproblem
from pareto_metasolver.common import constants
from pareto_metasolver import model

LOG = logging.getLogger(__name__)

SolveStatus = subproblem.SolveStatus

_FLIPPED = {
    model.RowSense.LE: model.RowSense.GE,
    model.RowSense.GE: model.RowSense.LE,
    model.RowSense.EQ: model.RowSense.EQ,
}


@dataclasses.dataclass(frozen=True, eq=False)
class DenseLP:
    """min c.x + constant s.t. a x <senses> b, lower <= x <= upper."""
    c: np.ndarray
    a: np.ndarray
    senses: tuple
    b: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    constant: float = 0.0

    def with_bounds(self, lower, upper):
        return dataclasses.replace(self, lower=lower, upper=upper)


def from_subproblem(sub):
    count = sub.num_variables
    rows = sub.rows
    a = np.zeros((len(rows), count))
    for i, row in enumerate(rows):
        a[i] = row.dense(count)
    return DenseLP(c=np.array(sub.cost, dtype=float),
                   a=a,
                   senses=tuple(row.sense for row in rows),
                   b=np.array([row.rhs for row in rows], dtype=float),
                   lower=sub.base.lower_bounds.copy(),
                   upper=sub.base.upper_bounds.copy(),
                   constant=sub.constant)


def start_watch(time_limit=None):
    return timeutils.StopWatch(duration=time_limit).start()


class _Tableau:

    def __init__(self, table, basis, watch, max_iterations):
        self.table = table
        self.basis = basis
        self.watch = watch
        self.max_iterations = max_iterations
        self.iterations = 0

    def pivot(self, r, e):
        table = self.table
        table[r] /= table[r, e]
        column = table[:, e].copy()
        column[r] = 0.0
        table -= np.outer(column, table[r])
        self.basis[r] = e

    def iterate(self):
        table = self.table
        while True:
            reduced = table[-1, :-1]
            entering = np.flatnonzero(reduced < -constants.REDUCED_COST_TOL)
            if entering.size == 0:
                return SolveStatus.OPTIMAL
            if self.iterations >= self.max_iterations:
                LOG.warning("Simplex stopped after %d pivots",
                            self.iterations)
                return SolveStatus.OTHER_ERROR
            if self.watch.expired():
                return SolveStatus.TIME_LIMIT
            e = entering[0]
            column = table[:-1, e]
            candidates = np.flatnonzero(column > constants.PIVOT_TOL)
            if candidates.size == 0:
                return SolveStatus.UNBOUNDED
            ratios = np.maximum(table[candidates, -1], 0.0) / \
                column[candidates]
            best = ratios.min()
            ties = candidates[ratios <= best + 1e-12 * max(1.0, best)]
            r = min(ties, key=lambda i: self.basis[i])
            self.pivot(r, e)
            self.iterations += 1


def _standard_columns(lp):
    """Map x to x' >= 0 with x = shift + mapping @ x'."""
    count = lp.c.size
    shift = np.zeros(count)
    columns = []
    limits = []
    for j in range(count):
        lower, upper = lp.lower[j], lp.upper[j]
        if np.isfinite(lower):
            shift[j] = lower
            columns.append((j, 1.0))
            if np.isfinite(upper):
                limits.append((len(columns) - 1, upper - lower))
        elif np.isfinite(upper):
            shift[j] = upper
            columns.append((j, -1.0))
        else:
            columns.append((j, 1.0))
            columns.append((j, -1.0))
    mapping = np.zeros((count, len(columns)))
    for col, (j, sign) in enumerate(columns):
        mapping[j, col] = sign
    return shift, mapping, limits


def solve_dense(lp, watch=None,
                max_iterations=constants.DEFAULT_MAX_SIMPLEX_ITERATIONS):
    if watch is None:
        watch = start_watch()
    if np.any(lp.lower > lp.upper):
        return subproblem.ScalarResult(SolveStatus.INFEASIBLE)
    shift, mapping, limits = _standard_columns(lp)
    width = mapping.shape[1]

    a = lp.a @ mapping
    b = lp.b - lp.a @ shift
    senses = list(lp.senses)
    if limits:
        bound_a = np.zeros((len(limits), width))
        for i, (col, _limit) in enumerate(limits):
            bound_a[i, col] = 1.0
        a = np.vstack([a, bound_a])
        b = np.concatenate([b, [limit for _col, limit in limits]])
        senses.extend([model.RowSense.LE] * len(limits))
    a = a.reshape(len(senses), width)

    for i in np.flatnonzero(b < 0):
        a[i] = -a[i]
        b[i] = -b[i]
        senses[i] = _FLIPPED[senses[i]]
    # Rows are equilibrated so the phase one residual is an absolute
    # distance in every row.
    norms = np.abs(a).max(axis=1, initial=0.0)
    norms[norms == 0.0] = 1.0
    a /= norms[:, None]
    b /= norms

    rows = len(senses)
    slack_count = sum(1 for s in senses if s is not model.RowSense.EQ)
    artificial_count = sum(1 for s in senses if s is not model.RowSense.LE)
    first_artificial = width + slack_count
    total = first_artificial + artificial_count
    table = np.zeros((rows + 1, total + 1))
    table[:rows, :width] = a
    table[:rows, -1] = b
    basis = []
    slack = width
    artificial = first_artificial
    for i, sense in enumerate(senses):
        if sense is model.RowSense.LE:
            table[i, slack] = 1.0
            basis.append(slack)
            slack += 1
            continue
        if sense is model.RowSense.GE:
            table[i, slack] = -1.0
            slack += 1
        table[i, artificial] = 1.0
        basis.append(artificial)
        artificial += 1

    tableau = _Tableau(table, basis, watch, max_iterations)
    if artificial_count:
        status = _phase_one(tableau, first_artificial)
        if status is not SolveStatus.OPTIMAL:
            return subproblem.ScalarResult(status)
        table = tableau.table

    cost = np.zeros(table.shape[1])
    cost[:width] = lp.c @ mapping
    table[-1] = cost
    for i, column in enumerate(tableau.basis):
        if cost[column] != 0.0:
            table[-1] -= cost[column] * table[i]
    status = tableau.iterate()
    if status is not SolveStatus.OPTIMAL:
        return subproblem.ScalarResult(status)

    values = np.zeros(table.shape[1] - 1)
    for i, column in enumerate(tableau.basis):
        values[column] = table[i, -1]
    x = shift + mapping @ values[:width]
    violation = max_violation(lp, x)
    if violation > constants.FEASIBILITY_TOL:
        LOG.warning("Simplex solution violates the problem by %g after "
                    "%d pivots", violation, tableau.iterations)
        return subproblem.ScalarResult(SolveStatus.OTHER_ERROR)
    x = np.clip(x, lp.lower, lp.upper)
    LOG.debug("Simplex optimal after %d pivots", tableau.iterations)
    return subproblem.ScalarResult(
        SolveStatus.OPTIMAL, x=tuple(x),
        value=float(lp.c @ x) + lp.constant)


def max_violation(lp, x):
    """Largest bound or row violation of x, rows scaled by their norm."""
    worst = float(np.max(np.concatenate([lp.lower - x, x - lp.upper]),
                         initial=0.0))
    if not lp.b.size:
        return worst
    activity = lp.a @ x - lp.b
    norms = np.abs(lp.a).max(axis=1, initial=0.0)
    norms[norms == 0.0] = 1.0
    for i, sense in enumerate(lp.senses):
        if sense is model.RowSense.LE:
            excess = activity[i]
        elif sense is model.RowSense.GE:
            excess = -activity[i]
        else:
            excess = abs(activity[i])
        worst = max(worst, excess / norms[i])
    return worst


def _phase_one(tableau, first_artificial):
    table = tableau.table
    table[-1] = 0.0
    table[-1, first_artificial:-1] = 1.0
    for i, column in enumerate(tableau.basis):
        if column >= first_artificial:
            table[-1] -= table[i]
    status = tableau.iterate()
    if status is SolveStatus.UNBOUNDED:
        return SolveStatus.OTHER_ERROR
    if status is not SolveStatus.OPTIMAL:
        return status
    if -table[-1, -1] > constants.INFEASIBILITY_TOL:
        return SolveStatus.INFEASIBLE

    redundant = []
    for i, column in enumerate(tableau.basis):
        if column < first_artificial:
            continue
        candidates = np.flatnonzero(
            np.abs(table[i, :first_artificial]) > constants.PIVOT_TOL)
        if candidates.size:
            tableau.pivot(i, candidates[0])
        else:
            redundant.append(i)
    keep = [i for i in range(len(tableau.basis)) if i not in redundant]
    tableau.basis = [tableau.basis[i] for i in keep]
    tableau.table = np.vstack([
        table[keep][:, list(range(first_artificial)) + [-1]],
        table[-1:, list(range(first_artificial)) + [-1]],
    ])
    return SolveStatus.OPTIMAL


def solve_lp(sub, time_limit=None,
             max_iterations=constants.DEFAULT_MAX_SIMPLEX_ITERATIONS):
    """Solve the continuous relaxation of a ScalarSubproblem."""
    return solve_dense(from_subproblem(sub), watch=start_watch(time_limit),
                       max_iterations=max_iterations)
