# Copyright 2026 The TorWeyl Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Sign-constrained feasibility in the row space of an integer matrix."""

import functools
import math
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from absl import logging
import sympy

from torweyl import errors
from torweyl import utils
from torweyl.linalg import exactlin

RatVector = Tuple[sympy.Rational, ...]


def rat_vector(values: Iterable) -> RatVector:
  """Returns `values` as a tuple of reduced `sympy.Rational`s."""
  return tuple(sympy.Rational(v) for v in values)


class RowSpaceWitness(NamedTuple):
  """A vector `beta = y^T L` with prescribed signs.

  Attributes:
    beta: Primitive integer vector in the row space of `L`.
    y: Rational multiplier with `beta == y^T L` exactly.
  """
  beta: Tuple[int, ...]
  y: RatVector


class _Inequality(NamedTuple):
  """The constraint `sum_i coeffs[i] * z[i] >= rhs`."""
  coeffs: Tuple[sympy.Rational, ...]
  rhs: sympy.Rational


def _is_trivial(inequality: _Inequality) -> bool:
  return all(c == 0 for c in inequality.coeffs) and inequality.rhs <= 0


def _eliminate(system: List[_Inequality], var: int) -> List[_Inequality]:
  """Projects out variable `var` by pairing its lower and upper bounds."""
  lower, upper, rest = [], [], []
  for inequality in system:
    a = inequality.coeffs[var]
    if a > 0:
      lower.append(inequality)
    elif a < 0:
      upper.append(inequality)
    else:
      rest.append(inequality)
  for lo in lower:
    a_lo = lo.coeffs[var]
    for up in upper:
      a_up = -up.coeffs[var]
      coeffs = tuple(x / a_lo + y / a_up for x, y in zip(lo.coeffs, up.coeffs))
      rest.append(_Inequality(coeffs, lo.rhs / a_lo + up.rhs / a_up))
  pruned = []
  seen = set()
  for inequality in rest:
    if _is_trivial(inequality) or inequality in seen:
      continue
    seen.add(inequality)
    pruned.append(inequality)
  return pruned


def _choose(lo: Optional[sympy.Rational],
            hi: Optional[sympy.Rational]) -> sympy.Rational:
  """Picks zero when allowed, else the bound nearest to zero."""
  if (lo is None or lo <= 0) and (hi is None or hi >= 0):
    return sympy.Integer(0)
  if lo is not None and lo > 0:
    return lo
  return hi


def solve_inequalities(
    matrix: Sequence[Sequence[sympy.Rational]],
    rhs: Sequence[sympy.Rational]) -> Optional[RatVector]:
  """Finds a rational `z` with `matrix @ z >= rhs` by Fourier-Motzkin.

  Args:
    matrix: Rational coefficient rows, all of the same length k.
    rhs: Right hand sides, one per row.

  Returns:
    A feasible point, or None if the system is infeasible.
  """
  if len(matrix) != len(rhs):
    raise errors.ShapeMismatchError("Need one right hand side per row.")
  num_vars = len(matrix[0]) if matrix else 0
  system = [
      _Inequality(rat_vector(row), sympy.Rational(b))
      for row, b in zip(matrix, rhs)
  ]
  systems = [[q for q in system if not _is_trivial(q)]]
  for var in reversed(range(num_vars)):
    systems.append(_eliminate(systems[-1], var))
    logging.debug("Eliminated variable %d, %d inequalities remain.", var,
                  len(systems[-1]))
  if systems[-1]:
    # Only constraints of the form 0 >= positive survive here.
    return None
  values = [sympy.Integer(0)] * num_vars
  for var in range(num_vars):
    lo, hi = None, None
    for inequality in systems[num_vars - 1 - var]:
      a = inequality.coeffs[var]
      if a == 0:
        continue
      bound = (inequality.rhs -
               sum((inequality.coeffs[i] * values[i] for i in range(var)),
                   sympy.Integer(0))) / a
      if a > 0:
        lo = bound if lo is None else max(lo, bound)
      else:
        hi = bound if hi is None else min(hi, bound)
    values[var] = _choose(lo, hi)
  return tuple(values)


def positive_vector_in_rowspace(matrix, positive_idx: Iterable[int],
                                zero_idx: Iterable[int]
                               ) -> Optional[RowSpaceWitness]:
  """Finds a row space vector with prescribed positive and zero entries.

  The strict inequalities `beta_i > 0` are replaced by `beta_i >= 1`, which
  is equivalent on a rational cone. The equalities are eliminated first by
  restricting `y` to the integer kernel of the transposed zero columns.

  Args:
    matrix: Integer matrix `L` of shape [m, n].
    positive_idx: Indices where `beta` must be positive.
    zero_idx: Indices where `beta` must vanish. Together with `positive_idx`
      this must partition `range(n)`.

  Returns:
    A `RowSpaceWitness` with primitive integer `beta`, or None if no such
    vector exists.

  Raises:
    IndexOutOfRangeError: if the index sets leave `range(n)`.
    ValueError: if the index sets overlap or do not cover `range(n)`.
  """
  l = exactlin.as_int_matrix(matrix)
  num_rows, num_cols = l.shape
  positive = utils.check_index_set(positive_idx, num_cols)
  zero = utils.check_index_set(zero_idx, num_cols)
  if positive & zero:
    raise ValueError("`positive_idx` and `zero_idx` must be disjoint.")
  if len(positive) + len(zero) != num_cols:
    raise ValueError("`positive_idx` and `zero_idx` must cover every column.")
  positive = sorted(positive)
  zero = sorted(zero)

  zero_block = l[:, zero] if zero else exactlin.zeros(num_rows, 0)
  basis = exactlin.kernel_basis(zero_block.T)
  if not positive:
    return RowSpaceWitness((0,) * num_cols, (sympy.Integer(0),) * num_rows)
  if not basis:
    return None

  # Row k of the system is column j of B L, one per positive index j.
  b = exactlin.as_int_matrix(basis)
  reduced = exactlin.matmul(b, l)
  system = [[reduced[k, j] for k in range(len(basis))] for j in positive]
  z = solve_inequalities(system, [1] * len(positive))
  if z is None:
    logging.debug("Row space of a %d x %d matrix has no vector of the "
                  "requested sign pattern.", num_rows, num_cols)
    return None

  y = [
      sum((z[k] * basis[k][i] for k in range(len(basis))), sympy.Integer(0))
      for i in range(num_rows)
  ]
  beta = [
      sum((y[i] * l[i, j] for i in range(num_rows)), sympy.Integer(0))
      for j in range(num_cols)
  ]
  denominator = functools.reduce(
      lambda acc, q: acc * q.q // math.gcd(acc, q.q), beta + y, 1)
  beta = [int(x * denominator) for x in beta]
  y = [x * denominator for x in y]
  content = functools.reduce(math.gcd, beta, 0)
  beta = tuple(x // content for x in beta)
  y = rat_vector(x / content for x in y)
  return RowSpaceWitness(beta, y)
