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
"""Exact integer linear algebra: canonical forms, kernels and block forms.

Integer matrices are 2-D `numpy.ndarray`s of `dtype=object` whose entries are
Python integers, so every product is exact regardless of entry size.
"""

import dataclasses
import functools
from typing import List, Sequence, Tuple

from absl import logging
import numpy as np
import sympy
from sympy.matrices import normalforms

from torweyl import errors

IntMatrix = np.ndarray


def as_int_matrix(values) -> IntMatrix:
  """Returns `values` as a 2-D object array of Python integers.

  Args:
    values: A 2-D array-like of integral entries.

  Raises:
    ShapeMismatchError: if `values` is not rectangular and two dimensional.
    TypeError: if an entry is not integral.
  """
  array = np.asarray(values, dtype=object)
  if array.ndim != 2:
    raise errors.ShapeMismatchError(
        f"Expected a rectangular 2-D matrix, got an array of shape "
        f"{array.shape}.")
  result = np.empty(array.shape, dtype=object)
  for index, value in np.ndenumerate(array):
    if isinstance(value, (list, tuple)) or int(value) != value:
      raise TypeError(f"Expected integer entries, got {value!r}.")
    result[index] = int(value)
  return result


def zeros(num_rows: int, num_cols: int) -> IntMatrix:
  """Returns the `num_rows` x `num_cols` zero matrix."""
  result = np.empty((num_rows, num_cols), dtype=object)
  result.fill(0)
  return result


def identity(size: int) -> IntMatrix:
  """Returns the `size` x `size` identity matrix."""
  result = zeros(size, size)
  for i in range(size):
    result[i, i] = 1
  return result


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
  """Exact product of two integer matrices, including empty shapes."""
  if a.shape[1] != b.shape[0]:
    raise errors.ShapeMismatchError(
        f"Cannot multiply shapes {a.shape} and {b.shape}.")
  if a.shape[1] == 0:
    return zeros(a.shape[0], b.shape[1])
  return as_int_matrix(a.dot(b))


def matvec(a: IntMatrix, x: Sequence[int]) -> Tuple[int, ...]:
  """Exact product of an integer matrix with a vector."""
  if a.shape[1] != len(x):
    raise errors.ShapeMismatchError(
        f"Cannot multiply shape {a.shape} with a vector of length {len(x)}.")
  return tuple(
      sum((a[i, k] * x[k] for k in range(a.shape[1])), 0)
      for i in range(a.shape[0]))


def block_diagonal(a: IntMatrix, b: IntMatrix) -> IntMatrix:
  """Returns the block matrix [[a, 0], [0, b]]."""
  result = zeros(a.shape[0] + b.shape[0], a.shape[1] + b.shape[1])
  result[:a.shape[0], :a.shape[1]] = a
  result[a.shape[0]:, a.shape[1]:] = b
  return result


def to_lists(a: IntMatrix) -> List[List[int]]:
  """Returns the matrix as nested lists of Python integers."""
  return [[int(x) for x in row] for row in a]


def determinant(a: IntMatrix) -> int:
  """Exact determinant of a square integer matrix."""
  if a.shape[0] != a.shape[1]:
    raise errors.ShapeMismatchError("Determinant needs a square matrix.")
  if a.shape[0] == 0:
    return 1
  return int(sympy.Matrix(to_lists(a)).det())


def unimodular_inverse(a: IntMatrix) -> IntMatrix:
  """Returns the integer inverse of a matrix with determinant +1 or -1."""
  if abs(determinant(a)) != 1:
    raise ValueError("Matrix is not unimodular.")
  if a.shape[0] == 0:
    return zeros(0, 0)
  return as_int_matrix(sympy.Matrix(to_lists(a)).inv().tolist())


def _swap_rows(a: IntMatrix, i: int, j: int):
  if i != j:
    a[[i, j]] = a[[j, i]]


def hermite_normal_form(matrix) -> Tuple[IntMatrix, IntMatrix]:
  """Row-style Hermite normal form with its unimodular transform.

  Pivots are positive, every entry above a pivot is reduced into
  `[0, pivot)`, and zero rows are collected at the bottom.

  Args:
    matrix: Integer matrix `M` of shape [m, n].

  Returns:
    h: The Hermite normal form of `M`.
    u: Unimodular [m, m] matrix with `u @ M == h`.
  """
  h = as_int_matrix(matrix).copy()
  num_rows, num_cols = h.shape
  u = identity(num_rows)
  pivot_row = 0
  for col in range(num_cols):
    if pivot_row == num_rows:
      break
    while True:
      nonzero = [i for i in range(pivot_row, num_rows) if h[i, col] != 0]
      if not nonzero:
        break
      best = min((abs(h[i, col]), i) for i in nonzero)[1]
      _swap_rows(h, pivot_row, best)
      _swap_rows(u, pivot_row, best)
      cleared = True
      for i in range(pivot_row + 1, num_rows):
        if h[i, col] != 0:
          q = h[i, col] // h[pivot_row, col]
          h[i] -= q * h[pivot_row]
          u[i] -= q * u[pivot_row]
          if h[i, col] != 0:
            cleared = False
      if cleared:
        break
    if h[pivot_row, col] == 0:
      continue
    if h[pivot_row, col] < 0:
      h[pivot_row] = -h[pivot_row]
      u[pivot_row] = -u[pivot_row]
    for i in range(pivot_row):
      q = h[i, col] // h[pivot_row, col]
      if q:
        h[i] -= q * h[pivot_row]
        u[i] -= q * u[pivot_row]
    pivot_row += 1
  return h, u


def smith_normal_form(matrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
  """Smith normal form with both unimodular transforms.

  Args:
    matrix: Integer matrix `M` of shape [m, n].

  Returns:
    s: Diagonal [m, n] matrix whose nonnegative diagonal entries form a
      divisibility chain `d_1 | d_2 | ...`, zeros last.
    u: Unimodular [m, m] matrix.
    v: Unimodular [n, n] matrix with `u @ M @ v == s`.
  """
  m = as_int_matrix(matrix)
  num_rows, num_cols = m.shape
  if not num_rows or not num_cols:
    return m.copy(), identity(num_rows), identity(num_cols)
  s, u, v = normalforms.smith_normal_decomp(
      sympy.Matrix(m.tolist()), domain=sympy.ZZ)
  s, u, v = (as_int_matrix(x.tolist()) for x in (s, u, v))
  for i in range(min(num_rows, num_cols)):
    if s[i, i] < 0:
      s[i] = -s[i]
      u[i] = -u[i]
  return s, u, v


def invariant_factors(matrix) -> Tuple[int, ...]:
  """Returns the nonzero diagonal entries of the Smith normal form."""
  m = as_int_matrix(matrix)
  if 0 in m.shape:
    return ()
  factors = normalforms.invariant_factors(
      sympy.Matrix(m.tolist()), domain=sympy.ZZ)
  return tuple(abs(int(x)) for x in factors if x != 0)


def rank(matrix) -> int:
  """Rank over the rationals of an integer matrix."""
  h, _ = hermite_normal_form(matrix)
  return sum(1 for row in h if any(x != 0 for x in row))


def _normalize_sign(vector: Sequence[int]) -> Tuple[int, ...]:
  """Flips the sign so that the first nonzero entry is positive."""
  for x in vector:
    if x != 0:
      return tuple(int(y) for y in vector) if x > 0 else tuple(
          -int(y) for y in vector)
  return tuple(int(y) for y in vector)


def kernel_basis(matrix) -> List[Tuple[int, ...]]:
  """Returns a basis of the integer kernel lattice `{x : M x = 0}`.

  The basis is saturated: every integer solution is an integer combination of
  the returned vectors. Each vector has its first nonzero entry positive.

  Args:
    matrix: Integer matrix `M` of shape [m, n].
  """
  m = as_int_matrix(matrix)
  h, u = hermite_normal_form(m.T)
  num_pivots = sum(1 for row in h if any(x != 0 for x in row))
  return [_normalize_sign(u[i]) for i in range(num_pivots, u.shape[0])]


@dataclasses.dataclass(frozen=True, eq=False)
class UnimodularPair:
  """Left and right unimodular transforms of a two-sided reduction."""
  left: IntMatrix
  right: IntMatrix

  def is_unimodular(self) -> bool:
    """Checks both determinants are +1 or -1 by exact computation."""
    return (abs(determinant(self.left)) == 1 and
            abs(determinant(self.right)) == 1)


@dataclasses.dataclass(frozen=True, eq=False)
class BlockNormalForm:
  r"""Block normal form `Gamma L Delta = [[L_1, 0], [L_2, D]]`.

  `D` is an s x s diagonal matrix with nonzero entries and
  `Delta = [[I_r, 0], [0, Delta_1]]`. Exponent vectors transform as
  $\alpha \mapsto \Delta^{-1}\alpha$ and characters as
  $\chi \mapsto \Gamma\chi$.
  """
  pair: UnimodularPair
  lp: IntMatrix
  r: int
  s: int

  @property
  def gamma(self) -> IntMatrix:
    """Left transform acting on characters."""
    return self.pair.left

  @property
  def delta(self) -> IntMatrix:
    """Right transform acting on exponents."""
    return self.pair.right

  @property
  def m(self) -> int:
    """Number of rows."""
    return self.lp.shape[0]

  @property
  def identity_rank(self) -> int:
    """Rank m - s of the identity component of the stabilizer."""
    return self.m - self.s

  @property
  def l1(self) -> IntMatrix:
    """Upper-left block, of shape [m - s, r]."""
    return self.lp[:self.identity_rank, :self.r]

  @property
  def l2(self) -> IntMatrix:
    """Lower-left block, of shape [s, r]."""
    return self.lp[self.identity_rank:, :self.r]

  @property
  def d(self) -> Tuple[int, ...]:
    """Diagonal entries of the torus block."""
    return tuple(
        int(self.lp[self.identity_rank + i, self.r + i]) for i in range(self.s))

  @property
  def delta_1(self) -> IntMatrix:
    """Lower-right block of `delta`."""
    return self.delta[self.r:, self.r:]

  @functools.cached_property
  def gamma_inverse(self) -> IntMatrix:
    """Integer inverse of `gamma`."""
    return unimodular_inverse(self.gamma)


def block_normal_form(matrix, r: int, s: int) -> BlockNormalForm:
  """Reduces a weight matrix to block normal form.

  The rows of `L` are split into those whose image under the projection onto
  the last `s` coordinates vanishes and a complement, using the Hermite form
  of the torus block; the remaining s x s block is then diagonalized by its
  Smith form.

  Args:
    matrix: Integer matrix `L` of shape [m, r + s].
    r: Number of affine coordinates.
    s: Number of torus coordinates.

  Returns:
    The `BlockNormalForm` of `L`.

  Raises:
    ShapeMismatchError: if `L` does not have `r + s` columns.
    DependentTorusWeightsError: if the last `s` columns of `L` are dependent
      over the rationals.
  """
  l = as_int_matrix(matrix)
  num_rows, num_cols = l.shape
  if num_cols != r + s or r < 0 or s < 0:
    raise errors.ShapeMismatchError(
        f"Matrix has {num_cols} columns but r + s = {r + s}.")
  h, u = hermite_normal_form(l[:, r:])
  torus_rank = sum(1 for row in h if any(x != 0 for x in row))
  if torus_rank != s:
    raise errors.DependentTorusWeightsError(
        f"The last {s} columns have rank {torus_rank} < {s}.")
  # Rows vanishing on the torus block go on top.
  order = list(range(s, num_rows)) + list(range(s))
  gamma_1 = u[order]
  _, gamma_2, delta_1 = smith_normal_form(h[:s])
  gamma = matmul(block_diagonal(identity(num_rows - s), gamma_2), gamma_1)
  delta = block_diagonal(identity(r), delta_1)
  lp = matmul(matmul(gamma, l), delta)
  logging.debug("Block normal form of a %d x %d matrix with r=%d, s=%d.",
                num_rows, num_cols, r, s)
  return BlockNormalForm(UnimodularPair(gamma, delta), lp, r, s)
