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
"""Diagonal torus actions on affine space times a torus."""

import dataclasses
import functools
import math
from typing import List, Sequence, Tuple

from absl import logging

from torweyl import errors
from torweyl import utils
from torweyl.linalg import exactlin


class TorusAction:
  r"""Action of $(k^\times)^m$ on $k^r \times (k^\times)^s$.

  Coordinate `Q_i` is scaled by the character whose exponent vector is column
  `i` of the integer weight matrix `L`. The first `r` coordinates are affine,
  the last `s` are invertible.
  """

  def __init__(self, matrix, r: int, s: int):
    """Initializes a TorusAction.

    Args:
      matrix: Integer weight matrix `L` of shape [m, r + s].
      r: Number of affine coordinates.
      s: Number of torus coordinates.

    Raises:
      EmptyActionError: if `L` has no rows or no columns.
      ShapeMismatchError: if `L` does not have `r + s` columns.
    """
    l = exactlin.as_int_matrix(matrix)
    if isinstance(r, bool) or isinstance(s, bool) or int(r) != r or int(
        s) != s or r < 0 or s < 0:
      raise errors.ShapeMismatchError(
          f"`r` and `s` must be nonnegative integers, got {r!r} and {s!r}.")
    r, s = int(r), int(s)
    if r + s == 0 or l.shape[0] == 0:
      raise errors.EmptyActionError(
          "An action needs at least one coordinate and one torus factor.")
    if l.shape[1] != r + s:
      raise errors.ShapeMismatchError(
          f"Weight matrix has {l.shape[1]} columns but r + s = {r + s}.")
    l.flags.writeable = False
    self._matrix = l
    self._r = r
    self._s = s

  @property
  def matrix(self) -> exactlin.IntMatrix:
    """Read-only weight matrix `L`."""
    return self._matrix

  @property
  def r(self) -> int:
    """Number of affine coordinates."""
    return self._r

  @property
  def s(self) -> int:
    """Number of torus coordinates."""
    return self._s

  @property
  def m(self) -> int:
    """Rank of the acting torus."""
    return self._matrix.shape[0]

  @property
  def n(self) -> int:
    """Number of coordinates."""
    return self._r + self._s

  @property
  def torus_block(self) -> exactlin.IntMatrix:
    """The last `s` columns of `L`."""
    return self._matrix[:, self._r:]

  @functools.cached_property
  def normal_form(self) -> exactlin.BlockNormalForm:
    """Block normal form of `L`, computed once.

    Raises:
      DependentTorusWeightsError: if the torus block is dependent.
    """
    return exactlin.block_normal_form(self._matrix, self._r, self._s)

  def to_lists(self) -> List[List[int]]:
    """Returns `L` as nested lists of integers."""
    return exactlin.to_lists(self._matrix)

  def __eq__(self, other):
    if not isinstance(other, TorusAction):
      return NotImplemented
    return (self._r, self._s, self.to_lists()) == (other.r, other.s,
                                                    other.to_lists())

  def __hash__(self):
    return hash((self._r, self._s, tuple(map(tuple, self.to_lists()))))

  def __repr__(self):
    return f"TorusAction(L={self.to_lists()}, r={self._r}, s={self._s})"


@dataclasses.dataclass(frozen=True, eq=False)
class SliceData:
  """Stabilizer and slice representation at a point of the torus factor.

  Attributes:
    normal_form: Block normal form the data is read from.
    rho: The `r` restricted characters of the identity component, as columns
      of the upper-left block.
    component_group: Invariant factors greater than one of the finite group
      of components of the stabilizer.
    identity_rank: Rank of the identity component of the stabilizer.
  """
  normal_form: exactlin.BlockNormalForm
  rho: Tuple[Tuple[int, ...], ...]
  component_group: Tuple[int, ...]
  identity_rank: int

  @property
  def component_group_order(self) -> int:
    """Order of the finite group of components."""
    return math.prod(self.component_group)


def new_action(matrix, r: int, s: int) -> TorusAction:
  """Validates and returns a `TorusAction`."""
  return TorusAction(matrix, r, s)


def weights(a: TorusAction) -> List[Tuple[int, ...]]:
  """Returns the `n` weights of the action, the columns of `L` in order."""
  return [tuple(int(x) for x in a.matrix[:, j]) for j in range(a.n)]


def check_transitive(a: TorusAction) -> TorusAction:
  """Confirms the group acts transitively on the torus factor."""
  if not is_transitive_on_torus(a):
    raise errors.NotTransitiveError(
        f"The last {a.s} weights of {a!r} are linearly dependent.")
  return a


def is_faithful(a: TorusAction) -> bool:
  """Checks whether the weights generate the whole character lattice."""
  factors = exactlin.invariant_factors(a.matrix)
  return len(factors) == a.m and all(d == 1 for d in factors)


def is_transitive_on_torus(a: TorusAction) -> bool:
  """Checks the last `s` weights are linearly independent over Q."""
  return exactlin.rank(a.torus_block) == a.s


def no_zero_weight(a: TorusAction) -> bool:
  """Checks that no column of `L` is zero."""
  return all(any(x != 0 for x in w) for w in weights(a))


def slice_data(a: TorusAction) -> SliceData:
  """Reads the stabilizer and slice representation off the normal form.

  Args:
    a: A transitive action.

  Returns:
    The `SliceData` of `a`.

  Raises:
    NotTransitiveError: if `a` is not transitive on the torus factor.
  """
  check_transitive(a)
  form = a.normal_form
  rho = tuple(
      tuple(int(x) for x in form.l1[:, j]) for j in range(a.r))
  component_group = tuple(d for d in form.d if d > 1)
  logging.debug("Slice of %r has component group %s.", a, component_group)
  return SliceData(form, rho, component_group, form.identity_rank)


def fixed_space_trivial(a: TorusAction) -> bool:
  """Checks the identity component of the stabilizer fixes only zero.

  This holds exactly when every restricted character is nonzero. With no
  affine coordinates it holds vacuously; an empty restricted character counts
  as zero.

  Raises:
    NotTransitiveError: if `a` is not transitive on the torus factor.
  """
  data = slice_data(a)
  return all(any(x != 0 for x in rho) for rho in data.rho)


def transitivity_certificate(a: TorusAction
                            ) -> Tuple[exactlin.IntMatrix, int]:
  """Integer left inverse of the torus block up to a scalar.

  Returns:
    f: Integer matrix of shape [s, m].
    d: Positive integer with `f @ L[:, r:] == d * I_s`.

  Raises:
    NotTransitiveError: if `a` is not transitive on the torus factor.
  """
  check_transitive(a)
  form = a.normal_form
  d = math.lcm(*form.d) if form.d else 1
  projection = exactlin.zeros(a.s, a.m)
  for i, d_i in enumerate(form.d):
    projection[i, form.identity_rank + i] = d // d_i
  f = exactlin.matmul(exactlin.matmul(form.delta_1, projection), form.gamma)
  return f, d


def normal_coordinates(a: TorusAction, chi: Sequence[int]
                      ) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
  """Splits a raw character into its free part and torsion residues.

  Args:
    a: A transitive action.
    chi: Character in raw coordinates, of length `m`.

  Returns:
    free: The first `m - s` entries of `Gamma chi`.
    torsion: The last `s` entries of `Gamma chi`, reduced modulo `d_i`.

  Raises:
    NotTransitiveError: if `a` is not transitive on the torus factor.
    ShapeMismatchError: if `chi` does not have length `m`.
  """
  check_transitive(a)
  chi = utils.int_vector(chi)
  if len(chi) != a.m:
    raise errors.ShapeMismatchError(
        f"Character has length {len(chi)}, expected {a.m}.")
  form = a.normal_form
  w = exactlin.matvec(form.gamma, chi)
  free = w[:form.identity_rank]
  torsion = tuple(
      x % d for x, d in zip(w[form.identity_rank:], form.d))
  return free, torsion


def raw_character(a: TorusAction, free: Sequence[int],
                  torsion: Sequence[int]) -> Tuple[int, ...]:
  """Canonical raw representative of a split character.

  Raises:
    NotTransitiveError: if `a` is not transitive on the torus factor.
    ShapeMismatchError: if the parts have the wrong lengths.
  """
  check_transitive(a)
  form = a.normal_form
  free = utils.int_vector(free)
  torsion = utils.int_vector(torsion)
  if len(free) != form.identity_rank or len(torsion) != a.s:
    raise errors.ShapeMismatchError(
        f"Expected {form.identity_rank} free and {a.s} torsion entries.")
  residues = tuple(t % d for t, d in zip(torsion, form.d))
  return exactlin.matvec(form.gamma_inverse, free + residues)
