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
"""Weight spaces of the coordinate ring and their dimensions."""

import collections
import dataclasses
import itertools
import math
from typing import (Dict, Iterator, List, NamedTuple, Optional, Sequence, Set,
                    Tuple)

from absl import logging
import sympy

from torweyl import errors
from torweyl import utils
from torweyl.inference import decide
from torweyl.linalg import exactlin
from torweyl.linalg import feasibility
from torweyl.models import action

CharKey = Tuple[Tuple[int, ...], Tuple[int, ...]]


def enumerate_invariants(a: action.TorusAction,
                         box_bound: int) -> List[Tuple[int, ...]]:
  """Exponents of invariant monomials inside a box.

  Args:
    a: The action.
    box_bound: Every exponent entry is bounded by this in absolute value;
      affine entries are also nonnegative.

  Returns:
    All `alpha` in the box with `L alpha = 0`, in lexicographic order.

  Raises:
    BoxTooLargeError: if the box holds too many lattice points.
  """
  b = utils.check_bound(box_bound)
  utils.check_box((b + 1)**a.r * (2 * b + 1)**a.s)
  ranges = [range(b + 1)] * a.r + [range(-b, b + 1)] * a.s
  result = []
  for alpha in itertools.product(*ranges):
    if not any(exactlin.matvec(a.matrix, alpha)):
      result.append(alpha)
  return result


def _compositions(weights: Sequence[int],
                  total: int) -> Iterator[Tuple[int, ...]]:
  """Yields `x` in `N^len(weights)` with `sum_j weights[j] x[j] == total`."""
  if not weights:
    if total == 0:
      yield ()
    return
  for k in range(total // weights[0] + 1):
    for rest in _compositions(weights[1:], total - k * weights[0]):
      yield (k,) + rest


def _solve_torus_part(a: action.TorusAction, chi: Sequence[int],
                      affine: Sequence[int]):
  """Torus exponents completing `affine` to a solution of `L alpha = chi`.

  Returns None when there is no integer completion.
  """
  form = a.normal_form
  residual = tuple(
      c - x for c, x in zip(chi, exactlin.matvec(a.matrix[:, :a.r], affine)))
  w = exactlin.matvec(form.gamma, residual)
  if any(w[:form.identity_rank]):
    return None
  z = []
  for x, d in zip(w[form.identity_rank:], form.d):
    if x % d:
      return None
    z.append(x // d)
  return exactlin.matvec(form.delta_1, z)


def weight_space_basis(a: action.TorusAction,
                       chi: Sequence[int]) -> List[Tuple[int, ...]]:
  """Sorted exponents of the monomial basis of the `chi` weight space.

  The affine part is bounded through the grading `sum_j beta_j alpha_j =
  <y, chi>` of the positivity witness, and the torus part is solved exactly
  through the block normal form.

  Raises:
    NotFiniteDimensionalError: if `a` has nonconstant invariants.
    ShapeMismatchError: if `chi` does not have length `m`.
  """
  witness = decide.check_finite_dimensional(a)
  chi = utils.int_vector(chi)
  if len(chi) != a.m:
    raise errors.ShapeMismatchError(
        f"Character has length {len(chi)}, expected {a.m}.")
  grade = decide.grading(witness, chi)
  if grade < 0 or not grade.is_integer:
    return []
  grade = int(grade)
  weights = witness.beta[:a.r]
  utils.check_box(math.prod(grade // w + 1 for w in weights))
  basis = []
  for affine in _compositions(weights, grade):
    torus = _solve_torus_part(a, chi, affine)
    if torus is not None:
      basis.append(affine + torus)
  return sorted(basis)


def weight_space_dim(a: action.TorusAction, chi: Sequence[int]) -> int:
  """Dimension of the `chi` weight space of the coordinate ring.

  Raises:
    NotFiniteDimensionalError: if `a` has nonconstant invariants.
  """
  return len(weight_space_basis(a, chi))


@dataclasses.dataclass(frozen=True, eq=False)
class DimensionSeries:
  """Truncation of the generating function of weight space dimensions.

  Attributes:
    torus_action: The action the series belongs to.
    coefficients: Map from split characters `(free, torsion)` to dimensions.
    gradings: Grading value of every recorded split character.
    bound: Truncation bound on the grading.
    witness: Positivity witness whose `y` defines the grading.
  """
  torus_action: action.TorusAction
  coefficients: Dict[CharKey, int]
  gradings: Dict[CharKey, sympy.Rational]
  bound: sympy.Rational
  witness: feasibility.RowSpaceWitness

  def coefficient(self, free: Sequence[int], torsion: Sequence[int]) -> int:
    """Coefficient at a split character; torsion is reduced first."""
    moduli = self.torus_action.normal_form.d
    key = (utils.int_vector(free),
           tuple(t % d for t, d in zip(torsion, moduli)))
    return self.coefficients.get(key, 0)

  def coefficient_at(self, chi: Sequence[int]) -> int:
    """Coefficient at a raw character.

    Raises:
      ValueError: if `chi` grades above the truncation bound.
    """
    if decide.grading(self.witness, chi) > self.bound:
      raise ValueError(f"Character {tuple(chi)} lies above the bound.")
    free, torsion = action.normal_coordinates(self.torus_action, chi)
    return self.coefficient(free, torsion)


def _add_key(key: CharKey, step: CharKey, moduli: Sequence[int]) -> CharKey:
  free = tuple(x + y for x, y in zip(key[0], step[0]))
  torsion = tuple((x + y) % d for x, y, d in zip(key[1], step[1], moduli))
  return free, torsion


def dimension_series(a: action.TorusAction, bound) -> DimensionSeries:
  """Expands the product of `(1 - t^{eta_j})^{-1}` over affine coordinates.

  Characters are written in split normal coordinates and every factor is
  graded by `beta_j > 0`, so only finitely many products stay below `bound`.

  Args:
    a: An action with only constant invariants.
    bound: Nonnegative rational truncation bound on the grading.

  Raises:
    NotFiniteDimensionalError: if `a` has nonconstant invariants.
    InternalConsistencyError: if a factor is not positively graded.
  """
  witness = decide.check_finite_dimensional(a)
  bound = sympy.Rational(bound)
  if bound < 0:
    raise ValueError("`bound` must be nonnegative.")
  form = a.normal_form
  moduli = form.d
  steps = []
  for j in range(a.r):
    if witness.beta[j] <= 0:
      raise errors.InternalConsistencyError(
          f"Factor {j} has grading {witness.beta[j]}, expected positive.")
    steps.append((tuple(int(x) for x in form.l1[:, j]),
                  tuple(int(x) % d for x, d in zip(form.l2[:, j], moduli))))
  utils.check_box(
      math.prod(int(sympy.floor(bound / w)) + 1 for w in witness.beta[:a.r]))

  origin = ((0,) * form.identity_rank, (0,) * a.s)
  series: Dict[CharKey, int] = {origin: 1}
  gradings: Dict[CharKey, sympy.Rational] = {origin: sympy.Integer(0)}
  for step, weight in zip(steps, witness.beta):
    expanded = collections.defaultdict(int, series)
    for key, count in series.items():
      current, grade = key, gradings[key] + weight
      while grade <= bound:
        current = _add_key(current, step, moduli)
        expanded[current] += count
        gradings[current] = grade
        grade += weight
    series = dict(expanded)
  logging.debug("Series of %r up to %s has %d characters.", a, bound,
                len(series))
  return DimensionSeries(a, dict(sorted(series.items())), gradings, bound,
                         witness)


def epsilon_embed(a: action.TorusAction,
                  beta: Sequence[int]) -> Tuple[int, ...]:
  """Lifts an affine exponent of the slice to an invariant exponent.

  Returns `(beta, -gamma_i / d_i)` with `gamma = L_2 beta`, written in normal
  form coordinates, so that the normal form matrix kills it. Apply `delta` of
  the normal form to obtain the raw exponent.

  Raises:
    NotTransitiveError: if `a` is not transitive on the torus factor.
    NotInT1Error: if `L_1 beta != 0`.
    NotInT1PrimeError: if some `gamma_i` is not divisible by `d_i`.
  """
  action.check_transitive(a)
  beta = utils.int_vector(beta)
  if len(beta) != a.r:
    raise errors.ShapeMismatchError(
        f"Expected {a.r} affine exponents, got {len(beta)}.")
  form = a.normal_form
  if any(exactlin.matvec(form.l1, beta)):
    raise errors.NotInT1Error(f"{beta} is not killed by the free block.")
  gamma = exactlin.matvec(form.l2, beta)
  kappa = []
  for g, d in zip(gamma, form.d):
    if g % d:
      raise errors.NotInT1PrimeError(
          f"{beta} has torsion image {gamma} not divisible by {form.d}.")
    kappa.append(-g // d)
  return beta + tuple(kappa)


def lift_exponent(a: action.TorusAction,
                  beta: Sequence[int]) -> Tuple[int, ...]:
  """The lift of `beta` in raw coordinates, `delta @ epsilon_embed(beta)`."""
  return exactlin.matvec(a.normal_form.delta, epsilon_embed(a, beta))


def _solve_rational(
    a: action.TorusAction,
    affine: Sequence[int]) -> Optional[Tuple[sympy.Rational, ...]]:
  """Unique rational torus exponents with `L alpha = 0`, or None."""
  c = sympy.Matrix(exactlin.to_lists(a.torus_block))
  rhs = -sympy.Matrix(exactlin.matvec(a.matrix[:, :a.r], affine))
  if a.s == 0:
    return () if all(x == 0 for x in rhs) else None
  solution = (c.T * c).inv() * c.T * rhs
  if c * solution != rhs:
    return None
  return tuple(solution)


def quotient_iso_check(a: action.TorusAction, box_bound: int) -> bool:
  """Checks the lift matches slice invariants with invariants, in a box.

  The slice side consists of `beta` in `[0, box_bound]^r` killed by the free
  block and satisfying the torsion congruences. The other side consists of
  invariant exponents whose affine part lies in the same box, the torus part
  being solved exactly. The check passes when the raw lift is a bijection.

  Raises:
    NotTransitiveError: if `a` is not transitive on the torus factor.
  """
  action.check_transitive(a)
  b = utils.check_bound(box_bound)
  utils.check_box((b + 1)**a.r)
  lifted: Set[Tuple[int, ...]] = set()
  invariant: Set[Tuple[int, ...]] = set()
  num_slice = 0
  for beta in itertools.product(range(b + 1), repeat=a.r):
    try:
      lifted.add(lift_exponent(a, beta))
      num_slice += 1
    except (errors.NotInT1Error, errors.NotInT1PrimeError):
      pass
    torus = _solve_rational(a, beta)
    if torus is not None and all(x.is_integer for x in torus):
      invariant.add(tuple(beta) + tuple(int(x) for x in torus))
  injective = len(lifted) == num_slice
  logging.debug("Quotient check of %r: %d slice and %d invariant exponents.",
                a, num_slice, len(invariant))
  return injective and lifted == invariant


class SweepEntry(NamedTuple):
  """One character class of a dimension sweep."""
  free: Tuple[int, ...]
  torsion: Tuple[int, ...]
  chi: Tuple[int, ...]
  dim: int


def sweep_dimensions(a: action.TorusAction, bound) -> List[SweepEntry]:
  """Every character class graded at most `bound` with a nonzero dimension.

  Each dimension is computed twice, from the series and by direct
  enumeration of the weight space of a raw representative.

  Raises:
    NotFiniteDimensionalError: if `a` has nonconstant invariants.
    InternalConsistencyError: if the two dimensions disagree.
  """
  series = dimension_series(a, bound)
  entries = []
  for (free, torsion), dim in series.coefficients.items():
    chi = action.raw_character(a, free, torsion)
    direct = weight_space_dim(a, chi)
    if direct != dim:
      raise errors.InternalConsistencyError(
          f"Character {chi} has series coefficient {dim} but dimension "
          f"{direct}.")
    entries.append(SweepEntry(free, torsion, chi, dim))
  logging.info("Swept %d characters of %r up to %s.", len(entries), a, bound)
  return entries
