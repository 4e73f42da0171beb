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
"""Actions of graded operators, partial Fourier transforms and witnesses."""

import collections
import math
from typing import Iterable, List, NamedTuple, Sequence, Tuple

from absl import logging
import sympy

from torweyl import errors
from torweyl import utils
from torweyl.inference import chars
from torweyl.inference import decide
from torweyl.linalg import exactlin
from torweyl.models import action
from torweyl.models import operator


def _evaluate(poly: sympy.Poly, point: Sequence[int]) -> sympy.Rational:
  """Value of a coefficient polynomial with `Pi_i` replaced by `point[i]`."""
  gens = operator.pi_symbols(len(point))
  values = {g: sympy.Integer(p) for g, p in zip(gens, point)}
  return sympy.Rational(poly.as_expr().xreplace(values))


def apply(op: operator.OperatorElement,
          mono: operator.Monomial) -> List[operator.ScaledMonomial]:
  """Applies an operator to a monomial `Q^lambda`.

  The term `c(Pi) u_alpha` sends `Q^lambda` to the product over affine
  coordinates with `alpha_i < 0` of `lambda_i! / (lambda_i + alpha_i)!`, times
  `c(lambda + alpha)`, times `Q^{lambda + alpha}`. Terms leaving the
  monomial cone vanish.

  Returns:
    The nonzero scaled monomials of the result, sorted by exponent.
  """
  if mono.n != op.n or mono.r != op.r:
    raise errors.ShapeMismatchError(
        f"Monomial with n={mono.n}, r={mono.r} does not match operator with "
        f"n={op.n}, r={op.r}.")
  lam = mono.exponents
  result = collections.defaultdict(lambda: sympy.Integer(0))
  for alpha, poly in op.terms.items():
    target = tuple(l + a for l, a in zip(lam, alpha))
    if any(x < 0 for x in target[:op.r]):
      continue
    coeff = sympy.Integer(
        math.prod(
            falling_factorial_coefficient(lam[i], alpha[i])
            for i in range(op.r)))
    coeff *= _evaluate(poly, target)
    if coeff != 0:
      result[target] += coeff
  return [
      operator.ScaledMonomial(c, operator.Monomial(target, op.r))
      for target, c in sorted(result.items())
      if c != 0
  ]


def is_invariant(a: action.TorusAction, op: operator.OperatorElement) -> bool:
  """Checks every degree of `op` lies in the kernel of `L`."""
  if op.n != a.n:
    raise errors.ShapeMismatchError(
        f"Operator on {op.n} coordinates, action on {a.n}.")
  return all(not any(exactlin.matvec(a.matrix, alpha)) for alpha in op.degrees)


def fourier_sign(flip_set: Iterable[int], alpha: Sequence[int]) -> int:
  """Sign of `u_{alpha^I}` in the image of `u_alpha`."""
  exponent = sum(alpha[i] for i in flip_set if alpha[i] > 0)
  return -1 if exponent % 2 else 1


def fourier_transform(flip_set: Iterable[int],
                      op: operator.OperatorElement) -> operator.OperatorElement:
  """Image of `op` under the partial Fourier transform.

  On the coordinates `i` in the flip set, `Q_i` goes to `-P_i` and `P_i` to
  `Q_i`. Hence `Pi_i` goes to `-Pi_i - 1` and `u_alpha` goes to
  `(-1)^k u_{alpha^I}`, where `alpha^I` negates the flipped entries and `k`
  sums the positive flipped entries.

  Raises:
    IndexOutOfRangeError: if the flip set is not a subset of `range(r)`.
  """
  flip_set = utils.check_index_set(flip_set, op.r)
  gens = operator.pi_symbols(op.n)
  substitution = {gens[i]: -gens[i] - 1 for i in flip_set}
  terms = {}
  for alpha, poly in op.terms.items():
    flipped = tuple(-x if i in flip_set else x for i, x in enumerate(alpha))
    expr = poly.as_expr().xreplace(substitution)
    terms[flipped] = fourier_sign(flip_set, alpha) * expr
  return operator.OperatorElement(terms, op.r, op.s)


def twisted_apply(flip_set: Iterable[int], op: operator.OperatorElement,
                  mono: operator.Monomial) -> List[operator.ScaledMonomial]:
  """Action of `op` on the twisted module, through the Fourier transform."""
  return apply(fourier_transform(flip_set, op), mono)


def simplicity_witness(a: action.TorusAction, chi: Sequence[int],
                       box_bound: int) -> bool:
  """Checks every basis monomial of a weight space reaches every other one.

  For each ordered pair `(lambda, mu)` of basis exponents, `u_{mu - lambda}`
  must be invariant and send `Q^lambda` to a nonzero multiple of `Q^mu`.

  Args:
    a: An action with only constant invariants.
    chi: Raw character.
    box_bound: Largest weight space dimension to check.

  Raises:
    NotFiniteDimensionalError: if `a` has nonconstant invariants.
    BoxTooLargeError: if the weight space is larger than `box_bound`.
  """
  basis = chars.weight_space_basis(a, chi)
  if len(basis) > utils.check_bound(box_bound):
    raise errors.BoxTooLargeError(
        f"Weight space of dimension {len(basis)} exceeds {box_bound}.")
  for lam in basis:
    source = operator.Monomial(lam, a.r)
    for mu in basis:
      step = operator.u_op(tuple(x - y for x, y in zip(mu, lam)), a.r)
      if not is_invariant(a, step):
        return False
      image = apply(step, source)
      if (len(image) != 1 or image[0].mono.exponents != mu or
          image[0].coeff == 0):
        return False
  return True


class NoFdmWitness(NamedTuple):
  """Operators spanning a copy of a Weyl algebra inside the invariants.

  Attributes:
    relation: Integer relation among the torus weights.
    pivot: Full coordinate index playing the role of the last coordinate.
    q_op: The product of `Q_{r+i}^{relation[i]}`.
    p_op: `P_pivot^c` times the other torus coordinates to `-relation[i]`.
    pq_op: The product `P_pivot Q_pivot`.
  """
  relation: Tuple[int, ...]
  pivot: int
  q_op: operator.OperatorElement
  p_op: operator.OperatorElement
  pq_op: operator.OperatorElement


def no_fdm_witness(a: action.TorusAction) -> NoFdmWitness:
  """Invariant operators witnessing the lack of finite dimensional modules.

  Raises:
    TorusWeightsIndependentError: if the torus weights are independent.
    InternalConsistencyError: if a witness fails its invariance or grading
      check.
  """
  relations = exactlin.kernel_basis(a.torus_block)
  if not relations:
    raise errors.TorusWeightsIndependentError(
        f"The torus weights of {a!r} are independent.")
  relation = relations[0]
  last = max(i for i, c in enumerate(relation) if c != 0)
  if relation[last] < 0:
    relation = tuple(-c for c in relation)
  c = relation[last]
  pivot = a.r + last

  q_witness = operator.u_op((0,) * a.r + relation, a.r)
  p_witness = operator.p_op(pivot, a.r, a.s, c)
  for i, c_i in enumerate(relation):
    if i != last and c_i:
      p_witness = operator.multiply(p_witness,
                                    operator.q_op(a.r + i, a.r, a.s, -c_i))
  pq_witness = operator.multiply(
      operator.p_op(pivot, a.r, a.s), operator.q_op(pivot, a.r, a.s))

  for name, op in (("Q", q_witness), ("P", p_witness), ("PQ", pq_witness)):
    if not is_invariant(a, op):
      raise errors.InternalConsistencyError(f"Witness {name} is not invariant.")
  euler = operator.pi_op(pivot, a.r, a.s)
  if operator.commutator(euler, q_witness) != q_witness.scale(c):
    raise errors.InternalConsistencyError("Witness Q has the wrong grading.")
  if operator.commutator(euler, p_witness) != p_witness.scale(-c):
    raise errors.InternalConsistencyError("Witness P has the wrong grading.")
  logging.info("Relation %s among the torus weights of %r.", relation, a)
  return NoFdmWitness(relation, pivot, q_witness, p_witness, pq_witness)


class FixedCoordinateWitness(NamedTuple):
  """Invariant lifts of `Q_j^e`, `P_j^e` and `Pi_j` for a fixed coordinate."""
  index: int
  torsion_order: int
  q_op: operator.OperatorElement
  p_op: operator.OperatorElement
  pi_op: operator.OperatorElement


def fixed_coordinate_witness(a: action.TorusAction,
                             j: int) -> FixedCoordinateWitness:
  """Invariant operators generating a Weyl algebra at a fixed coordinate.

  The slice operators `Q_j^e` and `P_j^e` are invariant under the stabilizer
  when `e` is the torsion order of coordinate `j`. They are returned through
  their lifts `u_{delta epsilon(+-e e_j)}`, which are invariant under the
  whole torus.

  Raises:
    NotTransitiveError: if `a` is not transitive on the torus factor.
    IndexOutOfRangeError: if `j` is not an affine coordinate.
    NotAFixedCoordinateError: if the restricted character at `j` is nonzero.
    InternalConsistencyError: if a lift fails its invariance check.
  """
  data = action.slice_data(a)
  if not 0 <= j < a.r:
    raise errors.IndexOutOfRangeError(f"Index {j} outside [0, {a.r}).")
  if any(data.rho[j]):
    raise errors.NotAFixedCoordinateError(
        f"Coordinate {j} has restricted character {data.rho[j]}.")
  e = decide.torsion_order(a, j)
  unit = tuple(e if i == j else 0 for i in range(a.r))
  q_witness = operator.u_op(chars.lift_exponent(a, unit), a.r)
  p_witness = operator.u_op(
      chars.lift_exponent(a, tuple(-x for x in unit)), a.r)
  pi_witness = operator.pi_op(j, a.r, a.s)
  for op in (q_witness, p_witness, pi_witness):
    if not is_invariant(a, op):
      raise errors.InternalConsistencyError(
          f"Lift {op!r} at coordinate {j} is not invariant.")
  return FixedCoordinateWitness(j, e, q_witness, p_witness, pi_witness)


def epsilon_lift_check(a: action.TorusAction, alpha: Sequence[int],
                       beta: Sequence[int]) -> bool:
  """Checks the lift of slice operators respects products.

  Compares `u_{eps(alpha)} u_{eps(beta)}` on all coordinates with
  `u_alpha u_beta` on the affine coordinates alone: the degrees must match
  `eps(alpha + beta)` and the coefficients must agree and involve only the
  affine Euler operators.

  Raises:
    NotInT1PrimeError: if `alpha` or `beta` fails the torsion congruences.
  """
  alpha = utils.int_vector(alpha)
  beta = utils.int_vector(beta)
  lift_alpha = chars.lift_exponent(a, alpha)
  lift_beta = chars.lift_exponent(a, beta)
  total = tuple(x + y for x, y in zip(alpha, beta))
  full = operator.multiply(
      operator.u_op(lift_alpha, a.r), operator.u_op(lift_beta, a.r))
  if full.degrees != (chars.lift_exponent(a, total),):
    return False
  coefficient = full.coefficient(full.degrees[0]).as_expr()
  affine = set(operator.pi_symbols(a.n)[:a.r])
  if not coefficient.free_symbols <= affine:
    return False
  if a.r == 0:
    return coefficient == 1
  sliced = operator.multiply(
      operator.u_op(alpha, a.r), operator.u_op(beta, a.r))
  return (sliced.degrees == (total,) and
          sympy.expand(sliced.coefficient(total).as_expr() - coefficient) == 0)


def moment_operators(a: action.TorusAction) -> List[operator.OperatorElement]:
  """The operators `sum_j L[i, j] Pi_j`, one per row of `L`.

  They are central among invariant operators and act on the `chi` weight
  space by the scalar `chi_i`.
  """
  gens = operator.pi_symbols(a.n)
  result = []
  for row in a.matrix:
    expr = sum((int(l) * g for l, g in zip(row, gens)), sympy.Integer(0))
    result.append(operator.OperatorElement({(0,) * a.n: expr}, a.r, a.s))
  return result


def twisted_generator_annihilators(
    flip_set: Iterable[int], r: int,
    s: int) -> List[operator.OperatorElement]:
  """Operators killing the generator `Q^0` of the twisted module.

  Returns `Q_i` for `i` in the flip set and `P_i` otherwise, for every
  coordinate `i`.
  """
  flip_set = utils.check_index_set(flip_set, r)
  return [
      operator.q_op(i, r, s) if i in flip_set else operator.p_op(i, r, s)
      for i in range(r + s)
  ]


def falling_factorial_coefficient(lam: int, alpha: int) -> int:
  """Scalar by which `u_alpha` acts on `Q^lam` in one affine coordinate."""
  if alpha >= 0:
    return 1
  if -alpha > lam:
    return 0
  return math.factorial(lam) // math.factorial(lam + alpha)
