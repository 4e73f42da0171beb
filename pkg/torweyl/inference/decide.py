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
"""Decides whether the invariant operators have enough simple modules.

The ring of invariant differential operators has enough simple finite
dimensional modules exactly when the torus acts transitively on the torus
factor and the identity component of the stabilizer has no nonzero fixed
vector in the affine factor. Both conditions are decided here, together with
constructive certificates: a flip set when they hold and an obstruction when
they fail.
"""

import dataclasses
import itertools
import math
from typing import Any, Dict, FrozenSet, Iterable, Optional, Tuple, Union

from absl import logging
import sympy

from torweyl import errors
from torweyl import utils
from torweyl.linalg import exactlin
from torweyl.linalg import feasibility
from torweyl.models import action


@dataclasses.dataclass(frozen=True)
class DependentTorusWeights:
  """Integer relation `sum_i relation[i] * eta_{r + i} = 0`, not all zero."""
  relation: Tuple[int, ...]

  def to_dict(self) -> Dict[str, Any]:
    return {"kind": "DependentTorusWeights", "relation": list(self.relation)}


@dataclasses.dataclass(frozen=True)
class FixedCoordinate:
  """Coordinate `index` is fixed by the identity component of the stabilizer.

  Attributes:
    index: The affine coordinate with zero restricted character.
    torsion_order: Order of the character by which the finite group of
      components scales that coordinate.
  """
  index: int
  torsion_order: int

  def to_dict(self) -> Dict[str, Any]:
    return {
        "kind": "FixedCoordinate",
        "index": self.index,
        "torsion_order": self.torsion_order
    }


Obstruction = Union[DependentTorusWeights, FixedCoordinate]


def obstruction_from_dict(data: Dict[str, Any]) -> Obstruction:
  """Inverse of the obstructions' `to_dict`."""
  kind = data.get("kind")
  if kind == "DependentTorusWeights":
    return DependentTorusWeights(utils.int_vector(data["relation"]))
  if kind == "FixedCoordinate":
    return FixedCoordinate(int(data["index"]), int(data["torsion_order"]))
  raise errors.TorWeylError(f"Unknown obstruction kind {kind!r}.")


@dataclasses.dataclass(frozen=True)
class AnalysisReport:
  """Verdicts, dimensions and certificates for one action."""
  transitive: bool
  fixed_trivial: bool
  enough_fdm: bool
  invariants_trivial: bool
  gk_full: int
  gk_fiber: int
  faithful: bool
  flip_set: Optional[Tuple[int, ...]] = None
  positivity_witness: Optional[feasibility.RowSpaceWitness] = None
  obstruction: Optional[Obstruction] = None
  invariant_witness: Optional[Tuple[int, ...]] = None

  def to_dict(self) -> Dict[str, Any]:
    """JSON ready form; rationals are written as `p/q` strings."""
    witness = None
    if self.positivity_witness is not None:
      witness = {
          "beta": list(self.positivity_witness.beta),
          "y": [str(x) for x in self.positivity_witness.y],
      }
    return {
        "transitive": self.transitive,
        "fixed_trivial": self.fixed_trivial,
        "enough_fdm": self.enough_fdm,
        "invariants_trivial": self.invariants_trivial,
        "gk_full": self.gk_full,
        "gk_fiber": self.gk_fiber,
        "faithful": self.faithful,
        "flip_set": None if self.flip_set is None else list(self.flip_set),
        "positivity_witness": witness,
        "obstruction": (None if self.obstruction is None else
                        self.obstruction.to_dict()),
        "invariant_witness": (None if self.invariant_witness is None else
                              list(self.invariant_witness)),
    }

  @classmethod
  def from_dict(cls, data: Dict[str, Any]) -> "AnalysisReport":
    witness = data.get("positivity_witness")
    if witness is not None:
      witness = feasibility.RowSpaceWitness(
          utils.int_vector(witness["beta"]),
          feasibility.rat_vector(witness["y"]))
    obstruction = data.get("obstruction")
    if obstruction is not None:
      obstruction = obstruction_from_dict(obstruction)
    flip_set = data.get("flip_set")
    invariant = data.get("invariant_witness")
    return cls(
        transitive=bool(data["transitive"]),
        fixed_trivial=bool(data["fixed_trivial"]),
        enough_fdm=bool(data["enough_fdm"]),
        invariants_trivial=bool(data["invariants_trivial"]),
        gk_full=int(data["gk_full"]),
        gk_fiber=int(data["gk_fiber"]),
        faithful=bool(data["faithful"]),
        flip_set=None if flip_set is None else utils.int_vector(flip_set),
        positivity_witness=witness,
        obstruction=obstruction,
        invariant_witness=(None if invariant is None else
                           utils.int_vector(invariant)),
    )


def invariants_trivial(
    a: action.TorusAction
) -> Tuple[bool, Optional[feasibility.RowSpaceWitness]]:
  """Decides whether the only invariant functions are the constants.

  This holds when the torus weights are independent and some vector of the
  saturated row lattice of `L` is positive on the affine coordinates and zero
  on the torus ones.

  Returns:
    A pair of the verdict and, when it is True, the positivity witness.
  """
  if not action.is_transitive_on_torus(a):
    return False, None
  witness = feasibility.positive_vector_in_rowspace(
      a.matrix, range(a.r), range(a.r, a.n))
  return witness is not None, witness


def flip_action(a: action.TorusAction,
                flip_set: Iterable[int]) -> action.TorusAction:
  """Negates the weights of the affine coordinates in `flip_set`.

  Raises:
    IndexOutOfRangeError: if `flip_set` is not a subset of `range(r)`.
  """
  flip_set = utils.check_index_set(flip_set, a.r)
  flipped = a.to_lists()
  for row in flipped:
    for j in flip_set:
      row[j] = -row[j]
  return action.TorusAction(flipped, a.r, a.s)


def find_flip_set(a: action.TorusAction) -> Optional[FrozenSet[int]]:
  """Finds coordinates whose flip leaves only constant invariants.

  Sweeps `t = 1, 2, ...` over `sum_i t^i b_i`, with `b_i` the rows of the
  upper-left normal form block, and keeps the first vector with no zero
  coordinate. Its negative coordinates form the flip set.

  Returns:
    The flip set, possibly empty, or None if some restricted character is
    zero.

  Raises:
    NotTransitiveError: if `a` is not transitive on the torus factor.
  """
  if not action.fixed_space_trivial(a):
    return None
  rows = [list(row) for row in a.normal_form.l1]
  if a.r == 0:
    return frozenset()
  for t in itertools.count(1):
    beta = [
        sum(t**i * row[j] for i, row in enumerate(rows)) for j in range(a.r)
    ]
    if all(x != 0 for x in beta):
      flip_set = frozenset(j for j, x in enumerate(beta) if x < 0)
      logging.info("Flip set %s found at t=%d.", sorted(flip_set), t)
      return flip_set
  return None  # Unreachable, the sweep above always terminates.


def nonconstant_invariant(a: action.TorusAction) -> Optional[Tuple[int, ...]]:
  """Exponent of a nonconstant invariant Laurent monomial in the torus part.

  Returns:
    A nonzero exponent vector, zero on the affine coordinates, in the kernel
    of `L`; None when the torus weights are independent.
  """
  relations = exactlin.kernel_basis(a.torus_block)
  if not relations:
    return None
  return (0,) * a.r + relations[0]


def torsion_order(a: action.TorusAction, j: int) -> int:
  """Order of the character by which the component group scales `Q_j`."""
  form = a.normal_form
  gamma = [int(x) for x in form.l2[:, j]]
  orders = [d // math.gcd(g, d) for g, d in zip(gamma, form.d)]
  return math.lcm(*orders) if orders else 1


def gk_dimensions(a: action.TorusAction) -> Tuple[int, int]:
  """Gelfand-Kirillov dimensions of the invariant ring and of the fiber.

  Returns:
    The pair `(2n - m, 2(n - m))`.
  """
  if not action.is_faithful(a):
    logging.warning(
        "%r is not faithful; the dimension 2n - m assumes a faithful action.",
        a)
  return 2 * a.n - a.m, 2 * (a.n - a.m)


def analyze(a: action.TorusAction) -> AnalysisReport:
  """Runs every decision procedure and cross-checks them.

  Raises:
    InternalConsistencyError: if two independent paths disagree.
  """
  transitive = action.is_transitive_on_torus(a)
  trivial, witness = invariants_trivial(a)
  gk_full, gk_fiber = gk_dimensions(a)
  flip_set = None
  obstruction = None
  if transitive:
    data = action.slice_data(a)
    zero_rho = [j for j, rho in enumerate(data.rho) if not any(rho)]
    fixed = not zero_rho
    if fixed:
      flip_set = find_flip_set(a)
      flipped_trivial, _ = invariants_trivial(flip_action(a, flip_set))
      if not flipped_trivial:
        raise errors.InternalConsistencyError(
            f"Flip set {sorted(flip_set)} of {a!r} leaves nonconstant "
            f"invariants.")
    else:
      obstruction = FixedCoordinate(zero_rho[0], torsion_order(a, zero_rho[0]))
  else:
    fixed = False
    obstruction = DependentTorusWeights(
        exactlin.kernel_basis(a.torus_block)[0])
  enough = transitive and fixed

  if trivial and not fixed:
    raise errors.InternalConsistencyError(
        f"{a!r} has only constant invariants but a fixed coordinate.")
  if a.s == 0 and enough != action.no_zero_weight(a):
    raise errors.InternalConsistencyError(
        f"Verdict for {a!r} disagrees with the zero weight test.")

  report = AnalysisReport(
      transitive=transitive,
      fixed_trivial=fixed,
      enough_fdm=enough,
      invariants_trivial=trivial,
      gk_full=gk_full,
      gk_fiber=gk_fiber,
      faithful=action.is_faithful(a),
      flip_set=None if flip_set is None else tuple(sorted(flip_set)),
      positivity_witness=witness,
      obstruction=obstruction,
      invariant_witness=nonconstant_invariant(a),
  )
  logging.info("Analysis of %r: enough_fdm=%s.", a, enough)
  return report


def check_finite_dimensional(
    a: action.TorusAction) -> feasibility.RowSpaceWitness:
  """Returns the positivity witness, confirming weight spaces are finite.

  Raises:
    NotFiniteDimensionalError: if `a` has nonconstant invariants.
  """
  trivial, witness = invariants_trivial(a)
  if not trivial:
    raise errors.NotFiniteDimensionalError(
        f"{a!r} has nonconstant invariants, so weight spaces may be infinite.")
  return witness


def grading(witness: feasibility.RowSpaceWitness,
            chi) -> sympy.Rational:
  """Value `<y, chi>` of the grading functional on a raw character."""
  return sum((y * c for y, c in zip(witness.y, utils.int_vector(chi))),
             sympy.Integer(0))
