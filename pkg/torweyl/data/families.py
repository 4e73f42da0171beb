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
"""Families of actions whose invariant operators have many simple modules."""

import abc
from typing import Dict, List, Optional, Sequence

from torweyl import errors
from torweyl import utils
from torweyl.models import action


class ActionFamily(abc.ABC):
  """Interface for named families of torus actions."""

  @property
  @abc.abstractmethod
  def name(self) -> str:
    """Name used on the command line."""

  @abc.abstractmethod
  def generate(self, n: Optional[int] = None) -> List[action.TorusAction]:
    """Returns the members of the family on `n` coordinates.

    Args:
      n: Number of coordinates, or None for the smallest member.

    Raises:
      TorWeylError: if the family has no member on `n` coordinates.
    """
    raise NotImplementedError()


class OddFamily(ActionFamily):
  """One dimensional torus scaling every affine coordinate.

  The invariant operators have Gelfand-Kirillov dimension `2n - 1`.
  """

  def __init__(self, weights: Optional[Sequence[int]] = None):
    """Initializes an OddFamily.

    Args:
      weights: Nonzero weights `b_1, ..., b_n`; all ones when None, in which
        case the torus acts by scalars.
    """
    if weights is not None:
      weights = utils.int_vector(weights)
      if any(b == 0 for b in weights):
        raise errors.TorWeylError(f"Weights {weights} must all be nonzero.")
    self._weights = weights

  @property
  def name(self):
    return "odd"

  def generate(self, n=None):
    if self._weights is not None:
      if n is not None and n != len(self._weights):
        raise errors.ShapeMismatchError(
            f"{len(self._weights)} weights given for n={n}.")
      weights = list(self._weights)
    else:
      weights = [1] * (2 if n is None else n)
    if len(weights) < 2:
      raise errors.TorWeylError("The odd family needs n >= 2.")
    return [action.TorusAction([weights], len(weights), 0)]


class EvenFamily(ActionFamily):
  """Two dimensional torus with interleaved weights `e_1, e_2, e_1, ...`.

  Both the interleaved pattern and the one with its last two columns swapped
  are generated. The invariant operators have dimension `2n - 2`.
  """

  @property
  def name(self):
    return "even"

  def generate(self, n=None):
    n = 4 if n is None else n
    if n < 4:
      raise errors.TorWeylError("The even family needs n >= 4.")
    first = [[1 - i % 2 for i in range(n)], [i % 2 for i in range(n)]]
    second = [row[:-2] + [row[-1], row[-2]] for row in first]
    return [
        action.TorusAction(first, n, 0),
        action.TorusAction(second, n, 0),
    ]


class Gk4Family(ActionFamily):
  """Rank two torus on two affine and one torus coordinate, dimension 4."""

  @property
  def name(self):
    return "gk4"

  def generate(self, n=None):
    if n not in (None, 3):
      raise errors.TorWeylError("The gk4 family only exists for n = 3.")
    return [action.TorusAction([[1, 1, 0], [0, 0, 1]], 2, 1)]


FAMILIES: Dict[str, ActionFamily] = {
    family.name: family for family in (OddFamily(), EvenFamily(), Gk4Family())
}


def get_family(name: str) -> ActionFamily:
  """Looks up a family by its command line name."""
  try:
    return FAMILIES[name]
  except KeyError as e:
    raise errors.TorWeylError(
        f"Unknown family {name!r}; choose from {sorted(FAMILIES)}.") from e
