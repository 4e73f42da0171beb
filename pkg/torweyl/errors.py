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
"""Exceptions raised by the torweyl package."""


class TorWeylError(ValueError):
  """Base class for invalid inputs and failed preconditions."""


class ShapeMismatchError(TorWeylError):
  """Matrix or vector dimensions do not agree with the action."""


class EmptyActionError(TorWeylError):
  """The action has no coordinates or no torus directions."""


class IndexOutOfRangeError(TorWeylError):
  """A coordinate index lies outside the allowed range."""


class DependentTorusWeightsError(TorWeylError):
  """The weights of the torus factor are linearly dependent."""


class TorusWeightsIndependentError(TorWeylError):
  """The weights of the torus factor are linearly independent."""


class NotTransitiveError(TorWeylError):
  """The group does not act transitively on the torus factor."""


class NotFiniteDimensionalError(TorWeylError):
  """The invariant ring is not trivial, so weight spaces may be infinite."""


class NotInT1Error(TorWeylError):
  """The exponent is not killed by the first block of the normal form."""


class NotInT1PrimeError(TorWeylError):
  """The exponent fails the divisibility conditions of the torus block."""


class NotAFixedCoordinateError(TorWeylError):
  """The coordinate has a nonzero restricted character."""


class BoxTooLargeError(TorWeylError):
  """An enumeration would visit more lattice points than allowed."""


class OperatorSyntaxError(TorWeylError):
  """An operator expression could not be parsed."""


class InternalConsistencyError(RuntimeError):
  """Two independent computations of the same quantity disagree."""
