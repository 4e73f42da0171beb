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
"""Utilities used across more than one file."""

import os
from typing import FrozenSet, Iterable, Tuple

from torweyl import errors

MAX_BOX_ENV = "TORWEYL_MAX_BOX"
DEFAULT_MAX_BOX = 10**6


def max_box_points() -> int:
  """Returns the cap on lattice points visited by a single enumeration.

  The cap is read from the `TORWEYL_MAX_BOX` environment variable on every
  call, so tests and the CLI may change it at runtime.

  Raises:
    TorWeylError: if the variable is set but is not a positive integer.
  """
  raw = os.environ.get(MAX_BOX_ENV)
  if raw is None or raw.strip() == "":
    return DEFAULT_MAX_BOX
  try:
    value = int(raw)
  except ValueError as e:
    raise errors.TorWeylError(
        f"`{MAX_BOX_ENV}` must be an integer, got {raw!r}.") from e
  if value <= 0:
    raise errors.TorWeylError(f"`{MAX_BOX_ENV}` must be positive.")
  return value


def check_box(num_points: int) -> int:
  """Confirms an enumeration of `num_points` lattice points is allowed."""
  cap = max_box_points()
  if num_points > cap:
    raise errors.BoxTooLargeError(
        f"Enumeration of {num_points} lattice points exceeds the cap of {cap}; "
        f"raise `{MAX_BOX_ENV}` to allow it.")
  return num_points


def check_bound(bound: int) -> int:
  """Confirms the input is a valid nonnegative box bound."""
  if isinstance(bound, bool) or not isinstance(bound, int):
    raise TypeError("`bound` must be an integer.")
  if bound < 0:
    raise ValueError("`bound` must be nonnegative.")
  return bound


def int_vector(values: Iterable[int]) -> Tuple[int, ...]:
  """Returns `values` as a tuple of Python integers.

  Raises:
    TypeError: if an entry is not integral.
  """
  result = []
  for v in values:
    if int(v) != v:
      raise TypeError(f"Expected integer entries, got {v!r}.")
    result.append(int(v))
  return tuple(result)


def check_index_set(indices: Iterable[int], upper: int) -> FrozenSet[int]:
  """Confirms every index lies in `range(upper)` and returns them as a set."""
  index_set = frozenset(int(i) for i in indices)
  bad = sorted(i for i in index_set if not 0 <= i < upper)
  if bad:
    raise errors.IndexOutOfRangeError(
        f"Indices {bad} are outside the range [0, {upper}).")
  return index_set
