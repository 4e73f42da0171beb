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
"""Tests for torweyl.utils"""

import os
from unittest import mock

from absl.testing import absltest
from absl.testing import parameterized

from torweyl import errors
from torweyl import utils


class MaxBoxTest(parameterized.TestCase):
  """Tests the enumeration cap."""

  def test_default(self):
    """Without the variable the default cap applies."""
    with mock.patch.dict(os.environ, clear=True):
      self.assertEqual(utils.max_box_points(), utils.DEFAULT_MAX_BOX)

  def test_override(self):
    """The variable is read on every call."""
    with mock.patch.dict(os.environ, {utils.MAX_BOX_ENV: "17"}):
      self.assertEqual(utils.max_box_points(), 17)
      self.assertEqual(utils.check_box(17), 17)
      with self.assertRaises(errors.BoxTooLargeError):
        utils.check_box(18)

  @parameterized.parameters([{"raw": "abc"}, {"raw": "0"}, {"raw": "-3"}])
  def test_invalid(self, raw):
    """Malformed caps are input errors."""
    with mock.patch.dict(os.environ, {utils.MAX_BOX_ENV: raw}):
      with self.assertRaises(errors.TorWeylError):
        utils.max_box_points()


class CheckTest(parameterized.TestCase):
  """Tests the validation helpers."""

  def test_check_bound(self):
    """Nonnegative integers pass through."""
    self.assertEqual(utils.check_bound(0), 0)
    self.assertEqual(utils.check_bound(4), 4)
    with self.assertRaises(ValueError):
      utils.check_bound(-1)
    with self.assertRaises(TypeError):
      utils.check_bound(1.5)
    with self.assertRaises(TypeError):
      utils.check_bound(True)

  def test_int_vector(self):
    """Integral values become Python integers."""
    self.assertEqual(utils.int_vector([1, 2.0, -3]), (1, 2, -3))
    with self.assertRaises(TypeError):
      utils.int_vector([1, 0.5])

  def test_check_index_set(self):
    """Indices must lie in range."""
    self.assertEqual(utils.check_index_set([2, 0, 2], 3), frozenset({0, 2}))
    with self.assertRaises(errors.IndexOutOfRangeError):
      utils.check_index_set([3], 3)
    with self.assertRaises(errors.IndexOutOfRangeError):
      utils.check_index_set([-1], 3)


class ErrorsTest(absltest.TestCase):
  """Tests the exception hierarchy."""

  def test_input_errors_are_value_errors(self):
    """Every input error can be caught as a ValueError."""
    for cls in (errors.ShapeMismatchError, errors.NotTransitiveError,
                errors.BoxTooLargeError, errors.OperatorSyntaxError):
      self.assertTrue(issubclass(cls, errors.TorWeylError))
      self.assertTrue(issubclass(cls, ValueError))

  def test_consistency_error_is_not_an_input_error(self):
    """Cross-check failures are kept apart from bad input."""
    self.assertFalse(
        issubclass(errors.InternalConsistencyError, errors.TorWeylError))
    self.assertTrue(issubclass(errors.InternalConsistencyError, RuntimeError))


if __name__ == "__main__":
  print("Running utils_test.py ...")
  absltest.main()
