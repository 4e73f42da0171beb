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
"""Tests for torweyl.data.families"""

from absl.testing import absltest
from absl.testing import parameterized

from torweyl import errors
from torweyl.data import families
from torweyl.inference import decide


class OddFamilyTest(parameterized.TestCase):
  """Tests the OddFamily class."""

  def test_default(self):
    """The scalar action on two coordinates."""
    actions = families.OddFamily().generate()
    self.assertLen(actions, 1)
    self.assertEqual(actions[0].to_lists(), [[1, 1]])
    self.assertEqual((actions[0].r, actions[0].s), (2, 0))

  def test_weights(self):
    """Custom weights give one row."""
    family = families.OddFamily((1, 2, 3))
    self.assertEqual(family.generate()[0].to_lists(), [[1, 2, 3]])
    self.assertEqual(family.generate(3)[0].to_lists(), [[1, 2, 3]])
    with self.assertRaises(errors.ShapeMismatchError):
      family.generate(4)

  def test_invalid(self):
    """Zero weights and single coordinates are rejected."""
    with self.assertRaises(errors.TorWeylError):
      families.OddFamily((1, 0))
    with self.assertRaises(errors.TorWeylError):
      families.OddFamily().generate(1)

  @parameterized.parameters([2, 3, 5])
  def test_dimension(self, n):
    """Enough modules of dimension 2n - 1."""
    report = decide.analyze(families.OddFamily().generate(n)[0])
    self.assertTrue(report.enough_fdm)
    self.assertEqual(report.gk_full, 2 * n - 1)


class EvenFamilyTest(parameterized.TestCase):
  """Tests the EvenFamily class."""

  def test_default(self):
    """Interleaved and swapped patterns on four coordinates."""
    actions = families.EvenFamily().generate()
    self.assertEqual(
        [a.to_lists() for a in actions],
        [[[1, 0, 1, 0], [0, 1, 0, 1]], [[1, 0, 0, 1], [0, 1, 1, 0]]])

  def test_five(self):
    """The last two columns are swapped."""
    actions = families.EvenFamily().generate(5)
    self.assertEqual(actions[0].to_lists(),
                     [[1, 0, 1, 0, 1], [0, 1, 0, 1, 0]])
    self.assertEqual(actions[1].to_lists(),
                     [[1, 0, 1, 1, 0], [0, 1, 0, 0, 1]])

  def test_too_small(self):
    """At least four coordinates are needed."""
    with self.assertRaises(errors.TorWeylError):
      families.EvenFamily().generate(3)

  @parameterized.parameters([4, 5, 6])
  def test_dimension(self, n):
    """Enough modules of dimension 2n - 2."""
    for a in families.EvenFamily().generate(n):
      report = decide.analyze(a)
      self.assertTrue(report.enough_fdm)
      self.assertEqual(report.gk_full, 2 * n - 2)


class Gk4FamilyTest(absltest.TestCase):
  """Tests the Gk4Family class."""

  def test_generate(self):
    """A single action on three coordinates."""
    a = families.Gk4Family().generate()[0]
    self.assertEqual(a.to_lists(), [[1, 1, 0], [0, 0, 1]])
    self.assertEqual(families.Gk4Family().generate(3), [a])
    with self.assertRaises(errors.TorWeylError):
      families.Gk4Family().generate(4)

  def test_dimension(self):
    """Enough modules of dimension four."""
    report = decide.analyze(families.Gk4Family().generate()[0])
    self.assertTrue(report.enough_fdm)
    self.assertEqual((report.gk_full, report.gk_fiber), (4, 2))


class GetFamilyTest(absltest.TestCase):
  """Tests get_family."""

  def test_lookup(self):
    """Families are found by name."""
    for name in ("odd", "even", "gk4"):
      self.assertEqual(families.get_family(name).name, name)
    with self.assertRaisesRegex(errors.TorWeylError, "Unknown family"):
      families.get_family("cubic")

  def test_abstract(self):
    """The interface cannot be instantiated."""
    with self.assertRaises(TypeError):
      families.ActionFamily()  # pylint: disable=abstract-class-instantiated


if __name__ == "__main__":
  print("Running families_test.py ...")
  absltest.main()
