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
"""Tests for tests.test_util"""

from absl.testing import absltest
from absl.testing import parameterized

from torweyl.inference import decide
from torweyl.linalg import exactlin
from torweyl.models import action
from torweyl.models import operator
from tests import test_util


class RandomMatrixTest(parameterized.TestCase):
  """Tests the random matrix and action generators."""

  def test_random_int_matrix(self):
    """Confirms shape, range and reproducibility."""
    m = test_util.random_int_matrix(3, 4, low=-1, high=1, seed=5)
    self.assertEqual(m.shape, (3, 4))
    self.assertTrue(all(-1 <= x <= 1 for x in m.flat))
    self.assertEqual(
        exactlin.to_lists(m),
        exactlin.to_lists(test_util.random_int_matrix(3, 4, -1, 1, seed=5)))

  @parameterized.parameters([{"size": 1}, {"size": 2}, {"size": 4}])
  def test_random_unimodular_matrix(self, size):
    """Confirms the determinant is a unit."""
    for seed in range(5):
      u = test_util.random_unimodular_matrix(size, seed=seed)
      self.assertEqual(abs(exactlin.determinant(u)), 1)

  @parameterized.parameters([
      {"m": 1, "r": 2, "s": 0},
      {"m": 2, "r": 2, "s": 1},
      {"m": 3, "r": 1, "s": 2},
      {"m": 2, "r": 0, "s": 2},
  ])
  def test_random_transitive_action(self, m, r, s):
    """Confirms the torus block has full rank."""
    for seed in range(4):
      a = test_util.random_transitive_action(m, r, s, seed=seed)
      self.assertEqual((a.m, a.r, a.s), (m, r, s))
      self.assertTrue(action.is_transitive_on_torus(a))

  @parameterized.parameters([
      {"m": 1, "r": 2, "s": 0},
      {"m": 2, "r": 2, "s": 1},
      {"m": 2, "r": 3, "s": 1},
  ])
  def test_random_positive_action(self, m, r, s):
    """Confirms the generated actions only have constant invariants."""
    for seed in range(4):
      a = test_util.random_positive_action(m, r, s, seed=seed)
      self.assertEqual(a.m, m + 1)
      trivial, _ = decide.invariants_trivial(a)
      self.assertTrue(trivial)

  def test_transitive_needs_enough_rows(self):
    """Confirms the generator rejects s > m."""
    with self.assertRaises(ValueError):
      test_util.random_transitive_action(1, 0, 2)


class BruteForceTest(absltest.TestCase):
  """Tests the enumeration oracles."""

  def test_brute_force_weight_space(self):
    """Counts degree two monomials in two variables."""
    a = test_util.get_action(test_util.SCALAR)
    actual = test_util.brute_force_weight_space(a, (2,), 3)
    self.assertEqual(actual, [(0, 2), (1, 1), (2, 0)])

  def test_brute_force_with_torus(self):
    """The torus exponent is forced by the second row."""
    a = test_util.get_action(test_util.GK4)
    actual = test_util.brute_force_weight_space(a, (1, -2), 2)
    self.assertEqual(actual, [(0, 1, -2), (1, 0, -2)])

  def test_vector_in_lattice(self):
    """Membership needs integer coefficients."""
    basis = [(2, 0), (0, 3)]
    self.assertTrue(test_util.vector_in_lattice(basis, (4, -3)))
    self.assertFalse(test_util.vector_in_lattice(basis, (1, 0)))
    self.assertFalse(test_util.vector_in_lattice([(1, 1)], (1, 0)))
    self.assertTrue(test_util.vector_in_lattice([], (0, 0)))
    self.assertFalse(test_util.vector_in_lattice([], (0, 1)))


class OperatorGeneratorTest(absltest.TestCase):
  """Tests the random operator helpers."""

  def test_random_operator(self):
    """Confirms degrees stay within the requested range."""
    op = test_util.random_operator(2, 1, num_terms=4, max_degree=1, seed=3)
    self.assertEqual((op.r, op.s), (2, 1))
    for alpha in op.degrees:
      self.assertTrue(all(-1 <= x <= 1 for x in alpha))

  def test_random_monomial(self):
    """Confirms affine exponents are nonnegative."""
    for seed in range(5):
      mono = test_util.random_monomial(2, 2, max_exponent=3, seed=seed)
      self.assertTrue(all(x >= 0 for x in mono.exponents[:2]))
      self.assertTrue(all(-3 <= x <= 3 for x in mono.exponents))

  def test_apply_to_sum(self):
    """Q applied to Q^0 + 2 Q^1 gives Q^1 + 2 Q^2."""
    q = operator.q_op(0, 1, 0)
    actual = test_util.apply_to_sum(q, {(0,): 1, (1,): 2})
    self.assertEqual(actual, {(1,): 1, (2,): 2})


if __name__ == "__main__":
  print("Running test_util_test.py ...")
  absltest.main()
