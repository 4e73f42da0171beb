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
"""Tests for torweyl.models.operator"""

import itertools

from absl.testing import absltest
from absl.testing import parameterized
import sympy

from torweyl import errors
from torweyl.models import operator
from tests import test_util


def poly(expr, n):
  return operator.as_poly(expr, n)


class MonomialTest(absltest.TestCase):
  """Tests Monomial and ScaledMonomial."""

  def test_monomial(self):
    """Affine exponents must be nonnegative."""
    mono = operator.Monomial((2, -3), 1)
    self.assertEqual(mono.exponents, (2, -3))
    self.assertEqual(mono.n, 2)
    with self.assertRaises(errors.ShapeMismatchError):
      operator.Monomial((-1, 0), 1)
    with self.assertRaises(errors.ShapeMismatchError):
      operator.Monomial((1,), 2)

  def test_scaled_monomial(self):
    """A zero coefficient drops the monomial."""
    mono = operator.Monomial((1,), 1)
    zero = operator.ScaledMonomial(0, mono)
    self.assertTrue(zero.is_zero)
    self.assertIsNone(zero.mono)
    half = operator.ScaledMonomial(sympy.Rational(1, 2), mono)
    self.assertFalse(half.is_zero)
    with self.assertRaises(ValueError):
      operator.ScaledMonomial(3, None)


class OperatorElementTest(parameterized.TestCase):
  """Tests the OperatorElement class."""

  def test_init(self):
    """Zero coefficients are dropped and terms are sorted."""
    pi = operator.pi_symbols(2)
    op = operator.OperatorElement({(1, 0): pi[0], (0, 0): 0, (-1, 2): 3}, 1, 1)
    self.assertEqual(op.degrees, ((-1, 2), (1, 0)))
    self.assertEqual(op.coefficient((1, 0)), poly(pi[0], 2))
    self.assertTrue(op.coefficient((5, 5)).is_zero)
    self.assertEqual((op.r, op.s, op.n), (1, 1, 2))
    self.assertTrue(operator.zero(1, 1).is_zero)

  def test_invalid(self):
    """Degrees must have length n and counts must be positive."""
    with self.assertRaises(errors.ShapeMismatchError):
      operator.OperatorElement({(1,): 1}, 1, 1)
    with self.assertRaises(errors.EmptyActionError):
      operator.OperatorElement({}, 0, 0)

  def test_arithmetic(self):
    """Addition, negation and scaling work termwise."""
    x = operator.u_op((1, 0), 2)
    y = operator.u_op((0, 1), 2)
    total = x + y - x
    self.assertEqual(total, y)
    self.assertTrue((x - x).is_zero)
    self.assertEqual((-x).coefficient((1, 0)), poly(-1, 2))
    self.assertEqual((x * 3).coefficient((1, 0)), poly(3, 2))
    self.assertEqual((3 * x).coefficient((1, 0)), poly(3, 2))

  def test_incompatible(self):
    """Operators on different splits do not combine."""
    with self.assertRaises(errors.ShapeMismatchError):
      _ = operator.identity(2, 0) + operator.identity(1, 1)
    with self.assertRaises(errors.ShapeMismatchError):
      operator.multiply(operator.identity(2, 0), operator.identity(1, 1))

  def test_unhashable(self):
    """Operators compare by value and are not hashable."""
    with self.assertRaises(TypeError):
      hash(operator.identity(1, 0))


class GeneratorsTest(absltest.TestCase):
  """Tests the generator constructors."""

  def test_u_op(self):
    """The graded basis operator has a single unit term."""
    self.assertEqual(operator.u_op((0, 0), 2), operator.identity(2, 0))
    op = operator.u_op((1, -1), 2)
    self.assertEqual(op.terms, {(1, -1): poly(1, 2)})
    last = operator.u_op((0, 0, 1), 2)
    self.assertEqual((last.r, last.s), (2, 1))

  def test_q_and_p(self):
    """Affine powers are plain degrees, torus derivatives carry Pi."""
    self.assertEqual(operator.q_op(0, 1, 0, 2), operator.u_op((2,), 1))
    self.assertEqual(operator.p_op(0, 1, 0, 2), operator.u_op((-2,), 1))
    pi = operator.pi_symbols(1)
    self.assertEqual(
        operator.p_op(0, 0, 1).terms, {(-1,): poly(pi[0] + 1, 1)})
    self.assertEqual(
        operator.p_op(0, 0, 1, 2).terms,
        {(-2,): poly((pi[0] + 1) * (pi[0] + 2), 1)})
    self.assertEqual(operator.q_op(0, 0, 1, -1), operator.u_op((-1,), 0))

  def test_invalid_generators(self):
    """Affine coordinates have no inverse and indices must exist."""
    with self.assertRaises(errors.ShapeMismatchError):
      operator.q_op(0, 1, 0, -1)
    with self.assertRaises(ValueError):
      operator.p_op(0, 1, 0, -1)
    with self.assertRaises(errors.IndexOutOfRangeError):
      operator.pi_op(2, 1, 1)


class MultiplyTest(parameterized.TestCase):
  """Tests multiply and commutator."""

  def test_qp_and_pq(self):
    """Q P is Pi and P Q is Pi + 1."""
    pi = operator.pi_symbols(1)
    q = operator.u_op((1,), 1)
    p = operator.u_op((-1,), 1)
    self.assertEqual(operator.multiply(q, p).terms, {(0,): poly(pi[0], 1)})
    self.assertEqual(
        operator.multiply(p, q).terms, {(0,): poly(pi[0] + 1, 1)})

  @parameterized.parameters([
      {"a": 2, "b": -2, "expected": "x*(x - 1)"},
      {"a": -2, "b": 2, "expected": "(x + 1)*(x + 2)"},
      {"a": 2, "b": -1, "expected": "x - 1"},
      {"a": -2, "b": 1, "expected": "x + 2"},
      {"a": 3, "b": 1, "expected": "1"},
  ])
  def test_merge(self, a, b, expected):
    """Hand reduced products of powers of Q and P."""
    pi = operator.pi_symbols(1)
    x = sympy.Symbol("x")
    expected = sympy.sympify(expected).xreplace({x: pi[0]})
    actual = operator.multiply(operator.u_op((a,), 1), operator.u_op((b,), 1))
    self.assertEqual(actual.terms, {(a + b,): poly(expected, 1)})

  def test_identity(self):
    """The identity is neutral on both sides."""
    x = test_util.random_operator(1, 1, seed=4)
    one = operator.identity(1, 1)
    self.assertEqual(operator.multiply(x, one), x)
    self.assertEqual(operator.multiply(one, x), x)
    self.assertEqual(x * one, x)

  def test_torus_generators(self):
    """Torus degrees add freely and P, Q satisfy the Weyl relation."""
    self.assertEqual(
        operator.multiply(
            operator.q_op(0, 0, 1, -1), operator.q_op(0, 0, 1, 1)),
        operator.identity(0, 1))
    for r, s in ((1, 0), (0, 1)):
      p = operator.p_op(0, r, s)
      q = operator.q_op(0, r, s)
      self.assertEqual(operator.commutator(p, q), operator.identity(r, s))

  @parameterized.parameters([(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)])
  def test_commutation_law(self, r, s):
    """Pi_i u_alpha - u_alpha Pi_i is alpha_i u_alpha on a grid."""
    n = r + s
    for alpha in itertools.product(range(-3, 4), repeat=n):
      u = operator.u_op(alpha, r)
      for i in range(n):
        pi = operator.pi_op(i, r, s)
        self.assertEqual(
            operator.commutator(pi, u), u.scale(alpha[i]), msg=f"{alpha}, {i}")

  def test_associative(self):
    """Products of random operators associate."""
    for seed in range(6):
      x = test_util.random_operator(1, 1, seed=seed)
      y = test_util.random_operator(1, 1, seed=seed + 100)
      z = test_util.random_operator(1, 1, seed=seed + 200)
      self.assertEqual(
          operator.multiply(operator.multiply(x, y), z),
          operator.multiply(x, operator.multiply(y, z)))

  def test_shift(self):
    """shift substitutes Pi - alpha."""
    pi = operator.pi_symbols(2)
    actual = operator.shift(poly(pi[0] * pi[1], 2), (1, -2))
    self.assertEqual(actual, poly((pi[0] - 1) * (pi[1] + 2), 2))


if __name__ == "__main__":
  print("Running operator_test.py ...")
  absltest.main()
