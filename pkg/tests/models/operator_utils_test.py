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
"""Tests for torweyl.models.operator_utils"""

from absl.testing import absltest
from absl.testing import parameterized
import sympy

from torweyl import errors
from torweyl.models import operator
from torweyl.models import operator_utils
from tests import test_util


class TokenizeTest(absltest.TestCase):
  """Tests the tokenizer."""

  def test_kinds(self):
    """Whitespace is skipped and every token is classified."""
    actual = [t.kind for t in operator_utils.tokenize(" Pi(0) ^ 2")]
    self.assertEqual(actual,
                     ["name", "lpar", "number", "rpar", "pow", "number"])
    tokens = list(operator_utils.tokenize("u[1,-2]"))
    self.assertEqual(tokens[0], operator_utils.Token("name", "u", 0))
    self.assertEqual(tokens[4].kind, "minus")

  def test_bad_character(self):
    """Unknown characters are reported with their position."""
    with self.assertRaisesRegex(errors.OperatorSyntaxError, "position 5"):
      list(operator_utils.tokenize("Q(0) # 1"))


class ParseTest(parameterized.TestCase):
  """Tests parse_operator."""

  def test_weyl_relation(self):
    """Factors multiply left to right, so P Q - Q P is one."""
    actual = operator_utils.parse_operator("P(0)*Q(0) - Q(0)*P(0)", 1, 0)
    self.assertEqual(actual, operator.identity(1, 0))

  def test_pi_power(self):
    """Powers of Euler operators become polynomial coefficients."""
    pi = operator.pi_symbols(1)
    actual = operator_utils.parse_operator("Pi(0)^2", 1, 0)
    self.assertEqual(actual.terms, {(0,): operator.as_poly(pi[0]**2, 1)})

  def test_rational_and_u(self):
    """Rational scalars and graded basis operators."""
    actual = operator_utils.parse_operator("1/2 * u[1,-1]", 2, 0)
    expected = operator.u_op((1, -1), 2).scale(sympy.Rational(1, 2))
    self.assertEqual(actual, expected)

  def test_signs(self):
    """Leading and inner signs."""
    self.assertEqual(
        operator_utils.parse_operator("- Q(0)", 1, 0),
        -operator.q_op(0, 1, 0))
    self.assertEqual(
        operator_utils.parse_operator("+Q(0) - Q(0)", 1, 0),
        operator.zero(1, 0))

  def test_torus_inverse(self):
    """Negative powers of torus coordinates are allowed."""
    actual = operator_utils.parse_operator("2*Q(1)^-1", 1, 1)
    self.assertEqual(actual, operator.u_op((0, -1), 1).scale(2))
    self.assertEqual(
        operator_utils.parse_operator("P(1)", 1, 1), operator.p_op(1, 1, 1))

  @parameterized.parameters([
      {"text": "", "error": errors.OperatorSyntaxError},
      {"text": "Q(0", "error": errors.OperatorSyntaxError},
      {"text": "Q(0) Q(0)", "error": errors.OperatorSyntaxError},
      {"text": "u[1]", "error": errors.OperatorSyntaxError},
      {"text": "Pi(0)^-1", "error": errors.OperatorSyntaxError},
      {"text": "1/0", "error": errors.OperatorSyntaxError},
      {"text": "x", "error": errors.OperatorSyntaxError},
      {"text": "*Q(0)", "error": errors.OperatorSyntaxError},
      {"text": "Q(3)", "error": errors.IndexOutOfRangeError},
      {"text": "Q(0)^-1", "error": errors.ShapeMismatchError},
  ])
  def test_invalid(self, text, error):
    """Malformed text is rejected with a precise error."""
    with self.assertRaises(error):
      operator_utils.parse_operator(text, 1, 1)


class FormatTest(absltest.TestCase):
  """Tests format_operator."""

  def test_explicit(self):
    """Canonical renderings of small operators."""
    self.assertEqual(operator_utils.format_operator(operator.zero(1, 0)), "0")
    self.assertEqual(
        operator_utils.format_operator(operator.u_op((1, -1), 2)),
        "1 * u[1,-1]")
    self.assertEqual(
        operator_utils.format_operator(
            operator_utils.parse_operator("Q(0) - P(0)", 1, 0)),
        "-1 * u[-1] + 1 * u[1]")
    self.assertEqual(
        operator_utils.format_operator(
            operator_utils.parse_operator("Pi(0)^2", 1, 0)),
        "1 * Pi(0)^2 * u[0]")
    self.assertEqual(
        operator_utils.format_operator(
            operator.u_op((1, -1), 2).scale(sympy.Rational(1, 2))),
        "1/2 * u[1,-1]")
    self.assertEqual(operator_utils.format_degree((0, -3)), "u[0,-3]")

  def test_parse_inverts_format(self):
    """Formatted random operators parse back to themselves."""
    for seed in range(5):
      op = test_util.random_operator(2, 1, seed=seed)
      text = operator_utils.format_operator(op)
      self.assertEqual(operator_utils.parse_operator(text, 2, 1), op, msg=text)


if __name__ == "__main__":
  print("Running operator_utils_test.py ...")
  absltest.main()
