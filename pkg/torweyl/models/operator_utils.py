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
"""Text syntax for operators.

An operator is a sum of terms joined by `+` or `-`. Each term is a product of
factors joined by `*`, where a factor is one of

  * a rational number `p` or `p/q`,
  * `Pi(i)`, `Q(i)` or `P(i)`, optionally raised to an integer power with `^`,
  * a graded basis operator `u[a_0,...,a_{n-1}]`.

Indices are 0-based. Factors are multiplied left to right in the Weyl
algebra, so `P(0)*Q(0)` and `Q(0)*P(0)` differ.
"""

import re
from typing import Iterator, List, NamedTuple, Sequence

import sympy

from torweyl import errors
from torweyl.models import operator

_TOKENS = {
    "name": r"Pi|Q|P|u",
    "number": r"\d+",
    "lpar": r"\(",
    "rpar": r"\)",
    "lbrack": r"\[",
    "rbrack": r"\]",
    "comma": r",",
    "pow": r"\^",
    "mul": r"\*",
    "div": r"/",
    "plus": r"\+",
    "minus": r"-",
    "skip": r"\s+",
    "error": r".",
}
_REGEX = re.compile("|".join(f"(?P<{k}>{v})" for k, v in _TOKENS.items()))


class Token(NamedTuple):
  kind: str
  value: str
  position: int


def tokenize(text: str) -> Iterator[Token]:
  """Splits operator text into tokens, skipping whitespace."""
  for match in _REGEX.finditer(text):
    kind = str(match.lastgroup)
    if kind == "skip":
      continue
    if kind == "error":
      raise errors.OperatorSyntaxError(
          f"Unexpected character {match.group()!r} at position "
          f"{match.start()} in {text!r}.")
    yield Token(kind, match.group(), match.start())


class _Parser:
  """Recursive descent parser over the token list."""

  def __init__(self, text: str, r: int, s: int):
    self._text = text
    self._tokens: List[Token] = list(tokenize(text))
    self._pos = 0
    self._r = r
    self._s = s

  def _peek(self):
    return self._tokens[self._pos] if self._pos < len(self._tokens) else None

  def _fail(self, message: str):
    token = self._peek()
    where = token.position if token else len(self._text)
    raise errors.OperatorSyntaxError(
        f"{message} at position {where} in {self._text!r}.")

  def _expect(self, kind: str) -> Token:
    token = self._peek()
    if token is None or token.kind != kind:
      self._fail(f"Expected {kind}")
    self._pos += 1
    return token

  def _accept(self, kind: str) -> bool:
    token = self._peek()
    if token is not None and token.kind == kind:
      self._pos += 1
      return True
    return False

  def _signed_int(self) -> int:
    sign = -1 if self._accept("minus") else 1
    return sign * int(self._expect("number").value)

  def parse(self) -> operator.OperatorElement:
    if not self._tokens:
      self._fail("Empty operator")
    result = operator.zero(self._r, self._s)
    sign = -1 if self._accept("minus") else 1
    if sign == 1:
      self._accept("plus")
    while True:
      result = result + self._term().scale(sign)
      if self._accept("plus"):
        sign = 1
      elif self._accept("minus"):
        sign = -1
      else:
        break
    if self._peek() is not None:
      self._fail("Unexpected trailing input")
    return result

  def _term(self) -> operator.OperatorElement:
    result = self._factor()
    while self._accept("mul"):
      result = operator.multiply(result, self._factor())
    return result

  def _factor(self) -> operator.OperatorElement:
    token = self._peek()
    if token is None:
      self._fail("Expected a factor")
    if token.kind == "number":
      self._pos += 1
      value = sympy.Integer(int(token.value))
      if self._accept("div"):
        denominator = int(self._expect("number").value)
        if denominator == 0:
          self._fail("Zero denominator")
        value = sympy.Rational(int(token.value), denominator)
      return operator.identity(self._r, self._s).scale(value)
    if token.kind != "name":
      self._fail(f"Unexpected {token.value!r}")
    self._pos += 1
    n = self._r + self._s
    if token.value == "u":
      self._expect("lbrack")
      alpha = [self._signed_int()]
      while self._accept("comma"):
        alpha.append(self._signed_int())
      self._expect("rbrack")
      if len(alpha) != n:
        raise errors.OperatorSyntaxError(
            f"Degree {alpha} in {self._text!r} does not have length {n}.")
      return operator.u_op(alpha, self._r)
    self._expect("lpar")
    index = int(self._expect("number").value)
    self._expect("rpar")
    if index >= n:
      raise errors.IndexOutOfRangeError(
          f"Index {index} in {self._text!r} is outside [0, {n}).")
    power = self._signed_int() if self._accept("pow") else 1
    if token.value == "Q":
      return operator.q_op(index, self._r, self._s, power)
    if power < 0:
      self._fail(f"Negative power of {token.value}({index})")
    if token.value == "P":
      return operator.p_op(index, self._r, self._s, power)
    base = operator.pi_op(index, self._r, self._s)
    result = operator.identity(self._r, self._s)
    for _ in range(power):
      result = operator.multiply(result, base)
    return result


def parse_operator(text: str, r: int, s: int) -> operator.OperatorElement:
  """Parses operator text into its normal ordered form.

  Args:
    text: Operator expression, for example `1/2 * Pi(0)^2 * u[1,-1]`.
    r: Number of affine coordinates.
    s: Number of torus coordinates.

  Raises:
    OperatorSyntaxError: if the text is malformed.
    IndexOutOfRangeError: if a coordinate index is too large.
  """
  return _Parser(text, r, s).parse()


def _format_poly(poly: sympy.Poly) -> List[List[str]]:
  """Renders each monomial of `poly` as a list of `*`-joined factors."""
  gens = poly.gens
  pieces = []
  for monom, coeff in poly.terms():
    factors = []
    factors.append(str(poly.domain.to_sympy(coeff)))
    for gen, k in zip(gens, monom):
      if k:
        index = str(gen).split("_")[1]
        factors.append(f"Pi({index})" + (f"^{k}" if k > 1 else ""))
    pieces.append(factors)
  return pieces


def format_operator(op: operator.OperatorElement) -> str:
  """Renders an operator in the syntax read by `parse_operator`.

  The output is canonical: terms are ordered by degree and then by the
  coefficient monomial order of sympy.
  """
  if op.is_zero:
    return "0"
  terms = []
  for alpha, poly in op.terms.items():
    degree = format_degree(alpha)
    for factors in _format_poly(poly):
      terms.append(" * ".join(factors + [degree]))
  text = " + ".join(terms)
  return text.replace("+ -", "- ")


def format_degree(alpha: Sequence[int]) -> str:
  return "u[" + ",".join(str(int(a)) for a in alpha) + "]"
