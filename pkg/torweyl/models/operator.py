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
r"""Graded differential operators on $k^r \times (k^\times)^s$.

Every operator is kept in the normal ordered form $\sum_\alpha c_\alpha(\Pi)
u_\alpha$, where $\Pi_i = Q_i P_i$ are the Euler operators and $u_\alpha$ is
the product over coordinates of $Q_i^{\alpha_i}$ when $\alpha_i \geq 0$ and
of $P_i^{-\alpha_i}$ when $\alpha_i < 0$ and $i < r$. On the torus
coordinates $u_\alpha$ uses $Q_i^{\alpha_i}$ for either sign.
"""

import dataclasses
import functools
from typing import Dict, Mapping, Optional, Sequence, Tuple

import sympy

from torweyl import errors
from torweyl import utils

Degree = Tuple[int, ...]


@functools.lru_cache(maxsize=None)
def pi_symbols(n: int) -> Tuple[sympy.Symbol, ...]:
  """The commuting indeterminates standing for `Pi_0, ..., Pi_{n-1}`."""
  return tuple(sympy.Symbol(f"Pi_{i}") for i in range(n))


def as_poly(expr, n: int) -> sympy.Poly:
  """Returns `expr` as a polynomial over QQ in the first `n` Euler symbols."""
  if isinstance(expr, sympy.Poly):
    expr = expr.as_expr()
  return sympy.Poly(expr, *pi_symbols(n), domain=sympy.QQ)


def check_counts(r: int, s: int) -> Tuple[int, int]:
  """Confirms `r` and `s` describe at least one coordinate."""
  if r < 0 or s < 0 or r + s == 0:
    raise errors.EmptyActionError(
        f"Operators need at least one coordinate, got r={r}, s={s}.")
  return r, s


@dataclasses.dataclass(frozen=True)
class Monomial:
  """The Laurent monomial `Q^exponents`, nonnegative on the affine part."""
  exponents: Degree
  r: int

  def __post_init__(self):
    exponents = utils.int_vector(self.exponents)
    object.__setattr__(self, "exponents", exponents)
    if not 0 <= self.r <= len(exponents):
      raise errors.ShapeMismatchError(
          f"Cannot split {len(exponents)} exponents at r={self.r}.")
    if any(x < 0 for x in exponents[:self.r]):
      raise errors.ShapeMismatchError(
          f"Affine exponents must be nonnegative, got {exponents}.")

  @property
  def n(self) -> int:
    return len(self.exponents)


@dataclasses.dataclass(frozen=True)
class ScaledMonomial:
  """A rational multiple of a monomial; `mono` is None exactly when zero."""
  coeff: sympy.Rational
  mono: Optional[Monomial]

  def __post_init__(self):
    coeff = sympy.Rational(self.coeff)
    object.__setattr__(self, "coeff", coeff)
    if coeff == 0:
      object.__setattr__(self, "mono", None)
    elif self.mono is None:
      raise ValueError("A nonzero coefficient needs a monomial.")

  @property
  def is_zero(self) -> bool:
    return self.mono is None


class OperatorElement:
  """Finite sum of terms `c(Pi) u_alpha` with rational coefficients.

  Coefficient polynomials are `sympy.Poly`s over QQ in `Pi_0, ..., Pi_{n-1}`.
  Zero coefficients are never stored, so the zero operator has no terms.
  """

  def __init__(self, terms: Mapping[Sequence[int], object], r: int, s: int):
    """Initializes an OperatorElement.

    Args:
      terms: Map from degree vectors of length `r + s` to coefficients, each
        a `sympy.Poly` or any expression in `pi_symbols(r + s)`.
      r: Number of affine coordinates.
      s: Number of torus coordinates.
    """
    self._r, self._s = check_counts(r, s)
    n = r + s
    canonical: Dict[Degree, sympy.Poly] = {}
    for alpha, coeff in terms.items():
      alpha = utils.int_vector(alpha)
      if len(alpha) != n:
        raise errors.ShapeMismatchError(
            f"Degree {alpha} does not have length {n}.")
      poly = as_poly(coeff, n)
      if alpha in canonical:
        poly = canonical[alpha] + poly
      canonical[alpha] = poly
    self._terms = {
        alpha: poly for alpha, poly in sorted(canonical.items())
        if not poly.is_zero
    }

  @property
  def r(self) -> int:
    return self._r

  @property
  def s(self) -> int:
    return self._s

  @property
  def n(self) -> int:
    return self._r + self._s

  @property
  def terms(self) -> Dict[Degree, sympy.Poly]:
    """Copy of the degree to coefficient map, sorted by degree."""
    return dict(self._terms)

  @property
  def degrees(self) -> Tuple[Degree, ...]:
    return tuple(self._terms)

  @property
  def is_zero(self) -> bool:
    return not self._terms

  def coefficient(self, alpha: Sequence[int]) -> sympy.Poly:
    """The coefficient polynomial at degree `alpha`, zero if absent."""
    return self._terms.get(utils.int_vector(alpha), as_poly(0, self.n))

  def _check_compatible(self, other: "OperatorElement"):
    if (self._r, self._s) != (other.r, other.s):
      raise errors.ShapeMismatchError(
          f"Operators on (r={self._r}, s={self._s}) and "
          f"(r={other.r}, s={other.s}) do not combine.")

  def __add__(self, other):
    if not isinstance(other, OperatorElement):
      return NotImplemented
    self._check_compatible(other)
    terms = dict(self._terms)
    for alpha, poly in other.terms.items():
      terms[alpha] = terms[alpha] + poly if alpha in terms else poly
    return OperatorElement(terms, self._r, self._s)

  def __neg__(self):
    return self.scale(-1)

  def __sub__(self, other):
    if not isinstance(other, OperatorElement):
      return NotImplemented
    return self + (-other)

  def __mul__(self, other):
    if isinstance(other, OperatorElement):
      return multiply(self, other)
    return self.scale(other)

  def __rmul__(self, other):
    return self.scale(other)

  def scale(self, factor) -> "OperatorElement":
    """Multiplies every coefficient by a scalar or by a polynomial in Pi."""
    factor = as_poly(factor, self.n)
    return OperatorElement(
        {alpha: factor * poly for alpha, poly in self._terms.items()}, self._r,
        self._s)

  def __eq__(self, other):
    if not isinstance(other, OperatorElement):
      return NotImplemented
    return ((self._r, self._s) == (other.r, other.s) and
            self._terms == other.terms)

  __hash__ = None

  def __repr__(self):
    inner = ", ".join(
        f"{alpha}: {poly.as_expr()}" for alpha, poly in self._terms.items())
    return f"OperatorElement({{{inner}}}, r={self._r}, s={self._s})"


def zero(r: int, s: int) -> OperatorElement:
  return OperatorElement({}, r, s)


def identity(r: int, s: int) -> OperatorElement:
  return OperatorElement({(0,) * (r + s): 1}, r, s)


def u_op(alpha: Sequence[int], r: int) -> OperatorElement:
  """The graded basis operator `u_alpha` with coefficient one.

  Args:
    alpha: Degree vector of length `n`.
    r: Number of affine coordinates; the remaining `n - r` are torus ones.
  """
  alpha = utils.int_vector(alpha)
  return OperatorElement({alpha: 1}, r, len(alpha) - r)


def _unit(i: int, n: int, value: int = 1) -> Degree:
  if not 0 <= i < n:
    raise errors.IndexOutOfRangeError(f"Index {i} outside [0, {n}).")
  return tuple(value if j == i else 0 for j in range(n))


def pi_op(i: int, r: int, s: int) -> OperatorElement:
  """The Euler operator `Pi_i = Q_i P_i`."""
  n = r + s
  _unit(i, n)
  return OperatorElement({(0,) * n: pi_symbols(n)[i]}, r, s)


def q_op(i: int, r: int, s: int, power: int = 1) -> OperatorElement:
  """The power `Q_i^power`; negative powers only on torus coordinates."""
  if power < 0 and i < r:
    raise errors.ShapeMismatchError(
        f"Affine coordinate {i} has no inverse.")
  return OperatorElement({_unit(i, r + s, power): 1}, r, s)


def p_op(i: int, r: int, s: int, power: int = 1) -> OperatorElement:
  """The power `P_i^power` of the partial derivative in `Q_i`.

  On a torus coordinate `P_i = Q_i^{-1} Pi_i`, whose normal ordered form is
  `(Pi_i + 1) u_{-e_i}`.
  """
  if power < 0:
    raise ValueError("`power` must be nonnegative.")
  n = r + s
  if i < r:
    return OperatorElement({_unit(i, n, -power): 1}, r, s)
  single = OperatorElement({_unit(i, n, -1): pi_symbols(n)[i] + 1}, r, s)
  result = identity(r, s)
  for _ in range(power):
    result = multiply(result, single)
  return result


@functools.lru_cache(maxsize=None)
def _merge(a: int, b: int) -> sympy.Expr:
  """Polynomial `m(x)` with `u_a u_b = m(Pi) u_{a + b}` in one coordinate.

  Reduces one factor at a time with `Q P = Pi` and `P Q = Pi + 1`.
  """
  x = sympy.Symbol("x")
  if a >= 0 and b <= 0:
    result = sympy.Integer(1)
    while a > 0 and b < 0:
      result *= x - a + 1
      a, b = a - 1, b + 1
    return sympy.expand(result)
  if a < 0 and b > 0:
    result = sympy.Integer(1)
    while a < 0 and b > 0:
      result *= x - a
      a, b = a + 1, b - 1
    return sympy.expand(result)
  return sympy.Integer(1)


def shift(poly: sympy.Poly, alpha: Sequence[int]) -> sympy.Poly:
  """Returns `poly(Pi - alpha)`."""
  gens = pi_symbols(len(alpha))
  expr = poly.as_expr().xreplace(
      {g: g - a for g, a in zip(gens, alpha) if a != 0})
  return as_poly(expr, len(alpha))


def merge_coefficient(alpha: Sequence[int], beta: Sequence[int],
                      r: int) -> sympy.Poly:
  """Coefficient `m(Pi)` with `u_alpha u_beta = m(Pi) u_{alpha + beta}`."""
  n = len(alpha)
  gens = pi_symbols(n)
  x = sympy.Symbol("x")
  expr = sympy.Integer(1)
  for i in range(r):
    expr *= _merge(alpha[i], beta[i]).xreplace({x: gens[i]})
  return as_poly(expr, n)


def multiply(x: OperatorElement, y: OperatorElement) -> OperatorElement:
  """Normal ordered product of two operators.

  Uses `c(Pi) u_alpha d(Pi) = c(Pi) d(Pi - alpha) u_alpha` and merges the
  graded basis operators coordinate by coordinate.
  """
  x._check_compatible(y)  # pylint: disable=protected-access
  terms: Dict[Degree, sympy.Poly] = {}
  for alpha, c in x.terms.items():
    for beta, d in y.terms.items():
      degree = tuple(a + b for a, b in zip(alpha, beta))
      poly = c * shift(d, alpha) * merge_coefficient(alpha, beta, x.r)
      terms[degree] = terms[degree] + poly if degree in terms else poly
  return OperatorElement(terms, x.r, x.s)


def commutator(x: OperatorElement, y: OperatorElement) -> OperatorElement:
  """Returns `x y - y x`."""
  return multiply(x, y) - multiply(y, x)
