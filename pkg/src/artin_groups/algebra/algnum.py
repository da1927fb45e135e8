"""Exact arithmetic in the real cyclotomic field Q(gamma), gamma = 2cos(pi/M).

Every cos(pi/m) with m dividing M lies in this field, which is all the
reflection representation of a Coxeter graph with label lcm M needs.
Only ring operations and rational scalars are provided; the root-system
construction never divides by a field element.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Tuple, Union

from .polynomials import euler_phi, real_cyclotomic_minpoly
from ..errors import FieldError
from ..utils.config import config
from ..utils.logging import get_logger

logger = get_logger(__name__)

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class FieldCtx:
    """The field Q(2cos(pi/M)) given by the minimal polynomial of its generator."""

    M: int
    minpoly: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    def zero(self) -> "AlgNum":
        return AlgNum(self, (Fraction(0),) * self.degree)

    def one(self) -> "AlgNum":
        return self.rational(1)

    def rational(self, value: Rational) -> "AlgNum":
        """Embed a rational number."""
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(value)
        return AlgNum(self, tuple(coeffs))

    def gamma(self) -> "AlgNum":
        """The generator 2cos(pi/M)."""
        return AlgNum.from_polynomial(self, [0, 1])

    def __str__(self) -> str:
        return f"Q(2cos(pi/{self.M}))"


def make_field(M: int, max_degree: Optional[int] = None) -> FieldCtx:
    """Build the field context for 2cos(pi/M).

    Args:
        M: lcm of the finite edge labels, at least 2
        max_degree: Degree bound; defaults to the configured field.max_degree

    Returns:
        FieldCtx with the exact minimal polynomial

    Raises:
        FieldError: M < 2, or the field degree phi(2M)/2 exceeds the bound
    """
    if max_degree is None:
        max_degree = config.max_field_degree
    return _make_field(M, max_degree)


@lru_cache(maxsize=None)
def _make_field(M: int, max_degree: int) -> FieldCtx:
    if not isinstance(M, int) or M < 2:
        raise FieldError(f"M must be an integer >= 2, got {M!r}")
    degree = euler_phi(2 * M) // 2
    if degree > max_degree:
        raise FieldError(
            f"Q(2cos(pi/{M})) has degree {degree}, above the bound {max_degree}; "
            "the graph's labels are impractical"
        )
    ctx = FieldCtx(M=M, minpoly=real_cyclotomic_minpoly(M))
    logger.debug(f"Built field {ctx} of degree {ctx.degree}, minpoly {ctx.minpoly}")
    return ctx


class AlgNum:
    """Immutable element of a FieldCtx, stored as reduced rational coefficients."""

    __slots__ = ('ctx', 'coeffs', '_hash')

    def __init__(self, ctx: FieldCtx, coeffs: Tuple[Fraction, ...]):
        self.ctx = ctx
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def from_polynomial(cls, ctx: FieldCtx, poly: Iterable[Rational]) -> "AlgNum":
        """Reduce an arbitrary polynomial in gamma modulo the minimal polynomial."""
        return cls(ctx, _reduce(ctx, [Fraction(c) for c in poly]))

    def _coerce(self, other) -> "AlgNum":
        if isinstance(other, AlgNum):
            if other.ctx != self.ctx:
                raise FieldError(f"Operands live in different fields: {self.ctx} and {other.ctx}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.rational(other)
        return NotImplemented

    def __add__(self, other) -> "AlgNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlgNum(self.ctx, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "AlgNum":
        return AlgNum(self.ctx, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "AlgNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlgNum(self.ctx, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other) -> "AlgNum":
        return (-self) + other

    def __mul__(self, other) -> "AlgNum":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self.ctx.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[i + j] += a * b
        return AlgNum(self.ctx, _reduce(self.ctx, prod))

    __rmul__ = __mul__

    def scale(self, scalar: Rational) -> "AlgNum":
        """Multiply by a rational number."""
        scalar = Fraction(scalar)
        return AlgNum(self.ctx, tuple(a * scalar for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ctx.rational(other)
        if not isinstance(other, AlgNum):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ctx.M, self.coeffs))
        return self._hash

    def evaluate(self) -> float:
        """Floating-point approximation, for display only."""
        g = 2 * math.cos(math.pi / self.ctx.M)
        return float(sum(float(c) * g ** i for i, c in enumerate(self.coeffs)))

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*g")
            else:
                terms.append(f"{c}*g^{i}")
        return f"AlgNum({' + '.join(terms) or '0'} in {self.ctx})"


def _reduce(ctx: FieldCtx, poly) -> Tuple[Fraction, ...]:
    """Reduce a coefficient list modulo the monic minimal polynomial."""
    d = ctx.degree
    poly = list(poly)
    mp = ctx.minpoly
    for i in range(len(poly) - 1, d - 1, -1):
        c = poly[i]
        if not c:
            continue
        poly[i] = Fraction(0)
        # gamma^d = -(mp[0] + mp[1] gamma + ... + mp[d-1] gamma^(d-1))
        for j in range(d):
            if mp[j]:
                poly[i - d + j] -= c * mp[j]
    poly = poly[:d] + [Fraction(0)] * (d - len(poly))
    return tuple(poly)


def cos_pi_over(ctx: FieldCtx, m: int) -> AlgNum:
    """Exact cos(pi/m) for a divisor m of M.

    Uses the Dickson recurrence D_0 = 2, D_1 = gamma,
    D_k = gamma D_(k-1) - D_(k-2), so that D_(M/m)(gamma) = 2cos(pi/m).

    Raises:
        FieldError: m < 1 or m does not divide M
    """
    if m < 1 or ctx.M % m != 0:
        raise FieldError(f"{m} does not divide M = {ctx.M}")
    return dickson(ctx, ctx.M // m).scale(Fraction(1, 2))


def dickson(ctx: FieldCtx, k: int) -> AlgNum:
    """D_k(gamma) = 2cos(k pi / M)."""
    gamma = ctx.gamma()
    prev, cur = ctx.rational(2), gamma
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, gamma * cur - prev
    return cur


def arith(ctx: FieldCtx, op: str, a: AlgNum, b: Union[AlgNum, Rational]) -> AlgNum:
    """Dispatch a field operation by name: add, sub, mul or scalar_mul."""
    if a.ctx != ctx or (isinstance(b, AlgNum) and b.ctx != ctx):
        raise FieldError(f"Operands do not belong to {ctx}")
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'scalar_mul':
        if isinstance(b, AlgNum):
            raise FieldError("scalar_mul takes a rational scalar")
        return a.scale(b)
    raise ValueError(f"Unknown field operation: {op}")
