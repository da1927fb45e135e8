"""Integer polynomial helpers: cyclotomic and real-cyclotomic minimal polynomials.

Polynomials are coefficient lists, lowest degree first.
"""

from functools import lru_cache
from math import comb
from typing import List, Sequence, Tuple

from ..errors import InternalError


def trim(coeffs: Sequence[int]) -> List[int]:
    """Drop trailing zero coefficients (the zero polynomial becomes [])."""
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Product of two integer polynomials."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def poly_divmod_monic(a: Sequence[int], b: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Long division of a by the monic polynomial b.

    Returns:
        (quotient, remainder)
    """
    b = trim(b)
    if not b or b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = trim(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], rem
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        quot[i - db] = c
        for j, y in enumerate(b):
            rem[i - db + j] -= c * y
    return trim(quot), trim(rem)


def euler_phi(n: int) -> int:
    """Euler's totient by trial division."""
    if n < 1:
        raise ValueError("n must be positive")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """The n-th cyclotomic polynomial.

    Computed as (x^n - 1) divided by every Phi_d with d a proper divisor of n.

    Args:
        n: Positive integer

    Returns:
        Integer coefficients, lowest degree first
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = poly_divmod_monic(poly, cyclotomic_polynomial(d))
            if rem:
                raise InternalError(f"Phi_{d} does not divide x^{n} - 1")
    return tuple(poly)


def real_cyclotomic_minpoly(M: int) -> Tuple[int, ...]:
    """Minimal polynomial of 2cos(pi/M) over the rationals.

    Phi_2M(y) is palindromic of even degree 2k, so y^-k Phi_2M(y) is a
    polynomial psi in y + 1/y; psi is the minimal polynomial.

    Args:
        M: Integer >= 2

    Returns:
        Monic integer coefficients of psi, lowest degree first
    """
    if M < 2:
        raise ValueError("M must be at least 2")
    phi = cyclotomic_polynomial(2 * M)
    k = (len(phi) - 1) // 2
    # Laurent coefficients indexed by exponent j in [-k, k]
    rem = {j: phi[j + k] for j in range(-k, k + 1)}
    psi = [0] * (k + 1)
    for j in range(k, -1, -1):
        c = rem[j]
        psi[j] = c
        if c == 0:
            continue
        for i in range(j + 1):
            rem[j - 2 * i] -= c * comb(j, i)
    if any(rem.values()):
        raise InternalError(f"Phi_{2 * M} is not a polynomial in y + 1/y")
    return tuple(psi)
