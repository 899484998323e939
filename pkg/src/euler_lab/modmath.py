"""Exact modular arithmetic primitives.

All operations are pure functions on nonnegative Python integers.  Moduli
are capped at 2**62 so that every intermediate product stays within a
128-bit accumulator; the same contract therefore holds for ports of this
library to fixed-width languages.
"""

from __future__ import annotations

import math
from typing import Sequence

from .errors import DomainError, RangeError

# Largest supported modulus / CRT product.
INT_CAP = 1 << 62

# A congruence system is a list of (residue, modulus) pairs with pairwise
# coprime moduli; see crt_solve.
Congruence = tuple[int, int]


def _require_nonnegative(name: str, value: int) -> None:
    if value < 0:
        raise DomainError(f"{name} must be nonnegative, got {value}")


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """Return base**exponent mod modulus using O(log exponent) multiplications."""
    _require_nonnegative("base", base)
    _require_nonnegative("exponent", exponent)
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    if modulus > INT_CAP:
        raise RangeError(f"modulus {modulus} exceeds supported cap 2**62")
    return pow(base, exponent, modulus)


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; gcd(0, 0) == 0 by convention."""
    _require_nonnegative("a", a)
    _require_nonnegative("b", b)
    return math.gcd(a, b)


def dyadic_valuation(x: int) -> int:
    """Largest t with 2**t dividing x (x >= 1)."""
    if x < 1:
        raise DomainError(f"dyadic valuation requires x >= 1, got {x}")
    return (x & -x).bit_length() - 1


def jacobi_symbol(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 3 via binary reduction.

    Uses the factor-out-2 rule and quadratic reciprocity only; n is never
    factored.  Returns 0 exactly when gcd(a, n) > 1.
    """
    _require_nonnegative("a", a)
    if n < 3 or n % 2 == 0:
        raise DomainError(f"jacobi symbol requires odd n >= 3, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def mod_inverse(a: int, m: int) -> int:
    """Multiplicative inverse of a modulo m; requires gcd(a, m) == 1."""
    _require_nonnegative("a", a)
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    try:
        return pow(a, -1, m)
    except ValueError:
        raise DomainError(f"{a} is not invertible mod {m}") from None


def crt_solve(system: Sequence[Congruence]) -> int:
    """Solve a system of congruences with pairwise coprime moduli.

    Folds the system pairwise, which surfaces non-coprime moduli and
    modulus-product overflow as early as possible.  Returns the unique
    solution in [0, product of moduli).
    """
    if not system:
        raise DomainError("congruence system must be nonempty")
    x, modulus = 0, 1
    for residue, m in system:
        if m < 2:
            raise DomainError(f"congruence modulus must be >= 2, got {m}")
        if not 0 <= residue < m:
            raise DomainError(f"residue {residue} not reduced mod {m}")
        if math.gcd(modulus, m) != 1:
            raise DomainError(f"moduli are not pairwise coprime (offender {m})")
        if modulus * m > INT_CAP:
            raise RangeError("modulus product exceeds supported cap 2**62")
        # Merge x (mod modulus) with residue (mod m).
        step = (residue - x) * mod_inverse(modulus % m, m) % m
        x += modulus * step
        modulus *= m
    return x
