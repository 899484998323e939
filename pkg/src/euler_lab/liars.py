"""Exact liar counting for one odd composite modulus.

Two independent routes are provided on purpose: an exhaustive census that
iterates every base, and a closed-form count computed from the
factorization alone.  Their agreement over a whole range is the strongest
correctness gate in the test suite, so nothing here may share logic
between the two paths.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from math import gcd, prod

import numpy as np

from . import factor as _factor
from .errors import DomainError
from .factor import FactoredInteger, euler_phi, factorize
from .modmath import dyadic_valuation, jacobi_symbol

CENSUS_BOUND_ENV = "EULER_LAB_CENSUS_BOUND"
DEFAULT_CENSUS_BOUND = 1_000_000


def census_bound() -> int:
    """Exhaustive-enumeration cap; overridable via EULER_LAB_CENSUS_BOUND."""
    raw = os.environ.get(CENSUS_BOUND_ENV)
    if raw is None:
        return DEFAULT_CENSUS_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{CENSUS_BOUND_ENV} must be an integer, got {raw!r}") from None
    if value < 9:
        raise DomainError(f"{CENSUS_BOUND_ENV} must be >= 9, got {value}")
    return value


@dataclass(frozen=True)
class LiarCensus:
    """Exact base-set sizes for one odd composite modulus.

    All counts range over the units of Z_n: bases sharing a factor with n
    are excluded everywhere (they are witnesses by gcd, not liars).
    """

    n: int
    phi: int
    fermat_liars: int
    euler_liars: int
    b_count: int        # bases with half-power residue +1 or -1
    b_plus_count: int   # bases with half-power residue +1
    p_count: int        # bases with Jacobi symbol +1
    n_count: int        # bases with Jacobi symbol -1


class DeltaClass(Enum):
    HALF = "half"
    ONE = "one"
    TWO = "two"


@dataclass(frozen=True)
class MonierRow:
    """Per-prime-factor quantities feeding the closed-form liar count."""

    p: int
    k: int
    e: int  # dyadic valuation of p - 1
    g: int  # gcd((n - 1) / 2, p - 1)


@dataclass(frozen=True)
class MonierProfile:
    m: int  # (n - 1) / 2
    v: int  # dyadic valuation of m
    rows: tuple[MonierRow, ...]
    delta_class: DeltaClass
    closed_form_count: int


def _require_odd_composite(n: int) -> None:
    if n % 2 == 0:
        raise DomainError(f"n must be odd, got {n}")
    if n < 9 or _factor.is_prime(n):
        raise DomainError(f"n must be an odd composite >= 9, got {n}")


def is_euler_liar(a: int, n: int) -> bool:
    """True iff base a satisfies the Euler congruence for odd composite n.

    a must be coprime to n; a base with gcd(a, n) > 1 is a witness by
    itself and is rejected here so callers cannot miscount it as a liar.
    """
    if n < 3 or n % 2 == 0:
        raise DomainError(f"n must be odd and >= 3, got {n}")
    if gcd(a, n) != 1:
        raise DomainError(f"base {a} shares a factor with {n}")
    return pow(a, (n - 1) // 2, n) == jacobi_symbol(a, n) % n


def is_fermat_liar(a: int, n: int) -> bool:
    """True iff a**(n-1) == 1 mod n; a must be coprime to n."""
    if n < 3 or n % 2 == 0:
        raise DomainError(f"n must be odd and >= 3, got {n}")
    if gcd(a, n) != 1:
        raise DomainError(f"base {a} shares a factor with {n}")
    return pow(a, n - 1, n) == 1


# ---------------------------------------------------------------------------
# Exhaustive census
# ---------------------------------------------------------------------------

# Quadratic-character tables are cached for small primes only; the build is
# O(p) and a census is O(n log n), so caching bigger tables buys nothing.
_LEGENDRE_CACHE_MAX = 4096
_legendre_cache: dict[int, np.ndarray] = {}


def _legendre_table(p: int) -> np.ndarray:
    table = _legendre_cache.get(p)
    if table is None:
        x = np.arange(p, dtype=np.int64)
        table = np.full(p, -1, dtype=np.int8)
        table[x * x % p] = 1
        table[0] = 0
        if p < _LEGENDRE_CACHE_MAX:
            _legendre_cache[p] = table
    return table


def _mulmod_float(x: np.ndarray, y: np.ndarray, n: int, inv: float) -> np.ndarray:
    # Exact for n < 2**26: products stay below 2**52, and the estimated
    # quotient is off by at most one, fixed by the two correction passes.
    r = x * y
    r -= np.floor(r * inv) * n
    np.subtract(r, n, out=r, where=r >= n)
    np.add(r, n, out=r, where=r < 0)
    return r


def _vec_modexp(bases: np.ndarray, exponent: int, n: int) -> np.ndarray:
    """bases**exponent mod n over a whole array, exact for n < 2**32."""
    if n < 1 << 26:
        b = bases.astype(np.float64)
        inv = 1.0 / n
        result = np.ones_like(b)
        while exponent:
            if exponent & 1:
                result = _mulmod_float(result, b, n, inv)
            exponent >>= 1
            if exponent:
                b = _mulmod_float(b, b, n, inv)
        return result.astype(np.int64)
    b = bases.astype(np.uint64)
    nn = np.uint64(n)
    result = np.ones_like(b)
    while exponent:
        if exponent & 1:
            result = result * b % nn
        exponent >>= 1
        if exponent:
            b = b * b % nn
    return result.astype(np.int64)


def _census_numpy(n: int, f: FactoredInteger) -> LiarCensus:
    a = np.arange(1, n, dtype=np.int64)
    unit = np.ones(n - 1, dtype=bool)
    jac = np.ones(n - 1, dtype=np.int8)
    for p, k in f.factors:
        chi = _legendre_table(p)[a % p]
        unit &= chi != 0
        if k & 1:
            jac *= chi
    bases = a[unit]
    jac = jac[unit]
    half = _vec_modexp(bases, (n - 1) >> 1, n)
    # half < n < 2**31, so the square stays within int64.
    full = half * half % n
    phi = int(unit.sum())
    minus_one = n - 1
    is_one = half == 1
    is_minus = half == minus_one
    return LiarCensus(
        n=n,
        phi=phi,
        fermat_liars=int((full == 1).sum()),
        euler_liars=int(((is_one & (jac == 1)) | (is_minus & (jac == -1))).sum()),
        b_count=int((is_one | is_minus).sum()),
        b_plus_count=int(is_one.sum()),
        p_count=int((jac == 1).sum()),
        n_count=int((jac == -1).sum()),
    )


def _census_python(n: int, f: FactoredInteger) -> LiarCensus:
    # Plain-integer fallback; also the cross-check oracle for the numpy path.
    m = (n - 1) // 2
    phi = fermat = euler = b = b_plus = p_cnt = n_cnt = 0
    for a in range(1, n):
        if gcd(a, n) != 1:
            continue
        phi += 1
        half = pow(a, m, n)
        jac = jacobi_symbol(a, n)
        if half * half % n == 1:
            fermat += 1
        if half == 1:
            b_plus += 1
            b += 1
        elif half == n - 1:
            b += 1
        if jac == 1:
            p_cnt += 1
        else:
            n_cnt += 1
        if half == jac % n:
            euler += 1
    return LiarCensus(n, phi, fermat, euler, b, b_plus, p_cnt, n_cnt)


def census(n: int, bound: int | None = None) -> LiarCensus:
    """Exhaustive liar census over every base in [1, n) coprime to n.

    Counts Fermat liars, Euler liars, the half-power sets B and B', and the
    Jacobi-symbol split P/N by direct enumeration.  Refuses moduli above the
    configured bound (default 10**6, env EULER_LAB_CENSUS_BOUND) because the
    work grows as n log n.
    """
    _require_odd_composite(n)
    cap = bound if bound is not None else census_bound()
    if n > cap:
        raise DomainError(f"census of {n} exceeds the exhaustive bound {cap}")
    f = factorize(n)
    if n < 1 << 31:
        result = _census_numpy(n, f)
    else:  # pragma: no cover - beyond any practical exhaustive bound
        result = _census_python(n, f)
    assert result.phi == euler_phi(f)
    assert result.p_count + result.n_count == result.phi
    assert result.b_plus_count <= result.b_count <= result.phi
    return result


# ---------------------------------------------------------------------------
# Closed-form count
# ---------------------------------------------------------------------------


def monier_euler_liar_count(f: FactoredInteger) -> MonierProfile:
    """Closed-form Euler liar count from the factorization alone.

    With m = (n-1)/2, v = v2(m), and per-prime e = v2(p-1), g = gcd(m, p-1),
    the count is delta * prod(g) where delta is 1/2 if some prime with odd
    multiplicity has e <= v, else 2 if every e exceeds v and the number of
    odd-multiplicity primes with e == v + 1 is odd, else 1.  Validity is not
    taken on faith: the test suite checks this against the census for every
    odd composite below 10**5.
    """
    n = f.n
    _require_odd_composite(n)
    m = (n - 1) // 2
    v = dyadic_valuation(m)
    rows = tuple(
        MonierRow(p=p, k=k, e=dyadic_valuation(p - 1), g=gcd(m, p - 1))
        for p, k in f.factors
    )
    g_product = prod(row.g for row in rows)
    if any(row.k & 1 and row.e <= v for row in rows):
        delta = DeltaClass.HALF
        assert g_product % 2 == 0
        count = g_product // 2
    elif all(row.e > v for row in rows) and sum(1 for row in rows if row.k & 1 and row.e == v + 1) % 2 == 1:
        delta = DeltaClass.TWO
        count = 2 * g_product
    else:
        delta = DeltaClass.ONE
        count = g_product
    return MonierProfile(m=m, v=v, rows=rows, delta_class=delta, closed_form_count=count)
