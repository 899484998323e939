"""Exact factorization and multiplicative functions for integers up to 2**62."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .errors import DomainError, FactorizationTimeout, RangeError
from .modmath import INT_CAP

# Everything below this bound is factored by trial division; larger
# cofactors go to the rho stage.
TRIAL_DIVISION_BOUND = 100_000


def _sieve(limit: int) -> list[int]:
    flags = bytearray(b"\x01") * (limit + 1)
    flags[:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            start = p * p
            flags[start :: p] = b"\x00" * ((limit - start) // p + 1)
    return [i for i, f in enumerate(flags) if f]


_SMALL_PRIMES = _sieve(TRIAL_DIVISION_BOUND)

# Strong-pseudoprime witness set valid for every n < 3.3 * 10**24
# (J. Sinclair), so the test below is exact on the whole supported range.
_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)


def is_prime(n: int) -> bool:
    """Exact, deterministic primality test for 0 <= n <= 2**62."""
    if n > INT_CAP:
        raise RangeError(f"{n} exceeds supported cap 2**62")
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FactoredInteger:
    """An integer n >= 2 together with its complete prime factorization.

    Factors are (prime, multiplicity) pairs with strictly increasing primes;
    their product reproduces n exactly and every prime is re-certified on
    construction.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DomainError(f"FactoredInteger requires n >= 2, got {self.n}")
        product = 1
        previous = 1
        for p, k in self.factors:
            if p <= previous:
                raise DomainError("factor primes must be strictly increasing")
            if k < 1:
                raise DomainError("multiplicities must be positive")
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
            previous = p
            product *= p**k
        if product != self.n:
            raise DomainError(f"factors multiply to {product}, not {self.n}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def _brent_rho(n: int, deadline: float | None) -> int:
    """Find a nontrivial factor of composite n with Brent's cycle method.

    The polynomial offset starts at 1 and increments on every failed cycle,
    so the factor found for a given n never depends on hidden randomness.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 1 + n):
        y, r, q = 2, 1, 1
        g, ys, x = 1, y, y
        while g == 1:
            if deadline is not None and time.monotonic() > deadline:
                raise FactorizationTimeout(f"factorization timeout on {n}")
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            # Batched gcd overshot the cycle; replay one step at a time.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        # Cycle degenerated for this offset; restart with the next one.
    raise AssertionError(f"rho exhausted offsets for {n}")  # pragma: no cover


def _factor_tuple(n: int, deadline: float | None) -> tuple[tuple[int, int], ...]:
    factors: dict[int, int] = {}
    m = n
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
    # After trial division any remaining cofactor below the squared bound is prime.
    pending = [m] if m > 1 else []
    while pending:
        m = pending.pop()
        if m < TRIAL_DIVISION_BOUND * TRIAL_DIVISION_BOUND or is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            pending.extend((root, root))
            continue
        d = _brent_rho(m, deadline)
        pending.extend((d, m // d))
    return tuple(sorted(factors.items()))


_cache: dict[int, tuple[tuple[int, int], ...]] = {}
_CACHE_LIMIT = 1 << 18


def factorize(n: int, timeout_s: float | None = None) -> FactoredInteger:
    """Complete factorization of 2 <= n <= 2**62.

    Trial division by primes below 100000, then Brent's rho with
    deterministic restarts for any remaining cofactors.  Results are cached
    per process; the cache is wiped wholesale when it grows too large, which
    keeps sweeps over overlapping ranges cheap without unbounded memory.
    """
    if n < 2:
        raise DomainError(f"factorize requires n >= 2, got {n}")
    if n > INT_CAP:
        raise RangeError(f"{n} exceeds supported cap 2**62")
    parts = _cache.get(n)
    if parts is None:
        deadline = time.monotonic() + timeout_s if timeout_s is not None else None
        parts = _factor_tuple(n, deadline)
        if len(_cache) >= _CACHE_LIMIT:
            _cache.clear()
        _cache[n] = parts
    return FactoredInteger(n, parts)


def euler_phi(f: FactoredInteger) -> int:
    """Euler's totient from a factorization."""
    phi = 1
    for p, k in f.factors:
        phi *= p ** (k - 1) * (p - 1)
    return phi


def is_squarefree(f: FactoredInteger) -> bool:
    return all(k == 1 for _, k in f.factors)


def is_perfect_square(n: int) -> bool:
    """True iff n is a perfect square (0 and 1 included)."""
    if n < 0:
        raise DomainError(f"expected a nonnegative integer, got {n}")
    if n > INT_CAP:
        raise RangeError(f"{n} exceeds supported cap 2**62")
    root = math.isqrt(n)
    return root * root == n
