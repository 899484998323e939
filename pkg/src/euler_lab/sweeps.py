"""Range enumeration of (special) Carmichael numbers and verification sweeps.

The sweep machinery shards a range into fixed-size blocks processed by a
worker pool and merges the per-block results in block order, so a report
is byte-for-byte identical no matter how many workers ran it.
"""

from __future__ import annotations

import multiprocessing
import os
import time
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator

import numpy as np

from .classify import is_special_carmichael
from .errors import DomainError, UsageError
from .factor import euler_phi, factorize, is_prime
from .liars import census, census_bound, monier_euler_liar_count

ENUMERATION_CAP = 10**9
SIEVE_LIMIT = 10**7
BLOCK_SIZE = 10_000


class SweepMode(Enum):
    BRUTE_FORCE = "brute-force"
    MONIER = "monier"


@dataclass(frozen=True)
class Violation:
    n: int
    expected: str
    observed: str


@dataclass(frozen=True)
class SweepReport:
    lo: int
    hi: int
    mode: SweepMode
    checked: int
    violations: tuple[Violation, ...]
    elapsed_s: float


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _odd_spf(limit: int) -> np.ndarray:
    """Smallest prime factor of every odd n <= limit (0 for 1 and primes)."""
    spf = np.zeros((limit + 1) // 2, dtype=np.uint32)
    for p in range(3, int(limit**0.5) + 1, 2):
        if spf[(p - 1) // 2] == 0:
            view = spf[(p * p - 1) // 2 :: p]
            view[view == 0] = p
    return spf


def _korselt_members_sieved(limit: int, divisor_of: Callable[[int], int]) -> Iterator[int]:
    spf = _odd_spf(limit)
    for i in range(4, (limit + 1) // 2):
        p = int(spf[i])
        if p == 0:
            continue  # prime
        n = 2 * i + 1
        d = divisor_of(n)
        m = n
        while m > 1:
            q = int(spf[(m - 1) // 2]) or m
            m //= q
            if m % q == 0 or d % (q - 1):
                break
        else:
            yield n


def _korselt_members_factored(lo: int, hi: int, divisor_of: Callable[[int], int]) -> Iterator[int]:
    # Fermat base 2 prunes almost everything before the factorization;
    # any Korselt member necessarily passes it.
    for n in range(lo | 1, hi + 1, 2):
        if pow(2, n - 1, n) != 1 or is_prime(n):
            continue
        f = factorize(n)
        d = divisor_of(n)
        if all(k == 1 and d % (p - 1) == 0 for p, k in f.factors):
            yield n


def _enumerate_korselt(limit: int, half: bool) -> list[int]:
    if limit < 0:
        raise DomainError(f"limit must be nonnegative, got {limit}")
    if limit > ENUMERATION_CAP:
        raise DomainError(f"enumeration capped at {ENUMERATION_CAP}, got {limit}")
    divisor_of = (lambda n: (n - 1) // 2) if half else (lambda n: n - 1)
    members: list[int] = []
    if limit >= 9:
        members.extend(_korselt_members_sieved(min(limit, SIEVE_LIMIT), divisor_of))
        if limit > SIEVE_LIMIT:
            members.extend(_korselt_members_factored(SIEVE_LIMIT + 1, limit, divisor_of))
    return members


def enumerate_carmichael(limit: int) -> list[int]:
    """All Carmichael numbers <= limit, ascending."""
    return _enumerate_korselt(limit, half=False)


def enumerate_special_carmichael(limit: int) -> list[int]:
    """All n <= limit whose every unit satisfies a**((n-1)/2) == 1, ascending."""
    return _enumerate_korselt(limit, half=True)


# ---------------------------------------------------------------------------
# Characterization sweep
# ---------------------------------------------------------------------------


def _examine(n: int, mode: SweepMode) -> Violation | None:
    f = factorize(n)
    phi = euler_phi(f)
    if mode is SweepMode.BRUTE_FORCE:
        liars = census(n).euler_liars
    else:
        liars = monier_euler_liar_count(f).closed_form_count
    special = is_special_carmichael(f)
    if (liars == phi // 2) == special:
        return None
    if special:
        return Violation(n, expected=f"euler_liars == {phi // 2}", observed=f"euler_liars == {liars}")
    return Violation(n, expected=f"euler_liars != {phi // 2}", observed=f"euler_liars == {liars}")


def _sweep_block(args: tuple[int, int, str]) -> tuple[int, list[Violation]]:
    lo, hi, mode_value = args
    mode = SweepMode(mode_value)
    checked = 0
    violations: list[Violation] = []
    for n in range(lo | 1, hi + 1, 2):
        if is_prime(n):
            continue
        checked += 1
        v = _examine(n, mode)
        if v is not None:
            violations.append(v)
    return checked, violations


def _blocks(lo: int, hi: int, block_size: int) -> list[tuple[int, int]]:
    return [(start, min(start + block_size - 1, hi)) for start in range(lo, hi + 1, block_size)]


def verify_characterization(
    lo: int,
    hi: int,
    mode: SweepMode,
    workers: int | None = None,
    block_size: int = BLOCK_SIZE,
    on_block: Callable[[int, int], None] | None = None,
) -> SweepReport:
    """Check liar count == phi/2 exactly for special Carmichael n over [lo, hi].

    Every odd composite in the range is examined; the liar count comes from
    the exhaustive census (BRUTE_FORCE) or the closed form (MONIER).  Blocks
    are merged in range order, so reports do not depend on the worker count.
    on_block, when given, is called as on_block(done, total) after each block.
    """
    if lo % 2 == 0 or hi % 2 == 0:
        raise UsageError(f"range endpoints must be odd, got [{lo}, {hi}]")
    if not 9 <= lo <= hi:
        raise UsageError(f"need 9 <= lo <= hi, got [{lo}, {hi}]")
    if mode is SweepMode.BRUTE_FORCE and hi > census_bound():
        raise UsageError(f"brute-force sweep beyond census bound {census_bound()}")
    if workers is None:
        workers = os.cpu_count() or 1
    started = time.monotonic()
    tasks = [(b_lo, b_hi, mode.value) for b_lo, b_hi in _blocks(lo, hi, block_size)]
    if workers <= 1 or len(tasks) == 1:
        checked, violations = _collect(map(_sweep_block, tasks), len(tasks), on_block)
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(processes=min(workers, len(tasks))) as pool:
            stream = pool.imap(_sweep_block, tasks, chunksize=1)
            checked, violations = _collect(stream, len(tasks), on_block)
    return SweepReport(
        lo=lo,
        hi=hi,
        mode=mode,
        checked=checked,
        violations=violations,
        elapsed_s=time.monotonic() - started,
    )


def _collect(results, total_blocks, on_block) -> tuple[int, tuple[Violation, ...]]:
    checked = 0
    violations: list[Violation] = []
    for index, (block_checked, block_violations) in enumerate(results, start=1):
        checked += block_checked
        violations.extend(block_violations)
        if on_block is not None:
            on_block(index, total_blocks)
    return checked, tuple(violations)
