"""Number classification and constructive witness generation.

Carmichael and special-Carmichael verdicts come from Korselt-style
divisibility checks on a full factorization; witnesses are produced by
deterministic ascending search or by explicit Chinese-remainder
constructions, and every certificate can be re-validated from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import count
from math import gcd

from .errors import DomainError, RangeError
from .factor import FactoredInteger, factorize, is_perfect_square, is_prime
from .modmath import INT_CAP, crt_solve, jacobi_symbol, mod_pow

GENERATOR_PRIME_CAP = 10_000_000


class Verdict(Enum):
    PRIME = "prime"
    COMPOSITE_ORDINARY = "composite_ordinary"
    CARMICHAEL = "carmichael"
    SPECIAL_CARMICHAEL = "special_carmichael"


class WitnessKind(Enum):
    GCD_WITNESS = "gcd"
    FERMAT_WITNESS = "fermat"
    EULER_WITNESS = "euler"


@dataclass(frozen=True)
class KorseltFact:
    """Divisibility evidence for one prime factor."""

    p: int
    divides_n_minus_1: bool       # p - 1 | n - 1
    divides_half_n_minus_1: bool  # p - 1 | (n - 1) / 2


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    verdict: Verdict
    factors: FactoredInteger | None
    korselt_evidence: tuple[KorseltFact, ...] = ()


@dataclass(frozen=True, eq=True)
class WitnessCertificate:
    """A base plus the computed residues disproving primality of n."""

    n: int
    base: int
    kind: WitnessKind
    evidence: dict[str, int]


def _require_odd(n: int) -> None:
    if n % 2 == 0:
        raise DomainError(f"n must be odd, got {n}")


def is_carmichael(f: FactoredInteger) -> bool:
    """Korselt's criterion: composite, squarefree, p - 1 | n - 1 for all p | n."""
    _require_odd(f.n)
    if f.factors == ((f.n, 1),):
        return False
    n_minus_1 = f.n - 1
    return all(k == 1 and n_minus_1 % (p - 1) == 0 for p, k in f.factors)


def is_special_carmichael(f: FactoredInteger) -> bool:
    """Sharpened criterion: composite, squarefree, p - 1 | (n - 1) / 2 for all p | n."""
    _require_odd(f.n)
    if f.factors == ((f.n, 1),):
        return False
    half = (f.n - 1) // 2
    return all(k == 1 and half % (p - 1) == 0 for p, k in f.factors)


def classify(n: int, factor_timeout_s: float | None = 30.0) -> ClassificationReport:
    """Full verdict for odd n: prime, ordinary composite, Carmichael or special.

    Factors n eagerly; a pathological factorization aborts with
    FactorizationTimeout after factor_timeout_s rather than hanging.
    """
    _require_odd(n)
    if n < 3:
        raise DomainError(f"classify requires n >= 3, got {n}")
    if n > INT_CAP:
        raise RangeError(f"{n} exceeds supported cap 2**62")
    if is_prime(n):
        return ClassificationReport(n=n, verdict=Verdict.PRIME, factors=None)
    f = factorize(n, timeout_s=factor_timeout_s)
    half = (n - 1) // 2
    evidence = tuple(
        KorseltFact(
            p=p,
            divides_n_minus_1=(n - 1) % (p - 1) == 0,
            divides_half_n_minus_1=half % (p - 1) == 0,
        )
        for p, _ in f.factors
    )
    if is_special_carmichael(f):
        verdict = Verdict.SPECIAL_CARMICHAEL
    elif is_carmichael(f):
        verdict = Verdict.CARMICHAEL
    else:
        verdict = Verdict.COMPOSITE_ORDINARY
    return ClassificationReport(n=n, verdict=verdict, factors=f, korselt_evidence=evidence)


def find_generator(p: int) -> int:
    """Smallest primitive root modulo an odd prime p <= 10**7.

    Verified by checking g**((p-1)/q) != 1 for every prime q dividing p - 1,
    so the returned value provably has order p - 1.
    """
    if p > GENERATOR_PRIME_CAP:
        raise RangeError(f"generator search capped at p <= {GENERATOR_PRIME_CAP}")
    if p < 3 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    cofactor_exponents = [(p - 1) // q for q in factorize(p - 1).primes]
    for g in count(2):
        if all(pow(g, e, p) != 1 for e in cofactor_exponents):
            return g
    raise AssertionError("unreachable")  # pragma: no cover


def find_nonresidue(f: FactoredInteger) -> int:
    """Construct x with Jacobi symbol (x/n) == -1 for odd non-square n.

    Takes the first prime factor of odd multiplicity, lifts the smallest
    quadratic non-residue mod that prime to x == 1 modulo the rest of n.
    """
    n = f.n
    _require_odd(n)
    if is_perfect_square(n):
        raise DomainError(f"{n} is a perfect square; every Jacobi symbol is 0 or 1")
    p1, k1 = next((p, k) for p, k in f.factors if k & 1)
    q = next(a for a in count(2) if jacobi_symbol(a, p1) == -1)
    rest = n // p1**k1
    if rest == 1:
        return q
    return crt_solve([(q, p1**k1), (1, rest)])


def find_euler_witness(n: int) -> WitnessCertificate:
    """First base (ascending from 2) disproving primality of odd composite n.

    gcd is checked before the Euler congruence, so a shared factor is
    reported as a gcd witness even when the base also fails the congruence.
    """
    _require_odd(n)
    if n > INT_CAP:
        raise RangeError(f"{n} exceeds supported cap 2**62")
    if n < 9 or is_prime(n):
        raise DomainError(f"no Euler witness exists: {n} is not an odd composite")
    half = (n - 1) // 2
    for a in count(2):
        g = gcd(a, n)
        if g > 1:
            return WitnessCertificate(n, a, WitnessKind.GCD_WITNESS, {"gcd": g})
        t = pow(a, half, n)
        j = jacobi_symbol(a, n)
        if t != j % n:
            return WitnessCertificate(
                n, a, WitnessKind.EULER_WITNESS, {"half_power": t, "jacobi": j}
            )
    raise AssertionError("unreachable")  # pragma: no cover


def find_independent_witnesses(f: FactoredInteger) -> list[int]:
    """For Carmichael n = p_1 ... p_r, lift each prime's generator to Z_n.

    Returns x_1, ..., x_r with x_i == g_i mod p_i and x_i == 1 mod n / p_i,
    where g_i is the smallest primitive root mod p_i.  Each half power
    x_i**((n-1)/2) is +-1 modulo p_i and 1 modulo every other factor; it
    differs from 1 exactly when p_i - 1 does not divide (n - 1) / 2.
    """
    n = f.n
    if not is_carmichael(f):
        raise DomainError(f"{n} is not a Carmichael number")
    return [crt_solve([(find_generator(p) % p, p), (1, n // p)]) for p in f.primes]


def verify_certificate(cert: WitnessCertificate) -> bool:
    """Recompute a certificate from scratch and confirm it refutes primality."""
    n, a = cert.n, cert.base
    if n < 3 or n % 2 == 0:
        return False
    g = gcd(a, n)
    if cert.kind is WitnessKind.GCD_WITNESS:
        return 1 < g < n and cert.evidence.get("gcd") == g
    if g != 1:
        return False
    if cert.kind is WitnessKind.EULER_WITNESS:
        t = mod_pow(a, (n - 1) // 2, n)
        j = jacobi_symbol(a, n)
        return t != j % n and cert.evidence == {"half_power": t, "jacobi": j}
    if cert.kind is WitnessKind.FERMAT_WITNESS:
        t = mod_pow(a, n - 1, n)
        return t != 1 and cert.evidence == {"full_power": t}
    return False
