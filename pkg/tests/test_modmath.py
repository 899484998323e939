import math

import pytest
from hypothesis import given, strategies as st

from euler_lab import (
    DomainError,
    RangeError,
    crt_solve,
    dyadic_valuation,
    gcd,
    jacobi_symbol,
    mod_inverse,
    mod_pow,
)


# ---------------------------------------------------------------------------
# mod_pow
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("x,m", [(0, 2), (5, 9), (123456, 99991), (7, 3)])
def test_mod_pow_zero_exponent(x, m):
    assert mod_pow(x, 0, m) == 1


def test_mod_pow_small_values():
    assert mod_pow(8, 4, 9) == 4096 % 9 == 1


def test_mod_pow_against_bigint_evaluation():
    # Oracle: evaluate the full power as a big integer, reduce once.
    assert mod_pow(2, 864, 1729) == 2**864 % 1729 == 1
    assert mod_pow(3, 1105, 1729) == 3**1105 % 1729


def test_mod_pow_errors():
    with pytest.raises(DomainError):
        mod_pow(2, 3, 1)
    with pytest.raises(DomainError):
        mod_pow(2, 3, 0)
    with pytest.raises(RangeError):
        mod_pow(2, 3, (1 << 62) + 1)
    with pytest.raises(DomainError):
        mod_pow(-2, 3, 7)


@given(
    a=st.integers(min_value=0, max_value=10**9),
    e1=st.integers(min_value=0, max_value=10**6),
    e2=st.integers(min_value=0, max_value=10**6),
    m=st.integers(min_value=2, max_value=10**9),
)
def test_mod_pow_exponent_additivity(a, e1, e2, m):
    assert mod_pow(a, e1 + e2, m) == mod_pow(a, e1, m) * mod_pow(a, e2, m) % m


# ---------------------------------------------------------------------------
# gcd / dyadic valuation
# ---------------------------------------------------------------------------

def test_gcd_examples():
    assert gcd(0, 7) == 7
    assert gcd(864, 6) == 6
    assert gcd(280, 16) == 8
    assert gcd(0, 0) == 0


@given(a=st.integers(min_value=0, max_value=5000), b=st.integers(min_value=0, max_value=5000))
def test_gcd_is_greatest_common_divisor(a, b):
    g = gcd(a, b)
    if a == b == 0:
        assert g == 0
        return
    assert a % g == 0 and b % g == 0
    for d in range(g + 1, max(a, b) + 1):
        assert not (a % d == 0 and b % d == 0) or d <= g


def test_dyadic_valuation_examples():
    assert dyadic_valuation(1) == 0
    assert dyadic_valuation(12) == 2
    assert dyadic_valuation(864) == 5


def test_dyadic_valuation_rejects_zero():
    with pytest.raises(DomainError):
        dyadic_valuation(0)


@given(odd=st.integers(min_value=0, max_value=10**6), t=st.integers(min_value=0, max_value=50))
def test_dyadic_valuation_splits_powers_of_two(odd, t):
    x = (2 * odd + 1) << t
    assert dyadic_valuation(x) == t


# ---------------------------------------------------------------------------
# jacobi_symbol
# ---------------------------------------------------------------------------

def test_jacobi_examples():
    for n in range(3, 200, 2):
        assert jacobi_symbol(1, n) == 1
    assert jacobi_symbol(14, 15) == -1
    for a in range(1, 9):
        if math.gcd(a, 9) == 1:
            assert jacobi_symbol(a, 9) == 1


def test_jacobi_zero_iff_common_factor():
    for n in range(3, 100, 2):
        for a in range(0, n):
            assert (jacobi_symbol(a, n) == 0) == (math.gcd(a, n) > 1)


def test_jacobi_errors():
    with pytest.raises(DomainError):
        jacobi_symbol(2, 4)
    with pytest.raises(DomainError):
        jacobi_symbol(2, 1)
    with pytest.raises(DomainError):
        jacobi_symbol(-1, 9)


def test_jacobi_multiplicative_in_numerator():
    # exhaustive for every odd modulus up to 99
    for n in range(3, 100, 2):
        for a in range(n):
            for b in range(n):
                assert jacobi_symbol(a * b % n, n) == jacobi_symbol(a, n) * jacobi_symbol(b, n)


def test_jacobi_multiplicative_in_modulus():
    for m in range(3, 148, 2):
        for n in range(3, 148, 2):
            if m * n > 441 or math.gcd(m, n) != 1:
                continue
            for a in range(m * n):
                assert jacobi_symbol(a, m * n) == jacobi_symbol(a, m) * jacobi_symbol(a, n)


def test_jacobi_matches_euler_criterion_for_primes():
    # sieve the odd primes below 2000, then compare against half powers
    limit = 2000
    flags = bytearray(b"\x01") * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = b"\x00" * len(flags[i * i :: i])
    for p in range(3, limit, 2):
        if not flags[p]:
            continue
        for a in range(1, p):
            assert mod_pow(a, (p - 1) // 2, p) == jacobi_symbol(a, p) % p


# ---------------------------------------------------------------------------
# crt_solve / mod_inverse
# ---------------------------------------------------------------------------

def test_crt_examples():
    assert crt_solve([(2, 3), (3, 5)]) == 8
    assert crt_solve([(4, 11)]) == 4
    # oracle: exhaustive scan below the modulus product
    expected = [x for x in range(7 * 13 * 19) if x % 7 == 3 and x % 13 == 2 and x % 19 == 1]
    assert expected == [1445]
    assert crt_solve([(3, 7), (2, 13), (1, 19)]) == 1445


def test_crt_errors():
    with pytest.raises(DomainError):
        crt_solve([])
    with pytest.raises(DomainError):
        crt_solve([(1, 6), (2, 9)])  # gcd 3
    with pytest.raises(DomainError):
        crt_solve([(5, 3)])  # residue not reduced
    with pytest.raises(RangeError):
        crt_solve([(0, 1 << 32), (0, (1 << 32) - 1)])


@given(st.data())
def test_crt_solution_satisfies_all_congruences(data):
    pool = [3, 5, 7, 11, 13, 16, 9, 17, 19, 23, 25, 27, 29]
    moduli = []
    for m in data.draw(st.permutations(pool)):
        if all(math.gcd(m, other) == 1 for other in moduli):
            moduli.append(m)
        if len(moduli) == 4:
            break
    system = [(data.draw(st.integers(min_value=0, max_value=m - 1)), m) for m in moduli]
    x = crt_solve(system)
    product = math.prod(moduli)
    assert 0 <= x < product
    for r, m in system:
        assert x % m == r


def test_crt_uniqueness_below_product():
    system = [(2, 3), (3, 5), (5, 7)]
    x = crt_solve(system)
    matches = [y for y in range(3 * 5 * 7) if all(y % m == r for r, m in system)]
    assert matches == [x]


def test_mod_inverse_examples():
    assert mod_inverse(1, 97) == 1
    assert mod_inverse(3, 7) == 5
    with pytest.raises(DomainError):
        mod_inverse(2, 4)


@given(a=st.integers(min_value=1, max_value=10**6), m=st.integers(min_value=2, max_value=10**6))
def test_mod_inverse_inverts(a, m):
    if math.gcd(a, m) != 1:
        with pytest.raises(DomainError):
            mod_inverse(a, m)
    else:
        b = mod_inverse(a, m)
        assert 0 < b < m
        assert a * b % m == 1
