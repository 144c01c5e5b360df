"""Base-p digit machinery for binomial and multinomial coefficients mod p.

C(N, r) is nonzero mod p exactly when every base-p digit of r is at most
the matching digit of N; a multinomial coefficient is nonzero exactly when
adding the digit expansions of its parts produces no carry.  A Pascal-row
oracle is provided as an independent cross-check for tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import BudgetExceeded, NotCoprime, OutOfRange

PASCAL_BUDGET = 4096


@dataclass(frozen=True)
class PAdicExpansion:
    """Digits of a nonnegative integer, least significant first."""

    base: int
    digits: tuple[int, ...]

    def value(self) -> int:
        acc = 0
        for d in reversed(self.digits):
            acc = acc * self.base + d
        return acc


def p_adic_digits(n: int, p: int) -> PAdicExpansion:
    if n < 0:
        raise OutOfRange(f"expected n >= 0, got {n}")
    if n == 0:
        return PAdicExpansion(p, (0,))
    digits = []
    while n:
        digits.append(n % p)
        n //= p
    return PAdicExpansion(p, tuple(digits))


def binom_nonzero_mod_p(n: int, r: int, p: int) -> bool:
    """Digit-domination criterion for C(n, r) mod p."""
    if not 0 <= r <= n:
        raise OutOfRange(f"need 0 <= r <= n, got r={r}, n={n}")
    while n or r:
        if r % p > n % p:
            return False
        n //= p
        r //= p
    return True


def multinomial_nonzero_mod_p(parts, p: int) -> bool:
    """No-carry criterion: C(sum(parts); parts) is nonzero mod p iff adding
    the base-p digit expansions of the parts never carries."""
    parts = [int(x) for x in parts]
    if any(x < 0 for x in parts):
        raise OutOfRange("parts must be nonnegative")
    while any(parts):
        if sum(x % p for x in parts) >= p:
            return False
        parts = [x // p for x in parts]
    return True


def binom_mod_p_oracle(n: int, r: int, p: int, budget: int = PASCAL_BUDGET) -> int:
    """Exact residue of C(n, r) mod p by the additive Pascal recurrence."""
    if not 0 <= r <= n:
        raise OutOfRange(f"need 0 <= r <= n, got r={r}, n={n}")
    if n > budget:
        raise BudgetExceeded(f"Pascal row {n} exceeds budget {budget}")
    row = [1]
    for _ in range(n):
        row = [1] + [(row[i] + row[i + 1]) % p for i in range(len(row) - 1)] + [1]
    return row[r]


def is_power_of_p(x: int, p: int) -> bool:
    if x < 1:
        raise OutOfRange(f"expected x >= 1, got {x}")
    while x % p == 0:
        x //= p
    return x == 1


def lucas_witness(k: int, p: int):
    """Smallest u in {1, ..., k-2} with C(k-1, u) nonzero mod p.

    Returns None exactly when k-1 is a power of p, in which case every
    intermediate binomial coefficient vanishes mod p.
    """
    if k < 2:
        raise OutOfRange(f"expected k >= 2, got {k}")
    if gcd(k, p) != 1:
        raise NotCoprime(f"gcd({k}, {p}) != 1")
    for u in range(1, k - 1):
        if binom_nonzero_mod_p(k - 1, u, p):
            return u
    return None
