"""Integer arithmetic foundation: factorization, divisors, Euler's phi.

Everything here is plain trial-division arithmetic; inputs are desk-scale
(well under 10**7 in practice) and are required to fit in 64 bits so that
the compiled kernels can share the values without silent wraparound.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

__all__ = [
    "Factorization",
    "divisors",
    "euler_phi",
    "factorize",
    "gcd",
    "is_prime",
    "lcm",
]

_INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition of n with primes strictly ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.factors)

    @property
    def num_primes(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factors)

    def is_prime_power(self) -> bool:
        return len(self.factors) == 1


def _check_positive(n: int, what: str) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{what} requires an integer, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{what} requires n >= 1, got {n}")
    if n > _INT64_MAX:
        raise ValueError(f"{what}: n={n} exceeds the 64-bit working range")


def factorize(n: int) -> Factorization:
    """Ordered prime-power factorization of n >= 1 by trial division."""
    _check_positive(n, "factorize")
    m = n
    factors: list[tuple[int, int]] = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def euler_phi(n: int) -> int:
    """Count of 1 <= a <= n coprime to n, via the prime-power product."""
    _check_positive(n, "euler_phi")
    result = 1
    for p, a in factorize(n).factors:
        result *= p**a - p ** (a - 1)
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n in ascending order (includes 1 and n)."""
    _check_positive(n, "divisors")
    divs = [1]
    for p, a in factorize(n).factors:
        divs = [d * p**e for d in divs for e in range(a + 1)]
    return sorted(divs)
