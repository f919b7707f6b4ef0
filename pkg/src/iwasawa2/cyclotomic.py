"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are rational-coefficient polynomials in zeta_m reduced mod the
m-th cyclotomic polynomial, so equality is a coefficient comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import euler_phi


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("level must be positive")
    # Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divexact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        assert c % den[-1] == 0
        q[i] = c // den[-1]
        for j, dj in enumerate(den):
            num[i + j] -= q[i] * dj
    assert all(x == 0 for x in num)
    return q


@dataclass(frozen=True)
class CyclotomicNumber:
    """Element of Q(zeta_m): coefficients on 1, z, ..., z^{phi(m)-1}."""

    level: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != euler_phi(self.level):
            raise ValueError("coefficient length must equal phi(level)")

    def __add__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        self._check_level(other)
        return CyclotomicNumber(
            self.level, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CyclotomicNumber") -> "CyclotomicNumber":
        self._check_level(other)
        return CyclotomicNumber(
            self.level, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.level, tuple(-a for a in self.coeffs))

    def scale(self, r: Fraction | int) -> "CyclotomicNumber":
        r = Fraction(r)
        return CyclotomicNumber(self.level, tuple(a * r for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def _check_level(self, other: "CyclotomicNumber"):
        if self.level != other.level:
            raise ValueError(
                f"level mismatch: {self.level} vs {other.level}; lift first")


def cyclo_rational(x: Fraction | int, level: int = 1) -> CyclotomicNumber:
    coeffs = [Fraction(0)] * euler_phi(level)
    coeffs[0] = Fraction(x)
    return CyclotomicNumber(level, tuple(coeffs))


def cyclo_zeta(m: int, k: int = 1) -> CyclotomicNumber:
    """zeta_m^k as an element of Q(zeta_m)."""
    poly = [Fraction(0)] * (k % m + 1)
    poly[k % m] = Fraction(1)
    return _from_poly(m, poly)


def _from_poly(m: int, poly: list[Fraction]) -> CyclotomicNumber:
    phi = euler_phi(m)
    mod = cyclotomic_polynomial(m)
    poly = poly[:]
    for i in range(len(poly) - 1, phi - 1, -1):
        c = poly[i]
        if c:
            for j in range(phi + 1):
                poly[i - phi + j] -= c * mod[j]
    poly = poly[:phi]
    poly += [Fraction(0)] * (phi - len(poly))
    return CyclotomicNumber(m, tuple(poly))


def cyclo_mul(x: CyclotomicNumber, y: CyclotomicNumber) -> CyclotomicNumber:
    x._check_level(y)
    n = len(x.coeffs)
    prod = [Fraction(0)] * (2 * n - 1 if n else 1)
    for i, a in enumerate(x.coeffs):
        if a:
            for j, b in enumerate(y.coeffs):
                if b:
                    prod[i + j] += a * b
    return _from_poly(x.level, prod)


def cyclo_lift(x: CyclotomicNumber, target: int) -> CyclotomicNumber:
    """Re-express x at level `target` (level(x) must divide target)."""
    if target % x.level != 0:
        raise ValueError(f"{x.level} does not divide target level {target}")
    if target == x.level:
        return x
    step = target // x.level
    poly = [Fraction(0)] * ((len(x.coeffs) - 1) * step + 1)
    for i, a in enumerate(x.coeffs):
        poly[i * step] = a
    return _from_poly(target, poly)


def is_rational(x: CyclotomicNumber) -> Fraction | None:
    """The rational value of x, or None if x is irrational."""
    if any(a != 0 for a in x.coeffs[1:]):
        return None
    return x.coeffs[0]
