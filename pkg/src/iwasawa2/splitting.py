"""Prime decomposition in cyclotomic Z_2-towers over Q and over the
degree-p Fermat-prime base field, plus the Fermat-number arithmetic.

Splitting is computed group-theoretically from the order of Frobenius in
the abelian Galois group, never by factoring polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .arith import factorize, is_prime, is_squarefree, multiplicative_order, ord_p

FERMAT_PRIMES = (2, 3, 5, 17, 257)


@dataclass(frozen=True)
class PlaceSplittingReport:
    q: int
    level: int
    g: int          # number of primes above q
    f: int          # residue degree
    e: int          # ramification index
    base_prime: int  # 2 for the Q-tower, else the Fermat prime p

    @property
    def field_degree(self) -> int:
        # degree of the level field over Q
        if self.base_prime == 2:
            return 2 ** self.level
        return self.base_prime * 2 ** self.level


@dataclass(frozen=True)
class RamifiedSet:
    d: int
    base_prime: int
    entries: tuple[tuple[int, int], ...]  # (q, number of places of K above q)
    total: int


def residue_degree_in_Qn(q: int, n: int) -> int:
    """Residue degree of an odd prime q in the n-th layer Q_n, i.e. the
    order of q in (Z/2^{n+2})* / {+-1}."""
    _check_odd_prime(q)
    if n < 0:
        raise ValueError("level must be >= 0")
    m = 2 ** (n + 2)
    f = 1
    x = q % m
    while x != 1 and x != m - 1:
        x = x * q % m
        f += 1
    return f


def splitting_in_Qn(q: int, n: int) -> PlaceSplittingReport:
    f = residue_degree_in_Qn(q, n)
    return PlaceSplittingReport(q, n, 2 ** n // f, f, 1, 2)


def primes_above_in_Qinf(q: int) -> int:
    """Stable number of primes of Q_infinity above an odd prime q."""
    _check_odd_prime(q)
    return 2 ** (ord_p(q * q - 1, 2) - 3)


def _fermat_residue_degree(q: int, p: int) -> int:
    """Order of q in the Z/p quotient of (Z/p^2)*, i.e. the residue
    degree of q in the degree-p field k."""
    return p if pow(q, p - 1, p * p) != 1 else 1


def primes_above_in_fermat_tower(q: int, p: int, n: int) -> PlaceSplittingReport:
    """Splitting of q in k * Q_n where k is the degree-p subfield of
    Q(zeta_{2 p^2}) for a Fermat prime p."""
    _check_odd_prime(q)
    if p not in FERMAT_PRIMES:
        raise ValueError(f"base prime must be in {FERMAT_PRIMES}")
    if n < 0:
        raise ValueError("level must be >= 0")
    if p == 2:
        # k = Q(sqrt(2)) is the first tower layer, so k * Q_n = Q_{n+1}
        inner = splitting_in_Qn(q, n + 1)
        return PlaceSplittingReport(q, n, inner.g, inner.f, 1, 2)
    if q == p:
        raise ValueError("q = p is excluded (gcd(d, p) <= 2)")
    f = lcm(_fermat_residue_degree(q, p), residue_degree_in_Qn(q, n))
    return PlaceSplittingReport(q, n, p * 2 ** n // f, f, 1, p)


def stable_primes_above(q: int, p: int) -> int:
    """Number of primes of K = k_infinity above an odd prime q."""
    if p == 2:
        return primes_above_in_Qinf(q)
    return (p // _fermat_residue_degree(q, p)) * primes_above_in_Qinf(q)


def ramified_set(d: int, p: int) -> RamifiedSet:
    """The set S of finite places of K = k_infinity, away from 2, that
    ramify in L = K(sqrt(-d)): one entry per odd prime q | d with the
    count of places of K above q."""
    if d <= 2:
        raise ValueError("d must be > 2")
    if not is_squarefree(d):
        raise ValueError(f"{d} is not squarefree")
    if p not in FERMAT_PRIMES:
        raise ValueError(f"base prime must be in {FERMAT_PRIMES}")
    if gcd(d, p) > 2:
        raise ValueError("gcd(d, p) must be <= 2")
    entries = []
    for q in sorted(factorize(d)):
        if q == 2:
            continue
        entries.append((q, stable_primes_above(q, p)))
    total = sum(c for _, c in entries)
    return RamifiedSet(d, p, tuple(entries), total)


# ---------------------------------------------------------------------------
# Fermat numbers

def fermat_number(j: int) -> int:
    if j < 0:
        raise ValueError("index must be >= 0")
    return 2 ** (2 ** j) + 1


def fermat_identity_check(j: int) -> bool:
    """F_j - 2 = F_0 * F_1 * ... * F_{j-1}, exactly."""
    if j < 1:
        raise ValueError("identity needs j >= 1")
    prod = 1
    for i in range(j):
        prod *= fermat_number(i)
    return fermat_number(j) - 2 == prod


def two_inert_in_k(p: int) -> bool:
    """Whether 2 is inert in the degree-p subfield k of Q(zeta_{p^2}).

    For p = 2 the prime 2 ramifies in k = Q(sqrt(2)); there is exactly
    one prime above 2 either way, which is what the vanishing criterion
    consumes, so we return True.
    """
    if p not in FERMAT_PRIMES:
        raise ValueError(f"base prime must be in {FERMAT_PRIMES}")
    if p == 2:
        return True
    return multiplicative_order(2, p * p) % p == 0


def t_infinity(n: int, base_degree: int) -> int:
    """Number of real places of the n-th layer over a totally real base
    of the given degree."""
    if n < 0 or base_degree < 1:
        raise ValueError("invalid tower parameters")
    return base_degree * 2 ** n


def unit_euler_char(t_inf: int) -> int:
    """chi(Gal, units) = t_inf - 1 for a CM quadratic extension of a
    totally real field with t_inf real places (all of them ramify)."""
    if t_inf < 1:
        raise ValueError("need at least one real place")
    return t_inf - 1


def _check_odd_prime(q: int):
    if q == 2:
        raise ValueError("q = 2 is not handled by the tower splitting")
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
