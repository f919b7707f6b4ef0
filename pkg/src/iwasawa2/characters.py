"""Dirichlet characters stored as exponents on fixed unit-group generators.

A character mod m is determined by its exponent e_i on each generator
(g_i, n_i) of (Z/m)*: chi(g_i) = zeta_{n_i}^{e_i}.  Products, conductors
and primitivization are exponent arithmetic plus a periodicity scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .arith import discrete_log_table, unit_group_structure
from .cyclotomic import CyclotomicNumber, cyclo_zeta


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        gens = unit_group_structure(self.modulus)
        if len(self.exponents) != len(gens):
            raise ValueError("one exponent per unit-group generator required")
        for e, (_, n) in zip(self.exponents, gens):
            if not 0 <= e < n:
                raise ValueError(f"exponent {e} out of range for order {n}")

    @property
    def order(self) -> int:
        gens = unit_group_structure(self.modulus)
        orders = [n // gcd(n, e) for e, (_, n) in zip(self.exponents, gens)]
        return reduce(lcm, orders, 1)

    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.exponents)


def trivial_character(m: int = 1) -> DirichletCharacter:
    return DirichletCharacter(m, (0,) * len(unit_group_structure(m)))


def char_angle(chi: DirichletCharacter, a: int) -> Fraction | None:
    """chi(a) = e^{2 pi i t} for the returned t in [0, 1); None on non-units."""
    m = chi.modulus
    if m == 1:
        return Fraction(0)
    if gcd(a, m) != 1:
        return None
    exps = discrete_log_table(m)[a % m]
    gens = unit_group_structure(m)
    t = sum((Fraction(e * x, n) for x, e, (_, n) in
             zip(exps, chi.exponents, gens)), Fraction(0))
    return t % 1


def char_eval(chi: DirichletCharacter, a: int) -> CyclotomicNumber:
    """chi(a) as a root of unity at level order(chi); 0 on non-units."""
    order = chi.order
    t = char_angle(chi, a)
    if t is None:
        return cyclo_zeta(order).scale(0)
    k = t * order
    assert k.denominator == 1
    return cyclo_zeta(order, int(k))


def char_is_odd(chi: DirichletCharacter) -> bool:
    return char_angle(chi, -1) == Fraction(1, 2)


def char_extend(chi: DirichletCharacter, modulus: int) -> DirichletCharacter:
    """The character mod `modulus` induced by chi (chi.modulus | modulus)."""
    if modulus % chi.modulus != 0:
        raise ValueError("target modulus must be a multiple of the modulus")
    exps = []
    for g, n in unit_group_structure(modulus):
        t = char_angle(chi, g)
        k = t * n
        assert k.denominator == 1
        exps.append(int(k) % n)
    return DirichletCharacter(modulus, tuple(exps))


def char_mul(a: DirichletCharacter, b: DirichletCharacter) -> DirichletCharacter:
    """Pointwise product at modulus lcm(m_a, m_b), without primitivization."""
    m = lcm(a.modulus, b.modulus)
    exps = []
    for g, n in unit_group_structure(m):
        t = (char_angle(a, g) + char_angle(b, g)) % 1
        k = t * n
        assert k.denominator == 1
        exps.append(int(k) % n)
    return DirichletCharacter(m, tuple(exps))


def char_pow(chi: DirichletCharacter, t: int) -> DirichletCharacter:
    gens = unit_group_structure(chi.modulus)
    return DirichletCharacter(
        chi.modulus,
        tuple(e * t % n for e, (_, n) in zip(chi.exponents, gens)))


def char_conductor(chi: DirichletCharacter) -> int:
    """Smallest f | m such that chi factors through (Z/f)*."""
    m = chi.modulus
    for f in sorted(d for d in range(1, m + 1) if m % d == 0):
        if _factors_through(chi, f):
            return f
    raise AssertionError("conductor scan failed")


def _factors_through(chi: DirichletCharacter, f: int) -> bool:
    m = chi.modulus
    for a in range(1 + f, m, f):
        if gcd(a, m) == 1 and char_angle(chi, a) != 0:
            return False
    return True


def primitivize(chi: DirichletCharacter) -> DirichletCharacter:
    """The primitive character of conductor f inducing chi."""
    f = char_conductor(chi)
    if f == chi.modulus:
        return chi
    m = chi.modulus
    exps = []
    for g, n in unit_group_structure(f):
        a = g
        while gcd(a, m) != 1:
            a += f
        t = char_angle(chi, a)
        k = t * n
        assert k.denominator == 1
        exps.append(int(k) % n)
    return DirichletCharacter(f, tuple(exps))


# ---------------------------------------------------------------------------
# Kronecker characters and the 2-power tower characters

def kronecker_symbol(d: int, n: int) -> int:
    """The Kronecker symbol (d / n)."""
    if n == 0:
        return 1 if d in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if d < 0:
            sign = -sign
    if n % 2 == 0:
        if d % 2 == 0:
            return 0
        # (d/2) by d mod 8
        two = 1 if d % 8 in (1, 7) else -1
        e = 0
        while n % 2 == 0:
            n //= 2
            e += 1
        if e % 2 == 1:
            sign *= two
    # now n odd positive: Jacobi symbol
    d %= n
    result = sign
    while d != 0:
        while d % 2 == 0:
            d //= 2
            if n % 8 in (3, 5):
                result = -result
        d, n = n, d
        if d % 4 == 3 and n % 4 == 3:
            result = -result
        d %= n
    return result if n == 1 else 0


def is_fundamental_discriminant(d: int) -> bool:
    from .arith import is_squarefree
    if d == 1:
        return True
    if d % 4 == 1:
        return is_squarefree(abs(d))
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(abs(m))
    return False


def kronecker_character(d: int) -> DirichletCharacter:
    """The primitive quadratic character mod |d| attached to Q(sqrt(d))."""
    if not is_fundamental_discriminant(d):
        raise ValueError(f"{d} is not a fundamental discriminant")
    m = abs(d)
    if m == 1:
        return trivial_character(1)
    exps = []
    for g, n in unit_group_structure(m):
        v = kronecker_symbol(d, g)
        if v == 1:
            exps.append(0)
        else:
            assert n % 2 == 0
            exps.append(n // 2)
    return DirichletCharacter(m, tuple(exps))


def fundamental_discriminant_of_neg(d: int) -> int:
    """Fundamental discriminant of Q(sqrt(-d)) for squarefree d > 0."""
    return -d if d % 4 == 3 else -4 * d


def even_two_power_characters(n: int) -> list[DirichletCharacter]:
    """The 2^n characters of Gal(Q_n/Q), as even characters mod 2^{n+2}.

    Q_n is the n-th layer of the cyclotomic Z_2-extension of Q, i.e. the
    real subfield of conductor 2^{n+2}; its characters are those of
    (Z/2^{n+2})* trivial on -1.
    """
    if n < 0:
        raise ValueError("level must be >= 0")
    m = 2 ** (n + 2)
    gens = unit_group_structure(m)
    if n == 0:
        return [trivial_character(4)]
    # gens are (-1, 2) and (5, 2^n); even characters kill -1
    assert gens[0][0] == m - 1 and gens[1][1] == 2 ** n
    return [DirichletCharacter(m, (0, e)) for e in range(2 ** n)]
