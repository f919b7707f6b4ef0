"""Exact integer/rational arithmetic and integer linear algebra.

Everything here works with Python's arbitrary-precision ints and
fractions.Fraction.  Matrices are plain lists of lists of ints.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt


# ---------------------------------------------------------------------------
# primes and valuations

_SMALL_PRIME_BOUND = 1 << 16

# deterministic Miller-Rabin witness set, valid far beyond desk scale
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < _SMALL_PRIME_BOUND:
        if n < 4:
            return True
        if n % 2 == 0:
            return False
        f = 3
        while f * f <= n:
            if n % f == 0:
                return False
            f += 2
        return True
    if n % 2 == 0:
        return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        if a % n == 0:
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


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk-scale inputs)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(m: int) -> int:
    phi = 1
    for p, e in factorize(m).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    return all(e == 1 for e in factorize(n).values())


def ord_p(n: int, p: int) -> int:
    """Largest e with p^e | n.  Undefined for n = 0."""
    if n == 0:
        raise ValueError("ord_p is undefined at 0")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def ord2_fraction(x: Fraction) -> int:
    if x == 0:
        raise ValueError("ord2 is undefined at 0")
    return ord_p(x.numerator, 2) - ord_p(x.denominator, 2)


def multiplicative_order(a: int, m: int) -> int:
    """Least k >= 1 with a^k = 1 mod m."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    if gcd(a, m) != 1:
        raise ValueError(f"gcd({a}, {m}) != 1")
    k = euler_phi(m)
    for p in factorize(k):
        while k % p == 0 and pow(a, k // p, m) == 1:
            k //= p
    return k


# ---------------------------------------------------------------------------
# unit group structure

@lru_cache(maxsize=None)
def unit_group_structure(m: int) -> tuple[tuple[int, int], ...]:
    """Generators (g, order) of (Z/m)* as a product of cyclic groups.

    The 2-part comes first (-1 then 5 for 8 | m), then odd prime powers
    in ascending order; every generator is lifted to be 1 modulo the
    complementary factor.
    """
    if m < 1:
        raise ValueError("modulus must be positive")
    if m <= 2:
        return ()
    fac = factorize(m)
    gens: list[tuple[int, int]] = []
    for p in sorted(fac):
        e = fac[p]
        q = p ** e
        cof = m // q
        if p == 2:
            if e == 1:
                continue
            local = [(q - 1, 2)] if e == 2 else [(q - 1, 2), (5, 2 ** (e - 2))]
        else:
            g = _primitive_root_prime_power(p, e)
            local = [(g, (p - 1) * p ** (e - 1))]
        for g, order in local:
            gens.append((_crt_lift(g, q, cof, m), order))
    return tuple(gens)


def _primitive_root_prime_power(p: int, e: int) -> int:
    g = _primitive_root_prime(p)
    if e == 1:
        return g
    if pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _primitive_root_prime(p: int) -> int:
    order_facs = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in order_facs):
            return g
    raise AssertionError("no primitive root found")


def _crt_lift(g: int, q: int, cof: int, m: int) -> int:
    # value = g mod q, = 1 mod cof
    if cof == 1:
        return g % m
    inv = pow(q, -1, cof)
    return (g + q * ((1 - g) * inv % cof)) % m


@lru_cache(maxsize=None)
def discrete_log_table(m: int) -> dict[int, tuple[int, ...]]:
    """Map each unit mod m to its exponent tuple on unit_group_structure(m)."""
    gens = unit_group_structure(m)
    table = {1 % m: (0,) * len(gens)}
    for i, (g, order) in enumerate(gens):
        items = list(table.items())
        for a, exps in items:
            x = a
            for k in range(1, order):
                x = x * g % m
                e = list(exps)
                e[i] = k
                table[x] = tuple(e)
    return table


# ---------------------------------------------------------------------------
# integer matrices (lists of lists)

Matrix = list[list[int]]


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zero_matrix(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            v = ai[k]
            if v:
                bk = b[k]
                for j in range(cols):
                    oi[j] += v * bk[j]
    return out


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def mat_pow(a: Matrix, k: int) -> Matrix:
    out = identity_matrix(len(a))
    base = [row[:] for row in a]
    while k:
        if k & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        k >>= 1
    return out


def mat_vec(a: Matrix, v: list[int]) -> list[int]:
    return [sum(r[j] * v[j] for j in range(len(v))) for r in a]


def mat_inverse_unimodular(a: Matrix) -> Matrix:
    """Inverse of an integer matrix with det = +-1, returned over Z."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = [[x for x in row[n:]] for row in aug]
    for row in inv:
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


def smith_normal_form(a: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U*A*V = D, U and V unimodular, D diagonal
    with d1 | d2 | ... and nonnegative diagonal.

    Pivot choice: smallest nonzero absolute value, ties broken by lowest
    row then lowest column, so the output is deterministic.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    d = [row[:] for row in a]
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, mult):
        # row dst += mult * row src
        d[dst] = [x + mult * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + mult * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, mult):
        for r in d:
            r[dst] += mult * r[src]
        for r in v:
            r[dst] += mult * r[src]

    def round_div(x, y):
        # nearest-integer quotient, so the remainder is at most |y| / 2
        q, r = divmod(x, y)
        if 2 * abs(r) > abs(y):
            q += 1
        return q

    t = 0
    while t < min(rows, cols):
        # locate smallest-|value| pivot in the remaining block; after any
        # inexact division the search restarts from scratch, so the pivot
        # magnitude at least halves per restart and entries stay small
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = d[i][j]
                if x != 0 and (pivot is None or abs(x) < abs(d[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        for i in range(t + 1, rows):
            if d[i][t] != 0:
                add_row(t, i, -round_div(d[i][t], d[t][t]))
        if any(d[i][t] != 0 for i in range(t + 1, rows)):
            continue
        for j in range(t + 1, cols):
            if d[t][j] != 0:
                add_col(t, j, -round_div(d[t][j], d[t][t]))
        if any(d[t][j] != 0 for j in range(t + 1, cols)):
            continue
        # force the pivot to divide the remaining block so the diagonal
        # comes out in divisibility order
        bad = None
        for i in range(t + 1, rows):
            if any(d[i][j] % d[t][t] != 0 for j in range(t + 1, cols)):
                bad = i
                break
        if bad is not None:
            add_row(bad, t, 1)
            continue
        t += 1

    # positive diagonal
    n = min(rows, cols)
    for i in range(n):
        if d[i][i] < 0:
            d[i] = [-x for x in d[i]]
            u[i] = [-x for x in u[i]]
    return u, d, v


def snf_diagonal(a: Matrix) -> list[int]:
    _, d, _ = smith_normal_form(a)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def kernel_basis(a: Matrix) -> list[list[int]]:
    """Basis (as column vectors) of {x : A x = 0} over Z."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if cols == 0:
        return []
    if rows == 0:
        return [[1 if i == j else 0 for i in range(cols)] for j in range(cols)]
    _, d, v = smith_normal_form(a)
    out = []
    for j in range(cols):
        dj = d[j][j] if j < rows else 0
        if dj == 0:
            out.append([v[i][j] for i in range(cols)])
    return out


def in_column_lattice(gens: Matrix, vec: list[int]) -> bool:
    """Whether vec lies in the lattice spanned by the columns of gens."""
    rows = len(gens)
    if not gens or not gens[0]:
        return all(x == 0 for x in vec)
    u, d, _ = smith_normal_form(gens)
    w = mat_vec(u, vec)
    cols = len(gens[0])
    for i in range(rows):
        di = d[i][i] if i < min(rows, cols) else 0
        if di == 0:
            if w[i] != 0:
                return False
        elif w[i] % di != 0:
            return False
    return True


def lattice_quotient(big: Matrix, small: Matrix, ambient_rank: int) -> list[int]:
    """Elementary divisors of L(big)/L(small) for column lattices
    L(small) <= L(big) <= Z^r.

    Returned in increasing divisibility order; trailing zeros denote
    free rank.  Entries equal to 1 are suppressed.
    """
    r = ambient_rank
    if not big or not big[0]:
        return []
    u, d, _ = smith_normal_form(big)
    ncols = len(big[0])
    diag = [d[i][i] for i in range(min(r, ncols))]
    rank_big = sum(1 for x in diag if x != 0)
    small_cols = len(small[0]) if small and small[0] else 0
    if small_cols == 0:
        divisors = [0] * rank_big
    else:
        w = mat_mul(u, small)
        x = zero_matrix(rank_big, small_cols)
        for i in range(rank_big):
            for j in range(small_cols):
                if w[i][j] % diag[i] != 0:
                    raise ValueError("small lattice not contained in big lattice")
                x[i][j] = w[i][j] // diag[i]
        for i in range(rank_big, r):
            for j in range(small_cols):
                if w[i][j] != 0:
                    raise ValueError("small lattice not contained in big lattice")
        xd = snf_diagonal(x)
        rank_small = sum(1 for t in xd if t != 0)
        divisors = [t for t in xd if t != 0] + [0] * (rank_big - rank_small)
    return [t for t in divisors if t != 1]
