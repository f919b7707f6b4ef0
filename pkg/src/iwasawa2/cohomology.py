"""Cohomology of a finite cyclic p-group acting on an explicit
finitely generated abelian group.

A module is presented as M = Z^r / L(relations) together with the r x r
matrix of a fixed generator g of G.  For cyclic G we use
H^2 = M^G / N*M and H^1 = ker(N) / (g-1)M with N = 1 + g + ... + g^{|G|-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .arith import (
    Matrix,
    identity_matrix,
    in_column_lattice,
    kernel_basis,
    lattice_quotient,
    mat_inverse_unimodular,
    mat_mul,
    mat_pow,
    mat_sub,
    mat_vec,
    ord_p,
    is_prime,
    smith_normal_form,
    zero_matrix,
)


@dataclass(frozen=True)
class CyclicGModule:
    """G-module for G cyclic of order p^k, given by an integer presentation.

    relations: columns generate the relation sublattice of Z^r.
    action: matrix of a fixed generator of G on Z^r.
    """

    p: int
    k: int
    relations: tuple[tuple[int, ...], ...]  # r x s, columns are relators
    action: tuple[tuple[int, ...], ...]     # r x r

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.k < 1:
            raise ValueError("group order exponent must be >= 1")
        r = len(self.action)
        if any(len(row) != r for row in self.action):
            raise ValueError("action matrix must be square")
        if len(self.relations) != r:
            raise ValueError("relations must have one row per generator")
        rel = self.relations_matrix()
        act = self.action_matrix()
        # action must preserve the relation lattice
        if rel and rel[0]:
            img = mat_mul(act, rel)
            for j in range(len(img[0])):
                if not in_column_lattice(rel, [img[i][j] for i in range(r)]):
                    raise ValueError("action does not preserve the relations")
        # action^(p^k) must be the identity on the quotient
        diff = mat_sub(mat_pow(act, self.p ** self.k), identity_matrix(r))
        for j in range(r):
            col = [diff[i][j] for i in range(r)]
            if any(col) and not in_column_lattice(rel, col):
                raise ValueError(
                    f"action order does not divide |G| = {self.p}^{self.k}")

    @property
    def rank(self) -> int:
        return len(self.action)

    @property
    def group_order(self) -> int:
        return self.p ** self.k

    def relations_matrix(self) -> Matrix:
        return [list(row) for row in self.relations]

    def action_matrix(self) -> Matrix:
        return [list(row) for row in self.action]


@dataclass(frozen=True)
class CohomologyReport:
    h1_invariants: tuple[int, ...]
    h2_invariants: tuple[int, ...]
    chi: int | None

    @property
    def chi_defined(self) -> bool:
        return self.chi is not None


def make_module(p: int, k: int, relations: Matrix, action: Matrix) -> CyclicGModule:
    return CyclicGModule(
        p, k,
        tuple(tuple(row) for row in relations),
        tuple(tuple(row) for row in action))


def norm_element_matrix(m: CyclicGModule) -> Matrix:
    """Matrix of N = 1 + g + ... + g^{|G|-1}."""
    acc = identity_matrix(m.rank)
    out = identity_matrix(m.rank)
    for _ in range(m.group_order - 1):
        acc = mat_mul(acc, m.action_matrix())
        out = [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(out, acc)]
    return out


def _cols(vectors: list[list[int]], r: int) -> Matrix:
    out = zero_matrix(r, len(vectors))
    for j, v in enumerate(vectors):
        for i in range(r):
            out[i][j] = v[i]
    return out


def _hstack(a: Matrix, b: Matrix) -> Matrix:
    if not a or not a[0]:
        return b
    if not b or not b[0]:
        return a
    return [ra + rb for ra, rb in zip(a, b)]


def _preimage_lattice(mat: Matrix, rel: Matrix, r: int) -> Matrix:
    """Columns generating {x in Z^r : mat*x in L(rel)}."""
    stacked = _hstack(mat, rel)
    kern = kernel_basis(stacked)
    vecs = [v[:r] for v in kern]
    return _cols(vecs, r)


def cohomology(m: CyclicGModule) -> CohomologyReport:
    """H^1, H^2 and the p-exponent chi of the Herbrand quotient."""
    r = m.rank
    act = m.action_matrix()
    rel = m.relations_matrix()
    norm = norm_element_matrix(m)
    gm1 = mat_sub(act, identity_matrix(r))

    # H^2 = M^G / N*M = {x : (g-1)x in R} / (N*Z^r + R)
    invariants_lattice = _preimage_lattice(gm1, rel, r)
    h2 = lattice_quotient(invariants_lattice, _hstack(norm, rel), r)

    # H^1 = ker(N on M) / (g-1)M = {x : N x in R} / ((g-1)Z^r + R)
    norm_kernel_lattice = _preimage_lattice(norm, rel, r)
    h1 = lattice_quotient(norm_kernel_lattice, _hstack(gm1, rel), r)

    chi: int | None = None
    if 0 not in h1 and 0 not in h2:
        order2 = 1
        for d in h2:
            order2 *= d
        order1 = 1
        for d in h1:
            order1 *= d
        chi = ord_p(order2, m.p) - ord_p(order1, m.p)
    return CohomologyReport(tuple(h1), tuple(h2), chi)


def module_invariants(m: CyclicGModule) -> tuple[list[int], int]:
    """(torsion elementary divisors, free rank) of the underlying group M."""
    rel = m.relations_matrix()
    r = m.rank
    divisors = lattice_quotient(identity_matrix(r), rel, r)
    torsion = [d for d in divisors if d != 0]
    free = sum(1 for d in divisors if d == 0)
    return torsion, free


def invariant_submodule_rank(m: CyclicGModule) -> int:
    """Free rank of M^G."""
    r = m.rank
    gm1 = mat_sub(m.action_matrix(), identity_matrix(r))
    lat = _preimage_lattice(gm1, m.relations_matrix(), r)
    divisors = lattice_quotient(lat, m.relations_matrix(), r)
    return sum(1 for d in divisors if d == 0)


def module_order(m: CyclicGModule) -> int | None:
    """|M| when finite, else None."""
    torsion, free = module_invariants(m)
    if free:
        return None
    out = 1
    for d in torsion:
        out *= d
    return out


# ---------------------------------------------------------------------------
# the three indecomposable Z_pG-lattices for G = Z/p

def indecomposable_module(p: int, kind: str) -> CyclicGModule:
    """Integer presentation of Z_p (trivial), Z_pG (regular), or the
    augmentation ideal I_pG, as a module for G = Z/p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if kind == "trivial":
        return make_module(p, 1, [[]], [[1]])
    if kind == "regular":
        action = [[1 if i == (j + 1) % p else 0 for j in range(p)]
                  for i in range(p)]
        return make_module(p, 1, [[] for _ in range(p)], action)
    if kind == "augmentation":
        # basis v_i = g^i - 1 (i = 1..p-1); g*v_i = v_{i+1} - v_1, g*v_{p-1} = -v_1
        r = p - 1
        action = zero_matrix(r, r)
        for j in range(r):  # column j is image of v_{j+1}
            if j + 1 < r:
                action[j + 1][j] += 1
            action[0][j] -= 1
        return make_module(p, 1, [[] for _ in range(r)], action)
    raise ValueError(f"unknown kind {kind!r}")


def direct_sum(a: CyclicGModule, b: CyclicGModule) -> CyclicGModule:
    if (a.p, a.k) != (b.p, b.k):
        raise ValueError("summands must share the same group")
    ra, rb = a.rank, b.rank
    sa = len(a.relations[0]) if a.relations and a.relations[0] else 0
    sb = len(b.relations[0]) if b.relations and b.relations[0] else 0
    rel = zero_matrix(ra + rb, sa + sb)
    for i in range(ra):
        for j in range(sa):
            rel[i][j] = a.relations[i][j]
    for i in range(rb):
        for j in range(sb):
            rel[ra + i][sa + j] = b.relations[i][j]
    act = zero_matrix(ra + rb, ra + rb)
    for i in range(ra):
        for j in range(ra):
            act[i][j] = a.action[i][j]
    for i in range(rb):
        for j in range(rb):
            act[ra + i][ra + j] = b.action[i][j]
    return make_module(a.p, a.k, rel, act)


def chi_additivity_check(a: CyclicGModule, b: CyclicGModule) -> bool:
    """chi(A + B) = chi(A) + chi(B) for the direct sum."""
    ca = cohomology(a).chi
    cb = cohomology(b).chi
    if ca is None or cb is None:
        raise ValueError("chi undefined for a summand")
    return cohomology(direct_sum(a, b)).chi == ca + cb


def dual_module(m: CyclicGModule) -> CyclicGModule:
    """Pontryagin-dual presentation (transpose action).

    Only valid when the relation lattice is preserved by the transpose,
    e.g. relations = n * Z^r.
    """
    act_t = [list(row) for row in zip(*m.action)]
    return make_module(m.p, m.k, m.relations_matrix(), act_t)


# ---------------------------------------------------------------------------
# brute-force oracle by element enumeration

_BRUTE_FORCE_LIMIT = 10 ** 6


def brute_force_cohomology(m: CyclicGModule) -> CohomologyReport:
    """Same report, computed by enumerating the elements of a finite M."""
    size = module_order(m)
    if size is None or size > _BRUTE_FORCE_LIMIT:
        raise ValueError("module is infinite or too large to enumerate")
    r = m.rank
    rel = m.relations_matrix()
    # coordinates: U maps the relation lattice onto span(d_i e_i), so
    # M = prod Z/d_i in y = U x coordinates
    if rel and rel[0]:
        u, dmat, _ = smith_normal_form(rel)
        ncols = len(rel[0])
        d = [dmat[i][i] if i < min(r, ncols) else 0 for i in range(r)]
    else:
        u = identity_matrix(r)
        d = [0] * r
    assert all(x != 0 for x in d)
    uinv = mat_inverse_unimodular(u)
    act_y = mat_mul(mat_mul(u, m.action_matrix()), uinv)
    norm_y = mat_mul(mat_mul(u, norm_element_matrix(m)), uinv)

    def red(v):
        return tuple(x % di for x, di in zip(v, d))

    elements = [red(v) for v in product(*[range(di) for di in d])]
    act = {y: red(mat_vec(act_y, list(y))) for y in elements}
    nrm = {y: red(mat_vec(norm_y, list(y))) for y in elements}
    zero = (0,) * r

    invariants = [y for y in elements if act[y] == y]
    norm_image = {nrm[y] for y in elements}
    norm_kernel = [y for y in elements if nrm[y] == zero]
    gm1_image = {red([a - b for a, b in zip(act[y], y)]) for y in elements}

    h2 = _quotient_invariants(invariants, norm_image, d, m.p)
    h1 = _quotient_invariants(norm_kernel, gm1_image, d, m.p)
    order1 = 1
    for t in h1:
        order1 *= t
    order2 = 1
    for t in h2:
        order2 *= t
    chi = ord_p(order2, m.p) - ord_p(order1, m.p)
    return CohomologyReport(tuple(h1), tuple(h2), chi)


def _quotient_invariants(big: list, small: set, d: list[int], p: int) -> list[int]:
    """Elementary divisors of the p-group big/small by order counting.

    For each j, the cosets killed by p^j are counted as
    |{x in big : p^j x in small}| / |small|.
    """
    size = len(big) // len(small)
    if size == 1:
        return []
    # n_j = log_p(number of cosets with p^j * coset = 0)
    ns = [0]
    j = 1
    while p ** ns[-1] < size:
        pj = p ** j
        count = sum(1 for y in big
                    if tuple(pj * x % di for x, di in zip(y, d)) in small)
        assert count % len(small) == 0
        nj = _log_exact(count // len(small), p)
        ns.append(nj)
        j += 1
    # r_j = number of cyclic factors of order >= p^j
    rs = [ns[j] - ns[j - 1] for j in range(1, len(ns))]
    divisors = []
    for j in range(len(rs), 0, -1):
        exactly = rs[j - 1] - (rs[j] if j < len(rs) else 0)
        divisors = [p ** j] * exactly + divisors
    divisors.sort()
    return divisors


def _log_exact(n: int, p: int) -> int:
    e = 0
    while n > 1:
        assert n % p == 0
        n //= p
        e += 1
    return e
