import random

from iwasawa2.cohomology import CyclicGModule, indecomposable_module, make_module
from iwasawa2.arith import identity_matrix, mat_mul, mat_vec

_BLOCK_KINDS = ("trivial", "regular", "augmentation")


def _random_unimodular_pair(rng: random.Random, r: int, ops: int = 4):
    """(P, P^-1) built from random elementary row operations."""
    p_mat = identity_matrix(r)
    p_inv = identity_matrix(r)
    for _ in range(ops):
        i, j = rng.sample(range(r), 2) if r > 1 else (0, 0)
        if i == j:
            continue
        c = rng.choice([-2, -1, 1, 2])
        # P <- E P, P^-1 <- P^-1 E^-1 with E = I + c e_ij
        for col in range(r):
            p_mat[i][col] += c * p_mat[j][col]
        for row in range(r):
            p_inv[row][j] -= c * p_inv[row][i]
    return p_mat, p_inv


def random_finite_module(rng: random.Random, p: int, size_cap: int = 10 ** 4,
                         diagonal_relations: bool = False) -> CyclicGModule:
    """Random finite CyclicGModule for G = Z/p with |M| <= size_cap.

    The action is a unimodular conjugate of a direct sum of the three
    indecomposable lattice actions, so it has exact order dividing p;
    relations are m*Z^r plus (optionally) a G-orbit of a random vector.
    """
    while True:
        kinds = [rng.choice(_BLOCK_KINDS) for _ in range(rng.randint(1, 3))]
        r = sum({"trivial": 1, "regular": p, "augmentation": p - 1}[k]
                for k in kinds)
        if r <= 8:
            break
    blocks = [indecomposable_module(p, k).action_matrix() for k in kinds]
    action = [[0] * r for _ in range(r)]
    off = 0
    for b in blocks:
        for i in range(len(b)):
            for j in range(len(b)):
                action[off + i][off + j] = b[i][j]
        off += len(b)
    moduli = [m for m in (2, 3, 4, 5, 8, 9) if m ** r <= size_cap]
    m = rng.choice(moduli) if moduli else 2
    if m ** r > size_cap:
        m = 2
    pm, pinv = _random_unimodular_pair(rng, r)
    action = mat_mul(mat_mul(pm, action), pinv)
    relations = [[m if i == j else 0 for j in range(r)] for i in range(r)]
    if not diagonal_relations and rng.random() < 0.5:
        v = [rng.randrange(m) for _ in range(r)]
        orbit = [v]
        for _ in range(p - 1):
            orbit.append(mat_vec(action, orbit[-1]))
        for w in orbit:
            for i in range(r):
                relations[i].append(w[i])
    return make_module(p, 1, relations, action)
