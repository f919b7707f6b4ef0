import random

import pytest

from conftest import random_finite_module
from iwasawa2.arith import identity_matrix, mat_mul
from iwasawa2.cohomology import (
    brute_force_cohomology,
    chi_additivity_check,
    cohomology,
    direct_sum,
    dual_module,
    indecomposable_module,
    invariant_submodule_rank,
    make_module,
    module_invariants,
    module_order,
    norm_element_matrix,
)

# (rank, invariant rank, H^2, H^1, chi) rows for the three indecomposables
TABLE_ROWS = {
    "trivial": (1, 1, "p", (), 1),
    "regular": ("p", 1, (), (), 0),
    "augmentation": ("p-1", 0, (), "p", -1),
}


def _resolve(value, p):
    if value == "p":
        return p
    if value == "p-1":
        return p - 1
    return value


class TestNormElement:
    def test_trivial_action(self):
        m = make_module(3, 1, [[]], [[1]])
        assert norm_element_matrix(m) == [[3]]

    def test_swap_action(self):
        m = indecomposable_module(2, "regular")
        assert m.action_matrix() == [[0, 1], [1, 0]]
        assert norm_element_matrix(m) == [[1, 1], [1, 1]]

    def test_order_one_action(self):
        m = make_module(5, 1, [[], []], identity_matrix(2))
        assert norm_element_matrix(m) == [[5, 0], [0, 5]]


class TestTableRows:
    @pytest.mark.parametrize("p", [2, 3, 5, 17])
    @pytest.mark.parametrize("kind", ["trivial", "regular", "augmentation"])
    def test_row(self, p, kind):
        module = indecomposable_module(p, kind)
        rank, inv_rank, h2, h1, chi = TABLE_ROWS[kind]
        torsion, free = module_invariants(module)
        assert torsion == [] and free == _resolve(rank, p)
        assert invariant_submodule_rank(module) == inv_rank
        report = cohomology(module)
        expect_h2 = (p,) if h2 == "p" else ()
        expect_h1 = (p,) if h1 == "p" else ()
        assert report.h2_invariants == expect_h2
        assert report.h1_invariants == expect_h1
        assert report.chi == chi


class TestFiniteModules:
    def test_finite_module_has_chi_zero(self):
        m = make_module(2, 1, [[5]], [[1]])
        report = cohomology(m)
        assert report.chi == 0

    def test_z4_with_negation(self):
        m = make_module(2, 1, [[4]], [[-1]])
        engine = cohomology(m)
        brute = brute_force_cohomology(m)
        assert engine.h1_invariants == brute.h1_invariants == (2,)
        assert engine.h2_invariants == brute.h2_invariants == (2,)

    def test_zero_module(self):
        m = make_module(2, 1, [[1]], [[1]])
        report = brute_force_cohomology(m)
        assert report.h1_invariants == () and report.h2_invariants == ()
        assert report.chi == 0

    def test_brute_force_rejects_infinite(self):
        with pytest.raises(ValueError):
            brute_force_cohomology(indecomposable_module(2, "trivial"))


class TestEngineVsBruteForce:
    def test_random_modules(self):
        rng = random.Random(20260824)
        for _ in range(60):
            p = rng.choice([2, 3, 5])
            m = random_finite_module(rng, p, size_cap=2000)
            assert module_order(m) is not None
            engine = cohomology(m)
            brute = brute_force_cohomology(m)
            assert engine.h1_invariants == brute.h1_invariants
            assert engine.h2_invariants == brute.h2_invariants
            assert engine.chi == brute.chi == 0


class TestChiProperties:
    def test_additivity_table_cases(self):
        z = indecomposable_module(3, "trivial")
        aug = indecomposable_module(3, "augmentation")
        reg = indecomposable_module(3, "regular")
        assert cohomology(direct_sum(z, aug)).chi == 0
        assert cohomology(direct_sum(reg, reg)).chi == 0
        assert cohomology(direct_sum(z, z)).chi == 2
        assert chi_additivity_check(z, aug)

    def test_additivity_random_pairs(self):
        rng = random.Random(99)
        kinds = ["trivial", "regular", "augmentation"]
        for _ in range(20):
            p = rng.choice([2, 3, 5])
            a = indecomposable_module(p, rng.choice(kinds))
            b = indecomposable_module(p, rng.choice(kinds))
            assert chi_additivity_check(a, b)

    def test_duality_on_random_finite_modules(self):
        rng = random.Random(31)
        for _ in range(30):
            p = rng.choice([2, 3, 5])
            m = random_finite_module(rng, p, size_cap=2000,
                                     diagonal_relations=True)
            dual = dual_module(m)
            assert cohomology(dual).chi == -cohomology(m).chi


class TestValidation:
    def test_action_must_preserve_relations(self):
        with pytest.raises(ValueError):
            make_module(2, 1, [[2, 0], [0, 4]], [[0, 1], [1, 0]])

    def test_action_order_must_divide_group_order(self):
        with pytest.raises(ValueError):
            make_module(2, 1, [[], []], [[1, 1], [0, 1]])

    def test_non_prime_rejected(self):
        with pytest.raises(ValueError):
            make_module(4, 1, [[]], [[1]])
