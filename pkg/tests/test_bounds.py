import pytest

import oracles
from polyface import OutOfFormulaRange, PreconditionViolated, realize
from polyface.bounds import (binom, bound_A, bound_B, check_relations, delta, enumerate_class,
                             fvec_tdm_formula, key_prop_bounds, key_prop_count, key_prop_sweep, pascal_remainder,
                             phi, stacked_lbt_fvector, tdm_fvector_formula, verify_2d1_bound, verify_appendix,
                             verify_complete_ordering, verify_grunbaum, verify_relations, verify_simple_case)
from polyface.constructions import boolean_lattice, grunbaum_minimizer, nabla, stacked_polytope, tdm_lattice
from polyface.lattice import dual
from polyface.specs import zoo


def test_binom_convention():
    assert binom(5, 2) == 10
    assert binom(3, 4) == 0 and binom(3, -1) == 0 and binom(-2, 1) == 0
    assert binom(0, 0) == 1


def test_phi_values():
    for d in range(1, 10):
        for k in range(d):
            assert phi(k, d + 1, d) == binom(d + 1, k + 1)
        if d >= 2:  # at d = 1 the 2d vertices already form a simplex
            assert phi(d - 1, 2 * d, d) == d + 2
    assert phi(1, 7, 4) == 15


def test_tdm_formula_values():
    assert fvec_tdm_formula(5, 5, 2, 3) == 30
    for d in range(2, 10):
        for i in range(2, d + 1):
            for m in range(1, i // 2 + 1):
                assert fvec_tdm_formula(d, i, m, d - 1) == d + 1 + m * (i - m)
                assert list(tdm_fvector_formula(d, i, m)) == oracles.tdm_fvector(d, i, m)


def test_relation_strictness_small_case():
    # both members have d+2 = 8 vertices, so f_0 is equal
    rep = check_relations(6, 4, 1, 0)
    assert rep.passed
    assert fvec_tdm_formula(6, 4, 1, 0) == fvec_tdm_formula(6, 4, 2, 0) == 8


def test_relations_at_facets_always_strict():
    for d in range(3, 10):
        for i in range(2, d + 1):
            for m in range(1, i // 2 + 1):
                if m + 1 <= i // 2:
                    assert fvec_tdm_formula(d, i, m, d - 1) < fvec_tdm_formula(d, i, m + 1, d - 1)
                if i + 1 <= d:
                    assert fvec_tdm_formula(d, i, m, d - 1) < fvec_tdm_formula(d, i + 1, m, d - 1)


def test_relations_sweep():
    rep = verify_relations(9)
    assert rep.passed and rep.data["instances"] > 300


def test_relations_out_of_range():
    with pytest.raises(PreconditionViolated):
        check_relations(4, 5, 1, 0)
    assert check_relations(2, 2, 1, 1).skipped


def test_enumerate_class():
    assert enumerate_class(6, 5) == [(4, 2), (5, 1)]
    assert enumerate_class(5, 6) == []
    for d in range(2, 10):
        assert enumerate_class(d, 2) == [(2, 1)]


def test_complete_ordering():
    certs = verify_complete_ordering(6, construct=True)
    cls = [c for c in certs if c.facets == 11][0]
    assert cls.chain == [(5, 1), (4, 2)] and cls.valid
    f1 = tuple(tdm_lattice(6, 5, 1).f_vector())
    f2 = tuple(tdm_lattice(6, 4, 2).f_vector())
    assert all(a <= b for a, b in zip(f1, f2))
    for d in range(2, 13):
        assert all(c.valid for c in verify_complete_ordering(d, construct=False))
    single = [c for c in certs if len(c.members) == 1]
    assert single and all(c.valid for c in single)


def test_bound_values():
    assert delta(1, 6) == 1
    assert delta(3, 9) == 8
    for d in range(3, 9):
        fv = tuple(nabla(d).f_vector())
        for m in range(1, d):
            assert bound_B(m, d) == fv[m]


def test_delta_pascal_remainder():
    for d in range(5, 60):
        for m in range(1, d):
            want = 0 if d % 2 else binom(d // 2, m) + binom(d // 2 - 1, m)
            assert pascal_remainder(m, d) == want


def test_appendix():
    rep = verify_appendix(200)
    assert rep.passed
    assert rep.data["delta_1_6"] == 1
    for d, m in rep.data["crossover"].items():
        assert m >= (d + 1) // 2 - 1
    with pytest.raises(PreconditionViolated):
        verify_appendix(5)


def test_grunbaum_on_simplex_and_minimizers():
    for d in range(2, 7):
        rep = verify_grunbaum(boolean_lattice(d + 1))
        assert rep.passed and all(r["slack"] == 0 for r in rep.rows)
        for s in range(2, d + 1):
            rep = verify_grunbaum(grunbaum_minimizer(d, s))
            assert rep.passed
            assert all(r["slack"] == 0 for r in rep.rows)


def test_grunbaum_preconditions():
    with pytest.raises(PreconditionViolated):
        verify_grunbaum(nabla(3))
    from polyface.constructions import face_lattice_from_complex
    from polyface.simplicial import SimplicialComplex
    glued = face_lattice_from_complex(SimplicialComplex([("a", "b", "c"), ("b", "c", "d")]))
    with pytest.raises(PreconditionViolated):
        verify_grunbaum(glued)


def test_grunbaum_equality_only_at_minimizers():
    from polyface.topology import check_d_plus_2_facets_polytopal
    for d in range(3, 6):
        for spec in zoo(d):
            L = realize(spec)
            s = len(L.atoms()) - d
            if not 1 <= s <= d:
                continue
            rep = verify_grunbaum(L)
            assert rep.passed, spec
            if rep.data["equality_at"] and s >= 2:
                ident = check_d_plus_2_facets_polytopal(L)
                assert ident.data["i"] == s and ident.data["m"] == 1, spec


def test_key_prop_boolean_tight():
    for d in range(2, 6):
        L = boolean_lattice(d + 1)
        atoms = sorted(L.atoms())
        for size in range(1, d + 2):
            for k in range(d):
                res = key_prop_count(L, atoms[:size], k)
                assert res.count == res.bound_i
        res = key_prop_count(L, atoms[:1], 2)
        assert res.count == binom(d, 2)


def test_key_prop_bounds_formula():
    b1, b2, b3 = key_prop_bounds(5, 3, 2)
    assert b1 == binom(5, 2) + binom(4, 2) + binom(3, 2)
    assert b2 == b1 + binom(3, 1)
    assert b3 == binom(5, 2) + binom(4, 2) + binom(4, 2)


def test_key_prop_hypotheses_detected():
    L = nabla(4)
    heavy = [a for a in L.atoms() if len(L.upper_covers(a)) > 4]
    assert heavy
    res = key_prop_count(L, heavy[:1], 1)
    assert res.bound_ii is not None and res.passed


def test_key_prop_nabla_outside_facet():
    L = nabla(4)
    for F in L.coatoms():
        S = sorted(L.atoms() - L.atoms_below(F))
        for k in range(4):
            assert key_prop_count(L, S, k).passed


def test_key_prop_random_sweep_is_seeded():
    L = grunbaum_minimizer(6, 4)
    a = key_prop_sweep(L, max_subsets=300, seed=11)
    b = key_prop_sweep(L, max_subsets=300, seed=11)
    assert a.passed and a.seed == 11 and a.data == b.data


def test_key_prop_random_three_subsets():
    import random
    L = grunbaum_minimizer(6, 4)
    atoms = sorted(L.atoms())
    rng = random.Random(2024)
    for _ in range(1000):
        S = rng.sample(atoms, 3)
        for k in range(6):
            assert key_prop_count(L, S, k).passed


def test_two_part_bound_sharp_instances():
    for d in (6, 8):
        L = dual(tdm_lattice(d, d // 2 + 2, 2))
        fv = L.f_vector()
        assert fv[0] == 2 * d + 1 and fv[d - 1] == d + 2
        rep = verify_2d1_bound(L)
        assert rep.passed and rep.data["bound"] == "A"
        assert rep.data["attained"] == list(range(1, d))
    for d in range(3, 9):
        rep = verify_2d1_bound(nabla(d))
        assert rep.passed and rep.data["bound"] == "B"
        assert rep.data["attained"] == list(range(1, d))


def test_two_part_bound_preconditions():
    with pytest.raises(PreconditionViolated):
        verify_2d1_bound(boolean_lattice(5))


def test_two_part_on_stacked_dual():
    for d in range(3, 6):
        L = dual(stacked_polytope(d, d + 3))
        if L.f_vector()[0] >= 2 * d + 1:
            assert verify_2d1_bound(L).passed


def test_stacked_formula():
    assert stacked_lbt_fvector(3, 6, 1) == 12
    assert stacked_lbt_fvector(3, 6, 0) == 6
    for d in range(2, 9):
        fv = tuple(stacked_polytope(d, d + 3).f_vector())
        for j in range(d - 1):
            m = d - 1 - j
            assert stacked_lbt_fvector(d, d + 3, j) == fv[j]
            assert fv[j] == binom(d, m + 1) * (d + 3) - binom(d + 1, m + 1) * (d - 1 - m)
    with pytest.raises(OutOfFormulaRange):
        stacked_lbt_fvector(4, 7, 3)


def test_simple_case():
    rep = verify_simple_case(3)
    assert rep.passed and rep.rows[0]["lhs"] == 12 and rep.rows[0]["rhs"] == 12
    assert bound_B(1, 3) == 11
    for d in range(3, 13):
        rep = verify_simple_case(d)
        assert rep.passed and len(rep.rows) == d - 2
    with pytest.raises(PreconditionViolated):
        verify_simple_case(2)
