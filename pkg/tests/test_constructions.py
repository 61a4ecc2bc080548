import pytest

import oracles
from polyface import FacetNotSimplex, ParseError, SpecInvariantViolated, parse_spec, realize
from polyface.constructions import (boolean_lattice, face_lattice_from_complex, grunbaum_minimizer, nabla,
                                    prism, product_polytope_lattice, simplex_facets, stack, stack_over_facet,
                                    stacked_polytope, tdm_lattice, tdm_simplicial)
from polyface.lattice import dual, is_boolean, is_diamond, is_lattice, pyramid
from polyface.simplicial import simplex_boundary
from polyface.specs import Dual, GrunbaumMin, Nabla, Pyr, Simplex, Stack, Tdm, zoo
from polyface.topology import is_pseudomanifold


def fv(L):
    return tuple(L.f_vector())


def test_boolean_lattice_basics():
    assert len(boolean_lattice(1)) == 2
    for d in range(1, 7):
        assert fv(boolean_lattice(d + 1)) == tuple(oracles.pascal(d + 1, k + 1) for k in range(d))
        assert is_diamond(boolean_lattice(d + 1))


def test_tdm_simplicial_square():
    C = tdm_simplicial(2, 1)
    assert C.f_vector() == (4, 4)


def test_tdm_simplicial_facets():
    assert len(tdm_simplicial(5, 2).facets) == 12
    L = face_lattice_from_complex(tdm_simplicial(5, 2))
    assert is_diamond(L) and is_pseudomanifold(L).passed


@pytest.mark.parametrize("i,m", [(2, 1), (3, 1), (4, 1), (4, 2), (5, 2), (6, 3)])
def test_tdm_simplicial_matches_subset_count(i, m):
    assert list(tdm_simplicial(i, m).f_vector()) == oracles.join_of_boundaries_fvector(i, m)


def test_tdm_invalid_parameters():
    with pytest.raises(SpecInvariantViolated):
        tdm_simplicial(4, 3)
    with pytest.raises(SpecInvariantViolated):
        tdm_lattice(2, 3, 1)


def test_tdm_lattice_values():
    assert fv(tdm_lattice(5, 5, 2))[3] == 30
    assert fv(tdm_lattice(6, 5, 2))[5] == 13
    for d in range(2, 8):
        assert fv(tdm_lattice(d, 2, 1))[d - 1] == d + 2


@pytest.mark.parametrize("d", range(2, 8))
def test_tdm_lattice_matches_oracle(d):
    for i in range(2, d + 1):
        for m in range(1, i // 2 + 1):
            assert list(fv(tdm_lattice(d, i, m))) == oracles.tdm_fvector(d, i, m)


def test_products():
    assert fv(product_polytope_lattice(boolean_lattice(2), boolean_lattice(2))) == (4, 4)
    assert fv(prism(3)) == (6, 9, 5)
    for s in range(1, 5):
        assert fv(prism(s))[0] == 2 * s
    L = product_polytope_lattice(boolean_lattice(3), boolean_lattice(3))
    assert fv(L)[0] == 9 and is_lattice(L) and is_diamond(L)


def test_grunbaum_minimizer():
    assert fv(grunbaum_minimizer(4, 2)) == (6, 13, 13, 6)
    assert fv(grunbaum_minimizer(4, 3))[1] == 15
    for d in range(2, 7):
        assert fv(grunbaum_minimizer(d, d))[0] == 2 * d
        for s in range(2, d + 1):
            assert list(fv(grunbaum_minimizer(d, s))) == oracles.gmin_fvector(d, s)
    with pytest.raises(SpecInvariantViolated):
        grunbaum_minimizer(3, 4)


def test_stacking_small():
    one = stack(boolean_lattice(4))
    assert fv(one) == (5, 9, 6)
    assert fv(stack(one)) == (6, 12, 8)


def test_stacking_increments():
    # each stack adds C(d, k) new k-faces below the top dimension and d-1 facets
    for spec in ("simplex(3)", "simplex(5)", "tdm(4,2,1)", "dual(gmin(4,4))"):
        L = realize(spec)
        if not simplex_facets(L):
            continue
        d = L.height - 1
        before, after = fv(L), fv(stack(L))
        for k in range(d - 1):
            assert after[k] - before[k] == oracles.pascal(d, k)
        assert after[d - 1] - before[d - 1] == d - 1


def test_stack_requires_simplex_facet():
    P = pyramid(prism(2))
    base = [F for F in P.coatoms() if len(P.atoms_below(F)) == 4][0]
    with pytest.raises(FacetNotSimplex):
        stack_over_facet(P, base)
    with pytest.raises(FacetNotSimplex):
        stack(product_polytope_lattice(prism(2), boolean_lattice(2)))  # cube


def test_stacked_polytope():
    for d in range(2, 6):
        assert is_boolean(stacked_polytope(d, d + 1))
        assert fv(stacked_polytope(d, d + 3))[0] == d + 3
    assert fv(stacked_polytope(3, 6))[1] == 12
    for d in range(2, 7):
        for n in range(d + 1, d + 5):
            assert list(fv(stacked_polytope(d, n))) == oracles.stacked_fvector(d, n)


def test_nabla_values():
    assert fv(nabla(3)) == (7, 11, 6)
    L = nabla(4)
    assert fv(L) == (9, 19, 17, 7)
    assert L.f_vector().euler_characteristic() == 0
    for d in range(2, 8):
        assert fv(nabla(d))[0] == 2 * d + 1
        assert list(fv(nabla(d))) == oracles.nabla_fvector(d)


@pytest.mark.parametrize("d", [3, 4, 5])
def test_nabla_independent_of_stacked_facet(d):
    T = tdm_lattice(d, 2, 1)
    values = {fv(nabla(d, facet=F)) for F in simplex_facets(T)}
    assert len(values) == 1


def test_face_lattice_of_triangle_boundary():
    L = face_lattice_from_complex(simplex_boundary(2))
    assert L.height == 3 and fv(L) == (3, 3)


def test_realize_examples():
    assert fv(realize(Dual(Dual(Nabla(3))))) == (7, 11, 6)
    assert len(realize(Tdm(5, 5, 2)).coatoms()) == 12
    assert fv(realize("pyr(prism(2),2)")) == (6, 13, 13, 6)


def test_euler_relation_over_zoo():
    for d in range(2, 6):
        for spec in zoo(d):
            f = realize(spec).f_vector()
            assert f.euler_characteristic() == 1 - (-1) ** d, spec


def test_zoo_lattices_are_diamond_lattices():
    for d in range(2, 6):
        for spec in zoo(d):
            L = realize(spec)
            assert L.height == d + 1
            assert is_lattice(L) and is_diamond(L), spec


def test_non_simplices_are_not_boolean():
    for d in range(2, 6):
        for spec in zoo(d):
            assert is_boolean(realize(spec)) == isinstance(spec, Simplex), spec


# spec strings

def test_parse_round_trip():
    for d in range(2, 6):
        for spec in zoo(d):
            assert parse_spec(str(spec)) == spec


def test_parse_forms():
    assert parse_spec("pyr(simplex(2))") == Pyr(Simplex(2), 1)
    assert parse_spec(" stack( tdm(4, 3, 1) ) ") == Stack(Tdm(4, 3, 1))
    assert parse_spec("gmin(5,2)") == GrunbaumMin(5, 2)


@pytest.mark.parametrize("text", ["", "cube(3)", "simplex(3", "simplex(3))", "tdm(4,2)",
                                  "stack(3)", "simplex(a)", "nabla(3) x"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_spec(text)


def test_spec_invariants_checked_on_realize():
    with pytest.raises(SpecInvariantViolated):
        realize("tdm(2,3,1)")
    with pytest.raises(SpecInvariantViolated):
        realize("gmin(3,1)")
    with pytest.raises(SpecInvariantViolated):
        realize("nabla(1)")


def test_spec_dims():
    assert parse_spec("pyr(nabla(3),2)").dim == 5
    assert parse_spec("dual(stack(simplex(4)))").dim == 4
