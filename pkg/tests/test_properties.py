"""Property tests over random parameters and the construction zoo."""
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from polyface import realize
from polyface.bounds import binom, delta, fvec_tdm_formula, phi, stacked_lbt_fvector
from polyface.constructions import boolean_lattice, grunbaum_minimizer, nabla, tdm_lattice
from polyface.lattice import (check_all_cones_boolean, dual, is_boolean, is_coatom_distinguishable,
                              is_diamond, pyramid)
from polyface.specs import zoo

SLOW = settings(max_examples=25, deadline=None)


@st.composite
def tdm_params(draw, dmax=7):
    d = draw(st.integers(2, dmax))
    i = draw(st.integers(2, d))
    m = draw(st.integers(1, i // 2))
    return d, i, m


@st.composite
def zoo_specs(draw, dmax=4):
    d = draw(st.integers(2, dmax))
    return draw(st.sampled_from(zoo(d)))


@given(st.integers(0, 80), st.integers(-3, 80))
def test_binom_matches_pascal(a, b):
    assert binom(a, b) == oracles.pascal(a, b)


@given(st.integers(1, 60), st.integers(1, 60))
def test_binom_pascal_rule(a, b):
    assert binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b)


@SLOW
@given(st.integers(0, 7))
def test_boolean_lattice_counts(n):
    L = boolean_lattice(n)
    assert len(L) == 2 ** n
    assert is_boolean(L) and is_diamond(L)


@SLOW
@given(zoo_specs())
def test_dual_is_an_involution(spec):
    L = realize(spec)
    D = dual(L)
    assert dual(D) == L
    assert tuple(D.f_vector()) == tuple(reversed(tuple(L.f_vector())))


@SLOW
@given(zoo_specs(3))
def test_pyramid_face_recursion(spec):
    L = realize(spec)
    assert list(pyramid(L).f_vector()) == oracles.pyramid_fvector(list(L.f_vector()))


@SLOW
@given(zoo_specs())
def test_euler_relation(spec):
    f = realize(spec).f_vector()
    d = f.dim
    assert sum((-1) ** k * f[k] for k in range(d)) == 1 - (-1) ** d


@SLOW
@given(zoo_specs())
def test_diamond_implies_coatom_distinguishable(spec):
    L = realize(spec)
    assert is_diamond(L)
    assert is_coatom_distinguishable(L)


@SLOW
@given(zoo_specs(), st.data())
def test_boolean_cones_on_zoo(spec, data):
    L = realize(spec)
    hi = data.draw(st.sampled_from(sorted(L.coatoms()) + [L.top]))
    assert check_all_cones_boolean(L, L.bottom, hi).ok


@SLOW
@given(zoo_specs(), st.data())
def test_intervals_of_diamond_lattices_are_diamond(spec, data):
    L = realize(spec)
    x = data.draw(st.integers(0, len(L) - 1))
    up = [y for y in range(len(L)) if L.leq(x, y)]
    y = data.draw(st.sampled_from(up))
    assert is_diamond(L.interval(x, y))


@SLOW
@given(tdm_params())
def test_tdm_construction_matches_formula(params):
    d, i, m = params
    fv = tdm_lattice(d, i, m).f_vector()
    assert [fv[k] for k in range(d)] == [fvec_tdm_formula(d, i, m, k) for k in range(d)]


@given(tdm_params(dmax=40), st.data())
def test_tdm_formula_matches_oracle_counts(params, data):
    d, i, m = params
    if d > 9:
        # the oracle enumerates vertex subsets of the join, so keep i small
        i = min(i, 9)
        m = min(m, i // 2)
    k = data.draw(st.integers(0, d - 1))
    assert fvec_tdm_formula(d, i, m, k) == oracles.tdm_fvector(d, i, m)[k]


@given(st.integers(2, 40), st.data())
def test_phi_below_every_dual_tdm_with_same_vertex_count(d, data):
    s = data.draw(st.integers(2, d))
    members = [(i, m) for i in range(2, d + 1) for m in range(1, i // 2 + 1) if m * (i - m) == s - 1]
    for i, m in members:
        for k in range(d):
            assert fvec_tdm_formula(d, i, m, d - 1 - k) >= phi(k, d + s, d)
    if d <= 10:
        assert [phi(k, d + s, d) for k in range(d)] == oracles.gmin_fvector(d, s)


@SLOW
@given(st.integers(2, 7), st.data())
def test_grunbaum_minimizer_attains_phi(d, data):
    s = data.draw(st.integers(2, d))
    fv = grunbaum_minimizer(d, s).f_vector()
    assert all(fv[k] == phi(k, d + s, d) for k in range(d))


@given(st.integers(6, 300), st.data())
def test_delta_nonnegative(d, data):
    hi = (d + 1) // 2 - 1
    if hi <= 1:
        return
    m = data.draw(st.integers(1, hi - 1))
    assert delta(m, d) >= 0


@given(st.integers(2, 30), st.integers(0, 10), st.data())
def test_stacked_formula_matches_recursion(d, extra, data):
    n = d + 1 + extra
    j = data.draw(st.integers(0, d - 2))
    assert stacked_lbt_fvector(d, n, j) == oracles.stacked_fvector(d, n)[j]


@SLOW
@given(st.integers(2, 7))
def test_nabla_vertex_count(d):
    assert nabla(d).f_vector()[0] == 2 * d + 1
