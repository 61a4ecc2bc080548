"""Face lattices of the polytope families: simplices, T^{d,d-i}_m, prisms,
pyramids, stacked polytopes, duals and the nabla polytope."""
from __future__ import annotations

from itertools import combinations

from .errors import FacetNotSimplex, SpecInvariantViolated
from .lattice import (GradedLattice, build_from_covers, dual, is_boolean, iter_bits,
                      pyramid)
from .simplicial import SimplicialComplex

TOP = "top"


def boolean_lattice(n: int) -> GradedLattice:
    """All subsets of ``{0..n-1}``; the face lattice of ``Delta^{n-1}``."""
    if n < 0:
        raise SpecInvariantViolated("boolean_lattice needs n >= 0")
    ranks = {}
    covers = []
    for r in range(n + 1):
        for s in combinations(range(n), r):
            ranks[s] = r
    for s in ranks:
        for v in range(n):
            if v not in s:
                covers.append((s, tuple(sorted(s + (v,)))))
    labels = {s: "{" + ",".join(map(str, s)) + "}" for s in ranks}
    if n == 0:
        return GradedLattice([0], [[]], keys=[()], labels=["{}"])
    return build_from_covers(covers, ranks=ranks, labels=labels)


def face_lattice_from_complex(C: SimplicialComplex) -> GradedLattice:
    """Faces of ``C`` ordered by inclusion, with the empty face and a top.

    Keys are frozensets of vertex labels; the top has key ``"top"``.
    The result is graded only when ``C`` is pure.
    """
    ranks = {frozenset(): 0}
    covers = []
    labels = {frozenset(): "{}"}
    for k in range(C.dim + 1):
        for f in C.faces(k):
            key = frozenset(C.labels_of(f))
            ranks[key] = k + 1
            labels[key] = "{" + ",".join(str(v) for v in C.labels_of(f)) + "}"
            for j in range(len(f)):
                covers.append((frozenset(C.labels_of(f[:j] + f[j + 1:])), key))
    ranks[TOP] = C.dim + 2
    labels[TOP] = "top"
    for f in C.facets:
        covers.append((frozenset(C.labels_of(f)), TOP))
    return build_from_covers(covers, ranks=ranks, labels=labels)


def tdm_simplicial(i: int, m: int) -> SimplicialComplex:
    """The join of the boundaries of ``Delta^m`` and ``Delta^{i-m}``.

    Vertices ``0..m`` form one simplex and ``m+1..i+1`` the other; the facets
    are the sets missing exactly one vertex from each side.
    """
    if not (i >= 2 and 1 <= m <= i // 2):
        raise SpecInvariantViolated(f"T^{i}_{m} needs i >= 2 and 1 <= m <= floor(i/2)")
    pos = range(0, m + 1)
    neg = range(m + 1, i + 2)
    verts = list(range(i + 2))
    facets = [[v for v in verts if v not in (p, q)] for p in pos for q in neg]
    return SimplicialComplex(facets, vertices=verts)


def tdm_lattice(d: int, i: int, m: int) -> GradedLattice:
    """Face lattice of ``T^{d,d-i}_m``: a ``(d-i)``-fold pyramid over ``T^i_m``."""
    if not (2 <= i <= d and 1 <= m <= i // 2):
        raise SpecInvariantViolated(f"tdm({d},{i},{m}) needs 2 <= i <= d and 1 <= m <= floor(i/2)")
    return pyramid(face_lattice_from_complex(tdm_simplicial(i, m)), d - i)


def product_polytope_lattice(L1: GradedLattice, L2: GradedLattice) -> GradedLattice:
    """Face lattice of the product of two polytopes.

    Nonempty faces are pairs of nonempty faces; a fresh bottom is added.
    """
    ranks = {"bottom": 0}
    labels = {"bottom": "{}"}
    covers = []
    for x in range(1, len(L1)):
        for y in range(1, len(L2)):
            ranks[(x, y)] = L1.rank(x) + L2.rank(y) - 1
            labels[(x, y)] = f"{L1.label(x)}x{L2.label(y)}"
            for x2 in L1.upper_covers(x):
                covers.append(((x, y), (x2, y)))
            for y2 in L2.upper_covers(y):
                covers.append(((x, y), (x, y2)))
    for a in L1.elements_of_rank(1):
        for b in L2.elements_of_rank(1):
            covers.append(("bottom", (a, b)))
    return build_from_covers(covers, ranks=ranks, labels=labels)


def prism(s: int) -> GradedLattice:
    """``Delta^1 x Delta^{s-1}``."""
    if s < 1:
        raise SpecInvariantViolated("prism(s) needs s >= 1")
    return product_polytope_lattice(boolean_lattice(2), boolean_lattice(s))


def grunbaum_minimizer(d: int, s: int) -> GradedLattice:
    """``Pyr^{d-s}(Delta^1 x Delta^{s-1})``, which has ``d+s`` vertices."""
    if not 2 <= s <= d:
        raise SpecInvariantViolated(f"gmin({d},{s}) needs 2 <= s <= d")
    return pyramid(prism(s), d - s)


def simplex_facets(L: GradedLattice) -> list:
    """Coatoms whose lower interval is Boolean, sorted lexicographically by
    the ids of the atoms below them."""
    found = []
    for F in L.elements_of_rank(L.height - 1):
        if L.support_mask(F).bit_count() == L.rank(F) and is_boolean(L.interval(L.bottom, F)):
            found.append(F)
    return sorted(found, key=lambda F: tuple(iter_bits(L.support_mask(F))))


def stack_over_facet(L: GradedLattice, F: int) -> GradedLattice:
    """Combinatorial stacking: drop facet ``F`` and cone its boundary from a
    new vertex ``w``."""
    if L.rank(F) != L.height - 1:
        raise FacetNotSimplex(f"{L.label(F)} is not a facet")
    if not is_boolean(L.interval(L.bottom, F)):
        raise FacetNotSimplex(f"facet {L.label(F)} is not a simplex")
    w = f"w{L.whitney(1)}"
    below = [g for g in iter_bits(L.down_mask(F)) if g != F]
    below_set = set(below)
    ranks = {}
    labels = {}
    covers = []
    for x in range(len(L)):
        if x != F:
            ranks[("o", x)] = L.rank(x)
            labels[("o", x)] = L.label(x)
    for g in below:
        ranks[("w", g)] = L.rank(g) + 1
        labels[("w", g)] = w if g == L.bottom else f"{L.label(g)}+{w}"
    for x, y in L.covers():
        if F not in (x, y):
            covers.append((("o", x), ("o", y)))
    for g in below:
        covers.append((("o", g), ("w", g)))
        for g2 in L.upper_covers(g):
            if g2 in below_set:
                covers.append((("w", g), ("w", g2)))
            elif g2 == F:
                covers.append((("w", g), ("o", L.top)))
    return build_from_covers(covers, ranks=ranks, labels=labels)


def stack(L: GradedLattice) -> GradedLattice:
    """Stack over the lexicographically smallest simplex facet."""
    facets = simplex_facets(L)
    if not facets:
        raise FacetNotSimplex("lattice has no simplex facet to stack on")
    return stack_over_facet(L, facets[0])


def stacked_polytope(d: int, n: int) -> GradedLattice:
    """``Delta^d`` stacked ``n-d-1`` times."""
    if d < 1 or n < d + 1:
        raise SpecInvariantViolated(f"stacked_polytope({d},{n}) needs d >= 1 and n >= d+1")
    L = boolean_lattice(d + 1)
    for _ in range(n - d - 1):
        L = stack(L)
    return L


def nabla(d: int, facet: int | None = None) -> GradedLattice:
    """Dual of ``T^{d,d-2}_1`` stacked over one simplex facet.

    ``facet`` selects the simplex facet of ``tdm_lattice(d, 2, 1)``; by default
    the lexicographically smallest one.
    """
    if d < 2:
        raise SpecInvariantViolated("nabla(d) needs d >= 2")
    T = tdm_lattice(d, 2, 1)
    if facet is None:
        return dual(stack(T))
    return dual(stack_over_facet(T, facet))
