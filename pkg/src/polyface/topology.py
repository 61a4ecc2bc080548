"""Topological checks: order complexes, purity, connectivity, pseudomanifold
and normality tests, links, and simplicial homology with GF(2) coefficients.

Lattice-level variants work directly on a :class:`GradedLattice`; the
complex-level variants take a :class:`SimplicialComplex`.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable

from . import gf2
from .errors import FaceNotInComplex
from .lattice import GradedLattice, dual, is_boolean, iter_bits
from .limits import check_matrix_size
from .reports import CheckReport
from .simplicial import SimplicialComplex


@dataclass(frozen=True)
class HomologyProfile:
    """Betti numbers ``b_0 .. b_dim`` over the two-element field."""

    betti: tuple

    @property
    def top(self) -> int:
        return self.betti[-1] if self.betti else 0

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))

    def __iter__(self):
        return iter(self.betti)

    def __len__(self):
        return len(self.betti)

    def __getitem__(self, k):
        return self.betti[k]

    def __eq__(self, other):
        if isinstance(other, HomologyProfile):
            return self.betti == other.betti
        if isinstance(other, tuple):
            return self.betti == other
        return NotImplemented

    def __hash__(self):
        return hash(self.betti)


class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def groups(self) -> list:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


# order complexes

def count_flags(L: GradedLattice) -> int:
    """Number of maximal chains from bottom to top."""
    ways = [0] * len(L)
    ways[L.bottom] = 1
    for x in range(len(L)):  # ids are sorted by rank
        for y in L.upper_covers(x):
            ways[y] += ways[x]
    return ways[L.top]


def order_complex(L: GradedLattice, labels: str = "id") -> SimplicialComplex:
    """Chains of proper elements of ``L``.

    Vertices are labelled by element id (default), by ``"key"`` or by
    ``"label"``.  The facets are the maximal chains, so for a graded ``L``
    the result is pure of dimension ``height - 2``.
    """
    check_matrix_size(count_flags(L), "order complex facet count")
    proper = list(range(1, len(L) - 1))
    if labels == "id":
        verts = tuple(proper)
    elif labels == "key":
        verts = tuple(L.key(x) for x in proper)
    elif labels == "label":
        verts = tuple(L.label(x) for x in proper)
    else:
        raise ValueError(f"unknown labelling {labels!r}")
    # element x is vertex x-1; chains come out in increasing id order
    facets = [tuple(x - 1 for x in chain) for chain in L.maximal_chains()]
    return SimplicialComplex._from_indexed(verts, facets)


# basic complex predicates

def is_pure(C: SimplicialComplex) -> CheckReport:
    """Purity; witnesses are the facets of less than maximal dimension."""
    top = C.dim + 1
    bad = [C.labels_of(f) for f in C.facets if len(f) != top]
    return CheckReport("pure", bad, params={"dim": C.dim})


def components(C: SimplicialComplex) -> list:
    """Vertex sets (labels) of the connected components of the 1-skeleton."""
    uf = _UnionFind(range(len(C.vertices)))
    for f in C.facets:
        for v in f[1:]:
            uf.union(f[0], v)
    groups = [sorted(g) for g in uf.groups()]
    groups.sort()
    return [C.labels_of(g) for g in groups]


def is_connected(C: SimplicialComplex) -> CheckReport:
    """Connectivity of the 1-skeleton.

    When there are several components, every component after the first
    is reported as a witness.
    """
    comps = components(C)
    return CheckReport("connected", comps[1:], params={"components": len(comps)})


def _lattice_ridge_counts(L: GradedLattice) -> list:
    h = L.height
    out = []
    for r in L.elements_of_rank(h - 2):
        count = sum(1 for y in L.upper_covers(r))
        if count != 2:
            out.append((L.label(r), count))
    return out


def is_pseudomanifold(X) -> CheckReport:
    """Every ridge lies in exactly two facets.

    ``X`` is either a face lattice (ridges are elements of rank
    ``height - 2``, facets are coatoms) or a pure simplicial complex.
    Witnesses are the offending ridges.
    """
    if isinstance(X, GradedLattice):
        bad = [lab for lab, _ in _lattice_ridge_counts(X)]
        return CheckReport("pseudomanifold", bad, params={"dim": X.height - 2})
    C = X
    pure = is_pure(C)
    if not pure.passed:
        return CheckReport("pseudomanifold", pure.witnesses, notes="complex is not pure",
                           params={"dim": C.dim})
    if C.dim < 1:
        # a 0-dimensional pseudomanifold is two points
        bad = [] if len(C.facets) == 2 else [()]
        return CheckReport("pseudomanifold", bad, params={"dim": C.dim})
    counts: dict = {}
    for f in C.facets:
        for j in range(len(f)):
            r = f[:j] + f[j + 1:]
            counts[r] = counts.get(r, 0) + 1
    bad = [C.labels_of(r) for r in sorted(counts) if counts[r] != 2]
    return CheckReport("pseudomanifold", bad, params={"dim": C.dim})


def link(C: SimplicialComplex, tau: Iterable[Hashable]) -> SimplicialComplex:
    """Faces ``s`` disjoint from ``tau`` with ``s | tau`` a face of ``C``.

    The link of a facet is the complex whose only face is empty.
    """
    tau = tuple(tau)
    if tau and not C.contains(tau):
        raise FaceNotInComplex(f"{tau!r} is not a face of the complex")
    if not tau:
        return C
    t = set(C.to_indices(tau))
    facets = [tuple(v for v in f if v not in t) for f in C.facets if t <= set(f)]
    used = sorted({v for f in facets for v in f})
    if not used:
        return SimplicialComplex([()])
    labels = [C.vertices[v] for v in used]
    return SimplicialComplex([C.labels_of(f) for f in facets], vertices=labels)


# homology

def gf2_homology(C: SimplicialComplex) -> HomologyProfile:
    """Betti numbers over GF(2) via boundary ranks.

    The Euler-Poincare relation is checked on every call.
    """
    dim = C.dim
    if dim < 0:
        return HomologyProfile(())
    counts = [len(C.faces(k)) for k in range(dim + 1)]
    ranks = [0] * (dim + 2)  # ranks[k] = rank of the boundary map from k-faces
    for k in range(1, dim + 1):
        ranks[k] = gf2.rank(gf2.boundary_columns(C.faces(k), C.faces(k - 1)))
    betti = tuple(counts[k] - ranks[k] - ranks[k + 1] for k in range(dim + 1))
    chi = sum((-1) ** k * c for k, c in enumerate(counts))
    if sum((-1) ** k * b for k, b in enumerate(betti)) != chi or min(betti) < 0:
        raise ArithmeticError(f"Euler-Poincare check failed: betti={betti}, chi={chi}")
    return HomologyProfile(betti)


def top_betti(C: SimplicialComplex) -> int:
    """Dimension of the top homology: the kernel of the top boundary map."""
    dim = C.dim
    if dim < 0:
        return 0
    faces = C.faces(dim)
    if dim == 0:
        return len(faces)
    return len(faces) - gf2.rank(gf2.boundary_columns(faces, C.faces(dim - 1)))


def reduced_top_betti(C: SimplicialComplex) -> int:
    """Top reduced Betti number; differs from :func:`top_betti` only in dimension 0."""
    if C.dim == 0:
        return len(C.vertices) - 1
    if C.dim < 0:
        return 1  # the complex {empty face} is a (-1)-sphere
    return top_betti(C)


# normality

def _proper_part_components(L: GradedLattice, x: int, y: int) -> list:
    inside = L.up_mask(x) & L.down_mask(y) & ~((1 << x) | (1 << y))
    members = list(iter_bits(inside))
    uf = _UnionFind(members)
    for z in members:
        for w in L.upper_covers(z):
            if inside >> w & 1:
                uf.union(z, w)
    return uf.groups()


def _chain_through(L: GradedLattice, x: int, y: int) -> tuple:
    """A maximal chain of proper elements skipping exactly the open interval (x, y)."""
    lower = next(L.maximal_chains(L.bottom, x)) if x != L.bottom else ()
    upper = next(L.maximal_chains(y, L.top)) if y != L.top else ()
    chain = list(lower)
    if x != L.bottom:
        chain.append(x)
    if y != L.top:
        chain.append(y)
    chain.extend(upper)
    return tuple(chain)


def disconnected_links(L: GradedLattice) -> list:
    """Chains of the order complex of ``L`` of dimension at most
    ``height - 4`` whose link is disconnected.

    The link of a chain is the join of the order complexes of the open
    intervals between consecutive chain elements, so it is disconnected
    exactly when the chain leaves a single gap ``(x, y)`` of rank
    difference at least 3 whose proper part is disconnected.  One witness
    chain is returned per such interval.
    """
    h = L.height
    out = []
    for x in range(len(L)):
        for y in iter_bits(L.up_mask(x)):
            gap = L.rank(y) - L.rank(x)
            if gap < 3 or (x == L.bottom and y == L.top):
                continue
            if len(_proper_part_components(L, x, y)) > 1:
                out.append(_chain_through(L, x, y))
    return out


def is_normal_pseudomanifold(L: GradedLattice) -> CheckReport:
    """Normality of the order complex ``T`` of ``L``.

    Conditions: ``T`` connected, ``T`` a pseudomanifold, top GF(2) Betti
    number of ``T`` equal to 1, and every nonempty chain of dimension at most
    ``d - 3`` (``d = height - 1``) has a connected link.  Witnesses are
    ``(condition, detail)`` pairs; for link failures the detail is the
    offending chain given by element labels.
    """
    d = L.height - 1
    T = order_complex(L)
    witnesses = []
    comps = components(T)
    if len(comps) > 1:
        witnesses.append(("connected", [[L.label(v) for v in c] for c in comps[1:]]))
    pm = is_pseudomanifold(T)
    for r in pm.witnesses:
        witnesses.append(("pseudomanifold", [L.label(v) for v in r]))
    b = top_betti(T)
    if b != 1:
        witnesses.append(("top_betti", b))
    for chain in disconnected_links(L):
        witnesses.append(("link", [L.label(v) for v in chain]))
    return CheckReport("normal", witnesses, params={"d": d}, data={"top_betti": b})


def normal_crosscheck(L: GradedLattice, max_simplices: int = 5000) -> CheckReport:
    """Generic normality test on the order complex, for small inputs.

    Computes every link of a simplex of dimension at most ``d - 3`` directly
    and also requires every vertex link to have top reduced GF(2) Betti
    number 1 (its local top homology).  Skipped when the complex has more
    than ``max_simplices`` simplices.
    """
    d = L.height - 1
    T = order_complex(L)
    if T.num_simplices() > max_simplices:
        return CheckReport("normal-crosscheck", skipped=True,
                           notes=f"more than {max_simplices} simplices", params={"d": d})
    witnesses = []
    if len(components(T)) > 1:
        witnesses.append(("connected", None))
    if not is_pseudomanifold(T).passed:
        witnesses.append(("pseudomanifold", None))
    if top_betti(T) != 1:
        witnesses.append(("top_betti", top_betti(T)))
    for k in range(0, d - 2):
        for f in T.faces(k):
            lk = link(T, T.labels_of(f))
            if len(components(lk)) > 1:
                witnesses.append(("link", [L.label(v) for v in T.labels_of(f)]))
    for v in T.vertices:
        lk = link(T, (v,))
        if reduced_top_betti(lk) != 1:
            witnesses.append(("local_homology", [L.label(v)]))
    return CheckReport("normal-crosscheck", witnesses, params={"d": d})


def complex_is_normal(C: SimplicialComplex) -> CheckReport:
    """Normal pseudomanifold test for a simplicial complex given directly.

    Same conditions as :func:`is_normal_pseudomanifold`, evaluated on ``C``
    itself: connected, pseudomanifold, top Betti 1, and connected links of
    all nonempty faces of dimension at most ``dim - 2``.
    """
    witnesses = []
    comps = components(C)
    if len(comps) > 1:
        witnesses.append(("connected", comps[1:]))
    for r in is_pseudomanifold(C).witnesses:
        witnesses.append(("pseudomanifold", r))
    b = top_betti(C)
    if b != 1:
        witnesses.append(("top_betti", b))
    for k in range(0, C.dim - 1):
        for f in C.faces(k):
            if len(components(link(C, C.labels_of(f)))) > 1:
                witnesses.append(("link", C.labels_of(f)))
    return CheckReport("normal", witnesses, params={"dim": C.dim})


# polytopality checks

def check_dual_simplicial(L: GradedLattice) -> CheckReport:
    """Are all upper intervals ``[t, top]`` with ``t`` not the bottom Boolean?

    When they are, the dual of ``L`` is the face lattice of the simplicial
    complex on the coatoms whose facets are the coatom sets above each atom.
    That complex is returned in ``data["complex"]``, and the report also
    confirms that it reproduces ``L`` (each element maps to the set of
    coatoms above it) and that ``L`` and its dual have the same order
    complex.
    """
    bad = []
    for t in range(1, len(L)):
        if not is_boolean(L.interval(t, L.top)):
            bad.append(L.label(t))
    report = CheckReport("dual-simplicial", [("non_boolean_upper_interval", b) for b in bad],
                         params={"d": L.height - 1})
    if bad:
        return report
    co = sorted(L.coatoms())
    cx = SimplicialComplex([[L.label(c) for c in iter_bits(L.cosupport_mask(a))]
                            for a in sorted(L.atoms())],
                           vertices=[L.label(c) for c in co])
    faces = {frozenset()}
    for k in range(cx.dim + 1):
        faces.update(frozenset(cx.labels_of(f)) for f in cx.faces(k))
    images = {}
    for x in range(1, len(L)):
        images.setdefault(frozenset(L.label(c) for c in iter_bits(L.cosupport_mask(x))), []).append(x)
    if set(images) != faces or any(len(v) > 1 for v in images.values()):
        report.witnesses.append(("dual_complex_mismatch", len(images), len(faces)))
    if order_complex(L, "key") != order_complex(dual(L), "key"):
        report.witnesses.append(("order_complex_mismatch", None))
    report.data["complex"] = cx
    return report


def _atomistic_violations(L: GradedLattice) -> list:
    """Elements whose up-set differs from the common up-set of their atoms,
    plus elements sharing an atom set with another element."""
    bad = []
    seen: dict = {}
    atoms_up = {a: L.up_mask(a) for a in L.atoms()}
    full = (1 << len(L)) - 1
    for x in range(1, len(L)):
        s = L.support_mask(x)
        if s in seen:
            bad.append(("same_vertex_set", L.label(seen[s]), L.label(x)))
        seen[s] = x
        common = full
        for a in iter_bits(s):
            common &= atoms_up[a]
        if common != L.up_mask(x):
            bad.append(("not_determined_by_vertices", L.label(x)))
    return bad


def _apex(L: GradedLattice):
    """A pair ``(v, F)``: an atom ``v`` and a coatom ``F`` containing every
    other atom, such that ``L`` is the pyramid over ``[bottom, F]`` with apex
    ``v``.  Returns ``None`` when ``L`` is not a pyramid."""
    all_atoms = L.atom_mask
    supports = {L.support_mask(x) for x in range(len(L))}
    for F in sorted(L.coatoms()):
        rest = all_atoms & ~L.support_mask(F)
        if rest.bit_count() != 1:
            continue
        v_bit = rest
        base = {L.support_mask(x) for x in iter_bits(L.down_mask(F))}
        expected = base | {s | v_bit for s in base}
        if supports == expected and len(L) == 2 * len(base):
            return next(iter_bits(v_bit)), F
    return None


def check_d_plus_2_facets_polytopal(L: GradedLattice) -> CheckReport:
    """Identify a lattice with ``d+2`` coatoms as ``Dual(Tdm(d, i, m))``,
    possibly after peeling off cone points.

    The lattice is first checked to be determined by vertex sets.  Cone
    points are removed one at a time (each step replaces ``L`` by the
    facet opposite the apex).  On the remaining lattice of dimension ``i``
    with ``i+2`` coatoms, the complex of coatom sets must be exactly the
    join of two simplex boundaries ``dDelta^p * dDelta^q`` with ``p+q = i``;
    then ``m = min(p, q)``.  The identification is confirmed by comparing
    f-vectors with the constructed ``dual(tdm(d, i, m))``.  Lattices whose
    coatom count is not ``d+2`` are reported as skipped.
    """
    from .constructions import tdm_lattice  # local import avoids a cycle

    d = L.height - 1
    ncoatoms = len(L.coatoms())
    params = {"d": d, "coatoms": ncoatoms}
    name = "d+2-facets"
    if ncoatoms != d + 2:
        return CheckReport(name, params=params, skipped=True,
                           notes=f"{ncoatoms} facets, not d+2 = {d + 2}; out of scope")
    bad = _atomistic_violations(L)
    if bad:
        return CheckReport(name, bad, params=params)
    cur = L
    peeled = 0
    while True:
        found = _apex(cur)
        if found is None:
            break
        _, F = found
        cur = cur.interval(cur.bottom, F)
        peeled += 1
    i = cur.height - 1
    co = sorted(cur.coatoms())
    if len(co) != i + 2 or i < 2:
        return CheckReport(name, [("base_facet_count", i, len(co))], params=params)
    # coatom sets of the remaining lattice, as bitmasks over coatom ids
    cos = {x: cur.cosupport_mask(x) for x in range(1, len(cur))}
    if len(set(cos.values())) != len(cos):
        return CheckReport(name, [("not_determined_by_facets", None)], params=params)
    facets = [cos[a] for a in cur.atoms()]
    all_co = cur.coatom_mask
    missing = []
    for f in facets:
        gone = all_co & ~f
        if gone.bit_count() != 2:
            return CheckReport(name, [("vertex_not_in_i_facets", cur.label(a))
                                      for a in cur.atoms() if (all_co & ~cos[a]).bit_count() != 2],
                               params=params)
        missing.append(tuple(iter_bits(gone)))
    edges = set(missing)
    u = co[0]
    side_q = {b for e in edges for b in e if u in e and b != u}
    side_p = set(co) - side_q
    complete = all((min(a, b), max(a, b)) in edges for a in side_p for b in side_q)
    if not complete or len(edges) != len(side_p) * len(side_q) or min(len(side_p), len(side_q)) < 2:
        return CheckReport(name, [("not_a_join_of_simplex_boundaries", sorted(edges))],
                           params=params)
    # every subset of a facet must be realised, and nothing else
    faces = set()
    for f in facets:
        bits = list(iter_bits(f))
        for r in range(len(bits) + 1):
            for sub in combinations(bits, r):
                faces.add(sum(1 << b for b in sub))
    if faces != set(cos.values()):
        return CheckReport(name, [("face_set_mismatch", len(faces), len(cos))], params=params)
    p, q = len(side_p) - 1, len(side_q) - 1
    m = min(p, q)
    params.update({"i": i, "m": m, "pyramids": peeled})
    reference = dual(tdm_lattice(d, i, m))
    if L.f_vector() != reference.f_vector():
        return CheckReport(name, [("f_vector_mismatch", tuple(L.f_vector()), tuple(reference.f_vector()))],
                           params=params)
    return CheckReport(name, params=params,
                       notes=f"dual(tdm({d},{i},{m}))" + (f", {peeled} cone point(s)" if peeled else ""),
                       data={"identified_as": f"dual(tdm({d},{i},{m}))", "i": i, "m": m,
                             "pyramids": peeled})
