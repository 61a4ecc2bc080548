"""Finite abstract simplicial complexes stored by their facets."""
from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable


class SimplicialComplex:
    """A simplicial complex given by facets (maximal faces).

    Non-maximal sets passed as facets are dropped.  Vertices are kept in
    first-appearance order; internally every simplex is a sorted tuple of
    vertex indices.
    """

    def __init__(self, facets: Iterable[Iterable[Hashable]], vertices: Iterable[Hashable] | None = None):
        facets = [tuple(dict.fromkeys(f)) for f in facets]
        order: dict = {}
        if vertices is not None:
            for v in vertices:
                order.setdefault(v, len(order))
        for f in facets:
            for v in f:
                if v not in order:
                    if vertices is not None:
                        raise ValueError(f"facet uses undeclared vertex {v!r}")
                    order[v] = len(order)
        self._vertices = tuple(order)
        self._index = order
        simplices = {tuple(sorted(order[v] for v in f)) for f in facets}
        # keep maximal ones only; larger first so containment checks are one-way
        kept: list = []
        larger: list = []
        pending: list = []
        current = None
        for s in sorted(simplices, key=len, reverse=True):
            if len(s) != current:
                larger.extend(pending)
                pending = []
                current = len(s)
            ss = frozenset(s)
            if not any(ss <= k for k in larger):
                kept.append(s)
                pending.append(ss)
        self._facets = tuple(sorted(kept, key=lambda s: (len(s), s)))
        covered = set()
        for f in self._facets:
            covered.update(f)
        if len(covered) != len(self._vertices):
            missing = [self._vertices[i] for i in range(len(self._vertices)) if i not in covered]
            raise ValueError(f"vertices {missing[:5]} lie in no facet")
        self._faces_cache: dict = {}

    @classmethod
    def _from_indexed(cls, vertices: tuple, facets: Iterable[tuple]) -> "SimplicialComplex":
        """Build directly from sorted index tuples known to be maximal."""
        obj = cls.__new__(cls)
        obj._vertices = tuple(vertices)
        obj._index = {v: i for i, v in enumerate(obj._vertices)}
        obj._facets = tuple(sorted(set(facets), key=lambda s: (len(s), s)))
        obj._faces_cache = {}
        return obj

    def __repr__(self) -> str:
        return f"<SimplicialComplex dim={self.dim} vertices={len(self._vertices)} facets={len(self._facets)}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.labelled_facets() == other.labelled_facets()

    def __hash__(self) -> int:
        return hash(self.labelled_facets())

    @property
    def vertices(self) -> tuple:
        return self._vertices

    def vertex_index(self, v: Hashable) -> int:
        return self._index[v]

    @property
    def facets(self) -> tuple:
        """Facets as sorted tuples of vertex indices."""
        return self._facets

    def labelled_facets(self) -> frozenset:
        return frozenset(frozenset(self._vertices[i] for i in f) for f in self._facets)

    def labels_of(self, simplex: Iterable[int]) -> tuple:
        return tuple(self._vertices[i] for i in simplex)

    def to_indices(self, face: Iterable[Hashable]) -> tuple:
        return tuple(sorted(self._index[v] for v in face))

    @property
    def dim(self) -> int:
        return max((len(f) for f in self._facets), default=0) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self._facets}) <= 1

    def faces(self, k: int) -> list:
        """All ``k``-dimensional simplices as sorted index tuples, sorted."""
        if k < -1:
            return []
        if k not in self._faces_cache:
            out = set()
            for f in self._facets:
                if len(f) >= k + 1:
                    out.update(combinations(f, k + 1))
            self._faces_cache[k] = sorted(out)
        return self._faces_cache[k]

    def f_vector(self) -> tuple:
        """``(f_0, ..., f_dim)``; the empty face is not counted."""
        return tuple(len(self.faces(k)) for k in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector()))

    def num_simplices(self) -> int:
        return sum(self.f_vector())

    def contains(self, face: Iterable[Hashable]) -> bool:
        try:
            idx = set(self.to_indices(face))
        except KeyError:
            return False
        return any(idx <= set(f) for f in self._facets)

    def to_json(self) -> dict:
        return {
            "vertices": list(self._vertices),
            "facets": [list(self.labels_of(f)) for f in self._facets],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SimplicialComplex":
        def _hashable(v):
            return tuple(_hashable(x) for x in v) if isinstance(v, list) else v
        verts = [_hashable(v) for v in data["vertices"]]
        return cls([[_hashable(v) for v in f] for f in data["facets"]], vertices=verts)


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the simplex on vertices ``0..n``, i.e. of ``Delta^n``."""
    verts = range(n + 1)
    return SimplicialComplex(combinations(verts, n), vertices=verts)


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join; vertices are tagged ``(0, v)`` and ``(1, w)``."""
    facets = []
    for fa in a.labelled_facets():
        for fb in b.labelled_facets():
            facets.append([(0, v) for v in fa] + [(1, w) for w in fb])
    return SimplicialComplex(facets)
