"""Bounded graded lattices given by their cover relation.

Elements are integer ids ``0..n-1`` sorted by (rank, construction order), so
the bottom is always ``0`` and the top is ``n-1``.  Order queries go through
precomputed up/down sets stored as Python ints used as bitsets.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import CycleDetected, MalformedLattice, NotBounded, NotComparable, NotGraded
from .limits import check_lattice_size


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class Verdict:
    """Outcome of a structural predicate; falsy when the predicate fails."""

    ok: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class FVector:
    """Face numbers ``f_0 .. f_{d-1}``; ``f_{-1} = 1`` is never stored."""

    counts: tuple

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if any(c < 0 for c in self.counts):
            raise ValueError("face numbers are nonnegative")

    @property
    def dim(self) -> int:
        return len(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def __getitem__(self, k: int) -> int:
        if not 0 <= k < len(self.counts):
            raise IndexError(f"f_{k} is not stored for a {self.dim}-dimensional f-vector")
        return self.counts[k]

    def f(self, k: int) -> int:
        """``f_k`` with ``f_{-1} = 1`` and zero outside ``-1..d-1``."""
        if k == -1:
            return 1
        if 0 <= k < len(self.counts):
            return self.counts[k]
        return 0

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.counts))

    def leq(self, other: "FVector") -> bool:
        """Componentwise comparison of two f-vectors of the same dimension."""
        if self.dim != other.dim:
            raise ValueError("f-vectors of different dimension are not comparable")
        return all(a <= b for a, b in zip(self.counts, other.counts))

    def reversed(self) -> "FVector":
        return FVector(self.counts[::-1])

    def __repr__(self) -> str:
        return f"FVector{self.counts}"


class GradedLattice:
    """Immutable bounded graded poset.

    Despite the name the lattice property is not enforced; use
    :func:`is_lattice` to test it.  Build instances with
    :func:`build_from_covers`.
    """

    def __init__(self, ranks: Sequence[int], upper: Sequence[Iterable[int]],
                 keys: Sequence[Hashable], labels: Sequence[str] | None = None):
        n = len(ranks)
        self._rank = tuple(ranks)
        self._upper = tuple(tuple(sorted(u)) for u in upper)
        lower = [[] for _ in range(n)]
        for x, ups in enumerate(self._upper):
            for y in ups:
                lower[y].append(x)
        self._lower = tuple(tuple(lo) for lo in lower)
        self._keys = tuple(keys)
        self._index = {k: i for i, k in enumerate(self._keys)}
        if labels is None:
            labels = [str(k) for k in self._keys]
        self._labels = tuple(labels)

        up = [0] * n
        for x in reversed(range(n)):
            m = 1 << x
            for y in self._upper[x]:
                m |= up[y]
            up[x] = m
        down = [0] * n
        for x in range(n):
            m = 1 << x
            for y in self._lower[x]:
                m |= down[y]
            down[x] = m
        self._up = up
        self._down = down

        height = self._rank[-1]
        by_rank = [[] for _ in range(height + 1)]
        for x, r in enumerate(self._rank):
            by_rank[r].append(x)
        self._by_rank = tuple(tuple(b) for b in by_rank)
        self._rank_mask = tuple(mask_of(b) for b in by_rank)

    # basic structure

    def __len__(self) -> int:
        return len(self._rank)

    def __iter__(self):
        return iter(range(len(self._rank)))

    def __repr__(self) -> str:
        return f"<GradedLattice rank={self.height} elements={len(self)} f={self.f_vector().counts}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedLattice):
            return NotImplemented
        return (self._rank == other._rank and self._upper == other._upper
                and self._keys == other._keys)

    def __hash__(self) -> int:
        return hash((self._rank, self._upper))

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self._rank) - 1

    @property
    def height(self) -> int:
        """The rank of the lattice, i.e. the rank of its top element."""
        return self._rank[-1]

    @property
    def dim(self) -> int:
        return self.height - 1

    def rank(self, x: int) -> int:
        return self._rank[x]

    @property
    def ranks(self) -> tuple:
        return self._rank

    def upper_covers(self, x: int) -> tuple:
        return self._upper[x]

    def lower_covers(self, x: int) -> tuple:
        return self._lower[x]

    def covers(self) -> Iterator[tuple]:
        for x, ups in enumerate(self._upper):
            for y in ups:
                yield x, y

    def key(self, x: int) -> Hashable:
        return self._keys[x]

    @property
    def keys(self) -> tuple:
        return self._keys

    def id_of(self, key: Hashable) -> int:
        return self._index[key]

    def label(self, x: int) -> str:
        return self._labels[x]

    @property
    def labels(self) -> tuple:
        return self._labels

    # order queries

    def leq(self, x: int, y: int) -> bool:
        return bool((self._up[x] >> y) & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def up_mask(self, x: int) -> int:
        return self._up[x]

    def down_mask(self, x: int) -> int:
        return self._down[x]

    def rank_mask(self, r: int) -> int:
        if 0 <= r < len(self._rank_mask):
            return self._rank_mask[r]
        return 0

    def elements_of_rank(self, r: int) -> tuple:
        if 0 <= r < len(self._by_rank):
            return self._by_rank[r]
        return ()

    def whitney(self, r: int) -> int:
        return len(self.elements_of_rank(r))

    @property
    def atom_mask(self) -> int:
        return self.rank_mask(1)

    @property
    def coatom_mask(self) -> int:
        return self.rank_mask(self.height - 1)

    def atoms(self) -> frozenset:
        return frozenset(self.elements_of_rank(1))

    def coatoms(self) -> frozenset:
        return frozenset(self.elements_of_rank(self.height - 1))

    def support_mask(self, x: int) -> int:
        """Bitset of the atoms below ``x``."""
        return self._down[x] & self.atom_mask

    def cosupport_mask(self, x: int) -> int:
        """Bitset of the coatoms above ``x``."""
        return self._up[x] & self.coatom_mask

    def atoms_below(self, x: int) -> frozenset:
        return frozenset(iter_bits(self.support_mask(x)))

    def coatoms_above(self, x: int) -> frozenset:
        return frozenset(iter_bits(self.cosupport_mask(x)))

    def meet(self, x: int, y: int) -> int | None:
        lower = self._down[x] & self._down[y]
        if not lower:
            return None
        high = lower.bit_length() - 1
        # ids are sorted by rank, so a greatest element must be the top-most id
        return high if lower & ~self._down[high] == 0 else None

    def join(self, x: int, y: int) -> int | None:
        upper = self._up[x] & self._up[y]
        if not upper:
            return None
        low = (upper & -upper).bit_length() - 1
        return low if upper & ~self._up[low] == 0 else None

    def interval(self, x: int, y: int) -> "Interval":
        if not self.leq(x, y):
            raise NotComparable(f"{self.label(x)} is not below {self.label(y)}")
        return Interval(self, x, y)

    def f_vector(self) -> FVector:
        return FVector(tuple(self.whitney(r) for r in range(1, self.height)))

    def maximal_chains(self, lo: int | None = None, hi: int | None = None) -> Iterator[tuple]:
        """Maximal chains of the open interval ``(lo, hi)`` as id tuples."""
        lo = self.bottom if lo is None else lo
        hi = self.top if hi is None else hi
        inside = self._up[lo] & self._down[hi]
        if self.rank(hi) - self.rank(lo) <= 1:
            yield ()
            return
        stack = [(c,) for c in reversed(self._upper[lo]) if (inside >> c) & 1 and c != hi]
        target = self.rank(hi) - 1
        while stack:
            chain = stack.pop()
            last = chain[-1]
            if self.rank(last) == target:
                yield chain
                continue
            for c in reversed(self._upper[last]):
                if (inside >> c) & 1:
                    stack.append(chain + (c,))


class Interval(GradedLattice):
    """The sub-lattice ``[lo, hi]`` of a parent lattice, re-ranked from ``lo``."""

    def __init__(self, parent: GradedLattice, lo: int, hi: int):
        members = list(iter_bits(parent.up_mask(lo) & parent.down_mask(hi)))
        local = {z: i for i, z in enumerate(members)}
        base = parent.rank(lo)
        ranks = [parent.rank(z) - base for z in members]
        upper = [[local[c] for c in parent.upper_covers(z) if c in local] for z in members]
        super().__init__(ranks, upper,
                         keys=[parent.key(z) for z in members],
                         labels=[parent.label(z) for z in members])
        self.parent = parent
        self.lo = lo
        self.hi = hi
        self.parent_ids = tuple(members)

    def parent_id(self, z: int) -> int:
        return self.parent_ids[z]


def build_from_covers(covers: Iterable[tuple], ranks: Mapping[Hashable, int] | None = None,
                      labels: Mapping[Hashable, str] | None = None) -> GradedLattice:
    """Validate a cover relation and return the corresponding lattice.

    ``covers`` holds ``(lower, upper)`` pairs of arbitrary hashable names.
    When ``ranks`` is omitted the rank of an element is the length of the
    longest chain from the bottom to it.  Ids are assigned by rank, ties
    broken by first appearance (in ``ranks`` if given, else in ``covers``).
    """
    covers = [tuple(c) for c in covers]
    order: dict = {}
    if ranks is not None:
        for k in ranks:
            order.setdefault(k, len(order))
    for pair in covers:
        if len(pair) != 2:
            raise MalformedLattice(f"cover {pair!r} is not a pair")
        for k in pair:
            if k not in order:
                if ranks is not None:
                    raise MalformedLattice(f"cover mentions undeclared element {k!r}")
                order[k] = len(order)
    keys = list(order)
    n = len(keys)
    if n == 0:
        raise NotBounded("empty poset has no bottom element")
    check_lattice_size(n)

    up = [set() for _ in range(n)]
    down = [set() for _ in range(n)]
    for a, b in covers:
        ia, ib = order[a], order[b]
        if ia == ib:
            raise CycleDetected(f"{a!r} covers itself")
        up[ia].add(ib)
        down[ib].add(ia)

    if ranks is not None:
        r = []
        for k in keys:
            value = ranks[k]
            if not isinstance(value, int) or value < 0:
                raise NotGraded(f"rank of {k!r} must be a natural number, got {value!r}")
            r.append(value)
        for a, b in covers:
            if r[order[b]] != r[order[a]] + 1:
                raise NotGraded(f"cover ({a!r}, {b!r}) goes from rank {r[order[a]]} to {r[order[b]]}")
    else:
        r = [0] * n
        indeg = [len(d) for d in down]
        queue = deque(i for i in range(n) if indeg[i] == 0)
        seen = 0
        while queue:
            x = queue.popleft()
            seen += 1
            for y in up[x]:
                r[y] = max(r[y], r[x] + 1)
                indeg[y] -= 1
                if indeg[y] == 0:
                    queue.append(y)
        if seen < n:
            raise CycleDetected("cover relation contains a cycle")

    minimal = [i for i in range(n) if not down[i]]
    maximal = [i for i in range(n) if not up[i]]
    if len(minimal) != 1:
        raise NotBounded(f"{len(minimal)} minimal elements: {[keys[i] for i in minimal][:5]}")
    if len(maximal) != 1:
        raise NotBounded(f"{len(maximal)} maximal elements: {[keys[i] for i in maximal][:5]}")
    if r[minimal[0]] != 0:
        raise NotGraded("bottom element must have rank 0")
    if ranks is None:
        for a, b in covers:
            if r[order[b]] != r[order[a]] + 1:
                raise NotGraded(f"cover ({a!r}, {b!r}) skips a rank")

    perm = sorted(range(n), key=lambda i: (r[i], i))
    new_id = {old: new for new, old in enumerate(perm)}
    if new_id[minimal[0]] != 0 or new_id[maximal[0]] != n - 1:
        raise NotGraded("top element is not the unique element of maximal rank")
    return GradedLattice(
        ranks=[r[i] for i in perm],
        upper=[[new_id[j] for j in up[i]] for i in perm],
        keys=[keys[i] for i in perm],
        labels=[(labels or {}).get(keys[i], str(keys[i])) for i in perm],
    )


# structural predicates

def is_lattice(L: GradedLattice) -> Verdict:
    """Every pair has a join; in a finite bounded poset meets then exist too.

    The witness is the first pair (in id order) without a join.
    """
    n = len(L)
    for x in range(1, n - 1):
        for y in range(x + 1, n - 1):
            if L.comparable(x, y):
                continue
            if L.join(x, y) is None:
                return Verdict(False, (x, y))
    return Verdict(True)


def is_diamond(L: GradedLattice) -> Verdict:
    """Every rank-2 interval has exactly two middle elements.

    Witness: ``(x, y, middle_count)`` for the first offending interval.
    """
    for x in range(len(L)):
        paths: dict = {}
        for c in L.upper_covers(x):
            for y in L.upper_covers(c):
                paths[y] = paths.get(y, 0) + 1
        for y in sorted(paths):
            if paths[y] != 2:
                return Verdict(False, (x, y, paths[y]))
    return Verdict(True)


def is_coatom_distinguishable(L: GradedLattice) -> Verdict:
    """For all ordered pairs ``(t, s)`` of distinct same-rank proper elements
    some coatom lies above ``t`` but not above ``s``.

    Witness: the pair ``(t, s)`` whose coatoms-above sets are nested.
    """
    for r in range(1, L.height):
        elems = L.elements_of_rank(r)
        cos = [L.cosupport_mask(x) for x in elems]
        for a, t in enumerate(elems):
            ct = cos[a]
            for b, s in enumerate(elems):
                if a != b and ct & ~cos[b] == 0:
                    return Verdict(False, (t, s))
    return Verdict(True)


def is_boolean(L: GradedLattice) -> bool:
    """Atom-support test: ``2^n`` elements, injective support, rank = support size."""
    n = L.whitney(1) if L.height >= 1 else 0
    if len(L) != 1 << n:
        return False
    seen = set()
    for x in range(len(L)):
        s = L.support_mask(x)
        if s.bit_count() != L.rank(x) or s in seen:
            return False
        seen.add(s)
    return True


def check_upper_intervals_atleast_boolean(L: GradedLattice) -> Verdict:
    """Each ``[t, top]`` has at least ``C(rank(L) - rank(t), r)`` elements of
    relative rank ``r``.  Witness: ``(t, r, count, binomial)``."""
    h = L.height
    for t in range(len(L)):
        up = L.up_mask(t)
        base = L.rank(t)
        for r in range(0, h - base + 1):
            count = (up & L.rank_mask(base + r)).bit_count()
            need = comb(h - base, r)
            if count < need:
                return Verdict(False, (t, r, count, need))
    return Verdict(True)


@dataclass(frozen=True)
class ConeCheck:
    hypothesis: bool
    conclusion: bool | None

    @property
    def ok(self) -> bool:
        return not self.hypothesis or bool(self.conclusion)


def check_all_cones_boolean(L: GradedLattice, x: int, y: int) -> ConeCheck:
    """If every coatom of ``[x, y]`` lies above all atoms of ``[x, y]`` but
    exactly one, the interval must be Boolean."""
    iv = L.interval(x, y)
    n_atoms = iv.whitney(1)
    hyp = all(iv.support_mask(c).bit_count() == n_atoms - 1
              for c in iv.elements_of_rank(iv.height - 1))
    if not hyp:
        return ConeCheck(False, None)
    return ConeCheck(True, is_boolean(iv))


# operations

def pyramid(L: GradedLattice, times: int = 1) -> GradedLattice:
    """Product with ``B^1``: ``f_k(Pyr L) = f_k(L) + f_{k-1}(L)``."""
    if times < 0:
        raise ValueError("times must be nonnegative")
    for _ in range(times):
        L = _pyramid_once(L)
    return L


def _pyramid_once(L: GradedLattice) -> GradedLattice:
    n = len(L)
    ranks = {}
    labels = {}
    covers = []
    apex = f"a{L.height}"
    for e in (0, 1):
        for x in range(n):
            ranks[(x, e)] = L.rank(x) + e
            if e == 0:
                labels[(x, 0)] = L.label(x)
            elif x == L.bottom:
                labels[(x, 1)] = apex
            else:
                labels[(x, 1)] = f"{L.label(x)}+{apex}"
    for x, y in L.covers():
        covers.append(((x, 0), (y, 0)))
        covers.append(((x, 1), (y, 1)))
    for x in range(n):
        covers.append(((x, 0), (x, 1)))
    return build_from_covers(covers, ranks=ranks, labels=labels)


def dual(L: GradedLattice) -> GradedLattice:
    """Order reversal; element ``x`` becomes id ``n-1-x``, keys are kept."""
    n = len(L)
    h = L.height
    return GradedLattice(
        ranks=[h - L.rank(n - 1 - i) for i in range(n)],
        upper=[[n - 1 - z for z in L.lower_covers(n - 1 - i)] for i in range(n)],
        keys=[L.key(n - 1 - i) for i in range(n)],
        labels=[L.label(n - 1 - i) for i in range(n)],
    )


def f_vector(L: GradedLattice) -> FVector:
    return L.f_vector()


def atoms(L: GradedLattice) -> frozenset:
    return L.atoms()


def coatoms(L: GradedLattice) -> frozenset:
    return L.coatoms()


def atoms_below(L: GradedLattice, x: int) -> frozenset:
    return L.atoms_below(x)


def meet(L: GradedLattice, x: int, y: int) -> int | None:
    return L.meet(x, y)


def join(L: GradedLattice, x: int, y: int) -> int | None:
    return L.join(x, y)


def interval(L: GradedLattice, x: int, y: int) -> Interval:
    return L.interval(x, y)
