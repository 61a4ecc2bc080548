"""Closed-form face-count formulas and the verifiers that compare them with
constructed lattices.

All arithmetic is exact integer arithmetic.  Binomial coefficients vanish
outside ``0 <= b <= a``.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations

from .errors import OutOfFormulaRange, PreconditionViolated
from .lattice import GradedLattice, is_diamond, is_lattice, iter_bits
from .reports import CheckReport, row


def binom(a: int, b: int) -> int:
    """``C(a, b)``, zero when ``b < 0`` or ``b > a``."""
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def ceil_half(d: int) -> int:
    return (d + 1) // 2


# Grunbaum's function

def phi(k: int, n: int, d: int) -> int:
    """Lower bound for the number of ``k``-faces with ``n = d + s`` vertices."""
    s = n - d
    return binom(d + 1, k + 1) + binom(d, k + 1) - binom(d + 1 - s, k + 1)


def phi_in_range(n: int, d: int) -> bool:
    return 1 <= n - d <= d


# the T^{d,d-i}_m family

def in_tdm_range(d: int, i: int, m: int) -> bool:
    return 2 <= i <= d and 1 <= m <= i // 2


def fvec_tdm_formula(d: int, i: int, m: int, k: int) -> int:
    """Number of ``k``-faces of the ``(d-i)``-fold pyramid over ``T^i_m``."""
    c = d - k + 1
    return (binom(d + 2, c) - binom(d - i + m + 1, c) - binom(d - m + 1, c)
            + binom(d - i + 1, c))


def tdm_fvector_formula(d: int, i: int, m: int) -> tuple:
    return tuple(fvec_tdm_formula(d, i, m, k) for k in range(d))


def tdm_facet_count(d: int, i: int, m: int) -> int:
    return d + 1 + m * (i - m)


def check_relations(d: int, i: int, m: int, k: int) -> CheckReport:
    """Monotonicity of ``f_k`` within the family.

    Relation (i) compares ``(i, m)`` with ``(i, m+1)``; it is strict exactly
    when ``m <= k``.  Relation (ii) compares ``(i, m)`` with ``(i+1, m)``; it
    is strict exactly when ``i <= k + m``.  A relation is only evaluated when
    both parameter tuples are in range; with neither applicable the report
    is skipped.
    """
    params = {"d": d, "i": i, "m": m, "k": k}
    if not in_tdm_range(d, i, m) or not 0 <= k <= d - 1:
        raise PreconditionViolated(f"(d,i,m,k)={(d, i, m, k)} out of range")
    rep = CheckReport("relations", params=params)
    base = fvec_tdm_formula(d, i, m, k)
    applied = []
    if in_tdm_range(d, i, m + 1):
        other = fvec_tdm_formula(d, i, m + 1, k)
        strict = m <= k
        applied.append("i")
        rep.rows.append(row(d, k, other, base, i=i, m=m))
        if other < base or (other > base) != strict:
            rep.witnesses.append(("i", base, other, strict))
    if in_tdm_range(d, i + 1, m):
        other = fvec_tdm_formula(d, i + 1, m, k)
        strict = i <= k + m
        applied.append("ii")
        rep.rows.append(row(d, k, other, base, i=i, m=m))
        if other < base or (other > base) != strict:
            rep.witnesses.append(("ii", base, other, strict))
    if not applied:
        rep.skipped = True
        rep.notes = "no neighbouring parameter tuple in range"
    rep.data["relations"] = applied
    return rep


def verify_relations(dmax: int) -> CheckReport:
    """:func:`check_relations` over every ``(d, i, m, k)`` with ``d <= dmax``."""
    rep = CheckReport("relations-sweep", params={"dmax": dmax})
    count = 0
    for d in range(2, dmax + 1):
        for i in range(2, d + 1):
            for m in range(1, i // 2 + 1):
                for k in range(d):
                    r = check_relations(d, i, m, k)
                    if not r.skipped:
                        count += 1
                    rep.witnesses.extend((d, i, m, k) + tuple(w) for w in r.witnesses)
    rep.data["instances"] = count
    return rep


def enumerate_class(d: int, s: int) -> list:
    """All ``(i, m)`` in range whose family member has ``d + s`` facets."""
    if d < 2:
        raise PreconditionViolated("enumerate_class needs d >= 2")
    return [(i, m) for i in range(2, d + 1) for m in range(1, i // 2 + 1)
            if tdm_facet_count(d, i, m) == d + s]


@dataclass
class OrderingCertificate:
    """Members of one facet-count class, chained by componentwise order."""

    d: int
    facets: int
    members: list
    chain: list = field(default_factory=list)
    fvectors: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "facets": self.facets,
            "members": [list(x) for x in self.members],
            "chain": [list(x) for x in self.chain],
            "fvectors": {f"{i},{m}": list(v) for (i, m), v in self.fvectors.items()},
            "violations": self.violations,
            "valid": self.valid,
        }


def _leq(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def verify_complete_ordering(d: int, construct: bool | None = None) -> list:
    """One certificate per facet-count class of the ``d``-dimensional family.

    Members are sorted by ``m``; consecutive f-vectors must be componentwise
    non-decreasing.  With ``construct`` (default for ``d <= 8``) the formula
    f-vectors are also compared with constructed lattices.
    """
    if d < 2:
        raise PreconditionViolated("verify_complete_ordering needs d >= 2")
    if construct is None:
        construct = d <= 8
    if construct:
        from .constructions import tdm_lattice
    classes: dict = {}
    for i in range(2, d + 1):
        for m in range(1, i // 2 + 1):
            classes.setdefault(tdm_facet_count(d, i, m), []).append((i, m))
    certs = []
    for facets in sorted(classes):
        members = sorted(classes[facets], key=lambda im: im[1])
        cert = OrderingCertificate(d, facets, members, chain=list(members))
        for i, m in members:
            fv = tdm_fvector_formula(d, i, m)
            cert.fvectors[(i, m)] = fv
            if construct:
                built = tuple(tdm_lattice(d, i, m).f_vector())
                if built != fv:
                    cert.violations.append(("construction_mismatch", (i, m), built, fv))
        for a, b in zip(members, members[1:]):
            if not _leq(cert.fvectors[a], cert.fvectors[b]):
                cert.violations.append(("not_ordered", a, b))
        certs.append(cert)
    return certs


# the two bounds for 2d+1 vertices

def bound_A(m: int, d: int) -> int:
    """Bound for ``m``-faces with ``2d+1`` vertices and ``d+2`` facets."""
    h = ceil_half(d)
    return (binom(d + 1, m + 1) + binom(d, m + 1) + binom(d - 1, m + 1)
            - binom(h, m + 1) - binom(h - 1, m + 1))


def bound_B(m: int, d: int) -> int:
    """``f_m`` of the nabla polytope, for ``m >= 1``."""
    return binom(d + 1, m + 1) + binom(d, m + 1) + binom(d - 1, m)


def delta(m: int, d: int) -> int:
    return bound_A(m, d) - bound_B(m, d)


def pascal_remainder(m: int, d: int) -> int:
    """``delta(m,d) - delta(m,d-1) - delta(m-1,d-1)``.

    Zero for odd ``d``; for even ``d = 2a`` it is ``C(a,m) + C(a-1,m)``.
    """
    return delta(m, d) - delta(m, d - 1) - delta(m - 1, d - 1)


def verify_appendix(d_max: int, d_min: int = 6) -> CheckReport:
    """``delta(m, d) >= 0`` for ``d_min <= d <= d_max``, ``1 <= m < ceil(d/2) - 1``.

    Also checks the Pascal-type recursion for ``delta`` (an identity for odd
    ``d``; for even ``d`` the remainder is the explicit non-negative term of
    :func:`pascal_remainder`) and records, for each even ``d``, the first
    ``m`` at which ``bound_A < bound_B``.
    """
    if d_max < 6:
        raise PreconditionViolated("verify_appendix needs d_max >= 6")
    rep = CheckReport("appendix", params={"d_min": d_min, "d_max": d_max})
    checked = 0
    crossover = {}
    for d in range(d_min, d_max + 1):
        h = ceil_half(d)
        for m in range(1, h - 1):
            v = delta(m, d)
            checked += 1
            if v < 0:
                rep.witnesses.append(("negative_delta", m, d, v))
            if d - 1 >= 3:
                rem = pascal_remainder(m, d)
                want = 0 if d % 2 else binom(d // 2, m) + binom(d // 2 - 1, m)
                if rem != want:
                    rep.witnesses.append(("pascal", m, d, rem, want))
        if d % 2 == 0:
            for m in range(1, d):
                if bound_A(m, d) < bound_B(m, d):
                    crossover[d] = m
                    break
    rep.data = {"instances": checked, "delta_1_6": delta(1, 6), "crossover": crossover}
    return rep


# diamond-lattice bounds

def _require_diamond(L: GradedLattice) -> None:
    if not is_lattice(L):
        raise PreconditionViolated("input is not a lattice")
    if not is_diamond(L):
        raise PreconditionViolated("input is not a diamond lattice")


def verify_grunbaum(L: GradedLattice) -> CheckReport:
    """``f_k(L) >= phi(k, d+s, d)`` for every ``k``.

    When equality holds for some ``1 <= k <= d-2`` and ``s >= 2``, also checks
    that ``L`` has ``d+2`` coatoms, each above ``d``, ``d+s-2`` or ``d+s-1``
    atoms.  For ``s = 1`` that structural check does not apply (the only
    such lattice is Boolean, with ``d+1`` coatoms).
    """
    d = L.height - 1
    n = len(L.atoms())
    s = n - d
    if not 1 <= s <= d:
        raise PreconditionViolated(f"{n} atoms gives s = {s}, outside 1 <= s <= d = {d}")
    _require_diamond(L)
    fv = L.f_vector()
    rep = CheckReport("grunbaum", params={"d": d, "s": s})
    equal_at = []
    for k in range(d):
        lhs, rhs = fv[k], phi(k, n, d)
        rep.rows.append(row(d, k, lhs, rhs, s=s))
        if lhs < rhs:
            rep.witnesses.append(("below_phi", k, lhs, rhs))
        elif lhs == rhs and 1 <= k <= d - 2:
            equal_at.append(k)
    rep.data["equality_at"] = equal_at
    if equal_at and s >= 2:
        rep.witnesses.extend(equality_structure_violations(L, s))
        rep.data["structure_checked"] = True
    return rep


def equality_structure_violations(L: GradedLattice, s: int) -> list:
    """Coatom count ``d+2`` and atom counts in ``{d, d+s-2, d+s-1}``."""
    d = L.height - 1
    out = []
    co = sorted(L.coatoms())
    if len(co) != d + 2:
        out.append(("coatom_count", len(co), d + 2))
    allowed = {d, d + s - 2, d + s - 1}
    for F in co:
        c = L.support_mask(F).bit_count()
        if c not in allowed:
            out.append(("coatom_atoms", L.label(F), c))
    return out


@dataclass
class KeyPropResult:
    """Count of rank-``k+1`` elements above some atom of ``S`` and the
    applicable lower bounds (``None`` when a hypothesis does not hold)."""

    k: int
    size: int
    count: int
    bound_i: int
    bound_ii: int | None = None
    bound_iii: int | None = None

    def violations(self) -> list:
        out = []
        for name, b in (("i", self.bound_i), ("ii", self.bound_ii), ("iii", self.bound_iii)):
            if b is not None and self.count < b:
                out.append((name, self.count, b))
        return out

    @property
    def passed(self) -> bool:
        return not self.violations()


def key_prop_bounds(d: int, size: int, k: int) -> tuple:
    """The three lower bounds for a subset of ``size`` atoms."""
    b1 = sum(binom(d - i + 1, k) for i in range(1, size + 1))
    b2 = b1 + binom(d - 2, k - 1)
    b3 = binom(d, k) + binom(d - 1, k) + sum(binom(d - i, k) for i in range(1, size - 1))
    return b1, b2, b3


def _hypotheses(L: GradedLattice, S: list) -> tuple:
    d = L.height - 1
    smask = 0
    for a in S:
        if L.rank(a) != 1:
            raise PreconditionViolated(f"{L.label(a)} is not an atom")
        smask |= 1 << a
    has_ii = any(len(L.upper_covers(a)) > d for a in S)
    has_iii = False
    for F in L.coatoms():
        c = (L.support_mask(F) & smask).bit_count()
        if 1 <= c <= len(S) - 2:
            has_iii = True
            break
    return has_ii, has_iii


def _key_prop_results(L: GradedLattice, S: list, ks) -> list:
    d = L.height - 1
    has_ii, has_iii = _hypotheses(L, S)
    above = 0
    for a in S:
        above |= L.up_mask(a)
    out = []
    for k in ks:
        count = (above & L.rank_mask(k + 1)).bit_count()
        b1, b2, b3 = key_prop_bounds(d, len(S), k)
        out.append(KeyPropResult(k, len(S), count, b1,
                                 b2 if has_ii else None, b3 if has_iii else None))
    return out


def key_prop_count(L: GradedLattice, S, k: int) -> KeyPropResult:
    """Count rank-``(k+1)`` elements above at least one atom of ``S``.

    Hypotheses of the strengthened bounds are read off the lattice: (ii)
    applies when some atom of ``S`` has more than ``d`` upper covers, (iii)
    when some coatom lies above at least one and at most ``|S| - 2`` atoms
    of ``S``.
    """
    return _key_prop_results(L, list(S), [k])[0]


def key_prop_sweep(L: GradedLattice, max_subsets: int = 2 ** 16, seed: int = 0,
                   name: str = "") -> CheckReport:
    """Check the counting bounds for many atom subsets and every ``k``.

    All nonempty subsets are used when there are at most ``max_subsets`` of
    them; otherwise ``max_subsets`` subsets are drawn with a seeded RNG.
    """
    d = L.height - 1
    atoms = sorted(L.atoms())
    total = 2 ** len(atoms) - 1
    rep = CheckReport("key-prop", params={"lattice": name, "d": d, "atoms": len(atoms)})
    if total <= max_subsets:
        subsets = [c for r in range(1, len(atoms) + 1) for c in combinations(atoms, r)]
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        subsets = []
        for _ in range(max_subsets):
            r = rng.randint(1, len(atoms))
            subsets.append(tuple(sorted(rng.sample(atoms, r))))
        rep.seed = seed
        mode = "random"
    applied = {"i": 0, "ii": 0, "iii": 0}
    ks = range(d)
    for S in subsets:
        for res in _key_prop_results(L, list(S), ks):
            applied["i"] += 1
            applied["ii"] += res.bound_ii is not None
            applied["iii"] += res.bound_iii is not None
            for v in res.violations():
                rep.witnesses.append((tuple(L.label(a) for a in S), res.k) + v)
    rep.data = {"mode": mode, "subsets": len(subsets), "instances": applied}
    return rep


def verify_2d1_bound(L: GradedLattice) -> CheckReport:
    """Face-count bounds for ``2d+1`` or more vertices.

    With ``d+2`` facets: ``f_m >= bound_A(m, d)`` for ``1 <= m <= d-1``.
    With at least ``d+3`` facets: ``f_m >= bound_B(m, d)`` for
    ``1 <= m <= d-1`` and ``f_0 >= 2d+1``.  Attainment is recorded in
    ``data["attained"]``; for odd ``d`` the first bound is not known to be
    attained, so it is only checked as an inequality.
    """
    d = L.height - 1
    fv = L.f_vector()
    if fv[0] < 2 * d + 1:
        raise PreconditionViolated(f"{fv[0]} vertices, need at least 2d+1 = {2 * d + 1}")
    _require_diamond(L)
    facets = fv[d - 1]
    rep = CheckReport("two-part-2d1", params={"d": d, "vertices": fv[0], "facets": facets})
    if facets < d + 2:
        raise PreconditionViolated(f"{facets} facets, need at least d+2")
    which = "A" if facets == d + 2 else "B"
    bound = bound_A if which == "A" else bound_B
    attained = []
    if which == "B":
        rep.rows.append(row(d, 0, fv[0], 2 * d + 1))
        if fv[0] < 2 * d + 1:
            rep.witnesses.append(("f0", fv[0], 2 * d + 1))
    for m in range(1, d):
        lhs, rhs = fv[m], bound(m, d)
        rep.rows.append(row(d, m, lhs, rhs))
        if lhs < rhs:
            rep.witnesses.append((which, m, lhs, rhs))
        elif lhs == rhs:
            attained.append(m)
    rep.data = {"bound": which, "attained": attained}
    if which == "A" and d % 2:
        rep.notes = "odd d: inequality only"
    return rep


# stacked polytopes and the simple case

def stacked_lbt_fvector(d: int, n: int, j: int) -> int:
    """``f_j`` of a stacked ``d``-polytope with ``n`` vertices, ``0 <= j <= d-2``.

    Equals ``C(d, j) n - C(d+1, j+1) j``; with ``n = d+3`` and ``j = d-1-m``
    this is ``C(d, m+1)(d+3) - C(d+1, m+1)(d-1-m)``.  The facet count
    ``j = d-1`` follows a different formula and raises
    :class:`OutOfFormulaRange`.
    """
    if n < d + 1 or d < 1:
        raise PreconditionViolated(f"stacked polytope needs d >= 1 and n >= d+1, got d={d}, n={n}")
    if not 0 <= j <= d - 2:
        raise OutOfFormulaRange(f"j = {j} outside 0 <= j <= d-2 = {d - 2}")
    return binom(d, j) * n - binom(d + 1, j + 1) * j


def stacked_facet_count(d: int, n: int) -> int:
    return (d - 1) * n - (d + 1) * (d - 2)


def verify_simple_case(d: int, construct: bool | None = None) -> CheckReport:
    """``f_{d-1-m}(Stack(d+3, d)) = bound_B(m, d) + C(d-1, m+1)`` for ``1 <= m <= d-2``.

    With ``construct`` (default for ``d <= 8``) the stacked-polytope formula
    is also compared with a constructed lattice.
    """
    if d < 3:
        raise PreconditionViolated("verify_simple_case needs d >= 3")
    if construct is None:
        construct = d <= 8
    rep = CheckReport("simple-case", params={"d": d})
    built = None
    if construct:
        from .constructions import stacked_polytope
        built = stacked_polytope(d, d + 3).f_vector()
    for m in range(1, d - 1):
        j = d - 1 - m
        lhs = stacked_lbt_fvector(d, d + 3, j)
        rhs = bound_B(m, d) + binom(d - 1, m + 1)
        rep.rows.append(row(d, j, lhs, rhs, m=m))
        if lhs != rhs:
            rep.witnesses.append(("identity", m, lhs, rhs))
        if built is not None and built[j] != lhs:
            rep.witnesses.append(("construction", m, built[j], lhs))
    return rep
