"""Independent reference computations used to cross-check the package.

Nothing here imports the lattice code: f-vectors are obtained by counting
vertex subsets or by elementary recursions on face numbers.
"""
from functools import lru_cache
from itertools import combinations


@lru_cache(maxsize=None)
def pascal(a: int, b: int) -> int:
    """Binomial coefficient from the Pascal recursion only (no factorials)."""
    if b < 0 or a < 0 or b > a:
        return 0
    if b == 0 or b == a:
        return 1
    return pascal(a - 1, b - 1) + pascal(a - 1, b)


def join_of_boundaries_fvector(i: int, m: int) -> list:
    """f-vector of the join of the boundaries of the m-simplex and the
    (i-m)-simplex, by testing every vertex subset."""
    left = set(range(m + 1))
    right = set(range(m + 1, i + 2))
    counts = [0] * i
    for r in range(1, i + 1):
        for s in combinations(range(i + 2), r):
            s = set(s)
            if not left <= s and not right <= s:
                counts[r - 1] += 1
    return counts


def pyramid_fvector(f: list, times: int = 1) -> list:
    """Face numbers of an iterated pyramid over a polytope with face numbers ``f``."""
    for _ in range(times):
        ext = [1] + list(f) + [1]  # empty face, proper faces, the polytope itself
        f = [ext[k + 1] + ext[k] for k in range(len(f) + 1)]
    return list(f)


def tdm_fvector(d: int, i: int, m: int) -> list:
    return pyramid_fvector(join_of_boundaries_fvector(i, m), d - i)


def prism_fvector(s: int) -> list:
    """Segment times (s-1)-simplex: pairs of nonempty faces."""
    out = []
    for k in range(s):
        out.append(2 * pascal(s, k + 1) + (pascal(s, k) if k >= 1 else 0))
    return out


def gmin_fvector(d: int, s: int) -> list:
    return pyramid_fvector(prism_fvector(s), d - s)


def stack_once(f: list) -> list:
    """Stacking onto a simplex facet of a d-polytope."""
    d = len(f)
    g = list(f)
    for k in range(d - 1):
        g[k] += pascal(d, k)
    g[d - 1] += d - 1
    return g


def simplex_fvector(d: int) -> list:
    return [pascal(d + 1, k + 1) for k in range(d)]


def stacked_fvector(d: int, n: int) -> list:
    f = simplex_fvector(d)
    for _ in range(n - d - 1):
        f = stack_once(f)
    return f


def nabla_fvector(d: int) -> list:
    return list(reversed(stack_once(tdm_fvector(d, 2, 1))))
