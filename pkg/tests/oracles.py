"""Independent reference implementations used to derive expected values.

Everything here is deliberately naive: Pascal recursion instead of the
closed form, step-by-step path walking instead of reflection counting,
cofactor expansion instead of elimination, subset counting instead of
transform algebra. Agreement between these and the library is the point
of most tests, so none of this may import shortcuts from the package.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations


@lru_cache(maxsize=None)
def pascal(n: int, k: int) -> int:
    """Binomial coefficient by the addition rule, zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    return pascal(n - 1, k - 1) + pascal(n - 1, k)


def count_ballot_paths(m: int, n: int, t: int) -> int:
    """Walk every monotone path (0,0) -> (m,n), skip those touching y - x = t."""

    def walk(x: int, y: int) -> int:
        if y - x == t:
            return 0
        if x == m and y == n:
            return 1
        total = 0
        if x < m:
            total += walk(x + 1, y)
        if y < n:
            total += walk(x, y + 1)
        return total

    return walk(0, 0)


def cofactor_det(rows):
    """Determinant by first-row cofactor expansion, exact over Fraction."""
    rows = [list(r) for r in rows]
    size = len(rows)
    assert all(len(r) == size for r in rows)
    if size == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(size):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * Fraction(rows[0][j]) * cofactor_det(minor)
    return total


def face_counts(facets) -> tuple:
    """Count faces of a simplicial complex by dimension, from its facets.

    Returns (number of vertices, number of edges, ...) up to the facet
    dimension; every nonempty subset of a facet is a face.
    """
    facets = [frozenset(f) for f in facets]
    size = max(len(f) for f in facets)
    faces = set()
    for f in facets:
        for r in range(1, len(f) + 1):
            for sub in combinations(sorted(f), r):
                faces.add(frozenset(sub))
    counts = [0] * size
    for face in faces:
        counts[len(face) - 1] += 1
    return tuple(counts)


def region_vertices(n: int) -> set:
    """Integer points with x <= c, y - x <= floor(n/2), x + y >= c.

    c = ceil(n/2) - 1. The scan box is generous on purpose, including
    negative coordinates, so the count is fixed by the inequalities alone.
    """
    c = (n + 1) // 2 - 1
    diag = n // 2
    box = range(-(n + 2), n + 2)
    return {
        (x, y)
        for x in box
        for y in box
        if x <= c and y - x <= diag and x + y >= c
    }


def monotone_paths(vertices, src, dst):
    """All unit-step up/right paths src -> dst staying inside vertices."""
    if src not in vertices or dst not in vertices:
        return []
    out = []

    def walk(v, acc):
        if v == dst:
            out.append(tuple(acc))
            return
        x, y = v
        if x > dst[0] or y > dst[1]:
            return
        for nxt in ((x + 1, y), (x, y + 1)):
            if nxt in vertices:
                acc.append(nxt)
                walk(nxt, acc)
                acc.pop()

    walk(src, [src])
    return out
