"""Weighted planar lattice graphs and non-intersecting path families.

For n >= 2, let c = ceil(n/2) - 1. The graph of order n has vertex set

    {(x, y) in Z^2 : x <= c,  y - x <= floor(n/2),  x + y >= c}

with horizontal arcs (x,y) -> (x+1,y) of weight 1 and vertical arcs
(x,y) -> (x,y+1) of weight w_y = (n-y)/(y+1) = C(n,y+1)/C(n,y), arcs kept
only when both endpoints lie in the vertex set. Source i sits at
(c - i, i) for i = 0..c, sink j at (c, j) for j = 0..n-1. The sum of path
weights from source i to sink j equals the path-matrix entry of module
transfer, and a minor of that matrix on rows I and columns J equals the
total weight of all families of pairwise vertex-disjoint paths joining
source I_t to sink J_t. Since every arc weight is positive, that sum is
visibly nonnegative, which is the whole certificate: enumerating the
families proves the minor nonnegative without computing a determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import NamedTuple, Sequence

from .errors import BudgetExceededError, CrossCheckError
from .exactnum import binomial

__all__ = [
    "Arc",
    "LatticeGraph",
    "PathFamily",
    "lattice_graph",
    "vertical_weight",
    "path_weight_sum",
    "path_weight_closed_form",
    "path_weight",
    "nonintersecting_families",
    "minor_via_lgv",
    "export_dot",
    "graph_json_obj",
    "FAMILY_MAX_ORDER",
    "FAMILY_MAX_N",
]

Vertex = tuple[int, int]

# family enumeration is exponential in principle; these bounds keep every
# in-contract call comfortably fast and anything bigger errors out
FAMILY_MAX_ORDER = 3
FAMILY_MAX_N = 10


class Arc(NamedTuple):
    tail: Vertex
    head: Vertex
    weight: Fraction


def vertical_weight(n: int, y: int) -> Fraction:
    """Weight w_y = (n-y)/(y+1) of the vertical arc leaving height y."""
    return Fraction(n - y, y + 1)


@dataclass(frozen=True)
class LatticeGraph:
    n: int
    vertices: frozenset
    arcs: tuple[Arc, ...]

    @property
    def corner(self) -> int:
        """c = ceil(n/2) - 1: the sink column, also the lowest anti-diagonal."""
        return (self.n + 1) // 2 - 1

    @property
    def sources(self) -> tuple[Vertex, ...]:
        c = self.corner
        return tuple((c - i, i) for i in range(c + 1))

    @property
    def sinks(self) -> tuple[Vertex, ...]:
        c = self.corner
        return tuple((c, j) for j in range(self.n))


def lattice_graph(n: int) -> LatticeGraph:
    """Build the weighted lattice graph of order n >= 2."""
    if n < 2:
        raise ValueError(f"lattice_graph: n must be >= 2, got {n}")
    c = (n + 1) // 2 - 1
    diag = n // 2
    vertices = set()
    for x in range(c + 1):
        for y in range(c - x, x + diag + 1):
            vertices.add((x, y))
    arcs = []
    for x, y in vertices:
        if (x + 1, y) in vertices:
            arcs.append(Arc((x, y), (x + 1, y), Fraction(1)))
        if (x, y + 1) in vertices:
            arcs.append(Arc((x, y), (x, y + 1), vertical_weight(n, y)))
    arcs.sort(key=lambda a: (a.tail, a.head))
    return LatticeGraph(n, frozenset(vertices), tuple(arcs))


def _check_indices(g: LatticeGraph, i: int, j: int) -> None:
    if not 0 <= i <= g.corner:
        raise ValueError(f"source index out of range: i = {i}, valid 0..{g.corner}")
    if not 0 <= j <= g.n - 1:
        raise ValueError(f"sink index out of range: j = {j}, valid 0..{g.n - 1}")


def path_weight_sum(g: LatticeGraph, i: int, j: int) -> Fraction:
    """Exact total weight of all paths from source i to sink j.

    Dynamic programming in the fixed topological order (x+y ascending,
    then x ascending). The result is always an integer despite the
    fractional arc weights; that is checked, not assumed.
    """
    _check_indices(g, i, j)
    src = g.sources[i]
    dst = g.sinks[j]
    out = {}
    for a in g.arcs:
        out.setdefault(a.tail, []).append(a)
    acc = {src: Fraction(1)}
    for v in sorted(g.vertices, key=lambda p: (p[0] + p[1], p[0])):
        w = acc.get(v)
        if w is None:
            continue
        for a in out.get(v, ()):
            acc[a.head] = acc.get(a.head, Fraction(0)) + w * a.weight
    total = acc.get(dst, Fraction(0))
    if total.denominator != 1:
        raise CrossCheckError(
            f"path weight sum for n={g.n}, i={i}, j={j} is not an integer: {total}"
        )
    return total


def path_weight_closed_form(n: int, i: int, j: int) -> int:
    """Closed form C(n-i, n-j) - C(i, n-j) for i <= j, zero for i > j."""
    if i > j:
        return 0
    return binomial(n - i, n - j) - binomial(i, n - j)


def path_weight(g: LatticeGraph, path: Sequence[Vertex]) -> Fraction:
    """Product of arc weights along a path (vertical steps carry w_y)."""
    w = Fraction(1)
    for (x1, y1), (x2, y2) in zip(path, path[1:]):
        if x2 == x1:
            w *= vertical_weight(g.n, y1)
    return w


@lru_cache(maxsize=None)
def _paths(g: LatticeGraph, src: Vertex, dst: Vertex) -> tuple[tuple[Vertex, ...], ...]:
    """All monotone paths src -> dst inside the vertex set, as vertex tuples."""
    if src not in g.vertices or dst not in g.vertices:
        return ()
    found: list[tuple[Vertex, ...]] = []

    def walk(v: Vertex, acc: list[Vertex]) -> None:
        if v == dst:
            found.append(tuple(acc))
            return
        x, y = v
        if x > dst[0] or y > dst[1]:
            return
        for nxt in ((x, y + 1), (x + 1, y)):
            if nxt in g.vertices:
                acc.append(nxt)
                walk(nxt, acc)
                acc.pop()

    walk(src, [src])
    return tuple(found)


@dataclass(frozen=True)
class PathFamily:
    """Pairwise vertex-disjoint paths, one per (source, sink) pair, with weight."""

    paths: tuple[tuple[Vertex, ...], ...]
    weight: Fraction


def nonintersecting_families(
    g: LatticeGraph, rows: Sequence[int], cols: Sequence[int]
) -> list[PathFamily]:
    """All vertex-disjoint path families joining source rows[t] to sink cols[t].

    Planarity forces the identity pairing: for any other assignment of
    sources to sinks two paths would have to cross, hence share a vertex.
    The enumeration checks every pairing anyway and treats a disjoint
    family under a non-identity pairing as a hard internal error, turning
    the proof fact into a runtime invariant.
    """
    rows = list(rows)
    cols = list(cols)
    if len(rows) != len(cols):
        raise ValueError("rows and cols must have the same length")
    if not rows:
        raise ValueError("rows and cols must be nonempty")
    if any(b <= a for a, b in zip(rows, rows[1:])) or any(
        b <= a for a, b in zip(cols, cols[1:])
    ):
        raise ValueError("rows and cols must be strictly increasing")
    for i in rows:
        _check_indices(g, i, 0)
    for j in cols:
        _check_indices(g, 0, j)
    k = len(rows)
    if k > FAMILY_MAX_ORDER or g.n > FAMILY_MAX_N:
        raise BudgetExceededError(
            f"family enumeration budget is order <= {FAMILY_MAX_ORDER} and n <= {FAMILY_MAX_N}; "
            f"got order {k}, n {g.n}"
        )
    sources = [g.sources[i] for i in rows]
    sinks = [g.sinks[j] for j in cols]

    identity: list[PathFamily] = []
    for perm in permutations(range(k)):
        plists = [_paths(g, sources[t], sinks[perm[t]]) for t in range(k)]
        psets = [[frozenset(p) for p in pl] for pl in plists]
        is_identity = perm == tuple(range(k))

        def extend(t: int, used: frozenset, acc: list) -> None:
            if t == k:
                if is_identity:
                    fam = tuple(acc)
                    w = Fraction(1)
                    for p in fam:
                        w *= path_weight(g, p)
                    identity.append(PathFamily(fam, w))
                    return
                raise CrossCheckError(
                    f"disjoint path family under non-identity pairing {perm} "
                    f"(n={g.n}, rows={rows}, cols={cols})"
                )
            for p, s in zip(plists[t], psets[t]):
                if not (s & used):
                    acc.append(p)
                    extend(t + 1, used | s, acc)
                    acc.pop()

        extend(0, frozenset(), [])
    return identity


def minor_via_lgv(g: LatticeGraph, rows: Sequence[int], cols: Sequence[int]) -> Fraction:
    """Minor of the path-weight matrix as a sum of disjoint-family weights.

    Equals the determinant of the corresponding submatrix of the path
    matrix, and is nonnegative term by term since arc weights are positive.
    """
    total = Fraction(0)
    for fam in nonintersecting_families(g, rows, cols):
        total += fam.weight
    return total


def export_dot(g: LatticeGraph) -> str:
    """Graphviz DOT text; deterministic, vertical arcs labeled with w_y."""
    lines = [f"digraph lattice{g.n} {{"]
    for v in sorted(g.vertices):
        lines.append(f'  "({v[0]},{v[1]})";')
    for a in g.arcs:
        tail = f'"({a.tail[0]},{a.tail[1]})"'
        head = f'"({a.head[0]},{a.head[1]})"'
        if a.head[0] == a.tail[0]:
            lines.append(f"  {tail} -> {head} [label=\"{a.weight}\"];")
        else:
            lines.append(f"  {tail} -> {head};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_json_obj(g: LatticeGraph) -> dict:
    """JSON-ready dict {n, vertices, arcs} with exact rational weights."""
    return {
        "n": g.n,
        "vertices": [list(v) for v in sorted(g.vertices)],
        "arcs": [
            {
                "from": list(a.tail),
                "to": list(a.head),
                "weight_num": a.weight.numerator,
                "weight_den": a.weight.denominator,
            }
            for a in g.arcs
        ],
    }
