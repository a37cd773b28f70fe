"""Face diagrams on the triangular grid.

A diagram lives on grid points ``p_{r,c}`` with rows ``r = 1..n`` and columns
``c = 1..n-r+1``.  Point ``p_{r,c}`` stands for the polytope coordinate
``x[r-1][c]``; row 1 carries the fixed values ``lam_1..lam_n``.  An edge of
kind "L" at (row, col) joins ``p_{row,col}`` to ``p_{row-1,col}`` and imposes
the equality ``x[row-1][col] = x[row-2][col]``; kind "R" joins ``p_{row,col}``
to ``p_{row-1,col+1}``.  Edges therefore match facets one-to-one via
``(kind, i=row-1, j=col)``.

Diagrams whose edges form n disjoint paths, the i-th spanning grid rows 1..i,
are called simple; they encode exactly the simple vertices of the polytope
and biject with permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .polytope import Facet, Rows, Scalar, Weight, coord
from .weyl import Perm, Root, all_perms

GridPoint = tuple[int, int]


class Edge(NamedTuple):
    kind: str
    row: int
    col: int


Diagram = frozenset  # of Edge


def grid_points(n: int) -> list[GridPoint]:
    return [(r, c) for r in range(1, n + 1) for c in range(1, n - r + 2)]


def all_edges(n: int) -> list[Edge]:
    out = []
    for r in range(2, n + 1):
        for c in range(1, n - r + 2):
            out.append(Edge("L", r, c))
            out.append(Edge("R", r, c))
    return out


def check_edges(n: int, diagram: Iterable[Edge]) -> None:
    for e in diagram:
        ok = e.kind in ("L", "R") and 2 <= e.row <= n and 1 <= e.col <= n - e.row + 1
        if not ok:
            raise ValueError(f"edge {e} out of range for n={n}")


def edge_endpoints(e: Edge) -> tuple[GridPoint, GridPoint]:
    """(lower point, upper point) of the edge."""
    upper_col = e.col if e.kind == "L" else e.col + 1
    return (e.row, e.col), (e.row - 1, upper_col)


def facet_of_edge(e: Edge) -> Facet:
    return Facet(e.kind, e.row - 1, e.col)


def edge_of_facet(f: Facet) -> Edge:
    return Edge(f.kind, f.i + 1, f.j)


def switch_edge(diagram: Diagram, e: Edge) -> Diagram:
    """Replace e by the opposite-kind edge at the same lower endpoint.

    >>> d = frozenset({Edge("R", 2, 1)})
    >>> sorted(switch_edge(d, Edge("R", 2, 1)))
    [Edge(kind='L', row=2, col=1)]
    """
    if e not in diagram:
        raise ValueError(f"edge {e} not in diagram")
    other = Edge("L" if e.kind == "R" else "R", e.row, e.col)
    return (diagram - {e}) | {other}


@dataclass(frozen=True)
class FaceClass:
    """Canonical form of the face cut out by a diagram's equalities.

    blocks: partition of all grid points into equality classes, each block
    sorted, blocks ordered by smallest member.  anchors[k] is the column c
    of the row-1 point in blocks[k] (so the block's value is lam_c), or None.
    dim = number of unanchored blocks, or -1 when the face is empty.
    Anchors and dimension do not depend on lam beyond strict monotonicity.
    """

    n: int
    blocks: tuple[tuple[GridPoint, ...], ...]
    anchors: tuple[Optional[int], ...]
    dim: int
    empty: bool


def close_face(n: int, diagram: Diagram) -> FaceClass:
    """Saturate a diagram's equalities into a canonical face description.

    Starting from the union of edge endpoints, equality classes are merged
    until stable under everything the interlacing order forces: whenever the
    order constraints (x[i-1][j] <= x[i][j] <= x[i-1][j+1], read as arcs on
    grid points) put two classes on a directed cycle, the cycle collapses to
    one class.  In particular two horizontally adjacent points in one class
    squeeze both points lying between them.  The face is empty exactly when
    a class holds two row-1 points or a class anchored at lam_a is forced
    below one anchored at lam_b with a > b.
    """
    check_edges(n, diagram)
    pts = grid_points(n)
    index = {p: k for k, p in enumerate(pts)}
    parent = list(range(len(pts)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for e in diagram:
        lo, up = edge_endpoints(e)
        union(index[lo], index[up])

    # value(p) <= value(q) along each arc p -> q
    arcs = []
    for i in range(1, n):
        for j in range(1, n - i + 1):
            a, b, c = index[(i, j)], index[(i + 1, j)], index[(i, j + 1)]
            arcs.append((a, b))
            arcs.append((b, c))

    while True:
        reps = sorted({find(k) for k in range(len(pts))})
        pos = {r: t for t, r in enumerate(reps)}
        m = len(reps)
        adj = [0] * m
        for a, b in arcs:
            ra, rb = pos[find(a)], pos[find(b)]
            if ra != rb:
                adj[ra] |= 1 << rb
        reach = [(1 << t) | adj[t] for t in range(m)]
        changed = True
        while changed:
            changed = False
            for t in range(m):
                acc = reach[t]
                rest = acc & ~(1 << t)
                while rest:
                    low = rest & -rest
                    acc |= reach[low.bit_length() - 1]
                    rest &= ~low
                if acc != reach[t]:
                    reach[t] = acc
                    changed = True
        merged = False
        for t in range(m):
            for s in range(t + 1, m):
                if (reach[t] >> s) & 1 and (reach[s] >> t) & 1:
                    union(reps[t], reps[s])
                    merged = True
        if not merged:
            break

    groups: dict[int, list[GridPoint]] = {}
    for k, p in enumerate(pts):
        groups.setdefault(find(k), []).append(p)

    anchor_of: dict[int, Optional[int]] = {}
    empty = False
    for rep, blk in groups.items():
        cols = sorted(c for (r, c) in blk if r == 1)
        if len(cols) > 1:
            empty = True
        anchor_of[rep] = cols[0] if cols else None
    if not empty:
        # order violation: anchored class forced weakly below a smaller anchor
        for t in range(m):
            a = anchor_of.get(reps[t])
            if a is None:
                continue
            for s in range(m):
                if s == t or not (reach[t] >> s) & 1:
                    continue
                b = anchor_of.get(reps[s])
                if b is not None and a > b:
                    empty = True

    order = sorted(groups, key=lambda rep: min(groups[rep]))
    blocks = tuple(tuple(sorted(groups[rep])) for rep in order)
    anchors = tuple(anchor_of[rep] for rep in order)
    dim = -1 if empty else sum(1 for a in anchors if a is None)
    return FaceClass(n=n, blocks=blocks, anchors=anchors, dim=dim, empty=empty)


def face_contains(container: FaceClass, contained: FaceClass) -> bool:
    """True iff `contained` is a subset of `container`, both faces of the
    same polytope.  Containment means every equality of the container also
    holds on the contained face: each container block sits inside a single
    block of the contained face."""
    if container.n != contained.n:
        raise ValueError("faces of different polytopes")
    if contained.empty:
        return True
    if container.empty:
        return False
    where: dict[GridPoint, int] = {}
    for k, blk in enumerate(contained.blocks):
        for p in blk:
            where[p] = k
    for blk in container.blocks:
        if len({where[p] for p in blk}) > 1:
            return False
    return True


def face_has_point(face: FaceClass, lam: Weight, rows: Rows) -> bool:
    """True iff the (feasible) point satisfies every equality of the face."""
    if face.empty:
        return False
    for blk, anchor in zip(face.blocks, face.anchors):
        vals = {coord(lam, rows, r - 1, c) for (r, c) in blk}
        if len(vals) > 1:
            return False
        if anchor is not None and vals != {lam[anchor - 1]}:
            return False
    return True


def tight_facets(face: FaceClass) -> frozenset[Facet]:
    """Facets whose defining equality holds identically on the face."""
    if face.empty:
        return frozenset(Facet(e.kind, e.row - 1, e.col) for e in all_edges(face.n))
    where: dict[GridPoint, int] = {}
    for k, blk in enumerate(face.blocks):
        for p in blk:
            where[p] = k
    out = set()
    for e in all_edges(face.n):
        lo, up = edge_endpoints(e)
        if where[lo] == where[up]:
            out.add(facet_of_edge(e))
    return frozenset(out)


def is_simple(n: int, diagram: Diagram) -> bool:
    """True iff the edges form n disjoint paths, the i-th spanning grid rows
    1..i: between rows i and i+1 there are exactly n-i edges with pairwise
    distinct lower and pairwise distinct upper endpoints.

    >>> is_simple(2, frozenset({Edge("L", 2, 1)}))
    True
    >>> is_simple(2, frozenset())
    False
    """
    check_edges(n, diagram)
    for level in range(1, n):
        level_edges = [e for e in diagram if e.row == level + 1]
        if len(level_edges) != n - level:
            return False
        lowers = {e.col for e in level_edges}
        uppers = {e.col if e.kind == "L" else e.col + 1 for e in level_edges}
        if len(lowers) != n - level or len(uppers) != n - level:
            return False
    return True


def tree_paths(n: int, diagram: Diagram) -> list[list[GridPoint]]:
    """The n disjoint paths of a simple diagram, one per starting column,
    each listed from its row-1 point downward.

    Raises ValueError when the diagram is not simple.
    """
    if not is_simple(n, diagram):
        raise ValueError("diagram is not simple")
    down: dict[GridPoint, Edge] = {}
    for e in diagram:
        lo, up = edge_endpoints(e)
        down[up] = e
    paths = []
    for c in range(1, n + 1):
        path = [(1, c)]
        while path[-1] in down:
            e = down[path[-1]]
            path.append((e.row, e.col))
        paths.append(path)
    return paths


def sigma_of(n: int, diagram: Diagram) -> Perm:
    """The permutation of a simple diagram: sigma(c) = number of rows spanned
    by the path starting at p_{1,c}."""
    return tuple(len(path) for path in tree_paths(n, diagram))


def diagram_of_sigma(n: int, sigma: Perm) -> Diagram:
    """Inverse of sigma_of.

    Going down from row r-1 to row r, exactly the trees with sigma >= r
    survive; the tree whose column drops out shifts the trees to its right
    one slot leftward (R-edges), while trees to its left keep their slot
    (L-edges).
    """
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation window for n={n}: {sigma}")
    edges = []
    active = list(range(1, n + 1))
    for r in range(2, n + 1):
        (dropped,) = [c for c in active if sigma[c - 1] == r - 1]
        active = [c for c in active if c != dropped]
        for slot, c in enumerate(active, start=1):
            kind = "L" if c < dropped else "R"
            edges.append(Edge(kind, r, slot))
    return frozenset(edges)


def simple_diagrams(n: int) -> list[Diagram]:
    """All simple diagrams, ordered lexicographically by their permutation."""
    return [diagram_of_sigma(n, w) for w in all_perms(n)]


def vertex_point(lam: Weight, diagram: Diagram) -> Rows:
    """Coordinates of the simple vertex: every point of the path starting at
    p_{1,s} takes the value lam_s.

    >>> vertex_point((0, 1, 3), diagram_of_sigma(3, (1, 2, 3)))
    ((1, 3), (3,))
    """
    n = len(lam)
    rows: list[list[Scalar]] = [[0] * (n - i) for i in range(1, n)]
    for c0, path in enumerate(tree_paths(n, diagram), start=1):
        for r, c in path[1:]:
            rows[r - 2][c - 1] = lam[c0 - 1]
    return tuple(tuple(row) for row in rows)


def tree_edge_root(n: int, diagram: Diagram, e: Edge) -> Root:
    """The root attached to an edge of a simple diagram: for the edge between
    rows i and i+1 of the path spanning rows 1..j, this is (i, j) when the
    edge has kind L and (j, i) when kind R.  The returned root is always
    negative on the vertex weight."""
    if e not in diagram:
        raise ValueError(f"edge {e} not in diagram")
    lower = (e.row, e.col)
    for path in tree_paths(n, diagram):
        if lower in path:
            j = len(path)
            break
    i = e.row - 1
    return (i, j) if e.kind == "L" else (j, i)


def edge_roots(n: int, diagram: Diagram) -> dict[Edge, Root]:
    """tree_edge_root for every edge of a simple diagram at once."""
    out: dict[Edge, Root] = {}
    down: dict[GridPoint, Edge] = {}
    for e in diagram:
        lo, up = edge_endpoints(e)
        down[up] = e
    for path in tree_paths(n, diagram):
        j = len(path)
        for upper in path[:-1]:
            e = down[upper]
            i = e.row - 1
            out[e] = (i, j) if e.kind == "L" else (j, i)
    return out


def adjacent_vertices(n: int, dv: Diagram, du: Diagram) -> Optional[Root]:
    """The root along the polytope edge joining two simple vertices, or None.

    Two simple vertices are joined by an edge of the polytope exactly when
    their diagrams differ by switching one edge.  The returned root alpha is
    the one attached to the switched edge inside dv; the step from the
    dv-vertex to the du-vertex is then a positive multiple of alpha.
    """
    only_v = dv - du
    only_u = du - dv
    if len(only_v) != 1 or len(only_u) != 1:
        return None
    (e,) = only_v
    (f,) = only_u
    if (e.row, e.col) != (f.row, f.col) or e.kind == f.kind:
        return None
    return tree_edge_root(n, dv, e)


def parse_diagram(text: str) -> Diagram:
    """Parse a diagram like "L:2,1;R:2,2;R:3,1" (empty string = no edges).

    >>> sorted(parse_diagram("L:2,1;R:3,1"))
    [Edge(kind='L', row=2, col=1), Edge(kind='R', row=3, col=1)]
    """
    text = text.strip()
    if not text:
        return frozenset()
    edges = []
    for token in text.split(";"):
        try:
            kind, rc = token.split(":")
            row, col = rc.split(",")
            edge = Edge(kind.strip(), int(row), int(col))
        except ValueError:
            raise ValueError(f"malformed diagram token {token!r}") from None
        if edge.kind not in ("L", "R"):
            raise ValueError(f"malformed diagram token {token!r}")
        edges.append(edge)
    return frozenset(edges)


def format_diagram(diagram: Diagram) -> str:
    return ";".join(f"{e.kind}:{e.row},{e.col}" for e in sorted(diagram))
