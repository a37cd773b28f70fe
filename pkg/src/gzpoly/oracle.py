"""Brute-force ground truth for small n.

Everything here recomputes polytope data straight from the H-representation
with exact rational elimination, independently of the diagram machinery, so
the two can be compared in tests.  Face enumeration is capped at n = 4.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .polytope import (
    Facet,
    GZShape,
    Rows,
    Weight,
    all_facets,
    contains,
    coord,
    row_lengths,
)

BRUTE_N_MAX = 4

Coord = tuple[int, int]


def _coords(n: int) -> list[Coord]:
    return [(i, j) for i in range(1, n) for j in range(1, n - i + 1)]


def _facet_equation(n: int, lam: Weight, f: Facet) -> tuple[dict[Coord, int], int]:
    """The defining equation of a facet as (coefficients, constant), with
    facet_value = sum(coeff * x) + constant."""
    kind, i, j = f
    coeffs: dict[Coord, int] = {}
    const = 0
    sign = 1 if kind == "L" else -1
    coeffs[(i, j)] = sign
    jj = j if kind == "L" else j + 1
    if i == 1:
        const -= sign * lam[jj - 1]
    else:
        coeffs[(i - 1, jj)] = coeffs.get((i - 1, jj), 0) - sign
    return coeffs, const


def _solve_square(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve a d x d rational system; None when singular."""
    d = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for c in range(d):
        piv = next((r for r in range(c, d) if m[r][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        for r in range(d):
            if r != c and m[r][c] != 0:
                factor = m[r][c] / m[c][c]
                m[r] = [a - factor * b for a, b in zip(m[r], m[c])]
    return [m[c][d] / m[c][c] for c in range(d)]


def _affine_rank(points: list[tuple[Fraction, ...]]) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    mat = [[x - b for x, b in zip(p, base)] for p in points[1:]]
    rank = 0
    ncols = len(base)
    for c in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][c] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][c] != 0:
                factor = mat[r][c] / mat[rank][c]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _to_rows(n: int, flat: list[Fraction]) -> Rows:
    lengths = row_lengths(n)
    rows = []
    k = 0
    for ln in lengths:
        row = []
        for _ in range(ln):
            x = flat[k]
            row.append(int(x) if x.denominator == 1 else x)
            k += 1
        rows.append(tuple(row))
    return tuple(rows)


def _flat(n: int, rows: Rows) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for row in rows for x in row)


@functools.lru_cache(maxsize=16)
def brute_vertices(shape: GZShape) -> list[Rows]:
    """All vertices of Q_lam, found by solving every square subsystem of
    facet equations and keeping feasible unique solutions.  Sorted by the
    flattened coordinate tuple."""
    n = shape.n
    cs = _coords(n)
    idx = {c: k for k, c in enumerate(cs)}
    d = len(cs)
    found: dict[tuple[Fraction, ...], Rows] = {}
    for combo in itertools.combinations(all_facets(n), d):
        mat = []
        rhs = []
        for f in combo:
            coeffs, const = _facet_equation(n, shape.lam, f)
            row = [Fraction(0)] * d
            for c, a in coeffs.items():
                row[idx[c]] = Fraction(a)
            mat.append(row)
            rhs.append(Fraction(-const))
        sol = _solve_square(mat, rhs)
        if sol is None:
            continue
        rows = _to_rows(n, sol)
        if contains(shape, rows):
            found.setdefault(tuple(sol), rows)
    return [found[k] for k in sorted(found)]


def active_facets(shape: GZShape, rows: Rows) -> frozenset[Facet]:
    """Facets whose inequality is tight at the point."""
    out = set()
    for f in all_facets(shape.n):
        coeffs, const = _facet_equation(shape.n, shape.lam, f)
        val = sum(a * coord(shape.lam, rows, i, j) for (i, j), a in coeffs.items())
        if val + const == 0:
            out.add(f)
    return frozenset(out)


def is_simple_vertex(shape: GZShape, rows: Rows) -> bool:
    """A vertex is simple when exactly d facets meet there."""
    return len(active_facets(shape, rows)) == shape.d


@dataclass(frozen=True)
class BruteFace:
    """A nonempty face: the full set of facet equalities holding on it, its
    vertices (sorted), and its exact affine dimension."""

    active: frozenset[Facet]
    vertices: tuple[Rows, ...]
    dim: int


def brute_faces(shape: GZShape) -> list[BruteFace]:
    """Every nonempty face of Q_lam, by scanning all equality subsets of the
    2d facets and deduplicating by vertex set.  Sorted by (dim, vertices)."""
    n = shape.n
    if n > BRUTE_N_MAX:
        raise ValueError(f"brute_faces capped at n={BRUTE_N_MAX}")
    verts = brute_vertices(shape)
    act = [active_facets(shape, v) for v in verts]
    fs = all_facets(n)
    seen: dict[frozenset[int], BruteFace] = {}
    for k in range(len(fs) + 1):
        for sub in itertools.combinations(fs, k):
            s = set(sub)
            sig = frozenset(t for t in range(len(verts)) if s <= act[t])
            if not sig or sig in seen:
                continue
            vs = tuple(verts[t] for t in sorted(sig))
            dim = _affine_rank([_flat(n, v) for v in vs])
            full = frozenset.intersection(*(act[t] for t in sig))
            seen[sig] = BruteFace(active=full, vertices=vs, dim=dim)
    return sorted(seen.values(), key=lambda f: (f.dim, f.vertices))


def brute_face_of_equalities(shape: GZShape, facets) -> BruteFace | None:
    """The face where the given facet equalities all hold, or None when no
    vertex satisfies them (empty face)."""
    n = shape.n
    if n > BRUTE_N_MAX:
        raise ValueError(f"brute_face_of_equalities capped at n={BRUTE_N_MAX}")
    verts = brute_vertices(shape)
    act = [active_facets(shape, v) for v in verts]
    s = set(facets)
    sig = [t for t in range(len(verts)) if s <= act[t]]
    if not sig:
        return None
    vs = tuple(verts[t] for t in sig)
    dim = _affine_rank([_flat(n, v) for v in vs])
    full = frozenset.intersection(*(act[t] for t in sig))
    return BruteFace(active=full, vertices=vs, dim=dim)


def brute_integral_distance(v: Rows, equality: Facet, lam: Weight) -> int:
    """Integral distance from an integer point to a facet hyperplane, from
    first principles: divide the defining equation by the gcd of its
    coefficients (making it primitive) and evaluate the absolute value."""
    n = len(lam)
    coeffs, const = _facet_equation(n, lam, equality)
    content = math.gcd(*(abs(a) for a in coeffs.values()))
    vals = []
    for (i, j), a in coeffs.items():
        x = coord(lam, v, i, j)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError("integral distance needs an integer point")
            x = int(x)
        vals.append(a * x)
    value = sum(vals) + const
    assert value % content == 0
    return abs(value) // content


def weyl_dimension(lam: Weight) -> int:
    """Number of lattice points of Q_lam: the dimension of the irreducible
    representation with the corresponding highest weight,
    prod_{i<j} (lam_j - lam_i + j - i) / prod_{i<j} (j - i).

    >>> weyl_dimension((0, 3))
    4
    >>> weyl_dimension((0, 1, 3))
    15
    """
    n = len(lam)
    if any(lam[k] >= lam[k + 1] for k in range(n - 1)):
        raise ValueError("weight must be strictly increasing")
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[j] - lam[i] + (j - i)
            den *= j - i
    assert num % den == 0
    return num // den
