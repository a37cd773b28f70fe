"""Gelfand-Zetlin polytopes for SL_n, in exact arithmetic.

For a strictly increasing integer weight ``lam = (lam_1 < ... < lam_n)`` the
polytope Q_lam consists of triangular arrays ``x[i][j]`` (rows ``i = 1..n-1``,
columns ``j = 1..n-i``) satisfying the interlacing inequalities

    x[i-1][j] <= x[i][j] <= x[i-1][j+1]

where row 0 is lam itself.  Points are stored as tuples of row tuples; the
dimension is d = n(n-1)/2 and there are 2d facets, one per inequality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

Scalar = Union[int, Fraction]
Rows = tuple[tuple[Scalar, ...], ...]
Weight = tuple[int, ...]


class Facet(NamedTuple):
    """One interlacing inequality, tight on the corresponding facet.

    ``("L", i, j)`` is ``x[i][j] >= x[i-1][j]`` (coordinate pressed to its
    upper-left neighbour), ``("R", i, j)`` is ``x[i][j] <= x[i-1][j+1]``.
    ``1 <= i <= n-1`` and ``1 <= j <= n-i``.
    """

    kind: str
    i: int
    j: int


@dataclass(frozen=True)
class GZShape:
    """The defining weight of a Gelfand-Zetlin polytope."""

    lam: Weight

    def __post_init__(self) -> None:
        lam = tuple(self.lam)
        if len(lam) < 2:
            raise ValueError("weight needs at least two entries")
        if any(not isinstance(x, int) for x in lam):
            raise ValueError("weight entries must be integers")
        if any(lam[k] >= lam[k + 1] for k in range(len(lam) - 1)):
            raise ValueError("weight must be strictly increasing")
        object.__setattr__(self, "lam", lam)

    @property
    def n(self) -> int:
        return len(self.lam)

    @property
    def d(self) -> int:
        n = self.n
        return n * (n - 1) // 2


def row_lengths(n: int) -> list[int]:
    return [n - i for i in range(1, n)]


def point_shape_ok(n: int, rows: Rows) -> bool:
    return [len(r) for r in rows] == row_lengths(n)


def coord(lam: Weight, rows: Rows, i: int, j: int) -> Scalar:
    """Entry x[i][j], with row 0 read from lam."""
    if i == 0:
        return lam[j - 1]
    return rows[i - 1][j - 1]


def contains(shape: GZShape, rows: Rows) -> bool:
    """Membership test for Q_lam.

    >>> contains(GZShape((0, 1, 3)), ((1, 3), (3,)))
    True
    >>> contains(GZShape((0, 1, 3)), ((2, 3), (3,)))
    False
    """
    n = shape.n
    if not point_shape_ok(n, rows):
        raise ValueError("point shape does not match n")
    lam = shape.lam
    for i in range(1, n):
        for j in range(1, n - i + 1):
            lo = coord(lam, rows, i - 1, j)
            hi = coord(lam, rows, i - 1, j + 1)
            if not (lo <= coord(lam, rows, i, j) <= hi):
                return False
    return True


def lattice_points(shape: GZShape) -> list[Rows]:
    """All integer points of Q_lam, in lexicographic order of the flattened
    row-by-row reading.  Every point interlaces row by row, so each row may
    be enumerated independently between its predecessor's neighbours."""
    out: list[Rows] = []

    def rec(prev: tuple[int, ...], acc: tuple[tuple[int, ...], ...]) -> None:
        if len(prev) == 1:
            out.append(acc)
            return
        ranges = [range(prev[c], prev[c + 1] + 1) for c in range(len(prev) - 1)]
        for row in itertools.product(*ranges):
            rec(row, acc + (row,))

    rec(shape.lam, ())
    return out


def projection_root_coords(rows: Rows) -> tuple[Scalar, ...]:
    """Row sums (sum of row 1, ..., sum of row n-1).

    Up to an additive constant these are the coordinates, on the basis of
    simple roots, of the weight-lattice projection of the point.
    """
    return tuple(sum(r) for r in rows)


def all_facets(n: int) -> list[Facet]:
    out = []
    for i in range(1, n):
        for j in range(1, n - i + 1):
            out.append(Facet("L", i, j))
            out.append(Facet("R", i, j))
    return out


def facet_value(shape: GZShape, facet: Facet, rows: Rows) -> Scalar:
    """Slack of the facet inequality at the point, normalized >= 0 inside Q.

    For ("L", i, j) this is x[i][j] - x[i-1][j]; for ("R", i, j) it is
    x[i-1][j+1] - x[i][j].
    """
    kind, i, j = facet
    n = shape.n
    if not (1 <= i <= n - 1 and 1 <= j <= n - i and kind in ("L", "R")):
        raise ValueError(f"bad facet {facet} for n={n}")
    x = coord(shape.lam, rows, i, j)
    if kind == "L":
        return x - coord(shape.lam, rows, i - 1, j)
    return coord(shape.lam, rows, i - 1, j + 1) - x


def facet_distance(shape: GZShape, facet: Facet, rows: Rows) -> int:
    """Integral distance from an integer point to the facet hyperplane: the
    absolute value of the primitive defining equation at the point.  The
    interlacing equations have coprime coefficients already, so this is just
    the slack.  Requires all entries integral."""
    val = facet_value(shape, facet, rows)
    if isinstance(val, Fraction):
        if val.denominator != 1:
            raise ValueError("integral distance needs an integer point")
        val = int(val)
    return abs(val)


def parse_weight(text: str) -> Weight:
    """Parse "0,1,3" into (0, 1, 3)."""
    try:
        lam = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed weight {text!r}") from None
    return lam


def format_weight(lam: Weight) -> str:
    return ",".join(str(x) for x in lam)


def parse_point(text: str) -> Rows:
    """Parse a point like "1,3;3" (rows separated by ';')."""
    try:
        return tuple(
            tuple(int(tok) for tok in part.split(",")) for part in text.split(";")
        )
    except ValueError:
        raise ValueError(f"malformed point {text!r}") from None


def format_point(rows: Rows) -> str:
    return ";".join(",".join(str(x) for x in r) for r in rows)
