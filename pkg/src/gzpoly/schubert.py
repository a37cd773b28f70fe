"""Schubert cells read off from faces of the Gelfand-Zetlin polytope.

A cell is a pair (v, B): a simple vertex v of Q_lam (an extremal weight
vector, of weight sigma_v lam) together with a Borel subgroup B containing
the torus, encoded by the Weyl element u with positive system
Phi(B) = {(u(i), u(j)) : i < j}.  The face of the cell is obtained by
deleting from D(v) the tree edges whose roots lie in R(v,B) and closing the
remaining equalities; its dimension equals the cell dimension |R(v,B)|.

Cells are labeled by w = u^{-1} sigma_v, the class of the cell closure in
the reference frame of the standard Borel; conjugate cells share the label.
Both Chevalley-type face formulas are implemented and cross-checked against
the classical coroot formula by the exhaustive `verify` sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .diagrams import (
    Diagram,
    FaceClass,
    adjacent_vertices,
    close_face,
    diagram_of_sigma,
    edge_roots,
    face_contains,
    sigma_of,
    tight_facets,
    vertex_point,
)
from .polytope import (
    Facet,
    GZShape,
    Weight,
    facet_distance,
    projection_root_coords,
)
from .weyl import (
    Perm,
    Root,
    act_weight,
    all_perms,
    avoids_patterns,
    bruhat_coatoms,
    chevalley_classical,
    compose,
    format_perm,
    identity,
    inverse,
    longest_element,
    pairing,
    root_coords,
    root_vector,
)


@dataclass(frozen=True)
class Borel:
    """Borel choice: the Weyl frame u with Phi(B) = {(u(i), u(j)) : i < j}."""

    u: Perm

    def __post_init__(self) -> None:
        if sorted(self.u) != list(range(1, len(self.u) + 1)):
            raise ValueError(f"not a permutation window: {self.u}")

    @property
    def n(self) -> int:
        return len(self.u)

    def positive_system(self) -> frozenset[Root]:
        u = self.u
        n = self.n
        return frozenset(
            (u[i - 1], u[j - 1]) for i in range(1, n + 1) for j in range(i + 1, n + 1)
        )

    @staticmethod
    def plus(n: int) -> "Borel":
        return Borel(identity(n))

    @staticmethod
    def minus(n: int) -> "Borel":
        return Borel(longest_element(n))


def r_set(dv: Diagram, borel: Borel, lam: Weight) -> frozenset[Root]:
    """The roots of Phi(B) whose root vectors do not annihilate the extremal
    weight vector v: those alpha with (sigma_v lam, alpha) < 0.  Their count
    is the dimension of the cell (v, B).  For strictly increasing lam the
    set depends only on sigma_v and B."""
    n = borel.n
    if len(lam) != n:
        raise ValueError("weight size does not match Borel size")
    mu = act_weight(sigma_of(n, dv), lam)
    return frozenset(a for a in borel.positive_system() if pairing(mu, a) < 0)


def class_label(dv: Diagram, borel: Borel) -> Perm:
    """The Weyl element u^{-1} sigma_v naming the cohomology class of the
    cell closure in the standard frame; its length is the cell dimension."""
    return compose(inverse(borel.u), sigma_of(borel.n, dv))


def gamma_diagram(dv: Diagram, borel: Borel, lam: Weight) -> Diagram:
    """Edges of D(v) that survive the cell construction: the tree edges
    whose roots lie in R(v,B) are deleted."""
    rs = r_set(dv, borel, lam)
    roots = edge_roots(borel.n, dv)
    return frozenset(e for e in dv if roots[e] not in rs)


def gamma_face(dv: Diagram, borel: Borel, lam: Weight) -> FaceClass:
    """The face of Q_lam carrying the closure of the cell (v, B): close the
    equalities of the surviving edges.  Its dimension is |R(v,B)| and it
    contains the vertex v."""
    return close_face(borel.n, gamma_diagram(dv, borel, lam))


def preceding_cells(dv: Diagram, borel: Borel) -> list[Diagram]:
    """Diagrams of the cells (u, B) whose closures are codimension-1 in the
    closure of (v, B): class labels covered by class_label(v, B) in Bruhat
    order.  Sorted by sigma_u."""
    u = borel.u
    label = class_label(dv, borel)
    sus = sorted(compose(u, wp) for wp in bruhat_coatoms(label))
    return [diagram_of_sigma(borel.n, su) for su in sus]


def is_admissible(dv: Diagram, borel: Borel, lam: Weight) -> bool:
    """True iff the face of (v, B) contains the face of every preceding
    cell, so that the face geometry realizes the full cell closure."""
    gv = gamma_face(dv, borel, lam)
    for du in preceding_cells(dv, borel):
        if not face_contains(gv, gamma_face(du, borel, lam)):
            return False
    return True


def _reflection_data(sv: Perm, su: Perm) -> Root:
    """The positive root alpha = (i, j) with sigma_v = s_alpha sigma_u, for
    cells in a covering relation."""
    t = compose(sv, inverse(su))
    moved = [k for k in range(1, len(sv) + 1) if t[k - 1] != k]
    if len(moved) != 2:
        raise ValueError("cells are not related by a reflection")
    return (moved[0], moved[1])


def chevalley_faces(dv: Diagram, borel: Borel, lam: Weight) -> dict[Perm, int]:
    """Face-based Chevalley expansion of the hyperplane-class product on the
    cell (v, B), keyed by the class labels of the preceding cells.

    For a preceding cell u with sigma_v = s_alpha sigma_u, alpha spanning
    rows i..j, the diagrams D(u) and D(v) are compared edge-by-edge between
    grid rows i and i+1 (edges matched by lower endpoint).  Each edge of
    D(u) whose kind differs from its counterpart in D(v) is one defining
    equation; its facet contributes the integral distance from the vertex v
    to that facet.  On admissible cells exactly one edge differs and the
    coefficient is the integral distance from v to the preceding face.
    """
    shape = GZShape(lam)
    n = borel.n
    sv = sigma_of(n, dv)
    pv = vertex_point(lam, dv)
    kinds_v = {(e.row, e.col): e.kind for e in dv}
    u = borel.u
    out: dict[Perm, int] = {}
    for wp in bruhat_coatoms(class_label(dv, borel)):
        su = compose(u, wp)
        i, _ = _reflection_data(sv, su)
        total = 0
        for e in diagram_of_sigma(n, su):
            if e.row != i + 1 or kinds_v[(e.row, e.col)] == e.kind:
                continue
            total += facet_distance(shape, Facet(e.kind, i, e.col), pv)
        out[wp] = total
    return out


class _Sweep:
    """Shared per-permutation caches for exhaustive (v, B) scans."""

    def __init__(self, n: int, lam: Weight):
        if len(lam) != n:
            raise ValueError("weight length does not match n")
        self.n = n
        self.lam = lam
        self.shape = GZShape(lam)
        self.perms = all_perms(n)
        self.diagram = {w: diagram_of_sigma(n, w) for w in self.perms}
        self.point = {w: vertex_point(lam, self.diagram[w]) for w in self.perms}
        self.weight = {w: act_weight(w, lam) for w in self.perms}
        self.eroots = {w: edge_roots(n, self.diagram[w]) for w in self.perms}
        self.kinds = {
            w: {(e.row, e.col): e.kind for e in self.diagram[w]} for w in self.perms
        }
        self.coatoms = {w: bruhat_coatoms(w) for w in self.perms}
        self.phi = {u: Borel(u).positive_system() for u in self.perms}
        self._gamma: dict[tuple[Perm, Perm], FaceClass] = {}
        self._tight: dict[tuple[Perm, Perm], frozenset[Facet]] = {}

    def gamma(self, sv: Perm, u: Perm) -> FaceClass:
        key = (sv, u)
        got = self._gamma.get(key)
        if got is None:
            phi = self.phi[u]
            keep = frozenset(e for e, a in self.eroots[sv].items() if a not in phi)
            got = close_face(self.n, keep)
            self._gamma[key] = got
            self._tight[key] = tight_facets(got)
        return got

    def tight(self, sv: Perm, u: Perm) -> frozenset[Facet]:
        self.gamma(sv, u)
        return self._tight[(sv, u)]

    def expansion(self, sv: Perm, u: Perm) -> dict[Perm, int]:
        label = compose(inverse(u), sv)
        pv = self.point[sv]
        kv = self.kinds[sv]
        out: dict[Perm, int] = {}
        for wp in self.coatoms[label]:
            su = compose(u, wp)
            i, _ = _reflection_data(sv, su)
            total = 0
            for e in self.diagram[su]:
                if e.row != i + 1 or kv[(e.row, e.col)] == e.kind:
                    continue
                total += facet_distance(self.shape, Facet(e.kind, i, e.col), pv)
            out[wp] = total
        return out


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of the exhaustive sweep over all (v, B) pairs."""

    n: int
    lam: Weight
    pairs: int
    distance_checks: int
    adjacency_checks: int
    mismatches: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        return f"{self.pairs} pairs, {len(self.mismatches)} mismatches"


def _fmt_expansion(exp: dict[Perm, int]) -> str:
    return "{" + ", ".join(f"{format_perm(w)}: {c}" for w, c in sorted(exp.items())) + "}"


def verify(n: int, lam: Weight) -> VerifyReport:
    """Exhaustive cross-check of the face formulas for one weight.

    For every pair (v, B) the face-based expansion is compared with the
    classical coroot Chevalley formula for the class label.  On every
    preceding pair whose faces are nested (the admissible situation) the
    integral distance from v to the preceding face is compared with
    |(p(v), alpha)|.  Finally every pair of adjacent simple vertices is
    checked to span a polytope edge running along its root with integral
    length |lam_r - lam_s|, the anchors r, s given by sigma_v^{-1}.

    Mismatches are returned as data, ordered by (sigma_v, u).
    """
    sweep = _Sweep(n, lam)
    classical = {w: chevalley_classical(w, lam) for w in sweep.perms}
    mismatches: list[dict] = []
    pairs = 0
    distance_checks = 0

    def record(kind: str, sv: Perm, u: Optional[Perm], detail: str) -> None:
        mismatches.append(
            {
                "kind": kind,
                "sigma": format_perm(sv),
                "borel": format_perm(u) if u is not None else "",
                "detail": detail,
            }
        )

    for sv in sweep.perms:
        for u in sweep.perms:
            pairs += 1
            label = compose(inverse(u), sv)
            expected = classical[label]
            got = sweep.expansion(sv, u)
            if got != expected:
                record(
                    "chevalley",
                    sv,
                    u,
                    f"faces {_fmt_expansion(got)} != classical {_fmt_expansion(expected)}",
                )
            gv = sweep.gamma(sv, u)
            for wp in sweep.coatoms[label]:
                su = compose(u, wp)
                gu = sweep.gamma(su, u)
                if not face_contains(gv, gu):
                    continue
                distance_checks += 1
                alpha = _reflection_data(sv, su)
                want = abs(pairing(sweep.weight[sv], alpha))
                cands = sorted(sweep.tight(su, u) - sweep.tight(sv, u))
                if len(cands) != 1:
                    record(
                        "distance",
                        sv,
                        u,
                        f"preceding {format_perm(su)}: {len(cands)} separating facets",
                    )
                    continue
                have = facet_distance(sweep.shape, cands[0], sweep.point[sv])
                if have != want:
                    record(
                        "distance",
                        sv,
                        u,
                        f"preceding {format_perm(su)}: distance {have} != |pairing| {want}",
                    )

    adjacency_checks = 0
    perms = sweep.perms
    for a in range(len(perms)):
        for b in range(a + 1, len(perms)):
            sa, sb = perms[a], perms[b]
            alpha = adjacent_vertices(n, sweep.diagram[sa], sweep.diagram[sb])
            if alpha is None:
                continue
            adjacency_checks += 1
            i, j = alpha
            inv = inverse(sa)
            want = abs(lam[inv[i - 1] - 1] - lam[inv[j - 1] - 1])
            problems = []
            if abs(pairing(sweep.weight[sa], alpha)) != want:
                problems.append("pairing != anchor gap")
            delta = tuple(x - y for x, y in zip(sweep.weight[sb], sweep.weight[sa]))
            step = root_coords(delta)
            along = tuple(want * x for x in root_coords(root_vector(n, alpha)))
            if step != along:
                problems.append("weight step not along the root")
            proj = tuple(
                x - y
                for x, y in zip(
                    projection_root_coords(sweep.point[sb]),
                    projection_root_coords(sweep.point[sa]),
                )
            )
            if proj != step:
                problems.append("projected edge differs from weight step")
            if problems:
                record("adjacency", sa, None, f"vs {format_perm(sb)}: " + "; ".join(problems))

    return VerifyReport(
        n=n,
        lam=tuple(lam),
        pairs=pairs,
        distance_checks=distance_checks,
        adjacency_checks=adjacency_checks,
        mismatches=tuple(mismatches),
    )


@dataclass(frozen=True)
class CensusEntry:
    """Admissibility summary for one class label across all its cells."""

    label: Perm
    cells: int
    admissible: tuple[tuple[Perm, Perm], ...]
    smooth: bool

    @property
    def representable(self) -> bool:
        return bool(self.admissible)


def admissible_census(n: int, lam: Weight) -> list[CensusEntry]:
    """For every class label, the list of (sigma_v, u) cells whose faces are
    admissible, next to the pattern-avoidance smoothness flag of the label.

    The two columns agree at n = 3 but not at n = 4: both pattern-failing
    classes lack admissible cells, yet so does the smooth class 2,4,1,3
    (its face misses the face of the preceding class 1,4,2,3 in every
    frame).  The census therefore reports both columns independently."""
    sweep = _Sweep(n, lam)
    found: dict[Perm, list[tuple[Perm, Perm]]] = {w: [] for w in sweep.perms}
    counts: dict[Perm, int] = {w: 0 for w in sweep.perms}
    for sv in sweep.perms:
        for u in sweep.perms:
            label = compose(inverse(u), sv)
            counts[label] += 1
            gv = sweep.gamma(sv, u)
            ok = True
            for wp in sweep.coatoms[label]:
                su = compose(u, wp)
                if not face_contains(gv, sweep.gamma(su, u)):
                    ok = False
                    break
            if ok:
                found[label].append((sv, u))
    return [
        CensusEntry(
            label=w,
            cells=counts[w],
            admissible=tuple(sorted(found[w])),
            smooth=avoids_patterns(w),
        )
        for w in sweep.perms
    ]
