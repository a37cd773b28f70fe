"""Command-line interface.

Commands take a strictly increasing integer weight via --lambda and, where
relevant, permutation windows via --vertex (sigma_v) and --borel (u).
Output is deterministic; --format json emits a machine-readable document.
Exit codes: 0 success, 1 verification mismatch, 2 usage/capability error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import diagrams, oracle, polytope, schubert, weyl


class UsageError(Exception):
    pass


def _parse_lambda(text: str) -> polytope.Weight:
    try:
        lam = polytope.parse_weight(text)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if len(lam) < 2 or any(lam[k] >= lam[k + 1] for k in range(len(lam) - 1)):
        raise UsageError(f"weight must be strictly increasing with length >= 2: {text!r}")
    return lam


def _parse_window(text: str, n: int, flag: str) -> weyl.Perm:
    try:
        w = weyl.parse_perm(text)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if len(w) != n:
        raise UsageError(f"{flag} must be a window of length {n}: {text!r}")
    return w


def _emit(doc: dict, lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _cell_doc(lam: polytope.Weight, sv: weyl.Perm, u: weyl.Perm) -> tuple[dict, dict]:
    """The per-cell document entry and the underlying objects."""
    borel = schubert.Borel(u)
    dv = diagrams.diagram_of_sigma(len(lam), sv)
    label = schubert.class_label(dv, borel)
    face = schubert.gamma_face(dv, borel, lam)
    admissible = schubert.is_admissible(dv, borel, lam)
    expansion = schubert.chevalley_faces(dv, borel, lam)
    entry = {
        "sigma": weyl.format_perm(sv),
        "borel": weyl.format_perm(u),
        "class": weyl.format_perm(label),
        "dim": face.dim,
        "admissible": admissible,
        "chevalley": [
            {"class": weyl.format_perm(w), "coefficient": c}
            for w, c in sorted(expansion.items())
        ],
    }
    extras = {"face": face, "diagram": schubert.gamma_diagram(dv, borel, lam)}
    return entry, extras


def _cmd_vertices(args) -> int:
    lam = _parse_lambda(args.lam)
    n = len(lam)
    rows = []
    for w in weyl.all_perms(n):
        pt = diagrams.vertex_point(lam, diagrams.diagram_of_sigma(n, w))
        rows.append((weyl.format_perm(w), polytope.format_point(pt)))
    doc = {
        "n": n,
        "lambda": polytope.format_weight(lam),
        "vertices": [{"sigma": s, "point": p} for s, p in rows],
    }
    _emit(doc, [f"{s}\t{p}" for s, p in rows], args.format)
    return 0


def _format_face_lines(face: diagrams.FaceClass) -> list[str]:
    lines = [f"dim {face.dim}", f"empty {str(face.empty).lower()}"]
    for blk, anchor in zip(face.blocks, face.anchors):
        pts = "".join(f"({r},{c})" for r, c in blk)
        tag = f"lambda_{anchor}" if anchor is not None else "free"
        lines.append(f"block {pts} {tag}")
    return lines


def _cmd_face(args) -> int:
    lam = _parse_lambda(args.lam)
    n = len(lam)
    sv = _parse_window(args.vertex, n, "--vertex")
    u = _parse_window(args.borel, n, "--borel")
    entry, extras = _cell_doc(lam, sv, u)
    face = extras["face"]
    entry["face"] = {
        "blocks": [[f"{r},{c}" for r, c in blk] for blk in face.blocks],
        "anchors": list(face.anchors),
        "dim": face.dim,
        "empty": face.empty,
    }
    entry["diagram"] = diagrams.format_diagram(extras["diagram"])
    doc = {"n": n, "lambda": polytope.format_weight(lam), "cells": [entry]}
    lines = [
        f"sigma {entry['sigma']}",
        f"borel {entry['borel']}",
        f"class {entry['class']}",
        f"diagram {entry['diagram']}",
        f"admissible {str(entry['admissible']).lower()}",
    ] + _format_face_lines(face)
    _emit(doc, lines, args.format)
    return 0


def _cmd_chevalley(args) -> int:
    lam = _parse_lambda(args.lam)
    n = len(lam)
    sv = _parse_window(args.vertex, n, "--vertex")
    u = _parse_window(args.borel, n, "--borel")
    entry, _ = _cell_doc(lam, sv, u)
    doc = {"n": n, "lambda": polytope.format_weight(lam), "cells": [entry]}
    lines = [f"class {entry['class']} dim {entry['dim']}"]
    lines += [f"{t['class']}\t{t['coefficient']}" for t in entry["chevalley"]]
    lines.append(f"admissible {str(entry['admissible']).lower()}")
    _emit(doc, lines, args.format)
    return 0


def _cmd_chevalley_classical(args) -> int:
    lam = _parse_lambda(args.lam)
    n = len(lam)
    w = _parse_window(args.vertex, n, "--vertex")
    expansion = weyl.chevalley_classical(w, lam)
    terms = [
        {"class": weyl.format_perm(wp), "coefficient": c}
        for wp, c in sorted(expansion.items())
    ]
    doc = {
        "n": n,
        "lambda": polytope.format_weight(lam),
        "cells": [
            {
                "sigma": weyl.format_perm(w),
                "borel": weyl.format_perm(weyl.identity(n)),
                "class": weyl.format_perm(w),
                "dim": weyl.length(w),
                "chevalley": terms,
            }
        ],
    }
    lines = [f"class {weyl.format_perm(w)} dim {weyl.length(w)}"]
    lines += [f"{t['class']}\t{t['coefficient']}" for t in terms]
    _emit(doc, lines, args.format)
    return 0


def _cmd_admissible(args) -> int:
    lam = _parse_lambda(args.lam)
    n = len(lam)
    census = schubert.admissible_census(n, lam)
    entries = []
    lines = []
    missing = []
    for c in census:
        rep = c.admissible[0] if c.admissible else None
        entries.append(
            {
                "class": weyl.format_perm(c.label),
                "cells": c.cells,
                "admissible_cells": len(c.admissible),
                "representable": c.representable,
                "smooth": c.smooth,
                "representative": (
                    {"sigma": weyl.format_perm(rep[0]), "borel": weyl.format_perm(rep[1])}
                    if rep
                    else None
                ),
            }
        )
        lines.append(
            f"class {weyl.format_perm(c.label)}\tcells {c.cells}"
            f"\tadmissible {len(c.admissible)}\tsmooth {str(c.smooth).lower()}"
        )
        if not c.representable:
            missing.append(weyl.format_perm(c.label))
    lines.append(
        "without admissible representative: " + (" ".join(missing) if missing else "none")
    )
    doc = {"n": n, "lambda": polytope.format_weight(lam), "census": entries}
    _emit(doc, lines, args.format)
    return 0


def _cmd_verify(args) -> int:
    lam = _parse_lambda(args.lam)
    report = schubert.verify(len(lam), lam)
    doc = {
        "n": report.n,
        "lambda": polytope.format_weight(lam),
        "pairs": report.pairs,
        "distance_checks": report.distance_checks,
        "adjacency_checks": report.adjacency_checks,
        "mismatches": list(report.mismatches),
    }
    lines = [
        report.summary(),
        f"distance checks: {report.distance_checks}",
        f"adjacency checks: {report.adjacency_checks}",
    ]
    for m in report.mismatches:
        lines.append(
            f"mismatch kind={m['kind']} sigma={m['sigma']} borel={m['borel']} {m['detail']}"
        )
    _emit(doc, lines, args.format)
    return 0 if report.ok else 1


def _cmd_lattice_count(args) -> int:
    lam = _parse_lambda(args.lam)
    shape = polytope.GZShape(lam)
    count = len(polytope.lattice_points(shape))
    dim = oracle.weyl_dimension(lam)
    doc = {
        "n": shape.n,
        "lambda": polytope.format_weight(lam),
        "count": count,
        "weyl_dimension": dim,
        "agree": count == dim,
    }
    lines = [f"count {count}", f"weyl_dimension {dim}", f"agree {str(count == dim).lower()}"]
    _emit(doc, lines, args.format)
    return 0 if count == dim else 1


def _cmd_oracle_faces(args) -> int:
    lam = _parse_lambda(args.lam)
    shape = polytope.GZShape(lam)
    if shape.n > oracle.BRUTE_N_MAX:
        raise UsageError(f"oracle-faces supports n <= {oracle.BRUTE_N_MAX}")
    faces = oracle.brute_faces(shape)
    by_dim: dict[int, int] = {}
    for f in faces:
        by_dim[f.dim] = by_dim.get(f.dim, 0) + 1
    verts = oracle.brute_vertices(shape)
    simple = sum(1 for v in verts if oracle.is_simple_vertex(shape, v))
    doc = {
        "n": shape.n,
        "lambda": polytope.format_weight(lam),
        "vertices": [polytope.format_point(v) for v in verts],
        "simple_vertices": simple,
        "faces_by_dim": {str(d): c for d, c in sorted(by_dim.items())},
    }
    lines = [f"vertices {len(verts)} ({simple} simple)"]
    lines += [f"vertex {polytope.format_point(v)}" for v in verts]
    lines += [f"dim {d}: {c}" for d, c in sorted(by_dim.items())]
    _emit(doc, lines, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gzpoly",
        description="Gelfand-Zetlin polytopes, Schubert cells, and Chevalley formulas",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, vertex=False, borel=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--lambda", dest="lam", required=True, metavar="a,b,...",
                       help="strictly increasing integer weight")
        if vertex:
            p.add_argument("--vertex", required=True, metavar="i,j,...",
                           help="permutation window sigma_v")
        if borel:
            p.add_argument("--borel", required=True, metavar="i,j,...",
                           help="permutation window u of the Borel frame")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(fn=fn)
        return p

    add("vertices", _cmd_vertices, "list all simple vertices with coordinates")
    add("face", _cmd_face, "describe the face of a cell (v, B)", vertex=True, borel=True)
    add("chevalley", _cmd_chevalley, "face-based Chevalley expansion of a cell",
        vertex=True, borel=True)
    add("chevalley-classical", _cmd_chevalley_classical,
        "classical coroot Chevalley expansion of a class", vertex=True)
    add("admissible", _cmd_admissible, "admissibility census over all cells")
    add("verify", _cmd_verify, "exhaustive face-vs-classical verification sweep")
    add("lattice-count", _cmd_lattice_count,
        "count lattice points and compare with the dimension formula")
    add("oracle-faces", _cmd_oracle_faces, "brute-force face census (n <= 4)")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
