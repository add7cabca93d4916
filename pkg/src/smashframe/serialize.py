"""JSON and DOT output.

Element ids are canonical enumeration indices of the frame. JSON uses
lists throughout so that ``json.loads(json.dumps(doc)) == doc``.
"""

from __future__ import annotations

import json

from .frame import Frame, fib, is_compactly_generated, size_two_count
from .ring import RingSpec, next_profile
from .spectra import (
    SpectralSpace,
    balmer_dual,
    comparison_map,
    point_count_formula,
    smashing_spectrum,
    telescope_holds,
)

_PAIRS = {"type": "array", "items": {"type": "array", "items": {"type": "integer"},
                                     "minItems": 2, "maxItems": 2}}
_INTS = {"type": "array", "items": {"type": "integer"}}

DOCUMENT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["spec", "elements", "covers", "points", "specialization",
                 "balmer", "telescope", "counts", "dimension"],
    "additionalProperties": False,
    "properties": {
        "spec": {
            "type": "object",
            "required": ["n", "idem", "ell"],
            "properties": {
                "n": {"type": "integer", "minimum": 1},
                "idem": {"type": "string", "pattern": "^1[01]*$"},
                "ell": {"type": "integer", "minimum": 2},
            },
        },
        "elements": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "chain", "label", "compact"],
                "properties": {
                    "id": {"type": "integer"},
                    "chain": {"type": "string"},
                    "label": {"type": "string"},
                    "compact": {"type": "boolean"},
                },
            },
        },
        "covers": _PAIRS,
        "points": _INTS,
        "specialization": _PAIRS,
        "balmer": {
            "type": "object",
            "required": ["points", "specialization", "thick_ideals", "map"],
            "properties": {
                "points": _INTS,
                "specialization": _PAIRS,
                "thick_ideals": {"type": "integer"},
                "map": _PAIRS,
            },
        },
        "telescope": {
            "type": "object",
            "required": ["holds", "witness"],
            "properties": {
                "holds": {"type": "boolean"},
                "witness": {"type": ["integer", "null"]},
            },
        },
        "counts": {
            "type": "object",
            "required": ["total", "by_size", "point_count_formula", "size_two_formula"],
            "properties": {
                "total": {"type": "integer"},
                "by_size": _PAIRS,
                "point_count_formula": {"type": "integer"},
                "size_two_formula": {"type": "integer"},
                "fibonacci": {"type": "integer"},
            },
        },
        "dimension": {
            "type": "object",
            "required": ["M", "d", "next", "next0", "longest_chain"],
            "properties": {
                "M": {"type": "integer"},
                "d": {"type": "integer"},
                "next": _INTS,
                "next0": _INTS,
                "longest_chain": {"type": "integer"},
            },
        },
    },
}


def spec_echo(spec: RingSpec) -> dict:
    return {"n": spec.n, "idem": spec.mask, "ell": spec.ell}


def build_document(spec: RingSpec, frame: Frame | None = None) -> dict:
    frame = frame or Frame(spec)
    space = smashing_spectrum(frame)
    prof = next_profile(spec)
    balmer = balmer_dual(spec)
    cmp = comparison_map(space, spec)
    verdict = telescope_holds(spec, frame)
    idx = frame.index
    counts = {
        "total": len(frame),
        "by_size": [[k, c] for k, c in frame.sizes().items()],
        "point_count_formula": point_count_formula(spec, prof),
        "size_two_formula": size_two_count(spec),
    }
    if spec.is_all_ones():
        counts["fibonacci"] = fib(2 * spec.n + 3)
    return {
        "spec": spec_echo(spec),
        "elements": [
            {"id": i, "chain": str(c), "label": frame.label(c), "compact": is_compactly_generated(c)}
            for i, c in enumerate(frame.elements)
        ],
        "covers": [list(e) for e in frame.covers],
        "points": sorted(idx[p] for p in space.points),
        "specialization": _id_pairs(space, idx),
        "balmer": {
            "points": list(balmer.points),
            "specialization": sorted([p, q] for p, q in balmer.specialization if p != q),
            "thick_ideals": balmer.meta["thick_ideals"],
            "map": sorted([idx[p], b] for p, b in cmp.assignment.items()),
        },
        "telescope": {"holds": verdict.holds, "witness": verdict.witness},
        "counts": counts,
        "dimension": {
            "M": prof.M,
            "d": prof.d,
            "next": list(prof.next),
            "next0": list(prof.next0),
            "longest_chain": space.longest_chain(),
        },
    }


def _id_pairs(space: SpectralSpace, idx) -> list[list[int]]:
    return sorted([idx[p], idx[q]] for p, q in space.specialization if p != q)


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _quote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def hasse_dot(frame: Frame, flip: bool = False) -> str:
    """Hasse diagram; edge ``u -> v`` means ``v`` covers ``u``.

    The bottom ``{[0,n]}`` is drawn at the bottom. ``flip`` reverses the
    drawn edges and puts the empty chain at the bottom instead.
    """
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=box];"]
    for i, c in enumerate(frame.elements):
        style = ", peripheries=2" if is_compactly_generated(c) else ""
        label = _quote(f"{c}\\n{frame.label(c)}")
        lines.append(f"  n{i} [label={label}{style}];")
    for u, v in frame.covers:
        if flip:
            u, v = v, u
        lines.append(f"  n{u} -> n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def spectrum_dot(space: SpectralSpace, frame: Frame | None = None) -> str:
    """Specialization arrows ``p -> q`` meaning ``p ~> q``; closed points on top."""
    name = space.meta.get("kind", "space")
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    ident = {}
    for p in space.points:
        if frame is not None:
            i = frame.index[p]
            label = f"{p}\\n{frame.label(p)}"
        else:
            i = p
            label = f"[0,{p}]"
        ident[p] = f"n{i}"
        shape = "box" if p in space.closed_points else "ellipse"
        lines.append(f"  n{i} [label={_quote(label)}, shape={shape}];")
    for p, q in space.arrows:
        lines.append(f"  {ident[p]} -> {ident[q]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
