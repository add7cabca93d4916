"""``smashframe`` command line.

One ring per invocation, given before the subcommand::

    smashframe --n 5 --idem 0,4 label "[0,3];[4,5]"
    smashframe --n 2 hasse --format dot
    smashframe --n 3 group compare 0,1,0 1,-5,0

Exit status: 0 on success, 1 on usage errors, 2 on computation or
assertion failures.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .checks import SUITES, run_checks
from .errors import SmashFrameError, UsageError
from .frame import Chain, Frame, epi_label, is_compactly_generated
from .ring import RingSpec
from .serialize import build_document, dumps, hasse_dot, spec_echo, spectrum_dot
from .spectra import (
    balmer_dual,
    comparison_map,
    smashing_spectrum,
    telescope_holds,
)
from .valuegroup import (
    EQ,
    GT,
    INDECOMPOSABLE,
    LT,
    HahnFraction,
    HahnPoly,
    decompose_in_filter,
    frac_valuation,
    lex_compare,
    parse_element,
    support,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="smashframe", description="Smashing frames and spectra of finite-dimensional valuation domains.")
    p.add_argument("--n", type=int, required=True, help="Krull dimension")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--idem", help="comma-separated idempotent prime indices (0 is implied)")
    g.add_argument("--idem-mask", help="bit string of length n+1")
    p.add_argument("--ell", type=int, default=2, help="value-group base (default 2)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp, choices=("text", "json", "dot"), default="text"):
        sp.add_argument("--format", choices=choices, default=default)

    fmt(sub.add_parser("frame", help="summary of the frame"))
    hp = sub.add_parser("hasse", help="Hasse diagram of the frame or of the Balmer dual")
    fmt(hp, default="dot")
    hp.add_argument("--which", choices=("smashing", "balmer"), default="smashing")
    hp.add_argument("--flip-order", action="store_true", help="draw edges downward (display only)")
    sp = sub.add_parser("spectrum", help="smashing spectrum or Balmer dual")
    fmt(sp)
    sp.add_argument("--which", choices=("smashing", "balmer"), default="smashing")
    fmt(sub.add_parser("balmer", help="Balmer dual spectrum"), choices=("text", "json", "dot"))
    fmt(sub.add_parser("compare", help="comparison map"), choices=("text", "json"))
    fmt(sub.add_parser("telescope", help="telescope-conjecture verdict"), choices=("text", "json"))
    lp = sub.add_parser("label", help="epimorphism label of a chain literal")
    lp.add_argument("chain")
    sub.add_parser("check", help="run every cross-check")

    gp = sub.add_parser("group", help="value-group arithmetic")
    gsub = gp.add_subparsers(dest="op", required=True, parser_class=_Parser)
    vp = gsub.add_parser("valuate", help="valuation of a fraction of polynomials")
    vp.add_argument("num", help="polynomial literal coef@g;coef@g")
    vp.add_argument("den", nargs="?", help="denominator polynomial literal")
    dp = gsub.add_parser("decompose", help="split an element inside F_j")
    dp.add_argument("element")
    dp.add_argument("--j", type=int, required=True)
    cp = gsub.add_parser("compare", help="lexicographic comparison")
    cp.add_argument("v")
    cp.add_argument("w")
    return p


def parse_spec(args) -> RingSpec:
    if args.idem_mask is not None:
        mask = args.idem_mask.strip()
        if set(mask) - {"0", "1"} or len(mask) != args.n + 1:
            raise UsageError(f"--idem-mask must be a bit string of length n+1={args.n + 1}")
        return RingSpec(args.n, tuple(int(c) for c in mask), args.ell)
    if args.idem is not None:
        try:
            indices = {int(t) for t in args.idem.split(",") if t.strip()}
        except ValueError:
            raise UsageError(f"--idem expects comma-separated integers, got {args.idem!r}") from None
        return RingSpec.from_indices(args.n, indices | {0}, args.ell)
    return RingSpec.all_ones(args.n, args.ell)


def parse_poly(text: str, spec: RingSpec) -> HahnPoly:
    """``"1@1,0;2@0,1"`` is ``t^(1,0) + 2 t^(0,1)``; ``"0"`` is zero."""
    text = text.strip()
    if text == "0":
        return HahnPoly(spec)
    terms = []
    for item in text.split(";"):
        coef, sep, g = item.partition("@")
        if not sep:
            raise UsageError(f"term {item!r} must look like coef@g")
        try:
            c = Fraction(coef.strip())
        except ValueError:
            raise UsageError(f"bad coefficient {coef!r}") from None
        terms.append((parse_element(g, spec), c))
    return HahnPoly(spec, terms)


def _pair_lines(pairs):
    return [f"{a} -> {b}" for a, b in pairs]


def cmd_frame(spec, args):
    frame = Frame(spec)
    if args.format == "json":
        return dumps(build_document(spec, frame))
    if args.format == "dot":
        return hasse_dot(frame)
    space = smashing_spectrum(frame)
    verdict = telescope_holds(spec, frame)
    return f"elements: {len(frame)}, points: {len(space.points)}, telescope: {verdict}\n"


def cmd_hasse(spec, args):
    if args.which == "balmer":
        space = balmer_dual(spec)
        if args.format == "dot":
            return spectrum_dot(space)
        edges = [[p, q] for p, q in space.arrows]
        if args.format == "json":
            return dumps({"spec": spec_echo(spec), "nodes": list(space.points), "edges": edges})
        return "\n".join(_pair_lines(edges)) + "\n"
    frame = Frame(spec)
    if args.format == "dot":
        return hasse_dot(frame, flip=args.flip_order)
    edges = [[v, u] if args.flip_order else [u, v] for u, v in frame.covers]
    if args.format == "json":
        nodes = [{"id": i, "chain": str(c), "label": frame.label(c)} for i, c in enumerate(frame.elements)]
        return dumps({"spec": spec_echo(spec), "nodes": nodes, "edges": edges,
                      "orientation": "flipped" if args.flip_order else "covers-upward"})
    names = [str(c) for c in frame.elements]
    return "\n".join(f"{names[u]} -> {names[v]}" for u, v in edges) + "\n"


def _space_json(spec, space, frame=None):
    if frame is None:
        pts = list(space.points)
        key = lambda p: p  # noqa: E731
        extra = {"thick_ideals": space.meta["thick_ideals"]}
    else:
        key = frame.index.__getitem__
        pts = [{"id": key(p), "chain": str(p), "label": frame.label(p),
                "closed": p in space.closed_points} for p in space.points]
        extra = {"longest_chain": space.longest_chain()}
    return dumps({
        "spec": spec_echo(spec),
        "points": pts,
        "specialization": sorted([key(p), key(q)] for p, q in space.specialization if p != q),
        "arrows": [[key(p), key(q)] for p, q in space.arrows],
        **extra,
    })


def cmd_spectrum(spec, args):
    if args.which == "balmer":
        return cmd_balmer(spec, args)
    frame = Frame(spec)
    space = smashing_spectrum(frame)
    if args.format == "json":
        return _space_json(spec, space, frame)
    if args.format == "dot":
        return spectrum_dot(space, frame)
    lines = [f"points: {len(space.points)}"]
    for p in space.points:
        tag = "closed" if p in space.closed_points else "open" if p in space.open_points else ""
        lines.append(f"  {p}  {frame.label(p)}" + (f"  ({tag})" if tag else ""))
    lines.append("specialization:")
    lines += [f"  {p} ~> {q}" for p, q in space.arrows]
    return "\n".join(lines) + "\n"


def cmd_balmer(spec, args):
    space = balmer_dual(spec)
    if args.format == "json":
        return _space_json(spec, space)
    if args.format == "dot":
        return spectrum_dot(space)
    lines = [f"points: {len(space.points)}, thick ideals: {space.meta['thick_ideals']}"]
    lines += [f"  [0,{p}] ~> [0,{q}]" for p, q in space.arrows]
    return "\n".join(lines) + "\n"


def cmd_compare(spec, args):
    frame = Frame(spec)
    space = smashing_spectrum(frame)
    cmp = comparison_map(space, spec)
    bij = cmp.is_bijective()
    if args.format == "json":
        return dumps({
            "spec": spec_echo(spec),
            "map": [{"point": frame.index[p], "chain": str(p), "balmer": b} for p, b in cmp.assignment.items()],
            "bijective": bij,
        })
    lines = [f"{p} -> [0,{b}]" for p, b in cmp.assignment.items()]
    lines.append(f"bijective: {'yes' if bij else 'no'}")
    return "\n".join(lines) + "\n"


def cmd_telescope(spec, args):
    verdict = telescope_holds(spec)
    if args.format == "json":
        return dumps({"spec": spec_echo(spec), "holds": verdict.holds, "witness": verdict.witness})
    return f"telescope: {verdict}\n"


def cmd_label(spec, args):
    chain = Chain.parse(args.chain)
    chain.check(spec)
    return epi_label(chain, spec) + ("  (compactly generated)" if is_compactly_generated(chain) else "") + "\n"


def cmd_check(spec, args):
    results = run_checks(spec)
    lines = [r.line() for r in results]
    if all(r.passed for r in results):
        lines.append(f"all checks passed ({', '.join(SUITES)})")
    else:
        failed = [r.name for r in results if not r.passed]
        lines.append(f"checks failed: {', '.join(failed)}")
    out = "\n".join(lines) + "\n"
    if not all(r.passed for r in results):
        sys.stdout.write(out)
        raise _CheckFailed()
    return out


class _CheckFailed(SmashFrameError):
    code = "CHECK_FAILED"


def cmd_group(spec, args):
    if args.op == "compare":
        v, w = parse_element(args.v, spec), parse_element(args.w, spec)
        return {LT: "LT", EQ: "EQ", GT: "GT"}[lex_compare(v, w)] + "\n"
    if args.op == "decompose":
        v = parse_element(args.element, spec)
        split = decompose_in_filter(v, args.j)
        if split is INDECOMPOSABLE:
            return f"{INDECOMPOSABLE}\n"
        a, b = split
        return f"({a}) + ({b})\n"
    num = parse_poly(args.num, spec)
    den = parse_poly(args.den, spec) if args.den is not None else None
    val = frac_valuation(HahnFraction(num, den))
    if hasattr(val, "comps"):
        return f"{val}  (support {support(val)})\n"
    return f"{val}\n"


COMMANDS = {
    "frame": cmd_frame,
    "hasse": cmd_hasse,
    "spectrum": cmd_spectrum,
    "balmer": cmd_balmer,
    "compare": cmd_compare,
    "telescope": cmd_telescope,
    "label": cmd_label,
    "check": cmd_check,
    "group": cmd_group,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        spec = parse_spec(args)
        out = COMMANDS[args.command](spec, args)
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)
    except _CheckFailed:
        return 2
    except SmashFrameError as exc:
        print(f"smashframe: {exc}", file=sys.stderr)
        return exc.status
    except ValueError as exc:
        print(f"smashframe: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
