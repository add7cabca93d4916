"""Cross-check runner behind ``smashframe check``.

Each suite compares a closed-form rule with a brute-force lattice
computation for one ring and reports pass/fail with a short reason.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SmashFrameError
from .frame import (
    Chain,
    Frame,
    binomial_size_count,
    fib,
    is_compactly_generated,
    leq,
    size_two_count,
)
from .ring import Interval, RingSpec, admissible_intervals, next_profile
from .spectra import (
    balmer_dual,
    comparison_map,
    embed_subframe,
    point_count_formula,
    smashing_spectrum,
    spectrum_dimension,
    telescope_holds,
)
from .valuegroup import filter_idempotent

SUITES = ("lattice laws", "covers oracle", "counts", "points", "formulas")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


class _Failed(Exception):
    pass


def _require(cond, msg):
    if not cond:
        raise _Failed(msg)


def check_lattice_laws(frame: Frame) -> None:
    M, J, L = frame.meet_table, frame.join_table, frame.order
    size = len(frame)
    ids = np.arange(size)
    _require((M == M.T).all() and (J == J.T).all(), "meet/join not commutative")
    _require((np.diag(M) == ids).all() and (np.diag(J) == ids).all(), "not idempotent")
    _require((M[ids[:, None], J] == ids[:, None]).all(), "absorption a^(avb)=a fails")
    _require((J[ids[:, None], M] == ids[:, None]).all(), "absorption av(a^b)=a fails")
    for a in range(size):
        Ma, Ja = M[a], J[a]
        # associativity: a^(b^c) == (a^b)^c
        _require((Ma[M] == M[Ma[:, None], ids[None, :]]).all(), f"meet not associative at {a}")
        _require((Ja[J] == J[Ja[:, None], ids[None, :]]).all(), f"join not associative at {a}")
        # distributivity: a^(bvc) == (a^b)v(a^c) and dually
        _require((Ma[J] == J[Ma[:, None], Ma[None, :]]).all(), f"meet over join fails at {a}")
        _require((Ja[M] == M[Ja[:, None], Ja[None, :]]).all(), f"join over meet fails at {a}")
    _require((L == (M == ids[:, None])).all(), "x<=y iff x^y=x fails")
    _require((L == (J == ids[None, :])).all(), "x<=y iff xvy=y fails")
    _require(L.diagonal().all(), "order not reflexive")
    _require(not (L & L.T & ~np.eye(size, dtype=bool)).any(), "order not antisymmetric")
    Lf = L.astype(np.float32)
    _require(not (((Lf @ Lf) > 0) & ~L).any(), "order not transitive")
    bot, top = frame.index[frame.bottom], frame.index[frame.top]
    _require(L[bot].all() and L[:, top].all(), "bottom/top not extremal")
    # plain-Python leq on every row for small frames, a fixed stride otherwise
    stride = 1 if size <= 250 else 7
    for i in range(0, size, stride):
        x = frame.elements[i]
        for j, y in enumerate(frame.elements):
            if leq(x, y) != bool(L[i, j]):
                raise _Failed(f"bitmask order disagrees with leq on {x}, {y}")


def check_covers(frame: Frame) -> None:
    rule, brute = frame.rule_covers(), frame.covers
    _require(rule == brute, f"{len(set(rule) ^ set(brute))} edges differ")


def check_counts(frame: Frame) -> None:
    spec = frame.spec
    elems = frame.elements
    _require(len(set(elems)) == len(elems), "duplicate chains")
    for c in elems:
        _require(c.is_valid(spec), f"{c} not admissible")
        _require(all(a.hi < b.lo for a, b in zip(c.intervals, c.intervals[1:])), f"{c} not separated")
    ivs = admissible_intervals(spec)
    _require(len(ivs) == sum(spec.n + 1 - m for m in spec.idempotents), "interval count")
    _require(all(Interval(iv.lo, h) in ivs for iv in ivs for h in range(iv.lo, iv.hi)),
             "intervals not closed under shrinking hi")
    _require(frame.count_by_size(2) == size_two_count(spec), "size-two formula")
    if spec.is_all_ones():
        n = spec.n
        _require(len(frame) == fib(2 * n + 3), f"|frame|={len(frame)} != Fib({2 * n + 3})")
        for k in range(n + 2):
            _require(frame.count_by_size(k) == binomial_size_count(n, k), f"binomial count k={k}")


def check_points(frame: Frame) -> None:
    try:
        space = smashing_spectrum(frame, verify=True)
    except SmashFrameError as exc:
        raise _Failed(str(exc)) from None
    _require(space.is_partial_order(), "specialization not a partial order")
    for p in space.points:
        for q in space.points:
            _require(space.specializes(p, q) == leq(p, q), "specialization != leq on points")
    singles = [Chain((Interval(m, m),)) for m in frame.spec.idempotents]
    _require(sorted(space.closed_points, key=Chain.sort_key) == singles, "closed points are not the singletons [m,m]")


def check_formulas(frame: Frame) -> None:
    spec = frame.spec
    prof = next_profile(spec)
    space = smashing_spectrum(frame, verify=False)
    _require(point_count_formula(spec, prof) == len(space.points), "point-count formula")
    try:
        spectrum_dimension(space, prof)
        cmp = comparison_map(space, spec)
        verdict = telescope_holds(spec, frame)
        embed_subframe(spec, source=frame)
        for j in range(1, spec.n + 1):
            _require(bool(filter_idempotent(j, spec)) == bool(spec.idem[j]), f"filter F_{j}")
    except SmashFrameError as exc:
        raise _Failed(str(exc)) from None
    balmer = balmer_dual(spec)
    _require(balmer.longest_chain() == spec.n + 1, "Balmer dual is not a total chain")
    _require(balmer.meta["thick_ideals"] == spec.n + 2, "thick-ideal count")
    _require(cmp.is_bijective() == verdict.holds, "bijectivity != telescope verdict")
    compact = [x for x in frame if is_compactly_generated(x)]
    _require(len(compact) == spec.n + 2, "compact elements != thick ideals")


_RUNNERS = {
    "lattice laws": check_lattice_laws,
    "covers oracle": check_covers,
    "counts": check_counts,
    "points": check_points,
    "formulas": check_formulas,
}


def run_checks(spec: RingSpec, frame: Frame | None = None) -> list[CheckResult]:
    frame = frame or Frame(spec)
    results = []
    for name in SUITES:
        try:
            _RUNNERS[name](frame)
            results.append(CheckResult(name, True))
        except _Failed as exc:
            results.append(CheckResult(name, False, str(exc)))
    return results
