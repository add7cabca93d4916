"""Spectral spaces attached to the smashing frame.

The smashing spectrum is the finite Stone dual of :class:`~.frame.Frame`:
its points are the meet-irreducible chains, and ``p ~> q`` (``q`` lies in
the closure of ``p``) iff ``p <= q`` in the frame. The Balmer side is the
total order on the primes ``0..n``. Each operation here cross-checks its
closed-form description against the brute-force lattice computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import AssertMismatch, FrameInvalid, NotAdmissible, SpecMismatch
from .frame import Chain, Frame, is_compactly_generated
from .ring import Interval, NextProfile, RingSpec, next_profile


@dataclass(frozen=True)
class SpectralSpace:
    """Finite space given by its points and specialization order.

    ``specialization`` holds every pair ``(p, q)`` with ``p ~> q``,
    reflexive pairs included.
    """

    points: tuple
    specialization: frozenset
    meta: dict = field(default_factory=dict, compare=False)

    def specializes(self, p, q) -> bool:
        return (p, q) in self.specialization

    @cached_property
    def closed_points(self) -> tuple:
        return tuple(p for p in self.points if not any(
            p != q and (p, q) in self.specialization for q in self.points))

    @cached_property
    def open_points(self) -> tuple:
        return tuple(p for p in self.points if not any(
            p != q and (q, p) in self.specialization for q in self.points))

    @cached_property
    def arrows(self) -> tuple:
        """Transitive reduction of the strict specialization order."""
        strict = {(p, q) for p, q in self.specialization if p != q}
        out = []
        for p, q in strict:
            if not any((p, r) in strict and (r, q) in strict for r in self.points):
                out.append((p, q))
        order = {p: i for i, p in enumerate(self.points)}
        return tuple(sorted(out, key=lambda e: (order[e[0]], order[e[1]])))

    def longest_chain(self) -> int:
        """Maximum number of points in a specialization chain."""
        strict = {}
        for p, q in self.specialization:
            if p != q:
                strict.setdefault(p, []).append(q)
        memo: dict = {}

        def depth(p):
            if p not in memo:
                memo[p] = 1 + max((depth(q) for q in strict.get(p, ())), default=0)
            return memo[p]

        return max((depth(p) for p in self.points), default=0)

    def is_partial_order(self) -> bool:
        rel = self.specialization
        pts = self.points
        if any((p, p) not in rel for p in pts):
            return False
        if any(p != q and (q, p) in rel for p, q in rel):
            return False
        return all((p, r) in rel for p, q in rel for q2, r in rel if q == q2)


def closed_form_points(spec: RingSpec) -> list[Chain]:
    """Meet-irreducible chains predicted from the idempotence pattern:
    ``{[m,m]}`` and ``{[m,k]}`` for ``m < k <= next(m)``, ``m`` idempotent."""
    prof = next_profile(spec)
    out = []
    for m in spec.idempotents:
        out.append(Chain((Interval(m, m),)))
        for k in range(m + 1, prof.next[m] + 1):
            out.append(Chain((Interval(m, k),)))
    out.sort(key=Chain.sort_key)
    return out


def meet_irreducibles(frame: Frame) -> list[Chain]:
    """Elements with exactly one upper cover (the top has none)."""
    counts = frame.cover_matrix.sum(axis=1)
    return [frame.elements[i] for i in np.nonzero(counts == 1)[0]]


def smashing_spectrum(frame: Frame, verify: bool = True) -> SpectralSpace:
    points = tuple(meet_irreducibles(frame))
    if verify:
        predicted = closed_form_points(frame.spec)
        if sorted(points, key=Chain.sort_key) != predicted:
            raise FrameInvalid(
                f"meet-irreducibles {[str(p) for p in points]} differ from "
                f"closed form {[str(p) for p in predicted]}")
    ids = [frame.index[p] for p in points]
    order = frame.order
    rel = frozenset(
        (p, q)
        for p, i in zip(points, ids)
        for q, j in zip(points, ids)
        if order[i, j]
    )
    return SpectralSpace(points, rel, {"kind": "smashing", "n": frame.spec.n})


def point_count_formula(spec: RingSpec, profile: NextProfile | None = None) -> int:
    """Closed-form size of the smashing spectrum.

    ``#idempotents + sum of gaps between consecutive idempotents + (n - M)``,
    where the ``t``-th gap is ``next0[t+1] - next0[t]`` for the ``t``-th
    idempotent prime below ``M``.
    """
    prof = profile or next_profile(spec)
    below_top = len(spec.idempotents) - 1
    gaps = sum(prof.next0[t + 1] - prof.next0[t] for t in range(below_top))
    return sum(spec.idem) + gaps + spec.n - prof.M


def spectrum_dimension(space: SpectralSpace, profile: NextProfile) -> int:
    """Points in the longest specialization chain; must equal ``d + 1``."""
    longest = space.longest_chain()
    if longest != profile.d + 1:
        raise AssertMismatch(f"longest chain has {longest} points, expected d+1={profile.d + 1}")
    return longest


def balmer_dual(spec: RingSpec) -> SpectralSpace:
    """Primes ``0..n`` with ``i ~> j`` iff ``j <= i``; point ``i`` is ``{[0,i]}``."""
    pts = tuple(range(spec.n + 1))
    rel = frozenset((i, j) for i in pts for j in pts if j <= i)
    return SpectralSpace(pts, rel, {"kind": "balmer", "n": spec.n, "thick_ideals": spec.n + 2})


def thick_ideal_count(spec: RingSpec) -> int:
    return spec.n + 2


@dataclass(frozen=True)
class ComparisonMap:
    assignment: dict

    def __call__(self, p):
        return self.assignment[p]

    def is_bijective(self) -> bool:
        return len(set(self.assignment.values())) == len(self.assignment)


def comparison_map(space: SpectralSpace, spec: RingSpec) -> ComparisonMap:
    """Send the point ``{[a,b]}`` to the Balmer point ``b``."""
    assignment = {}
    for p in space.points:
        if len(p) != 1:
            raise FrameInvalid(f"point {p} is not a single interval")
        assignment[p] = p.intervals[0].hi
    target = balmer_dual(spec)
    for p, q in space.specialization:
        if not target.specializes(assignment[p], assignment[q]):
            raise AssertMismatch(f"comparison map not monotone on {p} ~> {q}")
    if set(assignment.values()) != set(target.points):
        raise AssertMismatch("comparison map is not surjective")
    return ComparisonMap(assignment)


@dataclass(frozen=True)
class TelescopeVerdict:
    holds: bool
    # first nonzero idempotent prime when the conjecture fails
    witness: int | None = None

    def __bool__(self):
        return self.holds

    def __str__(self):
        return "holds" if self.holds else f"fails (j={self.witness})"


def telescope_holds(spec: RingSpec, frame: Frame | None = None) -> TelescopeVerdict:
    """Holds iff no nonzero prime is idempotent, i.e. every frame element is
    compactly generated."""
    bad = [j for j in spec.idempotents if j >= 1]
    verdict = TelescopeVerdict(not bad, bad[0] if bad else None)
    frame = frame or Frame(spec)
    all_compact = all(is_compactly_generated(x) for x in frame)
    if all_compact != verdict.holds:
        raise AssertMismatch(f"telescope verdict {verdict} disagrees with compactness scan")
    return verdict


def embed_subframe(spec: RingSpec, verify: bool = True, source: Frame | None = None) -> dict[Chain, Chain]:
    """Embed the frame of ``spec`` into the all-ones frame of the same ``n``.

    Intervals keep their index pairs. With ``verify`` the map is checked to
    be injective, to preserve and reflect the order, and to commute with
    meet and join.
    """
    source = source if source is not None else Frame(spec)
    if source.spec != spec:
        raise SpecMismatch(f"source frame is for idem={source.spec.mask}, not {spec.mask}")
    target = source if spec.is_all_ones() else Frame(RingSpec.all_ones(spec.n, spec.ell))
    emb = {}
    for x in source:
        if x not in target:
            raise NotAdmissible(f"{x} is not an element of the all-ones frame")
        emb[x] = x
    if not verify:
        return emb
    if len(set(emb.values())) != len(emb):
        raise AssertMismatch("embedding is not injective")
    if emb[source.top] != target.top or emb[source.bottom] != target.bottom:
        raise AssertMismatch("embedding moves top or bottom")
    src = [target.index[emb[x]] for x in source]
    if not np.array_equal(source.order, target.order[np.ix_(src, src)]):
        raise AssertMismatch("embedding does not preserve and reflect order")
    src_arr = np.array(src)
    if not np.array_equal(src_arr[source.meet_table], target.meet_table[np.ix_(src, src)]):
        raise AssertMismatch("embedding does not preserve meets")
    if not np.array_equal(src_arr[source.join_table], target.join_table[np.ix_(src, src)]):
        raise AssertMismatch("embedding does not preserve joins")
    return emb


__all__ = [
    "SpectralSpace",
    "ComparisonMap",
    "TelescopeVerdict",
    "balmer_dual",
    "closed_form_points",
    "comparison_map",
    "embed_subframe",
    "meet_irreducibles",
    "point_count_formula",
    "smashing_spectrum",
    "spectrum_dimension",
    "telescope_holds",
    "thick_ideal_count",
]
