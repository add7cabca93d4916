"""The frame of smashing ideals as a lattice of interval chains.

A frame element is a chain: a list of admissible intervals, each ending
strictly before the next begins. The order is the smashing-ideal
inclusion order, pinned by which factorizations exist between the
corresponding ring epimorphisms::

    x <= y  iff  every interval of y sits inside some interval of x

so the empty chain (the epimorphism ``R -> 0``) is the top and
``{[0,n]}`` (the identity of ``R``) is the bottom.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from math import comb

import numpy as np

from .errors import NotAdmissible, ParseChainError, SpecMismatch
from .ring import Interval, RingSpec, admissible_intervals

PRODUCT = " × "


@dataclass(frozen=True)
class Chain:
    intervals: tuple[Interval, ...] = ()

    def __post_init__(self):
        ivs = tuple(Interval(*iv) for iv in self.intervals)
        object.__setattr__(self, "intervals", ivs)
        for iv in ivs:
            if iv.lo > iv.hi:
                raise NotAdmissible(f"{iv}: lo > hi")
        for a, b in zip(ivs, ivs[1:]):
            if not a.hi < b.lo:
                raise NotAdmissible(f"{a} and {b} are not strictly separated")

    @classmethod
    def of(cls, *pairs) -> Chain:
        return cls(tuple(sorted(Interval(*p) for p in pairs)))

    @classmethod
    def parse(cls, text: str) -> Chain:
        """Parse ``empty`` or ``[lo,hi];[lo,hi]...`` (ascending)."""
        text = text.strip()
        if text == "empty":
            return cls()
        items = []
        for item in text.split(";"):
            m = re.fullmatch(r"\s*\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*", item)
            if not m:
                raise ParseChainError(f"bad interval literal {item!r} in {text!r}")
            items.append(Interval(int(m.group(1)), int(m.group(2))))
        if items != sorted(items):
            raise ParseChainError(f"intervals must be listed in ascending order: {text!r}")
        try:
            return cls(tuple(items))
        except NotAdmissible as exc:
            raise ParseChainError(str(exc)) from None

    def __str__(self):
        if not self.intervals:
            return "empty"
        return ";".join(str(iv) for iv in self.intervals)

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def sort_key(self):
        return len(self.intervals), tuple(self.intervals)

    def is_valid(self, spec: RingSpec) -> bool:
        return all(iv.is_admissible(spec) for iv in self.intervals)

    def check(self, spec: RingSpec) -> None:
        for iv in self.intervals:
            if not iv.is_admissible(spec):
                raise NotAdmissible(f"{iv} is not admissible for idem={spec.mask}")


EMPTY = Chain()


def enumerate_chains(spec: RingSpec) -> list[Chain]:
    """Every chain of strictly separated admissible intervals, canonically sorted."""
    n, idem = spec.n, spec.idem
    out: list[tuple[Interval, ...]] = []

    def extend(prefix, start):
        out.append(prefix)
        for lo in range(start, n + 1):
            if not idem[lo]:
                continue
            for hi in range(lo, n + 1):
                extend(prefix + (Interval(lo, hi),), hi + 1)

    extend((), 0)
    chains = [Chain(c) for c in out]
    chains.sort(key=Chain.sort_key)
    return chains


def leq(x: Chain, y: Chain) -> bool:
    """``x <= y`` in the frame: each interval of ``y`` lies inside one of ``x``."""
    return all(any(a.contains(b) for a in x.intervals) for b in y.intervals)


def meet(x: Chain, y: Chain) -> Chain:
    """Greatest lower bound: merge intervals of ``x`` and ``y`` that intersect.

    Adjacent but disjoint intervals stay apart.
    """
    merged: list[list[int]] = []
    for iv in sorted(x.intervals + y.intervals):
        if merged and iv.lo <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], iv.hi)
        else:
            merged.append([iv.lo, iv.hi])
    return Chain(tuple(Interval(lo, hi) for lo, hi in merged))


def join(x: Chain, y: Chain) -> Chain:
    """Least upper bound: all nonempty pairwise intersections."""
    parts = []
    for a in x.intervals:
        for b in y.intervals:
            lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
            if lo <= hi:
                parts.append(Interval(lo, hi))
    return Chain(tuple(sorted(parts)))


def covers_rule(spec: RingSpec, x: Chain) -> list[Chain]:
    """Upper covers of ``x`` from the closed-form minimal-factorization rules.

    * drop a singleton ``[i,i]``;
    * split ``[m,k]`` into ``[m,k1],[k1+1,k]`` when ``k1+1`` is idempotent;
    * shrink ``[m,k]`` to ``[m,k-1]`` when ``k`` is not idempotent.
    """
    ivs = list(x.intervals)
    out = []
    for t, iv in enumerate(ivs):
        m, k = iv
        rest_before, rest_after = ivs[:t], ivs[t + 1:]
        if m == k:
            out.append(Chain(tuple(rest_before + rest_after)))
            continue
        for k1 in range(m, k):
            if spec.idem[k1 + 1]:
                out.append(Chain(tuple(rest_before + [Interval(m, k1), Interval(k1 + 1, k)] + rest_after)))
        if not spec.idem[k]:
            out.append(Chain(tuple(rest_before + [Interval(m, k - 1)] + rest_after)))
    out.sort(key=Chain.sort_key)
    return out


def is_compactly_generated(x: Chain) -> bool:
    """Empty, or a single interval starting at the zero ideal."""
    return not x.intervals or (len(x.intervals) == 1 and x.intervals[0].lo == 0)


def interval_label(iv: Interval, n: int) -> str:
    i, j = iv
    if i == j == 0:
        return "Q"
    if i == 0 and j == n:
        return "A"
    if i == 0:
        return f"A_p{j}"
    if i == j == n:
        # residue field of the maximal ideal
        return "k"
    if i == j:
        return f"k(p{i})"
    if j == n:
        return f"A/p{i}"
    return f"A_p{j}/p{i}"


def epi_label(x: Chain, spec: RingSpec) -> str:
    """Codomain of the ring epimorphism attached to ``x``, e.g. ``"A_p3 × A/p4"``."""
    if not x.intervals:
        return "0"
    return PRODUCT.join(interval_label(iv, spec.n) for iv in x.intervals)


def fib(i: int) -> int:
    a, b = 0, 1
    for _ in range(i):
        a, b = b, a + b
    return a


def size_two_count(spec: RingSpec) -> int:
    """Closed-form count of two-interval chains."""
    ids = spec.idempotents
    return sum((i2 - i1) * (spec.n + 1 - i2) for i1 in ids for i2 in ids if i1 < i2)


def binomial_size_count(n: int, k: int) -> int:
    """Number of ``k``-interval chains when every prime is idempotent."""
    return comb(n + k + 1, 2 * k)


class Frame:
    """The finite distributive lattice of chains for one ring.

    Order, covers and operation tables are computed lazily and cached.
    """

    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.elements: list[Chain] = enumerate_chains(spec)
        self.index: dict[Chain, int] = {c: i for i, c in enumerate(self.elements)}
        self._intervals = admissible_intervals(spec)
        self._bit = {iv: 1 << t for t, iv in enumerate(self._intervals)}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    @property
    def top(self) -> Chain:
        return EMPTY

    @property
    def bottom(self) -> Chain:
        return Chain((Interval(0, self.spec.n),))

    def id(self, x: Chain) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise SpecMismatch(f"{x} is not an element of the frame for idem={self.spec.mask}") from None

    def _both(self, x, y):
        self.id(x)
        self.id(y)

    def leq(self, x: Chain, y: Chain) -> bool:
        self._both(x, y)
        return leq(x, y)

    def meet(self, x: Chain, y: Chain) -> Chain:
        self._both(x, y)
        return meet(x, y)

    def join(self, x: Chain, y: Chain) -> Chain:
        self._both(x, y)
        return join(x, y)

    def count_by_size(self, k: int) -> int:
        return sum(1 for c in self.elements if len(c) == k)

    def sizes(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.elements:
            out[len(c)] = out.get(len(c), 0) + 1
        return dict(sorted(out.items()))

    # -- bitmask encoding of the order ------------------------------------

    def _masks(self):
        """Per element: bits of its own intervals and of everything below them."""
        own, down = [], []
        for c in self.elements:
            o = d = 0
            for iv in c.intervals:
                o |= self._bit[iv]
                for sub in self._intervals:
                    if iv.contains(sub):
                        d |= self._bit[sub]
            own.append(o)
            down.append(d)
        return own, down

    @cached_property
    def order(self) -> np.ndarray:
        """``order[i, j]`` is True iff ``elements[i] <= elements[j]``."""
        own, down = self._masks()
        if len(self._intervals) <= 64:
            o = np.array(own, dtype=np.uint64)
            d = np.array(down, dtype=np.uint64)
            return (o[None, :] & ~d[:, None]) == 0
        size = len(self.elements)
        out = np.zeros((size, size), dtype=bool)
        for i in range(size):
            out[i] = [(own[j] & ~down[i]) == 0 for j in range(size)]
        return out

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        """Transitive reduction of :attr:`order`: ``[i, j]`` iff j covers i."""
        strict = self.order & ~np.eye(len(self), dtype=bool)
        s = strict.astype(np.float32)
        two_step = (s @ s) > 0
        return strict & ~two_step

    @cached_property
    def covers(self) -> list[tuple[int, int]]:
        """Hasse edges ``(i, j)`` meaning element ``j`` covers element ``i``."""
        ii, jj = np.nonzero(self.cover_matrix)
        return sorted(zip(ii.tolist(), jj.tolist()))

    def upper_covers(self, x: Chain) -> list[Chain]:
        i = self.id(x)
        return [self.elements[j] for j in np.nonzero(self.cover_matrix[i])[0]]

    def rule_covers(self) -> list[tuple[int, int]]:
        """Hasse edges produced by :func:`covers_rule` alone."""
        edges = []
        for x in self.elements:
            i = self.index[x]
            edges.extend((i, self.id(y)) for y in covers_rule(self.spec, x))
        return sorted(edges)

    @cached_property
    def meet_table(self) -> np.ndarray:
        size = len(self)
        out = np.empty((size, size), dtype=np.int32)
        for i, x in enumerate(self.elements):
            for j in range(i, size):
                out[i, j] = out[j, i] = self.index[meet(x, self.elements[j])]
        return out

    @cached_property
    def join_table(self) -> np.ndarray:
        size = len(self)
        out = np.empty((size, size), dtype=np.int32)
        for i, x in enumerate(self.elements):
            for j in range(i, size):
                out[i, j] = out[j, i] = self.index[join(x, self.elements[j])]
        return out

    def label(self, x: Chain) -> str:
        return epi_label(x, self.spec)


def enumerate_frame(spec: RingSpec) -> Frame:
    return Frame(spec)


def count_all(spec: RingSpec) -> int:
    return len(enumerate_chains(spec))


def count_by_size(spec: RingSpec, k: int) -> int:
    return sum(1 for c in enumerate_chains(spec) if len(c) == k)
