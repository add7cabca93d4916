"""Combinatorial model of a finite-dimensional valuation domain.

A ring is described by its Krull dimension ``n`` and a bit per prime
(``idem[i] == 1`` iff the prime of height ``i`` is idempotent). Primes are
the indices ``0..n``; index 0 is the zero ideal and ``n`` the maximal one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import SpecRejected


@dataclass(frozen=True)
class RingSpec:
    n: int
    idem: tuple[int, ...]
    ell: int = 2

    def __post_init__(self):
        object.__setattr__(self, "idem", tuple(int(b) for b in self.idem))
        validate(self)

    @classmethod
    def all_ones(cls, n: int, ell: int = 2) -> RingSpec:
        """The ring whose primes are all idempotent."""
        return cls(n, (1,) * (n + 1), ell)

    @classmethod
    def from_mask(cls, mask: str, ell: int = 2) -> RingSpec:
        """Build from a bit string such as ``"100010"`` (length n+1)."""
        if not mask or set(mask) - {"0", "1"}:
            raise SpecRejected(f"mask must be a non-empty bit string, got {mask!r}")
        return cls(len(mask) - 1, tuple(int(c) for c in mask), ell)

    @classmethod
    def from_indices(cls, n: int, indices, ell: int = 2) -> RingSpec:
        """Build from the set of idempotent prime indices."""
        indices = set(indices)
        bad = [i for i in indices if not 0 <= i <= n]
        if bad:
            raise SpecRejected(f"idempotent indices out of range 0..{n}: {sorted(bad)}")
        return cls(n, tuple(int(i in indices) for i in range(n + 1)), ell)

    @property
    def mask(self) -> str:
        return "".join(map(str, self.idem))

    @property
    def idempotents(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.idem) if b)

    def is_all_ones(self) -> bool:
        return all(self.idem)


def validate(spec: RingSpec) -> None:
    """Raise :class:`SpecRejected` naming the first violated invariant."""
    n = spec.n
    if isinstance(n, bool) or not isinstance(n, int):
        raise SpecRejected(f"n must be an integer, got {n!r}")
    if n < 1:
        raise SpecRejected(f"n={n}: Krull dimension must be at least 1")
    if len(spec.idem) != n + 1:
        raise SpecRejected(f"idem has {len(spec.idem)} entries, expected n+1={n + 1}")
    if any(b not in (0, 1) for b in spec.idem):
        raise SpecRejected("idem entries must be 0 or 1")
    if spec.idem[0] != 1:
        raise SpecRejected("idem[0]=0: the zero ideal is always idempotent")
    if isinstance(spec.ell, bool) or not isinstance(spec.ell, int) or spec.ell < 2:
        raise SpecRejected(f"ell={spec.ell!r}: base must be an integer >= 2")


class Interval(NamedTuple):
    """Closed interval ``[lo, hi]`` of prime indices."""

    lo: int
    hi: int

    def __str__(self):
        return f"[{self.lo},{self.hi}]"

    def contains(self, other: Interval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def meets(self, other: Interval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def is_admissible(self, spec: RingSpec) -> bool:
        return 0 <= self.lo <= self.hi <= spec.n and spec.idem[self.lo] == 1


def admissible_intervals(spec: RingSpec) -> list[Interval]:
    """All ``[lo, hi]`` with idempotent ``lo``, sorted by ``(lo, hi)``."""
    return [
        Interval(lo, hi)
        for lo in spec.idempotents
        for hi in range(lo, spec.n + 1)
    ]


@dataclass(frozen=True)
class NextProfile:
    next: tuple[int, ...]
    # next0[k] is the k-fold iterate of ``next`` at 0, for k = 0..n+1
    next0: tuple[int, ...]
    M: int
    d: int


def next_index(spec: RingSpec, i: int) -> int:
    """Smallest idempotent index strictly above ``i``, or ``n`` if none."""
    for k in range(i + 1, spec.n + 1):
        if spec.idem[k]:
            return k
    return spec.n


def next_profile(spec: RingSpec) -> NextProfile:
    n = spec.n
    nxt = tuple(next_index(spec, i) for i in range(n + 1))
    it = [0]
    for _ in range(n + 1):
        it.append(nxt[it[-1]])
    M = max(spec.idempotents)
    d = max([n - M] + [abs(it[k + 1] - it[k]) for k in range(n)])
    return NextProfile(nxt, tuple(it), M, d)
