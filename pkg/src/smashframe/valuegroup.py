"""Exact arithmetic in the lexicographic value group of ``A_idem``.

The value group is ``G_1 + ... + G_n`` ordered lexicographically, where
``G_i = Z[1/ell]`` if prime ``i`` is idempotent and ``G_i = Z`` otherwise.
Components are indexed ``1..n`` in the public API (matching prime
heights) and stored 0-based.

The module also carries formal polynomials ``sum a_i t^{g_i}`` with
rational coefficients and their fractions, together with the valuation
``min g_i`` that turns the fraction field into a valued field.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .errors import (
    AssertMismatch,
    LengthMismatch,
    NotInFilter,
    NotInRing,
    ParseGroupError,
    ZeroDenominator,
)
from .ring import RingSpec

LT, EQ, GT = -1, 0, 1


@total_ordering
@dataclass(frozen=True)
class LFraction:
    """The number ``num / ell**exp``, kept normalized."""

    num: int
    exp: int = 0
    ell: int = 2

    def __post_init__(self):
        if self.exp < 0:
            raise ValueError("exponent must be non-negative")
        num, exp = self.num, self.exp
        if num == 0:
            exp = 0
        while exp > 0 and num % self.ell == 0:
            num //= self.ell
            exp -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    @classmethod
    def from_fraction(cls, q, ell: int = 2) -> LFraction:
        q = Fraction(q)
        den, exp, power = q.denominator, 0, 1
        # den divides some power of ell iff it divides ell**k for k = bit length
        for _ in range(den.bit_length() + 1):
            if power % den == 0:
                return cls(q.numerator * (power // den), exp, ell)
            power *= ell
            exp += 1
        raise ValueError(f"{q} is not in Z[1/{ell}]")

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.ell**self.exp)

    def _coerce(self, other):
        if isinstance(other, LFraction):
            if other.ell != self.ell:
                raise ValueError("mixed bases")
            return other.as_fraction()
        if isinstance(other, int):
            return Fraction(other)
        return NotImplemented

    def __add__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return q
        return LFraction.from_fraction(self.as_fraction() + q, self.ell)

    __radd__ = __add__

    def __sub__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return q
        return LFraction.from_fraction(self.as_fraction() - q, self.ell)

    def __neg__(self):
        return LFraction(-self.num, self.exp, self.ell)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return LFraction(self.num * k, self.exp, self.ell)

    __rmul__ = __mul__

    def __lt__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return q
        return self.as_fraction() < q

    def __eq__(self, other):
        if isinstance(other, (LFraction, int)):
            q = self._coerce(other)
            return self.as_fraction() == q
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.exp, self.ell))

    def __bool__(self):
        return self.num != 0

    def sign(self) -> int:
        return (self.num > 0) - (self.num < 0)

    def __str__(self):
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{self.ell}^{self.exp}"

    def __repr__(self):
        return f"LFraction({self})"


class _Infinity:
    """Valuation of zero; compares above every group element."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    __str__ = __repr__

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__


INFINITY = _Infinity()


class _Indecomposable:
    def __repr__(self):
        return "INDECOMPOSABLE"

    __str__ = __repr__

    def __bool__(self):
        return False


INDECOMPOSABLE = _Indecomposable()


@total_ordering
class GroupElement:
    """An element of ``G_idem``; immutable."""

    __slots__ = ("spec", "comps")

    def __init__(self, spec: RingSpec, comps):
        comps = tuple(comps)
        if len(comps) != spec.n:
            raise LengthMismatch(f"expected {spec.n} components, got {len(comps)}")
        out = []
        for i, c in enumerate(comps, start=1):
            if not isinstance(c, LFraction):
                try:
                    c = LFraction.from_fraction(c, spec.ell)
                except ValueError as exc:
                    raise ValueError(f"component {i}: {exc}") from None
            elif c.ell != spec.ell:
                c = LFraction.from_fraction(c.as_fraction(), spec.ell)
            if not spec.idem[i] and c.exp != 0:
                raise ValueError(f"component {i} lives in Z but got {c}")
            out.append(c)
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "comps", tuple(out))

    def __setattr__(self, name, value):
        raise AttributeError("GroupElement is immutable")

    @classmethod
    def zero(cls, spec: RingSpec) -> GroupElement:
        return cls(spec, [0] * spec.n)

    @classmethod
    def unit(cls, spec: RingSpec, j: int) -> GroupElement:
        """The element with a single 1 in slot ``j`` (written ``m^j``)."""
        return cls(spec, [int(i == j) for i in range(1, spec.n + 1)])

    def __getitem__(self, i: int) -> LFraction:
        """Component ``i`` for ``1 <= i <= n``."""
        if not 1 <= i <= self.spec.n:
            raise IndexError(i)
        return self.comps[i - 1]

    def _check(self, other):
        if not isinstance(other, GroupElement):
            return False
        if other.spec.n != self.spec.n:
            raise LengthMismatch(f"lengths {self.spec.n} and {other.spec.n}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return GroupElement(self.spec, [a + b for a, b in zip(self.comps, other.comps)])

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return GroupElement(self.spec, [a - b for a, b in zip(self.comps, other.comps)])

    def __neg__(self):
        return GroupElement(self.spec, [-a for a in self.comps])

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.spec.n == other.spec.n and self.comps == other.comps

    def __lt__(self, other):
        if isinstance(other, _Infinity):
            return True
        if not isinstance(other, GroupElement):
            return NotImplemented
        return lex_compare(self, other) == LT

    def __hash__(self):
        return hash(self.comps)

    def __bool__(self):
        return any(self.comps)

    def sign(self) -> int:
        for c in self.comps:
            if c:
                return c.sign()
        return 0

    def __str__(self):
        return ",".join(str(c) for c in self.comps)

    def __repr__(self):
        return f"GroupElement({self})"


def lex_compare(v: GroupElement, w: GroupElement) -> int:
    """Return ``LT``, ``EQ`` or ``GT``; the first differing slot decides."""
    if v.spec.n != w.spec.n:
        raise LengthMismatch(f"lengths {v.spec.n} and {w.spec.n}")
    for a, b in zip(v.comps, w.comps):
        if a != b:
            return LT if a < b else GT
    return EQ


def support(v: GroupElement):
    """Index (1-based) of the first nonzero component, ``None`` for zero."""
    for i, c in enumerate(v.comps, start=1):
        if c:
            return i
    return None


def filter_member(v: GroupElement, j: int) -> bool:
    """Membership in the prime filter ``F_j = {v > 0 : supp(v) <= j}``."""
    if not 1 <= j <= v.spec.n:
        raise ValueError(f"filter index {j} outside 1..{v.spec.n}")
    s = support(v)
    return s is not None and s <= j and v.sign() > 0


def decompose_in_filter(v: GroupElement, j: int):
    """Write ``v`` as ``a + b`` with both parts in ``F_j``.

    Returns the pair ``(a, b)``, or ``INDECOMPOSABLE`` when no such split
    exists, which happens exactly when ``supp(v) = j``, slot ``j`` is a
    copy of ``Z`` and ``v_j = 1``: any split would need two positive
    integers summing to 1 in slot ``j``, because supports of positive
    elements combine by ``min``.
    """
    if not filter_member(v, j):
        raise NotInFilter(f"{v} is not in F_{j}")
    spec = v.spec
    comps = list(v.comps)
    zero = LFraction(0, 0, spec.ell)
    s = support(v)

    def make(cs):
        return GroupElement(spec, cs)

    if s < j:
        later = [k for k in range(s + 1, j + 1) if comps[k - 1]]
        if later:
            k = later[0]
            tail = [zero] * (k - 1) + comps[k - 1:]
            if comps[k - 1].sign() > 0:
                head = comps[: k - 1] + [zero] * (spec.n - k + 1)
                return make(head), make(tail)
            # absorb twice the negative entry into the head
            head = comps[: k - 1] + [comps[k - 1] * 2] + [zero] * (spec.n - k)
            tail[k - 1] = -comps[k - 1]
            return make(head), make(tail)
        a = list(comps)
        a[s] = a[s] - 1
        return make(a), GroupElement.unit(spec, s + 1)

    # supp(v) == j
    vj = comps[j - 1]
    if spec.idem[j]:
        if vj.num >= 2:
            part = LFraction(1, vj.exp, spec.ell)
        else:
            part = LFraction(1, vj.exp + 1, spec.ell)
    elif vj.num >= 2:
        part = LFraction(1, 0, spec.ell)
    else:
        return INDECOMPOSABLE
    a = list(comps)
    a[j - 1] = vj - part
    b = [zero] * spec.n
    b[j - 1] = part
    return make(a), make(b)


def bounded_elements(spec: RingSpec, max_num: int, max_exp: int, max_nonzero: int | None = None):
    """All elements whose components are ``num / ell**e`` with
    ``|num| <= max_num`` and ``e <= max_exp`` (``e = 0`` in integer slots),
    optionally with at most ``max_nonzero`` nonzero components."""
    zero = LFraction(0, 0, spec.ell)
    slots = []
    for i in range(1, spec.n + 1):
        top = max_exp if spec.idem[i] else 0
        values = {
            LFraction(num, e, spec.ell)
            for num in range(-max_num, max_num + 1)
            for e in range(top + 1)
        }
        values.discard(zero)
        slots.append(sorted(values))
    limit = spec.n if max_nonzero is None else min(max_nonzero, spec.n)
    for k in range(limit + 1):
        for where in itertools.combinations(range(spec.n), k):
            for vals in itertools.product(*(slots[i] for i in where)):
                comps = [zero] * spec.n
                for i, c in zip(where, vals):
                    comps[i] = c
                yield GroupElement(spec, comps)


@dataclass(frozen=True)
class FilterVerdict:
    idempotent: bool
    # m^j when the filter is not idempotent
    witness: GroupElement | None = None

    def __bool__(self):
        return self.idempotent


def filter_idempotent(j: int, spec: RingSpec, max_num: int = 2, max_exp: int = 1,
                      max_nonzero: int = 3) -> FilterVerdict:
    """Decide whether ``F_j + F_j = F_j`` and self-check on a small grid
    of elements with few nonzero components."""
    if not 1 <= j <= spec.n:
        raise ValueError(f"filter index {j} outside 1..{spec.n}")
    if spec.idem[j]:
        for v in bounded_elements(spec, max_num, max_exp, max_nonzero):
            if not filter_member(v, j):
                continue
            split = decompose_in_filter(v, j)
            if split is INDECOMPOSABLE:
                raise AssertMismatch(f"{v} did not split in idempotent F_{j}")
            a, b = split
            if a + b != v or not (filter_member(a, j) and filter_member(b, j)):
                raise AssertMismatch(f"bad split of {v} in F_{j}")
        return FilterVerdict(True)
    witness = GroupElement.unit(spec, j)
    if decompose_in_filter(witness, j) is not INDECOMPOSABLE:
        raise AssertMismatch(f"m^{j} unexpectedly decomposed")
    return FilterVerdict(False, witness)


_COMPONENT = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+)\s*\^\s*(\d+))?\s*$")


def parse_element(text: str, spec: RingSpec) -> GroupElement:
    """Parse ``"0,3/2^1,0"``: comma-separated ``num`` or ``num/ell^exp``."""
    parts = text.split(",")
    if len(parts) != spec.n:
        raise ParseGroupError(f"{text!r}: expected {spec.n} components, got {len(parts)}")
    comps = []
    for part in parts:
        m = _COMPONENT.match(part)
        if not m:
            raise ParseGroupError(f"bad component {part!r}")
        num = int(m.group(1))
        if m.group(2) is None:
            comps.append(LFraction(num, 0, spec.ell))
            continue
        base, exp = int(m.group(2)), int(m.group(3))
        if base != spec.ell:
            raise ParseGroupError(f"component {part!r} uses base {base}, ring has ell={spec.ell}")
        comps.append(LFraction(num, exp, spec.ell))
    try:
        return GroupElement(spec, comps)
    except ValueError as exc:
        raise ParseGroupError(str(exc)) from None


class HahnPoly:
    """Finite sum ``sum a_g t^g`` with rational ``a_g`` and ``g`` in ``G``."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: RingSpec, terms=None):
        acc: dict[GroupElement, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for g, a in items:
            if not isinstance(g, GroupElement):
                g = GroupElement(spec, g)
            elif g.spec.n != spec.n:
                raise LengthMismatch("exponent of the wrong length")
            acc[g] = acc.get(g, Fraction(0)) + Fraction(a)
        self.spec = spec
        self.terms = {g: a for g, a in acc.items() if a != 0}

    @classmethod
    def monomial(cls, spec: RingSpec, g, coeff=1) -> HahnPoly:
        return cls(spec, [(g, coeff)])

    @classmethod
    def constant(cls, spec: RingSpec, c) -> HahnPoly:
        return cls(spec, [(GroupElement.zero(spec), c)])

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, HahnPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        return HahnPoly(self.spec, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return HahnPoly(self.spec, [(g, -a) for g, a in self.terms.items()])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return HahnPoly(
            self.spec,
            [
                (g + h, a * b)
                for g, a in self.terms.items()
                for h, b in other.terms.items()
            ],
        )

    def __repr__(self):
        if not self.terms:
            return "HahnPoly(0)"
        body = " + ".join(f"{a}*t^({g})" for g, a in sorted(self.terms.items()))
        return f"HahnPoly({body})"


class HahnFraction:
    """``num / den`` over :class:`HahnPoly`; never reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: HahnPoly, den: HahnPoly | None = None):
        if den is None:
            den = HahnPoly.constant(num.spec, 1)
        if not den:
            raise ZeroDenominator("denominator is the zero polynomial")
        self.num = num
        self.den = den

    @property
    def spec(self) -> RingSpec:
        return self.num.spec

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        return HahnFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return HahnFraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return HahnFraction(self.num * other.num, self.den * other.den)

    def __eq__(self, other):
        if not isinstance(other, HahnFraction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __repr__(self):
        return f"HahnFraction({self.num!r} / {self.den!r})"


def poly_valuation(f: HahnPoly):
    """Lex-minimal exponent with nonzero coefficient; ``INFINITY`` for 0."""
    if not f.terms:
        return INFINITY
    return min(f.terms)


def frac_valuation(x: HahnFraction):
    if not x.den:
        raise ZeroDenominator("denominator is the zero polynomial")
    if not x.num:
        return INFINITY
    return poly_valuation(x.num) - poly_valuation(x.den)


def ideal_member(x: HahnFraction, j: int) -> bool:
    """Whether ``x`` lies in the prime ideal matching the filter ``F_j``."""
    v = frac_valuation(x)
    if v is INFINITY:
        # 0 belongs to every ideal
        return True
    if v.sign() < 0:
        raise NotInRing(f"valuation {v} is negative")
    return filter_member(v, j)
