from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_specs
from grid_oracle import FactoredOracle, GridOracle
from smashframe.errors import LengthMismatch, NotInFilter, NotInRing, ParseGroupError, ZeroDenominator
from smashframe.ring import RingSpec
from smashframe.valuegroup import (
    EQ,
    GT,
    INDECOMPOSABLE,
    INFINITY,
    LT,
    GroupElement,
    HahnFraction,
    HahnPoly,
    LFraction,
    bounded_elements,
    decompose_in_filter,
    filter_idempotent,
    filter_member,
    frac_valuation,
    ideal_member,
    lex_compare,
    parse_element,
    poly_valuation,
    support,
)

S2 = RingSpec.all_ones(2)
S3 = RingSpec.all_ones(3)
MIXED = RingSpec.from_mask("100010")


def g(spec, *comps):
    return GroupElement(spec, comps)


# -- LFraction -------------------------------------------------------------

def test_lfraction_normalises():
    assert LFraction(4, 2) == LFraction(1, 0)
    assert (LFraction(4, 2).num, LFraction(4, 2).exp) == (1, 0)
    assert (LFraction(6, 3).num, LFraction(6, 3).exp) == (3, 2)
    assert (LFraction(0, 5).num, LFraction(0, 5).exp) == (0, 0)
    assert LFraction(9, 2, ell=3) == LFraction(1, 0, ell=3)


def test_lfraction_arithmetic_exact():
    half, quarter = LFraction(1, 1), LFraction(1, 2)
    assert half + quarter == LFraction(3, 2)
    assert half - quarter == quarter
    assert -half < 0 < quarter < half
    assert str(LFraction(3, 1)) == "3/2^1"
    assert LFraction.from_fraction(Fraction(5, 8)) == LFraction(5, 3)
    with pytest.raises(ValueError):
        LFraction.from_fraction(Fraction(1, 3))


# -- lex order and support ---------------------------------------------------

def test_lex_compare_examples():
    assert lex_compare(g(S2, 0, 1), g(S2, 1, -5)) == LT
    v = g(S2, 1, -5)
    assert lex_compare(v, v) == EQ
    assert lex_compare(g(S2, Fraction(1, 2), 0), g(S2, Fraction(1, 4), 0)) == GT


def test_lex_compare_length_mismatch():
    with pytest.raises(LengthMismatch):
        lex_compare(g(S2, 0, 1), g(S3, 0, 1, 0))


def test_support_examples():
    assert support(g(S3, 0, Fraction(3, 2), 0)) == 2
    assert support(GroupElement.zero(S3)) is None
    assert support(g(S3, -1, 5, 7)) == 1


def test_integer_slots_reject_fractions():
    with pytest.raises(ValueError):
        g(MIXED, Fraction(1, 2), 0, 0, 0, 0)
    # slot 4 is idempotent in 100010
    assert g(MIXED, 0, 0, 0, Fraction(1, 2), 0)[4] == LFraction(1, 1)


def test_parse_element():
    v = parse_element("0,3/2^1,0", S3)
    assert v == g(S3, 0, Fraction(3, 2), 0)
    for bad in ("0,1", "0,x,0", "0,1/3^1,0"):
        with pytest.raises(ParseGroupError):
            parse_element(bad, S3)
    with pytest.raises(ParseGroupError):
        parse_element("1/2^1,0,0,0,0", MIXED)


# -- filters -----------------------------------------------------------------

def test_filter_member_examples():
    assert filter_member(g(S3, 0, 1, 0), 2)
    assert not filter_member(g(S3, 0, 0, 1), 2)
    assert not filter_member(g(S3, -1, 0, 0), 1)
    assert not filter_member(GroupElement.zero(S3), 3)


def test_filter_idempotent_examples():
    assert filter_idempotent(4, MIXED)
    verdict = filter_idempotent(1, MIXED)
    assert not verdict and verdict.witness == GroupElement.unit(MIXED, 1)
    for k in range(1, 4):
        assert filter_idempotent(k, S3)


def test_filter_idempotent_matches_mask():
    for spec in all_specs(4):
        for j in range(1, spec.n + 1):
            assert bool(filter_idempotent(j, spec)) == bool(spec.idem[j])


def test_filter_is_prime_on_grid():
    # complement of F_j inside the positive cone is closed under addition
    for spec in all_specs(3):
        cone = [v for v in bounded_elements(spec, 2 if spec.n < 3 else 1, 1) if v.sign() >= 0]
        for j in range(1, spec.n + 1):
            outside = [v for v in cone if not filter_member(v, j)]
            for v in outside:
                for w in outside:
                    assert not filter_member(v + w, j)


# -- decompositions ------------------------------------------------------------

@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_dyadic_split_identity(k):
    v = GroupElement(S2, [0, LFraction(1, k)])
    a, b = decompose_in_filter(v, 2)
    assert a[2] == LFraction(1, k + 1) and b[2] == LFraction(1, k + 1)
    assert a + b == v


def test_dyadic_split_identity_ell3():
    spec = RingSpec.all_ones(1, ell=3)
    v = GroupElement(spec, [LFraction(1, 2, 3)])
    a, b = decompose_in_filter(v, 1)
    assert a + b == v
    assert {a[1], b[1]} == {LFraction(2, 3, 3), LFraction(1, 3, 3)}


def test_unit_at_integer_slot_is_indecomposable():
    for j in (1, 2, 3):
        assert decompose_in_filter(GroupElement.unit(MIXED, j), j) is INDECOMPOSABLE


def test_single_entry_before_j_splits_with_next_slot():
    v = g(MIXED, 0, 3, 0, 0, 0)
    a, b = decompose_in_filter(v, 4)
    assert a == g(MIXED, 0, 3, -1, 0, 0)
    assert b == GroupElement.unit(MIXED, 3)


def test_later_entries_split():
    a, b = decompose_in_filter(g(MIXED, 0, 1, 0, 2, 0), 4)
    assert a + b == g(MIXED, 0, 1, 0, 2, 0)
    a, b = decompose_in_filter(g(MIXED, 0, 1, -3, 0, 0), 4)
    assert a + b == g(MIXED, 0, 1, -3, 0, 0)
    assert filter_member(a, 4) and filter_member(b, 4)


def test_integer_slot_at_support_two_or_more():
    a, b = decompose_in_filter(g(MIXED, 0, 2, 0, 0, 0), 2)
    assert a + b == g(MIXED, 0, 2, 0, 0, 0)
    assert filter_member(a, 2) and filter_member(b, 2)


def test_decompose_outside_filter():
    with pytest.raises(NotInFilter):
        decompose_in_filter(g(S3, 0, 0, 1), 2)


def test_decompose_roundtrip_on_grid():
    for spec in all_specs(3):
        for v in bounded_elements(spec, 3, 2):
            for j in range(1, spec.n + 1):
                if not filter_member(v, j):
                    continue
                split = decompose_in_filter(v, j)
                if split is INDECOMPOSABLE:
                    s = support(v)
                    assert s == j and not spec.idem[j] and v[j] == 1
                    continue
                a, b = split
                assert a + b == v and filter_member(a, j) and filter_member(b, j)


def test_factored_oracle_agrees_with_full_grid_search():
    for spec in all_specs(2):
        full, fast = GridOracle(spec), FactoredOracle(spec)
        for v in fast.grid():
            for j in range(1, spec.n + 1):
                if filter_member(v, j):
                    assert full.decomposable(v, j) == fast.decomposable(v, j), (spec.mask, j, v)


def test_indecomposable_exactly_when_oracle_finds_nothing():
    for spec in all_specs(3):
        oracle = FactoredOracle(spec)
        for v in oracle.grid():
            for j in range(1, spec.n + 1):
                if filter_member(v, j):
                    ours = decompose_in_filter(v, j) is not INDECOMPOSABLE
                    assert ours == oracle.decomposable(v, j), (spec.mask, j, v)


def test_unit_witness_confirmed_by_full_grid_search():
    for spec in all_specs(3):
        oracle = GridOracle(spec)
        for j in range(1, spec.n + 1):
            verdict = filter_idempotent(j, spec)
            if not verdict:
                assert not oracle.decomposable(verdict.witness, j)


# -- group axioms (property based) -------------------------------------------------

@st.composite
def specs(draw, max_n=3):
    n = draw(st.integers(1, max_n))
    rest = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    return RingSpec(n, (1, *rest), draw(st.sampled_from([2, 3])))


@st.composite
def element(draw, spec):
    comps = []
    for i in range(1, spec.n + 1):
        e = draw(st.integers(0, 3)) if spec.idem[i] else 0
        comps.append(LFraction(draw(st.integers(-6, 6)), e, spec.ell))
    return GroupElement(spec, comps)


@st.composite
def spec_with_elements(draw, count=3):
    spec = draw(specs())
    return spec, [draw(element(spec)) for _ in range(count)]


@given(spec_with_elements())
@settings(max_examples=300, deadline=None)
def test_lex_order_is_compatible_with_addition(data):
    _, (u, v, w) = data
    assert lex_compare(u, v) == -lex_compare(v, u)
    if u < v:
        assert u + w < v + w
    assert (u + v) - v == u


@given(spec_with_elements())
@settings(max_examples=300, deadline=None)
def test_support_additivity(data):
    _, (u, v, _) = data
    if u.sign() > 0 and v.sign() > 0:
        assert support(u + v) == min(support(u), support(v))


# -- Hahn polynomials and valuations -----------------------------------------------

def test_poly_valuation_examples():
    f = HahnPoly(S2, [((1, 0), 1), ((0, 1), 2)])
    assert poly_valuation(f) == g(S2, 0, 1)
    assert poly_valuation(HahnPoly(S2)) is INFINITY
    assert poly_valuation(HahnPoly.constant(S2, 5)) == GroupElement.zero(S2)


def test_frac_valuation_examples():
    x = HahnFraction(HahnPoly.monomial(S2, (2, 0)), HahnPoly.monomial(S2, (1, 1)))
    assert frac_valuation(x) == g(S2, 1, -1)
    assert frac_valuation(HahnFraction(HahnPoly(S2), HahnPoly.monomial(S2, (1, 0)))) is INFINITY
    num = HahnPoly(S2, [((1, 0), 1), ((0, 1), 1)])
    assert frac_valuation(HahnFraction(num, HahnPoly.monomial(S2, (0, 1)))) == GroupElement.zero(S2)


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        HahnFraction(HahnPoly.constant(S2, 1), HahnPoly(S2))


def test_cancelling_terms_are_dropped():
    f = HahnPoly(S2, [((1, 0), 1), ((1, 0), -1)])
    assert not f and f.terms == {}


def test_ideal_member_examples():
    assert ideal_member(HahnFraction(HahnPoly.monomial(S2, (0, 1))), 2)
    unit = HahnFraction(HahnPoly.monomial(S2, (0, 0)))
    assert not any(ideal_member(unit, j) for j in (1, 2))
    with pytest.raises(NotInRing):
        ideal_member(HahnFraction(HahnPoly.monomial(S2, (-1, 0))), 1)
    assert ideal_member(HahnFraction(HahnPoly(S2)), 1)


@st.composite
def poly(draw, spec, max_terms=3):
    terms = draw(st.lists(
        st.tuples(element(spec), st.integers(-3, 3).filter(bool)), min_size=0, max_size=max_terms))
    return HahnPoly(spec, terms)


@st.composite
def fraction_pairs(draw):
    spec = draw(specs())
    nonzero = poly(spec).filter(bool)
    x = HahnFraction(draw(poly(spec)), draw(nonzero))
    y = HahnFraction(draw(poly(spec)), draw(nonzero))
    return x, y


@given(fraction_pairs())
@settings(max_examples=300, deadline=None)
def test_valuation_axioms(pair):
    x, y = pair
    vx, vy = frac_valuation(x), frac_valuation(y)
    assert (vx is INFINITY) == (not x)
    vxy = frac_valuation(x * y)
    if vx is INFINITY or vy is INFINITY:
        assert vxy is INFINITY
    else:
        assert vxy == vx + vy
    assert frac_valuation(x + y) >= min(vx, vy)
