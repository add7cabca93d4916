import pytest

from conftest import all_specs
from smashframe.errors import SpecRejected
from smashframe.ring import Interval, RingSpec, admissible_intervals, next_profile, validate


def test_valid_specs():
    validate(RingSpec(2, (1, 1, 1), 2))
    spec = RingSpec.from_mask("100010")
    assert spec.n == 5 and spec.idempotents == (0, 4)
    assert RingSpec.from_indices(5, {0, 4}) == spec


@pytest.mark.parametrize(
    "args, fragment",
    [
        ((1, (0, 1)), "idem[0]=0"),
        ((0, (1,)), "n=0"),
        ((2, (1, 1)), "expected n+1=3"),
        ((2, (1, 2, 1)), "0 or 1"),
        ((2, (1, 1, 1), 1), "ell=1"),
    ],
)
def test_rejected_specs(args, fragment):
    with pytest.raises(SpecRejected) as err:
        RingSpec(*args)
    assert fragment in str(err.value)
    assert err.value.code == "REJECT"


def test_from_mask_rejects_garbage():
    with pytest.raises(SpecRejected):
        RingSpec.from_mask("1x1")
    with pytest.raises(SpecRejected):
        RingSpec.from_indices(2, {0, 3})


def test_admissible_intervals_examples():
    ivs = admissible_intervals(RingSpec.all_ones(2))
    assert [str(iv) for iv in ivs] == ["[0,0]", "[0,1]", "[0,2]", "[1,1]", "[1,2]", "[2,2]"]
    ivs = admissible_intervals(RingSpec.from_mask("100010"))
    assert ivs == [Interval(0, h) for h in range(6)] + [Interval(4, 4), Interval(4, 5)]
    assert admissible_intervals(RingSpec.from_mask("10")) == [Interval(0, 0), Interval(0, 1)]


def test_admissible_intervals_properties():
    for spec in all_specs(6):
        ivs = admissible_intervals(spec)
        assert ivs == sorted(ivs)
        assert len(ivs) == sum(spec.n + 1 - m for m in spec.idempotents)
        assert all(iv.is_admissible(spec) for iv in ivs)
        listed = set(ivs)
        for iv in ivs:
            assert all(Interval(iv.lo, h) in listed for h in range(iv.lo, iv.hi))
        if spec.is_all_ones():
            assert len(ivs) == (spec.n + 1) * (spec.n + 2) // 2


def test_next_profile_examples():
    p = next_profile(RingSpec.from_mask("100010"))
    assert p.next[0] == 4 and p.next[4] == 5
    assert p.next0[:4] == (0, 4, 5, 5)
    assert (p.M, p.d) == (4, 4)

    p = next_profile(RingSpec.all_ones(3))
    assert p.next[:3] == (1, 2, 3)
    assert p.next0[:5] == (0, 1, 2, 3, 3)
    assert (p.M, p.d) == (3, 1)

    p = next_profile(RingSpec.from_mask("10"))
    assert (p.next[0], p.M, p.d) == (1, 0, 1)


def test_next_profile_invariants():
    for spec in all_specs(6):
        n = spec.n
        p = next_profile(spec)
        for i, k in enumerate(p.next):
            assert k > i or k == n
            assert k == n or spec.idem[k]
        assert p.next0[0] == 0
        assert list(p.next0) == sorted(p.next0)
        # stabilises within n+1 iterations
        assert p.next0[n] == p.next0[n + 1] <= n
        assert p.M == max(spec.idempotents) <= n
        assert 0 <= p.d <= n
