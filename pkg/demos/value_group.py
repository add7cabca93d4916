"""Arithmetic in the lexicographic value group.

Slots of idempotent primes carry dyadic rationals, the others integers.
Positive elements split inside a filter except for a unit at an integer
slot, which is what makes that filter fail to be idempotent.

    python demos/value_group.py
"""

from smashframe.ring import RingSpec
from smashframe.valuegroup import (
    GroupElement,
    HahnFraction,
    HahnPoly,
    decompose_in_filter,
    filter_idempotent,
    frac_valuation,
    ideal_member,
    parse_element,
    support,
)

spec = RingSpec.from_mask("1010")
print(f"idem = {spec.mask}: slot 2 is Z[1/2], slots 1 and 3 are Z")

for text, j in [("0,1/2^1,0", 2), ("0,3,5", 2), ("1,0,-4", 3), ("0,0,2", 3), ("0,0,1", 3)]:
    v = parse_element(text, spec)
    split = decompose_in_filter(v, j)
    shown = " + ".join(f"({part})" for part in split) if split else str(split)
    print(f"  split {v} in F_{j}: {shown}")

for j in range(1, spec.n + 1):
    verdict = filter_idempotent(j, spec)
    extra = f", witness {verdict.witness}" if verdict.witness is not None else ""
    print(f"F_{j} idempotent: {verdict.idempotent}{extra}")

f = HahnPoly(spec, [((1, 0, 0), 1), ((0, 1, 0), -2)])
g = HahnPoly.monomial(spec, (0, 0, 1))
x = HahnFraction(f, g)
v = frac_valuation(x)
print(f"\nv(f/g) = {v}, support {support(v)}")
print("in the ideal for F_2:", ideal_member(x, 2))
print("v(x*x) == 2 v(x):", frac_valuation(x * x) == v + v)
print("m^1 =", GroupElement.unit(spec, 1))
