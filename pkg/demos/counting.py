"""Frame sizes and spectrum sizes across idempotence patterns.

    python demos/counting.py
"""

import itertools

from smashframe import Frame, RingSpec, next_profile, point_count_formula, smashing_spectrum
from smashframe.frame import binomial_size_count, fib

print(" n  |frame|  Fib(2n+3)  by size")
for n in range(1, 9):
    frame = Frame(RingSpec.all_ones(n))
    sizes = [binomial_size_count(n, k) for k in range(n + 2)]
    assert list(frame.sizes().values()) == sizes
    print(f"{n:2}  {len(frame):7}  {fib(2 * n + 3):9}  {sizes}")

print("\nmask      elements  points  d")
for n in range(1, 5):
    for rest in itertools.product("01", repeat=n):
        spec = RingSpec.from_mask("1" + "".join(rest))
        frame = Frame(spec)
        pts = len(smashing_spectrum(frame).points)
        assert pts == point_count_formula(spec)
        print(f"{spec.mask:8}  {len(frame):8}  {pts:6}  {next_profile(spec).d}")
