"""Dimension five where only (0) and p4 are idempotent.

Walks through the 17 chains, the next/M/d profile, the seven-point
spectrum with its five-point specialization chain, and the embedding
into the frame where every prime is idempotent.

    python demos/mixed_pattern.py
"""

from smashframe import (
    Frame,
    RingSpec,
    covers_rule,
    embed_subframe,
    next_profile,
    point_count_formula,
    smashing_spectrum,
    telescope_holds,
)
from smashframe.frame import size_two_count

spec = RingSpec.from_indices(5, {0, 4})
frame = Frame(spec)
print(f"idem = {spec.mask}: {len(frame)} elements, sizes {frame.sizes()}")
print(f"two-interval chains: {frame.count_by_size(2)} (closed form {size_two_count(spec)})")

for chain in frame:
    ups = ", ".join(frame.label(c) for c in covers_rule(spec, chain)) or "-"
    print(f"  {str(chain):14} {frame.label(chain):18} covered by {ups}")

prof = next_profile(spec)
print(f"\nnext = {prof.next}, next0 = {prof.next0}, M = {prof.M}, d = {prof.d}")

space = smashing_spectrum(frame)
print(f"points: {len(space.points)} (formula {point_count_formula(spec, prof)})")
for p, q in space.arrows:
    print(f"  {p} ~> {q}")
print(f"longest specialization chain: {space.longest_chain()} points")
print("telescope:", telescope_holds(spec, frame))

emb = embed_subframe(spec)
big = Frame(RingSpec.all_ones(5))
print(f"\nembedded {len(emb)} elements into the {len(big)}-element all-ones frame")
