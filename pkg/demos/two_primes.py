"""Dimension two, every prime idempotent: the 13-element frame.

Prints the labelled elements, the Hasse diagram in DOT and the five-point
spectrum. Pipe the DOT block through ``dot -Tpng`` to draw it.

    python demos/two_primes.py
"""

from smashframe import Frame, RingSpec, is_compactly_generated, smashing_spectrum
from smashframe.serialize import hasse_dot

frame = Frame(RingSpec.all_ones(2))

for i, chain in enumerate(frame):
    flag = "  compact" if is_compactly_generated(chain) else ""
    print(f"{i:2}  {str(chain):18} {frame.label(chain)}{flag}")

print(f"\n{len(frame.covers)} cover edges\n")
print(hasse_dot(frame))

space = smashing_spectrum(frame)
print("points:", ", ".join(f"{p} ({frame.label(p)})" for p in space.points))
for p, q in space.arrows:
    print(f"  {frame.label(p)} ~> {frame.label(q)}")
