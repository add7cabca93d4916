"""Dimension one with both primes idempotent.

The frame has five elements, the smashing spectrum three points, and the
Balmer side only two, so the comparison map cannot be injective.

    python demos/dimension_one.py
"""

from smashframe import Frame, RingSpec, balmer_dual, comparison_map, smashing_spectrum, telescope_holds

spec = RingSpec.all_ones(1)
frame = Frame(spec)

print("frame elements (top first):")
for chain in frame:
    print(f"  {str(chain):14} {frame.label(chain)}")

print("\ncovers (lower -> upper):")
for u, v in frame.covers:
    print(f"  {frame.elements[u]} -> {frame.elements[v]}")

space = smashing_spectrum(frame)
print(f"\nsmashing spectrum: {len(space.points)} points")
for p, q in space.arrows:
    print(f"  {p} ~> {q}")
print("closed:", ", ".join(map(str, space.closed_points)))

balmer = balmer_dual(spec)
print(f"\nBalmer side: primes {balmer.points}, {balmer.meta['thick_ideals']} thick ideals")

cmp = comparison_map(space, spec)
for p, b in cmp.assignment.items():
    print(f"  {p} -> [0,{b}]")
print("bijective:", cmp.is_bijective())
print("telescope:", telescope_holds(spec, frame))
