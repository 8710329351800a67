"""Self-conjugate boards, symmetric full placements, and board containment.

Run: python3 demos/02_boards_and_placements.py
"""
from invpat import (
    enumerate_self_conjugate_shapes,
    enumerate_symmetric_full_placements,
    graph_of,
    lambda_sym,
    placement_contains,
)
from invpat.boards import placement_to_text, shape_to_text

print("self-conjugate shapes with first part <= 3:")
for shape in sorted(enumerate_self_conjugate_shapes(3)):
    print(" ", shape_to_text(shape))

print("\nsymmetric full placements on (3,3,2):")
for p in enumerate_symmetric_full_placements((3, 3, 2)):
    print(" ", placement_to_text(p))

print("\nboard containment needs a bounding rectangle inside the shape:")
p = graph_of((3, 2, 1))
print("  graph of 321 on the square contains 321:", placement_contains(p, (3, 2, 1)))
from invpat.boards import make_placement

q = make_placement((3, 3, 2), [(1, 3), (2, 2), (3, 1)])
print("  the same dots on (3,3,2) do not:", placement_contains(q, (3, 2, 1)))

print("\nsymmetric avoider counts on boards (the increasing and decreasing")
print("patterns agree on every self-conjugate board):")
for shape in [(3, 3, 3), (4, 4, 4, 4), (4, 4, 2, 2), (5, 5, 5, 3, 3)]:
    a = lambda_sym(shape, ["123"])
    b = lambda_sym(shape, ["321"])
    print(f"  {shape_to_text(shape)}: avoid 123 -> {a}, avoid 321 -> {b}")
