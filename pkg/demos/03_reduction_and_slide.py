"""The suffix reduction and the window slide bijection, step by step.

Run: python3 demos/03_reduction_and_slide.py
"""
from invpat import graph_of, slide_transform, suffix_reduction, suffix_set
from invpat.boards import placement_to_text, shape_to_text
from invpat.perms import perm_from_text
from invpat.slide import classify_slide_case, slide_context, slide_inverse

print("reduce the graph of 127965384 by the suffix 54 (prefix length 3):")
p = graph_of(perm_from_text("127965384"))
rb = suffix_reduction((9,) * 9, p, suffix_set(3, [(5, 4)]))
print("  reduced shape:", shape_to_text(rb.shape))
print("  induced placement:", placement_to_text(rb.induced))
print("  columns kept from the parent:", rb.kept_columns)

print("\nslide the window of columns 1..2 one step right on the graph of 1324:")
q = graph_of((1, 3, 2, 4))
ctx = slide_context(q, 1, 2)
print("  case:", classify_slide_case(ctx))
out = slide_transform(q, 1, 2)
print("  before:", placement_to_text(q))
print("  after: ", placement_to_text(out))
print("  round trip ok:", slide_inverse(out, 1, 2) == q)
