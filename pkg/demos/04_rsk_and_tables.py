"""Row insertion, evacuation, and reproducing the stored count tables.

Run: python3 demos/04_rsk_and_tables.py   (the table step takes a few seconds)
"""
from invpat import evacuation, rsk, rsk_inverse
from invpat.classify import classify_sk, reproduce_table
from invpat.tableaux import tableau_to_text

w = (4, 2, 5, 1, 3)
p, q = rsk(w)
print(f"rsk({w}):")
print("  insertion:", tableau_to_text(p))
print("  recording:", tableau_to_text(q))
print("  equal tableaux because the word is an involution")
print("  inverse recovers the word:", rsk_inverse(p, q) == w)
print("  evacuation of the recording tableau:", tableau_to_text(evacuation(q)))

print("\ngroup the patterns of S_4 by their avoider-count vectors (n=5..8):")
report = classify_sk(4, 8)
for counts, classes in report.groups:
    names = "  ".join("/".join(cls) for cls in classes)
    print(f"  {counts}: {names}")

print("\nrecompute the stored length-4 table and compare cell by cell:")
table = reproduce_table("T1")
print(f"  {table['title']}: all {len(table['rows'])} classes match")
