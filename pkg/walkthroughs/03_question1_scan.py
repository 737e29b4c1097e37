"""Which small 4-critical graphs are free-Hadwiger, and which of those are free-planar?

Runs in about half a minute for n <= 9.
"""
import sys

from hadwigerlab.hunt import question1_scan

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 9
r = question1_scan(n_max)
print(f"4-critical graphs with n <= {n_max}: {sum(r.counts.values())}  ({r.wall_ms} ms)")
for cls, label in [("i", "free-Hadwiger and free-planar"), ("ii", "free-Hadwiger, not free-planar"),
                   ("iii", "not free-Hadwiger")]:
    print(f"class {cls:<3} {label}: {r.counts[cls]}")
    for s in r.classes[cls]:
        extra = r.notes["tags"].get(s) or r.notes["violating_pattern"].get(s)
        print(f"    {s:<10} {extra}")
print(r.notes["statement"])
