"""Cutting corners off the 3-cube and the 4-cube.

The 3-cube with one corner cut off is 4-critical and contains K5- as a minor.
For the 4-cube, every way of cutting one to three corners is scanned.
"""
from hadwigerlab.colorcrit import chi, is_k_critical
from hadwigerlab.families import g3
from hadwigerlab.hunt import corner_cut_scan
from hadwigerlab.minorlab import K, K_minus, has_minor

g = g3()
model = has_minor(g, K_minus(5).graph)
print("G3:", g, "chi", chi(g), "critical", is_k_critical(g, 4).critical)
print("  K5- branch sets:", model.branch_sets)
print("  K5 minor:", has_minor(g, K(5).graph) is not None)

report = corner_cut_scan(4, 3)
for s, corners in report.notes["corners"].items():
    print(f"  Q4 minus {corners!s:<12} n={16 - len(corners):>2} chi={report.notes['chi'][s]}")
print("any 5-critical:", report.notes["any_5_critical"], "|", report.notes["verified_range"])
