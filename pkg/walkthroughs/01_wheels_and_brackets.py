"""Odd wheels: criticality, free classes and minor brackets.

    python walkthroughs/01_wheels_and_brackets.py
"""
from hadwigerlab.colorcrit import chi, is_k_critical
from hadwigerlab.families import wheel
from hadwigerlab.minorlab import BIPARTITE_CHAIN, CLIQUE_CHAIN, is_free_hadwiger, is_free_planar, minor_bracket

print(f"{'i':>2} {'chi':>3} {'critical':>8} {'free-planar':>11} {'free-H(4)':>9}  brackets")
for i in range(3, 10):
    w = wheel(i)
    crit = is_k_critical(w, 4).critical
    row = f"{i:>2} {chi(w):>3} {str(crit):>8} {str(is_free_planar(w).verdict):>11} {str(is_free_hadwiger(w, 4).verdict):>9}"
    if i >= 5:
        row += f"  <{minor_bracket(w, CLIQUE_CHAIN)}> <{minor_bracket(w, BIPARTITE_CHAIN)}>"
    print(row)
