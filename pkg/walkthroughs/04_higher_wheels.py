"""From G3 to G5 by two uncontractions, filtered by the higher-wheel checklist."""
from hadwigerlab.families import contraction_pairs_to, g3, verify_higher_wheel
from hadwigerlab.graphcore import to_graph6
from hadwigerlab.hunt import expand_by_uncontraction, identify_higher_wheels

lower = g3()
print("one-step expansions of G3:", len(expand_by_uncontraction(lower)))
found = identify_higher_wheels(5, lower=lower)
print("G5 candidates:", len(found))
for g in found:
    r = verify_higher_wheel(g, 5, lower=lower)
    e, f = contraction_pairs_to(g, lower)
    print(f"  {to_graph6(g)}  m={g.m}  passed={r.passed}  contract {e} then {f}")
