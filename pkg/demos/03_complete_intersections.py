"""Curves on quartic surfaces, (2,3) and (2,2,2) complete intersections."""
from k3curves import CiFamily, ci_classify
from k3curves.oracle import ci_closed_form

# %% The small exceptional pairs
for fam, (d, g) in [(CiFamily.QUARTIC_P3, (5, 3)), (CiFamily.TYPE_23_P4, (7, 4)), (CiFamily.TYPE_222_P5, (9, 5))]:
    print(fam.label, (d, g), "exists:", ci_classify(fam, d, g).exists)

# %% Curves cut out by a hypersurface
for fam in CiFamily:
    hits = [(d, g, r.hypersurface_degree) for d in range(1, 25) for g in range(0, 80)
            if (r := ci_classify(fam, d, g)).hypersurface_degree is not None]
    print(fam.label, "complete intersection curves (d, g, hypersurface degree):", hits)

# %% Degree-8 surfaces that need cubics are not (2,2,2) complete intersections
gap = [(d, g) for d in range(1, 40) for g in range(0, 100)
       if (r := ci_classify(CiFamily.TYPE_222_P5, d, g)).classification.exists and not r.exists]
print("\non some degree-8 K3 but on no (2,2,2) complete intersection:", gap)

# %% Agreement with the closed-form lists
agree = all(ci_classify(f, d, g).exists == ci_closed_form(f, d, g)
            for f in CiFamily for d in range(1, 60) for g in range(0, 500))
print("closed form agrees on d < 60, g < 500:", agree)
