"""Which (degree, genus) pairs occur on a K3 surface of degree 2n?

Run with ``python demos/01_classify_triples.py``.
"""
from k3curves import Mode, classify_triple

# %% A few triples from each case of the classification
for n, d, g in [(2, 5, 0), (2, 5, 3), (5, 3, 1), (4, 4, 1), (9, 6, 2), (4, 4, 2), (2, 2, 5)]:
    r = classify_triple(n, d, g)
    exc = ",".join(r.exception_labels()) or "-"
    print(f"n={n:2d} d={d:2d} g={g:2d}  lam={r.lam:4d}  case={r.case.value:15s} exists={r.exists!s:5s} "
          f"exceptions={exc:16s} quadrics={r.quadrics.value}")

# %% Birational models admit exactly one more family: lam = n with d = n mod 2n
emb = classify_triple(5, 5, 2)
bir = classify_triple(5, 5, 2, Mode.BIRATIONAL)
print(f"\n(5,5,2): embedded exists={emb.exists}, birational exists={bir.exists}, "
      f"birational_only={bir.birational_only}")

# %% The existence region for n = 5 as a character grid (rows d, columns g)
n = 5
print(f"\nn={n}: '#' exists, '.' excluded, ' ' beyond the Hodge bound")
for d in range(1, 21):
    row = ""
    for g in range(0, 31):
        r = classify_triple(n, d, g)
        row += " " if r.lam < 0 else ("#" if r.exists else ".")
    print(f"d={d:2d} {row}")
