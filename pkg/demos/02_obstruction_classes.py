"""Divisor classes that explain why a curve class fails.

Each excluded triple in case II comes with explicit classes E = xH + yC in
the lattice with Gram matrix [[2n, d], [d, 2(g-1)]].
"""
from k3curves import (
    C,
    DivisorClass,
    GramLattice,
    H,
    c_obstructions,
    cubics_needed,
    h_very_ample,
    pair,
    reflect,
    self_int,
    solve_vs_H,
)
from k3curves.oracle import brute_solve

# %% H fails to be very ample
for triple in [(3, 7, 5), (3, 4, 2), (5, 5, 2)]:
    L = GramLattice(*triple)
    print(triple, "gram", L.gram, "lam", L.lam)
    for rep in h_very_ample(L).reports:
        print("   ", rep.criterion.value, rep.sorted_witnesses())

# %% C fails to be nef or base point free
for triple in [(2, 5, 3), (6, 5, 2)]:
    L = GramLattice(*triple)
    for rep in sorted(c_obstructions(L), key=lambda r: r.criterion.value):
        print(triple, rep.criterion.value, rep.sorted_witnesses())

# %% Closed form against enumeration in a box
L = GramLattice(5, 5, 2)
print("\n(-2)-classes orthogonal to H:", sorted(solve_vs_H(L, -2, 0)))
print("same by enumeration in |x|,|y| <= 20:", sorted(brute_solve(L, -2, 0, "H", 20, 20)))

# %% A degree-3 isotropic class forces cubics into the ideal
print("\ncubic-forcing classes on (5,3,1):", sorted(cubics_needed(GramLattice(5, 3, 1))))

# %% Reflection in the (-2)-class C - H swaps H and C when d = 2n + 1, g = n + 1
L = GramLattice(2, 5, 3)
G = DivisorClass(-1, 1)
print("\nG^2 =", self_int(L, G), " G.C =", pair(L, G, C), " reflect(H) =", tuple(reflect(L, H, G)))
