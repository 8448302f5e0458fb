"""Non-specialty of O_C(k) and the brute-force consistency sweeps."""
import numpy as np

from k3curves import nonspecial, nonspecial_lattice_equiv
from k3curves.oracle import sweep_solver, sweep_theorem

# %% Where is O_C(1) special on a quartic? ('s' special)
n, k = 2, 1
print("quartic, k=1; rows d, columns g")
for d in range(1, 16):
    print(f"d={d:2d} " + "".join("." if nonspecial(n, d, g, k, warn=False) else "s" for g in range(0, 40)))

# %% The inequality and the lattice condition on C - kH agree on whole arrays
d = np.arange(1, 101)[:, None]
g = np.arange(0, 201)[None, :]
print("\nagree for n=3, k=2:", bool(np.all(nonspecial(3, d, g, 2) == nonspecial_lattice_equiv(3, d, g, 2))))

# %% Sweeps over a small box
for rep in (sweep_solver(6, 20), sweep_theorem(6, 20)):
    print(rep.summary())
