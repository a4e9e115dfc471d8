"""Cost sweep over a triplet file, written as CSV.

Pass a SocioPatterns-style file (``time u v [extra columns]``) as the first
argument; without one, a synthetic 20-second contact grid is generated.

    python demos/03_sweep_triplet_file.py thiers_2012.csv sweep.csv
"""
import sys

import numpy as np

import tnetcost as tc

if len(sys.argv) > 1:
    ls = tc.parse_triplets(sys.argv[1])
else:
    # conversations of random length between 30 people, sampled every 20s
    rng = np.random.default_rng(3)
    raw = []
    for _ in range(400):
        a, b = rng.choice(30, size=2, replace=False)
        start = int(rng.integers(0, 2000))
        for k in range(int(rng.geometric(0.2))):
            raw.append((20 * (start + k), f"p{a}", f"p{b}"))
    ls = tc.canonicalize(raw)

s = tc.stats(ls)
print(f"n={s.n} m={s.m} e={s.e} t={s.t} e/t={s.e_per_t:.2f} e/m={s.e_per_m:.2f}", file=sys.stderr)

rows = tc.run_sweep(ls)
out = open(sys.argv[2], "w") if len(sys.argv) > 2 else sys.stdout
tc.write_sweep_csv(rows, out)
