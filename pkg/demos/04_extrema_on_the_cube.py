"""
Extrema of the multilinear extension
====================================

On [0,1]^n the multilinear extension of a pseudo-Boolean function never
leaves the range of its Boolean values.  Sample random points and compare.
"""
import numpy as np

from sympbf import MultilinearPBF, brute_extrema, eval_real

rng = np.random.default_rng(4)
n = 6
terms = {int(m): int(c) for m, c in zip(rng.integers(0, 1 << n, 15), rng.integers(-9, 10, 15))}
f = MultilinearPBF(n, terms)
lo, hi = brute_extrema(f)

samples = np.array([eval_real(f, r) for r in rng.random((2000, n))])
print(f"Boolean range   : [{lo}, {hi}]")
print(f"sampled range   : [{samples.min():.4f}, {samples.max():.4f}]")
print("inside bounds   :", bool(np.all((samples >= float(lo) - 1e-9) & (samples <= float(hi) + 1e-9))))
