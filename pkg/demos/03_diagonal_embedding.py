"""
Diagonal embedding and flattening
=================================

Any pseudo-Boolean function lifts to a diagonal 2^n x 2^n matrix whose entry
at |I><I| is f(I).  Moebius inversion over the subset lattice recovers the
multilinear polynomial.  Index I reads the input with x1 as the most
significant bit.
"""
import numpy as np

from sympbf import MultilinearPBF, embed_diagonal, flatten, make_delta

delta = make_delta(3)
d = embed_diagonal(delta)
print("diag(H) :", [int(v) for v in d.diag])
print("trace   :", np.trace(d.matrix()))
print("flatten :", flatten(d))

# a non-symmetric function round-trips just as well
f = MultilinearPBF.from_subsets(3, {(): "1/2", (1, 3): -2, (2,): 5})
assert flatten(embed_diagonal(f)) == f
print("f       :", f)
print("diag(f) :", [str(v) for v in embed_diagonal(f).diag])
