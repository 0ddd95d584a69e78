"""
Delta and XOR: three ways to write the same symmetric function
==============================================================

The Kronecker delta on three bits is 1 on 000 and 111 and 0 elsewhere.  It is
symmetric, so it depends only on the Hamming weight w = x1 + x2 + x3, and can
be written as a polynomial in w and then factored over its roots.
"""
from sympbf import (c_from_a, hamming_profile, kernel_report, make_delta, make_xor,
                    to_symmetric, to_univariate)

delta = make_delta(3)
print("multilinear form :", delta)

# coefficients of the elementary symmetric sums e_0..e_3
a = to_symmetric(delta)
print("a                :", [str(v) for v in a.a])
print("value by weight  :", [str(v) for v in hamming_profile(a).values])

# the Stirling change of basis gives the polynomial in w
c = c_from_a(a)
print("Q(w)             :", to_univariate(c))

fact, kernel = kernel_report(c)
print("K, roots         :", fact.K, [str(r) for r in fact.exact_roots])
print("kernel           :", kernel.hyperplanes, "->", kernel.kernel_size, "points")

# %%
# XOR has a root at 5/2, which no Boolean input can reach.
xor = make_xor(3)
c = c_from_a(to_symmetric(xor))
fact, kernel = kernel_report(c)
print()
print("XOR Q(w)         :", to_univariate(c))
print("roots            :", [str(r) for r in fact.exact_roots])
print("fractional roots :", [str(r) for r in kernel.fractional_roots])
print("kernel size      :", kernel.kernel_size)
