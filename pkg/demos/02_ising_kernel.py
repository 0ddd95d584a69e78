"""
Kernel of the symmetric Ising model
===================================

H(x) = (J/2) sum_{l<m} x_l x_m + h sum_l x_l factors as
(J/4) (w + 4h/J - 1) w.  Level w = 0 is always in the kernel; the second level
1 - 4h/J contributes Boolean points only when h/J = k/4 for an integer k in
[1 - n, 1].
"""
from fractions import Fraction

from sympbf import (IsingParams, brute_kernel_size, c_from_a, ising_kernel_condition,
                    kernel_report, make_ising, to_symmetric)

n, J = 6, Fraction(1)
print(f"{'h/J':>8} {'k':>4} {'levels':>10} {'kernel':>7} {'brute':>6}")
for h in [Fraction(k, 4) for k in range(-(n - 1), 2)] + [Fraction(1, 3), Fraction(-3, 5)]:
    p = IsingParams(n, J, h)
    f = make_ising(p)
    fact, kernel = kernel_report(c_from_a(to_symmetric(f)))
    k = ising_kernel_condition(p)
    print(f"{str(h / J):>8} {str(k[0]) if k else '-':>4} {str(list(kernel.boolean_roots)):>10} "
          f"{kernel.kernel_size:>7} {brute_kernel_size(f):>6}")
