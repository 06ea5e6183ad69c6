"""Sum rules over l at fixed n, in exact pi-graded arithmetic.

Two rules constrain the whole l-family at once:

    sum_l (2l+1)        <hk/P>_nl = 16 n^2/(3 pi)
    sum_l (2l+1) (-1)^l <hk/P>_nl = (n/pi)[4n/(4n^2-1)
                                     + psi(n/2+3/4) - psi(n/2+1/4)
                                     + (-1)^(n-1) pi]

Both are verified exactly here.  The alternating rule is a magnet for
misprints: the variant with digamma arguments n + 3/4 and n + 1/4 (instead
of the half arguments) fails already at n = 1, and this script shows the
failure explicitly next to the correct reduction.
"""

from fractions import Fraction

from hydromom.exact import format_exact
from hydromom.sumrules import (
    alternating_rhs_misprinted,
    sum_rule_alternating,
    sum_rule_even,
    u_integral,
    u_integral_recurrence,
)

print("=" * 72)
print("plain sum rule: sum (2l+1) <hk/P> = 16 n^2/(3 pi)")
print("=" * 72)
for n in (1, 2, 3, 5, 10, 20, 30):
    lhs, rhs = sum_rule_even(n)
    status = "exact match" if lhs == rhs else "MISMATCH"
    print(f"  n={n:>2}:  lhs = {format_exact(lhs):>22}   rhs = {format_exact(rhs):>22}   {status}")

print("\nalternating sum rule (half-argument digammas):")
for n in (1, 2, 3, 7, 15, 30):
    lhs, rhs = sum_rule_alternating(n)
    status = "exact match" if lhs == rhs else "MISMATCH"
    print(f"  n={n:>2}:  lhs = {format_exact(lhs):>22}   {status}")

print("\nthe right side rests on J_m = integral over (-1,1) of U_m(2x^2-1):")
for m in (-1, 0, 1, 2, 3, 6):
    q, c = u_integral(m)
    assert c == 0 and q == u_integral_recurrence(m)
    print(f"  J_{m:<2} = {q}   (digamma reduction and recurrence agree; pi part cancels)")

print("\nmisprinted variant with full arguments psi(n+3/4), psi(n+1/4):")
for n in (1, 2):
    inv_pi_part, plain_part = alternating_rhs_misprinted(n)
    true_lhs = sum_rule_alternating(n)[0]
    value = inv_pi_part.to_float() + plain_part.to_float()
    print(
        f"  n={n}: variant = {format_exact(inv_pi_part)} + {format_exact(plain_part)}"
        f" = {value:.6f}   vs exact {true_lhs.to_float():.6f}   REFUTED"
    )
print("\n(at n=1 the variant reads 2 - 4/(3 pi); the lone state pins 16/(3 pi))")
