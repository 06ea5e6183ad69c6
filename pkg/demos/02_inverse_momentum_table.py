"""The exact inverse-momentum expectation grid, four independent ways.

<2 pi hbar kappa/P> is exactly rational for every bound state.  The grid for
n <= 6 is printed from the compact alternating series, then each entry is
rebuilt through the connection-coefficient series, the closed forms where
they exist, and floating quadrature.

Note the entry at (n=5, l=2): copies of this grid circulate with
299088/24255 there, but the two independent series agree on 299008/24255 and
the n = 5 sum rule (demo 03) closes exactly only with the latter.
"""

from fractions import Fraction

from hydromom import QuantumState
from hydromom.cli import table_grid_csv
from hydromom.invp import (
    inv_p_circular,
    inv_p_near_circular,
    inv_p_series_compact,
    inv_p_series_connection,
    inv_p_swave,
)
from hydromom.quadrature import inv_p_numeric

print("=" * 72)
print("exact <2 pi hbar kappa / P> for n <= 6  (rows l, columns n)")
print("=" * 72)
print(table_grid_csv(6).replace(",", "\t"))

print("route agreement, entry by entry:")
for n in range(1, 7):
    for l in range(n):
        compact = inv_p_series_compact(n, l)
        connection = inv_p_series_connection(n, l)
        assert compact == connection
        closed = None
        if l == 0:
            closed = inv_p_swave(n)
        elif l == n - 1:
            closed = inv_p_circular(n)
        elif l == n - 2:
            closed = inv_p_near_circular(n)
        if closed is not None:
            assert closed == compact
        numeric = inv_p_numeric(QuantumState(n, l)).value
        gap = abs(numeric / compact.to_float() - 1.0)
        tag = "closed+series+quad" if closed else "series+quad"
        print(f"  (n={n}, l={l}): {str(compact.times_two_pi()):>18}   [{tag}, quad rel {gap:.1e}]")

computed = inv_p_series_compact(5, 2).times_two_pi().coefficient
assert computed == Fraction(299008, 24255)
print("\n(5, 2) check: circulating value 299088/24255, computed 299008/24255;")
print("   both series and the n = 5 sum rule agree on the computed one.")
