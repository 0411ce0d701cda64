"""From a crossing list to the Alexander polynomial and its h-series.

Run:  python demos/alexander_series.py
"""

from pathlib import Path

from knotweights.alexander import (alexander_by_skein, alexander_poly,
                                   conway_skein)
from knotweights.pd import parse_pd
from knotweights.series import (PowerSeries, conway_series, exp_substitute,
                                zbcr_series)

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

# Two independent computations back every polynomial: the knot-group
# presentation matrix and the two-term crossing recursion.
print("knot     Delta(t)                             nabla(z)")
for name in ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_1"]:
    pd = parse_pd((FIXTURES / f"{name}.pd").read_text())
    delta = alexander_poly(pd)
    assert delta == alexander_by_skein(pd)
    print(f"{name:7s}  {str(delta):36s} {conway_skein(pd)}")

# Substituting t = e^h turns the polynomial into an even power series with
# constant term 1; minus its log carries one rational per even degree.
print()
pd = parse_pd((FIXTURES / "3_1.pd").read_text())
delta = alexander_poly(pd)
print("trefoil Delta(e^h) =", exp_substitute(delta, 6))
z = zbcr_series(delta, 6)
for k in sorted(z):
    print(f"  Z_{k} = {z[k]}")

# Exponentiating back recovers the series coefficients exactly.
minus = PowerSeries(6, [0, 0] + [-z[k] for k in range(2, 7)])
c = conway_series(delta, 6)
print("exp(-sum Z_k h^k) coefficients:", [minus.exp()[k] for k in range(7)])
print("Delta(e^h) coefficients:      ", [c[k] for k in range(7)])
