#!/usr/bin/env python3
"""Discord bounds for general two-mode Werner states (mu > 0).

Away from mu = 0 the global optimization is out of reach, but photon
counting gives an upper bound U that coincides with the measurement-
induced disturbance, and concavity gives a lower bound L.  On the
lam = mu^4 slice the state crosses three separability regions as p grows.
"""

import numpy as np

from cvwerner import bounds
from cvwerner.states import WernerParams, choose_cutoff

print("slice lam = mu = 0.8")
print("     p      U          L (clipped)   MID - U")
for p in np.linspace(0.05, 0.95, 7):
    rep = bounds.bounds_report(WernerParams(p, 0.8, 0.8))
    print(
        f"  {p:5.2f}  {rep.upper:9.6f}  {max(rep.lower, 0.0):11.6f}  "
        f"{abs(rep.mid - rep.upper):10.2e}"
    )

mu = 0.8
print(f"\nslice lam = mu^4, mu = {mu}:")
print(f"  separability threshold   p_sep = {bounds.p_separable(mu):.6f}")
print(f"  PPT threshold            p_ppt = {bounds.p_ppt(mu):.6f}")
for p in (0.05, 0.15, 0.5):
    rep = bounds.bounds_report(WernerParams(p, mu**4, mu))
    print(f"  p = {p:5.2f}: U = {rep.upper:.6f}, region = {rep.region}")

print("\nevery Werner state with p > 0 and 0 < lam < 1 has positive discord:")
for p, lam in ((0.0, 0.5), (0.3, 0.0), (0.3, 0.7)):
    print(f"  p = {p}, lam = {lam}: witness -> {bounds.discord_is_positive(p, lam)}")
