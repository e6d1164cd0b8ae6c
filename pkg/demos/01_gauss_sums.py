"""
Closed 4-manifolds from 2-handles: CP2 and spheres inside it
=============================================================

A framed unknot colored by the Kirby object evaluates to a quadratic Gauss
sum.  Everything below is exact arithmetic in Q(zeta_6); floats are only for
display.
"""
from __future__ import annotations

import math

from surfkirby import eval_closed, invariant
from surfkirby.fixtures import get

# %% The (-1)-framed unknot ------------------------------------------------------
# The diagram is a single 2-handle curve with one negative curl.
cp2 = get("cp2")
print(cp2.text)

raw = eval_closed(cp2.diagram())
print("raw evaluation :", raw, "~", raw.float_str())
print("sqrt(3) i      :", f"{math.sqrt(3):.9f}i")

# %% Normalization ------------------------------------------------------------------
# The linking matrix is [[-1]]: one negative eigenvalue and nothing to divide by.
rep = invariant(cp2.diagram())
print("inertia        :", rep.inertia.as_tuple())
print("denominator    :", rep.denominator)
print("invariant      :", rep.value)

# %% The mirror --------------------------------------------------------------------
# Flipping the curl conjugates every phase, so the raw value is conjugated.
bar = invariant(get("cp2_bar").diagram(), fixture_name="cp2_bar")
print("mirror raw     :", bar.raw, "=", "conj" if bar.raw == raw.conj() else "??")
print("mirror value   :", bar.value, "(b+ = 1 divides by Delta_C * Delta'' = 6)")
for w in bar.warnings:
    print("  note:", w)

# %% Spheres in the classes nE --------------------------------------------------------
# A surface circle linked n times with the (-1)-framed curve.  The module
# splits into two degrees, so the value is a sum of two shifted Gauss sums and
# depends only on n mod 3.
print("\n n   raw                      float")
for n in range(6):
    x = eval_closed(get(f"nE_{n}").diagram())
    print(f" {n}   {str(x):24s} {x.float_str()}")
