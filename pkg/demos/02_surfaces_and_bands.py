"""
Surfaces as banded unlinks
==========================

A surface is drawn as an unlink of module-colored circles joined by bands.
Bands carry the Frobenius algebra; each band foot is an action or coaction on
the module.  This walk-through shows where every factor of the normalization
comes from.
"""
from __future__ import annotations

from surfkirby import (CategoryParams, cap_scalar, cup_scalar, frobenius_data, invariant,
                       module_data, swim_check, verify_frobenius, verify_module)
from surfkirby.category import geometric_cup_scalar
from surfkirby.fixtures import get

P = CategoryParams(6, 1, 2)
frob = frobenius_data(P, 2)
mod = module_data(P, frob, 1)

# %% The algebraic data ------------------------------------------------------------
# A 2x2 matrix algebra whose off-diagonal units sit in degrees +-2, acting on
# column vectors of degrees (3, 1).
print("F degrees:", frob.F.degrees, " M degrees:", mod.M.degrees)
print("Frobenius axioms:", all(v for k, v in verify_frobenius(frob).items() if "symmetric" not in k))
print("module axioms   :", all(verify_module(frob, mod).values()))
print("k = m.delta      :", cap_scalar(frob, mod))
print("kappa            :", cup_scalar(frob, mod))
print("one new circle   :", geometric_cup_scalar(frob, mod))
print("swim image       :", swim_check(P, frob, mod))

# %% Unlinks of spheres ---------------------------------------------------------------
# Each circle contributes the dimension of M.
for n in (1, 2, 3):
    print(f"{n} sphere(s):", invariant(get(f"unknot_sf_{n}").diagram()).value)

# %% The torus -------------------------------------------------------------------------
# Two self-bands on one circle with interleaved feet.  The raw value is 2 and
# each self-band divides by k = 2, so the torus gets 1/2.
t = invariant(get("torus").diagram())
print("\ntorus: raw", t.raw, " s =", t.s, " omega =", t.omega, " value", t.value)

# %% A knotted band ------------------------------------------------------------------
# Two disks joined by a band whose core is tied in a trefoil.  In this pointed
# category, a band crossing itself only contributes third roots of unity, and
# they cancel; the knotting is invisible.
st = invariant(get("spun_trefoil").diagram())
print("spun trefoil: raw", st.raw, " omega =", st.omega, " value", st.value)
