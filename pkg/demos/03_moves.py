"""
Checking invariance by moving diagrams around
=============================================

Moves rewrite a diagram into another diagram of the same surface in the same
4-manifold.  The invariant should not notice.
"""
from __future__ import annotations

from surfkirby import MoveSpec, apply_move, check_invariance, fuzz, invariant, serialize
from surfkirby.fixtures import get

# %% A single handle slide -----------------------------------------------------------------
d = get("hopf_stab").diagram()
slid = apply_move(d, MoveSpec.make("handle_slide", 1, 2, over=0))
print(serialize(slid))
print("same invariant:", check_invariance(d, slid).equal)

# %% Stabilization -----------------------------------------------------------------------
# Adding a split 0-framed unknot, or a dotted circle with a 0-framed meridian,
# multiplies the raw value by 3 or by 6 and the normalization absorbs it.
s2xc = get("s2xc").diagram()
for kind in ("stabilize_blank", "stabilize_hopf"):
    bigger = apply_move(s2xc, MoveSpec.make(kind, 0, 0))
    rep = invariant(bigger)
    print(f"{kind:16s} raw {str(rep.raw):4s} value {rep.value}")

# %% Random move sequences ------------------------------------------------------------------
for name in ("cp2", "torus", "s2xc"):
    d = get(name).diagram()
    for seed in range(3):
        res = fuzz(d, seed=seed, steps=8)
        moves = [t["move"]["kind"] for t in res.trace if t["move"]]
        ok = check_invariance(d, res.diagram).equal
        print(f"{name:6s} seed {seed}: {'ok ' if ok else 'BAD'} {', '.join(moves)}")
