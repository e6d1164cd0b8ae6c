"""Acceptance criteria, one check per criterion.

Run under pytest for the usual report (a PASS/FAIL line per criterion is added
to the terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import cmath
import math
import random
import sys
import time
from typing import Callable

import numpy as np
import pytest

from surfkirby import (CategoryParams, CycloNumber, GradedMap, cap_scalar, context_for,
                       cup_scalar, eval_closed, frobenius_data, inertia, invariant, kirby_object,
                       module_data, parse, serialize, statesum_eval, swim_check, verify_frobenius,
                       verify_module)
from surfkirby.category import FROBENIUS_CORE, pairing_maps
from surfkirby.diagram import Cell, I
from surfkirby.fixtures import FIXTURES, GAUSS, GAUSS_SHIFTED, band_free_names, get, random_band_free
from surfkirby.moves import check_invariance, fuzz

P = CategoryParams(6, 1, 2)
SQRT3 = math.sqrt(3)
TOL = 1e-9


def z(k: int) -> CycloNumber:
    return P.zeta(k)


def n(x) -> CycloNumber:
    return CycloNumber.from_int(6, x)


def close(x: CycloNumber, target: complex) -> bool:
    return abs(x.to_complex() - target) < TOL


# criteria -----------------------------------------------------------------------

def c01_cp2_anchor():
    d = get("cp2").diagram()
    raw = eval_closed(d)
    assert raw == n(1) + 2 * z(2)
    assert close(raw, SQRT3 * 1j)
    rep = invariant(d)
    assert rep.denominator == n(1)
    assert rep.value == raw


def c02_mirror():
    assert eval_closed(get("cp2_bar").diagram()) == eval_closed(get("cp2").diagram()).conj()


def c03_nE_family():
    for k in range(6):
        raw = eval_closed(get(f"nE_{k}").diagram())
        if k % 3 == 0:
            assert raw == 2 * (n(1) + 2 * z(2)), k
            assert close(raw, 2 * SQRT3 * 1j)
        else:
            assert raw == (n(1) + 2 * z(2)) + (n(2) - z(1)), k
            assert close(raw, 1.5 + SQRT3 / 2 * 1j)


def c04_s2xc():
    rep = invariant(get("s2xc").diagram())
    assert rep.raw == n(3)
    assert rep.value == n(1)
    assert rep.inertia.b_zero == 1 and rep.delta_B == 3


def c05_surface_anchors():
    assert invariant(get("empty").diagram()).value == n(1)
    for k in (1, 2, 3):
        assert eval_closed(get(f"unknot_sf_{k}").diagram()) == n(2 ** k)
    torus = invariant(get("torus").diagram())
    assert torus.raw == n(2) and torus.value == n(1) / 2
    # contingent on the reconstructed spun trefoil presentation
    assert invariant(get("spun_trefoil").diagram()).value == n(1)


def c06_algebraic_data():
    frob = frobenius_data(P, 2)
    mod = module_data(P, frob, 1)
    fr = verify_frobenius(frob)
    assert all(fr[k] for k in FROBENIUS_CORE), fr
    assert all(verify_module(frob, mod).values())
    assert cap_scalar(frob, mod) == n(2) and cup_scalar(frob, mod) == n(2)
    sw = swim_check(P, frob, mod)
    assert set(sw["image_degrees"]) <= {0} and sw["b_transparent"]


def c07_encirclement():
    for x in range(6):
        expected = n(6) if x in (0, 3) else n(0)
        assert eval_closed(get(f"encircle_{x}").diagram()) == expected, x


def c08_stabilization():
    blank, hopf = get("blank_stab").diagram(), get("hopf_stab").diagram()
    assert eval_closed(hopf) == n(6)
    for name, fx in FIXTURES.items():
        d = fx.diagram()
        base = invariant(d).value
        for stab in (blank, hopf):
            assert invariant(d.side_by_side(stab)).value == base, name


def c09_fuzz():
    seeds = 50
    for i in range(seeds):
        name = ("cp2", "torus", "s2xc")[i % 3]
        d = get(name).diagram()
        res = fuzz(d, seed=i, steps=10)
        assert check_invariance(d, res.diagram).equal, (name, i, res.trace)


def c10_oracle():
    for name in band_free_names():
        d = get(name).diagram()
        assert eval_closed(d) == statesum_eval(d), name
    for seed in range(100):
        d = random_band_free(seed)
        assert eval_closed(d) == statesum_eval(d), seed


def _eigen_signs(m: list[list[int]]) -> tuple[int, int, int]:
    ev = np.linalg.eigvalsh(np.array(m, dtype=float))
    return (int((ev > 1e-8).sum()), int((ev < -1e-8).sum()), int((abs(ev) <= 1e-8).sum()))


def c11_inertia():
    rng = random.Random(11)
    for _ in range(200):
        k = rng.randint(1, 6)
        m = [[0] * k for _ in range(k)]
        for i in range(k):
            for j in range(i, k):
                m[i][j] = m[j][i] = rng.randint(-5, 5)
        assert inertia(m).as_tuple() == _eigen_signs(m), m
    assert inertia([[-1]]).as_tuple() == (0, 1, 0)


def _with_dot(d, r: int, c: int):
    out = d.copy()
    width = len(d.boundaries()[r])
    out.rows.insert(r, [I] * c + [Cell("dot")] + [I] * (width - c - 1))
    return out


def _zigzags(X) -> bool:
    pr = pairing_maps(P, X)
    Xs = X.dual(P.N)
    idX, idXs = GradedMap.identity(P, (X,)), GradedMap.identity(P, (Xs,))
    return all([
        idX.tensor(pr.ev) @ pr.coev.tensor(idX) == idX,
        pr.ev.tensor(idXs) @ idXs.tensor(pr.coev) == idXs,
        pr.ev_left.tensor(idX) @ idX.tensor(pr.coev_left) == idX,
        idXs.tensor(pr.ev_left) @ pr.coev_left.tensor(idXs) == idXs,
    ])


def c12_structural():
    for name, fx in FIXTURES.items():
        d = fx.diagram()
        assert parse(serialize(d)).structurally_equal(d), name
        assert serialize(parse(serialize(d))) == serialize(d), name
    for name in ("cp2", "torus", "s2xc", "hopf_stab", "nE_1"):
        d = get(name).diagram()
        ctx = context_for(d)
        base = eval_closed(d, ctx)
        bounds = d.boundaries()
        for r in range(len(d.rows) + 1):
            for c in range(len(bounds[r])):
                assert eval_closed(_with_dot(d, r, c), ctx) == base, (name, r, c)
    frob = frobenius_data(P, 2)
    mod = module_data(P, frob, 1)
    for X in (kirby_object(P, "full"), kirby_object(P, "sub"), frob.F, mod.M):
        assert _zigzags(X), X


CRITERIA: list[tuple[str, Callable[[], None]]] = [
    ("1 CP2 anchor", c01_cp2_anchor),
    ("2 mirror conjugation", c02_mirror),
    ("3 nE family", c03_nE_family),
    ("4 S2 x C anchor", c04_s2xc),
    ("5 surface anchors", c05_surface_anchors),
    ("6 algebraic data", c06_algebraic_data),
    ("7 encirclement", c07_encirclement),
    ("8 stabilization consistency", c08_stabilization),
    ("9 move invariance fuzz", c09_fuzz),
    ("10 oracle equivalence", c10_oracle),
    ("11 inertia", c11_inertia),
    ("12 structural", c12_structural),
]

# filled while running; read by the terminal-summary hook in conftest.py
RESULTS: dict[str, tuple[bool, float, str]] = {}
TIME_LIMIT = 5.0


def run_criterion(label: str, fn: Callable[[], None]) -> tuple[bool, float, str]:
    t0 = time.perf_counter()
    try:
        fn()
        ok, msg = True, ""
    except AssertionError as exc:
        ok, msg = False, f"assertion failed {exc}".strip()
    dt = time.perf_counter() - t0
    if ok and dt > TIME_LIMIT:
        ok, msg = False, f"took {dt:.2f}s (limit {TIME_LIMIT:.0f}s)"
    RESULTS[label] = (ok, dt, msg)
    return ok, dt, msg


def format_result(label: str, res: tuple[bool, float, str]) -> str:
    ok, dt, msg = res
    line = f"{'PASS' if ok else 'FAIL'}  criterion {label:32s} {dt:6.2f}s"
    return line + (f"  {msg}" if msg else "")


@pytest.mark.parametrize("label,fn", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(label, fn):
    ok, dt, msg = run_criterion(label, fn)
    print(format_result(label, RESULTS[label]))
    assert ok, msg


if __name__ == "__main__":
    t0 = time.perf_counter()
    for label, fn in CRITERIA:
        print(format_result(label, run_criterion(label, fn)), flush=True)
    total = time.perf_counter() - t0
    passed = sum(r[0] for r in RESULTS.values())
    print(f"{passed}/{len(CRITERIA)} criteria passed in {total:.1f}s")
    sys.exit(0 if passed == len(CRITERIA) else 1)
