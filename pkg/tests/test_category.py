from __future__ import annotations

from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surfkirby.algebra import CycloNumber
from surfkirby.category import (FROBENIUS_CORE, CategoryError, CategoryParams, ConditionError,
                                GradedMap, GradedObject, braiding, cap_scalar, cup_scalar,
                                frobenius_data, geometric_cup_scalar, group_algebra, kirby_object,
                                module_data, pairing_maps, regular_module, simple_object,
                                swim_check, tensor_object, transparent_degrees, twist,
                                unit_algebra, unit_module, verify_frobenius, verify_module)

P = CategoryParams(6, 1, 2)


@st.composite
def params(draw):
    N = draw(st.integers(2, 9))
    return CategoryParams(N, draw(st.integers(0, N - 1)), draw(st.integers(1, N)))


@st.composite
def small_object(draw, p):
    degs = draw(st.lists(st.integers(0, p.N - 1), min_size=1, max_size=3))
    return GradedObject.make(p.N, [(x, f"e{i}") for i, x in enumerate(degs)])


@st.composite
def params_and_objects(draw, count):
    p = draw(params())
    return (p, *[draw(small_object(p)) for _ in range(count)])


# braiding and twist ----------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(params_and_objects(3))
def test_hexagon(data):
    p, X, Y, Z = data
    YZ = tensor_object(p, Y, Z)
    idY = GradedMap.identity(p, (Y,))
    idZ = GradedMap.identity(p, (Z,))
    lhs = braiding(p, X, YZ).flatten()
    rhs = (idY.tensor(braiding(p, X, Z)) @ braiding(p, X, Y).tensor(idZ)).flatten()
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(params_and_objects(3))
def test_yang_baxter(data):
    p, X, Y, Z = data

    def i(o):
        return GradedMap.identity(p, (o,))

    lhs = (braiding(p, Y, Z).tensor(i(X)) @ i(Y).tensor(braiding(p, X, Z))
           @ braiding(p, X, Y).tensor(i(Z)))
    rhs = (i(Z).tensor(braiding(p, X, Y)) @ braiding(p, X, Z).tensor(i(Y))
           @ i(X).tensor(braiding(p, Y, Z)))
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(params_and_objects(2))
def test_braiding_inverse(data):
    p, X, Y = data
    assert braiding(p, Y, X, -1) @ braiding(p, X, Y, +1) == GradedMap.identity(p, (X, Y))


@settings(max_examples=60, deadline=None)
@given(params_and_objects(2))
def test_ribbon_balance(data):
    p, X, Y = data
    lhs = twist(p, tensor_object(p, X, Y))
    rhs = (braiding(p, Y, X) @ braiding(p, X, Y) @ twist(p, X).tensor(twist(p, Y))).flatten()
    assert lhs == rhs
    assert twist(p, X.dual(p.N)) == GradedMap(p, (X.dual(p.N),), (X.dual(p.N),),
                                              {k: v for k, v in twist(p, X).entries.items()})


@settings(max_examples=40, deadline=None)
@given(params_and_objects(1))
def test_zigzag_identities(data):
    p, X = data
    pr = pairing_maps(p, X)
    Xs = X.dual(p.N)
    idX, idXs = GradedMap.identity(p, (X,)), GradedMap.identity(p, (Xs,))
    assert idX.tensor(pr.ev) @ pr.coev.tensor(idX) == idX
    assert pr.ev.tensor(idXs) @ idXs.tensor(pr.coev) == idXs
    assert pr.ev_left.tensor(idX) @ idX.tensor(pr.coev_left) == idX
    assert idXs.tensor(pr.ev_left) @ pr.coev_left.tensor(idXs) == idXs


def test_quantum_dimensions_are_one():
    for X in (kirby_object(P, "full"), simple_object(P, 3)):
        pr = pairing_maps(P, X)
        assert (pr.ev_left @ pr.coev).scalar_value() == X.dim
        assert (pr.ev @ pr.coev_left).scalar_value() == X.dim


def test_maps_must_preserve_degree():
    X, Y = simple_object(P, 1), simple_object(P, 2)
    with pytest.raises(CategoryError):
        GradedMap(P, (X,), (Y,), {(0,): {(0,): P.one()}})


def test_composition_checks_boundaries():
    X, Y = simple_object(P, 1), simple_object(P, 2)
    with pytest.raises(CategoryError):
        GradedMap.identity(P, (X,)) @ GradedMap.identity(P, (Y,))


@pytest.mark.parametrize("N,t,d,full,sub", [
    (6, 1, 2, (0, 3), (0, 3)),
    (6, 1, 3, (0, 3), tuple(range(6))),
    (4, 1, 2, (0, 2), (0, 1, 2, 3)),
    (5, 1, 1, (0,), (0,)),
    (8, 2, 4, (0, 2, 4, 6), tuple(range(8))),
])
def test_transparent_degrees(N, t, d, full, sub):
    p = CategoryParams(N, t, d)
    assert transparent_degrees(p, "full") == full
    assert transparent_degrees(p, "sub") == sub


def test_kirby_objects():
    assert kirby_object(P, "full").degrees == (0, 1, 2, 3, 4, 5)
    assert kirby_object(P, "sub").degrees == (0, 2, 4)
    with pytest.raises(CategoryError):
        kirby_object(P, "other")


# Frobenius algebra and module ------------------------------------------------------

def test_default_data_passes_axioms():
    frob = frobenius_data(P, 2)
    mod = module_data(P, frob, 1)
    fr = verify_frobenius(frob)
    assert all(fr[k] for k in FROBENIUS_CORE)
    assert all(verify_module(frob, mod).values())
    assert frob.F.degrees == (0, 2, 4, 0)
    assert mod.M.degrees == (3, 1)


def test_symmetry_candidates():
    fr = verify_frobenius(frobenius_data(P, 2))
    # the trace form is swap-symmetric, but E12 (x) E21 picks up zeta^(c * -c) = zeta^2
    assert fr["symmetric_swap"] is True
    assert fr["symmetric_braiding"] is False


@st.composite
def frob_params(draw):
    N = draw(st.integers(2, 12))
    d = draw(st.sampled_from([k for k in range(1, N) if N % k == 0 and k < N] or [1]))
    p = CategoryParams(N, draw(st.integers(0, N - 1)), d)
    c = draw(st.sampled_from([h for h in p.subgroup if h]))
    others = [x for x in p.group if not p.in_subgroup(x)]
    g = draw(st.sampled_from(others)) if others else None
    return p, c, g


@settings(max_examples=40, deadline=None)
@given(frob_params())
def test_matrix_algebra_axioms_for_any_parameters(data):
    p, c, g = data
    frob = frobenius_data(p, c)
    fr = verify_frobenius(frob)
    assert all(fr[k] for k in FROBENIUS_CORE)
    if g is not None:
        mod = module_data(p, frob, g)
        assert all(verify_module(frob, mod).values())
        assert cap_scalar(frob, mod) == 2
        assert cup_scalar(frob, mod) == 2
        assert swim_check(p, frob, mod)["image_degrees"] == [0]


@pytest.mark.parametrize("build", [unit_algebra, group_algebra])
def test_harness_algebras(build):
    frob = build(P)
    fr = verify_frobenius(frob)
    assert all(fr[k] for k in FROBENIUS_CORE)


def test_harness_modules():
    u = unit_algebra(P)
    mod = unit_module(P, u, 1)
    assert all(verify_module(u, mod).values())
    assert cap_scalar(u, mod) == 1
    g = group_algebra(P)
    reg = regular_module(P, g, 1)
    assert all(verify_module(g, reg).values())
    assert cap_scalar(g, reg) == 3


def test_regular_module_fails_the_swim_condition():
    g = group_algebra(P)
    sw = swim_check(P, g, regular_module(P, g, 1))
    assert sw["image_degrees"] == [0, 2, 4]
    assert not sw["b_transparent"]


def _perturb(m: GradedMap, i, o, delta: CycloNumber) -> GradedMap:
    entries = {k: dict(v) for k, v in m.entries.items()}
    entries.setdefault(i, {})[o] = entries.get(i, {}).get(o, P.zero()) + delta
    return GradedMap(m.params, m.domain, m.codomain, entries)


def test_mutated_multiplication_is_detected():
    frob = frobenius_data(P, 2)
    bad = replace(frob, mu=_perturb(frob.mu, (0, 0), (0,), P.one()))
    fr = verify_frobenius(bad)
    assert not (fr["associativity"] and fr["left_unit"] and fr["frobenius_left"])


def test_mutated_action_is_detected():
    frob = frobenius_data(P, 2)
    mod = module_data(P, frob, 1)
    bad = replace(mod, action=_perturb(mod.action, (0, 0), (0,), P.one()))
    rep = verify_module(frob, bad)
    assert not all(rep.values())


def test_mutated_coaction_breaks_cap_condition():
    frob = frobenius_data(P, 2)
    mod = module_data(P, frob, 1)
    bad = replace(mod, coaction=mod.coaction.scale(P.zeta(1)).__add__(mod.coaction))
    assert not verify_module(frob, bad)["coaction_is_induced"]
    twisted = replace(mod, coaction=_perturb(mod.coaction, (0,), (0, 0), P.one()))
    with pytest.raises(ConditionError):
        cap_scalar(frob, twisted)


def test_scalars():
    frob = frobenius_data(P, 2)
    mod = module_data(P, frob, 1)
    assert cap_scalar(frob, mod) == 2
    assert cup_scalar(frob, mod) == 2
    assert geometric_cup_scalar(frob, mod) == 1


def test_parameter_validation():
    with pytest.raises(CategoryError):
        frobenius_data(P, 1)           # not in H
    with pytest.raises(CategoryError):
        frobenius_data(P, 0)           # trivial off-diagonal degree
    with pytest.raises(CategoryError):
        module_data(P, frobenius_data(P, 2), 2)   # g inside H
    with pytest.raises(CategoryError):
        CategoryParams(0)
