"""The pointed ribbon category of Z/N-graded vector spaces.

Braiding on homogeneous vectors of degrees a, b is zeta^(t*a*b) times the
swap, the twist on degree a is zeta^(t*a*a), the associator is trivial.
Morphisms are sparse degree-preserving matrices with exact entries.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .algebra import CycloNumber, zeta_pow


class CategoryError(ValueError):
    pass


@dataclass(frozen=True)
class CategoryParams:
    N: int
    t: int = 1
    d: int = 1

    def __post_init__(self):
        if self.N < 1:
            raise CategoryError("N must be positive")
        if self.d < 1:
            raise CategoryError("subgroup generator must be positive")

    @property
    def group(self) -> tuple[int, ...]:
        return tuple(range(self.N))

    @property
    def subgroup(self) -> tuple[int, ...]:
        return tuple(sorted({(k * self.d) % self.N for k in range(self.N)}))

    def zeta(self, k: int) -> CycloNumber:
        return zeta_pow(self.N, k)

    def one(self) -> CycloNumber:
        return CycloNumber.one(self.N)

    def zero(self) -> CycloNumber:
        return CycloNumber.zero(self.N)

    def beta_exp(self, a: int, b: int) -> int:
        return (self.t * a * b) % self.N

    def twist_exp(self, a: int) -> int:
        return (self.t * a * a) % self.N

    def in_subgroup(self, x: int) -> bool:
        return x % self.N in self.subgroup


@dataclass(frozen=True)
class GradedObject:
    basis: tuple[tuple[int, str], ...]
    name: str = ""

    def __post_init__(self):
        labels = [lab for _, lab in self.basis]
        if len(set(labels)) != len(labels):
            raise CategoryError(f"duplicate basis labels in {self.name or labels}")

    @classmethod
    def make(cls, N: int, pairs: Iterable[tuple[int, str]], name: str = "") -> GradedObject:
        return cls(tuple((deg % N, lab) for deg, lab in pairs), name)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(deg for deg, _ in self.basis)

    def dual(self, N: int) -> GradedObject:
        name = self.name[:-1] if self.name.endswith("*") else self.name + "*"
        labels = [lab[:-1] if lab.endswith("*") else lab + "*" for _, lab in self.basis]
        return GradedObject(tuple(((-deg) % N, lab) for (deg, _), lab in zip(self.basis, labels)), name)

    def index(self, label: str) -> int:
        for i, (_, lab) in enumerate(self.basis):
            if lab == label:
                return i
        raise KeyError(label)

    def __repr__(self) -> str:
        return f"GradedObject({self.name}: {list(self.basis)})"


def unit_object() -> GradedObject:
    return GradedObject(((0, "1"),), "I")


def simple_object(params: CategoryParams, x: int) -> GradedObject:
    return GradedObject.make(params.N, [(x, f"k{x % params.N}")], f"k{x % params.N}")


def tensor_object(params: CategoryParams, *objs: GradedObject) -> GradedObject:
    """Flattened tensor product, basis in lexicographic order."""
    basis = []
    for combo in itertools.product(*(o.basis for o in objs)):
        deg = sum(d for d, _ in combo) % params.N
        basis.append((deg, ".".join(lab for _, lab in combo) or "1"))
    return GradedObject(tuple(basis), "(" + "x".join(o.name for o in objs) + ")")


Index = tuple[int, ...]


class GradedMap:
    """Sparse degree-preserving linear map between tensor products.

    ``entries[in_index][out_index]`` is the coefficient taking the basis
    tensor ``in_index`` to ``out_index``.
    """

    def __init__(self, params: CategoryParams, domain: Sequence[GradedObject],
                 codomain: Sequence[GradedObject],
                 entries: Mapping[Index, Mapping[Index, CycloNumber]] | None = None,
                 check: bool = True) -> None:
        self.params = params
        self.domain = tuple(domain)
        self.codomain = tuple(codomain)
        clean: dict[Index, dict[Index, CycloNumber]] = {}
        for i, row in (entries or {}).items():
            out = {o: c for o, c in row.items() if not c.is_zero()}
            if out:
                clean[tuple(i)] = out
        self.entries = clean
        if check:
            self._check_grading()

    def _check_grading(self) -> None:
        N = self.params.N
        for i, row in self.entries.items():
            din = sum(obj.basis[k][0] for obj, k in zip(self.domain, i)) % N
            for o in row:
                dout = sum(obj.basis[k][0] for obj, k in zip(self.codomain, o)) % N
                if din != dout:
                    raise CategoryError(
                        f"map entry {i}->{o} changes degree {din}->{dout}")

    # constructors -----------------------------------------------------
    @classmethod
    def identity(cls, params: CategoryParams, objs: Sequence[GradedObject]) -> GradedMap:
        one = params.one()
        entries = {idx: {idx: one} for idx in itertools.product(*(range(o.dim) for o in objs))}
        return cls(params, objs, objs, entries, check=False)

    @classmethod
    def from_function(cls, params: CategoryParams, domain: Sequence[GradedObject],
                      codomain: Sequence[GradedObject], fn) -> GradedMap:
        """Build from ``fn(in_index) -> {out_index: coeff}``."""
        entries = {}
        for idx in itertools.product(*(range(o.dim) for o in domain)):
            row = fn(idx)
            if row:
                entries[idx] = row
        return cls(params, domain, codomain, entries)

    # algebra ----------------------------------------------------------
    def input_indices(self):
        return itertools.product(*(range(o.dim) for o in self.domain))

    def apply(self, vector: Mapping[Index, CycloNumber]) -> dict[Index, CycloNumber]:
        out: dict[Index, CycloNumber] = {}
        for i, c in vector.items():
            for o, e in self.entries.get(tuple(i), {}).items():
                out[o] = out.get(o, self.params.zero()) + c * e
        return {o: c for o, c in out.items() if not c.is_zero()}

    def __matmul__(self, other: GradedMap) -> GradedMap:
        """``self @ other`` is self after other."""
        if [o.basis for o in other.codomain] != [o.basis for o in self.domain]:
            raise CategoryError("composition boundary mismatch")
        entries = {i: self.apply(row) for i, row in other.entries.items()}
        return GradedMap(self.params, other.domain, self.codomain, entries, check=False)

    def tensor(self, other: GradedMap) -> GradedMap:
        entries = {}
        for i, row in self.entries.items():
            for j, row2 in other.entries.items():
                entries[i + j] = {o + p: c * d for o, c in row.items() for p, d in row2.items()}
        return GradedMap(self.params, self.domain + other.domain,
                         self.codomain + other.codomain, entries, check=False)

    def scale(self, s: CycloNumber | int) -> GradedMap:
        entries = {i: {o: c * s for o, c in row.items()} for i, row in self.entries.items()}
        return GradedMap(self.params, self.domain, self.codomain, entries, check=False)

    def __add__(self, other: GradedMap) -> GradedMap:
        entries = {i: dict(row) for i, row in self.entries.items()}
        for i, row in other.entries.items():
            tgt = entries.setdefault(i, {})
            for o, c in row.items():
                tgt[o] = tgt.get(o, self.params.zero()) + c
        return GradedMap(self.params, self.domain, self.codomain, entries, check=False)

    def __sub__(self, other: GradedMap) -> GradedMap:
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMap):
            return NotImplemented
        return ([o.basis for o in self.domain] == [o.basis for o in other.domain]
                and [o.basis for o in self.codomain] == [o.basis for o in other.codomain]
                and self.entries == other.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def entry(self, i: Index, o: Index) -> CycloNumber:
        return self.entries.get(tuple(i), {}).get(tuple(o), self.params.zero())

    def scalar_value(self) -> CycloNumber:
        """The number represented by a map between unit objects."""
        if self.domain or self.codomain:
            raise CategoryError("not a scalar: map has nontrivial boundary")
        return self.entry((), ())

    def scalar_multiple_of_identity(self) -> CycloNumber | None:
        """Return s if self == s * identity, else None."""
        if [o.basis for o in self.domain] != [o.basis for o in self.codomain]:
            return None
        diag = [self.entry(i, i) for i in self.input_indices()]
        s = next((d for d in diag if not d.is_zero()), self.params.zero())
        if (self - GradedMap.identity(self.params, self.domain).scale(s)).is_zero():
            return s
        return None

    def flatten(self) -> GradedMap:
        """Same map with domain and codomain collapsed to single objects."""
        dom = tensor_object(self.params, *self.domain)
        cod = tensor_object(self.params, *self.codomain)
        dshape = [o.dim for o in self.domain]
        cshape = [o.dim for o in self.codomain]
        entries = {(_ravel(i, dshape),): {(_ravel(o, cshape),): c for o, c in row.items()}
                   for i, row in self.entries.items()}
        return GradedMap(self.params, (dom,), (cod,), entries, check=False)

    def nonzero_count(self) -> int:
        return sum(len(row) for row in self.entries.values())

    def __repr__(self) -> str:
        return (f"GradedMap({[o.name for o in self.domain]} -> "
                f"{[o.name for o in self.codomain]}, {self.nonzero_count()} entries)")


def _ravel(idx: Index, shape: Sequence[int]) -> int:
    flat = 0
    for i, n in zip(idx, shape):
        flat = flat * n + i
    return flat


# structure maps -------------------------------------------------------------

def kirby_object(params: CategoryParams, scope: str = "full") -> GradedObject:
    """Direct sum of one simple object per degree (full group or subgroup)."""
    if scope == "full":
        return GradedObject.make(params.N, [(x, f"b{x}") for x in params.group], "B_C")
    if scope == "sub":
        return GradedObject.make(params.N, [(x, f"b{x}") for x in params.subgroup], "B_B")
    raise CategoryError(f"unknown Kirby scope {scope!r}")


def braiding(params: CategoryParams, X: GradedObject, Y: GradedObject, sign: int = 1) -> GradedMap:
    """X (x) Y -> Y (x) X; sign=+1 is sigma_{X,Y}, sign=-1 is sigma_{Y,X}^-1."""
    s = 1 if sign > 0 else -1

    def fn(idx):
        i, j = idx
        return {(j, i): params.zeta(s * params.beta_exp(X.basis[i][0], Y.basis[j][0]))}

    return GradedMap.from_function(params, (X, Y), (Y, X), fn)


def twist(params: CategoryParams, X: GradedObject, sign: int = 1) -> GradedMap:
    s = 1 if sign > 0 else -1
    return GradedMap.from_function(
        params, (X,), (X,), lambda idx: {idx: params.zeta(s * params.twist_exp(X.basis[idx[0]][0]))})


def _delta_pairing(params: CategoryParams, A: GradedObject, B: GradedObject) -> dict:
    # pairs basis i of A with basis i of B (B is the dual of A or vice versa)
    return {(i, i): {(): params.one()} for i in range(A.dim)}


@dataclass
class Pairings:
    ev: GradedMap        # X* (x) X -> I
    coev: GradedMap      # I -> X (x) X*
    ev_left: GradedMap   # X (x) X* -> I
    coev_left: GradedMap  # I -> X* (x) X


@lru_cache(maxsize=256)
def pairing_maps(params: CategoryParams, X: GradedObject) -> Pairings:
    """Duality maps for X; cached, so treat the returned maps as read-only."""
    Xs = X.dual(params.N)
    ev = GradedMap(params, (Xs, X), (), _delta_pairing(params, Xs, X))
    coev = GradedMap(params, (), (X, Xs), {(): {(i, i): params.one() for i in range(X.dim)}})
    ev_left = ev @ braiding(params, X, Xs, +1) @ twist(params, X, +1).tensor(
        GradedMap.identity(params, (Xs,)))
    coev_left = GradedMap.identity(params, (Xs,)).tensor(twist(params, X, +1)) @ \
        braiding(params, X, Xs, +1) @ coev
    return Pairings(ev, coev, ev_left, coev_left)


def transparent_degrees(params: CategoryParams, ambient: str = "full") -> tuple[int, ...]:
    scope = params.group if ambient == "full" else params.subgroup
    N = params.N
    return tuple(x for x in params.group if all((2 * params.t * x * y) % N == 0 for y in scope))


# Frobenius algebra and module -------------------------------------------------

@dataclass
class FrobeniusData:
    params: CategoryParams
    c: int
    F: GradedObject
    mu: GradedMap
    unit: GradedMap
    comul: GradedMap
    counit: GradedMap
    dual_index: dict[int, int] = field(default_factory=dict)

    def copairing(self) -> GradedMap:
        return self.comul @ self.unit

    def pairing(self) -> GradedMap:
        return self.counit @ self.mu


def _matrix_units(N: int, c: int) -> GradedObject:
    return GradedObject.make(N, [(0, "E11"), (c, "E12"), (-c, "E21"), (0, "E22")], "F")


# matrix unit E_ij sits at basis position 2*i + j (0-based i, j)
def _eu(i: int, j: int) -> int:
    return 2 * i + j


def frobenius_data(params: CategoryParams, c: int) -> FrobeniusData:
    """The graded 2x2 matrix algebra with off-diagonal degrees c, -c and trace counit."""
    N = params.N
    if c % N == 0 or not params.in_subgroup(c):
        raise CategoryError(f"c={c} must be a nonzero element of the subgroup {params.subgroup}")
    F = _matrix_units(N, c)
    one = params.one()
    mu = GradedMap.from_function(
        params, (F, F), (F,),
        lambda idx: {(_eu(idx[0] // 2, idx[1] % 2),): one} if idx[0] % 2 == idx[1] // 2 else {})
    unit = GradedMap(params, (), (F,), {(): {(_eu(0, 0),): one, (_eu(1, 1),): one}})
    counit = GradedMap(params, (F,), (), {(_eu(0, 0),): {(): one}, (_eu(1, 1),): {(): one}})
    # Delta(E_pq) = sum_k E_pk (x) E_kq
    comul = GradedMap.from_function(
        params, (F,), (F, F),
        lambda idx: {(_eu(idx[0] // 2, k), _eu(k, idx[0] % 2)): one for k in range(2)})
    # trace-pairing dual basis: E_ij <-> E_ji
    dual_index = {_eu(i, j): _eu(j, i) for i in range(2) for j in range(2)}
    return FrobeniusData(params, c % N, F, mu, unit, comul, counit, dual_index)


@dataclass
class ModuleData:
    params: CategoryParams
    g: int
    M: GradedObject
    Mstar: GradedObject
    action: GradedMap         # F (x) M -> M
    coaction: GradedMap       # M -> F (x) M
    dual_action: GradedMap    # M* (x) F -> M*
    dual_coaction: GradedMap  # M* -> M* (x) F


def induced_coaction(frob: FrobeniusData, M: GradedObject, action: GradedMap) -> GradedMap:
    """(1_F (x) m) o ((Delta o e) (x) 1_M)."""
    p = frob.params
    idM = GradedMap.identity(p, (M,))
    idF = GradedMap.identity(p, (frob.F,))
    return idF.tensor(action) @ frob.copairing().tensor(idM)


def dualize_module_maps(frob: FrobeniusData, M: GradedObject, action: GradedMap,
                        coaction: GradedMap) -> tuple[GradedMap, GradedMap]:
    """Duality images: the right action on M* is the transpose of the
    coaction, the right coaction on M* is the transpose of the action.
    F is identified with its dual through the trace pairing."""
    p = frob.params
    Ms = M.dual(p.N)
    dual_action_entries: dict = {}
    # coaction: v_j -> sum c * (a (x) v_l); transpose gives (v_l* (x) a^vee) -> c * v_j*
    for (j,), row in coaction.entries.items():
        for (a, l), coef in row.items():
            key = (l, frob.dual_index[a])
            tgt = dual_action_entries.setdefault(key, {})
            tgt[(j,)] = tgt.get((j,), p.zero()) + coef
    dual_action = GradedMap(p, (Ms, frob.F), (Ms,), dual_action_entries)
    dual_coaction_entries: dict = {}
    # action: a (x) v_j -> sum c * v_i; transpose gives v_i* -> c * (v_j* (x) a^vee)
    for (a, j), row in action.entries.items():
        for (i,), coef in row.items():
            tgt = dual_coaction_entries.setdefault((i,), {})
            key = (j, frob.dual_index[a])
            tgt[key] = tgt.get(key, p.zero()) + coef
    dual_coaction = GradedMap(p, (Ms,), (Ms, frob.F), dual_coaction_entries)
    return dual_action, dual_coaction


def module_data(params: CategoryParams, frob: FrobeniusData, g: int) -> ModuleData:
    """Column vectors k_{c+g} (+) k_g acted on by matrix multiplication."""
    if params.in_subgroup(g):
        raise CategoryError(f"module must lie outside the subcategory: g={g} is in {params.subgroup}")
    N = params.N
    M = GradedObject.make(N, [(frob.c + g, "v1"), (g, "v2")], "M")
    one = params.one()
    action = GradedMap.from_function(
        params, (frob.F, M), (M,),
        lambda idx: {(idx[0] // 2,): one} if idx[0] % 2 == idx[1] else {})
    coaction = induced_coaction(frob, M, action)
    dual_action, dual_coaction = dualize_module_maps(frob, M, action, coaction)
    return ModuleData(params, g % N, M, M.dual(N), action, coaction, dual_action, dual_coaction)


# test harnesses -----------------------------------------------------------------

def unit_algebra(params: CategoryParams) -> FrobeniusData:
    """The monoidal unit as a one-dimensional Frobenius algebra."""
    F = GradedObject(((0, "u"),), "F")
    one = params.one()
    return FrobeniusData(
        params, 0, F,
        mu=GradedMap(params, (F, F), (F,), {(0, 0): {(0,): one}}),
        unit=GradedMap(params, (), (F,), {(): {(0,): one}}),
        comul=GradedMap(params, (F,), (F, F), {(0,): {(0, 0): one}}),
        counit=GradedMap(params, (F,), (), {(0,): {(): one}}),
        dual_index={0: 0})


def unit_module(params: CategoryParams, frob: FrobeniusData, g: int) -> ModuleData:
    """k_g with the unit algebra acting trivially."""
    M = simple_object(params, g)
    action = GradedMap(params, (frob.F, M), (M,), {(0, 0): {(0,): params.one()}})
    coaction = induced_coaction(frob, M, action)
    da, dc = dualize_module_maps(frob, M, action, coaction)
    return ModuleData(params, g % params.N, M, M.dual(params.N), action, coaction, da, dc)


def group_algebra(params: CategoryParams) -> FrobeniusData:
    """k[H] graded by H, with the delta-at-zero counit."""
    H = params.subgroup
    N = params.N
    F = GradedObject.make(N, [(h, f"u{h}") for h in H], "F")
    pos = {h: i for i, h in enumerate(H)}
    one = params.one()
    mu = GradedMap.from_function(params, (F, F), (F,),
                                 lambda idx: {(pos[(H[idx[0]] + H[idx[1]]) % N],): one})
    unit = GradedMap(params, (), (F,), {(): {(pos[0],): one}})
    counit = GradedMap(params, (F,), (), {(pos[0],): {(): one}})
    comul = GradedMap.from_function(
        params, (F,), (F, F),
        lambda idx: {(pos[h], pos[(H[idx[0]] - h) % N]): one for h in H})
    dual_index = {pos[h]: pos[(-h) % N] for h in H}
    return FrobeniusData(params, 0, F, mu, unit, comul, counit, dual_index)


def regular_module(params: CategoryParams, frob: FrobeniusData, g: int) -> ModuleData:
    """k[H] acting on a g-shifted copy of itself; its swim image is not degree 0."""
    H = params.subgroup
    N = params.N
    M = GradedObject.make(N, [(g + h, f"w{h}") for h in H], "M")
    pos = {h: i for i, h in enumerate(H)}
    action = GradedMap.from_function(
        params, (frob.F, M), (M,),
        lambda idx: {(pos[(H[idx[0]] + H[idx[1]]) % N],): params.one()})
    coaction = induced_coaction(frob, M, action)
    da, dc = dualize_module_maps(frob, M, action, coaction)
    return ModuleData(params, g % N, M, M.dual(N), action, coaction, da, dc)


# verification --------------------------------------------------------------------

def verify_frobenius(frob: FrobeniusData) -> dict[str, bool]:
    p = frob.params
    F = frob.F
    idF = GradedMap.identity(p, (F,))
    mu, unit, comul, counit = frob.mu, frob.unit, frob.comul, frob.counit
    swap = GradedMap.from_function(p, (F, F), (F, F), lambda idx: {(idx[1], idx[0]): p.one()})
    report = {
        "associativity": mu @ mu.tensor(idF) == mu @ idF.tensor(mu),
        "left_unit": mu @ unit.tensor(idF) == idF,
        "right_unit": mu @ idF.tensor(unit) == idF,
        "coassociativity": comul.tensor(idF) @ comul == idF.tensor(comul) @ comul,
        "left_counit": counit.tensor(idF) @ comul == idF,
        "right_counit": idF.tensor(counit) @ comul == idF,
        "frobenius_left": idF.tensor(mu) @ comul.tensor(idF) == comul @ mu,
        "frobenius_right": mu.tensor(idF) @ idF.tensor(comul) == comul @ mu,
        "symmetric_swap": counit @ mu == counit @ mu @ swap,
        "symmetric_braiding": counit @ mu == counit @ mu @ braiding(p, F, F, +1),
    }
    return report


FROBENIUS_CORE = ("associativity", "left_unit", "right_unit", "coassociativity",
                  "left_counit", "right_counit", "frobenius_left", "frobenius_right")


def verify_module(frob: FrobeniusData, mod: ModuleData) -> dict[str, bool]:
    p = frob.params
    F, M, Ms = frob.F, mod.M, mod.Mstar
    idF = GradedMap.identity(p, (F,))
    idM = GradedMap.identity(p, (M,))
    idMs = GradedMap.identity(p, (Ms,))
    m, delta = mod.action, mod.coaction
    report = {
        "associativity": m @ idF.tensor(m) == m @ frob.mu.tensor(idM),
        "unit": m @ frob.unit.tensor(idM) == idM,
        "coaction_is_induced": delta == induced_coaction(frob, M, m),
        # (1 (x) m)(Delta (x) 1) = delta m = (mu (x) 1)(1 (x) delta)
        "comodule_left": idF.tensor(m) @ frob.comul.tensor(idM) == delta @ m,
        "comodule_right": frob.mu.tensor(idM) @ idF.tensor(delta) == delta @ m,
        "dual_associativity": mod.dual_action @ mod.dual_action.tensor(idF)
        == mod.dual_action @ idMs.tensor(frob.mu),
        "dual_unit": mod.dual_action @ idMs.tensor(frob.unit) == idMs,
        "dual_comodule": idMs.tensor(frob.mu) @ mod.dual_coaction.tensor(idF)
        == mod.dual_coaction @ mod.dual_action,
        "dual_comodule_left": mod.dual_action.tensor(idF) @ idMs.tensor(frob.comul)
        == mod.dual_coaction @ mod.dual_action,
    }
    return report


class ConditionError(CategoryError):
    pass


def cap_scalar(frob: FrobeniusData, mod: ModuleData) -> CycloNumber:
    """k with m o delta = k * 1_M."""
    k = (mod.action @ mod.coaction).scalar_multiple_of_identity()
    if k is None:
        raise ConditionError("cap condition fails; data unusable")
    return k


def cup_scalar(frob: FrobeniusData, mod: ModuleData) -> CycloNumber:
    """kappa: a copairing band with both feet acting on one strand."""
    p = frob.params
    idF = GradedMap.identity(p, (frob.F,))
    m = mod.action
    comp = m @ idF.tensor(m) @ frob.copairing().tensor(GradedMap.identity(p, (mod.M,)))
    kappa = comp.scalar_multiple_of_identity()
    if kappa is None:
        raise ConditionError("cup condition fails; data unusable")
    return kappa


def geometric_cup_scalar(frob: FrobeniusData, mod: ModuleData) -> CycloNumber | None:
    """Factor picked up by attaching a new small module circle to a strand by
    one copairing band: (1_M (x) ev)(m (x) m (x) 1)(1 (x) copairing (x) coev)."""
    p = frob.params
    M, Ms = mod.M, mod.Mstar
    idM = GradedMap.identity(p, (M,))
    idMs = GradedMap.identity(p, (Ms,))
    idF = GradedMap.identity(p, (frob.F,))
    pairs = pairing_maps(p, M)
    # M -> F F M -> F M F M M* -> M M M* -> M
    step1 = frob.copairing().tensor(idM)
    braid = idF.tensor(braiding(p, frob.F, M, +1))
    step2 = GradedMap.identity(p, (frob.F, M, frob.F)).tensor(pairs.coev)
    acts = mod.action.tensor(mod.action).tensor(idMs)
    close = idM.tensor(pairs.ev_left)
    comp = close @ acts @ step2 @ braid @ step1
    return comp.scalar_multiple_of_identity()


def swim_map(frob: FrobeniusData, mod: ModuleData) -> GradedMap:
    """(m (x) m)(1 (x) Delta(1_F) (x) 1) on M* (x) M."""
    p = frob.params
    idM = GradedMap.identity(p, (mod.M,))
    idMs = GradedMap.identity(p, (mod.Mstar,))
    return mod.dual_action.tensor(mod.action) @ idMs.tensor(frob.copairing()).tensor(idM)


def swim_check(params: CategoryParams, frob: FrobeniusData, mod: ModuleData) -> dict:
    S = swim_map(frob, mod)
    N = params.N
    degrees = set()
    for row in S.entries.values():
        for (i, j) in row:
            degrees.add((mod.Mstar.basis[i][0] + mod.M.basis[j][0]) % N)
    H = params.subgroup

    def ok(x, scope):
        return all((2 * params.t * x * y) % N == 0 for y in scope)

    return {
        "image_degrees": sorted(degrees),
        "b_transparent": all(ok(x, H) for x in degrees),
        "transparent": all(ok(x, params.group) for x in degrees),
    }
