"""Evaluation of diagrams by sparse slice-by-slice contraction.

The state between two rows is a sparse vector over basis tensors of the
boundary strands.  ``statesum_eval`` is an independent route for band-free
diagrams that sums phases over degree assignments to components.
"""
from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .algebra import CycloNumber
from .category import (CategoryParams, FrobeniusData, GradedMap, GradedObject, ModuleData,
                       braiding, frobenius_data, kirby_object, module_data, pairing_maps,
                       simple_object, twist)
from .diagram import Cell, Diagram, Strand, link_summary

DEFAULT_BUDGET = 2_000_000


class EvaluationError(ValueError):
    pass


def default_budget() -> int:
    return int(os.environ.get("SURFKIRBY_BUDGET", DEFAULT_BUDGET))


@dataclass
class EvalContext:
    params: CategoryParams
    frob: FrobeniusData | None = None
    mod: ModuleData | None = None
    budget: int | None = None

    def __post_init__(self):
        self._objects: dict[Strand, GradedObject] = {}
        self._tables: dict = {}
        self._BC = kirby_object(self.params, "full")
        self._BB = kirby_object(self.params, "sub")

    def object(self, strand: Strand) -> GradedObject:
        obj = self._objects.get(strand)
        if obj is None:
            obj = self._base_object(strand.role)
            if strand.orient == "u" and strand.role != "bd":
                obj = obj.dual(self.params.N)
            self._objects[strand] = obj
        return obj

    def _base_object(self, role: str) -> GradedObject:
        if role == "h1":
            return self._BC
        if role == "h2":
            return self._BB
        if role == "sf":
            self._need_module()
            return self.mod.M
        if role == "bd":
            self._need_module()
            return self.frob.F
        if role.startswith("k"):
            return simple_object(self.params, int(role[1:]))
        raise EvaluationError(f"no color for role {role!r}")

    def _need_module(self):
        if self.frob is None or self.mod is None:
            raise EvaluationError(
                "surface or band strands need frobenius and module data (header lines "
                "'frobenius c=..' and 'module g=..')")

    def cell_map(self, cell: Cell, inputs: tuple[Strand, ...], outputs: tuple[Strand, ...]) -> GradedMap:
        p = self.params
        k = cell.kind
        objs_in = [self.object(s) for s in inputs]
        if k in ("identity", "dot"):
            # basepoint insertion multiplies by quantum dimensions, all 1 here
            return GradedMap.identity(p, objs_in)
        if k in ("twist_pos", "twist_neg"):
            return twist(p, objs_in[0], 1 if k == "twist_pos" else -1)
        if k == "crossing_neg":
            return braiding(p, objs_in[0], objs_in[1], +1)
        if k == "crossing_pos":
            return braiding(p, objs_in[0], objs_in[1], -1)
        if k in ("cup", "puc"):
            if cell.color == "bd":
                self._need_module()
                return self.frob.copairing()
            down = self.object(Strand(cell.color, "d"))
            pr = pairing_maps(p, down)
            return pr.coev_left if k == "cup" else pr.coev
        if k in ("cap", "pac"):
            if inputs[0].role == "bd":
                self._need_module()
                return self.frob.pairing()
            down = self.object(Strand(inputs[0].role, "d"))
            pr = pairing_maps(p, down)
            return pr.ev_left if k == "cap" else pr.ev
        self._need_module()
        f, m = self.frob, self.mod
        return {
            "mu": f.mu, "comul": f.comul, "unit": f.unit, "counit": f.counit,
            "act": m.action, "coact": m.coaction, "dact": m.dual_action, "dcoact": m.dual_coaction,
        }[k]

    def table(self, cell: Cell, inputs: tuple[Strand, ...], outputs: tuple[Strand, ...]):
        key = (cell, inputs)
        tab = self._tables.get(key)
        if tab is None:
            gm = self.cell_map(cell, inputs, outputs)
            one = self.params.one()
            tab = {i: [(o, None if c == one else c) for o, c in row.items()]
                   for i, row in gm.entries.items()}
            self._tables[key] = tab
        return tab


def context_for(diag: Diagram, budget: int | None = None) -> EvalContext:
    """Context from the diagram header; algebra data only when c and g are given."""
    p = diag.params
    frob = mod = None
    if diag.c is not None:
        frob = frobenius_data(p, diag.c)
        if diag.g is not None:
            mod = module_data(p, frob, diag.g)
    return EvalContext(p, frob, mod, budget)


def _run_rows(diag: Diagram, ctx: EvalContext, state: dict, bounds) -> dict:
    """Push a sparse state (keys: (tag, basis-index tuple)) through every row."""
    budget = ctx.budget or default_budget()
    for r, row in enumerate(diag.rows):
        cur, nxt = bounds[r], bounds[r + 1]
        plan = []
        pin = pout = 0
        for cell in row:
            n_in, n_out = cell.arity
            ins = tuple(cur[pin:pin + n_in])
            outs = tuple(nxt[pout:pout + n_out])
            ident = cell.kind in ("identity", "dot")
            plan.append((pin, n_in, None if ident else ctx.table(cell, ins, outs)))
            pin += n_in
            pout += n_out
        new: dict = {}
        for (tag, idx), coef in state.items():
            choices = []
            for start, n_in, tab in plan:
                piece = idx[start:start + n_in]
                if tab is None:
                    choices.append(((piece, None),))
                else:
                    opts = tab.get(piece)
                    if not opts:
                        break
                    choices.append(opts)
            else:
                for combo in itertools.product(*choices):
                    out = []
                    c = coef
                    for o, e in combo:
                        out.extend(o)
                        if e is not None:
                            c = c * e
                    key = (tag, tuple(out))
                    prev = new.get(key)
                    new[key] = c if prev is None else prev + c
        state = {k: v for k, v in new.items() if not v.is_zero()}
        if len(state) > budget:
            raise EvaluationError(
                f"state budget exceeded at row {r + 1}: {len(state)} > {budget} states")
    return state


def eval_closed(diag: Diagram, ctx: EvalContext | None = None) -> CycloNumber:
    ctx = ctx or context_for(diag)
    bounds = diag.boundaries()
    if diag.inputs or bounds[-1]:
        raise EvaluationError("eval_closed needs a closed diagram")
    state = _run_rows(diag, ctx, {((), ()): ctx.params.one()}, bounds)
    return state.get(((), ()), ctx.params.zero())


def eval_morphism(diag: Diagram, ctx: EvalContext | None = None,
                  inputs: Sequence[Strand] | None = None) -> GradedMap:
    """The map represented by an open fragment with the given input strands."""
    ctx = ctx or context_for(diag)
    frag = diag.copy()
    if inputs is not None:
        frag.inputs = tuple(inputs)
    try:
        bounds = frag.boundaries()
    except ValueError as exc:
        raise EvaluationError(f"boundary mismatch: {exc}") from None
    dom = [ctx.object(s) for s in bounds[0]]
    cod = [ctx.object(s) for s in bounds[-1]]
    one = ctx.params.one()
    start = {(idx, idx): one for idx in itertools.product(*(range(o.dim) for o in dom))}
    state = _run_rows(frag, ctx, start, bounds)
    entries: dict = {}
    for (i, o), c in state.items():
        entries.setdefault(i, {})[o] = c
    return GradedMap(ctx.params, dom, cod, entries)


def statesum_eval(diag: Diagram, ctx: EvalContext | None = None) -> CycloNumber:
    """Sum over degree assignments of zeta^(t * (sum f_i g_i^2 + 2 sum lk_ij g_i g_j))."""
    if diag.has_bands():
        raise EvaluationError("state-sum path requires band-free diagram")
    ctx = ctx or context_for(diag)
    p = ctx.params
    if diag.inputs or diag.boundaries()[-1]:
        raise EvaluationError("state-sum path needs a closed diagram")
    summary = link_summary(diag)
    comps = [c.cid for c in summary.components]
    ranges = [ctx.object(Strand(summary.components[c].role, "d")).degrees for c in comps]
    pairs = [(i, j, 2 * summary.full_linking(a, b))
             for i, a in enumerate(comps) for j, b in enumerate(comps) if i < j]
    pairs = [(i, j, int(w)) for i, j, w in pairs if w]
    frames = [summary.writhe.get(c, 0) for c in comps]
    counts: Counter = Counter()
    N = p.N
    for degs in itertools.product(*ranges):
        e = sum(f * g * g for f, g in zip(frames, degs))
        e += sum(w * degs[i] * degs[j] for i, j, w in pairs)
        counts[(p.t * e) % N] += 1
    return CycloNumber.from_powers(N, dict(counts))


__all__ = ["EvalContext", "EvaluationError", "context_for", "eval_closed", "eval_morphism",
           "statesum_eval"]
