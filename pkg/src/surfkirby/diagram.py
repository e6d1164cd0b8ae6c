"""Sliced string-diagram representation of banded Kirby diagrams.

A diagram is a list of rows read top to bottom.  Each row is a list of
cells; each cell consumes some strands from the boundary above it and
emits strands to the boundary below.  Strands carry a role (``h1`` dotted
circle, ``h2`` 2-handle curve, ``sf`` surface unlink, ``bd`` band, or
``k<x>`` for a fixed simple object) and an orientation (``d`` down or
``u`` up).  Band strands are unoriented and always recorded as ``d``.

Text format::

    category N=6 t=1 H=2
    frobenius c=2
    module g=1
    diagram
    cup:h2
    /-
    cap
    end
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .category import CategoryParams

KIRBY_ROLES = ("h1", "h2")

TOKENS = {
    "|": "identity", "/+": "crossing_pos", "/-": "crossing_neg",
    "cap": "cap", "pac": "pac", "dot": "dot", "tw+": "twist_pos", "tw-": "twist_neg",
    "mu": "mu", "cm": "comul", "eta": "unit", "eps": "counit",
    "act": "act", "coa": "coact", "dact": "dact", "dcoa": "dcoact",
}
KIND_TOKEN = {v: k for k, v in TOKENS.items()}
KIND_TOKEN.update({"cup": "cup", "puc": "puc"})

ARITY = {
    "identity": (1, 1), "dot": (1, 1), "twist_pos": (1, 1), "twist_neg": (1, 1),
    "crossing_pos": (2, 2), "crossing_neg": (2, 2),
    "cup": (0, 2), "puc": (0, 2), "cap": (2, 0), "pac": (2, 0),
    "mu": (2, 1), "act": (2, 1), "dact": (2, 1),
    "comul": (1, 2), "coact": (1, 2), "dcoact": (1, 2),
    "unit": (0, 1), "counit": (1, 0),
}

BAND_CELLS = frozenset({"mu", "comul", "unit", "counit", "act", "coact", "dact", "dcoact"})
FOOT_CELLS = frozenset({"act", "coact", "dact", "dcoact"})

_COLOR_RE = re.compile(r"^(h1|h2|sf|bd|k-?\d+)$")


class DiagramError(ValueError):
    """Parse or structural error; ``errors`` holds (line, column, message)."""

    def __init__(self, errors: Sequence[tuple[int, int, str]]):
        self.errors = list(errors)
        msg = "; ".join(f"line {ln} col {col}: {m}" for ln, col, m in self.errors)
        super().__init__(msg)


@dataclass(frozen=True)
class Strand:
    role: str
    orient: str = "d"

    def flipped(self) -> Strand:
        if self.role == "bd":
            return self
        return Strand(self.role, "u" if self.orient == "d" else "d")

    def __str__(self) -> str:
        return f"{self.role}{'v' if self.orient == 'd' else '^'}"


@dataclass(frozen=True)
class Cell:
    kind: str
    color: str | None = None
    arity: tuple[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in ARITY:
            raise ValueError(f"unknown cell kind {self.kind!r}")
        if (self.kind in ("cup", "puc")) != (self.color is not None):
            raise ValueError(f"only cup/puc cells carry a color ({self.kind}, {self.color})")
        object.__setattr__(self, "arity", ARITY[self.kind])

    @property
    def token(self) -> str:
        if self.kind in ("cup", "puc"):
            return f"{self.kind}:{self.color}"
        return KIND_TOKEN[self.kind]

    @classmethod
    def parse(cls, token: str) -> Cell:
        if token in TOKENS:
            return cls(TOKENS[token])
        if ":" in token:
            kind, color = token.split(":", 1)
            if kind in ("cup", "puc") and _COLOR_RE.match(color):
                return cls(kind, color)
        raise ValueError(f"unknown token {token!r}")


I = Cell("identity")


def cell_outputs(cell: Cell, inputs: Sequence[Strand]) -> list[Strand]:
    """Output strands of ``cell`` given its input strands; raises ValueError."""
    return list(_cell_outputs(cell, tuple(inputs)))


@lru_cache(maxsize=4096)
def _cell_outputs(cell: Cell, inputs: tuple[Strand, ...]) -> tuple[Strand, ...]:
    return tuple(_outputs(cell, inputs))


def _outputs(cell: Cell, inputs: Sequence[Strand]) -> list[Strand]:
    k = cell.kind
    if k in ("identity", "dot", "twist_pos", "twist_neg"):
        return [inputs[0]]
    if k in ("crossing_pos", "crossing_neg"):
        return [inputs[1], inputs[0]]
    if k in ("cup", "puc"):
        if cell.color == "bd":
            return [Strand("bd"), Strand("bd")]
        first = "u" if k == "cup" else "d"
        return [Strand(cell.color, first), Strand(cell.color, first).flipped()]
    if k in ("cap", "pac"):
        a, b = inputs
        if a.role != b.role:
            raise ValueError(f"color mismatch at {k}: {a.role} vs {b.role}")
        if a.role != "bd":
            want = ("d", "u") if k == "cap" else ("u", "d")
            if (a.orient, b.orient) != want:
                raise ValueError(f"non-dual pair at {k}")
        return []
    if k in ("mu", "comul", "counit"):
        if any(s.role != "bd" for s in inputs):
            raise ValueError(f"{k} needs band strands")
        return [Strand("bd")] * (1 if k == "mu" else (2 if k == "comul" else 0))
    if k == "unit":
        return [Strand("bd")]
    down, up = Strand("sf", "d"), Strand("sf", "u")
    if k == "act":
        if list(inputs) != [Strand("bd"), down]:
            raise ValueError("act needs (band, down surface strand)")
        return [down]
    if k == "coact":
        if list(inputs) != [down]:
            raise ValueError("coa needs a down surface strand")
        return [Strand("bd"), down]
    if k == "dact":
        if list(inputs) != [up, Strand("bd")]:
            raise ValueError("dact needs (up surface strand, band)")
        return [up]
    if k == "dcoact":
        if list(inputs) != [up]:
            raise ValueError("dcoa needs an up surface strand")
        return [up, Strand("bd")]
    raise ValueError(k)


@dataclass
class Diagram:
    params: CategoryParams
    rows: list[list[Cell]] = field(default_factory=list)
    c: int | None = None
    g: int | None = None
    inputs: tuple[Strand, ...] = ()

    def copy(self) -> Diagram:
        return Diagram(self.params, [list(r) for r in self.rows], self.c, self.g, self.inputs)

    def boundaries(self) -> list[list[Strand]]:
        """Strand lists between rows; ``[0]`` is the input boundary."""
        bounds = [list(self.inputs)]
        errors = []
        for r, row in enumerate(self.rows):
            cur = bounds[-1]
            arities = [c.arity[0] for c in row]
            need = sum(arities)
            if need != len(cur):
                raise DiagramError([(r + 1, 0, f"arity mismatch: row consumes {need} strands, {len(cur)} present")])
            out, pos = [], 0
            for col, cell in enumerate(row):
                n_in = arities[col]
                if cell.kind == "identity":
                    out.append(cur[pos])
                    pos += 1
                    continue
                try:
                    out.extend(_cell_outputs(cell, tuple(cur[pos:pos + n_in])))
                except ValueError as exc:
                    errors.append((r + 1, col + 1, str(exc)))
                    out.extend([Strand("bd")] * cell.arity[1])
                pos += n_in
            if errors:
                raise DiagramError(errors)
            bounds.append(out)
        return bounds

    @property
    def outputs(self) -> list[Strand]:
        return self.boundaries()[-1]

    def is_closed(self) -> bool:
        return not self.inputs and not self.outputs

    def cells(self) -> Iterable[tuple[int, int, Cell]]:
        for r, row in enumerate(self.rows):
            for col, cell in enumerate(row):
                yield r, col, cell

    def has_bands(self) -> bool:
        return any(cell.kind in BAND_CELLS or cell.color == "bd" for _, _, cell in self.cells())

    def has_surface(self) -> bool:
        return any(cell.color == "sf" for _, _, cell in self.cells()) or any(
            s.role == "sf" for s in self.inputs)

    def structurally_equal(self, other: Diagram) -> bool:
        return (self.params == other.params and self.c == other.c and self.g == other.g
                and self.inputs == other.inputs
                and [r for r in self.rows if r] == [r for r in other.rows if r])

    def side_by_side(self, other: Diagram) -> Diagram:
        """Disjoint union: other's rows are run after self's, to its right."""
        out = self.copy()
        if other.c is not None:
            out.c = other.c if out.c is None else out.c
        if other.g is not None:
            out.g = other.g if out.g is None else out.g
        width = len(self.outputs)
        out.rows = out.rows + [[I] * width + list(r) for r in other.rows]
        return out


# parsing ------------------------------------------------------------------------

_HEADER_RE = re.compile(r"(\w+)=(-?\d+)")


def parse(text: str) -> Diagram:
    errors: list[tuple[int, int, str]] = []
    params = None
    c = g = None
    rows: list[tuple[int, list[Cell]]] = []
    in_body = False
    ended = False
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if not in_body:
            head = words[0]
            kv = dict(_HEADER_RE.findall(line))
            if head == "category":
                try:
                    params = CategoryParams(int(kv["N"]), int(kv.get("t", 1)), int(kv.get("H", 1)))
                except (KeyError, ValueError) as exc:
                    errors.append((ln, 1, f"bad category header: {exc}"))
            elif head == "frobenius" and "c" in kv:
                c = int(kv["c"])
            elif head == "module" and "g" in kv:
                g = int(kv["g"])
            elif head == "diagram":
                in_body = True
            else:
                errors.append((ln, 1, f"unknown header line {line!r}"))
            continue
        if ended:
            errors.append((ln, 1, "text after end"))
            continue
        if words == ["end"]:
            ended = True
            continue
        cells = []
        col = 1
        for w in words:
            col = raw.find(w, col - 1) + 1
            try:
                cells.append(Cell.parse(w))
            except ValueError as exc:
                errors.append((ln, col, str(exc)))
            col += len(w)
        rows.append((ln, cells))
    if params is None:
        errors.append((1, 1, "missing header: category N=<int> t=<int> H=<int>"))
    if not in_body:
        errors.append((1, 1, "missing 'diagram' line"))
    elif not ended:
        errors.append((0, 0, "missing 'end'"))
    if errors:
        raise DiagramError(errors)
    diag = Diagram(params, [cells for _, cells in rows], c, g)
    try:
        bounds = diag.boundaries()
    except DiagramError as exc:
        lines = [ln for ln, _ in rows]
        raise DiagramError([(lines[r - 1], col, m) for r, col, m in exc.errors]) from None
    if bounds[-1]:
        raise DiagramError([(rows[-1][0] if rows else 0, 0,
                             f"open boundary: {len(bounds[-1])} strands left at end")])
    return diag


def serialize(diag: Diagram) -> str:
    p = diag.params
    lines = [f"category N={p.N} t={p.t} H={p.d}"]
    if diag.c is not None:
        lines.append(f"frobenius c={diag.c}")
    if diag.g is not None:
        lines.append(f"module g={diag.g}")
    lines.append("diagram")
    for row in diag.rows:
        if row:
            lines.append(" ".join(cell.token for cell in row))
    lines.append("end")
    return "\n".join(lines) + "\n"


# component tracing -------------------------------------------------------------

class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


@dataclass
class Component:
    cid: int
    role: str
    first: tuple[int, int]


@dataclass
class Tracing:
    """Component assignment for every strand segment ``(boundary, position)``."""
    segment_component: dict[tuple[int, int], int]
    components: list[Component]
    crossings: list[tuple[int, int, int, int]]   # (row, col, comp_a, comp_b), band strands skipped
    signs: list[int]
    twists: dict[int, int]
    feet: dict[int, list[int]]                   # band component -> surface components


def _orient_sign(s: Strand) -> int:
    return 1 if s.orient == "d" else -1


def crossing_sign(kind: str, a: Strand, b: Strand) -> int:
    """Writhe contribution of a crossing between oriented strands a (left) and b."""
    base = _orient_sign(a) * _orient_sign(b)
    return base if kind == "crossing_neg" else -base


def trace_components(diag: Diagram) -> Tracing:
    bounds = diag.boundaries()
    uf = _UnionFind()
    for b, strands in enumerate(bounds):
        for i in range(len(strands)):
            uf.find((b, i))
    raw_cross = []
    raw_twist = []
    raw_feet = []
    for r, row in enumerate(diag.rows):
        pin = pout = 0
        for col, cell in enumerate(row):
            n_in, n_out = cell.arity
            ins = [(r, pin + i) for i in range(n_in)]
            outs = [(r + 1, pout + i) for i in range(n_out)]
            k = cell.kind
            if k in ("identity", "dot", "twist_pos", "twist_neg"):
                uf.union(ins[0], outs[0])
                if k.startswith("twist"):
                    raw_twist.append((ins[0], 1 if k == "twist_pos" else -1))
            elif k in ("crossing_pos", "crossing_neg"):
                uf.union(ins[0], outs[1])
                uf.union(ins[1], outs[0])
                a, b = bounds[r][pin], bounds[r][pin + 1]
                if a.role != "bd" and b.role != "bd":
                    raw_cross.append((r, col, ins[0], ins[1], crossing_sign(k, a, b)))
            elif k in ("cup", "puc"):
                uf.union(outs[0], outs[1])
            elif k in ("cap", "pac"):
                uf.union(ins[0], ins[1])
            elif k in ("mu", "comul"):
                for x in ins[1:] + outs:
                    uf.union(ins[0] if ins else outs[0], x)
            elif k == "act":
                uf.union(ins[1], outs[0])
                raw_feet.append((ins[0], ins[1]))
            elif k == "coact":
                uf.union(ins[0], outs[1])
                raw_feet.append((outs[0], ins[0]))
            elif k == "dact":
                uf.union(ins[0], outs[0])
                raw_feet.append((ins[1], ins[0]))
            elif k == "dcoact":
                uf.union(ins[0], outs[0])
                raw_feet.append((outs[1], ins[0]))
            pin += n_in
            pout += n_out
    # number components in reading order of first appearance
    order: dict = {}
    components: list[Component] = []
    seg_comp: dict[tuple[int, int], int] = {}
    for b, strands in enumerate(bounds):
        for i, s in enumerate(strands):
            root = uf.find((b, i))
            if root not in order:
                order[root] = len(components)
                components.append(Component(len(components), s.role, (b, i)))
            seg_comp[(b, i)] = order[root]
    crossings = [(r, col, seg_comp[a], seg_comp[b]) for r, col, a, b, _ in raw_cross]
    signs = [s for *_, s in raw_cross]
    twists: dict[int, int] = {}
    for seg, s in raw_twist:
        cid = seg_comp[seg]
        twists[cid] = twists.get(cid, 0) + s
    feet: dict[int, list[int]] = {}
    for band_seg, sf_seg in raw_feet:
        feet.setdefault(seg_comp[band_seg], []).append(seg_comp[sf_seg])
    for comp in components:
        if comp.role == "bd":
            feet.setdefault(comp.cid, [])
    return Tracing(seg_comp, components, crossings, signs, twists, feet)


# link summary ---------------------------------------------------------------------

@dataclass
class LinkSummary:
    components: list[Component]
    kirby: list[int]                        # component ids of h1/h2 rows, in order
    linking_matrix: list[list[int]]         # Kirby components only
    dotted_flags: list[bool]
    surface_components: int
    s: int
    omega: int
    writhe: dict[int, int]                  # every non-band component
    linking: dict[tuple[int, int], Fraction]  # every unordered pair of non-band components
    warnings: list[str]

    def full_linking(self, a: int, b: int):
        if a == b:
            return self.writhe.get(a, 0)
        return self.linking.get((min(a, b), max(a, b)), 0)


def link_summary(diag: Diagram, tracing: Tracing | None = None) -> LinkSummary:
    tr = tracing or trace_components(diag)
    comps = tr.components
    writhe = {c.cid: 0 for c in comps if c.role != "bd"}
    linking: dict[tuple[int, int], Fraction] = {}
    for (r, col, a, b), sgn in zip(tr.crossings, tr.signs):
        if a == b:
            writhe[a] += sgn
        else:
            key = (min(a, b), max(a, b))
            linking[key] = linking.get(key, Fraction(0)) + Fraction(sgn, 2)
    for cid, tw in tr.twists.items():
        if cid in writhe:
            writhe[cid] += tw
    linking = {k: (int(v) if v.denominator == 1 else v) for k, v in linking.items() if v}
    kirby = [c.cid for c in comps if c.role in KIRBY_ROLES]
    matrix = [[writhe[a] if a == b else linking.get((min(a, b), max(a, b)), 0) for b in kirby]
              for a in kirby]
    s = omega = 0
    warnings = []
    for band, feet in sorted(tr.feet.items()):
        if len(feet) == 0:
            warnings.append(f"band component {band} has no feet on the surface")
            continue
        if len(feet) != 2:
            warnings.append(f"band component {band} has {len(feet)} feet")
        if len(set(feet)) == 1:
            s += 1
        else:
            omega += 1
    return LinkSummary(comps, kirby, matrix, [comps[k].role == "h1" for k in kirby],
                       sum(1 for c in comps if c.role == "sf"), s, omega, writhe, linking, warnings)


def validate(diag: Diagram) -> dict:
    """Necessary conditions for a banded Kirby diagram."""
    errors: list[str] = []
    warnings: list[str] = []
    try:
        bounds = diag.boundaries()
    except DiagramError as exc:
        return {"errors": [str(exc)], "warnings": [], "summary": None}
    if diag.inputs or bounds[-1]:
        errors.append("diagram is not closed")
        return {"errors": errors, "warnings": warnings, "summary": None}
    summary = link_summary(diag)
    dotted = [c.cid for c in summary.components if c.role == "h1"]
    for cid in dotted:
        if summary.writhe[cid] != 0:
            errors.append(f"dotted component {cid} has nonzero framing {summary.writhe[cid]}")
    for i, a in enumerate(dotted):
        for b in dotted[i + 1:]:
            if summary.full_linking(a, b):
                errors.append(f"dotted components {a} and {b} are linked")
    for c in summary.components:
        if c.role == "sf":
            for d in dotted:
                if summary.full_linking(c.cid, d):
                    warnings.append(
                        f"surface component {c.cid} links dotted component {d}; "
                        "the surface disks cannot exist")
    warnings.extend(summary.warnings)
    return {"errors": errors, "warnings": warnings, "summary": summary}
