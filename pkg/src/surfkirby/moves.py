"""Kirby and banded-unlink moves as template splices on the sliced IR.

Addresses are ``(row, col)``: ``row`` is a boundary index (the boundary above
diagram row ``row``) and ``col`` a strand position in that boundary.  A move
whose left-hand side spans rows ``row, row+1, ...`` is addressed by the
boundary above its first row.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .diagram import (KIRBY_ROLES, Cell, Diagram, DiagramError, I, Strand, trace_components)

KINDS = ("r2_intro", "r2_elim", "r3", "r1_curl_transfer", "handle_slide", "stabilize_blank",
         "stabilize_hopf", "destabilize", "cap", "cup", "band_slide", "band_swim",
         "band_2handle_swim", "surface_slide")

# moves that hold for the shipped data but have no geometric counterpart
NONGEOMETRIC = ("h1 band swim",)


class MoveError(ValueError):
    pass


@dataclass(frozen=True)
class MoveSpec:
    kind: str
    row: int
    col: int
    params: tuple[tuple[str, object], ...] = ()

    @classmethod
    def make(cls, kind: str, row: int, col: int, **params) -> MoveSpec:
        if kind not in KINDS:
            raise MoveError(f"unknown move kind {kind!r}")
        return cls(kind, row, col, tuple(sorted(params.items())))

    def get(self, key: str, default=None):
        return dict(self.params).get(key, default)

    def to_json(self) -> dict:
        return {"kind": self.kind, "at": [self.row, self.col], **dict(self.params)}

    def __str__(self) -> str:
        extra = "".join(f" {k}={v}" for k, v in self.params)
        return f"{self.kind}@{self.row},{self.col}{extra}"


# row utilities --------------------------------------------------------------------

def _cells(text: str) -> list[Cell]:
    return [Cell.parse(t) for t in text.split()]


def _padded(block_row: list[Cell], left: int, width: int) -> list[Cell]:
    n_in = sum(c.arity[0] for c in block_row)
    right = width - left - n_in
    if left < 0 or right < 0:
        raise MoveError("template does not fit at this column")
    return [I] * left + list(block_row) + [I] * right


def _expand(block: list[list[Cell]], left: int, width: int) -> list[list[Cell]]:
    rows = []
    for brow in block:
        rows.append(_padded(brow, left, width))
        width += sum(c.arity[1] - c.arity[0] for c in brow)
    return rows


def _checked(diag: Diagram) -> Diagram:
    try:
        diag.boundaries()
    except DiagramError as exc:
        raise MoveError(f"rewrite produced an invalid diagram: {exc}") from None
    return diag


def splice(diag: Diagram, row: int, count: int, col: int, block: list[list[Cell]]) -> Diagram:
    """Replace ``count`` rows starting at ``row`` by ``block`` placed at column ``col``."""
    bounds = diag.boundaries()
    if not 0 <= row <= len(diag.rows) - count:
        raise MoveError(f"row {row} out of range")
    out = diag.copy()
    out.rows[row:row + count] = _expand(block, col, len(bounds[row]))
    return _checked(out)


def _single(row: list[Cell]) -> tuple[Cell, int] | None:
    """The lone non-identity cell of a row and its input position."""
    found = None
    pos = 0
    for cell in row:
        if cell.kind != "identity":
            if found is not None:
                return None
            found = (cell, pos)
        pos += cell.arity[0]
    return found


def _is_identity_row(row: list[Cell]) -> bool:
    return all(c.kind == "identity" for c in row)


def compact(diag: Diagram) -> Diagram:
    out = diag.copy()
    out.rows = [r for r in out.rows if not _is_identity_row(r)]
    return out


def sequentialize(diag: Diagram) -> tuple[Diagram, list[int]]:
    """Split rows so each holds at most one non-identity cell.

    Returns the new diagram and, for each old boundary index, the new one.
    """
    bounds = diag.boundaries()
    rows: list[list[Cell]] = []
    bmap = []
    for r, row in enumerate(diag.rows):
        bmap.append(len(rows))
        if _single(row) is not None or _is_identity_row(row):
            rows.append(list(row))
            continue
        width = len(bounds[r])
        done = 0
        for cell in row:
            n_in, n_out = cell.arity
            if cell.kind != "identity":
                rows.append(_padded([cell], done, width))
                width += n_out - n_in
            done += n_out
    bmap.append(len(rows))
    out = diag.copy()
    out.rows = rows
    return out, bmap


def _match_block(diag: Diagram, row: int, col: int, block: list[list[Cell]],
                 bounds: list | None = None) -> bool:
    if row + len(block) > len(diag.rows):
        return False
    bounds = bounds or diag.boundaries()
    try:
        want = _expand(block, col, len(bounds[row]))
    except MoveError:
        return False
    return diag.rows[row:row + len(block)] == want


# templates ----------------------------------------------------------------------

def curl_block(strand: Strand, token: str, side: str) -> list[list[Cell]]:
    """A one-strand curl whose framing sign is that of ``token`` (``/+`` is +1)."""
    c = strand.role
    if strand.orient == "d":
        rows = ([f"| cup:{c}", f"{token} |", "pac |"] if side == "right"
                else [f"puc:{c} |", f"| {token}", "| cap"])
    else:
        rows = ([f"| puc:{c}", f"{token} |", "cap |"] if side == "right"
                else [f"cup:{c} |", f"| {token}", "| pac"])
    return [_cells(r) for r in rows]


BLANK = [_cells("cup:h2"), _cells("pac")]
HOPF = [_cells("cup:h1 cup:h2"), _cells("| /- |"), _cells("| /- |"), _cells("pac pac")]
SWIM_BLOCK = [_cells("| cup:bd |"), _cells("dact act")]


# individual moves -------------------------------------------------------------------

def _r2_intro(diag: Diagram, spec: MoveSpec) -> Diagram:
    order = spec.get("order", "+-")
    if order not in ("+-", "-+"):
        raise MoveError("order must be '+-' or '-+'")
    a, b = ("/+", "/-") if order == "+-" else ("/-", "/+")
    return splice(diag, spec.row, 0, spec.col, [_cells(a), _cells(b)])


def _r2_elim(diag: Diagram, spec: MoveSpec) -> Diagram:
    r, c = spec.row, spec.col
    if r + 2 > len(diag.rows):
        raise MoveError("no crossing pair here")
    s1, s2 = _single(diag.rows[r]), _single(diag.rows[r + 1])
    if not (s1 and s2 and s1[1] == c and s2[1] == c):
        raise MoveError("no crossing pair here")
    kinds = {s1[0].kind, s2[0].kind}
    if kinds != {"crossing_pos", "crossing_neg"}:
        raise MoveError("rows do not form an R2 pair")
    out = diag.copy()
    del out.rows[r:r + 2]
    return _checked(out)


def _crossing_at(row: list[Cell]) -> tuple[str, int] | None:
    s = _single(row)
    if s and s[0].kind in ("crossing_pos", "crossing_neg"):
        return s[0].token, s[1]
    return None


def _r3(diag: Diagram, spec: MoveSpec) -> Diagram:
    r, c = spec.row, spec.col
    if r + 3 > len(diag.rows):
        raise MoveError("no R3 triangle here")
    xs = [_crossing_at(diag.rows[r + i]) for i in range(3)]
    if any(x is None for x in xs):
        raise MoveError("no R3 triangle here")
    toks = [x[0] for x in xs]
    pos = [x[1] for x in xs]
    if pos == [c, c + 1, c]:
        new_pos = [1, 0, 1]
    elif pos == [c + 1, c, c + 1]:
        new_pos = [0, 1, 0]
    else:
        raise MoveError("crossings do not form an R3 triangle")
    if toks[0] == toks[2] != toks[1]:
        raise MoveError("alternating triangle is not a Reidemeister III configuration")
    new_toks = toks[::-1]
    block = []
    for p, t in zip(new_pos, new_toks):
        block.append(_cells(" ".join(["|"] * p + [t] + ["|"] * (1 - p))))
    return splice(diag, r, 3, c, block)


def _starts_with_cup(row: list[Cell]) -> bool:
    return any(cell.kind in ("cup", "puc") for cell in row)


def _find_curl(diag: Diagram, r: int, c: int,
               bounds: list | None = None) -> tuple[Strand, str, str] | None:
    if r >= len(diag.rows) or not _starts_with_cup(diag.rows[r]):
        return None
    bounds = bounds or diag.boundaries()
    if c >= len(bounds[r]):
        return None
    strand = bounds[r][c]
    if strand.role == "bd":
        return None
    for side in ("right", "left"):
        for tok in ("/+", "/-"):
            if _match_block(diag, r, c, curl_block(strand, tok, side), bounds):
                return strand, tok, side
    return None


def _r1(diag: Diagram, spec: MoveSpec) -> Diagram:
    r, c = spec.row, spec.col
    mode = spec.get("mode", "flip")
    bounds = diag.boundaries()
    if mode == "twist_to_curl":
        s = _single(diag.rows[r]) if r < len(diag.rows) else None
        if not s or s[1] != c or s[0].kind not in ("twist_pos", "twist_neg"):
            raise MoveError("no twist cell here")
        strand = bounds[r][c]
        if strand.role == "bd":
            raise MoveError("band twists are not curl-expanded")
        tok = "/+" if s[0].kind == "twist_pos" else "/-"
        return splice(diag, r, 1, c, curl_block(strand, tok, spec.get("side", "right")))
    found = _find_curl(diag, r, c)
    if found is None:
        raise MoveError("no curl here")
    strand, tok, side = found
    if mode == "curl_to_twist":
        return splice(diag, r, 3, c, [[Cell("twist_pos" if tok == "/+" else "twist_neg")]])
    if mode == "flip":
        other = "left" if side == "right" else "right"
        return splice(diag, r, 3, c, curl_block(strand, tok, other))
    raise MoveError(f"unknown r1 mode {mode!r}")


def _stabilize(block):
    def apply(diag: Diagram, spec: MoveSpec) -> Diagram:
        return splice(diag, spec.row, 0, spec.col, block)
    return apply


def _destabilize(diag: Diagram, spec: MoveSpec) -> Diagram:
    for block in (HOPF, BLANK):
        if _match_block(diag, spec.row, spec.col, block):
            out = diag.copy()
            del out.rows[spec.row:spec.row + len(block)]
            return _checked(out)
    raise MoveError("no split stabilization here")


def _sf_strand(diag: Diagram, r: int, c: int) -> Strand:
    bounds = diag.boundaries()
    if not (0 <= r < len(bounds) and 0 <= c < len(bounds[r])):
        raise MoveError("address out of range")
    s = bounds[r][c]
    if s.role != "sf":
        raise MoveError("cap and cup moves act on a surface strand")
    return s


def _cap(diag: Diagram, spec: MoveSpec) -> Diagram:
    s = _sf_strand(diag, spec.row, spec.col)
    block = [_cells("coa"), _cells("act")] if s.orient == "d" else [_cells("dcoa"), _cells("dact")]
    return splice(diag, spec.row, 0, spec.col, block)


def _cup(diag: Diagram, spec: MoveSpec) -> Diagram:
    s = _sf_strand(diag, spec.row, spec.col)
    if s.orient == "d":
        block = [_cells("cup:bd |"), _cells("| act"), _cells("act")]
    else:
        block = [_cells("| cup:bd"), _cells("dact |"), _cells("dact")]
    return splice(diag, spec.row, 0, spec.col, block)




# cabling ---------------------------------------------------------------------------

def _cup_cell(first: Strand) -> Cell:
    if first.role == "bd":
        return Cell("cup", "bd")
    return Cell("cup" if first.orient == "u" else "puc", first.role)


def _cap_cell(first: Strand) -> Cell:
    if first.role == "bd":
        return Cell("cap")
    return Cell("cap" if first.orient == "d" else "pac")


@dataclass
class Cabled:
    diagram: Diagram
    bmap: list[int]                 # old boundary -> new boundary
    where: list[dict[int, int]]     # per old boundary: old position -> new position
    copy_at: list[dict[int, int]]   # per old boundary: old position -> position of its copy


def cable(diag: Diagram, segments: set[tuple[int, int]], copy_role: str,
          copy_left: Callable[[Strand], bool], reverse: bool = False,
          special: dict[int, tuple[int, list[list[Cell]]]] | None = None) -> Cabled:
    """Run a blackboard-parallel copy alongside the given strand segments.

    ``diag`` must have at most one non-identity cell per row.  The copy of a
    segment sits to its left when ``copy_left(strand)`` holds; ``reverse``
    flips the copy's orientation.  ``special`` maps a row to ``(col, block)``,
    a replacement block placed at old column ``col`` where the copy starts.
    """
    special = special or {}
    bounds = diag.boundaries()

    def copy_of(s: Strand) -> Strand:
        if copy_role == "bd":
            return Strand("bd")
        c = Strand(copy_role, s.orient)
        return c.flipped() if reverse else c

    where: list[dict[int, int]] = []
    copy_at: list[dict[int, int]] = []
    layouts: list[list[Strand]] = []
    for b, strands in enumerate(bounds):
        lay, w, cp = [], {}, {}
        for i, s in enumerate(strands):
            if (b, i) in segments:
                left = copy_left(s)
                cp[i] = len(lay) + (0 if left else 1)
                w[i] = len(lay) + (1 if left else 0)
                lay.extend([copy_of(s), s] if left else [s, copy_of(s)])
            else:
                w[i] = len(lay)
                lay.append(s)
        layouts.append(lay)
        where.append(w)
        copy_at.append(cp)

    def start(b: int, i: int) -> int:
        return min(where[b][i], copy_at[b].get(i, where[b][i]))

    rows: list[list[Cell]] = []
    bmap = []
    for r, row in enumerate(diag.rows):
        bmap.append(len(rows))
        width = len(layouts[r])
        if r in special:
            col, block = special[r]
            rows.extend(_expand(block, where[r][col], width))
            continue
        s = _single(row)
        if s is None:
            if not _is_identity_row(row):
                raise MoveError("cable needs one non-identity cell per row")
            rows.append([I] * width)
            continue
        cell, pos = s
        n_in, n_out = cell.arity
        ins = [(r, pos + i) in segments for i in range(n_in)]
        outs = [(r + 1, pos + i) in segments for i in range(n_out)]
        left = start(r, pos) if n_in else start(r + 1, pos)
        k = cell.kind
        if not any(ins) and not any(outs):
            block = [[cell]]
        elif k == "dot":
            block = [[I, cell]] if copy_left(bounds[r][pos]) else [[cell, I]]
        elif k in ("crossing_pos", "crossing_neg"):
            t = cell.token
            if ins[0] and ins[1]:
                block = [_cells(f"| {t} |"), _cells(f"{t} | |"), _cells(f"| | {t}"), _cells(f"| {t} |")]
            elif ins[0]:
                block = [_cells(f"| {t}"), _cells(f"{t} |")]
            else:
                block = [_cells(f"{t} |"), _cells(f"| {t}")]
        elif k in ("cup", "puc") and all(outs):
            quad = layouts[r + 1][left:left + 4]
            block = [[_cup_cell(quad[0])], [I, _cup_cell(quad[1]), I]]
        elif k in ("cap", "pac") and all(ins):
            quad = layouts[r][left:left + 4]
            block = [[I, _cap_cell(quad[1]), I], [_cap_cell(quad[0])]]
        elif k == "act" and ins[0] and not ins[1]:
            block = [_cells("| act"), _cells("act")]
        elif k == "dact" and ins[1] and not ins[0]:
            block = [_cells("dact |"), _cells("dact")]
        else:
            raise MoveError(f"cannot run a parallel copy through a {cell.token} cell")
        rows.extend(_expand(block, left, width))
    bmap.append(len(rows))
    out = diag.copy()
    out.rows = rows
    return Cabled(_checked(out), bmap, where, copy_at)


def _remap(diag: Diagram, rows_for: Callable[[int, list[Cell]], list[list[Cell]] | None]
           ) -> tuple[Diagram, list[int]]:
    """Rebuild ``diag`` replacing row r by ``rows_for(r, row)`` when that is not None."""
    rows: list[list[Cell]] = []
    bmap = []
    for r, row in enumerate(diag.rows):
        bmap.append(len(rows))
        repl = rows_for(r, row)
        rows.extend([list(row)] if repl is None else repl)
    bmap.append(len(rows))
    out = diag.copy()
    out.rows = rows
    return _checked(out), bmap


def _expand_twists(diag: Diagram, comp: int) -> tuple[Diagram, list[int]]:
    """Replace twist cells on one component by curls of the same framing."""
    tr = trace_components(diag)
    bounds = diag.boundaries()

    def rows_for(r, row):
        s = _single(row)
        if s and s[0].kind in ("twist_pos", "twist_neg") and tr.segment_component[(r, s[1])] == comp:
            tok = "/+" if s[0].kind == "twist_pos" else "/-"
            return _expand(curl_block(bounds[r][s[1]], tok, "right"), s[1], len(bounds[r]))
        return None

    return _remap(diag, rows_for)


def _saddle(diag: Diagram, b: int, p: int) -> Diagram:
    """Band-sum the adjacent strands at positions p, p+1 of boundary b."""
    x = diag.boundaries()[b][p]
    return splice(diag, b, 0, p, [[_cap_cell(x)], [_cup_cell(x)]])


def _slide(diag: Diagram, spec: MoveSpec, allowed: Callable[[str, str], bool]) -> Diagram:
    over = spec.get("over")
    if over is None:
        raise MoveError("slides need the target component (--over)")
    over = int(over)
    base, bmap0 = sequentialize(diag)
    if not 0 <= spec.row < len(bmap0):
        raise MoveError("address out of range")
    r = bmap0[spec.row]
    bounds = base.boundaries()
    if not 0 <= spec.col < len(bounds[r]):
        raise MoveError("address out of range")
    tr = trace_components(base)
    a = tr.segment_component[(r, spec.col)]
    if not 0 <= over < len(tr.components) or over == a:
        raise MoveError("slide target must be another component")
    ra, rb = tr.components[a].role, tr.components[over].role
    if not allowed(ra, rb):
        raise MoveError(f"forbidden slide of a {ra} component over a {rb} component")
    nbr = [j for j in (spec.col + 1, spec.col - 1)
           if 0 <= j < len(bounds[r]) and tr.segment_component[(r, j)] == over]
    if not nbr:
        raise MoveError("the target must have a strand adjacent to the addressed strand")
    j = nbr[0]
    base, bmap1 = _expand_twists(base, over)
    r = bmap1[r]
    tr = trace_components(base)
    sa, sb = base.boundaries()[r][spec.col], base.boundaries()[r][j]
    # the copy runs between the two strands, against the sliding strand's direction
    flip_side = (j > spec.col) != (sb.orient == "u")
    reverse = ra != "bd" and sa.orient == sb.orient
    segs = {seg for seg, comp in tr.segment_component.items() if comp == over}
    cab = cable(base, segs, ra, lambda s: (s.orient == "u") != flip_side, reverse)
    pa, pc = cab.where[r][spec.col], cab.copy_at[r][j]
    if abs(pa - pc) != 1:
        raise MoveError("slide corridor is not clear")
    return compact(_saddle(cab.diagram, cab.bmap[r], min(pa, pc)))


def _handle_slide(diag: Diagram, spec: MoveSpec) -> Diagram:
    def allowed(ra: str, rb: str) -> bool:
        if rb not in KIRBY_ROLES or ra not in KIRBY_ROLES + ("bd",):
            return False
        return not (ra == "h1" and rb != "h1")
    return _slide(diag, spec, allowed)


def _surface_slide(diag: Diagram, spec: MoveSpec) -> Diagram:
    return _slide(diag, spec, lambda ra, rb: ra == "sf" and rb == "h1")


# band moves ------------------------------------------------------------------------

def _band_path(diag: Diagram, b: int, p: int) -> set[tuple[int, int]]:
    """Segments of a band strand followed downward to the foot that absorbs it."""
    segs = set()
    while True:
        segs.add((b, p))
        if b >= len(diag.rows):
            raise MoveError("band strand leaves the diagram")
        s = _single(diag.rows[b])
        if s is None:
            b += 1
            continue
        cell, pos = s
        n_in, n_out = cell.arity
        if p < pos:
            b += 1
        elif p >= pos + n_in:
            b, p = b + 1, p + n_out - n_in
        elif cell.kind == "dot":
            b += 1
        elif cell.kind in ("crossing_pos", "crossing_neg"):
            b, p = b + 1, pos + 1 - (p - pos)
        elif cell.kind in ("act", "dact"):
            return segs
        else:
            raise MoveError(f"band path meets a {cell.token} cell")


def _band_slide(diag: Diagram, spec: MoveSpec) -> Diagram:
    """Slide the foot of band A over the band B whose foot sits just below it.

    The foot of A travels along B and reattaches next to B's far foot, with A
    running parallel to B in between.
    """
    base, bmap = sequentialize(diag)
    if not 0 <= spec.row < len(bmap) - 1:
        raise MoveError("no band foot pair here")
    r, c = bmap[spec.row], spec.col
    if r + 2 > len(base.rows):
        raise MoveError("no band foot pair here")
    s1, s2 = _single(base.rows[r]), _single(base.rows[r + 1])
    if not (s1 and s2 and s1[1] == c and s2[1] == c):
        raise MoveError("no band foot pair here")
    width = len(base.boundaries()[r])
    if (s1[0].kind, s2[0].kind) == ("act", "coact"):
        probe = _cells("eps coa")
        head = [_cells("| coa")]
        first = (r + 1, c)
        left_copy = True
    elif (s1[0].kind, s2[0].kind) == ("dact", "dcoact"):
        probe = _cells("dcoa eps")
        head = [_cells("dcoa |")]
        first = (r + 1, c + 1)
        left_copy = False
    else:
        raise MoveError("no band foot pair here")
    trial = base.copy()
    trial.rows[r:r + 2] = [_padded(probe, c, width)]
    _checked(trial)
    segs = _band_path(trial, *first)
    cab = cable(trial, segs, "bd", lambda s: left_copy, special={r: (c, head)})
    return compact(cab.diagram)


def _swim(diag: Diagram, spec: MoveSpec, roles: tuple[str, ...]) -> Diagram:
    """Pass a strand through the band of a swim block by flipping its two crossings."""
    r, c = spec.row, spec.col
    for block in (SWIM_BLOCK, [_cells("| cup:bd |"), _cells("dact | |"), _cells("| act")]):
        if _match_block(diag, r, c, block):
            break
    else:
        raise MoveError("no swim block here")
    k = r + len(block)
    if k + 2 > len(diag.rows):
        raise MoveError("no strand crosses below the swim block")
    x1, x2 = _crossing_at(diag.rows[k]), _crossing_at(diag.rows[k + 1])
    if not (x1 and x2) or x1[0] != x2[0]:
        raise MoveError("no strand crosses below the swim block")
    if (x1[1], x2[1]) == (c + 1, c):
        xpos = c + 2
    elif (x1[1], x2[1]) == (c - 1, c):
        xpos = c - 1
    else:
        raise MoveError("no strand crosses below the swim block")
    role = diag.boundaries()[k][xpos].role
    if role not in roles:
        raise MoveError(f"a {role} strand cannot swim here")
    if role == "h1" and not spec.get("nongeometric", False):
        raise MoveError("the h1 band swim is non-geometric; pass nongeometric=True to allow it")
    flip = "/-" if x1[0] == "/+" else "/+"
    out = diag.copy()
    for i in (k, k + 1):
        out.rows[i] = [Cell.parse(flip) if cell.kind.startswith("crossing") else cell
                       for cell in out.rows[i]]
    return _checked(out)


MOVES: dict[str, Callable[[Diagram, MoveSpec], Diagram]] = {
    "r2_intro": _r2_intro,
    "r2_elim": _r2_elim,
    "r3": _r3,
    "r1_curl_transfer": _r1,
    "handle_slide": _handle_slide,
    "surface_slide": _surface_slide,
    "stabilize_blank": _stabilize(BLANK),
    "stabilize_hopf": _stabilize(HOPF),
    "destabilize": _destabilize,
    "cap": _cap,
    "cup": _cup,
    "band_slide": _band_slide,
    "band_swim": lambda d, s: _swim(d, s, ("bd", "h1")),
    "band_2handle_swim": lambda d, s: _swim(d, s, ("h2",)),
}


def apply_move(diag: Diagram, spec: MoveSpec) -> Diagram:
    try:
        fn = MOVES[spec.kind]
    except KeyError:
        raise MoveError(f"unknown move kind {spec.kind!r}") from None
    try:
        return fn(diag, spec)
    except (IndexError, KeyError) as exc:
        raise MoveError(f"{spec.kind} does not apply at {spec.row},{spec.col}: {exc}") from None


# fuzzing --------------------------------------------------------------------------

def candidate_moves(diag: Diagram, rng: random.Random) -> list[MoveSpec]:
    """Moves worth trying: every matching pattern plus a few random insertions."""
    bounds = diag.boundaries()
    tr = trace_components(diag)
    out: list[MoveSpec] = []
    nrows = len(diag.rows)
    for r in range(nrows):
        s = _single(diag.rows[r])
        if s:
            cell, pos = s
            if cell.kind.startswith("crossing"):
                out.append(MoveSpec.make("r2_elim", r, pos))
                out.append(MoveSpec.make("r3", r, pos))
                if pos:
                    out.append(MoveSpec.make("r3", r, pos - 1))
            if cell.kind.startswith("twist") and bounds[r][pos].role != "bd":
                out.append(MoveSpec.make("r1_curl_transfer", r, pos, mode="twist_to_curl",
                                         side=rng.choice(("right", "left"))))
            if cell.kind in ("act", "dact"):
                out.append(MoveSpec.make("band_slide", r, pos))
        if not _starts_with_cup(diag.rows[r]):
            continue
        for c in range(len(bounds[r]) + 1):
            if c < len(bounds[r]) and _find_curl(diag, r, c, bounds):
                out.append(MoveSpec.make("r1_curl_transfer", r, c,
                                         mode=rng.choice(("flip", "curl_to_twist"))))
            if _match_block(diag, r, c, BLANK, bounds) or _match_block(diag, r, c, HOPF, bounds):
                out.append(MoveSpec.make("destabilize", r, c))
    pairs: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for b, strands in enumerate(bounds):
        for i in range(len(strands) - 1):
            ca, cb = tr.segment_component[(b, i)], tr.segment_component[(b, i + 1)]
            if ca != cb:
                pairs.setdefault((ca, cb), []).append((b, i))
                pairs.setdefault((cb, ca), []).append((b, i + 1))
    for (a, over), sites in sorted(pairs.items()):
        b, at = rng.choice(sites)
        kind = "surface_slide" if tr.components[a].role == "sf" else "handle_slide"
        out.append(MoveSpec.make(kind, b, at, over=over))
    wide = [b for b, s in enumerate(bounds) if len(s) >= 2]
    if wide:
        b = rng.choice(wide)
        out.append(MoveSpec.make("r2_intro", b, rng.randrange(len(bounds[b]) - 1),
                                 order=rng.choice(("+-", "-+"))))
    b = rng.randrange(len(bounds))
    out.append(MoveSpec.make(rng.choice(("stabilize_blank", "stabilize_hopf")), b,
                             rng.randrange(len(bounds[b]) + 1)))
    sf = [(b, i) for b, s in enumerate(bounds) for i, x in enumerate(s) if x.role == "sf"]
    if sf:
        b, i = rng.choice(sf)
        out.append(MoveSpec.make(rng.choice(("cap", "cup")), b, i))
    return out


@dataclass
class FuzzResult:
    diagram: Diagram
    trace: list[dict] = field(default_factory=list)


def fuzz(diag: Diagram, seed: int, steps: int, max_width: int = 10,
         kinds: Iterable[str] | None = None) -> FuzzResult:
    """Apply ``steps`` random applicable moves; deterministic for a fixed seed."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    rng = random.Random(seed)
    allowed = set(kinds or KINDS)
    result = FuzzResult(diag)
    for step in range(steps):
        current = result.diagram
        pool: dict[str, list[MoveSpec]] = {}
        for spec in candidate_moves(current, rng):
            if spec.kind in allowed:
                pool.setdefault(spec.kind, []).append(spec)
        chosen = None
        while pool and chosen is None:
            kind = rng.choice(sorted(pool))
            specs = pool[kind]
            spec = specs.pop(rng.randrange(len(specs)))
            if not specs:
                del pool[kind]
            try:
                new = apply_move(current, spec)
            except MoveError:
                continue
            if max(len(s) for s in new.boundaries()) <= max_width:
                chosen = (spec, new)
        if chosen is None:
            result.trace.append({"step": step, "move": None, "note": "no applicable move"})
            continue
        spec, new = chosen
        result.trace.append({"step": step, "move": spec.to_json()})
        result.diagram = new
    return result


@dataclass
class InvarianceCheck:
    equal: bool
    left: object
    right: object

    def to_json(self) -> dict:
        return {"equal": self.equal, "left": self.left.to_json(), "right": self.right.to_json()}


def check_invariance(d1: Diagram, d2: Diagram) -> InvarianceCheck:
    from .invariant import invariant

    a, b = invariant(d1), invariant(d2)
    return InvarianceCheck(a.value is not None and a.value == b.value, a, b)


__all__ = ["KINDS", "MoveError", "MoveSpec", "apply_move", "candidate_moves", "cable",
           "check_invariance", "compact", "curl_block", "fuzz", "sequentialize", "splice",
           "FuzzResult", "InvarianceCheck"]
