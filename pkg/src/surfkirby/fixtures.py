"""Named example diagrams with their expected values at N=6, t=1, H=2, c=2, g=1.

Several banded-unlink presentations are hand-built reconstructions of the
named surfaces; ``note`` records what was drawn.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebra import CycloNumber
from .category import CategoryParams
from .diagram import Diagram, parse

N_DEFAULT, T_DEFAULT, H_DEFAULT, C_DEFAULT, G_DEFAULT = 6, 1, 2, 2, 1


def _z(k: int) -> CycloNumber:
    return CycloNumber.from_powers(N_DEFAULT, {k: 1})


def _n(x) -> CycloNumber:
    return CycloNumber.from_int(N_DEFAULT, x)


GAUSS = _n(1) + 2 * _z(2)           # 1 + 2 zeta^2 = sqrt(3) i
GAUSS_SHIFTED = _n(2) - _z(1)       # the nE partner sum for n not divisible by 3


@dataclass(frozen=True)
class Fixture:
    name: str
    text: str
    raw: CycloNumber | None
    value: CycloNumber | None
    note: str = ""
    alt_value: CycloNumber | None = None   # a competing value from a different normalization

    def diagram(self) -> Diagram:
        return parse(self.text)


def _header(surface: bool) -> str:
    head = f"category N={N_DEFAULT} t={T_DEFAULT} H={H_DEFAULT}\n"
    if surface:
        head += f"frobenius c={C_DEFAULT}\nmodule g={G_DEFAULT}\n"
    return head


def _text(rows: list[str], surface: bool = False, comment: str = "") -> str:
    lines = [f"# {comment}"] if comment else []
    return "\n".join(lines) + ("\n" if lines else "") + _header(surface) + "diagram\n" + "\n".join(rows) + ("\n" if rows else "") + "end\n"


def _unknot_sf(n: int) -> list[str]:
    return [" ".join(["cup:sf"] * n), " ".join(["pac"] * n)]


def _torus() -> list[str]:
    # one surface circle, two self-bands whose feet interleave on the down strand
    return ["cup:sf", "| coa", "| | coa", "| /+ |", "| | act", "| act", "pac"]


def _spun_trefoil() -> list[str]:
    # two surface disks joined by one fusion band whose core is tied in a trefoil;
    # tw+ cells cancel the band's self-writhe so it carries no twisting
    return [
        "cup:sf cup:sf",
        "| coa | |",
        "| /+ | |",
        "| | | cup:bd | |",
        "| | /+ | | |",
        "| | /+ | | |",
        "| | /+ | | |",
        "| | | cap | |",
        "| | tw+ | |",
        "| | tw+ | |",
        "| | tw+ | |",
        "| | /+ |",
        "| | | act",
        "pac pac",
    ]


def _cp2(token: str) -> list[str]:
    return ["cup:h2", token, "cap"]


def _nE(n: int) -> list[str]:
    # (-1)-framed 2-handle curve linked n times with a surface circle
    rows = ["cup:h2 cup:sf", "| tw- | |"]
    rows += ["| /+ |"] * (2 * n)
    rows.append("pac pac")
    return rows


def _hopf(a: str, b: str) -> list[str]:
    return [f"cup:{a} cup:{b}", "| /- |", "| /- |", "pac pac"]


def _nE_raw(n: int) -> CycloNumber:
    return 2 * GAUSS if n % 3 == 0 else GAUSS + GAUSS_SHIFTED


def _build() -> dict[str, Fixture]:
    fx: dict[str, Fixture] = {}

    def add(name, rows, raw, value, note="", surface=False, alt=None):
        fx[name] = Fixture(name, _text(rows, surface, note), raw, value, note, alt)

    add("empty", [], _n(1), _n(1), "the 4-sphere")
    for n in (1, 2, 3):
        add(f"unknot_sf_{n}", _unknot_sf(n), _n(2 ** n), _n(2 ** n),
            f"trivial {n}-component unlink of spheres", surface=True)
    add("torus", _torus(), _n(2), _n(Fraction(1, 2)),
        "unknotted torus: one circle with two interleaved self-bands", surface=True)
    add("spun_trefoil", _spun_trefoil(), _n(2), _n(1),
        "spun trefoil: two disks and one knotted fusion band", surface=True)
    add("cp2", _cp2("/-"), GAUSS, GAUSS, "CP2: (-1)-framed unknot")
    add("cp2_bar", _cp2("/+"), GAUSS.conj(), GAUSS.conj() / 6,
        "mirror CP2: (+1)-framed unknot", alt=GAUSS.conj() / 3)
    for n in range(6):
        add(f"nE_{n}", _nE(n), _nE_raw(n), _nE_raw(n),
            f"sphere in class {n}E of CP2", surface=True)
    add("s2xc", _hopf("h2", "sf"), _n(3), _n(1),
        "S2 x {0} in S2 x C: 0-framed 2-handle Hopf-linked with a surface circle", surface=True)
    add("hopf_stab", _hopf("h1", "h2"), _n(6), _n(1), "dotted circle Hopf-linked with a 0-framed curve")
    add("blank_stab", ["cup:h2", "pac"], _n(3), _n(1), "0-framed unknotted 2-handle curve")
    for x in range(6):
        val = _n(6) if x in (0, 3) else _n(0)
        add(f"encircle_{x}", _hopf(f"k{x}", "h1"), val, None,
            f"0-framed dotted circle around a strand of degree {x}")
    return fx


FIXTURES: dict[str, Fixture] = _build()


def names() -> list[str]:
    return list(FIXTURES)


def get(name: str) -> Fixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None


def band_free_names() -> list[str]:
    return [n for n, f in FIXTURES.items() if not f.diagram().has_bands()]


# random band-free diagrams ------------------------------------------------------

def random_band_free(seed: int, params: CategoryParams | None = None,
                     max_components: int = 3, max_crossings: int = 6,
                     roles: tuple[str, ...] = ("h1", "h2", "sf", "k3", "k2")) -> Diagram:
    """A closed band-free diagram: cups, a random braid word, its inverse, then caps.

    The inverse word makes the permutation trivial so each cup closes with its
    own cap; crossing tokens in the second half are chosen freely, so the result
    is a genuinely linked, framed diagram.
    """
    rng = random.Random(seed)
    params = params or CategoryParams(N_DEFAULT, T_DEFAULT, H_DEFAULT)
    n = rng.randint(1, max_components)
    colors = [rng.choice(roles) for _ in range(n)]
    flavors = [rng.choice(("cup", "puc")) for _ in range(n)]
    width = 2 * n
    rows = [[f"{f}:{c}" for f, c in zip(flavors, colors)]]
    word = [rng.randrange(width - 1) for _ in range(rng.randint(0, max_crossings))] if width > 1 else []
    for pos in word + word[::-1]:
        row = ["|"] * pos + [rng.choice(("/+", "/-"))] + ["|"] * (width - pos - 2)
        rows.append(row)
    for _ in range(rng.randint(0, 2)):
        pos = rng.randrange(width)
        if colors[pos // 2] != "h1":
            rows.append(["|"] * pos + [rng.choice(("tw+", "tw-"))] + ["|"] * (width - pos - 1))
    rows.append(["pac" if f == "cup" else "cap" for f in flavors])
    text = (f"category N={params.N} t={params.t} H={params.d}\n"
            + (f"frobenius c={C_DEFAULT}\nmodule g={G_DEFAULT}\n" if "sf" in colors else "")
            + "diagram\n" + "\n".join(" ".join(r) for r in rows) + "\nend\n")
    return parse(text)


__all__ = ["Fixture", "FIXTURES", "get", "names", "band_free_names", "random_band_free",
           "GAUSS", "GAUSS_SHIFTED"]
