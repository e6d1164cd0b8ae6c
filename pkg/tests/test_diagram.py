from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surfkirby.category import CategoryParams
from surfkirby.diagram import (Cell, Diagram, DiagramError, Strand, cell_outputs, link_summary,
                               parse, serialize, trace_components, validate)
from surfkirby.fixtures import FIXTURES, get, random_band_free

HEAD = "category N=6 t=1 H=2\nfrobenius c=2\nmodule g=1\ndiagram\n"


def D(*rows: str) -> Diagram:
    return parse(HEAD + "\n".join(rows) + "\nend\n")


# parsing ----------------------------------------------------------------------------

def test_header_and_comments():
    d = parse("# a comment\ncategory N=6 t=1 H=2   # trailing\nfrobenius c=2\nmodule g=1\n"
              "diagram\n\ncup:sf  # one circle\npac\nend\n")
    assert (d.params, d.c, d.g) == (CategoryParams(6, 1, 2), 2, 1)
    assert len(d.rows) == 2


def test_header_defaults():
    d = parse("category N=5\ndiagram\nend\n")
    assert d.params == CategoryParams(5, 1, 1) and d.c is None and d.g is None


@pytest.mark.parametrize("text,line,col,fragment", [
    ("category N=6\ndiagram\ncup:h2 blah\npac\nend\n", 3, 8, "unknown token"),
    ("category N=6\ndiagram\ncup:zz\npac\nend\n", 3, 1, "unknown token"),
    ("category N=6\ndiagram\ncup:h2\n| |\n| | |\nend\n", 5, 0, "arity mismatch"),
    ("category N=6\ndiagram\ncup:h2\ncap\nend\n", 4, 1, "non-dual"),
    ("category N=6\ndiagram\ncup:h2 cup:h1\n| pac |\nend\n", 4, 2, "color mismatch"),
    ("diagram\nend\n", 1, 1, "missing header"),
    ("category N=6\ndiagram\ncup:h2\n", 0, 0, "missing 'end'"),
    ("category N=6\nfoo bar\ndiagram\nend\n", 2, 1, "unknown header"),
    ("category N=6\ndiagram\ncup:h2\nend\n", 3, 0, "open boundary"),
    ("category N=6\ndiagram\nend\ncup:h2\n", 4, 1, "text after end"),
])
def test_parse_errors_carry_positions(text, line, col, fragment):
    with pytest.raises(DiagramError) as info:
        parse(text)
    errs = info.value.errors
    assert any(ln == line and c == col and fragment in m for ln, c, m in errs), errs


def test_all_errors_reported_together():
    with pytest.raises(DiagramError) as info:
        parse("category N=6\ndiagram\nfoo bar\nend\n")
    assert len(info.value.errors) == 2


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_round_trip(name):
    d = get(name).diagram()
    text = serialize(d)
    assert parse(text).structurally_equal(d)
    assert serialize(parse(text)) == text


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000))
def test_random_round_trip(seed):
    d = random_band_free(seed)
    assert serialize(parse(serialize(d))) == serialize(d)


# cells and strands ---------------------------------------------------------------------

def test_cell_tokens():
    for tok in ("|", "/+", "/-", "cap", "pac", "dot", "tw+", "tw-", "mu", "cm", "eta", "eps",
                "act", "coa", "dact", "dcoa", "cup:h1", "puc:sf", "cup:k3", "cup:bd"):
        assert Cell.parse(tok).token == tok
    with pytest.raises(ValueError):
        Cell("cup")
    with pytest.raises(ValueError):
        Cell("identity", "h1")


def test_cup_orientations():
    assert cell_outputs(Cell("cup", "h2"), []) == [Strand("h2", "u"), Strand("h2", "d")]
    assert cell_outputs(Cell("puc", "h2"), []) == [Strand("h2", "d"), Strand("h2", "u")]
    assert cell_outputs(Cell("cup", "bd"), []) == [Strand("bd"), Strand("bd")]


def test_foot_typing():
    down, up, bd = Strand("sf", "d"), Strand("sf", "u"), Strand("bd")
    assert cell_outputs(Cell("act"), [bd, down]) == [down]
    assert cell_outputs(Cell("coact"), [down]) == [bd, down]
    assert cell_outputs(Cell("dact"), [up, bd]) == [up]
    assert cell_outputs(Cell("dcoact"), [up]) == [up, bd]
    with pytest.raises(ValueError):
        cell_outputs(Cell("act"), [bd, up])
    with pytest.raises(ValueError):
        cell_outputs(Cell("mu"), [bd, down])


def test_side_by_side_concatenates():
    a, b = get("cp2").diagram(), get("unknot_sf_1").diagram()
    ab = a.side_by_side(b)
    assert ab.c == 2 and ab.g == 1
    assert len(ab.rows) == len(a.rows) + len(b.rows)
    assert ab.is_closed()


# tracing ---------------------------------------------------------------------------

def test_hopf_link_summary():
    s = link_summary(get("hopf_stab").diagram())
    # the sign depends on the orientations chosen by the cups
    assert s.linking_matrix in ([[0, 1], [1, 0]], [[0, -1], [-1, 0]])
    assert s.dotted_flags == [True, False]


@pytest.mark.parametrize("token,framing", [("/-", -1), ("/+", 1)])
def test_curl_framing(token, framing):
    s = link_summary(get("cp2" if token == "/-" else "cp2_bar").diagram())
    assert s.linking_matrix == [[framing]]


def test_twists_count_toward_framing():
    s = link_summary(D("cup:h2", "tw+ |", "| tw+", "pac"))
    assert s.linking_matrix == [[2]]


def test_band_counts():
    assert (lambda s: (s.s, s.omega))(link_summary(get("torus").diagram())) == (2, 0)
    assert (lambda s: (s.s, s.omega))(link_summary(get("spun_trefoil").diagram())) == (0, 1)
    assert link_summary(get("unknot_sf_3").diagram()).surface_components == 3


def test_band_crossings_are_skipped():
    tr = trace_components(get("spun_trefoil").diagram())
    roles = {c.cid: c.role for c in tr.components}
    assert all(roles[a] != "bd" and roles[b] != "bd" for _, _, a, b in tr.crossings)


def test_components_in_reading_order():
    tr = trace_components(get("s2xc").diagram())
    assert [c.role for c in tr.components] == ["h2", "sf"]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_linking_matrix_is_symmetric_integer(seed):
    s = link_summary(random_band_free(seed))
    m = s.linking_matrix
    assert all(m[i][j] == m[j][i] and isinstance(m[i][j], int)
               for i in range(len(m)) for j in range(len(m)))


# validation -------------------------------------------------------------------------

def test_framed_dotted_circle_is_rejected():
    assert validate(D("cup:h1", "tw+ |", "pac"))["errors"]


def test_linked_dotted_circles_are_rejected():
    errs = validate(D("cup:h1 cup:h1", "| /- |", "| /- |", "pac pac"))["errors"]
    assert any("linked" in e for e in errs)


def test_surface_through_dotted_circle_warns():
    rep = validate(D("cup:sf cup:h1", "| /- |", "| /- |", "pac pac"))
    assert not rep["errors"] and rep["warnings"]


def test_footless_band_warns():
    rep = validate(D("cup:bd", "cap"))
    assert any("no feet" in w for w in rep["warnings"])


def test_open_diagram_is_not_valid():
    d = get("cp2").diagram().copy()
    d.rows = d.rows[:-1]
    assert validate(d)["errors"] == ["diagram is not closed"]
