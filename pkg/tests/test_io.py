import pytest
from hypothesis import given, settings, strategies as st

from eberhard import io
from eberhard.catalog import PATCH_NAMES, get_patch, get_seed, raw_text
from eberhard.expansion import ExpansionPatch
from eberhard.mapkernel import build_map, summarize
from eberhard.patchwork import Patch

import oracles


@pytest.mark.parametrize("name", PATCH_NAMES)
def test_catalog_files_are_canonical(name):
    text = raw_text(name)
    doc = io.parse_document(text)
    assert io.write(doc.obj, doc.comments) == text


def test_q2_file_is_expansion_patch():
    obj = io.parse(raw_text("Q2"))
    assert isinstance(obj, ExpansionPatch)
    assert obj.outer_tuple == (2, 2)


def test_pf35_file_is_plain_patch():
    obj = io.parse(raw_text("PF35"))
    assert isinstance(obj, Patch) and not isinstance(obj, ExpansionPatch)
    assert [m.kind for m in obj.markers] == ["diamond", "diamond", "diamond", "vertex"]


@pytest.mark.parametrize("name", ["tetrahedron", "icosahedron", "torus_grid(3,4)"])
def test_map_round_trip(name):
    M = get_seed(name)
    text = io.write(M)
    N = io.parse(text)
    assert N.alpha == M.alpha and N.sigma == M.sigma
    assert io.write(N) == text


def test_labels_round_trip():
    alpha, sigma = oracles.tetrahedron_tables()
    M = build_map(alpha, sigma, {0: "corner a", 5: "x"})
    N = io.parse(io.write(M))
    assert N.labels == {0: "corner a", 5: "x"}


def test_file_round_trip(tmp_path):
    E = get_patch("PN35")
    path = tmp_path / "pn35.txt"
    io.save(path, E, ["a comment"])
    doc = io.read(path)
    assert doc.comments == ["# a comment"]
    assert doc.obj.outer_tuple == E.outer_tuple
    assert io.write(doc.obj) == io.write(E)


def test_alpha_self_pair_is_not_involution():
    text = io.write(get_seed("tetrahedron"))
    lines = text.splitlines()
    d = lines[1].split()[1]
    lines[1] = f"dart {d} alpha {d} sigma {lines[1].split()[5]}"
    with pytest.raises(io.ValidationError) as info:
        io.parse("\n".join(lines) + "\n")
    assert info.value.error == "NotInvolution"


def test_invalid_patch_reports_validator():
    text = raw_text("PN35").replace("expansion_patch r 4", "expansion_patch r 3")
    with pytest.raises(io.ValidationError) as info:
        io.parse(text)
    assert info.value.error == "PatchError"


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("hello\n", 1),
    ("eberhard-map 2 map\n", 1),
    ("eberhard-map 1 torus\n", 1),
    ("eberhard-map 1 patch\n", 1),
    ("eberhard-map 1 map\ndart 0 alpha 1\n", 2),
    ("eberhard-map 1 map\ndart x alpha 1 sigma 0\n", 2),
    ("eberhard-map 1 map\ndart 0 alpha 1 sigma 0\ndart 0 alpha 1 sigma 0\n", 3),
    ("eberhard-map 1 map\nouter_face 0\n", 2),
    ("eberhard-map 1 map\nfoo 1\n", 2),
    ("eberhard-map 1 patch r 4\nrole m 1\n", 2),
    ("eberhard-map 1 patch r 4\nmarker circle 0 1 2\n", 2),
])
def test_format_errors(text, line):
    with pytest.raises(io.FormatError) as info:
        io.parse(text)
    assert info.value.line == line


def test_format_error_column():
    with pytest.raises(io.FormatError) as info:
        io.parse("eberhard-map 1 map\ndart 0 alpha y sigma 0\n")
    assert (info.value.line, info.value.column) == (2, 14)


def test_missing_outer_face():
    with pytest.raises(io.FormatError):
        io.parse("eberhard-map 1 patch r 4\ndart 0 alpha 1 sigma 0\n")


def test_missing_roles():
    text = "\n".join(l for l in raw_text("Q2").splitlines() if not l.startswith("role s")) + "\n"
    with pytest.raises(io.FormatError):
        io.parse(text)


def test_kind_of_rejects_other_objects():
    with pytest.raises(TypeError):
        io.write("not a map")


@settings(max_examples=25, deadline=None)
@given(st.integers(3, 5), st.integers(3, 5))
def test_torus_round_trip_preserves_summary(m, n):
    M = get_seed("torus_grid", m, n)
    assert summarize(io.parse(io.write(M))) == summarize(M)
