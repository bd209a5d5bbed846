import pytest

from eberhard import catalog
from eberhard.catalog import (
    BadParams,
    CatalogError,
    UnknownName,
    get_entry,
    get_patch,
    get_seed,
    list_entries,
    verify_entry,
)
from eberhard.mapkernel import is_polyhedral, summarize

import oracles


@pytest.mark.parametrize("name, p", [
    ("H", {6: 1}),
    ("Q2", {4: 2}),
    ("PN35", {3: 4, 5: 4}),
    ("PF35", {3: 8, 5: 8}),
    ("PN37", {3: 6, 7: 2}),
])
def test_patch_census(name, p):
    P = get_patch(name)
    assert P.p_vector() == p
    M = P.map
    outer = len(M.faces[M.face_of[(P.patch if hasattr(P, "patch") else P).outer]])
    assert oracles.census(M) == oracles.seq_add(p, {outer: 1})


def test_octahedron():
    s = summarize(get_seed("octahedron"))
    assert s.p_vector == {3: 8} and s.v_vector == {4: 6}
    assert s.euler_characteristic == 2


def test_icosahedron():
    s = summarize(get_seed("icosahedron"))
    assert s.p_vector == {3: 20} and s.v_vector == {5: 12}


def test_torus_grid():
    M = get_seed("torus_grid", 3, 3)
    s = summarize(M)
    assert s.p_vector == {4: 9} and s.v_vector == {4: 9}
    assert s.euler_characteristic == 0
    assert is_polyhedral(M)
    assert summarize(get_seed("torus_grid(3,3)")) == s


@pytest.mark.parametrize("params", [(2, 3), (3, 2), (3,), ()])
def test_torus_grid_bad_params(params):
    with pytest.raises(BadParams):
        get_seed("torus_grid", *params)


def test_solid_takes_no_params():
    with pytest.raises(BadParams):
        get_seed("cube", 3)


def test_unknown_names():
    with pytest.raises(UnknownName):
        get_seed("dodecahedron")
    with pytest.raises(UnknownName):
        get_patch("PF37")


@pytest.mark.parametrize("name", catalog.SEED_NAMES[:-1])
def test_solids_are_polyhedral(name):
    assert is_polyhedral(get_seed(name))


def test_entry_metadata():
    e = get_entry("PN35")
    assert e.kind == "expansion_patch"
    assert [m.kind for m in e.markers] == ["square", "square"]
    assert e.provenance and all(not c.startswith("#") for c in e.provenance)
    assert get_entry("PF35").kind == "patch"


def test_list_entries():
    names = list_entries()
    assert set(catalog.PATCH_NAMES) <= set(names)
    assert "torus_grid" in names


def test_verify_entry_detects_mismatch():
    with pytest.raises(CatalogError):
        verify_entry("PN35", get_patch("Q2"))


def test_pn37_lacks_polyhedral_property_as_recorded():
    assert catalog.EXPECTED["PN37"].polyhedral_property is False
