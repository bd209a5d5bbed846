import pytest

from eberhard.catalog import get_patch
from eberhard.expansion import (
    ExpansionRoles,
    I0Condition,
    KTooSmall,
    OsNotOne,
    OuterTupleNotSelfFitting,
    RolesMismatch,
    SelfFitAlongI,
    edge_patch,
    has_polyhedral_property,
    ring,
    ring_with_origins,
    validate_expansion_patch,
)
from eberhard.patchwork import is_r_patch, is_w_k_gonal

import oracles


@pytest.mark.parametrize("name, outer", [
    ("H", (2, 1)),
    ("Q2", (2, 2)),
    ("PN35", (1, 2, 1, 3, 2, 3)),
    ("PN37", (2, 2, 3, 2, 1, 3, 2, 1, 2, 2)),
])
def test_outer_tuples(name, outer):
    E = get_patch(name)
    assert E.outer_tuple == outer
    again = validate_expansion_patch(E.patch, E.roles)
    assert again.outer_tuple == outer


def test_role_labels_and_positions():
    E = get_patch("PN35")
    ro = E.roles
    labels = ro.labels()
    assert len(labels) == ro.length == len(E.walk())
    for i, lab in enumerate(labels):
        assert ro.position(lab) == i
    assert E.vertex("i0") == E.roles.i0
    assert E.vertex(f"i{ro.m}") == E.vertex("o0")


def test_roles_reject_bad_s():
    with pytest.raises(RolesMismatch):
        ExpansionRoles(1, 3, 3, 0)
    with pytest.raises(RolesMismatch):
        ExpansionRoles(0, 3, 1, 0)


def test_wrong_length():
    E = get_patch("Q2")
    with pytest.raises(RolesMismatch):
        validate_expansion_patch(E.patch, ExpansionRoles(1, 4, 2, E.roles.i0))


def test_i0_condition():
    E = get_patch("Q2")
    walk = E.walk()
    with pytest.raises(I0Condition):
        validate_expansion_patch(E.patch, ExpansionRoles(1, 3, 2, walk[1]))


def test_os_not_one():
    E = get_patch("Q2")
    with pytest.raises(OsNotOne):
        validate_expansion_patch(E.patch, ExpansionRoles(1, 3, 1, E.roles.i0))


def test_self_fit_along_i():
    E = get_patch("PN35")
    with pytest.raises(SelfFitAlongI):
        validate_expansion_patch(E.patch, ExpansionRoles(3, 5, 1, E.roles.i0))


def test_outer_tuple_not_self_fitting():
    E = get_patch("PN35")
    with pytest.raises(OuterTupleNotSelfFitting):
        validate_expansion_patch(E.patch, ExpansionRoles(1, 9, 3, E.roles.i0))


@pytest.mark.parametrize("name, k, expected", [
    ("H", 6, {6: 7}),
    ("Q2", 4, {4: 9}),
    ("PN35", 3, {3: 13, 5: 12}),
])
def test_ring_examples(name, k, expected):
    R = ring(get_patch(name), k)
    assert R.p_vector() == expected
    assert oracles.census(R.map) == oracles.seq_add(expected, {len(R.boundary_darts()): 1})


@pytest.mark.parametrize("name", ["H", "Q2", "PN35", "PN37"])
def test_ring_is_outer_gonal(name):
    E = get_patch(name)
    for k in (3, 4, 5):
        R = ring(E, k)
        assert is_w_k_gonal(R, E.outer_tuple, k, E.r)
        assert is_r_patch(R, E.r)


def test_ring_origins_cover_all_faces():
    E = get_patch("PN35")
    R, origin = ring_with_origins(E, 4)
    inner = R.inner_faces()
    assert set(origin) == set(inner)
    assert [origin[f] for f in inner].count((0, -1)) == 1
    assert {origin[f][0] for f in inner} == {0, 1, 2, 3, 4}


def test_ring_k_too_small():
    with pytest.raises(KTooSmall):
        ring(get_patch("Q2"), 2)


@pytest.mark.parametrize("name, expected", [
    ("H", {6: 4}),
    ("Q2", {4: 8}),
    ("PN35", {3: 16, 5: 16}),
    ("PN37", {3: 24, 7: 8}),
])
def test_edge_patch(name, expected):
    P = edge_patch(get_patch(name))
    assert P.p_vector() == expected


@pytest.mark.parametrize("name", ["H", "Q2", "PN35"])
def test_polyhedral_property_holds(name):
    rep = has_polyhedral_property(get_patch(name))
    assert rep and rep.witness is None


def test_pn37_lacks_polyhedral_property():
    rep = has_polyhedral_property(get_patch("PN37"))
    assert not rep
    (c1, f1), (c2, f2) = rep.witness
    assert 0 <= c1 < 4 and 0 <= c2 < 4
