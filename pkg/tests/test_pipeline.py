from fractions import Fraction

import pytest

from eberhard.catalog import get_patch, get_seed
from eberhard.expansion import ring
from eberhard.mapkernel import is_polyhedral, summarize
from eberhard.pipeline import (
    BadChi,
    Family,
    FamilySpec,
    MissingPF37,
    NotSelfFitting,
    PatchShapeMismatch,
    PolyhedralityFailed,
    check_admissible,
    expand_map,
    expand_map_detailed,
    expand_polyhedral,
    family_patches,
    realize_family,
)

import oracles
from corpus import realization


# admissibility

def test_admissible_tetrahedron():
    rep = check_admissible({3: 4}, {3: 4}, 2)
    assert rep.admissible
    assert (rep.eq6_lhs, rep.eq4_lhs) == (12, 8)


def test_admissible_torus():
    rep = check_admissible({4: 16}, {4: 16}, 0)
    assert rep.admissible and rep.eq6_lhs == 0 and rep.eq4_lhs == 0


def test_not_admissible():
    rep = check_admissible({3: 1}, {3: 1}, 2)
    assert not rep.admissible
    assert rep.eq6_lhs == 3


def test_unequal_weighted_sums_not_admissible():
    rep = check_admissible({3: 4}, {4: 2}, 2)
    assert not rep.sum_faces_eq_sum_vertices_weighted and not rep.admissible


@pytest.mark.parametrize("chi", [3, 1, -1, 4])
def test_bad_chi(chi):
    with pytest.raises(BadChi):
        check_admissible({3: 4}, {3: 4}, chi)


def test_report_as_dict():
    d = check_admissible({3: 4}, {3: 4}, 2).as_dict()
    assert d["admissible"] is True and d["chi"] == 2


# expand_map

def test_expand_cube_with_q2_rings():
    res = expand_map_detailed(get_seed("cube"), (2, 2), ring(get_patch("Q2"), 4))
    s = summarize(res.map)
    assert s.euler_characteristic == 2
    assert s.p_vector == {4: 54}
    d = s.num_vertices - 8
    assert d > 0 and s.v_vector == {3: 8, 4: d}
    assert is_polyhedral(res.map)
    assert res.num_seed_vertices == 8
    assert all(res.map.degree(v) == 3 for v in range(8))


def test_expand_octahedron_with_pn35_rings():
    s = summarize(expand_map(get_seed("octahedron"), (1, 2, 1, 3, 2, 3), ring(get_patch("PN35"), 3)))
    assert s.p_vector == oracles.seq_scale(8, {3: 13, 5: 12})
    assert s.p_vector == {3: 104, 5: 96}
    assert set(s.v_vector) == {4} and s.v_vector[4] > 6


def test_expand_tetrahedron_r3():
    s = summarize(expand_map(get_seed("tetrahedron"), (2, 1), ring(get_patch("H"), 3)))
    assert s.v_vector == {3: s.num_vertices}
    assert s.p_vector == oracles.seq_scale(4, {3: 1, 6: 3})


def test_assignment_by_face_size():
    assign = {4: ring(get_patch("Q2"), 4), 3: ring(get_patch("Q2"), 3)}
    s = summarize(expand_map(get_seed("cube"), (2, 2), assign))
    assert s.p_vector == {4: 54}


def test_not_self_fitting():
    with pytest.raises(NotSelfFitting):
        expand_map(get_seed("cube"), (1, 1), ring(get_patch("Q2"), 4))


def test_shape_mismatch():
    with pytest.raises(PatchShapeMismatch):
        expand_map(get_seed("octahedron"), (2, 2), ring(get_patch("Q2"), 4))


# expand_polyhedral

def test_octahedron_pn35_all_four_valent():
    M = expand_polyhedral(get_seed("octahedron"), get_patch("PN35"))
    assert is_polyhedral(M)
    assert set(summarize(M).v_vector) == {4}


def test_torus_with_pf35():
    seed = get_seed("torus_grid", 3, 3)
    M = expand_polyhedral(seed, get_patch("PN35"), get_patch("PF35"))
    s = summarize(M)
    assert s.p_vector == oracles.seq_scale(9, {3: 8, 5: 8}) == {3: 72, 5: 72}
    assert s.euler_characteristic == 0


def test_cube_q2():
    assert summarize(expand_polyhedral(get_seed("cube"), get_patch("Q2"))).p_vector == {4: 54}


def test_non_polyhedral_patch_detected():
    # PN37 lacks the polyhedral property and its expansion is not polyhedral
    with pytest.raises(PolyhedralityFailed) as info:
        expand_polyhedral(get_seed("octahedron"), get_patch("PN37"))
    assert len(info.value.witness) == 2


# families

def test_family_spec():
    spec = FamilySpec("3:5", 1)
    assert spec.family is Family.THREE_FIVE
    assert spec.l == 8 and spec.q == {3: 4, 8: 1} and spec.w == {4: 1}
    assert FamilySpec("3:7", 2).q == {3: 9, 13: 1}
    with pytest.raises(ValueError):
        FamilySpec("3:5", -1)
    with pytest.raises(ValueError):
        FamilySpec("3:5", 0, 0)
    with pytest.raises(ValueError):
        FamilySpec("4:5", 0)


@pytest.mark.parametrize("family, k", [("3:5", 0), ("3:5", 1), ("3:5", 2), ("3:7", 0), ("3:7", 1)])
def test_family_patches_faces(family, k):
    pat = family_patches(FamilySpec(family, k))
    l = FamilySpec(family, k).l
    assert set(pat.normal.p_vector()) == {3, l}
    assert set(pat.polyhedral.p_vector()) == {3, l}
    if pat.four_gon is not None:
        assert set(pat.four_gon.p_vector()) == {3, l}


def test_realize_octahedron_k0():
    rep = realization("octahedron", "3:5", 0)
    assert rep.delta_p == {3: 96, 5: 96}
    assert rep.c == 96 and rep.polyhedral
    assert set(rep.result.v_vector) == {4}
    assert rep.d == rep.result.num_vertices - 6


def test_realize_torus_k0():
    rep = realization("torus_grid(3,3)", "3:5", 0)
    assert rep.c == 72
    assert rep.d == rep.result.num_vertices - 9
    assert rep.result.euler_characteristic == 0


def test_realize_octahedron_k1():
    rep = realization("octahedron", "3:5", 1)
    c = oracles.ratio(dict(rep.delta_p), {3: 4, 8: 1})
    assert c is not None and c > 0 and rep.c == c


def test_realize_report_dict():
    d = realization("octahedron", "3:5", 0).as_dict()
    assert d["c"] == "96" and d["polyhedral"] is True and d["q"] == {3: 1, 5: 1}


def test_four_gon_seed_needs_two_passes_after_growth():
    # grown four-gon patches are not polyhedral on their own
    with pytest.raises(PolyhedralityFailed):
        realize_family(get_seed("cube"), FamilySpec("3:5", 1, 1))
    rep = realization("cube", "3:5", 1, 2)
    assert rep.c > 0 and rep.polyhedral


def test_missing_pf37():
    with pytest.raises(MissingPF37):
        realize_family(get_seed("torus_grid", 3, 3), FamilySpec("3:7", 0))


def test_pf37_must_fit_last_pass():
    # a patch shaped for the normal 3:7 tuple cannot be used in a single pass
    fake = ring(get_patch("PN37"), 4)
    with pytest.raises(MissingPF37):
        realize_family(get_seed("torus_grid", 3, 3), FamilySpec("3:7", 0, 1), fake)


def test_c_is_fraction_or_none():
    rep = realization("octahedron", "3:7", 0)
    assert isinstance(rep.c, Fraction) and rep.c.denominator == 1
