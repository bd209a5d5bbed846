import pytest

from eberhard.catalog import get_patch
from eberhard.expansion import ring
from eberhard.mapkernel import from_faces
from eberhard.patchwork import (
    FitViolation,
    GlueConflict,
    LengthMismatch,
    Patch,
    PatchError,
    assemble,
    boundary_weights,
    gonal_rotations,
    is_r_patch,
    is_self_fitting,
    is_w_k_gonal,
    glue_along,
    self_fit_violation,
)

import oracles


def polygon(n: int, r: int = 4) -> Patch:
    M = from_faces([tuple(range(n)), tuple(reversed(range(n)))])
    return Patch(M, M.faces[1][0], r)


def test_boundary_weights_hexagon():
    assert boundary_weights(get_patch("H").patch).weights == (1,) * 6


def test_boundary_weights_q2():
    assert oracles.cyclic_equal(boundary_weights(get_patch("Q2").patch).weights, (1, 2, 1, 1, 2, 1))


def test_boundary_weights_ring_of_hexagon():
    w = boundary_weights(ring(get_patch("H"), 3)).weights
    assert oracles.cyclic_equal(w, (1, 2, 1) * 3)


def test_boundary_walk_starts_at_smallest_outer_dart():
    P = get_patch("PN35").patch
    walk = boundary_weights(P)
    assert walk.vertices[0] == P.map.origin(min(P.map.faces[P.outer_face]))
    assert len(walk) == len(P.boundary_darts())


def test_is_r_patch():
    assert is_r_patch(get_patch("H").patch, 3)
    assert is_r_patch(get_patch("PN35").patch, 4)
    rep = is_r_patch(get_patch("PN35").patch, 3)
    assert not rep and rep.problems


@pytest.mark.parametrize("t, r, ok", [
    ((2, 2), 4, True),
    ((1, 2, 1, 3, 2, 3), 4, True),
    ((2, 2, 3, 2, 1, 3, 2, 1, 2, 2), 4, True),
    ((2, 1), 3, True),
    ((1, 1), 4, False),
])
def test_is_self_fitting(t, r, ok):
    assert is_self_fitting(t, r) == ok


def test_self_fit_violation_index():
    assert self_fit_violation((1, 1), 4) == 1
    assert self_fit_violation((2, 1, 2, 2), 4) == 2
    assert self_fit_violation((2, 2), 4) is None


def test_glue_two_hexagons():
    H = get_patch("H").patch
    walk = H.boundary_vertices()
    P = glue_along(H, walk[:2], H, walk[:2])
    assert P.p_vector() == {6: 2}
    assert len(P.boundary_vertices()) == 10
    assert is_r_patch(P, 3)


def test_glue_along_i_paths():
    E = get_patch("PN35")
    walk = E.walk()
    m = E.roles.m
    path1 = walk[:m + 1]
    path2 = walk[len(walk) - m - 1:]
    P = glue_along(E.patch, path1, E.patch, path2)
    assert P.p_vector() == {3: 8, 5: 8}
    assert is_r_patch(P, 4)


def test_glue_fit_violation():
    sq = polygon(4)
    walk = sq.boundary_vertices()
    # interior weights 1 + 1 != 4
    with pytest.raises(FitViolation):
        glue_along(sq, walk[:3], sq, walk[:3])


def test_glue_length_mismatch():
    sq = polygon(4)
    walk = sq.boundary_vertices()
    with pytest.raises(LengthMismatch):
        glue_along(sq, walk[:2], sq, walk[:3])


def test_glue_path_not_on_boundary():
    sq = polygon(4)
    walk = sq.boundary_vertices()
    with pytest.raises(PatchError):
        glue_along(sq, (walk[0], walk[2]), sq, walk[:2])


def test_single_hexagon_is_gonal():
    # three corners, each followed by one side vertex
    assert is_w_k_gonal(polygon(6, 3), (1,), 3, 3)
    assert is_w_k_gonal(polygon(6, 3), (), 6, 3)
    # three corners with two side vertices each would need nine vertices
    assert not is_w_k_gonal(polygon(6, 3), (1, 1), 3, 3)


def test_ring_q2_is_gonal():
    assert is_w_k_gonal(ring(get_patch("Q2"), 4), (2, 2), 4, 4)


def test_single_square_not_gonal():
    assert not is_w_k_gonal(polygon(4), (2, 2), 4, 4)


def test_pf35_is_gonal():
    P = get_patch("PF35")
    assert is_w_k_gonal(P, (1, 2, 1, 3, 2, 3), 4, 4)
    assert gonal_rotations(boundary_weights(P).weights, (1, 2, 1, 3, 2, 3), 4)


def test_patch_rejects_bad_inner_degree():
    M = get_patch("PN35").map
    with pytest.raises(PatchError):
        Patch(M, get_patch("PN35").patch.outer, 3)


def test_patch_rejects_non_planar():
    from eberhard.catalog import get_seed
    M = get_seed("torus_grid", 3, 3)
    with pytest.raises(PatchError):
        Patch(M, 0, 4)


def test_assemble_two_triangles_into_square():
    tri = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    asm = assemble([(tri, (0, 1)), (tri, (0, 1))],
                   [((0, 1), (1, 2)), ((0, 2), (1, 1))])
    P, _ = asm.to_patch(3)
    assert P.p_vector() == {3: 2}
    assert len(P.boundary_vertices()) == 4


def test_assemble_rejects_mismatched_orientation():
    tri = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    with pytest.raises(GlueConflict):
        assemble([(tri, (0, 1)), (tri, (0, 1))], [((0, 1), (1, 1)), ((0, 2), (1, 2))])
