import pytest

from eberhard.catalog import get_patch
from eberhard.mapkernel import is_simple_valid_map
from eberhard.patchwork import is_r_patch, is_w_k_gonal
from eberhard.search import (
    BoundsExhausted,
    SearchBounds,
    SearchError,
    SearchStats,
    search_patch,
)

import oracles

O35 = (1, 2, 1, 3, 2, 3)
O37 = (2, 2, 3, 2, 1, 3, 2, 1, 2, 2)


def _check(P, w, k, r, gons):
    assert is_r_patch(P, r)
    assert is_w_k_gonal(P, w, k, r)
    assert set(P.p_vector()) <= set(gons)
    # the patch map is simple apart from 2-valent boundary vertices
    rep = is_simple_valid_map(P.map)
    assert not rep.loops and not rep.multi_edges


def test_grid_patch():
    P = search_patch((2, 2), 4, {4}, 4, SearchBounds(max_faces=12, max_vertices=30))
    _check(P, (2, 2), 4, 4, {4})
    # same census as the ring of Q2 around a square
    assert P.p_vector() == {4: 9}
    assert P.p_vector() == oracles.ring_census(4, {4: 2})


def test_hexagon_ring_class():
    P = search_patch((2, 1), 3, {6}, 6, SearchBounds(max_faces=10, max_vertices=40))
    _check(P, (2, 1), 6, 3, {6})
    assert P.p_vector() == oracles.ring_census(6, {6: 1})


def test_hexagon_ring_with_four_corners_does_not_exist():
    # hexagonal 3-patches have six more 2-valent than 3-valent boundary
    # vertices, and a (2,1)-k-gonal boundary has k more, so k must be 6
    assert search_patch((2, 1), 3, {6}, 4, SearchBounds(max_faces=20, max_vertices=60)) is None


def test_four_gon_patch_of_triangles_and_pentagons():
    stats = SearchStats()
    P = search_patch(O35, 4, {3, 5}, 4, SearchBounds(max_faces=20, max_vertices=40), stats)
    _check(P, O35, 4, 4, {3, 5})
    # the smallest solution has the census of the catalog four-gon patch
    assert P.p_vector() == get_patch("PF35").p_vector()
    assert stats.nodes > 0


def test_symmetric_search():
    P = search_patch(O35, 4, {3, 5}, 4, SearchBounds(max_faces=30, max_vertices=60),
                     symmetric=True)
    _check(P, O35, 4, 4, {3, 5})
    assert P.p_vector() == {3: 10, 5: 10}


def test_symmetric_grid_has_no_central_vertex():
    # the 3 x 3 grid has a central face, so no half-turn fixes a vertex
    assert search_patch((2, 2), 4, {4}, 4, SearchBounds(max_faces=9, max_vertices=16),
                        symmetric=True) is None


def test_single_face_bound():
    assert search_patch((2, 2), 4, {4}, 4, SearchBounds(max_faces=1, max_vertices=100)) is None


def test_node_budget():
    with pytest.raises(BoundsExhausted) as info:
        search_patch(O37, 4, {3, 7}, 4, SearchBounds(max_faces=60, max_vertices=80, max_nodes=500))
    assert info.value.nodes == 500


@pytest.mark.parametrize("args", [
    ((2, 2), 2, {4}, 4),
    ((2, 2), 4, {2}, 4),
    ((2, 4), 4, {4}, 4),
    ((2, 2), 4, set(), 4),
])
def test_bad_input(args):
    with pytest.raises(SearchError):
        search_patch(*args)


def test_symmetric_needs_even_corners():
    with pytest.raises(SearchError):
        search_patch((2, 1), 3, {6}, 3, symmetric=True)
