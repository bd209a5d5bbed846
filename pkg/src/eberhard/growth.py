"""Local rewrites that enlarge two marked polygons of a 4-patch.

Every rewrite inserts only new 4-valent vertices and triangles:

* ``square``: a marked edge ``A -> B`` gains two new vertices; both
  targets grow by 1 and two triangles appear.
* ``diamond``: a marked edge shared by the targets is replaced by a strip
  of six triangles; both targets grow by 3.
* ``vertex``: a marked 4-valent vertex between the targets is replaced by
  seven vertices; both targets grow by 3 and six triangles appear.

Each step returns the relocated marker so steps can be repeated.  The
expected p-vector change is checked after every step.
"""

from __future__ import annotations

from typing import Hashable

from .expansion import ExpansionPatch, ExpansionRoles, validate_expansion_patch
from .mapkernel import MapError, OrientedMap, from_rotation
from .patchwork import GrowthMarker, Patch, PatchError
from .sequences import CountSequence


class GrowthError(ValueError):
    pass


class MarkerInvalid(GrowthError):
    pass


class NotFourPatch(GrowthError):
    pass


class PostconditionFailed(GrowthError):
    pass


Rot = dict[Hashable, list[Hashable]]


def _replace(lst: list, old, new) -> None:
    lst[lst.index(old)] = new


def _rotate_to(lst: list, first) -> list:
    i = lst.index(first)
    return lst[i:] + lst[:i]


def _gap_face(M: OrientedMap, v: int, rot_from: list[int], g: int) -> int:
    """Face in gap ``g`` at ``v``, the gap after ``rot_from[g]`` counterclockwise."""
    return M.face_of[M.arc(v, rot_from[(g + 1) % len(rot_from)])]


def _check_common(P: Patch, m: GrowthMarker) -> None:
    if P.r != 4:
        raise NotFourPatch(f"r = {P.r}")
    if m.target1 == m.target2:
        raise MarkerInvalid("targets coincide")
    if P.outer_face in (m.target1, m.target2):
        raise MarkerInvalid("a target is the outer face")
    if m.anchor not in P.map.alpha:
        raise MarkerInvalid(f"anchor dart {m.anchor} not in patch")


def square_position(P: Patch, m: GrowthMarker) -> int:
    """Common gap index (1 or 2) of the targets at both ends of the edge.

    Raises:
        MarkerInvalid: If the ends have degree other than 4 or the targets
            do not sit at the same position.
    """
    _check_common(P, m)
    M = P.map
    a, b = M.origin(m.anchor), M.head(m.anchor)
    if M.degree(a) != 4 or M.degree(b) != 4:
        raise MarkerInvalid("square edge ends must be 4-valent")
    ra = _rotate_to(M.neighbors(a), b)
    rb = _rotate_to(M.neighbors(b), a)
    for g in (1, 2):
        if _gap_face(M, a, ra, g) == m.target1 and _gap_face(M, b, rb, g) == m.target2:
            return g
    raise MarkerInvalid("targets are not at the same position around the edge ends")


def check_marker(P: Patch, m: GrowthMarker) -> None:
    """Raise :class:`MarkerInvalid` unless ``m`` is a usable marker of ``P``."""
    M = P.map
    if m.kind == "square":
        square_position(P, m)
    elif m.kind == "diamond":
        _check_common(P, m)
        faces = (M.face_of[m.anchor], M.face_of[M.alpha[m.anchor]])
        if set(faces) != {m.target1, m.target2}:
            raise MarkerInvalid("diamond edge is not the common edge of its targets")
    elif m.kind == "vertex":
        _vertex_frame(P, m)
    else:
        raise MarkerInvalid(f"unknown kind {m.kind!r}")


def _vertex_frame(P: Patch, m: GrowthMarker) -> list[int]:
    """Neighbours ``[u1, u2, d1, d2]`` with target1 after ``u2``, target2 after ``d2``."""
    _check_common(P, m)
    M = P.map
    x = M.origin(m.anchor)
    if M.degree(x) != 4:
        raise MarkerInvalid("marked vertex must be 4-valent")
    nb = M.neighbors(x)
    for t in range(4):
        fr = nb[t:] + nb[:t]
        if _gap_face(M, x, fr, 1) == m.target1 and _gap_face(M, x, fr, 3) == m.target2:
            return fr
    raise MarkerInvalid("targets are not at opposite corners of the marked vertex")


# single-step surgeries on rotation dicts; each returns the new marker as
# (anchor pair, target1 gap, target2 gap), a gap being (vertex, next neighbour)

def _square_step(rot: Rot, a, b, tag):
    ra = _rotate_to(rot[a], b)
    rb = _rotate_to(rot[b], a)
    _, a1, a2, a3 = ra
    _, b1, b2, b3 = rb
    a_, b_ = (tag, "A'"), (tag, "B'")
    rot[a] = [b, a1, a_, b_]
    rot[a_] = [a, a2, a3, b_]
    rot[b_] = [b, a, a_, b1]
    rot[b] = [a, b_, b2, b3]
    _replace(rot[a2], a, a_)
    _replace(rot[a3], a, a_)
    _replace(rot[b1], b, b_)
    return (a, b), (a, a_), (b, b2)


def _diamond_step(rot: Rot, top, bot, tag):
    a, b, c, d, lft, rgt = ((tag, s) for s in "abcdLR")
    rot[a] = [top, lft, b, rgt]
    rot[b] = [a, lft, c, rgt]
    rot[c] = [b, lft, d, rgt]
    rot[d] = [c, lft, bot, rgt]
    rot[lft] = [a, d, c, b]
    rot[rgt] = [a, b, c, d]
    _replace(rot[top], bot, a)
    _replace(rot[bot], top, d)
    return (top, a), None, None


def _vertex_step(rot: Rot, x, frame, tag):
    u1, u2, d1, d2 = frame
    top, bot, ul, ur, ll, lr, z = ((tag, s) for s in ("T", "B", "UL", "UR", "LL", "LR", "Z"))
    del rot[x]
    rot[top] = [u1, u2, ul, ur]
    rot[bot] = [lr, ll, d1, d2]
    rot[ul] = [ur, top, ll, z]
    rot[ur] = [top, ul, z, lr]
    rot[ll] = [lr, z, ul, bot]
    rot[lr] = [ur, z, ll, bot]
    rot[z] = [ur, ul, ll, lr]
    for u in (u1, u2):
        _replace(rot[u], x, top)
    for u in (d1, d2):
        _replace(rot[u], x, bot)
    return (top, ul), (top, ul), (top, u1)


def _mirror(rot: Rot) -> Rot:
    return {v: [nb[0]] + nb[:0:-1] for v, nb in rot.items()}


def _unmirror_gap(rot: Rot, gap):
    """A mirrored gap ending at ``y`` is the real gap ending after ``y``."""
    v, y = gap
    nb = rot[v]
    return v, nb[(nb.index(y) + 1) % len(nb)]


def _face_dart(M: OrientedMap, f: int, alive) -> tuple | None:
    for d in M.faces[f]:
        pair = (M.origin(d), M.head(d))
        if alive(pair):
            return pair
    return None


def _step(P: Patch, m: GrowthMarker, tag):
    """One rewrite; returns the new map, outer dart pair, new marker, key map."""
    M = P.map
    rot: Rot = {v: M.neighbors(v) for v in range(M.num_vertices)}
    k1, k2 = M.face_size(m.target1), M.face_size(m.target2)
    if m.kind == "square":
        g = square_position(P, m)
        a, b = M.origin(m.anchor), M.head(m.anchor)
        if g == 2:
            rot = _mirror(rot)
        anchor, gap1, gap2 = _square_step(rot, a, b, tag)
        if g == 2:
            rot = _mirror(rot)
            gap1, gap2 = _unmirror_gap(rot, gap1), _unmirror_gap(rot, gap2)
        grow = 1
    elif m.kind == "diamond":
        check_marker(P, m)
        d = m.anchor if M.face_of[m.anchor] == m.target1 else M.alpha[m.anchor]
        anchor, _, _ = _diamond_step(rot, M.origin(d), M.head(d), tag)
        gap1 = gap2 = None
        grow = 3
    else:
        frame = _vertex_frame(P, m)
        anchor, gap1, gap2 = _vertex_step(rot, M.origin(m.anchor), frame, tag)
        grow = 3
    try:
        N = from_rotation(rot)
    except MapError as exc:
        raise PostconditionFailed(f"rewrite produced an invalid map: {exc}") from exc
    index = {key: i for i, key in enumerate(rot)}
    new_anchor = N.arc(index[anchor[0]], index[anchor[1]])
    if m.kind == "diamond":
        t1, t2 = N.face_of[new_anchor], N.face_of[N.alpha[new_anchor]]
    else:
        t1 = N.face_of[N.arc(index[gap1[0]], index[gap1[1]])]
        t2 = N.face_of[N.arc(index[gap2[0]], index[gap2[1]])]
    marker = GrowthMarker(m.kind, new_anchor, t1, t2)
    expected = (P.p_vector() - CountSequence([(k1, 1), (k2, 1)])
                + CountSequence([(3, 2 * grow), (k1 + grow, 1), (k2 + grow, 1)]))
    return N, rot, index, marker, expected


def _translate(P: Patch, N: OrientedMap, index, m: GrowthMarker) -> GrowthMarker:
    M = P.map

    def alive(pair):
        u, v = pair
        return u in index and v in index and index[v] in N.neighbors(index[u])

    def conv(pair):
        return N.arc(index[pair[0]], index[pair[1]])

    pair = (M.origin(m.anchor), M.head(m.anchor))
    if m.kind == "vertex":
        pair = next((p for p in ((M.origin(d), M.head(d))
                                 for d in M.vertices[M.origin(m.anchor)]) if alive(p)), None)
    if pair is None or not alive(pair):
        raise MarkerInvalid("another marker was destroyed by the rewrite")
    faces = []
    for f in (m.target1, m.target2):
        fd = _face_dart(M, f, alive)
        if fd is None:
            raise MarkerInvalid("another marker's target was destroyed by the rewrite")
        faces.append(N.face_of[conv(fd)])
    return GrowthMarker(m.kind, conv(pair), faces[0], faces[1])


def _grow(P: Patch | ExpansionPatch, m: GrowthMarker, k: int, kind: str):
    if m.kind != kind:
        raise MarkerInvalid(f"expected a {kind} marker, got {m.kind}")
    if k < 0:
        raise ValueError(f"k = {k} < 0")
    roles = P.roles if isinstance(P, ExpansionPatch) else None
    patch = P.patch if isinstance(P, ExpansionPatch) else P
    if patch.r != 4:
        raise NotFourPatch(f"r = {patch.r}")
    check_marker(patch, m)
    others = [x for x in patch.markers if x != m]
    slot = patch.markers.index(m) if m in patch.markers else None
    i0 = roles.i0 if roles else None
    for step in range(k):
        M = patch.map
        old_walk = [M.origin(d) for d in patch.boundary_darts()]
        old_w = [patch.weight(v) for v in old_walk]
        N, rot, index, m_new, expected = _step(patch, m, ("g", step))
        anchor = None
        for t, d in enumerate(patch.boundary_darts()):
            u, v = M.origin(d), M.head(d)
            if u in index and v in index and index[v] in N.neighbors(index[u]):
                anchor = (t, N.arc(index[u], index[v]))
                break
        if anchor is None:
            raise PostconditionFailed("no boundary edge survived the rewrite")
        others = [_translate(patch, N, index, x) for x in others]
        try:
            new = Patch(N, anchor[1], 4)
        except PatchError as exc:
            raise PostconditionFailed(str(exc)) from exc
        walk = [N.origin(d) for d in new.map.faces[N.face_of[anchor[1]]]]
        off = walk.index(N.origin(anchor[1]))
        walk = walk[off:] + walk[:off]
        t = anchor[0]
        aligned = old_walk[t:] + old_walk[:t]
        new_w = [new.weight(v) for v in walk]
        if new_w != old_w[t:] + old_w[:t]:
            raise PostconditionFailed("boundary weights changed")
        if new.p_vector() != expected:
            raise PostconditionFailed(
                f"census {new.p_vector()} differs from expected {expected}")
        if i0 is not None:
            i0 = walk[aligned.index(i0)]
        patch, m = new, m_new
    markers = list(others)
    if slot is not None:
        markers.insert(slot, m)
    patch = patch.with_markers(markers)
    if roles is not None:
        new_roles = ExpansionRoles(roles.m, roles.n, roles.s, i0)
        E = validate_expansion_patch(patch, new_roles)
        if E.outer_tuple != P.outer_tuple:
            raise PostconditionFailed("outer tuple changed")
        return E, m
    return patch, m


def grow_square(P: Patch | ExpansionPatch, m: GrowthMarker, k: int = 1):
    """Apply ``k`` square-edge steps.

    Args:
        P: A 4-patch, or an expansion patch whose roles survive the rewrite.
        m: A ``square`` marker of ``P``.
        k: Number of steps; 0 returns ``P`` unchanged.

    Returns:
        ``(patch, marker)`` where ``marker`` is the relocated square edge.
        Other markers of ``P`` are carried over.
    """
    return _grow(P, m, k, "square")


def grow_diamond(P: Patch | ExpansionPatch, m: GrowthMarker, k: int = 1):
    """Apply ``k`` diamond-edge steps; see :func:`grow_square`."""
    return _grow(P, m, k, "diamond")


def grow_vertex(P: Patch | ExpansionPatch, m: GrowthMarker, k: int = 1):
    """Apply ``k`` marked-vertex steps; see :func:`grow_square`."""
    return _grow(P, m, k, "vertex")


def grow(P: Patch | ExpansionPatch, m: GrowthMarker, k: int = 1):
    """Dispatch on the marker kind."""
    return {"square": grow_square, "diamond": grow_diamond, "vertex": grow_vertex}[m.kind](P, m, k)
