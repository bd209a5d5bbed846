"""Patches, boundary weights, fitting and gluing.

A patch is a planar map with one distinguished outer face whose boundary is
a simple cycle.  Inner vertices have valence ``r`` and boundary vertices
valence between 2 and ``r``; a boundary vertex ``v`` has weight
``w(v) = deg(v) - 1``, the number of inner faces at ``v``.

All gluing goes through :func:`assemble`, which works on counterclockwise
neighbour lists.  Each boundary vertex of a piece contributes the fan of
neighbours on its inner side; fans that meet at an identified vertex are
chained into a new rotation.  A closed chain makes an inner vertex and an
open chain a boundary vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence

from .mapkernel import MapError, OrientedMap, from_rotation, is_simple_valid_map
from .sequences import CountSequence


class PatchError(ValueError):
    """A structure that is not a valid patch."""


class LengthMismatch(PatchError):
    pass


class FitViolation(PatchError):
    def __init__(self, index: int, message: str):
        super().__init__(f"index {index}: {message}")
        self.index = index


class ResultNotRPatch(PatchError):
    pass


class GlueConflict(PatchError):
    pass


MARKER_KINDS = ("square", "diamond", "vertex")


@dataclass(frozen=True)
class GrowthMarker:
    """A growth point of a patch.

    Attributes:
        kind: ``"square"`` or ``"diamond"`` for a marked edge, ``"vertex"``
            for a marked vertex.
        anchor: A dart.  For edges it names the edge and its direction; for
            ``"vertex"`` its origin is the marked vertex.  For ``"square"``
            the origin touches ``target1`` and the head touches ``target2``.
        target1: Face index of the first polygon to grow.
        target2: Face index of the second polygon to grow.
    """

    kind: str
    anchor: int
    target1: int
    target2: int

    def __post_init__(self):
        if self.kind not in MARKER_KINDS:
            raise ValueError(f"unknown marker kind {self.kind!r}")


class Patch:
    """A validated patch with explicit valence parameter ``r``.

    Args:
        M: The map including the outer face.
        outer: Any dart on the outer face; stored as the face's smallest dart.
        r: Valence of inner vertices.
        markers: Growth markers carried along for later rewriting.

    Raises:
        PatchError: If the map is not a planar patch with these parameters.
    """

    __slots__ = ("map", "outer", "r", "markers")

    def __init__(self, M: OrientedMap, outer: int, r: int,
                 markers: Iterable[GrowthMarker] = ()):
        if outer not in M.alpha:
            raise PatchError(f"outer dart {outer} not in map")
        self.map = M
        self.outer = M.faces[M.face_of[outer]][0]
        self.r = int(r)
        self.markers = tuple(markers)
        self._validate()

    def _validate(self):
        M = self.map
        if M.euler_characteristic != 2:
            raise PatchError(f"not planar: chi = {M.euler_characteristic}")
        rep = is_simple_valid_map(M)
        if rep.loops or rep.multi_edges:
            raise PatchError("; ".join(rep.messages()[:3]))
        walk = self.boundary_vertices()
        if len(set(walk)) != len(walk):
            raise PatchError("outer boundary is not a simple cycle")
        if len(walk) < 3:
            raise PatchError("outer boundary shorter than 3")
        on_boundary = set(walk)
        for v in range(M.num_vertices):
            d = M.degree(v)
            if v in on_boundary:
                if not 2 <= d <= self.r:
                    raise PatchError(f"boundary vertex {v} has degree {d}, r = {self.r}")
            elif d != self.r:
                raise PatchError(f"inner vertex {v} has degree {d}, r = {self.r}")
        for m in self.markers:
            if m.anchor not in M.alpha:
                raise PatchError(f"marker anchor {m.anchor} not a dart")
            for f in (m.target1, m.target2):
                if not 0 <= f < M.num_faces:
                    raise PatchError(f"marker target {f} not a face")

    @property
    def outer_face(self) -> int:
        return self.map.face_of[self.outer]

    def boundary_darts(self) -> tuple[int, ...]:
        """Darts of the outer face in walk order, starting at the smallest."""
        return self.map.faces[self.outer_face]

    def boundary_vertices(self) -> tuple[int, ...]:
        return tuple(self.map.origin(d) for d in self.boundary_darts())

    def weight(self, v: int) -> int:
        return self.map.degree(v) - 1

    def inner_faces(self) -> list[int]:
        return [f for f in range(self.map.num_faces) if f != self.outer_face]

    def p_vector(self) -> CountSequence:
        of = self.outer_face
        return CountSequence((len(face), 1) for f, face in enumerate(self.map.faces)
                             if f != of)

    def with_markers(self, markers: Iterable[GrowthMarker]) -> "Patch":
        return Patch(self.map, self.outer, self.r, markers)

    def __repr__(self) -> str:
        return (f"Patch(r={self.r}, V={self.map.num_vertices}, "
                f"p={self.p_vector()}, boundary={len(self.boundary_darts())})")


@dataclass(frozen=True)
class BoundaryWalk:
    """Outer boundary as parallel tuples of vertices and weights."""

    vertices: tuple[int, ...]
    weights: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def boundary_weights(P: Patch) -> BoundaryWalk:
    vs = P.boundary_vertices()
    return BoundaryWalk(vs, tuple(P.weight(v) for v in vs))


@dataclass(frozen=True)
class RPatchReport:
    ok: bool
    problems: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok


def is_r_patch(P: Patch, r: int) -> RPatchReport:
    """Check inner valences equal ``r`` and boundary degrees lie in ``[2, r]``."""
    M = P.map
    on_boundary = set(P.boundary_vertices())
    problems = []
    for v in range(M.num_vertices):
        d = M.degree(v)
        if v in on_boundary and not 2 <= d <= r:
            problems.append(f"boundary vertex {v}: degree {d}")
        elif v not in on_boundary and d != r:
            problems.append(f"inner vertex {v}: degree {d}")
    return RPatchReport(not problems, tuple(problems))


def is_self_fitting(t: Sequence[int], r: int) -> bool:
    n = len(t)
    return all(t[i] + t[n - 1 - i] == r for i in range(n))


def self_fit_violation(t: Sequence[int], r: int) -> int | None:
    """First 1-based index breaking the self-fitting identity, if any."""
    n = len(t)
    for i in range(n):
        if t[i] + t[n - 1 - i] != r:
            return i + 1
    return None


def gonal_rotations(weights: Sequence[int], w: Sequence[int], k: int) -> list[int]:
    """Start offsets at which ``weights`` reads ``k`` times ``(1, *w)``."""
    L = len(weights)
    unit = (1, *w)
    if k < 1 or L != k * len(unit):
        return []
    pattern = unit * k
    return [t for t in range(L)
            if all(weights[(t + i) % L] == pattern[i] for i in range(L))]


def is_w_k_gonal(P: Patch, w: Sequence[int], k: int, r: int) -> bool:
    """Whether the boundary is ``k`` weight-1 corners each followed by ``w``."""
    if not is_r_patch(P, r):
        return False
    return bool(gonal_rotations(boundary_weights(P).weights, tuple(w), k))


# gluing engine

Key = Hashable


def patch_rotation(P: Patch) -> tuple[dict[int, list[int]], tuple[int, int]]:
    """Neighbour lists of ``P`` and its outer dart as a vertex pair."""
    M = P.map
    rot = {v: M.neighbors(v) for v in range(M.num_vertices)}
    return rot, (M.origin(P.outer), M.head(P.outer))


def outer_fans(rot: Mapping[Key, Sequence[Key]], outer: tuple[Key, Key]) -> dict[Key, list[Key]]:
    """Inner-side neighbour fan of each boundary vertex.

    If the outer walk passes ``x -> v -> y`` the fan at ``v`` lists the
    neighbours counterclockwise from ``y`` to ``x``.
    """
    fans: dict[Key, list[Key]] = {}
    a, b = outer
    start = (a, b)
    while True:
        nb = rot[b]
        i = nb.index(a)
        if b in fans:
            raise GlueConflict(f"outer boundary revisits {b!r}")
        fans[b] = [nb[(i + 1 + t) % len(nb)] for t in range(len(nb))]
        a, b = b, fans[b][0]
        if (a, b) == start:
            break
    return fans


@dataclass
class Assembly:
    """Result of :func:`assemble`.

    Attributes:
        rotation: Neighbour lists keyed by global vertex key.
        outer: Outer dart as a global key pair, or None if closed.
        vertex_key: Global key of each ``(piece, local key)``.
    """

    rotation: dict[Key, list[Key]]
    outer: tuple[Key, Key] | None
    vertex_key: dict[tuple[int, Key], Key]

    def to_map(self) -> tuple[OrientedMap, dict[Key, int]]:
        try:
            M = from_rotation(self.rotation)
        except MapError as exc:
            raise GlueConflict(str(exc)) from exc
        return M, {key: i for i, key in enumerate(self.rotation)}

    def to_patch(self, r: int) -> tuple[Patch, dict[Key, int]]:
        M, index = self.to_map()
        if self.outer is None:
            raise GlueConflict("assembly has no outer boundary")
        u, v = self.outer
        return Patch(M, M.arc(index[u], index[v]), r), index


def assemble(pieces: Sequence[tuple[Mapping[Key, Sequence[Key]], tuple[Key, Key] | None]],
             merges: Iterable[tuple[tuple[int, Key], tuple[int, Key]]],
             names: Mapping[tuple[int, Key], Key] | None = None) -> Assembly:
    """Glue pieces by identifying boundary vertices.

    Args:
        pieces: ``(rotation, outer_dart)`` per piece, with piece-local keys;
            ``outer_dart`` None means the piece has no boundary.
        merges: Pairs ``((i, key), (j, key))`` of vertices to identify.
        names: Optional global key for a ``(piece, key)``; other vertices
            are keyed by their first ``(piece, key)`` occurrence.

    Raises:
        GlueConflict: If the fans at a vertex do not chain into a single
            cycle or path, or if a neighbour repeats.
    """
    parent: dict[tuple[int, Key], tuple[int, Key]] = {}
    order: dict[tuple[int, Key], int] = {}
    for i, (rot, _) in enumerate(pieces):
        for u in rot:
            parent[(i, u)] = (i, u)
            order[(i, u)] = len(order)

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for a, b in merges:
        ra, rb = find(a), find(b)
        if ra != rb:
            if order[rb] < order[ra]:
                ra, rb = rb, ra
            parent[rb] = ra

    named: dict[tuple[int, Key], Key] = {}
    if names:
        for x, g in names.items():
            root = find(x)
            if root in named and named[root] != g:
                raise GlueConflict(f"two names for one vertex: {named[root]!r}, {g!r}")
            named[root] = g

    def gkey(x):
        root = find(x)
        return named.get(root, root)

    vertex_key = {x: gkey(x) for x in parent}
    fans: dict[Key, list[tuple[str, list[Key]]]] = {}
    for i, (rot, outer) in enumerate(pieces):
        local = outer_fans(rot, outer) if outer is not None else {}
        for u, nbrs in rot.items():
            g = vertex_key[(i, u)]
            kind = "open" if u in local else "closed"
            nb = local[u] if u in local else nbrs
            fans.setdefault(g, []).append((kind, [vertex_key[(i, x)] for x in nb]))

    rotation: dict[Key, list[Key]] = {}
    outer_arc = None
    for g, fl in fans.items():
        if any(kind == "closed" for kind, _ in fl):
            if len(fl) != 1:
                raise GlueConflict(f"inner vertex {g!r} identified with another vertex")
            rotation[g] = list(fl[0][1])
            continue
        fl = [f for _, f in fl]
        by_first: dict[Key, list[Key]] = {}
        for f in fl:
            if f[0] in by_first:
                raise GlueConflict(f"two fans at {g!r} start at {f[0]!r}")
            by_first[f[0]] = f
        lasts = {f[-1] for f in fl}
        starts = [f for f in fl if f[0] not in lasts]
        if len(starts) > 1:
            raise GlueConflict(f"fans at {g!r} form {len(starts)} separate chains")
        chain = [starts[0] if starts else fl[0]]
        while len(chain) < len(fl):
            nxt = by_first.get(chain[-1][-1])
            if nxt is None or nxt is chain[0]:
                break
            chain.append(nxt)
        if len(chain) != len(fl):
            raise GlueConflict(f"fans at {g!r} do not form a single chain")
        if starts:
            rot_g = [x for f in chain[:-1] for x in f[:-1]] + chain[-1]
            if outer_arc is None:
                outer_arc = (g, chain[0][0])
        else:
            if chain[-1][-1] != chain[0][0]:
                raise GlueConflict(f"fans at {g!r} do not close up")
            rot_g = [x for f in chain for x in f[:-1]]
        if len(set(rot_g)) != len(rot_g):
            raise GlueConflict(f"repeated neighbour at {g!r}")
        rotation[g] = rot_g
    return Assembly(rotation, outer_arc, vertex_key)


def boundary_path_positions(P: Patch, path: Sequence[int]) -> int:
    """Offset of ``path`` as a contiguous run of the boundary walk.

    Raises:
        PatchError: If ``path`` is not such a run.
    """
    walk = P.boundary_vertices()
    L = len(walk)
    if not path or len(path) > L:
        raise PatchError("path length out of range")
    try:
        t = walk.index(path[0])
    except ValueError:
        raise PatchError(f"vertex {path[0]} not on boundary") from None
    if any(walk[(t + i) % L] != v for i, v in enumerate(path)):
        raise PatchError("path does not follow the boundary walk")
    return t


def glue_along(P1: Patch, path1: Sequence[int], P2: Patch, path2: Sequence[int]) -> Patch:
    """Glue two patches along boundary paths with ``v_i = u_{n+1-i}``.

    Both paths are vertex sequences in walk order.  Interior positions need
    weight sums equal to ``r``; the end positions need sums at most ``r``.

    Raises:
        LengthMismatch, FitViolation, ResultNotRPatch.
    """
    n = len(path1)
    if n != len(path2):
        raise LengthMismatch(f"{n} != {len(path2)}")
    if P1.r != P2.r:
        raise PatchError(f"r differs: {P1.r} vs {P2.r}")
    if n < 2:
        raise LengthMismatch("paths need at least two vertices")
    r = P1.r
    boundary_path_positions(P1, path1)
    boundary_path_positions(P2, path2)
    for i in range(n):
        s = P1.weight(path1[i]) + P2.weight(path2[n - 1 - i])
        if 0 < i < n - 1 and s != r:
            raise FitViolation(i + 1, f"weights sum to {s}, need {r}")
        if i in (0, n - 1) and s > r:
            raise FitViolation(i + 1, f"weights sum to {s} > {r}")
    pieces = [patch_rotation(P1), patch_rotation(P2)]
    merges = [((0, path1[i]), (1, path2[n - 1 - i])) for i in range(n)]
    asm = assemble(pieces, merges)
    try:
        P, _ = asm.to_patch(r)
    except PatchError as exc:
        raise ResultNotRPatch(str(exc)) from exc
    return P
