"""Oriented combinatorial maps encoded by two permutations on darts.

A map is a pair of permutations on a finite dart set: ``alpha`` pairs the
two darts of an edge and ``sigma`` sends a dart to the next dart
counterclockwise around its origin.  Vertices are ``sigma``-orbits, edges
are ``alpha``-orbits and faces are orbits of ``phi = sigma . alpha``, so
the face to the left of ``u -> v`` continues with ``v -> succ_v(u)``.

Vertices and faces are numbered by the smallest dart they contain, and
every orbit tuple starts at that dart.  This keeps all derived numbering a
pure function of the dart tables.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from .sequences import CountSequence


class MapError(ValueError):
    """Base class for invalid dart tables."""


class NotInvolution(MapError):
    pass


class NotPermutation(MapError):
    pass


class Disconnected(MapError):
    pass


class SameFace(ValueError):
    pass


def _orbits(darts: Sequence[int], perm: Mapping[int, int]):
    index: dict[int, int] = {}
    orbits: list[tuple[int, ...]] = []
    for d in darts:
        if d in index:
            continue
        orbit = []
        x = d
        while x not in index:
            index[x] = len(orbits)
            orbit.append(x)
            x = perm[x]
        orbits.append(tuple(orbit))
    return orbits, index


class OrientedMap:
    """Validated, immutable map given by ``alpha`` and ``sigma``.

    Args:
        alpha: Fixed-point-free involution on the darts.
        sigma: Permutation on the same darts.
        labels: Optional text attached to darts.

    Raises:
        NotInvolution, NotPermutation, Disconnected: On invalid tables.
    """

    __slots__ = (
        "alpha", "sigma", "labels", "darts",
        "vertices", "vertex_of", "faces", "face_of", "edges", "edge_of",
        "_arcs", "_face_vertex_sets", "_face_edge_sets",
    )

    def __init__(self, alpha: Mapping[int, int], sigma: Mapping[int, int],
                 labels: Mapping[int, str] | None = None):
        alpha = {int(k): int(v) for k, v in alpha.items()}
        sigma = {int(k): int(v) for k, v in sigma.items()}
        if not alpha:
            raise MapError("empty dart set")
        if set(alpha) != set(sigma):
            raise NotPermutation("alpha and sigma act on different dart sets")
        for d in alpha:
            if d < 0:
                raise MapError(f"negative dart id {d}")
        for d, e in alpha.items():
            if e == d:
                raise NotInvolution(f"alpha fixes dart {d}")
            if alpha.get(e) != d:
                raise NotInvolution(f"alpha(alpha({d})) != {d}")
        if set(sigma.values()) != set(sigma):
            raise NotPermutation("sigma is not a bijection on the darts")
        self.alpha = alpha
        self.sigma = sigma
        self.labels = dict(labels or {})
        for d in self.labels:
            if d not in alpha:
                raise MapError(f"label on unknown dart {d}")
        self.darts = tuple(sorted(alpha))

        seen = {self.darts[0]}
        todo = [self.darts[0]]
        while todo:
            d = todo.pop()
            for e in (alpha[d], sigma[d]):
                if e not in seen:
                    seen.add(e)
                    todo.append(e)
        if len(seen) != len(self.darts):
            raise Disconnected(f"{len(self.darts) - len(seen)} darts unreachable")

        phi = {d: sigma[alpha[d]] for d in self.darts}
        self.vertices, self.vertex_of = _orbits(self.darts, sigma)
        self.faces, self.face_of = _orbits(self.darts, phi)
        self.edges, self.edge_of = _orbits(self.darts, alpha)
        self._arcs = None
        self._face_vertex_sets = None
        self._face_edge_sets = None

    # basic navigation
    def phi(self, d: int) -> int:
        """Next dart along the face to the left of ``d``."""
        return self.sigma[self.alpha[d]]

    def origin(self, d: int) -> int:
        return self.vertex_of[d]

    def head(self, d: int) -> int:
        return self.vertex_of[self.alpha[d]]

    def degree(self, v: int) -> int:
        return len(self.vertices[v])

    def face_size(self, f: int) -> int:
        return len(self.faces[f])

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces

    def face_vertices(self, f: int) -> tuple[int, ...]:
        """Vertices met along face ``f`` in walk order (with repeats)."""
        return tuple(self.vertex_of[d] for d in self.faces[f])

    def face_vertex_set(self, f: int) -> frozenset[int]:
        if self._face_vertex_sets is None:
            self._face_vertex_sets = [
                frozenset(self.vertex_of[d] for d in face) for face in self.faces
            ]
        return self._face_vertex_sets[f]

    def face_edge_set(self, f: int) -> frozenset[int]:
        if self._face_edge_sets is None:
            self._face_edge_sets = [
                frozenset(self.edge_of[d] for d in face) for face in self.faces
            ]
        return self._face_edge_sets[f]

    def edge_ends(self, e: int) -> frozenset[int]:
        d = self.edges[e][0]
        return frozenset((self.origin(d), self.head(d)))

    def neighbors(self, v: int) -> list[int]:
        """Heads of the darts at ``v`` in counterclockwise order."""
        return [self.head(d) for d in self.vertices[v]]

    def arc(self, u: int, v: int) -> int:
        """The dart from vertex ``u`` to vertex ``v`` in a simple map."""
        if self._arcs is None:
            arcs = {}
            for d in self.darts:
                arcs.setdefault((self.origin(d), self.head(d)), d)
            self._arcs = arcs
        return self._arcs[(u, v)]

    def p_vector(self) -> CountSequence:
        return CountSequence((len(f), 1) for f in self.faces)

    def v_vector(self) -> CountSequence:
        return CountSequence((len(v), 1) for v in self.vertices)

    def __repr__(self) -> str:
        return (f"OrientedMap(V={self.num_vertices}, E={self.num_edges}, "
                f"F={self.num_faces})")


def build_map(alpha: Mapping[int, int], sigma: Mapping[int, int],
              labels: Mapping[int, str] | None = None) -> OrientedMap:
    """Validate dart tables and return the map."""
    return OrientedMap(alpha, sigma, labels)


@dataclass(frozen=True)
class MapSummary:
    num_vertices: int
    num_edges: int
    num_faces: int
    euler_characteristic: int
    genus: int
    p_vector: CountSequence
    v_vector: CountSequence

    def as_dict(self) -> dict:
        return {
            "num_vertices": self.num_vertices,
            "num_edges": self.num_edges,
            "num_faces": self.num_faces,
            "euler_characteristic": self.euler_characteristic,
            "genus": self.genus,
            "p_vector": self.p_vector.as_dict(),
            "v_vector": self.v_vector.as_dict(),
        }


def summarize(M: OrientedMap) -> MapSummary:
    chi = M.euler_characteristic
    return MapSummary(M.num_vertices, M.num_edges, M.num_faces, chi,
                      (2 - chi) // 2, M.p_vector(), M.v_vector())


# construction helpers

def from_rotation(rot: Mapping[Hashable, Sequence[Hashable]]) -> OrientedMap:
    """Build a simple map from counterclockwise neighbour lists.

    Darts are numbered in dict order, then list order, so the ``i``-th key of
    ``rot`` becomes vertex ``i`` and ``rot[u][j]`` names dart
    ``offset(u) + j``.
    """
    ids: dict[tuple, int] = {}
    for u, nbrs in rot.items():
        for v in nbrs:
            if (u, v) in ids:
                raise MapError(f"repeated neighbour {v!r} at {u!r}")
            ids[(u, v)] = len(ids)
    alpha, sigma = {}, {}
    for u, nbrs in rot.items():
        for j, v in enumerate(nbrs):
            d = ids[(u, v)]
            try:
                alpha[d] = ids[(v, u)]
            except KeyError:
                raise MapError(f"{v!r} lists no dart back to {u!r}") from None
            sigma[d] = ids[(u, nbrs[(j + 1) % len(nbrs)])]
    return OrientedMap(alpha, sigma)


def to_rotation(M: OrientedMap) -> dict[int, list[int]]:
    """Counterclockwise neighbour lists keyed by vertex index."""
    return {v: M.neighbors(v) for v in range(M.num_vertices)}


def from_faces(faces: Iterable[Sequence[Hashable]]) -> OrientedMap:
    """Build a closed map from consistently oriented face cycles.

    Each directed edge ``u -> v`` must occur in exactly one face, and faces
    are read in the ``phi`` direction.  Vertex keys are numbered by first
    appearance.
    """
    faces = [list(f) for f in faces]
    ids: dict[tuple, int] = {}
    nxt: dict[tuple, tuple] = {}
    for f in faces:
        for i, u in enumerate(f):
            a = (u, f[(i + 1) % len(f)])
            if a in ids:
                raise MapError(f"directed edge {a!r} used twice")
            ids[a] = len(ids)
            b = (f[(i + 1) % len(f)], f[(i + 2) % len(f)])
            nxt[a] = b
    # renumber so darts of a vertex are contiguous, by first appearance
    order: dict[Hashable, list] = {}
    for a in ids:
        order.setdefault(a[0], []).append(a)
    darts = [a for group in order.values() for a in group]
    num = {a: i for i, a in enumerate(darts)}
    alpha, sigma = {}, {}
    for a in darts:
        rev = (a[1], a[0])
        if rev not in num:
            raise MapError(f"directed edge {a!r} has no reverse")
        alpha[num[a]] = num[rev]
        # phi(a) = sigma(alpha(a)), so sigma(rev) = nxt[a]
        sigma[num[rev]] = num[nxt[a]]
    return OrientedMap(alpha, sigma)


def relabel(M: OrientedMap, offset: int = 0) -> OrientedMap:
    """Renumber darts to ``offset, offset + 1, ...`` in sorted order."""
    num = {d: offset + i for i, d in enumerate(M.darts)}
    return OrientedMap(
        {num[d]: num[M.alpha[d]] for d in M.darts},
        {num[d]: num[M.sigma[d]] for d in M.darts},
        {num[d]: t for d, t in M.labels.items()},
    )


# predicates

@dataclass(frozen=True)
class SimplicityReport:
    ok: bool
    loops: tuple[int, ...] = ()
    multi_edges: tuple[tuple[int, int], ...] = ()
    low_valence: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def messages(self) -> list[str]:
        out = [f"loop: edge {e}" for e in self.loops]
        out += [f"multi-edge: edges {a} and {b}" for a, b in self.multi_edges]
        out += [f"valence: vertex {v}" for v in self.low_valence]
        return out


def is_simple_valid_map(M: OrientedMap) -> SimplicityReport:
    """Check for loops, parallel edges and vertices of valence below 3."""
    loops, multi = [], []
    first: dict[frozenset, int] = {}
    for e, (d, _) in enumerate(M.edges):
        ends = frozenset((M.origin(d), M.head(d)))
        if len(ends) == 1:
            loops.append(e)
        elif ends in first:
            multi.append((first[ends], e))
        else:
            first[ends] = e
    low = [v for v in range(M.num_vertices) if M.degree(v) < 3]
    ok = not (loops or multi or low)
    return SimplicityReport(ok, tuple(loops), tuple(multi), tuple(low))


def dual(M: OrientedMap) -> OrientedMap:
    """The dual map on the same darts: ``alpha`` is kept, ``sigma`` becomes ``phi``.

    Faces of the dual are the ``sigma``-orbits of ``M``, and applying the
    construction twice restores ``sigma`` exactly.
    """
    return OrientedMap(M.alpha, {d: M.phi(d) for d in M.darts}, M.labels)


def meets_properly(M: OrientedMap, f1: int, f2: int) -> bool:
    """Whether two faces share nothing, one vertex, or one edge with its ends."""
    if f1 == f2:
        raise SameFace(f"face {f1} given twice")
    sv = M.face_vertex_set(f1) & M.face_vertex_set(f2)
    se = M.face_edge_set(f1) & M.face_edge_set(f2)
    if not se:
        return len(sv) <= 1
    if len(se) == 1:
        (e,) = se
        return sv == M.edge_ends(e)
    return False


@dataclass(frozen=True)
class PolyhedralityReport:
    ok: bool
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def candidate_face_pairs(M: OrientedMap) -> list[tuple[int, int]]:
    """Sorted face pairs that share at least one vertex.

    Pairs sharing no vertex meet properly trivially, so checking these is
    equivalent to checking all pairs.
    """
    pairs = set()
    for v in range(M.num_vertices):
        fs = sorted({M.face_of[d] for d in M.vertices[v]})
        pairs.update(combinations(fs, 2))
    return sorted(pairs)


def is_polyhedral(M: OrientedMap, faces: Iterable[int] | None = None) -> PolyhedralityReport:
    """Check that every pair of faces meets properly.

    Args:
        M: The map.
        faces: Restrict the check to pairs drawn from these faces.

    Returns:
        A report whose ``witness`` is the first failing pair in sorted order.
    """
    keep = None if faces is None else set(faces)
    for f1, f2 in candidate_face_pairs(M):
        if keep is not None and (f1 not in keep or f2 not in keep):
            continue
        if not meets_properly(M, f1, f2):
            return PolyhedralityReport(False, (f1, f2))
    return PolyhedralityReport(True)


def adjacency(M: OrientedMap) -> list[list[int]]:
    """Sorted neighbour lists of the underlying simple graph."""
    return [sorted(set(M.neighbors(v))) for v in range(M.num_vertices)]


def _connected_without(adj: Sequence[Sequence[int]], removed: set[int]) -> bool:
    n = len(adj)
    start = next((v for v in range(n) if v not in removed), None)
    if start is None:
        return True
    seen = {start} | removed
    todo = deque([start])
    while todo:
        v = todo.popleft()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return len(seen) == n


def is_three_connected(M: OrientedMap) -> bool:
    """At least 3 vertices, and deleting any 2 leaves the graph connected.

    For each vertex ``x`` the graph minus ``x`` is scanned for cut
    vertices, which is equivalent to testing every pair but runs in
    ``O(V * (V + E))``.
    """
    from ._connectivity import no_cut_pair

    if M.num_vertices < 3:
        return False
    return no_cut_pair(adjacency(M))


def is_three_connected_bruteforce(M: OrientedMap) -> bool:
    """The literal pairwise deletion test; quadratic in ``V`` times ``V + E``."""
    if M.num_vertices < 3:
        return False
    adj = adjacency(M)
    return all(_connected_without(adj, {a, b})
               for a, b in combinations(range(M.num_vertices), 2))
