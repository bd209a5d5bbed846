"""Bounded search for ``w``-``k``-gonal r-patches with prescribed face sizes.

The search fills a disk from its boundary inward.  The unfilled part is a
stack of regions, each a cycle of ``(vertex, c)`` pairs where ``c`` is the
number of edges the vertex still sends into the region.  A step picks a run
of frontier edges joined by ``c = 0`` vertices, which must all lie on one
face, and closes that face with a return path through new vertices or
through frontier vertices further along the cycle.  Touching a frontier
vertex splits the region.

A region with frontier length ``L``, capacity ``C = sum(c)`` and ``I``
vertices still to be created holds ``1 + (C + (r - 2) I) / 2`` faces of
total size ``L + C + r I``.  A state survives only if the regions' feasible
values of ``I`` can add up to the remaining vertex budget.  The budget is
deepened one vertex at a time, so the first patch found has the fewest
vertices.

With ``symmetric=True`` only patches with a half-turn symmetry about an
inner vertex are sought.  The search then fills the quotient disk, whose
boundary is half as long and which holds one inner vertex of valence 2 at
the cone point, and unfolds the result as a branched double cover.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb
from typing import Hashable, Iterable, Sequence

from .mapkernel import MapError, from_faces, from_rotation
from .patchwork import Patch, PatchError, is_w_k_gonal

Region = tuple[tuple[int, int], ...]


class SearchError(ValueError):
    pass


class BoundsExhausted(RuntimeError):
    """The node budget ran out before the search space was exhausted."""

    def __init__(self, nodes: int, inner_vertices: int):
        super().__init__(f"node budget of {nodes} used up while trying "
                         f"{inner_vertices} inner vertices")
        self.nodes = nodes
        self.inner_vertices = inner_vertices


@dataclass(frozen=True)
class SearchBounds:
    """Limits on the search.

    Attributes:
        max_faces: Most inner faces a result may have.
        max_vertices: Most vertices a result may have, boundary included.
        max_nodes: Search nodes allowed before :class:`BoundsExhausted`.
    """

    max_faces: int = 64
    max_vertices: int = 96
    max_nodes: int = 2_000_000


@dataclass
class SearchStats:
    nodes: int = 0
    inner_vertices: int = -1


class _Sums:
    """Which total sizes ``F`` faces with allowed sizes can reach."""

    def __init__(self, gons: Sequence[int]):
        self.low = min(gons)
        self.steps = sorted({g - self.low for g in gons})
        self.reach = [1]

    def feasible(self, F: int, S: int) -> bool:
        if F < 1:
            return False
        extra = S - self.low * F
        if extra < 0:
            return False
        while len(self.reach) <= F:
            prev = self.reach[-1]
            nxt = 0
            for d in self.steps:
                nxt |= prev << d
            self.reach.append(nxt)
        return bool(self.reach[F] >> extra & 1)


def _sumset(a: int, b: int, full: int) -> int:
    """Bitmask of ``x + y`` over bits ``x`` of ``a`` and ``y`` of ``b``."""
    out = 0
    while b:
        low = b & -b
        out |= a << (low.bit_length() - 1)
        b ^= low
    return out & full


class _Search:
    """Depth-first filler; ``cone`` asks for one inner vertex of valence 2."""

    def __init__(self, weights, r, gons, bounds: SearchBounds, stats: SearchStats,
                 cone: bool = False, vertex_cap: int | None = None,
                 face_cap: int | None = None):
        self.weights = tuple(weights)
        self.r = r
        self.gons = sorted(set(gons))
        self.gon_set = set(self.gons)
        self.bounds = bounds
        self.stats = stats
        self.cone = cone
        self.sums = _Sums(self.gons)
        self.L0 = len(weights)
        self.vertex_cap = bounds.max_vertices - self.L0 if vertex_cap is None else vertex_cap
        self.face_cap = bounds.max_faces if face_cap is None else face_cap
        self.opt_cache: dict[tuple[int, int], tuple[tuple[int, int], int] | None] = {}

    # counting

    def region_options(self, region: Region):
        """Feasible inner-vertex counts without and with the cone vertex.

        Returns ``((mask0, mask1), fewest_faces)`` where bit ``I`` of
        ``mask_s`` is set when ``I`` new vertices, ``s`` of them the cone,
        pass the counting test; None if nothing does.
        """
        L = len(region)
        C = sum(c for _, c in region)
        key = (L, C)
        if key not in self.opt_cache:
            r = self.r
            masks = [0, 0]
            min_f = None
            for s in ((0, 1) if self.cone else (0,)):
                for I in range(s, self.vertex_cap + 1):
                    twice = C + (r - 2) * (I - s)
                    if twice % 2:
                        continue
                    F = 1 + twice // 2
                    if F > self.face_cap:
                        break
                    if self.sums.feasible(F, L + C + r * I - (r - 2) * s):
                        masks[s] |= 1 << I
                        min_f = F if min_f is None else min(min_f, F)
            self.opt_cache[key] = None if min_f is None else (tuple(masks), min_f)
        return self.opt_cache[key]

    # main loop

    def run(self) -> tuple[list[list[int]], int | None] | None:
        region = tuple((v, w - 1) for v, w in enumerate(self.weights))
        opts = self.region_options(region)
        if opts is None:
            return None
        want = 1 if self.cone else 0
        for I in range(self.vertex_cap + 1):
            if not opts[0][want] >> I & 1:
                continue
            self.stats.inner_vertices = I
            self.adj = {v: {(v - 1) % self.L0, (v + 1) % self.L0} for v in range(self.L0)}
            self.faces: list[list[int]] = []
            self.next_vertex = self.L0
            self.cone_vertex = None
            if self.dfs([region], I, want, self.face_cap):
                return self.faces, self.cone_vertex
        return None

    def tick(self):
        self.stats.nodes += 1
        if self.stats.nodes > self.bounds.max_nodes:
            raise BoundsExhausted(self.bounds.max_nodes, self.stats.inner_vertices)

    def dfs(self, regions: list[Region], budget: int, cone_left: int, faces_left: int) -> bool:
        self.tick()
        if not regions:
            return budget == 0 and cone_left == 0
        full = (2 << budget) - 1
        reach0, reach1, need_f = 1, 0, 0
        for reg in regions:
            opts = self.region_options(reg)
            if opts is None:
                return False
            (m0, m1), min_f = opts
            reach0, reach1 = (_sumset(reach0, m0, full),
                              _sumset(reach1, m0, full) | _sumset(reach0, m1, full))
            need_f += min_f
        if not (reach1 if cone_left else reach0) >> budget & 1 or need_f > faces_left:
            return False
        region = regions[-1]
        rest = regions[:-1]
        L = len(region)
        pos = [i for i, (_, c) in enumerate(region) if c > 0]
        if not pos:
            if L in self.gon_set:
                self.faces.append([v for v, _ in region])
                if self.dfs(rest, budget, cone_left, faces_left - 1):
                    return True
                self.faces.pop()
            return False
        if len(pos) == 1:
            return False
        # pick the run with the fewest return paths
        touchable = sum(1 for _, c in region if c >= 2)
        best = None
        for j, a in enumerate(pos):
            b = pos[(j + 1) % len(pos)]
            run = (b - a) % L
            if run >= self.gons[-1]:
                return False
            n = touchable - (region[a][1] >= 2) - (region[b][1] >= 2)
            count = sum(self.paths(g - run - 1, n, budget) for g in self.gons if g > run)
            key = (count, -run, a)
            if best is None or key < best[0]:
                best = (key, a, b, run)
        _, a, b, run = best
        for g in self.gons:
            if g <= run:
                continue
            if self.close_face(region, rest, a, b, g - run, budget, cone_left, faces_left):
                return True
        return False

    @staticmethod
    def paths(slots: int, touchable: int, budget: int) -> int:
        """Upper bound on return paths with ``slots`` inner positions."""
        return sum(comb(touchable, t) for t in range(max(0, slots - budget), slots + 1))

    def close_face(self, region: Region, rest: list[Region], a: int, b: int, p: int,
                   budget: int, cone_left: int, faces_left: int) -> bool:
        """Try every return path of ``p`` edges from ``region[b]`` to ``region[a]``."""
        L = len(region)
        run_vertices = [region[(a + i) % L][0] for i in range((b - a) % L + 1)]
        # candidate touch positions strictly between b and a going forward
        cands = [(b + i) % L for i in range(1, (a - b) % L)]
        cands = [q for q in cands if region[q][1] >= 2]
        path: list[tuple[str, int]] = []  # ("new" | "cone", -1) or ("touch", position)

        def extend(last: int, slots: int, used: int, cone: int) -> bool:
            if slots == 0:
                return self.apply(region, rest, a, b, run_vertices, path, budget - used,
                                  cone_left - cone, faces_left)
            if used < budget:
                path.append(("new", -1))
                if extend(last, slots - 1, used + 1, cone):
                    return True
                path.pop()
                if cone < cone_left:
                    path.append(("cone", -1))
                    if extend(last, slots - 1, used + 1, cone + 1):
                        return True
                    path.pop()
            for ci in range(last + 1, len(cands)):
                path.append(("touch", cands[ci]))
                if extend(ci, slots - 1, used, cone):
                    return True
                path.pop()
            return False

        return extend(-1, p - 1, 0, 0)

    def apply(self, region: Region, rest: list[Region], a: int, b: int,
              run_vertices: list[int], path: list[tuple[str, int]], budget: int,
              cone_left: int, faces_left: int) -> bool:
        L = len(region)
        r = self.r
        va, vb = region[a][0], region[b][0]
        # materialize the path from vb to va
        nodes: list[int] = [vb]
        start = self.next_vertex
        nv = start
        cone_id = None
        for kind, q in path:
            if kind == "touch":
                nodes.append(region[q][0])
            else:
                if kind == "cone":
                    cone_id = nv
                nodes.append(nv)
                nv += 1
        nodes.append(va)
        edges = list(zip(nodes, nodes[1:]))
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if u == v or key in seen or (u < start and v < start and v in self.adj[u]):
                return False
            seen.add(key)
        # touch points along the path, as (path index, region position)
        touches = [(0, b)] + [(i + 1, q) for i, (kind, q) in enumerate(path) if kind == "touch"]
        touches.append((len(nodes) - 1, a))
        cval = [c for _, c in region]
        pieces = []
        for t in range(len(touches) - 1):
            (pi, qi), (pj, qj) = touches[t], touches[t + 1]
            front = [(qi + s) % L for s in range((qj - qi) % L + 1)]
            back = nodes[pj - 1:pi:-1]
            pieces.append((front, back))
        # split the spare capacity of touched vertices between neighbours
        spare = [cval[q] - 2 for _, q in touches[1:-1]]

        def splits(i):
            if i == len(spare):
                yield ()
                return
            for x in range(spare[i] + 1):
                for tail in splits(i + 1):
                    yield (x,) + tail

        for u, v in edges:
            self.adj.setdefault(u, set()).add(v)
            self.adj.setdefault(v, set()).add(u)
        self.faces.append(run_vertices + nodes[1:-1])
        saved = self.next_vertex, self.cone_vertex
        self.next_vertex = nv
        if cone_id is not None:
            self.cone_vertex = cone_id
        ok = False
        for split in splits(0):
            new_regions = []
            for t, (front, back) in enumerate(pieces):
                cyc = []
                for idx, q in enumerate(front):
                    v, c = region[q]
                    if idx == 0:
                        c = cval[q] - 1 if t == 0 else spare[t - 1] - split[t - 1]
                    elif idx == len(front) - 1:
                        c = cval[q] - 1 if t == len(pieces) - 1 else split[t]
                    cyc.append((v, c))
                cyc += [(v, 0 if v == cone_id else r - 2) for v in back]
                new_regions.append(tuple(cyc))
            if any(len(reg) < 3 for reg in new_regions):
                continue
            if self.dfs(rest + new_regions, budget, cone_left, faces_left - 1):
                ok = True
                break
        if not ok:
            self.faces.pop()
            self.next_vertex, self.cone_vertex = saved
            for u, v in edges:
                self.adj[u].discard(v)
                self.adj[v].discard(u)
            for u in range(start, nv):
                self.adj.pop(u, None)
        return ok


def _patch_from_faces(L: int, faces: list[list[int]], r: int) -> Patch:
    outer = list(range(L))[::-1]
    M = from_faces([outer] + faces)
    index: dict[int, int] = {}
    for f in [outer] + faces:
        for u in f:
            index.setdefault(u, len(index))
    return Patch(M, M.arc(index[outer[0]], index[outer[1]]), r)


def _rotations(L: int, faces: list[list[int]]) -> dict[int, list[int]]:
    """Counterclockwise neighbour lists of the disk with boundary ``0..L-1``."""
    succ: dict[int, dict[int, int]] = {}
    for f in [list(range(L))[::-1]] + faces:
        for i, u in enumerate(f):
            v, w = f[(i + 1) % len(f)], f[(i + 2) % len(f)]
            succ.setdefault(v, {})[u] = w
    rot = {}
    for v, nxt in succ.items():
        first = next(iter(nxt))
        cyc, x = [first], nxt[first]
        while x != first:
            cyc.append(x)
            x = nxt[x]
        rot[v] = cyc
    return rot


def _unfold(L: int, faces: list[list[int]], cone: int, r: int) -> list[Patch]:
    """Branched double covers of a quotient disk, one per gluing choice.

    Boundary vertices are ``0 .. L-1`` and ``cone`` is the valence-2 inner
    vertex.  The disk is cut along a shortest path from the cone point to
    the boundary; edges leaving the cut on one side change sheet.
    """
    rot = _rotations(L, faces)
    prev: dict[int, int | None] = {cone: None}
    queue = deque([cone])
    end = None
    while end is None:
        u = queue.popleft()
        for w in rot[u]:
            if w not in prev:
                prev[w] = u
                queue.append(w)
                if w < L:
                    end = w
                    break
    path = [end]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    path.reverse()
    # neighbours strictly counterclockwise between the way on and the way
    # back; at the boundary end the outer corner stands in for the way on
    side: dict[int, set[int]] = {}
    for i in range(1, len(path)):
        g, back = path[i], path[i - 1]
        fwd = path[i + 1] if i + 1 < len(path) else (g + 1) % L
        nb = rot[g]
        j = (nb.index(fwd) + 1) % len(nb)
        s = set()
        while nb[j] != back:
            s.add(nb[j])
            j = (j + 1) % len(nb)
        side[g] = s
    others = {w for w in rot[cone] if w != path[1]}
    covers = []
    for cone_side in (set(), others):
        side[cone] = cone_side

        def volt(u, v):
            return int(v in side.get(u, ())) ^ int(u in side.get(v, ()))

        lifted: dict[Hashable, list[Hashable]] = {}
        for v, nb in rot.items():
            if v != cone:
                for s in (0, 1):
                    lifted[(v, s)] = ["X" if u == cone else (u, (s + volt(v, u)) % 2)
                                      for u in nb]
        for flip in (0, 1):
            corners = [(u, (volt(cone, u) + flip) % 2) for u in rot[cone]]
            lifted["X"] = corners + [(u, 1 - s) for u, s in corners]
            try:
                M = from_rotation(lifted)
            except MapError:
                continue
            index = {key: i for i, key in enumerate(lifted)}
            a = (L - 1, 0)
            b = next(x for x in lifted[a] if x != "X" and x[0] == L - 2)
            try:
                covers.append(Patch(M, M.arc(index[a], index[b]), r))
            except (PatchError, MapError):
                continue
    return covers


def search_patch(outer_tuple: Sequence[int], r: int, allowed_gons: Iterable[int],
                 k: int = 4, bounds: SearchBounds | None = None,
                 stats: SearchStats | None = None, symmetric: bool = False) -> Patch | None:
    """Find an ``outer_tuple``-``k``-gonal r-patch with the given face sizes.

    Args:
        outer_tuple: Side weights between consecutive weight-1 corners.
        r: Valence of inner vertices.
        allowed_gons: Face sizes the patch may use.
        k: Number of corners; must be even when ``symmetric`` is set.
        bounds: Size and node limits, for the full patch.
        stats: Optional counters filled in during the search.
        symmetric: Only look for patches with a half-turn symmetry about
            an inner vertex.

    Returns:
        The patch with the fewest vertices found, or None if no patch exists
        within ``bounds.max_faces`` and ``bounds.max_vertices``.

    Raises:
        BoundsExhausted: If the node budget runs out first.
        SearchError: On malformed input.
    """
    bounds = bounds or SearchBounds()
    stats = stats if stats is not None else SearchStats()
    gons = sorted(set(allowed_gons))
    w = tuple(outer_tuple)
    if r < 3 or k < 1 or not gons or gons[0] < 3:
        raise SearchError("need r >= 3, k >= 1 and face sizes >= 3")
    if any(not 1 <= x <= r - 1 for x in w):
        raise SearchError(f"weights must lie in [1, {r - 1}]")
    if symmetric and k % 2:
        raise SearchError("a half-turn symmetric search needs an even number of corners")
    # the outer walk reads the filled frontier backwards
    corners = k // 2 if symmetric else k
    weights = (((1,) + w) * corners)[::-1]
    L = len(weights)
    if not symmetric:
        found = _Search(weights, r, gons, bounds, stats).run()
        if found is None:
            return None
        P = _patch_from_faces(L, found[0], r)
        if not is_w_k_gonal(P, w, k, r):
            raise SearchError("internal error: result has the wrong boundary")
        return P
    cap = (bounds.max_vertices - 2 * L + 1) // 2
    if cap < 1:
        return None
    found = _Search(weights, r, gons, bounds, stats, cone=True, vertex_cap=cap,
                    face_cap=bounds.max_faces // 2).run()
    if found is None:
        return None
    faces, cone = found
    for P in _unfold(L, faces, cone, r):
        if is_w_k_gonal(P, w, k, r) and all(f in gons for f in P.p_vector()):
            return P
    raise SearchError("internal error: the quotient did not unfold to a patch")
