"""Admissibility, global face replacement and the triangle-family realizer.

``expand_map`` subdivides every edge of a map by ``n`` new vertices and
fills each ``k``-gonal face with a ``w``-``k``-gonal patch.  The patch
boundary is laid along the reversed face walk with a corner on a map
vertex, so two patches meet along each edge with complementary weights.

``realize_family`` grows catalog patches to the target polygon size and
runs one or more expansion passes, measuring the change of the p- and
v-vectors on the built map.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Mapping

from .catalog import get_patch
from .expansion import ExpansionPatch, ring
from .growth import grow
from .mapkernel import (
    MapSummary,
    OrientedMap,
    from_rotation,
    is_polyhedral,
    summarize,
)
from .patchwork import (
    GlueConflict,
    Patch,
    assemble,
    boundary_weights,
    gonal_rotations,
    is_r_patch,
    is_self_fitting,
    patch_rotation,
)
from .sequences import CountSequence, bracket, proportional, subtract


class PipelineError(ValueError):
    pass


class BadChi(PipelineError):
    pass


class NotSelfFitting(PipelineError):
    pass


class PatchShapeMismatch(PipelineError):
    def __init__(self, face: int, message: str):
        super().__init__(f"face {face}: {message}")
        self.face = face


class PolyhedralityFailed(PipelineError):
    def __init__(self, witness):
        super().__init__(f"faces {witness} do not meet properly")
        self.witness = witness


class MissingPF37(PipelineError):
    pass


# admissibility

@dataclass(frozen=True)
class AdmissibilityReport:
    eq6_lhs: int
    eq4_lhs: int
    sum_faces_eq_sum_vertices_weighted: bool
    parity_ok: bool
    chi: int
    admissible: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def check_admissible(p: Mapping[int, int], v: Mapping[int, int], chi: int) -> AdmissibilityReport:
    """Evaluate both Euler identities for a p/v pair on a surface.

    Raises:
        BadChi: If ``chi`` is odd or greater than 2.
    """
    if chi % 2 or chi > 2:
        raise BadChi(f"chi = {chi} is not the Euler characteristic of an orientable surface")
    p, v = CountSequence(p), CountSequence(v)
    eq6 = sum((6 - k) * c for k, c in p.items()) + 2 * sum((3 - k) * c for k, c in v.items())
    eq4 = sum((4 - k) * c for k, c in p.items()) + sum((4 - k) * c for k, c in v.items())
    same = p.weighted_total() == v.weighted_total()
    parity = p.weighted_total() % 2 == 0
    return AdmissibilityReport(eq6, eq4, same, parity, chi,
                               eq6 == 6 * chi and eq4 == 4 * chi and same)


# global expansion

PatchAssignment = Patch | Mapping[int, Patch] | Callable[[OrientedMap, int], Patch]


def _resolve(assign: PatchAssignment) -> Callable[[OrientedMap, int], Patch]:
    if isinstance(assign, ExpansionPatch):
        assign = assign.patch
    if isinstance(assign, Patch):
        return lambda M, f: assign
    if isinstance(assign, Mapping):
        return lambda M, f: assign[M.face_size(f)]
    return assign


@dataclass
class ExpansionResult:
    """A built map together with the count of seed vertices.

    Seed vertex ``i`` keeps index ``i`` in ``map``.
    """

    map: OrientedMap
    num_seed_vertices: int


def expand_map_detailed(M: OrientedMap, w: tuple[int, ...], assign: PatchAssignment) -> ExpansionResult:
    """Like :func:`expand_map` but also reports which vertices are old."""
    pick = _resolve(assign)
    w = tuple(w)
    patches = []
    r = None
    for f in range(M.num_faces):
        P = pick(M, f)
        if isinstance(P, ExpansionPatch):
            P = P.patch
        if r is None:
            r = P.r
            if not is_self_fitting(w, r):
                raise NotSelfFitting(f"{w} is not self-fitting for r = {r}")
        elif P.r != r:
            raise PatchShapeMismatch(f, f"patch has r = {P.r}, others have r = {r}")
        patches.append(P)

    shapes: dict[tuple[int, int], tuple[dict, tuple, tuple, int]] = {}
    n = len(w)
    edge_first = [e[0] for e in M.edges]

    def side(d: int) -> list:
        e = M.edge_of[d]
        keys = [("e", e, j) for j in range(n)]
        return keys if d == edge_first[e] else keys[::-1]

    pieces = []
    merges = []
    names: dict[tuple[int, object], object] = {}
    first: dict[object, tuple[int, object]] = {}
    for f, P in enumerate(patches):
        k = M.face_size(f)
        key = (id(P), k)
        if key not in shapes:
            if not is_r_patch(P, r):
                raise PatchShapeMismatch(f, "not an r-patch")
            walk = boundary_weights(P)
            rots = gonal_rotations(walk.weights, w, k)
            if not rots:
                raise PatchShapeMismatch(f, f"patch is not {w}-{k}-gonal")
            rot, outer = patch_rotation(P)
            t = rots[0]
            pw = walk.vertices[t:] + walk.vertices[:t]
            shapes[key] = (rot, outer, pw, k)
        rot, outer, pw, _ = shapes[key]
        face_walk = []
        for d in M.faces[f]:
            face_walk.append(("v", M.origin(d)))
            face_walk += side(d)
        target = [face_walk[0]] + face_walk[:0:-1]
        i = len(pieces)
        pieces.append((rot, outer))
        for local, g in zip(pw, target):
            names[(i, local)] = g
            if g in first:
                merges.append((first[g], (i, local)))
            else:
                first[g] = (i, local)
    asm = assemble(pieces, merges, names)
    if asm.outer is not None:
        raise GlueConflict("expansion left an open boundary")
    rotation = {("v", i): asm.rotation[("v", i)] for i in range(M.num_vertices)}
    rotation.update(asm.rotation)
    for e in range(M.num_edges):
        for j in range(n):
            deg = len(rotation[("e", e, j)])
            if deg != r:
                raise GlueConflict(f"side vertex {j} of edge {e} has valence {deg}, need {r}")
    return ExpansionResult(from_rotation(rotation), M.num_vertices)


def expand_map(M: OrientedMap, w: tuple[int, ...], assign: PatchAssignment) -> OrientedMap:
    """Replace every face by its assigned ``w``-gonal patch.

    Args:
        M: The map to expand.
        w: Self-fitting side tuple; every edge receives ``len(w)`` vertices.
        assign: A patch for all faces, a mapping from face size to patch,
            or a callable ``(M, face) -> patch``.

    Raises:
        NotSelfFitting, PatchShapeMismatch, GlueConflict.
    """
    return expand_map_detailed(M, w, assign).map


def polyhedral_assignment(E: ExpansionPatch, four_gon_patch: Patch | None = None):
    """Ring of ``E`` for each face size, or ``four_gon_patch`` for 4-gons."""
    rings: dict[int, Patch] = {}
    fg = four_gon_patch.patch if isinstance(four_gon_patch, ExpansionPatch) else four_gon_patch

    def pick(M: OrientedMap, f: int) -> Patch:
        k = M.face_size(f)
        if k == 4 and fg is not None:
            return fg
        if k not in rings:
            rings[k] = ring(E, k)
        return rings[k]

    return pick


def expand_polyhedral_detailed(M: OrientedMap, E: ExpansionPatch,
                               four_gon_patch: Patch | None = None,
                               verify: bool = True) -> ExpansionResult:
    res = expand_map_detailed(M, E.outer_tuple, polyhedral_assignment(E, four_gon_patch))
    if verify:
        rep = is_polyhedral(res.map)
        if not rep:
            raise PolyhedralityFailed(rep.witness)
    return res


def expand_polyhedral(M: OrientedMap, E: ExpansionPatch,
                      four_gon_patch: Patch | None = None) -> OrientedMap:
    """Expand with rings of ``E`` and verify the result is polyhedral.

    Raises:
        PolyhedralityFailed: If two faces of the result meet improperly.
    """
    return expand_polyhedral_detailed(M, E, four_gon_patch).map


# theorem families

class Family(enum.Enum):
    THREE_FIVE = "3:5"
    THREE_SEVEN = "3:7"


@dataclass(frozen=True)
class FamilySpec:
    """Target family ``q = [(l - 4) x 3, l]`` with ``w = [4]``."""

    family: Family
    k: int
    passes: int = 1
    r: int = 4

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family(self.family))
        if self.k < 0:
            raise ValueError(f"k = {self.k} < 0")
        if self.passes < 1:
            raise ValueError(f"passes = {self.passes} < 1")

    @property
    def l(self) -> int:
        return 3 * self.k + (5 if self.family is Family.THREE_FIVE else 7)

    @property
    def q(self) -> CountSequence:
        return bracket([(self.l - 4, 3), (1, self.l)])

    @property
    def w(self) -> CountSequence:
        return bracket([(1, 4)])

    def coprime(self) -> bool:
        return gcd(self.l - 4, 1) == 1


@dataclass
class FamilyPatches:
    normal: ExpansionPatch
    four_gon: Patch | None
    polyhedral: ExpansionPatch


def _grow_all(P, steps_per_marker: Mapping[str, int]):
    """Grow ``P`` at each of its markers in turn by the steps for its kind."""
    markers = (P.patch if isinstance(P, ExpansionPatch) else P).markers
    for i in range(len(markers)):
        m = (P.patch if isinstance(P, ExpansionPatch) else P).markers[i]
        P, _ = grow(P, m, steps_per_marker[m.kind])
    return P


def family_patches(spec: FamilySpec, four_gon_37: Patch | None = None) -> FamilyPatches:
    """Grow the catalog patches so all their large faces become ``l``-gons.

    Square steps add 1 to both targets; diamond and vertex steps add 3.
    """
    k = spec.k
    pn35 = get_patch("PN35")
    if spec.family is Family.THREE_FIVE:
        normal = _grow_all(pn35, {"square": 3 * k})
        four = _grow_all(get_patch("PF35"), {"diamond": k, "vertex": k})
        return FamilyPatches(normal, four, normal)
    normal = _grow_all(get_patch("PN37"), {"vertex": k})
    polyhedral = _grow_all(pn35, {"square": 3 * k + 2})
    return FamilyPatches(normal, four_gon_37, polyhedral)


@dataclass
class RealizationReport:
    seed: MapSummary
    result: MapSummary
    family: str
    k: int
    q: CountSequence
    delta_p: CountSequence
    delta_v: CountSequence
    c: Fraction | None
    d: int
    passes_used: int
    polyhedral: bool
    map: OrientedMap | None = None
    pass_summaries: list[MapSummary] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "k": self.k,
            "q": self.q.as_dict(),
            "c": None if self.c is None else str(self.c),
            "d": self.d,
            "passes_used": self.passes_used,
            "polyhedral": self.polyhedral,
            "delta_p": self.delta_p.as_dict(),
            "delta_v": self.delta_v.as_dict(),
            "seed": self.seed.as_dict(),
            "result": self.result.as_dict(),
        }


def realize_family(seed: OrientedMap, spec: FamilySpec,
                   four_gon_37: Patch | None = None,
                   patches: FamilyPatches | None = None) -> RealizationReport:
    """Build a polyhedral map whose p-vector grows by a multiple of ``q``.

    Pass 1 fills 4-gons with the four-gon patch and other faces with rings
    of the normal patch; later passes use rings only, and the last pass
    uses the patch with the polyhedral property.  ``delta_p`` is measured
    against the seed's p-vector without its 4-gons, since those are
    replaced rather than kept.

    Raises:
        MissingPF37: A 3:7 run needs a four-gon patch that was not given.
        PolyhedralityFailed: The final map is not polyhedral.
    """
    pat = patches or family_patches(spec, four_gon_37)
    seed_sum = summarize(seed)
    has_four = seed_sum.p_vector.get(4, 0) > 0
    if has_four and pat.four_gon is None:
        raise MissingPF37("seed has 4-gons but no 4-gonal patch of triangles "
                          f"and {spec.l}-gons is available")
    M = seed
    sums = []
    for i in range(spec.passes):
        last = i == spec.passes - 1
        four = pat.four_gon if i == 0 else None
        if last and four is not None and pat.polyhedral is not pat.normal:
            if tuple(pat.polyhedral.outer_tuple) != tuple(pat.normal.outer_tuple):
                raise MissingPF37("the four-gon patch only fits the normal patch, so at "
                                  "least two passes are needed")
        E = pat.polyhedral if last else pat.normal
        M = expand_polyhedral_detailed(M, E, four, verify=last).map
        sums.append(summarize(M))
    result = sums[-1]
    base = subtract(seed_sum.p_vector, CountSequence({4: seed_sum.p_vector.get(4, 0)}))
    delta_p = subtract(result.p_vector, base)
    delta_v = subtract(result.v_vector, seed_sum.v_vector)
    c = proportional(delta_p, spec.q)
    d = delta_v.get(4, 0) if set(delta_v) <= {4} else -1
    return RealizationReport(seed_sum, result, spec.family.value, spec.k, spec.q,
                             delta_p, delta_v, c, d, spec.passes, True, M, sums)
