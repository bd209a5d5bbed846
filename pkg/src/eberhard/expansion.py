"""Expansion patches, the ring construction and edge patches.

An expansion patch labels its boundary walk, starting at ``i0``, as::

    i0 i1 ... i_m = o0 o1 ... o_n = i'_m ... i'_1 i'_0

so the walk has ``2m + n + 1`` vertices.  Its outer tuple is the weight
sequence ``o_{s+1} .. o_{n-1}``, then ``o_n + o_0`` merged, then
``o_1 .. o_{s-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .mapkernel import OrientedMap, meets_properly
from .patchwork import (
    Assembly,
    Patch,
    PatchError,
    assemble,
    is_r_patch,
    patch_rotation,
    self_fit_violation,
)
from .sequences import CountSequence


class ExpansionError(PatchError):
    """A role assignment that does not make an expansion patch."""


class RolesMismatch(ExpansionError):
    pass


class I0Condition(ExpansionError):
    pass


class SelfFitAlongI(ExpansionError):
    def __init__(self, index: int, message: str):
        super().__init__(f"i{index}: {message}")
        self.index = index


class OsNotOne(ExpansionError):
    pass


class OuterTupleNotSelfFitting(ExpansionError):
    def __init__(self, index: int, message: str):
        super().__init__(f"position {index}: {message}")
        self.index = index


class KTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class ExpansionRoles:
    """Boundary role parameters.

    Attributes:
        m: Length of each i-path, ``m >= 1``.
        n: Length of the o-path.
        s: Index of the weight-1 vertex ``o_s``, ``1 <= s < n``.
        i0: Vertex index of ``i0``; the walk runs from it in boundary order.
    """

    m: int
    n: int
    s: int
    i0: int

    def __post_init__(self):
        if self.m < 1:
            raise RolesMismatch(f"m = {self.m} < 1")
        if not 1 <= self.s < self.n:
            raise RolesMismatch(f"need 1 <= s < n, got s = {self.s}, n = {self.n}")

    @property
    def length(self) -> int:
        return 2 * self.m + self.n + 1

    def position(self, label: str) -> int:
        """Walk position of ``"i3"``, ``"o2"`` or ``"i'1"``."""
        if label.startswith("i'"):
            l = int(label[2:])
            if not 0 <= l <= self.m:
                raise KeyError(label)
            return self.length - 1 - l
        if label[0] in "io":
            j = int(label[1:])
            top = self.m if label[0] == "i" else self.n
            if not 0 <= j <= top:
                raise KeyError(label)
            return j if label[0] == "i" else self.m + j
        raise KeyError(label)

    def labels(self) -> list[str]:
        """Label of every walk position; shared vertices get the o-name."""
        m, n = self.m, self.n
        out = [f"i{l}" for l in range(m)]
        out += [f"o{j}" for j in range(n + 1)]
        out += [f"i'{l}" for l in range(m - 1, -1, -1)]
        return out


def role_walk(P: Patch, i0: int) -> tuple[int, ...]:
    """Boundary vertices in walk order starting at vertex ``i0``."""
    walk = P.boundary_vertices()
    if i0 not in walk:
        raise RolesMismatch(f"vertex {i0} is not on the boundary")
    t = walk.index(i0)
    return walk[t:] + walk[:t]


def outer_tuple_of(weights: tuple[int, ...], roles: ExpansionRoles) -> tuple[int, ...]:
    """Outer tuple from role-ordered boundary weights."""
    m, n, s = roles.m, roles.n, roles.s
    o = [weights[m + j] for j in range(n + 1)]
    return tuple(o[s + 1:n]) + (o[n] + o[0],) + tuple(o[1:s])


@dataclass(frozen=True, eq=False)
class ExpansionPatch:
    patch: Patch
    roles: ExpansionRoles
    outer_tuple: tuple[int, ...]

    @property
    def r(self) -> int:
        return self.patch.r

    @property
    def map(self) -> OrientedMap:
        return self.patch.map

    @property
    def markers(self):
        return self.patch.markers

    def p_vector(self) -> CountSequence:
        return self.patch.p_vector()

    def walk(self) -> tuple[int, ...]:
        return role_walk(self.patch, self.roles.i0)

    def vertex(self, label: str) -> int:
        return self.walk()[self.roles.position(label)]

    def __repr__(self) -> str:
        return (f"ExpansionPatch(r={self.r}, m={self.roles.m}, n={self.roles.n}, "
                f"s={self.roles.s}, outer_tuple={self.outer_tuple}, p={self.p_vector()})")


def validate_expansion_patch(P: Patch, roles: ExpansionRoles) -> ExpansionPatch:
    """Check the four expansion-patch conditions and compute the outer tuple.

    Raises:
        RolesMismatch: Walk length differs from ``2m + n + 1`` or ``P`` is
            not an r-patch.
        I0Condition, SelfFitAlongI, OsNotOne, OuterTupleNotSelfFitting.
    """
    r = P.r
    rep = is_r_patch(P, r)
    if not rep:
        raise RolesMismatch("; ".join(rep.problems[:3]))
    walk = role_walk(P, roles.i0)
    if len(walk) != roles.length:
        raise RolesMismatch(f"boundary has {len(walk)} vertices, roles need {roles.length}")
    w = tuple(P.weight(v) for v in walk)
    m, s = roles.m, roles.s
    if w[0] + w[-1] != r - 1:
        raise I0Condition(f"w(i0) + w(i'0) = {w[0] + w[-1]}, need {r - 1}")
    for l in range(1, m):
        total = w[l] + w[len(w) - 1 - l]
        if total != r:
            raise SelfFitAlongI(l, f"w(i{l}) + w(i'{l}) = {total}, need {r}")
    if w[m + s] != 1:
        raise OsNotOne(f"w(o{s}) = {w[m + s]}")
    o = outer_tuple_of(w, roles)
    bad = self_fit_violation(o, r)
    if bad is not None:
        raise OuterTupleNotSelfFitting(bad, f"outer tuple {o} is not self-fitting for r = {r}")
    return ExpansionPatch(P, roles, o)


# ring and edge patch

def _face_origins(asm: Assembly, M: OrientedMap, index, patches) -> dict[int, tuple[int, int]]:
    """Map each face of the assembled map to ``(copy, local face)``."""
    origin: dict[int, tuple[int, int]] = {}
    for i, P in enumerate(patches):
        if P is None:
            continue
        L = P.map
        for f in P.inner_faces():
            d = L.faces[f][0]
            u = asm.vertex_key[(i, L.origin(d))]
            v = asm.vertex_key[(i, L.head(d))]
            origin[M.face_of[M.arc(index[u], index[v])]] = (i, f)
    return origin


def _ring_assembly(E: ExpansionPatch, k: int):
    walk = E.walk()
    m, L = E.roles.m, len(walk)
    poly = {("c", j): [("c", (j - 1) % k), ("c", (j + 1) % k)] for j in range(k)}
    pieces = [(poly, (("c", 0), ("c", 1)))]
    pieces += [patch_rotation(E.patch)] * k
    merges = []
    for j in range(k):
        copy, nxt = j + 1, (j + 1) % k + 1
        merges.append(((copy, walk[0]), (0, ("c", j))))
        merges.append(((copy, walk[L - 1]), (0, ("c", (j + 1) % k))))
        for l in range(1, m + 1):
            merges.append(((copy, walk[L - 1 - l]), (nxt, walk[l])))
    return assemble(pieces, merges)


def ring(E: ExpansionPatch, k: int) -> Patch:
    """``k`` copies of ``E`` glued around a central ``k``-gon.

    Copy ``j`` has ``i0`` on polygon vertex ``j`` and ``i'0`` on vertex
    ``j + 1``; its ``i'_l`` is identified with ``i_l`` of copy ``j + 1``.

    Raises:
        KTooSmall: If ``k < 3``.
    """
    if k < 3:
        raise KTooSmall(f"k = {k} < 3")
    P, _ = _ring_assembly(E, k).to_patch(E.r)
    return P


def ring_with_origins(E: ExpansionPatch, k: int):
    """Like :func:`ring`, also returning ``face -> (copy, local face)``.

    The central polygon maps to ``(0, -1)``; copies are numbered from 1.
    """
    if k < 3:
        raise KTooSmall(f"k = {k} < 3")
    asm = _ring_assembly(E, k)
    P, index = asm.to_patch(E.r)
    origin = _face_origins(asm, P.map, index, [None] + [E.patch] * k)
    for f in P.inner_faces():
        origin.setdefault(f, (0, -1))
    return P, origin


def _edge_patch_assembly(E: ExpansionPatch):
    walk = E.walk()
    m, n, s, L = E.roles.m, E.roles.n, E.roles.s, len(walk)
    pieces = [patch_rotation(E.patch)] * 4
    merges = []
    # doubles (A, B) = (0, 1) and (2, 3): i_l(A) = i'_l(B)
    for a, b in ((0, 1), (2, 3)):
        for l in range(m + 1):
            merges.append(((a, walk[l]), (b, walk[L - 1 - l])))

    def o(c, j):
        return (c, walk[m + j])

    def side(a, b):
        return [o(b, j) for j in range(s, n + 1)] + [o(a, j) for j in range(1, s + 1)]

    p1, p2 = side(0, 1), side(2, 3)
    for p in range(n + 1):
        merges.append((p1[p], p2[n - p]))
    return assemble(pieces, merges)


def edge_patch(E: ExpansionPatch) -> Patch:
    """Four copies of ``E``: two doubles glued along their o-sides."""
    P, _ = _edge_patch_assembly(E).to_patch(E.r)
    return P


@dataclass(frozen=True)
class PropertyReport:
    ok: bool
    witness: tuple[tuple[int, int], tuple[int, int]] | None = None

    def __bool__(self) -> bool:
        return self.ok


def has_polyhedral_property(E: ExpansionPatch) -> PropertyReport:
    """Whether all inner faces of the edge patch meet properly.

    The witness names the failing faces as ``(copy, local face)`` pairs.
    """
    asm = _edge_patch_assembly(E)
    P, index = asm.to_patch(E.r)
    M = P.map
    origin = _face_origins(asm, M, index, [E.patch] * 4)
    inner = P.inner_faces()
    for a in range(len(inner)):
        for b in range(a + 1, len(inner)):
            if not meets_properly(M, inner[a], inner[b]):
                return PropertyReport(False, (origin[inner[a]], origin[inner[b]]))
    return PropertyReport(True)
