"""Validated patches and seed maps.

Patches are stored as text files next to this module and checked against
their expected invariants each time they are loaded.  Seed maps are built
from face lists.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from ..expansion import ExpansionPatch, has_polyhedral_property
from ..io import parse_document, write
from ..mapkernel import OrientedMap, from_faces
from ..patchwork import GrowthMarker, Patch, is_w_k_gonal
from ..sequences import CountSequence


class UnknownName(KeyError):
    pass


class BadParams(ValueError):
    pass


class CatalogError(RuntimeError):
    """A stored entry failed its load-time checks."""


@dataclass(frozen=True)
class Expectation:
    p_vector: dict
    outer_tuple: tuple | None = None
    polyhedral_property: bool | None = None
    gonal: tuple | None = None  # (w, k) for plain patches
    marker_kinds: tuple = ()


EXPECTED = {
    "H": Expectation({6: 1}, (2, 1), True),
    "Q2": Expectation({4: 2}, (2, 2), True, marker_kinds=("diamond",)),
    "PN35": Expectation({3: 4, 5: 4}, (1, 2, 1, 3, 2, 3), True,
                        marker_kinds=("square", "square")),
    "PN37": Expectation({3: 6, 7: 2}, (2, 2, 3, 2, 1, 3, 2, 1, 2, 2), False,
                        marker_kinds=("vertex",)),
    "PF35": Expectation({3: 8, 5: 8}, gonal=((1, 2, 1, 3, 2, 3), 4),
                        marker_kinds=("diamond", "diamond", "diamond", "vertex")),
}

PATCH_NAMES = tuple(EXPECTED)
SEED_NAMES = ("tetrahedron", "cube", "octahedron", "icosahedron", "torus_grid")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str
    payload: str
    provenance: tuple[str, ...]
    markers: tuple[GrowthMarker, ...] = field(default=())


def _data(name: str) -> str:
    return resources.files(__package__).joinpath("data", f"{name}.txt").read_text(encoding="utf-8")


def verify_entry(name: str, obj) -> None:
    """Run the stored expectations for ``name`` against ``obj``.

    Raises:
        CatalogError: On any mismatch.
    """
    exp = EXPECTED[name]
    patch = obj.patch if isinstance(obj, ExpansionPatch) else obj
    problems = []
    if patch.p_vector() != CountSequence(exp.p_vector):
        problems.append(f"p-vector {patch.p_vector()}")
    if exp.outer_tuple is not None:
        if not isinstance(obj, ExpansionPatch) or obj.outer_tuple != exp.outer_tuple:
            problems.append("outer tuple")
    if exp.polyhedral_property is not None:
        if bool(has_polyhedral_property(obj)) != exp.polyhedral_property:
            problems.append("polyhedral property")
    if exp.gonal is not None and not is_w_k_gonal(patch, exp.gonal[0], exp.gonal[1], patch.r):
        problems.append("boundary shape")
    if tuple(m.kind for m in patch.markers) != exp.marker_kinds:
        problems.append("marker kinds")
    if problems:
        raise CatalogError(f"{name}: " + ", ".join(problems))


@lru_cache(maxsize=None)
def _load(name: str):
    doc = parse_document(_data(name))
    verify_entry(name, doc.obj)
    return doc


def get_patch(name: str) -> Patch | ExpansionPatch:
    """Load a catalog patch: ``H``, ``Q2``, ``PN35``, ``PN37`` or ``PF35``."""
    if name not in EXPECTED:
        raise UnknownName(name)
    return _load(name).obj


def get_entry(name: str) -> CatalogEntry:
    if name not in EXPECTED:
        raise UnknownName(name)
    doc = _load(name)
    patch = doc.obj.patch if isinstance(doc.obj, ExpansionPatch) else doc.obj
    kind = "expansion_patch" if isinstance(doc.obj, ExpansionPatch) else "patch"
    return CatalogEntry(name, kind, write(doc.obj, doc.comments),
                        tuple(c.lstrip("# ") for c in doc.comments), patch.markers)


def raw_text(name: str) -> str:
    """The stored file text of a catalog patch."""
    if name not in EXPECTED:
        raise UnknownName(name)
    return _data(name)


# seeds

def _tetrahedron():
    return [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]


def _cube():
    return [(4, 5, 6, 7), (0, 3, 2, 1), (0, 1, 5, 4), (1, 2, 6, 5), (2, 3, 7, 6), (3, 0, 4, 7)]


def _octahedron():
    eq = [1, 2, 3, 4]
    faces = [(0, eq[i], eq[(i + 1) % 4]) for i in range(4)]
    faces += [(5, eq[(i + 1) % 4], eq[i]) for i in range(4)]
    return faces


def _icosahedron():
    up = [1, 2, 3, 4, 5]
    lo = [6, 7, 8, 9, 10]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces += [(0, up[i], up[j]), (up[i], lo[i], up[j]),
                  (up[j], lo[i], lo[j]), (11, lo[j], lo[i])]
    return faces


def torus_grid_faces(m: int, n: int):
    """Square cells of an ``m`` by ``n`` grid with opposite sides identified."""
    return [((i, j), (i, (j + 1) % n), ((i + 1) % m, (j + 1) % n), ((i + 1) % m, j))
            for i in range(m) for j in range(n)]


def get_seed(name: str, *params: int) -> OrientedMap:
    """Build a seed map.

    ``torus_grid`` takes ``m, n >= 3``; the name may also be written
    ``"torus_grid(m,n)"``.

    Raises:
        UnknownName, BadParams.
    """
    match = re.fullmatch(r"\s*torus_grid\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*", name)
    if match:
        name, params = "torus_grid", (int(match.group(1)), int(match.group(2)))
    if name == "torus_grid":
        if len(params) != 2:
            raise BadParams("torus_grid needs m and n")
        m, n = params
        if m < 3 or n < 3:
            raise BadParams(f"torus_grid({m},{n}): both sides must be at least 3")
        return from_faces(torus_grid_faces(m, n))
    builders = {"tetrahedron": _tetrahedron, "cube": _cube,
                "octahedron": _octahedron, "icosahedron": _icosahedron}
    if name not in builders:
        raise UnknownName(name)
    if params:
        raise BadParams(f"{name} takes no parameters")
    return from_faces(builders[name]())


def list_entries() -> list[str]:
    return list(PATCH_NAMES) + list(SEED_NAMES)
