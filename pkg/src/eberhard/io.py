"""Line-oriented text format for maps, patches and expansion patches.

Example::

    # a square with its outer face
    eberhard-map 1 patch r 4
    dart 0 alpha 2 sigma 1
    ...
    outer_face 1
    marker diamond 4 0 1

Records in canonical order: comments, header, ``dart`` lines sorted by id,
``label`` lines, ``outer_face``, ``role`` lines (``m``, ``n``, ``s``,
``i0``) and ``marker`` lines in list order.  ``role i0`` names a vertex
index, marker anchors are darts and marker targets are face indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .growth import check_marker
from .expansion import ExpansionPatch, ExpansionRoles, validate_expansion_patch
from .mapkernel import OrientedMap
from .patchwork import MARKER_KINDS, GrowthMarker, Patch

MAGIC = "eberhard-map"
VERSION = 1
KINDS = ("map", "patch", "expansion_patch")
ROLE_KEYS = ("m", "n", "s", "i0")


class FormatError(ValueError):
    """Malformed text; carries the 1-based line and column."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ValidationError(ValueError):
    """Well-formed text describing an invalid object.

    ``error`` holds the name of the validator's exception class.
    """

    def __init__(self, error: str, message: str):
        super().__init__(f"{error}: {message}")
        self.error = error


@dataclass
class Document:
    obj: OrientedMap | Patch | ExpansionPatch
    comments: list[str] = field(default_factory=list)


def kind_of(obj) -> str:
    if isinstance(obj, ExpansionPatch):
        return "expansion_patch"
    if isinstance(obj, Patch):
        return "patch"
    if isinstance(obj, OrientedMap):
        return "map"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def write(obj, comments=()) -> str:
    """Serialize to canonical text."""
    kind = kind_of(obj)
    lines = [c if c.startswith("#") else f"# {c}" for c in comments]
    patch = obj.patch if kind == "expansion_patch" else obj if kind == "patch" else None
    M = patch.map if patch is not None else obj
    header = f"{MAGIC} {VERSION} {kind}"
    if patch is not None:
        header += f" r {patch.r}"
    lines.append(header)
    for d in M.darts:
        lines.append(f"dart {d} alpha {M.alpha[d]} sigma {M.sigma[d]}")
    for d in sorted(M.labels):
        lines.append(f"label {d} {M.labels[d]}")
    if patch is not None:
        lines.append(f"outer_face {patch.outer}")
    if kind == "expansion_patch":
        ro = obj.roles
        lines += [f"role m {ro.m}", f"role n {ro.n}", f"role s {ro.s}", f"role i0 {ro.i0}"]
    if patch is not None:
        for mk in patch.markers:
            lines.append(f"marker {mk.kind} {mk.anchor} {mk.target1} {mk.target2}")
    return "\n".join(lines) + "\n"


def _int(tok: str, line: int, col: int) -> int:
    if not tok.isdigit():
        raise FormatError(line, col, f"expected a non-negative decimal integer, got {tok!r}")
    return int(tok)


def parse_document(text: str) -> Document:
    """Parse text into a validated object plus its leading comments.

    Raises:
        FormatError: Malformed text.
        ValidationError: The described object fails validation.
    """
    comments: list[str] = []
    header = None
    alpha: dict[int, int] = {}
    sigma: dict[int, int] = {}
    labels: dict[int, str] = {}
    outer = None
    roles: dict[str, int] = {}
    markers: list[GrowthMarker] = []
    r = None
    kind = None
    for ln, raw in enumerate(text.split("\n"), start=1):
        if raw.startswith("#"):
            comments.append(raw)
            continue
        if not raw.strip():
            continue
        toks = raw.split()
        cols = []
        pos = 0
        for t in toks:
            pos = raw.index(t, pos)
            cols.append(pos + 1)
            pos += len(t)
        key = toks[0]
        if header is None:
            if key != MAGIC:
                raise FormatError(ln, 1, f"expected header starting with {MAGIC!r}")
            if len(toks) < 3:
                raise FormatError(ln, 1, "header needs version and kind")
            if _int(toks[1], ln, cols[1]) != VERSION:
                raise FormatError(ln, cols[1], f"unsupported version {toks[1]}")
            kind = toks[2]
            if kind not in KINDS:
                raise FormatError(ln, cols[2], f"unknown kind {kind!r}")
            if kind == "map":
                if len(toks) != 3:
                    raise FormatError(ln, cols[min(3, len(toks) - 1)], "unexpected header field")
            else:
                if len(toks) != 5 or toks[3] != "r":
                    raise FormatError(ln, cols[min(3, len(toks) - 1)], "patch header needs 'r <int>'")
                r = _int(toks[4], ln, cols[4])
            header = toks
            continue
        if key == "dart":
            if len(toks) != 6 or toks[2] != "alpha" or toks[4] != "sigma":
                raise FormatError(ln, 1, "expected 'dart <id> alpha <id> sigma <id>'")
            d = _int(toks[1], ln, cols[1])
            if d in alpha:
                raise FormatError(ln, cols[1], f"duplicate dart {d}")
            alpha[d] = _int(toks[3], ln, cols[3])
            sigma[d] = _int(toks[5], ln, cols[5])
        elif key == "label":
            if len(toks) < 3:
                raise FormatError(ln, 1, "expected 'label <dart> <text>'")
            d = _int(toks[1], ln, cols[1])
            labels[d] = raw[cols[2] - 1:].rstrip()
        elif key == "outer_face":
            if kind == "map":
                raise FormatError(ln, 1, "outer_face not allowed in a map file")
            if len(toks) != 2 or outer is not None:
                raise FormatError(ln, 1, "expected one 'outer_face <dart>'")
            outer = _int(toks[1], ln, cols[1])
        elif key == "role":
            if kind != "expansion_patch":
                raise FormatError(ln, 1, "role lines need kind expansion_patch")
            if len(toks) != 3 or toks[1] not in ROLE_KEYS:
                raise FormatError(ln, cols[1] if len(toks) > 1 else 1,
                                  f"expected 'role {{{','.join(ROLE_KEYS)}}} <int>'")
            if toks[1] in roles:
                raise FormatError(ln, cols[1], f"duplicate role {toks[1]}")
            roles[toks[1]] = _int(toks[2], ln, cols[2])
        elif key == "marker":
            if kind == "map":
                raise FormatError(ln, 1, "marker not allowed in a map file")
            if len(toks) != 5 or toks[1] not in MARKER_KINDS:
                raise FormatError(ln, 1, "expected 'marker square|diamond|vertex <dart> <face> <face>'")
            markers.append(GrowthMarker(toks[1], *(_int(toks[i], ln, cols[i]) for i in (2, 3, 4))))
        else:
            raise FormatError(ln, 1, f"unknown key {key!r}")
    if header is None:
        raise FormatError(1, 1, "missing header")
    if kind != "map" and outer is None:
        raise FormatError(ln, 1, "missing outer_face")
    if kind == "expansion_patch" and set(roles) != set(ROLE_KEYS):
        missing = sorted(set(ROLE_KEYS) - set(roles))
        raise FormatError(ln, 1, f"missing role lines: {', '.join(missing)}")
    try:
        M = OrientedMap(alpha, sigma, labels)
        if kind == "map":
            obj = M
        else:
            P = Patch(M, outer, r, markers)
            if kind == "patch":
                obj = P
            else:
                obj = validate_expansion_patch(
                    P, ExpansionRoles(roles["m"], roles["n"], roles["s"], roles["i0"]))
        if kind != "map":
            for mk in markers:
                check_marker(obj.patch if kind == "expansion_patch" else obj, mk)
    except (ValueError, KeyError) as exc:
        raise ValidationError(type(exc).__name__, str(exc)) from exc
    return Document(obj, comments)


def parse(text: str):
    """Parse text into an ``OrientedMap``, ``Patch`` or ``ExpansionPatch``."""
    return parse_document(text).obj


def read(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())


def save(path, obj, comments=()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write(obj, comments))
