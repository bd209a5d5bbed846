"""Regenerate ``src/eberhard/catalog/data/*.txt`` from ``figures.py``.

Run from the repository root: ``python tools/make_catalog.py``.
"""

import math
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).parent))

import figures  # noqa: E402

from eberhard.expansion import ExpansionRoles, validate_expansion_patch  # noqa: E402
from eberhard.growth import MarkerInvalid, check_marker  # noqa: E402
from eberhard.io import write  # noqa: E402
from eberhard.mapkernel import from_rotation  # noqa: E402
from eberhard.patchwork import GrowthMarker, Patch  # noqa: E402

OUT = pathlib.Path(__file__).parent.parent / "src" / "eberhard" / "catalog" / "data"

COMMENTS = {
    "H": ["hexagon as an expansion 3-patch", "outer tuple (2, 1)"],
    "Q2": ["two quadrangles sharing an edge as an expansion 4-patch",
           "outer tuple (2, 2); diamond marker on the shared edge"],
    "PN35": ["expansion 4-patch of 4 triangles and 4 pentagons",
             "outer tuple (1, 2, 1, 3, 2, 3); two square markers, each on two pentagons"],
    "PN37": ["expansion 4-patch of 6 triangles and 2 heptagons",
             "outer tuple (2, 2, 3, 2, 1, 3, 2, 1, 2, 2); vertex marker between the heptagons"],
    "PF35": ["(1, 2, 1, 3, 2, 3)-4-gonal 4-patch of 8 triangles and 8 pentagons",
             "three diamond markers and one vertex marker, each on two pentagons"],
}


def build(fig):
    coords = fig["coords"]
    adj = {v: [] for v in coords}
    for a, b in fig["edges"]:
        adj[a].append(b)
        adj[b].append(a)

    def angle(v, u):
        return math.atan2(coords[u][1] - coords[v][1], coords[u][0] - coords[v][0])

    rot = {v: sorted(nb, key=lambda u: angle(v, u), reverse=True) for v, nb in adj.items()}
    M = from_rotation(rot)
    names = list(rot)
    outer = max(range(M.num_faces), key=lambda f: len(M.faces[f]))
    return Patch(M, M.faces[outer][0], fig["r"]), names


def markers(P, names, fig):
    M = P.map
    out = []
    for kind, verts, t1, t2 in fig["markers"]:
        if kind == "vertex":
            x = names.index(verts[0])
            fs = [M.face_of[d] for d in M.vertices[x] if M.face_size(M.face_of[d]) == t1]
            cands = [GrowthMarker("vertex", M.vertices[x][0], fs[0], fs[1]),
                     GrowthMarker("vertex", M.vertices[x][0], fs[1], fs[0])]
        else:
            d = M.arc(names.index(verts[0]), names.index(verts[1]))
            if kind == "diamond":
                cands = [GrowthMarker("diamond", d, M.face_of[d], M.face_of[M.alpha[d]])]
            else:
                def face(s):
                    return next(f for f in range(M.num_faces)
                                if sorted(names[v] for v in M.face_vertices(f)) == sorted(s))
                cands = [GrowthMarker("square", d, face(t1), face(t2))]
        for m in cands:
            try:
                check_marker(P, m)
            except MarkerInvalid:
                continue
            out.append(m)
            break
        else:
            raise SystemExit(f"no valid marker for {kind} {verts}")
    return out


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name in ("H", "Q2", "PN35", "PN37", "PF35"):
        fig = getattr(figures, name)
        P, names = build(fig)
        P = P.with_markers(markers(P, names, fig))
        obj = P
        if fig["roles"]:
            ro = fig["roles"]
            obj = validate_expansion_patch(
                P, ExpansionRoles(ro["m"], ro["n"], ro["s"], names.index(ro["i0"])))
        (OUT / f"{name}.txt").write_text(write(obj, COMMENTS[name]), encoding="utf-8")
        print(name, obj)


if __name__ == "__main__":
    main()
