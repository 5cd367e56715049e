"""Built-in corpus of small complexes, maps, ledgers and groups.

These are the fixtures exercised by the test suite and emitted by
``cubetool corpus``.  Identification squares (torus, Klein bottle, Mobius
band, annulus) demonstrate the attachment-symmetry encoding: a face entry
``{"id": ..., "flips": [true]}`` glues the face with the coordinate reversed.
"""

import itertools

from .errors import UnknownCorpusItem
from .complex_core import build_complex, validate_complex


def square():
    return validate_complex({"name": "square", "dim_cap": 3, "cubes": [
        {"id": "v00", "dim": 0, "faces": [], "corners": ["v00"]},
        {"id": "v10", "dim": 0, "faces": [], "corners": ["v10"]},
        {"id": "v01", "dim": 0, "faces": [], "corners": ["v01"]},
        {"id": "v11", "dim": 0, "faces": [], "corners": ["v11"]},
        {"id": "l", "dim": 1, "faces": ["v00", "v01"], "corners": ["v00", "v01"]},
        {"id": "r", "dim": 1, "faces": ["v10", "v11"], "corners": ["v10", "v11"]},
        {"id": "b", "dim": 1, "faces": ["v00", "v10"], "corners": ["v00", "v10"]},
        {"id": "t", "dim": 1, "faces": ["v01", "v11"], "corners": ["v01", "v11"]},
        {"id": "Q", "dim": 2, "faces": ["l", "r", "b", "t"],
         "corners": ["v00", "v10", "v01", "v11"]},
    ]})


def edge():
    return validate_complex({"name": "edge", "dim_cap": 3, "cubes": [
        {"id": "a0", "dim": 0, "faces": [], "corners": ["a0"]},
        {"id": "a1", "dim": 0, "faces": [], "corners": ["a1"]},
        {"id": "ea", "dim": 1, "faces": ["a0", "a1"], "corners": ["a0", "a1"]},
    ]})


def point():
    return validate_complex({"name": "point", "dim_cap": 3, "cubes": [
        {"id": "a0", "dim": 0, "faces": [], "corners": ["a0"]}]})


def torus():
    return validate_complex({"name": "torus", "dim_cap": 3, "cubes": [
        {"id": "v", "dim": 0, "faces": [], "corners": ["v"]},
        {"id": "a", "dim": 1, "faces": ["v", "v"], "corners": ["v", "v"]},
        {"id": "b", "dim": 1, "faces": ["v", "v"], "corners": ["v", "v"]},
        {"id": "S", "dim": 2, "faces": ["b", "b", "a", "a"],
         "corners": ["v", "v", "v", "v"]},
    ]})


def klein_bottle():
    # boundary word a b a b^-1: the top copy of `a` is glued reversed
    return validate_complex({"name": "klein", "dim_cap": 3, "cubes": [
        {"id": "v", "dim": 0, "faces": [], "corners": ["v"]},
        {"id": "a", "dim": 1, "faces": ["v", "v"], "corners": ["v", "v"]},
        {"id": "b", "dim": 1, "faces": ["v", "v"], "corners": ["v", "v"]},
        {"id": "S", "dim": 2,
         "faces": ["b", "b", "a", {"id": "a", "flips": [True]}],
         "corners": ["v", "v", "v", "v"]},
    ]})


def annulus():
    return validate_complex({"name": "annulus", "dim_cap": 3, "cubes": [
        {"id": "v0", "dim": 0, "faces": [], "corners": ["v0"]},
        {"id": "v1", "dim": 0, "faces": [], "corners": ["v1"]},
        {"id": "m", "dim": 1, "faces": ["v0", "v1"], "corners": ["v0", "v1"]},
        {"id": "a", "dim": 1, "faces": ["v0", "v0"], "corners": ["v0", "v0"]},
        {"id": "b", "dim": 1, "faces": ["v1", "v1"], "corners": ["v1", "v1"]},
        {"id": "S", "dim": 2, "faces": ["m", "m", "a", "b"],
         "corners": ["v0", "v0", "v1", "v1"]},
    ]})


def mobius():
    return validate_complex({"name": "mobius", "dim_cap": 3, "cubes": [
        {"id": "v0", "dim": 0, "faces": [], "corners": ["v0"]},
        {"id": "v1", "dim": 0, "faces": [], "corners": ["v1"]},
        {"id": "m", "dim": 1, "faces": ["v0", "v1"], "corners": ["v0", "v1"]},
        {"id": "a", "dim": 1, "faces": ["v0", "v1"], "corners": ["v0", "v1"]},
        {"id": "S", "dim": 2,
         "faces": ["m", {"id": "m", "flips": [True]},
                   "a", {"id": "a", "flips": [True]}],
         "corners": ["v0", "v1", "v1", "v0"]},
    ]})


def triangle_graph():
    return validate_complex({"name": "triangle", "dim_cap": 3, "cubes": [
        {"id": "b0", "dim": 0, "faces": [], "corners": ["b0"]},
        {"id": "b1", "dim": 0, "faces": [], "corners": ["b1"]},
        {"id": "b2", "dim": 0, "faces": [], "corners": ["b2"]},
        {"id": "E01", "dim": 1, "faces": ["b0", "b1"], "corners": ["b0", "b1"]},
        {"id": "E12", "dim": 1, "faces": ["b1", "b2"], "corners": ["b1", "b2"]},
        {"id": "E20", "dim": 1, "faces": ["b2", "b0"], "corners": ["b2", "b0"]},
    ]})


def wedge_of_loops(n=2):
    cubes = [{"id": "v", "dim": 0, "faces": [], "corners": ["v"]}]
    for i in range(n):
        cubes.append({"id": "w%d" % i, "dim": 1, "faces": ["v", "v"], "corners": ["v", "v"]})
    return validate_complex({"name": "wedge%d" % n, "dim_cap": 3, "cubes": cubes})


def self_crossing_square():
    # both pairs of opposite edges identified to the single edge e
    return validate_complex({"name": "selfcross", "dim_cap": 3, "cubes": [
        {"id": "v", "dim": 0, "faces": [], "corners": ["v"]},
        {"id": "e", "dim": 1, "faces": ["v", "v"], "corners": ["v", "v"]},
        {"id": "S", "dim": 2, "faces": ["e", "e", "e", "e"],
         "corners": ["v", "v", "v", "v"]},
    ]})


def grid(extents, name=None):
    """Product of paths; extents[i] = number of edges along axis i.

    Cell ids encode per-axis tokens: plain coordinate for a vertex position,
    "<x>e" for the edge [x, x+1].
    """
    n = len(extents)
    cubes = []
    for tokens in itertools.product(*[
            [str(x) for x in range(ext + 1)] + ["%de" % x for x in range(ext)]
            for ext in extents]):
        edge_axes = [i for i, tok in enumerate(tokens) if tok.endswith("e")]
        coords = [int(tok[:-1]) if tok.endswith("e") else int(tok) for tok in tokens]
        dim = len(edge_axes)
        cid = "g" + "_".join(tokens)
        faces = []
        for j in edge_axes:
            for side in (0, 1):
                sub = list(tokens)
                sub[j] = str(coords[j] + side)
                faces.append("g" + "_".join(sub))
        corners = []
        for bits in itertools.product((0, 1), repeat=dim):
            pos = list(tokens)
            for b, j in zip(bits, edge_axes):
                pos[j] = str(coords[j] + b)
            corners.append("g" + "_".join(pos))
        cubes.append({"id": cid, "dim": dim, "faces": faces, "corners": corners})
    return validate_complex({"name": name or ("grid" + "x".join(map(str, extents))),
                             "dim_cap": max(3, n), "cubes": cubes})


def cube3():
    X = grid([1, 1, 1], name="cube3")
    return X


def cube3_shell():
    solid = cube3()
    cubes = [c for c in solid.sorted_cubes() if c.dim <= 2]
    return build_complex("cube3-shell", cubes, solid.dim_cap)


def hexagon_pair():
    """The edge -> 3-cycle local isometry whose completion is the hexagon."""
    A = edge()
    B = triangle_graph()
    fdata = {"name": "edge-into-triangle", "domain": "edge", "codomain": "triangle",
             "cube_images": {"a0": "b0", "a1": "b1", "ea": "E01"},
             "axis_maps": {"a0": [], "a1": [], "ea": [0]}}
    return A, B, fdata


def sample_ledger():
    return {
        "name": "ledger-sample",
        "triplets": [
            {"id": "Z1", "weight": 1, "index": 2},
            {"id": "Z2", "weight": 2, "index": 3},
        ],
        "portals": [
            {"id": "P1", "triplet": "Z1", "cls": "c1", "side": "+", "sz": 2, "stab_index": 2},
            {"id": "P2", "triplet": "Z1", "cls": "c1", "side": "+", "sz": 4, "stab_index": 1},
            {"id": "P3", "triplet": "Z2", "cls": "c1", "side": "-", "sz": 3, "stab_index": 3},
            {"id": "P4", "triplet": "Z1", "cls": "c2", "side": "+", "sz": 1, "stab_index": 1},
            {"id": "P5", "triplet": "Z2", "cls": "c2", "side": "-", "sz": 1, "stab_index": 1},
        ],
    }


def sample_gog():
    x2 = [[["x", 1], ["x", 1]]]
    y3 = [[["y", 1], ["y", 1], ["y", 1]]]
    return {
        "name": "gog-sample",
        "vertices": {
            "u": {"generators": ["x"], "relators": x2},
            "w": {"generators": ["y"], "relators": y3},
        },
        "edges": [
            {"id": "e", "ends": ["u", "w"],
             "group": {"generators": [], "relators": []},
             "psi": [{}, {}]},
        ],
    }


def sample_group():
    return {
        "name": "z3-cusped",
        "group": {"kind": "permutation", "degree": 3,
                  "generators": {"t": [1, 2, 0], "t2": [2, 0, 1]}},
        "peripherals": [{"name": "P", "generators": ["t", "t2"]}],
    }


COMPLEX_ITEMS = {
    "point": point,
    "edge": edge,
    "square": square,
    "cube3": cube3,
    "cube3-shell": cube3_shell,
    "torus": torus,
    "klein": klein_bottle,
    "annulus": annulus,
    "mobius": mobius,
    "triangle": triangle_graph,
    "wedge2": wedge_of_loops,
    "selfcross": self_crossing_square,
    "grid2x2": lambda: grid([2, 2]),
    "grid3x3": lambda: grid([3, 3]),
}

OTHER_ITEMS = {
    "hexagon-pair": hexagon_pair,
    "ledger-sample": sample_ledger,
    "gog-sample": sample_gog,
    "z3-cusped": sample_group,
}


def corpus_names():
    return sorted(COMPLEX_ITEMS) + sorted(OTHER_ITEMS)


def get_complex(name):
    if name not in COMPLEX_ITEMS:
        raise UnknownCorpusItem("no corpus complex %r" % name)
    return COMPLEX_ITEMS[name]()
