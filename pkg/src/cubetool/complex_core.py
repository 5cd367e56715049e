"""Combinatorial cube complexes with explicit face attachments and corner maps.

A complex is a set of cubes; a d-cube stores 2d face attachments
((axis 0,-), (axis 0,+), (axis 1,-), ...) and an array of 2^d corner vertex
ids indexed little-endian by {0,1}^d bit vectors.  Each attachment carries a
signed axis permutation (see symmetry.Sym) so that quotient complexes whose
gluings reverse or permute coordinates (Klein bottle, twisted covers) are
representable; a bare face id means the canonical, coordinate-aligned gluing.

Vertices are the 0-cubes; an edge's corner array doubles as its endpoint
list.  All orderings used for deterministic output are lexicographic on ids.
"""

import json
from dataclasses import dataclass, field

from .errors import (
    MalformedComplex,
    MalformedMap,
    NotDimensionPreserving,
    NotNPC,
    UnknownVertex,
)
from .symmetry import AxisMap, Sym, bits_of, index_of, insert_bit


@dataclass(frozen=True)
class Cube:
    id: str
    dim: int
    faces: tuple      # 2*dim entries of (face_id, Sym)
    corners: tuple    # 2^dim vertex ids


@dataclass
class CubeComplex:
    name: str
    dim_cap: int
    cubes: dict
    _caches: dict = field(default_factory=dict, repr=False, compare=False)

    def cube(self, cube_id):
        return self.cubes[cube_id]

    def of_dim(self, d):
        return [c for c in self.sorted_cubes() if c.dim == d]

    def sorted_cubes(self):
        key = "sorted"
        if key not in self._caches:
            self._caches[key] = sorted(self.cubes.values(), key=lambda c: (c.dim, c.id))
        return self._caches[key]

    @property
    def vertex_ids(self):
        key = "vertices"
        if key not in self._caches:
            self._caches[key] = [c.id for c in self.of_dim(0)]
        return self._caches[key]

    @property
    def edges(self):
        return self.of_dim(1)

    @property
    def dimension(self):
        return max((c.dim for c in self.cubes.values()), default=0)

    def attachment(self, cube_id, axis, side):
        return self.cubes[cube_id].faces[2 * axis + side]

    def counts(self):
        out = {}
        for c in self.cubes.values():
            out[c.dim] = out.get(c.dim, 0) + 1
        return out

    def edges_at(self, v):
        key = "edges_at"
        if key not in self._caches:
            table = {u: [] for u in self.vertex_ids}
            for e in self.edges:
                for t in (0, 1):
                    table[e.corners[t]].append((e.id, t))
            for ends in table.values():
                ends.sort()
            self._caches[key] = table
        return self._caches[key][v]


# ---------------------------------------------------------------------------
# parsing and validation


def _parse_face_entry(entry, arity):
    if isinstance(entry, str):
        return entry, Sym.identity(arity)
    if isinstance(entry, dict) and "id" in entry:
        perm = tuple(entry.get("perm", range(arity)))
        flips = tuple(bool(b) for b in entry.get("flips", [False] * arity))
        try:
            sym = Sym(perm, flips)
        except ValueError as exc:
            raise MalformedComplex("bad attachment symmetry: %s" % exc) from exc
        if sym.arity != arity:
            raise MalformedComplex("attachment symmetry arity %d, expected %d" % (sym.arity, arity))
        return entry["id"], sym
    raise MalformedComplex("unparseable face entry: %r" % (entry,))


def complex_violations(raw):
    """All invariant violations of a raw complex description, in check order."""
    out = []
    cubes = {}
    seen = set()
    for rec in raw.get("cubes", []):
        cid = rec.get("id")
        if cid is None or not isinstance(cid, str):
            out.append({"invariant": "cube_id", "detail": "missing or non-string id", "cube": cid})
            continue
        if cid in seen:
            out.append({"invariant": "unique_ids", "cube": cid})
            continue
        seen.add(cid)
        dim = rec.get("dim")
        if not isinstance(dim, int) or dim < 0:
            out.append({"invariant": "dim_nonnegative", "cube": cid})
            continue
        dim_cap = raw.get("dim_cap", 3)
        if dim > dim_cap:
            out.append({"invariant": "dim_cap", "cube": cid, "dim": dim, "cap": dim_cap})
            continue
        faces_raw = rec.get("faces", [])
        corners = tuple(rec.get("corners", []))
        if len(faces_raw) != 2 * dim:
            out.append({"invariant": "face_count", "cube": cid,
                        "expected": 2 * dim, "got": len(faces_raw)})
            continue
        if len(corners) != 2 ** dim:
            out.append({"invariant": "corner_count", "cube": cid,
                        "expected": 2 ** dim, "got": len(corners)})
            continue
        try:
            faces = tuple(_parse_face_entry(f, dim - 1) for f in faces_raw)
        except MalformedComplex as exc:
            out.append({"invariant": "attachment_symmetry", "cube": cid, "detail": str(exc)})
            continue
        cubes[cid] = Cube(cid, dim, faces, corners)
    if out:
        return out

    vertices = {cid for cid, c in cubes.items() if c.dim == 0}
    for c in cubes.values():
        if c.dim == 0:
            if c.corners != (c.id,):
                out.append({"invariant": "vertex_self_corner", "cube": c.id})
            continue
        for fid, _sym in c.faces:
            if fid not in cubes:
                out.append({"invariant": "dangling_face", "cube": c.id, "face": fid})
            elif cubes[fid].dim != c.dim - 1:
                out.append({"invariant": "face_dimension", "cube": c.id, "face": fid})
        for v in c.corners:
            if v not in vertices:
                out.append({"invariant": "corner_is_vertex", "cube": c.id, "corner": v})
    if out:
        return out

    # corner consistency: restricting coordinate i to s yields face (i, s)'s corners
    for c in cubes.values():
        for axis in range(c.dim):
            for side in (0, 1):
                fid, sym = c.faces[2 * axis + side]
                face = cubes[fid]
                for u in range(2 ** face.dim):
                    bits = sym.apply_bits(bits_of(u, face.dim))
                    parent = c.corners[index_of(insert_bit(bits, axis, side))]
                    if face.corners[u] != parent:
                        out.append({"invariant": "corner_consistency", "cube": c.id,
                                    "axis": axis, "side": side, "face": fid,
                                    "face_corner": u})
    if out:
        return out

    # cubical identities: descending two coordinates commutes
    for c in cubes.values():
        if c.dim < 2:
            continue
        for i in range(c.dim):
            for j in range(i + 1, c.dim):
                for s in (0, 1):
                    for t in (0, 1):
                        a = _descend_two(cubes, c, i, s, j, t, first=j)
                        b = _descend_two(cubes, c, i, s, j, t, first=i)
                        if a != b:
                            out.append({"invariant": "face_commutation", "cube": c.id,
                                        "axes": [i, j], "sides": [s, t]})
    return out


def _descend_two(cubes, c, i, s, j, t, first):
    """Fix axes i->s and j->t of cube c, applying `first` first.

    Returns (cube id, Sym mapping its coords to c's coords minus {i, j}).
    """
    if first == j:
        a1, s1, a2, s2 = j, t, i, s
    else:
        a1, s1, a2, s2 = i, s, j, t
    fid, sym = c.faces[2 * a1 + s1]
    face = cubes[fid]
    # position of a2 among c's axes other than a1
    q = a2 if a2 < a1 else a2 - 1
    k = sym.perm[q]
    fid2, sym2 = face.faces[2 * k + (s2 ^ sym.flip[q])]
    # compose: final coords -> c's axes minus {i, j}
    remaining = [a for a in range(c.dim) if a not in (i, j)]
    perm, flip = [], []
    for a in remaining:
        qa = a if a < a1 else a - 1
        fa, f1 = sym.perm[qa], sym.flip[qa]
        p = fa if fa < k else fa - 1
        perm.append(sym2.perm[p])
        flip.append(f1 ^ sym2.flip[p])
    return fid2, Sym(tuple(perm), tuple(flip))


def validate_complex(raw):
    """Validate a raw description, returning a CubeComplex or raising MalformedComplex."""
    violations = complex_violations(raw)
    if violations:
        first = violations[0]
        raise MalformedComplex("invariant %s violated (cube %s)"
                               % (first.get("invariant"), first.get("cube")),
                               witness=violations)
    cubes = {}
    for rec in raw.get("cubes", []):
        dim = rec["dim"]
        faces = tuple(_parse_face_entry(f, dim - 1) for f in rec.get("faces", []))
        cubes[rec["id"]] = Cube(rec["id"], dim, faces, tuple(rec.get("corners", [])))
    return CubeComplex(raw.get("name", "complex"), raw.get("dim_cap", 3), cubes)


def build_complex(name, cubes, dim_cap=3):
    """Assemble and validate a complex from Cube records (internal constructors)."""
    raw = {"name": name, "dim_cap": dim_cap, "cubes": [
        {"id": c.id, "dim": c.dim,
         "faces": [_face_entry_data(f) for f in c.faces],
         "corners": list(c.corners)}
        for c in cubes]}
    return validate_complex(raw)


# ---------------------------------------------------------------------------
# serialization


def _face_entry_data(face):
    fid, sym = face
    if sym.is_identity():
        return fid
    entry = {"id": fid}
    if sym.perm != tuple(range(sym.arity)):
        entry["perm"] = list(sym.perm)
    if any(sym.flip):
        entry["flips"] = list(sym.flip)
    return entry


def complex_to_data(X):
    return {"name": X.name, "dim_cap": X.dim_cap, "cubes": [
        {"id": c.id, "dim": c.dim,
         "faces": [_face_entry_data(f) for f in c.faces],
         "corners": list(c.corners)}
        for c in X.sorted_cubes()]}


def complex_to_json(X):
    return json.dumps(complex_to_data(X), sort_keys=True, indent=1) + "\n"


def complex_from_json(text):
    return validate_complex(json.loads(text))


# ---------------------------------------------------------------------------
# iterated faces


def subface(X, cube_id, fixed):
    """The face of cube_id obtained by fixing axes per `fixed` ({axis: side}).

    Returns (face cube id, Sym mapping its coordinates to the remaining
    coordinates of cube_id in increasing axis order).  Well defined by the
    validated face-commutation identities.
    """
    c = X.cube(cube_id)
    remaining = list(range(c.dim))
    table = {a: (a, False) for a in remaining}  # original axis -> (current axis, flip)
    current = c
    for a0 in sorted(fixed, reverse=True):
        k, phi = table.pop(a0)
        fid, sym = current.faces[2 * k + (fixed[a0] ^ phi)]
        for a in table:
            m, psi = table[a]
            q = m if m < k else m - 1
            table[a] = (sym.perm[q], psi ^ sym.flip[q])
        current = X.cube(fid)
        remaining.remove(a0)
    perm = tuple(table[a][0] for a in remaining)
    flip = tuple(table[a][1] for a in remaining)
    return current.id, Sym(perm, flip)


def edge_end_at_corner(X, cube_id, corner_bits, axis):
    """The (edge id, end) of cube_id's edge along `axis` at the given corner."""
    fixed = {j: corner_bits[j] for j in range(len(corner_bits)) if j != axis}
    eid, sym = subface(X, cube_id, fixed)
    return eid, corner_bits[axis] ^ sym.flip[0]


# ---------------------------------------------------------------------------
# links and the NPC test


@dataclass
class VertexLink:
    vertex: str
    link_vertices: list          # (edge id, end) pairs, sorted
    simplices: list              # records below, all dims >= 1 cubes
    # each simplex record: dict with dim, verts (tuple ordered by cube axis),
    # cube, corner (corner index in the cube)

    def simplex_sets(self, nverts):
        return {frozenset(s["verts"]) for s in self.simplices if len(s["verts"]) == nverts}

    def adjacency(self):
        adj = {lv: set() for lv in self.link_vertices}
        for s in self.simplices:
            if len(s["verts"]) == 2:
                a, b = s["verts"]
                if a != b:
                    adj[a].add(b)
                    adj[b].add(a)
        return adj


def link(X, v):
    if v not in X.cubes or X.cube(v).dim != 0:
        raise UnknownVertex("no vertex %r" % v)
    return _links(X)[v]


def _links(X):
    key = "links"
    if key not in X._caches:
        table = {v: VertexLink(v, [], []) for v in X.vertex_ids}
        for e in X.edges:
            for t in (0, 1):
                table[e.corners[t]].link_vertices.append((e.id, t))
        for lk in table.values():
            lk.link_vertices.sort()
        for c in X.sorted_cubes():
            if c.dim < 1:
                continue
            for idx in range(2 ** c.dim):
                bits = bits_of(idx, c.dim)
                v = c.corners[idx]
                verts = tuple(edge_end_at_corner(X, c.id, bits, i) for i in range(c.dim))
                table[v].simplices.append(
                    {"dim": c.dim - 1, "verts": verts, "cube": c.id, "corner": idx})
        X._caches[key] = table
    return X._caches[key]


@dataclass
class Verdict:
    ok: bool
    witness: dict = None

    def __bool__(self):
        return self.ok


def _link_cliques(adj, minimum=3):
    """All cliques of size >= minimum in the link graph, in sorted order."""
    verts = sorted(adj)
    out = []

    def extend(clique, candidates):
        for i, w in enumerate(candidates):
            new = clique + (w,)
            if len(new) >= minimum:
                out.append(new)
            rest = [u for u in candidates[i + 1:] if u in adj[w]]
            if rest:
                extend(new, rest)

    for i, u in enumerate(verts):
        extend((u,), [w for w in verts[i + 1:] if w in adj[u]])
    return out


def is_npc(X):
    """Gromov's link condition: every vertex link is simplicial and flag."""
    for v in X.vertex_ids:
        lk = link(X, v)
        seen = {}
        for s in lk.simplices:
            if len(set(s["verts"])) != len(s["verts"]):
                return Verdict(False, {"vertex": v, "kind": "degenerate_simplex",
                                       "cube": s["cube"], "corner": s["corner"],
                                       "verts": list(map(list, s["verts"]))})
            key = (len(s["verts"]), frozenset(s["verts"]))
            if key in seen:
                return Verdict(False, {"vertex": v, "kind": "repeated_simplex",
                                       "cubes": [seen[key], s["cube"]],
                                       "verts": sorted(map(list, s["verts"]))})
            seen[key] = s["cube"]
        adj = lk.adjacency()
        by_size = {}
        for s in lk.simplices:
            by_size.setdefault(len(s["verts"]), set()).add(frozenset(s["verts"]))
        for clique in _link_cliques(adj):
            if frozenset(clique) not in by_size.get(len(clique), set()):
                return Verdict(False, {"vertex": v, "kind": "empty_clique",
                                       "clique": sorted(map(list, clique))})
    return Verdict(True)


def corner_index(X):
    """(vertex, frozenset of link vertices) -> [(cube, corner, {link vertex: axis})]."""
    key = "corner_index"
    if key not in X._caches:
        table = {}
        for v in X.vertex_ids:
            for s in link(X, v).simplices:
                assign = {lv: axis for axis, lv in enumerate(s["verts"])}
                table.setdefault((v, frozenset(s["verts"])), []).append(
                    (s["cube"], s["corner"], assign))
        X._caches[key] = table
    return X._caches[key]


def full_subcomplex(X, vertex_set, name=None):
    """The full subcomplex spanned by a vertex set (as a new CubeComplex)."""
    vs = set(vertex_set)
    cubes = [c for c in X.sorted_cubes() if all(u in vs for u in c.corners)]
    return build_complex(name or (X.name + "-full"), cubes, X.dim_cap)


def closure_subcomplex(X, cube_ids, name=None):
    """The subcomplex generated by the given cubes (downward closure)."""
    todo = sorted(set(cube_ids))
    keep = set()
    while todo:
        cid = todo.pop()
        if cid in keep:
            continue
        keep.add(cid)
        for fid, _ in X.cube(cid).faces:
            if fid not in keep:
                todo.append(fid)
    return build_complex(name or (X.name + "-closure"),
                         [X.cube(cid) for cid in sorted(keep)], X.dim_cap)


# ---------------------------------------------------------------------------
# cubical maps


@dataclass
class CubicalMap:
    name: str
    domain: CubeComplex
    codomain: CubeComplex
    cube_maps: dict   # cube id -> (image id, AxisMap)

    def image(self, cube_id):
        return self.cube_maps[cube_id][0]

    def axis_map(self, cube_id):
        return self.cube_maps[cube_id][1]

    def vertex_image(self, v):
        return self.cube_maps[v][0]

    def is_dimension_preserving(self):
        return all(not am.collapsed_axes for _, am in self.cube_maps.values())

    def edge_end_image(self, edge_id, end):
        imid, am = self.cube_maps[edge_id]
        if am.target[0] is None:
            return imid, None
        return imid, end ^ am.flip[0]


def face_image(fmap, cube_id, axis, side):
    """Image data of the (axis, side) face of cube_id induced by fmap's data.

    Returns (expected image cube id, expected AxisMap) for the face; the map
    is face-compatible iff this matches the stored entry for every slot.
    """
    X, Y = fmap.domain, fmap.codomain
    c = X.cube(cube_id)
    im_id, am = fmap.cube_maps[cube_id]
    fid, sym = c.faces[2 * axis + side]
    slot_axes = [a for a in range(c.dim) if a != axis]
    t = am.target[axis]
    if t is None:
        target = tuple(am.target[a] for a in slot_axes)
        flip = tuple(am.flip[a] for a in slot_axes)
        return im_id, AxisMap(target, flip).precompose_sym(sym)
    im_fid, im_sym = Y.cube(im_id).faces[2 * t + (side ^ am.flip[axis])]
    target, flip = [], []
    for a in slot_axes:
        ta = am.target[a]
        if ta is None:
            target.append(None)
            flip.append(False)
        else:
            p = ta if ta < t else ta - 1
            target.append(im_sym.perm[p])
            flip.append(am.flip[a] ^ im_sym.flip[p])
    return im_fid, AxisMap(tuple(target), tuple(flip)).precompose_sym(sym)


def _parse_axes_entry(entry):
    if entry is None:
        return None, False
    if isinstance(entry, int):
        return entry, False
    if isinstance(entry, dict):
        return entry["to"], bool(entry.get("flip", False))
    raise MalformedMap("unparseable axis entry: %r" % (entry,))


def map_from_data(data, domain, codomain):
    cube_maps = {}
    images = data["cube_images"]
    if "axis_maps" in data:
        axes = data["axis_maps"]
        for cid in domain.cubes:
            if cid not in images:
                raise MalformedMap("no image for cube %r" % cid)
            entries = axes.get(cid, list(range(domain.cube(cid).dim)))
            parsed = [_parse_axes_entry(e) for e in entries]
            am = AxisMap(tuple(p[0] for p in parsed), tuple(p[1] for p in parsed))
            cube_maps[cid] = (images[cid], am)
    else:
        # spec's plain form: cube_images + collapses, canonical axis order
        collapses = data.get("collapses", {})
        for cid, im in images.items():
            d = domain.cube(cid).dim
            dead = set(collapses.get(cid, []))
            target, nxt = [], 0
            for a in range(d):
                if a in dead:
                    target.append(None)
                else:
                    target.append(nxt)
                    nxt += 1
            cube_maps[cid] = (im, AxisMap(tuple(target), (False,) * d))
    return validate_map(domain, codomain, cube_maps, name=data.get("name", "map"))


def map_to_data(fmap):
    def axes_entry(t, f):
        if t is None:
            return None
        if not f:
            return t
        return {"to": t, "flip": True}

    return {"name": fmap.name, "domain": fmap.domain.name, "codomain": fmap.codomain.name,
            "cube_images": {cid: im for cid, (im, _) in sorted(fmap.cube_maps.items())},
            "axis_maps": {cid: [axes_entry(t, f) for t, f in zip(am.target, am.flip)]
                          for cid, (_, am) in sorted(fmap.cube_maps.items())}}


def validate_map(domain, codomain, cube_maps, name="map"):
    """Check totality, dimensions, corner and face compatibility."""
    for cid, c in domain.cubes.items():
        if cid not in cube_maps:
            raise MalformedMap("cube %r has no image" % cid)
        im, am = cube_maps[cid]
        if im not in codomain.cubes:
            raise MalformedMap("image %r of %r not in codomain" % (im, cid))
        if am.domain_dim != c.dim:
            raise MalformedMap("axis map arity mismatch on %r" % cid)
        if am.codomain_dim != codomain.cube(im).dim:
            raise MalformedMap("axis map of %r does not match image dimension" % cid)
    fmap = CubicalMap(name, domain, codomain, dict(cube_maps))
    for cid, c in domain.cubes.items():
        im, am = cube_maps[cid]
        image = codomain.cube(im)
        for idx in range(2 ** c.dim):
            got = image.corners[index_of(am.apply_bits(bits_of(idx, c.dim)))]
            want = cube_maps[c.corners[idx]][0]
            if got != want:
                raise MalformedMap("corner %d of %r maps inconsistently" % (idx, cid),
                                   witness={"cube": cid, "corner": idx})
        for axis in range(c.dim):
            for side in (0, 1):
                fid, _sym = c.faces[2 * axis + side]
                expect = face_image(fmap, cid, axis, side)
                if cube_maps[fid] != expect:
                    raise MalformedMap(
                        "face (%d,%d) of %r not compatible with its image" % (axis, side, cid),
                        witness={"cube": cid, "axis": axis, "side": side, "face": fid})
    return fmap


def identity_map(X):
    return CubicalMap("id", X, X,
                      {cid: (cid, AxisMap.identity(c.dim)) for cid, c in X.cubes.items()})


def compose_maps(g, f):
    """g after f."""
    cube_maps = {}
    for cid in f.domain.cubes:
        mid, am1 = f.cube_maps[cid]
        im, am2 = g.cube_maps[mid]
        cube_maps[cid] = (im, am2.compose(am1))
    return CubicalMap("%s.%s" % (g.name, f.name), f.domain, g.codomain, cube_maps)


def maps_equal(f, g):
    return f.cube_maps == g.cube_maps


def is_local_isometry(fmap):
    """Link-injective with full link image, per vertex.

    Requires a dimension-preserving map between NPC complexes.
    """
    if not fmap.is_dimension_preserving():
        bad = sorted(cid for cid, (_, am) in fmap.cube_maps.items() if am.collapsed_axes)
        raise NotDimensionPreserving("map collapses cubes", witness={"cubes": bad})
    for side, X in (("domain", fmap.domain), ("codomain", fmap.codomain)):
        v = is_npc(X)
        if not v:
            raise NotNPC("%s is not NPC" % side, witness=v.witness)
    for v in fmap.domain.vertex_ids:
        lk = link(fmap.domain, v)
        w = fmap.vertex_image(v)
        lk_im = link(fmap.codomain, w)
        phi = {}
        for lv in lk.link_vertices:
            target = fmap.edge_end_image(*lv)
            if target in phi.values():
                clash = [list(a) for a, b in phi.items() if b == target]
                return Verdict(False, {"vertex": v, "kind": "link_not_injective",
                                       "collided": clash + [list(lv)],
                                       "image": list(target)})
            phi[lv] = target
        image_set = set(phi.values())
        inverse = {b: a for a, b in phi.items()}
        dom_sets = {(len(s["verts"]), frozenset(s["verts"])) for s in lk.simplices}
        for s in lk_im.simplices:
            if all(u in image_set for u in s["verts"]):
                pre = frozenset(inverse[u] for u in s["verts"])
                if (len(s["verts"]), pre) not in dom_sets:
                    return Verdict(False, {"vertex": v, "kind": "image_not_full",
                                           "missing_simplex": sorted(map(list, s["verts"])),
                                           "codomain_cube": s["cube"]})
    return Verdict(True)
