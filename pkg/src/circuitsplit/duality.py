"""Planar duals and medial strand diagrams of embedded networks."""
from __future__ import annotations

from dataclasses import dataclass

from .core.embedding import INFTY, describe_faces, other, positions, rotation_map, validate_embedding
from .core.network import CircularNetwork
from .errors import EmbeddingError


def _require_embedding(net):
    if net.rotation is None:
        raise EmbeddingError("operation needs a rotation system")
    report = validate_embedding(net)
    if not report.valid:
        raise EmbeddingError(f"invalid embedding: {report.reason}")


def planar_dual(net: CircularNetwork) -> CircularNetwork:
    """Dual network: one vertex per face, reciprocal conductances.

    The dual vertex in the face bordering the boundary arc between labels
    i-1 and i carries label i.  A face bordering several arcs becomes a cactus
    vertex, so bulbs and connected components trade places.
    """
    _require_embedding(net)
    rot = rotation_map(net)
    faces = describe_faces(net, rot)
    boundary_faces = sorted((f for f in faces if f.arcs), key=lambda f: min(f.arcs))
    interior_faces = [f for f in faces if not f.arcs]
    name = {}
    for f in boundary_faces:
        name[id(f)] = f"d{min(f.arcs)}"
    for k, f in enumerate(interior_faces):
        name[id(f)] = f"f{k}"
    face_of = {}
    for f in faces:
        for d in f.darts:
            face_of[d] = name[id(f)]
    edges = []
    for k, e in enumerate(net.edges):
        edges.append((face_of[("e", k, 0)], face_of[("e", k, 1)], 1 / e.c))
    rotation = []
    for f in boundary_faces + interior_faces:
        seq = []
        for d in reversed(f.darts):
            if d[0] == "e":
                seq.append(("e", d[1]))
            elif d[2] == 0:
                seq.append(("g", d[1]))
        if f.arcs:
            labels = [x[1] for x in seq if x[0] == "g"]
            start = labels.index(min(labels))
            gap_positions = [i for i, x in enumerate(seq) if x[0] == "g"]
            cut = gap_positions[start]
            seq = seq[cut + 1:] + seq[:cut]
        rotation.append((name[id(f)], tuple(None if x[0] == "g" else x[1] for x in seq)))
    boundary = [(name[id(f)], tuple(sorted(f.arcs))) for f in boundary_faces]
    interior = [name[id(f)] for f in interior_faces]
    return CircularNetwork(net.n, tuple(boundary), tuple(interior), tuple(edges), tuple(rotation))


@dataclass(frozen=True)
class Strand:
    stubs: tuple   # (start, end) stub numbers, or () for a closed strand
    edges: tuple   # edges crossed, in order


@dataclass(frozen=True)
class StrandDiagram:
    n: int
    strands: tuple
    matching: tuple        # sorted pairs of stubs 1..2n
    crossing_count: int
    warnings: tuple = ()

    def partner(self, stub):
        for a, b in self.matching:
            if a == stub:
                return b
            if b == stub:
                return a
        raise KeyError(stub)

    def to_dict(self):
        return {
            "n": self.n,
            "matching": [list(p) for p in self.matching],
            "crossing_count": self.crossing_count,
            "strands": [{"stubs": list(s.stubs), "edges": list(s.edges)} for s in self.strands],
            "warnings": list(self.warnings),
        }


def medial_strands(net: CircularNetwork) -> StrandDiagram:
    """Trace the medial strands (straight through every edge midpoint).

    Stubs are numbered clockwise: 2i-1 just before boundary label i and 2i
    just after it.  A strand passing an edge links the two corners on the same
    rotational side of its two ends, which is the straight-ahead rule at the
    degree-four medial vertex.
    """
    _require_embedding(net)
    rot = rotation_map(net)
    del rot[INFTY]
    pos = positions(rot)

    def step(end, offset):
        w, k = pos[end]
        ring = rot[w]
        return ring[(k + offset) % len(ring)]

    used = set()

    def walk(end, mode):
        """Follow a strand from the corner on side ``mode`` of ``end``."""
        crossed = []
        while True:
            kind, key, _ = end
            if kind == "g":
                return end, mode, crossed
            if (key, mode) in used:
                return None, mode, crossed
            used.add((key, mode))
            crossed.append(key)
            far = other(end)
            if mode == "before":
                end, mode = step(far, -1), "after"
            else:
                end, mode = step(far, +1), "before"

    def stub_of(gap_end, mode):
        # corner before the gap is stub 2l-1; corner after it is stub 2l
        lab = gap_end[1]
        return 2 * lab if mode == "after" else 2 * lab - 1

    strands = []
    done = set()
    for lab in range(1, net.n + 1):
        gap = ("g", lab, 0)
        for mode, first in (("after", step(gap, +1)), ("before", step(gap, -1))):
            start = stub_of(gap, mode)
            if start in done:
                continue
            nxt_mode = "before" if mode == "after" else "after"
            last, last_mode, crossed = walk(first, nxt_mode)
            end_stub = stub_of(last, last_mode)
            done.update((start, end_stub))
            strands.append(Strand((start, end_stub), tuple(crossed)))
    closed = []
    for k in range(len(net.edges)):
        for mode in ("before", "after"):
            if (k, mode) not in used:
                _, _, crossed = walk(("e", k, 0), mode)
                closed.append(Strand((), tuple(crossed)))
    matching = tuple(sorted(tuple(sorted(s.stubs)) for s in strands))
    warnings = []
    if closed:
        warnings.append("closed strands present; network is not reduced")
    allstrands = strands + closed
    owners = {}
    for si, s in enumerate(allstrands):
        for e in s.edges:
            owners.setdefault(e, []).append(si)
    pair_count = {}
    for e, who in owners.items():
        if len(who) == 2 and who[0] == who[1]:
            warnings.append("a strand crosses itself; network is not reduced")
        key = tuple(sorted(who))
        pair_count[key] = pair_count.get(key, 0) + 1
    if any(c > 1 and a != b for (a, b), c in pair_count.items()):
        warnings.append("two strands cross more than once; matching is not an equivalence invariant")
    return StrandDiagram(net.n, tuple(allstrands), matching, len(net.edges), tuple(dict.fromkeys(warnings)))
