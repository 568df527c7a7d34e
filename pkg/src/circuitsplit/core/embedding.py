"""Rotation systems, face tracing and disk-embedding validation.

The disk embedding of a network is checked by closing it up on the sphere:
a virtual vertex ``INFTY`` outside the disk is joined to every boundary
label through that label's outer gap.  The network is embedded in the disk
with its labels in clockwise order exactly when this augmented map has genus
zero (V - E + F = 2) and is connected.

Edge-ends are tuples ``("e", edge_index, side)`` for real edges (side 0 is the
``u`` end) and ``("g", label, side)`` for virtual edges (side 0 at the
boundary vertex, side 1 at ``INFTY``).
"""
from __future__ import annotations

from dataclasses import dataclass

INFTY = "∞"


def other(end):
    kind, key, side = end
    return (kind, key, 1 - side)


def infinity_rotation(n):
    # seen from outside the disk, clockwise labels run backwards
    return [("g", lab, 1) for lab in range(n, 0, -1)]


def arc_label(n, arriving, leaving):
    """Label of the boundary arc at the corner of INFTY between two gaps.

    The arc between labels a-1 and a is named a.  With ``infinity_rotation``
    the corner from gap ``arriving`` to the next gap ``leaving`` spans the arc
    between ``leaving`` and ``arriving`` (= ``arriving`` - 1), so it is named
    ``arriving``.
    """
    return arriving


def rotation_map(net):
    """Full rotation (with virtual gap ends and INFTY) of an embedded network."""
    rot = {}
    loop_seen = {}
    for v in net.vertex_ids:
        labels = net.labels_of(v)
        seq = []
        if labels:
            seq.append(("g", labels[0], 0))
        gi = 1
        for x in net.rotation_of(v):
            if x is None:
                seq.append(("g", labels[gi], 0))
                gi += 1
                continue
            e = net.edges[x]
            if e.u == e.v:
                side = loop_seen.get(x, 0)
                loop_seen[x] = side + 1
            else:
                side = 0 if e.u == v else 1
            seq.append(("e", x, side))
        rot[v] = seq
    rot[INFTY] = infinity_rotation(net.n)
    return rot


def positions(rot):
    return {end: (v, k) for v, seq in rot.items() for k, end in enumerate(seq)}


def trace_faces(rot):
    """Faces of a rotation system as lists of darts (a dart is its starting end)."""
    pos = positions(rot)
    seen = set()
    faces = []
    for v, seq in rot.items():
        for start in seq:
            if start in seen:
                continue
            face = []
            d = start
            while d not in seen:
                seen.add(d)
                face.append(d)
                w, k = pos[other(d)]
                ring = rot[w]
                d = ring[(k + 1) % len(ring)]
            faces.append(face)
    return faces


@dataclass(frozen=True)
class Face:
    darts: tuple
    edges: tuple  # real edge indices along the face walk
    arcs: tuple   # boundary arcs (named by label) bordering this face

    @property
    def is_interior(self):
        return not self.arcs


@dataclass(frozen=True)
class EmbeddingReport:
    valid: bool
    reason: str
    faces: tuple
    euler: int

    @property
    def verdict(self):
        return "VALID" if self.valid else "INVALID"

    @property
    def interior_faces(self):
        return tuple(f for f in self.faces if f.is_interior)

    @property
    def boundary_faces(self):
        return tuple(f for f in self.faces if not f.is_interior)

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "euler_characteristic": self.euler,
            "faces": [{"edges": list(f.edges), "arcs": list(f.arcs)} for f in self.faces],
        }


def describe_faces(net, rot=None):
    rot = rot if rot is not None else rotation_map(net)
    pos = positions(rot)
    out = []
    for darts in trace_faces(rot):
        edges = tuple(d[1] for d in darts if d[0] == "e")
        arcs = []
        for d in darts:
            if d[0] == "g" and d[2] == 0:
                _, k = pos[other(d)]
                ring = rot[INFTY]
                nxt = ring[(k + 1) % len(ring)]
                arcs.append(arc_label(net.n, d[1], nxt[1]))
        out.append(Face(tuple(darts), edges, tuple(arcs)))
    return out


def validate_embedding(net) -> EmbeddingReport:
    """Check that the network's rotation system is a disk embedding.

    Never raises for a bad embedding; the verdict carries the reason.
    """
    if net.rotation is None:
        return EmbeddingReport(False, "no rotation system", (), 0)
    rot = rotation_map(net)
    faces = tuple(describe_faces(net, rot))
    v = len(net.vertex_ids) + 1
    e = len(net.edges) + net.n
    chi = v - e + len(faces)
    # connectivity of the augmented map (every component must reach the boundary)
    reach = {INFTY}
    stack = [INFTY]
    adj = {}
    for k, ed in enumerate(net.edges):
        adj.setdefault(ed.u, []).append(ed.v)
        adj.setdefault(ed.v, []).append(ed.u)
    for lab in range(1, net.n + 1):
        w = net.vertex_of_label(lab)
        adj.setdefault(INFTY, []).append(w)
        adj.setdefault(w, []).append(INFTY)
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y not in reach:
                reach.add(y)
                stack.append(y)
    if len(reach) != v:
        return EmbeddingReport(False, "a component does not touch the boundary", faces, chi)
    if chi != 2:
        return EmbeddingReport(
            False, f"Euler characteristic {chi} != 2 (crossing edges or boundary out of order)", faces, chi)
    return EmbeddingReport(True, "ok", faces, chi)
