"""Circular electrical networks (plain and cactus) and their JSON codec."""
from __future__ import annotations

import bisect
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..errors import NetworkFormatError
from .extrat import ExtRat


@dataclass(frozen=True)
class BoundaryVertex:
    id: str
    labels: tuple  # sorted labels carried by this vertex


@dataclass(frozen=True)
class Edge:
    u: str
    v: str
    c: Fraction  # conductance, finite and positive


def is_noncrossing(blocks) -> bool:
    """True iff the label blocks form a noncrossing partition of the circle."""
    blocks = [sorted(b) for b in blocks if len(b)]
    for x, a in enumerate(blocks):
        for b in blocks[x + 1:]:
            # b must sit inside a single cyclic gap of a
            gaps = {bisect.bisect_left(a, t) % len(a) for t in b}
            if len(gaps) > 1:
                return False
    return True


def _conductance(raw, where):
    if isinstance(raw, bool) or isinstance(raw, float):
        raise NetworkFormatError(f"{where}: conductance must be an exact string or integer, got {raw!r}")
    try:
        val = ExtRat(raw)
    except (TypeError, ValueError) as exc:
        raise NetworkFormatError(f"{where}: bad conductance {raw!r}") from exc
    if not val.is_finite or val.fraction() <= 0:
        raise NetworkFormatError(f"{where}: conductance must be finite and positive, got {raw!r}")
    return val.fraction()


@dataclass(frozen=True)
class CircularNetwork:
    """A weighted graph in a disk with labeled boundary vertices.

    ``rotation`` (optional) is a tuple of ``(vertex_id, entries)`` pairs where
    ``entries`` lists incident edge indices clockwise, starting just after the
    outer gap at the vertex's smallest label.  Vertices carrying k labels list
    ``None`` at each of the remaining k-1 outer gaps, in increasing label order.
    """

    n: int
    boundary: tuple
    interior: tuple = ()
    edges: tuple = ()
    rotation: Optional[tuple] = None
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "boundary", tuple(
            b if isinstance(b, BoundaryVertex) else BoundaryVertex(str(b[0]), tuple(sorted(b[1])))
            for b in self.boundary))
        object.__setattr__(self, "interior", tuple(str(v) for v in self.interior))
        object.__setattr__(self, "edges", tuple(
            e if isinstance(e, Edge) else Edge(str(e[0]), str(e[1]), _conductance(e[2], "edge"))
            for e in self.edges))
        if self.rotation is not None:
            rot = self.rotation.items() if isinstance(self.rotation, dict) else self.rotation
            object.__setattr__(self, "rotation", tuple(
                (str(v), tuple(None if x is None else int(x) for x in seq)) for v, seq in rot))
        self._validate()

    # -- validation ---------------------------------------------------------
    def _validate(self):
        n = self.n
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise NetworkFormatError(f"n must be a positive integer, got {n!r}")
        ids = [b.id for b in self.boundary] + list(self.interior)
        if len(set(ids)) != len(ids):
            raise NetworkFormatError("duplicate vertex id")
        seen = {}
        for b in self.boundary:
            if not b.labels:
                raise NetworkFormatError(f"boundary vertex {b.id} carries no label")
            for lab in b.labels:
                if not isinstance(lab, int) or not 1 <= lab <= n:
                    raise NetworkFormatError(f"label {lab!r} outside 1..{n}")
                if lab in seen:
                    raise NetworkFormatError(f"duplicate label {lab}")
                seen[lab] = b.id
        if len(seen) != n:
            missing = sorted(set(range(1, n + 1)) - set(seen))
            raise NetworkFormatError(f"labels missing from boundary: {missing}")
        mins = [b.labels[0] for b in self.boundary]
        if mins != sorted(mins):
            raise NetworkFormatError("boundary vertices are not listed in clockwise label order")
        if not is_noncrossing([b.labels for b in self.boundary]):
            raise NetworkFormatError("crossing identification of boundary labels")
        idset = set(ids)
        for k, e in enumerate(self.edges):
            if e.u not in idset or e.v not in idset:
                raise NetworkFormatError(f"edge {k} has an unknown endpoint")
            if e.c <= 0:
                raise NetworkFormatError(f"edge {k}: conductance must be positive")
        index = {
            "label_vertex": seen,
            "labels": {b.id: b.labels for b in self.boundary},
            "ids": tuple(ids),
        }
        object.__setattr__(self, "_index", index)
        if self.rotation is not None:
            self._validate_rotation()

    def _validate_rotation(self):
        rot = dict(self.rotation)
        if len(rot) != len(self.rotation):
            raise NetworkFormatError("rotation lists a vertex twice")
        for v in rot:
            if v not in self._index["ids"]:
                raise NetworkFormatError(f"rotation names unknown vertex {v}")
        incident = {v: [] for v in self._index["ids"]}
        for k, e in enumerate(self.edges):
            incident[e.u].append(k)
            incident[e.v].append(k)
        for v in self._index["ids"]:
            seq = rot.get(v)
            if seq is None:
                if incident[v] or len(self.labels_of(v)) > 1:
                    raise NetworkFormatError(f"rotation missing for vertex {v}")
                continue
            gaps = sum(1 for x in seq if x is None)
            if gaps != max(len(self.labels_of(v)) - 1, 0):
                raise NetworkFormatError(f"rotation of {v} has {gaps} gap markers; expected {len(self.labels_of(v)) - 1}")
            if sorted(x for x in seq if x is not None) != sorted(incident[v]):
                raise NetworkFormatError(f"rotation of {v} does not list exactly its incident edges")

    # -- accessors ----------------------------------------------------------
    @property
    def vertex_ids(self):
        return self._index["ids"]

    def labels_of(self, v):
        return self._index["labels"].get(v, ())

    def vertex_of_label(self, label):
        return self._index["label_vertex"][label]

    def is_boundary(self, v):
        return v in self._index["labels"]

    @property
    def is_cactus(self):
        return any(len(b.labels) > 1 for b in self.boundary)

    @property
    def has_embedding(self):
        return self.rotation is not None

    def rotation_of(self, v):
        return dict(self.rotation or ()).get(v, ())

    def components(self):
        """Connected components as lists of vertex ids (in vertex order)."""
        parent = {v: v for v in self.vertex_ids}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            ru, rv = find(e.u), find(e.v)
            if ru != rv:
                parent[ru] = rv
        groups = {}
        for v in self.vertex_ids:
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())

    def without_embedding(self):
        return CircularNetwork(self.n, self.boundary, self.interior, self.edges)

    def relabel(self, shift: int) -> "CircularNetwork":
        """Rotate labels: label l becomes ((l - 1 + shift) mod n) + 1."""
        n = self.n
        f = lambda lab: (lab - 1 + shift) % n + 1
        old = [(b, tuple(sorted(f(x) for x in b.labels))) for b in self.boundary]
        old.sort(key=lambda t: t[1][0])
        new_boundary = [BoundaryVertex(b.id, labs) for b, labs in old]
        rotation = None
        if self.rotation is not None:
            rotation = []
            for v, seq in self.rotation:
                labs = self.labels_of(v)
                if len(labs) > 1:
                    seq = _rotate_gaps(seq, [f(x) for x in labs])
                rotation.append((v, seq))
        return CircularNetwork(n, new_boundary, self.interior, self.edges, rotation)

    # -- codec --------------------------------------------------------------
    def to_dict(self):
        out = {
            "n": self.n,
            "boundary": [{"id": b.id, "labels": list(b.labels)} for b in self.boundary],
            "interior": list(self.interior),
            "edges": [{"u": e.u, "v": e.v, "c": str(e.c)} for e in self.edges],
        }
        if self.rotation is not None:
            out["rotation"] = {v: list(seq) for v, seq in self.rotation}
        return out


def _rotate_gaps(seq, new_labels):
    """Re-anchor a multi-label rotation after relabeling.

    ``seq`` starts after the gap of the first (old-order) label; segments
    between gaps are assigned to ``new_labels`` in the same order.  The result
    starts after the gap of the smallest new label.
    """
    segments = [[]]
    for x in seq:
        if x is None:
            segments.append([])
        else:
            segments[-1].append(x)
    start = min(range(len(new_labels)), key=lambda i: new_labels[i])
    order = list(range(start, len(segments))) + list(range(start))
    out = []
    for i, s in enumerate(order):
        if i:
            out.append(None)
        out.extend(segments[s])
    return tuple(out)


def parse_network(text) -> CircularNetwork:
    """Parse the JSON network format into a validated :class:`CircularNetwork`."""
    try:
        data = json.loads(text) if isinstance(text, (str, bytes)) else text
    except json.JSONDecodeError as exc:
        raise NetworkFormatError(f"malformed JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise NetworkFormatError("network file must be a JSON object")
    unknown = set(data) - {"n", "boundary", "interior", "edges", "rotation"}
    if unknown:
        raise NetworkFormatError(f"unknown fields: {sorted(unknown)}")
    try:
        n = data["n"]
        boundary = []
        for b in data["boundary"]:
            labels = b["labels"]
            if isinstance(labels, int):
                labels = [labels]
            boundary.append((str(b["id"]), tuple(labels)))
        interior = [str(v) for v in data.get("interior", [])]
        edges = []
        for k, e in enumerate(data.get("edges", [])):
            edges.append((str(e["u"]), str(e["v"]), _conductance(e["c"], f"edge {k}")))
    except (KeyError, TypeError) as exc:
        raise NetworkFormatError(f"malformed network: {exc!r}") from exc
    rotation = data.get("rotation")
    if rotation is not None:
        if not isinstance(rotation, dict):
            raise NetworkFormatError("rotation must be an object")
        for v, seq in rotation.items():
            if not isinstance(seq, list) or any(
                    x is not None and (not isinstance(x, int) or isinstance(x, bool)) for x in seq):
                raise NetworkFormatError(f"rotation of {v} must list edge indices or null")
            if any(x is not None and not 0 <= x < len(edges) for x in seq):
                raise NetworkFormatError(f"rotation of {v} references a missing edge")
        rotation = tuple((str(v), tuple(seq)) for v, seq in rotation.items())
    return CircularNetwork(n, tuple(boundary), tuple(interior), tuple(edges), rotation)


def serialize_network(net: CircularNetwork) -> str:
    return json.dumps(net.to_dict(), indent=2, sort_keys=True)


def plain_network(n, edges, interior=(), rotation=None):
    """Convenience constructor: boundary vertex ``str(i)`` carries label i."""
    boundary = tuple((str(i), (i,)) for i in range(1, n + 1))
    return CircularNetwork(n, boundary, tuple(str(v) for v in interior),
                           tuple((str(u), str(v), c) for u, v, c in edges), rotation)
