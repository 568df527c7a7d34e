"""Seeded random circular planar networks, cactus networks and split systems.

Networks are grown on the closed-up sphere map (see ``core.embedding``) by
operations that keep genus zero: a new edge is only ever drawn across a
single face, so every generated rotation system is a valid disk embedding.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .core.embedding import INFTY, infinity_rotation, other, positions, trace_faces
from .core.network import CircularNetwork
from .core.systems import CompactifiedSplitSystem, WeightedSplitSystem
from .errors import EmbeddingError


def random_conductance(rng):
    return Fraction(rng.randint(1, 6), rng.randint(1, 4))


class PlanarBuilder:
    """Mutable rotation system on the sphere, with INFTY standing outside the disk."""

    def __init__(self, n):
        self.n = n
        self.labels = {str(i): [i] for i in range(1, n + 1)}
        self.interior = []
        self.edges = []  # [u, v, c]; None once removed
        self.rot = {str(i): [("g", i, 0)] for i in range(1, n + 1)}
        self.rot[INFTY] = infinity_rotation(n)

    # corners are (vertex, end) meaning "just before ``end`` in the rotation"
    def faces(self):
        out = []
        for darts in trace_faces(self.rot):
            pos = positions(self.rot)
            corners = []
            for d in darts:
                v, _ = pos[d]
                if v != INFTY:
                    corners.append((v, d))
            out.append(corners)
        return out

    def _insert(self, corner, end):
        v, before = corner
        ring = self.rot[v]
        ring.insert(ring.index(before), end)

    def add_edge(self, a, b, c):
        """Join two corners of the same face."""
        k = len(self.edges)
        self.edges.append([a[0], b[0], c])
        self._insert(a, ("e", k, 0))
        self._insert(b, ("e", k, 1))
        return k

    def add_interior(self, corner, c):
        w = f"v{len(self.interior)}"
        self.interior.append(w)
        k = len(self.edges)
        self.edges.append([corner[0], w, c])
        self._insert(corner, ("e", k, 0))
        self.rot[w] = [("e", k, 1)]
        return w

    def subdivide(self, k, c):
        """Split edge k into two edges in series through a new interior vertex."""
        u, v, c0 = self.edges[k]
        w = f"v{len(self.interior)}"
        self.interior.append(w)
        j = len(self.edges)
        self.edges[k] = [u, w, c0]
        self.edges.append([w, v, c])
        ring = self.rot[v]
        ring[ring.index(("e", k, 1))] = ("e", j, 1)
        self.rot[w] = [("e", k, 1), ("e", j, 0)]
        return w

    def contract(self, k):
        """Merge the two boundary endpoints of edge k into one cactus vertex."""
        u, v, _ = self.edges[k]
        if u == v or u not in self.labels or v not in self.labels:
            raise EmbeddingError("only an edge between two distinct boundary vertices can be contracted")
        ru, rv = self.rot[u], self.rot[v]
        a, b = ru.index(("e", k, 0)), rv.index(("e", k, 1))
        self.rot[u] = ru[a + 1:] + ru[:a] + rv[b + 1:] + rv[:b]
        del self.rot[v]
        self.labels[u] = sorted(self.labels[u] + self.labels.pop(v))
        self.edges[k] = None
        for e in self.edges:
            if e is not None:
                e[0] = u if e[0] == v else e[0]
                e[1] = u if e[1] == v else e[1]

    def network(self) -> CircularNetwork:
        live = [k for k, e in enumerate(self.edges) if e is not None]
        renum = {k: i for i, k in enumerate(live)}
        edges = []
        for k in live:
            u, v, c = self.edges[k]
            edges.append((u, v, c))
        rotation = []
        for w, ring in self.rot.items():
            if w == INFTY:
                continue
            labs = self.labels.get(w, [])
            if labs:
                cut = ring.index(("g", labs[0], 0))
                ring = ring[cut + 1:] + ring[:cut]
            seq = tuple(None if x[0] == "g" else renum[x[1]] for x in ring)
            if seq or not labs:
                rotation.append((w, seq))
        boundary = sorted(((w, tuple(l)) for w, l in self.labels.items()), key=lambda b: b[1][0])
        return CircularNetwork(self.n, tuple(boundary), tuple(self.interior), tuple(edges), tuple(rotation))


def random_planar_network(rng, n=None, max_edges=10, max_interior=3) -> CircularNetwork:
    """A random circular planar network with at most ``max_edges`` edges."""
    n = n if n is not None else rng.randint(1, 6)
    b = PlanarBuilder(n)
    target = rng.randint(0, max_edges)
    attempts = 0
    while len(b.edges) < target and attempts < 50:
        attempts += 1
        op = rng.random()
        faces = b.faces()
        if op < 0.2 and b.edges:
            if len(b.interior) < max_interior:
                b.subdivide(rng.randrange(len(b.edges)), random_conductance(rng))
            continue
        face = rng.choice(faces)
        if op < 0.4 and len(b.interior) < max_interior and len(b.edges) + 2 <= max_edges:
            corner = rng.choice(face)
            w = b.add_interior(corner, random_conductance(rng))
            # close the new vertex onto another corner of the same face
            face = next(f for f in b.faces() if any(v == w for v, _ in f))
            others = [c for c in face if c[0] != w]
            wc = next(c for c in face if c[0] == w)
            if others:
                b.add_edge(wc, rng.choice(others), random_conductance(rng))
            continue
        choices = [(x, y) for i, x in enumerate(face) for y in face[i + 1:] if x[0] != y[0]]
        if choices:
            x, y = rng.choice(choices)
            b.add_edge(x, y, random_conductance(rng))
    return b.network()


def random_cactus_network(rng, n=None, max_edges=10) -> CircularNetwork:
    """A random cactus network: a planar network with some boundary edges contracted."""
    for _ in range(100):
        n0 = n if n is not None else rng.randint(3, 6)
        b = PlanarBuilder(n0)
        target = rng.randint(2, max_edges)
        while len(b.edges) < target:
            face = rng.choice(b.faces())
            choices = [(x, y) for i, x in enumerate(face) for y in face[i + 1:] if x[0] != y[0]]
            if not choices:
                if len(b.interior) >= 2:
                    break
                b.add_interior(rng.choice(face), random_conductance(rng))
                continue
            x, y = rng.choice(choices)
            if rng.random() < 0.25 and len(b.interior) < 2:
                b.add_interior(x, random_conductance(rng))
            else:
                b.add_edge(x, y, random_conductance(rng))
        contractible = [k for k, e in enumerate(b.edges)
                        if e and e[0] != e[1] and e[0] in b.labels and e[1] in b.labels]
        if not contractible:
            continue
        for k in rng.sample(contractible, rng.randint(1, min(2, len(contractible)))):
            e = b.edges[k]
            if e and e[0] != e[1] and e[0] in b.labels and e[1] in b.labels:
                b.contract(k)
        return b.network()
    raise RuntimeError("could not build a cactus network")


def planar_corpus(seed, count, **kw):
    rng = random.Random(seed)
    return [random_planar_network(rng, **kw) for _ in range(count)]


def cactus_corpus(seed, count, **kw):
    rng = random.Random(seed)
    return [random_cactus_network(rng, **kw) for _ in range(count)]


def random_split_system(rng, n=None, order=None, density=0.5) -> WeightedSplitSystem:
    """Random positive weights on a random subset of the circular splits of ``order``."""
    n = n if n is not None else rng.randint(1, 8)
    if order is None:
        order = list(range(1, n + 1))
        if rng.random() < 0.5:
            rng.shuffle(order)
    order = tuple(order)
    pairs = []
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            side = frozenset(order[a:b])
            if 0 < len(side) < n and rng.random() < density:
                pairs.append((side, Fraction(rng.randint(1, 9), rng.randint(1, 5))))
    return WeightedSplitSystem.accumulate(order, pairs)


def random_noncrossing_partition(rng, n):
    """Random noncrossing partition of 1..n built by recursive arc splitting."""
    blocks = []

    def fill(labels):
        if not labels:
            return
        first = labels[0]
        rest = labels[1:]
        block = [first]
        i = 0
        inner = []
        while i < len(rest):
            if rng.random() < 0.4:
                block.append(rest[i])
                fill(inner)
                inner = []
            else:
                inner.append(rest[i])
            i += 1
        fill(inner)
        blocks.append(tuple(block))

    fill(list(range(1, n + 1)))
    return sorted(blocks)


def random_compactified_system(rng, n=None, density=0.5) -> CompactifiedSplitSystem:
    n = n if n is not None else rng.randint(1, 8)
    parts = [random_split_system(rng, order=block, density=density)
             for block in random_noncrossing_partition(rng, n)]
    return CompactifiedSplitSystem(n, tuple(parts))
