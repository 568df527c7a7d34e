"""Maps from networks to compactified circular split systems.

``xi`` / ``xi_prime`` read the Kron reduction as a polygon diagram, ``sigma``
weighs the 2-groves of each component, and ``rho`` decomposes the resistance
metric block by block.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core.embedding import validate_embedding
from .core.matrix import ExtMatrix
from .core.network import CircularNetwork
from .core.systems import CompactifiedSplitSystem, WeightedSplitSystem
from .electrical import check_response_matrix, resistance_matrix, response_matrix
from .errors import EmbeddingError, SizeGuardError
from .splits import _check_dissimilarity, decompose_block, finite_blocks

GROVE_MAX_EDGES = 16


def kron_edge_split(i, j, n, prime=False):
    """Split assigned to the Kron edge {i, j} (i < j).

    ``xi`` turns it into {i+1, ..., j} | rest and ``xi_prime`` into
    {i, ..., j-1} | rest.
    """
    if prime:
        return frozenset(range(i, j))
    return frozenset(range(i + 1, j + 1))


def chord_of_split(side, order, prime=True):
    """Inverse of ``kron_edge_split`` on a part with the given cyclic order."""
    m = len(order)
    pos = {x: k for k, x in enumerate(order)}
    idx = sorted(pos[x] for x in side)
    # first element of the arc in cyclic order
    start = next(k for k in idx if (k - 1) % m not in idx)
    length = len(idx)
    if prime:
        a, b = order[start], order[(start + length) % m]
    else:
        a, b = order[(start - 1) % m], order[(start + length - 1) % m]
    return (min(a, b), max(a, b))


def graphical_system(m: ExtMatrix, prime=False) -> CompactifiedSplitSystem:
    """``xi`` (or ``xi_prime``) computed directly from a response matrix."""
    check_response_matrix(m)
    n = m.n
    infinite, finite = [], []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            w = m.at(i, j)
            if w.is_inf:
                infinite.append(kron_edge_split(i, j, n, prime))
            elif w:
                finite.append((kron_edge_split(i, j, n, prime), w.fraction()))
    # an infinite split is contracted: it separates its two sides into different parts
    groups = {}
    for lab in range(1, n + 1):
        groups.setdefault(tuple(lab in s for s in infinite), []).append(lab)
    parts = []
    for labels in groups.values():
        part = frozenset(labels)
        pairs = []
        for side, w in finite:
            cut = side & part
            if cut and cut != part:
                pairs.append((cut, w))
        parts.append(WeightedSplitSystem.accumulate(tuple(labels), pairs))
    return CompactifiedSplitSystem(n, tuple(parts))


def xi(net) -> CompactifiedSplitSystem:
    m = net if isinstance(net, ExtMatrix) else response_matrix(net)
    return graphical_system(m, prime=False)


def xi_prime(net) -> CompactifiedSplitSystem:
    m = net if isinstance(net, ExtMatrix) else response_matrix(net)
    return graphical_system(m, prime=True)


# -- groves -------------------------------------------------------------------

@dataclass(frozen=True)
class Grove:
    edges: tuple        # edge indices, increasing
    tree_count: int
    partition: tuple    # label blocks, one per tree, sorted
    weight: Fraction


def _groves(vertices, edges, labels_of, k):
    """All k-groves of the graph (vertices, [(index, u, v, c)])."""
    size = len(vertices) - k
    if size < 0:
        return
    usable = [e for e in edges if e[1] != e[2]]
    for combo in itertools.combinations(usable, size):
        parent = {v: v for v in vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        weight = Fraction(1)
        for _, u, v, c in combo:
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
            weight *= c
        if not ok:
            continue
        blocks = {}
        for v in vertices:
            blocks.setdefault(find(v), []).extend(labels_of(v))
        if any(not labs for labs in blocks.values()):
            continue
        partition = tuple(sorted(tuple(sorted(b)) for b in blocks.values()))
        yield Grove(tuple(e[0] for e in combo), k, partition, weight)


def enumerate_groves(net: CircularNetwork, k: int, max_edges=GROVE_MAX_EDGES):
    """Every k-grove of the network: spanning forests with k trees, each tree carrying a label."""
    if len(net.edges) > max_edges:
        raise SizeGuardError(f"grove enumeration is limited to {max_edges} edges (got {len(net.edges)})")
    edges = [(x, e.u, e.v, e.c) for x, e in enumerate(net.edges)]
    return list(_groves(net.vertex_ids, edges, net.labels_of, k))


def _require_planar(net):
    report = validate_embedding(net)
    if not report.valid:
        raise EmbeddingError(f"network is not embedded as a circular planar network: {report.reason}")


def sigma(net: CircularNetwork, max_edges=GROVE_MAX_EDGES, check_planar=True) -> CompactifiedSplitSystem:
    """Induced split system: per component, 2-grove weights over spanning-tree weight."""
    if check_planar:
        _require_planar(net)
    if len(net.edges) > max_edges:
        raise SizeGuardError(f"grove enumeration is limited to {max_edges} edges (got {len(net.edges)})")
    parts = []
    for comp in net.components():
        labels = sorted(x for v in comp for x in net.labels_of(v))
        if not labels:
            continue
        members = set(comp)
        edges = [(x, e.u, e.v, e.c) for x, e in enumerate(net.edges) if e.u in members]
        total = sum((g.weight for g in _groves(comp, edges, net.labels_of, 1)), Fraction(0))
        pairs = []
        for g in _groves(comp, edges, net.labels_of, 2):
            side = frozenset(g.partition[0])
            pairs.append((side, g.weight / total))
        parts.append(WeightedSplitSystem.accumulate(tuple(labels), pairs))
    return CompactifiedSplitSystem(net.n, tuple(parts))


def rho(src, order=None) -> CompactifiedSplitSystem:
    """Kalmanson split system: blockwise circular decomposition of the resistance metric.

    ``src`` is a network or a resistance matrix; raises NotKalmansonError with
    a witness quadruple when a finite block is not Kalmanson in ``order``.
    """
    w = resistance_matrix(src) if isinstance(src, CircularNetwork) else src
    _check_dissimilarity(w)
    d = lambda x, y: w.at(x, y).fraction()
    parts = [decompose_block(d, block) for block in finite_blocks(w, order)]
    return CompactifiedSplitSystem(w.n, tuple(parts), tuple(order) if order else None)
