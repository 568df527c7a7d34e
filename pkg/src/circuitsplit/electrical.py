"""Laplacians, Kron reduction, response and resistance matrices.

The response matrix follows the printed convention: positive off-diagonal
conductances and a negative diagonal, i.e. ``M = -Schur(L)``.  Labels that
share a cactus vertex are joined by infinite conductance; a finite
conductance at a vertex carrying k labels is divided evenly among them.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core.extrat import ExtRat, INF, NEG_INF, ZERO
from .core.matrix import ExtMatrix, inverse, schur_complement
from .core.network import CircularNetwork
from .errors import MatrixError


@dataclass(frozen=True)
class LaplacianView:
    vertices: tuple
    boundary: tuple
    interior: tuple
    matrix: tuple

    def entry(self, u, v):
        i, j = self.vertices.index(u), self.vertices.index(v)
        return self.matrix[i][j]


def laplacian(net: CircularNetwork) -> LaplacianView:
    """Weighted Laplacian over all vertices, boundary vertices first."""
    verts = net.vertex_ids
    idx = {v: i for i, v in enumerate(verts)}
    size = len(verts)
    lap = [[Fraction(0)] * size for _ in range(size)]
    for e in net.edges:
        if e.u == e.v:
            continue
        i, j = idx[e.u], idx[e.v]
        lap[i][i] += e.c
        lap[j][j] += e.c
        lap[i][j] -= e.c
        lap[j][i] -= e.c
    boundary = tuple(b.id for b in net.boundary)
    return LaplacianView(verts, boundary, net.interior, tuple(tuple(r) for r in lap))


def boundary_conductances(net: CircularNetwork) -> dict:
    """Effective direct conductance between boundary vertices after eliminating the interior.

    Keys are ``(u, v)`` vertex-id pairs in boundary order; zero entries are omitted.
    """
    view = laplacian(net)
    nb = len(view.boundary)
    red = schur_complement(view.matrix, range(nb))
    out = {}
    for i in range(nb):
        for j in range(i + 1, nb):
            if red[i][j]:
                out[(view.boundary[i], view.boundary[j])] = -red[i][j]
    return out


@dataclass(frozen=True)
class ReducedNetwork:
    """Kron reduction: one weighted edge per connected label pair (inf for shared vertices)."""

    n: int
    edges: tuple  # ((i, j), ExtRat) with i < j, sorted

    def weight(self, i, j):
        key = (min(i, j), max(i, j))
        for k, w in self.edges:
            if k == key:
                return w
        return ZERO

    def to_network(self) -> CircularNetwork:
        """Re-read as a network without interior vertices (inf edges merge labels)."""
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (i, j), w in self.edges:
            if w.is_inf:
                parent[find(i)] = find(j)
        groups = {}
        for lab in range(1, self.n + 1):
            groups.setdefault(find(lab), []).append(lab)
        blocks = sorted(groups.values(), key=lambda b: b[0])
        vid = {}
        boundary = []
        for b in blocks:
            name = "b" + "_".join(map(str, b))
            boundary.append((name, tuple(b)))
            for lab in b:
                vid[lab] = name
        acc = {}
        for (i, j), w in self.edges:
            if w.is_inf:
                continue
            u, v = vid[i], vid[j]
            key = (u, v) if u <= v else (v, u)
            acc[key] = acc.get(key, Fraction(0)) + w.fraction()
        edges = tuple((u, v, c) for (u, v), c in sorted(acc.items(), key=lambda t: t[0]))
        return CircularNetwork(self.n, tuple(boundary), (), edges)

    def to_dict(self):
        return {"n": self.n, "edges": [{"i": i, "j": j, "w": str(w)} for (i, j), w in self.edges]}


def _label_conductances(net):
    """Off-diagonal response entries keyed by label pairs (i < j)."""
    cond = boundary_conductances(net)
    out = {}
    for b in net.boundary:
        labs = b.labels
        for x in range(len(labs)):
            for y in range(x + 1, len(labs)):
                out[(labs[x], labs[y])] = INF
    for (u, v), c in cond.items():
        lu, lv = net.labels_of(u), net.labels_of(v)
        share = c / (len(lu) * len(lv))
        for i in lu:
            for j in lv:
                out[(min(i, j), max(i, j))] = ExtRat(share)
    return out


def kron_reduce(net: CircularNetwork) -> ReducedNetwork:
    pairs = _label_conductances(net)
    return ReducedNetwork(net.n, tuple(sorted(pairs.items())))


def _matrix_from_pairs(n, pairs):
    rows = [[ZERO] * n for _ in range(n)]
    for (i, j), w in pairs.items():
        rows[i - 1][j - 1] = w
        rows[j - 1][i - 1] = w
    for i in range(n):
        row = rows[i]
        if any(x.is_inf for x in row):
            row[i] = NEG_INF
        else:
            row[i] = -sum((x for k, x in enumerate(row) if k != i), ZERO)
    return ExtMatrix(rows)


def response_matrix(net: CircularNetwork) -> ExtMatrix:
    return _matrix_from_pairs(net.n, _label_conductances(net))


def check_response_matrix(m: ExtMatrix):
    """Validate the response-matrix shape; returns the label classes joined by inf."""
    n = m.n
    if not m.is_symmetric():
        raise MatrixError("response matrix is not symmetric")
    for i in range(n):
        for j in range(n):
            if i != j and m[i, j] < 0:
                raise MatrixError(f"negative off-diagonal entry at ({i + 1},{j + 1})")
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if m[i, j].is_inf:
                parent[find(i)] = find(j)
    classes = {}
    for i in range(n):
        classes.setdefault(find(i), []).append(i + 1)
    for cls in classes.values():
        for a in cls:
            for b in cls:
                if a != b and not m.at(a, b).is_inf:
                    raise MatrixError(f"labels {a},{b} are linked through inf entries but M[{a},{b}] is finite")
    for i in range(n):
        row = m.rows()[i]
        if any(x.is_inf for k, x in enumerate(row) if k != i):
            if row[i] != NEG_INF:
                raise MatrixError(f"row {i + 1} contains inf but its diagonal is not -inf")
        else:
            if sum(row, ZERO) != 0:
                raise MatrixError(f"row {i + 1} does not sum to zero")
    return sorted(classes.values(), key=lambda c: c[0])


def _resistance_on_classes(n, classes, cond):
    """Resistance matrix given label classes (merged vertices) and class conductances.

    ``cond`` maps class-index pairs ``(a, b)`` (a < b) to positive Fractions.
    """
    k = len(classes)
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (a, b), c in cond.items():
        if c:
            parent[find(a)] = find(b)
    comps = {}
    for a in range(k):
        comps.setdefault(find(a), []).append(a)
    res = {}
    for members in comps.values():
        if len(members) == 1:
            continue
        root, rest = members[0], members[1:]
        pos = {a: t for t, a in enumerate(rest)}
        lap = [[Fraction(0)] * len(rest) for _ in rest]
        for (a, b), c in cond.items():
            if find(a) != find(members[0]) or not c:
                continue
            for x, y in ((a, b), (b, a)):
                if x in pos:
                    lap[pos[x]][pos[x]] += c
                    if y in pos:
                        lap[pos[x]][pos[y]] -= c
        g = inverse(lap)
        for a in members:
            for b in members:
                if a >= b:
                    continue
                if a == root:
                    r = g[pos[b]][pos[b]]
                elif b == root:
                    r = g[pos[a]][pos[a]]
                else:
                    r = g[pos[a]][pos[a]] + g[pos[b]][pos[b]] - 2 * g[pos[a]][pos[b]]
                res[(a, b)] = r
    where = {}
    for ci, cls in enumerate(classes):
        for lab in cls:
            where[lab] = ci
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            a, b = where[i], where[j]
            if a == b:
                continue
            key = (min(a, b), max(a, b))
            rows[i - 1][j - 1] = ExtRat(res[key]) if key in res else INF
    return ExtMatrix(rows)


def resistance_matrix(src) -> ExtMatrix:
    """Effective resistances between labels, from a network or a response matrix.

    Labels sharing a cactus vertex are at resistance 0; labels in different
    connected components are at resistance inf.
    """
    if isinstance(src, CircularNetwork):
        classes = [list(b.labels) for b in src.boundary]
        index = {b.id: k for k, b in enumerate(src.boundary)}
        cond = {}
        for (u, v), c in boundary_conductances(src).items():
            a, b = index[u], index[v]
            cond[(min(a, b), max(a, b))] = c
        return _resistance_on_classes(src.n, classes, cond)
    if isinstance(src, ExtMatrix):
        classes = check_response_matrix(src)
        where = {lab: ci for ci, cls in enumerate(classes) for lab in cls}
        cond = {}
        n = src.n
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                a, b = where[i], where[j]
                if a == b:
                    continue
                w = src.at(i, j)
                if w:
                    key = (min(a, b), max(a, b))
                    cond[key] = cond.get(key, Fraction(0)) + w.fraction()
        return _resistance_on_classes(n, classes, cond)
    raise TypeError("resistance_matrix expects a CircularNetwork or an ExtMatrix")


def equivalent(a: CircularNetwork, b: CircularNetwork) -> bool:
    if a.n != b.n:
        raise ValueError(f"networks have different label counts ({a.n} vs {b.n})")
    return response_matrix(a) == response_matrix(b)
