"""Kalmanson condition, circular split decomposition and order search."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core.extrat import ExtRat, INF, ZERO
from .core.matrix import ExtMatrix
from .core.systems import CompactifiedSplitSystem, WeightedSplitSystem
from .errors import MatrixError, NotKalmansonError, SizeGuardError

ORDER_SEARCH_MAX_N = 9


@dataclass(frozen=True)
class KalmansonReport:
    verdict: bool
    witness: Optional[tuple] = None

    def to_dict(self):
        return {"kalmanson": self.verdict, "witness": list(self.witness) if self.witness else None}


def _check_dissimilarity(w: ExtMatrix):
    n = w.n
    for i in range(n):
        if w[i, i] != 0:
            raise MatrixError(f"diagonal entry {i + 1} is not zero")
        for j in range(i + 1, n):
            if w[i, j] != w[j, i]:
                raise MatrixError(f"matrix is not symmetric at ({i + 1},{j + 1})")
            if w[i, j] < 0:
                raise MatrixError(f"negative dissimilarity at ({i + 1},{j + 1})")


def finite_blocks(w: ExtMatrix, order=None):
    """Label blocks at mutually finite distance, each listed in the induced cyclic order."""
    n = w.n
    order = tuple(order) if order else tuple(range(1, n + 1))
    if sorted(order) != list(range(1, n + 1)):
        raise MatrixError("order must be a permutation of 1..n")
    blocks = []
    placed = set()
    for lab in order:
        if lab in placed:
            continue
        block = [x for x in order if x not in placed and w.at(lab, x).is_finite]
        for x in block:
            for y in block:
                if not w.at(x, y).is_finite:
                    raise MatrixError(f"finite distances are not transitive at labels {x},{y}")
        placed.update(block)
        blocks.append(tuple(block))
    return blocks


def _quad_violation(d, seq):
    m = len(seq)
    for a, b, c, e in itertools.combinations(range(m), 4):
        i, j, k, l = seq[a], seq[b], seq[c], seq[e]
        rhs = d(i, k) + d(j, l)
        if d(i, j) + d(k, l) > rhs or d(j, k) + d(i, l) > rhs:
            return (i, j, k, l)
    return None


def is_kalmanson(w: ExtMatrix, order=None) -> KalmansonReport:
    """Quadruple Kalmanson test in the given cyclic order, within each finite block."""
    _check_dissimilarity(w)
    d = lambda x, y: w.at(x, y).fraction()
    for block in finite_blocks(w, order):
        bad = _quad_violation(d, block)
        if bad:
            return KalmansonReport(False, bad)
    return KalmansonReport(True)


def _isolation_weights(d, seq):
    """Weight of every circular split of ``seq``; key is the pair of gap indices."""
    m = len(seq)
    out = {}
    for a in range(m):
        for b in range(a + 1, m):
            xa, xa1 = seq[a], seq[(a + 1) % m]
            xb, xb1 = seq[b], seq[(b + 1) % m]
            out[(a, b)] = (d(xa, xb) + d(xa1, xb1) - d(xa, xb1) - d(xa1, xb)) / 2
    return out


def decompose_block(d, seq) -> WeightedSplitSystem:
    """Circular split system on the labels ``seq`` whose metric is ``d``."""
    m = len(seq)
    if m <= 1:
        return WeightedSplitSystem(tuple(seq))
    bad = _quad_violation(d, seq)
    if bad:
        raise NotKalmansonError(f"Kalmanson condition fails at {bad}", witness=bad, block=tuple(seq))
    pairs = []
    for (a, b), alpha in _isolation_weights(d, seq).items():
        if alpha < 0:
            # only trivial splits can get here: a triangle inequality fails
            mid = (a + 1) % m if b == a + 1 else a
            wit = (seq[(mid - 1) % m], seq[mid], seq[(mid + 1) % m])
            raise NotKalmansonError(f"negative split weight {alpha}; triangle inequality fails at {wit}",
                                    witness=wit, block=tuple(seq))
        if alpha:
            side = frozenset(seq[(t % m)] for t in range(a + 1, b + 1))
            pairs.append((side, alpha))
    return WeightedSplitSystem(tuple(seq), tuple(pairs))


def split_decomposition(w: ExtMatrix, order=None) -> WeightedSplitSystem:
    """Unique circular split system (on ``order``) whose split metric is ``w``."""
    _check_dissimilarity(w)
    n = w.n
    if any(w[i, j].is_inf for i in range(n) for j in range(n)):
        raise MatrixError("matrix has inf entries; decompose each finite block separately")
    order = tuple(order) if order else tuple(range(1, n + 1))
    if sorted(order) != list(range(1, n + 1)):
        raise MatrixError("order must be a permutation of 1..n")
    return decompose_block(lambda x, y: w.at(x, y).fraction(), order)


def split_distance(system: WeightedSplitSystem, a, b) -> Fraction:
    total = Fraction(0)
    for side, wt in system.splits:
        if (a in side) != (b in side):
            total += wt
    return total


def metric_of_splits(system) -> ExtMatrix:
    """Split metric: d(i, j) = total weight of splits separating i and j.

    For a compactified system, labels in different parts are at distance inf.
    """
    if isinstance(system, WeightedSplitSystem):
        system = CompactifiedSplitSystem(system.n, (system,), system.order)
    n = system.n
    part_of = {lab: p for p in system.parts for lab in p.order}
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            p = part_of[i]
            rows[i - 1][j - 1] = ExtRat(split_distance(p, i, j)) if part_of[j] is p else INF
    return ExtMatrix(rows)


def iter_cyclic_orders(n):
    """Cyclic orders of 1..n up to rotation and reflection, lexicographically."""
    if n <= 2:
        yield tuple(range(1, n + 1))
        return
    for rest in itertools.permutations(range(2, n + 1)):
        if rest[0] < rest[-1]:
            yield (1,) + rest


def find_circular_order(w: ExtMatrix, max_n=ORDER_SEARCH_MAX_N):
    """Lexicographically first cyclic order in which ``w`` is Kalmanson, or None."""
    _check_dissimilarity(w)
    n = w.n
    if n > max_n:
        raise SizeGuardError(f"exhaustive order search is limited to n <= {max_n} (got {n})")
    if any(w[i, j].is_inf for i in range(n) for j in range(n)):
        raise MatrixError("order search needs a finite matrix")
    d = lambda x, y: w.at(x, y).fraction()
    for order in iter_cyclic_orders(n):
        if _quad_violation(d, order) is None:
            return order
    return None
