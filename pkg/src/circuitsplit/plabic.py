"""Ptolemy diagrams, plabic tilings of split systems and the planarity obstruction."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .core.matrix import ExtMatrix
from .core.systems import CompactifiedSplitSystem
from .electrical import check_response_matrix
from .maps import chord_of_split


def _pair(a, b):
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class ChordSet:
    """Chords between the vertices of a convex polygon.

    ``order`` names the polygon vertices clockwise; a chord is a sorted pair of
    vertex names.  Polygon sides may be present as chords too.
    """

    order: tuple
    chords: frozenset

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        names = set(self.order)
        chords = set()
        for a, b in self.chords:
            if a == b or a not in names or b not in names:
                raise ValueError(f"bad chord {(a, b)} for polygon {self.order}")
            chords.add(_pair(a, b))
        object.__setattr__(self, "chords", frozenset(chords))

    @classmethod
    def polygon(cls, n, chords=()):
        return cls(tuple(range(1, n + 1)), frozenset(chords))

    @property
    def n(self):
        return len(self.order)

    def _pos(self):
        return {x: k for k, x in enumerate(self.order)}

    def is_side(self, chord):
        pos = self._pos()
        d = abs(pos[chord[0]] - pos[chord[1]])
        return self.n >= 2 and d in (1, self.n - 1)

    def sides(self):
        m = self.n
        if m < 2:
            return frozenset()
        return frozenset(_pair(self.order[k], self.order[(k + 1) % m]) for k in range(m))

    def crosses(self, c1, c2):
        """Chords cross iff their four endpoints are distinct and interleave."""
        if set(c1) & set(c2):
            return False
        pos = self._pos()
        a, b = sorted((pos[c1[0]], pos[c1[1]]))
        inside = [a < pos[x] < b for x in c2]
        return inside[0] != inside[1]

    def to_dict(self):
        return {"order": list(self.order), "chords": [list(c) for c in sorted(self.chords)]}


@dataclass(frozen=True)
class PtolemyCheck:
    closed: bool
    witness: Optional[tuple] = None  # first crossing pair lacking its completion

    def __bool__(self):
        return self.closed


def ptolemy_closed(cs: ChordSet, sides_implicit=False, vertex_of=None) -> PtolemyCheck:
    """Every crossing pair of chords must come with all six chords on its endpoints.

    With ``sides_implicit`` the polygon sides count as present.  ``vertex_of``
    maps labels to the boundary vertex carrying them (for cactus networks);
    chords meeting at a shared vertex do not force anything.
    """
    have = set(cs.chords)
    if sides_implicit:
        have |= cs.sides()
    for c1, c2 in itertools.combinations(sorted(cs.chords), 2):
        if vertex_of is not None and len({vertex_of[x] for x in c1 + c2}) < 4:
            continue
        if cs.crosses(c1, c2):
            ends = c1 + c2
            if any(_pair(x, y) not in have for x, y in itertools.combinations(ends, 2)):
                return PtolemyCheck(False, (c1, c2))
    return PtolemyCheck(True)


def maximal_cliques(cs: ChordSet, min_size=4):
    """Maximal cliques of the chord graph with at least ``min_size`` vertices."""
    adj = {x: set() for x in cs.order}
    for a, b in cs.chords:
        adj[a].add(b)
        adj[b].add(a)
    out = []

    def expand(clique, cand, excl):
        if not cand and not excl:
            if len(clique) >= min_size:
                out.append(clique)
            return
        for v in sorted(cand, key=cs.order.index):
            expand(clique | {v}, cand & adj[v], excl & adj[v])
            cand = cand - {v}
            excl = excl | {v}

    expand(frozenset(), set(cs.order), set())
    pos = cs._pos()
    return sorted((tuple(sorted(c, key=pos.__getitem__)) for c in out), key=lambda c: [pos[x] for x in c])


def bridges(cs: ChordSet):
    """Chords whose removal disconnects their endpoints in the chord graph."""
    out = []
    for c in sorted(cs.chords):
        rest = cs.chords - {c}
        seen, stack = {c[0]}, [c[0]]
        while stack:
            x = stack.pop()
            for a, b in rest:
                for p, q in ((a, b), (b, a)):
                    if p == x and q not in seen:
                        seen.add(q)
                        stack.append(q)
        if c[1] not in seen:
            out.append(c)
    return tuple(out)


def _subdivide(cs: ChordSet, cuts):
    """Cut the polygon along noncrossing chords; returns regions as vertex tuples."""
    regions = [cs.order]
    for a, b in cuts:
        for k, reg in enumerate(regions):
            if a in reg and b in reg:
                i, j = sorted((reg.index(a), reg.index(b)))
                if j - i in (1, len(reg) - 1):
                    break  # already a side of this region
                regions[k:k + 1] = [reg[i:j + 1], reg[j:] + reg[:i + 1]]
                break
    return regions


@dataclass(frozen=True)
class PartTiling:
    polygon: ChordSet
    unshaded: tuple  # clique regions (vertex tuples)
    shaded: tuple    # chord-free regions
    bridges: tuple

    def to_dict(self):
        return {
            "polygon": self.polygon.to_dict(),
            "unshaded": [list(r) for r in self.unshaded],
            "shaded": [list(r) for r in self.shaded],
            "bridges": [list(b) for b in self.bridges],
        }


@dataclass(frozen=True)
class PlabicTiling:
    ok: bool
    parts: tuple = ()
    witness: Optional[tuple] = None  # (part labels, crossing pair)

    def to_dict(self):
        out = {"ok": self.ok, "parts": [p.to_dict() for p in self.parts]}
        if self.witness is not None:
            labels, (c1, c2) = self.witness
            out["witness"] = {"part": list(labels), "crossing_pair": [list(c1), list(c2)]}
        return out


def system_chords(sys: CompactifiedSplitSystem, prime=True):
    """Polygon diagram of each part: one chord per split."""
    return tuple(
        ChordSet(p.order, frozenset(chord_of_split(side, p.order, prime) for side in p.sides()))
        for p in sys.parts)


def tile_polygon(cs: ChordSet) -> PartTiling:
    cliques = maximal_cliques(cs)
    in_clique = set()
    for q in cliques:
        in_clique |= {_pair(x, y) for x, y in itertools.combinations(q, 2)}
    hulls = set()
    for q in cliques:
        hulls |= {_pair(q[k], q[(k + 1) % len(q)]) for k in range(len(q))}
    cuts = sorted((set(cs.chords) - in_clique) | hulls, key=lambda c: sorted(cs.order.index(x) for x in c))
    pos = cs._pos()
    regions = [tuple(sorted(r, key=pos.__getitem__)) for r in (_subdivide(cs, cuts) if cs.n >= 3 else [])]
    regions.sort(key=lambda r: [pos[x] for x in r])
    clique_sets = {frozenset(q) for q in cliques}
    unshaded = tuple(r for r in regions if frozenset(r) in clique_sets)
    shaded = tuple(r for r in regions if frozenset(r) not in clique_sets)
    return PartTiling(cs, unshaded, shaded, bridges(cs))


def plabic_tiling(sys: CompactifiedSplitSystem, prime=True) -> PlabicTiling:
    """Plabic tiling of a split system, or a failure carrying a Ptolemy witness.

    Splits are drawn as chords through the inverse of ``xi_prime`` (or of
    ``xi`` when ``prime`` is false).
    """
    tiles = []
    for cs in system_chords(sys, prime):
        check = ptolemy_closed(cs)
        if not check:
            return PlabicTiling(False, tuple(tiles), (cs.order, check.witness))
        tiles.append(tile_polygon(cs))
    return PlabicTiling(True, tuple(tiles))


@dataclass(frozen=True)
class ObstructionReport:
    verdict: str  # OBSTRUCTED or NO_OBSTRUCTION
    witness: Optional[tuple] = None

    def to_dict(self):
        out = {"verdict": self.verdict}
        if self.witness:
            out["witness"] = [list(c) for c in self.witness]
        return out


def support_chords(m: ExtMatrix) -> ChordSet:
    n = m.n
    return ChordSet.polygon(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if m.at(i, j)])


def planarity_obstruction(m: ExtMatrix) -> ObstructionReport:
    """One-sided planarity test: a Ptolemy failure of the support rules planarity out.

    NO_OBSTRUCTION does not certify that a planar network exists.
    """
    classes = check_response_matrix(m)
    vertex_of = {lab: k for k, cls in enumerate(classes) for lab in cls}
    check = ptolemy_closed(support_chords(m), vertex_of=vertex_of)
    if check:
        return ObstructionReport("NO_OBSTRUCTION")
    return ObstructionReport("OBSTRUCTED", check.witness)
