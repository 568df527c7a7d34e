"""Weighted circular split systems and their compactified form."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from ..errors import SplitSystemError
from .extrat import ExtRat
from .network import is_noncrossing


def normalize_order(order):
    """Rotate a cyclic order so that its smallest label comes first."""
    order = tuple(order)
    if not order:
        return order
    k = order.index(min(order))
    return order[k:] + order[:k]


def is_arc(side, order):
    """True iff ``side`` is a contiguous run of the cyclic ``order``."""
    m = len(order)
    inside = [x in side for x in order]
    exits = sum(1 for i in range(m) if inside[i] and not inside[(i + 1) % m])
    return exits == 1


def canonical_side(side, order):
    """The side of the split not containing ``order[0]``."""
    side = frozenset(side)
    if order[0] in side:
        return frozenset(order) - side
    return side


def _weight(w):
    if isinstance(w, ExtRat):
        w = w.fraction()
    if isinstance(w, (str, int)) and not isinstance(w, bool):
        w = ExtRat(w).fraction()
    if not isinstance(w, Fraction):
        raise SplitSystemError(f"split weight must be an exact rational, got {w!r}")
    return w


@dataclass(frozen=True)
class WeightedSplitSystem:
    """Circular splits with positive weights on the labels of ``order``.

    Each split is stored once, by its canonical side (the side avoiding
    ``order[0]``), as a ``(frozenset, Fraction)`` pair; pairs are sorted.
    """

    order: tuple
    splits: tuple = ()

    def __post_init__(self):
        order = normalize_order(self.order)
        object.__setattr__(self, "order", order)
        labels = frozenset(order)
        if len(labels) != len(order):
            raise SplitSystemError("order repeats a label")
        seen = set()
        out = []
        for side, w in self.splits:
            side = frozenset(side)
            if not side or not side < labels:
                raise SplitSystemError(f"split side {sorted(side)} is not a proper nonempty subset")
            side = canonical_side(side, order)
            if not is_arc(side, order):
                raise SplitSystemError(f"split {sorted(side)} is not circular for order {order}")
            if side in seen:
                raise SplitSystemError(f"duplicate split {sorted(side)}")
            w = _weight(w)
            if w <= 0:
                raise SplitSystemError(f"split {sorted(side)} has nonpositive weight {w}")
            seen.add(side)
            out.append((side, w))
        out.sort(key=lambda t: (len(t[0]), tuple(order.index(x) for x in sorted(t[0], key=order.index))))
        object.__setattr__(self, "splits", tuple(out))

    @classmethod
    def accumulate(cls, order, pairs):
        """Sum weights of repeated splits (sides or complements) and drop zeros."""
        order = normalize_order(order)
        acc = {}
        for side, w in pairs:
            side = canonical_side(side, order)
            acc[side] = acc.get(side, Fraction(0)) + _weight(w)
        return cls(order, tuple((s, w) for s, w in acc.items() if w != 0))

    @property
    def labels(self):
        return frozenset(self.order)

    @property
    def n(self):
        return len(self.order)

    def __len__(self):
        return len(self.splits)

    def weight(self, side):
        side = canonical_side(side, self.order)
        for s, w in self.splits:
            if s == side:
                return w
        return Fraction(0)

    def sides(self):
        return frozenset(s for s, _ in self.splits)

    def unweighted(self):
        return self.sides()

    def to_dict(self):
        return {
            "labels": list(self.order),
            "splits": [{"sideA": sorted(s), "w": str(w)} for s, w in self.splits],
        }


@dataclass(frozen=True)
class CompactifiedSplitSystem:
    """A noncrossing partition of the labels with a split system on each part."""

    n: int
    parts: tuple
    order: tuple = None

    def __post_init__(self):
        order = tuple(range(1, self.n + 1)) if self.order is None else normalize_order(self.order)
        object.__setattr__(self, "order", order)
        if sorted(order) != list(range(1, self.n + 1)):
            raise SplitSystemError("order must be a permutation of 1..n")
        pos = {x: i for i, x in enumerate(order)}
        parts = sorted(self.parts, key=lambda p: min(pos[x] for x in p.order))
        seen = set()
        for p in parts:
            if seen & p.labels:
                raise SplitSystemError("parts overlap")
            seen |= p.labels
            induced = tuple(sorted(p.order, key=pos.__getitem__))
            if normalize_order(induced) != p.order:
                raise SplitSystemError(f"part {sorted(p.labels)} is not in the induced cyclic order")
        if seen != set(order):
            raise SplitSystemError("parts do not cover all labels")
        if not is_noncrossing([[pos[x] for x in p.order] for p in parts]):
            raise SplitSystemError("partition is crossing")
        object.__setattr__(self, "parts", tuple(parts))

    @classmethod
    def single(cls, system: WeightedSplitSystem):
        return cls(system.n, (system,), system.order)

    @property
    def partition(self):
        return tuple(p.order for p in self.parts)

    def split_count(self):
        return sum(len(p) for p in self.parts)

    def unweighted(self):
        return frozenset((p.labels, p.sides()) for p in self.parts)

    def to_dict(self):
        out = {
            "n": self.n,
            "partition": [list(p.order) for p in self.parts],
            "parts": [p.to_dict() for p in self.parts],
        }
        if self.order != tuple(range(1, self.n + 1)):
            out["order"] = list(self.order)
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def parse_split_system(text) -> CompactifiedSplitSystem:
    data = json.loads(text) if isinstance(text, (str, bytes)) else text
    try:
        n = data["n"]
        order = data.get("order")
        parts = []
        for p in data["parts"]:
            splits = tuple((frozenset(s["sideA"]), _weight(s["w"])) for s in p.get("splits", []))
            parts.append(WeightedSplitSystem(tuple(p["labels"]), splits))
    except (KeyError, TypeError) as exc:
        raise SplitSystemError(f"malformed split system: {exc!r}") from exc
    sys = CompactifiedSplitSystem(n, tuple(parts), tuple(order) if order else None)
    if "partition" in data:
        given = sorted(sorted(b) for b in data["partition"])
        if given != sorted(sorted(p) for p in sys.partition):
            raise SplitSystemError("partition field disagrees with parts")
    return sys
