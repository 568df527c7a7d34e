"""Counting spaces of networks and split systems.

Every count is an exact Python integer.  The compactified counts are taken
three ways (explicit composition sums, Lagrange coefficient extraction, and
fixed-point iteration of the functional equation) so they can be checked
against one another.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, prod

from .errors import SizeGuardError
from .maps import chord_of_split
from .plabic import ChordSet, ptolemy_closed

PTOLEMY_MAX_N = 9
CELLS_MAX_N = 6


@dataclass(frozen=True)
class CountSeries:
    name: str
    terms: tuple  # terms[k] for k = 0, 1, ...

    def __getitem__(self, k):
        return self.terms[k]

    def __len__(self):
        return len(self.terms)

    def to_dict(self):
        return {"name": self.name, "terms": list(self.terms)}


@dataclass(frozen=True)
class CellComplexReport:
    space: str
    n: int
    f_vector: tuple  # f_vector[d] = number of d-dimensional cells

    @property
    def total(self):
        return sum(self.f_vector)

    @property
    def dimension(self):
        return len(self.f_vector) - 1

    def to_dict(self):
        return {"space": self.space, "n": self.n, "fVector": list(self.f_vector), "total": self.total}


def omega_count(n):
    """Number of cells of the space of circular planar networks on n labels."""
    a = [1, 1, 2]
    for m in range(3, n + 1):
        a.append(2 * (m - 1) * a[m - 1] + sum((j - 1) * a[j] * a[m - j] for j in range(2, m - 1)))
    return a[n]


def series(name, fn, n):
    return CountSeries(name, tuple(fn(k) for k in range(n + 1)))


def _check_base(base, n):
    if len(base) <= n:
        raise ValueError(f"base series {base.name!r} needs terms up to index {n}")
    if base[0] != 1:
        raise ValueError("base series must start with 1")


def _exact_div(total, d, what):
    q, r = divmod(total, d)
    if r:
        raise ArithmeticError(f"{what}: {total} is not divisible by {d}; the base series is wrong")
    return q


def weak_compositions(n, parts):
    """All tuples of ``parts`` nonnegative integers summing to n (stars and bars)."""
    for bars in itertools.combinations(range(n + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(n + parts - 2 - prev)
        yield tuple(out)


def composition_count(base: CountSeries, n):
    """Sum over weak compositions of n into n+1 parts of the product of base terms, over n+1."""
    _check_base(base, n)
    total = sum(prod(base[j] for j in c) for c in weak_compositions(n, n + 1))
    return _exact_div(total, n + 1, "composition sum")


def _mul(a, b, deg):
    out = [0] * (deg + 1)
    for i, x in enumerate(a[:deg + 1]):
        if x:
            for j, y in enumerate(b[:deg + 1 - i]):
                out[i + j] += x * y
    return out


def _power(a, e, deg):
    out = [1] + [0] * deg
    while e:
        if e & 1:
            out = _mul(out, a, deg)
        a = _mul(a, a, deg)
        e >>= 1
    return out


def lagrange_count(base: CountSeries, n):
    """[x^n] B(x)^(n+1) / (n+1), with B truncated after degree n."""
    _check_base(base, n)
    coeff = _power(list(base.terms[:n + 1]), n + 1, n)[n]
    return _exact_div(coeff, n + 1, "Lagrange coefficient")


def fixed_point_counts(base: CountSeries, n):
    """Solve T = x B(T) by iteration; coefficient k+1 of T is the count for k labels."""
    _check_base(base, n)
    deg = n + 1
    t = [0] * (deg + 1)
    for _ in range(deg + 1):
        acc = [0] * (deg + 1)
        powt = [1] + [0] * deg
        for k in range(n + 1):
            for i, c in enumerate(powt):
                acc[i] += base[k] * c
            powt = _mul(powt, t, deg)
        t = [0] + acc[:deg]
    return tuple(t[1:])


def psi_count(n):
    return 2 ** comb(n, 2)


def double_factorial_odd(n):
    """(2n-1)!!"""
    return prod(range(1, 2 * n, 2))


def catalan(n):
    return comb(2 * n, n) // (n + 1)


# --- Ptolemy diagrams ------------------------------------------------------

def _diagonals(n):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 2, n + 1) if not (i == 1 and j == n)]


def _crosses(c1, c2):
    (a, b), (c, d) = c1, c2
    return (a < c < b < d) or (c < a < d < b)


def _forcing(c1, c2):
    ends = sorted(c1 + c2)
    return [(x, y) for x, y in itertools.combinations(ends, 2)]


def enumerate_ptolemy(n, max_n=PTOLEMY_MAX_N):
    """All Ptolemy diagrams on the n-gon, as (ChordSet of diagonals, optional side count).

    For n < 3 there is one empty diagram; it has one optional side when n = 2
    and none when n <= 1.
    """
    if n > max_n:
        raise SizeGuardError(f"Ptolemy enumeration is limited to n <= {max_n} (got {n})")
    if n < 3:
        return [(ChordSet.polygon(max(n, 0)), 1 if n == 2 else 0)]
    diags = _diagonals(n)
    index = {d: k for k, d in enumerate(diags)}
    crossing = {d: [e for e in diags if _crosses(d, e)] for d in diags}
    out = []
    chosen = []
    state = {}

    def consistent(d, val):
        if val:
            for e in crossing[d]:
                if state.get(e) is True:
                    for f in _forcing(d, e):
                        if f in index and state.get(f) is False:
                            return False
        else:
            for e in diags:
                if state.get(e) is not True:
                    continue
                for g in crossing[e]:
                    if state.get(g) is True and d in _forcing(e, g):
                        return False
        return True

    def rec(k):
        if k == len(diags):
            cs = ChordSet.polygon(n, chosen)
            out.append((cs, optional_sides(cs)))
            return
        d = diags[k]
        for val in (False, True):
            if consistent(d, val):
                state[d] = val
                if val:
                    chosen.append(d)
                rec(k + 1)
                if val:
                    chosen.pop()
                del state[d]

    rec(0)
    return out


def forced_sides(cs: ChordSet):
    """Polygon sides lying in the quadrilateral of some crossing pair of chords."""
    sides = cs.sides()
    out = set()
    for c1, c2 in itertools.combinations(sorted(cs.chords), 2):
        if cs.crosses(c1, c2):
            ends = c1 + c2
            out |= {tuple(sorted(p)) for p in itertools.combinations(ends, 2)} & sides
    return frozenset(out)


def optional_sides(cs: ChordSet):
    if cs.n <= 1:
        return 0
    return len(cs.sides()) - len(forced_sides(cs))


def ptolemy_formula(n):
    """Closed formula for the number of Ptolemy diagrams on the n-gon (n >= 3)."""
    k = n - 3
    total = sum(2 ** j * comb(k + 1 + j, j) * comb(2 * k + 2, k + 1 - 2 * j) for j in range((k + 1) // 2 + 1))
    return _exact_div(total, k + 2, "Ptolemy formula")


def xi_image_count(n, max_n=PTOLEMY_MAX_N):
    """Number of split systems displayed by circular planar networks on n labels."""
    if n == 0:
        return 1
    return sum(2 ** t for _, t in enumerate_ptolemy(n, max_n))


# --- cell complexes --------------------------------------------------------

def noncrossing_partitions(n):
    """Noncrossing partitions of 1..n as tuples of sorted blocks."""
    if n == 0:
        yield ()
        return

    def rec(labels):
        if not labels:
            yield ()
            return
        first, rest = labels[0], labels[1:]
        # choose the other members of the block of ``first``
        for r in range(len(rest) + 1):
            for others in itertools.combinations(rest, r):
                block = (first,) + others
                gaps = []
                prev = 0
                cuts = [rest.index(x) for x in others] + [len(rest)]
                for c in cuts:
                    gaps.append(rest[prev:c])
                    prev = c + 1
                for pieces in itertools.product(*(list(rec(g)) for g in gaps)):
                    yield (block,) + tuple(b for p in pieces for b in p)

    for p in rec(tuple(range(1, n + 1))):
        yield tuple(sorted(p))


def circular_splits(order):
    """Canonical sides of all circular splits of a part (avoiding its first label)."""
    m = len(order)
    return [frozenset(order[a:b]) for a in range(1, m) for b in range(a + 1, m + 1)]


def is_faithful_part(order, sides, prime=False):
    """Whether a split set on one part lies in the image of the graphical map."""
    if len(order) < 2:
        return True
    cs = ChordSet(order, frozenset(chord_of_split(s, order, prime) for s in sides))
    diagonals = ChordSet(order, frozenset(c for c in cs.chords if not cs.is_side(c)))
    if not ptolemy_closed(diagonals, sides_implicit=True):
        return False
    return forced_sides(diagonals) <= cs.chords


SPACES = ("psi", "psiBar", "faithfulBar")


def _part_f_vector(order, faithful):
    splits = circular_splits(order)
    f = [0] * (len(splits) + 1)
    for mask in range(1 << len(splits)):
        chosen = [s for k, s in enumerate(splits) if mask >> k & 1]
        if faithful and not is_faithful_part(order, chosen):
            continue
        f[len(chosen)] += 1
    return f


def _convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def enumerate_cells(space, n, max_n=CELLS_MAX_N) -> CellComplexReport:
    """f-vector of a cell complex, a cell's dimension being its number of splits.

    ``psi`` has one cell per set of circular splits; ``psiBar`` one per
    noncrossing partition with a split set on each part; ``faithfulBar`` keeps
    the ``psiBar`` cells whose parts are displayed by networks.
    """
    if space not in SPACES:
        raise ValueError(f"unknown space {space!r}; expected one of {', '.join(SPACES)}")
    if n > max_n:
        raise SizeGuardError(f"cell enumeration is limited to n <= {max_n} (got {n})")
    if space == "psi":
        f = _part_f_vector(tuple(range(1, n + 1)), False)
        return CellComplexReport(space, n, tuple(f))
    cache = {}
    total = [0]
    for partition in noncrossing_partitions(n):
        f = [1]
        for block in partition:
            key = len(block)
            if key not in cache:
                # f-vectors depend only on the block size
                cache[key] = _part_f_vector(tuple(range(1, key + 1)), space == "faithfulBar")
            f = _convolve(f, cache[key])
        if len(f) > len(total):
            total += [0] * (len(f) - len(total))
        for d, c in enumerate(f):
            total[d] += c
    while len(total) > 1 and total[-1] == 0:
        total.pop()
    return CellComplexReport(space, n, tuple(total))


# --- the enumeration table -------------------------------------------------

SERIES = ("omega", "omegaBar", "psi", "psiBar", "xiImage", "faithfulBar")


def count_series(name, n):
    """Terms 0..n of one of the named series."""
    if name == "omega":
        return series(name, omega_count, n)
    if name == "psi":
        return series(name, psi_count, n)
    if name == "xiImage":
        return series(name, xi_image_count, n)
    base = {"omegaBar": "omega", "psiBar": "psi", "faithfulBar": "xiImage"}.get(name)
    if base is None:
        raise ValueError(f"unknown series {name!r}; expected one of {', '.join(SERIES)}")
    b = count_series(base, n)
    return CountSeries(name, tuple(lagrange_count(b, k) for k in range(n + 1)))


def enumeration_table(n):
    return [count_series(name, n) for name in SERIES]


def format_table(rows, start=1):
    """Aligned text table: one row per series, one column per n."""
    n = len(rows[0]) - 1
    header = ["n"] + [str(k) for k in range(start, n + 1)]
    body = [[r.name] + [str(r[k]) for k in range(start, n + 1)] for r in rows]
    widths = [max(len(line[c]) for line in [header] + body) for c in range(len(header))]
    fmt = lambda line: "  ".join(x.rjust(w) if c else x.ljust(w) for c, (x, w) in enumerate(zip(line, widths)))
    return "\n".join(fmt(line) for line in [header] + body)
