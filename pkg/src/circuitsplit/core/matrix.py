"""Square matrices over :class:`ExtRat`, indexed by labels 1..n."""
from __future__ import annotations

import json
from fractions import Fraction

from ..errors import MatrixError
from .extrat import ExtRat, ZERO, to_ext


class ExtMatrix:
    """Immutable n-by-n matrix of ExtRat entries.

    Indexing is 0-based (``m[i, j]``); label-based helpers take 1-based labels.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows):
        rows = tuple(tuple(to_ext(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise MatrixError("matrix is not square")
        self._rows = rows

    @classmethod
    def zeros(cls, n):
        return cls([[ZERO] * n for _ in range(n)])

    @property
    def n(self):
        return len(self._rows)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def at(self, i, j):
        """Entry for labels i, j (1-based)."""
        return self._rows[i - 1][j - 1]

    def rows(self):
        return self._rows

    def __eq__(self, other):
        if not isinstance(other, ExtMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"ExtMatrix({[[str(x) for x in r] for r in self._rows]})"

    def is_symmetric(self):
        n = self.n
        return all(self._rows[i][j] == self._rows[j][i] for i in range(n) for j in range(i))

    def to_lists(self):
        return [[str(x) for x in row] for row in self._rows]

    def to_json(self) -> str:
        return json.dumps(self.to_lists())

    def to_table(self) -> str:
        cells = self.to_lists()
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


def parse_matrix(text) -> ExtMatrix:
    """Read a JSON array of arrays; entries are ints or strings ("p/q", "0.5", "inf")."""
    data = json.loads(text) if isinstance(text, str) else text
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise MatrixError("matrix must be a JSON array of arrays")
    rows = []
    for row in data:
        out = []
        for x in row:
            if isinstance(x, bool) or isinstance(x, float):
                raise MatrixError(f"inexact or invalid matrix entry {x!r}; use a string")
            try:
                out.append(ExtRat(x))
            except (TypeError, ValueError) as exc:
                raise MatrixError(str(exc)) from exc
        rows.append(out)
    return ExtMatrix(rows)


def serialize_matrix(m: ExtMatrix) -> str:
    return json.dumps(m.to_lists())


# -- exact dense linear algebra over Fraction --------------------------------

def schur_complement(a, keep):
    """Schur complement of a symmetric Fraction matrix onto the indices ``keep``.

    Eliminates every other index by Gaussian elimination, pivoting on the
    diagonal.  A zero pivot whose row is also zero (an isolated index) is
    simply dropped; a zero pivot with a nonzero row is a genuine singularity.
    """
    n = len(a)
    m = [list(map(Fraction, row)) for row in a]
    keep = list(keep)
    keep_set = set(keep)
    alive = set(range(n))
    for p in range(n):
        if p in keep_set:
            continue
        alive.discard(p)
        piv = m[p][p]
        if piv == 0:
            if any(m[p][j] for j in alive) or any(m[j][p] for j in alive):
                raise ArithmeticError("singular interior block in Schur complement")
            continue
        col = [(i, m[i][p]) for i in alive if m[i][p] != 0]
        row = [(j, m[p][j]) for j in alive if m[p][j] != 0]
        for i, aip in col:
            f = aip / piv
            mi = m[i]
            for j, apj in row:
                mi[j] -= f * apj
    return [[m[i][j] for j in keep] for i in keep]


def inverse(a):
    """Exact inverse of a nonsingular Fraction matrix (Gauss-Jordan)."""
    n = len(a)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if p is None:
            raise ArithmeticError("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                rc = aug[c]
                aug[r] = [x - f * y for x, y in zip(aug[r], rc)]
    return [row[n:] for row in aug]
