"""Exact linear algebra over the rationals.

Everything in this package reduces to solving exact linear systems: spaces of
maps are nullspaces, hypothesis checks are nullspace triviality tests,
containment of solution spaces is reduction against a canonical basis.  This
module provides the substrate: `fractions.Fraction` scalars, a small dense
matrix type, reduced row echelon form with a fixed deterministic pivoting
rule, nullspace computation, and canonical subspaces.

Subspaces are stored by their unique reduced-row-echelon basis, so two
subspaces are equal iff their stored bases are identical tuples.  No
tolerances anywhere; equality means exact equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def rational_from_str(s):
    """Parse "p" or "p/q" into a Fraction. Rejects floats and malformed input."""
    if not isinstance(s, str) or not _RATIONAL_RE.match(s):
        raise ValueError(f"malformed rational {s!r}; expected 'p' or 'p/q'")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"malformed rational {s!r}: zero denominator")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def rational_to_str(q):
    """Serialize a Fraction as "p" or "p/q" with q > 0."""
    return str(Fraction(q))


def as_rational(x):
    """Coerce int/str/Fraction to Fraction; floats are rejected (not exact)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return rational_from_str(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class MatrixQ:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries, cols=None):
        data = tuple(tuple(as_rational(x) for x in row) for row in entries)
        if data:
            self.cols = len(data[0])
            if any(len(r) != self.cols for r in data):
                raise ValueError("ragged rows")
            if cols is not None and cols != self.cols:
                raise ValueError("cols does not match row length")
        else:
            if cols is None:
                raise ValueError("empty matrix needs an explicit column count")
            self.cols = cols
        self.rows = len(data)
        self._data = data

    @classmethod
    def zero(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def entry(self, i, j):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
        return self._data[i][j]

    def row(self, i):
        if not 0 <= i < self.rows:
            raise IndexError(f"row {i} outside {self.rows}x{self.cols}")
        return self._data[i]

    def row_list(self):
        return self._data

    def mul_vec(self, v):
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(r[j] * v[j] for j in range(self.cols)) for r in self._data)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("inner dimensions differ")
        return MatrixQ(
            [
                [
                    sum(self._data[i][k] * other._data[k][j] for k in range(self.cols))
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ],
            cols=other.cols,
        )

    def __eq__(self, other):
        if not isinstance(other, MatrixQ):
            return NotImplemented
        return (self.rows, self.cols, self._data) == (other.rows, other.cols, other._data)

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        return f"MatrixQ({[[str(x) for x in r] for r in self._data]})"


def rref(m):
    """Reduced row echelon form of `m`.

    Pivoting is deterministic: columns are scanned left to right and the
    first row (top to bottom, at or below the current pivot row) with a
    nonzero entry is used.  Returns (rref matrix, tuple of pivot columns).
    """
    rows = [list(r) for r in m.row_list()]
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        lead = rows[r][c]
        if lead != 1:
            rows[r] = [x / lead for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return MatrixQ(rows, cols=ncols), tuple(pivots)


class EchelonAccumulator:
    """Incremental integer row-echelon form for large sparse systems.

    Rows arrive as sparse {column: coefficient} dicts (Fraction or int) and
    are scaled to coprime integers before elimination, so entry growth stays
    bounded by gcd normalization while arithmetic remains exact.  Only the
    row space matters: the accumulated echelon rows have distinct leading
    columns, which is all the nullspace extraction needs.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self._pivot_rows = {}  # leading column -> normalized sparse int row

    @property
    def rank(self):
        return len(self._pivot_rows)

    @staticmethod
    def _to_int_row(row):
        clean = {c: v for c, v in row.items() if v}
        if not clean:
            return {}
        mult = lcm(*(as_rational(v).denominator for v in clean.values())) if clean else 1
        out = {c: int(as_rational(v) * mult) for c, v in clean.items()}
        return out

    @staticmethod
    def _normalize(row):
        g = 0
        for v in row.values():
            g = gcd(g, v)
        lead = min(row)
        if row[lead] < 0:
            g = -g
        if g not in (0, 1):
            return {c: v // g for c, v in row.items()}
        return row

    def add_row(self, row):
        """Insert one sparse row; reduces it against the accumulated basis."""
        work = self._to_int_row(row)
        for c in list(work):
            if c < 0 or c >= self.ncols:
                raise IndexError(f"column {c} outside 0..{self.ncols - 1}")
        while work:
            lead = min(work)
            pivot = self._pivot_rows.get(lead)
            if pivot is None:
                self._pivot_rows[lead] = self._normalize(work)
                return True
            a, b = work[lead], pivot[lead]
            g = gcd(a, b)
            ca, cb = b // g, a // g
            nxt = {c: v * ca for c, v in work.items()}
            for c, v in pivot.items():
                w = nxt.get(c, 0) - v * cb
                if w:
                    nxt[c] = w
                else:
                    nxt.pop(c, None)
            work = nxt
        return False

    def kernel_vectors(self):
        """Dense canonical-order spanning vectors of the nullspace."""
        lead_cols = sorted(self._pivot_rows)
        pivot_set = self._pivot_rows
        free_cols = [c for c in range(self.ncols) if c not in pivot_set]
        vectors = []
        for fc in free_cols:
            x = {fc: Fraction(1)}
            for lc in reversed(lead_cols):
                row = pivot_set[lc]
                s = Fraction(0)
                for c, v in row.items():
                    if c != lc:
                        xv = x.get(c)
                        if xv:
                            s += v * xv
                if s:
                    x[lc] = -s / row[lc]
            vectors.append(tuple(x.get(c, Fraction(0)) for c in range(self.ncols)))
        return vectors

    def kernel_subspace(self):
        return Subspace.from_vectors(self.ncols, self.kernel_vectors())


def kernel_basis(m):
    """Canonical basis of {v : m v = 0} as a Subspace. Exact."""
    acc = EchelonAccumulator(m.cols)
    for r in m.row_list():
        acc.add_row({j: x for j, x in enumerate(r) if x})
    return acc.kernel_subspace()


class Subspace:
    """A linear subspace of Q^n held by its canonical RREF basis."""

    __slots__ = ("ambient_dim", "basis", "_pivots")

    def __init__(self, ambient_dim, basis, pivots):
        # internal: use from_vectors / zero / full
        self.ambient_dim = ambient_dim
        self.basis = basis
        self._pivots = pivots

    @classmethod
    def from_vectors(cls, ambient_dim, vectors):
        vecs = [tuple(as_rational(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        if not vecs:
            return cls(ambient_dim, (), ())
        reduced, pivots = rref(MatrixQ(vecs, cols=ambient_dim))
        basis = tuple(reduced.row(i) for i in range(len(pivots)))
        return cls(ambient_dim, basis, pivots)

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim):
        ident = MatrixQ.identity(ambient_dim)
        return cls(ambient_dim, ident.row_list(), tuple(range(ambient_dim)))

    @property
    def dim(self):
        return len(self.basis)

    def is_zero(self):
        return not self.basis

    def reduce_vector(self, v):
        """Remainder of v after elimination against the basis."""
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        w = [as_rational(x) for x in v]
        for row, p in zip(self.basis, self._pivots):
            f = w[p]
            if f:
                for j in range(p, self.ambient_dim):
                    w[j] -= f * row[j]
        return tuple(w)

    def contains_vector(self, v):
        return all(x == 0 for x in self.reduce_vector(v))

    def coordinates_of(self, v):
        """Coefficients of v in the stored basis, or None if v is outside."""
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        coeffs = tuple(as_rational(v[p]) for p in self._pivots)
        residual = list(as_rational(x) for x in v)
        for cf, row in zip(coeffs, self.basis):
            if cf:
                for j in range(self.ambient_dim):
                    residual[j] -= cf * row[j]
        if any(residual):
            return None
        return coeffs

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


def subspace_contains(outer, inner):
    """True iff every basis vector of `inner` lies in `outer`."""
    if outer.ambient_dim != inner.ambient_dim:
        raise ValueError("ambient dimensions differ")
    return all(outer.contains_vector(v) for v in inner.basis)


def subspace_equal(s1, s2):
    """True iff the canonical bases coincide (same subspace)."""
    if s1.ambient_dim != s2.ambient_dim:
        raise ValueError("ambient dimensions differ")
    return s1.basis == s2.basis
