"""Exact linear algebra over the rationals, sized for relation matrices.

Three rank engines with different cost profiles:

* ``SparseRREF`` -- incremental reduced row echelon form over ``Fraction``
  with sparse rows and a configurable column priority for pivot choice.
  Rows are inserted one at a time; each insertion reduces the row against
  the current pivots and, if independent, back-substitutes so the basis
  stays fully reduced.  For relation matrices the reduced rows are
  supported on the pivot column plus the few free columns, which keeps the
  whole computation cheap even at a thousand columns.
* ``bareiss_rank`` / ``bareiss_det`` -- dense one-step fraction-free
  elimination over unbounded integers (denominators cleared per row).
  Exact, but intermediate entries are minors of the input, so this is for
  small dense problems and for cross-checking the sparse path.
* ``modular_rank`` -- elimination over GF(p) in vectorized numpy.  The
  modular rank never exceeds the rational rank, so it serves as a fast
  pre-pass and consistency check; reported results always come from the
  exact engines.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

# A Mersenne prime; pairwise products of reduced residues stay below 2^62,
# so GF(p) elimination runs in plain int64 without overflow.
DEFAULT_PRIME = 2147483647


class SparseRREF:
    """Incremental reduced row echelon form with sparse rational rows.

    ``priority`` maps a column index to its pivot preference (lower is
    chosen first); by default the column index itself.  Columns that never
    get a pivot are the free columns of the accumulated row space.
    """

    def __init__(self, priority=None):
        self.priority = priority if priority is not None else (lambda c: c)
        self.pivot_rows = {}   # pivot column -> {column: Fraction}, pivot entry == 1
        self._touch = {}       # non-pivot column -> set of pivot columns whose rows hit it

    @property
    def rank(self):
        return len(self.pivot_rows)

    def pivot_columns(self):
        return sorted(self.pivot_rows)

    def free_columns(self, n_columns):
        return [c for c in range(n_columns) if c not in self.pivot_rows]

    def reduce(self, row):
        """Return the residue of ``row`` modulo the current row space.

        ``row`` is a {column: coefficient} map; the input is not mutated.
        """
        out = {c: Fraction(v) for c, v in row.items() if v}
        # one pass suffices: pivot rows only touch non-pivot columns
        for c in [c for c in out if c in self.pivot_rows]:
            coef = out.pop(c)
            for cc, v in self.pivot_rows[c].items():
                if cc == c:
                    continue
                s = out.get(cc, Fraction(0)) - coef * v
                if s:
                    out[cc] = s
                elif cc in out:
                    del out[cc]
        return out

    def insert(self, row):
        """Add a row to the row space.

        Returns the new pivot column, or None if the row was dependent.
        """
        out = self.reduce(row)
        if not out:
            return None
        p = min(out, key=self.priority)
        pv = out[p]
        new_row = {c: v / pv for c, v in out.items()}
        for q in list(self._touch.get(p, ())):
            target = self.pivot_rows[q]
            coef = target.pop(p)
            for cc, v in new_row.items():
                if cc == p:
                    continue
                s = target.get(cc, Fraction(0)) - coef * v
                if s:
                    target[cc] = s
                    self._touch.setdefault(cc, set()).add(q)
                else:
                    if cc in target:
                        del target[cc]
                    self._touch.get(cc, set()).discard(q)
        self._touch.pop(p, None)
        self.pivot_rows[p] = new_row
        for cc in new_row:
            if cc != p:
                self._touch.setdefault(cc, set()).add(p)
        return p

    def insert_all(self, rows):
        for row in rows:
            self.insert(row)
        return self.rank


def _clear_row(row):
    den = 1
    for v in row:
        if isinstance(v, Fraction):
            den = den * v.denominator // gcd(den, v.denominator)
    return [int(v * den) for v in row]


def bareiss_rank(rows):
    """Rank of a matrix (list of equal-length rows of ints or Fractions),
    by one-step fraction-free elimination after clearing denominators."""
    m = [_clear_row(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        for i in range(rank + 1, len(m)):
            ri = m[i]
            if ri[col]:
                f = ri[col]
                for j in range(col + 1, ncols):
                    ri[j] = (pr[col] * ri[j] - f * pr[j]) // prev
                ri[col] = 0
            else:
                for j in range(col + 1, ncols):
                    ri[j] = (pr[col] * ri[j]) // prev
        prev = pr[col]
        rank += 1
        if rank == len(m):
            break
    return rank


def bareiss_det(rows):
    """Determinant of a square integer matrix, fraction-free."""
    m = [list(map(int, r)) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    if any(len(r) != n for r in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not m[k][k]:
            piv = next((i for i in range(k + 1, n) if m[i][k]), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def modular_rank(rows, n_columns, p=DEFAULT_PRIME):
    """Rank over GF(p) of sparse rows ({column: rational} maps).

    Always a lower bound for the rational rank; rows whose denominators
    vanish mod p are rejected.
    """
    mat = np.zeros((len(rows), n_columns), dtype=np.int64)
    for i, row in enumerate(rows):
        for c, v in row.items():
            f = Fraction(v)
            if f.denominator % p == 0:
                raise ValueError("denominator divisible by the modulus")
            mat[i, c] = f.numerator * pow(f.denominator, -1, p) % p
    rank = 0
    nrows = len(rows)
    for col in range(n_columns):
        if rank == nrows:
            break
        nz = np.nonzero(mat[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            mat[[rank, piv]] = mat[[piv, rank]]
        inv = pow(int(mat[rank, col]), -1, p)
        mat[rank] = mat[rank] * inv % p
        below = mat[rank + 1:, col]
        hit = np.nonzero(below)[0]
        if hit.size:
            idx = rank + 1 + hit
            mat[idx] = (mat[idx] - below[hit, None] * mat[rank][None, :]) % p
        rank += 1
    return rank
