"""Builders and closed forms for the two square Pascal matrices.

The left-justified matrix L_n has entry (i, j) equal to C(i-1, j-1);
the column-justified matrix R_n has entry (i, j) equal to C(i-1, n-j)
and is L_n with its columns reversed. Both are unimodular, so their
inverses are integer matrices with simple signed-binomial closed forms,
and every integer power of L_n has the closed form e**(i-j) * C(i-1, j-1).

The 0**0 == 1 convention is used throughout (Python's ** already does
this), which makes exponent 0 and diagonal entries uniform.
"""

from __future__ import annotations

import threading

from .core import ExactMatrix


class BinomialCache:
    """Triangular table of binomial coefficients, grown row by row.

    Queries outside the triangle (b < 0 or b > a) return 0; the matrix
    identities verified elsewhere lean on those vanishing boundary
    terms. Growth happens under a lock and appends only fully built
    rows, so concurrent readers never observe a partial row.
    """

    def __init__(self) -> None:
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def get(self, a: int, b: int) -> int:
        if a < 0:
            raise ValueError("binomial row index must be nonnegative")
        if b < 0 or b > a:
            return 0
        if a >= len(self._rows):
            self._grow(a)
        return self._rows[a][b]

    def _grow(self, a: int) -> None:
        with self._lock:
            rows = self._rows
            while len(rows) <= a:
                prev = rows[-1]
                rows.append((1, *(prev[k - 1] + prev[k]
                                  for k in range(1, len(prev))), 1))


_CACHE = BinomialCache()


def binomial(a: int, b: int) -> int:
    """Exact C(a, b); zero for b outside [0, a]."""
    return _CACHE.get(a, b)


def build_left(n: int) -> ExactMatrix:
    """The n x n left-justified Pascal matrix, entry (i, j) = C(i-1, j-1)."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    return ExactMatrix.from_fn(n, lambda i, j: binomial(i - 1, j - 1))


def build_right(n: int) -> ExactMatrix:
    """The n x n column-justified Pascal matrix, entry (i, j) = C(i-1, n-j)."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    right = ExactMatrix.from_fn(n, lambda i, j: binomial(i - 1, n - j))
    # Debug-mode identity: R_n is L_n with columns reversed.
    assert right.rows == tuple(tuple(reversed(row)) for row in build_left(n).rows)
    return right


def left_power_entry(e: int, i: int, j: int) -> int:
    """Entry (i, j) of the e-th power of the left Pascal matrix.

    Closed form e**(i-j) * C(i-1, j-1), valid for any integer e under
    the 0**0 == 1 convention; zero above the diagonal.
    """
    if i < 1 or j < 1:
        raise ValueError("indices are 1-based")
    if j > i:
        return 0
    return e ** (i - j) * binomial(i - 1, j - 1)


def left_inverse(n: int) -> ExactMatrix:
    """Closed-form inverse of the left matrix: (-1)**(i+j) * C(i-1, j-1)."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    return ExactMatrix.from_fn(
        n, lambda i, j: (-1) ** (i + j) * binomial(i - 1, j - 1))


def right_inverse(n: int) -> ExactMatrix:
    """Closed-form inverse of the right matrix: (-1)**(n+i+j+1) * C(n-i, j-1)."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    return ExactMatrix.from_fn(
        n, lambda i, j: (-1) ** (n + i + j + 1) * binomial(n - i, j - 1))
