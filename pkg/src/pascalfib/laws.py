"""Exact cell-by-cell verifiers for the recurrences and closed forms
satisfied by powers of the column-justified Pascal matrix.

Every verifier recomputes its power matrix from scratch with
core.mat_pow and compares the law's prediction against it, so the law
under test shares no code with its oracle beyond plain matrix
multiplication. All comparisons are integer equalities; reports carry
every failing cell as an (i, j, lhs, rhs) witness.

Index ranges: the square and cube recurrences come with stated ranges.
The row-expansion and row-propagation laws do not, so their ranges were
discovered by scanning the full grid 1 <= i <= n-1, 1 <= j <= n for
n <= 8 (and exponents 2..10); no cell fails anywhere on that grid, and
boundary columns are covered by the empty-sum convention at j = 1, so
the verifiers below pin the full grid.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ExactMatrix, mat_pow
from .fib import fib
from .pascal import binomial, build_right


@dataclass(frozen=True)
class CellLawReport:
    """Outcome of checking one law over its declared index range."""

    law_id: str
    n: int
    e: int | None
    checked_cells: int
    failures: tuple[tuple[int, int, int, int], ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def _right_power(n: int, e: int) -> ExactMatrix:
    return mat_pow(build_right(n), e)


def verify_square_recurrence(n: int) -> CellLawReport:
    """Check b[i][j+1] = b[i-1][j+1] + 2 b[i-1][j] - b[i][j] on R_n**2.

    Range: 2 <= i <= n, 1 <= j <= n-1. Failing cells are recorded at
    the predicted position (i, j+1).
    """
    if n < 2:
        raise ValueError("recurrence range is empty for n < 2")
    b = _right_power(n, 2)
    checked = 0
    failures = []
    for i in range(2, n + 1):
        for j in range(1, n):
            lhs = b.entry(i, j + 1)
            rhs = b.entry(i - 1, j + 1) + 2 * b.entry(i - 1, j) - b.entry(i, j)
            checked += 1
            if lhs != rhs:
                failures.append((i, j + 1, lhs, rhs))
    return CellLawReport("square-recurrence", n, 2, checked, tuple(failures))


def verify_cube_recurrence(n: int) -> CellLawReport:
    """Check c[i+1][j] = 2 c[i][j] + 3 c[i][j-1] - 2 c[i+1][j-1] on R_n**3.

    Range: 1 <= i <= n-1, 2 <= j <= n. Failing cells are recorded at
    the predicted position (i+1, j).
    """
    if n < 2:
        raise ValueError("recurrence range is empty for n < 2")
    c = _right_power(n, 3)
    checked = 0
    failures = []
    for i in range(1, n):
        for j in range(2, n + 1):
            lhs = c.entry(i + 1, j)
            rhs = 2 * c.entry(i, j) + 3 * c.entry(i, j - 1) - 2 * c.entry(i + 1, j - 1)
            checked += 1
            if lhs != rhs:
                failures.append((i + 1, j, lhs, rhs))
    return CellLawReport("cube-recurrence", n, 3, checked, tuple(failures))


def verify_fib_recurrence(n: int, e: int) -> CellLawReport:
    """Check the Fibonacci-coefficient recurrence on R_n**e over the integers:

        F_{e-1} a[i][j] = F_e a[i-1][j] + F_{e+1} a[i-1][j-1] - F_e a[i][j-1]

    for 2 <= i, j <= n. At e = 1 this degenerates to the Pascal
    recurrence itself (F_0 = 0, F_1 = F_2 = 1).
    """
    if n < 2:
        raise ValueError("recurrence range is empty for n < 2")
    if e < 1:
        raise ValueError("exponent must be positive")
    a = _right_power(n, e)
    f_prev, f_cur, f_next = fib(e - 1), fib(e), fib(e + 1)
    checked = 0
    failures = []
    for i in range(2, n + 1):
        for j in range(2, n + 1):
            lhs = f_prev * a.entry(i, j)
            rhs = (f_cur * a.entry(i - 1, j)
                   + f_next * a.entry(i - 1, j - 1)
                   - f_cur * a.entry(i, j - 1))
            checked += 1
            if lhs != rhs:
                failures.append((i, j, lhs, rhs))
    return CellLawReport("fib-recurrence", n, e, checked, tuple(failures))


def verify_border_formulas(n: int, e: int) -> CellLawReport:
    """Check the closed forms for the first row and column of R_n**e:

        a[1][j] = C(n-1, j-1) * F_{e-1}**(n-j) * F_e**(j-1)
        a[i][1] = F_{e-1}**(n-i) * F_e**(i-1)

    under the 0**0 == 1 convention. checked_cells counts 2n (both
    formulas over their full 1..n ranges; they agree at the corner).
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    if e < 1:
        raise ValueError("exponent must be positive")
    a = _right_power(n, e)
    f_prev, f_cur = fib(e - 1), fib(e)
    checked = 0
    failures = []
    for j in range(1, n + 1):
        lhs = a.entry(1, j)
        rhs = binomial(n - 1, j - 1) * f_prev ** (n - j) * f_cur ** (j - 1)
        checked += 1
        if lhs != rhs:
            failures.append((1, j, lhs, rhs))
    for i in range(1, n + 1):
        lhs = a.entry(i, 1)
        rhs = f_prev ** (n - i) * f_cur ** (i - 1)
        checked += 1
        if lhs != rhs:
            failures.append((i, 1, lhs, rhs))
    return CellLawReport("border-formulas", n, e, checked, tuple(failures))


def verify_row_expansion_23(n: int) -> CellLawReport:
    """Check the previous-row expansions of R_n**2 and R_n**3:

        b[i+1][j] = b[i][j] - sum_{k=1}^{j-1} (-1)**k b[i][j-k]
        c[i+1][j] = 2 c[i][j] + sum_{k=1}^{j-1} (-1)**k 2**(k-1) c[i][j-k]

    over the full grid 1 <= i <= n-1, 1 <= j <= n (empirically
    failure-free; j = 1 is the empty-sum base case). Failing cells are
    recorded at the predicted position (i+1, j).
    """
    if n < 2:
        raise ValueError("expansion range is empty for n < 2")
    b = _right_power(n, 2)
    c = _right_power(n, 3)
    checked = 0
    failures = []
    for i in range(1, n):
        for j in range(1, n + 1):
            lhs = b.entry(i + 1, j)
            rhs = b.entry(i, j) - sum((-1) ** k * b.entry(i, j - k)
                                      for k in range(1, j))
            checked += 1
            if lhs != rhs:
                failures.append((i + 1, j, lhs, rhs))
            lhs = c.entry(i + 1, j)
            rhs = 2 * c.entry(i, j) + sum((-1) ** k * 2 ** (k - 1) * c.entry(i, j - k)
                                          for k in range(1, j))
            checked += 1
            if lhs != rhs:
                failures.append((i + 1, j, lhs, rhs))
    return CellLawReport("row-expansion-23", n, None, checked, tuple(failures))


def verify_row_propagation(n: int, e: int) -> CellLawReport:
    """Check the general previous-row expansion of R_n**e, cleared of
    denominators (multiply through by F_{e-1}**(j-1)):

        F_{e-1}**j a[i+1][j] = F_e F_{e-1}**(j-1) a[i][j]
            - sum_{k=1}^{j-1} (-1)**(k+e) F_e**(k-1) F_{e-1}**(j-1-k) a[i][j-k]

    over the full grid 1 <= i <= n-1, 1 <= j <= n (empirically
    failure-free). Undefined at e = 1, where F_0 = 0 makes the original
    fraction singular.
    """
    if n < 2:
        raise ValueError("expansion range is empty for n < 2")
    if e < 2:
        raise ValueError("undefined at e = 1 (F_0 = 0 divides in the original form)")
    a = _right_power(n, e)
    f_prev, f_cur = fib(e - 1), fib(e)
    checked = 0
    failures = []
    for i in range(1, n):
        for j in range(1, n + 1):
            lhs = f_prev ** j * a.entry(i + 1, j)
            rhs = f_cur * f_prev ** (j - 1) * a.entry(i, j) - sum(
                (-1) ** (k + e) * f_cur ** (k - 1) * f_prev ** (j - 1 - k)
                * a.entry(i, j - k)
                for k in range(1, j))
            checked += 1
            if lhs != rhs:
                failures.append((i + 1, j, lhs, rhs))
    return CellLawReport("row-propagation", n, e, checked, tuple(failures))


def recurrence_coefficients(e: int) -> tuple[int, int, int, int]:
    """The (delta, alpha, beta, gamma) coefficient tuple of the power-e
    cell relation, generated by the bootstrap system

        delta_e = alpha_{e-1},  alpha_e = alpha_{e-1} + delta_{e-1},
        beta_e = beta_{e-1} - gamma_{e-1},  gamma_e = -beta_{e-1}

    seeded at (0, 1, 1, -1). Closed form: (F_{e-1}, F_e, F_{e+1}, -F_e).
    """
    if e < 1:
        raise ValueError("exponent must be positive")
    delta, alpha, beta, gamma = 0, 1, 1, -1
    for _ in range(e - 1):
        delta, alpha, beta, gamma = alpha, alpha + delta, beta - gamma, -beta
    return delta, alpha, beta, gamma
