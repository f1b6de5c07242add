"""Exact verification of the observed eigenvalue pattern of the
column-justified Pascal matrix.

Empirically, the eigenvalues of R_n are signed odd powers of the golden
ratio phi and its conjugate: for n = 2k the pairs
{(-1)**(k+i) phi**(2i-1), (-1)**(k+i) phibar**(2i-1)} for i = 1..k, and
for n = 2k+1 additionally the lone eigenvalue (-1)**k with even powers
2i in the pairs. No floating point is needed to test this: since
phi * phibar = -1 and phi**m + phibar**m = L_m (the Lucas numbers),
each conjugate pair is exactly the root set of the integer quadratic

    x**2 - (+-L_m) x + (-1)**m,

so the conjectured spectrum determines a monic integer polynomial that
must equal the characteristic polynomial coefficient for coefficient.
That makes the check a theorem-grade integer identity, not a numeric
approximation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import IntPolynomial, charpoly
from .fib import lucas
from .pascal import build_right
from .report import FAIL, PASS


@dataclass(frozen=True)
class ConjectureReport:
    n: int
    parity: str
    computed_charpoly: IntPolynomial
    conjectured_charpoly: IntPolynomial
    verdict: str
    first_mismatch_degree: int | None

    @property
    def passed(self) -> bool:
        return self.verdict == PASS


def conjectured_charpoly(n: int) -> IntPolynomial:
    """Product of the integer quadratics induced by the conjectured
    eigenvalue pairs (plus the linear factor x - (-1)**k for odd n)."""
    if n < 1:
        raise ValueError("dimension must be at least 1")
    k, odd = divmod(n, 2)
    if odd:
        poly = IntPolynomial((-((-1) ** k), 1))
        middle = lambda i: (-1) ** (k + i) * lucas(2 * i)
        pair_product = 1
    else:
        poly = IntPolynomial.one()
        middle = lambda i: (-1) ** (k + i) * lucas(2 * i - 1)
        pair_product = -1
    for i in range(1, k + 1):
        poly = poly * IntPolynomial((pair_product, -middle(i), 1))
    return poly


def check_eigen_conjecture(n: int) -> ConjectureReport:
    """Compare charpoly(R_n) with the conjectured polynomial, exactly.

    A mismatch would be a counterexample to the conjecture and is
    reported with the lowest differing coefficient degree, never
    silenced.
    """
    computed = charpoly(build_right(n))
    conjectured = conjectured_charpoly(n)
    if computed == conjectured:
        return ConjectureReport(n, "even" if n % 2 == 0 else "odd",
                                computed, conjectured, PASS, None)
    width = max(len(computed.coeffs), len(conjectured.coeffs))
    mismatch = next(d for d in range(width)
                    if (computed.coeffs[d] if d < len(computed.coeffs) else 0)
                    != (conjectured.coeffs[d] if d < len(conjectured.coeffs) else 0))
    return ConjectureReport(n, "even" if n % 2 == 0 else "odd",
                            computed, conjectured, FAIL, mismatch)
