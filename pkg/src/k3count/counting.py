"""Generating functions for chain configurations and the N_g series.

``G_n(q, z) = (1 + z) * prod_{k=1..n} (1 + q^k z)(1 + q^k / z)`` is stored as
a :class:`LaurentBundle`: one truncated q-series per power of z. Its
z-constant term counts chain-length configurations, and as n grows it
stabilises to the partition generating function. The rational-curve counts
N_g are the coefficients of ``prod (1 - q^n)^-24``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping

from . import qseries as qs
from .qseries import QSeries

__all__ = [
    "LaurentBundle",
    "expand_G",
    "check_functional_equation",
    "recursion_C0",
    "closed_form_C0",
    "partition_series",
    "dual_counting_series",
    "verify_durfee_identity",
    "stabilization_degree",
    "ng_series",
    "ng_via_convolution",
    "ng_fast",
    "ng_via_jacobi",
]


@dataclass(frozen=True)
class LaurentBundle:
    """Coefficients ``C_{d,n}`` of ``G_n`` for z-degrees ``-n..n+1``."""

    n: int
    order: int
    coeffs: Mapping[int, QSeries] = field(repr=False)

    def __getitem__(self, d: int) -> QSeries:
        got = self.coeffs.get(d)
        return got if got is not None else qs.make([], self.order)

    def degrees(self) -> range:
        return range(-self.n, self.n + 2)

    def with_coefficient(self, d: int, series: QSeries) -> LaurentBundle:
        coeffs = dict(self.coeffs)
        coeffs[d] = series
        return replace(self, coeffs=coeffs)

    def lowest_degree_ok(self) -> bool:
        """Each ``C_{d,n}`` vanishes below the smallest exponent it can reach."""
        for d in self.degrees():
            floor = d * (d - 1) // 2 if d > 0 else -d * (-d + 1) // 2
            if self[d].valuation() < min(floor, self.order + 1):
                return False
        return True


def expand_G(n: int, order: int) -> LaurentBundle:
    """Expand ``G_n`` factor by factor: ``(1 + z)``, then each pair for k = 1..n."""
    if n < 0 or order < 0:
        raise ValueError("n and order must be nonnegative")
    width = order + 1
    zero = [0] * width
    cols: dict[int, list[int]] = {0: [1] + [0] * order, 1: [1] + [0] * order}
    for k in range(1, n + 1):
        if k > order:
            # q^k z^{+-1} falls outside the retained degrees
            break
        # times (1 + q^k z)
        nxt: dict[int, list[int]] = {}
        for d in range(min(cols), max(cols) + 2):
            base = cols.get(d, zero)
            lower = cols.get(d - 1, zero)
            nxt[d] = [base[g] + (lower[g - k] if g >= k else 0) for g in range(width)]
        cols = nxt
        # times (1 + q^k / z)
        nxt = {}
        for d in range(min(cols) - 1, max(cols) + 1):
            base = cols.get(d, zero)
            upper = cols.get(d + 1, zero)
            nxt[d] = [base[g] + (upper[g - k] if g >= k else 0) for g in range(width)]
        cols = nxt
    coeffs = {
        d: QSeries(order, tuple(cols.get(d, zero))) for d in range(-n, n + 2)
    }
    return LaurentBundle(n, order, coeffs)


def check_functional_equation(g: LaurentBundle) -> bool:
    """Check ``(z + q^n) G(q, qz) = (1 + q^(n+1) z) G(q, z)`` coefficientwise.

    For each z-degree d this is
    ``q^(d-1) C_{d-1} + q^(n+d) C_d = C_d + q^(n+1) C_{d-1}``; both sides are
    multiplied by ``q^max(0, 1-d)`` so that only nonnegative shifts occur and
    truncation stays exact.
    """
    n = g.n
    for d in range(-n - 1, n + 3):
        t = max(0, 1 - d)
        prev, cur = g[d - 1], g[d]
        lhs = qs.shift(prev, d - 1 + t) + qs.shift(cur, n + d + t)
        rhs = qs.shift(cur, t) + qs.shift(prev, n + 1 + t)
        if lhs != rhs:
            return False
    return True


def _one_minus_q(j: int, order: int) -> QSeries:
    return qs.one(order) - qs.monomial(j, order)


def recursion_C0(n: int, order: int) -> QSeries:
    """``C_{0,n}`` by stepping ``C_{d-1} = (1-q^(n+d)) / (q^(d-1) (1-q^(n-d+2))) C_d``
    down from ``C_{n+1,n} = q^(n(n+1)/2)``.

    Each exact division by ``q^(d-1)`` loses ``d-1`` degrees of precision at the
    top, so the walk starts ``n(n+1)/2`` degrees above ``order``.
    """
    if n < 0 or order < 0:
        raise ValueError("n and order must be nonnegative")
    work = order + n * (n + 1) // 2
    c = qs.monomial(n * (n + 1) // 2, work)
    for d in range(n + 1, 0, -1):
        c = c * _one_minus_q(n + d, work) * qs.inverse(_one_minus_q(n - d + 2, work))
        c = qs.shift(c, -(d - 1))
        work -= d - 1
        c = c.truncate(work)
    return c


def closed_form_C0(n: int, order: int) -> QSeries:
    """``prod_{j=n+2}^{2n+1} (1-q^j) / prod_{j=1}^{n} (1-q^j)``."""
    num = qs.one(order)
    for j in range(n + 2, 2 * n + 2):
        num = num * _one_minus_q(j, order)
    den = qs.one(order)
    for j in range(1, n + 1):
        den = den * _one_minus_q(j, order)
    return num * qs.inverse(den)


def partition_series(order: int) -> QSeries:
    return qs.euler_product(-1, order)


def dual_counting_series(order: int, omit: frozenset[int] = frozenset()) -> QSeries:
    """``sum_k q^(k^2) / ((1-q)^2 (1-q^2)^2 ... (1-q^k)^2)``.

    ``omit`` drops the listed k-terms; it exists so that callers can confirm
    a broken sum is detected.
    """
    total = qs.make([], order)
    den = qs.one(order)
    k = 0
    while k * k <= order:
        if k:
            f = _one_minus_q(k, order)
            den = den * f * f
        if k not in omit:
            total = total + qs.shift(qs.inverse(den), k * k)
        k += 1
    return total


def verify_durfee_identity(order: int, dual: QSeries | None = None) -> bool:
    """Compare the dual-counting sum with the partition series up to ``order``."""
    if dual is None:
        dual = dual_counting_series(order)
    return dual.truncate(order) == partition_series(order) and dual.order >= order


def stabilization_degree(n: int, order: int) -> int | None:
    """First degree at which ``C_{0,n}`` differs from the partition series."""
    c0 = closed_form_C0(n, order)
    p = partition_series(order)
    for g in range(order + 1):
        if c0[g] != p[g]:
            return g
    return None


def ng_series(order: int) -> QSeries:
    """``sum N_g q^g = prod (1-q^n)^-24``, factor by factor."""
    return qs.euler_product(-24, order)


def ng_via_convolution(order: int) -> QSeries:
    """24-fold self-convolution of the partition numbers."""
    return qs.power(partition_series(order), 24)


def ng_fast(order: int) -> QSeries:
    """N_g table from the sparse pentagonal expansion of ``prod (1-q^n)``."""
    return qs.sparse_power(qs.pentagonal_series(order), -24)


def ng_via_jacobi(order: int) -> QSeries:
    """N_g table as the -8th power of ``prod (1-q^n)^3`` (also sparse)."""
    return qs.sparse_power(qs.jacobi_cube_series(order), -8)


