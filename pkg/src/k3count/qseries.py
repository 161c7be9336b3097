"""Truncated formal power series in q with exact integer coefficients.

A :class:`QSeries` keeps degrees ``0..order`` inclusive. Binary operations
truncate to the smaller of the two orders, so every result is exact up to
the order it reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "QSeries",
    "NonUnitConstantTerm",
    "InexactPowerDivision",
    "OrderExceeded",
    "make",
    "one",
    "monomial",
    "add",
    "sub",
    "mul",
    "inverse",
    "power",
    "shift",
    "coefficient",
    "euler_product",
    "pentagonal_series",
    "jacobi_cube_series",
    "sparse_power",
]


class NonUnitConstantTerm(ValueError):
    """Raised when a series must be inverted but its constant term is not +1 or -1."""


class InexactPowerDivision(ValueError):
    """Raised when dividing by q**s and a low coefficient is nonzero."""


class OrderExceeded(IndexError):
    """Raised when asking for a coefficient above the truncation order."""


@dataclass(frozen=True, eq=False)
class QSeries:
    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    # equality truncates to the smaller order, so it is not transitive and
    # the type is deliberately unhashable
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order) + 1
        return self.coeffs[:n] == other.coeffs[:n]

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"QSeries(order={self.order}, coeffs={list(self.coeffs)})"

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, g: int) -> int:
        return coefficient(self, g)

    def __add__(self, other: QSeries | int) -> QSeries:
        return add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __sub__(self, other: QSeries | int) -> QSeries:
        return sub(self, _coerce(other, self.order))

    def __rsub__(self, other: int) -> QSeries:
        return sub(_coerce(other, self.order), self)

    def __neg__(self) -> QSeries:
        return QSeries(self.order, tuple(-c for c in self.coeffs))

    def __mul__(self, other: QSeries | int) -> QSeries:
        if isinstance(other, int):
            return QSeries(self.order, tuple(other * c for c in self.coeffs))
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> QSeries:
        return power(self, e)

    def truncate(self, order: int) -> QSeries:
        """Drop every coefficient above ``order`` (no-op if already lower)."""
        if order >= self.order:
            return self
        return QSeries(order, self.coeffs[: order + 1])

    def valuation(self) -> int:
        """Lowest degree with a nonzero coefficient; ``order + 1`` for zero."""
        for g, c in enumerate(self.coeffs):
            if c:
                return g
        return self.order + 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def _coerce(x: QSeries | int, order: int) -> QSeries:
    if isinstance(x, QSeries):
        return x
    if isinstance(x, int):
        return make([x], order)
    raise TypeError(f"cannot combine QSeries with {type(x).__name__}")


def make(coeffs: Iterable[int], order: int) -> QSeries:
    """Build a series of the given order, zero-filling or truncating ``coeffs``."""
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    out = [0] * (order + 1)
    for g, c in enumerate(coeffs):
        if g > order:
            break
        out[g] = int(c)
    return QSeries(order, tuple(out))


def one(order: int) -> QSeries:
    return make([1], order)


def monomial(degree: int, order: int, c: int = 1) -> QSeries:
    """``c * q**degree``; zero if the degree lies above ``order``."""
    out = [0] * (order + 1)
    if 0 <= degree <= order:
        out[degree] = c
    return QSeries(order, tuple(out))


def add(a: QSeries, b: QSeries) -> QSeries:
    n = min(a.order, b.order)
    return QSeries(n, tuple(x + y for x, y in zip(a.coeffs[: n + 1], b.coeffs)))


def sub(a: QSeries, b: QSeries) -> QSeries:
    n = min(a.order, b.order)
    return QSeries(n, tuple(x - y for x, y in zip(a.coeffs[: n + 1], b.coeffs)))


# Above this many nonzero terms on both sides, Kronecker substitution through
# CPython's big-int multiply beats the pure-Python double loop.
_KRONECKER_THRESHOLD = 48


def mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product truncated at ``min(a.order, b.order)``."""
    n = min(a.order, b.order)
    x = a.coeffs[: n + 1]
    y = b.coeffs[: n + 1]
    nx = sum(1 for c in x if c)
    ny = sum(1 for c in y if c)
    if nx == 0 or ny == 0:
        return QSeries(n, (0,) * (n + 1))
    if min(nx, ny) > _KRONECKER_THRESHOLD:
        return QSeries(n, tuple(_kronecker_mul(x, y, n)))
    return QSeries(n, tuple(_schoolbook_mul(x, y, n)))


def _schoolbook_mul(x: Sequence[int], y: Sequence[int], n: int) -> list[int]:
    if sum(1 for c in x if c) > sum(1 for c in y if c):
        x, y = y, x
    out = [0] * (n + 1)
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j in range(n + 1 - i):
            yj = y[j]
            if yj:
                out[i + j] += xi * yj
    return out


def _kronecker_mul(x: Sequence[int], y: Sequence[int], n: int) -> list[int]:
    # Evaluate both polynomials at 2**width, multiply once, read the digits
    # back. width leaves a sign bit of headroom over the largest possible
    # product coefficient.
    bound = max(abs(c) for c in x).bit_length() + max(abs(c) for c in y).bit_length()
    bound += (n + 1).bit_length() + 2
    nbytes = (bound + 7) // 8
    width = 8 * nbytes

    def pack(v: Sequence[int]) -> int:
        pos = b"".join((c if c > 0 else 0).to_bytes(nbytes, "little") for c in v)
        neg = b"".join((-c if c < 0 else 0).to_bytes(nbytes, "little") for c in v)
        return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")

    prod = pack(x) * pack(y)
    digits = 2 * n + 1
    half = 1 << (width - 1)
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * digits, "little")
    raw = (prod + offset).to_bytes(nbytes * digits, "little")
    return [
        int.from_bytes(raw[i * nbytes : (i + 1) * nbytes], "little") - half
        for i in range(n + 1)
    ]


def inverse(a: QSeries) -> QSeries:
    """Multiplicative inverse; the constant term must be a unit of Z."""
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {c0} is not invertible over Z")
    n = a.order
    support = [(k, c) for k, c in enumerate(a.coeffs) if k and c]
    b = [0] * (n + 1)
    b[0] = c0
    for g in range(1, n + 1):
        s = 0
        for k, c in support:
            if k > g:
                break
            s += c * b[g - k]
        b[g] = -c0 * s
    return QSeries(n, tuple(b))


def power(a: QSeries, e: int) -> QSeries:
    """``a**e`` by square-and-multiply; negative ``e`` inverts first."""
    if e < 0:
        a = inverse(a)
        e = -e
    result = one(a.order)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def shift(a: QSeries, s: int) -> QSeries:
    """Multiply by ``q**s``; for ``s < 0`` divide exactly, zero-filling the top."""
    n = a.order
    if s >= 0:
        return make((0,) * s + a.coeffs, n)
    k = -s
    if any(a.coeffs[: k]):
        g = next(i for i, c in enumerate(a.coeffs[:k]) if c)
        raise InexactPowerDivision(
            f"cannot divide by q^{k}: coefficient of q^{g} is {a.coeffs[g]}"
        )
    return make(a.coeffs[k:], n)


def coefficient(a: QSeries, g: int) -> int:
    if g < 0:
        raise ValueError(f"degree must be nonnegative, got {g}")
    if g > a.order:
        raise OrderExceeded(f"degree {g} exceeds truncation order {a.order}")
    return a.coeffs[g]


def _binomial_factor(n: int, exponent: int, order: int) -> list[int]:
    # (1 - q^n)^exponent = sum_j binom(exponent, j) (-1)^j q^(n j), with the
    # generalized binomial coefficient for negative exponents
    out = [0] * (order + 1)
    c = 1
    j = 0
    while n * j <= order:
        out[n * j] = c if j % 2 == 0 else -c
        c = c * (exponent - j) // (j + 1)
        j += 1
        if c == 0:
            break
    return out


def euler_product(exponent: int, order: int) -> QSeries:
    """``prod_{n>=1} (1 - q^n)**exponent`` truncated at ``order``.

    Each factor is expanded by the binomial theorem and multiplied in
    separately, so this path never calls :func:`power`.
    """
    acc = [0] * (order + 1)
    acc[0] = 1
    for n in range(1, order + 1):
        factor = _binomial_factor(n, exponent, order)
        terms = [(k, c) for k, c in enumerate(factor) if c]
        new = [0] * (order + 1)
        for g in range(order + 1):
            s = 0
            for k, c in terms:
                if k > g:
                    break
                s += c * acc[g - k]
            new[g] = s
        acc = new
    return QSeries(order, tuple(acc))


def pentagonal_series(order: int) -> QSeries:
    """``sum_k (-1)^k q^(k(3k-1)/2)`` over all integers k, i.e. (q;q)_inf."""
    out = [0] * (order + 1)
    out[0] = 1
    k = 1
    while k * (3 * k - 1) // 2 <= order:
        sign = -1 if k % 2 else 1
        out[k * (3 * k - 1) // 2] += sign
        if k * (3 * k + 1) // 2 <= order:
            out[k * (3 * k + 1) // 2] += sign
        k += 1
    return QSeries(order, tuple(out))


def jacobi_cube_series(order: int) -> QSeries:
    """``sum_{k>=0} (-1)^k (2k+1) q^(k(k+1)/2)``, i.e. (q;q)_inf cubed."""
    out = [0] * (order + 1)
    k = 0
    while k * (k + 1) // 2 <= order:
        out[k * (k + 1) // 2] = (-1) ** k * (2 * k + 1)
        k += 1
    return QSeries(order, tuple(out))


def sparse_power(base: QSeries, exponent: int) -> QSeries:
    """``base**exponent`` for a sparse base with constant term 1.

    Uses the recurrence obtained from ``base * h' = exponent * base' * h``::

        g * h[g] = sum_{k>=1} (exponent*k - (g-k)) * base[k] * h[g-k]

    which costs O(order * nnz(base)) instead of a chain of dense products.
    """
    if base.coeffs[0] != 1:
        raise NonUnitConstantTerm(
            f"sparse_power needs constant term 1, got {base.coeffs[0]}"
        )
    n = base.order
    support = [(k, c) for k, c in enumerate(base.coeffs) if k and c]
    h = [0] * (n + 1)
    h[0] = 1
    for g in range(1, n + 1):
        s = 0
        for k, c in support:
            if k > g:
                break
            s += (exponent * k - (g - k)) * c * h[g - k]
        q, r = divmod(s, g)
        assert r == 0, "integer power recurrence left a remainder"
        h[g] = q
    return QSeries(n, tuple(h))
