"""Chain configurations attached to one nodal fibre and their delta bound.

Two encodings of the same data live here:

* :class:`LambdaConfig` -- the degree ``mu`` of the distinguished component
  together with the chain lengths hanging off its ``2 mu`` points over the
  node. Each side is strictly decreasing and may end in a single zero.
* :class:`MuConfig` -- the multiplicities of the chain curves on either side
  of the distinguished fibre, ``mu_neg = (mu_{-1}, ..., mu_{-k})`` and
  ``mu_pos = (mu_0, ..., mu_{l-1})``, both weakly decreasing as listed.
  Multiplicities outside the stored range are taken to be zero.

Conjugating Young diagrams turns one encoding into the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .partitions import YoungDiagram, conjugate, iter_partitions

__all__ = [
    "LambdaConfig",
    "MuConfig",
    "InvalidConfig",
    "NotAdmissible",
    "weight",
    "is_valid_mu",
    "is_admissible_mu",
    "enumerate_lambda_configs",
    "enumerate_mu_configs",
    "mu_to_lambda",
    "lambda_to_mu",
    "plateau_decomposition",
    "delta_lower_bound",
]


class InvalidConfig(ValueError):
    """A configuration violates its structural constraints."""


class NotAdmissible(ValueError):
    """A multiplicity configuration has a step larger than one."""


@dataclass(frozen=True)
class LambdaConfig:
    mu: int
    lambda_pos: tuple[int, ...]
    lambda_neg: tuple[int, ...]

    def __post_init__(self) -> None:
        pos = tuple(int(x) for x in self.lambda_pos)
        neg = tuple(int(x) for x in self.lambda_neg)
        object.__setattr__(self, "lambda_pos", pos)
        object.__setattr__(self, "lambda_neg", neg)
        if self.mu < 0:
            raise InvalidConfig(f"mu must be nonnegative, got {self.mu}")
        for name, seq in (("lambda_pos", pos), ("lambda_neg", neg)):
            if len(seq) != self.mu:
                raise InvalidConfig(f"{name} has length {len(seq)}, expected mu={self.mu}")
            if seq and seq[-1] < 0:
                raise InvalidConfig(f"{name} has a negative entry: {seq}")
            if any(a <= b for a, b in zip(seq, seq[1:])):
                raise InvalidConfig(f"{name} is not strictly decreasing: {seq}")

    @property
    def weight(self) -> int:
        return sum(self.lambda_pos) + sum(self.lambda_neg) + self.mu

    def to_json(self) -> dict:
        return {
            "mu": self.mu,
            "lambda_pos": list(self.lambda_pos),
            "lambda_neg": list(self.lambda_neg),
        }

    @classmethod
    def from_json(cls, obj: dict) -> LambdaConfig:
        return cls(int(obj["mu"]), tuple(obj["lambda_pos"]), tuple(obj["lambda_neg"]))


@dataclass(frozen=True)
class MuConfig:
    """Chain multiplicities; validity is checked by :func:`is_valid_mu`, not here."""

    mu: int
    mu_neg: tuple[int, ...] = ()
    mu_pos: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu", int(self.mu))
        object.__setattr__(self, "mu_neg", tuple(int(x) for x in self.mu_neg))
        object.__setattr__(self, "mu_pos", tuple(int(x) for x in self.mu_pos))

    @property
    def weight(self) -> int:
        return sum(self.mu_neg) + sum(self.mu_pos) + self.mu

    @property
    def mu_0(self) -> int:
        return self.mu_pos[0] if self.mu_pos else 0

    @property
    def mu_minus_1(self) -> int:
        return self.mu_neg[0] if self.mu_neg else 0

    def chain(self) -> list[int]:
        """Multiplicities in chain order ``mu_{-k}, ..., mu_{-1}, mu_0, ..., mu_{l-1}``."""
        return list(reversed(self.mu_neg)) + list(self.mu_pos)

    def to_json(self) -> dict:
        return {"mu": self.mu, "mu_neg": list(self.mu_neg), "mu_pos": list(self.mu_pos)}

    @classmethod
    def from_json(cls, obj: dict) -> MuConfig:
        if not isinstance(obj, dict):
            raise InvalidConfig("configuration must be a JSON object")
        missing = {"mu", "mu_neg", "mu_pos"} - obj.keys()
        if missing:
            raise InvalidConfig(f"missing keys: {sorted(missing)}")
        mu, neg, pos = obj["mu"], obj["mu_neg"], obj["mu_pos"]
        if not isinstance(mu, int) or isinstance(mu, bool):
            raise InvalidConfig("mu must be an integer")
        for name, seq in (("mu_neg", neg), ("mu_pos", pos)):
            if not isinstance(seq, list) or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in seq
            ):
                raise InvalidConfig(f"{name} must be a list of integers")
        return cls(mu, tuple(neg), tuple(pos))


Config = Union[LambdaConfig, MuConfig]


def weight(c: Config) -> int:
    return c.weight


def _weakly_decreasing_positive(seq: Sequence[int]) -> bool:
    return all(x >= 1 for x in seq) and all(a >= b for a, b in zip(seq, seq[1:]))


def is_valid_mu(c: MuConfig) -> bool:
    """Monotone positive sides, and ``mu`` within one above both central values."""
    if c.mu < 0:
        return False
    if not (_weakly_decreasing_positive(c.mu_neg) and _weakly_decreasing_positive(c.mu_pos)):
        return False
    return c.mu_0 <= c.mu <= c.mu_0 + 1 and c.mu_minus_1 <= c.mu <= c.mu_minus_1 + 1


def is_admissible_mu(c: MuConfig) -> bool:
    """Valid, and every step along the zero-extended chain is at most one."""
    if not is_valid_mu(c):
        return False
    chain = [0] + c.chain() + [0]
    return all(abs(a - b) <= 1 for a, b in zip(chain, chain[1:]))


def _strict_sequences(length: int, total: int, upper: int) -> Iterator[tuple[int, ...]]:
    # strictly decreasing sequences of nonnegative ints, entries < upper,
    # in decreasing lex order
    if length == 0:
        if total == 0:
            yield ()
        return
    # the remaining length-1 entries sum to at least (length-1)(length-2)/2
    floor_rest = (length - 1) * (length - 2) // 2
    for first in range(min(upper - 1, total - floor_rest), length - 2, -1):
        for rest in _strict_sequences(length - 1, total - first, first):
            yield (first,) + rest


def enumerate_lambda_configs(m: int) -> list[LambdaConfig]:
    """All chain-length configurations of weight ``m``.

    Ordered by ``mu`` ascending, then decreasing lex on ``lambda_pos``, then on
    ``lambda_neg``.
    """
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    out = []
    mu = 0
    # a strictly decreasing run of length mu sums to at least mu(mu-1)/2
    while mu * mu <= m:
        rest = m - mu
        floor = mu * (mu - 1) // 2
        by_total = {
            s: list(_strict_sequences(mu, s, rest + 1)) for s in range(floor, rest - floor + 1)
        }
        pos_all = sorted(
            ((pos, s) for s, seqs in by_total.items() for pos in seqs), reverse=True
        )
        for pos, s in pos_all:
            for neg in by_total.get(rest - s, ()):
                out.append(LambdaConfig(mu, pos, neg))
        mu += 1
    return out


def enumerate_mu_configs(m: int, admissible_only: bool = False) -> list[MuConfig]:
    """All valid (optionally admissible) multiplicity configurations of weight ``m``.

    Ordered by ``mu`` ascending, then lex on ``mu_neg``, then on ``mu_pos``.
    """
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    keep = is_admissible_mu if admissible_only else is_valid_mu
    out = []
    for mu in range(m + 1):
        rest = m - mu
        # validity pins the leading entry on each side to mu or mu - 1
        found = []
        for a in range(rest + 1):
            negs = [p for p in iter_partitions(a, mu) if not p or p[0] >= mu - 1]
            if not negs:
                continue
            poss = [p for p in iter_partitions(rest - a, mu) if not p or p[0] >= mu - 1]
            for neg in negs:
                for pos in poss:
                    c = MuConfig(mu, neg, pos)
                    if keep(c):
                        found.append(c)
        found.sort(key=lambda c: (c.mu_neg, c.mu_pos))
        out.extend(found)
    return out


def _pad(parts: tuple[int, ...], length: int) -> tuple[int, ...]:
    return parts + (0,) * (length - len(parts))


def mu_to_lambda(c: MuConfig) -> LambdaConfig:
    """Conjugate each side's multiplicity diagram into chain lengths."""
    if not is_admissible_mu(c):
        raise NotAdmissible(f"{c} is not admissible")
    pos = conjugate(YoungDiagram(c.mu_neg)).parts
    neg = conjugate(YoungDiagram(c.mu_pos)).parts
    return LambdaConfig(c.mu, _pad(pos, c.mu), _pad(neg, c.mu))


def lambda_to_mu(c: LambdaConfig) -> MuConfig:
    neg = conjugate(YoungDiagram.from_parts(c.lambda_pos)).parts
    pos = conjugate(YoungDiagram.from_parts(c.lambda_neg)).parts
    return MuConfig(c.mu, neg, pos)


def plateau_decomposition(seq: Sequence[int]) -> list[tuple[int, int]]:
    """End index and value of each maximal constant run of ``seq``.

    >>> plateau_decomposition([2, 2, 1])
    [(1, 2), (2, 1)]
    """
    if any(a < b for a, b in zip(seq, seq[1:])):
        raise ValueError(f"sequence must be weakly decreasing: {list(seq)}")
    runs = []
    for i, v in enumerate(seq):
        if i + 1 == len(seq) or seq[i + 1] != v:
            runs.append((i, v))
    return runs


def _plateau_term(seq: Sequence[int]) -> int:
    # one contribution per chain curve whose multiplicity equals its
    # predecessor's; the first run has a_0 such curves, later runs one fewer
    # than their length
    total = 0
    prev_end = None
    for end, value in plateau_decomposition(seq):
        count = end if prev_end is None else end - prev_end - 1
        total += count * value
        prev_end = end
    return total


def delta_lower_bound(c: MuConfig) -> int:
    """Lower bound on the total delta-invariant near the fibre.

    Sums the rational-double-point term ``mu**2``, the two central
    terms for ``s_0`` and ``s_{-1}``, and the plateau terms on each side.
    """
    if not is_valid_mu(c):
        raise InvalidConfig(f"{c} is not a valid configuration")
    mu, m0, m1 = c.mu, c.mu_0, c.mu_minus_1
    return (
        mu * mu
        + (m0 + 1 - mu) * m0
        + (m1 + 1 - mu) * m1
        + _plateau_term(c.mu_pos)
        + _plateau_term(c.mu_neg)
    )
