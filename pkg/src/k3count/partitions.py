"""Integer partitions, the partition function, and Young-diagram conjugation."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "YoungDiagram",
    "enumerate_partitions",
    "iter_partitions",
    "partition_p",
    "conjugate",
]


@dataclass(frozen=True)
class YoungDiagram:
    """A partition stored as weakly decreasing positive row lengths."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> YoungDiagram:
        """Build from any iterable, dropping zero parts."""
        return cls(tuple(p for p in parts if p))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def conjugate(self) -> YoungDiagram:
        return conjugate(self)

    def is_strict(self) -> bool:
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))


def conjugate(d: YoungDiagram) -> YoungDiagram:
    """Transpose rows and columns: part j counts the rows of length > j."""
    parts = d.parts
    if not parts:
        return YoungDiagram()
    out = []
    i = len(parts)
    for j in range(1, parts[0] + 1):
        while parts[i - 1] < j:
            i -= 1
        out.append(i)
    return YoungDiagram(tuple(out))


def iter_partitions(m: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``m`` with parts ``<= largest``, in decreasing lex order."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if largest is None or largest > m:
        largest = m
    if m == 0:
        yield ()
        return
    for first in range(largest, 0, -1):
        for rest in iter_partitions(m - first, first):
            yield (first,) + rest


def enumerate_partitions(m: int) -> list[YoungDiagram]:
    return [YoungDiagram(p) for p in iter_partitions(m)]


_p_cache: list[int] = [1]
_p_lock = threading.Lock()


def partition_p(m: int) -> int:
    """P(m) via Euler's pentagonal recurrence, memoized across calls."""
    if m < 0:
        return 0
    if m < len(_p_cache):
        return _p_cache[m]
    with _p_lock:
        cache = _p_cache
        for n in range(len(cache), m + 1):
            total = 0
            k = 1
            while True:
                g1 = n - k * (3 * k - 1) // 2
                if g1 < 0:
                    break
                g2 = g1 - k
                term = cache[g1] + (cache[g2] if g2 >= 0 else 0)
                total += term if k % 2 else -term
                k += 1
            cache.append(total)
        return cache[m]
