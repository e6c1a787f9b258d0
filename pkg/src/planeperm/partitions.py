"""Integer partitions and the split/merge combinatorics built on them.

Partitions show up in two roles: as cycle types of permutations and as
index sets of the counting recurrences.  Parts are stored in
non-increasing order, so two partitions are equal exactly when they are
equal as multisets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator


def exact_div(a: int, b: int) -> int:
    """Divide ``a`` by ``b``, raising if the division leaves a remainder.

    Every division in this package is expected to be exact; a remainder
    indicates a real bug rather than a rounding concern, hence the loud
    failure.
    """
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


def binomial(m: int, r: int) -> int:
    """Binomial coefficient, defined for negative upper argument as well.

    >>> binomial(5, 2)
    10
    >>> binomial(-1, 3)
    -1
    """
    if r < 0:
        return 0
    if m >= 0:
        return math.comb(m, r)
    num = 1
    for t in range(r):
        num *= m - t
    return exact_div(num, math.factorial(r))


@dataclass(frozen=True)
class Partition:
    """A partition of a non-negative integer, parts non-increasing."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be non-increasing: {self.parts}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        """Parse either the ``"4+2+1"`` or the ``"1^1 2^1 4^1"`` form.

        >>> Partition.from_string("6+2")
        Partition(parts=(6, 2))
        >>> Partition.from_string("1^2 2^1") == Partition.of([2, 1, 1])
        True
        """
        text = text.strip()
        if not text:
            return cls(())
        parts: list[int] = []
        if "^" in text:
            for chunk in text.split():
                value, _, count = chunk.partition("^")
                if not count:
                    raise ValueError(f"bad partition chunk: {chunk!r}")
                parts.extend([int(value)] * int(count))
        else:
            parts = [int(tok) for tok in text.split("+")]
        return cls.of(parts)

    @property
    def n(self) -> int:
        """The integer being partitioned."""
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def multiplicity(self, value: int) -> int:
        return self.parts.count(value)

    def multiplicities(self) -> dict[int, int]:
        """Map each distinct part to how many times it occurs, ascending."""
        out: dict[int, int] = {}
        for p in sorted(self.parts):
            out[p] = out.get(p, 0) + 1
        return out

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts)

    def exponent_form(self) -> str:
        """The ``"1^2 2^1"`` rendering, distinct parts ascending.

        >>> Partition.of([2, 1, 1]).exponent_form()
        '1^2 2^1'
        """
        return " ".join(f"{v}^{a}" for v, a in self.multiplicities().items())


def _partition_tuples(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_tuples(n - first, first):
            yield (first,) + rest


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order.

    >>> [str(p) for p in partitions_of(4)]
    ['4', '3+1', '2+2', '2+1+1', '1+1+1+1']
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    for parts in _partition_tuples(n, n):
        yield Partition(parts)


def partitions_into(n: int, pieces: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` with exactly ``pieces`` positive parts."""
    if pieces < 0:
        raise ValueError("pieces must be non-negative")
    if pieces == 0:
        if n == 0:
            yield ()
        return
    # largest part first, and at least 1 per remaining piece
    for first in range(n - pieces + 1, 0, -1):
        for rest in partitions_into(n - first, pieces - 1):
            if not rest or rest[0] <= first:
                yield (first,) + rest


def q_lambda(lam: Partition) -> int:
    """Number of permutations of ``lam.n`` symbols whose cycle type is ``lam``.

    >>> q_lambda(Partition.of([2, 1]))
    3
    """
    denom = 1
    for value, count in lam.multiplicities().items():
        denom *= value**count * math.factorial(count)
    return exact_div(math.factorial(lam.n), denom)


def splits(eta: Partition, pieces: int) -> tuple[Partition, ...]:
    """Partitions obtained from ``eta`` by splitting one part into ``pieces`` parts.

    Splitting different copies of an equal part gives the same multiset,
    so the result lists each outcome once.

    >>> [p.parts for p in splits(Partition.of([3, 1]), 3)]
    [(1, 1, 1, 1)]
    """
    if pieces < 1:
        raise ValueError("pieces must be positive")
    seen: set[Partition] = set()
    for value in sorted(set(eta.parts)):
        if value < pieces:
            continue
        rest = list(eta.parts)
        rest.remove(value)
        for frag in partitions_into(value, pieces):
            seen.add(Partition.of(rest + list(frag)))
    return tuple(sorted(seen, key=lambda p: p.parts, reverse=True))


def kappa(mu: Partition, eta: Partition) -> int:
    """Number of ways to merge parts of ``mu`` into one part and obtain ``eta``.

    Exactly ``len(mu) - len(eta) + 1`` parts are merged.  Equal parts
    count as distinguishable copies, so choosing three of the ``a+3``
    ones in ``1^(a+3) 2^b`` contributes ``binomial(a+3, 3)`` ways.  With
    ``mu == eta`` nothing moves; that degenerate merge counts once.
    """
    if mu.n != eta.n:
        raise ValueError("partitions must have the same weight")
    take = len(mu) - len(eta) + 1
    if take < 1:
        return 0
    if take == 1:
        return 1 if mu == eta else 0
    values = sorted(mu.multiplicities().items())
    total = 0
    ranges = [range(min(take, count) + 1) for _, count in values]
    for chosen in product(*ranges):
        if sum(chosen) != take:
            continue
        ways = 1
        remaining: list[int] = []
        merged = 0
        for (value, count), c in zip(values, chosen):
            ways *= math.comb(count, c)
            merged += value * c
            remaining.extend([value] * (count - c))
        remaining.append(merged)
        if Partition.of(remaining) == eta:
            total += ways
    return total


_STIRLING_ROWS: list[tuple[int, ...]] = [(1,)]


def stirling_first(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind: permutations of ``n``
    symbols with exactly ``k`` cycles.

    >>> stirling_first(5, 2)
    50
    """
    if n < 0 or k < 0:
        return 0
    while len(_STIRLING_ROWS) <= n:
        m = len(_STIRLING_ROWS)
        prev = _STIRLING_ROWS[m - 1]
        row = [0] * (m + 1)
        for j in range(1, m + 1):
            row[j] = prev[j - 1] + (m - 1) * (prev[j] if j < m else 0)
        _STIRLING_ROWS.append(tuple(row))
    row = _STIRLING_ROWS[n]
    return row[k] if k < len(row) else 0
