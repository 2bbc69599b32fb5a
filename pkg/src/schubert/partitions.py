"""Partitions in a bounded box and Littlewood-Richardson coefficients.

A partition is a plain tuple of weakly decreasing positive integers; the
empty tuple is the empty partition.  ``partition()`` normalizes away
trailing zeros and every function here returns normalized tuples, so
partitions compare and hash structurally.

Littlewood-Richardson coefficients are computed by direct enumeration of
lattice-word skew tableaux.  At the box sizes this library targets the
enumeration is instantaneous and easy to audit, which beats any asymptotic
cleverness.  Everything in this module is a pure function on immutable
values and safe to call concurrently.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple

Partition = tuple[int, ...]


class Box(NamedTuple):
    """Bounding rectangle: at most ``rows`` parts, each at most ``cols``."""

    rows: int
    cols: int


def partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` to a partition tuple, dropping trailing zeros."""
    t = tuple(int(x) for x in parts)
    while t and t[-1] == 0:
        t = t[:-1]
    if (t and t[-1] < 0) or any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"not a weakly decreasing sequence of non-negative parts: {parts!r}")
    return t


def weight(la: Partition) -> int:
    """Number of boxes |la|."""
    return sum(la)


def fits(la: Partition, box: Box) -> bool:
    return len(la) <= box.rows and (not la or la[0] <= box.cols)


def contains(outer: Partition, inner: Partition) -> bool:
    """Diagram containment inner <= outer."""
    return len(inner) <= len(outer) and all(inner[i] <= outer[i] for i in range(len(inner)))


def enumerate_partitions(box: Box, degree: int) -> list[Partition]:
    """All partitions of ``degree`` fitting in ``box``, lexicographically descending."""
    out: list[Partition] = []

    def grow(prefix: list[int], remaining: int, cap: int, rows_left: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if rows_left == 0:
            return
        lo = -(-remaining // rows_left)  # smallest head part that can still absorb the rest
        for part in range(min(cap, remaining), lo - 1, -1):
            prefix.append(part)
            grow(prefix, remaining - part, part, rows_left - 1)
            prefix.pop()

    if 0 <= degree <= box.rows * box.cols:
        grow([], degree, box.cols, box.rows)
    return out


def conjugate(la: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not la:
        return ()
    return tuple(sum(1 for part in la if part > i) for i in range(la[0]))


def complement(la: Partition, box: Box) -> Partition:
    """Rotated box complement: the Poincare-dual index inside ``box``."""
    if not fits(la, box):
        raise ValueError(f"{la} does not fit in {box}")
    padded = la + (0,) * (box.rows - len(la))
    return partition(box.cols - padded[i] for i in reversed(range(box.rows)))


def is_horizontal_strip(mu: Partition, la: Partition) -> bool:
    """True iff la <= mu and mu/la has at most one box in every column."""
    if not contains(mu, la):
        return False
    padded = la + (0,) * (len(mu) - len(la))
    return all(mu[i + 1] <= padded[i] for i in range(len(mu) - 1))


def is_vertical_strip(mu: Partition, la: Partition) -> bool:
    """True iff la <= mu and mu/la has at most one box in every row."""
    if not contains(mu, la):
        return False
    padded = la + (0,) * (len(mu) - len(la))
    return all(mu[i] - padded[i] <= 1 for i in range(len(mu)))


@lru_cache(maxsize=None)
def lr_coefficient(la: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient: multiplicity of s_nu in s_la * s_mu.

    Counts column-strict fillings of the skew shape nu/la with content mu
    whose reverse reading word (rows top to bottom, right to left within a
    row) is a lattice word.  Zero whenever |nu| != |la| + |mu| or the shapes
    are not nested.
    """
    la, mu, nu = partition(la), partition(mu), partition(nu)
    if weight(la) + weight(mu) != weight(nu):
        return 0
    if not contains(nu, la) or not contains(nu, mu):
        return 0
    if not mu:
        return 1
    rows = len(nu)
    inner = la + (0,) * (rows - len(la))
    entries = len(mu)
    # Cells listed in reading-word order, so the lattice condition and the
    # content bound can be maintained incrementally.
    cells = [(r, c) for r in range(rows) for c in range(nu[r] - 1, inner[r] - 1, -1)]
    fill: dict[tuple[int, int], int] = {}
    counts = [0] * (entries + 1)

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        lo, hi = 1, entries
        right = fill.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)  # rows weakly increase
        above = fill.get((r - 1, c))
        if above is not None:
            lo = max(lo, above + 1)  # columns strictly increase
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            fill[(r, c)] = v
            total += place(idx + 1)
            del fill[(r, c)]
            counts[v] -= 1
        return total

    return place(0)
