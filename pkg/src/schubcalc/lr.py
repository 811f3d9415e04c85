"""
Grassmannian permutations and Littlewood-Richardson coefficients.

A permutation with its only descent at k has Schubert polynomial
s_lambda(x1, ..., xk), so Schubert coefficients among such permutations are
LR coefficients.  ``lr_coefficient`` counts LR tableaux by brute force and
serves as an oracle that never touches polynomials.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence

from .errors import ParseError
from .permutation import Permutation

__all__ = ["grassmannian_permutation", "lr_coefficient", "partition", "partitions_in_box", "partitions_of"]


def partition(parts: Sequence[int]) -> tuple[int, ...]:
    """Validate a partition and strip trailing zeros."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ParseError(f"{parts} is not a partition")
    return tuple(p for p in parts if p)


def partitions_in_box(rows: int, cols: int) -> Iterator[tuple[int, ...]]:
    """Partitions with at most ``rows`` parts, each at most ``cols``."""

    def gen(prefix: tuple[int, ...], cap: int):
        yield partition(prefix)
        if len(prefix) < rows:
            for p in range(1, cap + 1):
                yield from gen(prefix + (p,), p)

    yield from gen((), cols)


def partitions_of(size: int, max_parts: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``size`` with at most ``max_parts`` parts."""

    def gen(remaining: int, cap: int, slots: int):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for p in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - p, p, slots - 1):
                yield (p,) + rest

    yield from gen(size, size, max_parts)


def grassmannian_permutation(lam: Sequence[int], k: int) -> Permutation:
    """The permutation with at most one descent, at k, whose shape is ``lam``."""
    lam = partition(lam)
    if k < 1:
        raise ParseError("descent position must be at least 1")
    if len(lam) > k:
        raise ParseError(f"{lam} has more than {k} parts")
    padded = lam + (0,) * (k - len(lam))
    head = [padded[k - j] + j for j in range(1, k + 1)]
    n = head[-1]
    used = set(head)
    tail = [a for a in range(1, n + 1) if a not in used]
    return Permutation(head + tail)


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Number of LR tableaux of shape nu/lam and content mu.

    Cells are filled in reverse reading order (rows top to bottom, each row
    right to left) so the lattice-word condition can be checked as we go.
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    if len(lam) > len(nu) or any(a > b for a, b in zip(lam, nu)):
        return 0
    lam_p = lam + (0,) * (len(nu) - len(lam))
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, lam_p[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        total = 0
        hi = filling.get((r, c + 1), len(mu))
        lo = filling.get((r - 1, c), 0) + 1
        for a in range(lo, hi + 1):
            if counts[a] >= mu[a - 1]:
                continue
            if a > 1 and counts[a] + 1 > counts[a - 1]:
                continue
            counts[a] += 1
            filling[(r, c)] = a
            total += fill(idx + 1)
            del filling[(r, c)]
            counts[a] -= 1
        return total

    return fill(0)
