"""
Reduced pipe dreams (RC-graphs).

A pipe dream for ``w`` in S_n places crosses in cells (i, j), i + j <= n,
with elbows everywhere else.  The pipe entering row i from the left leaves
through the top of column w(i), and no two pipes cross twice.  Summing
x^weight over all of them gives the Schubert polynomial, independently of
divided differences.
"""

from __future__ import annotations

from dataclasses import dataclass

from .permutation import Permutation, check_rank, length, multiply, inverse, stabilize
from .polyring import Monomial, SparsePolynomial, monomial

__all__ = ["PipeDream", "pipe_dreams", "pipe_dream_polynomial"]


@dataclass(frozen=True)
class PipeDream:
    crossings: frozenset[tuple[int, int]]
    n: int

    def __post_init__(self):
        for i, j in self.crossings:
            if i < 1 or j < 1 or i + j > self.n:
                raise ValueError(f"cell {(i, j)} lies outside the staircase of size {self.n}")

    def weight(self) -> Monomial:
        """Exponent vector of prod over crosses (i, j) of x_i."""
        exps = [0] * self.n
        for i, _ in self.crossings:
            exps[i - 1] += 1
        return monomial(exps)

    def _trace(self) -> tuple[list[int], list[tuple[int, int]]]:
        # Follow each pipe from the left edge of its row.  Going east through
        # an elbow turns north; going north through an elbow turns east.
        exits = []
        passes: dict[tuple[int, int], list[int]] = {}
        for start in range(1, self.n + 1):
            r, c, heading = start, 1, "east"
            while r >= 1:
                if (r, c) in self.crossings:
                    passes.setdefault((r, c), []).append(start)
                    if heading == "east":
                        c += 1
                    else:
                        r -= 1
                elif heading == "east":
                    heading, r = "north", r - 1
                else:
                    heading, c = "east", c + 1
            exits.append(c)
        pairs = [tuple(sorted(p)) for p in passes.values()]
        return exits, pairs

    def permutation(self) -> Permutation:
        """The permutation realized by the wiring."""
        exits, _ = self._trace()
        return Permutation(exits)

    def is_reduced(self) -> bool:
        _, pairs = self._trace()
        return len(pairs) == len(set(pairs))

    def to_json(self) -> dict:
        return {"n": self.n, "crossings": [list(cell) for cell in sorted(self.crossings)]}

    def render(self) -> str:
        """Staircase picture, ``+`` for a cross and ``.`` for an elbow."""
        rows = []
        for i in range(1, self.n + 1):
            rows.append(" ".join("+" if (i, j) in self.crossings else "." for j in range(1, self.n - i + 1)))
        return "\n".join(row for row in rows if row)


def pipe_dreams(w: Permutation, rank_bound: int | None = None) -> list[PipeDream]:
    """All reduced pipe dreams of ``w``, by depth-first search over cells.

    Cells are visited row by row, right to left within a row; a cross at
    (i, j) multiplies the running permutation by s_{i+j-1} on the right.
    Branches are cut as soon as that running product stops being a reduced
    prefix of ``w`` (which is when two pipes would cross a second time).
    """
    check_rank(w.rank, rank_bound)
    n = max(w.rank, 1)
    target = stabilize(w, n)
    goal = length(target)
    cells = [(i, j) for i in range(1, n) for j in range(n - i, 0, -1)]
    found: list[PipeDream] = []

    def is_prefix(v: list[int], ell: int) -> bool:
        # v is a reduced prefix of w iff l(v^-1 w) = l(w) - l(v)
        return length(multiply(inverse(Permutation(v)), target)) == goal - ell

    def search(k: int, v: list[int], ell: int, chosen: list[tuple[int, int]]):
        if ell == goal:
            if Permutation(v) == target:
                found.append(PipeDream(frozenset(chosen), n))
            return
        if len(cells) - k < goal - ell:
            return
        i, j = cells[k]
        s = i + j - 1
        if v[s - 1] < v[s]:
            v[s - 1], v[s] = v[s], v[s - 1]
            if is_prefix(v, ell + 1):
                chosen.append((i, j))
                search(k + 1, v, ell + 1, chosen)
                chosen.pop()
            v[s - 1], v[s] = v[s], v[s - 1]
        search(k + 1, v, ell, chosen)

    search(0, list(range(1, n + 1)), 0, [])
    return found


def pipe_dream_polynomial(w: Permutation, rank_bound: int | None = None) -> SparsePolynomial:
    """Sum of x^weight over the reduced pipe dreams of ``w``."""
    total: dict[Monomial, int] = {}
    for dream in pipe_dreams(w, rank_bound):
        m = dream.weight()
        total[m] = total.get(m, 0) + 1
    return SparsePolynomial(total)
