"""
Permutations of S_infinity in one-line notation.

A :class:`Permutation` wraps a window ``(w(1), ..., w(n))``; beyond the window
``w(i) = i``.  Equality and hashing ignore trailing fixed points, so ``213``
and ``2134`` are the same element.

>>> w = Permutation.parse("1423")
>>> length(w), sorted(descents(w)), code(w)
(2, [2], (0, 2, 0, 0))
>>> code_inverse((0, 2, 0, 0)) == w
True
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence

from .errors import ParseError, RankBoundError

__all__ = [
    "DEFAULT_RANK_BOUND",
    "Permutation",
    "all_permutations",
    "check_rank",
    "code",
    "code_inverse",
    "descents",
    "identity",
    "length",
    "long_permutation",
    "multiply",
    "right_multiply_transposition",
    "simple_transposition",
    "stabilize",
]

DEFAULT_RANK_BOUND = 16


def _trim(window: tuple[int, ...]) -> tuple[int, ...]:
    n = len(window)
    while n and window[n - 1] == n:
        n -= 1
    return window[:n]


class Permutation:
    """An element of S_infinity given by a finite one-line window."""

    __slots__ = ("window", "_key")

    def __init__(self, window: Iterable[int] = ()):
        window = tuple(int(a) for a in window)
        if sorted(window) != list(range(1, len(window) + 1)):
            raise ParseError(f"{window} is not a rearrangement of 1..{len(window)}")
        self.window = window
        self._key = _trim(window)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Read ``"1,4,2,3"`` or the digit form ``"1423"`` (ranks up to 9)."""
        text = text.strip()
        if not text:
            raise ParseError("empty permutation")
        try:
            if "," in text:
                window = [int(tok) for tok in text.split(",")]
            else:
                if not text.isdigit():
                    raise ValueError(text)
                window = [int(ch) for ch in text]
        except ValueError:
            raise ParseError(f"cannot parse permutation {text!r}") from None
        return cls(window)

    @property
    def n(self) -> int:
        return len(self.window)

    @property
    def trimmed(self) -> tuple[int, ...]:
        """The window with trailing fixed points removed."""
        return self._key

    @property
    def rank(self) -> int:
        """Smallest n with this permutation in S_n (0 for the identity)."""
        return len(self._key)

    def __call__(self, i: int) -> int:
        if i < 1:
            raise ValueError("positions start at 1")
        return self.window[i - 1] if i <= len(self.window) else i

    def __iter__(self) -> Iterator[int]:
        return iter(self.window)

    def __len__(self) -> int:
        return len(self.window)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __lt__(self, other: "Permutation") -> bool:
        return self._key < other._key

    def __mul__(self, other: "Permutation") -> "Permutation":
        return multiply(self, other)

    def __repr__(self) -> str:
        return f"Permutation({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, n: int | None = None) -> str:
        """Digit form when every entry is a single digit, comma form otherwise.

        ``n`` pads the window with fixed points; the identity prints as ``"1"``.
        """
        window = self._key if n is None else stabilize(self, max(n, self.rank)).window
        if not window:
            window = (1,)
        if len(window) <= 9:
            return "".join(map(str, window))
        return ",".join(map(str, window))


def check_rank(n: int, rank_bound: int | None = None) -> None:
    bound = DEFAULT_RANK_BOUND if rank_bound is None else rank_bound
    if n > bound:
        raise RankBoundError(f"rank {n} exceeds the configured bound {bound}")


def identity(n: int = 0) -> Permutation:
    return Permutation(range(1, n + 1))


def long_permutation(n: int) -> Permutation:
    """The longest element ``(n, n-1, ..., 1)`` of S_n."""
    return Permutation(range(n, 0, -1))


def simple_transposition(i: int) -> Permutation:
    """s_i, swapping i and i+1."""
    if i < 1:
        raise ValueError("simple transpositions are indexed from 1")
    window = list(range(1, i + 2))
    window[i - 1], window[i] = window[i], window[i - 1]
    return Permutation(window)


def stabilize(w: Permutation, N: int) -> Permutation:
    """Embed w into S_N by appending fixed points."""
    if N < w.rank:
        raise ValueError(f"cannot place a rank-{w.rank} permutation in S_{N}")
    return Permutation(w.trimmed + tuple(range(w.rank + 1, N + 1)))


def length(w: Permutation) -> int:
    """Number of inversions."""
    win = w.trimmed
    return sum(1 for i, j in itertools.combinations(range(len(win)), 2) if win[i] > win[j])


def descents(w: Permutation) -> frozenset[int]:
    """Positions i (1-based) with w(i) > w(i+1)."""
    win = w.trimmed
    return frozenset(i + 1 for i in range(len(win) - 1) if win[i] > win[i + 1])


def code(w: Permutation) -> tuple[int, ...]:
    """Lehmer code over the window: c_i = #{j > i : w(j) < w(i)}."""
    win = w.window
    return tuple(sum(1 for b in win[i + 1:] if b < a) for i, a in enumerate(win))


def code_inverse(c: Sequence[int]) -> Permutation:
    """The permutation of S_len(c) whose Lehmer code is c."""
    n = len(c)
    for i, ci in enumerate(c, start=1):
        if ci < 0 or ci > n - i:
            raise ValueError(f"code entry c_{i} = {ci} violates 0 <= c_i <= {n - i}")
    available = list(range(1, n + 1))
    return Permutation(available.pop(ci) for ci in c)


def _windows(u: Permutation, v: Permutation) -> tuple[tuple[int, ...], tuple[int, ...]]:
    n = max(u.rank, v.rank)
    return stabilize(u, n).window, stabilize(v, n).window


def multiply(u: Permutation, v: Permutation) -> Permutation:
    """Composition u after v: (uv)(i) = u(v(i))."""
    a, b = _windows(u, v)
    return Permutation(a[j - 1] for j in b)


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w.window)
    for i, a in enumerate(w.window, start=1):
        inv[a - 1] = i
    return Permutation(inv)


def right_multiply_transposition(w: Permutation, i: int, k: int) -> Permutation:
    """w * t_{ik}: swap the entries in positions i and k."""
    if not 1 <= i < k:
        raise ValueError(f"need 1 <= i < k, got i={i}, k={k}")
    win = list(stabilize(w, max(w.rank, k)).window)
    win[i - 1], win[k - 1] = win[k - 1], win[i - 1]
    return Permutation(win)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    for window in itertools.permutations(range(1, n + 1)):
        yield Permutation(window)
