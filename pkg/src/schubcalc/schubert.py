"""
Schubert polynomials, Schubert-basis expansion and structure constants.

The Schubert polynomial of the longest element of S_n is the staircase
monomial ``x1^(n-1) x2^(n-2) ... x_(n-1)`` and ``S_{w s_i} = d_i S_w``
whenever ``w(i) > w(i+1)``.  Products expand as
``S_u S_v = sum_w c^w_{u,v} S_w`` with nonnegative integer coefficients.

>>> print(schubert_polynomial(Permutation.parse("132")))
x1 + x2
>>> schubert_coefficient(Permutation.parse("132"), Permutation.parse("132"), Permutation.parse("231"))
1
"""

from __future__ import annotations

import functools
import logging
from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass
from types import MappingProxyType

from .errors import ParseError, RankBoundError
from .permutation import (
    DEFAULT_RANK_BOUND,
    Permutation,
    check_rank,
    code,
    code_inverse,
    length,
    right_multiply_transposition,
    stabilize,
)
from .polyring import SparsePolynomial, constant, x

__all__ = [
    "SchubertExpansion",
    "expand_in_schubert_basis",
    "is_positive",
    "monk_multiply",
    "positivity_certificate",
    "product_expansion",
    "schubert_coefficient",
    "schubert_kostka",
    "schubert_polynomial",
    "schubert_via_descent_chain",
    "staircase",
    "verify_positivity_certificate",
]

log = logging.getLogger(__name__)


def staircase(n: int) -> SparsePolynomial:
    """x1^(n-1) x2^(n-2) ... x_(n-1), the polynomial of the longest element."""
    return SparsePolynomial({tuple(range(n - 1, -1, -1)): 1}) if n > 0 else constant(1)


@functools.lru_cache(maxsize=None)
def _schubert(key: tuple[int, ...]) -> SparsePolynomial:
    # Climb by right multiplication with s_i at the largest i where the code
    # increases; this reaches a dominant permutation (weakly decreasing code),
    # whose polynomial is the single monomial x^code.  The staircase is the
    # dominant case for the longest element.
    w = Permutation(key)
    c = code(w)
    for i in range(len(c) - 2, -1, -1):
        if c[i] < c[i + 1]:
            up = right_multiply_transposition(w, i + 1, i + 2)
            return _schubert(up.trimmed).divided_difference(i + 1)
    return SparsePolynomial({c: 1})


def schubert_polynomial(w: Permutation, rank_bound: int | None = None) -> SparsePolynomial:
    """The Schubert polynomial of ``w`` (memoized, thread-safe)."""
    check_rank(w.rank, rank_bound)
    return _schubert(w.trimmed)


def schubert_via_descent_chain(
    w: Permutation,
    choose: Callable[[list[int]], int] = max,
    cache: dict | None = None,
) -> SparsePolynomial:
    """Build S_w literally from the staircase of S_rank(w).

    Walks up from ``w`` to the longest element, at each step picking an
    ascent position with ``choose`` (``max`` or ``min`` give two different
    descent chains), then applies the divided differences on the way down.
    ``cache`` may be shared between calls that use the same ``choose`` and rank.
    """
    n = max(w.rank, 1)
    memo = {} if cache is None else cache

    def build(v: Permutation) -> SparsePolynomial:
        key = (n, v.trimmed)
        if key in memo:
            return memo[key]
        win = stabilize(v, n).window
        ascents = [i for i in range(1, n) if win[i - 1] < win[i]]
        if not ascents:
            result = staircase(n)
        else:
            i = choose(ascents)
            result = build(right_multiply_transposition(v, i, i + 1)).divided_difference(i)
        memo[key] = result
        return result

    return build(w)


def schubert_kostka(w: Permutation, alpha, rank_bound: int | None = None) -> int:
    """Coefficient of x^alpha in S_w."""
    return schubert_polynomial(w, rank_bound).coefficient(alpha)


@dataclass(frozen=True)
class SchubertExpansion:
    """A polynomial written as sum of c_w * S_w."""

    terms: Mapping[Permutation, int]
    ambient_rank: int
    signed: bool = False

    def __post_init__(self):
        clean = {w: int(c) for w, c in self.terms.items() if c}
        object.__setattr__(self, "terms", MappingProxyType(clean))
        if not self.signed and any(c < 0 for c in clean.values()):
            raise ValueError("negative coefficient in an unsigned expansion")

    def __iter__(self) -> Iterator[tuple[Permutation, int]]:
        for w in sorted(self.terms):
            yield w, self.terms[w]

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchubertExpansion):
            return NotImplemented
        return dict(self.terms) == dict(other.terms) and self.signed == other.signed

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.signed))

    def coefficient(self, w: Permutation) -> int:
        return self.terms.get(w, 0)

    def as_dict(self) -> dict[str, int]:
        """{one-line text: coefficient}; handy for display and tests."""
        return {w.to_text(): c for w, c in self}

    def polynomial(self) -> SparsePolynomial:
        total = SparsePolynomial()
        for w, c in self.terms.items():
            total = total + schubert_polynomial(w, rank_bound=max(self.ambient_rank, w.rank)).scale(c)
        return total

    def to_json(self) -> dict:
        return {
            "ambient_rank": self.ambient_rank,
            "terms": [
                {"w": list(stabilize(w, max(w.rank, 1)).window), "coeff": str(c)} for w, c in self
            ],
            "signed": self.signed,
        }

    @classmethod
    def from_json(cls, data) -> "SchubertExpansion":
        try:
            terms = {Permutation(t["w"]): int(t["coeff"]) for t in data["terms"]}
            return cls(terms, int(data["ambient_rank"]), bool(data.get("signed", False)))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed expansion JSON: {exc}") from None


def _rank_for_code(c: tuple[int, ...]) -> int:
    return max([len(c)] + [i + ci for i, ci in enumerate(c, start=1)])


def expand_in_schubert_basis(
    p: SparsePolynomial,
    ambient_rank: int | None = None,
    rank_bound: int | None = None,
) -> SchubertExpansion:
    """Write ``p`` in the Schubert basis by repeatedly peeling lex-minimal terms.

    The lex-smallest monomial of S_w is x^code(w) with coefficient 1, so the
    lex-smallest monomial m of the remainder names the next basis element
    code_inverse(m).  Each homogeneous component is peeled separately, lowest
    degree first.  Negative coefficients yield a ``signed`` expansion.
    """
    bound = DEFAULT_RANK_BOUND if rank_bound is None else rank_bound
    N = ambient_rank if ambient_rank is not None else 0
    check_rank(N, bound)
    terms: dict[Permutation, int] = {}
    for _, component in p.homogeneous_components():
        rest = component
        while rest:
            m = rest.lex_min_monomial()
            c = rest.coefficient(m)
            need = _rank_for_code(m)
            if need > N:
                if ambient_rank is not None:
                    log.warning("peeled a rank-%d permutation beyond ambient rank %d", need, N)
                if need > bound:
                    raise RankBoundError(f"expansion needs rank {need}, bound is {bound}")
                N = need
            w = code_inverse(m + (0,) * (need - len(m)))
            sw = schubert_polynomial(w, bound)
            assert sw.coefficient(m) == 1 and sw.lex_min_monomial() == m, f"lex-min property fails for {w}"
            rest = rest - sw.scale(c)
            terms[w] = terms.get(w, 0) + c
    expansion = SchubertExpansion(terms, N, signed=any(c < 0 for c in terms.values()))
    assert expansion.polynomial() == p, "Schubert expansion does not reproduce its input"
    return expansion


@functools.lru_cache(maxsize=4096)
def _product_expansion(u_key, v_key, bound) -> SchubertExpansion:
    u, v = Permutation(u_key), Permutation(v_key)
    N = max(u.rank + v.rank, 1)
    check_rank(N, bound)
    product = _schubert(u_key) * _schubert(v_key)
    return expand_in_schubert_basis(product, ambient_rank=N, rank_bound=bound)


def product_expansion(u: Permutation, v: Permutation, rank_bound: int | None = None) -> SchubertExpansion:
    """S_u * S_v in the Schubert basis, computed in S_(rank u + rank v)."""
    bound = DEFAULT_RANK_BOUND if rank_bound is None else rank_bound
    return _product_expansion(u.trimmed, v.trimmed, bound)


def schubert_coefficient(u: Permutation, v: Permutation, w: Permutation, rank_bound: int | None = None) -> int:
    """The structure constant c^w_{u,v}."""
    check_rank(w.rank, rank_bound)
    expansion = product_expansion(u, v, rank_bound)
    if length(w) != length(u) + length(v):
        return 0
    return expansion.coefficient(w)


def is_positive(u: Permutation, v: Permutation, w: Permutation, rank_bound: int | None = None) -> bool:
    """Decide c^w_{u,v} > 0."""
    return schubert_coefficient(u, v, w, rank_bound) > 0


def positivity_certificate(
    u: Permutation, v: Permutation, w: Permutation, rank_bound: int | None = None
) -> SchubertExpansion | None:
    """The full expansion of S_u S_v if it certifies c^w_{u,v} > 0, else None."""
    if not is_positive(u, v, w, rank_bound):
        return None
    return product_expansion(u, v, rank_bound)


def verify_positivity_certificate(
    u: Permutation, v: Permutation, w: Permutation, certificate: SchubertExpansion
) -> bool:
    """Check a claimed expansion independently of how it was produced."""
    if certificate.signed or certificate.coefficient(w) <= 0:
        return False
    bound = max(certificate.ambient_rank, u.rank, v.rank, w.rank, DEFAULT_RANK_BOUND)
    product = schubert_polynomial(u, bound) * schubert_polynomial(v, bound)
    return certificate.polynomial() == product


def monk_multiply(r: int, w: Permutation, rank_bound: int | None = None) -> SchubertExpansion:
    """S_{s_r} * S_w by Monk's rule: sum of w t_{ik} over i <= r < k covering w."""
    if r < 1:
        raise ValueError("Monk's rule needs r >= 1")
    m = max(w.rank, r) + 1
    check_rank(m, rank_bound)
    ell = length(w)
    terms = {}
    for i in range(1, r + 1):
        for k in range(r + 1, m + 1):
            wt = right_multiply_transposition(w, i, k)
            if length(wt) == ell + 1:
                terms[wt] = 1
    return SchubertExpansion(terms, m)


def monk_generator(r: int) -> SparsePolynomial:
    """S_{s_r} = x1 + ... + x_r."""
    return sum((x(i) for i in range(1, r + 1)), SparsePolynomial())

