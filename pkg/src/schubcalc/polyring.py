"""
Exact sparse polynomials in x1, x2, ... with integer coefficients.

Monomials are exponent tuples with trailing zeros trimmed, so ``(2, 1)`` is
``x1^2*x2`` and ``()`` is the constant monomial.

>>> p = SparsePolynomial.parse("x1^2")
>>> print(p.divided_difference(1))
x1 + x2
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping, Sequence
from types import MappingProxyType

from .errors import ParseError

__all__ = ["Monomial", "SparsePolynomial", "monomial", "x", "constant"]

Monomial = tuple[int, ...]


def monomial(exponents: Iterable[int]) -> Monomial:
    """Canonical form of an exponent vector."""
    exps = tuple(int(e) for e in exponents)
    if any(e < 0 for e in exps):
        raise ValueError(f"negative exponent in {exps}")
    n = len(exps)
    while n and exps[n - 1] == 0:
        n -= 1
    return exps[:n]


def _lex_key(m: Monomial, width: int) -> Monomial:
    return m + (0,) * (width - len(m))


def _display_order(terms: Mapping[Monomial, int]) -> list[Monomial]:
    # total degree descending, then lexicographically descending
    width = max((len(m) for m in terms), default=0)
    return sorted(terms, key=lambda m: (sum(m), _lex_key(m, width)), reverse=True)


class SparsePolynomial:
    """Immutable map from monomials to nonzero integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for exps, coeff in items:
            m = monomial(exps)
            acc[m] = acc.get(m, 0) + int(coeff)
        self._terms = {m: c for m, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[Monomial, int]) -> "SparsePolynomial":
        # terms must already be canonical and free of zeros
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- basic protocol --

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        for m in _display_order(self._terms):
            yield m, self._terms[m]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"SparsePolynomial({str(self)!r})"

    # -- ring operations --

    def _combine(self, other: "SparsePolynomial", sign: int) -> "SparsePolynomial":
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + sign * c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return SparsePolynomial._wrap(out)

    def __add__(self, other):
        if isinstance(other, int):
            other = constant(other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = constant(other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        if isinstance(other, int):
            return constant(other)._combine(self, -1)
        return NotImplemented

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial._wrap({m: -c for m, c in self._terms.items()})

    def scale(self, k: int) -> "SparsePolynomial":
        if k == 0:
            return SparsePolynomial()
        return SparsePolynomial._wrap({m: k * c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        if not self._terms or not other._terms:
            return SparsePolynomial()
        return _multiply(self._terms, other._terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePolynomial":
        if k < 0:
            raise ValueError("negative power")
        result, base = constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- queries --

    def coefficient(self, m: Sequence[int]) -> int:
        """[x^m] of this polynomial, 0 when absent."""
        return self._terms.get(monomial(m), 0)

    @property
    def num_vars(self) -> int:
        """Largest variable index that occurs."""
        return max((len(m) for m in self._terms), default=0)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def homogeneous_components(self) -> list[tuple[int, "SparsePolynomial"]]:
        """(degree, component) pairs, lowest degree first."""
        parts: dict[int, dict[Monomial, int]] = {}
        for m, c in self._terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return [(d, SparsePolynomial._wrap(parts[d])) for d in sorted(parts)]

    def lex_min_monomial(self) -> Monomial:
        """Smallest monomial in pure lex order with x1 > x2 > ..."""
        if not self._terms:
            raise ValueError("the zero polynomial has no monomials")
        width = self.num_vars
        return min(self._terms, key=lambda m: _lex_key(m, width))

    # -- operators on variables --

    def swap_variables(self, i: int) -> "SparsePolynomial":
        """Apply s_i: exchange x_i and x_{i+1}."""
        if i < 1:
            raise ValueError("variables are indexed from 1")
        out = {}
        for m, c in self._terms.items():
            out[_swap(m, i)] = c
        return SparsePolynomial._wrap(out)

    def divided_difference(self, i: int) -> "SparsePolynomial":
        """(p - s_i p) / (x_i - x_{i+1}), computed by exact long division."""
        if i < 1:
            raise ValueError("variables are indexed from 1")
        numerator = self - self.swap_variables(i)
        return _divide_by_difference(numerator._terms, i)

    # -- evaluation --

    def evaluate_all_ones(self) -> int:
        return sum(self._terms.values())

    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) < self.num_vars:
            raise ValueError(f"point has {len(point)} coordinates, need {self.num_vars}")
        total = 0
        for m, c in self._terms.items():
            term = c
            for a, e in zip(point, m):
                if e:
                    term *= a**e
            total += term
        return total

    def evaluate_mod_p(self, point: Sequence[int], prime: int) -> int:
        """Value at ``point`` reduced into [0, prime)."""
        if prime < 2:
            raise ValueError(f"modulus must be at least 2, got {prime}")
        if len(point) < self.num_vars:
            raise ValueError(f"point has {len(point)} coordinates, need {self.num_vars}")
        total = 0
        for m, c in self._terms.items():
            term = c % prime
            for a, e in zip(point, m):
                if e:
                    term = term * pow(a, e, prime) % prime
            total += term
        return total % prime

    # -- text and JSON --

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for m in _display_order(self._terms):
            c = self._terms[m]
            factors = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(m, 1) if e]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    @classmethod
    def parse(cls, text: str) -> "SparsePolynomial":
        """Inverse of ``str``; accepts e.g. ``"3*x1^2*x2 - x3 + 7"``."""
        compact = re.sub(r"\s+", "", text)
        if not compact:
            raise ParseError("empty polynomial")
        if not _POLY_RE.fullmatch(compact):
            raise ParseError(f"cannot parse polynomial {text!r}")
        terms: dict[Monomial, int] = {}
        for sign, body in _TERM_RE.findall(compact):
            coeff = -1 if sign == "-" else 1
            exps: dict[int, int] = {}
            for factor in body.split("*"):
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                var, _, power = factor.partition("^")
                idx = int(var[1:])
                if idx < 1:
                    raise ParseError(f"variable index must be positive in {text!r}")
                exps[idx] = exps.get(idx, 0) + (int(power) if power else 1)
            width = max(exps, default=0)
            m = monomial(exps.get(k, 0) for k in range(1, width + 1))
            terms[m] = terms.get(m, 0) + coeff
        return cls(terms)

    def to_json(self) -> list[dict]:
        return [{"exponents": list(m), "coeff": str(c)} for m, c in self]

    @classmethod
    def from_json(cls, data) -> "SparsePolynomial":
        if not isinstance(data, list):
            raise ParseError("polynomial JSON must be a list of terms")
        terms = []
        for item in data:
            try:
                exps = item["exponents"]
                coeff = item["coeff"]
                if not isinstance(exps, list) or not all(isinstance(e, int) and e >= 0 for e in exps):
                    raise ValueError(exps)
                terms.append((exps, int(coeff)))
            except (KeyError, TypeError, ValueError):
                raise ParseError(f"malformed polynomial term {item!r}") from None
        return cls(terms)


_FACTOR = r"(?:\d+|x\d+(?:\^\d+)?)"
_TERM = rf"{_FACTOR}(?:\*{_FACTOR})*"
_POLY_RE = re.compile(rf"[+-]?{_TERM}(?:[+-]{_TERM})*")
_TERM_RE = re.compile(rf"([+-]?)({_TERM})")


def x(i: int) -> SparsePolynomial:
    """The variable x_i."""
    if i < 1:
        raise ValueError("variables are indexed from 1")
    return SparsePolynomial._wrap({(0,) * (i - 1) + (1,): 1})


def constant(c: int) -> SparsePolynomial:
    return SparsePolynomial._wrap({(): c} if c else {})


def _swap(m: Monomial, i: int) -> Monomial:
    if len(m) < i:
        return m
    a = m[i - 1]
    b = m[i] if len(m) > i else 0
    if a == b:
        return m
    lst = list(m) + [0] * (i + 1 - len(m))
    lst[i - 1], lst[i] = b, a
    return monomial(lst)


def _multiply(a: dict[Monomial, int], b: dict[Monomial, int]) -> SparsePolynomial:
    # Pack exponent vectors into integers so monomial products are integer sums.
    width = max(max(len(m) for m in a), max(len(m) for m in b))
    bits = (max(sum(m) for m in a) + max(sum(m) for m in b)).bit_length() + 1

    def pack(m: Monomial) -> int:
        k = 0
        for e in reversed(m):
            k = (k << bits) | e
        return k

    pa = [(pack(m), c) for m, c in a.items()]
    pb = [(pack(m), c) for m, c in b.items()]
    acc: dict[int, int] = {}
    get = acc.get
    for ka, ca in pa:
        for kb, cb in pb:
            k = ka + kb
            acc[k] = get(k, 0) + ca * cb
    mask = (1 << bits) - 1
    out = {}
    for k, c in acc.items():
        if not c:
            continue
        exps = []
        for _ in range(width):
            exps.append(k & mask)
            k >>= bits
        out[monomial(exps)] = c
    return SparsePolynomial._wrap(out)


def _divide_by_difference(terms: dict[Monomial, int], i: int) -> SparsePolynomial:
    """Exact quotient of ``terms`` by (x_i - x_{i+1}).

    Long division in x_i: a term c*x^e with e_i = d >= 1 contributes
    c*x^e/x_i to the quotient and leaves c*x^e*x_{i+1}/x_i, of x_i-degree d-1,
    in the remainder.  Working from the top x_i-degree down, the final
    remainder is free of x_i and must vanish.
    """
    buckets: dict[int, dict[tuple[int, ...], int]] = {}
    width = max(i + 1, max((len(m) for m in terms), default=0))
    for m, c in terms.items():
        e = list(m) + [0] * (width - len(m))
        d = e[i - 1]
        e[i - 1] = 0
        bucket = buckets.setdefault(d, {})
        key = tuple(e)
        bucket[key] = bucket.get(key, 0) + c
    quotient: dict[Monomial, int] = {}
    top = max(buckets, default=0)
    for d in range(top, 0, -1):
        bucket = buckets.pop(d, None)
        if not bucket:
            continue
        lower = buckets.setdefault(d - 1, {})
        for rest, c in bucket.items():
            if not c:
                continue
            q = list(rest)
            q[i - 1] = d - 1
            qm = monomial(q)
            quotient[qm] = quotient.get(qm, 0) + c
            r = list(rest)
            r[i] += 1
            rkey = tuple(r)
            lower[rkey] = lower.get(rkey, 0) + c
    remainder = buckets.get(0, {})
    assert not any(remainder.values()), "division by x_i - x_{i+1} left a remainder"
    return SparsePolynomial._wrap({m: c for m, c in quotient.items() if c})
