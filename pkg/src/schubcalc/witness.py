"""
Mod-p solution certificates for integer polynomial systems.

A certificate for ``f_1 = ... = f_m = 0`` is a prime p together with a point
of F_p^s at which every f_j vanishes mod p.  Checking one takes time linear
in the size of the system; finding one here is a plain exhaustive scan,
bounded by an explicit budget.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import BudgetExceededError, CompositePrimeError, DimensionMismatchError, ParseError
from .polyring import SparsePolynomial

__all__ = [
    "DEFAULT_BUDGET",
    "ModPWitness",
    "PolySystem",
    "count_solutions_mod_p",
    "is_prime",
    "search_witness",
    "verify_witness",
]

DEFAULT_BUDGET = 10**7


def is_prime(p: int) -> bool:
    """Deterministic trial division."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise CompositePrimeError(f"{p} is not prime")


@dataclass(frozen=True)
class PolySystem:
    polynomials: tuple[SparsePolynomial, ...]
    num_vars: int

    def __post_init__(self):
        object.__setattr__(self, "polynomials", tuple(self.polynomials))
        if not self.polynomials:
            raise ValueError("a system needs at least one polynomial")
        if self.num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        for f in self.polynomials:
            if f.num_vars > self.num_vars:
                raise DimensionMismatchError(f"{f} uses x{f.num_vars} but the system has {self.num_vars} variables")

    def with_polynomials(self, extra: Iterable[SparsePolynomial]) -> "PolySystem":
        return PolySystem(self.polynomials + tuple(extra), self.num_vars)

    def to_json(self) -> dict:
        return {"num_vars": self.num_vars, "polynomials": [f.to_json() for f in self.polynomials]}

    @classmethod
    def from_json(cls, data) -> "PolySystem":
        try:
            num_vars = data["num_vars"]
            polys = data["polynomials"]
        except (KeyError, TypeError):
            raise ParseError("system JSON needs 'num_vars' and 'polynomials'") from None
        if not isinstance(num_vars, int) or not isinstance(polys, list):
            raise ParseError("malformed system JSON")
        try:
            return cls(tuple(SparsePolynomial.from_json(f) for f in polys), num_vars)
        except (ValueError, DimensionMismatchError) as exc:
            raise ParseError(str(exc)) from None


@dataclass(frozen=True)
class ModPWitness:
    prime: int
    point: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "point", tuple(int(a) for a in self.point))

    def to_json(self) -> dict:
        return {"prime": self.prime, "point": list(self.point)}

    @classmethod
    def from_json(cls, data) -> "ModPWitness":
        try:
            prime, point = data["prime"], data["point"]
        except (KeyError, TypeError):
            raise ParseError("certificate JSON needs 'prime' and 'point'") from None
        if not isinstance(prime, int) or not isinstance(point, list) or not all(isinstance(a, int) for a in point):
            raise ParseError("malformed certificate JSON")
        return cls(prime, tuple(point))


def _compile(system: PolySystem, p: int) -> list[list[tuple[int, tuple[int, ...]]]]:
    # coefficients reduced mod p, zero terms dropped
    compiled = []
    for f in system.polynomials:
        terms = [(c % p, m) for m, c in f.terms.items() if c % p]
        compiled.append(terms)
    return compiled


def _vanishes(compiled, point: Sequence[int], p: int) -> bool:
    for terms in compiled:
        total = 0
        for c, m in terms:
            t = c
            for a, e in zip(point, m):
                if e:
                    t = t * pow(a, e, p) % p
            total += t
        if total % p:
            return False
    return True


def verify_witness(system: PolySystem, cert: ModPWitness) -> bool:
    """True iff every polynomial of ``system`` vanishes at ``cert.point`` mod ``cert.prime``."""
    _require_prime(cert.prime)
    if len(cert.point) != system.num_vars:
        raise DimensionMismatchError(f"point has {len(cert.point)} coordinates, system has {system.num_vars} variables")
    if any(not 0 <= a < cert.prime for a in cert.point):
        raise DimensionMismatchError(f"point {cert.point} has entries outside [0, {cert.prime})")
    return _vanishes(_compile(system, cert.prime), cert.point, cert.prime)


def _space_size(p: int, s: int) -> int:
    return p**s


def search_witness(system: PolySystem, primes: Sequence[int], budget: int = DEFAULT_BUDGET) -> ModPWitness | None:
    """First verifying point over the listed primes, scanned in order.

    Primes whose space F_p^s exceeds ``budget`` are skipped.  If nothing is
    found and some prime was skipped, the answer is inconclusive and
    :class:`BudgetExceededError` is raised instead of returning None.
    """
    for p in primes:
        _require_prime(p)
    skipped = []
    for p in primes:
        if _space_size(p, system.num_vars) > budget:
            skipped.append(p)
            continue
        compiled = _compile(system, p)
        for point in itertools.product(range(p), repeat=system.num_vars):
            if _vanishes(compiled, point, p):
                cert = ModPWitness(p, point)
                assert verify_witness(system, cert)
                return cert
    if skipped:
        raise BudgetExceededError(f"F_p^{system.num_vars} exceeds the budget of {budget} points for p in {skipped}")
    return None


def count_solutions_mod_p(system: PolySystem, prime: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of common zeros of the system in F_p^s."""
    _require_prime(prime)
    if _space_size(prime, system.num_vars) > budget:
        raise BudgetExceededError(f"{prime}^{system.num_vars} points exceed the budget of {budget}")
    compiled = _compile(system, prime)
    return sum(1 for point in itertools.product(range(prime), repeat=system.num_vars) if _vanishes(compiled, point, prime))
