"""
Command-line front end.

    schubcalc poly 321
    schubcalc expand 132 132 --json
    schubcalc positive 213 213 231 --quiet; echo $?
    schubcalc table 3 table3.csv
    schubcalc witness-search system.json 2,3,5

Global options may also be set through ``SCHUBCALC_RANK_BOUND``,
``SCHUBCALC_BUDGET`` and ``SCHUBCALC_TABLE_MAX``; explicit flags win.

Exit codes: 0 ok / positive / accept, 10 negative / reject / none,
2 parse or schema error, 3 rank bound, 4 budget exceeded, 5 I/O error,
6 composite modulus.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Any

from .errors import (
    BudgetExceededError,
    CompositePrimeError,
    DimensionMismatchError,
    ParseError,
    RankBoundError,
)
from .permutation import DEFAULT_RANK_BOUND, Permutation, all_permutations, check_rank
from .pipedreams import pipe_dreams
from .schubert import product_expansion, schubert_coefficient, schubert_kostka, schubert_polynomial
from .witness import DEFAULT_BUDGET, ModPWitness, PolySystem, count_solutions_mod_p, search_witness, verify_witness

EXIT_OK = 0
EXIT_NEGATIVE = 10
EXIT_PARSE = 2
EXIT_RANK = 3
EXIT_BUDGET = 4
EXIT_IO = 5
EXIT_COMPOSITE = 6

DEFAULT_TABLE_MAX = 5
ENV_PREFIX = "SCHUBCALC_"


@dataclass
class CommandResult:
    status: str
    payload: Any
    human_text: str
    exit_code: int = EXIT_OK


def _perm(text: str) -> Permutation:
    return Permutation.parse(text)


def _perm_json(w: Permutation) -> list[int]:
    return list(w.window) if w.window else [1]


def cmd_poly(args) -> CommandResult:
    w = _perm(args.w)
    p = schubert_polynomial(w, args.rank_bound)
    return CommandResult("ok", {"w": _perm_json(w), "polynomial": p.to_json(), "text": str(p)}, str(p))


def cmd_kostka(args) -> CommandResult:
    w = _perm(args.w)
    try:
        alpha = tuple(int(t) for t in args.alpha.split(","))
    except ValueError:
        raise ParseError(f"cannot parse exponent vector {args.alpha!r}") from None
    if any(a < 0 for a in alpha):
        raise ParseError("exponents must be nonnegative")
    c = schubert_kostka(w, alpha, args.rank_bound)
    return CommandResult("ok", {"w": _perm_json(w), "alpha": list(alpha), "coeff": str(c)}, str(c))


def cmd_pipedreams(args) -> CommandResult:
    w = _perm(args.w)
    dreams = pipe_dreams(w, args.rank_bound)
    payload = {"w": _perm_json(w), "count": str(len(dreams))}
    if args.count:
        return CommandResult("ok", payload, str(len(dreams)))
    payload["pipe_dreams"] = [d.to_json() for d in dreams]
    blocks = [d.render() or "(empty)" for d in dreams]
    return CommandResult("ok", payload, "\n\n".join(blocks + [f"count: {len(dreams)}"]))


def cmd_coeff(args) -> CommandResult:
    u, v, w = _perm(args.u), _perm(args.v), _perm(args.w)
    c = schubert_coefficient(u, v, w, args.rank_bound)
    return CommandResult("ok", {"coeff": str(c)}, str(c))


def cmd_expand(args) -> CommandResult:
    expansion = product_expansion(_perm(args.u), _perm(args.v), args.rank_bound)
    human = "{" + ", ".join(f"{w}: {c}" for w, c in expansion.as_dict().items()) + "}"
    return CommandResult("ok", expansion.to_json(), human)


def cmd_positive(args) -> CommandResult:
    u, v, w = _perm(args.u), _perm(args.v), _perm(args.w)
    c = schubert_coefficient(u, v, w, args.rank_bound)
    positive = c > 0
    code = EXIT_NEGATIVE if args.quiet and not positive else EXIT_OK
    return CommandResult("ok", {"positive": positive, "coeff": str(c)}, "true" if positive else "false", code)


def table_rows(n: int, rank_bound: int | None = None) -> list[tuple[str, str, str, int]]:
    """(u, v, w, c^w_{u,v}) for all u, v in S_n and w in the support."""
    rows = []
    for u in all_permutations(n):
        for v in all_permutations(n):
            for w, c in product_expansion(u, v, rank_bound):
                rows.append((u.to_text(n), v.to_text(n), w.to_text(n), c))
    return rows


def cmd_table(args) -> CommandResult:
    limit = args.table_max
    if args.n < 1:
        raise ParseError("table rank must be at least 1")
    check_rank(args.n, limit)
    rows = table_rows(args.n, args.rank_bound)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["u", "v", "w", "coeff"])
    writer.writerows(rows)
    text = buf.getvalue()
    payload = {"n": args.n, "rows": str(len(rows))}
    if args.output:
        try:
            with open(args.output, "w", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise _IOFailure(str(exc)) from None
        payload["path"] = args.output
        return CommandResult("ok", payload, f"wrote {len(rows)} rows to {args.output}")
    payload["csv"] = text
    return CommandResult("ok", payload, text.rstrip("\n"))


class _IOFailure(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise _IOFailure(str(exc)) from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _primes(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"cannot parse prime list {text!r}") from None


def cmd_witness_verify(args) -> CommandResult:
    system = PolySystem.from_json(_load_json(args.system))
    cert = ModPWitness.from_json(_load_json(args.certificate))
    ok = verify_witness(system, cert)
    return CommandResult("ok", {"accept": ok}, "accept" if ok else "reject", EXIT_OK if ok else EXIT_NEGATIVE)


def cmd_witness_search(args) -> CommandResult:
    system = PolySystem.from_json(_load_json(args.system))
    cert = search_witness(system, _primes(args.primes), args.budget)
    if cert is None:
        return CommandResult("ok", {"certificate": None}, "none", EXIT_NEGATIVE)
    return CommandResult("ok", {"certificate": cert.to_json()}, json.dumps(cert.to_json()))


def cmd_witness_count(args) -> CommandResult:
    system = PolySystem.from_json(_load_json(args.system))
    primes = _primes(args.prime)
    if len(primes) != 1:
        raise ParseError("witness-count takes exactly one prime")
    count = count_solutions_mod_p(system, primes[0], args.budget)
    return CommandResult("ok", {"prime": primes[0], "count": str(count)}, str(count))


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"{ENV_PREFIX}{name}={raw!r} is not an integer") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank-bound", type=int, default=argparse.SUPPRESS, help="largest permutation rank allowed")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="max points per exhaustive scan")
    common.add_argument("--table-max", type=int, default=argparse.SUPPRESS, help="largest n accepted by 'table'")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print JSON only")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="no output; answer via exit code")

    parser = argparse.ArgumentParser(prog="schubcalc", parents=[common], description="Exact Schubert calculus kernel.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("poly", cmd_poly, "Schubert polynomial of W")
    p.add_argument("w")
    p = add("kostka", cmd_kostka, "coefficient of x^ALPHA in the Schubert polynomial of W")
    p.add_argument("w")
    p.add_argument("alpha", help="comma-separated exponents, e.g. 1,0")
    p = add("pipedreams", cmd_pipedreams, "reduced pipe dreams of W")
    p.add_argument("w")
    p.add_argument("--count", action="store_true", help="print only the number of pipe dreams")
    p = add("coeff", cmd_coeff, "Schubert coefficient c^W_{U,V}")
    for name in ("u", "v", "w"):
        p.add_argument(name)
    p = add("expand", cmd_expand, "expand S_U * S_V in the Schubert basis")
    p.add_argument("u")
    p.add_argument("v")
    p = add("positive", cmd_positive, "decide c^W_{U,V} > 0")
    for name in ("u", "v", "w"):
        p.add_argument(name)
    p = add("table", cmd_table, "CSV of all nonzero c^w_{u,v} with u, v in S_N")
    p.add_argument("n", type=int)
    p.add_argument("output", nargs="?", help="output path (default: stdout)")
    p = add("witness-verify", cmd_witness_verify, "check a mod-p certificate against a system")
    p.add_argument("system")
    p.add_argument("certificate")
    p = add("witness-search", cmd_witness_search, "exhaustively search for a mod-p certificate")
    p.add_argument("system")
    p.add_argument("primes", help="comma-separated primes, scanned in order")
    p = add("witness-count", cmd_witness_count, "count common zeros mod a prime")
    p.add_argument("system")
    p.add_argument("prime")
    return parser


def _error(kind: str, message: str, code: int) -> CommandResult:
    return CommandResult(kind, {"error": kind, "message": message}, f"error: {message}", code)


def run(argv: list[str] | None = None) -> tuple[CommandResult, argparse.Namespace]:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.quiet = getattr(args, "quiet", False)
    try:
        if not hasattr(args, "rank_bound"):
            args.rank_bound = _env_int("RANK_BOUND", DEFAULT_RANK_BOUND)
        if not hasattr(args, "budget"):
            args.budget = _env_int("BUDGET", DEFAULT_BUDGET)
        if not hasattr(args, "table_max"):
            args.table_max = _env_int("TABLE_MAX", DEFAULT_TABLE_MAX)
        result = args.func(args)
    except (ParseError, DimensionMismatchError) as exc:
        result = _error("parse-error", str(exc), EXIT_PARSE)
    except CompositePrimeError as exc:
        result = _error("composite-prime", str(exc), EXIT_COMPOSITE)
    except RankBoundError as exc:
        result = _error("rank-bound", str(exc), EXIT_RANK)
    except BudgetExceededError as exc:
        result = _error("budget-exceeded", str(exc), EXIT_BUDGET)
    except _IOFailure as exc:
        result = _error("io-error", str(exc), EXIT_IO)
    return result, args


def main(argv: list[str] | None = None) -> int:
    result, args = run(argv)
    if result.status != "ok":
        if not args.quiet:
            print(json.dumps(result.payload) if args.json else result.human_text, file=sys.stderr)
        return result.exit_code
    if not args.quiet:
        print(json.dumps(result.payload) if args.json else result.human_text)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
