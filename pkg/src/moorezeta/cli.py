"""Command-line front end.

Every command builds a report document (a JSON-ready dict) and prints it
either as a text table or as JSON.  Exact rationals are always strings
"num/den".  Exit status: 0 pass, 1 mathematical mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import logging
import os
import sys
from fractions import Fraction
from importlib import resources
from typing import Any, Callable

from . import __version__
from .analytic import (
    coprimality_probability,
    euler_L_moore,
    functional_equation_check,
    monte_carlo_probability,
    primes_up_to,
)
from .cache import load_cache, save_cache
from .bernoulli import generalized_bernoulli_numbers
from .dirichlet import is_prime, torsion_generator
from .homotopy import HomotopyPattern
from .lvalues import carlitz_check, padic_convergence_check, special_value_record, verify_main_theorem

log = logging.getLogger("moorezeta")

SCHEMA_ID = "moorezeta.report.v1"


class UsageError(ValueError):
    pass


def load_schema() -> dict:
    return json.loads(resources.files("moorezeta").joinpath("report_schema.json").read_text())


# ---------------------------------------------------------------------------
# rendering helpers


def exact(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def factor_trial(n: int, bound: int) -> tuple[list[tuple[int, int]], int]:
    """Trial division of |n| by primes <= bound.

    Returns (prime powers, cofactor).  A leftover below bound^2 is prime
    and goes into the list; otherwise it is returned as the cofactor
    (1 when fully factored).
    """
    n = abs(n)
    found: list[tuple[int, int]] = []
    if n <= 1:
        return found, 1
    for q in primes_up_to(max(bound, 2)).tolist():
        if q * q > n:
            break
        if n % q == 0:
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            found.append((q, e))
    if 1 < n < bound * bound:
        found.append((n, 1))
        n = 1
    return found, n


def render_factorization(n: int, bound: int) -> tuple[str, int | None]:
    if n == 0:
        return "0", None
    parts, cofactor = factor_trial(n, bound)
    text = "·".join(f"{q}^{e}" if e > 1 else str(q) for q, e in parts)
    if cofactor > 1:
        text = f"{text}·C[{cofactor}]" if text else f"C[{cofactor}]"
    elif not text:
        text = "1"
    if n < 0:
        text = "-" + text
    return text, (cofactor if cofactor > 1 else None)


def _timestamp() -> str:
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    when = (
        _dt.datetime.fromtimestamp(int(epoch), _dt.timezone.utc)
        if epoch
        else _dt.datetime.now(_dt.timezone.utc)
    )
    return when.replace(microsecond=0).isoformat()


def document(command: str, parameters: dict, rows: list[dict], passed: bool, notes=()) -> dict:
    doc = {
        "schema": SCHEMA_ID,
        "command": command,
        "parameters": parameters,
        "timestamp": _timestamp(),
        "version": __version__,
        "status": "pass" if passed else "fail",
        "rows": rows,
    }
    if notes:
        doc["notes"] = list(notes)
    return doc


def _odd_prime(p: int) -> int:
    if p == 2 or not is_prime(p):
        raise UsageError(f"--p must be an odd prime, got {p}")
    return p


# ---------------------------------------------------------------------------
# commands


def cmd_values(p: int, n_max: int, factor_bound: int = 10**6) -> dict:
    _odd_prime(p)
    generalized_bernoulli_numbers(torsion_generator(p), n_max)
    rows = []
    for n in range(1, n_max + 1):
        rec = special_value_record(p, n)
        row = rec.as_dict()
        row["factorization"], cof = render_factorization(rec.numerator, factor_bound)
        row["cofactor"] = None if cof is None else str(cof)
        rows.append(row)
    return document(
        "values",
        {"p": p, "n_max": n_max, "factor_bound": factor_bound},
        rows,
        all(r["passed"] for r in rows),
        notes=["value is zeta_F(1-n)/zeta(1-n), computed as the norm of L(1-n, chi) from Q(zeta_p)"],
    )


def cmd_verify(p: int, n_max: int, threads: int = 1) -> dict:
    _odd_prime(p)
    report = verify_main_theorem(p, n_max, threads=threads)
    return document(
        "verify", {"p": p, "n_max": n_max}, [r.as_dict() for r in report.records], report.passed
    )


def cmd_euler(p: int, s: float, prime_bound: int, split: str = "character", dps: int | None = None) -> dict:
    _odd_prime(p)
    if s <= 1:
        raise UsageError("--s must be > 1")
    approx = euler_L_moore(s, p, prime_bound, split=split, dps=dps)
    row = {
        "p": p,
        "s": s,
        "prime_bound": prime_bound,
        "split": split,
        "value": float(approx),
        "value_str": str(approx.value),
        "error_bound": approx.error_bound,
        "precision": approx.precision,
    }
    return document("euler", {"p": p, "s": s, "prime_bound": prime_bound, "split": split, "dps": dps}, [row], True)


def cmd_functional(p: int, n: int, prime_bound: int, tol: float) -> dict:
    _odd_prime(p)
    if n < 2 or n % 2:
        raise UsageError("--n must be an even integer >= 2")
    rep = functional_equation_check(p, n, prime_bound, tol)
    row = {
        "p": p,
        "n": n,
        "exact_value": exact(rep.exact_value),
        "lhs": float(rep.lhs),
        "lhs_error_bound": rep.lhs.error_bound,
        "rhs": rep.rhs,
        "relative_error": rep.relative_error,
        "tolerance": tol,
        "passed": rep.passed,
    }
    return document(
        "functional",
        {"p": p, "n": n, "prime_bound": prime_bound, "tol": tol},
        [row],
        rep.passed,
        notes=["compared up to sign: |L(1-n, S/p)| is used on the right-hand side"],
    )


def cmd_probability(
    p: int,
    prime_bound: int,
    tol: float = 1e-4,
    samples: int | None = None,
    range_bound: int = 10**6,
    seed: int = 0,
    threads: int = 1,
    sigmas: float = 4.0,
) -> dict:
    _odd_prime(p)
    rep = coprimality_probability(p, prime_bound)
    rows: list[dict[str, Any]] = [
        {"route": "closed_form", "value": rep.closed_form, "expression": rep.constant_str, "passed": True},
        {
            "route": "euler_product",
            "value": float(rep.euler),
            "error_bound": rep.euler.error_bound,
            "difference": rep.difference,
            "tolerance": tol,
            "passed": rep.difference <= tol,
        },
    ]
    notes = []
    if samples:
        mc = monte_carlo_probability(p, samples, range_bound, seed, threads=threads)
        z = abs(mc.frequency - rep.closed_form) / mc.standard_error
        rows.append(
            {
                "route": "monte_carlo",
                "value": mc.frequency,
                "standard_error": mc.standard_error,
                "hits": mc.hits,
                "samples": samples,
                "range": range_bound,
                "seed": seed,
                "z_score": z,
                "passed": z <= sigmas,
            }
        )
        notes.append(mc.note)
    return document(
        "probability",
        {"p": p, "prime_bound": prime_bound, "tol": tol, "samples": samples, "range": range_bound, "seed": seed},
        rows,
        all(r["passed"] for r in rows),
        notes=notes,
    )


def cmd_congruence(p: int, j_max: int) -> dict:
    _odd_prime(p)
    rep = padic_convergence_check(p, j_max)
    d = rep.as_dict()
    return document(
        "congruence",
        {"p": p, "j_max": j_max},
        d["rows"],
        rep.passed,
        notes=[f"a_j differences strictly increasing: {rep.a_increasing}", f"c_j differences strictly increasing: {rep.c_increasing}"],
    )


def cmd_carlitz(p: int, n_max: int) -> dict:
    _odd_prime(p)
    reps = [carlitz_check(p, n) for n in range(1, n_max + 1)]
    return document("carlitz", {"p": p, "n_max": n_max}, [r.as_dict() for r in reps], all(r.passed for r in reps))


def cmd_homotopy(p: int, n: int) -> dict:
    _odd_prime(p)
    pat = HomotopyPattern(p)
    row = {
        "p": p,
        "n": n,
        "order": pat.order(n),
        "period": pat.period,
        "alpha1_degree": pat.alpha1_degree,
        "v1_degree": pat.v1_degree,
    }
    return document("homotopy", {"p": p, "n": n}, [row], True)


# ---------------------------------------------------------------------------
# text tables


def _table(headers: list[str], rows: list[list[Any]]) -> str:
    cells = [["-" if c is None else str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h) for i, h in enumerate(headers)]
    line = "  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()
    out = [line, "  ".join("-" * w for w in widths)]
    out += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(out)


def render_table(doc: dict) -> str:
    cmd, rows = doc["command"], doc["rows"]
    if cmd in ("values", "verify"):
        label = "numerator factorization" if rows and "factorization" in rows[0] else "numerator"
        headers = ["L-value", label, "denom", "#pi_2n", "#pi_2n-1", "ok"]
        body = [
            [
                f"L({r['argument']}, S/{r['p']}) = {r['value']}",
                r.get("factorization", r["numerator"]),
                r["denominator"],
                r["order_pi_2n"],
                r["order_pi_2n_minus_1"],
                "yes" if r["passed"] else "NO",
            ]
            for r in rows
        ]
        text = _table(headers, body)
    elif cmd == "carlitz":
        body = [
            [r["n"], r["value"], r["branch"], ",".join(k for k, v in r["checks"].items() if v), "yes" if r["passed"] else "NO"]
            for r in rows
        ]
        text = _table(["n", "L(1-n, S/p)", "branch", "checks passed", "ok"], body)
    elif cmd == "congruence":
        body = [[r["j"], r["k"], r["a"], r["nu_p_a_diff"], r["nu_p_c"], r["nu_p_c_diff"]] for r in rows]
        text = _table(["j", "k", "a_j", "nu(a_j+1 - a_j)", "nu(c_j)", "nu(c_j+1 - c_j)"], body)
    else:
        keys = list(rows[0]) if rows else []
        for r in rows[1:]:
            keys += [k for k in r if k not in keys]
        text = _table(keys, [[r.get(k, "") for k in keys] for r in rows])
    footer = [f"status: {doc['status']}"] + [f"note: {n}" for n in doc.get("notes", [])]
    return text + "\n" + "\n".join(footer)


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--cache-path", default=None, help="JSON cache of generalized Bernoulli numbers")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="moorezeta",
        description="Special values of L(s, S/p) and the KU-local Moore spectrum.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("values", parents=[common], help="table of L(1-n, S/p)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n-max", type=int, default=8)
    sp.add_argument("--factor-bound", type=int, default=10**6)

    sp = sub.add_parser("verify", parents=[common], help="denominators vs homotopy orders")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n-max", type=int, default=40)

    sp = sub.add_parser("euler", parents=[common], help="truncated Euler product of L(s, S/p)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--s", type=float, default=2.0)
    sp.add_argument("--prime-bound", type=int, default=10**6)
    sp.add_argument("--split", choices=("character", "primitive_root"), default="character")
    sp.add_argument("--dps", type=int, default=None, help="use mpmath at this many digits")

    sp = sub.add_parser("functional", parents=[common], help="functional equation cross-check")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--prime-bound", type=int, default=10**6)
    sp.add_argument("--tol", type=float, default=1e-4)

    sp = sub.add_parser("probability", parents=[common], help="coprimality probability")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--prime-bound", type=int, default=10**6)
    sp.add_argument("--tol", type=float, default=1e-4)
    sp.add_argument("--samples", type=int, default=None, help="run Monte Carlo with this many tuples")
    sp.add_argument("--range", dest="range_bound", type=int, default=10**6)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("congruence", parents=[common], help="p-adic convergence along 1 - p^j (p-1)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--j-max", type=int, default=2)

    sp = sub.add_parser("carlitz", parents=[common], help="Carlitz congruence and integrality checks")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n-max", type=int, default=24)

    sp = sub.add_parser("homotopy", parents=[common], help="#pi_n(L_KU S/p)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    return parser


def _dispatch(args: argparse.Namespace) -> dict:
    c = args.command
    if c == "values":
        return cmd_values(args.p, args.n_max, args.factor_bound)
    if c == "verify":
        return cmd_verify(args.p, args.n_max, args.threads)
    if c == "euler":
        return cmd_euler(args.p, args.s, args.prime_bound, args.split, args.dps)
    if c == "functional":
        return cmd_functional(args.p, args.n, args.prime_bound, args.tol)
    if c == "probability":
        return cmd_probability(
            args.p, args.prime_bound, args.tol, args.samples, args.range_bound, args.seed, args.threads
        )
    if c == "congruence":
        return cmd_congruence(args.p, args.j_max)
    if c == "carlitz":
        return cmd_carlitz(args.p, args.n_max)
    if c == "homotopy":
        return cmd_homotopy(args.p, args.n)
    raise UsageError(f"unknown command {c}")  # pragma: no cover


def main(argv: list[str] | None = None, out: Callable[[str], Any] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    write = out or (lambda s: print(s))
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    if args.cache_path:
        log.info("loaded %d cached Bernoulli numbers", load_cache(args.cache_path))
    try:
        doc = _dispatch(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"moorezeta: error: {exc}", file=sys.stderr)
        return 2
    if args.cache_path:
        save_cache(args.cache_path)
    write(json.dumps(doc, indent=2, ensure_ascii=False) if args.format == "json" else render_table(doc))
    return 0 if doc["status"] == "pass" else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
