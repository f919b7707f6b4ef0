"""Command-line surface: every computation as a subcommand with a
machine-readable JSON envelope (schema 1) on stdout.

Exit codes: 0 success, 2 invalid input, 3 formula/oracle mismatch,
4 oracle non-stabilized.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from fractions import Fraction

from . import __version__
from .cohomology import (
    CyclicGModule,
    cohomology,
    indecomposable_module,
    make_module,
    module_invariants,
)
from .formulas import (
    RHInput,
    decomposition_solve,
    ferrero_lambda,
    fit_growth,
    kida_general,
    main_lambda,
    riemann_hurwitz,
)
from .oracle import ORACLE_ASSUMPTIONS, StabilizationError, h_minus, lambda_from_oracle
from .splitting import (
    FERMAT_PRIMES,
    primes_above_in_fermat_tower,
    splitting_in_Qn,
    stable_primes_above,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 3
EXIT_UNSTABLE = 4

FORMULA_ASSUMPTIONS = ("mu = 0", "base class number odd (Ichimura-Nakajima)")


class CommandError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _emit(command: str, inputs: dict, result: dict, assumptions: tuple,
          provenance: str, out=sys.stdout) -> None:
    doc = {
        "schema": 1,
        "version": __version__,
        "command": command,
        "inputs": inputs,
        "assumptions": list(dict.fromkeys(assumptions)),
        "provenance": provenance,
        "result": result,
    }
    out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


# ---------------------------------------------------------------------------
# lambda

def cmd_lambda(args, out) -> int:
    inputs = {"d": args.d, "base_prime": args.base_prime,
              "method": args.method, "max_level": args.max_level}
    results = {}
    if args.method in ("formula", "both"):
        if args.base_prime == 2:
            res = ferrero_lambda(args.d)
        else:
            res = main_lambda(args.d, args.base_prime)
        results["formula"] = {
            "lambda": res.lam,
            "breakdown": [list(t) for t in res.breakdown],
            "method": res.method,
        }
    if args.method in ("oracle", "both"):
        if args.base_prime != 2:
            raise CommandError("the analytic oracle only covers base prime 2")
        try:
            res = lambda_from_oracle(args.d, args.max_level,
                                     level_bound=max(args.max_level, 5))
        except StabilizationError as exc:
            raise CommandError(str(exc), EXIT_UNSTABLE)
        results["oracle"] = {"lambda": res.lam, "method": "oracle"}
    provenance = args.method
    if args.method == "both":
        agree = results["formula"]["lambda"] == results["oracle"]["lambda"]
        results["verdict"] = "agree" if agree else "mismatch"
        if not agree:
            _emit("lambda", inputs, results, FORMULA_ASSUMPTIONS + ORACLE_ASSUMPTIONS,
                  provenance, out)
            return EXIT_MISMATCH
    assumptions = FORMULA_ASSUMPTIONS if args.method == "formula" \
        else FORMULA_ASSUMPTIONS + ORACLE_ASSUMPTIONS
    _emit("lambda", inputs, results, assumptions, provenance, out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# splitting

def cmd_splitting(args, out) -> int:
    inputs = {"q": args.q, "base_prime": args.base_prime, "levels": args.levels}
    rows = []
    for n in range(args.levels + 1):
        if args.base_prime == 2:
            rep = splitting_in_Qn(args.q, n)
        else:
            rep = primes_above_in_fermat_tower(args.q, args.base_prime, n)
        rows.append({"n": n, "g": rep.g, "f": rep.f, "e": rep.e,
                     "degree": rep.field_degree})
    stable = stable_primes_above(args.q, args.base_prime)
    if args.format == "csv":
        out.write("n,g,f,e,degree\n")
        for r in rows:
            out.write(f"{r['n']},{r['g']},{r['f']},{r['e']},{r['degree']}\n")
        out.write(f"# stable_count,{stable}\n")
        return EXIT_OK
    _emit("splitting", inputs,
          {"table": rows, "stable_count": stable},
          ("e = 1 away from 2 in these towers",), "formula", out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# cohomology

def parse_presentation(text: str) -> CyclicGModule:
    """Presentation file: `p:`/`order:` scalars plus `action:` and
    `relations:` integer-grid sections (relations may be empty)."""
    p = order = None
    sections: dict[str, list[list[int]]] = {}
    current: list[list[int]] | None = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        key = key.strip().lower()
        if _ and key in ("p", "order", "action", "relations"):
            rest = rest.strip()
            if key == "p":
                p = int(rest)
                current = None
            elif key == "order":
                order = int(rest)
                current = None
            else:
                current = sections.setdefault(key, [])
                if rest:
                    current.append([int(t) for t in rest.split()])
        else:
            if current is None:
                raise CommandError(f"unexpected line in presentation: {raw!r}")
            current.append([int(t) for t in line.split()])
    if p is None or order is None or "action" not in sections:
        raise CommandError("presentation needs p, order, and an action grid")
    action = sections["action"]
    r = len(action)
    if any(len(row) != r for row in action):
        raise CommandError("action grid must be square")
    relations = sections.get("relations", [])
    if relations and len(relations) != r:
        raise CommandError("relations grid must have one row per generator")
    if not relations:
        relations = [[] for _ in range(r)]
    k = 0
    o = order
    while o > 1:
        if o % p != 0:
            raise CommandError("group order must be a power of p")
        o //= p
        k += 1
    if k == 0:
        raise CommandError("group order must be at least p")
    try:
        return make_module(p, k, relations, action)
    except ValueError as exc:
        raise CommandError(str(exc))


def cmd_cohomology(args, out) -> int:
    if args.builtin:
        module = indecomposable_module(args.p, args.builtin)
        inputs = {"builtin": args.builtin, "p": args.p}
    else:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as exc:
            raise CommandError(f"cannot read presentation file: {exc}")
        module = parse_presentation(text)
        inputs = {"file": args.file}
    report = cohomology(module)
    torsion, free = module_invariants(module)
    _emit("cohomology", inputs,
          {
              "p": module.p,
              "group_order": module.group_order,
              "module_torsion": torsion,
              "module_free_rank": free,
              "h1_invariants": list(report.h1_invariants),
              "h2_invariants": list(report.h2_invariants),
              "chi": report.chi,
          },
          ("H^2 = M^G / N M and H^1 = ker N / (g-1)M for cyclic G",),
          "formula", out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# formula arithmetic commands

def cmd_rh(args, out) -> int:
    ram = _parse_int_list(args.ram) if args.ram else []
    try:
        data = RHInput(args.p, args.lambda_k, args.chi, tuple(ram))
    except ValueError as exc:
        raise CommandError(str(exc))
    value = riemann_hurwitz(data)
    _emit("rh", {"p": args.p, "lambda_k": args.lambda_k, "chi": args.chi,
                 "ram": ram},
          {"lambda_l": value}, ("mu_K = 0",), "formula", out)
    return EXIT_OK


def cmd_kida(args, out) -> int:
    try:
        value = kida_general(args.delta, args.tau, args.dim2, args.s)
    except ValueError as exc:
        raise CommandError(str(exc))
    _emit("kida", {"delta": args.delta, "tau": args.tau, "dim2": args.dim2,
                   "s": args.s},
          {"lambda_minus": value}, ("narrow mu = 0",), "formula", out)
    return EXIT_OK


def cmd_decompose(args, out) -> int:
    try:
        fam = decomposition_solve(args.p, args.lambda_k, args.chi, args.s)
    except ValueError as exc:
        raise CommandError(str(exc))
    _emit("decompose", {"p": args.p, "lambda_k": args.lambda_k,
                        "chi": args.chi, "s": args.s},
          {"family": [{"a": a, "b": b, "c": c} for a, b, c in fam.members],
           "lambda_l": fam.lambda_l},
          ("mu_K = 0",), "formula", out)
    return EXIT_OK


def cmd_fit(args, out) -> int:
    seq = _parse_int_list(args.seq)
    try:
        fit = fit_growth(args.p, seq)
    except ValueError as exc:
        raise CommandError(str(exc))
    _emit("fit", {"p": args.p, "seq": seq},
          {"lambda": fit.lam, "mu": fit.mu, "nu": fit.nu, "n0": fit.n0},
          ("exact trailing fit with >= 4 agreeing points",), "formula", out)
    return EXIT_OK


def cmd_hminus(args, out) -> int:
    rows = []
    for n in range(args.levels + 1):
        try:
            rep = h_minus(args.d, n, level_bound=max(args.levels, 5))
        except ValueError as exc:
            raise CommandError(str(exc))
        rows.append({"n": n, "h_minus": _frac(rep.h_minus), "ord2": rep.ord2,
                     "conductor": rep.conductor_lcm,
                     "characters": rep.character_count,
                     "q_ambiguity": rep.q_ambiguity})
    if args.format == "csv":
        out.write("n,h_minus,ord2,conductor,characters,q_ambiguity\n")
        for r in rows:
            out.write(f"{r['n']},{r['h_minus']},{r['ord2']},{r['conductor']},"
                      f"{r['characters']},{r['q_ambiguity']}\n")
        return EXIT_OK
    _emit("hminus", {"d": args.d, "levels": args.levels},
          {"table": rows}, ORACLE_ASSUMPTIONS, "oracle", out)
    return EXIT_OK


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise CommandError(f"not a comma-separated integer list: {text!r}")


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iwasawa2",
        description="lambda-invariants of cyclotomic Z_2-towers, with "
                    "exact analytic verification")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lambda", help="lambda via formula and/or oracle")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--base-prime", type=int, default=2, choices=FERMAT_PRIMES)
    p.add_argument("--method", choices=("formula", "oracle", "both"),
                   default="formula")
    p.add_argument("--max-level", type=int, default=4)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("splitting", help="prime decomposition up the tower")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--base-prime", type=int, default=2, choices=FERMAT_PRIMES)
    p.add_argument("--levels", type=int, default=6)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_splitting)

    p = sub.add_parser("cohomology", help="cohomology of a cyclic-group module")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--builtin", choices=("trivial", "regular", "augmentation"))
    grp.add_argument("--file", help="presentation file")
    p.add_argument("--p", type=int, default=2)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("rh", help="Riemann-Hurwitz lambda relation")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--lambda-k", type=int, required=True)
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--ram", default="", help="comma list of e(w) values")
    p.set_defaults(func=cmd_rh)

    p = sub.add_parser("kida", help="general minus-lambda arithmetic")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--dim2", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_kida)

    p = sub.add_parser("decompose", help="module decomposition family")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--lambda-k", type=int, required=True)
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("fit", help="fit Iwasawa growth parameters")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--seq", required=True, help="e_0,e_1,... comma list")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("hminus", help="relative class number table")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--levels", type=int, default=4)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_hminus)

    return parser


def main(argv: list[str] | None = None, out=sys.stdout) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
