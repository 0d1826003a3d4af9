"""Command line interface: ``polymat <command> ...``.

Exit codes: 0 verdict computed, 1 usage or parse error, 2 counterexample
found by ``verify``, 3 work budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import warnings

from . import decompose as dec
from .errors import BudgetExceeded, PolymatError
from .harness import SUITES, budget_from_env, run_suite
from .ideal import MonomialIdeal
from .linalg import parse_field
from .localize import monomial_localization
from .parse import ParseError, parse_ideal
from .polymatroid import is_polymatroidal
from .reisner import polarize, reisner_failure, stanley_reisner_complex
from .report import CHECKS, render_text, report
from .simplicial import reduced_homology_ranks

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE, EXIT_BUDGET = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_ideal(args) -> tuple[MonomialIdeal, str]:
    src = args.ideal
    if src == "-":
        text = sys.stdin.read()
    elif not src.lstrip().startswith(("(", "vars")) and os.path.isfile(src):
        with open(src, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = src
    names = args.vars.split(",") if args.vars else None
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        I = parse_ideal(text, vars=names)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return I, text


def _emit(args, doc: dict, text: str) -> None:
    print(json.dumps(doc, indent=2) if args.json else text)


def _names(I: MonomialIdeal, names: str) -> frozenset[int]:
    return I.vars.indices(s.strip() for s in names.split(",") if s.strip())


# -- commands -------------------------------------------------------------------

def cmd_parse(args) -> int:
    I, _ = _read_ideal(args)
    doc = {"vars": list(I.vars.names), "generators": [I.monomial_str(g) for g in I.gens], "text": I.to_text()}
    _emit(args, doc, I.to_text())
    return EXIT_OK


def cmd_decompose(args) -> int:
    I, _ = _read_ideal(args)
    I.require_proper("decompose")
    D = dec.primary_decomposition(I)
    irr = dec.irreducible_decomposition(I)
    doc = {
        "ideal": str(I),
        "primary": D.to_json()["components"],
        "irreducible": [str(c) for c in irr],
        "associated_primes": [str(p) for p in D.primes],
        "minimal_primes": [str(p) for p in dec.minimal_primes(I)],
        "unmixed": dec.is_unmixed(I),
        "equidimensional": dec.is_equidimensional(I),
    }
    if I.single_degree() is not None and is_polymatroidal(I):
        rest, s = dec.hv_presentation(I)
        doc["prime_power_presentation"] = {"primes": [str(pp) for pp in rest], "maximal_exponent": s}
    lines = [f"I = {I}", "primary components:"]
    lines += [f"  {p}: {Q}" for p, Q in zip(D.primes, D.components)]
    lines.append("irreducible components:")
    lines += [f"  {c}" for c in irr]
    lines.append("Ass: " + ", ".join(doc["associated_primes"]))
    lines.append("Min: " + ", ".join(doc["minimal_primes"]))
    lines.append(f"unmixed: {doc['unmixed']}, equidimensional: {doc['equidimensional']}")
    if "prime_power_presentation" in doc:
        pres = doc["prime_power_presentation"]
        parts = pres["primes"] + ([f"m^{pres['maximal_exponent']}"] if pres["maximal_exponent"] else [])
        lines.append("prime powers: " + " ∩ ".join(parts))
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_localize(args) -> int:
    I, _ = _read_ideal(args)
    if (args.kill is None) == (args.at is None):
        raise _UsageError("give exactly one of --kill or --at")
    if args.kill is not None:
        p = dec.MonomialPrime.killing(I.vars, _names(I, args.kill))
    else:
        p = dec.MonomialPrime(I.vars, _names(I, args.at))
    L = monomial_localization(I, p)
    doc = {"prime": str(p), "killed": sorted(I.vars.names[i] for i in p.killed),
           "localization": [I.monomial_str(g) for g in L.gens], "unit": L.is_unit()}
    _emit(args, doc, f"I({p}) = {L}")
    return EXIT_OK


def cmd_check(args) -> int:
    I, text = _read_ideal(args)
    chosen = [name for name in CHECKS if getattr(args, name.replace("-", "_"))]
    doc = report(I, chosen or None, field=parse_field(args.field), certificate=args.certificate, source=text)
    _emit(args, doc, render_text(doc))
    return EXIT_OK


def cmd_homology(args) -> int:
    I, _ = _read_ideal(args)
    field = parse_field(args.field)
    P, _ = polarize(I)
    K = stanley_reisner_complex(P)
    betti = reduced_homology_ranks(K, field)
    fail = reisner_failure(K, field)
    doc = {
        "polarization": [P.monomial_str(g) for g in P.gens],
        "vertices": list(P.vars.names),
        "facets": [sorted(P.vars.names[i] for i in F) for F in K.facets],
        "f_vector": K.f_vector(),
        "reduced_betti": {str(k - 1): b for k, b in enumerate(betti)},
        "cohen_macaulay": fail is None,
    }
    if fail is not None:
        doc["reisner_witness"] = {"face": sorted(P.vars.names[i] for i in fail[0]), "betti": fail[1]}
    lines = [f"polarization: {P}",
             "facets: " + ", ".join("{" + ",".join(F) + "}" for F in doc["facets"]),
             f"f-vector: {doc['f_vector']}",
             "reduced Betti numbers: " + ", ".join(f"H~_{k}={b}" for k, b in doc["reduced_betti"].items()),
             f"Cohen-Macaulay (Reisner, field {args.field}): {fail is None}"]
    if fail is not None:
        lines.append(f"  link of {doc['reisner_witness']['face']} has Betti numbers {fail[1]}")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.list:
        for name, suite in SUITES.items():
            print(f"{name:18s} {suite.description}")
        return EXIT_OK
    if not args.suite:
        raise _UsageError("--suite is required (or use --list)")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if any(name not in SUITES for name in names):
        raise _UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    budget = args.budget if args.budget is not None else budget_from_env()
    reports = [run_suite(name, n=args.n, d=args.d, budget=budget) for name in names]
    if args.json:
        doc = reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports]
        print(json.dumps(doc, indent=2))
    else:
        for r in reports:
            print(r.summary())
            for ce in r.counterexamples:
                print(f"  counterexample: {ce['detail']}\n    " + ce["ideal"].replace("\n", "\n    "))
    if any(r.failures for r in reports):
        return EXIT_COUNTEREXAMPLE
    if any(r.budget_exceeded for r in reports):
        return EXIT_BUDGET
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polymat", description="Monomial ideals: decompositions, polymatroids, CM tests.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def with_ideal(p):
        p.add_argument("ideal", help="ideal text, a file containing it, or - for stdin")
        p.add_argument("--vars", help="comma-separated variable names (overrides any header)")
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    with_ideal(sub.add_parser("parse", help="normalize an ideal"))
    with_ideal(sub.add_parser("decompose", help="primary and irreducible decomposition"))
    p = with_ideal(sub.add_parser("localize", help="monomial localization I(p)"))
    p.add_argument("--kill", help="variables set to 1, e.g. x3,x5")
    p.add_argument("--at", help="generators of the prime, e.g. x1,x2")

    p = with_ideal(sub.add_parser("check", help="structural verdicts (all when no flag is given)"))
    for name in CHECKS:
        p.add_argument(f"--{name}", action="store_true")
    p.add_argument("--certificate", action="store_true", help="include the codimension-one certificate")
    p.add_argument("--field", default="q", help="q, f2 or f<p> for the homological oracle")

    p = with_ideal(sub.add_parser("homology", help="Stanley-Reisner complex of the polarization"))
    p.add_argument("--field", default="q", help="q, f2 or f<p>")

    p = sub.add_parser("verify", help="run a theorem-verification suite")
    p.add_argument("--suite", help="suite name, or all")
    p.add_argument("--list", action="store_true", help="list the registered suites")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--budget", type=int, help="predicate evaluations (default $POLYMAT_BUDGET or 10^7)")
    p.add_argument("--json", action="store_true")
    return parser


COMMANDS = {"parse": cmd_parse, "decompose": cmd_decompose, "localize": cmd_localize,
            "check": cmd_check, "homology": cmd_homology, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except (_UsageError, PolymatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
