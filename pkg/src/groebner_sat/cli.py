"""``groebner-sat`` command-line front end.

Commands::

    solve   decide a DIMACS formula (exit 10 SAT, 20 UNSAT, 1 error)
    encode  print the polynomial encoding of a DIMACS formula
    gb      print the reduced Gröbner basis of polynomials read from text
    bench   decide seeded random 3-CNF instances and compare with brute force
    verify  check a stored basis against a DIMACS formula (exit 0 valid, 1 not)
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from groebner_sat.buchberger import STRATEGIES, BudgetExhausted, GroebnerBasis, groebner
from groebner_sat.cnf import DimacsError, brute_force_sat, evaluate_formula, parse_dimacs, random_3cnf
from groebner_sat.encoder import EncodingMode, encode_formula
from groebner_sat.polyring import (
    ExponentOverflowError,
    Ideal,
    MonomialOrder,
    PolynomialParseError,
    PolyRing,
    max_variable_index,
)
from groebner_sat.satdecide import DecideConfig, Status, decide, verify_unsat_certificate

EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_ERROR = 1


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _config(args, **overrides) -> DecideConfig:
    fields = dict(
        mode=args.mode,
        order=args.order,
        coprime=not args.no_criteria,
        chain=not args.no_criteria,
        use_precheck=not getattr(args, "no_precheck", False),
        extract_model=not getattr(args, "no_extract", False),
        strategy=args.strategy,
        budget=args.budget,
    )
    fields.update(overrides)
    return DecideConfig(**fields)


def _header(ring: PolyRing, mode=None) -> str:
    line = f"ring k={ring.nvars} order={ring.order}"
    return f"{line} mode={mode}" if mode is not None else line


def _parse_header(line: str) -> dict:
    out = {}
    for tok in line.split()[1:]:
        key, sep, val = tok.partition("=")
        if not sep or key not in ("k", "order", "mode"):
            raise CliError(f"malformed ring header {line!r}")
        out[key] = val
    return out


def read_polynomials(text: str, k: int | None, order: str):
    """Parse the polynomial text format: an optional ``ring`` header, then one
    polynomial per line. Blank lines and lines starting with ``c`` or ``#``
    are skipped."""
    header = {}
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#") or line == "c" or line.startswith("c "):
            continue
        if line.startswith("ring"):
            if header or lines:
                raise CliError("ring header must come first and only once")
            header = _parse_header(line)
            continue
        lines.append(line)
    try:
        if "k" in header:
            nvars = int(header["k"])
        elif k is not None:
            nvars = k
        else:
            nvars = max((max_variable_index(line) for line in lines), default=0)
        ring = PolyRing(nvars, MonomialOrder(header.get("order", order)))
    except ValueError as exc:
        raise CliError(f"bad ring header: {exc}") from None
    polys = []
    for line in lines:
        try:
            polys.append(ring.parse(line))
        except PolynomialParseError as exc:
            raise CliError(str(exc)) from None
    return ring, polys, header.get("mode")


def _status_line(d) -> str:
    return (
        f"c decided_by={d.decided_by} precheck={d.precheck} basis_size={d.basis_size}"
        f" pairs={d.stats.pairs_processed} coprime={d.stats.pairs_coprime} chain={d.stats.pairs_chain}"
    )


def cmd_solve(args) -> int:
    formula = parse_dimacs(_read(args.path))
    overrides = {"use_precheck": False} if args.cert_out else {}
    d = decide(formula, _config(args, **overrides))
    if args.records:
        print(json.dumps(d.record(timing=not args.no_timing)))
    else:
        print(d.status.value)
        if d.model is not None:
            print("v " + " ".join(map(str, [*d.model.to_literals(), 0])))
        print(_status_line(d))
    if args.cert_out and d.certificate is not None:
        with open(args.cert_out, "w", encoding="utf-8") as fh:
            fh.write(_header(d.certificate.ring, args.mode) + "\n")
            for p in d.certificate.polynomials:
                fh.write(f"{p}\n")
    return EXIT_SAT if d.status is Status.SAT else EXIT_UNSAT


def cmd_encode(args) -> int:
    formula = parse_dimacs(_read(args.path))
    ideal = encode_formula(formula, args.mode, args.order)
    print(_header(ideal.ring, args.mode))
    for g in ideal.generators:
        print(g)
    return 0


def cmd_gb(args) -> int:
    k = int(args.k) if args.k is not None else None
    ring, polys, mode = read_polynomials(_read(args.path), k, args.order)
    gb = groebner(
        Ideal(ring, tuple(polys)),
        strategy=args.strategy,
        coprime=not args.no_criteria,
        chain=not args.no_criteria,
        budget=args.budget,
    )
    print(_header(ring, mode))
    for p in gb.polynomials:
        print(p)
    return 0


def cmd_verify(args) -> int:
    if not args.cert:
        raise CliError("verify needs --cert PATH")
    formula = parse_dimacs(_read(args.path))
    ring, polys, mode = read_polynomials(_read(args.cert), formula.num_vars, args.order)
    config = _config(args, mode=mode or args.mode, order=ring.order)
    ok = verify_unsat_certificate(formula, GroebnerBasis(tuple(polys), ring, reduced=True), config)
    kind = "unsat" if len(polys) == 1 and polys[0] == 1 else "basis"
    print(f"{'VALID' if ok else 'INVALID'} {kind}")
    return 0 if ok else 1


def _range(text: str, name: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("-") if "-" in text[1:] else (text, "", text)
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise CliError(f"--{name} expects N or A-B, got {text!r}") from None
    if a > b or a < 0:
        raise CliError(f"--{name} range {text!r} is empty or negative")
    return a, b


def _bench_one(job):
    idx, formula, config, limit = job
    d = decide(formula, config)
    if formula.num_vars > limit:
        return idx, formula, d, None
    truth = brute_force_sat(formula, limit)
    ok = (d.status is Status.SAT) == (truth is not None)
    if ok and d.model is not None:
        ok = evaluate_formula(formula, d.model)
    return idx, formula, d, ("SAT" if truth is not None else "UNSAT", ok)


def cmd_bench(args) -> int:
    klo, khi = _range(args.k or "5", "k")
    nlo, nhi = _range(args.n or "15", "n")
    if klo < 3:
        raise CliError("bench generates 3-CNF and needs k >= 3")
    rng = random.Random(args.seed)
    jobs = []
    config = _config(args)
    for idx in range(args.count):
        k = rng.randint(klo, khi)
        n = rng.randint(nlo, nhi)
        jobs.append((idx, random_3cnf(k, n, rng), config, args.oracle_limit))
    print(
        f"c bench seed={args.seed} k={args.k or '5'} n={args.n or '15'} count={args.count}"
        f" mode={args.mode} order={args.order}"
    )
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_bench_one, jobs, chunksize=8))
    else:
        results = [_bench_one(job) for job in jobs]
    agree = checked = sat = 0
    for idx, formula, d, check in results:
        sat += d.status is Status.SAT
        if check is not None:
            checked += 1
            agree += check[1]
        if args.records:
            rec = {"instance": idx, "k": formula.num_vars, "n": len(formula.clauses)}
            rec.update(d.record(timing=not args.no_timing))
            rec["oracle"] = check[0] if check else None
            rec["agree"] = check[1] if check else None
            print(json.dumps(rec))
        else:
            verdict = "-" if check is None else ("ok" if check[1] else "MISMATCH")
            oracle = check[0] if check else "-"
            print(
                f"{idx} k={formula.num_vars} n={len(formula.clauses)} {d.status.value}"
                f" oracle={oracle} {verdict} basis_size={d.basis_size} pairs={d.stats.pairs_processed}"
            )
    print(f"c sat={sat} unsat={len(results) - sat}")
    print(f"agreement {agree}/{checked}")
    return 0 if agree == checked else 1


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--mode", choices=[m.value for m in EncodingMode], default="boolean")
    common.add_argument("--order", choices=[o.value for o in MonomialOrder], default="grevlex")
    common.add_argument("--strategy", choices=STRATEGIES, default="normal", help="critical pair selection")
    common.add_argument("--no-criteria", action="store_true", help="disable coprime and chain criteria")
    common.add_argument("--budget", type=int, default=None, help="max S-polynomial reductions per basis run")

    decision = _Parser(add_help=False)
    decision.add_argument("--no-precheck", action="store_true")
    decision.add_argument("--no-extract", action="store_true")
    decision.add_argument("--records", action="store_true", help="one JSON record per instance")
    decision.add_argument("--no-timing", action="store_true", help="report ms as null in records")

    parser = _Parser(prog="groebner-sat", description="Decide CNF satisfiability with Gröbner bases.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", parents=[common, decision], help="decide a DIMACS formula")
    p.add_argument("path", nargs="?", default="-")
    p.add_argument("--cert-out", metavar="PATH", help="write the reduced basis to PATH")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("encode", parents=[common], help="print the polynomial encoding")
    p.add_argument("path", nargs="?", default="-")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("gb", parents=[common], help="reduced Gröbner basis of text polynomials")
    p.add_argument("path", nargs="?", default="-")
    p.add_argument("--k", help="ring dimension when the input has no ring header")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("bench", parents=[common, decision], help="random 3-CNF agreement run")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", help="variables per instance, N or A-B (default 5)")
    p.add_argument("--n", help="clauses per instance, N or A-B (default 15)")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--oracle-limit", type=int, default=20, help="largest k checked by brute force")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", parents=[common], help="check a stored basis for a formula")
    p.add_argument("path", nargs="?", default="-")
    p.add_argument("--cert", metavar="PATH", help="basis file in the polynomial text format")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    try:
        return args.func(args)
    except (CliError, DimacsError, PolynomialParseError, BudgetExhausted, ExponentOverflowError, ValueError) as exc:
        print(f"groebner-sat: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
