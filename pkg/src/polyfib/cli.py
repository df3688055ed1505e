"""Command-line interface.

Exit codes:
    0  success
    1  ``verify``: the supplied identity is false
    2  usage error, unparsable polynomial or malformed JSON
    3  invalid sequence parameters
    4  an identity generated here failed its own check (internal error)
    5  ``family`` requested for a non-degenerate sequence
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from .closed_form import ClosedFormTriple, NonDegenerateError, family_sample, general_triple
from .emit import FORMATS, ParseError, parse_poly, render_identity, render_triples, table_triples
from .exact import Poly
from .sequence import PRESETS, InvalidParams, SeqParams, classify
from .verify import VerificationError, verify_triple

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_PARAMS = 3
EXIT_INTERNAL = 4
EXIT_UNIQUE = 5

GATE_N = 100
VERIFY_N = 300

SUBCOMMANDS = ("gen", "verify", "table", "classify", "family")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class CliConfig:
    subcommand: str
    params: SeqParams | None
    poly_text: str | None = None
    d_max: int | None = None
    n_max: int | None = None
    count: int | None = None
    format: str = "latex"
    seed: int | None = None
    input: str | None = None


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyfib",
        description="Closed forms for 2*sum_{k=1..n} P(k) s_{k-1} over generalized Fibonacci sequences.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def seq_args(p):
        g = p.add_argument_group("sequence parameters")
        g.add_argument("--preset", choices=sorted(PRESETS))
        for name in ("a", "b", "c0", "c1"):
            g.add_argument(f"--{name}", type=int)

    def fmt(p, default="latex"):
        p.add_argument("--format", choices=FORMATS, default=default)

    p = sub.add_parser("gen", help="closed form for one weight polynomial")
    seq_args(p)
    p.add_argument("--poly", required=True, help='weight polynomial in k, e.g. "k^2 + 3k - 1/2"')
    p.add_argument("--n-max", type=_positive, default=GATE_N)
    fmt(p)

    p = sub.add_parser("table", help="closed forms for k^d, d = 0..d_max")
    seq_args(p)
    p.add_argument("--d-max", type=_nonnegative, required=True)
    fmt(p)

    p = sub.add_parser("classify", help="report whether closed forms are unique")
    seq_args(p)
    fmt(p, default="text")

    p = sub.add_parser("family", help="sample the triple family of a degenerate sequence")
    seq_args(p)
    p.add_argument("--poly", required=True)
    p.add_argument("--count", type=_positive, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=_positive, default=GATE_N)
    fmt(p)

    p = sub.add_parser("verify", help="check a triple JSON against brute-force sums")
    p.add_argument("input", nargs="?", default="-", help="triple JSON file, '-' for stdin")
    p.add_argument("--n-max", type=_positive, default=VERIFY_N)
    fmt(p, default="json")
    return parser


def _params(ns) -> SeqParams:
    values = dict(zip(("a", "b", "c0", "c1"), PRESETS[ns.preset])) if ns.preset else {}
    for name in ("a", "b", "c0", "c1"):
        v = getattr(ns, name)
        if v is not None:
            values[name] = v
    missing = [f"--{n}" for n in ("a", "b", "c0", "c1") if n not in values]
    if missing:
        raise CliError(f"missing sequence parameters: {', '.join(missing)} (or use --preset)",
                       EXIT_PARAMS)
    try:
        return SeqParams(**values)
    except InvalidParams as exc:
        raise CliError(f"invalid parameters: {exc}", EXIT_PARAMS) from None


def config_from_args(ns) -> CliConfig:
    params = None if ns.subcommand == "verify" else _params(ns)
    return CliConfig(
        subcommand=ns.subcommand,
        params=params,
        poly_text=getattr(ns, "poly", None),
        d_max=getattr(ns, "d_max", None),
        n_max=getattr(ns, "n_max", None),
        count=getattr(ns, "count", None),
        format=ns.format,
        seed=getattr(ns, "seed", None),
        input=getattr(ns, "input", None),
    )


def _weight(cfg: CliConfig) -> Poly:
    try:
        return parse_poly(cfg.poly_text)
    except ParseError as exc:
        raise CliError(f"cannot parse polynomial {cfg.poly_text!r}: {exc}", EXIT_USAGE) from None


def _gate(t: ClosedFormTriple, n_max: int):
    report = verify_triple(t, n_max)
    if not report.ok:
        raise CliError(f"internal error: {VerificationError(t, report)}", EXIT_INTERNAL)


def cmd_gen(cfg: CliConfig, out) -> int:
    P = _weight(cfg)
    t = general_triple(P, cfg.params)
    _gate(t, cfg.n_max or GATE_N)
    print(render_identity(t, cfg.format), file=out)
    return EXIT_OK


def cmd_table(cfg: CliConfig, out) -> int:
    try:
        triples = table_triples(cfg.params, cfg.d_max)
    except VerificationError as exc:
        raise CliError(f"internal error: {exc}", EXIT_INTERNAL) from None
    print(render_triples(triples, cfg.format), file=out)
    return EXIT_OK


_CONSEQUENCE = {
    "non_degenerate": "both seed-root alignments are nonzero, so the closed-form triple is unique",
    "degenerate_j1": "2c1 = j1*c0, so there are infinitely many closed-form triples",
    "degenerate_j2": "2c1 = j2*c0, so there are infinitely many closed-form triples",
}


def cmd_classify(cfg: CliConfig, out) -> int:
    cls = classify(cfg.params)
    if cfg.format == "json":
        print(json.dumps({**cls.to_json(), "params": cfg.params.to_json(),
                          "unique": not cls.degenerate}), file=out)
        return EXIT_OK
    print(f"kind: {cls.kind}", file=out)
    if cls.ratio_root is not None:
        print(f"ratio_root: {cls.to_json()['ratio_root']}", file=out)
    print(f"consequence: {_CONSEQUENCE[cls.kind]}", file=out)
    return EXIT_OK


def free_polynomials(canonical: Poly, count: int, seed: int | None) -> list[Poly]:
    """Distinct free polynomials; the first is ``canonical`` so the family starts at general_triple."""
    rng = random.Random(seed)
    out = [canonical]
    top = (canonical.degree or 0) + 1
    while len(out) < count:
        cand = Poly(rng.randint(-9, 9) for _ in range(rng.randint(0, top) + 1))
        if cand not in out:
            out.append(cand)
    return out


def cmd_family(cfg: CliConfig, out) -> int:
    P = _weight(cfg)
    base = general_triple(P, cfg.params)
    triples = []
    try:
        for free in free_polynomials(base.F, cfg.count, cfg.seed):
            t = family_sample(P, cfg.params, free)
            _gate(t, cfg.n_max or GATE_N)
            triples.append(t)
    except NonDegenerateError as exc:
        raise CliError(str(exc), EXIT_UNIQUE) from None
    print(render_triples(triples, cfg.format), file=out)
    return EXIT_OK


def _load_triples(source: str, stdin) -> list[ClosedFormTriple]:
    try:
        if source == "-":
            text = stdin.read()
        else:
            with open(source) as fh:
                text = fh.read()
        data = json.loads(text)
        items = data if isinstance(data, list) else [data]
        return [ClosedFormTriple.from_json(item) for item in items]
    except InvalidParams as exc:
        raise CliError(f"invalid parameters in triple: {exc}", EXIT_PARAMS) from None
    except OSError as exc:
        raise CliError(f"cannot read {source}: {exc}", EXIT_USAGE) from None
    except (ValueError, TypeError) as exc:
        raise CliError(f"malformed triple JSON: {exc}", EXIT_USAGE) from None


def cmd_verify(cfg: CliConfig, out, stdin=None) -> int:
    triples = _load_triples(cfg.input or "-", stdin or sys.stdin)
    reports = [verify_triple(t, cfg.n_max or VERIFY_N) for t in triples]
    if cfg.format == "json":
        payload = [r.to_json() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload), file=out)
    else:
        for r in reports:
            if r.ok:
                print(f"ok: identity holds for n = 1..{r.checked_n_max}", file=out)
            else:
                n, lhs, rhs = r.first_failure
                print(f"FAILED at n = {n}: lhs = {lhs}, rhs = {rhs}", file=out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FALSE


COMMANDS = {
    "gen": cmd_gen,
    "table": cmd_table,
    "classify": cmd_classify,
    "family": cmd_family,
}


def main(argv=None, out=None, err=None, stdin=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = config_from_args(ns)
        if cfg.subcommand == "verify":
            return cmd_verify(cfg, out, stdin)
        return COMMANDS[cfg.subcommand](cfg, out)
    except CliError as exc:
        print(f"polyfib {ns.subcommand}: {exc}", file=err)
        return exc.code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
