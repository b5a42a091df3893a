"""Command line interface.

Exit codes: 0 success (and universally Koszul for ``check``), 1 a ``check``
verdict of not universally Koszul, 2 bad input, 3 anomalies found by
``enumerate``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .betti import DEFAULT_BETTI_CAP, FieldSpec, betti_table, is_linear_resolution
from .classify import certificate_to_dict, classify, witness_to_dict
from .corpus import Mode
from .errors import InputError
from .formats import emit_dot, emit_edgelist, emit_graph6, parse_edgelist, parse_graph6
from .recognize import PatternWitness, join_decompose
from .verify import default_jobs, run_verification

EXIT_OK = 0
EXIT_NOT_UK = 1
EXIT_INPUT = 2
EXIT_ANOMALY = 3

log = logging.getLogger("ukoszul")


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read_graphs(args) -> list:
    if args.graph is not None:
        text = args.graph
    elif args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    if args.format == "edgelist":
        return [parse_edgelist(text)]
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line.strip()))
        except InputError as exc:
            exc.line = lineno
            raise
    if not graphs:
        raise InputError("no graph in input")
    return graphs


def _emit(args, chunks: list[str]) -> None:
    text = "".join(chunks)
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj, many: bool) -> str:
    if many:
        return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def cmd_check(args) -> int:
    graphs = _read_graphs(args)
    many = len(graphs) > 1
    chunks = []
    code = EXIT_OK
    for g in graphs:
        c = classify(g, args.consequences, args.field, betti_cap=args.betti_cap)
        chunks.append(_dump(c.to_dict(), many))
        if not c.is_uk:
            code = EXIT_NOT_UK
    _emit(args, chunks)
    return code


def cmd_betti(args) -> int:
    graphs = _read_graphs(args)
    chunks = []
    for g in graphs:
        t = betti_table(g, args.field, cap=args.betti_cap)
        if args.json:
            d = t.to_dict()
            d["graph6"] = emit_graph6(g)
            d["linear"] = is_linear_resolution(t)
            chunks.append(_dump(d, len(graphs) > 1))
        else:
            head = f"{emit_graph6(g)}  field={t.field.tag}  linear={is_linear_resolution(t)}"
            chunks.append(head + "\n" + t.format() + "\n")
    _emit(args, chunks)
    return EXIT_OK


def cmd_decompose(args) -> int:
    graphs = _read_graphs(args)
    chunks = []
    for g in graphs:
        result = join_decompose(g)
        if isinstance(result, PatternWitness):
            d = {"graph6": emit_graph6(g), "witness": witness_to_dict(result)}
        else:
            d = {"graph6": emit_graph6(g), "certificate": certificate_to_dict(result)}
        chunks.append(_dump(d, len(graphs) > 1))
    _emit(args, chunks)
    return EXIT_OK


def cmd_convert(args) -> int:
    graphs = _read_graphs(args)
    if args.to == "edgelist" and len(graphs) > 1:
        raise InputError("edge-list output holds a single graph")
    chunks = []
    for g in graphs:
        if args.to == "g6":
            chunks.append(emit_graph6(g) + "\n")
        elif args.to == "edgelist":
            chunks.append(emit_edgelist(g))
        else:
            c = classify(g) if args.classify else None
            chunks.append(emit_dot(g, c))
    _emit(args, chunks)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    n_min = args.n if args.n is not None else args.n_min
    n_max = args.n if args.n is not None else args.n_max
    if n_min is None or n_max is None:
        raise InputError("give --n or both --n-min and --n-max")
    if args.mode == Mode.SAMPLE.value and args.samples is None:
        raise InputError("sample mode needs --samples")
    seed = args.seed if args.seed is not None else 0
    log.debug("verifying n=%d..%d mode=%s field=%s", n_min, n_max, args.mode, args.field)
    report = run_verification(n_min, n_max, args.mode, args.field, args.betti_up_to,
                              jobs=args.jobs, k=args.samples, seed=seed,
                              cross_field=args.cross_field)
    if args.out:
        out = Path(args.out)
        out.write_text(report.to_json() + "\n")
        out.with_suffix(".csv").write_text(report.to_csv())
    checks = ", ".join(f"{name}={c['passed']}/{c['failed']}/{c['skipped']}"
                       for name, c in report.checks.items())
    print(f"graphs={report.graphs} "
          + " ".join(f"{k}={v}" for k, v in report.counts.items())
          + f" anomalies={len(report.anomalies)}")
    print(f"checks (passed/failed/skipped): {checks}")
    print(f"wall_clock={report.wall_clock:.2f}s")
    return EXIT_OK if report.ok else EXIT_ANOMALY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ukoszul",
        description="Decide whether edge rings of graphs are universally Koszul, with certificates.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp, field=True):
        sp.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin")
        sp.add_argument("-g", "--graph", help="graph given inline instead of a file")
        sp.add_argument("--format", choices=["g6", "edgelist"], default="g6")
        sp.add_argument("--out", help="write output here instead of stdout")
        if field:
            sp.add_argument("--field", type=_field, default=FieldSpec(), help="q, gf2 or gfp:<p>")
            sp.add_argument("--betti-cap", type=int, default=DEFAULT_BETTI_CAP)

    sp = sub.add_parser("check", help="classify graphs")
    graph_input(sp)
    sp.add_argument("--consequences", action="store_true",
                    help="attach Betti table and complement chordality")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("betti", help="print graded Betti tables")
    graph_input(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_betti)

    sp = sub.add_parser("decompose", help="join certificate or blocking pattern")
    graph_input(sp, field=False)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("convert", help="convert between formats")
    graph_input(sp, field=False)
    sp.add_argument("--to", choices=["g6", "edgelist", "dot"], required=True)
    sp.add_argument("--classify", action="store_true", help="highlight the witness in DOT output")
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("enumerate", help="verify every graph of a corpus")
    sp.add_argument("--n", type=int)
    sp.add_argument("--n-min", type=int)
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.LABELED.value)
    sp.add_argument("--samples", type=int, help="graphs per n in sample mode")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--field", type=_field, default=FieldSpec())
    sp.add_argument("--betti-up-to", type=int, default=0)
    sp.add_argument("--cross-field", type=_field,
                    help="also compute Betti tables over this field and flag any difference")
    sp.add_argument("--jobs", type=int, default=default_jobs())
    sp.add_argument("--out", help="JSON report path; a CSV summary is written beside it")
    sp.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
