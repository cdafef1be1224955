"""Command-line front end.

Documents go to stdout, warnings and diagnostics to stderr.  Exit codes:
0 success or positive verdict, 1 negative verdict or unrealizable input,
2 malformed input, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import os
import random
import sys
from typing import Any, Sequence

from .core import DegreeSequence, DegreeSet
from .degset import degset_mirror_realize, kapoor_realize
from .detect import find_mirror_pairing
from .documents import (
    DocumentError,
    bipartite_document,
    bipartite_dot,
    document_to_bipartite,
    document_to_lgraph,
    lgraph_document,
    lgraph_dot,
    read_document,
    render_json,
    write_document,
)
from .errors import (
    BudgetExceeded,
    InvalidPairing,
    NotBigraphic,
    NotLoopGraphic,
)
from .lab import DEFAULT_BUDGET, bipp_mirr_report, enumerate_realizations, regular_survey
from .realize import (
    MirrorRealization,
    gale_ryser_check,
    hh_check,
    loop_realize,
    mirror_realize,
    realize_bigraphic,
    staircase,
)
from .transform import bipartite_complement, complement_pairing, fold_to_lgraph, kronecker_k2

BUDGET_ENV = "MIRRORGRAPHS_BUDGET"


class UsageError(Exception):
    pass


def parse_sequence(text: str) -> DegreeSequence:
    """Comma-separated non-negative ints, sorted non-increasing on input
    (with a warning when the input was out of order)."""
    values = []
    for pos, token in enumerate(text.split(",")):
        tok = token.strip()
        try:
            v = int(tok)
        except ValueError:
            raise UsageError(f"sequence token {pos} is not an integer: {tok!r}") from None
        if v < 0:
            raise UsageError(f"sequence token {pos} is negative: {v}")
        values.append(v)
    ordered = sorted(values, reverse=True)
    if ordered != values:
        print("warning: sequence was reordered to non-increasing", file=sys.stderr)
    return DegreeSequence(tuple(ordered))


def parse_set(text: str) -> DegreeSet:
    """Comma-separated distinct positive ints, sorted strictly decreasing."""
    values = []
    for pos, token in enumerate(text.split(",")):
        tok = token.strip()
        try:
            v = int(tok)
        except ValueError:
            raise UsageError(f"set token {pos} is not an integer: {tok!r}") from None
        if v <= 0:
            raise UsageError(f"set token {pos} must be positive: {v}")
        if v in values:
            raise UsageError(f"set token {pos} repeats the value {v}")
        values.append(v)
    return DegreeSet(tuple(sorted(values, reverse=True)))


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _side_swap(args: argparse.Namespace) -> bool | None:
    if args.side_swap is None:
        return None
    return args.side_swap == "true"


def _budget(args: argparse.Namespace) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{BUDGET_ENV} is not an integer: {env!r}") from None
    return DEFAULT_BUDGET


def _emit_graph(args: argparse.Namespace, doc: dict[str, Any]) -> None:
    if args.format == "dot":
        if doc["kind"] == "bipartite":
            g, pairing = document_to_bipartite(doc)
            sys.stdout.write(bipartite_dot(g, pairing))
        else:
            sys.stdout.write(lgraph_dot(document_to_lgraph(doc)))
    else:
        sys.stdout.write(write_document(doc))


def _require_json(args: argparse.Namespace, command: str) -> None:
    if args.format == "dot":
        raise UsageError(f"'{command}' has no DOT output; use --format json")


def _witness_figures(args, rows: list[tuple], header_graphs, stem: str) -> None:
    """Render PNGs and a CSV summary next to them; stdout stays untouched."""
    from .figures import save_witness_figures

    paths = save_witness_figures(header_graphs, args.figures, stem=stem)
    summary = os.path.join(args.figures, f"{stem}_summary.csv")
    with open(summary, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["index", "figure", "left_degrees", "right_degrees", "edges", "mirror", "pairing"]
        )
        for idx, row in enumerate(rows):
            writer.writerow([idx, os.path.basename(paths[idx]), *row])
    print(f"wrote {len(paths)} figures and {summary}", file=sys.stderr)


def _summary_row(g, mirror: bool | None, pairing) -> tuple:
    from .core import left_degrees, right_degrees

    verdict = "" if mirror is None else ("yes" if mirror else "no")
    return (
        " ".join(map(str, left_degrees(g))),
        " ".join(map(str, right_degrees(g))),
        g.edge_count(),
        verdict,
        " ".join(map(str, pairing)) if pairing is not None else "",
    )


def cmd_check(args: argparse.Namespace) -> int:
    p = parse_sequence(args.p)
    q = parse_sequence(args.q) if args.q is not None else p
    verdict = gale_ryser_check(p, q)
    if hh_check(p, q) != verdict:
        raise RuntimeError("bigraphic checks disagree; this is a bug")
    print("bigraphic" if verdict else "not bigraphic")
    if args.format == "json":
        doc = {"p": list(p), "q": list(q), "bigraphic": verdict}
        sys.stdout.write(render_json(doc))
    return 0 if verdict else 1


def cmd_realize(args: argparse.Namespace) -> int:
    p = parse_sequence(args.p)
    q = parse_sequence(args.q) if args.q is not None else p
    g = realize_bigraphic(p, q)
    _emit_graph(args, bipartite_document(g))
    return 0


def cmd_mirror(args: argparse.Namespace) -> int:
    m = mirror_realize(parse_sequence(args.p))
    _emit_graph(args, bipartite_document(m.graph, m.pairing))
    return 0


def cmd_loops(args: argparse.Namespace) -> int:
    h = loop_realize(parse_sequence(args.p))
    _emit_graph(args, lgraph_document(h))
    return 0


def cmd_detect(args: argparse.Namespace) -> int:
    _require_json(args, "detect")
    g, _ = document_to_bipartite(_read_bipartite_doc(args.file))
    pairing = find_mirror_pairing(g)
    print("mirror" if pairing is not None else "not mirror")
    if args.format == "json":
        doc: dict[str, Any] = {"mirror": pairing is not None}
        if pairing is not None:
            doc["pairing"] = list(pairing)
        sys.stdout.write(write_document(doc))
    return 0 if pairing is not None else 1


def _read_bipartite_doc(path: str) -> dict[str, Any]:
    doc = read_document(_read_file(path))
    if doc.get("kind") != "bipartite":
        raise DocumentError("expected a document of kind 'bipartite'")
    return doc


def cmd_fold(args: argparse.Namespace) -> int:
    g, pairing = document_to_bipartite(_read_bipartite_doc(args.file))
    if pairing is None:
        raise UsageError("fold requires a document with a pairing")
    try:
        m = MirrorRealization.build(g, pairing)
    except ValueError as exc:
        raise UsageError(f"pairing does not verify: {exc}") from None
    _emit_graph(args, lgraph_document(fold_to_lgraph(m)))
    return 0


def cmd_kron(args: argparse.Namespace) -> int:
    doc = read_document(_read_file(args.file))
    if doc.get("kind") != "lgraph":
        raise DocumentError("expected a document of kind 'lgraph'")
    h = document_to_lgraph(doc)
    m = kronecker_k2(h)
    _emit_graph(args, bipartite_document(m.graph, m.pairing))
    return 0


def cmd_complement(args: argparse.Namespace) -> int:
    g, pairing = document_to_bipartite(_read_bipartite_doc(args.file))
    if pairing is not None:
        try:
            m = MirrorRealization.build(g, pairing)
        except ValueError as exc:
            raise UsageError(f"pairing does not verify: {exc}") from None
        out = complement_pairing(m)
        _emit_graph(args, bipartite_document(out.graph, out.pairing))
    else:
        _emit_graph(args, bipartite_document(bipartite_complement(g)))
    return 0


def cmd_staircase(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise UsageError(f"order must be at least 1: {args.n}")
    m = staircase(args.n)
    _emit_graph(args, bipartite_document(m.graph, m.pairing))
    return 0


def cmd_kapoor(args: argparse.Namespace) -> int:
    g = kapoor_realize(parse_set(args.s))
    _emit_graph(args, lgraph_document(g.as_lgraph()))
    return 0


def cmd_degset(args: argparse.Namespace) -> int:
    m = degset_mirror_realize(parse_set(args.s))
    _emit_graph(args, bipartite_document(m.graph, m.pairing))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    _require_json(args, "enumerate")
    p = parse_sequence(args.p)
    q = parse_sequence(args.q) if args.q is not None else p
    classes = enumerate_realizations(p, q, _side_swap(args), _budget(args))
    docs = [bipartite_document(g) for g in classes]
    sys.stdout.write(_json_array(docs))
    if args.figures:
        triples = [(g, None, None) for g in classes]
        rows = [_summary_row(g, None, None) for g in classes]
        _witness_figures(args, rows, triples, "class")
    return 0


def _json_array(items: list[dict[str, Any]]) -> str:
    return render_json(items)


def cmd_report(args: argparse.Namespace) -> int:
    _require_json(args, "report")
    p = parse_sequence(args.p)
    report = bipp_mirr_report(p, _budget(args))
    doc = {
        "sequence": list(report.sequence),
        "bipp_count": report.bipp_count,
        "mirr_count": report.mirr_count,
        "witnesses": [
            {
                "graph": bipartite_document(w.graph),
                "mirror": w.mirror,
                "pairing": list(w.pairing) if w.pairing is not None else None,
            }
            for w in report.witnesses
        ],
    }
    sys.stdout.write(render_json(doc))
    if args.figures:
        triples = [(w.graph, w.mirror, w.pairing) for w in report.witnesses]
        rows = [_summary_row(w.graph, w.mirror, w.pairing) for w in report.witnesses]
        _witness_figures(args, rows, triples, "witness")
    return 0


def cmd_survey(args: argparse.Namespace) -> int:
    _require_json(args, "survey")
    if args.n < 0 or not 0 <= args.r <= args.n:
        raise UsageError(f"need 0 <= r <= n, got n={args.n} r={args.r}")
    results = regular_survey(args.n, args.r, _budget(args))
    docs = [
        {"graph": bipartite_document(g), "mirror": mirror} for g, mirror in results
    ]
    sys.stdout.write(_json_array(docs))
    if args.figures:
        triples = []
        rows = []
        for g, mirror in results:
            pairing = find_mirror_pairing(g) if mirror else None
            triples.append((g, mirror, pairing))
            rows.append(_summary_row(g, mirror, pairing))
        _witness_figures(args, rows, triples, "regular")
    return 0


def _common_flags(defaults: bool) -> argparse.ArgumentParser:
    # The subparser copies suppress their defaults so that a flag given
    # before the subcommand is not clobbered when the subcommand omits it.
    common = argparse.ArgumentParser(add_help=False)

    def dflt(v: Any) -> Any:
        return v if defaults else argparse.SUPPRESS

    common.add_argument("--format", choices=("json", "dot"), default=dflt("json"),
                        help="output format for graph documents")
    common.add_argument("--side-swap", choices=("true", "false"), default=dflt(None),
                        help="allow exchanging the two vertex sets in isomorphism tests")
    common.add_argument("--budget", type=int, default=dflt(None),
                        help=f"search node budget (default {DEFAULT_BUDGET}, env {BUDGET_ENV})")
    common.add_argument("--seed", type=int, default=dflt(None),
                        help="seed for randomized tooling; constructions are deterministic")
    common.add_argument("--figures", metavar="DIR", default=dflt(None),
                        help="write witness PNGs and a CSV summary to DIR (lab commands)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags(defaults=False)

    parser = argparse.ArgumentParser(
        prog="mirrorgraphs",
        description="Realize, transform, detect, and enumerate mirror bipartite graphs.",
        parents=[_common_flags(defaults=True)],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("check", cmd_check, "decide whether (P,Q) is bigraphic")
    sp.add_argument("p", metavar="P")
    sp.add_argument("q", metavar="Q", nargs="?", default=None)

    sp = add("realize", cmd_realize, "build a bipartite graph with degrees (P,Q)")
    sp.add_argument("p", metavar="P")
    sp.add_argument("q", metavar="Q", nargs="?", default=None)

    sp = add("mirror", cmd_mirror, "build a mirror realization of (P,P)")
    sp.add_argument("p", metavar="P")

    sp = add("loops", cmd_loops, "build a loop graph with degree sequence P")
    sp.add_argument("p", metavar="P")

    sp = add("detect", cmd_detect, "decide whether a bipartite graph is mirror")
    sp.add_argument("file", metavar="FILE")

    sp = add("fold", cmd_fold, "fold a mirror realization to its loop graph")
    sp.add_argument("file", metavar="FILE")

    sp = add("kron", cmd_kron, "product of a loop graph with a single edge")
    sp.add_argument("file", metavar="FILE")

    sp = add("complement", cmd_complement, "bipartite complement (pairing kept)")
    sp.add_argument("file", metavar="FILE")

    sp = add("staircase", cmd_staircase, "the unique realization of (n,...,1)")
    sp.add_argument("n", type=int)

    sp = add("kapoor", cmd_kapoor, "loop-free graph of order max+1 with degree set S")
    sp.add_argument("s", metavar="SET")

    sp = add("degset", cmd_degset, "mirror graph with degree set S on both sides")
    sp.add_argument("s", metavar="SET")

    sp = add("enumerate", cmd_enumerate, "all isomorphism classes realizing (P,Q)")
    sp.add_argument("p", metavar="P")
    sp.add_argument("q", metavar="Q", nargs="?", default=None)

    sp = add("report", cmd_report, "Bipp/Mirr counts and witnesses for (P,P)")
    sp.add_argument("p", metavar="P")

    sp = add("survey", cmd_survey, "r-regular balanced classes with mirror verdicts")
    sp.add_argument("n", type=int)
    sp.add_argument("r", type=int)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotBigraphic, NotLoopGraphic) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvalidPairing as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
