"""Command-line interface.

Exit codes: 0 success, 1 a violation or route disagreement, 2 a usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Iterator, TextIO

from .bridges import extract_certificate
from .decomposition import decompose_3connected
from .freeop import free_forbidden_stages
from .freeplanar import ROUTES, FreePlanarVerdict
from .generate import MAX_ENUMERATION, enumerate_graphs
from .graph import Graph, GraphError
from .graph6 import GraphFormatError, read_graphs, write_graph6
from .harness import RunConfig, format_reports, verify_theorems
from .isomorphism import GraphSet
from .planarity import is_planar_fast, kuratowski_certificate

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


@dataclass
class Emitter:
    """Writes text or jsonl records and tracks the exit status."""

    fmt: str = "text"
    out: TextIO = field(default_factory=lambda: sys.stdout)
    status: int = EXIT_OK

    def record(self, text: str, payload: dict) -> None:
        if self.fmt == "jsonl":
            self.out.write(json.dumps(payload, sort_keys=True) + "\n")
        else:
            self.out.write(text + "\n")

    def error(self, source: str, line: int | None, message: str, code: int) -> None:
        where = f"{source}:{line}" if line is not None else source
        self.record(f"error {where}: {message}",
                    {"error": message, "source": source, "line": line})
        self.status = max(self.status, code)


def _read_inputs(args, em: Emitter) -> Iterator[tuple[str, int, Graph]]:
    sources = list(args.inputs) or (["-"] if not args.graph else [])
    for literal in args.graph or []:
        for line, item in read_graphs(literal):
            if isinstance(item, GraphFormatError):
                em.error("--graph", None, str(item), EXIT_USAGE)
            else:
                yield "--graph", line, item
    for path in sources:
        try:
            text = sys.stdin.read() if path == "-" else open(path).read()
        except OSError as exc:
            em.error(path, None, str(exc), EXIT_USAGE)
            continue
        for line, item in read_graphs(text):
            if isinstance(item, GraphFormatError):
                em.error(path, line, str(item), EXIT_USAGE)
            else:
                yield path, line, item


def _verdict_payload(g: Graph, planar: bool, fp: FreePlanarVerdict) -> tuple[str, dict]:
    g6 = write_graph6(g)
    witness = fp.witness_text()
    text = f"{g6} {int(planar)} {int(fp.is_free_planar)} {fp.route}" + (f" {witness}" if witness else "")
    return text, {"graph6": g6, "planar": int(planar), "freeplanar": int(fp.is_free_planar),
                  "route": fp.route, "witness": witness or None}


def cmd_planar(args, em: Emitter) -> None:
    for _, _, g in _read_inputs(args, em):
        planar = is_planar_fast(g)
        fp = ROUTES["def"](g)
        if not planar:
            # the witness for a nonplanar graph is its Kuratowski minor
            fp = FreePlanarVerdict(False, "planar", kuratowski_certificate(g))
        else:
            fp = FreePlanarVerdict(fp.is_free_planar, "planar")
        em.record(*_verdict_payload(g, planar, fp))


def cmd_freeplanar(args, em: Emitter) -> None:
    for source, line, g in _read_inputs(args, em):
        planar = is_planar_fast(g)
        if args.method != "all":
            em.record(*_verdict_payload(g, planar, ROUTES[args.method](g)))
            continue
        verdicts = {name: fn(g) for name, fn in ROUTES.items()}
        values = {v.is_free_planar for v in verdicts.values()}
        if len(values) > 1:
            detail = " ".join(f"{k}={int(v.is_free_planar)}" for k, v in verdicts.items())
            em.error(source, line, f"route disagreement on {write_graph6(g)}: {detail}", EXIT_VIOLATION)
            continue
        # report the most informative witness: a minor model when one exists
        chosen = verdicts["minors"] if not values.pop() else verdicts["def"]
        text, payload = _verdict_payload(g, planar, FreePlanarVerdict(chosen.is_free_planar, "all", chosen.witness))
        em.record(text, payload)


def cmd_freeop(args, em: Emitter) -> None:
    members = GraphSet(g for _, _, g in _read_inputs(args, em))
    if em.status:
        return
    if not len(members):
        em.error("input", None, "empty obstruction set", EXIT_USAGE)
        return
    for it in range(1, args.iterations + 1):
        stages = free_forbidden_stages(members)
        members = stages.result
        graphs = [write_graph6(g) for g in members]
        if em.fmt == "jsonl":
            em.record("", {"iteration": it, "summary": stages.summary(), "graphs": graphs})
        else:
            em.out.write(f"# iteration {it}: {stages.summary()}\n")
            for g6 in graphs:
                em.out.write(g6 + "\n")


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        x, y = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"pair must look like 'x,y', got {text!r}")
    return x, y


def cmd_certify(args, em: Emitter) -> None:
    x, y = args.pair
    for source, line, g in _read_inputs(args, em):
        try:
            cert = extract_certificate(g, x, y)
        except GraphError as exc:
            em.error(source, line, str(exc), EXIT_USAGE)
            continue
        sets = {str(p): sorted(s) for p, s in enumerate(cert.model.branch_sets)}
        em.record(cert.to_text().rstrip("\n"),
                  {"graph6": write_graph6(g), "target": cert.target, "case": cert.case_used,
                   "cycle": list(cert.cycle), "branch_sets": sets})


def cmd_decompose(args, em: Emitter) -> None:
    for source, line, g in _read_inputs(args, em):
        try:
            tree = decompose_3connected(g)
        except GraphError as exc:
            em.error(source, line, str(exc), EXIT_USAGE)
            continue
        comps = [{"kind": c.kind, "vertices": list(c.vertices),
                  "edges": [[c.vertices[a], c.vertices[b]] for a, b in c.edges],
                  "virtual": list(c.virtual)} for c in tree.components]
        em.record(tree.report().rstrip("\n"), {"graph6": write_graph6(g), "components": comps})


def cmd_enumerate(args, em: Emitter) -> None:
    for g in enumerate_graphs(args.n, connected_only=args.connected):
        g6 = write_graph6(g)
        em.record(g6, {"graph6": g6})


def cmd_verify_theorems(args, em: Emitter) -> None:
    config = RunConfig("verify-theorems", (), args.max_n, args.jobs, args.cache_dir, args.format)
    reports = verify_theorems(config)
    em.out.write(format_reports(reports, args.format, args.timings))
    if any(not r.passed for r in reports):
        em.status = EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "jsonl"), default="text")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    inputs = argparse.ArgumentParser(add_help=False)
    inputs.add_argument("inputs", nargs="*", help="graph6 or edge-list files; '-' reads stdin")
    inputs.add_argument("--graph", action="append", help="a graph6 string given inline (repeatable)")

    p = argparse.ArgumentParser(prog="freeminor", description="Planarity, free-planarity and obstruction tools.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("planar", parents=[common, inputs], help="planarity verdicts")
    fp = sub.add_parser("freeplanar", parents=[common, inputs], help="free-planarity verdicts")
    fp.add_argument("--method", choices=("def", "minors", "structure", "all"), default="def")
    fo = sub.add_parser("freeop", parents=[common, inputs], help="forbidden minors of the free class")
    fo.add_argument("--iterations", type=int, default=1)
    ce = sub.add_parser("certify", parents=[common, inputs], help="reduced Kuratowski certificate")
    ce.add_argument("--pair", type=_parse_pair, required=True, help="the non-edge as x,y")
    sub.add_parser("decompose", parents=[common, inputs], help="3-connected components")
    en = sub.add_parser("enumerate", parents=[common], help="graphs up to isomorphism")
    en.add_argument("n", type=int)
    en.add_argument("--connected", action="store_true")
    vt = sub.add_parser("verify-theorems", parents=[common], help="exhaustive theorem checks")
    vt.add_argument("--max-n", type=int, default=7)
    vt.add_argument("--jobs", type=int, default=1)
    vt.add_argument("--cache-dir")
    vt.add_argument("--timings", action="store_true", help="include wall time in the report")
    return p


COMMANDS = {
    "planar": cmd_planar,
    "freeplanar": cmd_freeplanar,
    "freeop": cmd_freeop,
    "certify": cmd_certify,
    "decompose": cmd_decompose,
    "enumerate": cmd_enumerate,
    "verify-theorems": cmd_verify_theorems,
}


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    em = Emitter(args.format, out or sys.stdout)
    if args.command == "enumerate" and not 1 <= args.n <= MAX_ENUMERATION:
        em.error("n", None, f"enumeration supports 1..{MAX_ENUMERATION} vertices", EXIT_USAGE)
        return em.status
    if args.command == "verify-theorems" and (not 1 <= args.max_n <= MAX_ENUMERATION or args.jobs < 1):
        em.error("config", None, f"--max-n must lie in 1..{MAX_ENUMERATION} and --jobs must be positive", EXIT_USAGE)
        return em.status
    if args.command == "freeop" and args.iterations < 1:
        em.error("config", None, "--iterations must be positive", EXIT_USAGE)
        return em.status
    COMMANDS[args.command](args, em)
    return em.status


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
