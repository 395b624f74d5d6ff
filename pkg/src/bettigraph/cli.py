"""Command-line front end.

Exit codes: 0 success, 1 domain failure (not realizable, not chordal, not in
the cone, inadmissible), 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

from bettigraph import __version__
from bettigraph.alhc import alhc_to_omega, decompose_module, is_alhc, omega_to_alhc
from bettigraph.bscore import BettiDiagram, bs_decompose, chordality_certificate, pure_diagram
from bettigraph.census import census_table, format_csv, format_table
from bettigraph.errors import BettiError, RangeError, ValidationError
from bettigraph.exact import fmt_rational
from bettigraph.graphs import (Graph, format_edge_list, froberg_vector, is_chordal,
                               parse_edge_list, parse_graph6)
from bettigraph.lattice import compare_duals, ehrhart_check, lattice_points_dilation
from bettigraph.threshold import (build_graph, reduction_chain, threshold_omega,
                                  threshold_representative)


@dataclass
class CommandResult:
    code: int
    text: str
    doc: dict | list | None = field(default=None)


class UsageError(Exception):
    pass


def _ints(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip() != ""]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {s!r}") from None


def _read_graph(path: str, graph6: bool) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from None
    return parse_graph6(text) if graph6 else parse_edge_list(text)


def _edges_text(g: Graph) -> str:
    return format_edge_list(g).rstrip("\n")


def _fmt_vec(v) -> str:
    return "[" + ", ".join(fmt_rational(x) for x in v) + "]"


# -- subcommands ----------------------------------------------------------------

def cmd_betti(args) -> CommandResult:
    g = _read_graph(args.graph, args.graph6)
    omega = froberg_vector(g)
    chordal = is_chordal(g)
    doc = {"vertices": g.k, "edges": [list(e) for e in g.edges()], "beta00": 1,
           "omega": omega, "chordal": chordal}
    lines = [f"vertices: {g.k}", f"omega: {omega}",
             BettiDiagram.from_omega(omega).format() if omega else "1"]
    if omega:
        cert = chordality_certificate(omega)
        doc["c"] = [fmt_rational(x) for x in cert.c]
        doc["certificate"] = str(cert)
        lines.append(f"c: {_fmt_vec(cert.c)}")
        lines.append(f"certificate: {cert}")
    lines.append(f"chordal: {'yes' if chordal else 'no'}")
    if omega and not any(omega):
        lines.append("note: complete graph; k[G] is the polynomial ring itself")
    elif not chordal:
        lines.append("note: omega is the Froberg count, not a Betti vector, for non-chordal graphs")
    return CommandResult(0, "\n".join(lines), doc)


def cmd_decompose(args) -> CommandResult:
    omega = _ints(args.omega)
    bs = bs_decompose(omega, args.m)
    lam = omega_to_alhc(omega)
    doc = bs.to_json(omega)
    doc.update({"lambda": list(lam.lam), "nonneg": bs.nonneg, "sums_to_m": bs.sums_to_m,
                "admissible": bs.admissible})
    text = "\n".join([
        f"omega: {omega}  beta00: {args.m}",
        f"c: {_fmt_vec(bs.c)}  (sum {fmt_rational(bs.total)})",
        f"lambda: {lam}",
        f"admissible: {'yes' if bs.admissible else 'no'}"
        + ("" if bs.admissible else
           f" ({'negative coefficient' if not bs.nonneg else 'wrong sum'})"),
    ])
    return CommandResult(0 if bs.admissible else 1, text, doc)


def cmd_threshold_rep(args) -> CommandResult:
    g = _read_graph(args.graph, args.graph6)
    word = threshold_representative(g)
    t = build_graph(word)
    doc = {"sequence": word, "vertices": t.k, "edges": [list(e) for e in t.edges()],
           "omega": threshold_omega(word)}
    text = f"sequence: {word}\nomega: {doc['omega']}\n{_edges_text(t)}"
    return CommandResult(0, text, doc)


def cmd_from_omega(args) -> CommandResult:
    omega = _ints(args.omega)
    word, chain = reduction_chain(omega)
    t = build_graph(word)
    doc = {"omega": omega, "sequence": word, "chain": chain,
           "vertices": t.k, "edges": [list(e) for e in t.edges()]}
    text = "\n".join([f"sequence: {word}",
                      "chain: " + " -> ".join(str(c) for c in chain),
                      _edges_text(t)])
    return CommandResult(0, text, doc)


def cmd_module_decompose(args) -> CommandResult:
    omega = _ints(args.omega)
    stats: dict = {}
    words = decompose_module(omega, args.m, stats)
    doc = [{"sequence": w, "omega": threshold_omega(w)} for w in words]
    text = "\n".join(f"{w}  {threshold_omega(w)}" for w in words)
    text += f"\nbacktracks: {stats.get('backtracks', 0)}"
    return CommandResult(0, text, {"omega": omega, "m": args.m, "summands": doc,
                                   "backtracks": stats.get("backtracks", 0)})


def cmd_alhc(args) -> CommandResult:
    vec = _ints(args.vector)
    if args.inverse:
        omega = alhc_to_omega(vec)
        valid = bool(vec) and vec[0] == 1 and is_alhc(vec, 1)
        doc = {"lambda": vec, "omega": omega, "valid": valid}
        text = f"lambda: {','.join(map(str, vec))}\nomega: {omega}\nlattice point of P_n: {valid}"
    else:
        img = omega_to_alhc(vec)
        doc = {"omega": vec, "lambda": list(img.lam), "valid": img.valid}
        text = f"omega: {vec}\nlambda: {img}\nlattice point of P_n: {img.valid}"
    return CommandResult(0, text, doc)


def cmd_pure(args) -> CommandResult:
    d = _ints(args.degrees)
    diag = pure_diagram(d)
    doc = {"degrees": d,
           "entries": [{"i": i, "j": j, "value": fmt_rational(v)}
                       for (i, j), v in sorted(diag.entries.items())]}
    return CommandResult(0, diag.format(), doc)


def cmd_census(args) -> CommandResult:
    rows = census_table(args.max)
    doc = [{"vertices": r.k, "chordal": r.chordal, "false_chordal": r.false_chordal,
            "not_chordal": r.not_chordal} for r in rows]
    text = format_csv(rows).rstrip("\n") if args.csv else format_table(rows)
    return CommandResult(0, text, doc)


def cmd_polytope(args) -> CommandResult:
    if args.which == "ehrhart":
        rep = ehrhart_check(args.n, args.t)
        text = (f"n={rep.n} t={rep.t}: {rep.count} lattice points, "
                f"expected (t+1)^n - t^n = {rep.expected}: {'PASS' if rep.passed else 'FAIL'}")
        return CommandResult(0 if rep.passed else 1, text, rep.to_json())
    if args.which == "reflexive":
        cmp = compare_duals(args.n)
        s = cmp.solved
        ok = s.integral and s.off_diagonal_ok
        lines = [f"n={args.n}: dual integral={s.integral}, "
                 f"off-diagonal all -1={s.off_diagonal_ok}: {'PASS' if ok else 'FAIL'}",
                 "product diagonal (solved): " + _fmt_vec(s.diagonal)]
        for i, j, a, b in cmp.differences:
            lines.append(f"closed-form dual differs at ({i},{j}): solved {a}, formula {b}")
        if args.full:
            lines.append("xi (solved):\n" + _matrix_text(s.xi))
            lines.append("xi (closed form):\n" + _matrix_text(cmp.formula))
            lines.append("product:\n" + _matrix_text(s.product))
        return CommandResult(0 if ok else 1, "\n".join(lines), cmp.to_json())
    # normal
    pts = lattice_points_dilation(args.n, args.t)
    failures = []
    for p in pts:
        try:
            decompose_module(alhc_to_omega(p), args.t)
        except BettiError:
            failures.append(p)
    ok = not failures
    text = (f"n={args.n} t={args.t}: {len(pts) - len(failures)}/{len(pts)} lattice points "
            f"split into {args.t} points of Q_n: {'PASS' if ok else 'FAIL'}")
    return CommandResult(0 if ok else 1, text,
                         {"n": args.n, "t": args.t, "points": len(pts),
                          "failures": [list(p) for p in failures], "pass": ok})


def _matrix_text(m) -> str:
    rows = [[fmt_rational(x) for x in r] for r in m]
    w = max((len(s) for r in rows for s in r), default=1)
    return "\n".join(" ".join(s.rjust(w) for s in r) for r in rows)


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a JSON document instead of text")
    common.add_argument("--graph6", action="store_true", default=argparse.SUPPRESS,
                        help="read graphs in graph6 instead of the edge-list format")

    p = argparse.ArgumentParser(prog="bettigraph", parents=[common],
                                description="Betti diagrams of 2-linear resolutions from graphs.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("betti", parents=[common], help="Froberg vector and Betti diagram of a graph")
    s.add_argument("graph", help="graph file, or - for stdin")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("decompose", parents=[common], help="Boij-Soederberg coefficients")
    s.add_argument("omega")
    s.add_argument("--m", type=int, default=1, help="beta_00 (default 1)")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("threshold-rep", parents=[common], help="threshold representative")
    s.add_argument("graph")
    s.set_defaults(func=cmd_threshold_rep)

    s = sub.add_parser("from-omega", parents=[common], help="threshold graph realizing omega")
    s.add_argument("omega")
    s.set_defaults(func=cmd_from_omega)

    s = sub.add_parser("module-decompose", parents=[common],
                       help="split a module Betti vector into m threshold graphs")
    s.add_argument("omega")
    s.add_argument("m", type=int)
    s.set_defaults(func=cmd_module_decompose)

    s = sub.add_parser("alhc", parents=[common], help="Betti vector <-> anti-lecture hall composition")
    s.add_argument("vector")
    s.add_argument("--inverse", action="store_true", help="map lambda back to omega")
    s.set_defaults(func=cmd_alhc)

    s = sub.add_parser("pure", parents=[common], help="pure diagram of a degree sequence")
    s.add_argument("degrees")
    s.set_defaults(func=cmd_pure)

    s = sub.add_parser("census", parents=[common], help="chordal / false chordal census")
    s.add_argument("--max", type=int, default=7)
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("polytope", parents=[common], help="lattice simplex checks")
    psub = s.add_subparsers(dest="which", required=True)
    e = psub.add_parser("ehrhart", parents=[common])
    e.add_argument("n", type=int)
    e.add_argument("t", type=int)
    r = psub.add_parser("reflexive", parents=[common])
    r.add_argument("n", type=int)
    r.add_argument("--full", action="store_true", help="print the matrices")
    nrm = psub.add_parser("normal", parents=[common])
    nrm.add_argument("n", type=int)
    nrm.add_argument("t", type=int)
    s.set_defaults(func=cmd_polytope)
    return p


def run(argv: Sequence[str] | None = None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult(int(exc.code or 0), "")
    args.json = getattr(args, "json", False)
    args.graph6 = getattr(args, "graph6", False)
    try:
        res = args.func(args)
    except (UsageError, ValidationError, RangeError) as exc:
        res = CommandResult(2, f"error: {exc}",
                            {"error": type(exc).__name__, "message": str(exc)})
    except BettiError as exc:
        res = CommandResult(1, f"{type(exc).__name__}: {exc}",
                            {"error": type(exc).__name__, "message": str(exc)})
    if args.json and res.doc is not None:
        res.text = json.dumps(res.doc, indent=2)
    return res


def main(argv: Sequence[str] | None = None) -> int:
    res = run(argv)
    if res.text:
        print(res.text, file=sys.stderr if res.code == 2 else sys.stdout)
    return res.code


if __name__ == "__main__":
    sys.exit(main())
