"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 parse or invariant error,
3 when ``verify`` finds a violated property.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .bounds import evaluate_bounds
from .elementary import DEFAULT_CAP, TooLarge, charpoly_exact, det_exact, is_positive_mixed
from .graph import (
    InvariantViolation,
    Kind,
    MixedGraph,
    NotConnected,
    random_corpus,
    random_mixed,
    random_mixed_tree,
    reorient,
    reverse_at_vertex,
    structure,
)
from .matrices import hermitian_adjacency, hermitian_randic, randic_minus_one
from .spectra import char_poly_numeric, determinant, eigenvalues, energy, h_energy, hr_energy
from .verify import verify_graph

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _load(path: str) -> MixedGraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return io.parse(text)


def _cmd_info(args, out):
    g = _load(args.file)
    s = structure(g)
    bip = "no" if s.bipartition is None else " | ".join(
        "{" + ",".join(map(str, sorted(side))) + "}" for side in s.bipartition
    )
    out.write(
        f"n = {g.n}\n"
        f"edges = {len(g.edges)}\n"
        f"arcs = {len(g.arcs)}\n"
        f"degrees = {' '.join(map(str, g.degrees))}\n"
        f"components = {len(s.components)}\n"
        f"tree = {'yes' if s.is_tree else 'no'}\n"
        f"bipartition = {bip}\n"
        f"regular = {s.regular_degree if s.regular_degree is not None else 'no'}\n"
        f"isolated vertices = {'yes' if s.has_isolated else 'no'}\n"
        f"positive = {'yes' if is_positive_mixed(g) else 'no'}\n"
        f"R_-1 = {randic_minus_one(g)!r}\n"
    )


def _cmd_spectrum(args, out):
    g = _load(args.file)
    spec = eigenvalues(hermitian_adjacency(g) if args.hermitian else hermitian_randic(g))
    if args.json:
        out.write(io.dumps_json({"values": spec.values, "max_residual": spec.max_residual,
                                 "energy": energy(spec)}) + "\n")
    else:
        out.write("".join(f"{v!r}\n" for v in spec.values))


def _cmd_energy(args, out):
    g = _load(args.file)
    out.write(f"{h_energy(g) if args.hermitian else hr_energy(g)!r}\n")


def _cmd_charpoly(args, out):
    g = _load(args.file)
    if args.exact:
        coeffs = charpoly_exact(g, args.cap)
        text = ", ".join(f"a{k} = {c}" for k, c in enumerate(coeffs, start=1))
    else:
        coeffs = char_poly_numeric(hermitian_randic(g))
        text = ", ".join(f"a{k} = {c!r}" for k, c in enumerate(coeffs, start=1))
    out.write(text + "\n")


def _cmd_det(args, out):
    g = _load(args.file)
    if args.exact:
        out.write(f"{det_exact(g, args.cap)}\n")
    else:
        out.write(f"{determinant(hermitian_randic(g))!r}\n")


def _cmd_bounds(args, out):
    g = _load(args.file)
    report = evaluate_bounds(g)
    if args.json:
        out.write(io.dumps_json(report) + "\n")
        return
    out.write(
        f"n = {report.n}\nenergy = {report.energy!r}\nR_-1 = {report.R_minus_one!r}\n"
        f"p = {report.p!r}\nalpha = {report.alpha!r}\nbeta = {report.beta!r}\n"
        f"flat = {'yes' if report.flat else 'no'}\n"
    )
    out.write(f"{'name':<10} {'side':<6} {'quantity':<12} {'bound':>20} {'holds':>6} {'equality':>9}\n")
    for b in report.entries:
        if not b.applicable:
            out.write(f"{b.name:<10} {b.side:<6} {b.quantity:<12} {'n/a':>20} {'-':>6} {'-':>9}\n")
            continue
        eq = "yes" if b.equality_attained else "no"
        out.write(
            f"{b.name:<10} {b.side:<6} {b.quantity:<12} {b.bound_value:>20.12g} "
            f"{'yes' if b.holds else 'NO':>6} {eq:>9}\n"
        )


def _cmd_verify(args, out):
    if args.random:
        if args.file is not None:
            raise _UsageError("verify takes either FILE or --random, not both")
        if args.n is None or args.count is None or args.seed is None:
            raise _UsageError("verify --random needs --n, --count and --seed")
        graphs = random_corpus(args.count, args.n, args.n, args.seed, args.p, args.q)
    else:
        if args.file is None:
            raise _UsageError("verify needs FILE or --random")
        graphs = [_load(args.file)]
    results = [verify_graph(g, args.cap) for g in graphs]
    violations = sum(len(r.violations) for r in results)
    if args.json:
        out.write(io.dumps_json({"graphs": results, "violations": violations}) + "\n")
    else:
        single = len(results) == 1 and not args.random
        for i, r in enumerate(results):
            for c in r.checks:
                if single or c.status == "fail":
                    tag = {"pass": "PASS", "fail": "FAIL", "skip": "SKIP"}[c.status]
                    out.write(f"{tag} {c.name}" + (f"  ({c.detail})" if c.detail else "") + "\n")
            if r.violations and not single:
                out.write(f"graph {i} reproduces with:\n{r.graph}")
        n_checks = sum(1 for r in results for c in r.checks if c.status != "skip")
        out.write(f"checked {len(results)} graph(s), {n_checks} checks, {violations} violations\n")
    return EXIT_VIOLATION if violations else EXIT_OK


def _cmd_gen(args, out):
    if args.tree:
        g = random_mixed_tree(args.n, args.q, args.seed)
    else:
        g = random_mixed(args.n, args.p, args.q, args.seed)
    out.write(io.serialize(g))


def _cmd_transform(args, out):
    g = _load(args.file)
    if args.reverse_vertex is not None:
        g = reverse_at_vertex(g, args.reverse_vertex)
    else:
        u, v, mode = args.reorient
        try:
            pair = (int(u), int(v))
            kind = Kind.parse(mode)
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
        g = reorient(g, pair, kind)
    out.write(io.serialize(g))


def _probability(text: str) -> float:
    p = float(text)
    if not 0.0 <= p <= 1.0:
        raise argparse.ArgumentTypeError(f"{text} is not in [0, 1]")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hermrandic", description="Hermitian-Randić spectra and energies of mixed graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("info", help="structural summary")
    p.add_argument("file")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("spectrum", help="eigenvalues of R_H (or H)")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--hermitian", action="store_true", help="use H instead of R_H")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("energy", help="Hermitian-Randić energy (or Hermitian energy)")
    p.add_argument("file")
    p.add_argument("--hermitian", action="store_true")
    p.set_defaults(func=_cmd_energy)

    for name, func, what in (("charpoly", _cmd_charpoly, "characteristic polynomial"),
                             ("det", _cmd_det, "determinant")):
        p = sub.add_parser(name, help=f"{what} of R_H")
        p.add_argument("file")
        p.add_argument("--exact", action="store_true", help="exact rationals by enumeration")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration order cap")
        p.set_defaults(func=func)

    p = sub.add_parser("bounds", help="evaluate every energy bound")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("verify", help="check all identities, bounds and invariances")
    p.add_argument("file", nargs="?")
    p.add_argument("--random", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--p", type=_probability, default=0.5, help="pair probability")
    p.add_argument("--q", type=_probability, default=0.5, help="orientation probability")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="write a random mixed graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=_probability, default=0.5, help="pair probability")
    p.add_argument("--q", type=_probability, default=0.5, help="orientation probability")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--tree", action="store_true", help="uniform random labelled tree")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("transform", help="reorient a connection or reverse arcs at a vertex")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--reverse-vertex", type=int, metavar="V")
    group.add_argument("--reorient", nargs=3, metavar=("U", "V", "MODE"),
                       help="MODE is undirected, forward (U->V) or backward (V->U)")
    p.set_defaults(func=_cmd_transform)
    return parser


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        code = args.func(args, out)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (io.MGraphSyntaxError, InvariantViolation, NotConnected, TooLarge, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
