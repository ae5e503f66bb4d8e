"""Command-line front-end: one subcommand per construction or decider.

Results go to stdout as JSON. Exit status is 0 for any computed answer
(including "no" and "inconclusive"), 2 for bad input, 3 when a resource
budget was exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import blocks, embedding, extension, graphs, universal, words
from .extension import Budget, BudgetExceeded
from .graphs import Graph, GraphFormatError
from .words import WordSyntaxError

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3

DISPATCH_HELP = """\
dispatch tags (embed):
  clique-source                 a free abelian source embeds iff the target has a large enough clique
  clique-target                 a free abelian target only contains free abelian subgroups
  forest-source                 forest sources: embedding, tame embedding and extension
                                graph embedding are equivalent
  complement-of-forest-source   sources whose non-commutation graph is a forest: same equivalence
  triangle-free-target          triangle-free (two-dimensional) targets: same equivalence
  triangle-built-target         square- and P_3-free targets: same equivalence
dispatch tags (univ-eq):
  atomic-rigidity               atomic graphs: universally equivalent iff isomorphic
  deflation-triangle-sentence-separates
                                exactly one deflation is triangle-free; the universal sentence
                                "pairwise commuting non-trivial x, y, z have C(x)=C(y) or C(x)=C(z)"
                                holds in one group only
  triangle-free-deflation       universal equivalence iff mutual extension graph embeddings into
                                inflations (tame and extension graph embeddings coincide here)
  triangle-built                as above, for triangle-built graphs
Ball searches stop at --cap (default 3). The conjugator-length bound
4 K n^2 M^(K+1) (n^2 M for connected sources) is used with --full; it is
astronomically large, so --full usually ends in a budget trip (exit 3).
Iterated commutators are left-normed: [x1,...,xk] = [x1,...,x(k-1)]^-1 xk^-1 [x1,...,x(k-1)] xk.
"""


def _load_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from None
    return Graph.from_json(text)


def _budget(args) -> Budget:
    env = Budget.from_env()
    return Budget(
        args.budget_vertices if args.budget_vertices is not None else env.max_vertices,
        args.budget_conjugates if args.budget_conjugates is not None else env.max_conjugates,
    )


def _cap(args) -> int | None:
    return None if args.full else args.cap


def _add_search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cap", type=int, default=3, help="largest ball radius to search (default 3)")
    p.add_argument("--full", action="store_true", help="search up to the theoretical conjugator-length bound")
    p.add_argument("--join-split", action="store_true",
                   help="split a join target into factors when the source is disconnected")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcgroup",
        description="Decision procedures for partially commutative (right-angled Artin) groups.",
        epilog=DISPATCH_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="print a human-readable summary to stderr")
    common.add_argument("--budget-vertices", type=int, default=None,
                        help="cap on ball vertices (default 100000, env PCGROUP_BUDGET_VERTICES)")
    common.add_argument("--budget-conjugates", type=int, default=None,
                        help="cap on enumerated conjugates (default 5000000, env PCGROUP_BUDGET_CONJUGATES)")
    common.add_argument("--path-convention", choices=("edges", "vertices"), default="edges",
                        help="read P_3 in 'triangle-built' as a path with 3 edges (default) or 3 vertices")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def cmd(name, help):
        return sub.add_parser(name, help=help, parents=[common], epilog=DISPATCH_HELP,
                              formatter_class=argparse.RawDescriptionHelpFormatter)

    p = cmd("normalize", "canonical shortlex geodesic of a word")
    p.add_argument("--graph", required=True, help="graph JSON file")
    p.add_argument("--word", required=True, help='word such as "a b^-1 c"')

    p = cmd("conjugate", "decide whether two words are conjugate")
    p.add_argument("--graph", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--other", required=True, help="second word")

    p = cmd("blocks", "block decomposition with least roots")
    p.add_argument("--graph", required=True)
    p.add_argument("--word", required=True)

    p = cmd("centralizer", "generators of the centraliser of a word")
    p.add_argument("--graph", required=True)
    p.add_argument("--word", required=True)

    p = cmd("classify", "graph class predicates")
    p.add_argument("--graph", required=True)

    p = cmd("deflate", "deflation graph (equal closed stars identified)")
    p.add_argument("--graph", required=True)

    p = cmd("inflate", "n-inflation graph")
    p.add_argument("--graph", required=True)
    p.add_argument("-n", type=int, required=True, help="copies per vertex (>= 1)")

    p = cmd("ball", "ball of the extension graph with vertex provenance")
    p.add_argument("--graph", required=True)
    p.add_argument("--radius", type=int, required=True)

    p = cmd("ege", "is the source an induced subgraph of the target's extension graph?")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    _add_search_flags(p)

    p = cmd("embed", "does G(source) embed in G(target)? (class dispatch)")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    _add_search_flags(p)

    p = cmd("univ-eq", "are G(source) and G(target) universally equivalent?")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--cap", type=int, default=3, help="largest ball radius to search (default 3)")
    p.add_argument("--full", action="store_true", help="search up to the theoretical bound")

    p = cmd("commutator-check", "iterated commutator triviality versus the connectivity criterion")
    p.add_argument("--graph", required=True)
    p.add_argument("--vertices", required=True, help='distinct vertices, e.g. "a c b"')
    return parser


def _word(g: Graph, text: str) -> words.Word:
    return words.parse_word(g, text)


def run(args) -> tuple[dict, int, str]:
    """Execute a parsed invocation; returns (result, exit status, summary)."""
    c = args.command
    if c in ("ege", "embed", "univ-eq"):
        src, tgt = _load_graph(args.source), _load_graph(args.target)
        if not len(src) or not len(tgt):
            raise GraphFormatError("both graphs must be non-empty")
    else:
        g = _load_graph(args.graph)

    if c == "normalize":
        w = words.normal_form(_word(g, args.word))
        return {"word": str(w)}, EXIT_OK, f"normal form: {w}"
    if c == "conjugate":
        ans = blocks.is_conjugate(_word(g, args.word), _word(g, args.other))
        return {"conjugate": ans}, EXIT_OK, f"conjugate: {ans}"
    if c == "blocks":
        d = blocks.block_decomposition(_word(g, args.word)).to_dict()
        return d, EXIT_OK, f"{len(d['blocks'])} block(s)"
    if c == "centralizer":
        w = _word(g, args.word)
        if words.is_trivial(w):
            raise WordSyntaxError("the centraliser of the identity is the whole group")
        d = blocks.centralizer_basis(w).to_dict()
        return d, EXIT_OK, "centraliser basis computed"
    if c == "classify":
        d = graphs.classify(g, args.path_convention).to_dict()
        return d, EXIT_OK, ", ".join(k for k, v in d.items() if v) or "no predicate holds"
    if c == "deflate":
        h = graphs.deflation(g)
        return h.to_dict(), EXIT_OK, f"deflation has {len(h)} vertices"
    if c == "inflate":
        if args.n < 1:
            raise GraphFormatError("-n must be at least 1")
        h = graphs.inflation(g, args.n)
        return h.to_dict(), EXIT_OK, f"inflation has {len(h)} vertices"
    if c == "ball":
        if args.radius < 0:
            raise GraphFormatError("--radius must be non-negative")
        b = extension.ball(g, args.radius, _budget(args))
        return b.to_dict(), EXIT_OK, f"ball of radius {args.radius}: {len(b)} vertices, {b.graph.edge_count()} edges"
    if c in ("ege", "embed"):
        fn = embedding.decide_ege if c == "ege" else embedding.decide_embedding
        kwargs = {"join_split": args.join_split}
        if c == "embed":
            kwargs["path_convention"] = args.path_convention
        v = fn(src, tgt, _cap(args), _budget(args), **kwargs)
        status = EXIT_BUDGET if v.budget_tripped else EXIT_OK
        return v.to_dict(src), status, f"{v.outcome.value} ({v.reason})"
    if c == "univ-eq":
        v = universal.decide_universal_equivalence(src, tgt, _cap(args), _budget(args), args.path_convention)
        status = EXIT_BUDGET if v.budget_tripped else EXIT_OK
        return v.to_dict(), status, f"{v.outcome.value} ({v.reason})"
    if c == "commutator-check":
        vs = args.vertices.split()
        comm = embedding.iterated_commutator(g, vs)
        nf = words.normal_form(comm)
        trivial = not len(nf)
        criterion = embedding.commutator_nontrivial_criterion(g, vs)
        d = {
            "commutator": str(comm),
            "normal_form": str(nf),
            "trivial": trivial,
            "criterion_nontrivial": criterion,
            "agree": trivial != criterion,
        }
        return d, EXIT_OK, f"trivial={trivial} criterion={criterion}"
    raise AssertionError(c)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, status, summary = run(args)
    except (GraphFormatError, WordSyntaxError, KeyError, ValueError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"pcgroup: error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(json.dumps({"error": "budget_exceeded", "message": str(exc), "radius": exc.radius}))
        print(f"pcgroup: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(json.dumps(result))
    if args.verbose:
        print(f"{args.command}: {summary}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
