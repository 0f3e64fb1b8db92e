"""Command-line interface.

Subcommands: construct, analyze, label, verify, radio-number,
check-sequence.  Exit codes: 0 success/OK, 1 violations or a proven
negative, 2 search budget exhausted, 3 usage errors.  Node budgets come
from --budget, then the RADIOLAB_NODE_BUDGET environment variable, then
the built-in default; there is no randomness anywhere, so identical
invocations give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families
from .budget import TIMEOUT, default_node_budget
from .errors import BadParams, RadioLabError
from .graphcore import (
    Graph,
    antipodal,
    are_isomorphic,
    bipartition,
    complement,
    components,
    diameter,
    girth,
    regularity,
)
from .hamsearch import PathCertificate, find_hamiltonian_path, verify_certificate
from .radio import (
    NOT_RADIO_GRACEFUL,
    RADIO_GRACEFUL,
    RadioLabeling,
    analyze,
    label_from_antipodal_path,
    label_hexagon_cage,
    label_quadrangle_cage,
    labeling_from_json,
    labeling_to_json,
    radio_number_exact,
    singer_label_erq,
    singer_label_erq_complement,
    verify,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_TIMEOUT = 2
EXIT_USAGE = 3


# family name -> (arity, builder, numbering contract for the file header)
FAMILIES = {
    "complete": (1, families.complete, "vertices 0..n-1"),
    "cycle": (1, families.cycle, "vertices 0..n-1 around the cycle"),
    "path": (1, families.path, "vertices 0..n-1 along the path"),
    "complete-bipartite": (
        2,
        families.complete_bipartite,
        "part A = 0..a-1, part B = a..a+b-1",
    ),
    "tadpole": (
        2,
        families.tadpole,
        "cycle 0..m-1, path m..m+n-1, joined by edge (0, m)",
    ),
    "petersen": (
        0,
        families.petersen,
        "vertices are the 2-subsets of {0..4} in lexicographic order, adjacent iff disjoint",
    ),
    "hoffman-singleton": (
        0,
        families.hoffman_singleton,
        "5h+j is pentagon h vertex j; 25+5i+j is pentagram i vertex j",
    ),
    "pg-incidence": (
        1,
        families.projective_plane_incidence,
        "points 0..q^2+q in canonical order, lines follow in the same order; "
        "point i on line j iff their triples are orthogonal",
    ),
    "gq-incidence": (
        1,
        families.generalized_quadrangle_incidence,
        "points 0..N-1 in canonical order, lines N..2N-1 sorted by point sets, "
        "N=(q+1)(q^2+1)",
    ),
    "erq": (
        1,
        families.erdos_renyi_polarity,
        "vertices are canonical projective-plane points, adjacent iff orthogonal",
    ),
    "singer": (
        1,
        families.singer_graph,
        "vertices 0..q^2+q; i~j iff i+j mod q^2+q+1 lies in the canonical "
        "difference set",
    ),
    "mms": (
        1,
        families.mms_graph,
        "vertex s*q^2 + a*q + b encodes (s,a,b) in Z2 x Fq x Fq",
    ),
    "cage-3-8": (0, lambda: families.builtin_graph("cage-3-8"), "bundled data file"),
    "cage-4-8": (0, lambda: families.builtin_graph("cage-4-8"), "bundled data file"),
    "cage-3-12": (0, lambda: families.builtin_graph("cage-3-12"), "bundled data file"),
}


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    if args.family not in FAMILIES:
        print(f"unknown family {args.family!r}; known: {', '.join(sorted(FAMILIES))}",
              file=sys.stderr)
        return EXIT_USAGE
    arity, builder, contract = FAMILIES[args.family]
    if len(args.params) != arity:
        print(f"family {args.family!r} takes {arity} parameter(s)", file=sys.stderr)
        return EXIT_USAGE
    g = builder(*args.params)
    header = [
        f"family: {args.family}"
        + ("" if not args.params else " " + " ".join(map(str, args.params))),
        f"numbering: {contract}",
    ]
    if args.complement:
        g = complement(g)
        header.append("complement of the family graph on the same vertices")
    header.append(f"vertices: {g.n}, edges: {g.num_edges}")
    if any(g.degree(v) == 0 for v in range(g.n)):
        print("warning: graph has isolated vertices, which an edge list "
              "cannot represent", file=sys.stderr)
    _write_or_print(families.write_edge_list(g, header), args.out)
    return EXIT_OK


def _quad_cage_profile(g: Graph) -> bool:
    parts = bipartition(g)
    if parts is None or regularity(g) is None:
        return False
    if 2 * sum(parts) != g.n:
        return False
    try:
        return diameter(g) == 4 and girth(g) == 8
    except RadioLabError:
        return False


def cmd_analyze(args) -> int:
    g = families.read_edge_list(args.graph)
    verdict = analyze(g, args.budget)
    status, rule = verdict.status, verdict.rule
    rn_lower, rn_upper = verdict.rn_lower, verdict.rn_upper
    labeling = verdict.certificate if isinstance(verdict.certificate, RadioLabeling) else None
    if g.n <= 12:
        # small graphs: the exact oracle closes the radio number outright
        rn, witness = radio_number_exact(g)
        rn_lower = rn_upper = rn
        if labeling is None:
            labeling = witness
        if status == "Unknown":
            status = RADIO_GRACEFUL if rn == g.n else NOT_RADIO_GRACEFUL
            rule = "exact-oracle"
    elif status == NOT_RADIO_GRACEFUL and _quad_cage_profile(g):
        # girth-8 cage inputs get the minimum-span gluing labeling, closing
        # the radio number exactly
        glued = label_quadrangle_cage(g, args.budget)
        if isinstance(glued, RadioLabeling):
            labeling = glued
            rn_upper = glued.span if rn_upper is None else min(rn_upper, glued.span)
    payload = verdict.to_json_dict()
    payload.update({
        "n": g.n,
        "diameter": diameter(g),
        "status": status,
        "rule": rule,
        "rn_lower": rn_lower,
        "rn_upper": rn_upper,
    })
    if labeling is not None:
        payload["labeling"] = list(labeling.labels)
        payload["labeling_span"] = labeling.span
    if args.json:
        sys.stdout.write(_dump_json(payload))
    else:
        hi = "?" if rn_upper is None else str(rn_upper)
        print(f"{status}; rule: {rule}; rn in [{rn_lower}, {hi}]")
        if labeling is not None:
            print(f"labeling span: {labeling.span}")
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(_dump_json(payload))
    return EXIT_OK if status != "Unknown" else EXIT_TIMEOUT


def _infer_singer_q(n: int) -> int:
    q = 1
    while q * q + q + 1 < n:
        q += 1
    if q * q + q + 1 != n:
        raise BadParams(
            f"{n} vertices is not q^2+q+1 for any q; not a polarity-graph order"
        )
    return q


def _transport_labels(target: Graph, g: Graph, labeling: RadioLabeling, budget):
    """Carry a labeling of ``target`` over to the isomorphic graph ``g``."""
    if target == g:
        return labeling
    mapping = are_isomorphic(target, g, budget)
    if mapping is TIMEOUT:
        return TIMEOUT
    if mapping is None:
        return None
    labels = [0] * g.n
    for v, image in enumerate(mapping):
        labels[image] = labeling.labels[v]
    return RadioLabeling(tuple(labels))


def cmd_label(args) -> int:
    g = families.read_edge_list(args.graph)
    method = args.method
    labeling = None
    if method == "auto":
        verdict = analyze(g, args.budget)
        if verdict.status == RADIO_GRACEFUL:
            labeling = verdict.certificate
        elif _quad_cage_profile(g):
            labeling = label_quadrangle_cage(g, args.budget)
        elif g.n <= 12:
            _, labeling = radio_number_exact(g)
        else:
            print(f"no labeling method applies ({verdict.status}; {verdict.rule})",
                  file=sys.stderr)
            return EXIT_NEGATIVE
    elif method == "antipodal-path":
        cert = find_hamiltonian_path(antipodal(g), args.budget)
        if cert is TIMEOUT:
            labeling = TIMEOUT
        elif cert is None:
            print("antipodal graph has no Hamiltonian path", file=sys.stderr)
            return EXIT_NEGATIVE
        else:
            labeling = label_from_antipodal_path(g, cert)
    elif method == "quad-glue":
        labeling = label_quadrangle_cage(g, args.budget)
    elif method == "hex-glue":
        labeling = label_hexagon_cage(g, args.budget)
    elif method in ("singer", "singer-complement"):
        q = _infer_singer_q(g.n)
        if method == "singer":
            target = families.singer_graph(q)
            base = singer_label_erq(q)
        else:
            target = complement(families.singer_graph(q))
            base = singer_label_erq_complement(q)
        labeling = _transport_labels(target, g, base, args.budget)
        if labeling is None:
            print("graph is not isomorphic to the Singer-construction target",
                  file=sys.stderr)
            return EXIT_NEGATIVE
    if labeling is TIMEOUT:
        print("search budget exhausted", file=sys.stderr)
        return EXIT_TIMEOUT
    assert isinstance(labeling, RadioLabeling)
    bad = verify(g, labeling)
    if bad:
        print(f"constructed labeling failed verification ({len(bad)} violations)",
              file=sys.stderr)
        return EXIT_NEGATIVE
    _write_or_print(labeling_to_json(g, labeling), args.out)
    if args.out:
        print(f"span {labeling.span} labeling written to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = families.read_edge_list(args.graph)
    n, diam, labeling = labeling_from_json(open(args.labels, encoding="ascii").read())
    if n != g.n:
        print(f"labeling is for {n} vertices, graph has {g.n}", file=sys.stderr)
        return EXIT_USAGE
    if diam != diameter(g):
        print(f"labeling file records diameter {diam}, graph has {diameter(g)}",
              file=sys.stderr)
        return EXIT_USAGE
    violations = verify(g, labeling)
    if args.json:
        sys.stdout.write(_dump_json({
            "ok": not violations,
            "violations": [list(v) for v in violations],
        }))
    elif not violations:
        print(f"OK: valid radio labeling with span {labeling.span}")
    else:
        print(f"{len(violations)} violating pair(s):")
        for u, v, slack in violations[:20]:
            print(f"  ({u}, {v}) slack {slack}")
    return EXIT_OK if not violations else EXIT_NEGATIVE


def cmd_radio_number(args) -> int:
    g = families.read_edge_list(args.graph)
    rn, witness = radio_number_exact(g, vertex_limit=args.limit)
    if args.json:
        sys.stdout.write(_dump_json({"rn": rn, "labels": list(witness.labels)}))
    else:
        print(rn)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(labeling_to_json(g, witness))
    return EXIT_OK


def cmd_check_sequence(args) -> int:
    g = families.read_edge_list(args.graph)
    tokens = open(args.sequence, encoding="ascii").read().split()
    try:
        seq = [int(t) for t in tokens]
    except ValueError:
        print("sequence file must contain only integers", file=sys.stderr)
        return EXIT_USAGE
    is_cycle = len(seq) > 1 and seq[0] == seq[-1]
    if is_cycle:
        seq = seq[:-1]
    if not is_cycle and args.power != 1:
        print("a non-cyclic sequence (no trailing repeat) only supports --power 1",
              file=sys.stderr)
        return EXIT_USAGE
    vertices = set(seq)
    if len(vertices) != len(seq):
        print("sequence repeats a vertex", file=sys.stderr)
        return EXIT_USAGE
    if vertices == set(range(g.n)):
        target, order = g, seq
    else:
        a = antipodal(g)
        match = [c for c in components(a) if set(c) == vertices]
        if not match:
            print("sequence is neither all vertices nor one antipodal component",
                  file=sys.stderr)
            return EXIT_USAGE
        target = a.induced_subgraph(match[0])
        index = {v: i for i, v in enumerate(match[0])}
        order = [index[v] for v in seq]
    kind = "cycle_power" if is_cycle else "path"
    cert = PathCertificate(tuple(order), kind, args.power if is_cycle else 1)
    ok = verify_certificate(target, cert)
    print("true" if ok else "false")
    return EXIT_OK if ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radiolab",
        description="Construct Moore-type graph families, analyze radio "
        "gracefulness, and build/verify radio labelings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="write a family graph as an edge list")
    p.add_argument("family", help=f"one of: {', '.join(sorted(FAMILIES))}")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--out", help="output file (default stdout)")
    p.add_argument("--complement", action="store_true",
                   help="write the complement instead")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="radio gracefulness verdict with bounds")
    p.add_argument("graph")
    p.add_argument("-o", "--out", help="write the certificate report as JSON")
    p.add_argument("--budget", type=int, default=None, help="search node budget")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("label", help="construct a radio labeling")
    p.add_argument("graph")
    p.add_argument("--method", default="auto",
                   choices=["auto", "antipodal-path", "quad-glue", "hex-glue",
                            "singer", "singer-complement"])
    p.add_argument("-o", "--out", help="output labeling file (default stdout)")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="check a labeling file against a graph")
    p.add_argument("graph")
    p.add_argument("labels")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("radio-number", help="exact radio number (small graphs)")
    p.add_argument("graph")
    p.add_argument("--limit", type=int, default=12, help="vertex limit")
    p.add_argument("-o", "--out", help="write an optimal labeling file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_radio_number)

    p = sub.add_parser("check-sequence",
                       help="validate a vertex sequence as a path or cycle power")
    p.add_argument("graph")
    p.add_argument("sequence")
    p.add_argument("--power", type=int, default=1)
    p.set_defaults(func=cmd_check_sequence)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "budget", None) is None and hasattr(args, "budget"):
        args.budget = default_node_budget()
    try:
        return args.func(args)
    except (RadioLabError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
