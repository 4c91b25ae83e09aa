"""Command line front end and the text/JSON/DOT renderings it uses.

    doreyrule algebra --family E --rank 6
    doreyrule orbit   --family D --rank 5 --node 2
    doreyrule fusings --family E --rank 6 --format table
    doreyrule prv     --family D --rank 5 --triple 2,2,2
    doreyrule qchar   --family D --rank 4 --node 1 --format dot
    doreyrule verify  --family A --rank 3

Exit status: 0 on success, 1 on domain errors, 2 when ``verify`` finds the
two sides of the correspondence disagree.
"""
from __future__ import annotations

import argparse
import json
import math
import re
import sys
from collections import deque

from .correspondence import TheoremReport, verify_theorem
from .dorey import FusingSolution, enumerate_fusings, prv_admissible
from .qchar import DEFAULT_MAX_MONOMIALS, FMFailure, Monomial, QCharacter, a_monomial, fm_qcharacter
from .root_system import (
    E6_LABELS,
    RootSystem,
    UnsupportedAlgebra,
    build_root_system,
    coxeter_orbit,
    fundamental_weight,
    plane_angle,
)

SCHEMA_VERSION = 1

_FACTOR = re.compile(r"Y\[(-?\d+),(-?\d+)\](?:\^(-?\d+))?$")


class DomainError(Exception):
    pass


# -- renderings ---------------------------------------------------------------


def render_monomial(m: Monomial) -> str:
    if m.is_one():
        return "1"
    parts = []
    for (i, r), e in m.factors:
        parts.append(f"Y[{i},{r}]" + ("" if e == 1 else f"^{e}"))
    return " ".join(parts)


def parse_monomial(text: str) -> Monomial:
    text = text.strip()
    if text == "1":
        return Monomial.one()
    factors = []
    for tok in text.split():
        match = _FACTOR.match(tok)
        if not match:
            raise ValueError(f"cannot parse monomial factor {tok!r}")
        i, r, e = match.groups()
        factors.append(((int(i), int(r)), int(e) if e else 1))
    return Monomial(factors)


def node_label(rs: RootSystem, i: int) -> str:
    if rs.name == "E6":
        return E6_LABELS[i]
    return str(i)


def _angle_units(rs: RootSystem, theta: float, as_float: bool = False) -> int | float:
    x = theta * rs.h / math.pi
    if as_float:
        return x
    k = round(x)
    return k if abs(x - k) < 1e-6 else x


def qcharacter_to_json(qc: QCharacter) -> dict:
    order = qc.ordered()
    index = {m: n for n, m in enumerate(order)}
    return {
        "schema_version": SCHEMA_VERSION,
        "algebra": qc.rs.name,
        "node": qc.node,
        "monomials": [
            {"factors": [[i, r, e] for (i, r), e in m.factors], "multiplicity": qc.monomials[m]}
            for m in order
        ],
        "edges": [[index[a], index[b], j, r] for a, b, j, r in qc.edges],
    }


def qcharacter_from_json(doc: dict) -> QCharacter:
    """Rebuild a q-character; lowerings are replayed along the edges."""
    algebra = doc["algebra"]
    rs = build_root_system(algebra[0], int(algebra[1:]))
    monos = [Monomial([((i, r), e) for i, r, e in rec["factors"]]) for rec in doc["monomials"]]
    head = Monomial.Y(doc["node"], 0)
    edges = [(monos[a], monos[b], j, r) for a, b, j, r in doc["edges"]]
    lowerings = {head: ()}
    out_edges: dict = {}
    for a, b, j, r in edges:
        out_edges.setdefault(a, []).append((b, j, r))
    queue = deque([head])
    while queue:
        m = queue.popleft()
        for b, j, r in out_edges.get(m, ()):
            if b in lowerings:
                continue
            if m / a_monomial(rs, j, r) != b:
                raise ValueError(f"edge {m} -> {b} is not a lowering by A[{j},{r}]")
            d = dict(lowerings[m])
            d[(j, r)] = d.get((j, r), 0) + 1
            lowerings[b] = tuple(sorted(d.items()))
            queue.append(b)
    missing = [m for m in monos if m not in lowerings]
    if missing:
        raise ValueError(f"monomials unreachable from the head: {missing[:3]}")
    mults = {m: rec["multiplicity"] for m, rec in zip(monos, doc["monomials"])}
    return QCharacter(rs, doc["node"], head, mults, {m: lowerings[m] for m in monos}, edges)


def fusing_to_json(rs: RootSystem, sol: FusingSolution, float_angles: bool = False) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "nodes": list(sol.nodes),
        "exponents": list(sol.exponents),
        "rapidity_exponents": list(sol.rapidity_exponents),
        "angles": [_angle_units(rs, a, float_angles) for a in sol.angles],
        "angle_unit": "pi/h",
    }


def report_to_json(report: TheoremReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "algebra": report.algebra,
        "matched": report.matched,
        "fusings": report.fusing_count,
        "quadratic_monomials": report.quadratic_count,
        "table": [
            {"configuration": [list(x) for x in key], "from_characters": c, "from_fusings": d}
            for key, c, d in report.table()
        ],
        "char_side": [
            {
                "configuration": [list(x) for x in key],
                "middle": rec["middle"],
                "monomial": render_monomial(rec["monomial"]),
            }
            for key in sorted(report.char_side)
            for rec in report.char_side[key]
        ],
        "dorey_side": [
            {
                "configuration": [list(x) for x in key],
                "nodes": list(rec["solution"].nodes),
                "exponents": list(rec["solution"].exponents),
                "orientation": rec["orientation"],
            }
            for key in sorted(report.dorey_side)
            for rec in report.dorey_side[key]
        ],
    }


def emit_json(obj, rs: RootSystem | None = None, float_angles: bool = False) -> str:
    """Serialize a q-character, report, or list of fusings (needs ``rs``)."""
    if isinstance(obj, QCharacter):
        doc = qcharacter_to_json(obj)
    elif isinstance(obj, TheoremReport):
        doc = report_to_json(obj)
    elif isinstance(obj, FusingSolution):
        doc = fusing_to_json(rs, obj, float_angles)
    else:
        doc = [fusing_to_json(rs, s, float_angles) for s in obj]
    return dumps(doc)


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def qcharacter_to_dot(qc: QCharacter) -> str:
    order = qc.ordered()
    index = {m: n for n, m in enumerate(order)}
    lines = [f'digraph "chi_q(V_{qc.node}) {qc.rs.name}" {{']
    for m in order:
        label = render_monomial(m)
        if qc.monomials[m] > 1:
            label += f" (x{qc.monomials[m]})"
        lines.append(f'  m{index[m]} [label="{label}"];')
    for a, b, j, r in qc.edges:
        lines.append(f'  m{index[a]} -> m{index[b]} [label="A[{j},{r}]^-1"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def qcharacter_table(qc: QCharacter) -> str:
    lines = [f"# chi_q(V_{{{qc.node},0}}) for {qc.rs.name}: {len(qc)} monomials, dimension {qc.dimension}"]
    for m in qc.ordered():
        lines.append(f"{qc.depth(m):4d}  {qc.monomials[m]:3d}  {render_monomial(m)}")
    return "\n".join(lines) + "\n"


def fusing_table(rs: RootSystem, fusings, unordered: bool = False, float_angles: bool = False) -> str:
    lines = [f"# Dorey fusings for {rs.name} (h = {rs.h}); angles in units of pi/h"]
    if unordered:
        seen = {}
        for sol in fusings:
            seen.setdefault(tuple(sorted(sol.nodes)), sol)
        lines.append("nodes")
        for key in sorted(seen):
            lines.append(" ".join(node_label(rs, i) for i in key))
        return "\n".join(lines) + "\n"
    lines.append(f"{'nodes':<16}{'powers':<14}{'rapidities':<16}angles")
    for sol in fusings:
        nodes = " ".join(node_label(rs, i) for i in sol.nodes)
        powers = " ".join(str(n) for n in sol.exponents)
        raps = " ".join(str(e) for e in sol.rapidity_exponents)
        angles = " ".join(str(_angle_units(rs, a, float_angles)) for a in sol.angles)
        lines.append(f"{nodes:<16}{powers:<14}{raps:<16}{angles}")
    return "\n".join(lines) + "\n"


def report_table(report: TheoremReport) -> str:
    lines = []
    for key, c, d in report.table():
        conf = " ".join(f"{i}@{e}" for i, e in key)
        status = "ok" if c and d else ("chi only" if c else "dorey only")
        lines.append(f"{conf:<28}{status}")
    verdict = "MATCH" if report.matched else "MISMATCH"
    lines.append(
        f"{report.fusing_count} fusings, {report.quadratic_count} quadratic monomials, {verdict}"
    )
    return "\n".join(lines) + "\n"


def algebra_text(rs: RootSystem) -> str:
    lines = [
        f"algebra {rs.name}",
        f"coxeter number {rs.h}",
        "cartan",
        *("  " + " ".join(f"{x:2d}" for x in row) for row in rs.cartan),
        "black " + " ".join(str(i) for i in sorted(rs.black)),
        "white " + " ".join(str(i) for i in sorted(rs.white)),
        "bar " + " ".join(f"{i}->{rs.bar[i]}" for i in rs.nodes),
        "coxeter element",
        *("  " + " ".join(f"{x:2d}" for x in row) for row in rs.coxeter_matrix),
    ]
    return "\n".join(lines) + "\n"


def algebra_json(rs: RootSystem) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "algebra": rs.name,
        "h": rs.h,
        "cartan": [list(r) for r in rs.cartan],
        "black": sorted(rs.black),
        "white": sorted(rs.white),
        "bar": {str(i): rs.bar[i] for i in rs.nodes},
        "coxeter_matrix": [list(r) for r in rs.coxeter_matrix],
    }


def orbit_rows(rs: RootSystem, i: int):
    lam = fundamental_weight(rs, i)
    return [
        {"power": n, "weight": list(mu), "angle": _angle_units(rs, plane_angle(rs, lam, mu))}
        for n, mu in enumerate(coxeter_orbit(rs, i))
    ]


# -- argument handling --------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="doreyrule", description="Coxeter orbits, Dorey fusings and q-characters.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats=("table", "json")):
        p.add_argument("--family", required=True)
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--format", choices=formats, default="table")
        p.add_argument("--e7", action="store_true", help="allow q-character work on E7")
        p.add_argument("--e8", action="store_true", help="allow q-character work on E8")
        return p

    common(sub.add_parser("algebra", help="root system data"))
    p = common(sub.add_parser("orbit", help="Coxeter orbit of a fundamental weight"))
    p.add_argument("--node", required=True, type=int)
    p = common(sub.add_parser("fusings", help="solutions of the fusing rule"))
    p.add_argument("--unordered", action="store_true", help="deduplicated node triples only")
    p.add_argument("--float-angles", action="store_true", help="print angles as floats in units of pi/h")
    p = common(sub.add_parser("prv", help="PRV admissibility of a node triple"))
    p.add_argument("--triple", required=True)
    p.add_argument("--max-orbit", type=int, default=1_000_000)
    p = common(sub.add_parser("qchar", help="q-character of a fundamental module"), ("table", "json", "dot"))
    p.add_argument("--node", required=True, type=int)
    p.add_argument("--max-monomials", type=int, default=DEFAULT_MAX_MONOMIALS)
    p = common(sub.add_parser("verify", help="check fusings against quadratic monomials"))
    p.add_argument("--max-monomials", type=int, default=DEFAULT_MAX_MONOMIALS)
    return parser


def _root_system(args) -> RootSystem:
    try:
        return build_root_system(args.family, args.rank)
    except UnsupportedAlgebra as exc:
        raise DomainError(str(exc)) from exc


def _check_node(rs: RootSystem, i: int) -> None:
    try:
        rs.check_node(i)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def _check_large(rs: RootSystem, args) -> None:
    if rs.name == "E7" and not args.e7:
        raise DomainError("q-characters of E7 are large; pass --e7 to proceed")
    if rs.name == "E8" and not args.e8:
        raise DomainError("q-characters of E8 are very large; pass --e8 to proceed")


def _run(args, out) -> int:
    rs = _root_system(args)
    cmd = args.command
    if cmd == "algebra":
        out.write(dumps(algebra_json(rs)) + "\n" if args.format == "json" else algebra_text(rs))
    elif cmd == "orbit":
        _check_node(rs, args.node)
        rows = orbit_rows(rs, args.node)
        if args.format == "json":
            out.write(dumps({"schema_version": SCHEMA_VERSION, "algebra": rs.name, "node": args.node, "orbit": rows}) + "\n")
        else:
            out.write(f"# Coxeter orbit of lambda_{args.node} in {rs.name}; angle in units of pi/h\n")
            for row in rows:
                out.write(f"{row['power']:3d}  {row['angle']!s:>4}  {' '.join(f'{x:3d}' for x in row['weight'])}\n")
    elif cmd == "fusings":
        fusings = enumerate_fusings(rs)
        if args.format == "json":
            if args.unordered:
                out.write(dumps(sorted({tuple(sorted(s.nodes)) for s in fusings})) + "\n")
            else:
                out.write(emit_json(fusings, rs, args.float_angles) + "\n")
        else:
            out.write(fusing_table(rs, fusings, args.unordered, args.float_angles))
    elif cmd == "prv":
        try:
            triple = tuple(int(x) for x in args.triple.split(","))
        except ValueError as exc:
            raise DomainError(f"bad triple {args.triple!r}") from exc
        if len(triple) != 3:
            raise DomainError(f"--triple needs three nodes, got {args.triple!r}")
        for i in triple:
            _check_node(rs, i)
        res = prv_admissible(rs, *triple, max_orbit=args.max_orbit)
        text = {True: "admissible", False: "not admissible", None: "not computed"}[res]
        if args.format == "json":
            out.write(dumps({"schema_version": SCHEMA_VERSION, "algebra": rs.name, "triple": list(triple), "admissible": res}) + "\n")
        else:
            out.write(f"{rs.name} {','.join(map(str, triple))}: {text}\n")
    elif cmd == "qchar":
        _check_node(rs, args.node)
        _check_large(rs, args)
        qc = fm_qcharacter(rs, args.node, max_monomials=args.max_monomials)
        if args.format == "json":
            out.write(emit_json(qc) + "\n")
        elif args.format == "dot":
            out.write(qcharacter_to_dot(qc))
        else:
            out.write(qcharacter_table(qc))
    elif cmd == "verify":
        _check_large(rs, args)
        report = verify_theorem(rs, max_monomials=args.max_monomials)
        out.write(emit_json(report) + "\n" if args.format == "json" else report_table(report))
        if not report.matched:
            char_only, dorey_only = report.mismatches()
            print(f"mismatch: characters only {char_only}, fusings only {dorey_only}", file=sys.stderr)
            return 2
    return 0


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args, out)
    except (DomainError, FMFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
