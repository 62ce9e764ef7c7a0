"""Command-line front end: ``ybx <subcommand> [options]``.

Exit codes: 0 success, 1 a mathematical check was falsified, 2 usage or
input error, 3 a resource guard or search bound was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import __version__
from .catalog import ParseError, enumerate_solutions, from_dict, parse, to_dict
from .errors import BoundExceeded, GuardExceeded, NonBijectiveError, NotApplicable
from .rewrite import (
    complete,
    is_binomial_skew_polynomial,
    is_pbw,
    normal_basis_gate,
    pbw_enumeration_search,
    relations_from_solution,
)
from .solution import Solution, detect_permutation_solution, validate
from .veronese import (
    dveronese_square_free_check,
    hilbert_check,
    permutation_veronese_check,
    presentation,
    presentations_agree,
    render_relation,
    verify_veronese_map,
)
from .words import decode, orbit_labels, render

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3
SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ybx", description="Involutive set-theoretic Yang-Baxter solutions and their Veronese subalgebras.")
    parser.add_argument("--version", action="version", version=f"ybx {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help: str, needs_input: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        if needs_input:
            src = p.add_mutually_exclusive_group(required=True)
            src.add_argument("--input", "-i", metavar="PATH", help="solution file, or - for stdin")
            src.add_argument("--table", metavar="JSON", help="inline r-table as an n x n array of [i,j] pairs")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    add("validate", "check the defining properties of r")
    add("orbits", "orbits of X^m and the normal monomials N_m").add_argument("--length", "-m", type=int, required=True)
    add("present", "defining relations of the Yang-Baxter algebra")
    add("groebner", "degree-bounded completion of the defining relations").add_argument(
        "--max-degree", type=int, default=4
    )
    add("pbw", "PBW and binomial skew polynomial tests").add_argument(
        "--search", action="store_true", help="also search all enumerations of X"
    )
    for name, help in (
        ("veronese", "d-Veronese solution and presentation"),
        ("kernel", "generators of the kernel of the Veronese map"),
        ("check", "run every applicable Veronese check"),
    ):
        add(name, help).add_argument("--d", type=int, required=True)
    p = add("enumerate", "all solutions of a small order", needs_input=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--canonical", action="store_true", help="one solution per relabeling class")
    return parser


def load_solution(args, stdin: TextIO) -> Solution:
    if args.table is not None:
        try:
            r = json.loads(args.table)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed --table JSON: {exc}") from exc
        if not isinstance(r, list):
            raise ParseError("--table must be a JSON array")
        return from_dict({"format": "ybx-solution-v1", "n": len(r), "r": r})
    if args.input == "-":
        return parse(stdin.read())
    try:
        return parse(Path(args.input).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {args.input}: {exc}") from exc


def _word(w) -> str:
    return render(w)


def _binomial(rel) -> str:
    return rel.render(arrow=" - ")


def cmd_validate(s: Solution, args):
    rep = validate(s)
    payload = rep.as_dict()
    lines = [f"{k}: {v}" for k, v in payload.items() if k not in ("fixed_points", "permutation")]
    lines.append("fixed_points: " + ", ".join(f"({a},{b})" for a, b in rep.fixed_points))
    if rep.permutation is not None:
        lines.append("permutation: " + " ".join(map(str, rep.permutation)))
    code = EXIT_OK if rep.is_solution else EXIT_FALSIFIED
    return payload, lines, code


def cmd_orbits(s: Solution, args):
    m = args.length
    if m < 0:
        raise UsageError("--length must be non-negative")
    groups: dict[int, list[int]] = {}
    if m == 0:
        groups[0] = [0]
    else:
        for code, label in enumerate(orbit_labels(s, m)):
            groups.setdefault(label, []).append(code)
    orbits = [[decode(c, s.n, m) for c in members] for _, members in sorted(groups.items())]
    normal = [o[0] for o in orbits]
    payload = {
        "length": m,
        "orbits": [{"min": list(o[0]), "members": [list(w) for w in o]} for o in orbits],
        "normal_monomials": [list(w) for w in normal],
    }
    lines = [f"{_word(o[0])}: " + " ".join(_word(w) for w in o) for o in orbits]
    lines.append(f"N_{m} ({len(normal)}): " + " ".join(_word(w) for w in normal))
    return payload, lines, EXIT_OK


def cmd_present(s: Solution, args):
    rels = relations_from_solution(s)
    payload = {"relations": [r.as_dict() for r in rels]}
    return payload, [_binomial(r) for r in rels], EXIT_OK


def cmd_groebner(s: Solution, args):
    if args.max_degree < 2:
        raise UsageError("--max-degree must be at least 2")
    sys_ = complete(relations_from_solution(s), args.max_degree)
    payload = {
        "rules": [r.as_dict() for r in sys_.rules],
        "complete_up_to": sys_.complete_up_to,
        "confluent": sys_.confluent,
    }
    lines = [r.render() for r in sys_.rules]
    status = "confluent" if sys_.confluent else f"degree bound {args.max_degree} reached without confluence"
    lines.append(f"complete_up_to: {sys_.complete_up_to} ({status})")
    return payload, lines, EXIT_OK


def cmd_pbw(s: Solution, args):
    gate = normal_basis_gate(s)
    payload = {
        "pbw": is_pbw(s),
        "binomial_skew_polynomial": is_binomial_skew_polynomial(s),
        "normal_basis_gate": gate.as_dict(),
    }
    if args.search:
        perm = pbw_enumeration_search(s)
        payload["search"] = list(perm) if perm is not None else None
    lines = [f"pbw: {payload['pbw']}", f"binomial_skew_polynomial: {payload['binomial_skew_polynomial']}"]
    lines += [f"gate.{k}: {v}" for k, v in gate.as_dict().items()]
    if args.search:
        found = payload["search"]
        lines.append("search: " + (" ".join(map(str, found)) if found is not None else "none"))
    code = EXIT_OK if gate.consistent else EXIT_FALSIFIED
    return payload, lines, code


def _require_d(args):
    if args.d < 2:
        raise UsageError("--d must be at least 2")


def cmd_veronese(s: Solution, args):
    _require_d(args)
    pres = presentation(s, args.d)
    data = pres.data
    sizes, expected = data.sizes(), data.expected_sizes()
    ok = sizes == expected and len(data.fixed_points()) == data.N
    payload = pres.as_dict()
    payload["rho"] = [[list(p) for p in row] for row in data.rho]
    payload["sets"] = {name: sorted(list(p) for p in getattr(data, name)) for name in ("H", "P", "C", "MV")}
    payload["cardinalities"] = {"observed": sizes, "expected": expected, "ok": ok}
    lines = [f"N = {data.N}"]
    lines += [f"w{k} = {_word(w)}" for k, w in pres.generators]
    for name in ("R_a", "R_b", "R_1a"):
        rels = getattr(pres, name)
        lines.append(f"{name} ({len(rels)}):")
        lines += ["  " + render_relation(r) for r in rels]
    lines.append("kernel:")
    lines += ["  " + render_relation(r, "y") for r in pres.kernel]
    lines += [f"|{k}| = {sizes[k]} (expected {expected[k]})" for k in sizes]
    return payload, lines, EXIT_OK if ok else EXIT_FALSIFIED


def cmd_kernel(s: Solution, args):
    _require_d(args)
    pres = presentation(s, args.d)
    payload = {"d": args.d, "N": pres.N, "kernel": [{"lhs": list(a), "rhs": list(b)} for a, b in pres.kernel]}
    return payload, [render_relation(r, "y") for r in pres.kernel], EXIT_OK


def cmd_check(s: Solution, args):
    _require_d(args)
    d = args.d
    results = []
    results.append(verify_veronese_map(s, d).as_dict())
    try:
        sq, consistent = dveronese_square_free_check(s, d)
        results.append({"name": "square_free_veronese", "ok": consistent, "applicable": True, "witness": None,
                        "details": {"veronese_square_free": sq}})
    except NotApplicable as exc:
        results.append({"name": "square_free_veronese", "ok": True, "applicable": False, "witness": None,
                        "details": {"reason": str(exc)}})
    if detect_permutation_solution(s) is not None:
        results.append(permutation_veronese_check(s, d).as_dict())
    else:
        results.append({"name": "permutation_veronese", "ok": True, "applicable": False, "witness": None,
                        "details": {"reason": "input is not a permutation solution"}})
    results.append(hilbert_check(s, range(1, 2 * d + 1)).as_dict())
    pres = presentation(s, d)
    results.append({"name": "presentations_agree", "ok": presentations_agree(pres), "applicable": True,
                    "witness": None, "details": {}})
    ok = all(r["ok"] for r in results if r["applicable"])
    lines = []
    for r in results:
        status = "n/a" if not r["applicable"] else ("ok" if r["ok"] else "FAILED")
        line = f"{r['name']}: {status}"
        if r["witness"] is not None:
            line += f" witness={json.dumps(r['witness'])}"
        lines.append(line)
    return {"d": d, "ok": ok, "checks": results}, lines, EXIT_OK if ok else EXIT_FALSIFIED


def cmd_enumerate(args):
    sols = enumerate_solutions(args.n, canonical=args.canonical)
    payload = {"n": args.n, "count": len(sols), "solutions": [to_dict(s) for s in sols]}
    lines = [json.dumps(to_dict(s)["r"], separators=(",", ":")) for s in sols]
    lines.append(f"count: {len(sols)}")
    return payload, lines, EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "orbits": cmd_orbits,
    "present": cmd_present,
    "groebner": cmd_groebner,
    "pbw": cmd_pbw,
    "veronese": cmd_veronese,
    "kernel": cmd_kernel,
    "check": cmd_check,
}


def emit(command: str, payload: dict, lines: list[str], fmt: str, out: TextIO) -> None:
    schema = f"ybx-{command}"
    if fmt == "json":
        doc = {"schema": schema, "version": SCHEMA_VERSION, **payload}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(f"# {schema} v{SCHEMA_VERSION}\n")
        for line in lines:
            out.write(line + "\n")


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "enumerate":
            payload, lines, code = cmd_enumerate(args)
        else:
            s = load_solution(args, stdin)
            payload, lines, code = COMMANDS[args.command](s, args)
    except SystemExit as exc:
        # --help and --version
        return int(exc.code or 0)
    except UsageError as exc:
        stderr.write(f"ybx: usage error: {exc}\n")
        return EXIT_USAGE
    except (ParseError, NonBijectiveError) as exc:
        stderr.write(f"ybx: input error: {exc}\n")
        return EXIT_USAGE
    except (GuardExceeded, BoundExceeded) as exc:
        stderr.write(f"ybx: limit reached: {exc}\n")
        return EXIT_GUARD
    emit(args.command, payload, lines, args.format, stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
