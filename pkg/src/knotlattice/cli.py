"""Command-line front end.

Exit codes: 0 success, 1 a check disagreed (Tait pair, batch expectations),
2 unreadable input, 3 precondition not met, 4 internal convention error,
5 enumeration bound exceeded.  Errors go to stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .diagram import Color, LinkDiagram, parse_gauss_signed, parse_pd
from .errors import InputError, KnotLatticeError
from .glform import preferred_coloring
from .lattice import (
    flow_lattice,
    is_irreducible,
    is_oriented_cycle,
    is_oriented_eulerian,
    is_simple,
    signature,
)
from .report import analyze, render_text
from .taitgraph import PlaneMultigraph, tait_graph
from .alternating import verify_tait_pair

EXIT_OK, EXIT_CHECK_FAILED = 0, 1


class FileNotFound(InputError):
    pass


class MalformedJson(InputError):
    pass


# -- input ---------------------------------------------------------------------

def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except FileNotFoundError:
        raise FileNotFound(f"no such file: {path}") from None
    except OSError as exc:
        raise FileNotFound(f"cannot read {path}: {exc.strerror}") from None


def diagram_from_text(text: str) -> LinkDiagram:
    """PD text, signed Gauss text, or JSON carrying ``pd`` / ``gauss``."""
    stripped = text.strip()
    if stripped.startswith(("{", "[")):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise MalformedJson(f"invalid JSON: {exc.msg}") from None
        if isinstance(data, dict) and "gauss" in data:
            return parse_gauss_signed(data["gauss"])
        if isinstance(data, dict) and isinstance(data.get("pd"), str):
            return parse_pd(data["pd"])
        return parse_pd(stripped)
    if stripped[:1] in ("O", "U"):
        return parse_gauss_signed(stripped)
    return parse_pd(stripped)


def _diagram(args) -> LinkDiagram:
    given = [x for x in (args.pd, args.gauss, args.file) if x is not None]
    if len(given) != 1:
        raise InputError("give exactly one of --pd, --gauss, --file")
    if args.pd is not None:
        return parse_pd(args.pd)
    if args.gauss is not None:
        return parse_gauss_signed(args.gauss)
    return diagram_from_text(_read(args.file))


def _json_arg(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedJson(f"{what} is not valid JSON: {exc.msg}") from None


def _emit(obj, as_json, out=None):
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        out.write(render_text(obj) + "\n")


# -- commands ----------------------------------------------------------------

def cmd_analyze(args):
    _emit(analyze(_diagram(args), require_reduced=args.require_reduced), args.json)
    return EXIT_OK


def cmd_tait_verify(args):
    D1 = diagram_from_text(_read(args.first))
    D2 = diagram_from_text(_read(args.second))
    report = verify_tait_pair(D1, D2, oriented=args.oriented)
    _emit(report.to_json(), args.json)
    return EXIT_OK if report.agrees else EXIT_CHECK_FAILED


def _graph(args) -> PlaneMultigraph:
    if args.graph is not None:
        text = _read(args.graph) if os.path.exists(args.graph) else args.graph
        return PlaneMultigraph.from_json(_json_arg(text, "--graph"))
    D = _diagram(args)
    return tait_graph(D, preferred_coloring(D), Color(args.color))


def cmd_lattice(args):
    if args.what == "signature" and args.matrix is not None:
        matrix = _json_arg(args.matrix, "--matrix")
        try:
            triple = signature(matrix)
        except (ValueError, TypeError) as exc:
            raise InputError(f"--matrix: {exc}") from None
        _emit({"signature": triple.to_json(), "sigma": triple.sigma}, args.json)
        return EXIT_OK
    G = _graph(args)
    F = flow_lattice(G)
    if args.what == "gram":
        out = {
            "rank": F.rank,
            "gram": [list(r) for r in F.gram],
            "basis": [list(b) for b in F.basis],
            "graph": json.loads(G.to_json()),
        }
    elif args.what == "signature":
        triple = signature(F.gram)
        out = {"signature": triple.to_json(), "sigma": triple.sigma,
               "definiteness": F.definiteness.value}
    else:
        if args.vector is None:
            raise InputError("lattice irreducible needs --vector")
        v = _json_arg(args.vector, "--vector")
        if not isinstance(v, list) or len(v) != G.n_edges or not all(isinstance(x, int) for x in v):
            raise InputError(f"--vector must be a list of {G.n_edges} integers")
        out = {
            "vector": v,
            "irreducible": is_irreducible(F, v),
            "simple": is_simple(F, v),
            "oriented_cycle": is_oriented_cycle(G, v),
            "oriented_eulerian": is_oriented_eulerian(G, v),
        }
    _emit(out, args.json)
    return EXIT_OK


# -- batch -------------------------------------------------------------------

_EXPECTED = {
    "sigma": "sigma_L",
    "xi": "xi_L",
    "alternating": "alternating",
    "reduced": "reduced",
    "c": "c",
    "writhe": "writhe",
}


def _same(expected, actual):
    if isinstance(expected, bool) or isinstance(actual, bool):
        return expected is actual
    try:
        return Fraction(str(expected)) == Fraction(str(actual))
    except (ValueError, ZeroDivisionError):
        return expected == actual


def run_entry(line_no: int, line: str) -> dict:
    """Analyze one corpus line; never raises."""
    out = {"line": line_no, "name": None}
    try:
        entry = json.loads(line)
        if not isinstance(entry, dict) or "pd" not in entry:
            raise MalformedJson("corpus entry needs a \"pd\" field")
        out["name"] = str(entry.get("name", f"line{line_no}"))
        pd = entry["pd"]
        D = parse_pd(pd) if isinstance(pd, str) else parse_pd(json.dumps(pd))
        report = analyze(D)
    except json.JSONDecodeError as exc:
        out.update(status="error", error={"error": "MalformedJson", "message": exc.msg})
        return out
    except KnotLatticeError as exc:
        out.update(status="error", error={"error": exc.name, "message": str(exc)})
        return out
    mismatches = {}
    for key, value in sorted(entry.get("expected", {}).items()):
        field = _EXPECTED.get(key)
        if field is None:
            mismatches[key] = {"expected": value, "actual": None}
        elif not _same(value, report.get(field)):
            mismatches[key] = {"expected": value, "actual": report.get(field)}
    out.update(status="mismatch" if mismatches else "ok", report=report)
    if mismatches:
        out["mismatches"] = mismatches
    return out


def _run_entry_args(item):
    return run_entry(*item)


def cmd_batch(args):
    lines = [(k + 1, line) for k, line in enumerate(_read(args.corpus).splitlines()) if line.strip()]
    if args.jobs > 1 and len(lines) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_entry_args, lines, chunksize=4))
    else:
        results = [run_entry(*item) for item in lines]
    results.sort(key=lambda r: (r["name"] or "", r["line"]))
    names = [r["name"] for r in results if r["name"] is not None]
    duplicates = sorted({n for n in names if names.count(n) > 1})
    summary = {
        "entries": len(results),
        "ok": sum(r["status"] == "ok" for r in results),
        "mismatched": [r["name"] for r in results if r["status"] == "mismatch"],
        "errors": [r["name"] or f"line{r['line']}" for r in results if r["status"] == "error"],
        "duplicate_names": duplicates,
    }
    if args.json:
        for r in results:
            _emit(r, True)
        _emit({"summary": summary}, True)
    else:
        for r in results:
            label = r["name"] or f"line{r['line']}"
            detail = ""
            if r["status"] == "mismatch":
                detail = " " + json.dumps(r["mismatches"], sort_keys=True)
            elif r["status"] == "error":
                detail = f" {r['error']['error']}: {r['error']['message']}"
            sys.stdout.write(f"{label}: {r['status']}{detail}\n")
        _emit({"summary": summary}, False)
    failed = summary["mismatched"] or summary["errors"] or duplicates
    return EXIT_CHECK_FAILED if failed else EXIT_OK


# -- parser ------------------------------------------------------------------

def _add_input(p):
    p.add_argument("--pd", help="PD text, e.g. 'X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]'")
    p.add_argument("--gauss", help="signed Gauss code, e.g. 'O1-U2-O3-U1-O2-U3-'")
    p.add_argument("--file", help="file holding PD text, a Gauss code, or JSON with a pd field")


def build_parser():
    parser = argparse.ArgumentParser(prog="knotlattice", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--norm-bound", type=int, default=None,
                        help="cap on lattice enumeration norms (env KNOTLATTICE_NORM_BOUND)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="chessboard forms, invariants and verdicts for one diagram")
    _add_input(p)
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--require-reduced", action="store_true",
                   help="fail with exit 3 if the diagram has a nugatory crossing")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("tait-verify", parents=[common], help="compare crossing number and writhe of two diagrams")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--oriented", dest="oriented", action="store_true", default=True,
                   help="compare writhes of the given orientations (default)")
    p.add_argument("--unoriented", dest="oriented", action="store_false",
                   help="compare writhes over all orientation classes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tait_verify)

    p = sub.add_parser("lattice", parents=[common], help="flow-lattice utilities")
    p.add_argument("what", choices=("gram", "signature", "irreducible"))
    _add_input(p)
    p.add_argument("--graph", help="plane multigraph JSON (inline or a file path)")
    p.add_argument("--matrix", help="symmetric integer matrix as JSON (signature only)")
    p.add_argument("--vector", help="edge vector as a JSON list (irreducible only)")
    p.add_argument("--color", choices=("white", "black"), default="white",
                   help="which Tait graph of a diagram to use")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("batch", parents=[common], help="analyze a JSONL corpus and check expected fields")
    p.add_argument("corpus")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    previous = os.environ.get("KNOTLATTICE_NORM_BOUND")
    if args.norm_bound is not None:
        # through the environment so batch worker processes see it too
        os.environ["KNOTLATTICE_NORM_BOUND"] = str(args.norm_bound)
    try:
        return args.func(args)
    except KnotLatticeError as exc:
        payload = {"error": exc.name, "message": str(exc), "exit_code": exc.exit_code}
        if getattr(exc, "predicate", None):
            payload["predicate"] = exc.predicate
        sys.stderr.write(json.dumps(payload, sort_keys=True) + "\n")
        return exc.exit_code
    finally:
        if previous is None:
            os.environ.pop("KNOTLATTICE_NORM_BOUND", None)
        else:
            os.environ["KNOTLATTICE_NORM_BOUND"] = previous


if __name__ == "__main__":
    sys.exit(main())
