"""Command-line front end.

Every subcommand reads JSON files and writes one JSON document. Paths of the
form ``fixture:NAME`` refer to the files bundled in ``raag_genus/fixtures``.

Exit codes: 0 success, 1 invalid input, 2 search budget exceeded,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources

from . import __version__
from .certificates import certificate_from_json, certificate_problems
from .errors import InternalInvariantError, MalformedInput, RaagGenusError
from .graph import (
    DEFAULT_COVER_BUDGET,
    complete_bipartite_parts,
    complete_multipartite_parts,
    connected_components,
    is_complete,
    is_forest,
    is_star,
)
from .homology import cap_bound, connection_matrix, matrix_rank
from .jsonio import class_from_json, dumps, graph_from_json, load_file
from .solver import genus, result_summary, tensor_decompose, wedge_decompose
from .starcover import min_star_cover
from .vankampen import diagram_from_json, diagram_report


def _load(path: str):
    if path.startswith("fixture:"):
        name = path.split(":", 1)[1]
        ref = resources.files("raag_genus") / "fixtures" / f"{name}.json"
        if not ref.is_file():
            raise MalformedInput(f"no bundled fixture named {name!r}", location=path)
        with resources.as_file(ref) as p:
            return load_file(str(p))
    return load_file(path)


def _load_class(args, path: str | None = None):
    orientation = _load(args.orientation) if args.orientation else None
    return class_from_json(_load(path or args.input), orientation)


def cmd_classify(args) -> dict:
    data = _load(args.input)
    g = graph_from_json(data["graph"] if isinstance(data, dict) and "graph" in data else data)
    bip = complete_bipartite_parts(g)
    multi = complete_multipartite_parts(g) if g.vertices else None
    center = is_star(g)
    return {
        "complete": is_complete(g),
        "forest": is_forest(g),
        "complete_bipartite": bip is not None,
        "bipartite_parts": None if bip is None else [list(p) for p in bip],
        "complete_multipartite": multi is not None,
        "multipartite_parts": None if multi is None else [list(p) for p in multi],
        "star": center is not None,
        "star_center": center,
        "components": [list(c.vertices) for c in connected_components(g)],
    }


def cmd_cap_bound(args) -> dict:
    alpha = _load_class(args)
    cm = connection_matrix(alpha)
    return {
        "rank": matrix_rank(alpha),
        "cap_bound": cap_bound(alpha),
        "connection_matrix": {"index": list(cm.index), "matrix": cm.matrix.to_json()},
    }


def cmd_genus(args) -> dict:
    alpha = _load_class(args)
    return result_summary(alpha, genus(alpha, budget=args.budget))


def cmd_certificate(args) -> dict:
    alpha = _load_class(args)
    data = _load(args.verify)
    if isinstance(data, dict) and "kind" not in data and isinstance(data.get("certificate"), dict):
        data = data["certificate"]
    try:
        cert = certificate_from_json(data, alpha.ambient)
    except RaagGenusError as exc:
        return {"valid": False, "reason": f"{exc.code}: {exc.message}", "problems": [exc.message]}
    problems = certificate_problems(cert, alpha)
    return {
        "valid": not problems,
        "reason": None if not problems else problems[0],
        "problems": problems,
        "genus": cert.genus,
    }


def cmd_star_cover(args) -> dict:
    alpha = _load_class(args)
    if alpha.is_zero():
        return {"sc": 0, "stars": []}
    cover = min_star_cover(alpha, budget=args.budget)
    return {"sc": len(cover), "stars": cover.to_json()}


def cmd_decompose(args) -> dict:
    alpha = _load_class(args)
    dec = wedge_decompose(alpha) if args.kind == "wedge" else tensor_decompose(alpha)
    out = dec.to_json()
    out["count"] = dec.genus
    return out


def cmd_check_diagram(args) -> dict:
    d = diagram_from_json(_load(args.input))
    alpha = _load_class(args, args.cls) if args.cls else None
    return diagram_report(d, alpha)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="raag-genus", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write the JSON report here instead of standard output")
    common.add_argument("--budget", type=int, default=DEFAULT_COVER_BUDGET, help="max vertices for exact vertex cover")
    common.add_argument("--orientation", help='{"oriented_edges": ...} file overriding the class orientation')
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", parents=[common], help="graph classification predicates")
    s.add_argument("input")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("cap-bound", parents=[common], help="rank of the connection matrix and cap bound")
    s.add_argument("input")
    s.set_defaults(func=cmd_cap_bound)

    s = sub.add_parser("genus", parents=[common], help="genus bounds with certificate")
    s.add_argument("input")
    s.set_defaults(func=cmd_genus)

    s = sub.add_parser("certificate", parents=[common], help="verify a certificate against a class")
    s.add_argument("input")
    s.add_argument("--verify", required=True, metavar="CERT")
    s.set_defaults(func=cmd_certificate)

    s = sub.add_parser("star-cover", parents=[common], help="minimum star covering")
    s.add_argument("input")
    s.set_defaults(func=cmd_star_cover)

    s = sub.add_parser("decompose", parents=[common], help="wedge or pure-tensor decomposition")
    s.add_argument("input")
    s.add_argument("--kind", choices=["wedge", "tensor"], required=True)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("check-diagram", parents=[common], help="surface summary of a Van Kampen diagram")
    s.add_argument("input")
    s.add_argument("--class", dest="cls", metavar="CLASS")
    s.set_defaults(func=cmd_check_diagram)
    return p


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except RaagGenusError as exc:
        _emit(dumps({"error": exc.to_json()}), None)
        return exc.exit_code
    except Exception as exc:  # noqa: BLE001 - last-resort report, never a traceback
        err = InternalInvariantError(f"{type(exc).__name__}: {exc}")
        _emit(dumps({"error": {**err.to_json(), "code": "InternalError"}}), None)
        return err.exit_code
    _emit(dumps(report), args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
