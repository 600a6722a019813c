"""Command line interface: ``dessin <subcommand> ...``.

Exit codes: 0 success, 1 a check failed, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from brauer_dessins import census, workbench
from brauer_dessins.algebra import default_max_dim
from brauer_dessins.dessin import dual, is_isomorphic, oriented_dual, passport
from brauer_dessins.permutation import DegreeMismatchError

EXIT_OK, EXIT_CHECK, EXIT_INPUT = 0, 1, 2


class _InputError(Exception):
    pass


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _InputError(f"{path}: {exc.strerror}") from exc
    try:
        return workbench.parse_dessin(text)
    except (ValueError, DegreeMismatchError) as exc:
        raise _InputError(f"{path}: {exc}") from exc


def cmd_validate(args) -> int:
    d = _load(args.file)
    p = passport(d)
    print(f"ok: n={d.n} black={list(p.black_degrees)} white={list(p.white_degrees)} "
          f"faces={list(p.face_degrees)} genus={p.genus}")
    return EXIT_OK


def cmd_report(args) -> int:
    d = _load(args.file)
    fmt = "json" if args.json else "text"
    data = workbench.report_data(d, max_dim=default_max_dim())
    sys.stdout.write(workbench.render_report(d, format=fmt, data=data))
    ok = data["basis_count"] == data["dim_formula"] and data["duality_checks"]["labelled_equal"] \
        and data["duality_checks"]["oriented_op_equal"]
    return EXIT_OK if ok else EXIT_CHECK


def cmd_dual(args) -> int:
    d = _load(args.file)
    e = oriented_dual(d) if args.oriented else dual(d)
    if args.emit:
        sys.stdout.write(workbench.format_dessin(e))
    else:
        p = passport(e)
        print(f"sigma = {e.sigma.cycle_string()}")
        print(f"alpha = {e.alpha.cycle_string()}")
        print(f"phi   = {e.phi.cycle_string()}")
        print(f"black={list(p.black_degrees)} white={list(p.white_degrees)} "
              f"faces={list(p.face_degrees)} genus={p.genus}")
    return EXIT_OK


def cmd_invariants(args) -> int:
    d = _load(args.file)
    out = {"passport": passport(d).as_dict(), "fingerprint": census.fingerprint(d).as_dict()}
    print(json.dumps(out, indent=2))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if not 1 <= args.n <= census.MAX_N:
        raise _InputError(f"--n must be in 1..{census.MAX_N}")
    dessins = census.enumerate_dessins(args.n, workers=args.workers)
    if args.passports:
        for p, members in census.group_by_passport(dessins).items():
            print(f"black={list(p.black_degrees)} white={list(p.white_degrees)} "
                  f"faces={list(p.face_degrees)} genus={p.genus}: {len(members)}")
    else:
        for d in dessins:
            print(f"sigma = {d.sigma.cycle_string()}  alpha = {d.alpha.cycle_string()}")
    print(f"{len(dessins)} dessins with n = {args.n}")
    if args.verify:
        report = census.verify_corpus(args.n)
        print(json.dumps(report.as_dict(), indent=2))
        return EXIT_OK if report.ok else EXIT_CHECK
    return EXIT_OK


def cmd_compare(args) -> int:
    a, b = _load(args.file_a), _load(args.file_b)
    fa, fb = census.fingerprint(a).as_dict(), census.fingerprint(b).as_dict()
    iso = is_isomorphic(a, b)
    diff = {k: [fa[k], fb[k]] for k in fa if fa[k] != fb[k]}
    print(json.dumps({"isomorphic": iso, "fingerprints_equal": not diff, "fingerprint_diff": diff}, indent=2))
    return EXIT_OK if iso else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dessin", description="Brauer configuration algebras of dessins d'enfants")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a .dessin file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("report", help="quiver, relations, dimensions and centre")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("dual", help="the dual dessin")
    p.add_argument("file")
    p.add_argument("--oriented", action="store_true", help="orientation-reversed dual")
    p.add_argument("--emit", action="store_true", help="print as a .dessin document")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("invariants", help="passport and fingerprint")
    p.add_argument("file")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("enumerate", help="all dessins with n half-edges up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--passports", action="store_true", help="group by passport")
    p.add_argument("--verify", action="store_true", help="run the corpus checks for sizes 1..n")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("compare", help="isomorphism test and fingerprint diff")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
