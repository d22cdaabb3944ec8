"""Command-line front end.

Subcommands: connectivity, rate, epr, gpor, certify, verify.  Input
hypergraphs and output certificates are JSON; --json switches the
human-readable reports to JSON too.  Exit codes: 0 success, 1 failed
verification, 2 usage, 3 invalid input (with a machine-readable error
object on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import GhzcertError
from .gpor import find_gpor, verify_orthrep
from .hypergraph import Hypergraph, edge_connectivity, line_graph, min_cut, validate
from .protocol import (
    Certificate,
    epr_rate,
    ghz_rate_bound,
    synthesize_certificate,
    verify_certificate,
)


def _emit_error(code: str, message: str) -> None:
    json.dump({"code": code, "message": message}, sys.stderr)
    sys.stderr.write("\n")


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise GhzcertError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        err = GhzcertError(f"{path} is not valid JSON: {exc}")
        err.code = "BadJson"
        raise err from exc


def _load_hypergraph(path: str) -> Hypergraph:
    obj = _load_json(path)
    try:
        h = Hypergraph.from_json_dict(obj)
    except (KeyError, TypeError, ValueError) as exc:
        err = GhzcertError(f"{path}: malformed hypergraph: {exc}")
        err.code = "BadFormat"
        raise err from exc
    validate(h)
    return h


def _cmd_connectivity(args) -> int:
    h = _load_hypergraph(args.file)
    cut = min_cut(h)
    wcut = min_cut(h, weighted=True)
    if args.json:
        print(
            json.dumps(
                {
                    "lambda": len(cut.crossing),
                    "min_cut": {
                        "side": sorted(cut.side),
                        "crossing": list(cut.crossing),
                        "rank": cut.rank,
                    },
                    "min_cut_rank": wcut.rank,
                    "weighted_min_cut": {
                        "side": sorted(wcut.side),
                        "crossing": list(wcut.crossing),
                        "rank": wcut.rank,
                    },
                },
                sort_keys=True,
            )
        )
    else:
        print(f"lambda = {len(cut.crossing)}")
        print(
            f"min cut: side {sorted(cut.side)} "
            f"crossing edges {list(cut.crossing)}"
        )
        print(
            f"min cut rank = {wcut.rank} "
            f"(side {sorted(wcut.side)}, crossing {list(wcut.crossing)})"
        )
    return 0


def _cmd_rate(args) -> int:
    h = _load_hypergraph(args.file)
    rb = ghz_rate_bound(h)
    if args.json:
        print(json.dumps(rb.to_json_dict(), sort_keys=True))
    else:
        if rb.uniform:
            print(
                f"lambda={rb.lam}, rate: 1/{rb.lam} copies per GHZ "
                f"({rb.lam} GHZ per copy)"
            )
        else:
            print(
                f"min cut rank={rb.cut_rank}, "
                f"{rb.ghz2_per_copy:g} GHZ per copy (log2 of rank)"
            )
    return 0


def _cmd_epr(args) -> int:
    h = _load_hypergraph(args.file)
    res = epr_rate(h, args.a, args.b)
    if args.json:
        print(json.dumps(res.to_json_dict(), sort_keys=True))
    else:
        print(f"t = {res.t}")
        print(f"rate: 1/{res.t} EPR per copy")
        for p in res.paths:
            print(f"path: edges {list(p)}")
    return 0


def _cmd_gpor(args) -> int:
    h = _load_hypergraph(args.file)
    lam = edge_connectivity(h)
    d = h.l - lam
    rep = find_gpor(line_graph(h), d, seed=args.seed)
    report = verify_orthrep(rep)
    if args.json:
        print(
            json.dumps(
                {
                    "lambda": lam,
                    "d": d,
                    "vectors": [list(v) for v in rep.vectors],
                    "ok": report.ok,
                    "orthogonality_violations": [
                        list(v) for v in report.orthogonality_violations
                    ],
                    "dependent_subsets": [
                        list(s) for s in report.dependent_subsets
                    ],
                    "zero_vectors": list(report.zero_vectors),
                },
                sort_keys=True,
            )
        )
    else:
        print(f"lambda = {lam}, d = {d}")
        for e, v in enumerate(rep.vectors):
            print(f"c[{e}] = {list(v)}")
        print(f"verified: {'ok' if report.ok else 'FAILED'}")
        if not report.ok:
            print(f"  orthogonality violations: {report.orthogonality_violations}")
            print(f"  dependent subsets: {report.dependent_subsets}")
            print(f"  zero vectors: {report.zero_vectors}")
    return 0


def _cmd_certify(args) -> int:
    h = _load_hypergraph(args.file)
    cert = synthesize_certificate(h, args.n, seed=args.seed)
    blob = cert.to_json_bytes()
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(blob)
        if args.json:
            print(
                json.dumps(
                    {
                        "out": args.out,
                        "M": cert.m_count,
                        "achieved_rate": cert.achieved_rate,
                        "bound_rate": cert.bound_rate,
                    },
                    sort_keys=True,
                )
            )
        else:
            print(
                f"wrote {args.out}: M={cert.m_count}, "
                f"rate {cert.achieved_rate:.4f} of bound {cert.bound_rate}"
            )
    else:
        sys.stdout.buffer.write(blob)
        sys.stdout.buffer.flush()
    return 0


def _cmd_verify(args) -> int:
    obj = _load_json(args.file)
    try:
        cert = Certificate.from_json_dict(obj)
    except (KeyError, TypeError, ValueError) as exc:
        err = GhzcertError(f"{args.file}: malformed certificate: {exc}")
        err.code = "BadFormat"
        raise err from exc
    report = verify_certificate(cert, deep=args.deep)
    if args.json:
        print(
            json.dumps(
                {
                    "ok": report.ok,
                    "checks": [
                        {"name": c.name, "status": c.status, "detail": c.detail}
                        for c in report.checks
                    ],
                },
                sort_keys=True,
            )
        )
    else:
        print(report.summary())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghzcert",
        description=(
            "GHZ distillation rates and degeneration certificates for "
            "hypergraph states"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="input JSON file")
        p.add_argument(
            "--json", action="store_true", help="machine-readable stdout"
        )

    p = sub.add_parser(
        "connectivity", help="edge-connectivity and minimum cuts"
    )
    common(p)
    p.set_defaults(func=_cmd_connectivity)

    p = sub.add_parser("rate", help="optimal GHZ yield per copy")
    common(p)
    p.set_defaults(func=_cmd_rate)

    p = sub.add_parser("epr", help="pairwise EPR distillation rate")
    common(p)
    p.add_argument("--a", type=int, required=True, help="first vertex")
    p.add_argument("--b", type=int, required=True, help="second vertex")
    p.set_defaults(func=_cmd_epr)

    p = sub.add_parser(
        "gpor", help="general-position orthogonal representation"
    )
    common(p)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gpor)

    p = sub.add_parser("certify", help="synthesize a protocol certificate")
    common(p)
    p.add_argument("--n", type=int, required=True, help="levels per edge state")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the certificate here instead of stdout")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("verify", help="replay a certificate's claims")
    common(p)
    p.add_argument(
        "--deep",
        action="store_true",
        help="run the full tensor degeneration (small grids only)",
    )
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GhzcertError as exc:
        _emit_error(exc.code, str(exc))
        return 3


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
