"""Command-line front end: family scans, certification and calculators.

Output goes to stdout (results) and stderr (diagnostics). JSON output is
byte-stable for identical inputs: keys are sorted and every real value is
rounded to 12 significant digits before serialization.

Exit codes: 0 success / certificate pass, 2 certificate fail, 1 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import certifier, discgroup, lattice, surface
from .golden import eta_pow

SCHEMA_VERSION = "1"
PRECISION_NOTE = "real values are IEEE-754 doubles rounded to 12 significant digits"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CERT_FAIL = 2


class _Parser(argparse.ArgumentParser):
    # spec'd exit codes: usage errors are 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _real(x: float) -> float:
    return float(f"{x:.12g}")


def _cplx(z: complex):
    z = complex(z)
    return [_real(z.real), _real(z.imag)]


def envelope(command: str, inputs: dict, result) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
        "precision_note": PRECISION_NOTE,
    }


def emit_json(env: dict) -> None:
    print(json.dumps(env, sort_keys=True, indent=2))


def _parse_gram(text: str) -> lattice.GramForm:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("expected three comma-separated integers p,q,r")
    p, q, r = (int(s) for s in parts)
    return lattice.GramForm(p, q, r)


def _parse_map(text: str) -> lattice.LatticeMap:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError("expected four comma-separated integers m11,m12,m21,m22")
    return lattice.LatticeMap(*(int(s) for s in parts))


# --- scan ------------------------------------------------------------------

def _scan_row_dict(row: certifier.ScanRow) -> dict:
    return {
        "q": row.q,
        "even": row.even,
        "signature": row.signature,
        "disc_factors": list(row.disc_factors),
        "represents_zero": row.represents_zero,
        "represents_plus2": row.represents_plus2,
        "represents_minus2": row.represents_minus2,
        "minus_id": row.minus_id,
        "verdict": "pass" if row.verdict else "fail",
    }


def cmd_scan(args) -> int:
    rows = certifier.family_scan(args.q_min, args.q_max)
    dicts = [_scan_row_dict(r) for r in rows]
    if args.format == "json":
        emit_json(envelope("scan", {"q_min": args.q_min, "q_max": args.q_max}, {"rows": dicts}))
        return EXIT_OK
    header = ("q", "even", "signature", "disc", "rep0", "rep+2", "rep-2", "-id", "verdict")
    print("  ".join(f"{h:>10}" for h in header))
    for d in dicts:
        cells = (
            d["q"], d["even"], d["signature"],
            ",".join(str(f) for f in d["disc_factors"]) or "-",
            d["represents_zero"], d["represents_plus2"], d["represents_minus2"],
            d["minus_id"], d["verdict"],
        )
        print("  ".join(f"{str(c):>10}" for c in cells))
    return EXIT_OK


# --- certify ---------------------------------------------------------------

def _certificate_dict(cert: certifier.Certificate) -> dict:
    d = cert.derived
    return {
        "description": cert.description,
        "q": cert.q,
        "gram": list(cert.gram.entries()),
        "map": [cert.action.m11, cert.action.m12, cert.action.m21, cert.action.m22],
        "eps": cert.eps,
        "checks": [
            {"name": c.name, "label": c.label, "passed": c.passed, "evidence": c.evidence}
            for c in cert.checks
        ],
        "derived": {
            "charpoly": list(d["charpoly"]),
            "eigenvalues": [_real(e) for e in d["eigenvalues"]],
            "entropy": _real(d["entropy"]),
            "lefschetz_k1": d["lefschetz_k1"],
            "disc_invariants": list(d["disc_invariants"]),
            "projectivity_note": d["projectivity_note"],
        },
        "verdict": "PASS" if cert.verdict else "FAIL",
    }


def cmd_certify(args) -> int:
    if (args.q is None) == (args.gram is None):
        raise SystemExit(_usage_error("exactly one of --q or --gram/--map/--eps is required"))
    if args.q is not None:
        if args.q == 0:
            raise SystemExit(_usage_error("--q must be nonzero"))
        cert = certifier.certify(args.q)
    else:
        if args.map is None or args.eps is None:
            raise SystemExit(_usage_error("--gram requires --map and --eps"))
        try:
            G = _parse_gram(args.gram)
            M = _parse_map(args.map)
        except ValueError as exc:
            raise SystemExit(_usage_error(str(exc)))
        if G.det == 0:
            raise SystemExit(_usage_error("degenerate Gram form"))
        cert = certifier.certify_explicit(G, M, args.eps)
    payload = _certificate_dict(cert)
    if args.power is not None:
        if not cert.verdict:
            raise SystemExit(_usage_error("--power requires a passing certificate"))
        pw = certifier.fixed_point_count_power(cert, args.power)
        payload["power"] = {
            "k": pw.k,
            "lefschetz": pw.lefschetz,
            "no_fixed_curves": pw.no_fixed_curves,
            "note": pw.note,
        }
    inputs = {"q": args.q, "gram": args.gram, "map": args.map,
              "eps": args.eps, "power": args.power}
    if args.format == "json":
        emit_json(envelope("certify", inputs, payload))
    else:
        print(f"certificate: {payload['description']}")
        print(f"gram {payload['gram']}  map {payload['map']}  eps {payload['eps']}")
        for c in payload["checks"]:
            mark = "PASS" if c["passed"] else "FAIL"
            print(f"  {c['name']} {mark}  {c['label']}: {c['evidence']}")
        der = payload["derived"]
        tr, det = der["charpoly"]
        sign = "+" if det > 0 else "-"
        print(f"char poly: t^2 - {tr}t {sign} {abs(det)}")
        print(f"eigenvalues: {der['eigenvalues'][0]:.12g}, {der['eigenvalues'][1]:.12g}")
        print(f"entropy: {der['entropy']:.12g}")
        print(f"lefschetz (k=1): {der['lefschetz_k1']}")
        print(f"discriminant invariants: {der['disc_invariants']}")
        print(f"note: {der['projectivity_note']}")
        if "power" in payload:
            pw = payload["power"]
            print(f"power k={pw['k']}: lefschetz {pw['lefschetz']} ({pw['note']})")
        print(f"verdict: {payload['verdict']}")
    return EXIT_OK if cert.verdict else EXIT_CERT_FAIL


def _usage_error(message: str) -> int:
    sys.stderr.write(f"error: {message}\n")
    return EXIT_USAGE


# --- calc ------------------------------------------------------------------

def cmd_calc_charpoly(args) -> int:
    if args.n < 1:
        raise SystemExit(_usage_error("--n must be >= 1"))
    M = eta_pow(2 * args.n).mult_matrix()
    tr, det = lattice.charpoly(M)
    sign = "+" if det > 0 else "-"
    poly = f"t^2 - {tr}t {sign} {abs(det)}"
    result = {
        "n": args.n,
        "trace": tr,
        "det": det,
        "polynomial": poly,
        "spectral_radius": _real(lattice.spectral_radius(M)),
    }
    if args.format == "json":
        emit_json(envelope("calc charpoly", {"n": args.n}, result))
    else:
        print(poly)
    return EXIT_OK


def cmd_calc_lefschetz(args) -> int:
    if args.q == 0:
        raise SystemExit(_usage_error("--q must be nonzero"))
    if args.k < 1:
        raise SystemExit(_usage_error("--k must be >= 1"))
    model = surface.K3Model(lattice.golden_family(args.q),
                            eta_pow(6).mult_matrix(), eps=-1)
    value = surface.topological_lefschetz(model, args.k)
    result = {"q": args.q, "k": args.k, "lefschetz": value}
    if args.format == "json":
        emit_json(envelope("calc lefschetz", {"q": args.q, "k": args.k}, result))
    else:
        print(value)
    return EXIT_OK


def cmd_calc_holo(args) -> int:
    kind = {
        "rational": surface.RATIONAL_OR_ENRIQUES,
        "enriques": surface.RATIONAL_OR_ENRIQUES,
        "torus": surface.TORUS,
        "k3": surface.K3,
    }[args.case]
    try:
        alpha = complex(args.alpha) if args.alpha is not None else None
        beta = complex(args.beta) if args.beta is not None else None
        case = surface.SurfaceHodgeCase(kind, alpha=alpha, beta=beta)
    except ValueError as exc:
        raise SystemExit(_usage_error(str(exc)))
    value = surface.holomorphic_lefschetz(case)
    result = {"case": kind, "value": _cplx(value)}
    if args.format == "json":
        emit_json(envelope("calc holo",
                           {"case": args.case, "alpha": args.alpha, "beta": args.beta},
                           result))
    else:
        if abs(value.imag) < 1e-12:
            print(f"{value.real:.12g}")
        else:
            print(f"{value.real:.12g}{value.imag:+.12g}j")
    return EXIT_OK


def cmd_calc_snf(args) -> int:
    try:
        G = _parse_gram(args.gram)
    except ValueError as exc:
        raise SystemExit(_usage_error(str(exc)))
    if G.det == 0:
        raise SystemExit(_usage_error("degenerate Gram form"))
    res = discgroup.snf(G)
    result = {
        "gram": list(G.entries()),
        "d": list(res.d),
        "U": [res.U.m11, res.U.m12, res.U.m21, res.U.m22],
        "V": [res.V.m11, res.V.m12, res.V.m21, res.V.m22],
    }
    if args.format == "json":
        emit_json(envelope("calc snf", {"gram": args.gram}, result))
    else:
        print(f"{res.d[0]},{res.d[1]}")
    return EXIT_OK


def cmd_calc_entropy(args) -> int:
    if args.q == 0:
        raise SystemExit(_usage_error("--q must be nonzero"))
    M = eta_pow(6).mult_matrix()
    model = surface.K3Model(lattice.golden_family(args.q), M, eps=-1)
    radius = surface.dynamical_degree(model)
    result = {
        "q": args.q,
        "spectral_radius": _real(radius),
        "entropy": _real(surface.model_entropy(model)),
    }
    if args.format == "json":
        emit_json(envelope("calc entropy", {"q": args.q}, result))
    else:
        print(f"{result['entropy']:.12g}")
    return EXIT_OK


# --- dispatch --------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="goldenk3",
                     description="exact lattice arithmetic for free positive-entropy "
                                 "K3 surface automorphisms")
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p_scan = sub.add_parser("scan", help="sweep the golden family over a q range")
    p_scan.add_argument("--q-min", type=int, required=True)
    p_scan.add_argument("--q-max", type=int, required=True)
    p_scan.add_argument("--format", choices=("table", "json"), default="table")
    p_scan.set_defaults(func=cmd_scan)

    p_cert = sub.add_parser("certify", help="run the C1-C8 certificate")
    p_cert.add_argument("--q", type=int)
    p_cert.add_argument("--gram", help="p,q,r entries of the Gram matrix")
    p_cert.add_argument("--map", help="m11,m12,m21,m22 row-major map entries")
    p_cert.add_argument("--eps", type=int, choices=(1, -1))
    p_cert.add_argument("--power", type=int, help="also report the Lefschetz number of g^k")
    p_cert.add_argument("--format", choices=("table", "json"), default="table")
    p_cert.set_defaults(func=cmd_certify)

    p_calc = sub.add_parser("calc", help="single-quantity calculators")
    csub = p_calc.add_subparsers(dest="calc_cmd", required=True, parser_class=_Parser)

    p = csub.add_parser("charpoly", help="characteristic polynomial of eta^(2n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_calc_charpoly)

    p = csub.add_parser("lefschetz", help="topological Lefschetz number of g^k")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_calc_lefschetz)

    p = csub.add_parser("holo", help="holomorphic Lefschetz number by case")
    p.add_argument("--case", choices=("rational", "enriques", "torus", "k3"), required=True)
    p.add_argument("--alpha", help="unit complex number, e.g. -1 or 0.6+0.8j")
    p.add_argument("--beta", help="unit complex number (torus case)")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_calc_holo)

    p = csub.add_parser("snf", help="Smith normal form of a Gram matrix")
    p.add_argument("--gram", required=True, help="p,q,r entries")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_calc_snf)

    p = csub.add_parser("entropy", help="entropy of the family automorphism")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_calc_entropy)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
