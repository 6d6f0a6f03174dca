"""Batch command-line front door.

Subcommands: partition, closed-form, correlate, profile, norm, verify,
sample, hamiltonian.  Exact values are emitted as JSON with decimal-string
numerators/denominators/coefficients; any decimal rendering alongside is
advisory only.  Exit codes: 0 success, 1 failed identity, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import correlations, partition, sampler, spin
from .lattice import Point, horizontal_bond
from .partition import PinnedInstance
from .qpoly import LaurentPoly
from .weights import CustomTable, InterfaceXXZ, scheme_from_name

SCHEMA_POLY = "spinpaths/polynomial/1"
SCHEMA_REPORT = "spinpaths/report/1"
SCHEMA_PROFILE = "spinpaths/profile/1"
SCHEMA_PROBABILITY = "spinpaths/probability/1"
SCHEMA_SAMPLE = "spinpaths/sample-summary/1"
SCHEMA_RESIDUAL = "spinpaths/residual/1"


class UsageError(ValueError):
    pass


def parse_point(text: str) -> Point:
    raw = text.strip().lstrip("(").rstrip(")")
    try:
        i_s, j_s = raw.split(",")
        return Point(int(i_s), int(j_s))
    except ValueError as exc:
        raise UsageError(f"cannot parse point {text!r}; expected 'i,j'") from exc


def parse_rational(text: str) -> Fraction:
    """Exact rational literal 'p/r' or integer; floating literals are rejected."""
    cleaned = text.strip()
    if any(ch in cleaned for ch in ".eE"):
        raise UsageError(f"{text!r} is not an exact rational; write it as p/r")
    try:
        if "/" in cleaned:
            num, den = cleaned.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(cleaned))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse rational {text!r}") from exc


def poly_json(p: LaurentPoly) -> dict:
    return {"schema": SCHEMA_POLY, "terms": p.to_json_obj(), "text": str(p)}


def rational_json(value: Fraction) -> dict:
    return {"numerator": str(value.numerator), "denominator": str(value.denominator),
            "decimal": float(value)}


def _scheme(args) -> object:
    return scheme_from_name(args.scheme, K=getattr(args, "K", None), L=getattr(args, "L", None))


# -- subcommand handlers ----------------------------------------------------


def emit_poly(value: LaurentPoly, fmt: str) -> None:
    if fmt == "text":
        print(value)
    else:
        print(json.dumps(poly_json(value), indent=2))


def cmd_partition(args) -> int:
    scheme = _scheme(args)
    start = parse_point(args.frm)
    end = parse_point(args.to)
    emit_poly(partition.partition_dp(scheme, start, end), args.format)
    return 0


def cmd_closed_form(args) -> int:
    emit_poly(partition.interface_closed_form(args.n, args.m), args.format)
    return 0


def cmd_correlate(args) -> int:
    scheme = _scheme(args)
    query = correlations.CorrelationQuery(
        scheme=scheme,
        start=parse_point(args.frm),
        end=parse_point(args.to),
        waypoints=tuple(parse_point(t) for t in args.through),
    )
    out = {"schema": SCHEMA_PROBABILITY,
           "conditioned": poly_json(correlations.conditioned_partition(query))}
    if args.q is not None:
        q0 = parse_rational(args.q)
        out["q"] = str(q0)
        out["probability"] = rational_json(correlations.crossing_probability(query, q0))
    print(json.dumps(out, indent=2))
    return 0


def cmd_profile(args) -> int:
    inst = PinnedInstance(K=args.K, L=args.L, N=args.N)
    q0 = parse_rational(args.q)
    profile = correlations.magnetization_profile(inst, q0)
    if args.format == "json":
        rows = [{"site": x, **rational_json(p)} for x, p in profile]
        print(json.dumps({"schema": SCHEMA_PROFILE, "K": args.K, "L": args.L,
                          "N": args.N, "q": str(q0), "sites": rows}, indent=2))
    else:
        # CSV column order: site, numerator, denominator, decimal
        print("site,numerator,denominator,decimal")
        for x, p in profile:
            print(f"{x},{p.numerator},{p.denominator},{float(p)!r}")
    return 0


def cmd_norm(args) -> int:
    emit_poly(spin.norm_squared(args.L, args.K, args.N), args.format)
    return 0


def cmd_sample(args) -> int:
    scheme = _scheme(args)
    q0 = parse_rational(args.q)
    state = sampler.SamplerState(scheme, parse_point(args.frm), parse_point(args.to),
                                 q0, args.seed)
    counts: dict[str, int] = {}
    for _ in range(args.n):
        path = sampler.sample_path(state)
        text = path.text()
        counts[text] = counts.get(text, 0) + 1
        print(text)
    summary = {"schema": SCHEMA_SAMPLE, "n": args.n, "seed": args.seed,
               "scheme": args.scheme, "q": str(q0), "distinct": len(counts)}
    print(json.dumps(summary), file=sys.stderr)
    return 0


def cmd_hamiltonian(args) -> int:
    if args.config is not None:
        word = args.config.strip()
        if len(word) != args.L + args.K + 1 or any(c not in "01" for c in word):
            raise UsageError(f"--config must be a 0/1 word of length {args.L + args.K + 1}")
        config = spin.SpinConfig(args.L, args.K, tuple(int(c) for c in word))
        out = {"schema": SCHEMA_POLY, "L": args.L, "K": args.K,
               "config": word, "down_spins": config.down_count,
               "amplitude": poly_json(spin.amplitude(config))}
        print(json.dumps(out, indent=2))
        return 0
    if args.N is None:
        raise UsageError("hamiltonian needs -N (or --config)")
    oracle = spin.build_hamiltonian(args.L, args.K, args.N, args.q0)
    residual = spin.verify_ground_state(oracle)
    ok = residual <= 1e-10
    print(json.dumps({"schema": SCHEMA_RESIDUAL, "L": args.L, "K": args.K,
                      "N": args.N, "q0": args.q0, "dimension": oracle.dimension,
                      "residual": residual, "holds": ok}, indent=2))
    return 0 if ok else 1


# -- the identity suite -------------------------------------------------------


def _report_entry(identity: str, params: dict, holds: bool, lhs, rhs) -> dict:
    def render(v):
        if isinstance(v, LaurentPoly):
            return poly_json(v)
        return str(v)
    return {"identity": identity, "parameters": params, "holds": bool(holds),
            "lhs": render(lhs), "rhs": render(rhs)}


def identity_suite(max_k: int, max_l: int, q_values: list[Fraction],
                   tf_window: int = 2) -> list[dict]:
    """Run every identity on the (K, L) grid; one report entry per check."""
    entries: list[dict] = []
    for K in range(max_k + 1):
        for L in range(max_l + 1):
            sites = K + L + 1
            for N in range(sites + 1):
                inst = PinnedInstance(K=K, L=L, N=N)
                params = {"K": K, "L": L, "N": N, "M": inst.M}
                nsq = spin.norm_squared(L, K, N)
                rep1 = partition.pinned_rep1(inst)
                rep2 = partition.pinned_rep2(inst)
                entries.append(_report_entry(
                    "norm-equality", params, nsq == rep1 == rep2, nsq, rep1))
                conv = partition.pinned_via_convolution(inst)
                entries.append(_report_entry("pf", params, rep2 == conv, rep2, conv))
                rec2 = partition.rec2_rhs(inst)
                entries.append(_report_entry("rec2", params, rep2 == rec2, rep2, rec2))
                if N >= 1 and inst.M >= 1:
                    readings = partition.rec1_readings(inst)
                    lhs1, rhs1 = partition.rec1_sides(inst)
                    entries.append(_report_entry(
                        "rec1", {**params, "reading": "fixed-weights",
                                 "alternative_readings": {
                                     k: readings[k] for k in
                                     ("reinstanced_shrink_K", "reinstanced_shrink_L")}},
                        lhs1 == rhs1, lhs1, rhs1))
                for q0 in q_values:
                    report = partition.verify_average_representation(inst, q0)
                    entries.append(_report_entry(
                        "ave", report["parameters"], report["holds"],
                        report["lhs"], report["rhs"]))
    # translation identity over a small window of rectangles and reference points
    w = tf_window
    pts = [Point(i, j) for i in range(-w, w + 1) for j in range(-w, w + 1)]
    interface = InterfaceXXZ()
    for start in pts:
        for end in pts:
            if not end.dominates(start):
                continue
            for ref in pts:
                if not (ref.i <= start.i and ref.j <= start.j):
                    continue
                direct = partition.partition_dp(interface, start, end)
                translated = partition.translated_interface(start, end, ref)
                entries.append(_report_entry(
                    "TF", {"I": str(start), "F": str(end), "P": str(ref)},
                    direct == translated, direct, translated))
    return entries


def injected_failure_entry() -> dict:
    """A deliberately falsified identity (testing hook for the exit contract).

    Uses a custom table that mimics the fixed-weights recursion setup but
    puts weight q^2 on the final horizontal bond, which breaks the
    recursion's premise that last-sphere weights are 1.
    """
    table = {horizontal_bond(Point(0, 2)): LaurentPoly.q_power(2)}
    scheme = CustomTable(table=table)
    end = Point(1, 2)
    full = partition.forward_table(scheme, Point(0, 0), end)
    lhs = full[end]
    rhs = full[Point(0, 2)] + full[Point(1, 1)]
    return _report_entry("rec1", {"scheme": "custom", "note": "injected failure",
                                  "reading": "fixed-weights"},
                         lhs == rhs, lhs, rhs)


def cmd_verify(args) -> int:
    q_values = [parse_rational(t) for t in (args.q or ["3/10", "1/2", "4/5"])]
    entries = identity_suite(args.max_K, args.max_L, q_values)
    if args.inject_failure:
        entries.append(injected_failure_entry())
    failures = [e for e in entries if not e["holds"]]
    by_identity: dict[str, list[dict]] = {}
    for e in entries:
        by_identity.setdefault(e["identity"], []).append(e)
    summary = {name: {"checked": len(group),
                      "failed": sum(1 for g in group if not g["holds"])}
               for name, group in sorted(by_identity.items())}
    out = {"schema": SCHEMA_REPORT, "max_K": args.max_K, "max_L": args.max_L,
           "q": [str(q) for q in q_values], "summary": summary,
           "all_hold": not failures}
    if args.full:
        out["entries"] = entries
    else:
        out["failures"] = failures
    print(json.dumps(out, indent=2))
    return 1 if failures else 0


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinpaths",
        description="Exact lattice-path partition functions, correlations, and "
                    "ground-state cross-checks for the pinned chain.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_scheme(p, required=True):
        p.add_argument("--scheme", choices=["interface", "rep1", "rep2"],
                       required=required, help="weight scheme")
        p.add_argument("-K", type=int, default=None, help="chain extent right of the pin (rep1)")
        p.add_argument("-L", type=int, default=None, help="chain extent left of the pin (rep1)")

    def add_format(p):
        p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("partition", help="partition function of a rectangle")
    add_scheme(p)
    p.add_argument("--from", dest="frm", default="0,0", help="start point 'i,j'")
    p.add_argument("--to", dest="to", required=True, help="end point 'i,j'")
    add_format(p)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("closed-form", help="interface closed form at (n, m)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("correlate", help="conditioned partition and crossing probability")
    add_scheme(p)
    p.add_argument("--from", dest="frm", default="0,0")
    p.add_argument("--to", dest="to", required=True)
    p.add_argument("--through", action="append", default=[], help="waypoint 'i,j' (repeatable)")
    p.add_argument("--q", default=None, help="rational q as 'p/r'")
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("profile", help="per-site down-spin probabilities of the ground state")
    p.add_argument("-K", type=int, required=True)
    p.add_argument("-L", type=int, required=True)
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--q", required=True, help="rational q as 'p/r'")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("norm", help="squared norm of the sector ground state")
    p.add_argument("-K", type=int, required=True)
    p.add_argument("-L", type=int, required=True)
    p.add_argument("-N", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("verify", help="run the identity suite over a (K, L) grid")
    p.add_argument("--max-K", type=int, default=3)
    p.add_argument("--max-L", type=int, default=3)
    p.add_argument("--q", action="append", default=None,
                   help="rational q (repeatable; default 3/10, 1/2, 4/5)")
    p.add_argument("--full", action="store_true", help="emit every entry, not just failures")
    p.add_argument("--inject-failure", action="store_true",
                   help="append a deliberately falsified identity (exit-code test hook)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", help="draw paths from the exact measure")
    add_scheme(p)
    p.add_argument("--from", dest="frm", default="0,0")
    p.add_argument("--to", dest="to", required=True)
    p.add_argument("--q", required=True, help="rational q as 'p/r'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=10)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("hamiltonian", help="ground-state residual or config amplitude")
    p.add_argument("-K", type=int, required=True)
    p.add_argument("-L", type=int, required=True)
    p.add_argument("-N", type=int, default=None)
    p.add_argument("--q0", type=float, default=0.5, help="numeric q for the dense oracle")
    p.add_argument("--config", default=None, help="0/1 word over sites -L..K")
    p.set_defaults(func=cmd_hamiltonian)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
