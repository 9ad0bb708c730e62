"""Command-line front end.

Subcommands: expand, schur, pleth, verify, scan, lift, list.  All state
lives in flags (no config files), so identical argv gives byte-identical
output; timing fields are only emitted under --timing.

Exit codes: 0 success / identity passed / scan positive; 1 verification
failure or negative scan verdict under --expect-positive; 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .families import (
    DivisorWeight,
    MOEBIUS,
    PartSet,
    TOTIENT,
    conj_series,
    family_series,
    foulkes_series,
    lie_primes_bar_series,
    lie_primes_series,
    lie_series,
    part_family_ext_series,
    part_family_series,
)
from .partitions import PrimeSet
from .plethysm import Series, e_series, h_series, p1_series, pleth, product_series
from .symfunc import SymFunc, e_of, h_of, is_schur_positive, p_of, s_of, to_schur
from .verify import (
    BudgetError,
    DEFAULT_LIFT_BUDGET,
    DEFAULT_SCAN_BUDGET,
    UnknownIdentityError,
    identity_info,
    lifting_check,
    list_identities,
    scan_families,
    scan_positivity,
    verify,
)


class UsageError(ValueError):
    pass


def parse_part_set(text: str) -> PartSet:
    try:
        return PartSet.parse(text)
    except ValueError as exc:
        raise UsageError(f"malformed set descriptor: {exc}") from None


def parse_weight(text: str) -> DivisorWeight:
    t = text.strip()
    if t == "mu":
        return MOEBIUS
    if t == "phi":
        return TOTIENT
    if t.startswith("primesbar:"):
        return DivisorWeight.prime_split_bar(PrimeSet.from_text(t.split(":", 1)[1]))
    if t.startswith("primes:"):
        return DivisorWeight.prime_split(PrimeSet.from_text(t.split(":", 1)[1]))
    if t.startswith("parts:"):
        return DivisorWeight.part_set(parse_part_set(t.split(":", 1)[1]))
    if t.startswith("ramanujan:"):
        return DivisorWeight.ramanujan(int(t.split(":", 1)[1]))
    raise UsageError(f"unknown weight descriptor {text!r}")


def family_to_series(desc: str, n: int) -> Series:
    """Resolve a family descriptor to a series truncated at n.

    Descriptors: lie | conj | foulkes:r | lieS:2,3 | lieSbar:2 | fT:<set> |
    gT:<set> | h | e | p | p1 | weight:<weight>.
    """
    t = desc.strip()
    try:
        if t == "lie":
            return lie_series(n)
        if t == "conj":
            return conj_series(n)
        if t == "h":
            return h_series(n)
        if t == "e":
            return e_series(n)
        if t == "p1":
            return p1_series(n)
        if t == "p":
            return Series(n, {d: p_of((d,)) for d in range(1, n + 1)})
        if t.startswith("foulkes:"):
            return foulkes_series(int(t.split(":", 1)[1]), n)
        if t.startswith("lieSbar"):
            rest = t.split(":", 1)[1] if ":" in t else ""
            return lie_primes_bar_series(PrimeSet.from_text(rest), n)
        if t.startswith("lieS"):
            rest = t.split(":", 1)[1] if ":" in t else ""
            return lie_primes_series(PrimeSet.from_text(rest), n)
        if t.startswith("fT:"):
            return part_family_series(parse_part_set(t.split(":", 1)[1]), n)
        if t.startswith("gT:"):
            return part_family_ext_series(parse_part_set(t.split(":", 1)[1]), n)
        if t.startswith("weight:"):
            return family_series(parse_weight(t.split(":", 1)[1]), n)
    except UsageError:
        raise
    except (ValueError, KeyError) as exc:
        raise UsageError(f"bad family descriptor {desc!r}: {exc}") from None
    raise UsageError(f"unknown family {desc!r}")


def basis_or_family(desc: str, n: int) -> Series:
    """Like family_to_series but also accepts basis elements h:r, e:r, p:r, s:3,1."""
    t = desc.strip()
    try:
        if t.startswith("h:"):
            return Series.from_symfunc(h_of(int(t[2:])), n)
        if t.startswith("e:"):
            return Series.from_symfunc(e_of(int(t[2:])), n)
        if t.startswith("p:"):
            parts = tuple(int(x) for x in t[2:].split(","))
            return Series.from_symfunc(p_of(tuple(sorted(parts, reverse=True))), n)
        if t.startswith("s:"):
            parts = tuple(int(x) for x in t[2:].split(","))
            return Series.from_symfunc(s_of(tuple(sorted(parts, reverse=True))), n)
    except ValueError as exc:
        raise UsageError(f"bad basis descriptor {desc!r}: {exc}") from None
    return family_to_series(t, n)


def _emit(args, payload_json: dict, payload_text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload_json, sort_keys=True))
    else:
        print(payload_text)


def _symfunc_payload(f: SymFunc, basis: str) -> tuple[dict, str]:
    if basis == "schur":
        exp = to_schur(f)
        return exp.to_json_dict(), exp.to_text()
    return f.to_json_dict(), f.to_text()


def cmd_expand(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    series = family_to_series(args.family, args.n)
    f = series.component(args.n)
    j, t = _symfunc_payload(f, args.basis)
    _emit(args, j, t)
    return 0


def cmd_schur(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    series = family_to_series(args.family, args.n)
    f = series.component(args.n)
    exp = to_schur(f)
    positive, neg = is_schur_positive(f)
    if args.format == "json":
        payload = exp.to_json_dict()
        payload["schur_positive"] = positive
        payload["witnesses"] = [
            {"partition": list(k.parts), "num": str(v.numerator), "den": str(v.denominator)}
            for k, v in sorted(neg.items(), key=lambda kv: kv[0].parts, reverse=True)
        ]
        print(json.dumps(payload, sort_keys=True))
    else:
        print(exp.to_text())
        print(f"schur-positive: {'yes' if positive else 'no'}")
        for k, v in sorted(neg.items(), key=lambda kv: kv[0].parts, reverse=True):
            print(f"  negative at {k!r}: {v}")
    return 0 if positive or not args.expect_positive else 1


def cmd_pleth(args) -> int:
    n = args.max_degree
    if n < 1:
        raise UsageError("--max-degree must be >= 1")
    outer = basis_or_family(args.outer, n)
    inner = basis_or_family(args.inner, n)
    result = pleth(outer, inner)
    degrees = [args.degree] if args.degree else range(1, n + 1)
    if args.format == "json":
        payload = {
            "outer": args.outer,
            "inner": args.inner,
            "max_degree": n,
            "components": [result.component(d).to_json_dict() for d in degrees],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for d in degrees:
            print(f"deg {d}: {result.component(d).to_text()}")
    return 0


def _coerce_identity_params(args) -> dict:
    params = {}
    if args.S is not None:
        params["S"] = PrimeSet.from_text(args.S)
    if args.T is not None:
        params["T"] = parse_part_set(args.T)
    if args.q is not None:
        params["q"] = args.q
    if args.k is not None:
        params["k"] = args.k
    if args.r is not None:
        params["r"] = args.r
    if args.n_max is not None:
        params["n_max"] = args.n_max
    if args.weight is not None:
        params["weight"] = parse_weight(args.weight)
    if args.g is not None:
        params["g"] = args.g
    if args.fam is not None:
        params["family"] = args.fam
    if args.sign is not None:
        params["sign"] = args.sign
    return params


def cmd_verify(args) -> int:
    try:
        report = verify(args.id, _coerce_identity_params(args), args.max_degree)
    except UnknownIdentityError as exc:
        raise UsageError(exc.args[0]) from None
    except ValueError as exc:
        raise UsageError(f"invalid params: {exc}") from None
    if args.format == "json":
        print(json.dumps(report.to_json_dict(timing=args.timing), sort_keys=True))
    else:
        print(f"{report.id}: {report.status} (N={report.N}, params={report.params})")
        if report.first_mismatch:
            print(f"  first mismatch: {report.first_mismatch}")
        for line in report.details:
            print(f"  {line}")
    return 0 if report.passed else 1


def cmd_scan(args) -> int:
    if args.n is not None:
        ns = [args.n]
    elif args.n_from is not None and args.n_to is not None:
        ns = range(args.n_from, args.n_to + 1)
    else:
        raise UsageError("scan needs --n or both --n-from and --n-to")
    params = {}
    if args.k is not None:
        params["k"] = args.k
    if args.T is not None:
        params["T"] = parse_part_set(args.T)
    if args.S is not None:
        params["S"] = PrimeSet.from_text(args.S)
    try:
        report = scan_positivity(args.family, ns, params, budget=args.budget, jobs=args.jobs)
    except BudgetError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps(report.to_json_dict(timing=args.timing), sort_keys=True))
    else:
        for v in report.verdicts:
            line = f"n={v.n}: {'positive' if v.positive else 'NEGATIVE'}"
            if not v.positive:
                wit = ", ".join(f"{k!r}:{c}" for k, c in sorted(v.witnesses.items(), key=lambda kv: kv[0].parts, reverse=True))
                line += f"  witnesses: {wit}"
            print(line)
    return 0 if (report.all_positive or not args.expect_positive) else 1


def cmd_lift(args) -> int:
    try:
        report = lifting_check(args.q, args.n_max, budget=args.budget, jobs=args.jobs)
    except BudgetError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps(report.to_json_dict(timing=args.timing), sort_keys=True))
    else:
        negs = report.negatives()
        print(f"q={args.q}, n up to {args.n_max}: negatives at {negs}")
    return 0


def cmd_list(args) -> int:
    catalog = list_identities()
    if args.format == "json":
        print(json.dumps({"identities": catalog, "scan_families": scan_families()}, sort_keys=True))
    else:
        for e in catalog:
            params = " ".join(f"{k}" for k in e["params"]) or "-"
            print(f"{e['id']:<22} N={e['default_N']:<3} params: {params:<24} {e['statement']}")
        print()
        print("scan families: " + ", ".join(scan_families()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symlie", description="Exact symmetric-function families, plethysm identities, and Schur-positivity scans.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--timing", action="store_true", help="include elapsed_ms in JSON output")

    p = sub.add_parser("expand", help="expand a family member in the p or schur basis")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--basis", choices=("p", "schur"), default="p")
    add_common(p)
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("schur", help="schur expansion plus positivity verdict")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--expect-positive", action="store_true")
    add_common(p)
    p.set_defaults(fn=cmd_schur)

    p = sub.add_parser("pleth", help="plethysm outer[inner] of two series")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--degree", type=int)
    add_common(p)
    p.set_defaults(fn=cmd_pleth)

    p = sub.add_parser("verify", help="check one catalog identity exactly")
    p.add_argument("--id", required=True)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--S")
    p.add_argument("--T")
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--weight")
    p.add_argument("--g")
    p.add_argument("--fam", help="series family for identities parameterized by one (e.g. HF-EG)")
    p.add_argument("--sign", type=int, choices=(1, -1))
    add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("scan", help="schur-positivity scan of a family")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--n-from", dest="n_from", type=int)
    p.add_argument("--n-to", dest="n_to", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--T")
    p.add_argument("--S")
    p.add_argument("--expect-positive", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_SCAN_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    add_common(p)
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("lift", help="positivity of p_1 L_{n-1} - L_n for a single-prime family")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_LIFT_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    add_common(p)
    p.set_defaults(fn=cmd_lift)

    p = sub.add_parser("list", help="dump the identity catalog")
    add_common(p)
    p.set_defaults(fn=cmd_list)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
