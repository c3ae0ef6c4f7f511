"""Command-line front end.

Exit codes: 0 success, 1 internal verification failure, 2 bad input,
3 a search cap was hit before a decision.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from .bounds import bounds_table, conv_inclusion_certificate
from .centralizer import CentralizerReport
from .charsphere import SigmaSet, positive_combination_feasible, sigma_restrict, tame_certificate, tame_degree
from .config import DEFAULT_CAPS, CapExceeded, Caps, ContractError
from .finitefield import poly_str
from .funcfield import build_prime_char, centralizer_report_funcfield, place_characters, sigma_complement_funcfield
from .lattice import LatticeAction, check_decomposition, fixed_sublattice, trace_complement
from .nfexample import (
    build_default,
    centralizer_report_numfield,
    parse_subgroup,
    sigma_complement_numfield,
)
from .numfield import nf_make, quadratic_poly

EXIT_OK, EXIT_INTERNAL, EXIT_CONTRACT, EXIT_CAP = 0, 1, 2, 3


class ReportCheckError(ArithmeticError):
    pass


# -- independent re-validation of emitted JSON ---------------------------------

def _check_witness(obj: dict) -> None:
    terms = obj["terms"]
    if not terms:
        raise ReportCheckError("empty witness")
    n = len(terms[0]["ray"])
    tot = [Fraction(0)] * n
    seen = set()
    for t in terms:
        c = Fraction(t["coeff"])
        if c <= 0:
            raise ReportCheckError(f"non-positive coefficient {c}")
        ray = tuple(t["ray"])
        if ray in seen or len(ray) != n:
            raise ReportCheckError("repeated ray or rank mismatch in witness")
        seen.add(ray)
        for i, x in enumerate(ray):
            tot[i] += c * x
    if "target" in obj:
        lam = Fraction(obj["multiple"])
        if lam <= 0 or tot != [lam * x for x in obj["target"]]:
            raise ReportCheckError(f"witness does not reach its target: {obj}")
    elif any(tot):
        raise ReportCheckError(f"witness does not sum to zero: {obj}")


def _check_cover(obj: dict) -> None:
    for entry in obj["cover"]:
        f = entry["functional"]
        for r in entry["rays"]:
            if sum(a * b for a, b in zip(f, r)) <= 0:
                raise ReportCheckError(f"functional {f} is not positive on {r}")


def validate_report(obj) -> int:
    """Walk a report and re-check every witness and half-space cover. Returns the count checked."""
    count = 0
    if isinstance(obj, dict):
        if "terms" in obj and isinstance(obj["terms"], list):
            _check_witness(obj)
            count += 1
        if "cover" in obj and isinstance(obj["cover"], list):
            _check_cover(obj)
            count += 1
        for v in obj.values():
            count += validate_report(v)
    elif isinstance(obj, list):
        for v in obj:
            count += validate_report(v)
    return count


def dump(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=True) + "\n"


# -- subcommands ------------------------------------------------------------------

def _caps(args) -> Caps:
    return Caps(
        principal_box=args.principal_box,
        root_precision=args.root_precision,
        minkowski=args.minkowski_cap,
        prime_search=args.prime_cap,
        group_order=args.group_cap,
        primitive_box=args.primitive_box,
    )


def _centralizer_summary(rep: CentralizerReport, lines: list[str]) -> None:
    lines.append(f"  H0 of order {rep.h0_order}: Q0 rank d = {rep.d}, restricted rays "
                 + " ".join(str(list(r.coords)) for r in rep.restricted.rays))
    lines.append(f"    upper witness: {rep.upper_witness}")
    for v in rep.verdicts():
        lines.append(f"    {v}")


def cmd_prime_char(args, lines: list[str]) -> dict:
    inst = build_prime_char(args.p, args.m)
    s = sigma_complement_funcfield(inst)
    verdict = tame_degree(s)
    cert = tame_certificate(s, inst.rank)
    if cert is None:
        raise ArithmeticError(f"sigma set is not {inst.rank}-tame")
    ds = [args.d] if args.d is not None else [d for d in range(1, args.m + 1) if args.m % d == 0]
    reps = [centralizer_report_funcfield(inst, d) for d in ds]
    lines.append(f"F_{args.p}^{args.m} = F_{args.p}[w]/({poly_str(inst.field.modulus)}), a = {inst.a}")
    lines.append(f"sigma set: {len(s)} rays in rank {s.rank}; tame degree {verdict.degree}")
    lines.append(f"witness: {verdict.witness}")
    for rep in reps:
        _centralizer_summary(rep, lines)
    return {
        "instance": inst.to_json(),
        "characters": [c.to_json() for c in place_characters(inst)],
        "sigma": s.to_json(),
        "tame_degree": verdict.to_json(),
        "tame_certificate": cert.to_json(),
        "centralizers": [r.to_json() for r in reps],
    }


def cmd_number_field(args, lines: list[str]) -> dict:
    caps = _caps(args)
    if (args.disc is None) == (args.poly is None):
        raise ContractError("give exactly one of --disc and --poly")
    if args.disc is not None:
        f = quadratic_poly(args.disc)
    else:
        try:
            f = tuple(int(c) for c in args.poly.split(","))
        except ValueError as exc:
            raise ContractError(f"bad --poly {args.poly!r}") from exc
        if len(f) - 1 > 2 and not args.higher_degree:
            raise ContractError("fields of degree above 2 need --higher-degree")
    K = nf_make(f, caps)
    inst = build_default(K, args.p, args.q)
    sig = sigma_complement_numfield(inst)
    H0 = parse_subgroup(K, args.subgroup)
    rep = centralizer_report_numfield(inst, H0, sig)
    lines.append(f"K = Q[z]/({', '.join(map(str, K.poly))}), d_K = {K.disc}, |H| = {len(K.automorphisms)}, "
                 f"class number {inst.r}")
    lines.append(f"q = {inst.q}, k_q = {inst.k}, p = {inst.p}, alpha = {inst.alpha} (norm {inst.alpha.norm()})")
    lines.append("raw characters: " + "; ".join(f"{c.place}: {list(c.raw)}" for c in sig.characters))
    lines.append(f"sigma set: {len(sig.sigma)} rays; tame degree {sig.verdict.degree}")
    lines.append(f"witness: {sig.verdict.witness}")
    _centralizer_summary(rep, lines)
    out = sig.to_json()
    out["subgroup"] = H0
    out["centralizer"] = rep.to_json()
    return out


def _load_set(path: str) -> SigmaSet:
    try:
        return SigmaSet.load(path)
    except (OSError, json.JSONDecodeError) as exc:
        raise ContractError(f"cannot read {path}: {exc}") from exc


def cmd_tame_check(args, lines: list[str]) -> dict:
    s = _load_set(args.set)
    if args.m < 1:
        raise ContractError("--m must be at least 1")
    out: dict = {"set": s.to_json(), "m": args.m}
    if args.action is not None:
        try:
            action = LatticeAction.load(args.action, args.group_cap)
        except (OSError, json.JSONDecodeError) as exc:
            raise ContractError(f"cannot read {args.action}: {exc}") from exc
        if action.rank != s.rank:
            raise ContractError(f"action rank {action.rank} != set rank {s.rank}")
        dec = trace_complement(action, fixed_sublattice(action))
        if not check_decomposition(action, dec):
            raise ArithmeticError("decomposition failed its own check")
        s = sigma_restrict(s, dec.q0)
        out["decomposition"] = dec.to_json()
        out["restricted_set"] = s.to_json()
        lines.append(f"restricted to Q0 of rank {len(dec.q0)}: {len(s)} rays, index [Q : Q0 + Q1] = {dec.index}")
    verdict = tame_degree(s)
    out["tame_degree"] = verdict.to_json()
    wit = positive_combination_feasible(s.rays, args.m)
    if wit is None:
        cert = tame_certificate(s, args.m)
        if cert is None:
            raise ArithmeticError("no witness and no certificate")
        out["tame"] = True
        out["certificate"] = cert.to_json()
        lines.append(f"{args.m}-tame (tame degree {_deg(verdict.degree)})")
    else:
        out["tame"] = False
        out["witness"] = wit.to_json()
        lines.append(f"not {args.m}-tame (tame degree {_deg(verdict.degree)})")
        lines.append(f"witness: {wit}")
    return out


def _deg(d) -> str:
    return "infinite" if not isinstance(d, int) else str(d)


def cmd_bounds(args, lines: list[str]) -> dict:
    try:
        t = bounds_table(args.n, args.s, args.c)
    except ValueError as exc:
        raise ContractError(str(exc)) from exc
    lines.append(f"d = {t['bredon_fp']['value']} (floor(n/s), THEOREM)")
    if args.c is not None:
        lines.append(f"m_conjectural = {t['bredon_fp_conjectural']['value']} (floor(n/(s*c)), CONJECTURAL)")
    return t


def cmd_conv_check(args, lines: list[str]) -> dict:
    sub = _load_set(args.sub)
    s = _load_set(args.set)
    if sub.rank != s.rank:
        raise ContractError(f"rank mismatch: {sub.rank} != {s.rank}")
    if args.t < 1 or (args.n is not None and args.n < 1):
        raise ContractError("--t and --n must be positive")
    cert = conv_inclusion_certificate(sub, s, args.t, args.n)
    if cert.ok:
        lines.append(f"every ray of the subset lies in conv_<={args.t} of the set")
    else:
        lines.append(f"counterexample: {list(cert.counterexample.coords)} is not in conv_<={args.t}")
    for r, w in cert.witnesses:
        lines.append(f"  {list(r.coords)}: {w}")
    if cert.premise_n is not None:
        lines.append(f"0 outside conv_<={cert.premise_n}(set): {cert.premise_holds}; "
                     f"0 outside conv_<={cert.conclusion_degree}(subset): {cert.conclusion_holds}")
    return cert.to_json()


COMMANDS: dict[str, Callable] = {
    "prime-char": cmd_prime_char,
    "number-field": cmd_number_field,
    "tame-check": cmd_tame_check,
    "bounds": cmd_bounds,
    "conv-check": cmd_conv_check,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sigmatame", description="Sigma-invariant complements and tameness reports.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", metavar="PATH", help="write the full report here")
        p.add_argument("--prime-cap", type=int, default=DEFAULT_CAPS.prime_search, help="largest prime searched")
        p.add_argument("--principal-box", type=int, default=DEFAULT_CAPS.principal_box,
                       help="coefficient radius for generator searches (degree > 2)")
        p.add_argument("--group-cap", type=int, default=DEFAULT_CAPS.group_order, help="largest group order")
        p.add_argument("--minkowski-cap", type=int, default=DEFAULT_CAPS.minkowski,
                       help="largest Minkowski bound for degree > 2")
        p.add_argument("--root-precision", type=int, default=DEFAULT_CAPS.root_precision,
                       help="p-adic bits used to find the automorphisms")
        p.add_argument("--primitive-box", type=int, default=DEFAULT_CAPS.primitive_box,
                       help="coefficient radius for alternative primitive elements")
        return p

    p = common(sub.add_parser("prime-char", help="the F_{p^m}(x1) family"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, help="index of H0 = <mu^d>; a divisor of m (default: all)")

    p = common(sub.add_parser("number-field", help="the Galois number field family"))
    p.add_argument("--disc", type=int, help="squarefree D for Q(sqrt D)")
    p.add_argument("--poly", help="coefficients c0,c1,...,1 of a monic Galois polynomial")
    p.add_argument("--higher-degree", action="store_true", help="allow degree 3 and 4 polynomials")
    p.add_argument("--q", type=int, help="split prime (default: smallest admissible)")
    p.add_argument("--p", type=int, help="prime p != q (default: smallest unramified)")
    p.add_argument("--subgroup", default="id",
                   help="H0 as comma-separated generator indices into the automorphism list, 'all' or 'id'")

    p = common(sub.add_parser("tame-check", help="decide m-tameness of a ray set"))
    p.add_argument("--set", required=True, metavar="FILE")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--action", metavar="FILE", help="restrict to the fixed sublattice of this action first")

    p = common(sub.add_parser("bounds", help="floor bounds"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--c", type=int)

    p = common(sub.add_parser("conv-check", help="conv_<=t inclusion certificate"))
    p.add_argument("--sub", required=True, metavar="FILE")
    p.add_argument("--set", required=True, metavar="FILE")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, help="also check zero-avoidance from 0 outside conv_<=n(set)")
    return ap


_ECHO_SKIP = {"json", "command"}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONTRACT if exc.code else EXIT_OK
    lines: list[str] = []
    try:
        body = COMMANDS[args.command](args, lines)
        report = {
            "command": args.command,
            "parameters": {k: v for k, v in sorted(vars(args).items()) if k not in _ECHO_SKIP},
            "report": body,
        }
        checked = validate_report(report)
    except CapExceeded as exc:
        print(f"undecided: {exc}", file=stderr)
        return EXIT_CAP
    except ValueError as exc:  # ContractError and malformed inputs
        print(f"error: {exc}", file=stderr)
        return EXIT_CONTRACT
    except ArithmeticError as exc:
        print(f"verification failed: {exc}", file=stderr)
        return EXIT_INTERNAL
    lines.append(f"re-validated {checked} witnesses and certificates")
    for line in lines:
        print(line, file=stdout)
    if args.json:
        Path(args.json).write_text(dump(report), encoding="utf-8")
    return EXIT_OK


def main() -> None:
    sys.exit(run())
