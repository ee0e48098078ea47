"""Command-line interface.

Exit codes: 0 success / all checks verified, 1 a mathematical check
failed (axiom violation, unverified pentagon data, failed class-equation
check), 2 usage or input errors (unparsable arguments, malformed files).
Output is deterministic: byte-identical across repeated runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import basedring, center, landau, obstruction, pentagon
from .basedring import CertifiedDecimal
from .exactnum import render


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_ring(path: str) -> basedring.FusionRing:
    return basedring.ring_from_json(Path(path).read_text(encoding="utf-8"))


# -- ring ---------------------------------------------------------------


def _cmd_ring_validate(args) -> int:
    try:
        ring = _load_ring(args.file)
    except (OSError, ValueError) as e:
        return _fail_usage(str(e))
    report = basedring.validate(ring)
    if args.json:
        payload = {"valid": not report, "violations": [str(v) for v in report]}
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        for violation in report:
            print(f"FAIL {violation}")
        print("ring: VALID" if not report else "ring: INVALID")
    return 0 if not report else 1


def _cmd_ring_kn(args) -> int:
    try:
        ring = basedring.make_kn(args.n)
    except ValueError as e:
        return _fail_usage(str(e))
    _emit(basedring.ring_to_json(ring), args.out)
    return 0


def _cmd_ring_boxtimes(args) -> int:
    try:
        left = _load_ring(args.left)
        right = _load_ring(args.right)
    except (OSError, ValueError) as e:
        return _fail_usage(str(e))
    for name, ring in (("left", left), ("right", right)):
        report = basedring.validate(ring)
        if report:
            print(f"FAIL {name} ring: {report[0]}")
            return 1
    _emit(basedring.ring_to_json(basedring.boxtimes(left, right)), args.out)
    return 0


# -- fpdim ----------------------------------------------------------------


def _cmd_fpdim(args) -> int:
    try:
        ring = _load_ring(args.file)
    except (OSError, ValueError) as e:
        return _fail_usage(str(e))
    report = basedring.validate(ring)
    if report:
        print(f"FAIL {report[0]}")
        return 1
    dims = basedring.fp_dims(ring)
    if args.json:
        payload = []
        for label, dim in zip(ring.labels, dims):
            if isinstance(dim, CertifiedDecimal):
                payload.append({
                    "label": label,
                    "certified": str(dim),
                    "error_bound": str(dim.width / 2),
                })
            else:
                payload.append({"label": label, "exact": render(dim)})
        print(json.dumps({"dims": payload}, ensure_ascii=False, indent=2))
    else:
        for label, dim in zip(ring.labels, dims):
            rendered = str(dim) if isinstance(dim, CertifiedDecimal) else render(dim)
            print(f"{label}: {rendered}")
    return 0


# -- center ----------------------------------------------------------------


def _cmd_center(args) -> int:
    try:
        data = center.build_center_data(args.n)
    except ValueError as e:
        return _fail_usage(str(e))
    except (center.ClassBookkeepingError, center.IsoVerificationError) as e:
        print(f"FAIL {e}")
        return 1
    table = center.free_bimodule_decompositions(data)
    dims = center.center_dims(args.n)
    if args.json:
        payload = {
            "n": args.n,
            "decompositions": {
                data.ambient.labels[m]: list(coeffs) for m, coeffs in table.items()
            },
            "center_ring": basedring.ring_to_dict(data.center),
            "dims": [render(d) for d in dims],
        }
        if args.verify:
            payload["checks"] = {
                "hom_counting": "PASS",
                "iso_bijection": list(center.verify_center_iso(args.n)),
                "forgetful_hom": "PASS",
            }
        print(json.dumps(payload, ensure_ascii=False, indent=2))
        return 0
    print(f"double of the rank-2 ring with X*X = 1 + {args.n}*X")
    print("free bimodule decompositions A*M*A over the ambient basis:")
    for m, coeffs in table.items():
        parts = [
            f"{c}*{name}"
            for c, name in zip(coeffs, center.BIMODULE_NAMES)
            if c
        ]
        print(f"  M = {data.ambient.labels[m]}: " + " + ".join(parts))
    print("center ring basis: " + ", ".join(data.center.labels))
    print("dims: " + ", ".join(render(d) for d in dims))
    if args.verify:
        print("hom-counting checks: PASS")
        sigma = center.verify_center_iso(args.n)
        print(
            "center ring = external square: VERIFIED via bijection "
            + str(tuple(sigma))
        )
        print("forgetful homomorphism: PASS")
    return 0


# -- classify ----------------------------------------------------------------


def _classify_one(n: int) -> dict:
    verdict = obstruction.modular_obstruction(n)
    descriptors = obstruction.classify_rank2(n)
    return {
        "n": n,
        "count": len(descriptors),
        "descriptors": [d.to_dict() for d in descriptors],
        "verdict": verdict.to_dict(),
    }


def _classify_line(entry: dict) -> str:
    n, count = entry["n"], entry["count"]
    if count:
        dims = ", ".join(f"dim(X) = {d['dim']}" for d in entry["descriptors"])
        return f"n={n}: {count} categorifications ({dims})"
    cert = entry["verdict"]["certificate"]
    return (
        f"n={n}: 0 categorifications "
        f"(impossible: n*d = {cert['nd']} > {cert['bound']})"
    )


def _cmd_classify(args) -> int:
    values = [args.n] if args.n is not None else list(range(args.upto + 1))
    entries = [_classify_one(n) for n in values]
    if args.json:
        payload = {"results": entries}
        if args.upto is not None:
            payload["total"] = sum(e["count"] for e in entries)
        print(json.dumps(payload, ensure_ascii=False, indent=2))
        return 0
    for entry in entries:
        print(_classify_line(entry))
    if args.upto is not None:
        total = sum(e["count"] for e in entries)
        print(f"total categorifications for 0 <= n <= {args.upto}: {total}")
    return 0


# -- pentagon ----------------------------------------------------------------


def _cmd_pentagon(args) -> int:
    if args.n not in (0, 1):
        return _fail_usage(
            f"pentagon data exists only for n in {{0, 1}}, got n = {args.n}"
        )
    if args.verify is not None:
        try:
            data = pentagon.FData2.from_json(
                Path(args.verify).read_text(encoding="utf-8")
            )
        except (OSError, ValueError) as e:
            return _fail_usage(str(e))
        if data.n != args.n:
            return _fail_usage(
                f"file carries n = {data.n}, but --n {args.n} was requested"
            )
        ok = pentagon.verify_pentagon(data)
        if args.json:
            print(json.dumps({"verified": ok}, ensure_ascii=False))
        else:
            print("pentagon constraints: SATISFIED" if ok else
                  "pentagon constraints: VIOLATED")
        return 0 if ok else 1

    solutions = pentagon.solve_rank2(args.n)
    if args.json:
        payload = {
            "n": args.n,
            "solutions": [
                {**sol.to_dict(), "dim": render(pentagon.dim_from_fdata(sol))}
                for sol in solutions
            ],
        }
        print(json.dumps(payload, ensure_ascii=False, indent=2))
        return 0
    for i, sol in enumerate(solutions, 1):
        dim = render(pentagon.dim_from_fdata(sol))
        if sol.n == 0:
            print(f"solution {i}: alpha = {render(sol.alpha)}; dim(X) = {dim}")
        else:
            rows = "; ".join(
                "[" + ", ".join(render(x) for x in row) + "]" for row in sol.M
            )
            print(
                f"solution {i}: lambda = {render(sol.lam)}, "
                f"M = [{rows}]; dim(X) = {dim}"
            )
    return 0


# -- landau ----------------------------------------------------------------


def _cmd_landau(args) -> int:
    ceiling = landau.feasibility_ceiling()
    if args.n < 1:
        return _fail_usage(f"--n must be >= 1, got {args.n}")
    if args.n > ceiling:
        return _fail_usage(
            f"--n {args.n} exceeds the feasibility ceiling {ceiling}"
        )
    target = Fraction(1)
    if args.r is not None:
        try:
            target = Fraction(args.r)
        except (ValueError, ZeroDivisionError) as e:
            return _fail_usage(f"bad --r value {args.r!r}: {e}")
        if target <= 0:
            return _fail_usage(f"--r must be positive, got {target}")
    solutions = landau.egyptian_solutions(args.n, target)
    max_coord = max((sol.xs[-1] for sol in solutions), default=None)
    if args.json:
        payload = {"n": args.n, "target": str(target), "count": len(solutions)}
        if max_coord is not None:
            payload["max"] = max_coord
        if args.list:
            payload["solutions"] = [list(sol.xs) for sol in solutions]
        print(json.dumps(payload, ensure_ascii=False, indent=2))
        return 0
    if args.list:
        for sol in solutions:
            print(sol)
    if max_coord is None:
        print("count=0")
    else:
        print(f"count={len(solutions)} max={max_coord}")
    return 0


# -- hopf-check ----------------------------------------------------------------


def _parse_blocks(text: str) -> landau.HopfBlocks:
    blocks = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError("empty block entry")
        r_text, sep, m_text = chunk.partition(":")
        if not sep:
            raise ValueError(f"block {chunk!r} must look like r:m")
        blocks.append((int(r_text), int(m_text)))
    return landau.HopfBlocks(blocks=tuple(blocks))


def _cmd_hopf_check(args) -> int:
    try:
        parsed = _parse_blocks(args.blocks)
        blocks = landau.HopfBlocks(blocks=parsed.blocks, claimed_dim=args.dim)
    except ValueError as e:
        return _fail_usage(str(e))
    report = landau.class_equation_check(blocks)
    if args.json:
        payload = {
            "ok": report.ok,
            "failures": list(report.failures),
            "notes": list(report.notes),
        }
        print(json.dumps(payload, ensure_ascii=False, indent=2))
        return 0 if report.ok else 1
    for failure in report.failures:
        print(f"FAIL {failure}")
    for note in report.notes:
        print(f"NOTE {note}")
    print("hopf-check: PASS" if report.ok else "hopf-check: FAIL")
    return 0 if report.ok else 1


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusion2",
        description=(
            "Exact-arithmetic analysis of the rank-2 fusion rules "
            "X*X = 1 + n*X: validation, the double's bookkeeping, "
            "categorification verdicts, coherence solving, and "
            "Egyptian-fraction dimension bounds."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="based-ring construction and validation")
    ring_sub = ring.add_subparsers(dest="ring_command", required=True)

    p = ring_sub.add_parser("validate", help="check the axioms of a ring file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ring_validate)

    p = ring_sub.add_parser("kn", help="emit the ring with X*X = 1 + n*X")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_ring_kn)

    p = ring_sub.add_parser("boxtimes", help="external product of two ring files")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_ring_boxtimes)

    p = sub.add_parser("fpdim", help="Frobenius-Perron dimensions of a ring file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fpdim)

    p = sub.add_parser("center", help="double's bookkeeping at one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true",
                   help="print the verification checklist")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_center)

    p = sub.add_parser("classify", help="categorification verdicts")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--upto", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("pentagon", help="coherence solving and verification")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--solve", action="store_true")
    group.add_argument("--verify", metavar="FDATA_FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_pentagon)

    p = sub.add_parser("landau", help="reciprocal-sum enumeration and bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true")
    p.add_argument("--r", metavar="P/Q")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_landau)

    p = sub.add_parser("hopf-check", help="class-equation admissibility check")
    p.add_argument("--blocks", required=True, metavar="r1:m1,r2:m2,...")
    p.add_argument("--dim", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_hopf_check)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        return args.func(args)
    except obstruction.InternalInconsistencyError as e:
        print(f"FAIL internal inconsistency: {e}", file=sys.stderr)
        return 1
    except pentagon.InternalInconsistencyError as e:
        print(f"FAIL internal inconsistency: {e}", file=sys.stderr)
        return 1
    except landau.CeilingExceededError as e:
        return _fail_usage(str(e))


def main() -> None:
    sys.exit(run())
