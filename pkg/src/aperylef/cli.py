"""Command-line front end: analysis records, batch sweeps, JSONL persistence.

Records are self-contained JSON documents (schema_version 1) that can be
regenerated byte-identically from the generator tuple and the root seed
(APERY_SEED).  Timings are opt-in so default output stays deterministic.
Exit codes: 0 success, 2 input error, 3 inapplicable analysis, 4 internal
limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from itertools import combinations
from typing import Optional, Sequence

from .algebra import (
    build_algebra,
    ci_tilde_ideal,
    codim3_defining_ideal,
)
from .errors import (
    EmptyInput,
    GcdNotOne,
    NotApplicable,
    NotCI,
    NotGorenstein,
    PolyParseError,
    SizeLimit,
)
from .inverse_system import dual_algebra_view, dual_socle_generator, hessian
from .linalg import rank_info
from .lefschetz import (
    conjecture_check,
    derive_seed,
    quotient_condition_ci,
    quotient_condition_codim3,
    root_seed,
    slp_by_hessian,
    slp_by_ranks,
    transfer_wlp,
    wlp_by_hessian,
    wlp_by_ranks,
)
from .polynomial import parse_polynomial
from .semigroup import box_elements, compute_beta_gamma, create_semigroup

SCHEMA_VERSION = 1


def _parse_gens(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise EmptyInput(f"cannot parse generator list {text!r}") from exc


def classify(frame) -> str:
    if frame.is_monomial_ci():
        return "monomial-CI"
    if frame.is_ci():
        return "CI"
    table = frame.table
    codim = len(table.semigroup.generators) - 1
    if codim == 3 and table.m_pure_verdict():
        return "codim3-structured"
    return "other"


def analyze_record(
    gens: Sequence[int],
    method: str = "both",
    seed_root: Optional[int] = None,
    with_timings: bool = False,
) -> dict:
    """Full pipeline record for one semigroup."""
    t0 = time.perf_counter()
    S = create_semigroup(list(gens))
    seed = derive_seed(
        root_seed() if seed_root is None else seed_root,
        ",".join(map(str, S.generators)),
    )
    table = S.apery_table()
    frame = compute_beta_gamma(S)
    _, _, boxes = box_elements(frame)
    A = build_algebra(table)
    ginfo = A.gorenstein_info()
    m_pure = table.m_pure_verdict()
    classification = classify(frame)

    dual_text = None
    view = None
    F = None
    if m_pure:
        F = dual_socle_generator(table)
        if F.degree() >= 1:
            view = dual_algebra_view(F)
        dual_text = str(F)

    if method == "hessian" and not m_pure:
        raise NotGorenstein(
            "hessian-only analysis requires an order-symmetric apery set"
        )

    wlp: dict = {}
    slp: dict = {}
    if method in ("ranks", "both"):
        wlp["ranks"] = wlp_by_ranks(A, seed=seed).to_dict()
        slp["ranks"] = slp_by_ranks(A, seed=seed).to_dict()
    if method in ("hessian", "both"):
        if view is not None:
            wlp["hessian"] = wlp_by_hessian(F, view, seed=seed).to_dict()
            slp["hessian"] = slp_by_hessian(F, view, seed=seed).to_dict()
        elif m_pure:
            wlp["hessian"] = {"verdict": "holds", "notes": "trivial algebra"}
            slp["hessian"] = {"verdict": "holds", "notes": "trivial algebra"}
        else:
            note = "skipped: algebra is not gorenstein"
            wlp["hessian"] = {"verdict": "skipped", "notes": note}
            slp["hessian"] = {"verdict": "skipped", "notes": note}

    ideal_info = None
    if frame.gamma:
        tilde = ci_tilde_ideal(frame)
        ideal_info = {
            "tilde_generators": tilde.generator_texts(),
            "degrees": tilde.degrees,
            "rho": list(frame.rho),
            "is_ci": tilde.data["is_ci"],
            "is_monomial_ci": tilde.data["is_monomial_ci"],
            "box_gamma_points": tilde.data["box_gamma_points"],
            "box_gamma_elements": tilde.data["box_gamma_elements"],
        }
        if classification == "codim3-structured":
            full = codim3_defining_ideal(S)
            ideal_info["full_generators"] = full.generator_texts()
            ideal_info["structure"] = {
                k: full.data[k]
                for k in ("mu2", "mu4", "C", "h2", "h3", "h4", "omega_d", "omega_e")
            }

    chain = None
    conjecture = None
    if frame.is_ci():
        chain = quotient_condition_ci(S, seed=seed).to_dict()
    elif classification == "codim3-structured":
        chain = quotient_condition_codim3(S, seed=seed).to_dict()
    if frame.is_ci() or len(S.generators) - 1 == 3:
        conjecture = conjecture_check(S, seed=seed).to_dict()

    elapsed = time.perf_counter() - t0
    return {
        "schema_version": SCHEMA_VERSION,
        "generators": list(S.generators),
        "seed": seed,
        "multiplicity": S.multiplicity,
        "frobenius": S.frobenius,
        "socle_degree": table.socle_degree,
        "apery": {
            "elements": list(table.elements),
            "orders": list(table.orders),
            "max_representations": [
                [list(r.exponents) for r in reps] for reps in table.max_reps
            ],
        },
        "m_pure_symmetric": bool(m_pure),
        "m_pure_witness": None
        if m_pure.witness is None
        else {
            "index": m_pure.witness.index,
            "condition": m_pure.witness.condition,
            "left": m_pure.witness.left,
            "right": m_pure.witness.right,
            "expected": m_pure.witness.expected,
        },
        "hilbert": list(A.hilbert()),
        "gorenstein": ginfo,
        "frame": {
            "beta": list(frame.beta),
            "gamma": list(frame.gamma),
            "rho": list(frame.rho),
            "witnesses": {
                str(i): list(r.exponents) for i, r in frame.gamma_witness.items()
            },
            "box_gamma_minus_apery": list(boxes.gamma_minus_apery),
            "box_b_minus_apery": list(boxes.b_minus_apery),
        },
        "classification": classification,
        "dual_generator": dual_text,
        "ideal": ideal_info,
        "wlp": wlp or None,
        "slp": slp or None,
        "quotient_chain": chain,
        "conjecture": conjecture,
        "timings": {"analyze_seconds": round(elapsed, 6)} if with_timings else None,
    }


def from_dual_record(poly_text: str, seed_root: Optional[int] = None) -> dict:
    """Hessian-based analysis of an algebra presented by a dual polynomial."""
    F = parse_polynomial(poly_text)
    if not F or not F.is_homogeneous() or F.degree() < 1:
        raise PolyParseError("dual polynomial must be nonzero, homogeneous, degree >= 1")
    view = dual_algebra_view(F, require_positive_degree=True)
    seed = derive_seed(root_seed() if seed_root is None else seed_root, str(F))
    wlp_h = wlp_by_hessian(F, view, seed=seed)
    slp_h = slp_by_hessian(F, view, seed=seed)
    wlp_r = wlp_by_ranks(view, seed=seed)
    slp_r = slp_by_ranks(view, seed=seed)
    hess1_zero = None
    if view.socle_degree >= 2:
        m1 = hessian(F, 1, view.bases[1])
        rank, _ = rank_info(m1)
        hess1_zero = rank < m1.nrows  # determinant identically zero
    return {
        "schema_version": SCHEMA_VERSION,
        "dual_polynomial": str(F),
        "variables": list(F.vars),
        "seed": seed,
        "socle_degree": view.socle_degree,
        "hilbert": list(view.hilbert),
        "gorenstein": True,
        "hess1_zero": hess1_zero,
        "wlp": {"hessian": wlp_h.to_dict(), "ranks": wlp_r.to_dict()},
        "slp": {"hessian": slp_h.to_dict(), "ranks": slp_r.to_dict()},
    }


_ANALYZE_FIELDS = {
    "schema_version": int,
    "generators": list,
    "seed": int,
    "multiplicity": int,
    "frobenius": int,
    "socle_degree": int,
    "apery": dict,
    "m_pure_symmetric": bool,
    "hilbert": list,
    "gorenstein": dict,
    "frame": dict,
    "classification": str,
    "wlp": (dict, type(None)),
    "slp": (dict, type(None)),
}


def validate_record(record: dict) -> None:
    """Structural schema check for analyze/sweep records; raises ValueError."""
    if record.get("schema_version") != SCHEMA_VERSION:
        raise ValueError("unknown schema_version")
    for key, kind in _ANALYZE_FIELDS.items():
        if key not in record:
            raise ValueError(f"missing field {key!r}")
        if not isinstance(record[key], kind):
            raise ValueError(f"field {key!r} has the wrong type")
    if record["classification"] not in ("monomial-CI", "CI", "codim3-structured", "other"):
        raise ValueError("unknown classification")
    if any(not isinstance(g, int) for g in record["generators"]):
        raise ValueError("generators must be integers")
    if any(not isinstance(h, int) for h in record["hilbert"]):
        raise ValueError("hilbert entries must be integers")


def _emit(record: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(record) + "\n")
    else:
        out.write(_human(record) + "\n")


def _human(record: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key, value in record.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_human(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(_human(item, indent + 1))
                lines.append(f"{pad}  -")
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(line for line in lines if line)


def _matrix_text(matrix) -> str:
    if matrix.nrows > 10 or matrix.ncols > 10:
        return (
            f"[{matrix.nrows}x{matrix.ncols} matrix not rendered; "
            "larger than 10x10]"
        )
    return matrix.to_text()


def _read_resume_keys(path: str) -> set[str]:
    keys: set[str] = set()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except FileNotFoundError:
        return keys
    for i, line in enumerate(lines):
        line = line.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
            keys.add(",".join(map(str, record["generators"])))
        except (json.JSONDecodeError, KeyError, TypeError):
            print(
                f"warning: ignoring corrupt line {i + 1} in {path}",
                file=sys.stderr,
            )
    return keys


def sweep(args) -> int:
    lo, hi = args.mult
    clo, chi = args.count
    written = skipped = resumed = 0
    keys = _read_resume_keys(args.out) if (args.resume and args.out) else set()
    out = open(args.out, "a", encoding="utf-8") if args.out else sys.stdout
    flagged = []
    try:
        for m in range(lo, hi + 1):
            for count in range(clo, chi + 1):
                if count < 2:
                    continue
                pool = range(m + 1, args.max_gen + 1)
                for rest in combinations(pool, count - 1):
                    gens = (m,) + rest
                    try:
                        S = create_semigroup(list(gens))
                    except (GcdNotOne, EmptyInput):
                        continue
                    if S.generators != gens:
                        continue  # not a minimal generating tuple
                    key = ",".join(map(str, S.generators))
                    if key in keys:
                        resumed += 1
                        continue
                    table = S.apery_table()
                    if args.require_m_pure and not table.m_pure_verdict():
                        skipped += 1
                        continue
                    if args.require_ci_or_codim3:
                        frame = compute_beta_gamma(S)
                        if not (frame.is_ci() or len(gens) - 1 == 3):
                            skipped += 1
                            continue
                    record = analyze_record(gens, method=args.method, seed_root=args.seed)
                    out.write(json.dumps(record) + "\n")
                    out.flush()
                    keys.add(key)
                    written += 1
                    conj = record.get("conjecture")
                    if conj and not conj.get("all_wlp", True):
                        flagged.append(key)
    finally:
        if args.out:
            out.close()
    print(
        f"sweep: wrote {written}, filtered {skipped}, resumed past {resumed}",
        file=sys.stderr,
    )
    if flagged:
        print(
            "sweep: conjecture counterexample candidates: " + "; ".join(flagged),
            file=sys.stderr,
        )
    return 0


def _range_pair(text: str) -> tuple[int, int]:
    parts = text.split(":")
    if len(parts) == 1:
        v = int(parts[0])
        return (v, v)
    if len(parts) == 2:
        return (int(parts[0]), int(parts[1]))
    raise argparse.ArgumentTypeError("ranges look like LO:HI")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aperylef",
        description="Lefschetz analysis of graded algebras from numerical semigroups",
    )
    parser.add_argument("--seed", type=int, default=None, help="override APERY_SEED")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, gens=True):
        if gens:
            p.add_argument("--gens", required=True, help="comma-separated generators")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out", default=None, help="write output to this path")

    p = sub.add_parser("analyze", help="full pipeline for one semigroup")
    add_common(p)
    p.add_argument("--method", choices=("ranks", "hessian", "both"), default="both")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings")

    p = sub.add_parser("from-dual", help="analyze the algebra presented by a polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None)

    p = sub.add_parser("apery", help="apery set, orders, maximal representations")
    add_common(p)

    p = sub.add_parser("dual", help="dual socle generator polynomial")
    add_common(p)

    p = sub.add_parser("hessian", help="hessian matrix of the dual generator")
    add_common(p)
    p.add_argument("--d", type=int, required=True, help="hessian degree")

    p = sub.add_parser("classify", help="frame data and classification")
    add_common(p)

    p = sub.add_parser("quotient-chain", help="quotient-condition construction")
    p.add_argument("--gens", default=None)
    p.add_argument("--poly", default=None)
    p.add_argument("--steps", default=None, help="comma list of var or var:power")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None)

    p = sub.add_parser("conjecture", help="WLP of all single-variable colon quotients")
    add_common(p)

    p = sub.add_parser("sweep", help="batch analysis over generator tuples")
    p.add_argument("--mult", type=_range_pair, required=True, help="multiplicity LO:HI")
    p.add_argument("--count", type=_range_pair, default=(3, 4), help="generator count LO:HI")
    p.add_argument("--max-gen", type=int, required=True, help="largest allowed generator")
    p.add_argument("--method", choices=("ranks", "hessian", "both"), default="ranks")
    p.add_argument("--require-m-pure", action="store_true")
    p.add_argument("--require-ci-or-codim3", action="store_true")
    p.add_argument("--out", default=None, help="JSONL output path (append)")
    p.add_argument("--resume", action="store_true")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    close_out = False
    try:
        if getattr(args, "out", None) and args.command != "sweep":
            out = open(args.out, "w", encoding="utf-8")
            close_out = True
        if args.command == "analyze":
            record = analyze_record(
                _parse_gens(args.gens),
                method=args.method,
                seed_root=args.seed,
                with_timings=args.timings,
            )
            _emit(record, args.format, out)
        elif args.command == "from-dual":
            record = from_dual_record(args.poly, seed_root=args.seed)
            _emit(record, args.format, out)
        elif args.command == "apery":
            S = create_semigroup(_parse_gens(args.gens))
            table = S.apery_table()
            record = {
                "schema_version": SCHEMA_VERSION,
                "generators": list(S.generators),
                "frobenius": S.frobenius,
                "socle_degree": table.socle_degree,
                "elements": list(table.elements),
                "orders": list(table.orders),
                "max_representations": [
                    [list(r.exponents) for r in reps] for reps in table.max_reps
                ],
                "m_pure_symmetric": bool(table.m_pure_verdict()),
            }
            _emit(record, args.format, out)
        elif args.command == "dual":
            S = create_semigroup(_parse_gens(args.gens))
            F = dual_socle_generator(S.apery_table())
            _emit(
                {
                    "schema_version": SCHEMA_VERSION,
                    "generators": list(S.generators),
                    "dual_generator": str(F),
                },
                args.format,
                out,
            )
        elif args.command == "hessian":
            S = create_semigroup(_parse_gens(args.gens))
            F = dual_socle_generator(S.apery_table())
            view = dual_algebra_view(F)
            if not 0 <= args.d <= view.socle_degree:
                raise NotApplicable(f"degree {args.d} outside 0..{view.socle_degree}")
            matrix = hessian(F, args.d, view.bases[args.d])
            if args.format == "json":
                record = {
                    "schema_version": SCHEMA_VERSION,
                    "generators": list(S.generators),
                    "degree": args.d,
                    "basis": [str(b) for b in matrix.row_labels],
                    "entries": [[str(e) for e in row] for row in matrix.entries],
                }
                _emit(record, "json", out)
            else:
                out.write(f"basis: {[str(b) for b in matrix.row_labels]}\n")
                out.write(_matrix_text(matrix) + "\n")
        elif args.command == "classify":
            S = create_semigroup(_parse_gens(args.gens))
            frame = compute_beta_gamma(S)
            _, _, boxes = box_elements(frame)
            tilde = ci_tilde_ideal(frame) if frame.gamma else None
            record = {
                "schema_version": SCHEMA_VERSION,
                "generators": list(S.generators),
                "classification": classify(frame),
                "beta": list(frame.beta),
                "gamma": list(frame.gamma),
                "rho": list(frame.rho),
                "box_gamma_minus_apery": list(boxes.gamma_minus_apery),
                "tilde_generators": tilde.generator_texts() if tilde else [],
            }
            if record["classification"] == "codim3-structured":
                record["full_generators"] = codim3_defining_ideal(S).generator_texts()
            _emit(record, args.format, out)
        elif args.command == "quotient-chain":
            if args.gens:
                S = create_semigroup(_parse_gens(args.gens))
                frame = compute_beta_gamma(S)
                seed = args.seed
                if frame.is_ci():
                    report = quotient_condition_ci(S, seed=derive_seed(root_seed() if seed is None else seed, args.gens))
                else:
                    report = quotient_condition_codim3(S, seed=derive_seed(root_seed() if seed is None else seed, args.gens))
                _emit(report.to_dict(), args.format, out)
            elif args.poly:
                F = parse_polynomial(args.poly)
                view = dual_algebra_view(F, require_positive_degree=True)
                steps = []
                for item in (args.steps or "").split(","):
                    item = item.strip()
                    if not item:
                        continue
                    if ":" in item:
                        var, power = item.split(":")
                        steps.append((var.strip(), int(power)))
                    else:
                        steps.append((item, 1))
                if not steps:
                    raise NotApplicable("--steps is required with --poly")
                seed = derive_seed(
                    root_seed() if args.seed is None else args.seed, str(F)
                )
                report = transfer_wlp(view, steps, seed=seed)
                _emit(report.to_dict(), args.format, out)
            else:
                raise EmptyInput("quotient-chain needs --gens or --poly")
        elif args.command == "conjecture":
            S = create_semigroup(_parse_gens(args.gens))
            seed = derive_seed(
                root_seed() if args.seed is None else args.seed,
                ",".join(map(str, S.generators)),
            )
            report = conjecture_check(S, seed=seed)
            _emit(report.to_dict(), args.format, out)
        elif args.command == "sweep":
            return sweep(args)
        return 0
    except (EmptyInput, GcdNotOne, PolyParseError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (NotApplicable, NotCI, NotGorenstein) as exc:
        print(f"inapplicable: {exc}", file=sys.stderr)
        return 3
    except SizeLimit as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return 4
    finally:
        if close_out:
            out.close()


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
