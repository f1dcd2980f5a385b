"""Command-line interface.

Subcommands: ``analyze`` (inertia components), ``sod`` (ordered
decomposition, rank ledger, regrouping plan), ``gram`` (canonical
generator Gram matrix, projective specs only), ``mutate`` (apply a
mutation script to a serialized sequence), ``verify`` (oracle checks).

Inputs come either from a JSON action-spec document or from a built-in
preset; exactly one source must be given.  Human tables are advisory;
``--json`` output is the stable contract.  Exit status: 0 success,
1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import mutations, verify
from .euler import EulerError, gram_report
from .groups import ActionSpec, SpecError, parse_spec
from .presets import preset
from .sod import assemble, msodc_plan, piece_label, report_to_dict

OK, CHECK_FAILED, INPUT_ERROR = 0, 1, 2


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return INPUT_ERROR


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def _load_spec(args) -> ActionSpec:
    if args.input and args.preset:
        raise SpecError("give either an input file or --preset, not both")
    if args.preset:
        return preset(args.preset, n=args.n, k=args.k, q_dim=args.q_dim)
    if args.input:
        try:
            with open(args.input, encoding="utf-8") as fh:
                return parse_spec(fh.read())
        except OSError as exc:
            raise SpecError(f"cannot read {args.input}: {exc}") from exc
    raise SpecError("no input: give a spec file or --preset")


def _element_str(bits) -> str:
    return "".join(str(b) for b in bits) if bits else "()"


def cmd_analyze(args) -> int:
    spec = _load_spec(args)
    report = assemble(spec)
    if args.json:
        doc = report_to_dict(report)
        _emit(_dump({"components": doc["components"], "flags": doc["flags"]}), args.out)
        return OK
    lines = [f"{'pos':>3}  {'element':>8}  {'piece':<14} {'dim':>3}  {'coarse':<16} {'rank':>4}"]
    for pos, comp in enumerate(report.components):
        lines.append(
            f"{pos:>3}  {_element_str(comp.element):>8}  {piece_label(comp):<14}"
            f" {comp.coarse_dim:>3}  {comp.coarse_type.label():<16} {comp.rank:>4}"
        )
    if not report.effective:
        lines.append(f"warning: nontrivial projective kernel of order {len(report.kernel)}")
    _emit("\n".join(lines), args.out)
    return OK


def _plan_with_gram(spec, report):
    """Regrouping plan, with orthogonality flags when a Gram is available."""
    try:
        result = gram_report(spec, report)
        matrix = [list(r) for r in result.matrix] if result.triangular else None
    except EulerError:
        matrix = None
    return msodc_plan(report, matrix)


def cmd_sod(args) -> int:
    spec = _load_spec(args)
    report = assemble(spec)
    plan = _plan_with_gram(spec, report)
    grouped_labels = [piece_label(report.components[i]) for i in plan.block_order]
    if args.json:
        doc = report_to_dict(report)
        doc["msodc"] = plan.to_dict()
        doc["msodc"]["grouped_labels"] = grouped_labels
        _emit(_dump(doc), args.out)
        return OK
    lines = [f"decomposition ({len(report.components)} pieces, total rank {report.total_rank}):"]
    lines.append("  " + " > ".join(piece_label(c) for c in report.components))
    lines.append(f"grouping plan ({len(plan.moves)} moves):")
    for move in plan.moves:
        orth = {True: "orthogonal", False: "mutating", None: "unknown"}[move.orthogonal]
        lines.append(f"  move block {move.block} {move.direction} ({orth})")
    lines.append("grouped order:")
    lines.append("  " + " > ".join(grouped_labels))
    if not report.effective:
        lines.append(f"warning: nontrivial projective kernel of order {len(report.kernel)}")
    if report.smoothness_warnings:
        lines.append(f"warning: unknown smoothness at positions {list(report.smoothness_warnings)}")
    _emit("\n".join(lines), args.out)
    return OK


def cmd_gram(args) -> int:
    spec = _load_spec(args)
    report = assemble(spec)
    try:
        result = gram_report(spec, report)
    except EulerError as exc:
        return _fail(str(exc))
    if args.json:
        _emit(_dump(result.to_dict()), args.out)
        return OK
    lines = [f"blocks: {list(result.block_sizes)}"]
    if result.normalized:
        lines.append(f"character twists: {[list(t) for t in result.twists]}")
    width = max(len(str(x)) for row in result.matrix for x in row)
    for row in result.matrix:
        lines.append("  " + " ".join(f"{x:>{width}}" for x in row))
    lines.append(f"unipotent upper triangular: {result.triangular}")
    _emit("\n".join(lines), args.out)
    return OK


def cmd_mutate(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            seq = mutations.sequence_from_dict(json.load(fh))
        with open(args.script, encoding="utf-8") as fh:
            script = mutations.parse_script(fh.read())
    except (OSError, ValueError, KeyError) as exc:
        return _fail(f"bad mutate input: {exc}")
    try:
        final, records = mutations.apply_script(seq, script)
    except (IndexError, ValueError) as exc:
        return _fail(f"cannot apply script: {exc}")
    doc = final.to_dict()
    doc["moves"] = [
        {"block": r.block, "direction": r.direction, "orthogonal": r.orthogonal}
        for r in records
    ]
    doc["semiorthogonal"] = mutations.is_semiorthogonal(final)
    doc["unimodular"] = mutations.is_unimodular(final)
    if args.json:
        _emit(_dump(doc), args.out)
    else:
        lines = [
            f"applied {len(records)} moves; semiorthogonal={doc['semiorthogonal']}"
            f" unimodular={doc['unimodular']}"
        ]
        for r in records:
            orth = "orthogonal" if r.orthogonal else "mutating"
            lines.append(f"  block {r.block} {r.direction} ({orth})")
        lines.append(f"blocks: {doc['blocks']}")
        _emit("\n".join(lines), args.out)
    return OK


def _verify_checks(args) -> list[verify.CheckResult]:
    if args.check:
        named = {
            "etale-sweep": verify.check_etale_sweep,
            "gram-presets": verify.check_gram_presets,
            "random-sweep": verify.check_random_rank_sweep,
        }
        if args.check in named:
            return [named[args.check]()]
        if args.check == "etale":
            if args.n is None or args.k is None:
                raise SpecError("the etale check needs --n and --k")
            return [verify.check_etale(args.n, args.k)]
        if args.check == "quadric":
            if args.q_dim is None:
                raise SpecError("the quadric check needs --q-dim")
            return [verify.check_quadric(args.q_dim)]
        if args.check == "projective-rank":
            return [verify.check_projective_rank(_load_spec(args))]
        if args.check == "burnside-total":
            return [verify.check_burnside_total(_load_spec(args))]
        raise SpecError(f"unknown check {args.check!r}")
    if args.preset == "etale":
        return [verify.check_etale(args.n, args.k)]
    if args.preset == "quadric":
        return [verify.check_quadric(args.q_dim)]
    if args.preset or args.input:
        spec = _load_spec(args)
        return [verify.check_projective_rank(spec), verify.check_burnside_total(spec)]
    return verify.run_battery()


def cmd_verify(args) -> int:
    try:
        results = _verify_checks(args)
    except (SpecError, ValueError, TypeError) as exc:
        return _fail(str(exc))
    if args.json:
        doc = [
            {
                "name": r.name,
                "status": r.status,
                "expected": r.expected,
                "actual": r.actual,
                "context": r.context,
            }
            for r in results
        ]
        _emit(_dump(doc), args.out)
    else:
        _emit("\n".join(r.line() for r in results), args.out)
    return CHECK_FAILED if any(r.status == verify.FAIL for r in results) else OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mu2sod",
        description="Inertia components, semiorthogonal decompositions, and "
        "K-theoretic checks for diagonal mu_2^k actions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_spec=True):
        if needs_spec:
            p.add_argument("input", nargs="?", help="action-spec JSON document")
            p.add_argument("--preset", choices=["etale", "p2-example", "pn-full", "quadric"])
            p.add_argument("--n", type=int)
            p.add_argument("--k", type=int)
            p.add_argument("--q-dim", type=int, dest="q_dim")
        p.add_argument("--json", action="store_true", help="structured output")
        p.add_argument("--out", help="write output to a file")

    add_common(sub.add_parser("analyze", help="list inertia components"))
    add_common(sub.add_parser("sod", help="ordered decomposition and regrouping plan"))
    add_common(sub.add_parser("gram", help="canonical-generator Gram matrix"))

    mutate = sub.add_parser("mutate", help="apply a mutation script to a sequence")
    mutate.add_argument("input", help="serialized sequence JSON (form, vectors, blocks)")
    mutate.add_argument("--script", required=True, help="mutation script JSON")
    mutate.add_argument("--json", action="store_true")
    mutate.add_argument("--out")

    ver = sub.add_parser("verify", help="run oracle checks")
    add_common(ver)
    ver.add_argument(
        "--check",
        help="named check (etale-sweep, gram-presets, random-sweep, etale, "
        "quadric, projective-rank, burnside-total)",
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "analyze": cmd_analyze,
        "sod": cmd_sod,
        "gram": cmd_gram,
        "mutate": cmd_mutate,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except SpecError as exc:
        return _fail(str(exc))
    except ValueError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
