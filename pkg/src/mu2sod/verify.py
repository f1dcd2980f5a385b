"""Independent oracles for the countable consequences of the theory.

Each check recomputes an expected value along a code path disjoint from
the one that produced the actual value:

* component counts and dimensions on the affine presets come from
  binomial enumeration of multi-indices;
* projective total ranks come from the closed form (n+1) * 2^k for
  effective actions;
* the Burnside double sum (1/|G|) sum_{g,h} chi_c(X^g intersect X^h)
  runs entirely through subgroup sectors, bypassing component splitting;
* Gram checks compare engine pairings against binomial matrices.

Hand-computed fixture values (such as the quadric-surface count 17) are
asserted in the test suite only after these oracles reproduce them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb

from .euler import gram_report
from .groups import ActionSpec, is_effective, make_spec, span
from .loci import chi_c_total, fixed_pieces_subgroup
from .presets import etale, p2_example, pn_full, quadric
from .sod import SodReport, assemble

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class CheckResult:
    name: str
    status: str
    expected: object = None
    actual: object = None
    context: dict = field(default_factory=dict)

    def line(self) -> str:
        extra = f" ({self.context['reason']})" if "reason" in self.context else ""
        if self.status == FAIL:
            extra = f" expected={self.expected!r} actual={self.actual!r}"
        return f"{self.status.upper():7s} {self.name}{extra}"


def _result(name: str, expected, actual, **context) -> CheckResult:
    status = PASS if expected == actual else FAIL
    return CheckResult(name, status, expected, actual, context)


def check_etale(n: int, k: int) -> CheckResult:
    """2^k pieces on [A^n / mu_2^k], C(k, j) of dimension n - j, ranks 1."""
    report = assemble(etale(n, k))
    dims: dict[int, int] = {}
    for comp in report.components:
        dims[comp.coarse_dim] = dims.get(comp.coarse_dim, 0) + 1
    actual = {
        "pieces": len(report.components),
        "ranks": sorted({c.rank for c in report.components}),
        "dims": dims,
        "total_rank": report.total_rank,
    }
    expected = {
        "pieces": 1 << k,
        "ranks": [1],
        "dims": {n - j: comb(k, j) for j in range(k + 1)},
        "total_rank": 1 << k,
    }
    return _result(f"etale(n={n}, k={k})", expected, actual)


def check_projective_rank(spec: ActionSpec) -> CheckResult:
    """Total rank of an effective projective action is (n+1) * 2^k."""
    name = f"projective-rank(n={spec.dim}, k={spec.rank})"
    if spec.kind != "projective":
        return CheckResult(name, SKIPPED, context={"reason": "not a projective spec"})
    if not is_effective(spec):
        return CheckResult(name, SKIPPED, context={"reason": "nontrivial projective kernel"})
    report = assemble(spec)
    return _result(name, (spec.dim + 1) << spec.rank, report.total_rank)


def burnside_double_sum(spec: ActionSpec) -> int:
    """sum over ordered pairs (g, h) of chi_c(X^<g,h>), no components involved."""
    return sum(
        chi_c_total(fixed_pieces_subgroup(spec, span([g, h])))
        for g in spec.group
        for h in spec.group
    )


def check_burnside_total(spec: ActionSpec, report: SodReport | None = None) -> CheckResult:
    """Component ranks must sum to the Burnside double sum over |G|."""
    name = f"burnside-total({spec.kind}, dim={spec.dim}, k={spec.rank})"
    if report is None:
        report = assemble(spec)
    order = len(spec.group)
    double = burnside_double_sum(spec)
    if double % order:
        return CheckResult(
            name,
            FAIL,
            expected="double sum divisible by |G|",
            actual=f"{double} mod {order} = {double % order}",
        )
    return _result(name, double // order, report.total_rank, double_sum=double)


def check_quadric(q_dim: int) -> CheckResult:
    """Every quadric-preset component is a projective space or a point,
    and the exceptional-object count matches the Burnside oracle."""
    spec = quadric(q_dim)
    report = assemble(spec)
    burnside = check_burnside_total(spec, report)
    oracle_total = burnside.expected if burnside.status == PASS else None
    bad_types = sorted(
        {
            c.coarse_type.kind
            for c in report.components
            if c.coarse_type.kind not in ("projective", "point")
        }
    )
    actual = {"unclassified": bad_types, "count": report.total_rank}
    expected = {"unclassified": [], "count": oracle_total}
    return _result(
        f"quadric(q_dim={q_dim})",
        expected,
        actual,
        components=len(report.components),
        exceptional_objects=report.total_rank,
    )


def _block_slices(sizes) -> list[slice]:
    out, start = [], 0
    for s in sizes:
        out.append(slice(start, start + s))
        start += s
    return out


def _block(matrix, rows: slice, cols: slice) -> list[list[int]]:
    return [list(row[cols]) for row in matrix[rows]]


def _is_zero(block) -> bool:
    return all(x == 0 for row in block for x in row)


def check_gram_presets() -> CheckResult:
    """Gram shape on the bundled projective presets.

    (a) every diagonal block is the binomial matrix C(m + t' - t, m);
    (b) the full matrix is unipotent upper triangular (after character
        normalization if needed, with the chosen twists reported);
    (c) on the P^2 example, line blocks and point blocks are mutually
        orthogonal in both directions and some line-point block is
        nonzero in exactly one direction.
    """
    presets = [
        ("p1", pn_full(1)),
        ("p2-example", p2_example()),
        ("p2-full", pn_full(2)),
        ("p3-full", pn_full(3)),
        ("p4-full", pn_full(4)),
    ]
    failures: list[str] = []
    context: dict = {"normalized": {}, "equal_dim_blocks_orthogonal": {}}
    for name, spec in presets:
        report = assemble(spec)
        result = gram_report(spec, report)
        if result.normalized:
            context["normalized"][name] = [list(t) for t in result.twists]
        if not result.triangular:
            failures.append(f"{name}: Gram is not unipotent upper triangular")
            continue
        slices = _block_slices(result.block_sizes)
        for comp, sl in zip(report.components, slices):
            diag = _block(result.matrix, sl, sl)
            m = comp.coarse_type.dim if comp.coarse_type.kind == "projective" else 0
            want = [
                [comb(m + b - a, m) if b >= a else 0 for b in range(len(diag))]
                for a in range(len(diag))
            ]
            if diag != want:
                failures.append(f"{name}: diagonal block {diag} != binomial {want}")
        # record whether equal-dimension blocks pairwise vanish both ways
        orthogonal_pairs = []
        for i in range(len(slices)):
            for j in range(i + 1, len(slices)):
                ci, cj = report.components[i], report.components[j]
                if ci.coarse_dim != cj.coarse_dim:
                    continue
                both = _is_zero(_block(result.matrix, slices[i], slices[j])) and _is_zero(
                    _block(result.matrix, slices[j], slices[i])
                )
                orthogonal_pairs.append(both)
        context["equal_dim_blocks_orthogonal"][name] = all(orthogonal_pairs)

        if name == "p2-example":
            lines = [i for i, c in enumerate(report.components) if c.coarse_dim == 1]
            points = [i for i, c in enumerate(report.components) if c.coarse_dim == 0]
            for a in lines:
                for b in lines:
                    if a != b and not _is_zero(_block(result.matrix, slices[a], slices[b])):
                        failures.append(f"{name}: line blocks {a},{b} not orthogonal")
            for a in points:
                for b in points:
                    if a != b and not _is_zero(_block(result.matrix, slices[a], slices[b])):
                        failures.append(f"{name}: point blocks {a},{b} not orthogonal")
            one_way = [
                (a, b)
                for a in lines
                for b in points
                if not _is_zero(_block(result.matrix, slices[a], slices[b]))
                and _is_zero(_block(result.matrix, slices[b], slices[a]))
            ]
            if not one_way:
                failures.append(f"{name}: no line-point block nonzero in exactly one direction")
            context["line_point_one_way"] = one_way
    return CheckResult(
        "gram-presets",
        PASS if not failures else FAIL,
        expected=[],
        actual=failures,
        context=context,
    )


def random_effective_projective_spec(
    rng: random.Random, n_max: int = 4, k_max: int = 4
) -> ActionSpec:
    """Random diagonal projective spec with trivial projective kernel."""
    while True:
        n = rng.randint(1, n_max)
        k = rng.randint(0, min(n, k_max))
        rows = [[rng.randint(0, 1) for _ in range(n + 1)] for _ in range(k)]
        spec = make_spec("projective", n, rows)
        if is_effective(spec):
            return spec


def check_random_rank_sweep(count: int = 200, seed: int = 20240913) -> CheckResult:
    """Closed-form rank and Burnside double sum agree on random specs."""
    rng = random.Random(seed)
    failures = []
    for i in range(count):
        spec = random_effective_projective_spec(rng)
        rank = check_projective_rank(spec)
        burnside = check_burnside_total(spec)
        if rank.status != PASS or burnside.status != PASS:
            failures.append((i, spec.to_dict(), rank.status, burnside.status))
    return CheckResult(
        f"random-rank-sweep(count={count})",
        PASS if not failures else FAIL,
        expected=[],
        actual=failures,
        context={"seed": seed},
    )


def check_etale_sweep(n_max: int = 6) -> CheckResult:
    failures = [
        (n, k)
        for n in range(n_max + 1)
        for k in range(n + 1)
        if check_etale(n, k).status != PASS
    ]
    return CheckResult(
        f"etale-sweep(0<=k<=n<={n_max})",
        PASS if not failures else FAIL,
        expected=[],
        actual=failures,
    )


def run_battery() -> list[CheckResult]:
    """The default verification battery on bounded presets."""
    results = [check_etale_sweep()]
    results.append(check_projective_rank(p2_example()))
    results.append(check_burnside_total(p2_example()))
    for n in range(1, 5):
        results.append(check_projective_rank(pn_full(n)))
    for q_dim in range(1, 6):
        results.append(check_quadric(q_dim))
    results.append(check_gram_presets())
    results.append(check_random_rank_sweep())
    return results
