"""Assembly of the dimension-ordered semiorthogonal decomposition.

Components are sorted by weakly decreasing coarse dimension; ties break
deterministically by (element weight ascending, element bit value
ascending, + sector before - sector, split index).  Any refinement of
the dimensional order is admissible, so the tie-break is a convention,
fixed here once so reports are reproducible.

``msodc_plan`` produces the leftward block moves that regroup the
decomposition so all pieces of one group element sit together (blocks
ordered by first occurrence), replaying the moves on a Gram matrix when
one is supplied to record which moves are orthogonal transpositions.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import mutations
from .groups import ActionSpec, Bits, bit_value, dot, is_effective, make_spec, projective_kernel, weight
from .inertia import CoarseType, InertiaComponent, SMOOTH, components
from .loci import LocusPiece


@dataclass(frozen=True)
class SodReport:
    spec: ActionSpec
    components: tuple[InertiaComponent, ...]  # in decomposition order
    total_rank: int
    grouping: tuple[tuple[Bits, tuple[int, ...]], ...]  # element -> positions
    effective: bool
    kernel: tuple[Bits, ...]
    smoothness_warnings: tuple[int, ...]  # positions with unknown smoothness


def _sector_sign(spec: ActionSpec, comp: InertiaComponent) -> int:
    """0 for the + sector of the component's element, 1 for the - sector."""
    if not comp.piece.support:
        return 0
    return dot(spec.characters[comp.piece.support[0]], comp.element)


def order_key(spec: ActionSpec, comp: InertiaComponent):
    return (
        -comp.coarse_dim,
        weight(comp.element),
        bit_value(comp.element),
        _sector_sign(spec, comp),
        comp.split_index or 0,
    )


def assemble(spec: ActionSpec) -> SodReport:
    comps = sorted(components(spec), key=lambda c: order_key(spec, c))
    grouping: dict[Bits, list[int]] = {}
    for pos, comp in enumerate(comps):
        grouping.setdefault(comp.element, []).append(pos)
    kernel = projective_kernel(spec)
    return SodReport(
        spec=spec,
        components=tuple(comps),
        total_rank=sum(c.rank for c in comps),
        grouping=tuple((g, tuple(ps)) for g, ps in grouping.items()),
        effective=is_effective(spec),
        kernel=tuple(kernel),
        smoothness_warnings=tuple(
            pos for pos, c in enumerate(comps) if c.smooth != SMOOTH
        ),
    )


def piece_label(comp: InertiaComponent) -> str:
    """Short human-readable tag, e.g. P1[1,2] or pt[0]."""
    support = ",".join(str(i) for i in comp.piece.support)
    names = {
        "affine": f"A{comp.piece.dim}",
        "projective": f"P{comp.piece.dim}",
        "point": "pt",
        "fermat": f"Q{comp.piece.dim}",
        "point_pair": "pair" if comp.split_index is None else f"pair.{comp.split_index}",
    }
    return f"{names[comp.piece.kind]}[{support}]"


def report_to_dict(report: SodReport) -> dict:
    doc = report.spec.to_dict()
    doc["components"] = [
        {
            "element": list(c.element),
            "support": list(c.piece.support),
            "geometry": c.piece.kind,
            "dim": c.coarse_dim,
            "coarse_type": {"kind": c.coarse_type.kind, "dim": c.coarse_type.dim},
            "rank": c.rank,
            "split_index": c.split_index,
            "smooth": c.smooth,
            "label": piece_label(c),
        }
        for c in report.components
    ]
    doc["order"] = list(range(len(report.components)))
    doc["total_rank"] = report.total_rank
    doc["grouping"] = [
        {"element": list(g), "positions": list(ps)} for g, ps in report.grouping
    ]
    doc["flags"] = {
        "effective": report.effective,
        "kernel": [list(g) for g in report.kernel],
        "smoothness_warnings": list(report.smoothness_warnings),
    }
    return doc


def report_from_dict(doc: dict) -> SodReport:
    spec = make_spec(doc["space"]["kind"], doc["space"]["dim"], doc["action"])
    comps = tuple(
        InertiaComponent(
            element=tuple(entry["element"]),
            piece=LocusPiece(entry["geometry"], tuple(entry["support"])),
            split_index=entry["split_index"],
            coarse_dim=entry["dim"],
            rank=entry["rank"],
            coarse_type=CoarseType(
                entry["coarse_type"]["kind"], entry["coarse_type"]["dim"]
            ),
            smooth=entry["smooth"],
        )
        for entry in doc["components"]
    )
    return SodReport(
        spec=spec,
        components=comps,
        total_rank=doc["total_rank"],
        grouping=tuple(
            (tuple(entry["element"]), tuple(entry["positions"]))
            for entry in doc["grouping"]
        ),
        effective=doc["flags"]["effective"],
        kernel=tuple(tuple(g) for g in doc["flags"]["kernel"]),
        smoothness_warnings=tuple(doc["flags"]["smoothness_warnings"]),
    )


@dataclass(frozen=True)
class Move:
    block: int
    direction: str
    orthogonal: bool | None  # None = unknown (no Gram supplied)


@dataclass(frozen=True)
class MutationPlan:
    moves: tuple[Move, ...]
    block_order: tuple[int, ...]  # final order of the original block indices

    def to_dict(self) -> dict:
        return {
            "moves": [
                {"block": m.block, "direction": m.direction, "orthogonal": m.orthogonal}
                for m in self.moves
            ],
            "block_order": list(self.block_order),
        }


def grouped_block_order(report: SodReport) -> list[int]:
    """Target block order: same-element pieces contiguous, elements by
    first occurrence, pieces of one element in report order."""
    seen: dict[Bits, list[int]] = {}
    for pos, comp in enumerate(report.components):
        seen.setdefault(comp.element, []).append(pos)
    out: list[int] = []
    for positions in seen.values():
        out.extend(positions)
    return out


def msodc_plan(report: SodReport, gram: list[list[int]] | None = None) -> MutationPlan:
    """Leftward adjacent block moves regrouping the pieces by element.

    Every component of the report is one block.  When ``gram`` is given
    (the canonical-generator Gram matrix in report order, so block i has
    ``report.components[i].rank`` rows), the moves are replayed on it
    and each is flagged orthogonal iff the adjacent blocks pair to zero
    in both directions at that moment; without a Gram the flag is None
    (undecidable).
    """
    target = grouped_block_order(report)
    order = list(range(len(report.components)))
    seq = None
    if gram is not None:
        sizes = tuple(c.rank for c in report.components)
        if len(gram) != sum(sizes):
            raise ValueError(
                f"Gram has {len(gram)} rows but the report's blocks need {sum(sizes)}"
            )
        seq = mutations.identity_sequence(tuple(tuple(r) for r in gram), sizes)
    moves: list[Move] = []
    for t in range(len(target)):
        p = order.index(target[t])
        while p > t:
            orthogonal: bool | None = None
            if seq is not None:
                seq, record = mutations.move_block(seq, p, "left")
                orthogonal = record.orthogonal
            moves.append(Move(block=p, direction="left", orthogonal=orthogonal))
            order.insert(p - 1, order.pop(p))
            p -= 1
    return MutationPlan(moves=tuple(moves), block_order=tuple(order))
