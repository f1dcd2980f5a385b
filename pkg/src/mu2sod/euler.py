"""Equivariant Euler pairings of twisted coordinate-subspace sheaves.

Works on the ambient projective space of a spec.  A ``KObject``
(support T, twist d, character chi) stands for the K-class of the
pushforward of O_{P(V_T)}(d) tensored with chi.  Three ingredients give
the G-invariant Euler pairing:

* ``cohomology``: H^*(P(V_T), O(e)) as a virtual character vector.
  Global sections are spanned by degree-e monomials in T's coordinates,
  each an eigenvector whose character is the mod-2 exponent pattern;
  top cohomology (e <= -|T|) is spanned by inverse monomials with all
  exponents >= 1 and contributes with sign (-1)^(|T|-1); everything in
  between vanishes.  Multiplicities are counted per parity class of the
  exponent vector, not by enumerating monomials.
* ``koszul``: the equivariant Koszul resolution of O_{P(V_T)}(d) chi by
  ambient line bundles, one term per subset of the complementary
  coordinates.
* ``euler_pairing``: resolve the first argument by ``koszul``, restrict
  each line-bundle term to the second argument's support, and read off
  the multiplicity of the trivial character.

Characters are self-inverse, so all character bookkeeping is XOR on the
integer encodings.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from math import comb

from .groups import ActionSpec, Bits, bit_value, bits_from_value, identity, xor
from .inertia import twist_step
from .sod import SodReport


class EulerError(ValueError):
    """Raised for pairings the engine does not define (e.g. affine ambient)."""


@dataclass(frozen=True)
class KObject:
    """Class of the pushforward of O_{P(V_T)}(twist) tensor char.

    A single-coordinate support is a skyscraper whatever the twist, so
    the twist is normalized to 0 there.
    """

    support: tuple[int, ...]
    twist: int
    char: Bits

    def __post_init__(self) -> None:
        if not self.support:
            raise ValueError("KObject needs a nonempty support")
        object.__setattr__(self, "support", tuple(sorted(self.support)))
        if len(self.support) == 1:
            object.__setattr__(self, "twist", 0)

    def twisted(self, psi: Bits) -> KObject:
        return replace(self, char=xor(self.char, psi))


def _check_ambient(spec: ActionSpec) -> None:
    if spec.kind == "affine":
        raise EulerError("Euler pairings need a proper ambient space")


def _char_values(spec: ActionSpec, support: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(bit_value(spec.characters[i]) for i in support)


@lru_cache(maxsize=None)
def _cohomology(chars: tuple[int, ...], rank: int, e: int) -> tuple[int, ...]:
    """Virtual character vector of H^*(P^(t-1), O(e)), indexed by
    character value; ``chars`` are the coordinate character values."""
    t = len(chars)
    out = [0] * (1 << rank)
    if 1 - t <= e <= -1:
        return tuple(out)
    negative = e < 0
    degree = -e if negative else e
    sign = (-1) ** (t - 1) if negative else 1
    for mask in range(1 << t):
        odd = [i for i in range(t) if (mask >> i) & 1]
        s = len(odd)
        if negative:
            # exponents are >= 1: odd slots start at 1, even slots at 2
            doubled = degree - s - 2 * (t - s)
        else:
            doubled = degree - s
        if doubled < 0 or doubled % 2:
            continue
        value = 0
        for i in odd:
            value ^= chars[i]
        out[value] += sign * comb(doubled // 2 + t - 1, t - 1)
    return tuple(out)


def cohomology(spec: ActionSpec, support: tuple[int, ...], e: int) -> tuple[int, ...]:
    """H^*(P(V_T), O(e)) as multiplicities per character value."""
    _check_ambient(spec)
    support = tuple(sorted(support))
    if not support:
        raise EulerError("cohomology needs a nonempty support")
    return _cohomology(_char_values(spec, support), spec.rank, e)


def koszul(spec: ActionSpec, obj: KObject) -> list[tuple[int, int, int]]:
    """Koszul resolution terms (twist, character value, sign).

    One term per subset S of the complement of the support:
    (d - |S|, chi XOR sum of S's coordinate characters, (-1)^|S|).
    """
    _check_ambient(spec)
    complement = [i for i in range(spec.num_coords) if i not in set(obj.support)]
    comp_chars = _char_values(spec, tuple(complement))
    base = bit_value(obj.char)
    terms = []
    for mask in range(1 << len(complement)):
        value = base
        size = 0
        for i, cv in enumerate(comp_chars):
            if (mask >> i) & 1:
                value ^= cv
                size += 1
        terms.append((obj.twist - size, value, -1 if size % 2 else 1))
    return terms


def euler_pairing(spec: ActionSpec, first: KObject, second: KObject) -> int:
    """G-invariant Euler pairing chi^G(first, second)."""
    _check_ambient(spec)
    target_chars = _char_values(spec, second.support)
    second_char = bit_value(second.char)
    total = 0
    for twist, char_value, sign in koszul(spec, first):
        vec = _cohomology(target_chars, spec.rank, second.twist - twist)
        total += sign * vec[second_char ^ char_value]
    return total


def gram(spec: ActionSpec, objects: list[KObject]) -> list[list[int]]:
    return [[euler_pairing(spec, e, f) for f in objects] for e in objects]


def is_unipotent_upper(matrix: list[list[int]]) -> bool:
    n = len(matrix)
    return all(matrix[i][i] == 1 for i in range(n)) and all(
        matrix[i][j] == 0 for i in range(n) for j in range(i)
    )


def canonical_generators(
    spec: ActionSpec, report: SodReport
) -> tuple[list[KObject], tuple[int, ...]]:
    """Generator classes of each decomposition piece, with block sizes.

    A piece with coarse moduli P^m on support T contributes the
    pullbacks of O(0), ..., O(m), i.e. twists growing by the degree of
    the quotient map (2 for a squaring quotient, 1 for an identity
    quotient); a point piece contributes its skyscraper.  Only fully
    classified projective specs are supported.
    """
    if spec.kind == "fermat_quadric":
        raise EulerError("canonical generators on a quadric are not supported")
    _check_ambient(spec)
    trivial = identity(spec.rank)
    objects: list[KObject] = []
    sizes: list[int] = []
    for comp in report.components:
        ctype = comp.coarse_type
        if ctype.kind == "projective":
            step = twist_step(spec, comp.piece.support)
            block = [
                KObject(comp.piece.support, step * t, trivial)
                for t in range(ctype.dim + 1)
            ]
        elif ctype.kind == "point":
            block = [KObject(comp.piece.support[:1], 0, trivial)]
        else:
            raise EulerError(
                f"no canonical generators for coarse type {ctype.label()}"
            )
        objects.extend(block)
        sizes.append(len(block))
    return objects, tuple(sizes)


def character_normalization(
    spec: ActionSpec, objects: list[KObject], sizes: tuple[int, ...]
) -> list[Bits] | None:
    """Greedy search for per-block character twists making the Gram
    unipotent upper triangular.

    Twisting a whole block by one character is an autoequivalence, so it
    never disturbs the block's internal pairings; blocks are processed
    left to right and each keeps the first character (trivial first)
    killing all pairings against the already-placed objects.  Returns
    None when some block admits no such character.
    """
    placed: list[KObject] = []
    chosen: list[Bits] = []
    start = 0
    for size in sizes:
        block = objects[start : start + size]
        start += size
        found = None
        for value in range(1 << spec.rank):
            psi = bits_from_value(value, spec.rank)
            twisted = [obj.twisted(psi) for obj in block]
            if all(
                euler_pairing(spec, t, earlier) == 0
                for t in twisted
                for earlier in placed
            ):
                found = psi
                placed.extend(twisted)
                break
        if found is None:
            return None
        chosen.append(found)
    return chosen


@dataclass(frozen=True)
class GramResult:
    objects: tuple[KObject, ...]
    block_sizes: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]
    twists: tuple[Bits, ...]  # character applied to each block
    normalized: bool  # True if a nontrivial normalization was needed
    triangular: bool

    def to_dict(self) -> dict:
        return {
            "blocks": list(self.block_sizes),
            "matrix": [list(r) for r in self.matrix],
            "objects": [
                {"support": list(o.support), "twist": o.twist, "char": list(o.char)}
                for o in self.objects
            ],
            "twists": [list(t) for t in self.twists],
            "normalized": self.normalized,
            "triangular": self.triangular,
        }


def gram_report(spec: ActionSpec, report: SodReport) -> GramResult:
    """Canonical-generator Gram of a report, auto-normalizing characters
    if the default trivial choice is not triangular."""
    objects, sizes = canonical_generators(spec, report)
    matrix = gram(spec, objects)
    trivial = identity(spec.rank)
    if is_unipotent_upper(matrix):
        return GramResult(
            tuple(objects),
            sizes,
            tuple(tuple(r) for r in matrix),
            tuple(trivial for _ in sizes),
            normalized=False,
            triangular=True,
        )
    twists = character_normalization(spec, objects, sizes)
    if twists is None:
        return GramResult(
            tuple(objects),
            sizes,
            tuple(tuple(r) for r in matrix),
            tuple(trivial for _ in sizes),
            normalized=False,
            triangular=False,
        )
    twisted_objects: list[KObject] = []
    start = 0
    for size, psi in zip(sizes, twists):
        twisted_objects.extend(obj.twisted(psi) for obj in objects[start : start + size])
        start += size
    matrix = gram(spec, twisted_objects)
    return GramResult(
        tuple(twisted_objects),
        sizes,
        tuple(tuple(r) for r in matrix),
        tuple(twists),
        normalized=True,
        triangular=is_unipotent_upper(matrix),
    )
