"""Mutations of exceptional sequences at the Grothendieck-group level.

A sequence is an ordered basis v_1..v_N of Z^N together with a fixed
integer bilinear form B; pairing(i, j) = v_i^T B v_j plays the role of
the Euler pairing chi(E_i, E_j).  The sequence convention is that
Hom(later, earlier) vanishes, so the pairing matrix must be unipotent
upper triangular for the sequence to be semiorthogonal.

A left mutation at position i replaces the adjacent pair (a, b) by
(b - pairing(a, b) * a, a); a right mutation is the inverse braid move.
Both are unimodular column operations, so the basis stays a basis.
Blocks partition the positions into contiguous runs; block moves in
``apply_script`` compose elementwise mutations so that a whole block
passes an adjacent one, then swap the two block sizes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


@dataclass(frozen=True)
class ExceptionalSequence:
    form: Matrix
    vectors: Matrix
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.form)
        if any(len(row) != n for row in self.form):
            raise ValueError("bilinear form must be square")
        if len(self.vectors) != n or any(len(v) != n for v in self.vectors):
            raise ValueError("need N lattice vectors of length N")
        if sum(self.blocks) != n or any(b <= 0 for b in self.blocks):
            raise ValueError("blocks must be a partition of the positions")

    def __len__(self) -> int:
        return len(self.vectors)

    def block_bounds(self) -> list[tuple[int, int]]:
        """Half-open position ranges of the blocks."""
        out, start = [], 0
        for size in self.blocks:
            out.append((start, start + size))
            start += size
        return out

    def to_dict(self) -> dict:
        return {
            "form": [list(r) for r in self.form],
            "vectors": [list(v) for v in self.vectors],
            "blocks": list(self.blocks),
        }


def sequence_from_dict(doc: dict) -> ExceptionalSequence:
    return ExceptionalSequence(
        tuple(tuple(r) for r in doc["form"]),
        tuple(tuple(v) for v in doc["vectors"]),
        tuple(doc["blocks"]),
    )


def identity_sequence(form, blocks=None) -> ExceptionalSequence:
    """Standard-basis sequence on a given form; one block per position
    unless a block partition is supplied."""
    n = len(form)
    vectors = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    if blocks is None:
        blocks = (1,) * n
    return ExceptionalSequence(tuple(tuple(r) for r in form), vectors, tuple(blocks))


def pairing(seq: ExceptionalSequence, i: int, j: int) -> int:
    """v_i^T B v_j (0-based positions)."""
    n = len(seq)
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"positions ({i}, {j}) out of range for N={n}")
    vi, vj = seq.vectors[i], seq.vectors[j]
    bv = [sum(row[c] * vj[c] for c in range(n)) for row in seq.form]
    return sum(vi[r] * bv[r] for r in range(n))


def gram_matrix(seq: ExceptionalSequence) -> list[list[int]]:
    n = len(seq)
    return [[pairing(seq, i, j) for j in range(n)] for i in range(n)]


def is_semiorthogonal(seq: ExceptionalSequence) -> bool:
    """pairing(i, i) = 1 for all i and pairing(i, j) = 0 for i > j."""
    m = gram_matrix(seq)
    n = len(seq)
    return all(m[i][i] == 1 for i in range(n)) and all(
        m[i][j] == 0 for i in range(n) for j in range(i)
    )


def determinant(vectors: Matrix) -> int:
    """Exact integer determinant (fraction-free elimination)."""
    n = len(vectors)
    m = [[Fraction(x) for x in row] for row in vectors]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    assert det.denominator == 1
    return int(det)


def is_unimodular(seq: ExceptionalSequence) -> bool:
    return determinant(seq.vectors) in (1, -1)


def _with_vectors(seq: ExceptionalSequence, vectors: list[Vector]) -> ExceptionalSequence:
    return replace(seq, vectors=tuple(vectors))


def mutate_left(seq: ExceptionalSequence, i: int) -> ExceptionalSequence:
    """Mutate the object at position i leftward through position i-1.

    Positions (i-1, i) holding (a, b) become (b - pairing(a, b) a, a).
    Blocks partition positions and are untouched; ``apply_script``
    repartitions when moving whole blocks.
    """
    n = len(seq)
    if not (1 <= i < n):
        raise IndexError(f"left mutation needs 1 <= i < {n}, got {i}")
    c = pairing(seq, i - 1, i)
    a, b = seq.vectors[i - 1], seq.vectors[i]
    mutated = tuple(x - c * y for x, y in zip(b, a))
    vectors = list(seq.vectors)
    vectors[i - 1], vectors[i] = mutated, a
    return _with_vectors(seq, vectors)


def mutate_right(seq: ExceptionalSequence, i: int) -> ExceptionalSequence:
    """Mutate the object at position i rightward through position i+1.

    Positions (i, i+1) holding (a, b) become (b, a - pairing(a, b) b).
    Inverse of ``mutate_left`` on semiorthogonal adjacent pairs.
    """
    n = len(seq)
    if not (0 <= i < n - 1):
        raise IndexError(f"right mutation needs 0 <= i < {n - 1}, got {i}")
    c = pairing(seq, i, i + 1)
    a, b = seq.vectors[i], seq.vectors[i + 1]
    mutated = tuple(x - c * y for x, y in zip(a, b))
    vectors = list(seq.vectors)
    vectors[i], vectors[i + 1] = b, mutated
    return _with_vectors(seq, vectors)


@dataclass(frozen=True)
class MoveRecord:
    block: int
    direction: str
    orthogonal: bool


def blocks_orthogonal(seq: ExceptionalSequence, left: int, right: int) -> bool:
    """Whether two blocks pair to zero in both directions."""
    bounds = seq.block_bounds()
    (ls, le), (rs, re) = bounds[left], bounds[right]
    return all(
        pairing(seq, i, j) == 0 and pairing(seq, j, i) == 0
        for i in range(ls, le)
        for j in range(rs, re)
    )


def move_block(seq: ExceptionalSequence, block: int, direction: str):
    """One block move; returns (new sequence, move record).

    A leftward move passes every element of the block over the whole
    previous block (each moving element is mutated through the passed
    block's rightmost element first); blocks then swap sizes.
    """
    nblocks = len(seq.blocks)
    if direction not in ("left", "right"):
        raise ValueError(f"unknown direction {direction!r}")
    if direction == "left":
        if not (1 <= block < nblocks):
            raise IndexError(f"cannot move block {block} left of {nblocks} blocks")
        other = block - 1
    else:
        if not (0 <= block < nblocks - 1):
            raise IndexError(f"cannot move block {block} right of {nblocks} blocks")
        other = block + 1
    record = MoveRecord(block, direction, blocks_orthogonal(seq, min(block, other), max(block, other)))

    bounds = seq.block_bounds()
    size = seq.blocks[block]
    size_other = seq.blocks[other]
    if direction == "left":
        prev_start = bounds[other][0]
        for j in range(size):
            pos = prev_start + size_other + j
            for _ in range(size_other):
                seq = mutate_left(seq, pos)
                pos -= 1
    else:
        start = bounds[block][0]
        for j in range(size):
            pos = start + size - 1 - j  # rightmost unmoved element
            for _ in range(size_other):
                seq = mutate_right(seq, pos)
                pos += 1
    blocks = list(seq.blocks)
    blocks[other], blocks[block] = blocks[block], blocks[other]
    return replace(seq, blocks=tuple(blocks)), record


def apply_script(seq: ExceptionalSequence, moves):
    """Apply a list of block moves ({"block": int, "direction": "left"|"right"}).

    Returns (final sequence, move records); each record carries whether
    the two blocks were fully orthogonal at the time of the move (in
    which case the move is a pure transposition of classes).
    """
    records = []
    for move in moves:
        if isinstance(move, dict):
            block, direction = move["block"], move["direction"]
        else:
            block, direction = move
        seq, record = move_block(seq, block, direction)
        records.append(record)
    return seq, records


def parse_script(text: str) -> list[dict]:
    doc = json.loads(text)
    if not isinstance(doc, list):
        raise ValueError("mutation script must be a JSON array of moves")
    for move in doc:
        if not isinstance(move, dict) or "block" not in move or "direction" not in move:
            raise ValueError(f"malformed move {move!r}")
    return doc
