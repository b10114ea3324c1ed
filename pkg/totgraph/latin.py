"""
totgraph.latin.py

Latin-sum arrays: labeled arrays whose entries differ whenever the row labels (or the column
labels) of two distinct cells sum to zero in their field.
"""
import collections
import dataclasses
import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import LatinSumError
from .models import LatinExport
from .ring import FiniteRing, LocalBlock

LOGGER = logging.getLogger(__name__)

LatinCheck = collections.namedtuple("LatinCheck", ["valid", "witness"])
MixedSquareCheck = collections.namedtuple("MixedSquareCheck", ["d1", "d2", "d3"])


@dataclasses.dataclass(frozen=True, eq=False)
class FieldLabel:
    """
    Ordered row or column labels.

    `elements` are field element indices (None for abstract labels); `negation[i, j]` is true
    iff label i plus label j is zero.
    """

    names: Tuple[str, ...]
    negation: np.ndarray
    elements: Optional[Tuple[int, ...]] = None
    field: Optional[LocalBlock] = None

    def __len__(self):
        return len(self.names)

    def positions(self) -> np.ndarray:
        """Map field element index -> label position (-1 when not a label)."""
        lookup = np.full(self.field.order, -1, dtype=np.int64)
        lookup[list(self.elements)] = np.arange(len(self.elements))
        return lookup

    @classmethod
    def from_field(cls, field: LocalBlock, nonzero: bool = False) -> "FieldLabel":
        """
        Odd characteristic: 0, y_1, -y_1, ..., y_m, -y_m with y_j the lower index of each pair.
        Characteristic 2: the elements in index order. `nonzero` drops 0.
        """
        if field.residue_char == 2:
            elements = list(range(field.order))
        else:
            pairs = field.negation_pairs(range(1, field.order))
            elements = [0] + [e for pair in pairs for e in pair]
        if nonzero:
            elements = elements[1:]
        sums = field.add[np.ix_(elements, elements)]
        return cls(
            tuple(field.labels[e] for e in elements), sums == 0, tuple(elements), field
        )

    @classmethod
    def self_paired(cls, names: Sequence[str]) -> "FieldLabel":
        """Abstract labels each of which is its own negative (as in characteristic 2)."""
        return cls(tuple(names), np.eye(len(names), dtype=bool))


@dataclasses.dataclass(frozen=True, eq=False)
class LatinSumArray:
    """
    Array over the dense alphabet 0..alphabet_size-1.

    `display` maps symbols to the signed presentation used by the odd-characteristic
    construction; it is the identity elsewhere.
    """

    row_labels: FieldLabel
    col_labels: FieldLabel
    entries: np.ndarray
    alphabet_size: int
    display: Dict[int, str] = dataclasses.field(default_factory=dict)
    construction: str = ""

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    def display_entries(self) -> List[List[str]]:
        return [[self.display.get(int(s), str(int(s))) for s in row] for row in self.entries]

    def transpose(self) -> "LatinSumArray":
        """The array with row and column roles swapped."""
        return LatinSumArray(
            self.col_labels,
            self.row_labels,
            self.entries.T.copy(),
            self.alphabet_size,
            self.display,
            f"{self.construction} (transposed)",
        )

    def serialize(self) -> dict:
        return LatinExport(
            rows=list(self.row_labels.names),
            cols=list(self.col_labels.names),
            entries=self.entries.tolist(),
            alphabet_size=self.alphabet_size,
            valid=is_latin_sum(self).valid,
            display=self.display,
        ).dict()


def is_latin_sum(array: LatinSumArray) -> LatinCheck:
    """
    Check both sum-avoidance conditions over all pairs of distinct cells.

    :returns: (valid, witness); the witness is the first violating pair of (row, col) cells
        in row-major order. Rows and columns labeled 0 are paired with themselves, so a
        repeat inside row 0 comes before any clash between rows y and -y.
    :rtype: LatinCheck
    """
    rows, cols = array.entries.shape
    row_of = np.repeat(np.arange(rows), cols)
    col_of = np.tile(np.arange(cols), rows)
    values = array.entries.reshape(-1)
    constrained = (
        array.row_labels.negation[np.ix_(row_of, row_of)]
        | array.col_labels.negation[np.ix_(col_of, col_of)]
    )
    clash = np.triu(constrained & (values[:, None] == values[None, :]), 1)
    bad = np.argwhere(clash)
    if bad.size == 0:
        return LatinCheck(True, None)
    first, second = bad[0]
    witness = ((int(row_of[first]), int(col_of[first])), (int(row_of[second]), int(col_of[second])))
    return LatinCheck(False, witness)


def as_field(field: Union[LocalBlock, FiniteRing]) -> LocalBlock:
    """The field block of a field given as a block or as a one-block ring."""
    block = field
    if isinstance(field, FiniteRing):
        if not field.is_local:
            raise LatinSumError(f"{field} is not a field")
        block = field.blocks[0]
    if not block.is_field:
        raise LatinSumError(f"{block} is not a field")
    return block


# ################
# Mixed characteristic squares
# ################


def mixed_square(n: int) -> np.ndarray:
    """
    An n x n array (n odd) with injective rows, injective column 0, and disjoint columns
    2j-1 and 2j, built from the identity row by swaps and 3-cycles.

    Row 2p-1 swaps symbols 0 and 2p-1. Row 2p places 2p in column 0, 2q-1 in column 2p and 0
    in column 2q-1, where q = p + 1 wraps around to 1.

    For n >= 5 the whole square satisfies all three conditions. No 3 x 3 square over three
    symbols does, so for n = 3 only the first two rows are disjoint on columns 1 and 2; a
    mixed array never takes more than n - 1 rows.
    """
    m = (n - 1) // 2
    square = np.tile(np.arange(n), (n, 1))
    for p in range(1, m + 1):
        odd, even = 2 * p - 1, 2 * p
        square[odd, 0], square[odd, odd] = odd, 0
        q = p + 1 if p < m else 1
        square[even, 0], square[even, even], square[even, 2 * q - 1] = even, 2 * q - 1, 0
    return square


def check_mixed_square(square: np.ndarray) -> MixedSquareCheck:
    """Evaluate the three mixed-characteristic conditions separately."""
    square = np.asarray(square)
    d1 = all(len(set(row)) == len(row) for row in square.tolist())
    d2 = len(set(square[:, 0].tolist())) == square.shape[0]
    d3 = all(
        not set(square[:, 2 * j - 1].tolist()) & set(square[:, 2 * j].tolist())
        for j in range(1, (square.shape[1] - 1) // 2 + 1)
    )
    return MixedSquareCheck(d1, d2, d3)


# A 7 x 7 mixed-characteristic square, symbols 1..7.
MIXED_SQUARE_7 = (
    (1, 2, 3, 4, 5, 6, 7),
    (2, 1, 3, 4, 5, 6, 7),
    (3, 1, 4, 2, 5, 6, 7),
    (4, 1, 3, 2, 5, 6, 7),
    (5, 1, 3, 2, 6, 4, 7),
    (6, 1, 3, 2, 5, 4, 7),
    (7, 6, 3, 2, 5, 4, 1),
)


def mixed_square_fixture(columns: LocalBlock) -> LatinSumArray:
    """
    The stored 7 x 7 square as a Latin-sum array: self-paired rows, columns labeled by a
    field of order 7, symbols shifted to 0..6.
    """
    entries = np.array(MIXED_SQUARE_7) - 1
    rows = FieldLabel.self_paired([f"x{i}" for i in range(1, 8)])
    return LatinSumArray(rows, FieldLabel.from_field(columns), entries, 7, {}, "fixture-7x7")


# ################
# Constructions
# ################


def _signed_symbol(value: int) -> int:
    """Dense symbol of a signed value: 0 -> 0, v > 0 -> 2v - 1, v < 0 -> -2v."""
    if value > 0:
        return 2 * value - 1
    return -2 * value


def _odd_odd(n: int, m: int) -> Tuple[np.ndarray, str]:
    """Signed-value array for two odd fields with (|F1|-1)/2 = n <= m = (|F2|-1)/2."""
    table = "signed-odd" if n % 2 else "signed-even"
    b_body = (2, 0) if n % 2 else (2, -2)
    candidates = [v for j in range(2, m + 1) for v in (j, -j)] or [2]
    b_col0 = [c for c in candidates if c not in (1, -1)][:n]
    forbidden_a = {b_body[0], b_body[1]}
    a_col0 = [c for c in [1, -1] + candidates if c not in b_col0 and c not in forbidden_a][:n]

    values = np.zeros((2 * n + 1, 2 * m + 1), dtype=np.int64)
    for j in range(1, m + 1):
        values[0, 2 * j - 1], values[0, 2 * j] = j, -j
    for i in range(1, n + 1):
        values[2 * i - 1, 0] = a_col0[i - 1]
        values[2 * i, 0] = b_col0[i - 1]
        for j in range(1, m + 1):
            values[2 * i - 1, 2 * j - 1], values[2 * i - 1, 2 * j] = 1, -1
            values[2 * i, 2 * j - 1], values[2 * i, 2 * j] = b_body
    return values, table


def build_latin_sum(f1, f2) -> LatinSumArray:
    """
    A |F1| x |F2| Latin-sum array for fields with |F1| <= |F2|.

    Uses |F2| symbols, or 4 when both fields have order 3.

    :raises LatinSumError: when |F1| > |F2|.
    """
    f1, f2 = as_field(f1), as_field(f2)
    if f1.order > f2.order:
        raise LatinSumError(f"|F1| = {f1.order} exceeds |F2| = {f2.order}")
    rows, cols = FieldLabel.from_field(f1), FieldLabel.from_field(f2)
    even1, even2 = f1.residue_char == 2, f2.residue_char == 2
    display: Dict[int, str] = {}

    if even1 and even2:
        entries = np.add.outer(np.arange(f1.order), np.arange(f2.order)) % f2.order
        construction = "cyclic"
    elif not even1 and not even2:
        values, construction = _odd_odd((f1.order - 1) // 2, (f2.order - 1) // 2)
        entries = np.vectorize(_signed_symbol)(values)
        display = {int(_signed_symbol(v)): str(int(v)) for v in np.unique(values)}
    elif even1:
        entries = mixed_square(f2.order)[: f1.order]
        construction = "mixed-square"
    else:
        half = f2.order // 2
        evens, odds = np.arange(0, f2.order, 2), np.arange(1, f2.order, 2)
        entries = np.zeros((f1.order, f2.order), dtype=np.int64)
        entries[0] = np.arange(f2.order)
        for i in range(1, (f1.order - 1) // 2 + 1):
            shift = (np.arange(f2.order) // 2 + i) % half
            entries[2 * i - 1] = evens[shift]
            entries[2 * i] = odds[shift]
        construction = "parity-split"

    alphabet = 4 if f1.order == f2.order == 3 else f2.order
    array = LatinSumArray(rows, cols, np.asarray(entries), alphabet, display, construction)
    check = is_latin_sum(array)
    if not check.valid:  # pragma: no cover
        raise LatinSumError(f"{construction} array for {f1} x {f2} violates {check.witness}")
    LOGGER.debug(f"Latin-sum array {f1} x {f2} ({construction}, {alphabet} symbols)")
    return array


def build_latin_sum_reg(f1, f2) -> LatinSumArray:
    """
    A (|F1|-1) x (|F2|-1) Latin-sum array over the nonzero labels, for char(F1) = 2.

    :raises LatinSumError: when char(F1) != 2 or |F1| > |F2|.
    """
    f1, f2 = as_field(f1), as_field(f2)
    if f1.residue_char != 2:
        raise LatinSumError(f"{f1} does not have characteristic 2")
    if f1.order > f2.order:
        raise LatinSumError(f"|F1| = {f1.order} exceeds |F2| = {f2.order}")
    rows = FieldLabel.from_field(f1, nonzero=True)
    cols = FieldLabel.from_field(f2, nonzero=True)
    width = f2.order - 1
    if f2.residue_char == 2:
        entries = np.add.outer(np.arange(f1.order - 1), np.arange(width)) % width
        construction = "cyclic"
    else:
        entries = np.tile(np.arange(width), (f1.order - 1, 1))
        construction = "constant-rows"
    array = LatinSumArray(rows, cols, entries, width, {}, construction)
    check = is_latin_sum(array)
    if not check.valid:  # pragma: no cover
        raise LatinSumError(f"{construction} array for {f1}* x {f2}* violates {check.witness}")
    return array
