"""Construction of rate (n-1)/n convolutional parity checks from a
difference triangle set.

Given a family T_1..T_{n-1} of size-w sets (relaxed-valid, elements >= 1)
and a field GF(q), the transposed base matrix has scope(T) rows and n
columns: entry (i, k) is alpha^(i*k mod q-1) when i is in T_k, zero
otherwise, and the last column is the unit at row 1.  Row i+1 read as a
1 x n block is the coefficient H_i of the polynomial parity check, so the
memory is mu = scope - 1 and the syndrome former degree is delta = mu.

Sliding matrices stack shifted copies of the coefficient rows; the
truncated variant keeps the first j+1 block rows, the untruncated variant
keeps every row its block columns touch.  The last code symbol of each
block is the parity; the encoder is systematic.

Indexing note: matrix rows and columns are 1-based everywhere, matching
the reports.  Entry exponents depend on the 1-based row index, so this is
load-bearing, not cosmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .dts import DifferenceTriangleSet, validate
from .errors import IncompleteBlock, SetCountMismatch, ZeroElementInDTS
from .gf import ZERO, FieldElement, GaloisField


class ExponentMatrix:
    """Sparse matrix over a field, entries stored as exponents of alpha.

    ``entries`` maps 1-based (row, col) to the exponent of the nonzero
    entry; absent positions are zero.
    """

    def __init__(self, rows: int, cols: int, entries: dict[tuple[int, int], int],
                 field: GaloisField):
        for (r, c), e in entries.items():
            if not (1 <= r <= rows and 1 <= c <= cols):
                raise ValueError(f"entry ({r}, {c}) outside {rows} x {cols}")
            if not (0 <= e <= field.q - 2):
                raise ValueError(f"exponent {e} out of range for {field!r}")
        self.rows = rows
        self.cols = cols
        self.entries = dict(entries)
        self.field = field

    def get(self, r: int, c: int) -> FieldElement:
        return self.entries.get((r, c))

    @property
    def nonzero_count(self) -> int:
        return len(self.entries)

    def row_support(self, r: int) -> tuple[int, ...]:
        return tuple(sorted(c for (rr, c) in self.entries if rr == r))

    def col_support(self, c: int) -> tuple[int, ...]:
        return tuple(sorted(r for (r, cc) in self.entries if cc == c))

    def column(self, c: int) -> list[FieldElement]:
        return [self.get(r, c) for r in range(1, self.rows + 1)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> list[list[FieldElement]]:
        return [[self.get(r, c) for c in cols] for r in rows]

    def to_dense(self) -> list[list[FieldElement]]:
        return self.submatrix(range(1, self.rows + 1), range(1, self.cols + 1))

    def items(self) -> list[tuple[int, int, int]]:
        return sorted((r, c, e) for (r, c), e in self.entries.items())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExponentMatrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
            and self.field == other.field
        )

    def __repr__(self) -> str:
        return f"ExponentMatrix({self.rows}x{self.cols}, {self.nonzero_count} nonzero, {self.field!r})"


def build_base_matrix(dts: DifferenceTriangleSet, field: GaloisField, n: int) -> ExponentMatrix:
    """Transposed base matrix: scope rows, n columns, unit parity column."""
    if dts.num_sets != n - 1:
        raise SetCountMismatch(f"need {n - 1} sets for n = {n}, got {dts.num_sets}")
    if any(s[0] == 0 for s in dts.sets):
        raise ZeroElementInDTS("construction requires all elements >= 1")
    report = validate(dts, "relaxed")
    if not report.valid:
        dups = ", ".join(str(d.value) for d in report.duplicates)
        raise ValueError(f"DTS is not relaxed-valid (duplicated differences: {dups})")
    m = dts.scope
    entries: dict[tuple[int, int], int] = {}
    for k, t_k in enumerate(dts.sets, start=1):
        for i in t_k:
            entries[(i, k)] = field.alpha_pow(i * k)
    entries[(1, n)] = field.alpha_pow(0)
    return ExponentMatrix(m, n, entries, field)


def sliding_entry_origin(n: int, row: int, col: int) -> tuple[int, int]:
    """Base-matrix origin of a sliding-matrix position.

    Returns (base_row, unified_column_index) where the parity column has
    unified index 0 and information column k keeps index k; with that
    convention every nonzero sliding entry equals alpha^(base_row * index).
    """
    block, within = divmod(col - 1, n)
    base_row = row - block
    return base_row, 0 if within == n - 1 else within + 1


@dataclass(frozen=True)
class MinFieldParams:
    """Field-size requirements for a given (n, scope) pair.

    q_2x2 and n_3x3 are the smallest values clearing the 2x2 and 3x3 minor
    bounds; q_case_ii is the (advisory) sharper threshold that the middle
    3x3 case alone would need.  The suggested field honors the extension
    degree bound only when w >= 3, since smaller w never produces the 3x3
    cycle patterns the bound exists for.
    """

    q_2x2: int
    n_3x3: int
    q_case_ii: int
    p: int
    n: int

    @property
    def q(self) -> int:
        return self.p**self.n


def _factor_prime_power(q: int) -> tuple[int, int] | None:
    p = 2
    while p * p <= q:
        if q % p == 0:
            e = 0
            while q % p == 0:
                q //= p
                e += 1
            return (p, e) if q == 1 else None
        p += 1 if p == 2 else 2
    return (q, 1)


def min_field_params(n: int, scope: int, w: int) -> MinFieldParams:
    if n < 2 or scope < 1 or w < 1:
        raise ValueError("need n >= 2, scope >= 1, w >= 1")
    delta = scope - 1
    q_2x2 = (n - 1) * delta + 2
    n_3x3 = max(1, (delta - 1) * (n - 2) + 1)
    q_case_ii = max(2, 2 * (n - 3) + 2 * (delta - 2) * (n - 2) + 2)
    min_deg = n_3x3 if w >= 3 else 1
    q = max(3, q_2x2)
    while True:
        pp = _factor_prime_power(q)
        if pp is not None and pp[1] >= min_deg:
            return MinFieldParams(q_2x2=q_2x2, n_3x3=n_3x3, q_case_ii=q_case_ii,
                                  p=pp[0], n=pp[1])
        q += 1


def density(n: int, w: int, mu: int, message_length: int) -> Fraction:
    """Fraction of nonzero entries in the untruncated parity-check matrix."""
    if message_length <= 0 or message_length % n:
        raise IncompleteBlock(f"message length {message_length} is not a multiple of n = {n}")
    return Fraction(w * (n - 1) + 1, mu * n + message_length)


class CodeSpec:
    """A constructed code: DTS, field and block length n bundled together."""

    def __init__(self, dts: DifferenceTriangleSet, field: GaloisField, n: int):
        self.base = build_base_matrix(dts, field, n)
        self.dts = dts
        self.field = field
        self.n = n
        self.w = dts.set_size
        self.scope = dts.scope
        self.mu = self.scope - 1
        self.delta = self.scope - 1

    def coefficients(self) -> list[ExponentMatrix]:
        """Block coefficients H_0..H_mu, each 1 x n (row i+1 of the base)."""
        out = []
        for i in range(self.mu + 1):
            entries = {
                (1, c): e for (r, c), e in self.base.entries.items() if r == i + 1
            }
            out.append(ExponentMatrix(1, self.n, entries, self.field))
        return out

    def sliding_matrix(self, j: int) -> ExponentMatrix:
        """Truncated sliding matrix: j+1 rows, n(j+1) columns."""
        if j < 0:
            raise ValueError("horizon j must be >= 0")
        return self._stack(num_blocks=j + 1, rows=j + 1)

    def full_sliding_matrix(self, num_blocks: int) -> ExponentMatrix:
        """Untruncated sliding matrix: every block column is complete."""
        if num_blocks < 1:
            raise ValueError("need at least one block column")
        return self._stack(num_blocks=num_blocks, rows=num_blocks + self.mu)

    def _stack(self, num_blocks: int, rows: int) -> ExponentMatrix:
        entries: dict[tuple[int, int], int] = {}
        for (i, c), e in self.base.entries.items():
            for t in range(num_blocks):
                r = i + t
                if r <= rows:
                    entries[(r, t * self.n + c)] = e
        return ExponentMatrix(rows, num_blocks * self.n, entries, self.field)

    def encode(self, message: Sequence[Sequence[FieldElement]]) -> list[tuple[FieldElement, ...]]:
        """Systematic encoding: each output block is (u_t, p_t).

        The parity of block t cancels the weighted sum of the current and
        the mu previous information blocks, so the codeword extends mu
        blocks past the message.
        """
        f = self.field
        info = [self._check_block(b) for b in message]
        coeff = [
            [self.base.get(i + 1, k) for k in range(1, self.n)]
            for i in range(self.mu + 1)
        ]
        out: list[tuple[FieldElement, ...]] = []
        if not info:
            return out
        for t in range(len(info) + self.mu):
            u_t = info[t] if t < len(info) else (ZERO,) * (self.n - 1)
            acc: FieldElement = ZERO
            for i in range(self.mu + 1):
                s = t - i
                if 0 <= s < len(info):
                    for a, u in zip(coeff[i], info[s]):
                        acc = f.add(acc, f.mul(a, u))
            out.append(u_t + (f.neg(acc),))
        return out

    def syndrome(self, word: Sequence[Sequence[FieldElement]]) -> list[FieldElement]:
        """Full sliding product; all-zero exactly when the word is a codeword."""
        f = self.field
        blocks = [tuple(b) for b in word]
        for b in blocks:
            if len(b) != self.n:
                raise ValueError(f"code blocks have {self.n} symbols, got {len(b)}")
        rows = [
            [self.base.get(i + 1, c) for c in range(1, self.n + 1)]
            for i in range(self.mu + 1)
        ]
        out = []
        for t in range(len(blocks) + self.mu):
            acc: FieldElement = ZERO
            for i in range(self.mu + 1):
                s = t - i
                if 0 <= s < len(blocks):
                    for h, v in zip(rows[i], blocks[s]):
                        acc = f.add(acc, f.mul(h, v))
            out.append(acc)
        return out

    def _check_block(self, block: Iterable[FieldElement]) -> tuple[FieldElement, ...]:
        b = tuple(block)
        if len(b) != self.n - 1:
            raise ValueError(f"information blocks have {self.n - 1} symbols, got {len(b)}")
        return b

    def __repr__(self) -> str:
        return f"CodeSpec(n={self.n}, w={self.w}, mu={self.mu}, {self.field!r})"
