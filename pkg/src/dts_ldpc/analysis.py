"""Structural verification of a constructed code.

Three families of checks, all exact:

* minors — every 2x2 or 3x3 submatrix of a sliding matrix whose zero
  pattern admits a nonzero diagonal is evaluated; any vanishing
  determinant is a failure witness;
* cycles — 4-cycles (two rows sharing two columns) and 6-cycles (row and
  column triples whose submatrix has exactly two nonzeros per row and per
  column) together with the full-rank condition on their cycle matrices;
* distances — column distances and the free distance through the span
  criterion: the smallest d such that some column of the first block lies
  in the span of d-1 other columns, searched in increasing d.

Failing witnesses are reported with 1-based row/column indices of the
matrix they were found in.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from . import gf
from .code import CodeSpec, ExponentMatrix
from .errors import BudgetExhausted, HorizonTooLarge
from .gf import ZERO, FieldElement, GaloisField

DEFAULT_BUDGET = 10**8

PATTERN_FULL = "fully-nonzero"
PATTERN_CYCLE = "cycle-pattern"
PATTERN_MIXED = "mixed-pattern"

_PERMS_3 = list(itertools.permutations(range(3)))


# ---------------------------------------------------------------------------
# small linear algebra over the field
# ---------------------------------------------------------------------------

def _reduce(field: GaloisField, vec: list[FieldElement],
            pivots: list[tuple[int, list[FieldElement]]]) -> list[FieldElement]:
    v = list(vec)
    for piv, pv in pivots:
        coef = v[piv]
        if coef is not None:
            scale = field.mul(coef, field.inv(pv[piv]))
            for idx, x in enumerate(pv):
                if x is not None:
                    v[idx] = field.sub(v[idx], field.mul(scale, x))
    return v


def _in_span(field: GaloisField, target: Sequence[FieldElement],
             vectors: Sequence[Sequence[FieldElement]]) -> bool:
    pivots: list[tuple[int, list[FieldElement]]] = []
    for vec in vectors:
        v = _reduce(field, list(vec), pivots)
        piv = next((i for i, x in enumerate(v) if x is not None), None)
        if piv is not None:
            pivots.append((piv, v))
    return all(x is None for x in _reduce(field, list(target), pivots))


# ---------------------------------------------------------------------------
# minors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MinorFailure:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    pattern: str
    determinant: FieldElement


@dataclass(frozen=True)
class MinorReport:
    size: int
    horizon: int
    checked: int
    class_counts: dict[str, int]
    failures: tuple[MinorFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "schema": "minor-report/v1",
            "minor_size": self.size,
            "horizon": self.horizon,
            "checked": self.checked,
            "class_counts": dict(sorted(self.class_counts.items())),
            "failures": [
                {"rows": list(f.rows), "cols": list(f.cols),
                 "pattern": f.pattern, "determinant": f.determinant}
                for f in self.failures
            ],
        }


def _classify(grid: list[list[FieldElement]], size: int) -> Optional[str]:
    """Pattern class of a square grid, or None when trivially singular."""
    nz = [[x is not None for x in row] for row in grid]
    if size == 2:
        if not ((nz[0][0] and nz[1][1]) or (nz[0][1] and nz[1][0])):
            return None
        return PATTERN_FULL if all(nz[0]) and all(nz[1]) else PATTERN_MIXED
    if not any(all(nz[r][p[r]] for r in range(3)) for p in _PERMS_3):
        return None
    count = sum(sum(row) for row in nz)
    if count == 9:
        return PATTERN_FULL
    if count == 6 and all(sum(row) == 2 for row in nz) and all(
        nz[0][c] + nz[1][c] + nz[2][c] == 2 for c in range(3)
    ):
        return PATTERN_CYCLE
    return PATTERN_MIXED


def check_minors(spec: CodeSpec, size: int, j: Optional[int] = None,
                 budget: int = DEFAULT_BUDGET) -> MinorReport:
    """Evaluate every not-trivially-zero size x size minor of the sliding matrix."""
    if size not in (2, 3):
        raise ValueError(f"minor size must be 2 or 3, got {size}")
    if j is None:
        j = spec.mu
    matrix = spec.sliding_matrix(j)
    work = math.comb(matrix.rows, size) * math.comb(matrix.cols, size)
    if work > budget:
        raise HorizonTooLarge(f"{work} minors exceed the budget of {budget}")
    dense = [matrix.column(c) for c in range(1, matrix.cols + 1)]
    checked = 0
    counts = {PATTERN_FULL: 0, PATTERN_CYCLE: 0, PATTERN_MIXED: 0}
    if size == 2:
        counts.pop(PATTERN_CYCLE)
    failures = []
    field = spec.field
    for rows in itertools.combinations(range(1, matrix.rows + 1), size):
        for cols in itertools.combinations(range(1, matrix.cols + 1), size):
            grid = [[dense[c - 1][r - 1] for c in cols] for r in rows]
            pattern = _classify(grid, size)
            if pattern is None:
                continue
            checked += 1
            counts[pattern] += 1
            d = gf.det(field, grid)
            if d is ZERO:
                failures.append(MinorFailure(rows, cols, pattern, d))
    return MinorReport(size=size, horizon=j, checked=checked,
                       class_counts=counts, failures=tuple(failures))


# ---------------------------------------------------------------------------
# cycles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TannerCycle:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    nodes: tuple[tuple[str, int], ...]
    matrix: tuple[tuple[FieldElement, ...], ...]
    singular: bool


@dataclass(frozen=True)
class CycleReport:
    length: int
    horizon: int
    cycles: tuple[TannerCycle, ...]
    frc_failures: tuple[TannerCycle, ...]
    girth: Optional[int]

    @property
    def ok(self) -> bool:
        return not self.frc_failures

    def to_json_dict(self) -> dict:
        return {
            "schema": "cycle-report/v1",
            "length": self.length,
            "horizon": self.horizon,
            "cycle_count": len(self.cycles),
            "girth": self.girth if self.girth is not None else ">6",
            "frc_failures": [
                {"rows": list(c.rows), "cols": list(c.cols)} for c in self.frc_failures
            ],
        }


def _row_supports(matrix: ExponentMatrix) -> dict[int, set[int]]:
    sup: dict[int, set[int]] = {r: set() for r in range(1, matrix.rows + 1)}
    for (r, c) in matrix.entries:
        sup[r].add(c)
    return sup


def _four_cycles(matrix: ExponentMatrix):
    sup = _row_supports(matrix)
    for r1, r2 in itertools.combinations(range(1, matrix.rows + 1), 2):
        shared = sorted(sup[r1] & sup[r2])
        for c1, c2 in itertools.combinations(shared, 2):
            yield (r1, r2), (c1, c2)


def _six_cycles(matrix: ExponentMatrix):
    sup = _row_supports(matrix)
    for r1, r2, r3 in itertools.combinations(range(1, matrix.rows + 1), 3):
        s1, s2, s3 = sup[r1], sup[r2], sup[r3]
        p12 = (s1 & s2) - s3
        if not p12:
            continue
        p23 = (s2 & s3) - s1
        if not p23:
            continue
        p13 = (s1 & s3) - s2
        if not p13:
            continue
        for c12 in sorted(p12):
            for c23 in sorted(p23):
                for c13 in sorted(p13):
                    yield (r1, r2, r3), (c12, c23, c13)


def _has_four_cycle(matrix: ExponentMatrix) -> bool:
    return next(iter(_four_cycles(matrix)), None) is not None


def _has_six_cycle(matrix: ExponentMatrix) -> bool:
    return next(iter(_six_cycles(matrix)), None) is not None


def enumerate_cycles(spec: CodeSpec, length: int, j: Optional[int] = None,
                     budget: int = DEFAULT_BUDGET) -> CycleReport:
    """All Tanner-graph cycles of the given length with their cycle matrices.

    A cycle of length 2d is recorded through the d rows and d columns it
    touches; the full-rank condition fails exactly when the determinant of
    that submatrix is zero.
    """
    if length not in (4, 6):
        raise ValueError(f"cycle length must be 4 or 6, got {length}")
    if j is None:
        j = spec.mu
    matrix = spec.sliding_matrix(j)
    half = length // 2
    work = math.comb(matrix.rows, half) * math.comb(matrix.cols, half)
    if work > budget:
        raise HorizonTooLarge(f"{work} candidate cycles exceed the budget of {budget}")
    field = spec.field
    cycles = []
    if length == 4:
        for (r1, r2), (c1, c2) in _four_cycles(matrix):
            grid = matrix.submatrix((r1, r2), (c1, c2))
            nodes = (("check", r1), ("var", c1), ("check", r2), ("var", c2))
            cycles.append(TannerCycle(
                rows=(r1, r2), cols=(c1, c2), nodes=nodes,
                matrix=tuple(tuple(row) for row in grid),
                singular=gf.det(field, grid) is ZERO,
            ))
    else:
        for (r1, r2, r3), (c12, c23, c13) in _six_cycles(matrix):
            rows = (r1, r2, r3)
            cols = tuple(sorted((c12, c23, c13)))
            grid = matrix.submatrix(rows, cols)
            nodes = (
                ("check", r1), ("var", c12), ("check", r2),
                ("var", c23), ("check", r3), ("var", c13),
            )
            cycles.append(TannerCycle(
                rows=rows, cols=cols, nodes=nodes,
                matrix=tuple(tuple(row) for row in grid),
                singular=gf.det(field, grid) is ZERO,
            ))
    has_four = bool(cycles) if length == 4 else _has_four_cycle(matrix)
    if has_four:
        girth: Optional[int] = 4
    elif bool(cycles) if length == 6 else _has_six_cycle(matrix):
        girth = 6
    else:
        girth = None
    return CycleReport(
        length=length, horizon=j, cycles=tuple(cycles),
        frc_failures=tuple(c for c in cycles if c.singular), girth=girth,
    )


# ---------------------------------------------------------------------------
# distances
# ---------------------------------------------------------------------------

def minimal_column_weight(spec: CodeSpec, j: int) -> int:
    """Smallest number of nonzeros an information column keeps after j+1 rows."""
    return min(sum(1 for a in t if a <= j + 1) for t in spec.dts.sets)


def _column_data(matrix: ExponentMatrix):
    vectors = [matrix.column(c) for c in range(1, matrix.cols + 1)]
    masks = []
    for vec in vectors:
        m = 0
        for i, x in enumerate(vec):
            if x is not None:
                m |= 1 << i
        masks.append(m)
    return vectors, masks


def _min_weight_first_block(field: GaloisField, matrix: ExponentMatrix,
                            n_first: int, ub: int, budget: int) -> int:
    """Smallest weight of a kernel vector whose first block is nonzero.

    ``ub`` must be a weight achieved by an explicit kernel vector; only
    smaller weights are searched.  Equals the smallest d such that one of
    the first ``n_first`` columns lies in the span of d-1 other columns.
    """
    vectors, masks = _column_data(matrix)
    work = sum(
        n_first * math.comb(matrix.cols - 1, d - 1) for d in range(1, ub)
    )
    if work > budget:
        raise HorizonTooLarge(f"{work} span checks exceed the budget of {budget}")
    for d in range(1, ub):
        for target in range(n_first):
            tvec, tmask = vectors[target], masks[target]
            if d == 1:
                if tmask == 0:
                    return 1
                continue
            others = [c for c in range(matrix.cols) if c != target]
            for combo in itertools.combinations(others, d - 1):
                union = 0
                for c in combo:
                    union |= masks[c]
                if tmask & ~union:
                    continue
                if _in_span(field, tvec, [vectors[c] for c in combo]):
                    return d
    return ub


def column_distance(spec: CodeSpec, j: int, budget: int = DEFAULT_BUDGET) -> int:
    """Exact column distance at horizon j via the span criterion.

    The weight w_j + 1 is always achieved by the single-symbol codeword
    truncated at j, so only smaller weights need an exhaustive search.
    """
    matrix = spec.sliding_matrix(j)
    ub = minimal_column_weight(spec, j) + 1
    return _min_weight_first_block(spec.field, matrix, spec.n, ub, budget)


@dataclass(frozen=True)
class FreeDistanceResult:
    value: int
    exact: bool
    horizon: int
    upper_bound: int


def free_distance(spec: CodeSpec, horizon: Optional[int] = None,
                  budget: int = DEFAULT_BUDGET) -> FreeDistanceResult:
    """Free distance, exact whenever the search horizon covers it.

    A weight-(w+1) codeword always exists (one information symbol plus the
    w parities its column forces), so only weights up to w are searched.
    A minimum-weight codeword splits into two shorter ones as soon as its
    information word has mu consecutive zero blocks, hence searching
    degrees up to (w-1)*mu is exhaustive and the result exact.  With a
    smaller explicit horizon the column distance at that horizon is
    returned as a certified lower bound.
    """
    exact_horizon = (spec.w - 1) * spec.mu + 1
    if horizon is None:
        horizon = exact_horizon
    ub = spec.w + 1
    if horizon >= exact_horizon:
        matrix = spec.full_sliding_matrix(horizon + 1)
        value = _min_weight_first_block(spec.field, matrix, spec.n, ub, budget)
        return FreeDistanceResult(value=value, exact=True, horizon=horizon,
                                  upper_bound=ub)
    value = column_distance(spec, horizon, budget)
    return FreeDistanceResult(value=value, exact=False, horizon=horizon,
                              upper_bound=ub)


# ---------------------------------------------------------------------------
# distance assumption check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AssumptionWitness:
    rows: tuple[int, ...]
    cols: tuple[int, ...]


@dataclass(frozen=True)
class AssumptionReport:
    holds: bool
    witnesses: tuple[AssumptionWitness, ...]


def check_distance_assumptions(spec: CodeSpec, budget: int = DEFAULT_BUDGET) -> AssumptionReport:
    """Hypothesis test for the distance formulas.

    For every column set J of size up to w whose smallest member j1 is an
    information column of the first block, and every row set I of the same
    size containing the support of column j1, the restricted column j1
    must stay outside the span of the other restricted columns.  Since
    that support already has w rows, only |I| = |J| = w occurs and I is
    forced to the support itself.
    """
    matrix = spec.sliding_matrix(spec.mu)
    field = spec.field
    w = spec.w
    work = sum(math.comb(matrix.cols - j1, w - 1) for j1 in range(1, spec.n))
    if work > budget:
        raise BudgetExhausted(f"{work} hypothesis checks exceed the budget of {budget}")
    witnesses = []
    for j1 in range(1, spec.n):
        rows = matrix.col_support(j1)
        target = [matrix.get(r, j1) for r in rows]
        rest = range(j1 + 1, matrix.cols + 1)
        for combo in itertools.combinations(rest, w - 1):
            others = [[matrix.get(r, c) for r in rows] for c in combo]
            if _in_span(field, target, others):
                witnesses.append(AssumptionWitness(rows=rows, cols=(j1, *combo)))
    return AssumptionReport(holds=not witnesses, witnesses=tuple(witnesses))


# ---------------------------------------------------------------------------
# combined profile
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DistanceProfile:
    column_distances: tuple[int, ...]
    free: FreeDistanceResult
    predicted_free: int
    predicted_column: tuple[int, ...]
    assumption_check: AssumptionReport

    def to_json_dict(self) -> dict:
        return {
            "schema": "distance-profile/v1",
            "column_distances": list(self.column_distances),
            "free_distance": self.free.value,
            "free_distance_exact": self.free.exact,
            "free_distance_upper_bound": self.free.upper_bound,
            "horizon": self.free.horizon,
            "predicted_free": self.predicted_free,
            "predicted_column": list(self.predicted_column),
            "assumption_holds": self.assumption_check.holds,
        }


def distance_profile(spec: CodeSpec, j_max: Optional[int] = None,
                     budget: int = DEFAULT_BUDGET) -> DistanceProfile:
    if j_max is None:
        j_max = spec.mu
    return DistanceProfile(
        column_distances=tuple(column_distance(spec, j, budget) for j in range(j_max + 1)),
        free=free_distance(spec, budget=budget),
        predicted_free=spec.w + 1,
        predicted_column=tuple(minimal_column_weight(spec, j) + 1 for j in range(j_max + 1)),
        assumption_check=check_distance_assumptions(spec, budget),
    )
