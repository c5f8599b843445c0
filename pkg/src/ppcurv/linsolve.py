"""Exact linear algebra over the rational-function field and at points."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .algebra import ExpVal, NF_ONE, NF_ZERO, NormalForm, ResampleNeeded


@dataclass
class LinearSolution:
    """Reduced solution of A x = b over the rational-function field.

    ``particular`` sets every free unknown to zero; ``nullspace`` holds one
    basis vector per free unknown (entry 1 in that position).  ``residual``
    is an unsatisfiable row (0 = value) when the system is inconsistent.
    ``evidence`` is "symbolic" except for inconsistencies certified at an
    exact rational sample point, which are marked "exact-instantiation".
    """

    nunknowns: int
    consistent: bool
    particular: list[NormalForm] | None
    nullspace: list[list[NormalForm]]
    pivot_columns: list[int]
    residual: NormalForm | None = None
    evidence: str = "symbolic"
    sample_point: dict | None = None

    @property
    def unique(self) -> bool:
        return self.consistent and not self.nullspace

    @property
    def dimension(self) -> int:
        """Dimension of the solution space (-1 when inconsistent)."""
        return len(self.nullspace) if self.consistent else -1

    def substitute_free(self, values: Sequence[NormalForm]) -> list[NormalForm]:
        if not self.consistent:
            raise ValueError("inconsistent system has no solutions")
        out = list(self.particular)
        for vec, val in zip(self.nullspace, values):
            out = [o + v * val for o, v in zip(out, vec)]
        return out


class _GuidanceFailed(Exception):
    pass


class _SamplePoint(dict):
    """Stable pseudo-random nonzero rational per atom."""

    def __init__(self, seed: int):
        super().__init__()
        self.seed = seed

    def __missing__(self, atom):
        import random as _random
        from fractions import Fraction as _Fr

        rng = _random.Random((self.seed, repr(atom)).__repr__())
        v = _Fr(rng.choice([n for n in range(-7, 8) if n]), rng.randint(1, 7))
        self[atom] = v
        return v


def solve_linear(
    rows: Iterable[tuple[Sequence[NormalForm], NormalForm]],
    nunknowns: int,
    guide_seed: int | None = 0,
) -> LinearSolution:
    """Exact linear solve over the rational-function field.

    Large systems go through two stages.  First the whole system is solved
    at an exact rational sample point; a pointwise inconsistency already
    certifies that no solution exists (the unknowns would have to satisfy
    the system at that very point).  Otherwise the pivot rows found at the
    point are solved symbolically and every remaining row is certified by an
    exact residual check, falling back to full symbolic elimination when the
    sample point was unluckily degenerate.
    """
    rows = list(rows)
    if guide_seed is not None and len(rows) > max(8, 2 * nunknowns):
        for attempt in range(3):
            try:
                return _solve_guided(rows, nunknowns, guide_seed + attempt)
            except (_GuidanceFailed, ResampleNeeded, ZeroDivisionError):
                continue
    return _solve_symbolic(rows, nunknowns)


def _solve_guided(rows, nunknowns: int, seed: int) -> LinearSolution:
    from .algebra import NormalForm as NF

    point = _SamplePoint(seed)
    # stage 1: exact elimination of the point-evaluated system
    reduced: dict[int, tuple[list, object, int]] = {}  # col -> (coeffs, rhs, row index)
    for index, (coeffs, rhs) in enumerate(rows):
        pc = [c.partial_eval(point) for c in coeffs]
        pr = rhs.partial_eval(point)
        for col, (prow, prhs, _) in reduced.items():
            c = pc[col]
            if c.is_zero:
                continue
            pc = [a - c * b for a, b in zip(pc, prow)]
            pc[col] = NF_ZERO
            pr = pr - c * prhs
        pivot = next((i for i, c in enumerate(pc) if not c.is_zero), None)
        if pivot is None:
            if not pr.is_zero:
                # inconsistent at an honest sample point: no global solution
                return LinearSolution(
                    nunknowns,
                    False,
                    None,
                    [],
                    sorted(reduced),
                    residual=pr,
                    evidence="exact-instantiation",
                    sample_point={repr(k): str(v) for k, v in point.items()},
                )
            continue
        p = pc[pivot]
        pc = [c / p for c in pc]
        pc[pivot] = NF_ONE
        pr = pr / p
        for col, (prow, prhs, pi) in list(reduced.items()):
            c = prow[pivot]
            if c.is_zero:
                continue
            nrow = [a - c * b for a, b in zip(prow, pc)]
            nrow[pivot] = NF_ZERO
            nrow[col] = NF_ONE
            reduced[col] = (nrow, prhs - c * pr, pi)
        reduced[pivot] = (pc, pr, index)
    # stage 2: symbolic solve of the pivot rows, then certify every row
    used_rows = sorted(info[2] for info in reduced.values())
    sub = _solve_symbolic([rows[r] for r in used_rows], nunknowns)
    if not sub.consistent:
        return sub  # an inconsistent subsystem certifies inconsistency
    if sorted(sub.pivot_columns) != sorted(reduced):
        raise _GuidanceFailed
    used = set(used_rows)
    for i, (coeffs, rhs) in enumerate(rows):
        if i in used:
            continue
        for vec in sub.nullspace:
            dot = NF_ZERO
            for c, x in zip(coeffs, vec):
                if not c.is_zero and not x.is_zero:
                    dot = dot + c * x
            if not dot.is_zero:
                raise _GuidanceFailed  # the sample point missed a pivot
        resid = -rhs
        for c, x in zip(coeffs, sub.particular):
            if not c.is_zero and not x.is_zero:
                resid = resid + c * x
        if not resid.is_zero:
            return LinearSolution(
                nunknowns, False, None, [], sub.pivot_columns, residual=resid
            )
    return sub


def _solve_symbolic(
    rows: Iterable[tuple[Sequence[NormalForm], NormalForm]], nunknowns: int
) -> LinearSolution:
    """Incremental Gauss-Jordan elimination with exact field arithmetic."""
    # reduced[col] = (coeff row with 1 at col and 0 at other pivot cols, rhs)
    reduced: dict[int, tuple[list[NormalForm], NormalForm]] = {}
    for coeffs, rhs in rows:
        coeffs = list(coeffs)
        for col, (prow, prhs) in reduced.items():
            c = coeffs[col]
            if c.is_zero:
                continue
            coeffs = [a - c * b for a, b in zip(coeffs, prow)]
            coeffs[col] = NF_ZERO
            rhs = rhs - c * prhs
        pivot = next((i for i, c in enumerate(coeffs) if not c.is_zero), None)
        if pivot is None:
            if not rhs.is_zero:
                return LinearSolution(
                    nunknowns, False, None, [], sorted(reduced), residual=rhs
                )
            continue
        p = coeffs[pivot]
        coeffs = [c / p for c in coeffs]
        coeffs[pivot] = NF_ONE
        rhs = rhs / p
        # keep previously reduced rows fully reduced against the new pivot
        for col, (prow, prhs) in list(reduced.items()):
            c = prow[pivot]
            if c.is_zero:
                continue
            nrow = [a - c * b for a, b in zip(prow, coeffs)]
            nrow[pivot] = NF_ZERO
            nrow[col] = NF_ONE
            reduced[col] = (nrow, prhs - c * rhs)
        reduced[pivot] = (coeffs, rhs)
        if len(reduced) == nunknowns:
            # fully determined; remaining rows can only affect consistency,
            # so keep consuming them
            continue
    pivot_cols = sorted(reduced)
    particular = [NF_ZERO] * nunknowns
    for col, (_, rhs) in reduced.items():
        particular[col] = rhs
    free_cols = [c for c in range(nunknowns) if c not in reduced]
    nullspace = []
    for fc in free_cols:
        vec = [NF_ZERO] * nunknowns
        vec[fc] = NF_ONE
        for col, (prow, _) in reduced.items():
            vec[col] = -prow[fc]
        nullspace.append(vec)
    return LinearSolution(nunknowns, True, particular, nullspace, pivot_cols)


def residual_rows(
    rows: Iterable[tuple[Sequence[NormalForm], NormalForm]],
    solution: Sequence[NormalForm],
) -> NormalForm | None:
    """First nonzero residual of A x - b, or None if all vanish."""
    for coeffs, rhs in rows:
        total = -rhs
        for c, x in zip(coeffs, solution):
            if not c.is_zero and not x.is_zero:
                total = total + c * x
        if not total.is_zero:
            return total
    return None


def exact_rank(matrix: Sequence[Sequence[ExpVal]]) -> int:
    """Rank by fraction-free elimination; exact on any integral domain."""
    m = [list(row) for row in matrix]
    nrows = len(m)
    if nrows == 0:
        return 0
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if not m[r][col].is_zero), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        p = m[row][col]
        for r in range(row + 1, nrows):
            if m[r][col].is_zero:
                continue
            factor = m[r][col]
            m[r] = [p * a - factor * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def symbolic_rank(matrix: Sequence[Sequence[NormalForm]]) -> int:
    """Generic rank of a matrix of rational functions (exact zero tests)."""
    m = [list(row) for row in matrix]
    nrows = len(m)
    if nrows == 0:
        return 0
    ncols = len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if not m[r][col].is_zero), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        p = m[row][col]
        for r in range(row + 1, nrows):
            if m[r][col].is_zero:
                continue
            factor = m[r][col] / p
            m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank
