"""Charts, metric tensors, symbolic inverses and signatures."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Sequence

from .algebra import Atom, ExpVal, NormalForm, ResampleNeeded, coord_atom, is_coord, is_param
from .expr import (
    Binding,
    Expression,
    ExprError,
    FunctionDecl,
    SymbolTable,
    from_normal,
    instantiate,
    normalize,
    parse,
    pprint,
)


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class Chart:
    """Ordered coordinate names; indices are 1-based to match report labels."""

    coordinates: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.coordinates)) != len(self.coordinates):
            raise GeometryError("coordinate names must be unique")
        if len(self.coordinates) < 3:
            raise GeometryError("dimension must be at least 3")

    @property
    def n(self) -> int:
        return len(self.coordinates)

    def atom(self, index: int) -> Atom:
        return coord_atom(index, self.coordinates[index - 1])


class Metric:
    """Symmetric metric matrix with cached inverse and determinant."""

    def __init__(
        self,
        chart: Chart,
        table: SymbolTable,
        components: Sequence[Sequence[NormalForm]],
        metric_id: str = "",
        constraints: tuple[Expression, ...] = (),
    ):
        n = chart.n
        if len(components) != n or any(len(row) != n for row in components):
            raise GeometryError("component matrix must be square of the chart dimension")
        for i in range(n):
            for j in range(i + 1, n):
                if components[i][j] != components[j][i]:
                    raise GeometryError(f"metric not symmetric at ({i + 1},{j + 1})")
        self.chart = chart
        self.table = table
        self.g = [[components[i][j] for j in range(n)] for i in range(n)]
        self.metric_id = metric_id
        self.constraints = constraints
        self.det, self.g_inv = _invert_symmetric(self.g)
        if self.det.is_zero:
            raise GeometryError("metric determinant is identically zero")

    @property
    def n(self) -> int:
        return self.chart.n

    def component(self, i: int, j: int) -> NormalForm:
        """1-based lower metric component."""
        return self.g[i - 1][j - 1]

    def inverse_component(self, i: int, j: int) -> NormalForm:
        return self.g_inv[i - 1][j - 1]

    def verify_inverse(self) -> bool:
        n = self.n
        for i in range(n):
            for j in range(n):
                total = NormalForm.zero()
                for k in range(n):
                    total = total + self.g[i][k] * self.g_inv[k][j]
                expected = NormalForm.one() if i == j else NormalForm.zero()
                if total != expected:
                    return False
        return True

    def instantiated(self, binding: Binding) -> "Metric":
        """Metric with opaque functions replaced by concrete expressions."""
        n = self.n
        comps = []
        for i in range(n):
            row = []
            for j in range(n):
                e = instantiate(from_normal(self.g[i][j]), binding)
                row.append(normalize(e))
            comps.append(row)
        return Metric(self.chart, self.table, comps, metric_id=self.metric_id)

    def signature_at(
        self, point: Mapping[str, Fraction], binding: Binding | None = None
    ) -> tuple[int, int]:
        """(positive, negative) eigenvalue-sign counts at the point."""
        m = self.instantiated(binding) if binding and binding.functions else self
        pt = {}
        for atom in set().union(*(nf.atoms() for row in m.g for nf in row)) | {
            self.chart.atom(i + 1) for i in range(self.n)
        }:
            if is_coord(atom):
                name = atom[2]
            elif is_param(atom):
                name = atom[1]
            else:
                raise GeometryError(
                    f"opaque function {atom[1]!r} must be instantiated before "
                    "evaluating the signature"
                )
            if name not in point:
                raise GeometryError(f"no value supplied for {name!r}")
            pt[atom] = Fraction(point[name])
        vals = [[m.g[i][j].eval_pair(pt) for j in range(self.n)] for i in range(self.n)]
        try:
            matrix = [[num * den.invert() if not num.is_zero else ExpVal({}) for num, den in row] for row in vals]
        except ZeroDivisionError:
            # a denominator value mixes exponentials; rescale the whole matrix
            # by the square of the product of all denominators (positive, so
            # the signature is unchanged) to stay in exact ring arithmetic
            prod = ExpVal.const(1)
            for row in vals:
                for _, den in row:
                    prod = prod * den
            matrix = []
            for i in range(self.n):
                out = []
                for j in range(self.n):
                    num, den = vals[i][j]
                    entry = num * den
                    for i2 in range(self.n):
                        for j2 in range(self.n):
                            if (i2, j2) != (i, j):
                                d2 = vals[i2][j2][1]
                                entry = entry * d2 * d2
                    out.append(entry)
                matrix.append(out)
        return _signature(matrix)


def _signature(m: list[list[ExpVal]]) -> tuple[int, int]:
    """Sylvester signature of a symmetric matrix by exact congruence steps."""
    m = [row[:] for row in m]
    pos = neg = 0
    idx = list(range(len(m)))
    while idx:
        pivot = next((i for i in idx if not m[i][i].is_zero), None)
        if pivot is not None:
            s = m[pivot][pivot].sign()
            if s > 0:
                pos += 1
            else:
                neg += 1
            idx.remove(pivot)
            p = m[pivot][pivot]
            for i in idx:
                for j in idx:
                    # congruence update scaled by p^2 > 0, ring operations only
                    m[i][j] = p * (p * m[i][j] - m[i][pivot] * m[j][pivot])
            continue
        off = next(
            ((i, j) for i in idx for j in idx if i < j and not m[i][j].is_zero), None
        )
        if off is None:
            # remaining block is zero: degenerate metric at this point
            raise ResampleNeeded("metric singular at sample point")
        i0, j0 = off
        pos += 1
        neg += 1
        idx.remove(i0)
        idx.remove(j0)
        a = m[i0][j0]
        for i in idx:
            for j in idx:
                m[i][j] = a * (a * m[i][j] - m[i][i0] * m[j][j0] - m[i][j0] * m[j][i0])
    return pos, neg


def build_metric(
    chart: Chart,
    table: SymbolTable,
    components: Sequence[Sequence[str | Expression | NormalForm]],
    metric_id: str = "",
    constraints: Sequence[str] = (),
) -> Metric:
    """Parse and validate a metric matrix given as expression text."""
    parsed: list[list[NormalForm]] = []
    for row in components:
        out = []
        for item in row:
            if isinstance(item, NormalForm):
                out.append(item)
            elif isinstance(item, Expression):
                out.append(normalize(item))
            else:
                out.append(normalize(parse(str(item), table)))
        parsed.append(out)
    cexprs = tuple(parse(c, table) for c in constraints)
    m = Metric(chart, table, parsed, metric_id=metric_id, constraints=cexprs)
    if not m.verify_inverse():
        raise GeometryError("inverse verification failed")
    return m


def _invert_symmetric(g: list[list[NormalForm]]) -> tuple[NormalForm, list[list[NormalForm]]]:
    """Determinant and inverse via exact cofactor expansion."""
    n = len(g)

    def minor(rows: tuple[int, ...], cols: tuple[int, ...]) -> NormalForm:
        if len(rows) == 1:
            return g[rows[0]][cols[0]]
        total = NormalForm.zero()
        r0 = rows[0]
        rest = rows[1:]
        for k, c in enumerate(cols):
            entry = g[r0][c]
            if entry.is_zero:
                continue
            sub = minor(rest, cols[:k] + cols[k + 1 :])
            if sub.is_zero:
                continue
            term = entry * sub
            total = total + (term if k % 2 == 0 else -term)
        return total

    allidx = tuple(range(n))
    det = minor(allidx, allidx)
    if det.is_zero:
        return det, []
    inv = [[NormalForm.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rows = tuple(k for k in allidx if k != i)
            cols = tuple(k for k in allidx if k != j)
            cof = minor(rows, cols) if n > 1 else NormalForm.one()
            if (i + j) % 2:
                cof = -cof
            inv[j][i] = cof / det
    return det, inv


# ---------------------------------------------------------------------------
# Metric definition files


def metric_to_dict(m: Metric, notes: str = "") -> dict:
    d = {
        "id": m.metric_id,
        "coordinates": list(m.chart.coordinates),
        "parameters": list(m.table.parameters),
        "functions": [
            {"name": f.name, "depends": [m.chart.coordinates[i - 1] for i in f.depends]}
            for f in m.table.functions
        ],
        "components": [[pprint(from_normal(nf)) for nf in row] for row in m.g],
        "constraints": [pprint(c) for c in m.constraints],
    }
    if notes:
        d["notes"] = notes
    return d


def metric_from_dict(d: Mapping) -> Metric:
    chart = Chart(tuple(d["coordinates"]))
    fns = []
    for f in d.get("functions", []):
        deps = tuple(chart.coordinates.index(c) + 1 for c in f["depends"])
        fns.append(FunctionDecl(f["name"], deps))
    table = SymbolTable(
        coordinates=chart.coordinates,
        parameters=tuple(d.get("parameters", [])),
        functions=tuple(fns),
    )
    return build_metric(
        chart,
        table,
        d["components"],
        metric_id=d.get("id", ""),
        constraints=tuple(d.get("constraints", [])),
    )


def load_metric_file(path: str | Path) -> Metric:
    with open(path) as fh:
        return metric_from_dict(json.load(fh))
