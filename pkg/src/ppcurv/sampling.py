"""Seeded random instantiation of opaque functions and sample points.

Protocol: opaque functions get random polynomials of total degree <= 4 with
coefficients in [-9, 9] cap Q; wave-constrained entries instead use the
constraint-preserving family f = c0 * exp(a x3 + b x4) with random rational
a, b, c0.  Coordinates are sampled from rationals with denominator <= 7,
resampling when a denominator or the metric determinant vanishes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import NormalForm, ResampleNeeded, is_coord, is_param
from .expr import Binding, EExp, EMul, ERat, Expression, SymbolTable, parse
from .expr import EAdd, ECoord, EPow
from .geometry import Metric


@dataclass(frozen=True)
class FamilySpec:
    """How to instantiate one opaque function for randomized certification."""

    kind: str = "poly"  # "poly" | "exp-linear"
    degree: int = 4


class Sampler:
    def __init__(self, seed: int, max_coeff: int = 9, max_den: int = 7):
        self.seed = seed
        self.rng = random.Random(seed)
        self.max_coeff = max_coeff
        self.max_den = max_den

    def rational(self, nonzero: bool = False) -> Fraction:
        while True:
            num = self.rng.randint(-self.max_den, self.max_den)
            den = self.rng.randint(1, self.max_den)
            q = Fraction(num, den)
            if not nonzero or q:
                return q

    def coefficient(self) -> Fraction:
        num = self.rng.randint(-self.max_coeff, self.max_coeff)
        den = self.rng.randint(1, 3)
        return Fraction(num, den)

    def polynomial(self, chart, depends: tuple[int, ...], degree: int = 4) -> Expression:
        """Random polynomial over the listed coordinates, total degree <= degree."""
        terms: list[Expression] = []
        for powers in itertools.product(range(degree + 1), repeat=len(depends)):
            if sum(powers) > degree:
                continue
            if self.rng.random() < 0.5:
                continue
            c = self.coefficient()
            if not c:
                continue
            factors: list[Expression] = [ERat(c)]
            for idx, p in zip(depends, powers):
                if p:
                    factors.append(EPow(ECoord(idx, chart.coordinates[idx - 1]), p))
            terms.append(EMul(tuple(factors)) if len(factors) > 1 else factors[0])
        if not terms:
            terms = [ERat(self.coefficient() or Fraction(1))]
        return EAdd(tuple(terms)) if len(terms) > 1 else terms[0]

    def exp_linear(self, chart, depends: tuple[int, ...]) -> Expression:
        """c0 * exp(sum_i a_i x_i) with random nonzero rationals."""
        c0 = self.rational(nonzero=True)
        form = tuple(
            ((( ("c", i, chart.coordinates[i - 1]), 1),), self.rational(nonzero=True))
            for i in depends
        )
        return EMul((ERat(c0), EExp(form)))

    def instantiation(self, metric: Metric, families: dict[str, FamilySpec]) -> Binding:
        fns: dict[str, Expression] = {}
        for decl in metric.table.functions:
            spec = families.get(decl.name, FamilySpec())
            if spec.kind == "exp-linear":
                fns[decl.name] = self.exp_linear(metric.chart, decl.depends)
            else:
                fns[decl.name] = self.polynomial(metric.chart, decl.depends, spec.degree)
        return Binding(functions=fns)

    def point(self, metric: Metric) -> dict[str, Fraction]:
        values = {name: self.rational() for name in metric.chart.coordinates}
        for p in metric.table.parameters:
            values[p] = self.rational(nonzero=True)
        return values

    def good_point(self, metric: Metric, binding: Binding, attempts: int = 40) -> dict[str, Fraction]:
        """A sample point where the instantiated determinant does not vanish."""
        inst = metric.instantiated(binding) if binding.functions else metric
        for _ in range(attempts):
            values = self.point(metric)
            try:
                point = _atom_point(inst.det, values)
                if not inst.det.eval_pair(point)[0].is_zero:
                    return values
            except ResampleNeeded:
                continue
        raise ResampleNeeded("could not find a nondegenerate sample point")


def _atom_point(nf: NormalForm, values: dict[str, Fraction]) -> dict:
    point = {}
    for atom in nf.atoms():
        if is_coord(atom):
            point[atom] = Fraction(values[atom[2]])
        elif is_param(atom):
            point[atom] = Fraction(values[atom[1]])
        else:
            raise ResampleNeeded(f"unexpected opaque atom {atom!r} at evaluation")
    return point


def atom_point_for(nfs, values: dict[str, Fraction]) -> dict:
    """Point dictionary covering the atoms of several normal forms."""
    point = {}
    for nf in nfs:
        point.update(_atom_point(nf, values))
    return point
