"""Curvature tensors of a metric and the derived tensor family.

Sign conventions are pinned by the component fixtures, not by prose:

* ``R^m_{jkl} = d_k Gamma^m_{lj} - d_l Gamma^m_{kj} + Gamma^m_{kt} Gamma^t_{lj}
  - Gamma^m_{lt} Gamma^t_{kj}`` and ``R_{ijkl} = g_{im} R^m_{jkl}``
* ``S_{jl} = g^{ik} R_{ijlk}`` and ``kappa = g^{jl} S_{jl}``

With these choices the generalized wave metric reproduces its published
component table verbatim (see the catalog fixtures).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from .algebra import NF_ZERO, NormalForm
from .expr import Binding, EParam, Expression, normalize, parse
from .geometry import Metric
from .tensors import (
    Christoffel,
    Tensor,
    contract,
    covariant_derivative,
    kulkarni_nomizu,
    lower_index,
    metric_contract,
    raise_index,
    ricci_power,
    tensor_product,
)


def riemann13(metric: Metric, gamma: Christoffel) -> Tensor:
    n = metric.n
    G = gamma.comps
    dG = [
        [[[G[m][l][j].diff(k + 1) for l in range(n)] for j in range(n)] for k in range(n)]
        for m in range(n)
    ]
    out = Tensor.zeros(metric.chart, "uddd")
    for m in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(k + 1, n):
                    total = dG[m][k][j][l] - dG[m][l][j][k]
                    for t in range(n):
                        a = G[m][k][t]
                        b = G[t][l][j]
                        if not a.is_zero and not b.is_zero:
                            total = total + a * b
                        a = G[m][l][t]
                        b = G[t][k][j]
                        if not a.is_zero and not b.is_zero:
                            total = total - a * b
                    if total.is_zero:
                        continue
                    out.comps[out.flat((m, j, k, l))] = total
                    out.comps[out.flat((m, j, l, k))] = -total
    return out


def riemann(metric: Metric, gamma: Christoffel | None = None) -> Tensor:
    gamma = gamma or Christoffel(metric)
    return lower_index(riemann13(metric, gamma), 0, metric)


def ricci_and_scalar(r4: Tensor, metric: Metric) -> tuple[Tensor, NormalForm]:
    n = metric.n
    ginv = metric.g_inv
    s = Tensor.zeros(metric.chart, "dd")
    for j in range(n):
        for l in range(j, n):
            total = NF_ZERO
            for i in range(n):
                for k in range(n):
                    m = ginv[i][k]
                    if m.is_zero:
                        continue
                    v = r4.get(i, j, l, k)
                    if not v.is_zero:
                        total = total + m * v
            s.comps[s.flat((j, l))] = total
            s.comps[s.flat((l, j))] = total
    kappa = NF_ZERO
    for j in range(n):
        for l in range(n):
            m = ginv[j][l]
            if not m.is_zero and not s.get(j, l).is_zero:
                kappa = kappa + m * s.get(j, l)
    return s, kappa


def conformal(r4: Tensor, s: Tensor, kappa: NormalForm, metric: Metric) -> Tensor:
    n = metric.n
    g = metric_tensor(metric)
    gs = kulkarni_nomizu(g, s)
    gg = kulkarni_nomizu(g, g)
    c = r4 - gs.scale(Fraction(1, n - 2)) + gg.scale(
        NormalForm.const(Fraction(1, 2 * (n - 2) * (n - 1))) * kappa
    )
    return c


def concircular(r4: Tensor, kappa: NormalForm, metric: Metric) -> Tensor:
    n = metric.n
    g = metric_tensor(metric)
    gg = kulkarni_nomizu(g, g)
    return r4 - gg.scale(NormalForm.const(Fraction(1, 2 * n * (n - 1))) * kappa)


def conharmonic(r4: Tensor, s: Tensor, metric: Metric) -> Tensor:
    n = metric.n
    g = metric_tensor(metric)
    return r4 - kulkarni_nomizu(g, s).scale(Fraction(1, n - 2))


def gaussian(metric: Metric) -> Tensor:
    g = metric_tensor(metric)
    return kulkarni_nomizu(g, g).scale(Fraction(1, 2))


def projective(r4: Tensor, s: Tensor, metric: Metric) -> Tensor:
    n = metric.n
    g = metric.g

    def comp(i, j, k, l):
        out = r4.get(i, j, k, l)
        t1 = g[i][l] * s.get(j, k)
        t2 = g[j][l] * s.get(i, k)
        return out - (t1 - t2).scale(Fraction(1, n - 1))

    return Tensor.build(metric.chart, "dddd", comp)


def riemann_squared(r4: Tensor, metric: Metric) -> Tensor:
    """D_{ijkl} = R_{ij}^{pq} R_{pqkl} (both upper indices via the metric)."""
    up = raise_index(raise_index(r4, 2, metric), 3, metric)  # R_{ij}^{pq}
    n = metric.n
    out = Tensor.zeros(metric.chart, "dddd")
    for (i, j, p, q), v in up.nonzero():
        for k in range(n):
            for l in range(n):
                w = r4.get(p, q, k, l)
                if w.is_zero:
                    continue
                f = out.flat((i, j, k, l))
                out.comps[f] = out.comps[f] + v * w
    return out


def metric_tensor(metric: Metric) -> Tensor:
    n = metric.n
    return Tensor(metric.chart, "dd", [metric.g[i][j] for i in range(n) for j in range(n)])


def inverse_metric_tensor(metric: Metric) -> Tensor:
    n = metric.n
    return Tensor(metric.chart, "uu", [metric.g_inv[i][j] for i in range(n) for j in range(n)])


def divergence(t: Tensor, metric: Metric, gamma: Christoffel) -> Tensor:
    """g^{am} (nabla T)_{a...,m}: contraction of slot 0 with the new slot."""
    nab = covariant_derivative(t, gamma)
    return metric_contract(nab, 0, nab.rank - 1, metric)


class CurvatureBundle:
    """All curvature data of one metric, computed lazily and cached."""

    def __init__(self, metric: Metric, lam: Expression | str | None = None, natural_units: bool = False):
        self.metric = metric
        self.natural_units = natural_units
        if lam is None:
            self._lambda = (
                normalize(parse("Lambda", metric.table))
                if "Lambda" in metric.table.parameters
                else NF_ZERO
            )
        elif isinstance(lam, Expression):
            self._lambda = normalize(lam)
        else:
            self._lambda = normalize(parse(str(lam), metric.table))

    @cached_property
    def gamma(self) -> Christoffel:
        return Christoffel(self.metric)

    @cached_property
    def g(self) -> Tensor:
        return metric_tensor(self.metric)

    @cached_property
    def g_inv(self) -> Tensor:
        return inverse_metric_tensor(self.metric)

    @cached_property
    def riemann13(self) -> Tensor:
        return riemann13(self.metric, self.gamma)

    @cached_property
    def riemann(self) -> Tensor:
        return lower_index(self.riemann13, 0, self.metric)

    @cached_property
    def _ricci_pair(self):
        return ricci_and_scalar(self.riemann, self.metric)

    @cached_property
    def ricci(self) -> Tensor:
        return self._ricci_pair[0]

    @cached_property
    def ricci_mixed(self) -> Tensor:
        return raise_index(self.ricci, 0, self.metric)

    @cached_property
    def kappa(self) -> NormalForm:
        return self._ricci_pair[1]

    @cached_property
    def conformal(self) -> Tensor:
        return conformal(self.riemann, self.ricci, self.kappa, self.metric)

    @cached_property
    def concircular(self) -> Tensor:
        return concircular(self.riemann, self.kappa, self.metric)

    @cached_property
    def conharmonic(self) -> Tensor:
        return conharmonic(self.riemann, self.ricci, self.metric)

    @cached_property
    def gaussian(self) -> Tensor:
        return gaussian(self.metric)

    @cached_property
    def projective(self) -> Tensor:
        return projective(self.riemann, self.ricci, self.metric)

    @cached_property
    def projective13(self) -> Tensor:
        return raise_index(self.projective, 0, self.metric)

    @cached_property
    def riemann_squared(self) -> Tensor:
        return riemann_squared(self.riemann, self.metric)

    @cached_property
    def ricci_sq(self) -> Tensor:
        return ricci_power(self.ricci, self.metric, 2)

    @cached_property
    def ricci_cube(self) -> Tensor:
        return ricci_power(self.ricci, self.metric, 3)

    def nabla(self, t: Tensor) -> Tensor:
        return covariant_derivative(t, self.gamma)

    @cached_property
    def nabla_riemann(self) -> Tensor:
        return self.nabla(self.riemann)

    @cached_property
    def nabla_ricci(self) -> Tensor:
        return self.nabla(self.ricci)

    @cached_property
    def nabla_conformal(self) -> Tensor:
        return self.nabla(self.conformal)

    @cached_property
    def nabla_projective(self) -> Tensor:
        return self.nabla(self.projective)

    @cached_property
    def einstein_factor(self) -> NormalForm:
        """c^4 / (8 pi G), or 1 under natural units."""
        if self.natural_units:
            return NormalForm.one()
        t = self.metric.table
        missing = [p for p in ("c", "G", "pi") if p not in t.parameters]
        if missing:
            raise ValueError(
                f"parameters {missing} are not declared; use natural units instead"
            )
        c4 = normalize(parse("c^4", t))
        denom = normalize(parse("8*pi*G", t))
        return c4 / denom

    @cached_property
    def energy_momentum(self) -> Tensor:
        """T = c^4/(8 pi G) [S - (kappa/2 - Lambda) g]."""
        coef = self.kappa.scale(Fraction(1, 2)) - self._lambda
        t = self.ricci - self.g.scale(coef)
        return t.scale(self.einstein_factor)

    @cached_property
    def nabla_energy_momentum(self) -> Tensor:
        return self.nabla(self.energy_momentum)

    def tensor_by_name(self, name: str) -> Tensor:
        named = {
            "metric": self.g,
            "inverse-metric": self.g_inv,
            "riemann": self.riemann,
            "riemann13": self.riemann13,
            "ricci": self.ricci,
            "ricci-mixed": self.ricci_mixed,
            "ricci-squared": self.ricci_sq,
            "ricci-cubed": self.ricci_cube,
            "conformal": self.conformal,
            "concircular": self.concircular,
            "conharmonic": self.conharmonic,
            "gaussian": self.gaussian,
            "projective": self.projective,
            "projective13": self.projective13,
            "riemann-squared": self.riemann_squared,
            "energy-momentum": self.energy_momentum,
            "nabla-riemann": self.nabla_riemann,
            "nabla-ricci": self.nabla_ricci,
            "nabla-conformal": self.nabla_conformal,
            "nabla-projective": self.nabla_projective,
            "nabla-energy-momentum": self.nabla_energy_momentum,
        }
        if name not in named:
            raise KeyError(f"unknown tensor {name!r}; one of {sorted(named)}")
        return named[name]

    TENSOR_NAMES = (
        "metric",
        "inverse-metric",
        "riemann",
        "riemann13",
        "ricci",
        "ricci-mixed",
        "ricci-squared",
        "ricci-cubed",
        "scalar-curvature",
        "conformal",
        "concircular",
        "conharmonic",
        "gaussian",
        "projective",
        "projective13",
        "riemann-squared",
        "energy-momentum",
        "nabla-riemann",
        "nabla-ricci",
        "nabla-conformal",
        "nabla-projective",
        "nabla-energy-momentum",
    )
