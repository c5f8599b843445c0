"""Dense symbolic tensors and the standard metric operations on them."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .algebra import NF_ONE, NF_ZERO, NormalForm
from .expr import Binding, Expression, from_normal, instantiate, normalize, parse
from .geometry import GeometryError, Metric


class Tensor:
    """Dense component store over one chart.

    ``variance`` is a string of ``u``/``d`` per slot (contravariant /
    covariant).  Components are normal forms; indices are 0-based internally
    and 1-based in every public label, matching the component tables.
    """

    __slots__ = ("chart", "variance", "comps")

    def __init__(self, chart, variance: str, comps: list[NormalForm]):
        self.chart = chart
        self.variance = variance
        n = chart.n
        if len(comps) != n ** len(variance):
            raise ValueError("component count does not match valence")
        self.comps = comps

    # -- construction --------------------------------------------------------

    @staticmethod
    def zeros(chart, variance: str) -> "Tensor":
        return Tensor(chart, variance, [NF_ZERO] * (chart.n ** len(variance)))

    @staticmethod
    def build(chart, variance: str, fn: Callable[..., NormalForm]) -> "Tensor":
        n = chart.n
        comps = [fn(*idx) for idx in itertools.product(range(n), repeat=len(variance))]
        return Tensor(chart, variance, comps)

    @staticmethod
    def scalar_gradient(chart, value: NormalForm) -> "Tensor":
        return Tensor(chart, "d", [value.diff(i + 1) for i in range(chart.n)])

    # -- indexing ------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.chart.n

    @property
    def rank(self) -> int:
        return len(self.variance)

    def flat(self, idx: Sequence[int]) -> int:
        f = 0
        for i in idx:
            f = f * self.n + i
        return f

    def get(self, *idx: int) -> NormalForm:
        """0-based component access."""
        return self.comps[self.flat(idx)]

    def at(self, *labels: int) -> NormalForm:
        """1-based component access, e.g. ``R.at(1, 3, 1, 3)``."""
        return self.comps[self.flat(tuple(i - 1 for i in labels))]

    def indices(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(range(self.n), repeat=self.rank)

    def nonzero(self) -> Iterator[tuple[tuple[int, ...], NormalForm]]:
        for idx in self.indices():
            c = self.comps[self.flat(idx)]
            if not c.is_zero:
                yield idx, c

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.comps)

    # -- algebra --------------------------------------------------------------

    def _check_compatible(self, other: "Tensor"):
        if self.chart is not other.chart and self.chart.coordinates != other.chart.coordinates:
            raise GeometryError("tensors live on different charts")
        if self.variance != other.variance:
            raise ValueError("valence mismatch")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check_compatible(other)
        return Tensor(
            self.chart, self.variance, [a + b for a, b in zip(self.comps, other.comps)]
        )

    def __sub__(self, other: "Tensor") -> "Tensor":
        self._check_compatible(other)
        return Tensor(
            self.chart, self.variance, [a - b for a, b in zip(self.comps, other.comps)]
        )

    def __neg__(self) -> "Tensor":
        return Tensor(self.chart, self.variance, [-a for a in self.comps])

    def scale(self, c) -> "Tensor":
        nf = c if isinstance(c, NormalForm) else NormalForm.const(c)
        if nf.is_zero:
            return Tensor.zeros(self.chart, self.variance)
        return Tensor(self.chart, self.variance, [a * nf for a in self.comps])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        if self.variance != other.variance:
            return False
        return all(a == b for a, b in zip(self.comps, other.comps))

    __hash__ = None

    # -- symmetry checks -------------------------------------------------------

    def is_symmetric_in(self, s1: int, s2: int) -> bool:
        for idx in self.indices():
            j = list(idx)
            j[s1], j[s2] = j[s2], j[s1]
            if self.get(*idx) != self.get(*j):
                return False
        return True

    def is_antisymmetric_in(self, s1: int, s2: int) -> bool:
        for idx in self.indices():
            j = list(idx)
            j[s1], j[s2] = j[s2], j[s1]
            if not (self.get(*idx) + self.get(*j)).is_zero:
                return False
        return True

    def has_pair_exchange(self) -> bool:
        if self.rank != 4:
            raise ValueError("pair exchange applies to rank-4 tensors")
        for i, j, k, l in self.indices():
            if self.get(i, j, k, l) != self.get(k, l, i, j):
                return False
        return True

    def first_bianchi_holds(self) -> bool:
        if self.rank != 4:
            raise ValueError("cyclic identity applies to rank-4 tensors")
        for i, j, k, l in self.indices():
            s = self.get(i, j, k, l) + self.get(i, k, l, j) + self.get(i, l, j, k)
            if not s.is_zero:
                return False
        return True

    # -- substitution ----------------------------------------------------------

    def map(self, fn: Callable[[NormalForm], NormalForm]) -> "Tensor":
        return Tensor(self.chart, self.variance, [fn(c) for c in self.comps])

    def instantiated(self, table, binding: Binding) -> "Tensor":
        return self.map(lambda nf: normalize(instantiate(from_normal(nf), binding)))

    def component_table(self, zero: bool = False) -> dict[str, str]:
        """1-based label -> printed component, nonzero entries only."""
        out = {}
        for idx, c in self.nonzero():
            out["".join(str(i + 1) for i in idx)] = str(from_normal(c))
        return out


# ---------------------------------------------------------------------------
# Christoffel symbols


class Christoffel:
    """Levi-Civita connection coefficients of a metric."""

    def __init__(self, metric: Metric):
        self.metric = metric
        n = metric.n
        g = metric.g
        ginv = metric.g_inv
        dg = [
            [[g[i][j].diff(l + 1) for j in range(n)] for i in range(n)]
            for l in range(n)
        ]
        comps = [[[NF_ZERO] * n for _ in range(n)] for _ in range(n)]
        for k in range(n):
            for i in range(n):
                for j in range(i, n):
                    total = NF_ZERO
                    for l in range(n):
                        if ginv[k][l].is_zero:
                            continue
                        inner = dg[i][j][l] + dg[j][i][l] - dg[l][i][j]
                        if inner.is_zero:
                            continue
                        total = total + ginv[k][l] * inner
                    total = total.scale(Fraction(1, 2))
                    comps[k][i][j] = total
                    comps[k][j][i] = total
        self.comps = comps

    @property
    def chart(self):
        return self.metric.chart

    def get(self, k: int, i: int, j: int) -> NormalForm:
        """0-based Gamma^k_{ij}."""
        return self.comps[k][i][j]

    def at(self, k: int, i: int, j: int) -> NormalForm:
        return self.comps[k - 1][i - 1][j - 1]

    def is_zero(self) -> bool:
        return all(
            self.comps[k][i][j].is_zero
            for k in range(self.metric.n)
            for i in range(self.metric.n)
            for j in range(self.metric.n)
        )


def christoffel(metric: Metric) -> Christoffel:
    return Christoffel(metric)


# ---------------------------------------------------------------------------
# Covariant derivative


def covariant_derivative(t: Tensor, gamma: Christoffel) -> Tensor:
    """One extra covariant slot appended last; coordinate derivative on scalars."""
    if t.chart.coordinates != gamma.chart.coordinates:
        raise GeometryError("tensor and connection live on different charts")
    n = t.n
    rank = t.rank
    out = Tensor.zeros(t.chart, t.variance + "d")
    comps = out.comps

    for idx in t.indices():
        base = t.get(*idx)
        for m in range(n):
            total = base.diff(m + 1) if not base.is_zero else NF_ZERO
            for s in range(rank):
                i_s = idx[s]
                if t.variance[s] == "d":
                    for a in range(n):
                        gam = gamma.comps[a][m][i_s]
                        if gam.is_zero:
                            continue
                        j = idx[:s] + (a,) + idx[s + 1 :]
                        v = t.get(*j)
                        if not v.is_zero:
                            total = total - gam * v
                else:
                    for a in range(n):
                        gam = gamma.comps[i_s][m][a]
                        if gam.is_zero:
                            continue
                        j = idx[:s] + (a,) + idx[s + 1 :]
                        v = t.get(*j)
                        if not v.is_zero:
                            total = total + gam * v
            comps[out.flat(idx + (m,))] = total
    return out


# ---------------------------------------------------------------------------
# Metric contractions


def raise_index(t: Tensor, slot: int, metric: Metric) -> Tensor:
    return _convert_index(t, slot, metric.g_inv, "d", "u")


def lower_index(t: Tensor, slot: int, metric: Metric) -> Tensor:
    return _convert_index(t, slot, metric.g, "u", "d")


def _convert_index(t: Tensor, slot: int, matrix, want: str, new: str) -> Tensor:
    if not 0 <= slot < t.rank:
        raise IndexError("slot out of range")
    if t.variance[slot] != want:
        raise ValueError(f"slot {slot} is not of variance {want!r}")
    n = t.n
    variance = t.variance[:slot] + new + t.variance[slot + 1 :]
    out = Tensor.zeros(t.chart, variance)
    for idx, v in t.nonzero():
        a = idx[slot]
        for i in range(n):
            m = matrix[i][a]
            if m.is_zero:
                continue
            j = idx[:slot] + (i,) + idx[slot + 1 :]
            f = out.flat(j)
            out.comps[f] = out.comps[f] + m * v
    return out


def contract(t: Tensor, s1: int, s2: int) -> Tensor:
    """Trace a contravariant slot against a covariant slot."""
    if s1 > s2:
        s1, s2 = s2, s1
    if {t.variance[s1], t.variance[s2]} != {"u", "d"}:
        raise ValueError("contraction needs one upper and one lower slot")
    n = t.n
    variance = "".join(v for s, v in enumerate(t.variance) if s not in (s1, s2))
    out = Tensor.zeros(t.chart, variance)
    for idx, v in t.nonzero():
        if idx[s1] != idx[s2]:
            continue
        j = tuple(x for s, x in enumerate(idx) if s not in (s1, s2))
        f = out.flat(j)
        out.comps[f] = out.comps[f] + v
    return out


def metric_contract(t: Tensor, s1: int, s2: int, metric: Metric) -> Tensor:
    """Contract two covariant slots with the inverse metric."""
    if t.variance[s1] != "d" or t.variance[s2] != "d":
        raise ValueError("metric contraction acts on two covariant slots")
    return contract(raise_index(t, s1, metric), s1, s2)


def tensor_product(a: Tensor, b: Tensor) -> Tensor:
    if a.chart.coordinates != b.chart.coordinates:
        raise GeometryError("tensors live on different charts")
    out = Tensor.zeros(a.chart, a.variance + b.variance)
    for ia, va in a.nonzero():
        for ib, vb in b.nonzero():
            out.comps[out.flat(ia + ib)] = va * vb
    return out


# ---------------------------------------------------------------------------
# Kulkarni-Nomizu product and Ricci powers


def kulkarni_nomizu(a: Tensor, e: Tensor) -> Tensor:
    """Four-term product of two symmetric (0,2) tensors; Riemann symmetries."""
    for t in (a, e):
        if t.variance != "dd":
            raise ValueError("Kulkarni-Nomizu operands must be (0,2) tensors")
        if not t.is_symmetric_in(0, 1):
            raise ValueError("Kulkarni-Nomizu operands must be symmetric")

    def comp(i, j, k, l):
        return (
            a.get(i, l) * e.get(j, k)
            + a.get(j, k) * e.get(i, l)
            - a.get(i, k) * e.get(j, l)
            - a.get(j, l) * e.get(i, k)
        )

    return Tensor.build(a.chart, "dddd", comp)


def endomorphism(a: Tensor, metric: Metric) -> Tensor:
    """(1,1) tensor A^i_j = g^{ia} A_{aj} of a (0,2) tensor."""
    return raise_index(a, 0, metric)


def ricci_power(s: Tensor, metric: Metric, k: int) -> Tensor:
    """k-th level (0,2) tensor: A^k(X,Y) = A(curly-A^{k-1} X, Y)."""
    if k < 1:
        raise ValueError("power must be at least 1")
    smix = endomorphism(s, metric)  # S^a_b
    out = s
    for _ in range(k - 1):
        n = s.n
        comps = []
        for i in range(n):
            for j in range(n):
                total = NF_ZERO
                for a in range(n):
                    m = smix.get(a, i)
                    if m.is_zero:
                        continue
                    v = out.get(a, j)
                    if not v.is_zero:
                        total = total + m * v
                comps.append(total)
        out = Tensor(s.chart, "dd", comps)
    return out


# ---------------------------------------------------------------------------
# Sparse component tables ("non-zero components up to symmetry")


SYMMETRY_GROUPS = {
    # generators as (permutation of slots, sign)
    "riemann": (((1, 0, 2, 3), -1), ((0, 1, 3, 2), -1), ((2, 3, 0, 1), 1)),
    "pair1-antisym": (((1, 0, 2, 3), -1),),
    "symmetric2": (((1, 0), 1),),
    "symmetric2+d": (((1, 0, 2), 1),),
    "riemann+d": (((1, 0, 2, 3, 4), -1), ((0, 1, 3, 2, 4), -1), ((2, 3, 0, 1, 4), 1)),
    "pair1-antisym+d": (((1, 0, 2, 3, 4), -1),),
    "none": (),
}


def tensor_from_table(
    chart,
    symbol_table,
    variance: str,
    entries: Mapping[str, str | Expression | NormalForm],
    symmetry: str,
) -> Tensor:
    """Expand a sparse 1-based component table into a dense tensor.

    The named symmetry group is used to propagate each listed component; a
    conflicting assignment raises, so tables stay honest.
    """
    gens = SYMMETRY_GROUPS[symmetry]
    out = Tensor.zeros(chart, variance)
    assigned: dict[tuple[int, ...], NormalForm] = {}
    for label, value in entries.items():
        if isinstance(value, NormalForm):
            nf = value
        elif isinstance(value, Expression):
            nf = normalize(value)
        else:
            nf = normalize(parse(str(value), symbol_table))
        idx = tuple(int(ch) - 1 for ch in label)
        if len(idx) != len(variance):
            raise ValueError(f"label {label!r} does not match valence {variance!r}")
        # orbit of the index under the symmetry generators
        seen = {idx: nf}
        frontier = [(idx, nf)]
        while frontier:
            cur, val = frontier.pop()
            for perm, sign in gens:
                nidx = tuple(cur[p] for p in perm)
                nval = val if sign == 1 else -val
                if nidx in seen:
                    if seen[nidx] != nval:
                        raise ValueError(f"inconsistent symmetry at {nidx}")
                    continue
                seen[nidx] = nval
                frontier.append((nidx, nval))
        for nidx, nval in seen.items():
            if nidx in assigned and assigned[nidx] != nval:
                raise ValueError(f"conflicting table entries at {nidx}")
            assigned[nidx] = nval
            out.comps[out.flat(nidx)] = nval
    return out
