"""Curvature action D.B and the Tachibana operator Q(A,B).

Both produce tensors with two extra covariant slots appended last.  The
action of the endomorphism family ``scr-D(X,Y)`` extends to contravariant
slots as the dual (negative transpose) action, which is what distinguishes
``P.R`` from ``P.scr-R`` on tensors that are not metrically equivalent.
"""

from __future__ import annotations

import warnings

from .algebra import NF_ZERO, NormalForm
from .geometry import GeometryError, Metric
from .tensors import Tensor


def _endo_matrix(d: Tensor, metric: Metric) -> list[list[list[list[NormalForm]]]]:
    """[j][l][p][q] = g^{pm} D_{jlqm}: the endomorphism of the (j,l) 2-plane."""
    n = metric.n
    ginv = metric.g_inv
    out = [[[[NF_ZERO] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for (j, l, q, m), v in d.nonzero():
        for p in range(n):
            gpm = ginv[p][m]
            if gpm.is_zero:
                continue
            cell = out[j][l]
            cell[p][q] = cell[p][q] + gpm * v
    return out


def curvature_action(d: Tensor, b: Tensor, metric: Metric) -> Tensor:
    """(D.B)(X1,...,Xk,X,Y) = -sum_s B(..., scr-D(X,Y)X_s, ...).

    ``d`` must be a (0,4) tensor on the same chart as ``b``.  Contravariant
    slots of ``b`` transform with the opposite sign (dual action).
    """
    if d.variance != "dddd":
        raise ValueError("the acting tensor must be of type (0,4)")
    if d.chart.coordinates != b.chart.coordinates:
        raise GeometryError("tensors live on different charts")
    if not d.is_antisymmetric_in(0, 1):
        warnings.warn(
            "acting tensor is not antisymmetric in its first two slots; "
            "the action is computed with scr-D(X,Y) from slots (1,2) as-is",
            stacklevel=2,
        )
    n = b.n
    endo = _endo_matrix(d, metric)
    out = Tensor.zeros(b.chart, b.variance + "dd")
    rank = b.rank
    antisym = d.is_antisymmetric_in(0, 1)
    nonzero_b = list(b.nonzero())
    for idx, v in nonzero_b:
        for j in range(n):
            for l in range(j + 1 if antisym else 0, n):
                if antisym and j == l:
                    continue
                cell = endo[j][l]
                for s in range(rank):
                    i_s = idx[s]
                    if b.variance[s] == "d":
                        # -B(..., scr-D e_{i_s}, ...): scatter over target index
                        for t in range(n):
                            coef = cell[i_s][t]
                            if coef.is_zero:
                                continue
                            term = coef * v
                            tgt = idx[:s] + (t,) + idx[s + 1 :]
                            f = out.flat(tgt + (j, l))
                            out.comps[f] = out.comps[f] - term
                            if antisym:
                                f = out.flat(tgt + (l, j))
                                out.comps[f] = out.comps[f] + term
                    else:
                        for t in range(n):
                            coef = cell[t][i_s]
                            if coef.is_zero:
                                continue
                            term = coef * v
                            tgt = idx[:s] + (t,) + idx[s + 1 :]
                            f = out.flat(tgt + (j, l))
                            out.comps[f] = out.comps[f] + term
                            if antisym:
                                f = out.flat(tgt + (l, j))
                                out.comps[f] = out.comps[f] - term
    return out


def tachibana(a: Tensor, b: Tensor) -> Tensor:
    """Q(A,B)(X1,...,Xk,X,Y) = ((X wedge_A Y) . B)(X1,...,Xk).

    The endomorphism (X wedge_A Y)Z = A(Y,Z)X - A(X,Z)Y acts as a derivation
    with the same orientation as the curvature action, i.e. in components

        Q(A,B)_{i1...ik j l} = sum_s [A_{j i_s} B(...X_l...) - A_{l i_s} B(...X_j...)].

    This pairing is what makes semi-Riemannian identities of the form
    D.B = L Q(A,B) come out with their published signs.
    """
    if a.variance != "dd":
        raise ValueError("the first operand must be a symmetric (0,2) tensor")
    if not a.is_symmetric_in(0, 1):
        raise ValueError("the first operand must be symmetric")
    if "u" in b.variance:
        raise ValueError("the Tachibana operator acts on covariant tensors")
    if a.chart.coordinates != b.chart.coordinates:
        raise GeometryError("tensors live on different charts")
    n = b.n
    out = Tensor.zeros(b.chart, b.variance + "dd")
    rank = b.rank
    for idx, v in b.nonzero():
        for s in range(rank):
            jb = idx[s]  # appears as the j (resp. l) argument of the result
            for i_s in range(n):
                base = idx[:s] + (i_s,) + idx[s + 1 :]
                for other in range(n):
                    coef = a.get(other, i_s)
                    if coef.is_zero:
                        continue
                    f = out.flat(base + (other, jb))  # +A_{j i_s} B(...,X_l,...)
                    out.comps[f] = out.comps[f] + coef * v
                    f = out.flat(base + (jb, other))  # -A_{l i_s} B(...,X_j,...)
                    out.comps[f] = out.comps[f] - coef * v
    return out
