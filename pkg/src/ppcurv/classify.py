"""Curvature-structure checks: each decides or solves one condition and
returns a :class:`Verdict` with an explicit witness.

Every check is certified symbolically (exact normal-form arithmetic over the
opaque atoms), then optionally re-confirmed on randomized exact
instantiations whose log is attached to the verdict.  Pointwise evidence
alone never yields a plain "holds": it is reported as "holds-numeric".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .algebra import NF_ONE, NF_ZERO, NormalForm, ResampleNeeded, param_atom
from .curvature import CurvatureBundle
from .expr import Binding, from_normal, instantiate, normalize, parse, pprint
from .geometry import Metric
from .linsolve import LinearSolution, exact_rank, solve_linear, symbolic_rank
from .sampling import FamilySpec, Sampler, atom_point_for
from .tensors import Tensor, covariant_derivative, kulkarni_nomizu, raise_index
from .actions import curvature_action, tachibana

HOLDS = "holds"
HOLDS_WITH_SOLUTION = "holds-with-solution"
HOLDS_NUMERIC = "holds-numeric"
FAILS = "fails"
VACUOUS = "vacuous"


@dataclass
class Verdict:
    structure: str
    status: str
    witness: dict = field(default_factory=dict)
    evidence: str = "symbolic"
    side_conditions: list[str] = field(default_factory=list)
    samples: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "structure": self.structure,
            "status": self.status,
            "witness": self.witness,
            "evidence": self.evidence,
            "side_conditions": self.side_conditions,
            "samples": self.samples,
        }

    @property
    def ok(self) -> bool:
        return self.status in (HOLDS, HOLDS_WITH_SOLUTION, HOLDS_NUMERIC)


def _s(nf: NormalForm) -> str:
    return pprint(from_normal(nf))


def _label(idx: tuple[int, ...]) -> str:
    return "".join(str(i + 1) for i in idx)


def _one_form_strings(components: Sequence[NormalForm]) -> list[str]:
    return [_s(c) for c in components]


def _denominator_conditions(nfs: Iterable[NormalForm]) -> list[str]:
    out = []
    seen = set()
    for nf in nfs:
        if nf.den.constant_value() is not None:
            continue
        text = _s(NormalForm.from_poly(nf.den))
        if text not in seen:
            seen.add(text)
            out.append(f"{text} != 0")
    return out



def _inconsistent_verdict(structure: str, sol) -> Verdict:
    witness = {"residual": _s(sol.residual)}
    if sol.sample_point:
        witness["sample_point"] = sol.sample_point
    return Verdict(structure, FAILS, witness=witness, evidence=sol.evidence)

class Classifier:
    """Runs structure checks against one metric's curvature bundle."""

    def __init__(
        self,
        bundle: CurvatureBundle,
        seed: int = 0,
        instantiations: int = 0,
        points: int = 3,
        families: dict[str, FamilySpec] | None = None,
    ):
        self.b = bundle
        self.metric = bundle.metric
        self.seed = seed
        self.instantiations = instantiations
        self.points = points
        self.families = families or {}
        self._op_cache: dict[tuple[str, str, str], Tensor] = {}

    _TENSOR_ATTRS = {
        "g": "g",
        "riemann": "riemann",
        "riemann13": "riemann13",
        "ricci": "ricci",
        "ricci-mixed": "ricci_mixed",
        "conformal": "conformal",
        "projective": "projective",
    }

    def _named(self, name: str) -> Tensor:
        return getattr(self.b, self._TENSOR_ATTRS[name])

    def action(self, dname: str, bname: str) -> Tensor:
        """Cached curvature action D.B between named bundle tensors."""
        key = ("action", dname, bname)
        if key not in self._op_cache:
            self._op_cache[key] = curvature_action(
                self._named(dname), self._named(bname), self.metric
            )
        return self._op_cache[key]

    def q_op(self, aname: str, bname: str) -> Tensor:
        """Cached Tachibana operator Q(A,B) between named bundle tensors."""
        key = ("tachibana", aname, bname)
        if key not in self._op_cache:
            self._op_cache[key] = tachibana(self._named(aname), self._named(bname))
        return self._op_cache[key]

    # -- randomized confirmation ------------------------------------------------

    def _confirm_zero(self, verdict: Verdict, residuals: Sequence[NormalForm]):
        """Exact randomized-instantiation confirmation for zero claims."""
        if not self.instantiations or not residuals:
            return
        sampler = Sampler(self.seed)
        interesting = [nf for nf in residuals if nf.atoms()][:8]
        if not interesting:
            interesting = list(residuals)[:2]
        for i in range(self.instantiations):
            binding = sampler.instantiation(self.metric, self.families)
            for j in range(self.points):
                try:
                    values = sampler.good_point(self.metric, binding)
                    ok = True
                    for nf in interesting:
                        inst = normalize(instantiate(from_normal(nf), binding))
                        point = atom_point_for([inst], values)
                        if not inst.eval_pair(point)[0].is_zero:
                            ok = False
                            break
                    verdict.samples.append(
                        f"seed={self.seed} inst={i} point={j}: "
                        + ("zero" if ok else "NONZERO")
                    )
                    if not ok:
                        verdict.status = FAILS
                        verdict.witness["sample_disagreement"] = True
                except ResampleNeeded:
                    verdict.samples.append(f"seed={self.seed} inst={i} point={j}: resample")

    # -- generic zero checks ----------------------------------------------------

    def zero_check(self, structure: str, t: Tensor, positive_name: str = "") -> Verdict:
        if t.is_zero:
            v = Verdict(structure, HOLDS, witness={"identically_zero": True})
            self._confirm_zero(v, [])
            return v
        idx, val = next(t.nonzero())
        v = Verdict(
            structure,
            FAILS,
            witness={
                "nonzero_component": _label(idx),
                "value": _s(val),
            },
        )
        return v

    # -- recurrence -------------------------------------------------------------

    def check_recurrent(self, structure: str, t: Tensor, nabla_t: Tensor | None = None) -> Verdict:
        if t.is_zero:
            return Verdict(
                structure, VACUOUS, witness={"reason": "tensor vanishes identically"}
            )
        nab = nabla_t if nabla_t is not None else self.b.nabla(t)
        if nab.is_zero:
            return Verdict(
                structure,
                HOLDS_WITH_SOLUTION,
                witness={"parallel": True, "one_form": ["0"] * t.n},
            )
        n = t.n
        rows = []
        for idx, val in t.nonzero():
            for m in range(n):
                coeffs = [NF_ZERO] * n
                coeffs[m] = val
                rows.append((coeffs, nab.get(*idx, m)))
        # components where t vanishes must have vanishing derivative
        for idx in t.indices():
            if t.get(*idx).is_zero:
                for m in range(n):
                    r = nab.get(*idx, m)
                    if not r.is_zero:
                        return Verdict(
                            structure,
                            FAILS,
                            witness={
                                "residual_component": _label(idx + (m,)),
                                "value": _s(r),
                            },
                        )
        sol = solve_linear(rows, n)
        if not sol.consistent:
            return _inconsistent_verdict(structure, sol)
        pi = sol.particular
        v = Verdict(
            structure,
            HOLDS_WITH_SOLUTION,
            witness={"one_form": _one_form_strings(pi), "parallel": all(c.is_zero for c in pi)},
            side_conditions=_denominator_conditions(pi),
        )
        self._verify_recurrence(v, t, nab, pi)
        return v

    def _verify_recurrence(self, v: Verdict, t: Tensor, nab: Tensor, pi: list[NormalForm]):
        for idx, val in t.nonzero():
            for m in range(t.n):
                if not (nab.get(*idx, m) - pi[m] * val).is_zero:
                    v.status = FAILS
                    v.witness["residual_component"] = _label(idx + (m,))
                    return

    # -- curvature 2-form recurrence ---------------------------------------------

    def check_2form_recurrence(self, structure: str, d: Tensor, nabla_d: Tensor | None = None) -> Verdict:
        if d.is_zero:
            return Verdict(structure, VACUOUS, witness={"reason": "tensor vanishes identically"})
        nab = nabla_d if nabla_d is not None else self.b.nabla(d)
        n = d.n

        def rows():
            for i1, i2, i3 in itertools.combinations(range(n), 3):
                for a, b in itertools.product(range(n), repeat=2):
                    coeffs = [NF_ZERO] * n
                    coeffs[i1] = coeffs[i1] + d.get(i2, i3, a, b)
                    coeffs[i2] = coeffs[i2] + d.get(i3, i1, a, b)
                    coeffs[i3] = coeffs[i3] + d.get(i1, i2, a, b)
                    rhs = (
                        nab.get(i2, i3, a, b, i1)
                        + nab.get(i3, i1, a, b, i2)
                        + nab.get(i1, i2, a, b, i3)
                    )
                    if rhs.is_zero and all(c.is_zero for c in coeffs):
                        continue
                    yield coeffs, rhs

        sol = solve_linear(rows(), n)
        if not sol.consistent:
            return _inconsistent_verdict(structure, sol)
        witness = {
            "one_form": _one_form_strings(sol.particular),
            "solution_dimension": sol.dimension,
        }
        if sol.nullspace:
            witness["kernel_basis"] = [_one_form_strings(vec) for vec in sol.nullspace]
        return Verdict(
            structure,
            HOLDS_WITH_SOLUTION,
            witness=witness,
            side_conditions=_denominator_conditions(sol.particular),
        )

    # -- Venzi spaces -------------------------------------------------------------

    def check_venzi(self, structure: str, d: Tensor) -> Verdict:
        if d.is_zero:
            return Verdict(structure, VACUOUS, witness={"reason": "tensor vanishes identically"})
        n = d.n
        rows = []
        for i1, i2, i3 in itertools.combinations(range(n), 3):
            for a, b in itertools.product(range(n), repeat=2):
                coeffs = [NF_ZERO] * n
                coeffs[i1] = coeffs[i1] + d.get(i2, i3, a, b)
                coeffs[i2] = coeffs[i2] + d.get(i3, i1, a, b)
                coeffs[i3] = coeffs[i3] + d.get(i1, i2, a, b)
                if any(not c.is_zero for c in coeffs):
                    rows.append((coeffs, NF_ZERO))
        sol = solve_linear(rows, n)
        dim = sol.dimension
        if dim >= 1:
            return Verdict(
                structure,
                HOLDS_WITH_SOLUTION,
                witness={
                    "solution_dimension": dim,
                    "one_forms": [_one_form_strings(vec) for vec in sol.nullspace],
                },
            )
        return Verdict(structure, FAILS, witness={"solution_dimension": 0})

    # -- compatibility --------------------------------------------------------------

    def check_compatibility(self, structure: str, d: Tensor, e: Tensor) -> Verdict:
        if not e.is_symmetric_in(0, 1):
            raise ValueError("compatibility requires a symmetric (0,2) tensor")
        endo = raise_index(e, 0, self.metric)  # E^p_q
        n = d.n

        def cyclic(i1, j, i2, i3):
            total = NF_ZERO
            for p in range(n):
                for (a, bidx, c) in ((i1, i2, i3), (i2, i3, i1), (i3, i1, i2)):
                    m = endo.get(p, a)
                    if m.is_zero:
                        continue
                    val = d.get(p, j, bidx, c)
                    if not val.is_zero:
                        total = total + m * val
            return total

        for i1, i2, i3 in itertools.combinations(range(n), 3):
            for j in range(n):
                r = cyclic(i1, j, i2, i3)
                if not r.is_zero:
                    return Verdict(
                        structure,
                        FAILS,
                        witness={
                            "cyclic_residual_at": _label((i1, j, i2, i3)),
                            "value": _s(r),
                        },
                    )
        v = Verdict(structure, HOLDS, witness={"cyclic_sum": "0"})
        return v

    # -- pseudosymmetric-type solves ---------------------------------------------

    def solve_pseudosymmetric(
        self,
        structure: str,
        lhs: Tensor,
        terms: Sequence[tuple[str, Tensor]],
    ) -> Verdict:
        if lhs.is_zero and all(t.is_zero for _, t in terms):
            return Verdict(
                structure,
                VACUOUS,
                witness={"reason": "both sides vanish identically"},
            )
        def rows():
            for idx in lhs.indices():
                coeffs = [t.get(*idx) for _, t in terms]
                rhs = lhs.get(*idx)
                if rhs.is_zero and all(c.is_zero for c in coeffs):
                    continue
                yield coeffs, rhs

        sol = solve_linear(rows(), len(terms))
        if not sol.consistent:
            return _inconsistent_verdict(structure, sol)
        coeff_map = {}
        kinds = {}
        for (name, _), val in zip(terms, sol.particular):
            coeff_map[name] = _s(val)
            kinds[name] = "constant" if val.constant_value() is not None else "function"
        witness = {
            "coefficients": coeff_map,
            "coefficient_kind": kinds,
            "solution_dimension": sol.dimension,
        }
        return Verdict(
            structure,
            HOLDS_WITH_SOLUTION,
            witness=witness,
            side_conditions=_denominator_conditions(sol.particular),
        )

    # -- Ein(k) ----------------------------------------------------------------------

    def check_einstein(self) -> Verdict:
        n = self.metric.n
        diff = self.b.ricci - self.b.g.scale(self.b.kappa.scale(Fraction(1, n)))
        if diff.is_zero:
            return Verdict("einstein", HOLDS, witness={"alpha": _s(self.b.kappa.scale(Fraction(1, n)))})
        idx, val = next(diff.nonzero())
        return Verdict(
            "einstein", FAILS, witness={"nonzero_component": _label(idx), "value": _s(val)}
        )

    def check_ein(self, k: int) -> Verdict:
        """Degree-k polynomial relation for the Ricci endomorphism."""
        from .tensors import ricci_power

        powers = [self.b.g, self.b.ricci]
        for j in range(2, k + 1):
            powers.append(ricci_power(self.b.ricci, self.metric, j))
        lead = powers[k]
        terms = powers[k - 1 :: -1]  # S^{k-1}, ..., S, g
        rows = []
        for idx in lead.indices():
            coeffs = [t.get(*idx) for t in terms]
            rhs = -lead.get(*idx)
            if rhs.is_zero and all(c.is_zero for c in coeffs):
                continue
            rows.append((coeffs, rhs))
        sol = solve_linear(rows, len(terms))
        if not sol.consistent:
            return _inconsistent_verdict(f"ein:{k}", sol)
        labels = [f"lambda_{j}" for j in range(1, len(terms) + 1)]
        witness = {
            "relation": f"S^{k} + " + " + ".join(
                f"lambda_{j}*S^{k - j}" if k - j > 1 else ("lambda_%d*S" % j if k - j == 1 else f"lambda_{j}*g")
                for j in range(1, len(terms) + 1)
            ) + " = 0",
            "coefficients": {l: _s(v) for l, v in zip(labels, sol.particular)},
            "solution_dimension": sol.dimension,
        }
        return Verdict(
            f"ein:{k}",
            HOLDS_WITH_SOLUTION,
            witness=witness,
            side_conditions=_denominator_conditions(sol.particular),
        )

    def ein_profile(self) -> Verdict:
        """Minimal k in {2,3,4} whose Ein(k) relation certifies."""
        details = {}
        minimal = None
        for k in (2, 3, 4):
            v = self.check_ein(k)
            details[f"ein:{k}"] = v.status
            if v.ok and minimal is None:
                minimal = k
                details["coefficients"] = v.witness["coefficients"]
        ein = Verdict(
            "ein-profile",
            HOLDS_WITH_SOLUTION if minimal is not None else FAILS,
            witness={"minimal_k": minimal, **details},
        )
        return ein

    # -- quasi-Einstein structure ------------------------------------------------------

    def _alpha_candidates(self) -> list[NormalForm]:
        s = self.b.ricci
        g = self.metric.g
        n = self.metric.n
        cands: list[NormalForm] = [NF_ZERO, self.b.kappa.scale(Fraction(1, n))]
        for i in range(n):
            for j in range(i, n):
                if not g[i][j].is_zero:
                    cands.append(s.get(i, j) / g[i][j])
        out = []
        for c in cands:
            if not any(c == o for o in out):
                out.append(c)
        return out

    def quasi_einstein_profile(self, structure: str = "quasi-einstein-profile") -> Verdict:
        s = self.b.ricci
        g = self.b.g
        n = self.metric.n
        best_rank = None
        best_alpha = None
        for alpha in self._alpha_candidates():
            diff = s - g.scale(alpha)
            matrix = [[diff.get(i, j) for j in range(n)] for i in range(n)]
            r = symbolic_rank(matrix)
            if best_rank is None or r < best_rank:
                best_rank, best_alpha = r, alpha
        v = Verdict(
            structure,
            HOLDS_WITH_SOLUTION,
            witness={
                "rank": best_rank,
                "alpha": _s(best_alpha),
                "classification": {0: "einstein-or-flat", 1: "quasi-einstein", 2: "2-quasi-einstein"}.get(
                    best_rank, f"rank-{best_rank}"
                ),
            },
            side_conditions=_denominator_conditions([best_alpha]),
        )
        self._confirm_rank(v, best_alpha, best_rank)
        return v

    def _confirm_rank(self, v: Verdict, alpha: NormalForm, rank: int):
        if not self.instantiations:
            return
        sampler = Sampler(self.seed)
        s = self.b.ricci
        g = self.b.g
        n = self.metric.n
        diff = s - g.scale(alpha)
        for i in range(self.instantiations):
            binding = sampler.instantiation(self.metric, self.families)
            inst = diff.instantiated(self.metric.table, binding)
            for j in range(self.points):
                try:
                    values = sampler.good_point(self.metric, binding)
                    point = atom_point_for([c for c in inst.comps if not c.is_zero] or [NF_ONE], values)
                    matrix = [
                        [
                            inst.get(a, b).eval_pair(point)[0]
                            for b in range(n)
                        ]
                        for a in range(n)
                    ]
                    r = exact_rank(matrix)
                    v.samples.append(f"seed={self.seed} inst={i} point={j}: rank={r}")
                    if r > rank:
                        v.status = FAILS
                        v.witness["sample_disagreement"] = f"rank {r} at sample"
                except ResampleNeeded:
                    v.samples.append(f"seed={self.seed} inst={i} point={j}: resample")

    def ricci_simple(self, structure: str = "ricci-simple") -> Verdict:
        """S = alpha eta (x) eta for a 1-form eta (necessarily rank <= 1)."""
        s = self.b.ricci
        n = self.metric.n
        if s.is_zero:
            return Verdict(structure, VACUOUS, witness={"reason": "Ricci tensor vanishes"})
        pivot = next((i for i in range(n) if not s.get(i, i).is_zero), None)
        if pivot is None:
            idx, val = next(s.nonzero())
            return Verdict(
                structure,
                FAILS,
                witness={"reason": "no rank-1 factorization", "nonzero_component": _label(idx)},
            )
        alpha = s.get(pivot, pivot)
        eta = [s.get(pivot, i) / alpha for i in range(n)]
        for i in range(n):
            for j in range(n):
                if not (s.get(i, j) - alpha * eta[i] * eta[j]).is_zero:
                    return Verdict(
                        structure,
                        FAILS,
                        witness={"reason": "Ricci rank exceeds 1", "component": _label((i, j))},
                    )
        norm = NF_ZERO
        ginv = self.metric.g_inv
        for i in range(n):
            for j in range(n):
                if not ginv[i][j].is_zero and not eta[i].is_zero and not eta[j].is_zero:
                    norm = norm + ginv[i][j] * eta[i] * eta[j]
        eta_t = Tensor(self.metric.chart, "d", list(eta))
        nabla_eta = self.b.nabla(eta_t)
        return Verdict(
            structure,
            HOLDS_WITH_SOLUTION,
            witness={
                "alpha": _s(alpha),
                "eta": _one_form_strings(eta),
                "eta_norm": _s(norm),
                "eta_null": norm.is_zero,
                "eta_parallel": nabla_eta.is_zero,
                "s_wedge_s_zero": kulkarni_nomizu(s, s).is_zero,
                "s_squared_zero": self.b.ricci_sq.is_zero,
            },
        )

    def _chaki_system(self, eta: list[NormalForm]) -> LinearSolution:
        """Linear system for alpha, beta, mu = gamma*delta at fixed eta."""
        n = self.metric.n
        s = self.b.ricci
        g = self.metric.g
        rows = []
        for i in range(n):
            for j in range(i, n):
                coeffs = [NF_ZERO] * (2 + n)
                coeffs[0] = g[i][j]
                coeffs[1] = eta[i] * eta[j]
                coeffs[2 + j] = coeffs[2 + j] + eta[i]
                coeffs[2 + i] = coeffs[2 + i] + eta[j]
                rows.append((coeffs, s.get(i, j)))
        return solve_linear(rows, 2 + n)

    def parallel_null_form(self) -> list[NormalForm] | None:
        """Covariantly constant 1-form with constant components, if any."""
        n = self.metric.n
        gamma = self.b.gamma
        rows = []
        for k in range(n):
            for j in range(n):
                coeffs = [gamma.comps[a][k][j] for a in range(n)]
                if any(not c.is_zero for c in coeffs):
                    rows.append((coeffs, NF_ZERO))
        sol = solve_linear(rows, n)
        if not sol.nullspace:
            return None
        vec = sol.nullspace[0]
        lead = next(c for c in vec if not c.is_zero)
        return [c / lead for c in vec]

    def chaki_gqe(self, structure: str = "chaki-generalized-quasi-einstein") -> Verdict:
        """S = alpha g + beta eta(x)eta + gamma [eta(x)delta + delta(x)eta].

        The candidate eta is the covariantly constant null form when one
        exists, falling back to the coordinate basis 1-forms.
        """
        n = self.metric.n
        candidates: list[list[NormalForm]] = []
        parallel = self.parallel_null_form()
        if parallel is not None:
            candidates.append(parallel)
        for k in range(n):
            basis = [NF_ONE if i == k else NF_ZERO for i in range(n)]
            if not any(basis == c for c in candidates):
                candidates.append(basis)
        sol = eta = None
        for cand in candidates:
            attempt = self._chaki_system(cand)
            if attempt.consistent:
                sol, eta = attempt, cand
                break
        if sol is None:
            return Verdict(
                structure,
                FAILS,
                witness={"reason": "no candidate 1-form admits the decomposition"},
            )
        s = self.b.ricci
        g = self.metric.g
        solution = sol.particular
        if sol.nullspace:
            # prefer the gauge the decomposition is usually quoted in: beta = 1
            beta = solution[1]
            for vec in sol.nullspace:
                if not vec[1].is_zero:
                    t = (NF_ONE - beta) / vec[1]
                    solution = [p + t * v for p, v in zip(solution, vec)]
                    break
        alpha, beta = solution[0], solution[1]
        delta = solution[2:]
        ginv = self.metric.g_inv

        def inner(u, v):
            total = NF_ZERO
            for i in range(n):
                for j in range(n):
                    if not ginv[i][j].is_zero and not u[i].is_zero and not v[j].is_zero:
                        total = total + ginv[i][j] * u[i] * v[j]
            return total

        # certify the decomposition residual symbolically
        for i in range(n):
            for j in range(n):
                resid = (
                    s.get(i, j)
                    - alpha * g[i][j]
                    - beta * eta[i] * eta[j]
                    - eta[i] * delta[j]
                    - eta[j] * delta[i]
                )
                if not resid.is_zero:
                    return Verdict(structure, FAILS, witness={"residual_at": _label((i, j))})
        return Verdict(
            structure,
            HOLDS_WITH_SOLUTION,
            witness={
                "alpha": _s(alpha),
                "beta": _s(beta),
                "gamma": "1",
                "eta": _one_form_strings(eta),
                "delta": _one_form_strings(list(delta)),
                "eta_norm": _s(inner(eta, eta)),
                "delta_norm_squared": _s(inner(list(delta), list(delta))),
                "g_eta_delta": _s(inner(eta, list(delta))),
                "solution_dimension": sol.dimension,
            },
            side_conditions=_denominator_conditions([alpha, beta, *delta]),
        )

    # -- Roter structure ---------------------------------------------------------------

    def check_roter(self, generalized: bool = False) -> Verdict:
        structure = "generalized-roter" if generalized else "roter"
        g = self.b.g
        s = self.b.ricci
        terms = [
            ("g^g", kulkarni_nomizu(g, g)),
            ("g^S", kulkarni_nomizu(g, s)),
            ("S^S", kulkarni_nomizu(s, s)),
        ]
        if generalized:
            s2 = self.b.ricci_sq
            terms += [
                ("g^S2", kulkarni_nomizu(g, s2)),
                ("S^S2", kulkarni_nomizu(s, s2)),
                ("S2^S2", kulkarni_nomizu(s2, s2)),
            ]
        verdict = self.solve_pseudosymmetric(structure, self.b.riemann, terms)
        if verdict.status == FAILS:
            vanished = [name for name, t in terms if t.is_zero]
            if vanished:
                verdict.witness["vanishing_terms"] = vanished
        return verdict

    # -- weak symmetry families -----------------------------------------------------

    def solve_weak_ricci_symmetry(self, cyclic: bool) -> Verdict:
        structure = "weakly-cyclic-ricci-symmetric" if cyclic else "weakly-ricci-symmetric"
        s = self.b.ricci
        if s.is_zero:
            return Verdict(structure, VACUOUS, witness={"reason": "Ricci tensor vanishes"})
        nab = self.b.nabla_ricci
        n = self.metric.n
        # unknown layout [Theta, Omega, Pi]: pivots consume Theta/Omega slots
        # first, so the family is presented with the customary free Pi_1,
        # Omega_1 scalars
        rows = []
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    coeffs = [NF_ZERO] * (3 * n)
                    coeffs[2 * n + k] = coeffs[2 * n + k] + s.get(i, j)  # Pi(X)
                    coeffs[n + i] = coeffs[n + i] + s.get(k, j)  # Omega(X1)
                    coeffs[j] = coeffs[j] + s.get(i, k)  # Theta(X2)
                    if cyclic:
                        rhs = nab.get(i, j, k) + nab.get(k, j, i) + nab.get(i, k, j)
                    else:
                        rhs = nab.get(i, j, k)
                    if rhs.is_zero and all(c.is_zero for c in coeffs):
                        continue
                    rows.append((coeffs, rhs))
        sol = solve_linear(rows, 3 * n)
        if not sol.consistent:
            return _inconsistent_verdict(structure, sol)
        names = [f"Theta_{i+1}" for i in range(n)] + [f"Omega_{i+1}" for i in range(n)] + [
            f"Pi_{i+1}" for i in range(n)
        ]
        free = [names[c] for c in range(3 * n) if c not in sol.pivot_columns]
        family = sol.substitute_free(
            [NormalForm.atom(param_atom(fp)) for fp in free]
        )
        witness = {
            "Pi": _one_form_strings(family[2 * n :]),
            "Omega": _one_form_strings(family[n : 2 * n]),
            "Theta": _one_form_strings(family[:n]),
            "free_parameters": sorted(free),
            "solution_dimension": sol.dimension,
        }
        return Verdict(
            structure,
            HOLDS_WITH_SOLUTION,
            witness=witness,
            side_conditions=_denominator_conditions(sol.particular),
        )

    def check_weakly_symmetric(self, structure: str, d: Tensor, nabla_d: Tensor | None = None) -> Verdict:
        """nabla D = Pi (x) D + one inserted 1-form per slot (five unknowns)."""
        if d.is_zero:
            return Verdict(structure, VACUOUS, witness={"reason": "tensor vanishes identically"})
        nab = nabla_d if nabla_d is not None else self.b.nabla(d)
        n = d.n
        nun = 5 * n

        def rows():
            for y, z, u, w in itertools.product(range(n), repeat=4):
                for x in range(n):
                    coeffs = [NF_ZERO] * nun
                    coeffs[x] = coeffs[x] + d.get(y, z, u, w)
                    coeffs[n + y] = coeffs[n + y] + d.get(x, z, u, w)
                    coeffs[2 * n + z] = coeffs[2 * n + z] + d.get(y, x, u, w)
                    coeffs[3 * n + u] = coeffs[3 * n + u] + d.get(y, z, x, w)
                    coeffs[4 * n + w] = coeffs[4 * n + w] + d.get(y, z, u, x)
                    rhs = nab.get(y, z, u, w, x)
                    if rhs.is_zero and all(c.is_zero for c in coeffs):
                        continue
                    yield coeffs, rhs

        sol = solve_linear(rows(), nun)
        if not sol.consistent:
            return _inconsistent_verdict(structure, sol)
        return Verdict(
            structure,
            HOLDS_WITH_SOLUTION,
            witness={
                "one_forms": {
                    "Pi": _one_form_strings(sol.particular[:n]),
                    "Theta1": _one_form_strings(sol.particular[n : 2 * n]),
                    "Theta2": _one_form_strings(sol.particular[2 * n : 3 * n]),
                    "Theta3": _one_form_strings(sol.particular[3 * n : 4 * n]),
                    "Theta4": _one_form_strings(sol.particular[4 * n :]),
                },
                "solution_dimension": sol.dimension,
            },
        )

    def check_chaki_pseudosymmetric(self, structure: str, d: Tensor, nabla_d: Tensor | None = None) -> Verdict:
        """nabla D = 2A(X) D + A inserted in each slot, single 1-form A."""
        if d.is_zero:
            return Verdict(structure, VACUOUS, witness={"reason": "tensor vanishes identically"})
        nab = nabla_d if nabla_d is not None else self.b.nabla(d)
        n = d.n

        def rows():
            for y, z, u, w in itertools.product(range(n), repeat=4):
                for x in range(n):
                    coeffs = [NF_ZERO] * n
                    coeffs[x] = coeffs[x] + d.get(y, z, u, w).scale(2)
                    coeffs[y] = coeffs[y] + d.get(x, z, u, w)
                    coeffs[z] = coeffs[z] + d.get(y, x, u, w)
                    coeffs[u] = coeffs[u] + d.get(y, z, x, w)
                    coeffs[w] = coeffs[w] + d.get(y, z, u, x)
                    rhs = nab.get(y, z, u, w, x)
                    if rhs.is_zero and all(c.is_zero for c in coeffs):
                        continue
                    yield coeffs, rhs

        sol = solve_linear(rows(), n)
        if not sol.consistent:
            return _inconsistent_verdict(structure, sol)
        return Verdict(
            structure,
            HOLDS_WITH_SOLUTION,
            witness={"one_form": _one_form_strings(sol.particular)},
        )

    # -- energy-momentum --------------------------------------------------------------

    def energy_momentum_zero_lambda(self) -> Tensor:
        coef = self.b.kappa.scale(Fraction(1, 2))
        return (self.b.ricci - self.b.g.scale(coef)).scale(self.b.einstein_factor)

    def check_codazzi(self, structure: str, t: Tensor, nabla_t: Tensor | None = None) -> Verdict:
        nab = nabla_t if nabla_t is not None else self.b.nabla(t)
        n = t.n
        for i, j, k in itertools.product(range(n), repeat=3):
            r = nab.get(i, j, k) - nab.get(k, j, i)
            if not r.is_zero:
                return Verdict(
                    structure,
                    FAILS,
                    witness={"codazzi_difference_at": _label((i, j, k)), "value": _s(r)},
                )
        return Verdict(structure, HOLDS, witness={"codazzi_differences": "0"})

    def check_cyclic_parallel(self, structure: str, t: Tensor, nabla_t: Tensor | None = None) -> Verdict:
        nab = nabla_t if nabla_t is not None else self.b.nabla(t)
        n = t.n
        for i, j, k in itertools.product(range(n), repeat=3):
            r = nab.get(i, j, k) + nab.get(j, k, i) + nab.get(k, i, j)
            if not r.is_zero:
                return Verdict(
                    structure,
                    FAILS,
                    witness={"cyclic_sum_at": _label((i, j, k)), "value": _s(r)},
                )
        return Verdict(structure, HOLDS, witness={"cyclic_sums": "0"})

    def pure_radiation(self, structure: str = "pure-radiation") -> Verdict:
        """At zero cosmological constant: T of rank 1 with a null generator."""
        t0 = self.energy_momentum_zero_lambda()
        n = self.metric.n
        if t0.is_zero:
            return Verdict(structure, VACUOUS, witness={"reason": "energy-momentum vanishes"})
        pivot = next((i for i in range(n) if not t0.get(i, i).is_zero), None)
        if pivot is None:
            idx, val = next(t0.nonzero())
            return Verdict(
                structure,
                FAILS,
                witness={"reason": "rank exceeds 1", "nonzero_component": _label(idx), "value": _s(val)},
            )
        tau = t0.get(pivot, pivot)
        eta = [t0.get(pivot, i) / tau for i in range(n)]
        for i in range(n):
            for j in range(n):
                if not (t0.get(i, j) - tau * eta[i] * eta[j]).is_zero:
                    return Verdict(
                        structure,
                        FAILS,
                        witness={"reason": "rank exceeds 1", "component": _label((i, j))},
                    )
        ginv = self.metric.g_inv
        norm = NF_ZERO
        for i in range(n):
            for j in range(n):
                if not ginv[i][j].is_zero and not eta[i].is_zero and not eta[j].is_zero:
                    norm = norm + ginv[i][j] * eta[i] * eta[j]
        if not norm.is_zero:
            return Verdict(
                structure,
                FAILS,
                witness={"reason": "generator not null", "norm": _s(norm)},
            )
        return Verdict(
            structure,
            HOLDS_WITH_SOLUTION,
            witness={"tau": _s(tau), "eta": _one_form_strings(eta), "eta_null": True},
        )

    # -- divergence ---------------------------------------------------------------

    def check_divergence_free(self, structure: str, t: Tensor) -> Verdict:
        from .curvature import divergence

        div = divergence(t, self.metric, self.b.gamma)
        if div.is_zero:
            return Verdict(structure, HOLDS, witness={"divergence": "0"})
        idx, val = next(div.nonzero())
        return Verdict(
            structure,
            FAILS,
            witness={"nonzero_component": _label(idx), "value": _s(val)},
        )

    # -- the standard battery ------------------------------------------------------

    def standard_checks(self) -> dict[str, Callable[[], Verdict]]:
        b = self.b
        m = self.metric

        def scalar_zero():
            if b.kappa.is_zero:
                return Verdict("scalar-curvature-zero", HOLDS, witness={"kappa": "0"})
            return Verdict("scalar-curvature-zero", FAILS, witness={"kappa": _s(b.kappa)})

        checks: dict[str, Callable[[], Verdict]] = {
            "flat": lambda: self.zero_check("flat", b.riemann),
            "conformally-flat": lambda: self.zero_check("conformally-flat", b.conformal),
            "scalar-curvature-zero": scalar_zero,
            "riemann-equals-concircular": lambda: self.zero_check(
                "riemann-equals-concircular", b.riemann - b.concircular
            ),
            "conformal-equals-conharmonic": lambda: self.zero_check(
                "conformal-equals-conharmonic", b.conformal - b.conharmonic
            ),
            "locally-symmetric": lambda: self.zero_check("locally-symmetric", b.nabla_riemann),
            "ricci-symmetric": lambda: self.zero_check("ricci-symmetric", b.nabla_ricci),
            "conformally-symmetric": lambda: self.zero_check(
                "conformally-symmetric", b.nabla_conformal
            ),
            "projectively-symmetric": lambda: self.zero_check(
                "projectively-symmetric", b.nabla_projective
            ),
            "recurrent:riemann": lambda: self.check_recurrent(
                "recurrent:riemann", b.riemann, b.nabla_riemann
            ),
            "recurrent:ricci": lambda: self.check_recurrent(
                "recurrent:ricci", b.ricci, b.nabla_ricci
            ),
            "recurrent:conformal": lambda: self.check_recurrent(
                "recurrent:conformal", b.conformal, b.nabla_conformal
            ),
            "recurrent:projective": lambda: self.check_recurrent(
                "recurrent:projective", b.projective, b.nabla_projective
            ),
            "semisymmetric:riemann-riemann": lambda: self.zero_check(
                "semisymmetric:riemann-riemann", self.action("riemann", "riemann")
            ),
            "semisymmetric:riemann-ricci": lambda: self.zero_check(
                "semisymmetric:riemann-ricci", self.action("riemann", "ricci")
            ),
            "semisymmetric:riemann-conformal": lambda: self.zero_check(
                "semisymmetric:riemann-conformal", self.action("riemann", "conformal")
            ),
            "semisymmetric:riemann-projective": lambda: self.zero_check(
                "semisymmetric:riemann-projective", self.action("riemann", "projective")
            ),
            "semisymmetric:conformal-riemann": lambda: self.zero_check(
                "semisymmetric:conformal-riemann", self.action("conformal", "riemann")
            ),
            "semisymmetric:conformal-ricci": lambda: self.zero_check(
                "semisymmetric:conformal-ricci", self.action("conformal", "ricci")
            ),
            "semisymmetric:conformal-conformal": lambda: self.zero_check(
                "semisymmetric:conformal-conformal", self.action("conformal", "conformal")
            ),
            "semisymmetric:conformal-projective": lambda: self.zero_check(
                "semisymmetric:conformal-projective", self.action("conformal", "projective")
            ),
            "projective-action:riemann": lambda: self.zero_check(
                "projective-action:riemann", self.action("projective", "riemann")
            ),
            "projective-action:riemann13": lambda: self.zero_check(
                "projective-action:riemann13", self.action("projective", "riemann13")
            ),
            "projective-action:ricci": lambda: self.zero_check(
                "projective-action:ricci", self.action("projective", "ricci")
            ),
            "projective-action:ricci-mixed": lambda: self.zero_check(
                "projective-action:ricci-mixed", self.action("projective", "ricci-mixed")
            ),
            "tachibana-zero:ricci-riemann": lambda: self.zero_check(
                "tachibana-zero:ricci-riemann", self.q_op("ricci", "riemann")
            ),
            "tachibana-zero:ricci-conformal": lambda: self.zero_check(
                "tachibana-zero:ricci-conformal", self.q_op("ricci", "conformal")
            ),
            "pseudosymmetric:deszcz": lambda: self.solve_pseudosymmetric(
                "pseudosymmetric:deszcz",
                self.action("riemann", "riemann"),
                [("Q(g,R)", self.q_op("g", "riemann"))],
            ),
            "pseudosymmetric:ricci-generalized": lambda: self.solve_pseudosymmetric(
                "pseudosymmetric:ricci-generalized",
                self.action("riemann", "riemann"),
                [("Q(S,R)", self.q_op("ricci", "riemann"))],
            ),
            "pseudosymmetric:conformal": lambda: self.solve_pseudosymmetric(
                "pseudosymmetric:conformal",
                self.action("conformal", "conformal"),
                [("Q(g,C)", self.q_op("g", "conformal"))],
            ),
            "pseudosymmetric:projective-tachibana": lambda: self.solve_pseudosymmetric(
                "pseudosymmetric:projective-tachibana",
                self.action("projective", "projective"),
                [("Q(S,P)", self.q_op("ricci", "projective"))],
            ),
            "venzi:riemann": lambda: self.check_venzi("venzi:riemann", b.riemann),
            "venzi:conformal": lambda: self.check_venzi("venzi:conformal", b.conformal),
            "2form-recurrent:riemann": lambda: self.check_2form_recurrence(
                "2form-recurrent:riemann", b.riemann, b.nabla_riemann
            ),
            "2form-recurrent:conformal": lambda: self.check_2form_recurrence(
                "2form-recurrent:conformal", b.conformal, b.nabla_conformal
            ),
            "compatibility:riemann-ricci": lambda: self.check_compatibility(
                "compatibility:riemann-ricci", b.riemann, b.ricci
            ),
            "compatibility:conformal-ricci": lambda: self.check_compatibility(
                "compatibility:conformal-ricci", b.conformal, b.ricci
            ),
            "weakly-ricci-symmetric": lambda: self.solve_weak_ricci_symmetry(cyclic=False),
            "weakly-cyclic-ricci-symmetric": lambda: self.solve_weak_ricci_symmetry(cyclic=True),
            "weakly-symmetric:riemann": lambda: self.check_weakly_symmetric(
                "weakly-symmetric:riemann", b.riemann, b.nabla_riemann
            ),
            "weakly-symmetric:conformal": lambda: self.check_weakly_symmetric(
                "weakly-symmetric:conformal", b.conformal, b.nabla_conformal
            ),
            "weakly-symmetric:projective": lambda: self.check_weakly_symmetric(
                "weakly-symmetric:projective", b.projective, b.nabla_projective
            ),
            "weakly-symmetric:concircular": lambda: self.check_weakly_symmetric(
                "weakly-symmetric:concircular", b.concircular
            ),
            "weakly-symmetric:conharmonic": lambda: self.check_weakly_symmetric(
                "weakly-symmetric:conharmonic", b.conharmonic
            ),
            "chaki-pseudosymmetric:riemann": lambda: self.check_chaki_pseudosymmetric(
                "chaki-pseudosymmetric:riemann", b.riemann, b.nabla_riemann
            ),
            "chaki-pseudosymmetric:conformal": lambda: self.check_chaki_pseudosymmetric(
                "chaki-pseudosymmetric:conformal", b.conformal, b.nabla_conformal
            ),
            "chaki-pseudosymmetric:projective": lambda: self.check_chaki_pseudosymmetric(
                "chaki-pseudosymmetric:projective", b.projective, b.nabla_projective
            ),
            "chaki-pseudosymmetric:concircular": lambda: self.check_chaki_pseudosymmetric(
                "chaki-pseudosymmetric:concircular", b.concircular
            ),
            "chaki-pseudosymmetric:conharmonic": lambda: self.check_chaki_pseudosymmetric(
                "chaki-pseudosymmetric:conharmonic", b.conharmonic
            ),
            "einstein": self.check_einstein,
            "ein-profile": self.ein_profile,
            "quasi-einstein-profile": self.quasi_einstein_profile,
            "ricci-simple": self.ricci_simple,
            "chaki-generalized-quasi-einstein": self.chaki_gqe,
            "roter": lambda: self.check_roter(generalized=False),
            "generalized-roter": lambda: self.check_roter(generalized=True),
            "ricci-codazzi": lambda: self.check_codazzi("ricci-codazzi", b.ricci, b.nabla_ricci),
            "ricci-cyclic-parallel": lambda: self.check_cyclic_parallel(
                "ricci-cyclic-parallel", b.ricci, b.nabla_ricci
            ),
            "harmonic": lambda: self.check_divergence_free("harmonic", b.riemann),
            "divergence-free:conformal": lambda: self.check_divergence_free(
                "divergence-free:conformal", b.conformal
            ),
            "divergence-free:projective": lambda: self.check_divergence_free(
                "divergence-free:projective", b.projective
            ),
            "energy-momentum-parallel": lambda: self.zero_check(
                "energy-momentum-parallel", b.nabla_energy_momentum
            ),
            "energy-momentum-codazzi": lambda: self.check_codazzi(
                "energy-momentum-codazzi", b.energy_momentum, b.nabla_energy_momentum
            ),
            "energy-momentum-cyclic-parallel": lambda: self.check_cyclic_parallel(
                "energy-momentum-cyclic-parallel", b.energy_momentum, b.nabla_energy_momentum
            ),
            "pure-radiation": self.pure_radiation,
        }
        return checks

    def run(self, names: Sequence[str] | None = None) -> "ClassificationReport":
        checks = self.standard_checks()
        selected = list(checks) if names is None else list(names)
        unknown = [n for n in selected if n not in checks]
        if unknown:
            raise KeyError(f"unknown structure checks: {unknown}")
        verdicts = [checks[name]() for name in selected]
        verdicts.sort(key=lambda v: v.structure)
        return ClassificationReport(
            metric_id=self.metric.metric_id,
            seed=self.seed,
            instantiations=self.instantiations,
            points=self.points,
            verdicts=verdicts,
        )


@dataclass
class ClassificationReport:
    metric_id: str
    seed: int
    instantiations: int
    points: int
    verdicts: list[Verdict]

    def verdict(self, structure: str) -> Verdict:
        for v in self.verdicts:
            if v.structure == structure:
                return v
        raise KeyError(structure)

    def to_dict(self) -> dict:
        return {
            "metric_id": self.metric_id,
            "seed": self.seed,
            "instantiations": self.instantiations,
            "points": self.points,
            "verdicts": [v.to_dict() for v in self.verdicts],
        }


_COMPARE_DETAIL_KEYS = ("rank", "minimal_k", "classification", "parallel")


def compare_reports(a: ClassificationReport, b: ClassificationReport) -> dict:
    """Similarities and dissimilarities between two classification reports."""
    names = sorted(
        {v.structure for v in a.verdicts} & {v.structure for v in b.verdicts}
    )
    similarities = []
    dissimilarities = []
    for name in names:
        va, vb = a.verdict(name), b.verdict(name)
        same_status = va.ok == vb.ok and (va.status == vb.status or va.ok)
        detail_diff = {}
        for key in _COMPARE_DETAIL_KEYS:
            da, db = va.witness.get(key), vb.witness.get(key)
            if da != db and (da is not None or db is not None):
                detail_diff[key] = {a.metric_id: da, b.metric_id: db}
        entry = {
            "structure": name,
            a.metric_id: va.status,
            b.metric_id: vb.status,
        }
        if same_status and not detail_diff:
            similarities.append(entry)
        else:
            if detail_diff:
                entry["detail"] = detail_diff
            dissimilarities.append(entry)
    return {
        "metrics": [a.metric_id, b.metric_id],
        "similarities": similarities,
        "dissimilarities": dissimilarities,
    }
