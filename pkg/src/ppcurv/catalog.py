"""Built-in metric fixtures, their expected results, and the suite runner."""

from __future__ import annotations

import importlib.resources as resources
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import expectations as EXP
from .algebra import NF_ONE, NF_ZERO, NormalForm, is_fn
from .classify import (
    FAILS,
    HOLDS,
    HOLDS_WITH_SOLUTION,
    ClassificationReport,
    Classifier,
    Verdict,
    compare_reports,
)
from .curvature import CurvatureBundle
from .expr import (
    Binding,
    Expression,
    FunctionDecl,
    SymbolTable,
    from_normal,
    instantiate,
    normalize,
    parse,
    pprint,
)
from .geometry import Metric, build_metric, metric_from_dict, metric_to_dict
from .sampling import FamilySpec
from .tensors import Tensor, covariant_derivative, tensor_from_table

WAVE_FAMILY = {"f": "c0*exp(a*x3 + b*x4)"}
FREE_PARAM_NAMES = tuple(
    f"{base}_{i}" for base in ("Pi", "Omega", "Theta") for i in range(1, 5)
)


class CatalogError(KeyError):
    pass


@dataclass
class CatalogEntry:
    id: str
    definition: dict
    tables: dict = field(default_factory=dict)
    suites: dict = field(default_factory=dict)

    @property
    def notes(self) -> str:
        return self.definition.get("notes", "")

    @property
    def constraint_texts(self) -> list[str]:
        return list(self.definition.get("constraints", []))

    def metric(self) -> Metric:
        if not hasattr(self, "_metric"):
            self._metric = metric_from_dict(self.definition)
        return self._metric

    # -- certification (constraint-preserving substitution) -------------------

    def certification_substitution(self) -> dict[str, str]:
        return dict(self.definition.get("certification", {}))

    def _family_table(self, base: SymbolTable) -> SymbolTable:
        return base.with_parameters("a", "b", "c0", *FREE_PARAM_NAMES)

    def certification_binding(self, subs: dict[str, str] | None = None) -> Binding | None:
        subs = subs if subs is not None else self.certification_substitution()
        if not subs:
            return None
        table = self._family_table(self.metric().table)
        return Binding(functions={k: parse(v, table) for k, v in subs.items()})

    def certification_metric(self) -> Metric:
        binding = self.certification_binding()
        if binding is None:
            return self.metric()
        if not hasattr(self, "_cert_metric"):
            base = self.metric()
            table = self._family_table(base.table)
            lifted = Metric(base.chart, table, base.g, metric_id=base.metric_id)
            self._cert_metric = lifted.instantiated(binding)
        return self._cert_metric

    def extended_table(self) -> SymbolTable:
        """Symbol table accepting family parameters and free scalars."""
        return self._family_table(self.certification_metric().table)

    def families(self) -> dict[str, FamilySpec]:
        out = {}
        for fd in self.certification_metric().table.functions:
            out[fd.name] = FamilySpec(kind="poly")
        return out

    def bundle(self, lam=None, natural_units: bool = False) -> CurvatureBundle:
        key = (str(lam), natural_units)
        cache = getattr(self, "_bundles", None)
        if cache is None:
            cache = self._bundles = {}
        if key not in cache:
            cache[key] = CurvatureBundle(
                self.certification_metric(), lam=lam, natural_units=natural_units
            )
        return cache[key]

    def plain_bundle(self) -> CurvatureBundle:
        if not hasattr(self, "_plain_bundle"):
            if self.certification_substitution():
                self._plain_bundle = CurvatureBundle(self.metric())
            else:
                self._plain_bundle = self.bundle()
        return self._plain_bundle

    def to_dict(self) -> dict:
        d = dict(self.definition)
        d["suites"] = sorted(self.suites)
        return d


class Catalog:
    def __init__(self):
        self._entries: dict[str, CatalogEntry] = {}
        root = resources.files("ppcurv").joinpath("data/metrics")
        for item in sorted(root.iterdir()):
            if not item.name.endswith(".json"):
                continue
            definition = json.loads(item.read_text())
            mid = definition["id"]
            self._entries[mid] = CatalogEntry(
                id=mid,
                definition=definition,
                tables=EXP.TABLES.get(mid, {}),
                suites=EXP.SUITES.get(mid, {}),
            )

    def ids(self) -> list[str]:
        return sorted(self._entries)

    def entry(self, metric_id: str) -> CatalogEntry:
        if metric_id not in self._entries:
            raise CatalogError(
                f"unknown metric {metric_id!r}; available: {', '.join(self.ids())}"
            )
        return self._entries[metric_id]


_catalog: Catalog | None = None


def catalog() -> Catalog:
    global _catalog
    if _catalog is None:
        _catalog = Catalog()
    return _catalog


def load(metric_id: str) -> tuple[Metric, CatalogEntry]:
    """Invariant-checked metric plus its expectations."""
    entry = catalog().entry(metric_id)
    return entry.metric(), entry


# ---------------------------------------------------------------------------
# Witness matching


def _parse_expected(text: str, entry: CatalogEntry) -> NormalForm:
    table = entry.extended_table()
    expr = parse(text, table)
    binding = entry.certification_binding()
    if binding is None and "f" in {f.name for f in entry.metric().table.functions}:
        pass
    if binding is not None:
        expr = instantiate(expr, binding)
    return normalize(expr)


def _parse_actual(text: str, entry: CatalogEntry) -> NormalForm:
    return normalize(parse(text, entry.extended_table()))


def _in_span(target_texts, basis_texts, entry: CatalogEntry) -> bool:
    from .linsolve import solve_linear as _solve

    target = [_parse_expected(t, entry) for t in target_texts]
    basis = [[_parse_actual(t, entry) for t in vec] for vec in basis_texts]
    if not basis:
        return all(t.is_zero for t in target)
    rows = []
    for comp in range(len(target)):
        rows.append(([vec[comp] for vec in basis], target[comp]))
    return _solve(rows, len(basis), guide_seed=None).consistent


def _match_value(expected, actual, entry: CatalogEntry, path: str, problems: list[str]):
    if isinstance(expected, dict):
        if "__in_span__" in expected:
            if not _in_span(expected["__in_span__"], actual, entry):
                problems.append(f"{path}: {expected['__in_span__']} not in solution span")
            return
        if not isinstance(actual, dict):
            problems.append(f"{path}: expected mapping, got {type(actual).__name__}")
            return
        for k, v in expected.items():
            if k not in actual:
                problems.append(f"{path}.{k}: missing")
                continue
            _match_value(v, actual[k], entry, f"{path}.{k}", problems)
    elif isinstance(expected, list):
        if not isinstance(actual, list) or len(actual) != len(expected):
            problems.append(f"{path}: expected list of {len(expected)}")
            return
        for i, (e, a) in enumerate(zip(expected, actual)):
            _match_value(e, a, entry, f"{path}[{i}]", problems)
    elif isinstance(expected, bool) or isinstance(expected, int) and not isinstance(expected, bool):
        if expected != actual:
            problems.append(f"{path}: expected {expected!r}, got {actual!r}")
    elif isinstance(expected, str):
        try:
            want = _parse_expected(expected, entry)
            got = _parse_actual(str(actual), entry)
            if want != got:
                problems.append(f"{path}: expected {expected!r}, got {actual!r}")
        except Exception:
            if str(expected) != str(actual):
                problems.append(f"{path}: expected {expected!r}, got {actual!r}")
    else:
        if expected != actual:
            problems.append(f"{path}: expected {expected!r}, got {actual!r}")


# ---------------------------------------------------------------------------
# Special certifications


def _expected_tensor(entry: CatalogEntry, spec: dict, variance: str, constrained: bool) -> Tensor:
    metric = entry.certification_metric() if constrained else entry.metric()
    table = entry.extended_table()
    binding = entry.certification_binding() if constrained else None
    if constrained and binding is None:
        binding = entry.certification_binding(WAVE_FAMILY)
    comps = {}
    for label, text in spec.get("components", {}).items():
        expr = parse(text, table)
        if binding is not None:
            expr = instantiate(expr, binding)
        comps[label] = normalize(expr)
    return tensor_from_table(metric.chart, table, variance, comps, spec["symmetry"])


def _table_bundles(entry: CatalogEntry, constrained: bool) -> CurvatureBundle:
    if not constrained:
        return entry.plain_bundle()
    if entry.certification_substitution():
        return entry.bundle()
    # entries published unconstrained but whose table needs the constraint
    if not hasattr(entry, "_constrained_bundle"):
        base = entry.metric()
        table = entry._family_table(base.table)
        lifted = Metric(base.chart, table, base.g, metric_id=base.metric_id)
        binding = entry.certification_binding(WAVE_FAMILY)
        entry._constrained_bundle = CurvatureBundle(lifted.instantiated(binding))
    return entry._constrained_bundle


def check_component_table(entry: CatalogEntry, tensor_name: str) -> Verdict:
    """Engine output equals the published table; unlisted components vanish."""
    spec = entry.tables[tensor_name]
    constrained = bool(spec.get("requires_constraint")) or bool(
        entry.certification_substitution()
    )
    bundle = _table_bundles(entry, constrained)
    engine = bundle.tensor_by_name(tensor_name)
    expected = _expected_tensor(entry, spec, engine.variance, constrained)
    mismatches = []
    for idx in engine.indices():
        if engine.get(*idx) != expected.get(*idx):
            mismatches.append("".join(str(i + 1) for i in idx))
            if len(mismatches) > 4:
                break
    status = HOLDS if not mismatches else FAILS
    witness = {
        "tensor": tensor_name,
        "components_checked": len(spec.get("components", {})),
        "zero_elsewhere": True,
        "constrained": constrained,
    }
    if mismatches:
        witness["mismatched_components"] = mismatches
    verdict = Verdict(f"table:{tensor_name}", status, witness=witness)
    # document how the unrestricted metric deviates from a constrained table
    if spec.get("requires_constraint") and not mismatches:
        plain = entry.plain_bundle().tensor_by_name(tensor_name)
        table = entry.extended_table()
        deficits = []
        for label, text in spec.get("unconstrained_residuals", {}).items():
            idx = tuple(int(ch) for ch in label)
            display = normalize(parse(spec["components"][label], table))
            resid = plain.at(*idx) - display
            if resid != normalize(parse(text, table)):
                deficits.append(f"residual at {label}")
        for label, text in spec.get("unconstrained_extras", {}).items():
            idx = tuple(int(ch) for ch in label)
            if plain.at(*idx) != normalize(parse(text, table)):
                deficits.append(f"extra component {label}")
        if deficits:
            verdict.status = FAILS
            verdict.witness["unconstrained_documentation_mismatch"] = deficits
        else:
            verdict.witness["unconstrained_residuals_documented"] = sorted(
                spec.get("unconstrained_residuals", {})
            )
            verdict.witness["unconstrained_extra_nonzero"] = sorted(
                spec.get("unconstrained_extras", {})
            )
    return verdict


def check_scalar_table(entry: CatalogEntry) -> Verdict:
    spec = entry.tables["scalar"]
    constrained = bool(entry.certification_substitution())
    bundle = _table_bundles(entry, constrained)
    table = entry.extended_table()
    expr = parse(spec["value"], table)
    binding = entry.certification_binding()
    if binding is not None:
        expr = instantiate(expr, binding)
    want = normalize(expr)
    ok = bundle.kappa == want
    return Verdict(
        "table:scalar",
        HOLDS if ok else FAILS,
        witness={"expected": spec["value"], "engine": pprint(from_normal(bundle.kappa))},
    )


def check_published_2form_recurrence(entry: CatalogEntry, item: dict) -> Verdict:
    """Residual-zero substitution of a published recurrence 1-form into the
    cyclic condition for the curvature 2-forms of the named tensor."""
    bundle = entry.bundle()
    tensor = bundle.tensor_by_name(item["tensor"])
    nabla = bundle.nabla(tensor)
    pi_spec = item["pi"]
    if pi_spec == "conformal-alphas":
        pi_texts = [t.format(**EXP.CONFORMAL_2FORM_ALPHAS) for t in EXP.CONFORMAL_2FORM_PI]
    else:
        pi_texts = list(pi_spec)
    table = entry.extended_table()
    binding = entry.certification_binding()
    pi = []
    for t in pi_texts:
        e = parse(t, table)
        if binding is not None:
            e = instantiate(e, binding)
        pi.append(normalize(e))
    n = tensor.n
    for i1, i2, i3 in itertools.combinations(range(n), 3):
        for a, b in itertools.product(range(n), repeat=2):
            parts = (
                nabla.get(i2, i3, a, b, i1),
                nabla.get(i3, i1, a, b, i2),
                nabla.get(i1, i2, a, b, i3),
                tensor.get(i2, i3, a, b),
                tensor.get(i3, i1, a, b),
                tensor.get(i1, i2, a, b),
            )
            if all(p.is_zero for p in parts):
                continue
            lhs = parts[0] + parts[1] + parts[2]
            rhs = pi[i1] * parts[3] + pi[i2] * parts[4] + pi[i3] * parts[5]
            if not (lhs - rhs).is_zero:
                return Verdict(
                    f"published-2form-recurrence:{item['tensor']}",
                    FAILS,
                    witness={
                        "residual_at": "".join(str(k + 1) for k in (i1, i2, i3, a, b)),
                        "one_form": pi_texts,
                    },
                )
    return Verdict(
        f"published-2form-recurrence:{item['tensor']}",
        HOLDS,
        witness={"one_form": pi_texts, "residual": "0"},
    )


def check_published_recurrence_form(entry: CatalogEntry, item: dict) -> Verdict:
    """Substitute a published recurrence 1-form into nabla T = Pi (x) T."""
    bundle = entry.bundle()
    tensor = bundle.tensor_by_name(item["tensor"])
    nabla = bundle.nabla(tensor)
    table = entry.extended_table()
    binding = entry.certification_binding()
    pi = []
    for t in item["pi"]:
        e = parse(t, table)
        if binding is not None:
            e = instantiate(e, binding)
        pi.append(normalize(e))
    residual_zero = True
    witness_at = None
    for idx in tensor.indices():
        base = tensor.get(*idx)
        for m in range(tensor.n):
            resid = nabla.get(*idx, m) - pi[m] * base
            if not resid.is_zero:
                residual_zero = False
                witness_at = "".join(str(k + 1) for k in idx + (m,))
                break
        if not residual_zero:
            break
    expect_zero = bool(item.get("expect_residual_zero", True))
    name = f"published-recurrence-form:{item['tensor']}"
    solver = Classifier(bundle).check_recurrent(name, tensor, nabla)
    witness = {
        "published_one_form": list(item["pi"]),
        "published_certifies": residual_zero,
        "solver_one_form": solver.witness.get("one_form"),
    }
    if witness_at:
        witness["first_residual_at"] = witness_at
    status = HOLDS if residual_zero == expect_zero else FAILS
    if not expect_zero:
        witness["discrepancy_documented"] = True
    return Verdict(name, status, witness=witness)


def check_constrained_riemann_squared(entry: CatalogEntry) -> Verdict:
    bundle = _table_bundles(entry, True)
    d = bundle.riemann_squared
    if d.is_zero:
        return Verdict(
            "constrained-family-riemann-squared-vanishes",
            HOLDS,
            witness={"family": WAVE_FAMILY, "riemann_squared": "0"},
        )
    idx, val = next(d.nonzero())
    return Verdict(
        "constrained-family-riemann-squared-vanishes",
        FAILS,
        witness={"nonzero_component": "".join(str(i + 1) for i in idx)},
    )


def check_published_ein_relation(entry: CatalogEntry) -> Verdict:
    """The cubic Ricci relation: certified direction versus printed one."""
    bundle = entry.plain_bundle()
    table = entry.extended_table()
    alpha = normalize(parse(EXP.CHAKI_GPPWAVE["alpha"], table))
    s2, s3 = bundle.ricci_sq, bundle.ricci_cube
    computed_holds = (s3 - s2.scale(alpha)).is_zero
    printed_holds = (s2 + s3.scale(alpha)).is_zero
    status = HOLDS if computed_holds and not printed_holds else FAILS
    return Verdict(
        "published-ein-relation",
        status,
        witness={
            "certified_relation": "S^3 = alpha * S^2 with alpha = "
            + EXP.CHAKI_GPPWAVE["alpha"],
            "certified_holds": computed_holds,
            "printed_relation": "S^2 = -alpha * S^3",
            "printed_holds": printed_holds,
        },
    )


def _display_combinations(entry: CatalogEntry, displays: dict, constrained: bool) -> Verdict:
    bundle = _table_bundles(entry, constrained)
    nab = bundle.nabla_energy_momentum
    table = entry.extended_table()
    binding = entry.certification_binding()
    if binding is None and constrained:
        binding = entry.certification_binding(WAVE_FAMILY)

    def want(text):
        e = parse(text, table)
        if binding is not None:
            e = instantiate(e, binding)
        return normalize(e)

    problems = []
    for label, text in displays.get("cyclic", {}).items():
        i, j, k = (int(ch) - 1 for ch in label)
        got = nab.get(i, j, k) + nab.get(j, k, i) + nab.get(k, i, j)
        if got != want(text):
            problems.append(f"cyclic {label}")
    for diff in displays.get("codazzi", ()):
        a = tuple(int(ch) - 1 for ch in diff["minuend"])
        b = tuple(int(ch) - 1 for ch in diff["subtrahend"])
        got = nab.get(*a) - nab.get(*b)
        if got != want(diff["value"]):
            problems.append(f"codazzi {diff['minuend']}-{diff['subtrahend']}")
    status = HOLDS if not problems else FAILS
    return Verdict(
        "section5-sums",
        status,
        witness={
            "cyclic_checked": sorted(displays.get("cyclic", {})),
            "codazzi_checked": [
                f"{d['minuend']}-{d['subtrahend']}" for d in displays.get("codazzi", ())
            ],
            **({"mismatches": problems} if problems else {}),
        },
    )


def check_section5_sums(entry: CatalogEntry) -> Verdict:
    if entry.id == "gppwave":
        return _display_combinations(entry, EXP.SECTION5_GPPWAVE, constrained=False)
    return _display_combinations(entry, EXP.SECTION5_PPWAVE, constrained=True)


def _scalar_free_of_profile(nf: NormalForm) -> bool:
    return not any(is_fn(a) for a in nf.atoms())


def check_em_parallel_iff_cyclic(entry: CatalogEntry) -> Verdict:
    """The energy-momentum tensor is parallel iff it is cyclic parallel:
    the nonzero derivative components and the nonzero cyclic sums cut out the
    same conditions on the wave profile (each is a profile-free multiple of
    the other)."""
    bundle = entry.bundle()
    nab = bundle.nabla_energy_momentum
    n = nab.n
    comps = [v for _, v in nab.nonzero()]
    sums = []
    for i, j, k in itertools.product(range(n), repeat=3):
        s = nab.get(i, j, k) + nab.get(j, k, i) + nab.get(k, i, j)
        if not s.is_zero:
            sums.append(s)
    if not comps and not sums:
        return Verdict("em-parallel-iff-cyclic-parallel", HOLDS, witness={"both": "identically zero"})

    def covered(items, basis):
        for x in items:
            if not any(_scalar_free_of_profile(x / b) for b in basis):
                return False
        return True

    ok = covered(sums, comps) and covered(comps, sums)
    return Verdict(
        "em-parallel-iff-cyclic-parallel",
        HOLDS if ok else FAILS,
        witness={
            "derivative_conditions": len(comps),
            "cyclic_conditions": len(sums),
            "mutually_equivalent": ok,
        },
    )


def check_em_codazzi_conditions(entry: CatalogEntry) -> Verdict:
    """Codazzi conditions are among the parallel conditions but do not
    exhaust them (profile-direction x is unconstrained by Codazzi)."""
    bundle = entry.bundle()
    nab = bundle.nabla_energy_momentum
    n = nab.n
    comps = [v for _, v in nab.nonzero()]
    diffs = []
    for i, j, k in itertools.product(range(n), repeat=3):
        d = nab.get(i, j, k) - nab.get(k, j, i)
        if not d.is_zero:
            diffs.append(d)
    subset = all(any(_scalar_free_of_profile(d / cmp_) for cmp_ in comps) for d in diffs)
    strict = any(
        not any(_scalar_free_of_profile(cmp_ / d) for d in diffs) for cmp_ in comps
    )
    ok = subset and strict and bool(diffs)
    return Verdict(
        "em-codazzi-conditions",
        HOLDS if ok else FAILS,
        witness={
            "codazzi_conditions_subset_of_parallel": subset,
            "strictly_weaker_than_parallel": strict,
        },
    )


def check_vacuum_when_profile_harmonic(entry: CatalogEntry) -> Verdict:
    """h harmonic in (x3,x4) forces a vanishing Ricci tensor and parallel T."""
    base = entry.metric()
    table = base.table.with_parameters("a", "b", "c0")
    fns = tuple(table.functions) + tuple(
        FunctionDecl(nm, (1,)) for nm in ("u1", "u2", "u3", "u4", "u5")
    )
    table = SymbolTable(table.coordinates, table.parameters, fns)
    h_text = "u1*(x3^2 - x4^2) + u2*x3*x4 + u3*x3 + u4*x4 + u5"
    binding = Binding(
        functions={
            "f": parse(WAVE_FAMILY["f"], table),
            "h": parse(h_text, table),
        }
    )
    lifted = Metric(base.chart, table, base.g, metric_id=base.metric_id)
    inst = lifted.instantiated(binding)
    bundle = CurvatureBundle(inst)
    ricci_zero = bundle.ricci.is_zero
    nabla_t_zero = bundle.nabla_energy_momentum.is_zero
    ok = ricci_zero and nabla_t_zero
    return Verdict(
        "vacuum-when-profile-harmonic",
        HOLDS if ok else FAILS,
        witness={
            "harmonic_profile": h_text,
            "ricci_zero": ricci_zero,
            "nabla_energy_momentum_zero": nabla_t_zero,
        },
    )


def check_em_condition_displays(entry: CatalogEntry) -> Verdict:
    """The nonzero derivative components of T are profile-free multiples of
    the displayed vanishing conditions, so parallelism is exactly their
    joint vanishing."""
    bundle = entry.bundle()
    nab = bundle.nabla_energy_momentum
    table = entry.extended_table()
    binding = entry.certification_binding()
    if entry.id == "brinkmann":
        condition_texts = ["H133 + H144", "H333 + H344", "H334 + H444"]
    else:
        condition_texts = [
            "h133 + h144",
            "f*h333 + f*h344 - f3*h33 - f3*h44",
            "f*h334 + f*h444 - f4*h33 - f4*h44",
        ]
    conds = []
    for t in condition_texts:
        e = parse(t, table)
        if binding is not None:
            e = instantiate(e, binding)
        conds.append(normalize(e))
    matched = set()
    for idx, v in nab.nonzero():
        hit = None
        for ci, cond in enumerate(conds):
            if _scalar_free_of_profile(v / cond):
                hit = ci
                break
        if hit is None:
            return Verdict(
                "em-condition-displays",
                FAILS,
                witness={"unmatched_component": "".join(str(i + 1) for i in idx)},
            )
        matched.add(hit)
    ok = matched == set(range(len(conds)))
    return Verdict(
        "em-condition-displays",
        HOLDS if ok else FAILS,
        witness={"conditions": condition_texts, "all_conditions_realized": ok},
    )


def check_reduction_agreement(entry: CatalogEntry) -> Verdict:
    """Instantiating the generalized wave metric with f = -2, h = -H/2
    reproduces the null-coordinate form computed directly."""
    direct = entry.bundle()
    gen = catalog().entry("gppwave").metric()
    table = SymbolTable(
        gen.chart.coordinates,
        gen.table.parameters,
        tuple(gen.table.functions) + (FunctionDecl("H", (1, 3, 4)),),
    )
    lifted = Metric(gen.chart, table, gen.g, metric_id="gppwave")
    binding = Binding(
        functions={"f": parse("-2", table), "h": parse("-1/2*H", table)}
    )
    reduced = CurvatureBundle(lifted.instantiated(binding))
    pairs = [
        ("riemann", reduced.riemann, direct.riemann),
        ("ricci", reduced.ricci, direct.ricci),
        ("conformal", reduced.conformal, direct.conformal),
        ("projective", reduced.projective, direct.projective),
        ("energy-momentum", reduced.energy_momentum, direct.energy_momentum),
        ("nabla-energy-momentum", reduced.nabla_energy_momentum, direct.nabla_energy_momentum),
    ]
    mismatched = [name for name, a, b in pairs if not (a - b).is_zero]
    kappa_ok = (reduced.kappa - direct.kappa).is_zero and direct.kappa.is_zero
    ok = not mismatched and kappa_ok
    return Verdict(
        "reduction-agreement",
        HOLDS if ok else FAILS,
        witness={
            "substitution": {"f": "-2", "h": "-1/2*H"},
            "tensors_compared": [name for name, _, _ in pairs] + ["scalar"],
            **({"mismatched": mismatched} if mismatched else {}),
            "scalar_zero": kappa_ok,
        },
    )


SPECIAL_CHECKS = {
    "table": lambda entry, item: check_component_table(entry, item["tensor"]),
    "scalar-table": lambda entry, item: check_scalar_table(entry),
    "published-2form-recurrence": check_published_2form_recurrence,
    "published-recurrence-form": check_published_recurrence_form,
    "constrained-family-riemann-squared-vanishes": lambda entry, item: check_constrained_riemann_squared(entry),
    "published-ein-relation": lambda entry, item: check_published_ein_relation(entry),
    "section5-sums": lambda entry, item: check_section5_sums(entry),
    "em-parallel-iff-cyclic-parallel": lambda entry, item: check_em_parallel_iff_cyclic(entry),
    "em-codazzi-conditions": lambda entry, item: check_em_codazzi_conditions(entry),
    "vacuum-when-profile-harmonic": lambda entry, item: check_vacuum_when_profile_harmonic(entry),
    "em-condition-displays": lambda entry, item: check_em_condition_displays(entry),
    "reduction-agreement": lambda entry, item: check_reduction_agreement(entry),
}


# ---------------------------------------------------------------------------
# Suite runner


def run_suite(
    metric_id: str,
    suite: str,
    seed: int = 0,
    instantiations: int = 0,
    points: int = 3,
    lam=None,
    natural_units: bool = False,
) -> dict:
    entry = catalog().entry(metric_id)
    if suite not in entry.suites:
        raise CatalogError(
            f"metric {metric_id!r} has no suite {suite!r}; available: "
            f"{', '.join(sorted(entry.suites))}"
        )
    bundle = entry.bundle(lam=lam, natural_units=natural_units)
    classifier = Classifier(
        bundle,
        seed=seed,
        instantiations=instantiations,
        points=points,
        families=entry.families(),
    )
    checks = classifier.standard_checks()
    results = []
    all_ok = True
    for item in entry.suites[suite]:
        if "check" in item:
            verdict = checks[item["check"]]()
            expected_status = item.get("expect")
        else:
            verdict = SPECIAL_CHECKS[item["special"]](entry, item)
            expected_status = item.get("expect", HOLDS)
        problems: list[str] = []
        if expected_status is not None and verdict.status != expected_status:
            problems.append(
                f"status: expected {expected_status!r}, got {verdict.status!r}"
            )
        if "witness" in item:
            _match_value(item["witness"], verdict.witness, entry, "witness", problems)
        ok = not problems
        all_ok = all_ok and ok
        record = {
            "check": item.get("check") or f"special:{item['special']}",
            "expected_status": expected_status,
            "verdict": verdict.to_dict(),
            "passed": ok,
        }
        if item.get("item"):
            record["item"] = item["item"]
        if item.get("note"):
            record["note"] = item["note"]
        if problems:
            record["problems"] = problems
        results.append(record)
    return {
        "metric_id": metric_id,
        "suite": suite,
        "seed": seed,
        "instantiations": instantiations,
        "points": points,
        "passed": all_ok,
        "results": results,
    }


def classify_metric(
    metric_id: str,
    structures: Sequence[str] | None = None,
    seed: int = 0,
    instantiations: int = 0,
    points: int = 3,
    lam=None,
    natural_units: bool = False,
) -> ClassificationReport:
    entry = catalog().entry(metric_id)
    classifier = Classifier(
        entry.bundle(lam=lam, natural_units=natural_units),
        seed=seed,
        instantiations=instantiations,
        points=points,
        families=entry.families(),
    )
    return classifier.run(structures)


def compare_metrics(
    id_a: str,
    id_b: str,
    structures: Sequence[str] | None = None,
    seed: int = 0,
    lam=None,
    natural_units: bool = False,
) -> dict:
    names = list(structures) if structures else list(EXP.COMPARISON_CHECKS)
    ra = classify_metric(id_a, names, seed=seed, lam=lam, natural_units=natural_units)
    rb = classify_metric(id_b, names, seed=seed, lam=lam, natural_units=natural_units)
    return compare_reports(ra, rb)
