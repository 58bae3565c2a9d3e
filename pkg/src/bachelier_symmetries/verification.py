"""Named check suites: every claim the package makes, run as a measurement.

Each suite returns CheckResult rows with the measured worst case and the
tolerance it was held to, so the verify command can print one PASS/FAIL
line per check and the test suite can assert on the same numbers.

Suites and their scopes:

    theorem1   analytic residuals of all base family members (orders 0 to
               -8, all four classes) and of the eight-term worked
               combination, on the default grid, at the standard and the
               negative-rate parameter sets
    theorem2   finite-difference residuals of every base member transported
               through every group over the parameter sweep (closure)
    groups     exact identity at eps = 0, parameter additivity, and
               tangency of the finite maps to the generators
    examples   reproduction of the three hand-coded transformed families
               and the fixed/moved status of selected solution graphs
    all        everything above plus the Kummer polynomial identities and
               the expression-language round-trip

Determinism: all sampling uses fixed seeds, so repeated runs print
identical reports.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import reference_forms
from .errors import DomainError, InvalidParameter, ParseError, SemanticError
from .kummer import kummer_truncated, kummer_truncated_du, pochhammer
from .pde_verify import GridSpec, residual_scan
from .solutions import BaseCombo, ComboSolution, ModelParams, SolutionTerm
from .spec_lang import SolutionExpr, format_expr, parse_expr
from .symmetry import (
    FLOW_ORIENTATION,
    GroupElement,
    JetPoint,
    fixed_surface_check,
    forward_map,
    generator_eval,
    surface_defect,
    transformed,
)

__all__ = [
    "CheckResult",
    "DEFAULT_PARAMS",
    "NEGATIVE_RATE_PARAMS",
    "DEFAULT_GRID",
    "EPS_SWEEP",
    "BASE_ORDERS",
    "base_terms",
    "base_family_residuals",
    "superposition_residual",
    "transform_closure",
    "group_laws",
    "generator_tangency",
    "reference_reproductions",
    "invariance_flags",
    "kummer_identities",
    "dsl_roundtrip",
    "SCOPES",
    "run_scope",
]

DEFAULT_PARAMS = ModelParams(r=0.05, sigma=0.2)
NEGATIVE_RATE_PARAMS = ModelParams(r=-0.03, sigma=0.2)
DEFAULT_GRID = GridSpec(t_range=(0.0, 1.0), S_range=(-2.0, 2.0), nt=21, nS=21)
EPS_SWEEP = (-0.3, -0.1, 0.1, 0.3)
BASE_ORDERS = (0, -2, -4, -6, -8)

TOL_BASE_RESIDUAL = 1e-10
TOL_COMBO_RESIDUAL = 1e-9
TOL_CLOSURE_RESIDUAL = 1e-6
TOL_ADDITIVITY = 1e-12
TOL_TANGENCY = 1e-6
TOL_REPRODUCTION = 1e-11
TOL_SURFACE = 1e-9
TOL_CONTIGUOUS = 1e-12


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    measured: float
    tolerance: float
    detail: str = ""


def base_terms(orders=BASE_ORDERS) -> list[SolutionTerm]:
    """All (class, order) members used by the residual and closure suites."""
    return [SolutionTerm(q, n) for q in (1, 2, 3, 4) for n in orders]


def _rate_tag(params: ModelParams) -> str:
    return f"r={params.r:g}"


def base_family_residuals(params: ModelParams, grid: GridSpec = DEFAULT_GRID) -> list[CheckResult]:
    """Analytic residual of every base member, one check per (class, order)."""
    results = []
    for term in base_terms():
        report = residual_scan(ComboSolution(term, params), grid, params, mode="analytic")
        results.append(CheckResult(
            name=f"residual_C{term.class_q}[{term.order_n}]_{_rate_tag(params)}",
            passed=report.max_normalized <= TOL_BASE_RESIDUAL,
            measured=report.max_normalized,
            tolerance=TOL_BASE_RESIDUAL,
            detail=f"worst at {report.worst_point}",
        ))
    return results


def superposition_residual(params: ModelParams, grid: GridSpec = DEFAULT_GRID) -> CheckResult:
    """Analytic residual of the fixed eight-term combination."""
    combo = ComboSolution(reference_forms.worked_combo(), params)
    report = residual_scan(combo, grid, params, mode="analytic")
    return CheckResult(
        name=f"residual_8term_combo_{_rate_tag(params)}",
        passed=report.max_normalized <= TOL_COMBO_RESIDUAL,
        measured=report.max_normalized,
        tolerance=TOL_COMBO_RESIDUAL,
        detail=f"worst at {report.worst_point}",
    )


def transform_closure(
    params: ModelParams = DEFAULT_PARAMS,
    grid: GridSpec = DEFAULT_GRID,
    eps_sweep=EPS_SWEEP,
    orders=BASE_ORDERS,
) -> list[CheckResult]:
    """Finite-difference residual of every transported base member, per group."""
    results = []
    terms = base_terms(orders)
    for gi in range(1, 7):
        worst = 0.0
        skipped = 0
        evaluated = 0
        for eps in eps_sweep:
            element = GroupElement(gi, eps)
            for term in terms:
                moved = transformed(element, ComboSolution(term, params), params)
                report = residual_scan(moved, grid, params, mode="fd")
                worst = max(worst, report.max_normalized)
                skipped += report.failures
                evaluated += report.evaluated
        results.append(CheckResult(
            name=f"closure_G{gi}",
            passed=worst <= TOL_CLOSURE_RESIDUAL,
            measured=worst,
            tolerance=TOL_CLOSURE_RESIDUAL,
            detail=f"{len(terms)} members x {len(eps_sweep)} eps, "
                   f"{evaluated} points evaluated, {skipped} skipped",
        ))
    return results


def _random_jet(rng: random.Random) -> JetPoint:
    return JetPoint(rng.uniform(-1.0, 1.0), rng.uniform(-2.0, 2.0), rng.uniform(-3.0, 3.0))


def _max_component_dev(a: JetPoint, b: JetPoint) -> float:
    return max(abs(x - y) / max(1.0, abs(x), abs(y)) for x, y in zip(a, b))


def group_laws(params: ModelParams = DEFAULT_PARAMS, n_samples: int = 100,
               seed: int = 61803) -> list[CheckResult]:
    """Exact identity at eps = 0 plus parameter additivity per group."""
    rng = random.Random(seed)
    results = []
    identity_ok = True
    for gi in range(1, 7):
        jp = _random_jet(rng)
        identity_ok &= forward_map(GroupElement(gi, 0.0), jp, params) == jp
    results.append(CheckResult(
        name="identity_at_eps0",
        passed=identity_ok,
        measured=0.0 if identity_ok else 1.0,
        tolerance=0.0,
        detail="bitwise equality on all six groups",
    ))
    for gi in range(1, 7):
        worst = 0.0
        produced = 0
        while produced < n_samples:
            jp = _random_jet(rng)
            eps1 = rng.uniform(-0.4, 0.4)
            eps2 = rng.uniform(-0.4, 0.4)
            try:
                step = forward_map(GroupElement(gi, eps1), jp, params)
                composed = forward_map(GroupElement(gi, eps2), step, params)
                direct = forward_map(GroupElement(gi, eps1 + eps2), jp, params)
            except DomainError:
                continue
            worst = max(worst, _max_component_dev(composed, direct))
            produced += 1
        results.append(CheckResult(
            name=f"additivity_G{gi}",
            passed=worst <= TOL_ADDITIVITY,
            measured=worst,
            tolerance=TOL_ADDITIVITY,
            detail=f"{n_samples} random samples",
        ))
    return results


def generator_tangency(params: ModelParams = DEFAULT_PARAMS, n_samples: int = 100,
                       seed: int = 27182) -> list[CheckResult]:
    """Central difference d/deps of the finite maps at eps = 0 against the generators.

    Groups 4 and 5 are parametrised along the reverse flow of their
    generators, so the comparison carries FLOW_ORIENTATION. Deviations are
    measured per component, relative to magnitudes floored at 1.
    """
    rng = random.Random(seed)
    h = 1e-5
    results = []
    for i in range(1, 7):
        orient = FLOW_ORIENTATION[i - 1]
        worst = 0.0
        for _ in range(n_samples):
            jp = _random_jet(rng)
            plus = forward_map(GroupElement(i, h), jp, params)
            minus = forward_map(GroupElement(i, -h), jp, params)
            numeric = [(a - b) / (2.0 * h) for a, b in zip(plus, minus)]
            exact = [orient * comp for comp in generator_eval(i, jp, params)]
            worst = max(
                worst,
                max(abs(n - e) / max(1.0, abs(e)) for n, e in zip(numeric, exact)),
            )
        results.append(CheckResult(
            name=f"tangency_G{i}",
            passed=worst <= TOL_TANGENCY,
            measured=worst,
            tolerance=TOL_TANGENCY,
            detail=f"orientation {orient:+.0f}, {n_samples} jet points, step {h:g}",
        ))
    return results


def reference_reproductions(params: ModelParams = DEFAULT_PARAMS, n_triples: int = 20,
                            seed: int = 14142) -> list[CheckResult]:
    """Transform machinery against the three hand-coded closed-form families.

    The closed forms are parametrised from the opposite composition side,
    so the pullback runs at -eps (see reference_forms). Magnitudes below 1
    are compared absolutely.
    """
    rng = random.Random(seed)
    cases = [
        ("reproduce_G4_on_C1[0]", 4,
         ComboSolution(SolutionTerm(1, 0), params), reference_forms.g4_family_from_linear),
        ("reproduce_G5_on_C4[-2]", 5,
         ComboSolution(SolutionTerm(4, -2), params), reference_forms.g5_family_from_gaussian_term),
        ("reproduce_G3_on_8term", 3,
         ComboSolution(reference_forms.worked_combo(), params),
         reference_forms.g3_family_from_worked_combo),
    ]
    results = []
    for name, gi, base, oracle in cases:
        worst = 0.0
        produced = 0
        while produced < n_triples:
            t = rng.uniform(0.0, 1.0)
            s = rng.choice((-1.0, 1.0)) * rng.uniform(0.25, 2.0)
            eps = rng.uniform(-0.4, 0.4)
            try:
                direct = oracle(t, s, eps, params)
                routed = transformed(GroupElement(gi, -eps), base, params)(t, s)
            except DomainError:
                continue
            worst = max(worst, abs(direct - routed) / max(1.0, abs(direct), abs(routed)))
            produced += 1
        results.append(CheckResult(
            name=name,
            passed=worst <= TOL_REPRODUCTION,
            measured=worst,
            tolerance=TOL_REPRODUCTION,
            detail=f"{n_triples} sampled (t, S, eps) triples",
        ))
    return results


_SURFACE_SAMPLE = ((0.1, 0.5), (0.3, -1.2), (0.45, 0.8), (0.6, 1.4), (0.9, -0.7))


def invariance_flags(params: ModelParams = DEFAULT_PARAMS) -> list[CheckResult]:
    """Moved/fixed status of selected graphs under selected generators.

    The linear solution and the order minus-2 Gaussian member must move
    under groups 4 and 5 respectively, while time translation leaves the
    time-independent linear solution in place.
    """
    cases = [
        ("moved_by_G4_C1[0]", 4, SolutionTerm(1, 0), False),
        ("moved_by_G5_C4[-2]", 5, SolutionTerm(4, -2), False),
        ("fixed_under_G1_C1[0]", 1, SolutionTerm(1, 0), True),
    ]
    results = []
    for name, i, term, expect_fixed in cases:
        defect = surface_defect(i, term, _SURFACE_SAMPLE, params)
        is_fixed = fixed_surface_check(i, term, _SURFACE_SAMPLE, params, tol=TOL_SURFACE)
        results.append(CheckResult(
            name=name,
            passed=is_fixed == expect_fixed,
            measured=defect,
            tolerance=TOL_SURFACE,
            detail=f"expected {'fixed' if expect_fixed else 'moved'}, "
                   f"defect {'<' if is_fixed else '>='} tol on {len(_SURFACE_SAMPLE)} points",
        ))
    return results


def kummer_identities() -> list[CheckResult]:
    """Polynomial identities of the truncated Kummer evaluator."""
    results = []

    worst = 0.0
    for m in range(51):
        for b in (0.5, 1.5, 2.5):
            worst = max(worst, abs(kummer_truncated(m, b, 0.0) - 1.0))
    results.append(CheckResult(
        name="kummer_value_at_zero",
        passed=worst == 0.0,
        measured=worst,
        tolerance=0.0,
        detail="F(-m, b; 0) = 1 exactly, m <= 50",
    ))

    # d/du F(-m, b; u) = (-m/b) F(-(m-1), b+1; u), both sides built from
    # different coefficient arrays. Past u ~ +6 the alternating terms cancel
    # about four digits, so the sampling stops at +5, the largest argument
    # the solution families produce on the default grid; the same-signed
    # negative side is well conditioned throughout.
    worst = 0.0
    u_grid = [-10.0, -6.0, -3.0, -1.0, -0.3, 0.0, 0.3, 1.0, 3.0, 5.0]
    for m in range(1, 11):
        for b in (0.5, 1.5):
            for u in u_grid:
                lhs = kummer_truncated_du(m, b, u)
                rhs = (-m / b) * kummer_truncated(m - 1, b + 1.0, u)
                worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs)))
    results.append(CheckResult(
        name="kummer_contiguous_derivative",
        passed=worst <= TOL_CONTIGUOUS,
        measured=worst,
        tolerance=TOL_CONTIGUOUS,
        detail="m in 1..10, b in {1/2, 3/2}, -10 <= u <= 5",
    ))

    # degree property: the (m+1)-th forward difference annihilates the
    # polynomial while the m-th one recovers the leading coefficient
    worst_null = 0.0
    worst_lead = 0.0
    h = 0.5
    base = -1.0
    for m in range(11):
        for b in (0.5, 1.5):
            values = [kummer_truncated(m, b, base + j * h) for j in range(m + 2)]
            null = math.fsum(
                (-1.0) ** (m + 1 - j) * math.comb(m + 1, j) * values[j]
                for j in range(m + 2))
            witness = math.fsum(
                abs(math.comb(m + 1, j) * values[j]) for j in range(m + 2))
            worst_null = max(worst_null, abs(null) / max(1.0, witness))
            mth = math.fsum(
                (-1.0) ** (m - j) * math.comb(m, j) * values[j] for j in range(m + 1))
            lead = (-1.0) ** m / pochhammer(b, m)
            recovered = mth / (math.factorial(m) * h**m)
            worst_lead = max(worst_lead, abs(recovered - lead) / abs(lead))
    results.append(CheckResult(
        name="kummer_degree_annihilation",
        passed=worst_null <= 1e-10,
        measured=worst_null,
        tolerance=1e-10,
        detail="order m+1 forward differences, m <= 10",
    ))
    results.append(CheckResult(
        name="kummer_leading_coefficient",
        passed=worst_lead <= 1e-6,
        measured=worst_lead,
        tolerance=1e-6,
        detail="m-th difference / (m! h^m) vs (-1)^m / (b)_m",
    ))
    return results


_MALFORMED = (
    "", "   ", "C", "C1", "C1[", "C1[]", "C1[0", "C1(0)", "C1[0]]",
    "2C1[0]", "2*", "*C1[0]", "C1[0] +", "C1[0] + + C2[0]", "C1[0] C2[0]",
    "C1[0] |", "C1[0] | G", "C1[0] | G1", "C1[0] | G1(", "C1[0] | G1()",
    "C1[0] | G1(0.1", "C1[0] | G1[0.1]", "G1(0.1)", "C1[0] | G1(0.1) junk",
    "1e*C1[0]", "C1[- 2]", "-C1[0]",
)

_BAD_SEMANTICS = (
    "C0[0]", "C5[0]", "C9[0]", "C1[1]", "C1[-3]", "C1[2]",
    "C1[0] | G0(0.1)", "C1[0] | G7(0.1)", "1e999*C1[0]",
)


def _random_expression(rng: random.Random) -> SolutionExpr:
    def number() -> float:
        kind = rng.randrange(3)
        if kind == 0:
            return float(rng.randint(-50, 50))
        if kind == 1:
            return round(rng.uniform(-20.0, 20.0), rng.randint(1, 6))
        return rng.uniform(-1.0, 1.0) * 10.0 ** rng.randint(-12, 12)

    terms = tuple(
        SolutionTerm(rng.randint(1, 4), -2 * rng.randint(0, 6), number())
        for _ in range(rng.randint(1, 6)))
    pipeline = tuple(
        GroupElement(rng.randint(1, 6), number())
        for _ in range(rng.randint(0, 4)))
    return SolutionExpr(BaseCombo(terms), pipeline)


def dsl_roundtrip(n_expressions: int = 1000, seed: int = 16180) -> list[CheckResult]:
    """Structural parse/format round-trip plus the malformed-input corpus."""
    rng = random.Random(seed)
    mismatches = 0
    for _ in range(n_expressions):
        expr = _random_expression(rng)
        if parse_expr(format_expr(expr)) != expr:
            mismatches += 1
    results = [CheckResult(
        name="dsl_roundtrip",
        passed=mismatches == 0,
        measured=float(mismatches),
        tolerance=0.0,
        detail=f"{n_expressions} randomised expressions",
    )]

    misbehaved = 0
    for text in _MALFORMED:
        try:
            parse_expr(text)
            misbehaved += 1
        except ParseError as err:
            if not isinstance(err.offset, int) or err.offset < 0:
                misbehaved += 1
        except SemanticError:
            misbehaved += 1
        except Exception:
            misbehaved += 1
    for text in _BAD_SEMANTICS:
        try:
            parse_expr(text)
            misbehaved += 1
        except SemanticError as err:
            if not isinstance(err.offset, int) or err.offset < 0:
                misbehaved += 1
        except Exception:
            misbehaved += 1
    results.append(CheckResult(
        name="dsl_malformed_inputs",
        passed=misbehaved == 0,
        measured=float(misbehaved),
        tolerance=0.0,
        detail=f"{len(_MALFORMED)} syntax cases, {len(_BAD_SEMANTICS)} semantic cases",
    ))
    return results


def _theorem1(params: ModelParams | None) -> list[CheckResult]:
    parameter_sets = [params] if params is not None else [DEFAULT_PARAMS, NEGATIVE_RATE_PARAMS]
    out: list[CheckResult] = []
    for p in parameter_sets:
        out.extend(base_family_residuals(p))
        out.append(superposition_residual(p))
    return out


def _theorem2(params: ModelParams | None) -> list[CheckResult]:
    return transform_closure(params or DEFAULT_PARAMS)


def _groups(params: ModelParams | None) -> list[CheckResult]:
    p = params or DEFAULT_PARAMS
    return group_laws(p) + generator_tangency(p)


def _examples(params: ModelParams | None) -> list[CheckResult]:
    p = params or DEFAULT_PARAMS
    return reference_reproductions(p) + invariance_flags(p)


def _all(params: ModelParams | None) -> list[CheckResult]:
    return (_theorem1(params) + _theorem2(params) + _groups(params)
            + _examples(params) + kummer_identities() + dsl_roundtrip())


SCOPES = {
    "theorem1": _theorem1,
    "theorem2": _theorem2,
    "groups": _groups,
    "examples": _examples,
    "all": _all,
}


def run_scope(scope: str, params: ModelParams | None = None) -> list[CheckResult]:
    """Run one named suite; params=None uses the standard parameter sets."""
    try:
        runner = SCOPES[scope]
    except KeyError:
        raise InvalidParameter(
            f"unknown scope {scope!r}; choose from {', '.join(sorted(SCOPES))}") from None
    return runner(params)
