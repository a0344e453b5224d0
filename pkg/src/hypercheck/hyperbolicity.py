"""Decision procedures and falsifiers for symmetric hyperbolicity.

Exact semialgebraic tests decide cubic and hook-quartic hyperbolicity
outright.  For higher degrees only falsification is available: the
degree principle guarantees that a symmetric polynomial of degree d is
hyperbolic iff its line restriction is real rooted at every point with
at most d - 1 distinct entries, so the falsifier searches exactly that
space.  Candidate points are ranked by a float eigenvalue prescreen
(see kernels) and every reported witness is re-verified with exact
rational Sturm computations; sampling procedures therefore never return
"Hyperbolic", only "NoCounterexampleFound".
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .errors import (
    HypothesisViolated,
    InvalidInput,
    NonInvertibleTransform,
    NotHyperbolicInput,
    WrongDegree,
    ZeroPolynomial,
)
from .kernels import realness_defects
from .operators import decide_extendable, map_sending_g0_to, operator_to_hook
from .rationals import Q, QONE, QZERO, qsign, simplest_between, to_q
from .sympoly import HookPoly, SymPoint, mixed_derivative_eval, restrict_line
from .unipoly import (
    UniPoly,
    ZeroSumPoly,
    interlaces,
    isolate_real_roots,
    is_real_rooted,
    root_profile,
    same_sign_count,
    squarefree_part,
    sturm_chain,
    sturm_variations_at,
    sturm_variations_at_inf,
)

HYPERBOLIC = "Hyperbolic"
NOT_HYPERBOLIC = "NotHyperbolic"
NO_COUNTEREXAMPLE = "NoCounterexampleFound"


@dataclass
class Verdict:
    status: str
    witness: tuple | None = None  # (SymPoint, RootProfile)
    detail: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SearchBudget:
    """Budget knobs for the sampling falsifiers.

    grid: points per free axis on the slice grid; refine_rounds /
    refine_grid: local refinement passes around the best cell;
    max_points: cap on total grid size per multiplicity pattern;
    max_candidates: prescreen hits forwarded to exact verification;
    defect_threshold: minimum float realness defect to count as a hit;
    snap_denominator: witnesses are snapped to rationals with at most
    this denominator before exact verification; trials: sample count
    for the unrestricted falsifier; seed: determinism.
    """

    grid: int = 64
    refine_rounds: int = 3
    refine_grid: int = 9
    max_points: int = 200_000
    max_candidates: int = 24
    defect_threshold: float = 1e-7
    snap_denominator: int = 4096
    trials: int = 2000
    seed: int = 0


DEFAULT_BUDGET = SearchBudget()


def max_threads() -> int:
    value = os.environ.get("HYPERCHECK_THREADS", "")
    if value.strip():
        try:
            return max(1, int(value))
        except ValueError:
            pass
    return min(8, os.cpu_count() or 1)


# -- exact decisions ------------------------------------------------------


def decide_cubic(a, b, c, n: int, budget: SearchBudget = None) -> Verdict:
    """Exact hyperbolicity of a*m1^3 + b*m1*m2 + c*m3 in n >= 3 variables:
    hyperbolic iff (a+b+c) * (27ac^2 - b^3 - 9b^2c) <= 0."""
    a, b, c = to_q(a), to_q(b), to_q(c)
    if a == b == c == 0:
        raise ZeroPolynomial("zero cubic")
    if n < 3:
        raise InvalidInput("need n >= 3")
    factor_value = a + b + c
    factor_disc = 27 * a * c * c - b * b * b - 9 * b * b * c
    product = factor_value * factor_disc
    detail = {
        "value_at_ones": factor_value,
        "boundary_form": factor_disc,
        "product": product,
    }
    if product <= 0:
        return Verdict(HYPERBOLIC, detail=detail)
    p = HookPoly(n, 3, (a, b, c))
    return Verdict(NOT_HYPERBOLIC, witness=_find_witness(p, budget), detail=detail)


def decide_quartic_hook(p: HookPoly, budget: SearchBudget = None) -> Verdict:
    """Exact hyperbolicity of a hook quartic: shift the coordinate-vector
    restriction by -1/n; hyperbolic iff it is real rooted with at least
    three roots of one sign."""
    if p.d != 4:
        raise WrongDegree(f"expected degree 4, got {p.d}")
    u = [QONE] + [QZERO] * (p.n - 1)
    q = restrict_line(p, u).shift(Q(-1, p.n))
    detail = {"shifted_restriction": q}
    if q.is_zero():
        return Verdict(HYPERBOLIC, detail=detail)
    prof = root_profile(q)
    real = prof.n_nonreal == 0
    # roots at infinity (degree drop) count toward either sign, like zero
    # roots: they are limits of arbitrarily large one-signed roots
    slack = prof.n_zero + prof.degree_drop
    signs = real and (
        prof.n_positive + slack >= 3 or prof.n_negative + slack >= 3
    )
    if real and signs:
        return Verdict(HYPERBOLIC, detail=detail)
    detail["real_rooted"] = real
    return Verdict(NOT_HYPERBOLIC, witness=_find_witness(p, budget), detail=detail)


def _find_witness(p: HookPoly, budget: SearchBudget = None):
    """Exact witness for a polynomial already known non-hyperbolic.

    The coordinate-vector restriction is non-real in many failing cases;
    otherwise the failure is sign-only and the falsifier is run with an
    escalating grid until a witness appears (one exists in the <= d-1
    distinct-entry slice by the degree principle, and the violating
    region is open).
    """
    u = [QONE] + [QZERO] * (p.n - 1)
    prof = root_profile(restrict_line(p, u))
    if prof.n_nonreal:
        return (SymPoint(tuple(u)), prof)
    base = budget or DEFAULT_BUDGET
    for grid in (base.grid, 2 * base.grid, 4 * base.grid, 8 * base.grid):
        v = falsify_hyperbolicity(
            p,
            SearchBudget(
                grid=grid,
                refine_rounds=base.refine_rounds,
                refine_grid=base.refine_grid,
                max_points=base.max_points * 4,
                max_candidates=4 * base.max_candidates,
                defect_threshold=base.defect_threshold / 10,
                snap_denominator=base.snap_denominator,
                seed=base.seed,
            ),
        )
        if v.status == NOT_HYPERBOLIC:
            return v.witness
    raise AssertionError("witness search exhausted for a non-hyperbolic input")


def cone_member(p: HookPoly, x) -> bool:
    """True iff p(x + t*1) has no root with t > 0 (Sturm count on the
    open positive ray)."""
    xs = x.x if isinstance(x, SymPoint) else [to_q(c) for c in x]
    q = restrict_line(p, xs)
    if q.is_zero():
        return False
    sf = squarefree_part(q)
    if sf.degree() < 1:
        return True
    chain = sturm_chain(sf)
    positive = sturm_variations_at(chain, QZERO) - sturm_variations_at_inf(
        chain, True
    )
    return positive == 0


# -- the falsifier --------------------------------------------------------


def _compositions(n: int, k: int):
    """Ordered compositions of n into k positive parts."""
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def _batch_restriction(a_float, n: int, d: int, values: np.ndarray, mults):
    """Line-restriction coefficients (descending) for a batch of points.

    values: (N, k) distinct entries; mults: multiplicities.  Returns an
    (N, d+1) float array of the coefficients of p(x + t*1).
    """
    N = values.shape[0]
    e = np.zeros((N, d + 1))
    e[:, 0] = 1.0
    for col, m in enumerate(mults):
        v = values[:, col]
        for _ in range(m):
            for j in range(d, 0, -1):
                e[:, j] += v * e[:, j - 1]
    mean = np.empty_like(e)
    for j in range(d + 1):
        mean[:, j] = e[:, j] / comb(n, j)
    m1 = mean[:, 1]
    asc = np.zeros((N, d + 1))
    m1_pows = [np.ones(N)]
    for _ in range(d):
        m1_pows.append(m1_pows[-1] * m1)
    for i in range(1, d + 1):
        ai = a_float[i - 1]
        if ai == 0.0:
            continue
        for j in range(i + 1):
            base = ai * comb(i, j)
            mj = mean[:, j]
            for l in range(d - i + 1):
                asc[:, l + i - j] += (
                    base * comb(d - i, l) * m1_pows[d - i - l] * mj
                )
    return asc[:, ::-1]


def _trim_structural_zeros(coeffs: np.ndarray) -> np.ndarray:
    """Drop leading coefficient columns that vanish across the whole
    batch (structural degree drop; roots at infinity are forgiven)."""
    scale = np.abs(coeffs).max() or 1.0
    start = 0
    while coeffs.shape[1] - start > 2 and np.all(
        np.abs(coeffs[:, start]) <= 1e-13 * scale
    ):
        start += 1
    return coeffs[:, start:]


def _grid_axis(res: int):
    return [Q(2 * j, res - 1) - 1 for j in range(res)]


def _expand_point(mults, v):
    out = []
    for m, val in zip(mults, v):
        out.extend([val] * m)
    return tuple(out)


def _exact_check(p: HookPoly, x):
    q = restrict_line(p, x)
    if q.is_zero():
        return None
    prof = root_profile(q)
    if prof.n_nonreal:
        return (SymPoint(tuple(x)), prof)
    return None


def _snap_point(x, den: int):
    tol = Q(1, den)
    return tuple(simplest_between(c - tol, c + tol) for c in x)


def _slice_points(mults, w_rows):
    """Exact slice points from free coordinates: last distinct value from
    the zero-sum constraint, then rescale to max |v| = 1."""
    k = len(mults)
    out = []
    for w in w_rows:
        v = list(w)
        v.append(-sum(m * c for m, c in zip(mults[:-1], w)) / mults[-1])
        top = max(abs(c) for c in v)
        if top == 0:
            out.append(None)
            continue
        out.append(tuple(c / top for c in v))
    return out


def _verify_candidates(p: HookPoly, mults, w_rows, budget: SearchBudget):
    for v in _slice_points(mults, w_rows):
        if v is None:
            continue
        snapped = _snap_point(v, budget.snap_denominator)
        for cand in ([snapped] if snapped != v else []) + [v]:
            witness = _exact_check(p, _expand_point(mults, cand))
            if witness is not None:
                return witness
    return None


def _prescreen(p, a_float, mults, w_rows, budget):
    """Float defects for a batch of free-coordinate rows; returns indices
    above threshold sorted by decreasing defect, plus the best row."""
    k = len(mults)
    vals = np.empty((len(w_rows), k))
    for i, w in enumerate(w_rows):
        row = [float(c) for c in w]
        row.append(-sum(m * c for m, c in zip(mults[:-1], row)) / mults[-1])
        top = max(abs(c) for c in row)
        if top == 0:
            top = 1.0
        vals[i] = [c / top for c in row]
    coeffs = _batch_restriction(a_float, p.n, p.d, vals, mults)
    coeffs = _trim_structural_zeros(coeffs)
    if coeffs.shape[1] < 3:
        return [], None
    defects = realness_defects(coeffs)
    order = np.argsort(-defects)
    hits = [int(i) for i in order if defects[i] > budget.defect_threshold]
    best = int(order[0]) if len(order) and defects[order[0]] > 0 else None
    return hits[: budget.max_candidates], best


def _search_composition(p, a_float, mults, budget):
    """Full grid plus local refinement for one multiplicity pattern.
    Returns candidate w-rows (exact rationals) in priority order."""
    k = len(mults)
    free = k - 1
    res = budget.grid
    while free >= 1 and res**free > budget.max_points and res > 3:
        res = max(3, int(budget.max_points ** (1.0 / free)))
        break
    axis = _grid_axis(res)
    w_rows = [()]
    for _ in range(free):
        w_rows = [w + (c,) for w in w_rows for c in axis]
    hits, best = _prescreen(p, a_float, mults, w_rows, budget)
    candidates = [w_rows[i] for i in hits]
    # local refinement around the best cell
    if best is not None and budget.refine_rounds > 0:
        center = w_rows[best]
        radius = Q(2, res - 1)
        for _ in range(budget.refine_rounds):
            sub_axis = [
                radius * (Q(2 * j, budget.refine_grid - 1) - 1)
                for j in range(budget.refine_grid)
            ]
            local = [()]
            for c0 in center:
                local = [
                    w + (min(max(c0 + dv, Q(-1)), QONE),)
                    for w in local
                    for dv in sub_axis
                ]
            hits, best_local = _prescreen(p, a_float, mults, local, budget)
            candidates.extend(local[i] for i in hits)
            if best_local is None:
                break
            center = local[best_local]
            radius /= budget.refine_grid - 1
    return candidates


def falsify_hyperbolicity(p: HookPoly, budget: SearchBudget = None) -> Verdict:
    """Search for an exact witness of non-hyperbolicity.

    By the degree principle it suffices to look at points with at most
    d - 1 distinct entries; for each multiplicity pattern the distinct
    values are reduced (translation along 1, homogeneity) to the compact
    slice sum(m_i v_i) = 0, max |v_i| = 1, which is gridded, float
    prescreened and locally refined.  Hits are snapped to bounded
    denominators and re-verified exactly; only exact verification can
    produce NotHyperbolic, and the procedure never claims hyperbolicity.
    """
    budget = budget or DEFAULT_BUDGET
    d, n = p.d, p.n
    a_float = [float(c) for c in p.a]
    patterns = []
    for k in range(2, min(d - 1, n) + 1):
        patterns.extend(_compositions(n, k))
    if not patterns:
        return Verdict(NO_COUNTEREXAMPLE, detail={"patterns": 0})
    workers = min(max_threads(), len(patterns))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            all_candidates = list(
                pool.map(
                    lambda m: _search_composition(p, a_float, m, budget),
                    patterns,
                )
            )
    else:
        all_candidates = [
            _search_composition(p, a_float, m, budget) for m in patterns
        ]
    for mults, cands in zip(patterns, all_candidates):
        witness = _verify_candidates(p, mults, cands, budget)
        if witness is not None:
            return Verdict(
                NOT_HYPERBOLIC,
                witness=witness,
                detail={"pattern": list(mults)},
            )
    return Verdict(NO_COUNTEREXAMPLE, detail={"patterns": len(patterns)})


def falsify_unrestricted(p: HookPoly, budget: SearchBudget = None) -> Verdict:
    """Baseline falsifier without the distinct-entry reduction: random
    rational points, float prescreen, exact verification of the hits."""
    budget = budget or DEFAULT_BUDGET
    rng = random.Random(budget.seed)
    d, n = p.d, p.n
    a_float = [float(c) for c in p.a]
    den = 16
    points = [
        tuple(Q(rng.randint(-den, den), den) for _ in range(n))
        for _ in range(budget.trials)
    ]
    vals = np.array([[float(c) for c in x] for x in points])
    coeffs = _trim_structural_zeros(
        _batch_restriction(a_float, n, d, vals, [1] * n)
    )
    if coeffs.shape[1] < 3:
        return Verdict(NO_COUNTEREXAMPLE, detail={"trials": budget.trials})
    defects = realness_defects(coeffs)
    order = np.argsort(-defects)
    for i in order[: budget.max_candidates]:
        if defects[i] <= budget.defect_threshold:
            break
        x = points[int(i)]
        snapped = _snap_point(x, budget.snap_denominator)
        for cand in ([snapped] if snapped != x else []) + [x]:
            witness = _exact_check(p, cand)
            if witness is not None:
                return Verdict(
                    NOT_HYPERBOLIC, witness=witness, detail={"trial": int(i)}
                )
    return Verdict(NO_COUNTEREXAMPLE, detail={"trials": budget.trials})


# -- conjecture evidence ---------------------------------------------------


@dataclass
class ConjectureReport:
    """Evidence record for the sufficiency conjecture: the hook
    polynomial induced by a zero-sum target with d-1 one-signed roots,
    its falsification outcome, mixed-derivative sampling, and the
    extendability decision."""

    n: int
    d: int
    hook: HookPoly
    falsifier: Verdict
    delta_trials: int
    delta_negative: int
    delta_min: Q
    extendable: bool
    certificate_kind: str


def conjecture_case(
    q: ZeroSumPoly, n: int, budget: SearchBudget = None, delta_trials: int = 1000
) -> ConjectureReport:
    budget = budget or DEFAULT_BUDGET
    inner = q.inner
    d = inner.ambient_degree
    if inner.is_zero():
        raise HypothesisViolated("zero target")
    prof = root_profile(inner)
    if prof.n_nonreal or not (
        prof.n_positive + prof.n_zero >= d - 1
        or prof.n_negative + prof.n_zero >= d - 1
    ):
        raise HypothesisViolated(
            "target must be real rooted with d-1 roots of one sign"
        )
    T = map_sending_g0_to(q, n)
    p = operator_to_hook(T)
    verdict = falsify_hyperbolicity(p, budget)
    rng = random.Random(budget.seed)
    ones = tuple([QONE] * n)
    negative = 0
    minimum = None
    for _ in range(delta_trials):
        x = tuple(Q(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(n))
        value = mixed_derivative_eval(p, ones, ones, x)
        if minimum is None or value < minimum:
            minimum = value
        if value < 0:
            negative += 1
    extendable, cert = decide_extendable(T)
    return ConjectureReport(
        n=n,
        d=d,
        hook=p,
        falsifier=verdict,
        delta_trials=delta_trials,
        delta_negative=negative,
        delta_min=minimum if minimum is not None else QZERO,
        extendable=extendable,
        certificate_kind=cert.kind,
    )


# -- e_k + linear interlacing ----------------------------------------------


@dataclass
class EkLinearReport:
    k: int
    n: int
    trials: int
    passed: int
    failures: list


def elementary_restriction(x, k: int, n: int) -> UniPoly:
    """The univariate polynomial e_k(x + t*1): coefficient of t^(k-i) is
    binom(n-i, k-i) e_i(x)."""
    xs = [to_q(c) for c in x]
    e = [QONE] + [QZERO] * k
    for c in xs:
        for j in range(k, 0, -1):
            e[j] += c * e[j - 1]
    coeffs = [QZERO] * (k + 1)
    for i in range(k + 1):
        coeffs[k - i] = comb(n - i, k - i) * e[i]
    return UniPoly(coeffs, k)


def ek_plus_linear_check(
    k: int, n: int, ell, trials: int = 1000, seed: int = 0
) -> EkLinearReport:
    """On random rational lines, assert exactly that e_k + ell*e_{k-1}
    restricted to x + t*1 is real rooted and that e_{k-1}'s restriction
    interlaces it.  ell is a linear form given by its n coefficients,
    required to satisfy ell(1) >= 0."""
    if not (1 <= k <= n):
        raise InvalidInput("need 1 <= k <= n")
    ell = [to_q(c) for c in ell]
    if len(ell) != n:
        raise InvalidInput(f"expected {n} linear-form coefficients")
    big_l = sum(ell, QZERO)
    if big_l < 0:
        raise InvalidInput("ell(1) must be nonnegative")
    rng = random.Random(seed)
    passed = 0
    failures = []
    for _ in range(trials):
        x = tuple(Q(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n))
        qk = elementary_restriction(x, k, n)
        qkm1 = elementary_restriction(x, k - 1, n)
        ell_line = UniPoly([sum(li * xi for li, xi in zip(ell, x)), big_l])
        total = qk + ell_line * qkm1
        ok = is_real_rooted(total)
        if ok and total.degree() >= 1 and qkm1.degree() == total.degree() - 1:
            ok = interlaces(qkm1, total)
        if ok:
            passed += 1
        else:
            failures.append(x)
    return EkLinearReport(k=k, n=n, trials=trials, passed=passed, failures=failures)


# -- cubic normal form ------------------------------------------------------


@dataclass
class CubicNormalForm:
    """Reduced coefficients after the shear x -> x - s*e1(x)*1: the
    transformed cubic is c2*m1*m2 + c1*m3 with the m1^3 term removed.
    The shear parameter solves a cubic, so u = 1 - s*n (and hence c2 and
    s) may be irrational: exact rational values are given when they
    exist, and a rational enclosure plus an exact sign otherwise."""

    c1: Q
    c2: Q | None
    c2_interval: tuple
    c2_sign: int
    u: Q | None
    u_interval: tuple
    shift: Q | None


def cubic_normal_form(a, b, c, n: int) -> CubicNormalForm:
    """Normal form of a hyperbolic cubic a*m1^3 + b*m1*m2 + c*m3.

    Composing with x -> x - s*e1(x)*1 multiplies m1 by u = 1 - s*n and
    maps the coefficient vector to
        A(u) = a*u^3 - b*u*(1 - u^2) + c*(u-1)^2*(u+2)   (m1^3 term)
        B(u) = b*u + 3*c*(u - 1)                          (m1*m2 term)
    with the m3 coefficient fixed at c.  A root u* != 0 of A gives the
    normal form (c1, c2) = (c, B(u*)); u* = 0 only for a singular shear.
    """
    a, b, c = to_q(a), to_q(b), to_q(c)
    if decide_cubic(a, b, c, max(n, 3)).status != HYPERBOLIC:
        raise NotHyperbolicInput("cubic normal form requires a hyperbolic input")
    if a == 0 and qsign(b) * qsign(c) >= 0:
        # already in normal form (u = 1 is a root of A exactly when a = 0)
        return CubicNormalForm(
            c1=c,
            c2=b,
            c2_interval=(b, b),
            c2_sign=qsign(b),
            u=QONE,
            u_interval=(QONE, QONE),
            shift=QZERO,
        )
    # expanded: A(u) = (a+b+c) u^3 - (b+3c) u + 2c
    A = UniPoly([2 * c, -b - 3 * c, QZERO, a + b + c])
    if A.is_zero():
        return CubicNormalForm(
            c1=c, c2=b, c2_interval=(b, b), c2_sign=qsign(b),
            u=QONE, u_interval=(QONE, QONE), shift=QZERO,
        )
    sf = squarefree_part(A)
    roots = isolate_real_roots(sf)
    if not roots:
        raise NonInvertibleTransform("no real shear makes the m1^3 term vanish")
    for root in roots:
        root.try_rational()
    for root in reversed(roots):  # largest first
        if root.is_exact() and root.exact == 0:
            continue
        c2_exact, c2_int, c2_sign = _eval_linear_on_root(b, 3 * c, -3 * c, root)
        if qsign(c) * c2_sign >= 0:
            if root.is_exact():
                u = root.exact
                return CubicNormalForm(
                    c1=c, c2=c2_exact, c2_interval=c2_int, c2_sign=c2_sign,
                    u=u, u_interval=(u, u), shift=(1 - u) / n,
                )
            lo, hi = root.interval()
            return CubicNormalForm(
                c1=c, c2=c2_exact, c2_interval=c2_int, c2_sign=c2_sign,
                u=None, u_interval=(lo, hi), shift=None,
            )
    raise NonInvertibleTransform(
        "only the singular shear removes the m1^3 term"
    )


def _eval_linear_on_root(slope, offset_slope, offset, root):
    """Exact value, rational enclosure and sign of the linear form
    (slope + offset_slope)*u + offset at an algebraic u given as a
    RealRoot.  Returns (exact or None, (lo, hi), sign)."""
    k = slope + offset_slope
    if root.is_exact():
        v = k * root.exact + offset
        return v, (v, v), qsign(v)
    if k == 0:
        return offset, (offset, offset), qsign(offset)
    # sign: B vanishes at u0 = -offset/k; compare the root against it
    u0 = -offset / k
    rel = root._compare_with_rational(u0)
    if rel == 0:
        return QZERO, (QZERO, QZERO), 0
    sign = qsign(k) * rel
    root.refine_below(Q(1, 1 << 20))
    lo, hi = root.interval()
    ends = sorted((k * lo + offset, k * hi + offset))
    return None, (ends[0], ends[1]), sign
