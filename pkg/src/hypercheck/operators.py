"""Diagonal linear maps between zero-sum polynomial spaces.

A DiagonalMap acts on binomial-normalized coefficients: writing
g = sum_k binom(n, k) c_k t^(n-k), the map sends g to
sum_{k<=d} gamma_k c_k t^(d-k).  For a monic g with root vector r this
makes c_k = (-1)^k m_k(r), and the operator associated to a hook
polynomial p satisfies the defining contract

    T(g)(t) = lead(g) * p(r - 1*t).

Matching that contract on the monomial basis gives the closed form

    gamma_j = (-1)^d * sum_{i >= max(j, 1)} binom(i, j) a_i,

which is what associated_operator uses (the defining contract, not the
closed form, is the ground truth; the tests re-check one against the
other).  gamma_1 never acts on the zero-sum space, so maps are compared
ignoring it and associated_operator emits gamma_1 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import DegreeMismatch, DegreeTooLow, NotInSimplex
from .rationals import Q, QONE, QZERO, to_q
from .sympoly import HookPoly
from .unipoly import (
    UniPoly,
    ZeroSumPoly,
    delta_n,
    discriminant,
    is_real_rooted,
    root_profile,
    same_sign_count,
    sturm_chain,
)

DEFAULT_ENCLOSURE_WIDTH = Q(1, 1 << 40)


@dataclass(frozen=True)
class DiagonalMap:
    """Diagonal map R[t]_{n,0} -> R[t]_{d,0} on binomial-normalized
    coefficients.  gamma has d+1 entries; gamma[1] is irrelevant on the
    zero-sum domain and is ignored by equality."""

    n: int
    d: int
    gamma: tuple

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(to_q(c) for c in self.gamma))
        if len(self.gamma) != self.d + 1:
            raise DegreeMismatch(f"expected {self.d + 1} gamma entries")
        if self.d > self.n:
            raise DegreeMismatch("target degree exceeds source degree")

    def __eq__(self, other):
        if not isinstance(other, DiagonalMap):
            return NotImplemented
        if (self.n, self.d) != (other.n, other.d):
            return False
        return all(
            a == b
            for k, (a, b) in enumerate(zip(self.gamma, other.gamma))
            if k != 1
        )

    def __hash__(self):
        return hash((self.n, self.d) + self.gamma[:1] + self.gamma[2:])

    def proportional_to(self, other: "DiagonalMap") -> bool:
        if (self.n, self.d) != (other.n, other.d):
            return False
        ratio = None
        for k, (a, b) in enumerate(zip(self.gamma, other.gamma)):
            if k == 1:
                continue
            if (a == 0) != (b == 0):
                return False
            if a != 0:
                r = a / b
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    return False
        return True


@dataclass(frozen=True)
class FullDiagonalMap:
    """Diagonal map R[t]_n -> R[t]_d on the monomial basis:
    t^(n-k) -> gamma_prime[k] * t^(d-k), zero for k > d."""

    n: int
    d: int
    gamma_prime: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "gamma_prime", tuple(to_q(c) for c in self.gamma_prime)
        )
        if len(self.gamma_prime) != self.d + 1:
            raise DegreeMismatch(f"expected {self.d + 1} entries")

    def apply(self, g: UniPoly) -> UniPoly:
        if g.ambient_degree != self.n:
            raise DegreeMismatch("ambient degree of g must equal the source degree")
        out = [QZERO] * (self.d + 1)
        for k in range(self.d + 1):
            out[self.d - k] = self.gamma_prime[k] * g.coeffs[self.n - k]
        return UniPoly(out, self.d)

    def restrict_zero_sum(self) -> DiagonalMap:
        gamma = [self.gamma_prime[k] * comb(self.n, k) for k in range(self.d + 1)]
        return DiagonalMap(self.n, self.d, tuple(gamma))


@dataclass(frozen=True)
class ExtendCertificate:
    """Outcome evidence for decide_extendable.

    kind "Extension": f is a real-rooted one-signed preimage with
    delta_d(f) equal to the image of the pivot polynomial.
    kind "MultiplicityObstruction": the forced preimage multiplicities
    (root, multiplicity) exceed the degree.
    kind "SweepRefutation": the exhaustive lambda sweep found no witness.
    """

    kind: str
    f: UniPoly | None = None
    obstruction: tuple = ()
    detail: dict = field(default_factory=dict)


def g0(n: int) -> ZeroSumPoly:
    """The pivot polynomial (t + n - 1)(t - 1)^(n-1), by exact product
    expansion of the factored form."""
    if n < 2:
        raise DegreeTooLow("g0 requires n >= 2")
    p = UniPoly.from_roots([1] * (n - 1) + [-(n - 1)], ambient=n)
    return ZeroSumPoly(p)


def binomial_coords(g: UniPoly):
    """c_k with g = sum_k binom(n,k) c_k t^(n-k), k ascending from 0."""
    n = g.ambient_degree
    return tuple(g.coeffs[n - k] / comb(n, k) for k in range(n + 1))


def associated_operator(p: HookPoly) -> DiagonalMap:
    """The diagonal map realizing g -> lead(g) * p(rootvec(g) - 1*t)."""
    d = p.d
    sign = -1 if d % 2 else 1
    gamma = []
    for j in range(d + 1):
        if j == 1:
            gamma.append(QZERO)
            continue
        acc = QZERO
        for i in range(max(j, 1), d + 1):
            acc += comb(i, j) * p.a[i - 1]
        gamma.append(sign * acc)
    return DiagonalMap(p.n, d, tuple(gamma))


def operator_to_hook(T: DiagonalMap) -> HookPoly:
    """Invert the (triangular) hook -> operator system exactly."""
    d = T.d
    sign = -1 if d % 2 else 1
    a = [QZERO] * d
    for j in range(d, 1, -1):
        acc = sign * T.gamma[j]
        for i in range(j + 1, d + 1):
            acc -= comb(i, j) * a[i - 1]
        a[j - 1] = acc
    a[0] = sign * T.gamma[0] - sum(a[1:], QZERO)
    return HookPoly(T.n, d, tuple(a))


def apply(T: DiagonalMap, g) -> ZeroSumPoly:
    """Coefficientwise action of T in binomial-normalized coordinates."""
    inner = g.inner if isinstance(g, ZeroSumPoly) else g
    if inner.ambient_degree != T.n:
        raise DegreeMismatch(
            f"g has ambient degree {inner.ambient_degree}, map expects {T.n}"
        )
    g = ZeroSumPoly(inner)  # validates the vanishing t^{n-1} coefficient
    c = binomial_coords(inner)
    out = [QZERO] * (T.d + 1)
    for k in range(T.d + 1):
        out[T.d - k] = T.gamma[k] * c[k]
    return ZeroSumPoly(UniPoly(out, T.d))


def map_sending_g0_to(g, n: int) -> DiagonalMap:
    """The unique diagonal map with T(g0(n)) = g (all g0 coefficients
    away from t^{n-1} are nonzero, so division is well defined)."""
    inner = g.inner if isinstance(g, ZeroSumPoly) else g
    d = inner.ambient_degree
    if n < max(2, d):
        raise DegreeTooLow(f"need n >= max(2, d) = {max(2, d)}")
    c_g = binomial_coords(inner)
    c_0 = binomial_coords(g0(n).inner)
    gamma = [QZERO] * (d + 1)
    for k in range(d + 1):
        if k == 1:
            continue
        gamma[k] = c_g[k] * comb(d, k) / c_0[k]
    return DiagonalMap(n, d, tuple(gamma))


def polya_schur_test(T: FullDiagonalMap) -> bool:
    """Multiplier-sequence test: the image of (t-1)^n must be real rooted
    with all roots of one sign (zeros allowed)."""
    base = UniPoly.from_roots([1] * T.n, ambient=T.n)
    image = T.apply(base)
    if image.is_zero():
        return True
    prof = root_profile(image)
    if prof.n_nonreal:
        return False
    return prof.n_positive == 0 or prof.n_negative == 0


def full_map_sending_onesbase_to(f: UniPoly, n: int) -> FullDiagonalMap:
    """The diagonal map on R[t]_n sending (t-1)^n to f (ambient degree d)."""
    d = f.ambient_degree
    base = UniPoly.from_roots([1] * n, ambient=n)
    gp = [f.coeffs[d - k] / base.coeffs[n - k] for k in range(d + 1)]
    return FullDiagonalMap(n, d, tuple(gp))


def necessary_sign_test(T: DiagonalMap) -> bool:
    """Image of the pivot polynomial must be real rooted with at least
    d-1 roots of one sign.  Necessary for preserving hyperbolicity on
    the zero-sum space; also sufficient for d <= 4, and conjecturally
    sufficient beyond."""
    image = apply(T, g0(T.n)).inner
    if image.is_zero():
        return True
    prof = root_profile(image)
    if prof.n_nonreal:
        return False
    k = T.d - 1
    return prof.n_positive + prof.n_zero >= k or prof.n_negative + prof.n_zero >= k


def _delta_preimage_base(g: UniPoly) -> UniPoly:
    """Coefficientwise preimage f0 with delta_d(f0) = g; the t^(d-1)
    coefficient of f0 is the free parameter and is set to 0 here."""
    d = g.ambient_degree
    coeffs = [QZERO] * (d + 1)
    for j in range(d + 1):
        k = d - j
        if k == 1:
            continue
        coeffs[j] = g.coeffs[j] / (1 - k)
    return UniPoly(coeffs, d)


def _one_sign_real_rooted(f: UniPoly) -> bool:
    prof = root_profile(f)
    return prof.n_nonreal == 0 and (prof.n_positive == 0 or prof.n_negative == 0)


def _disc_in_lambda(h0: UniPoly, slot: int, big_degree: int) -> UniPoly:
    """disc(h0 + lambda * t^slot) at formal degree big_degree, as an
    exact polynomial in lambda.

    The discriminant of a degree-N polynomial has degree <= 2N - 2 in any
    single coefficient, so exact Lagrange interpolation at integer sample
    points (avoiding the degree-dropping one when slot == N) recovers it
    from the univariate subresultant discriminant.
    """
    bound = max(2 * big_degree - 2, 0)
    samples = []
    lam = 0
    while len(samples) < bound + 1:
        fl = list(h0.coeffs) + [QZERO] * max(0, slot + 1 - len(h0.coeffs))
        fl[slot] += lam
        p = UniPoly(fl)
        if p.degree() == big_degree:
            samples.append((Q(lam), discriminant(p)))
        lam = -lam + 1 if lam <= 0 else -lam
    return _lagrange_interpolate(samples)


def _lagrange_interpolate(samples) -> UniPoly:
    out = UniPoly([QZERO])
    for i, (xi, yi) in enumerate(samples):
        if yi == 0:
            continue
        term = UniPoly([yi])
        for j, (xj, _) in enumerate(samples):
            if i == j:
                continue
            term = term * UniPoly([-xj / (xi - xj), Q(1) / (xi - xj)])
        out = out + term
    return out


def _sweep_candidates(crit_poly: UniPoly):
    """Rational probe points for a one-parameter family whose qualitative
    root structure only changes where crit_poly vanishes: one point inside
    each open interval between consecutive critical values, points beyond
    both ends, and every exact rational critical value."""
    if crit_poly.is_zero() or crit_poly.degree() < 1:
        return [QZERO, QONE, Q(-1)]
    prof = root_profile(crit_poly)
    roots = [r for r, _ in prof.real_roots]
    for r in roots:
        r.try_rational()
    if not roots:
        return [QZERO]
    candidates = [roots[0].interval()[0] - 1]
    for a, b in zip(roots, roots[1:]):
        ahi, blo = a.interval()[1], b.interval()[0]
        while ahi >= blo:
            a.refine()
            b.refine()
            ahi, blo = a.interval()[1], b.interval()[0]
        candidates.append((ahi + blo) / 2)
    candidates.append(roots[-1].interval()[1] + 1)
    for r in roots:
        if r.is_exact():
            candidates.append(r.exact)
    return candidates


def decide_extendable(T: DiagonalMap):
    """Decide whether T extends to a full diagonal hyperbolicity
    preserver; returns (bool, ExtendCertificate).

    The preimage family under delta_d is f_lambda = f0 + lambda*t^(d-1)
    (the kernel of delta_d is exactly span(t^(d-1))), so extendability is
    equivalent to some f_lambda being real rooted with one-signed roots.
    The sweep over lambda is exhaustive: real-rootedness and root signs
    only change where disc(f_lambda) vanishes.
    """
    g = apply(T, g0(T.n)).inner
    if g.is_zero():
        # whole kernel is available; t^{d-1} is a one-signed witness
        f = UniPoly([QZERO] * (T.d - 1) + [QONE, QZERO], T.d)
        return True, ExtendCertificate(kind="Extension", f=f)
    if not necessary_sign_test(T):
        return False, ExtendCertificate(
            kind="SweepRefutation", detail={"reason": "necessary sign test fails"}
        )
    d = T.d
    prof = root_profile(g)

    # forced-multiplicity obstruction: a positive root of g of
    # multiplicity k forces a preimage root of multiplicity k+1 (and the
    # mirrored statement for the all-nonpositive branch)
    obstruction = _multiplicity_obstruction(prof, d)
    if obstruction is not None:
        return False, ExtendCertificate(
            kind="MultiplicityObstruction", obstruction=tuple(obstruction)
        )

    f0 = _delta_preimage_base(g)
    # factor out the common power of t so the discriminant sweep is not
    # identically degenerate; f_lambda = t^m * (h0 + lambda * t^slot)
    m = min(f0.valuation(), d - 1)
    h0 = UniPoly(f0.coeffs[m:])
    slot = d - 1 - m
    big_degree = max(h0.degree(), slot)
    if big_degree <= 1:
        # degree <= 1 families are always real rooted; probe both signs
        cands = [QZERO, QONE, Q(-1)]
    else:
        # root structure of h_lambda changes only where its discriminant
        # vanishes, where its degree drops (slot == top coefficient), or
        # where a root crosses 0 (slot == constant coefficient); fold the
        # latter two in as linear factors and subdivide at all of them
        crit = _disc_in_lambda(h0, slot, big_degree)
        if slot == big_degree:
            lead = h0.coeffs[slot] if slot < len(h0.coeffs) else QZERO
            crit = crit * UniPoly([lead, QONE])
        if slot == 0:
            crit = crit * UniPoly([h0.coeffs[0], QONE])
        cands = _sweep_candidates(crit)
    for lam in cands:
        coeffs = list(f0.coeffs)
        coeffs[d - 1] += lam
        f = UniPoly(coeffs, d)
        if _one_sign_real_rooted(f):
            found = f
            break
    if found is not None:
        return True, ExtendCertificate(kind="Extension", f=found)
    return False, ExtendCertificate(
        kind="SweepRefutation",
        detail={"reason": "no lambda yields a one-signed real-rooted preimage"},
    )


def _multiplicity_obstruction(prof, d: int):
    """Forced preimage multiplicities exceeding d, or None.

    A nonzero root of g = delta_d(f) of multiplicity m >= 2 must be a
    root of any one-signed real-rooted preimage f with multiplicity
    m + 1 (simple roots of g force nothing).  Branch viability: a
    preimage with all roots >= 0 makes the image real rooted with at
    most one negative root, and symmetrically.
    """
    plus_viable = prof.n_negative <= 1
    minus_viable = prof.n_positive <= 1
    plus_forced = [
        (r, m + 1) for r, m in prof.real_roots if m >= 2 and r.sign() > 0
    ]
    minus_forced = [
        (r, m + 1) for r, m in prof.real_roots if m >= 2 and r.sign() < 0
    ]
    plus_blocked = sum(m for _, m in plus_forced) > d
    minus_blocked = sum(m for _, m in minus_forced) > d
    if plus_viable and not plus_blocked:
        return None
    if minus_viable and not minus_blocked:
        return None
    if plus_viable:
        return plus_forced
    if minus_viable:
        return minus_forced
    return None


def phi(r, width=DEFAULT_ENCLOSURE_WIDTH):
    """The root-simplex map A_d -> A_{d-1} induced by delta_d.

    Builds prod(t - r_i), applies delta_d, isolates the d-1 nonnegative
    roots, drops the unique nonpositive one and normalizes to sum 1.
    Returns a list of (lo, hi) rational enclosures of width <= `width`
    (lo == hi for exactly known coordinates), weakly decreasing.
    """
    r = [to_q(c) for c in r]
    d = len(r)
    if d < 2:
        raise NotInSimplex("need at least two coordinates")
    if any(a < b for a, b in zip(r, r[1:])) or r[-1] < 0 or sum(r) != 1:
        raise NotInSimplex("require r_1 >= ... >= r_d >= 0 with sum 1")
    if r[0] == 1 and all(c == 0 for c in r[1:]):
        one = (QONE, QONE)
        zero = (QZERO, QZERO)
        return [one] + [zero] * (d - 2)
    p = UniPoly.from_roots(r, ambient=d)
    image = delta_n(p).inner
    prof = root_profile(image)
    if prof.n_nonreal or prof.n_negative > 1:
        raise AssertionError("delta_d image violated the interlacing law")
    roots = prof.roots_with_multiplicity()  # ascending, length d
    for root in roots:
        root.try_rational()
    kept = roots[1:]  # drop the unique most-negative root
    low = roots[0]
    # enclosures: s_i / (-s_low); refine until tight enough
    while True:
        lo_l, hi_l = low.interval()
        den_lo, den_hi = -hi_l, -lo_l
        if den_lo <= 0:
            low.refine()
            continue
        out = []
        widest = QZERO
        for root in kept:
            lo, hi = root.interval()
            lo = max(lo, QZERO)
            if root.is_exact() and low.is_exact():
                v = root.exact / -low.exact
                out.append((v, v))
                continue
            enc = (lo / den_hi, hi / den_lo)
            widest = max(widest, enc[1] - enc[0])
            out.append(enc)
        if widest <= width:
            return list(reversed(out))  # weakly decreasing
        for root in kept:
            root.refine()
        low.refine()
