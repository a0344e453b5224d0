"""Exact univariate polynomial arithmetic and real-root machinery.

Polynomials carry an *ambient degree* n on top of their coefficient
vector: a polynomial of lower actual degree is treated as a limit with
"roots at infinity" (degree drop), which is what makes diagonal maps on
R[t]_n well behaved under continuity.

Real roots are isolated exactly: Yun square-free decomposition, Sturm
sequences on the square-free factors, and interval bisection with
rational endpoints.  Isolated roots are first run through a
simplest-rational reconstruction so that rational roots come out exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd as int_gcd

from .errors import (
    DegreeMismatch,
    DegreeTooLow,
    NotRealRooted,
    ZeroPolynomial,
)
from .rationals import Q, QONE, QZERO, qabs, qsign, simplest_between, to_q


class UniPoly:
    """Dense exact-rational polynomial with a declared ambient degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, ambient=None):
        coeffs = [to_q(c) for c in coeffs]
        if ambient is not None:
            if len(coeffs) > ambient + 1:
                for c in coeffs[ambient + 1 :]:
                    if c != 0:
                        raise DegreeMismatch(
                            f"coefficients exceed ambient degree {ambient}"
                        )
                coeffs = coeffs[: ambient + 1]
            coeffs += [QZERO] * (ambient + 1 - len(coeffs))
        elif not coeffs:
            coeffs = [QZERO]
        self.coeffs = tuple(coeffs)

    # -- basic structure -------------------------------------------------
    @property
    def ambient_degree(self) -> int:
        return len(self.coeffs) - 1

    def degree(self) -> int:
        """Actual degree; -1 for the zero polynomial."""
        for j in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[j] != 0:
                return j
        return -1

    def is_zero(self) -> bool:
        return self.degree() == -1

    def degree_drop(self) -> int:
        return self.ambient_degree - max(self.degree(), 0)

    def leading(self):
        d = self.degree()
        if d < 0:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[d]

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        n = max(self.ambient_degree, other.ambient_degree)
        a = list(self.coeffs) + [QZERO] * (n + 1 - len(self.coeffs))
        for j, c in enumerate(other.coeffs):
            a[j] += c
        return UniPoly(a, n)

    def __sub__(self, other):
        return self + (other * Q(-1))

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = to_q(other)
            return UniPoly([ci * c for ci in self.coeffs], self.ambient_degree)
        out = [QZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __neg__(self):
        return self * Q(-1)

    def with_ambient(self, n: int) -> "UniPoly":
        return UniPoly(self.coeffs, n)

    def trimmed(self) -> "UniPoly":
        """Drop the degree slack: ambient degree = actual degree."""
        return UniPoly(self.coeffs[: max(self.degree(), 0) + 1])

    def evaluate(self, x):
        x = to_q(x)
        acc = QZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        if len(self.coeffs) == 1:
            return UniPoly([QZERO])
        return UniPoly(
            [j * self.coeffs[j] for j in range(1, len(self.coeffs))],
            self.ambient_degree - 1,
        )

    def shift(self, c) -> "UniPoly":
        """Compose with the translation t -> t + c, exactly."""
        c = to_q(c)
        out = [QZERO] * len(self.coeffs)
        for coeff in reversed(self.coeffs):
            # out <- out * (t + c) + coeff
            for j in range(len(out) - 1, 0, -1):
                out[j] = out[j - 1] + out[j] * c
            out[0] = out[0] * c + coeff
        return UniPoly(out, self.ambient_degree)

    def dilate(self, c) -> "UniPoly":
        """Compose with t -> c*t."""
        c = to_q(c)
        scale = QONE
        out = []
        for coeff in self.coeffs:
            out.append(coeff * scale)
            scale *= c
        return UniPoly(out, self.ambient_degree)

    def reversed_coeffs(self) -> "UniPoly":
        """R_n: t^n p(1/t) at the ambient degree n."""
        return UniPoly(list(reversed(self.coeffs)), self.ambient_degree)

    def monic(self) -> "UniPoly":
        lead = self.leading()
        return UniPoly([c / lead for c in self.coeffs], self.ambient_degree)

    def valuation(self) -> int:
        """Multiplicity of the root at 0 (ambient degree for the zero poly)."""
        for j, c in enumerate(self.coeffs):
            if c != 0:
                return j
        return self.ambient_degree

    @staticmethod
    def from_roots(roots, ambient=None, lead=1) -> "UniPoly":
        p = UniPoly([to_q(lead)])
        for r in roots:
            p = p * UniPoly([-to_q(r), QONE])
        if ambient is not None:
            p = p.with_ambient(ambient)
        return p


def divmod_poly(a: UniPoly, b: UniPoly):
    """Exact rational polynomial division with remainder."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    db = b.degree()
    rem = list(a.coeffs) + [QZERO] * max(0, db - a.ambient_degree)
    quo = [QZERO] * max(1, len(rem) - db)
    inv_lead = 1 / b.coeffs[db]
    for j in range(len(rem) - 1, db - 1, -1):
        if rem[j] == 0:
            continue
        q = rem[j] * inv_lead
        quo[j - db] = q
        for i in range(db + 1):
            rem[j - db + i] -= q * b.coeffs[i]
    return UniPoly(quo), UniPoly(rem[:db] if db > 0 else [QZERO])


def _int_primitive(coeffs):
    """Scale rational coefficients to a primitive integer vector.

    The scaling factor is positive, so signs (and thus Sturm counts)
    are preserved.  Returns a list of ints.
    """
    from math import lcm

    den = 1
    for c in coeffs:
        den = lcm(den, int(c.denominator))
    ints = [int(c.numerator) * (den // int(c.denominator)) for c in coeffs]
    g = 0
    for v in ints:
        g = int_gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """GCD over Q, returned primitive with positive leading coefficient."""
    a, b = a.trimmed(), b.trimmed()
    if a.is_zero():
        a, b = b, a
    if b.is_zero():
        if a.is_zero():
            return UniPoly([QZERO])
        r = UniPoly(_int_primitive(a.coeffs))
        return r if r.leading() > 0 else -r
    while not b.is_zero():
        _, r = divmod_poly(a, b)
        a, b = b, UniPoly(_int_primitive(r.coeffs)) if not r.is_zero() else r
    g = UniPoly(_int_primitive(a.coeffs))
    return g if g.leading() > 0 else -g


def squarefree_part(p: UniPoly) -> UniPoly:
    g = poly_gcd(p, p.derivative())
    if g.degree() <= 0:
        return p.trimmed()
    q, r = divmod_poly(p.trimmed(), g)
    assert r.is_zero()
    return q


def yun_decomposition(p: UniPoly):
    """Yun's square-free decomposition: list of (factor, multiplicity).

    Factors are square free, pairwise coprime and of positive degree;
    their product with multiplicities is p up to a constant.
    """
    p = p.trimmed()
    if p.degree() <= 0:
        return []
    out = []
    g = poly_gcd(p, p.derivative())
    if g.degree() == 0:
        return [(p, 1)]
    w, _ = divmod_poly(p, g)
    y, _ = divmod_poly(p.derivative(), g)
    z = y - w.derivative()
    i = 1
    while w.degree() > 0:
        f = poly_gcd(w, z)
        if f.degree() > 0:
            out.append((f, i))
            w, _ = divmod_poly(w, f)
            y, _ = divmod_poly(z, f)
        else:
            y = z
        z = y - w.derivative()
        i += 1
    return out


# -- Sturm machinery ---------------------------------------------------


def sturm_chain(p: UniPoly):
    """Sturm sequence of a square-free polynomial, primitively normalized."""
    chain = [UniPoly(_int_primitive(p.trimmed().coeffs))]
    d = chain[0].derivative()
    if d.is_zero():
        return chain
    chain.append(UniPoly(_int_primitive(d.coeffs)))
    while True:
        _, r = divmod_poly(chain[-2], chain[-1])
        if r.is_zero():
            break
        chain.append(-UniPoly(_int_primitive(r.coeffs)))
        if chain[-1].degree() == 0:
            break
    return chain


def _variations(signs):
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def sturm_variations_at(chain, x) -> int:
    return _variations([qsign(q.evaluate(x)) for q in chain])


def sturm_variations_at_inf(chain, positive: bool) -> int:
    signs = []
    for q in chain:
        d = q.degree()
        s = qsign(q.coeffs[d]) if d >= 0 else 0
        if not positive and d % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def count_roots_halfopen(chain, a, b) -> int:
    """Number of distinct real roots in (a, b] of the chain's polynomial."""
    return sturm_variations_at(chain, a) - sturm_variations_at(chain, b)


def cauchy_bound(p: UniPoly):
    d = p.degree()
    lead = qabs(p.coeffs[d])
    m = QZERO
    for c in p.coeffs[:d]:
        m = max(m, qabs(c) / lead)
    return 1 + m


class RealRoot:
    """One real algebraic number: a square-free defining polynomial plus
    either an exact rational value or an open isolating interval (lo, hi)
    with a sign change and non-root endpoints."""

    __slots__ = ("poly", "lo", "hi", "exact", "_chain")

    def __init__(self, poly, lo=None, hi=None, exact=None):
        self.poly = poly
        self.lo = lo
        self.hi = hi
        self.exact = exact
        self._chain = None

    @staticmethod
    def from_rational(value) -> "RealRoot":
        value = to_q(value)
        return RealRoot(UniPoly([-value, QONE]), exact=value)

    def is_exact(self) -> bool:
        return self.exact is not None

    def interval(self):
        if self.exact is not None:
            return (self.exact, self.exact)
        return (self.lo, self.hi)

    def width(self):
        if self.exact is not None:
            return QZERO
        return self.hi - self.lo

    def midpoint(self):
        if self.exact is not None:
            return self.exact
        return (self.lo + self.hi) / 2

    def refine(self):
        """One bisection step; may discover an exact rational value."""
        if self.exact is not None:
            return
        mid = (self.lo + self.hi) / 2
        v = self.poly.evaluate(mid)
        if v == 0:
            self.exact = mid
            return
        if qsign(self.poly.evaluate(self.lo)) != qsign(v):
            self.hi = mid
        else:
            self.lo = mid

    def refine_below(self, width):
        while self.exact is None and self.hi - self.lo > width:
            self.refine()

    def try_rational(self, extra_bits: int = 24) -> bool:
        """Attempt exact reconstruction of a rational root."""
        if self.exact is not None:
            return True
        target = self.width() / (1 << extra_bits)
        self.refine_below(target)
        if self.exact is not None:
            return True
        cand = simplest_between(self.lo, self.hi)
        if self.poly.evaluate(cand) == 0:
            self.exact = cand
            return True
        return False

    def split_at(self, x) -> int:
        """Position of the root relative to a non-root rational x inside
        the interval: -1 if root < x, +1 if root > x.  Refines in place."""
        if qsign(self.poly.evaluate(self.lo)) != qsign(self.poly.evaluate(x)):
            self.hi = x
            return -1
        self.lo = x
        return 1

    def sign(self) -> int:
        if self.exact is not None:
            return qsign(self.exact)
        if self.lo >= 0:
            return 1
        if self.hi <= 0:
            return -1
        v = self.poly.evaluate(QZERO)
        if v == 0:
            self.exact = QZERO
            return 0
        return self.split_at(QZERO)

    def compare(self, other: "RealRoot") -> int:
        if self is other:
            return 0
        while True:
            if self.exact is not None and other.exact is not None:
                return (self.exact > other.exact) - (self.exact < other.exact)
            if self.exact is not None:
                return -other._compare_with_rational(self.exact)
            if other.exact is not None:
                return self._compare_with_rational(other.exact)
            if self.hi <= other.lo:
                return -1
            if other.hi <= self.lo:
                return 1
            if self._equals_overlapping(other):
                return 0
            self.refine()
            other.refine()

    def _compare_with_rational(self, x) -> int:
        if self.exact is not None:
            return (self.exact > x) - (self.exact < x)
        if x <= self.lo:
            return 1
        if x >= self.hi:
            return -1
        if self.poly.evaluate(x) == 0:
            self.exact = x
            return 0
        return self.split_at(x)

    def _equals_overlapping(self, other) -> bool:
        h = poly_gcd(self.poly, other.poly)
        if h.degree() < 1:
            return False
        a = max(self.lo, other.lo)
        b = min(self.hi, other.hi)
        if a >= b:
            return False
        # a and b are non-root endpoints of one of the two defining
        # polynomials, hence never roots of their gcd
        chain = sturm_chain(h)
        return count_roots_halfopen(chain, a, b) >= 1

    def __repr__(self):
        if self.exact is not None:
            return f"RealRoot({self.exact})"
        return f"RealRoot(({self.lo}, {self.hi}))"


def isolate_real_roots(p: UniPoly):
    """Isolate the real roots of a square-free polynomial, ascending.

    Returns a list of RealRoot.  Rational roots are reconstructed exactly.
    """
    p = p.trimmed()
    if p.degree() <= 0:
        return []
    if p.degree() == 1:
        return [RealRoot.from_rational(-p.coeffs[0] / p.coeffs[1])]
    chain = sturm_chain(p)
    bound = cauchy_bound(p)
    roots = []

    def recurse(a, b, count):
        if count == 0:
            return
        if count == 1:
            roots.append(RealRoot(p, lo=a, hi=b))
            return
        mid = (a + b) / 2
        if p.evaluate(mid) == 0:
            # exact root found mid-bisection: carve a pivot gap around it
            roots.append(("exact", mid))
            eps = (b - a) / 4
            while True:
                left, right = mid - eps, mid + eps
                if (
                    p.evaluate(left) != 0
                    and p.evaluate(right) != 0
                    and count_roots_halfopen(chain, left, right) == 1
                ):
                    break
                eps /= 2
            recurse(a, left, count_roots_halfopen(chain, a, left))
            recurse(right, b, count_roots_halfopen(chain, right, b))
            return
        recurse(a, mid, count_roots_halfopen(chain, a, mid))
        recurse(mid, b, count_roots_halfopen(chain, mid, b))

    total = count_roots_halfopen(chain, -bound, bound)
    recurse(-bound, bound, total)
    out = []
    for r in roots:
        if isinstance(r, tuple):
            out.append(RealRoot(p, exact=r[1]))
        else:
            r.try_rational()
            out.append(r)
    out.sort(key=cmp_to_key(lambda x, y: x.compare(y)))
    return out


# -- root profiles -----------------------------------------------------


@dataclass
class RootProfile:
    """Exactly isolated real roots with multiplicities plus counts."""

    real_roots: list  # list of (RealRoot, multiplicity), ascending
    n_positive: int
    n_negative: int
    n_zero: int
    n_nonreal: int
    degree_drop: int

    def n_real(self) -> int:
        return self.n_positive + self.n_negative + self.n_zero

    def roots_with_multiplicity(self):
        out = []
        for root, mult in self.real_roots:
            out.extend([root] * mult)
        return out


def root_profile(p: UniPoly) -> RootProfile:
    """Exact real-root isolation with multiplicities.

    Degree drop ("roots at infinity") is reported separately and never
    counts toward the real/non-real tallies.
    """
    if p.is_zero():
        raise ZeroPolynomial("root_profile of the zero polynomial")
    drop = p.degree_drop()
    q = p.trimmed()
    v = q.valuation()
    if v:
        q = UniPoly(q.coeffs[v:])
    entries = []  # (RealRoot, mult)
    for factor, mult in yun_decomposition(q):
        for root in isolate_real_roots(factor):
            entries.append((root, mult))
    if v:
        entries.append((RealRoot.from_rational(0), v))
    entries.sort(key=cmp_to_key(lambda a, b: a[0].compare(b[0])))
    n_pos = sum(m for r, m in entries if r.sign() > 0)
    n_neg = sum(m for r, m in entries if r.sign() < 0)
    n_zero = v
    n_real = n_pos + n_neg + n_zero
    return RootProfile(
        real_roots=entries,
        n_positive=n_pos,
        n_negative=n_neg,
        n_zero=n_zero,
        n_nonreal=max(q.degree() + v, 0) - n_real if not p.is_zero() else 0,
        degree_drop=drop,
    )


def is_real_rooted(p: UniPoly) -> bool:
    """True iff every finite root is real (degree drop is forgiven)."""
    return root_profile(p).n_nonreal == 0


def same_sign_count(p: UniPoly, k: int) -> bool:
    """True iff at least k roots are >= 0 or at least k roots are <= 0.

    Zero roots count toward either side (weak-inequality convention).
    Degree drop is excluded.  Raises NotRealRooted on non-real input.
    """
    prof = root_profile(p)
    if prof.n_nonreal:
        raise NotRealRooted("same_sign_count requires a real-rooted polynomial")
    return prof.n_positive + prof.n_zero >= k or prof.n_negative + prof.n_zero >= k


# -- resultants and discriminants ---------------------------------------


def _prem(a, b):
    """Pseudo-remainder lc(b)^(da-db+1) * a mod b of integer coefficient
    lists (ascending degree)."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[db]
    r = list(a)
    e = da - db + 1
    while True:
        dr = len(r) - 1
        while dr >= 0 and r[dr] == 0:
            dr -= 1
        if dr < db:
            break
        lcr = r[dr]
        r = [lb * c for c in r]
        for i in range(db + 1):
            r[dr - db + i] -= lcr * b[i]
        e -= 1
    scale = lb**e if e > 0 else 1
    r = [scale * c for c in r]
    return _int_trim(r)


def _int_trim(c):
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _subresultant_resultant_int(A, B):
    """Resultant of integer polynomials via the subresultant PRS
    (fraction-free pseudo-division with the g/h divisor bookkeeping)."""
    A, B = _int_trim(A), _int_trim(B)
    if A == [0] or B == [0]:
        return 0
    if len(A) == 1:
        return A[0] ** (len(B) - 1)
    if len(B) == 1:
        return B[0] ** (len(A) - 1)
    s = 1
    if len(A) < len(B):
        if ((len(A) - 1) * (len(B) - 1)) % 2 == 1:
            s = -s
        A, B = B, A
    g, h = 1, 1
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if dA % 2 == 1 and dB % 2 == 1:
            s = -s
        R = _prem(A, B)
        A = B
        if R == [0]:
            return 0
        div = g * h**delta
        B = [c // div for c in R]
        g = A[-1]
        if delta > 0:
            h = g**delta // h ** (delta - 1)
        if len(B) == 1:
            dA = len(A) - 1
            return s * (B[0] ** dA // h ** (dA - 1))


def resultant(p: UniPoly, q: UniPoly):
    """Res(p, q) over Q, exact, at the actual degrees."""
    p, q = p.trimmed(), q.trimmed()
    if p.is_zero() or q.is_zero():
        return QZERO
    from math import lcm

    dp = 1
    for c in p.coeffs:
        dp = lcm(dp, int(c.denominator))
    dq = 1
    for c in q.coeffs:
        dq = lcm(dq, int(c.denominator))
    A = [int(c.numerator) * (dp // int(c.denominator)) for c in p.coeffs]
    B = [int(c.numerator) * (dq // int(c.denominator)) for c in q.coeffs]
    r = _subresultant_resultant_int(A, B)
    return Q(r) / (Q(dp) ** q.degree() * Q(dq) ** p.degree())


def discriminant(p: UniPoly):
    """disc(p) at the actual degree, via the subresultant resultant."""
    m = p.degree()
    if m <= 0:
        raise DegreeTooLow("discriminant needs actual degree >= 1")
    if m == 1:
        return QONE
    res = resultant(p, p.derivative())
    sign = -1 if (m * (m - 1) // 2) % 2 else 1
    return sign * res / p.leading()


# -- the diagonal operators D and delta_n --------------------------------


def dee(p: UniPoly) -> UniPoly:
    """Homogenize to degree n, differentiate in the auxiliary variable,
    evaluate at 1: coefficientwise t^k -> (n-k) t^k."""
    n = p.ambient_degree
    return UniPoly([(n - j) * c for j, c in enumerate(p.coeffs)], n)


def delta_n(p: UniPoly) -> "ZeroSumPoly":
    """The diagonal map t^{n-k} -> -(k-1) t^{n-k}; equals p - dee(p)."""
    n = p.ambient_degree
    coeffs = [(1 + j - n) * c for j, c in enumerate(p.coeffs)]
    return ZeroSumPoly(UniPoly(coeffs, n))


@dataclass(frozen=True)
class ZeroSumPoly:
    """A polynomial in R[t]_{n,0}: vanishing t^{n-1} coefficient."""

    inner: UniPoly

    def __post_init__(self):
        n = self.inner.ambient_degree
        if n >= 1 and self.inner.coeffs[n - 1] != 0:
            raise DegreeMismatch("coefficient of t^{n-1} must vanish")

    @property
    def ambient_degree(self) -> int:
        return self.inner.ambient_degree


# -- interlacing ---------------------------------------------------------


def interlaces(q: UniPoly, p: UniPoly) -> bool:
    """True iff the roots of q interleave those of p:
    r_1 <= s_1 <= r_2 <= ... <= s_{m-1} <= r_m (with multiplicity).

    q must be real rooted of actual degree exactly deg(p) - 1.
    """
    prof_p = root_profile(p)
    if prof_p.n_nonreal:
        raise NotRealRooted("p is not real rooted")
    prof_q = root_profile(q)
    if prof_q.n_nonreal:
        raise NotRealRooted("q is not real rooted")
    if q.degree() != p.degree() - 1:
        raise DegreeMismatch(
            f"deg q = {q.degree()} but deg p - 1 = {p.degree() - 1}"
        )
    r = prof_p.roots_with_multiplicity()
    s = prof_q.roots_with_multiplicity()
    for i, si in enumerate(s):
        if r[i].compare(si) > 0:
            return False
        if si.compare(r[i + 1]) > 0:
            return False
    return True
