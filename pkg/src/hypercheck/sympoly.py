"""Symmetric polynomials in the elementary-symmetric-mean basis.

Hook-shaped polynomials sum(a_i * m1^(d-i) * m_i) are stored over the
means m_k = e_k / binom(n, k).  In that basis the restriction to a line
x + t*1 expands binomially with coefficients independent of the number
of variables, which is what makes variable lifting a no-op on the
coefficient vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DegreeTooHigh, DegreeTooLow, ShrinkNotAllowed, ZeroPolynomial
from .rationals import Q, QONE, QZERO, to_q
from .unipoly import UniPoly


@dataclass(frozen=True)
class HookPoly:
    """Hook-shaped symmetric polynomial: sum_i a[i-1] * m1^(d-i) * m_i
    in n variables, coefficients over elementary symmetric means."""

    n: int
    d: int
    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(to_q(c) for c in self.a))
        if not (1 <= self.d <= self.n):
            raise DegreeTooHigh(f"need 1 <= d <= n, got d={self.d}, n={self.n}")
        if len(self.a) != self.d:
            raise DegreeTooHigh(f"expected {self.d} coefficients, got {len(self.a)}")
        if all(c == 0 for c in self.a):
            raise ZeroPolynomial("hook polynomial must be nonzero")

    @staticmethod
    def from_e_basis(n: int, d: int, a_e) -> "HookPoly":
        """Convert coefficients over e_1^(d-i) e_i to the mean basis."""
        a = [to_q(c) * Q(n) ** (d - i) * comb(n, i) for i, c in enumerate(a_e, start=1)]
        return HookPoly(n, d, tuple(a))

    def to_e_basis(self):
        return tuple(
            c / (Q(self.n) ** (self.d - i) * comb(self.n, i))
            for i, c in enumerate(self.a, start=1)
        )

    def scaled(self, c) -> "HookPoly":
        c = to_q(c)
        return HookPoly(self.n, self.d, tuple(ai * c for ai in self.a))

    def proportional_to(self, other: "HookPoly") -> bool:
        if (self.n, self.d) != (other.n, other.d):
            return False
        ratio = None
        for x, y in zip(self.a, other.a):
            if (x == 0) != (y == 0):
                return False
            if x != 0:
                r = x / y
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    return False
        return True


@dataclass(frozen=True)
class SymPoint:
    """A point of R^n with exact rational coordinates."""

    x: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(to_q(c) for c in self.x))

    def __len__(self):
        return len(self.x)


def elem_means(x, d: int):
    """(m_0(x)=1, m_1(x), ..., m_d(x)) by the product recurrence on the
    elementary symmetric polynomials followed by binomial normalization."""
    coords = x.x if isinstance(x, SymPoint) else [to_q(c) for c in x]
    n = len(coords)
    if d > n:
        raise DegreeTooHigh(f"d={d} exceeds variable count n={n}")
    e = [QONE] + [QZERO] * d
    for c in coords:
        for k in range(d, 0, -1):
            e[k] += c * e[k - 1]
    return tuple(e[k] / comb(n, k) for k in range(d + 1))


def eval_hook(p: HookPoly, x) -> Q:
    m = elem_means(x, p.d)
    acc = QZERO
    for i, a in enumerate(p.a, start=1):
        if a != 0:
            acc += a * m[1] ** (p.d - i) * m[i]
    return acc


def restrict_line(p: HookPoly, x) -> UniPoly:
    """The univariate polynomial t -> p(x + t*1), expanded exactly.

    Uses m_k(x + t*1) = sum_i binom(k, i) m_i(x) t^(k-i) factor by factor.
    """
    m = elem_means(x, p.d)
    # m1(x + t) = m1 + t
    m1_line = UniPoly([m[1], QONE])
    powers = [UniPoly([QONE])]
    for _ in range(p.d - 1):
        powers.append(powers[-1] * m1_line)
    out = UniPoly([QZERO], p.d)
    for i, a in enumerate(p.a, start=1):
        if a == 0:
            continue
        mk_line = UniPoly([comb(i, j) * m[j] for j in range(i, -1, -1)])
        out = out + (powers[p.d - i] * mk_line) * a
    return out.with_ambient(p.d)


def dir_derivative_one(p: HookPoly) -> HookPoly:
    """Directional derivative along the all-ones vector, as a hook
    polynomial of degree d-1.

    Derivation: D_1 m_k = k * m_{k-1} (n-independent over means), so the
    product rule folds back into the hook basis; the i=1 second term
    lands on index 1 because m_0 = 1.  The closed form is checked against
    the line-restriction contract in the tests.
    """
    if p.d < 2:
        raise DegreeTooLow("directional derivative of a linear hook polynomial")
    d = p.d
    b = [QZERO] * (d - 1)
    for i, a in enumerate(p.a, start=1):
        if a == 0:
            continue
        if i <= d - 1:
            b[i - 1] += a * (d - i)
        if i >= 2:
            b[i - 2] += a * i
        else:
            b[0] += a
    return HookPoly(p.n, d - 1, tuple(b))


class _Trunc2:
    """Bivariate polynomials truncated to degree <= 1 in s and in t:
    c00 + c10*s + c01*t + c11*s*t.  Enough for one mixed derivative."""

    __slots__ = ("c",)

    def __init__(self, c00=QZERO, c10=QZERO, c01=QZERO, c11=QZERO):
        self.c = (c00, c10, c01, c11)

    def __add__(self, other):
        a, b = self.c, other.c
        return _Trunc2(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])

    def __mul__(self, other):
        a, b = self.c, other.c
        return _Trunc2(
            a[0] * b[0],
            a[0] * b[1] + a[1] * b[0],
            a[0] * b[2] + a[2] * b[0],
            a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0],
        )

    def scale(self, q):
        a = self.c
        return _Trunc2(a[0] * q, a[1] * q, a[2] * q, a[3] * q)

    def pow(self, k):
        out = _Trunc2(QONE)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out


def mixed_derivative_eval(p: HookPoly, u, w, x) -> Q:
    """Exact value of D_u p * D_w p - p * D_{uw} p at x.

    Evaluated through the bivariate restriction (s, t) -> p(x + s*u + t*w)
    truncated past first order in each direction.
    """
    ux = u.x if isinstance(u, SymPoint) else [to_q(c) for c in u]
    wx = w.x if isinstance(w, SymPoint) else [to_q(c) for c in w]
    xx = x.x if isinstance(x, SymPoint) else [to_q(c) for c in x]
    n, d = p.n, p.d
    e = [_Trunc2(QONE)] + [_Trunc2() for _ in range(d)]
    for xi, ui, wi in zip(xx, ux, wx):
        lin = _Trunc2(xi, ui, wi)
        for k in range(d, 0, -1):
            e[k] = e[k] + lin * e[k - 1]
    m = [e[k].scale(Q(1, comb(n, k))) for k in range(d + 1)]
    val = _Trunc2()
    for i, a in enumerate(p.a, start=1):
        if a != 0:
            val = val + (m[1].pow(d - i) * m[i]).scale(a)
    c00, c10, c01, c11 = val.c
    return c10 * c01 - c00 * c11


def lift_variables(p: HookPoly, m: int) -> HookPoly:
    """Reinterpret the same mean-basis coefficients in m >= n variables."""
    if m < p.n:
        raise ShrinkNotAllowed(f"cannot shrink from {p.n} to {m} variables")
    return HookPoly(m, p.d, p.a)
