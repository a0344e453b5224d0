import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercheck.errors import DegreeMismatch, NotRealRooted, ZeroPolynomial
from hypercheck.rationals import Q, qsign
from hypercheck.unipoly import (
    RealRoot,
    UniPoly,
    ZeroSumPoly,
    cauchy_bound,
    count_roots_halfopen,
    dee,
    delta_n,
    discriminant,
    divmod_poly,
    interlaces,
    is_real_rooted,
    isolate_real_roots,
    poly_gcd,
    resultant,
    root_profile,
    same_sign_count,
    squarefree_part,
    sturm_chain,
    yun_decomposition,
)

small_q = st.fractions(
    min_value=-9, max_value=9, max_denominator=4
).map(lambda f: Q(f.numerator, f.denominator))


def rand_poly(rng, degree, lo=-9, hi=9):
    coeffs = [Q(rng.randint(lo, hi), rng.randint(1, 3)) for _ in range(degree + 1)]
    if coeffs[-1] == 0:
        coeffs[-1] = Q(1)
    return UniPoly(coeffs)


# -- structure ----------------------------------------------------------


def test_ambient_degree_and_drop():
    p = UniPoly([1, 2], 4)
    assert p.ambient_degree == 4 and p.degree() == 1 and p.degree_drop() == 3
    with pytest.raises(DegreeMismatch):
        UniPoly([1, 2, 3], 1)


def test_shift_dilate_reverse():
    p = UniPoly([1, 2, 1])  # (t+1)^2
    assert p.shift(Q(1)) == UniPoly([4, 4, 1])  # (t+2)^2
    assert p.dilate(Q(2)) == UniPoly([1, 4, 4])
    assert UniPoly([1, 2, 3]).reversed_coeffs() == UniPoly([3, 2, 1])


def test_from_roots_and_evaluate():
    p = UniPoly.from_roots([1, -2, Q(1, 2)])
    for r in (1, -2, Q(1, 2)):
        assert p.evaluate(r) == 0
    assert p.leading() == 1


def test_divmod_exact():
    rng = random.Random(0)
    for _ in range(50):
        a = rand_poly(rng, rng.randint(0, 6))
        b = rand_poly(rng, rng.randint(0, 4))
        q, r = divmod_poly(a, b)
        assert (q * b + r).trimmed() == a.trimmed()
        assert r.degree() < b.degree()


def test_gcd_and_squarefree():
    p = UniPoly.from_roots([1, 1, 2])
    dp = p.derivative()
    g = poly_gcd(p, dp)
    assert g.degree() == 1 and g.evaluate(1) == 0
    assert squarefree_part(p) == UniPoly.from_roots([1, 2])


def test_yun_decomposition_multiplicities():
    p = UniPoly.from_roots([1, 1, 2, 2, 2, -3])
    parts = dict()
    for factor, mult in yun_decomposition(p):
        parts[mult] = factor
    assert parts[1].evaluate(-3) == 0
    assert parts[2].evaluate(1) == 0
    assert parts[3].evaluate(2) == 0


# -- Sturm and isolation ---------------------------------------------------


def test_sturm_counts():
    p = UniPoly.from_roots([-1, 0, 2])
    chain = sturm_chain(p)
    b = cauchy_bound(p)
    assert count_roots_halfopen(chain, -b, b) == 3
    assert count_roots_halfopen(chain, 0, b) == 1  # (0, b]: only 2
    assert count_roots_halfopen(chain, -b, 0) == 2  # (-b, 0]: -1 and 0


def test_isolate_rational_roots_exactly():
    p = UniPoly.from_roots([Q(1, 3), Q(-7, 2), 5])
    roots = isolate_real_roots(p)
    assert [r.exact for r in roots] == [Q(-7, 2), Q(1, 3), Q(5)]


def test_isolate_irrational_roots():
    p = UniPoly([-2, 0, 1])  # t^2 - 2
    roots = isolate_real_roots(p)
    assert len(roots) == 2
    for r in roots:
        assert not r.is_exact()
        lo, hi = r.interval()
        assert qsign(p.evaluate(lo)) != qsign(p.evaluate(hi))
    assert roots[0].sign() == -1 and roots[1].sign() == 1


def test_real_root_compare_equal_across_polynomials():
    a = isolate_real_roots(UniPoly([-2, 0, 1]))[1]  # sqrt(2)
    b = isolate_real_roots(UniPoly([-4, 0, 0, 0, 1]))[1]  # sqrt(2) as quartic root
    assert a.compare(b) == 0
    c = isolate_real_roots(UniPoly([-3, 0, 1]))[1]  # sqrt(3)
    assert a.compare(c) == -1 and c.compare(a) == 1


def test_real_root_vs_rational():
    r = isolate_real_roots(UniPoly([-2, 0, 1]))[1]
    assert r._compare_with_rational(Q(1)) == 1
    assert r._compare_with_rational(Q(2)) == -1
    exact = RealRoot.from_rational(Q(3, 2))
    assert exact.compare(RealRoot.from_rational(Q(3, 2))) == 0


@settings(max_examples=60, deadline=None)
@given(st.lists(small_q, min_size=1, max_size=6))
def test_isolation_finds_all_planted_roots(roots):
    p = UniPoly.from_roots(roots)
    prof = root_profile(p)
    distinct = sorted(set(roots))
    assert len(prof.real_roots) == len(distinct)
    for (found, mult), planted in zip(prof.real_roots, distinct):
        assert found.is_exact() and found.exact == planted
        assert mult == roots.count(planted)


# -- root profiles -----------------------------------------------------------


def test_root_profile_counts():
    p = UniPoly([1, 0, 1])  # t^2 + 1
    prof = root_profile(p)
    assert prof.n_nonreal == 2 and prof.n_real() == 0
    p = UniPoly.from_roots([1, 1, 2, 2, -6])
    prof = root_profile(p)
    assert prof.n_positive == 4 and prof.n_negative == 1 and prof.n_nonreal == 0
    assert [(r.exact, m) for r, m in prof.real_roots] == [
        (Q(-6), 1),
        (Q(1), 2),
        (Q(2), 2),
    ]


def test_root_profile_zero_roots_and_drop():
    p = UniPoly([0, 0, 1], 5)  # t^2 with ambient degree 5
    prof = root_profile(p)
    assert prof.n_zero == 2 and prof.degree_drop == 3 and prof.n_nonreal == 0
    with pytest.raises(ZeroPolynomial):
        root_profile(UniPoly([0], 3))


def test_is_real_rooted_forgives_degree_drop():
    assert is_real_rooted(UniPoly([1, 1], 4))
    assert not is_real_rooted(UniPoly([1, 0, 1], 4))


def test_same_sign_count():
    p = UniPoly.from_roots([0, 0, 3, -1])
    assert same_sign_count(p, 3)  # zeros count toward either side
    assert not same_sign_count(p, 4)
    with pytest.raises(NotRealRooted):
        same_sign_count(UniPoly([1, 0, 1]), 1)


def _real_count_by_closed_form(p):
    """Independent oracle: number of real roots (with multiplicity is not
    needed; distinct-ness assumed via nonzero discriminant) for degrees
    up to 4 by classical discriminant classification."""
    d = p.degree()
    c = p.coeffs
    if d == 1:
        return 1
    if d == 2:
        disc = c[1] * c[1] - 4 * c[2] * c[0]
        return 2 if disc > 0 else 0
    if d == 3:
        return 3 if discriminant(p) > 0 else 1
    if d == 4:
        disc = discriminant(p)
        if disc < 0:
            return 2
        a, b, cc, dd, e = c[4], c[3], c[2], c[1], c[0]
        P = 8 * a * cc - 3 * b * b
        D = (
            64 * a**3 * e
            - 16 * a**2 * cc**2
            + 16 * a * b**2 * cc
            - 16 * a**2 * b * dd
            - 3 * b**4
        )
        return 4 if (P < 0 and D < 0) else 0
    raise AssertionError


def test_real_count_against_closed_forms():
    rng = random.Random(1)
    checked = 0
    while checked < 300:
        p = rand_poly(rng, rng.randint(1, 4))
        if p.degree() < 1:
            continue
        if p.degree() >= 2 and discriminant(p) == 0:
            continue
        prof = root_profile(p)
        assert prof.n_real() == _real_count_by_closed_form(p), p
        checked += 1


# -- resultants and discriminants -------------------------------------------


def _euclid_resultant(a, b):
    """Independent oracle: resultant by the Euclidean recursion over Q."""
    a, b = a.trimmed(), b.trimmed()
    da, db = a.degree(), b.degree()
    if da < 0 or db < 0:
        return Q(0)
    if db == 0:
        return b.coeffs[0] ** da
    if da < db:
        sign = Q(-1) ** (da * db)
        return sign * _euclid_resultant(b, a)
    _, r = divmod_poly(a, b)
    r = r.trimmed()
    if r.is_zero():
        return Q(0)
    lead = b.leading()
    return lead ** (da - r.degree()) * Q(-1) ** (da * db) * _euclid_resultant(b, r)


def test_resultant_against_euclid_oracle():
    rng = random.Random(2)
    for _ in range(150):
        a = rand_poly(rng, rng.randint(1, 5))
        b = rand_poly(rng, rng.randint(1, 5))
        assert resultant(a, b) == _euclid_resultant(a, b)


def test_resultant_of_shared_root_vanishes():
    a = UniPoly.from_roots([1, 2, 3])
    b = UniPoly.from_roots([3, 5])
    assert resultant(a, b) == 0


def test_discriminant_closed_forms():
    rng = random.Random(3)
    for _ in range(60):
        b, c = Q(rng.randint(-9, 9)), Q(rng.randint(-9, 9))
        assert discriminant(UniPoly([c, b, 1])) == b * b - 4 * c
        p, q = Q(rng.randint(-9, 9)), Q(rng.randint(-9, 9))
        assert discriminant(UniPoly([q, p, 0, 1])) == -4 * p**3 - 27 * q * q


def test_discriminant_detects_multiple_roots():
    assert discriminant(UniPoly.from_roots([2, 2, 5])) == 0
    assert discriminant(UniPoly.from_roots([1, 2, 3])) != 0


# -- diagonal operators ------------------------------------------------------


def test_dee_and_delta_definitions():
    p = UniPoly([Q(4), Q(3), Q(2), Q(1)])  # ambient 3
    assert dee(p) == UniPoly([12, 6, 2, 0], 3)
    d = delta_n(p)
    assert d.inner == UniPoly([-8, -3, 0, 1], 3)


def test_delta_is_p_minus_dee():
    rng = random.Random(4)
    for _ in range(50):
        p = rand_poly(rng, rng.randint(1, 7))
        assert delta_n(p).inner == (p - dee(p))


def test_zero_sum_poly_validation():
    ZeroSumPoly(UniPoly([2, -3, 0, 1], 3))
    with pytest.raises(DegreeMismatch):
        ZeroSumPoly(UniPoly([0, 0, 1, 1], 3))


# -- interlacing --------------------------------------------------------------


def test_interlaces_examples():
    p = UniPoly.from_roots([0, 2])
    q = UniPoly.from_roots([1])
    assert interlaces(q, p)
    assert not interlaces(UniPoly.from_roots([3]), p)
    with pytest.raises(DegreeMismatch):
        interlaces(UniPoly.from_roots([1, 2]), p)


def test_derivative_interlaces():
    rng = random.Random(5)
    for _ in range(40):
        roots = [Q(rng.randint(-9, 9)) for _ in range(rng.randint(2, 6))]
        p = UniPoly.from_roots(roots)
        assert interlaces(p.derivative(), p)


def test_interlaces_with_multiplicities():
    p = UniPoly.from_roots([1, 1, 2])
    q = UniPoly.from_roots([1, Q(3, 2)])
    assert interlaces(q, p)
    assert not interlaces(UniPoly.from_roots([Q(3, 2), Q(3, 2)]), p)
