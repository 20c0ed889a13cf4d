import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logbundle.geometry import (
    Arrangement,
    BinForm,
    HomPoly,
    LinearForm,
    ProjPoint,
    binform_gcd,
    binform_rational_roots,
    euler_t,
    intersection,
    lattice,
    lattice_isomorphic,
    line_through,
    mat3_inverse,
    monomials,
    partials,
    product_form,
    restrict_to_line,
    substitute,
    substitute_arrangement,
    transport_point,
)

F = Fraction
X, Y, Z = (HomPoly.variable(i) for i in range(3))


def arrangement(*triples):
    return Arrangement(LinearForm(*t) for t in triples)


TRIANGLE = arrangement((1, 0, 0), (0, 1, 0), (0, 0, 1))
B3 = arrangement(
    (1, 0, 0), (0, 1, 0), (0, 0, 1),
    (1, -1, 0), (1, 1, 0), (1, 0, -1), (1, 0, 1), (0, 1, -1), (0, 1, 1),
)


def test_partials_product():
    f = X * Y * Z
    assert partials(f) == (Y * Z, X * Z, X * Y)


def test_partials_power():
    f = X * X * X
    fx, fy, fz = partials(f)
    assert fx == (X * X).scale(3)
    assert fy.is_zero() and fz.is_zero()


def test_partials_mixed():
    f = X * X + Y * Z
    assert partials(f) == (X.scale(2), Z, Y)


def test_restrict_simple():
    f = X * X + Y * Z
    assert restrict_to_line(f, LinearForm(0, 0, 1)) == BinForm(2, (1, 0, 0))


def test_restrict_line_in_zero_locus():
    f = X - Y
    assert restrict_to_line(f, LinearForm(1, -1, 0)).is_zero()


def test_restrict_vanishes_at_expected_parameter():
    # x+y+z restricted to x+y-2z: linear binary form cutting out (1:-1:0)
    L = LinearForm(1, 1, -2)
    r = restrict_to_line(X + Y + Z, L)
    assert r.degree == 1 and not r.is_zero()
    s, t = L.parameter_of(ProjPoint(1, -1, 0))
    assert r.evaluate(s, t) == 0


def test_intersection_axes():
    assert intersection(LinearForm(1, 0, 0), LinearForm(0, 1, 0)) == ProjPoint(0, 0, 1)


def test_intersection_relation_entries():
    p = intersection(LinearForm(-4, -5, 1), LinearForm(5, 13, -8))
    assert p == ProjPoint(-1, 1, 1)


def test_intersection_pencil_member():
    p = intersection(LinearForm(1, 1, 1), LinearForm(1, 1, -2))
    assert p == ProjPoint(1, -1, 0)


def test_intersection_coincident_rejected():
    with pytest.raises(ValueError):
        intersection(LinearForm(1, 0, 0), LinearForm(2, 0, 0))


def test_lattice_triangle():
    lat = lattice(TRIANGLE)
    assert lat.multiplicity_multiset() == [2, 2, 2]


def test_lattice_pencil():
    pencil = arrangement((1, 0, 0), (0, 1, 0), (1, 1, 0), (1, -1, 0))
    lat = lattice(pencil)
    assert lat.multiplicity_multiset() == [4]
    assert lat.points[0].point == ProjPoint(0, 0, 1)


def test_lattice_b3_tjurina_sum():
    lat = lattice(B3)
    assert sum((p.multiplicity - 1) ** 2 for p in lat.points) == 49


def test_euler_t_triangle():
    assert euler_t(TRIANGLE, LinearForm(0, 0, 1)) == 0


def test_euler_t_b3_extension_generic_member():
    # every line x+ty-(1+t)z passes through the triple point (1:1:1);
    # t=2 meets the rest of B3 in double points only
    ext = B3.with_line(LinearForm(1, 2, -3))
    assert euler_t(ext, LinearForm(1, 2, -3)) == 2


def test_euler_t_b3_extension_special_member():
    # t=1 additionally passes through the double point (1:-1:0), so its
    # count is 3, which is why this parameter drops out of the nearly
    # free sweep window
    ext = B3.with_line(LinearForm(1, 1, -2))
    assert euler_t(ext, LinearForm(1, 1, -2)) == 3


def test_euler_t_family_line():
    # 8 lines: z, four x-direction lines, two y-direction lines, diagonal
    c0_34 = arrangement(
        (0, 0, 1),
        (1, 0, 0), (1, 0, -1), (1, 0, -2), (1, 0, -3),
        (0, 1, 0), (0, 1, -1),
        (1, -1, 0),
    )
    assert euler_t(c0_34, LinearForm(1, 0, 0)) == 4


def test_euler_t_requires_membership():
    with pytest.raises(ValueError):
        euler_t(TRIANGLE, LinearForm(1, 1, 1))


def test_lattice_isomorphic_triangle_vs_pencil():
    pencil = arrangement((1, 0, 0), (0, 1, 0), (1, 1, 0))
    ok, witness = lattice_isomorphic(TRIANGLE, pencil)
    assert not ok and witness is None


def test_lattice_isomorphic_under_coordinate_change():
    change = [[1, 2, 0], [0, 1, 1], [1, 0, 1]]
    moved = substitute_arrangement(B3, change)
    ok, witness = lattice_isomorphic(B3, moved)
    assert ok
    assert sorted(witness) == list(range(len(B3)))


def test_product_form_triangle():
    assert product_form(TRIANGLE) == X * Y * Z


def test_product_form_conic():
    arr = arrangement((1, 0, -1), (1, 0, 1))
    assert product_form(arr) == X * X - Z * Z


def test_duplicate_line_rejected():
    with pytest.raises(ValueError):
        arrangement((1, 0, 0), (2, 0, 0))


def test_line_normalization():
    assert LinearForm(F(-1, 2), F(1, 3), 0) == LinearForm(3, -2, 0)
    assert LinearForm(0, -4, -6).coeffs == (0, 2, 3)


def test_line_through_points():
    L = line_through(ProjPoint(1, 0, 1), ProjPoint(0, 1, 1))
    assert L.contains(ProjPoint(1, 0, 1)) and L.contains(ProjPoint(0, 1, 1))


def test_binform_gcd():
    s_plus_t = BinForm(1, (1, 1))
    s_minus_t = BinForm(1, (1, -1))
    f = s_plus_t * s_plus_t * s_minus_t
    g = s_plus_t * BinForm(1, (1, 0))
    assert binform_gcd(f, g) == s_plus_t.primitive()


def test_binform_roots():
    s, t = BinForm(1, (1, 0)), BinForm(1, (0, 1))
    two_s_minus_3t = BinForm(1, (2, -3))
    form = s * t * t * two_s_minus_3t
    roots = dict(binform_rational_roots(form))
    assert roots == {(1, 0): 2, (0, 1): 1, (3, 2): 1}


def test_substitute_matches_evaluation():
    rng = random.Random(7)
    f = X * X * Y + Y * Y * Z - Z * Z * X
    A = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
    A[0][0] += 1 if not A[0][0] else 0
    try:
        mat3_inverse(A)
    except ValueError:
        A = [[1, 1, 0], [0, 1, 0], [2, 0, 1]]
    g = substitute(f, A)
    for w in [(1, 2, 3), (0, 1, -1), (5, -2, 7)]:
        aw = tuple(sum(F(A[i][j]) * w[j] for j in range(3)) for i in range(3))
        assert g.evaluate(w) == f.evaluate(aw)


def test_transport_point_follows_zero_locus():
    A = [[1, 1, 0], [0, 1, 0], [2, 0, 1]]
    L = LinearForm(1, 2, -5)
    p = ProjPoint(1, 2, 1)
    assert L.contains(p)
    moved = substitute(L.as_poly(), A)
    q = transport_point(p, A)
    assert moved.evaluate(q.coords) == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9),
       st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
def test_intersection_on_both_lines(a1, b1, c1, a2, b2, c2):
    if (a1, b1, c1) == (0, 0, 0) or (a2, b2, c2) == (0, 0, 0):
        return
    l1, l2 = LinearForm(a1, b1, c1), LinearForm(a2, b2, c2)
    if l1 == l2:
        return
    p = intersection(l1, l2)
    assert l1.contains(p) and l2.contains(p)


def _random_arrangement(rng, n):
    lines = []
    seen = set()
    while len(lines) < n:
        t = (rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(-4, 4))
        if t == (0, 0, 0):
            continue
        L = LinearForm(*t)
        if L not in seen:
            seen.add(L)
            lines.append(L)
    return Arrangement(lines)


def test_line_incidence_identities():
    rng = random.Random(11)
    for _ in range(8):
        arr = _random_arrangement(rng, rng.randint(3, 9))
        lat = lattice(arr)
        n_lines = len(arr)
        for idx, L in enumerate(arr):
            on_l = lat.on_line(idx)
            assert sum(p.multiplicity - 1 for p in on_l) == n_lines - 1
            assert euler_t(arr, L) == sum(p.multiplicity - 2 for p in on_l)


def test_restrict_is_multiplicative():
    rng = random.Random(3)
    for _ in range(6):
        L = _random_arrangement(rng, 1).lines[0]
        def rand_poly(deg):
            terms = {}
            for e in monomials(deg):
                c = rng.randint(-3, 3)
                if c:
                    terms[e] = c
            return HomPoly(deg, terms)
        f, g = rand_poly(2), rand_poly(3)
        lhs = restrict_to_line(f * g, L)
        rhs = restrict_to_line(f, L) * restrict_to_line(g, L)
        assert lhs == rhs


def test_lattice_isomorphic_reflexive_symmetric():
    ok, w = lattice_isomorphic(B3, B3)
    assert ok and w == tuple(range(len(B3)))
    a = arrangement((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1))
    b = arrangement((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, -2))
    ok_ab, _ = lattice_isomorphic(a, b)
    ok_ba, _ = lattice_isomorphic(b, a)
    assert ok_ab == ok_ba
