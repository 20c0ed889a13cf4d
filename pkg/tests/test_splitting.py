from fractions import Fraction

import pytest

from logbundle.geometry import (
    Arrangement,
    BinForm,
    HomPoly,
    LinearForm,
    ProjPoint,
    product_form,
)
from logbundle.resolution import Presentation, classify, minimal_presentation
from logbundle.splitting import (
    MultiRestriction,
    SplitType,
    free_test_one_line,
    jump_report,
    kernel_split_on_line,
    multi_exponents,
    nf_test_c2_one,
    rule_split,
    split_on_line,
    ziegler,
)

X = HomPoly.variable(0)
Y = HomPoly.variable(1)
Z = HomPoly.variable(2)


def arr_of(*triples):
    return Arrangement(LinearForm(*t) for t in triples)


TRIANGLE = arr_of((1, 0, 0), (0, 1, 0), (0, 0, 1))
B3 = arr_of(
    (1, 0, 0), (0, 1, 0), (0, 0, 1),
    (1, -1, 0), (1, 1, 0), (1, 0, -1), (1, 0, 1), (0, 1, -1), (0, 1, 1),
)
EXLINE = arr_of(
    (1, 0, 0), (0, 1, 0), (0, 0, 1),
    (1, 0, -1), (1, 0, 1), (0, 1, -1), (0, 1, 1),
    (1, -1, 0), (1, -1, 2),
)


def nf_c2_one(r):
    """Abstract nearly free presentation with exponents (0, r+1), c2 = 1."""
    return Presentation(
        (0, r + 1, r + 1),
        ((Z ** (r + 2), X, Y),),
        (r + 2,),
    )


STABLE_EXC = Presentation((1, 2, 2), ((Z**3, X * X, Y * Y),), (4,))


def test_split_type_basics():
    s = SplitType(3, 5)
    assert s.gap == 2
    assert s == (3, 5)
    assert SplitType(4, 4).gap == 0


def test_split_on_line_free():
    p = minimal_presentation(product_form(B3))
    assert p.rel_degrees == ()
    for t in [(0, 0, 1), (1, 2, 5), (3, -1, 7)]:
        assert split_on_line(p, LinearForm(*t)) == (3, 5)


def test_split_on_line_exline_dichotomy():
    p = minimal_presentation(product_form(EXLINE))
    c = classify(product_form(EXLINE))
    assert (c.a, c.b) == (4, 5)
    assert c.jumping_point == ProjPoint(-1, 1, 1)
    # lines missing the jumping point restrict to (a, b-1)
    assert split_on_line(p, LinearForm(0, 0, 1)) == (4, 4)
    assert split_on_line(p, LinearForm(1, 0, 0)) == (4, 4)
    # lines through it restrict to (a-1, b)
    assert split_on_line(p, LinearForm(1, 0, 1)) == (3, 5)
    assert split_on_line(p, LinearForm(0, 1, -1)) == (3, 5)
    assert split_on_line(p, LinearForm(1, 1, 0)) == (3, 5)  # not in arrangement


def test_split_on_line_rejects_wrong_rank():
    bad = Presentation((1, 2), ((Z * Z, Z),), (3,))
    with pytest.raises(ValueError):
        split_on_line(bad, LinearForm(0, 0, 1))


def test_ziegler_triangle():
    mr = ziegler(TRIANGLE, LinearForm(0, 0, 1))
    assert mr.multiplicities() == [1, 1]
    assert multi_exponents(mr) == (1, 1)


def test_ziegler_b3():
    mr = ziegler(B3, LinearForm(0, 0, 1))
    assert mr.multiplicities() == [3, 3, 1, 1]
    assert mr.total() == len(B3) - 1
    assert multi_exponents(mr) == (3, 5)


def test_ziegler_requires_membership():
    with pytest.raises(ValueError):
        ziegler(TRIANGLE, LinearForm(1, 1, 1))


def point_forms(*params):
    """Binary forms vanishing at parameters (s0:t0)."""
    return [BinForm(1, (t0, -s0)) for s0, t0 in params]


def test_multi_exponents_pencil_point():
    L = LinearForm(0, 0, 1)
    mr = MultiRestriction(L, [(point_forms((1, 0))[0], 4)])
    assert multi_exponents(mr) == (0, 4)


def test_multi_exponents_dominant_point():
    # one point of multiplicity 4 plus three simple points
    L = LinearForm(0, 0, 1)
    forms = point_forms((1, 0), (0, 1), (1, 1), (1, -1))
    mr = MultiRestriction(L, list(zip(forms, (4, 1, 1, 1))))
    assert multi_exponents(mr) == (3, 4)


def test_multi_exponents_balanced():
    L = LinearForm(0, 0, 1)
    forms = point_forms((1, 0), (0, 1), (1, 1), (1, -1), (1, 2))
    mr = MultiRestriction(L, list(zip(forms, (2, 1, 1, 1, 1))))
    assert multi_exponents(mr) == (2, 4)


def test_multi_restriction_validation():
    L = LinearForm(0, 0, 1)
    f = point_forms((1, 0))[0]
    with pytest.raises(ValueError):
        MultiRestriction(L, [(f, 1), (f, 2)])
    with pytest.raises(ValueError):
        MultiRestriction(L, [(f, 0)])


def test_rule_split_cases():
    L = LinearForm(0, 0, 1)
    forms = point_forms((1, 0), (0, 1), (1, 1), (1, -1), (1, 2))
    dominant = MultiRestriction(L, list(zip(forms[:4], (4, 1, 1, 1))))
    assert rule_split(dominant, 8) == (3, 4)
    balanced = MultiRestriction(L, list(zip(forms, (2, 1, 1, 1, 1))))
    assert rule_split(balanced, 7) == (2, 4)
    open_case = MultiRestriction(L, list(zip(forms[:3], (3, 3, 1))))
    assert rule_split(open_case, 8) is None


def test_rule_matches_solver_on_b3():
    for L in B3:
        mr = ziegler(B3, L)
        ruled = rule_split(mr, len(B3))
        if ruled is not None:
            assert ruled == multi_exponents(mr)


def test_methods_agree_on_exline():
    p = minimal_presentation(product_form(EXLINE))
    for L in EXLINE:
        assert split_on_line(p, L) == multi_exponents(ziegler(EXLINE, L))


def test_methods_agree_on_triangle():
    p = minimal_presentation(product_form(TRIANGLE))
    for L in TRIANGLE:
        assert split_on_line(p, L) == multi_exponents(ziegler(TRIANGLE, L))


def test_stable_exceptional_splits():
    assert STABLE_EXC.chern() == (-1, 4)
    assert split_on_line(STABLE_EXC, LinearForm(1, 1, 1)) == (0, 1)
    assert split_on_line(STABLE_EXC, LinearForm(2, 3, 1)) == (0, 1)
    # lines through (0:0:1) jump by 1
    assert split_on_line(STABLE_EXC, LinearForm(1, 0, 0)) == (-1, 2)
    assert split_on_line(STABLE_EXC, LinearForm(1, -1, 0)) == (-1, 2)


def test_kernel_split_smooth_curves():
    conic = X * X + Y * Y - Z * Z
    assert kernel_split_on_line(conic, LinearForm(0, 0, 1)) == (0, 1)
    cubic = X**3 + Y**3 + Z**3
    assert kernel_split_on_line(cubic, LinearForm(1, 1, 1)) == (1, 1)
    assert kernel_split_on_line(cubic, LinearForm(1, 2, 3)) == (1, 1)


def test_kernel_split_rejects_singular_line():
    f = product_form(TRIANGLE)
    with pytest.raises(ValueError):
        kernel_split_on_line(f, LinearForm(1, 0, 0))


def test_free_test_one_line():
    assert free_test_one_line(B3, LinearForm(0, 0, 1)) is True
    assert free_test_one_line(TRIANGLE, LinearForm(1, 0, 0)) is True
    # non-arrangement line goes through the kernel route
    assert free_test_one_line(B3, LinearForm(1, 2, 5)) is True
    # nearly free arrangement fails already on Chern data
    assert free_test_one_line(EXLINE, LinearForm(0, 0, 1)) is False


def test_nf_test_c2_one():
    for r in (1, 2, 3):
        p = nf_c2_one(r)
        assert p.chern() == (-r, 1)
        assert nf_test_c2_one(p, LinearForm(1, 1, 1)) is True
        assert nf_test_c2_one(p, LinearForm(1, -1, 0)) is False  # through (0:0:1)


def test_nf_test_precondition():
    bad = Presentation((1, 2, 2), ((Z * Z, X, Y),), (3,))
    assert bad.chern() == (-2, 2)
    with pytest.raises(ValueError):
        nf_test_c2_one(bad, LinearForm(1, 1, 1))


def test_jump_report_free():
    p = minimal_presentation(product_form(B3))
    rep = jump_report(p, B3)
    assert rep.generic == (3, 5)
    assert rep.generic_confirmed is True
    assert len(rep.rows) == len(B3)
    assert rep.jumping_lines() == []
    assert all(r.order == 0 for r in rep.rows)


def test_jump_report_nearly_free():
    p = minimal_presentation(product_form(EXLINE))
    rep = jump_report(p, EXLINE)
    assert rep.generic == (4, 4)
    assert rep.generic_confirmed is True
    through_p = {LinearForm(1, 0, 1), LinearForm(0, 1, -1), LinearForm(1, -1, 2)}
    for row in rep.rows:
        if row.tag == "arrangement":
            assert row.jumping == (row.line in through_p)
            assert row.order == (1 if row.jumping else 0)
        else:
            assert row.tag == "through-P"
            assert row.split == (3, 5)
            assert row.order == 1
    assert sum(1 for r in rep.rows if r.tag == "through-P") == 5


def test_jump_report_unclassified_stable():
    rep = jump_report(STABLE_EXC)
    assert rep.generic == (0, 1)
    assert rep.generic_confirmed is True
    assert rep.rows == ()


def test_jump_report_deterministic():
    p = minimal_presentation(product_form(EXLINE))
    r1 = jump_report(p, EXLINE)
    r2 = jump_report(p, EXLINE)
    assert r1 == r2
