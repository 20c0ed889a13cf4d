"""Addition and deletion of lines, named example families, model bundles.

All searches here are deterministic scans over fixed rational grids; the
first certified witness is returned, so repeated runs agree byte for byte.
"""

from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional, Union

from .geometry import (
    Arrangement,
    BinForm,
    HomPoly,
    LinearForm,
    ProjPoint,
    binform_gcd,
    binform_rational_roots,
    euler_t,
    lattice,
    line_through,
    mat3_inverse,
    product_form,
    restrict_to_line,
)
from .resolution import Presentation, classify

X = HomPoly.variable(0)
Y = HomPoly.variable(1)
Z = HomPoly.variable(2)


class Prediction(NamedTuple):
    """Outcome of an addition/deletion rule, with the count that fired it."""

    kind: str  # "NearlyFree" | "Free" | "Unknown"
    a: Optional[int]
    b: Optional[int]
    t: int
    rule: str


def _require_free(arr: Arrangement):
    c = classify(product_form(arr))
    if c.kind != "Free":
        raise ValueError("arrangement is not free")
    return c.a, c.b


def predict_delete(arr: Arrangement, L: LinearForm) -> Prediction:
    """Predict the class of arr minus L from the count t = euler_t(arr, L).

    t = b certifies nearly free (a, b); t = a-1 or b-1 certifies free;
    anything else is out of reach of the two rules.
    """
    a, b = _require_free(arr)
    t = euler_t(arr, L)
    if t == b:
        return Prediction("NearlyFree", a, b, t, "t = b")
    if t == a - 1:
        return Prediction("Free", None, None, t, "t = a - 1")
    if t == b - 1:
        return Prediction("Free", None, None, t, "t = b - 1")
    return Prediction("Unknown", None, None, t, "no rule")


def predict_add(arr: Arrangement, L: LinearForm) -> Prediction:
    """Predict the class of arr plus L from t computed in the enlarged set.

    Only t = a - 1 is covered by a rule (nearly free (a+1, b+1)).
    """
    a, b = _require_free(arr)
    enlarged = arr.with_line(L)
    t = euler_t(enlarged, L)
    if t == a - 1:
        return Prediction("NearlyFree", a + 1, b + 1, t, "t = a - 1")
    return Prediction("Unknown", None, None, t, "no rule")


def family_c0(a: int, b: int) -> Arrangement:
    """Free model arrangement with exponents (a, b): a + b + 1 lines.

    One line at infinity, b parallel lines, a - 1 parallel lines in the
    other direction, and the diagonal.
    """
    if not (1 <= a <= b):
        raise ValueError("need 1 <= a <= b")
    lines = [LinearForm(0, 0, 1)]
    lines.extend(LinearForm(1, 0, -i) for i in range(b))
    lines.extend(LinearForm(0, 1, -j) for j in range(a - 1))
    lines.append(LinearForm(1, -1, 0))
    return Arrangement(lines)


def family_deletion(a: int, b: int) -> Arrangement:
    """Nearly free (a, b) model: the free model minus the line x = 0."""
    if not (2 <= a <= b):
        raise ValueError("need 2 <= a <= b")
    return family_c0(a, b).without_line(LinearForm(1, 0, 0))


def _slope_grid():
    """Small coprime pairs in a fixed order, used for line candidates."""
    pairs = []
    for h in range(1, 9):
        for s in range(0, h + 1):
            for t in range(-h, h + 1):
                if max(abs(s), abs(t)) != h:
                    continue
                if gcd(s, t) != 1:
                    continue
                if s == 0 and t != 1:
                    continue
                pairs.append((s, t))
    return pairs


def family_addition(a: int, b: int) -> Arrangement:
    """Nearly free (a+1, b+1) model: the free model plus a searched line.

    Candidates are lines through pairs of lattice points, then lines
    through one lattice point with a small rational slope grid; the first
    one whose count in the enlarged arrangement is exactly a - 1 wins.
    """
    if not (2 <= a <= b):
        raise ValueError("need 2 <= a <= b")
    base = family_c0(a, b)
    pts = [lp.point for lp in lattice(base).points]
    candidates = []
    seen = set(base.lines)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            L = line_through(pts[i], pts[j])
            if L not in seen:
                seen.add(L)
                candidates.append(L)
    for p in pts:
        dual = LinearForm(*p.coords)
        q1, q2 = dual.param_points()
        for s, t in _slope_grid():
            triple = tuple(s * u + t * v for u, v in zip(q1, q2))
            if triple == (0, 0, 0):
                continue
            L = LinearForm(*triple)
            if L not in seen:
                seen.add(L)
                candidates.append(L)
    for L in candidates:
        enlarged = base.with_line(L)
        if euler_t(enlarged, L) == a - 1:
            return enlarged
    raise ValueError("no admissible line")


def added_line(a: int, b: int) -> LinearForm:
    """The line family_addition appended to the free model."""
    return family_addition(a, b).lines[-1]


def _b3_lines():
    return [
        LinearForm(1, 0, 0), LinearForm(0, 1, 0), LinearForm(0, 0, 1),
        LinearForm(1, -1, 0), LinearForm(1, 1, 0),
        LinearForm(1, 0, -1), LinearForm(1, 0, 1),
        LinearForm(0, 1, -1), LinearForm(0, 1, 1),
    ]


def _ex1(t: Fraction) -> Arrangement:
    extra = LinearForm(1, t, -(1 + t))
    return Arrangement(_b3_lines() + [extra])


def _exline() -> Arrangement:
    return Arrangement([
        LinearForm(1, 0, 0), LinearForm(0, 1, 0), LinearForm(0, 0, 1),
        LinearForm(1, 0, -1), LinearForm(1, 0, 1),
        LinearForm(0, 1, -1), LinearForm(0, 1, 1),
        LinearForm(1, -1, 0), LinearForm(1, -1, 2),
    ])


def _exline_shift() -> Arrangement:
    return Arrangement([
        LinearForm(1, 0, Fraction(1, 2)), LinearForm(0, 1, Fraction(1, 2)),
        LinearForm(0, 0, 1),
        LinearForm(1, 0, -1), LinearForm(1, 0, 1),
        LinearForm(0, 1, -1), LinearForm(0, 1, 1),
        LinearForm(1, -1, 0), LinearForm(1, -1, 2),
    ])


def _exinout(t: Fraction) -> Arrangement:
    return Arrangement([
        LinearForm(1, 0, 0), LinearForm(0, 1, 0), LinearForm(0, 0, 1),
        LinearForm(1, 0, -1), LinearForm(1, 0, -2), LinearForm(1, 0, -t),
        LinearForm(0, 1, -1), LinearForm(0, 1, -2), LinearForm(0, 1, -(t + 1)),
        LinearForm(1, -1, 0), LinearForm(1, -1, 1),
    ])


def _conic_pencil() -> HomPoly:
    c1 = X * X - Z * Z
    c2 = Y * Y - Z * Z
    c3 = X * X + Y * Y - (Z * Z).scale(2)
    return c1 * c2 * c3


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise ValueError("parameters must be rational, not float")
    return Fraction(value)


def _int_param(params, name):
    v = _as_fraction(params[name])
    if v.denominator != 1:
        raise ValueError(f"parameter {name} must be an integer")
    return int(v)


FAMILY_IDS = (
    "b3", "ex1", "exline", "exline-shift", "exinout", "conic-pencil",
    "c0", "deletion", "addition",
)


def named_example(ident: str, params: Optional[dict] = None) -> Union[Arrangement, HomPoly]:
    """Construct a named arrangement or curve from its id and parameters."""
    params = dict(params or {})
    if ident == "b3":
        return Arrangement(_b3_lines())
    if ident == "ex1":
        return _ex1(_as_fraction(params["t"]))
    if ident == "exline":
        return _exline()
    if ident == "exline-shift":
        return _exline_shift()
    if ident == "exinout":
        return _exinout(_as_fraction(params["t"]))
    if ident == "conic-pencil":
        return _conic_pencil()
    if ident == "c0":
        return family_c0(_int_param(params, "a"), _int_param(params, "b"))
    if ident == "deletion":
        return family_deletion(_int_param(params, "a"), _int_param(params, "b"))
    if ident == "addition":
        return family_addition(_int_param(params, "a"), _int_param(params, "b"))
    raise ValueError(f"unknown family id: {ident}")


def canonical_nf(a: int, b: int, point: ProjPoint) -> Presentation:
    """The unique nearly free shape (a, b) with jumping data at the point.

    Obtained from the model column [z^(b-a+1) | x | y] at (0:0:1) by the
    coordinate change sending (0:0:1) to the point.
    """
    if a > b:
        raise ValueError("need a <= b")
    coords = point.coords
    pivot = next(i for i in range(3) if coords[i])
    others = [i for i in range(3) if i != pivot]
    cols = [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
    cols[others[0]][0] = 1
    cols[others[1]][1] = 1
    for i in range(3):
        cols[i][2] = coords[i]
    change = [[cols[i][j] for j in range(3)] for i in range(3)]
    inv = mat3_inverse(change)
    ell1 = HomPoly.linear(*inv[0])
    ell2 = HomPoly.linear(*inv[1])
    m = HomPoly.linear(*inv[2])
    return Presentation((a, b, b), ((m ** (b - a + 1), ell1, ell2),), (b + 1,))


class KernelBundleSpec(NamedTuple):
    """Column triple (f, g, h) presenting a bundle as a kernel."""

    f: HomPoly
    g: HomPoly
    h: HomPoly

    def presentation(self) -> Presentation:
        degs = (self.f.degree, self.g.degree, self.h.degree)
        rel = degs[0] + 1  # gens (rel - deg_i) sorted by the constructor
        gens = tuple(rel - d for d in degs)
        return Presentation(gens, ((self.f, self.g, self.h),), (rel,))


def stable_exceptional(f: HomPoly) -> KernelBundleSpec:
    """Stable bundle with c1 = -1, c2 = 4 from a cubic not through (0:0:1).

    Presented by the column (f, x^2, y^2); the common zero locus is empty
    because x = y = 0 forces the excluded point.
    """
    if f.degree != 3:
        raise ValueError("need a cubic form")
    if f.evaluate((0, 0, 1)) == 0:
        raise ValueError("common zero at P")
    return KernelBundleSpec(f, X * X, Y * Y)


class ThreeSecantWitness(NamedTuple):
    lam: int
    mu: int
    line: LinearForm


def _binary_in_xy(g: HomPoly) -> BinForm:
    coeffs = [Fraction(0)] * (g.degree + 1)
    for (i, j, k), c in g.terms.items():
        if k != 0:
            raise ValueError("form must involve only x and y")
        coeffs[j] = c
    return BinForm(g.degree, coeffs)


def _pencil_pairs(bound: int):
    pairs = []
    for lam in range(0, bound + 1):
        for mu in range(-bound, bound + 1):
            if gcd(lam, mu) != 1:
                continue
            if lam == 0 and mu != 1:
                continue
            pairs.append((lam, mu))
    pairs.sort(key=lambda p: (max(abs(p[0]), abs(p[1])), p[0], p[1]))
    return pairs


def _grid_lines(box: int):
    out = []
    seen = set()
    triples = []
    for u0 in range(-box, box + 1):
        for u1 in range(-box, box + 1):
            for u2 in range(-box, box + 1):
                if u2 == 0 or (u0, u1, u2) == (0, 0, 0):
                    continue
                triples.append((u0, u1, u2))
    triples.sort(key=lambda t: (abs(t[0]) + abs(t[1]) + abs(t[2]), t))
    for t in triples:
        L = LinearForm(*t)
        if L not in seen:
            seen.add(L)
            out.append(L)
    return out


def _secant_degree(p_restricted: BinForm, f_restricted: BinForm) -> int:
    """Contact degree of a candidate line with the intersection scheme."""
    if p_restricted.is_zero() and f_restricted.is_zero():
        return max(p_restricted.degree, f_restricted.degree)
    if p_restricted.is_zero():
        return f_restricted.degree
    if f_restricted.is_zero():
        return p_restricted.degree
    return binform_gcd(p_restricted, f_restricted).degree


def three_secant_search(g: HomPoly, h: HomPoly, f: HomPoly,
                        bound: int = 20) -> Optional[ThreeSecantWitness]:
    """Search for a pencil member and a line meeting it 3 times on f.

    Scans lam*g + mu*h over coprime pairs up to the bound; candidate lines
    come from pairs of rational points of the member intersected with f,
    then a fixed small-coefficient grid, always skipping lines through
    (0:0:1).  A witness is certified by the degree of the gcd of the two
    restrictions; None means the budget was exhausted, not nonexistence.
    """
    if g.degree != h.degree:
        raise ValueError("pencil forms must share a degree")
    if g.degree < 3:
        raise ValueError("need degree at least 3")
    gb, hb = _binary_in_xy(g), _binary_in_xy(h)
    if binform_gcd(gb, hb).degree > 0:
        raise ValueError("pencil forms have a common factor")
    if f.degree != 3:
        raise ValueError("need a cubic form")
    if f.evaluate((0, 0, 1)) == 0:
        raise ValueError("common zero at P")
    grid = _grid_lines(3)
    for lam, mu in _pencil_pairs(bound):
        member = gb.scale(lam) + hb.scale(mu)
        if member.is_zero():
            continue
        poly = g.scale(lam) + h.scale(mu)
        points = []
        for (q, num), _ in binform_rational_roots(member):
            factor_line = LinearForm(num, -q, 0)
            on_f = restrict_to_line(f, factor_line)
            if on_f.is_zero():
                continue
            for (s0, t0), _ in binform_rational_roots(on_f):
                pt = factor_line.point_at(s0, t0)
                if pt not in points:
                    points.append(pt)
        candidates = []
        for i in range(len(points)):
            for j in range(i + 1, len(points)):
                L = line_through(points[i], points[j])
                if L.coeffs[2] != 0 and L not in candidates:
                    candidates.append(L)
        candidates.extend(grid)
        for L in candidates:
            if _secant_degree(restrict_to_line(poly, L), restrict_to_line(f, L)) >= 3:
                return ThreeSecantWitness(lam, mu, L)
    return None
