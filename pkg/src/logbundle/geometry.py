"""Projective plane geometry over the rationals.

Homogeneous polynomials in x, y, z; binary forms in the parameters (s, t)
of a line; normalized lines and points; reduced line arrangements and their
intersection lattices; restriction of forms to lines.

Normalization rule for lines and points: clear denominators, divide by the
content, make the first nonzero coordinate positive.  Equality is then a
plain tuple comparison, which the lattice code relies on.
"""

from fractions import Fraction
from math import gcd
from typing import Iterable

VARS = ("x", "y", "z")


def monomials(deg: int):
    """All exponent triples of total degree deg in a fixed order."""
    if deg < 0:
        return []
    return [
        (i, j, deg - i - j)
        for i in range(deg, -1, -1)
        for j in range(deg - i, -1, -1)
    ]


def _h(m: int) -> int:
    """Dimension of the space of degree-m forms in three variables."""
    return (m + 2) * (m + 1) // 2 if m >= 0 else 0


class HomPoly:
    """Homogeneous polynomial in x, y, z with Fraction coefficients.

    The zero polynomial is allowed and carries an explicit degree so that
    matrix entries of graded maps keep their expected degrees.
    """

    __slots__ = ("degree", "terms", "_key")

    def __init__(self, degree: int, terms):
        clean = {}
        for exp, c in dict(terms).items():
            c = Fraction(c)
            if not c:
                continue
            exp = tuple(exp)
            if len(exp) != 3 or min(exp) < 0 or sum(exp) != degree:
                raise ValueError(f"exponent {exp} not homogeneous of degree {degree}")
            clean[exp] = c
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_key", (degree, tuple(sorted(clean.items()))))

    def __setattr__(self, name, value):
        raise AttributeError("HomPoly is immutable")

    @classmethod
    def zero(cls, degree: int = 0) -> "HomPoly":
        return cls(degree, {})

    @classmethod
    def constant(cls, c) -> "HomPoly":
        return cls(0, {(0, 0, 0): Fraction(c)})

    @classmethod
    def variable(cls, i: int) -> "HomPoly":
        exp = [0, 0, 0]
        exp[i] = 1
        return cls(1, {tuple(exp): Fraction(1)})

    @classmethod
    def linear(cls, a, b, c) -> "HomPoly":
        return cls(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, HomPoly) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __add__(self, other):
        if self.degree != other.degree and self.terms and other.terms:
            raise ValueError("degree mismatch")
        deg = self.degree if self.terms or not other.terms else other.degree
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, Fraction(0)) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return HomPoly(deg, out)

    def __neg__(self):
        return HomPoly(self.degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HomPoly":
        c = Fraction(c)
        if not c:
            return HomPoly.zero(self.degree)
        return HomPoly(self.degree, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, HomPoly):
            return self.scale(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return HomPoly(self.degree + other.degree, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = HomPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def mono_shift(self, exp) -> "HomPoly":
        """Multiply by the monomial with the given exponent triple."""
        return HomPoly(
            self.degree + sum(exp),
            {
                (e[0] + exp[0], e[1] + exp[1], e[2] + exp[2]): c
                for e, c in self.terms.items()
            },
        )

    def partial(self, i: int) -> "HomPoly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return HomPoly(max(self.degree - 1, 0), out)

    def evaluate(self, coords) -> Fraction:
        x, y, z = (Fraction(c) for c in coords)
        total = Fraction(0)
        for (i, j, k), c in self.terms.items():
            total += c * x**i * y**j * z**k
        return total

    def coefficient_vector(self, order=None):
        """Coefficients in the fixed monomial order of this degree."""
        order = order if order is not None else monomials(self.degree)
        return tuple(self.terms.get(e, Fraction(0)) for e in order)

    def __repr__(self):
        def fmt(e, c):
            mono = "".join(
                v if p == 1 else f"{v}^{p}"
                for v, p in zip(VARS, e)
                if p
            )
            return f"{c}*{mono}" if mono else f"{c}"

        if not self.terms:
            return "0"
        return " + ".join(fmt(e, c) for e, c in sorted(self.terms.items(), reverse=True))


def partials(f: HomPoly):
    """The three partial derivatives of f, each of degree deg(f) - 1."""
    if f.degree < 1:
        raise ValueError("constant polynomial has no useful gradient")
    return (f.partial(0), f.partial(1), f.partial(2))


class BinForm:
    """Binary form in the line parameters (s, t).

    coeffs[i] is the coefficient of s^(d-i) t^i.  A zero form keeps its
    declared degree.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != degree + 1:
            raise ValueError("coefficient count does not match degree")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("BinForm is immutable")

    @classmethod
    def zero(cls, degree: int) -> "BinForm":
        return cls(degree, (Fraction(0),) * (degree + 1))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, BinForm)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return BinForm(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "BinForm":
        c = Fraction(c)
        return BinForm(self.degree, tuple(v * c for v in self.coeffs))

    def __mul__(self, other):
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return BinForm(self.degree + other.degree, out)

    def __pow__(self, n: int):
        out = BinForm(0, (Fraction(1),))
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, s, t) -> Fraction:
        s, t = Fraction(s), Fraction(t)
        d = self.degree
        return sum(
            (c * s ** (d - i) * t**i for i, c in enumerate(self.coeffs) if c),
            Fraction(0),
        )

    def primitive(self) -> "BinForm":
        """Scale to primitive integer coefficients, first nonzero positive."""
        if self.is_zero():
            return self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        lead = next(v for v in ints if v)
        if lead < 0:
            g = -g
        return BinForm(self.degree, [Fraction(v, g) for v in ints])

    def __repr__(self):
        return f"BinForm({self.degree}, {[str(c) for c in self.coeffs]})"


def binform_gcd(f: BinForm, g: BinForm) -> BinForm:
    """Greatest common divisor of two binary forms, primitive normalized."""
    if f.is_zero():
        return g.primitive()
    if g.is_zero():
        return f.primitive()

    def split(b):
        # b = s^vs * t^vt * core, core as univariate poly in u = t/s
        cs = list(b.coeffs)
        vt = 0
        while not cs[0]:
            cs.pop(0)
            vt += 1
        vs = 0
        while not cs[-1]:
            cs.pop()
            vs += 1
        return vs, vt, cs

    vs_f, vt_f, pf = split(f)
    vs_g, vt_g, pg = split(g)

    def poly_mod(a, b):
        a = list(a)
        while len(a) >= len(b) and any(a):
            if not a[-1]:
                a.pop()
                continue
            q = a[-1] / b[-1]
            off = len(a) - len(b)
            for i, c in enumerate(b):
                a[off + i] -= q * c
            a.pop()
        while a and not a[-1]:
            a.pop()
        return a

    # univariate gcd over the rationals; pf, pg have nonzero ends
    a, b = pf, pg
    while b:
        a, b = b, poly_mod(a, b)
    lead = a[-1]
    core = [c / lead for c in a]
    h = BinForm(len(core) - 1, core)
    s_pow = BinForm(1, (1, 0)) ** min(vs_f, vs_g)
    t_pow = BinForm(1, (0, 1)) ** min(vt_f, vt_g)
    return (h * s_pow * t_pow).primitive()


def binform_rational_roots(b: BinForm):
    """Rational projective roots (s0, t0) of b with multiplicities.

    Returns a list of ((s0, t0), multiplicity) with primitive integer pairs.
    Complete for the small-coefficient forms produced by the search
    routines; raises if divisor enumeration would be unreasonably large.
    """
    if b.is_zero():
        raise ValueError("zero form has no root list")
    cs = list(b.coeffs)
    roots = []
    vt = 0
    while not cs[0]:
        cs.pop(0)
        vt += 1
    if vt:
        roots.append(((1, 0), vt))
    vs = 0
    while not cs[-1]:
        cs.pop()
        vs += 1
    if vs:
        roots.append(((0, 1), vs))
    if len(cs) == 1:
        return roots
    den = 1
    for c in cs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in cs]  # ints[i] = coeff of u^i, u = t/s
    lead, const = abs(ints[-1]), abs(ints[0])
    if lead > 10**12 or const > 10**12:
        raise ValueError("coefficients too large for rational root search")

    def divisors(n):
        out = set()
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.add(d)
                out.add(n // d)
            d += 1
        return sorted(out)

    for p in divisors(const):
        for q in divisors(lead):
            if gcd(p, q) != 1:
                continue
            for num in (p, -p):
                u = Fraction(num, q)
                mult = 0
                work = list(ints)
                while True:
                    # synthetic division by (u' - u)
                    rem = Fraction(0)
                    quot = []
                    for c in reversed(work):
                        rem = rem * u + c
                        quot.append(rem)
                    if rem:
                        break
                    work = [Fraction(c) for c in reversed(quot[:-1])] or [Fraction(0)]
                    mult += 1
                if mult:
                    # u = t/s = num/q, so the projective root is (q : num)
                    roots.append(((q, num), mult))
    return roots


class LinearForm:
    """A line a*x + b*y + c*z = 0, normalized to a canonical representative."""

    __slots__ = ("coeffs",)

    def __init__(self, a, b, c):
        object.__setattr__(self, "coeffs", _normalize_triple((a, b, c)))

    def __setattr__(self, name, value):
        raise AttributeError("LinearForm is immutable")

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("L", self.coeffs))

    def __repr__(self):
        a, b, c = self.coeffs
        parts = []
        for v, name in zip((a, b, c), VARS):
            if v:
                sign = "+" if v > 0 and parts else ""
                coef = "" if abs(v) == 1 else str(abs(v))
                parts.append(f"{sign}{'-' if v < 0 else ''}{coef}{name}")
        return "".join(parts) or "0"

    def evaluate(self, coords) -> Fraction:
        return sum(
            (Fraction(a) * Fraction(c) for a, c in zip(self.coeffs, coords)),
            Fraction(0),
        )

    def contains(self, point: "ProjPoint") -> bool:
        return self.evaluate(point.coords) == 0

    def as_poly(self) -> HomPoly:
        return HomPoly.linear(*self.coeffs)

    def param_points(self):
        """Two canonical points spanning the line.

        The pivot is the first nonzero coefficient; each remaining
        coordinate index i gives the point with coords[i] = pivot value and
        coords[pivot] = -coeffs[i].  The line is parametrized as
        s * first + t * second.
        """
        co = self.coeffs
        p = next(i for i in range(3) if co[i])
        pts = []
        for i in range(3):
            if i == p:
                continue
            q = [0, 0, 0]
            q[i] = co[p]
            q[p] = -co[i]
            pts.append(tuple(q))
        return tuple(pts)

    def parameter_of(self, point: "ProjPoint"):
        """Parameter (s, t) of a point on this line, primitive normalized."""
        if not self.contains(point):
            raise ValueError("point not on line")
        co = self.coeffs
        p = next(i for i in range(3) if co[i])
        others = [i for i in range(3) if i != p]
        s, t = point.coords[others[0]], point.coords[others[1]]
        g = gcd(s, t)
        if g:
            s, t = s // g, t // g
        lead = s if s else t
        if lead < 0:
            s, t = -s, -t
        return (s, t)

    def point_at(self, s, t) -> "ProjPoint":
        q1, q2 = self.param_points()
        s, t = Fraction(s), Fraction(t)
        return ProjPoint(*(s * a + t * b for a, b in zip(q1, q2)))


def _normalize_triple(values, sign_from_last=False):
    vals = [Fraction(v) for v in values]
    if not any(vals):
        raise ValueError("all coordinates zero")
    den = 1
    for v in vals:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vals]
    g = 0
    for v in ints:
        g = gcd(g, v)
    nonzero = [v for v in ints if v]
    lead = nonzero[-1] if sign_from_last else nonzero[0]
    if lead < 0:
        g = -g
    return tuple(v // g for v in ints)


class ProjPoint:
    """A point of the projective plane, primitive integer coordinates.

    The sign is fixed by the last nonzero coordinate, which keeps affine
    points (x:y:1) in their natural form.
    """

    __slots__ = ("coords",)

    def __init__(self, x, y, z):
        object.__setattr__(self, "coords", _normalize_triple((x, y, z), sign_from_last=True))

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(("P", self.coords))

    def __repr__(self):
        return "({}:{}:{})".format(*self.coords)


def intersection(l1: LinearForm, l2: LinearForm) -> ProjPoint:
    """The common point of two distinct lines (cross product)."""
    if l1 == l2:
        raise ValueError("coincident lines")
    a1, b1, c1 = l1.coeffs
    a2, b2, c2 = l2.coeffs
    return ProjPoint(b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2)


def line_through(p: ProjPoint, q: ProjPoint) -> LinearForm:
    """The line through two distinct points (cross product)."""
    if p == q:
        raise ValueError("coincident points")
    x1, y1, z1 = p.coords
    x2, y2, z2 = q.coords
    return LinearForm(y1 * z2 - z1 * y2, z1 * x2 - x1 * z2, x1 * y2 - y1 * x2)


class Arrangement:
    """An ordered reduced union of distinct lines."""

    __slots__ = ("lines",)

    def __init__(self, lines: Iterable[LinearForm]):
        lines = tuple(lines)
        seen = set()
        for L in lines:
            if L in seen:
                raise ValueError(f"duplicate line {L!r}")
            seen.add(L)
        object.__setattr__(self, "lines", lines)

    def __setattr__(self, name, value):
        raise AttributeError("Arrangement is immutable")

    def __len__(self):
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)

    def __eq__(self, other):
        return isinstance(other, Arrangement) and self.lines == other.lines

    def __hash__(self):
        return hash(self.lines)

    def __contains__(self, L):
        return L in self.lines

    def index(self, L: LinearForm) -> int:
        return self.lines.index(L)

    def with_line(self, L: LinearForm) -> "Arrangement":
        return Arrangement(self.lines + (L,))

    def without_line(self, L: LinearForm) -> "Arrangement":
        if L not in self.lines:
            raise ValueError("line not in arrangement")
        return Arrangement(tuple(x for x in self.lines if x != L))


def product_form(arr: Arrangement) -> HomPoly:
    """Defining polynomial: the product of the normalized linear forms."""
    f = HomPoly.constant(1)
    for L in arr:
        f = f * L.as_poly()
    return f


class LatticePoint:
    __slots__ = ("point", "multiplicity", "lines")

    def __init__(self, point: ProjPoint, lines: frozenset):
        object.__setattr__(self, "point", point)
        object.__setattr__(self, "lines", lines)
        object.__setattr__(self, "multiplicity", len(lines))

    def __setattr__(self, name, value):
        raise AttributeError("LatticePoint is immutable")

    def __repr__(self):
        return f"LatticePoint({self.point!r}, m={self.multiplicity})"


class Lattice:
    """All intersection points of an arrangement with their incidences."""

    __slots__ = ("points",)

    def __init__(self, points):
        object.__setattr__(self, "points", tuple(points))

    def __setattr__(self, name, value):
        raise AttributeError("Lattice is immutable")

    def on_line(self, line_index: int):
        return [p for p in self.points if line_index in p.lines]

    def multiplicity_multiset(self):
        return sorted(p.multiplicity for p in self.points)


_lattice_cache = {}


def lattice(arr: Arrangement) -> Lattice:
    """Intersection lattice: deduplicated points with full incidence sets."""
    if len(arr) < 2:
        raise ValueError("need at least two lines")
    cached = _lattice_cache.get(arr)
    if cached is not None:
        return cached
    pts = {}
    n = len(arr)
    for i in range(n):
        for j in range(i + 1, n):
            p = intersection(arr.lines[i], arr.lines[j])
            if p.coords not in pts:
                incident = frozenset(
                    k for k in range(n) if arr.lines[k].contains(p)
                )
                pts[p.coords] = LatticePoint(p, incident)
    result = Lattice(sorted(pts.values(), key=lambda lp: lp.point.coords))
    if len(_lattice_cache) > 4096:
        _lattice_cache.clear()
    _lattice_cache[arr] = result
    return result


def euler_t(arr: Arrangement, L: LinearForm) -> int:
    """t = N - n - 1 for a line L of the arrangement.

    N is the number of lines, n the number of distinct intersection points
    on L.  Equals the multiplicity-weighted triple point count on L.
    """
    if L not in arr:
        raise ValueError("line not in arrangement")
    idx = arr.index(L)
    on_l = lattice(arr).on_line(idx)
    return len(arr) - len(on_l) - 1


def lattice_isomorphic(a1: Arrangement, a2: Arrangement):
    """Decide incidence-structure isomorphism.

    Returns (True, witness) with witness a tuple sending line index i of a1
    to a line index of a2 inducing a bijection of multiple points, or
    (False, None).
    """
    if len(a1) != len(a2):
        return (False, None)
    n = len(a1)
    lat1, lat2 = lattice(a1), lattice(a2)
    if lat1.multiplicity_multiset() != lat2.multiplicity_multiset():
        return (False, None)

    def line_signature(lat, i):
        return tuple(sorted(p.multiplicity for p in lat.on_line(i)))

    sig1 = [line_signature(lat1, i) for i in range(n)]
    sig2 = [line_signature(lat2, i) for i in range(n)]
    if sorted(sig1) != sorted(sig2):
        return (False, None)

    # multiplicity of the common point of each line pair
    def pair_table(arr, lat):
        idx = {}
        for p in lat.points:
            for i in p.lines:
                for j in p.lines:
                    if i < j:
                        idx[(i, j)] = p.multiplicity
        return idx

    t1, t2 = pair_table(a1, lat1), pair_table(a2, lat2)
    order = sorted(range(n), key=lambda i: (sig2.count(sig1[i]), i))
    assignment = [-1] * n
    used = [False] * n

    def feasible(i, j):
        for k in order:
            m = assignment[k]
            if m < 0 or k == i:
                continue
            key1 = (min(i, k), max(i, k))
            key2 = (min(j, m), max(j, m))
            if t1.get(key1) != t2.get(key2):
                return False
        return True

    def verify(mapping):
        for p in lat1.points:
            image_lines = sorted(mapping[i] for i in p.lines)
            q = intersection(a2.lines[image_lines[0]], a2.lines[image_lines[1]])
            q_lines = next(
                lp.lines for lp in lat2.points if lp.point == q
            )
            if sorted(q_lines) != image_lines:
                return False
        return True

    def search(pos):
        if pos == n:
            return verify(assignment)
        i = order[pos]
        for j in range(n):
            if used[j] or sig2[j] != sig1[i]:
                continue
            assignment[i] = j
            if feasible(i, j):
                used[j] = True
                if search(pos + 1):
                    return True
                used[j] = False
            assignment[i] = -1
        return False

    if search(0):
        return (True, tuple(assignment))
    return (False, None)


def restrict_to_line(f: HomPoly, L: LinearForm) -> BinForm:
    """f composed with the canonical parametrization of L."""
    q1, q2 = L.param_points()
    lin = [BinForm(1, (q1[v], q2[v])) for v in range(3)]
    powers = [{0: BinForm(0, (Fraction(1),))} for _ in range(3)]

    def power(v, e):
        cache = powers[v]
        if e not in cache:
            cache[e] = power(v, e - 1) * lin[v]
        return cache[e]

    total = BinForm.zero(f.degree)
    for (i, j, k), c in f.terms.items():
        term = power(0, i) * power(1, j) * power(2, k)
        total = total + term.scale(c)
    return total


def substitute(f: HomPoly, change) -> HomPoly:
    """f(A * w): pull back f along the coordinate change matrix A (3x3)."""
    rows = [[Fraction(change[i][j]) for j in range(3)] for i in range(3)]
    lin = [HomPoly.linear(*rows[v]) for v in range(3)]
    cache = [{0: HomPoly.constant(1)} for _ in range(3)]

    def power(v, e):
        c = cache[v]
        if e not in c:
            c[e] = power(v, e - 1) * lin[v]
        return c[e]

    total = HomPoly.zero(f.degree)
    for (i, j, k), c in f.terms.items():
        total = total + (power(0, i) * power(1, j) * power(2, k)).scale(c)
    return total


def substitute_line(L: LinearForm, change) -> LinearForm:
    """The linear form w -> L(A * w)."""
    new = [
        sum(Fraction(L.coeffs[v]) * Fraction(change[v][j]) for v in range(3))
        for j in range(3)
    ]
    return LinearForm(*new)


def substitute_arrangement(arr: Arrangement, change) -> Arrangement:
    return Arrangement(substitute_line(L, change) for L in arr)


def mat3_inverse(change):
    """Exact inverse of a 3x3 rational matrix."""
    m = [[Fraction(change[i][j]) for j in range(3)] for i in range(3)]
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    if not det:
        raise ValueError("singular change of coordinates")
    cof = [
        [
            (m[(i + 1) % 3][(j + 1) % 3] * m[(i + 2) % 3][(j + 2) % 3]
             - m[(i + 1) % 3][(j + 2) % 3] * m[(i + 2) % 3][(j + 1) % 3])
            for j in range(3)
        ]
        for i in range(3)
    ]
    return [[cof[j][i] / det for j in range(3)] for i in range(3)]


def transport_point(p: ProjPoint, change) -> ProjPoint:
    """Image of a point of the original plane in the pulled-back plane.

    substitute(f, A) vanishes at w exactly when f vanishes at A*w, so the
    zero locus transforms by the inverse matrix.
    """
    inv = mat3_inverse(change)
    new = [
        sum(inv[i][j] * Fraction(p.coords[j]) for j in range(3))
        for i in range(3)
    ]
    return ProjPoint(*new)
