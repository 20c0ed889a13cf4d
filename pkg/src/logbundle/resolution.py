"""Graded syzygies of the Jacobian ideal and bundle classification.

For a squarefree f of degree d the syzygy sheaf is the rank-2 kernel of the
gradient row map O^3 -> O(d-1).  This module computes its graded pieces,
extracts a minimal presentation degree by degree, classifies the bundle as
free / nearly free / other with exponents, locates the jumping point of a
nearly free bundle, and computes Chern data through the Tjurina number.
"""

from fractions import Fraction
from functools import reduce
from math import gcd

from .geometry import HomPoly, LinearForm, ProjPoint, intersection, monomials, partials
from .linalg import sparse_nullspace, sparse_rank


class DegreeBoundExceeded(Exception):
    """Presentation search passed degree 2d without stabilizing."""


class JacobianNotFinite(Exception):
    """The Jacobian scheme is not zero-dimensional (f has a repeated factor)."""


def _h(m: int) -> int:
    return (m + 2) * (m + 1) // 2 if m >= 0 else 0


class SyzygyTriple:
    """(rho0, rho1, rho2) of equal degree with rho . grad(f) = 0."""

    __slots__ = ("degree", "components")

    def __init__(self, components):
        components = tuple(components)
        if len(components) != 3:
            raise ValueError("need three components")
        deg = components[0].degree
        if any(c.degree != deg for c in components):
            raise ValueError("components must share a degree")
        object.__setattr__(self, "degree", deg)
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):
        raise AttributeError("SyzygyTriple is immutable")

    def is_syzygy_of(self, f: HomPoly) -> bool:
        fx, fy, fz = partials(f)
        total = self.components[0] * fx + self.components[1] * fy + self.components[2] * fz
        return total.is_zero()

    def __repr__(self):
        return f"SyzygyTriple(deg={self.degree})"


class Presentation:
    """Minimal graded presentation of a rank-2 sheaf.

    Generators are stored in ascending degree; relation j is the column
    whose i-th entry (degree rel_degrees[j] - gen_degrees[i]) pairs with
    generator i.  For presentations extracted from a curve the generator
    syzygy triples are kept; abstract bundle presentations carry None.
    """

    __slots__ = ("gen_degrees", "rel_degrees", "columns", "generators")

    def __init__(self, gen_degrees, columns, rel_degrees, generators=None):
        gen_degrees = tuple(gen_degrees)
        order = sorted(range(len(gen_degrees)), key=lambda i: (gen_degrees[i], i))
        sorted_deg = tuple(gen_degrees[i] for i in order)
        sorted_cols = tuple(
            tuple(col[i] for i in order) for col in columns
        )
        for j, col in enumerate(sorted_cols):
            for i, entry in enumerate(col):
                want = rel_degrees[j] - sorted_deg[i]
                if not entry.is_zero() and entry.degree != want:
                    raise ValueError("column entry degree mismatch")
        if generators is not None:
            generators = tuple(generators[i] for i in order)
        object.__setattr__(self, "gen_degrees", sorted_deg)
        object.__setattr__(self, "rel_degrees", tuple(rel_degrees))
        object.__setattr__(self, "columns", sorted_cols)
        object.__setattr__(self, "generators", generators)

    def __setattr__(self, name, value):
        raise AttributeError("Presentation is immutable")

    @property
    def rank(self) -> int:
        return len(self.gen_degrees) - len(self.rel_degrees)

    @property
    def c1(self) -> int:
        return -(sum(self.gen_degrees) - sum(self.rel_degrees))

    def chern(self):
        """(c1, c2) of the presented sheaf from the resolution."""
        d1 = sum(self.gen_degrees)
        e1 = sum(self.rel_degrees)

        def elem2(vals):
            total = 0
            acc = 0
            for v in vals:
                total += acc * v
                acc += v
            return total

        c1 = -(d1 - e1)
        c2 = elem2(self.gen_degrees) - d1 * e1 + e1 * e1 - elem2(self.rel_degrees)
        return (c1, c2)

    def __repr__(self):
        return f"Presentation(gens={self.gen_degrees}, rels={self.rel_degrees})"


class BundleClass:
    """Free(a,b) | NearlyFree(a,b,P) | Other, with the presentation attached."""

    __slots__ = ("kind", "a", "b", "jumping_point", "presentation")

    def __init__(self, kind, a=None, b=None, jumping_point=None, presentation=None):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "jumping_point", jumping_point)
        object.__setattr__(self, "presentation", presentation)

    def __setattr__(self, name, value):
        raise AttributeError("BundleClass is immutable")

    def exponents(self):
        return (self.a, self.b)

    def __repr__(self):
        if self.kind == "Other":
            return (
                f"Other(gens={self.presentation.gen_degrees}, "
                f"rels={self.presentation.rel_degrees})"
            )
        p = f", P={self.jumping_point}" if self.jumping_point else ""
        return f"{self.kind}({self.a},{self.b}{p})"


class ChernData:
    __slots__ = ("c1", "c2", "tjurina", "degree")

    def __init__(self, c1, c2, tjurina, degree):
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)
        object.__setattr__(self, "tjurina", tjurina)
        object.__setattr__(self, "degree", degree)

    def __setattr__(self, name, value):
        raise AttributeError("ChernData is immutable")

    def __repr__(self):
        return f"ChernData(c1={self.c1}, c2={self.c2}, tjurina={self.tjurina})"


def _triple_vector(triple_terms, e):
    """Coefficient dict of a degree-e triple over (component, monomial) axes."""
    index = {m: i for i, m in enumerate(monomials(e))}
    n = len(index)
    vec = {}
    for comp, poly in enumerate(triple_terms):
        for mono, c in poly.terms.items():
            vec[comp * n + index[mono]] = c
    return vec


def syzygy_basis(f: HomPoly, e: int):
    """Canonical basis of the degree-e syzygies of the partials of f."""
    if f.degree < 1:
        raise ValueError("degree must be at least 1")
    if e < 0:
        return []
    d = f.degree
    grads = partials(f)
    mons_e = monomials(e)
    target = {m: i for i, m in enumerate(monomials(e + d - 1))}
    nrows = len(target)
    rows = [dict() for _ in range(nrows)]
    col = 0
    for g in grads:
        for m in mons_e:
            for mono, c in g.terms.items():
                rows[target[(mono[0] + m[0], mono[1] + m[1], mono[2] + m[2])]][col] = c
            col += 1
    ncols = 3 * len(mons_e)
    basis = sparse_nullspace(rows, ncols)
    n = len(mons_e)
    out = []
    for vec in basis:
        comps = [dict(), dict(), dict()]
        for idx, c in vec.items():
            comps[idx // n][mons_e[idx % n]] = c
        out.append(SyzygyTriple(HomPoly(e, t) for t in comps))
    return out


class _Span:
    """Incremental row-reduced span tester over dict vectors of Fractions."""

    def __init__(self):
        self.rows = []  # (pivot, reduced row) sorted by pivot

    def reduce(self, vec):
        vec = dict(vec)
        for p, r in self.rows:
            c = vec.get(p)
            if c:
                for j, w in r.items():
                    nv = vec.get(j, Fraction(0)) - c * w
                    if nv:
                        vec[j] = nv
                    else:
                        vec.pop(j, None)
        return vec

    def add(self, vec) -> bool:
        """Insert vec if independent of the span; True when it was new."""
        vec = self.reduce(vec)
        if not vec:
            return False
        p = min(vec)
        pv = vec[p]
        vec = {j: c / pv for j, c in vec.items()}
        for i, (pp, r) in enumerate(self.rows):
            c = r.get(p)
            if c:
                nr = dict(r)
                for j, w in vec.items():
                    nv = nr.get(j, Fraction(0)) - c * w
                    if nv:
                        nr[j] = nv
                    else:
                        nr.pop(j, None)
                self.rows[i] = (pp, nr)
        self.rows.append((p, vec))
        self.rows.sort(key=lambda t: t[0])
        return True

    @property
    def dimension(self):
        return len(self.rows)


_presentation_cache = {}


def minimal_presentation(f: HomPoly) -> Presentation:
    """Minimal generator and relation degrees of the syzygy module of f.

    Scans degrees upward; at each degree new generators are the canonical
    complement of variable-multiples of earlier generators inside the
    syzygy space, and new relations the analogous complement inside the
    kernel of the evaluation map.  Stops when nothing new appears for three
    consecutive degrees, the Euler characteristic identity holds there, the
    first Chern class matches -(d-1), and generators exceed relations by 2.
    """
    cached = _presentation_cache.get(f)
    if cached is not None:
        return cached
    d = f.degree
    gens = []  # (degree, SyzygyTriple)
    rels = []  # (degree, {(gen index, monomial): coeff})
    quiet = 0
    # discovery is bounded by degree 2d; the trailing verification window
    # may run up to three degrees further
    for e in range(2 * d + 3):
        basis = syzygy_basis(f, e)
        dim = len(basis)
        changed = False

        span = _Span()
        for gd, gt in gens:
            for m in monomials(e - gd):
                shifted = [c.mono_shift(m) for c in gt.components]
                span.add(_triple_vector(shifted, e))
        for triple in basis:
            if span.add(_triple_vector(triple.components, e)):
                gens.append((e, triple))
                changed = True

        col_keys = []
        cols = []
        for gi, (gd, gt) in enumerate(gens):
            for m in monomials(e - gd):
                shifted = [c.mono_shift(m) for c in gt.components]
                col_keys.append((gi, m))
                cols.append(_triple_vector(shifted, e))
        nrows = 3 * _h(e)
        rows = [dict() for _ in range(nrows)]
        for j, colvec in enumerate(cols):
            for i, c in colvec.items():
                rows[i][j] = c
        kernel = sparse_nullspace(rows, len(cols))
        col_index = {k: i for i, k in enumerate(col_keys)}
        rspan = _Span()
        for rd, rv in rels:
            for m in monomials(e - rd):
                shifted = {
                    col_index[(gi, (mm[0] + m[0], mm[1] + m[1], mm[2] + m[2]))]: c
                    for (gi, mm), c in rv.items()
                }
                rspan.add(shifted)
        for kv in kernel:
            if rspan.add(kv):
                rels.append((e, {col_keys[j]: c for j, c in kv.items()}))
                changed = True

        if changed and e > 2 * d:
            break
        euler = sum(_h(e - gd) for gd, _ in gens) - sum(_h(e - rd) for rd, _ in rels)
        quiet = 0 if changed or euler != dim else quiet + 1
        if quiet >= 3:
            c1 = -(sum(gd for gd, _ in gens) - sum(rd for rd, _ in rels))
            if c1 == -(d - 1) and len(gens) - len(rels) == 2:
                result = _build_presentation(gens, rels)
                _presentation_cache[f] = result
                return result
    raise DegreeBoundExceeded("degree bound exceeded")


def _build_presentation(gens, rels) -> Presentation:
    gen_degrees = [gd for gd, _ in gens]
    columns = []
    for rd, rv in rels:
        entries = []
        for gi, (gd, _) in enumerate(gens):
            terms = {}
            for (gj, m), c in rv.items():
                if gj == gi:
                    terms[m] = c
            entries.append(HomPoly(rd - gd, terms))
        columns.append(tuple(entries))
    return Presentation(
        gen_degrees,
        columns,
        [rd for rd, _ in rels],
        generators=[gt for _, gt in gens],
    )


def jumping_point(p: Presentation) -> ProjPoint:
    """Common zero of the two linear entries of the unique relation column.

    Defined for nearly free presentations with a < b; the linear entries
    are the ones paired with the two degree-b generators, and their pencil
    does not depend on the choice of presentation basis.
    """
    degs = p.gen_degrees
    if len(degs) != 3 or len(p.rel_degrees) != 1 or degs[1] != degs[2]:
        raise ValueError("not a nearly free presentation shape")
    a, b = degs[0], degs[1]
    if p.rel_degrees[0] != b + 1:
        raise ValueError("not a nearly free presentation shape")
    if a == b:
        raise ValueError("no canonical jumping point (tangent-bundle twist)")
    col = p.columns[0]
    lin1, lin2 = col[1], col[2]
    if lin1.is_zero() or lin2.is_zero():
        raise ValueError("presentation not minimal")
    v1 = [lin1.terms.get(e, Fraction(0)) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    v2 = [lin2.terms.get(e, Fraction(0)) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    try:
        return intersection(LinearForm(*v1), LinearForm(*v2))
    except ValueError:
        raise ValueError("presentation not minimal")


def classify(f: HomPoly) -> BundleClass:
    """Free(a,b), NearlyFree(a,b,P) or Other from the minimal presentation."""
    p = minimal_presentation(f)
    degs = p.gen_degrees
    if len(degs) == 2 and not p.rel_degrees:
        return BundleClass("Free", degs[0], degs[1], presentation=p)
    if (
        len(degs) == 3
        and degs[1] == degs[2]
        and p.rel_degrees == (degs[2] + 1,)
    ):
        a, b = degs[0], degs[1]
        point = jumping_point(p) if a < b else None
        return BundleClass("NearlyFree", a, b, jumping_point=point, presentation=p)
    return BundleClass("Other", presentation=p)


_tjurina_cache = {}


def tjurina(f: HomPoly) -> int:
    """Degree of the Jacobian scheme.

    Codimension of the degree-k piece of the Jacobian ideal inside all
    degree-k forms, at k = 3d, checked stable through 3d+2.  A repeated
    factor makes the codimension keep growing, which is reported as a
    non-finite Jacobian scheme.
    """
    cached = _tjurina_cache.get(f)
    if cached is not None:
        return cached
    d = f.degree
    if d < 1:
        raise ValueError("degree must be at least 1")
    grads = []
    for g in partials(f):
        if g.is_zero():
            continue
        den = reduce(lambda acc, c: acc * c.denominator // gcd(acc, c.denominator),
                     g.terms.values(), 1)
        ints = {e: int(c * den) for e, c in g.terms.items()}
        content = reduce(gcd, (abs(v) for v in ints.values()), 0)
        grads.append({e: v // content for e, v in ints.items()})
    if not grads:
        raise JacobianNotFinite("gradient vanishes identically")

    def codim(k):
        target = {m: i for i, m in enumerate(monomials(k))}
        rows = []
        for g in grads:
            for m in monomials(k - (d - 1)):
                rows.append({
                    target[(e[0] + m[0], e[1] + m[1], e[2] + m[2])]: c
                    for e, c in g.items()
                })
        return len(target) - sparse_rank(rows, len(target))

    values = [codim(3 * d + i) for i in range(3)]
    if len(set(values)) != 1:
        raise JacobianNotFinite(
            f"Jacobian scheme not finite (codimensions {values} at degrees "
            f"{3 * d}..{3 * d + 2})"
        )
    _tjurina_cache[f] = values[0]
    return values[0]


def chern_data(f: HomPoly) -> ChernData:
    d = f.degree
    tau = tjurina(f)
    return ChernData(-(d - 1), (d - 1) ** 2 - tau, tau, d)


STABLE = "Stable"
SEMISTABLE = "Semistable"
UNSTABLE = "Unstable"


def stability_class(c: BundleClass) -> str:
    """Slope stability of a classified bundle.

    Nearly free: stable exactly for balanced exponents, semistable at gap
    one, unstable below.  A free bundle is a direct sum, hence never
    stable: semistable only when balanced.
    """
    if c.kind == "NearlyFree":
        if c.a == c.b:
            return STABLE
        if c.a == c.b - 1:
            return SEMISTABLE
        return UNSTABLE
    if c.kind == "Free":
        return SEMISTABLE if c.a == c.b else UNSTABLE
    raise ValueError("not computed")
