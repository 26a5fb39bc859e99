"""Multiplication maps of holomorphic differentials on explicit curves.

Two curve models are supported.  On a hyperelliptic curve y^2 = f(x) of
genus g the 1-forms are p(x) dx/y with deg p <= g-1, and the quadratic
differentials split under (x, y) -> (x, -y) into an invariant part
q(x) dx^2/y^2 with deg q <= 2g-2 and an anti-invariant part
r(x) y dx^2/y^2 with deg r <= g-3.  On a smooth plane quartic the 1-forms
are the linear forms of the plane and the quadratic differentials are the
conics.  All dimension counts are exact rational linear algebra; floating
point enters only where intersection points of a quartic with a line are
needed, or on explicit request for curves with irrational zero loci.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .exact import QuadraticNumber
from .intlinalg import rational_kernel, rational_rank
from .polynomials import Polynomial, TernaryForm, ternary_monomials

COPRIME = "coprime"
LINKED = "linked"


class HyperellipticCurve:
    """The curve y^2 = f(x) with f squarefree of degree 2g+1 or 2g+2."""

    __slots__ = ("f", "genus")

    def __init__(self, f):
        if not isinstance(f, Polynomial):
            f = Polynomial(f)
        if f.degree < 5:
            raise DomainError("the defining polynomial must have degree at least five")
        if not f.is_squarefree():
            raise DomainError("the defining polynomial must be squarefree")
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "genus", (f.degree - 1) // 2)

    def __setattr__(self, name, value):
        raise AttributeError("HyperellipticCurve is immutable")

    def points_at_infinity(self):
        return 2 if self.f.degree % 2 == 0 else 1

    def __eq__(self, other):
        if not isinstance(other, HyperellipticCurve):
            return NotImplemented
        return self.f == other.f

    def __hash__(self):
        return hash(("hyperelliptic", self.f))

    def __repr__(self):
        return "HyperellipticCurve(%r)" % (self.f,)


class PlaneQuartic:
    """A smooth quartic in the projective plane; genus three by adjunction."""

    __slots__ = ("form", "genus")

    def __init__(self, form):
        if not isinstance(form, TernaryForm):
            form = TernaryForm(4, form)
        if form.degree != 4:
            raise DomainError("the defining form must have degree four")
        if form.is_zero():
            raise DomainError("the defining form must be nonzero")
        if not _partials_meet_only_at_origin(form):
            raise DomainError("the quartic is singular")
        object.__setattr__(self, "form", form)
        object.__setattr__(self, "genus", 3)

    def __setattr__(self, name, value):
        raise AttributeError("PlaneQuartic is immutable")

    def __eq__(self, other):
        if not isinstance(other, PlaneQuartic):
            return NotImplemented
        return self.form == other.form

    def __hash__(self):
        return hash(("quartic", self.form))

    def __repr__(self):
        return "PlaneQuartic(%r)" % (self.form,)


def _partials_meet_only_at_origin(form):
    # Smoothness: the three partials are homogeneous, so their common zero
    # locus is a cone, and it is {0} iff the ideal is zero-dimensional.
    import sympy

    variables = sympy.symbols("x y z")
    polys = []
    for v in range(3):
        expr = sympy.Integer(0)
        for (i, j, k), c in form.partial(v).coeffs:
            expr += (
                sympy.Rational(c.numerator, c.denominator)
                * variables[0] ** i
                * variables[1] ** j
                * variables[2] ** k
            )
        polys.append(expr)
    if any(p == 0 for p in polys):
        return False
    return sympy.groebner(polys, *variables, order="grevlex").is_zero_dimensional


class Differential:
    """A holomorphic 1-form: p(x) dx/y on a hyperelliptic curve, a linear
    form on a quartic.  The zero differential is allowed as a value but is
    rejected by every operation that divides by it."""

    __slots__ = ("curve", "p")

    def __init__(self, curve, p):
        if isinstance(curve, HyperellipticCurve):
            if not isinstance(p, Polynomial):
                p = Polynomial(p)
            if p.degree > curve.genus - 1:
                raise DomainError("differential degree exceeds g-1")
        elif isinstance(curve, PlaneQuartic):
            if not isinstance(p, TernaryForm):
                a, b, c = p
                p = TernaryForm.linear(a, b, c)
            if p.degree != 1:
                raise DomainError("a differential on a quartic is a linear form")
        else:
            raise DomainError("unsupported curve model %r" % (curve,))
        object.__setattr__(self, "curve", curve)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Differential is immutable")

    def is_zero(self):
        return self.p.is_zero()

    def coefficient_vector(self):
        if isinstance(self.curve, HyperellipticCurve):
            return [self.p.coefficient(k) for k in range(self.curve.genus)]
        return self.p.coefficient_vector()

    def __add__(self, other):
        if not isinstance(other, Differential) or other.curve != self.curve:
            return NotImplemented
        return Differential(self.curve, self.p + other.p)

    def __neg__(self):
        return Differential(self.curve, -self.p)

    def __sub__(self, other):
        if not isinstance(other, Differential) or other.curve != self.curve:
            return NotImplemented
        return Differential(self.curve, self.p + (-other.p))

    def scale(self, c):
        c = Fraction(c)
        if isinstance(self.p, Polynomial):
            return Differential(self.curve, self.p * c)
        return Differential(self.curve, self.p.scale(c))

    def __mul__(self, other):
        """Product of two 1-forms, an invariant quadratic differential."""
        if not isinstance(other, Differential) or other.curve != self.curve:
            return NotImplemented
        if not isinstance(self.curve, HyperellipticCurve):
            raise DomainError("products are only modeled on hyperelliptic curves")
        return QuadDifferential(self.curve, self.p * other.p)

    def __eq__(self, other):
        if not isinstance(other, Differential):
            return NotImplemented
        return self.curve == other.curve and self.p == other.p

    def __hash__(self):
        return hash((self.curve, self.p))

    def __repr__(self):
        return "Differential(%r, %r)" % (self.curve, self.p)


class QuadDifferential:
    """(q(x) + r(x) y) dx^2/y^2 on a hyperelliptic curve."""

    __slots__ = ("curve", "q", "r")

    def __init__(self, curve, q, r=()):
        if not isinstance(curve, HyperellipticCurve):
            raise DomainError("quadratic differentials are modeled on hyperelliptic curves")
        if not isinstance(q, Polynomial):
            q = Polynomial(q)
        if not isinstance(r, Polynomial):
            r = Polynomial(r)
        g = curve.genus
        if q.degree > 2 * g - 2:
            raise DomainError("invariant part degree exceeds 2g-2")
        if r.degree > g - 3:
            raise DomainError("anti-invariant part degree exceeds g-3")
        object.__setattr__(self, "curve", curve)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)

    def __setattr__(self, name, value):
        raise AttributeError("QuadDifferential is immutable")

    def is_zero(self):
        return self.q.is_zero() and self.r.is_zero()

    def __add__(self, other):
        if not isinstance(other, QuadDifferential) or other.curve != self.curve:
            return NotImplemented
        return QuadDifferential(self.curve, self.q + other.q, self.r + other.r)

    def scale(self, c):
        c = Fraction(c)
        return QuadDifferential(self.curve, self.q * c, self.r * c)

    def __eq__(self, other):
        if not isinstance(other, QuadDifferential):
            return NotImplemented
        return (self.curve, self.q, self.r) == (other.curve, other.q, other.r)

    def __hash__(self):
        return hash((self.curve, self.q, self.r))

    def __repr__(self):
        return "QuadDifferential(%r, %r, %r)" % (self.curve, self.q, self.r)


class TauSubspace:
    """A two- or three-dimensional space of 1-forms on one curve, given by
    a spanning tuple of independent differentials."""

    __slots__ = ("differentials",)

    def __init__(self, differentials):
        differentials = tuple(differentials)
        if len(differentials) not in (2, 3):
            raise DomainError("a subspace is spanned by two or three differentials")
        curve = differentials[0].curve
        if any(d.curve != curve for d in differentials):
            raise DomainError("differentials must lie on one curve")
        rows = [d.coefficient_vector() for d in differentials]
        if rational_rank(rows) != len(rows):
            raise DomainError("differentials are linearly dependent")
        object.__setattr__(self, "differentials", differentials)

    def __setattr__(self, name, value):
        raise AttributeError("TauSubspace is immutable")

    @property
    def curve(self):
        return self.differentials[0].curve

    @property
    def dimension(self):
        return len(self.differentials)

    def __repr__(self):
        return "TauSubspace(%r)" % (list(self.differentials),)


def _one_form_basis(curve):
    if isinstance(curve, HyperellipticCurve):
        x = Polynomial.x()
        return [x**k for k in range(curve.genus)]
    return [
        TernaryForm.linear(1, 0, 0),
        TernaryForm.linear(0, 1, 0),
        TernaryForm.linear(0, 0, 1),
    ]


def _product_coordinates(curve, a, b):
    """The product of two 1-form representatives in coordinates on the
    target of the multiplication map.

    Hyperelliptic products are invariant, so the target coordinates are the
    monomials x^0 .. x^(2g-2); for a quartic they are the six conics.
    """
    if isinstance(curve, HyperellipticCurve):
        prod = a * b
        return [prod.coefficient(k) for k in range(2 * curve.genus - 1)]
    prod = a * b
    return [prod.coefficient(m) for m in ternary_monomials(2)]


def _multiplication_rows(tau):
    """Images of the product basis (tau_i times 1-form monomials) under the
    multiplication map, one row per domain basis vector."""
    curve = tau.curve
    basis = _one_form_basis(curve)
    return [
        _product_coordinates(curve, d.p, b) for d in tau.differentials for b in basis
    ]


def _multiplication_profile(tau):
    """Rank and domain dimension of tau (x) H^0(K) -> H^0(K^2)."""
    rows = _multiplication_rows(tau)
    return rational_rank(rows), len(rows)


def obscurant_kernel(tau: TauSubspace):
    """Basis of the multiplication-map kernel in coordinates over the
    product basis; the witness behind obscurant_dim."""
    rows = _multiplication_rows(tau)
    columns = [list(col) for col in zip(*rows)]
    return rational_kernel(columns, width=len(rows))


def multiplication_rank(tau: TauSubspace) -> int:
    """Rank of tau (x) H^0(K) -> H^0(K^2)."""
    return _multiplication_profile(tau)[0]


def dividend_dim(alpha: Differential) -> int:
    """Dimension of the space of quadratic differentials divisible by alpha.

    Multiplication by a fixed nonzero 1-form is injective, so this always
    comes out to the genus; it is still computed as an honest matrix rank.
    """
    if alpha.is_zero():
        raise DomainError("zero differential")
    curve = alpha.curve
    rows = [_product_coordinates(curve, alpha.p, b) for b in _one_form_basis(curve)]
    return rational_rank(rows)


def obscurant_dim(tau: TauSubspace) -> int:
    """Dimension of the kernel of tau (x) H^0(K) -> H^0(K^2)."""
    rank, domain = _multiplication_profile(tau)
    return domain - rank


def classify(tau: TauSubspace) -> str:
    """Split pairs and triples of 1-forms into COPRIME and LINKED.

    A pair is coprime when the kernel of the multiplication map is the
    alternating tensor alone; a triple when the kernel is three-dimensional
    and the map is onto the (3g-3)-dimensional space of quadratic
    differentials.
    """
    rank, domain = _multiplication_profile(tau)
    kernel = domain - rank
    if tau.dimension == 2:
        return COPRIME if kernel == 1 else LINKED
    if kernel == 3 and rank == 3 * tau.curve.genus - 3:
        return COPRIME
    return LINKED


def overlap_degree(alpha: Differential, beta: Differential) -> int:
    """Degree of the common-zero divisor of two 1-forms, infinity included.

    Over an affine x-value both orders double at a branch point but the
    fiber is a single point, while off the branch locus the fiber has two
    points with the plain orders, so each shared root contributes twice its
    multiplicity in the gcd either way.  At infinity the order of p dx/y
    per point is g-1-deg p (two points for even deg f, and the doubled
    order at the single point for odd deg f gives the same total).
    """
    if alpha.is_zero() or beta.is_zero():
        raise DomainError("zero differential")
    if not isinstance(alpha.curve, HyperellipticCurve):
        raise DomainError("overlap is defined on hyperelliptic curves")
    if alpha.curve != beta.curve:
        raise DomainError("differentials must lie on one curve")
    g = alpha.curve.genus
    shared = alpha.p.gcd(beta.p)
    affine = 2 * max(shared.degree, 0)
    infinite = 2 * (g - 1 - max(alpha.p.degree, beta.p.degree))
    return affine + infinite


def veronese_linked_pair(curve: HyperellipticCurve, a, b, d) -> TauSubspace:
    """The pair (x-a)(x-b) dx/y, (x-a)(x-d) dx/y on a genus-three curve.

    The two forms divide both products of the pair and the product with
    the complementary chord, so the pair is linked with overlap two.
    """
    if not isinstance(curve, HyperellipticCurve) or curve.genus != 3:
        raise DomainError("the construction needs a genus-three hyperelliptic curve")
    a, b, d = Fraction(a), Fraction(b), Fraction(d)
    if len({a, b, d}) != 3:
        raise DomainError("parameters must be distinct")
    for t in (a, b, d):
        if curve.f(t) == 0:
            raise DomainError("parameter lies on the branch locus")
    first = Differential(curve, Polynomial.from_roots([a, b]))
    second = Differential(curve, Polynomial.from_roots([a, d]))
    return TauSubspace([first, second])


def isoperiodic_deformation_dim(tau: TauSubspace) -> int:
    """Dimension of the space of first-order deformations of the curve
    preserving every period of the forms in tau: the full deformation
    space less the rank of the multiplication map."""
    rank, _ = _multiplication_profile(tau)
    g = tau.curve.genus
    return (3 * g - 3) - rank


def noether_image_dim(curve) -> int:
    """Rank of Sym^2 H^0(K) -> H^0(K^2): 2g-1 on hyperelliptic curves,
    the full 3g-3 = 6 on smooth quartics."""
    basis = _one_form_basis(curve)
    rows = [
        _product_coordinates(curve, basis[i], basis[j])
        for i in range(len(basis))
        for j in range(i, len(basis))
    ]
    return rational_rank(rows)


def _affine_zero_values(alpha, numeric, tolerance, simple_error):
    """The x-values under the 2g-2 zeroes of alpha, each carrying two
    points of the curve; validates the zero locus as a side effect."""
    curve = alpha.curve
    if not isinstance(curve, HyperellipticCurve):
        raise DomainError("the operation is defined on hyperelliptic curves")
    if alpha.is_zero():
        raise DomainError("zero differential")
    p = alpha.p
    g = curve.genus
    if p.degree < g - 1:
        raise DomainError("a zero of alpha lies at infinity")
    if not p.is_squarefree():
        raise DomainError(simple_error)
    if p.gcd(curve.f).degree > 0:
        raise DomainError("alpha vanishes on the branch locus")
    if numeric:
        import numpy

        coeffs = [float(c) for c in reversed(p.coeffs)]
        roots = sorted(numpy.roots(coeffs), key=lambda z: (z.real, z.imag))
        return [complex(z) for z in roots]
    roots = p.rational_roots()
    if sum(m for _, m in roots) != p.degree:
        raise DomainError("irrational zero of alpha in exact mode")
    return [root for root, _ in roots]


def section_values(gamma: Differential, beta: Differential, alpha: Differential,
                   numeric=False, tolerance=1e-9):
    """Values of gamma/beta at the zeroes of alpha, in conjugate pairs.

    The ratio of two 1-forms on a hyperelliptic curve is a rational
    function of x alone, so the two zeroes over each x-value receive equal
    values and the output is constant on conjugate pairs by construction.
    """
    if gamma.curve != beta.curve or beta.curve != alpha.curve:
        raise DomainError("differentials must lie on one curve")
    if beta.is_zero():
        raise DomainError("zero differential")
    xs = _affine_zero_values(alpha, numeric, tolerance,
                             "zeroes of alpha are not distinct")
    values = []
    for x in xs:
        below = beta.p(x)
        if (numeric and abs(below) <= tolerance) or (not numeric and below == 0):
            raise DomainError("beta vanishes at a zero of alpha")
        v = gamma.p(x) / below
        values.extend([v, v])
    return values


def residues_of_quotient(omega: QuadDifferential, alpha: Differential,
                         numeric=False, tolerance=1e-9):
    """Residues of omega/alpha at the zeroes of alpha, in conjugate pairs.

    At a simple zero over x with y^2 = f(x) the residue is
    (q(x) + r(x) y) / (p'(x) y); rationalizing gives
    r(x)/p'(x) + q(x)/(f(x) p'(x)) sqrt(f(x)), an exact quadratic number.
    """
    if not isinstance(omega, QuadDifferential) or omega.curve != alpha.curve:
        raise DomainError("the differentials must lie on one curve")
    xs = _affine_zero_values(alpha, numeric, tolerance,
                             "higher-order zero unsupported in residue mode")
    slope = alpha.p.derivative()
    out = []
    for x in xs:
        if numeric:
            y = complex(omega.curve.f(x)) ** 0.5
            for sign in (1, -1):
                out.append((omega.q(x) + sign * omega.r(x) * y) / (slope(x) * sign * y))
            continue
        disc = omega.curve.f(x)
        rational = omega.r(x) / slope(x)
        radical = omega.q(x) / (disc * slope(x))
        out.append(QuadraticNumber(rational, radical, disc))
        out.append(QuadraticNumber(rational, -radical, disc))
    return out


def _line_basis(line):
    """Two independent rational points spanning the projective line
    {ax + by + cz = 0}."""
    coeffs = [line.coefficient(m) for m in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    pivot = next(i for i in range(3) if coeffs[i] != 0)
    points = []
    for i in range(3):
        if i == pivot:
            continue
        point = [Fraction(0)] * 3
        point[i] = Fraction(1)
        point[pivot] = -coeffs[i] / coeffs[pivot]
        points.append(tuple(point))
    return points


def _as_line(curve, value):
    if isinstance(value, Differential):
        if value.curve != curve:
            raise DomainError("differentials must lie on one curve")
        line = value.p
    elif isinstance(value, TernaryForm):
        line = value
    else:
        a, b, c = value
        line = TernaryForm.linear(a, b, c)
    if line.degree != 1:
        raise DomainError("a differential on a quartic is a linear form")
    if line.is_zero():
        raise DomainError("zero differential")
    return line


def _cross_ratio(a, b, c, d):
    return ((a - c) * (b - d)) / ((b - c) * (a - d))


def anharmonic_orbit(value):
    """The six values a cross-ratio can take under relabeling."""
    orbit = [value, 1 - value]
    for base in (value, 1 - value):
        if abs(base) > 0:
            orbit.append(1 / base)
    if abs(value) > 0:
        orbit.append((value - 1) / value)
    if abs(value - 1) > 0:
        orbit.append(value / (value - 1))
    return orbit


def quartic_cross_ratio(quartic: PlaneQuartic, alpha_line, beta_line, gamma_line,
                        tolerance=1e-9):
    """Cross-ratio reciprocity on a smooth plane quartic.

    Intersects the alpha line with the quartic (four points, found
    numerically), forms the quadruple gamma(z)/beta(z) of linear-form
    ratios, and returns its cross-ratio, the cross-ratio of the four
    points on the line, and whether the former lies in the anharmonic
    orbit of the latter within the tolerance.
    """
    alpha = _as_line(quartic, alpha_line)
    beta = _as_line(quartic, beta_line)
    gamma = _as_line(quartic, gamma_line)
    u, v = _line_basis(alpha)
    base = None
    for k in range(6):
        candidate = tuple(u[i] + k * v[i] for i in range(3))
        if quartic.form(candidate) != 0:
            base = candidate
            break
    # at most four points of the line lie on the quartic, so some shift works
    assert base is not None, "no admissible chart on the line"
    coords = tuple(Polynomial((v[i], base[i])) for i in range(3))
    restricted = quartic.form(coords)
    assert restricted.degree == 4, "restriction must stay a quartic"

    import numpy

    roots = numpy.roots([float(c) for c in reversed(restricted.coeffs)])
    roots = sorted((complex(z) for z in roots), key=lambda z: (z.real, z.imag))
    scale = max(1.0, max(abs(z) for z in roots))
    for i in range(4):
        for j in range(i + 1, 4):
            if abs(roots[i] - roots[j]) <= tolerance * scale:
                raise DomainError("non-simple zeroes")
    points = [tuple(complex(base[i]) * t + complex(v[i]) for i in range(3)) for t in roots]

    quadruple = []
    for z in points:
        size = max(abs(c) for c in z)
        below = beta(z)
        if abs(below) <= tolerance * size:
            raise DomainError("beta vanishes at a zero of alpha")
        quadruple.append(gamma(z) / below)
    spread = max(abs(a - b) for a in quadruple for b in quadruple)
    if spread <= tolerance * max(1.0, max(abs(a) for a in quadruple)):
        raise DomainError("degenerate quadruple")
    denominator = (quadruple[1] - quadruple[2]) * (quadruple[0] - quadruple[3])
    if abs(denominator) <= tolerance**2:
        raise DomainError("degenerate quadruple")
    forms_ratio = _cross_ratio(*quadruple)
    points_ratio = _cross_ratio(*roots)
    matches = any(
        abs(forms_ratio - candidate) <= tolerance * (1 + abs(candidate))
        for candidate in anharmonic_orbit(points_ratio)
    )
    return forms_ratio, points_ratio, matches
