"""Dense univariate polynomials and homogeneous ternary forms over Q.

Coefficients are Fractions throughout; nothing in here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError


def _coeffs(values):
    out = [Fraction(v) for v in values]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Polynomial:
    """Univariate polynomial, coefficients listed from the constant term up.

    The zero polynomial has degree -1 by convention.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _coeffs(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @staticmethod
    def x():
        return Polynomial((0, 1))

    @staticmethod
    def from_roots(roots, lead=1):
        p = Polynomial((lead,))
        for r in roots:
            p = p * Polynomial((-Fraction(r), 1))
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading_coefficient(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coefficient(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            [self.coefficient(k) + other.coefficient(k) for k in range(n)]
        )

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        exponent = int(exponent)
        if exponent < 0:
            raise DomainError("polynomial powers must be nonnegative")
        out = Polynomial((1,))
        for _ in range(exponent):
            out = out * self
        return out

    def __divmod__(self, other):
        other = _lift(other)
        if other.is_zero():
            raise DomainError("division by the zero polynomial")
        rem = list(self.coeffs)
        den = other.coeffs
        quo = [Fraction(0)] * max(0, len(rem) - len(den) + 1)
        for k in range(len(rem) - len(den), -1, -1):
            c = rem[k + len(den) - 1] / den[-1]
            quo[k] = c
            if c:
                for j, b in enumerate(den):
                    rem[k + j] -= c * b
        return Polynomial(quo), Polynomial(rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self):
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Polynomial([c / lead for c in self.coeffs])

    def gcd(self, other):
        a, b = self, _lift(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self):
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def is_squarefree(self):
        if self.is_zero():
            return False
        return self.gcd(self.derivative()).degree == 0

    def __call__(self, x):
        # Horner; works for Fractions, floats and complex alike.
        acc = self.coeffs[-1] if self.coeffs else Fraction(0)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def rational_roots(self):
        """All rational roots with multiplicities, sorted by the root.

        The total multiplicity may be less than the degree when some
        roots are irrational; the caller decides whether that matters.
        """
        if self.is_zero():
            raise DomainError("the zero polynomial has no root list")
        p = self
        found = {}
        if p.coefficient(0) == 0:
            mult = 0
            x = Polynomial.x()
            while p.coefficient(0) == 0 and p.degree > 0:
                p = p // x
                mult += 1
            found[Fraction(0)] = mult
        if p.degree > 0:
            scale = 1
            for c in p.coeffs:
                scale = scale * c.denominator // _gcd_int(scale, c.denominator)
            ints = [int(c * scale) for c in p.coeffs]
            for num in _divisors(ints[0]):
                for den in _divisors(ints[-1]):
                    for cand in (Fraction(num, den), Fraction(-num, den)):
                        if cand in found or p(cand) != 0:
                            continue
                        mult = 0
                        factor = Polynomial((-cand, 1))
                        while p(cand) == 0 and p.degree > 0:
                            p = p // factor
                            mult += 1
                        found[cand] = mult
        return sorted(found.items())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _lift(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Polynomial(%s)" % (list(self.coeffs),)


def _lift(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial((value,))
    raise DomainError("cannot use %r as a polynomial" % (value,))


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return abs(a) if a else 1


def _divisors(n):
    n = abs(n)
    if n == 0:
        return [1]
    out = []
    k = 1
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            if k != n // k:
                out.append(n // k)
        k += 1
    return sorted(out)


def ternary_monomials(degree):
    """Exponent triples (i, j, k) with i+j+k = degree, leading variable first."""
    return sorted(
        (
            (i, j, degree - i - j)
            for i in range(degree, -1, -1)
            for j in range(degree - i, -1, -1)
        ),
        reverse=True,
    )


class TernaryForm:
    """Homogeneous form in three variables with rational coefficients."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs):
        degree = int(degree)
        if degree < 0:
            raise DomainError("a form needs a nonnegative degree")
        table = {}
        for key, value in dict(coeffs).items():
            i, j, k = (int(e) for e in key)
            if min(i, j, k) < 0 or i + j + k != degree:
                raise DomainError(
                    "exponents %r do not match degree %d" % (key, degree)
                )
            value = Fraction(value)
            if value:
                table[(i, j, k)] = value
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", tuple(sorted(table.items(), reverse=True)))

    def __setattr__(self, name, value):
        raise AttributeError("TernaryForm is immutable")

    @staticmethod
    def linear(a, b, c):
        return TernaryForm(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, key):
        for k, v in self.coeffs:
            if k == tuple(key):
                return v
        return Fraction(0)

    def coefficient_vector(self):
        return [self.coefficient(m) for m in ternary_monomials(self.degree)]

    def __add__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        if self.degree != other.degree:
            raise DomainError("cannot add forms of different degrees")
        table = dict(self.coeffs)
        for key, value in other.coeffs:
            table[key] = table.get(key, Fraction(0)) + value
        return TernaryForm(self.degree, table)

    def __neg__(self):
        return TernaryForm(self.degree, {k: -v for k, v in self.coeffs})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return TernaryForm(self.degree, {k: v * c for k, v in self.coeffs})

    def __mul__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        table = {}
        for (i1, j1, k1), a in self.coeffs:
            for (i2, j2, k2), b in other.coeffs:
                key = (i1 + i2, j1 + j2, k1 + k2)
                table[key] = table.get(key, Fraction(0)) + a * b
        return TernaryForm(self.degree + other.degree, table)

    def partial(self, variable):
        if variable not in (0, 1, 2):
            raise DomainError("variable index must be 0, 1 or 2")
        if self.degree == 0:
            raise DomainError("cannot differentiate a constant form")
        table = {}
        for key, value in self.coeffs:
            e = key[variable]
            if e == 0:
                continue
            new = list(key)
            new[variable] = e - 1
            table[tuple(new)] = value * e
        return TernaryForm(self.degree - 1, table)

    def __call__(self, point):
        x, y, z = point
        acc = 0
        for (i, j, k), value in self.coeffs:
            acc = acc + value * x**i * y**j * z**k
        return acc

    def __eq__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __repr__(self):
        return "TernaryForm(%d, %s)" % (self.degree, dict(self.coeffs))
