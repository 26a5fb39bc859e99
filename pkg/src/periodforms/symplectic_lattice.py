"""Integral symplectic lattices: saturation, Pfaffian determinants, normal
forms, and constructive transitivity of Sp(2g, Z) on complete sublattices.

Ambient is Z^(2g) with basis ordered e0, f0, e1, f1, ... and the standard
form pairing e_i with f_i.  Sublattices are given by integer generator
vectors; the Hermite form of the generators is the canonical representative.
"""

from __future__ import annotations

from math import gcd

from .errors import DomainError
from .intlinalg import (
    bezout_vector,
    hnf_rows_nonzero,
    identity,
    integer_kernel,
    is_zero_vec,
    mat_eq,
    mat_mul,
    mat_vec,
    pfaffian,
    rational_rank,
    rational_solve,
    row_hnf,
    saturate_rows,
    transpose,
    vec_gcd,
)


def standard_gram(genus: int):
    """Gram matrix of the standard symplectic form, g blocks [[0,1],[-1,0]]."""
    if genus < 1:
        raise DomainError("genus must be at least 1")
    n = 2 * genus
    j = [[0] * n for _ in range(n)]
    for i in range(genus):
        j[2 * i][2 * i + 1] = 1
        j[2 * i + 1][2 * i] = -1
    return j


class SymplecticSpace:
    """Z^(2g) equipped with an integral alternating nondegenerate form."""

    def __init__(self, genus: int, gram=None):
        if genus < 1:
            raise DomainError("genus must be at least 1")
        self.genus = genus
        self.dim = 2 * genus
        if gram is None:
            gram = standard_gram(genus)
            self._standard = True
        else:
            gram = [[int(x) for x in row] for row in gram]
            if len(gram) != self.dim or any(len(r) != self.dim for r in gram):
                raise DomainError("gram matrix must be 2g x 2g")
            for i in range(self.dim):
                if gram[i][i] != 0:
                    raise DomainError("gram matrix has nonzero diagonal")
                for k in range(i):
                    if gram[i][k] != -gram[k][i]:
                        raise DomainError("gram matrix is not antisymmetric")
            if pfaffian(gram) == 0:
                raise DomainError("gram matrix is degenerate")
            self._standard = mat_eq(gram, standard_gram(genus))
        self.gram = gram

    def is_standard(self) -> bool:
        return self._standard

    def pairing(self, u, v) -> int:
        """omega(u, v) = u^T * gram * v."""
        jv = mat_vec(self.gram, v)
        return sum(a * b for a, b in zip(u, jv))

    def __eq__(self, other):
        return (
            isinstance(other, SymplecticSpace)
            and self.genus == other.genus
            and mat_eq(self.gram, other.gram)
        )

    def __repr__(self):
        tag = "standard" if self._standard else "custom"
        return "SymplecticSpace(genus=%d, %s)" % (self.genus, tag)


def is_indivisible(v) -> bool:
    """True when v is primitive: the gcd of its coordinates is 1."""
    return vec_gcd([int(x) for x in v]) == 1


class Sublattice:
    """A finite-rank sublattice of the ambient, given by generator vectors."""

    def __init__(self, vectors, genus=None, space=None):
        vectors = [tuple(int(x) for x in v) for v in vectors]
        if not vectors:
            raise DomainError("sublattice needs at least one generator")
        n = len(vectors[0])
        if any(len(v) != n for v in vectors):
            raise DomainError("generators have mixed lengths")
        if n % 2 != 0 or n < 2:
            raise DomainError("ambient dimension must be even and positive")
        if space is None:
            space = SymplecticSpace(genus if genus is not None else n // 2)
        if space.dim != n:
            raise DomainError("generators do not match the ambient dimension")
        if rational_rank(vectors) != len(vectors):
            raise DomainError("generators are linearly dependent")
        self.space = space
        self.vectors = vectors

    @property
    def genus(self) -> int:
        return self.space.genus

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def hnf(self):
        """Canonical Hermite-form generators of this lattice."""
        return row_hnf(list(map(list, self.vectors)))

    def same_lattice(self, other: "Sublattice") -> bool:
        return self.space == other.space and mat_eq(self.hnf(), other.hnf())

    def gram_matrix(self):
        vs = self.vectors
        return [[self.space.pairing(u, v) for v in vs] for u in vs]

    def contains(self, v) -> bool:
        try:
            sol = rational_solve(transpose(self.vectors), v)
        except DomainError:
            return False
        return all(c.denominator == 1 for c in sol)

    def __repr__(self):
        return "Sublattice(genus=%d, rank=%d)" % (self.genus, self.rank)


def saturate(lattice: Sublattice) -> Sublattice:
    """Smallest sublattice containing the input with torsion-free quotient."""
    sat = saturate_rows(list(map(list, lattice.vectors)), lattice.space.dim)
    return Sublattice(sat, space=lattice.space)


def is_complete(lattice: Sublattice) -> bool:
    return mat_eq(lattice.hnf(), saturate(lattice).hnf())


def determinant(lattice: Sublattice) -> int:
    """|Pfaffian| of the restricted Gram matrix; rank must be even and the
    restriction nondegenerate."""
    if lattice.rank % 2 != 0:
        raise DomainError("not symplectic sublattice: odd rank")
    pf = pfaffian(lattice.gram_matrix())
    if pf == 0:
        raise DomainError("not symplectic sublattice: degenerate restriction")
    return abs(pf)


class NormalForm:
    """Result of alternating_normal_form: divisors, adapted basis, change."""

    def __init__(self, divisors, basis, change):
        self.divisors = divisors
        self.basis = basis
        self.change = change


def alternating_normal_form(lattice: Sublattice) -> NormalForm:
    """Adapted basis with Gram of blocks [[0, d_i], [-d_i, 0]], d_1 | d_2 | ...

    The product of the divisors equals the determinant.  The change matrix C
    satisfies new_vectors = C * old_vectors (acting on generator rows).
    """
    if lattice.rank % 2 != 0:
        raise DomainError("degenerate restriction: odd rank")
    gram = lattice.gram_matrix()
    divisors, change = _alternating_reduce(gram)
    new_vectors = mat_mul(change, list(map(list, lattice.vectors)))
    basis = Sublattice(new_vectors, space=lattice.space)
    return NormalForm(divisors, basis, change)


def _alternating_reduce(gram):
    """Congruence-reduce an antisymmetric integer matrix to divisor blocks.

    Returns (divisors, C) with C unimodular and C*G*C^T in block form.
    Basis bookkeeping: new_i = sum_j C[i][j] old_j.
    """
    g = [list(row) for row in gram]
    r = len(g)
    c = identity(r)

    def add(j, k, q):
        # basis_j += q * basis_k
        g[j] = [x + q * y for x, y in zip(g[j], g[k])]
        for i in range(r):
            g[i][j] += q * g[i][k]
        c[j] = [x + q * y for x, y in zip(c[j], c[k])]

    def swap(j, k):
        if j == k:
            return
        g[j], g[k] = g[k], g[j]
        for row in g:
            row[j], row[k] = row[k], row[j]
        c[j], c[k] = c[k], c[j]

    def negate(j):
        g[j] = [-x for x in g[j]]
        for row in g:
            row[j] = -row[j]
        c[j] = [-x for x in c[j]]

    divisors = []
    s = 0
    while s < r:
        best = None
        for i in range(s, r):
            for j in range(s, r):
                if g[i][j] != 0 and (
                    best is None or abs(g[i][j]) < abs(g[best[0]][best[1]])
                ):
                    best = (i, j)
        if best is None:
            raise DomainError("degenerate restriction")
        i, j = best
        swap(s, i)
        if j == s:
            j = i
        swap(s + 1, j)
        if g[s][s + 1] < 0:
            negate(s + 1)
        p = g[s][s + 1]
        for j2 in range(s + 2, r):
            q = g[s][j2] // p
            if q:
                add(j2, s + 1, -q)
            q = g[s + 1][j2] // p
            if q:
                add(j2, s, q)
        if any(g[s][j2] or g[s + 1][j2] for j2 in range(s + 2, r)):
            continue  # a remainder smaller than the pivot appeared
        bad = None
        for i2 in range(s + 2, r):
            for j2 in range(i2 + 1, r):
                if g[i2][j2] % p != 0:
                    bad = i2
                    break
            if bad is not None:
                break
        if bad is not None:
            add(s, bad, 1)  # drag the offending row up, then rereduce
            continue
        divisors.append(p)
        s += 2
    for a, b in zip(divisors, divisors[1:]):
        assert b % a == 0, "divisor chain broken"
    return divisors, c


class SpMatrix:
    """An element of Sp(2g, Z) for the standard form, acting on columns."""

    def __init__(self, entries):
        entries = [[int(x) for x in row] for row in entries]
        n = len(entries)
        if n % 2 != 0 or n < 2 or any(len(r) != n for r in entries):
            raise DomainError("symplectic matrix must be square of even size")
        self.genus = n // 2
        j = standard_gram(self.genus)
        if not mat_eq(mat_mul(transpose(entries), mat_mul(j, entries)), j):
            raise DomainError("matrix does not preserve the symplectic form")
        self.entries = entries

    def apply(self, v):
        return mat_vec(self.entries, [int(x) for x in v])

    def apply_lattice(self, lattice: Sublattice) -> Sublattice:
        if not lattice.space.is_standard() or lattice.genus != self.genus:
            raise DomainError("lattice does not live in this matrix's space")
        return Sublattice(
            [self.apply(v) for v in lattice.vectors], space=lattice.space
        )

    def compose(self, other: "SpMatrix") -> "SpMatrix":
        """self after other (matrix product self * other)."""
        return SpMatrix(mat_mul(self.entries, other.entries))

    def inverse(self) -> "SpMatrix":
        # A^-1 = -J A^T J for the standard form (J^2 = -I)
        j = standard_gram(self.genus)
        inv = mat_mul(j, mat_mul(transpose(self.entries), j))
        return SpMatrix([[-x for x in row] for row in inv])

    def __eq__(self, other):
        return isinstance(other, SpMatrix) and mat_eq(self.entries, other.entries)

    def __repr__(self):
        return "SpMatrix(genus=%d)" % self.genus


def sp_identity(genus: int) -> SpMatrix:
    return SpMatrix(identity(2 * genus))


def extend_to_symplectic_basis(v, genus=None) -> SpMatrix:
    """Symplectic matrix whose first column is the primitive vector v.

    Constructive transitivity of Sp(2g, Z) on primitive vectors: a dual
    partner w with omega(v, w) = 1 comes from a Bezout combination, and the
    orthogonal complement of the hyperbolic pair carries a unimodular
    restriction that the alternating reduction turns into standard pairs.
    """
    v = [int(x) for x in v]
    n = len(v)
    if genus is not None and n != 2 * genus:
        raise DomainError("vector length does not match genus")
    if n % 2 != 0 or n < 2:
        raise DomainError("vector length must be even and positive")
    g = n // 2
    if not is_indivisible(v):
        raise DomainError("vector not primitive")
    j = standard_gram(g)
    cov = mat_vec(transpose(j), v)  # omega(v, x) = cov . x
    g0, w = bezout_vector(cov)
    assert g0 == 1, "primitive vector has imprimitive pairing functional"
    rows = [cov, mat_vec(transpose(j), w)]
    comp = integer_kernel(rows, n)
    cols = [v, w]
    if comp:
        space = SymplecticSpace(g)
        gram = [[space.pairing(a, b) for b in comp] for a in comp]
        divisors, change = _alternating_reduce(gram)
        assert all(d == 1 for d in divisors), "complement is not unimodular"
        cols.extend(mat_mul(change, comp))
    entries = transpose(cols)
    a = SpMatrix(entries)
    assert [row[0] for row in a.entries] == v
    return a


def _embed_reduced(m: SpMatrix, genus: int) -> SpMatrix:
    """Lift an Sp(2g-2, Z) matrix to Sp(2g, Z) fixing e0 and f0."""
    n = 2 * genus
    out = identity(n)
    for i in range(n - 2):
        for k in range(n - 2):
            out[i + 2][k + 2] = m.entries[i][k]
    return SpMatrix(out)


def _shear(xred, genus: int) -> SpMatrix:
    """Sp(2g, Z) fixing e0, sending f0 to f0 + x (x in the e0-f0 complement),
    and correcting the other basis vectors by multiples of e0."""
    n = 2 * genus
    x = [0, 0] + [int(t) for t in xred]
    if len(x) != n:
        raise DomainError("shear vector has wrong length")
    j = standard_gram(genus)
    jx = mat_vec(j, x)
    cols = []
    e0 = [1] + [0] * (n - 1)
    cols.append(e0)
    f0col = [0, 1] + list(x[2:])
    cols.append(f0col)
    for k in range(2, n):
        bk = [1 if i == k else 0 for i in range(n)]
        coef = jx[k]  # omega(b_k, x) = (J x)_k ... sign handled below
        col = [bi - coef * ei for bi, ei in zip(bk, e0)]
        cols.append(col)
    return SpMatrix(transpose(cols))


def _canonical_rank2(d: int, genus: int) -> Sublattice:
    n = 2 * genus
    e0 = [1] + [0] * (n - 1)
    if d == 1:
        f0 = [0, 1] + [0] * (n - 2)
        return Sublattice([e0, f0])
    if genus < 2:
        raise DomainError("determinant > 1 impossible at genus 1")
    y = [0] * n
    y[1] = d
    y[2] = 1
    return Sublattice([e0, y])


def _reduce_rank2_to_canonical(lattice: Sublattice):
    """Returns (R, d) with R in Sp(2g, Z) mapping the complete rank-2 input
    onto the canonical lattice of its determinant.

    Follows the quotient construction: an adapted basis x, y with
    omega(x, y) = d, x moved to e0, then the residue of y in the quotient
    e0-perp / e0 is normalized by Sp(2g-2, Z) together with a shear solving
    d*[x] + [A][u] = [u'].
    """
    g = lattice.genus
    nf = alternating_normal_form(lattice)
    d = nf.divisors[0]
    x, y = nf.basis.vectors
    assert is_indivisible(x), "adapted basis of a complete lattice is primitive"
    a1 = extend_to_symplectic_basis(x, g)
    r = a1.inverse()
    y1 = r.apply(y)
    assert y1[1] == d, "pairing with e0 must equal the divisor"
    z = list(y1[2:])
    if is_zero_vec(z):
        if d != 1:
            raise DomainError("sublattice not complete")
        return r, 1
    if g < 2:
        raise DomainError("unexpected residue at genus 1")
    m = vec_gcd(z)
    if gcd(m, d) != 1:
        raise DomainError("sublattice not complete")
    w = [t // m for t in z]
    b1 = extend_to_symplectic_basis(w, g - 1)
    r = _embed_reduced(b1.inverse(), g).compose(r)
    # the moved lattice is span{e0, d*f0 + m*e1 (mod e0)}
    if d == 1:
        red = [0] * (2 * g - 2)
        red[0] = -m
        r = _shear(red, g).compose(r)
        _check_canonical(r, lattice, 1)
        return r, 1
    if m % d == 1:
        k = (m - 1) // d
        red = [0] * (2 * g - 2)
        red[0] = -k
        r = _shear(red, g).compose(r)
        _check_canonical(r, lattice, d)
        return r, d
    t = pow(m % d, -1, d)
    w2 = [0] * (2 * g - 2)
    w2[0] = t
    w2[1] = d
    b2 = extend_to_symplectic_basis(w2, g - 1)
    r = _embed_reduced(b2, g).compose(r)
    # now the residue is m*t*e1 + m*d*f1 with m*t = 1 + k*d
    k = (m * t - 1) // d
    red = [0] * (2 * g - 2)
    red[0] = -k
    red[1] = -m
    r = _shear(red, g).compose(r)
    _check_canonical(r, lattice, d)
    return r, d


def _check_canonical(r: SpMatrix, lattice: Sublattice, d: int):
    image = r.apply_lattice(lattice)
    target = _canonical_rank2(d, lattice.genus)
    assert image.same_lattice(target), "canonical reduction failed"


def _validate_pair(u: Sublattice, u2: Sublattice, rank: int):
    if u.space != u2.space:
        raise DomainError("sublattices live in different ambients")
    if not u.space.is_standard():
        raise DomainError("transitivity requires the standard symplectic form")
    if u.rank != rank or u2.rank != rank:
        raise DomainError("expected rank-%d sublattices" % rank)
    d1 = determinant(u)
    d2 = determinant(u2)
    if d1 != d2:
        raise DomainError("unequal determinants: %d vs %d" % (d1, d2))
    if not is_complete(u) or not is_complete(u2):
        raise DomainError("sublattice not complete")
    return d1


def map_rank2_sublattice(u: Sublattice, u2: Sublattice) -> SpMatrix:
    """An integral symplectic matrix sending the first complete rank-2
    sublattice onto the second; equal determinants required."""
    _validate_pair(u, u2, 2)
    r1, _ = _reduce_rank2_to_canonical(u)
    r2, _ = _reduce_rank2_to_canonical(u2)
    delta = r2.inverse().compose(r1)
    assert delta.apply_lattice(u).same_lattice(u2), "rank-2 mapping failed"
    return delta


def map_rank4_sublattice(u: Sublattice, u2: Sublattice) -> SpMatrix:
    """Same as map_rank2_sublattice for complete rank-4 sublattices, via the
    splitting into a unimodular factor and a d-scaled factor."""
    _validate_pair(u, u2, 4)
    r1 = _reduce_rank4_to_canonical(u)
    r2 = _reduce_rank4_to_canonical(u2)
    delta = r2.inverse().compose(r1)
    assert delta.apply_lattice(u).same_lattice(u2), "rank-4 mapping failed"
    return delta


def _reduce_rank4_to_canonical(lattice: Sublattice) -> SpMatrix:
    g = lattice.genus
    nf = alternating_normal_form(lattice)
    if nf.divisors[0] != 1:
        raise DomainError("restriction not indivisible")
    x1, y1, x2, y2 = nf.basis.vectors
    q = Sublattice([x1, y1], space=lattice.space)
    ra, _ = _reduce_rank2_to_canonical(q)
    vx2 = ra.apply(x2)
    vy2 = ra.apply(y2)
    assert vx2[0] == vx2[1] == vy2[0] == vy2[1] == 0, (
        "second factor must land in the complement of e0, f0"
    )
    factor = Sublattice([vx2[2:], vy2[2:]], genus=g - 1)
    if not is_complete(factor):
        raise DomainError("sublattice not complete")
    rq, dq = _reduce_rank2_to_canonical(factor)
    assert dq == nf.divisors[1]
    return _embed_reduced(rq, g).compose(ra)
