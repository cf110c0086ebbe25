"""Minimal conic bundles over the projective line.

A rank-3 split bundle O(a1) + O(a2) + O(a3) carries plane-conic fibers; a
symmetric 3x3 matrix of binary forms with deg q_ij = a_i + a_j cuts out a
conic-bundle surface inside the projectivised bundle.  This module covers:

  * the six Diophantine conditions a divisor D = aF - bK on a minimal conic
    bundle with s sphere components must satisfy to come from a finite
    real-fibered morphism to the plane, and the distinguished solution
    (a, b) = (s - 2, 1);
  * the Chow ring Z[H, E] / (E^2, H^3 - c E H^2) of the projectivised bundle
    and the identities it yields for the surface (K_X^2 = 8 - 3a - 2c, the
    restriction of the tautological class);
  * discriminants of conic-bundle sections: the determinant is a binary form
    of degree 2(a1 + a2 + a3) whose roots on P^1 (infinity included) mark the
    singular fibers, 2s of them for a smooth surface with s spheres;
  * the diagonal section p1 x1^2 + p2 x2^2 + p3 x3^2 built from prescribed
    simple real roots.

Binary forms store integer coefficients with index i holding the coefficient
of u^i v^(d-i); dehomogenising at v = 1 is then the identity on coefficient
lists, and the point at infinity [1:0] is a root exactly when the top
coefficient vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .lattice import IntLattice, adjunction_genus, riemann_roch_dim
from . import realroots


@dataclass(frozen=True)
class BinaryForm:
    degree: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if len(coeffs) != self.degree + 1:
            raise ValueError("need degree + 1 coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        return BinaryForm(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return BinaryForm(self.degree, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return BinaryForm(self.degree + other.degree, tuple(out))

    def effective_degree(self) -> int:
        """Largest i with a nonzero u^i coefficient (-1 for the zero form)."""
        for i in range(self.degree, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def infinity_multiplicity(self) -> int:
        """Multiplicity of the root at [1:0], i.e. the v-adic valuation gap."""
        if self.is_zero():
            raise ValueError("zero form")
        return self.degree - self.effective_degree()


def zero_form(degree: int) -> BinaryForm:
    return BinaryForm(degree, (0,) * (degree + 1))


def form_from_roots(degree: int, roots) -> BinaryForm:
    """Primitive integer form of the given degree with the given rational
    roots (as points [p : q] of P^1 with t = u/v = p/q) and no root at
    infinity; requires len(roots) == degree."""
    if len(roots) != degree:
        raise ValueError("number of roots must equal the degree")
    form = BinaryForm(0, (1,))
    for root in roots:
        rho = Fraction(root)
        form = form * BinaryForm(1, (-rho.numerator, rho.denominator))
    return form


@dataclass(frozen=True)
class ConicMatrix:
    splitting: tuple
    entries: tuple  # 3x3, symmetric, entries[i][j] a BinaryForm of degree a_i + a_j

    def __post_init__(self):
        a = tuple(int(x) for x in self.splitting)
        if len(a) != 3 or not (a[0] <= a[1] <= a[2]):
            raise ValueError("splitting must be three integers a1 <= a2 <= a3")
        if a[0] + a[0] < 0:
            raise ValueError("splitting degrees a_i + a_j must all be nonnegative")
        entries = tuple(tuple(row) for row in self.entries)
        if len(entries) != 3 or any(len(row) != 3 for row in entries):
            raise ValueError("entries must form a 3x3 matrix")
        for i in range(3):
            for j in range(3):
                q = entries[i][j]
                if not isinstance(q, BinaryForm):
                    raise ValueError("entries must be binary forms")
                if q.degree != a[i] + a[j]:
                    raise ValueError(
                        f"entry ({i},{j}) must have degree {a[i] + a[j]}, got {q.degree}"
                    )
                if q.coeffs != entries[j][i].coeffs:
                    raise ValueError("matrix must be symmetric")
        object.__setattr__(self, "splitting", a)
        object.__setattr__(self, "entries", entries)

    def is_diagonal(self) -> bool:
        return all(self.entries[i][j].is_zero() for i in range(3) for j in range(3) if i != j)


def diagonal_matrix(splitting, forms) -> ConicMatrix:
    a = tuple(int(x) for x in splitting)
    entries = [[zero_form(a[i] + a[j]) for j in range(3)] for i in range(3)]
    for i in range(3):
        entries[i][i] = forms[i]
    return ConicMatrix(a, tuple(tuple(row) for row in entries))


# ---------------------------------------------------------------------------
# Necessary conditions and the distinguished divisor


@dataclass(frozen=True)
class BundleConditionReport:
    s: int
    a: int
    b: int
    c1: bool  # b >= 1
    c2: bool  # a >= -1
    c3: bool  # s = b ((4 - s) b + 2a)
    c4: bool  # a + (4 - s) b <= 2
    c5: bool  # a = s b (mod 2)
    c6: bool  # 2a > b (s - 4)

    @property
    def passed(self) -> bool:
        return self.c1 and self.c2 and self.c3 and self.c4 and self.c5 and self.c6

    def conditions_dict(self):
        return {f"c{i}": getattr(self, f"c{i}") for i in range(1, 7)}


def necbundle_conditions(s: int, a: int, b: int) -> BundleConditionReport:
    """The six conditions on D = aF - bK over a minimal conic bundle with s
    sphere components (K.K = 8 - 2s, F.K = -2, F.F = 0)."""
    if s < 1:
        raise ValueError("s must be at least 1")
    return BundleConditionReport(
        s, a, b,
        b >= 1,
        a >= -1,
        s == b * ((4 - s) * b + 2 * a),
        a + (4 - s) * b <= 2,
        (a - s * b) % 2 == 0,
        2 * a > b * (s - 4),
    )


def conic_bundle_lattice(s: int) -> IntLattice:
    """Real Picard lattice <F, K> of a minimal conic bundle with s spheres."""
    return IntLattice(2, ("F", "K"), ((0, -2), (-2, 8 - 2 * s)))


def candidate_divisor(s: int):
    """The distinguished solution (a, b) = (s - 2, 1) with its invariants.

    Returns a dict with the coefficients, the sectional genus s - 1 computed
    by adjunction in <F, K>, and the Riemann-Roch lower bound s + 3 for the
    dimension of global sections.
    """
    if s < 2:
        raise ValueError("need at least two sphere components")
    lat = conic_bundle_lattice(s)
    d = lat.vector((s - 2, -1))
    k = lat.vector((0, 1))
    genus = adjunction_genus(d, k)
    bound = riemann_roch_dim(d, k)
    return {"a": s - 2, "b": 1, "genus": genus, "ell_lower_bound": bound}


# ---------------------------------------------------------------------------
# Chow ring of the projectivised bundle

_CHOW_BASIS = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (2, 1))
_CHOW_INDEX = {m: i for i, m in enumerate(_CHOW_BASIS)}


@dataclass(frozen=True)
class ChowClass:
    """Element of Z[H, E] / (E^2, H^3 - c E H^2) on basis
    1, H, E, H^2, HE, H^2 E; both relations are applied eagerly."""

    c: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(x) for x in self.coeffs)
        if len(coeffs) != 6:
            raise ValueError("a Chow class has six coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    def _check(self, other):
        if self.c != other.c:
            raise ValueError("Chow classes live on bundles with different first Chern class")

    def __add__(self, other):
        self._check(other)
        return ChowClass(self.c, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return ChowClass(self.c, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return ChowClass(self.c, tuple(-a for a in self.coeffs))

    def __rmul__(self, k):
        return ChowClass(self.c, tuple(int(k) * a for a in self.coeffs))

    def __mul__(self, other):
        return chow_mul(self, other)


def chow_zero(c: int) -> ChowClass:
    return ChowClass(c, (0,) * 6)


def chow_one(c: int) -> ChowClass:
    return ChowClass(c, (1, 0, 0, 0, 0, 0))


def chow_h(c: int) -> ChowClass:
    return ChowClass(c, (0, 1, 0, 0, 0, 0))


def chow_e(c: int) -> ChowClass:
    return ChowClass(c, (0, 0, 1, 0, 0, 0))


def _reduce_monomial(c, h, e):
    """Rewrite H^h E^e on the basis; returns (factor, index) or None."""
    factor = 1
    while h >= 3:
        h -= 1
        e += 1
        factor *= c
    if e >= 2:
        return None
    key = (h, e)
    if key not in _CHOW_INDEX:
        return None  # total degree above the top class
    return factor, _CHOW_INDEX[key]


def chow_mul(x: ChowClass, y: ChowClass) -> ChowClass:
    x._check(y)
    out = [0] * 6
    for i, a in enumerate(x.coeffs):
        if not a:
            continue
        hi, ei = _CHOW_BASIS[i]
        for j, b in enumerate(y.coeffs):
            if not b:
                continue
            hj, ej = _CHOW_BASIS[j]
            reduced = _reduce_monomial(x.c, hi + hj, ei + ej)
            if reduced is None:
                continue
            factor, idx = reduced
            out[idx] += a * b * factor
    return ChowClass(x.c, tuple(out))


def chow_degree(x: ChowClass) -> int:
    """Coefficient of the point class E H^2."""
    return x.coeffs[_CHOW_INDEX[(2, 1)]]


def surface_class_identities(a: int, c: int):
    """Ring-computed invariants of the surface X of class 2H + aE (a even).

    Everything is evaluated inside the Chow ring and then asserted against
    the closed forms: K_X^2 = 8 - 3a - 2c, s = 3(a/2) + c, and the
    restriction of the tautological class of the normalised bundle (the twist
    by a/2) to X equals (s - 2) F - K.
    """
    if a % 2:
        raise ValueError("the surface class must be 2H + aE with a even")
    b = a // 2
    h, e = chow_h(c), chow_e(c)
    x_class = 2 * h + a * e
    kp = (c - 2) * e - 3 * h
    kx = kp + x_class
    kx2 = chow_degree(kx * kx * x_class)
    assert kx2 == 8 - 3 * a - 2 * c
    s = 3 * b + c
    h_tw = h + b * e  # tautological class of the normalised bundle
    fiber_deg = chow_degree(h_tw * e * x_class)  # equals (xF + yK).F = -2y
    assert fiber_deg % 2 == 0
    y = -fiber_deg // 2
    assert y == -1
    k_deg = chow_degree(h_tw * kx * x_class)  # equals (xF + yK).K = -2x + y(8 - 2s)
    num = y * (8 - 2 * s) - k_deg
    assert num % 2 == 0
    x = num // 2
    assert x == s - 2
    return {"KX2": kx2, "s": s, "x": x, "y": y}


# ---------------------------------------------------------------------------
# Discriminants


def discriminant(matrix: ConicMatrix) -> BinaryForm:
    """Determinant of the section matrix: a binary form of degree 2(a1+a2+a3)
    whose zero locus on P^1 is the set of singular fibers."""
    q = matrix.entries
    return (
        q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1])
        - q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0])
        + q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0])
    )


def _form_squarefree_on_p1(form: BinaryForm) -> bool:
    return realroots.is_squarefree(form.coeffs) and form.infinity_multiplicity() <= 1


def _forms_coprime_on_p1(f: BinaryForm, g: BinaryForm) -> bool:
    affine = realroots.gcd_poly(f.coeffs, g.coeffs)
    if realroots.degree(affine) > 0:
        return False
    return f.infinity_multiplicity() == 0 or g.infinity_multiplicity() == 0


@dataclass(frozen=True)
class FiberAnalysis:
    total_fibers: int
    real_fibers: int | None
    squarefree: bool
    s: int | None
    smooth_necessary: bool
    smooth_exact: bool | None  # populated only for diagonal sections


def analyze(matrix: ConicMatrix) -> FiberAnalysis:
    """Singular-fiber count of a conic-bundle section.

    total_fibers counts discriminant roots on P^1 with multiplicity (the
    degree of the determinant); real_fibers adds the Sturm count of the
    dehomogenisation and the multiplicity at infinity.  When the discriminant
    is squarefree the surface can be smooth and s = real_fibers / 2 is the
    number of sphere components; otherwise s is undetermined.  For diagonal
    sections smoothness is decided exactly (each p_i squarefree on P^1 and
    the p_i pairwise coprime); in general squarefreeness is only necessary.
    """
    disc = discriminant(matrix)
    if disc.is_zero():
        return FiberAnalysis(disc.degree, None, False, None, False,
                             False if matrix.is_diagonal() else None)
    total = disc.degree
    inf_mult = disc.infinity_multiplicity()
    squarefree = _form_squarefree_on_p1(disc)
    real = realroots.sturm_count(disc.coeffs, with_multiplicity=True) + inf_mult
    if squarefree and real % 2:
        raise RuntimeError("odd real root count for a squarefree real form")
    s = real // 2 if squarefree and real % 2 == 0 else None
    smooth_exact = None
    if matrix.is_diagonal():
        diag = [matrix.entries[i][i] for i in range(3)]
        smooth_exact = (
            all(not f.is_zero() for f in diag)
            and all(_form_squarefree_on_p1(f) for f in diag)
            and all(
                _forms_coprime_on_p1(diag[i], diag[j])
                for i in range(3)
                for j in range(i + 1, 3)
            )
        )
    return FiberAnalysis(total, real, squarefree, s, squarefree, smooth_exact)


def construct_section(a1: int, a2: int, a3: int, root_lists) -> ConicMatrix:
    """Diagonal section p1 x1^2 + p2 x2^2 + p3 x3^2 from prescribed roots.

    Each root list holds 2 a_i distinct rationals and the three lists are
    pairwise disjoint, so every p_i has only simple real zeros and the p_i
    are pairwise coprime: the section has 2(a1 + a2 + a3) simple real
    singular fibers and s = a1 + a2 + a3.
    """
    split = [a1, a2, a3]
    if any(a < 1 for a in split):
        raise ValueError("splitting degrees must be positive")
    if len(root_lists) != 3:
        raise ValueError("need three root lists")
    lists = [[Fraction(r) for r in roots] for roots in root_lists]
    for a, roots in zip(split, lists):
        if len(roots) != 2 * a:
            raise ValueError("root list length must be twice the splitting degree")
        if len(set(roots)) != len(roots):
            raise ValueError("roots within a list must be distinct")
    seen = set()
    for roots in lists:
        for r in roots:
            if r in seen:
                raise ValueError("root lists must be pairwise disjoint")
            seen.add(r)
    pairs = sorted(zip(split, lists), key=lambda t: t[0])
    forms = [form_from_roots(2 * a, roots) for a, roots in pairs]
    return diagonal_matrix(tuple(a for a, _ in pairs), forms)


# ---------------------------------------------------------------------------
# Pretty factorisation for output


def _content(coeffs):
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
    return g or 1


def _rational_roots(coeffs):
    """Rational roots (as Fractions) of an integer polynomial, constant and
    leading coefficient nonzero, by the rational root test."""
    a0, am = abs(coeffs[0]), abs(coeffs[-1])

    def divisors(n):
        out = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.extend((d, n // d))
            d += 1
        return sorted(set(out))

    roots = []
    for p in divisors(a0):
        for q in divisors(am):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and realroots.evaluate(coeffs, cand) == 0:
                    roots.append(cand)
    return roots


def factor_low_degree(form: BinaryForm):
    """Factor an integer form into pieces of degree <= 2 when possible.

    Returns (content, [(factor_form, multiplicity), ...]) or None when the
    cofactor left after removing u, v and rational linear factors still has
    degree above two.
    """
    if form.is_zero():
        return None
    content = _content(form.coeffs)
    coeffs = [c // content for c in form.coeffs]
    if coeffs[form.effective_degree()] < 0:
        content, coeffs = -content, [-c for c in coeffs]
    factors = []
    inf_mult = form.degree - max(i for i, c in enumerate(coeffs) if c)
    if inf_mult:
        factors.append((BinaryForm(1, (0, 1)), inf_mult))  # v
    low = next(i for i, c in enumerate(coeffs) if c)
    if low:
        factors.append((BinaryForm(1, (1, 0)), low))  # u
    poly = [Fraction(c) for c in coeffs[low: form.effective_degree() + 1]]
    for root in _rational_roots([int(x) for x in poly]):
        lin = (-root.numerator, root.denominator)
        mult = 0
        while True:
            quot, rem = realroots.divmod_poly(poly, [Fraction(lin[0]), Fraction(lin[1])])
            if rem:
                break
            poly = list(quot)
            mult += 1
        if mult:
            factors.append((BinaryForm(1, lin), mult))
    rest_deg = len(poly) - 1
    if rest_deg > 2:
        return None
    if rest_deg > 0 or poly[0] != 1:
        ints = [int(x) for x in poly]
        if any(Fraction(x) != p for x, p in zip(ints, poly)):
            return None
        if rest_deg == 0:
            content *= ints[0]
        else:
            # homogenise the cofactor back to the missing degree
            factors.append((BinaryForm(rest_deg, tuple(ints)), 1))
    return content, factors


def form_str(form: BinaryForm) -> str:
    """Expanded rendering like 'u^3*v - u*v^3'."""
    if form.is_zero():
        return "0"
    terms = []
    for i in range(form.degree, -1, -1):
        c = form.coeffs[i]
        if not c:
            continue
        ju = i
        jv = form.degree - i
        monomial = "*".join(
            part
            for part in (
                "u" if ju == 1 else f"u^{ju}" if ju else "",
                "v" if jv == 1 else f"v^{jv}" if jv else "",
            )
            if part
        )
        mag = abs(c)
        body = monomial if mag == 1 and monomial else (f"{mag}*{monomial}" if monomial else str(mag))
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms)


def factored_str(form: BinaryForm) -> str:
    """Factored rendering when a full degree <= 2 factorisation is found,
    the expanded polynomial otherwise."""
    result = factor_low_degree(form)
    if result is None:
        return form_str(form)
    content, factors = result
    parts = [] if content == 1 else [str(content)]
    for factor, mult in factors:
        base = form_str(factor)
        if sum(1 for c in factor.coeffs if c) > 1:
            base = f"({base})"
        parts.append(base if mult == 1 else f"{base}^{mult}")
    return "*".join(parts) if parts else "1"
