"""Hyperbolicity certification and piecewise-linear linking numbers.

A hypersurface X in P^3 is hyperbolic with respect to a point e not on X when
every real line through e meets X only in real points; the restriction of the
defining form to the line x + t e is a degree-d polynomial in t (the leading
coefficient is the value at e, hence nonzero), and hyperbolicity asks for d
real roots counted with multiplicity.  A seeded sampler tests random rational
lines: a failed line is an exact refutation, survival of all trials is
statistical support only.

Linking numbers are computed on the double cover S^n -> RP^n, n in {2, 3}.
The center E (a point of RP^2, a line of RP^3) is cut out by two independent
linear equations, and a hyperplane L containing E by one equation lying in
their span.  The lift of L is a great subsphere, and W = {x in lift(L) :
x . b >= 0} is the hemisphere bounded by the lift of E, where b spans the
complement of the normal of L inside the span of E's normals.  The linking
number of a PL cycle with E is the signed count of crossings of the full lift
of the cycle through W: a null-homotopic cycle lifts to two antipodal copies,
a cycle closed via the antipode lifts to a single loop of twice the stored
length.  Points of cycles are nonzero rational vectors read as rays; the
geodesic between consecutive rays is their nonnegative span, so crossing
points stay rational and all signs are exact.  Non-transversal configurations
are rejected, never perturbed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import realroots

# ---------------------------------------------------------------------------
# Deterministic rational sampling

_MASK = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit generator (splitmix64 update)."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def rational(self) -> Fraction:
        """Fraction with numerator in [-10^4, 10^4], denominator in [1, 10^4]."""
        num = self.next_u64() % 20001 - 10000
        den = self.next_u64() % 10000 + 1
        return Fraction(num, den)


# ---------------------------------------------------------------------------
# Hypersurfaces in P^3 and the all-real-roots test


@dataclass(frozen=True)
class HypersurfaceSpec:
    """Homogeneous form in four variables, stored as sparse monomials."""

    degree: int
    terms: tuple  # ((e0, e1, e2, e3), Fraction) pairs

    def __post_init__(self):
        clean = []
        for exps, coeff in self.terms:
            exps = tuple(int(e) for e in exps)
            coeff = Fraction(coeff)
            if len(exps) != 4 or any(e < 0 for e in exps):
                raise ValueError("monomials use four nonnegative exponents")
            if sum(exps) != self.degree:
                raise ValueError("all monomials must have the declared total degree")
            if coeff:
                clean.append((exps, coeff))
        object.__setattr__(self, "terms", tuple(clean))

    def evaluate(self, point):
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for exps, coeff in self.terms:
            value = coeff
            for x, e in zip(pt, exps):
                value *= x**e
            total += value
        return total

    def restrict_to_line(self, x, e):
        """Coefficients (low to high) of t |-> X(x + t e)."""
        x = [Fraction(v) for v in x]
        e = [Fraction(v) for v in e]
        total = ()
        for exps, coeff in self.terms:
            term = (coeff,)
            for xi, ei, k in zip(x, e, exps):
                for _ in range(k):
                    term = realroots.mul(term, (xi, ei))
            total = realroots.add(total, term)
        return total


def _parallel(u, v) -> bool:
    n = len(u)
    return all(u[i] * v[j] == u[j] * v[i] for i in range(n) for j in range(i + 1, n))


def _restriction_profile(x: HypersurfaceSpec, e, p):
    if not any(Fraction(v) for v in e):
        raise ValueError("center must be a nonzero point")
    if x.evaluate(e) == 0:
        raise ValueError("center on hypersurface")
    if not any(Fraction(v) for v in p):
        raise ValueError("sample point must be a nonzero point")
    if _parallel([Fraction(v) for v in p], [Fraction(v) for v in e]):
        raise ValueError("sample point coincides with the center")
    q = x.restrict_to_line(p, e)
    if realroots.degree(q) < x.degree:
        raise ValueError("restriction degree dropped: line meets the center")
    real = realroots.sturm_count(q, with_multiplicity=True)
    distinct = realroots.sturm_count(q)
    return real, distinct, x.degree


def all_real_restriction(x: HypersurfaceSpec, e, p) -> bool:
    """Whether the line through p and e meets X only in real points.

    Roots count with multiplicity, so tangent lines (boundary contact) still
    pass when every root is real.
    """
    real, _, deg = _restriction_profile(x, e, p)
    return real == deg


@dataclass(frozen=True)
class HyperbolicityVerdict:
    refuted: bool
    witness: tuple | None
    trial: int | None
    trials: int
    boundary_contacts: int

    @property
    def supported(self) -> bool:
        return not self.refuted


def hyperbolicity_check(x: HypersurfaceSpec, e, trials: int, seed: int) -> HyperbolicityVerdict:
    """Seeded random-line test of hyperbolicity with respect to e.

    Refutation (some line with a nonreal intersection) is exact and reports
    the first witness by trial index; surviving all trials is statistical
    support, not a proof.  Trials with a multiple real root are tolerated and
    tallied as boundary contacts.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if x.evaluate(e) == 0:
        raise ValueError("center on hypersurface")
    rng = SplitMix64(seed)
    e_frac = [Fraction(v) for v in e]
    boundary = 0
    for trial in range(1, trials + 1):
        while True:
            point = tuple(rng.rational() for _ in range(4))
            if any(point) and not _parallel(list(point), e_frac):
                break
        real, distinct, deg = _restriction_profile(x, e, point)
        if real != deg:
            return HyperbolicityVerdict(True, point, trial, trials, boundary)
        if distinct < deg:
            boundary += 1
    return HyperbolicityVerdict(False, None, None, trials, boundary)


# ---------------------------------------------------------------------------
# PL cycles on the double cover and linking numbers


@dataclass(frozen=True)
class GreatSubsphere:
    """Linear subspace of RP^n given by independent normal vectors."""

    ambient: int
    normals: tuple

    def __post_init__(self):
        if self.ambient not in (2, 3):
            raise ValueError("ambient projective space must be RP^2 or RP^3")
        normals = tuple(tuple(Fraction(x) for x in n) for n in self.normals)
        if any(len(n) != self.ambient + 1 for n in normals):
            raise ValueError("normals must have ambient + 1 coordinates")
        if _rank(normals) != len(normals):
            raise ValueError("normals must be linearly independent")
        object.__setattr__(self, "normals", normals)


def _rank(vectors):
    rows = [list(v) for v in vectors]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class PLCycle:
    """Closed PL curve on S^n, stored as rays (nonzero rational vectors).

    closure = "sphere": the stored points already close up on the sphere (the
    projection to RP^n is null-homotopic, and the full preimage is this loop
    plus its antipodal copy).  closure = "antipode": the loop continues from
    the last point to the antipode of the first; the full lift traverses the
    stored points and then their antipodes once each.
    """

    ambient: int
    closure: str
    points: tuple

    def __post_init__(self):
        if self.ambient not in (2, 3):
            raise ValueError("ambient projective space must be RP^2 or RP^3")
        if self.closure not in ("sphere", "antipode"):
            raise ValueError("closure must be 'sphere' or 'antipode'")
        pts = tuple(tuple(Fraction(x) for x in p) for p in self.points)
        if len(pts) < 2:
            raise ValueError("a cycle needs at least two points")
        if any(len(p) != self.ambient + 1 for p in pts):
            raise ValueError("points must have ambient + 1 coordinates")
        if any(not any(p) for p in pts):
            raise ValueError("points must be nonzero")
        for i, (p, q) in enumerate(zip(pts, pts[1:])):
            if _parallel(p, q) and _dot(p, q) < 0:
                raise ValueError(f"consecutive points {i}, {i + 1} are antipodal")
        last, first = pts[-1], pts[0]
        if self.closure == "sphere":
            if _parallel(last, first) and _dot(last, first) < 0:
                raise ValueError("closing segment joins antipodal points")
        else:
            if _parallel(last, first) and _dot(last, first) > 0:
                raise ValueError("antipodal closure needs last point distinct from first")
        object.__setattr__(self, "points", pts)

    def lift_segments(self):
        """Segments (as ray pairs) of the full preimage in S^n."""
        pts = self.points
        if self.closure == "sphere":
            loops = [list(pts), [tuple(-x for x in p) for p in pts]]
        else:
            loops = [list(pts) + [tuple(-x for x in p) for p in pts]]
        segments = []
        for loop in loops:
            for i, p in enumerate(loop):
                segments.append((p, loop[(i + 1) % len(loop)]))
        return segments


def _hemisphere_frame(e: GreatSubsphere, chain: GreatSubsphere | None):
    """Normal of L and the co-orientation vector b cutting W out of lift(L)."""
    if len(e.normals) != 2:
        raise ValueError("the center must be cut out by two independent equations")
    if chain is None:
        chain = GreatSubsphere(e.ambient, (e.normals[0],))
    if chain.ambient != e.ambient:
        raise ValueError("center and chain live in different ambient spaces")
    if len(chain.normals) != 1:
        raise ValueError("the bounding subspace must be a hyperplane")
    n_l = chain.normals[0]
    span_rank = _rank(e.normals)
    if _rank(e.normals + (n_l,)) != span_rank:
        raise ValueError("the hyperplane must contain the center")
    nn = _dot(n_l, n_l)
    for candidate in e.normals:
        b = tuple(c - _dot(candidate, n_l) * l / nn for c, l in zip(candidate, n_l))
        if any(b):
            return n_l, b
    raise ValueError("degenerate normals")  # unreachable: normals independent


def linking_number(cycle: PLCycle, e: GreatSubsphere, chain: GreatSubsphere | None = None) -> int:
    """Signed crossing count of the lifted cycle with the hemisphere W.

    `chain` is the hyperplane L containing the center e; when omitted it is
    derived from e's first normal.  Only |lk| is meaningful downstream: it is
    independent of the hemisphere and of the choice of L for transversal
    input.  A vertex on W, a crossing through the boundary of W, or a segment
    inside the supporting hyperplane touching W is rejected with the
    offending segment index ("perturb input").
    """
    if cycle.ambient != e.ambient:
        raise ValueError("cycle and center live in different ambient spaces")
    n_l, b = _hemisphere_frame(e, chain)
    for idx, p in enumerate(cycle.points):
        if all(_dot(p, n) == 0 for n in e.normals):
            raise ValueError(f"cycle vertex {idx} lies on the center's lift")
    total = 0
    for idx, (p, q) in enumerate(cycle.lift_segments()):
        alpha, beta = _dot(p, n_l), _dot(q, n_l)
        if alpha == 0:
            if _dot(p, b) >= 0:
                raise ValueError(f"perturb input: vertex of segment {idx} lies on the hemisphere")
            if beta == 0 and _dot(q, b) >= 0:
                raise ValueError(f"perturb input: segment {idx} lies in the hemisphere wall")
            continue
        if beta == 0:
            if _dot(q, b) >= 0:
                raise ValueError(f"perturb input: vertex of segment {idx} lies on the hemisphere")
            continue
        if (alpha > 0) == (beta > 0):
            continue
        crossing = tuple(beta * pi - alpha * qi for pi, qi in zip(p, q))
        if beta < 0:
            crossing = tuple(-x for x in crossing)  # keep the positive combination
        side = _dot(crossing, b)
        if side == 0:
            raise ValueError(f"perturb input: segment {idx} crosses the center's lift")
        if side > 0:
            total += 1 if alpha < 0 else -1
    return total


def hyperbolicity_from_linking(components, e: GreatSubsphere, chain: GreatSubsphere | None, claimed_degree: int) -> bool:
    """Linking criterion: sum of |lk(component, E)| equals the degree."""
    return sum(abs(linking_number(c, e, chain)) for c in components) == claimed_degree
