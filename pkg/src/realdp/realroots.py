"""Exact real-root counting for univariate polynomials over Q.

Polynomials are sequences of int/Fraction coefficients, low degree first;
trailing zeros are stripped on normalisation.  Distinct real roots are
counted with a Sturm chain evaluated at -infinity and +infinity; counting
with multiplicity goes through an exact squarefree decomposition.
"""

from __future__ import annotations

from fractions import Fraction


def normalize(coeffs):
    p = [Fraction(c) for c in coeffs]
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p) -> int:
    """Degree of a normalised polynomial; the zero polynomial has degree -1."""
    return len(p) - 1


def evaluate(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def add(p, q):
    n = max(len(p), len(q))
    return normalize([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def mul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return normalize(out)


def scale(p, c):
    return normalize([a * c for a in p])


def derivative(p):
    return normalize([i * c for i, c in enumerate(p)][1:])


def divmod_poly(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 1)
    dq = len(q) - 1
    lc = q[-1]
    while len(rem) - 1 >= dq and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dq:
            break
        shift = len(rem) - 1 - dq
        factor = rem[-1] / lc
        quot[shift] += factor
        for i in range(len(q)):
            rem[shift + i] -= factor * q[i]
    return normalize(quot), normalize(rem)


def gcd_poly(p, q):
    """Monic greatest common divisor."""
    a, b = normalize(p), normalize(q)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    if a:
        a = scale(a, 1 / a[-1])
    return a


def sturm_sequence(p):
    chain = [normalize(p)]
    d = derivative(chain[0])
    if d:
        chain.append(d)
        while degree(chain[-1]) > 0:
            rem = divmod_poly(chain[-2], chain[-1])[1]
            if not rem:
                break
            chain.append(scale(rem, -1))
    return chain


def _variations(signs):
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _sign_at_inf(p, positive: bool) -> int:
    if not p:
        return 0
    lc = 1 if p[-1] > 0 else -1
    if positive or degree(p) % 2 == 0:
        return lc
    return -lc


def count_distinct_real_roots(p) -> int:
    """Number of distinct real roots, by Sturm's theorem on (-inf, +inf)."""
    p = normalize(p)
    if not p:
        raise ValueError("zero polynomial")
    if degree(p) == 0:
        return 0
    square_free = divmod_poly(p, gcd_poly(p, derivative(p)))[0]
    chain = sturm_sequence(square_free)
    at_minus = _variations([_sign_at_inf(f, False) for f in chain])
    at_plus = _variations([_sign_at_inf(f, True) for f in chain])
    return at_minus - at_plus


def squarefree_decomposition(p):
    """[(g_i, i)] with p = c * prod g_i^i, the g_i squarefree and coprime."""
    p = normalize(p)
    if degree(p) < 1:
        return []
    out = []
    t = gcd_poly(p, derivative(p))
    v = divmod_poly(p, t)[0]
    i = 1
    while degree(v) > 0:
        w = gcd_poly(t, v)
        part = divmod_poly(v, w)[0]
        if degree(part) > 0:
            out.append((part, i))
        v = w
        t = divmod_poly(t, w)[0]
        i += 1
    return out


def count_real_roots_with_multiplicity(p) -> int:
    p = normalize(p)
    if not p:
        raise ValueError("zero polynomial")
    return sum(i * count_distinct_real_roots(g) for g, i in squarefree_decomposition(p))


def is_squarefree(p) -> bool:
    p = normalize(p)
    if not p:
        return False
    return degree(gcd_poly(p, derivative(p))) <= 0


def sturm_count(coeffs, with_multiplicity: bool = False) -> int:
    """Real roots of a rational polynomial over the whole line.

    With `with_multiplicity`, a root of multiplicity m counts m times
    (computed factor-by-factor on the squarefree decomposition).
    """
    p = normalize(coeffs)
    if not p:
        raise ValueError("zero polynomial")
    if with_multiplicity:
        return count_real_roots_with_multiplicity(p)
    return count_distinct_real_roots(p)
