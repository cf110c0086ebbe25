"""Exact integer and rational linear algebra.

Everything here works with plain Python integers (arbitrary precision) or
`fractions.Fraction`; no floating point is ever used.  Matrices are lists of
lists in row-major order.  These routines back the lattice layer: Hermite and
Smith normal forms for kernels and primitivity checks, exact signatures of
symmetric forms, and a Fincke-Pohst style bounded enumeration whose search
radius is certified by a rational LDL^T factorisation.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)]


def mat_mul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _hnf_sweep(rows, ncols):
    """One echelon pass: returns (pivot_rows, zero_rows).

    Row operations are unimodular, so the span of `rows` is preserved.  Rows
    longer than `ncols` carry transform bookkeeping in their tail; only the
    first `ncols` entries participate in pivoting.
    """
    pivots = []
    pending = [list(r) for r in rows]
    for col in range(ncols):
        carriers = [r for r in pending if r[col] != 0]
        others = [r for r in pending if r[col] == 0]
        if not carriers:
            pending = others
            continue
        pivot = carriers.pop()
        while carriers:
            r = carriers.pop()
            a, b = pivot[col], r[col]
            g, x, y = xgcd(a, b)
            u, v = a // g, b // g
            new_pivot = [x * p + y * q for p, q in zip(pivot, r)]
            cleared = [u * q - v * p for p, q in zip(pivot, r)]
            pivot = new_pivot
            others.append(cleared)
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        pivots.append((col, pivot))
        pending = others
    return pivots, pending


def hnf(rows):
    """Row Hermite normal form of the lattice spanned by `rows`.

    Returns the canonical basis: positive pivots, entries above each pivot
    reduced into [0, pivot), zero rows dropped.  Two generating sets span the
    same lattice iff their HNFs are equal.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    pivots, _ = _hnf_sweep(rows, ncols)
    basis = [p for _, p in pivots]
    cols = [c for c, _ in pivots]
    for i in reversed(range(len(basis))):
        col = cols[i]
        piv = basis[i][col]
        for j in range(i):
            q = basis[j][col] // piv
            if q:
                basis[j] = [a - q * b for a, b in zip(basis[j], basis[i])]
    return basis


def kernel_basis(m):
    """HNF basis of the integer kernel {v : m @ v = 0}.

    The kernel of an integer matrix is saturated (the quotient embeds in the
    image, hence is torsion free), so the returned rows are a primitive basis.
    """
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    # Left kernel of m^T equals the right kernel of m; track row operations
    # by augmenting with the identity.
    aug = [list(row) + ident for row, ident in zip(transpose(m), identity(ncols))]
    _, zero_rows = _hnf_sweep(aug, nrows)
    kernel = [r[nrows:] for r in zero_rows]
    return hnf(kernel)


def smith_normal_form(m):
    """Elementary divisors d1 | d2 | ... (nonnegative) of an integer matrix.

    Row and column clearing use plain elimination whenever the pivot divides
    the target (this never disturbs the cleared parts) and a unimodular gcd
    combination otherwise (this strictly shrinks |pivot|), so the alternation
    terminates.
    """
    a = [list(r) for r in m]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    divisors = []
    t = 0
    while t < min(nrows, ncols):
        piv = next(
            ((i, j) for i in range(t, nrows) for j in range(t, ncols) if a[i][j]),
            None,
        )
        if piv is None:
            break
        i, j = piv
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            for i in range(t + 1, nrows):
                if a[i][t]:
                    if a[i][t] % a[t][t] == 0:
                        q = a[i][t] // a[t][t]
                        a[i] = [p - q * r for p, r in zip(a[i], a[t])]
                    else:
                        g, x, y = xgcd(a[t][t], a[i][t])
                        u, v = a[t][t] // g, a[i][t] // g
                        a[t], a[i] = (
                            [x * p + y * q for p, q in zip(a[t], a[i])],
                            [u * q - v * p for p, q in zip(a[t], a[i])],
                        )
            if any(a[t][j] for j in range(t + 1, ncols)):
                for j in range(t + 1, ncols):
                    if a[t][j]:
                        if a[t][j] % a[t][t] == 0:
                            q = a[t][j] // a[t][t]
                            for row in a:
                                row[j] -= q * row[t]
                        else:
                            g, x, y = xgcd(a[t][t], a[t][j])
                            u, v = a[t][t] // g, a[t][j] // g
                            for row in a:
                                row[t], row[j] = (
                                    x * row[t] + y * row[j],
                                    u * row[j] - v * row[t],
                                )
                continue  # column ops may have disturbed the pivot column
            if not any(a[i][t] for i in range(t + 1, nrows)):
                break
        # Enforce divisibility: the pivot must divide every remaining entry.
        offender = next(
            (
                (i, j)
                for i in range(t + 1, nrows)
                for j in range(t + 1, ncols)
                if a[i][j] % a[t][t]
            ),
            None,
        )
        if offender is not None:
            i, _ = offender
            a[t] = [p + q for p, q in zip(a[t], a[i])]
            continue
        divisors.append(abs(a[t][t]))
        t += 1
    return divisors


def signature(gram):
    """Exact signature (n_plus, n_minus, n_zero) of a symmetric matrix over Q.

    Computed by congruence reduction (symmetric Gaussian elimination); when no
    nonzero diagonal entry is available, a row/column addition creates one.
    """
    g = [[Fraction(x) for x in row] for row in gram]
    pos = neg = zero = 0
    while g:
        n = len(g)
        piv = next((i for i in range(n) if g[i][i] != 0), None)
        if piv is None:
            pair = next(
                ((i, j) for i in range(n) for j in range(i + 1, n) if g[i][j] != 0),
                None,
            )
            if pair is None:
                zero += n
                break
            i, j = pair
            for k in range(n):
                g[i][k] += g[j][k]
            for k in range(n):
                g[k][i] += g[k][j]
            piv = i
        d = g[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        rest = [k for k in range(n) if k != piv]
        g = [[g[k][l] - g[k][piv] * g[piv][l] / d for l in rest] for k in rest]
    return pos, neg, zero


def ldl(a):
    """LDL^T factorisation of a positive definite symmetric rational matrix.

    Returns (diag, lower) with unit lower triangular `lower` and positive
    rational pivots `diag`; v^T a v = sum_j diag[j] * (v_j + sum_{i>j}
    lower[i][j] v_i)^2.  Raises ValueError when `a` is not positive definite;
    either way the pivots are an exact certificate.
    """
    n = len(a)
    work = [[Fraction(x) for x in row] for row in a]
    lower = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    diag = []
    for j in range(n):
        d = work[j][j] - sum(lower[j][k] ** 2 * diag[k] for k in range(j))
        if d <= 0:
            raise ValueError("matrix is not positive definite")
        diag.append(d)
        for i in range(j + 1, n):
            s = work[i][j] - sum(lower[i][k] * lower[j][k] * diag[k] for k in range(j))
            lower[i][j] = s / d
    return diag, lower


def _coordinate_window(center, radius_sq):
    """All integers m with (m + center)^2 <= radius_sq, as a closed range.

    `center` and `radius_sq` are Fractions, radius_sq >= 0.  The window is
    computed with integer square roots only, so it is exact.
    """
    q = center.denominator
    p = center.numerator
    scaled = radius_sq * q * q
    root = isqrt(scaled.numerator // scaled.denominator)
    lo_num, hi_num = -root - p, root - p
    lo = -((-lo_num) // q)
    hi = hi_num // q
    return lo, hi


def enumerate_quadratic(a, bound):
    """All integer vectors v with v^T a v <= bound, for positive definite a.

    Fincke-Pohst bounded search on the exact LDL^T factorisation.  The output
    includes the zero vector and both members of each +-v pair; order is
    unspecified (callers sort).
    """
    n = len(a)
    if bound < 0:
        return []
    diag, lower = ldl(a)
    results = []
    v = [0] * n

    def extend(j, remaining):
        if j < 0:
            results.append(tuple(v))
            return
        center = sum(lower[i][j] * v[i] for i in range(j + 1, n))
        if not isinstance(center, Fraction):
            center = Fraction(center)
        lo, hi = _coordinate_window(center, remaining / diag[j])
        for m in range(lo, hi + 1):
            v[j] = m
            w = m + center
            extend(j - 1, remaining - diag[j] * w * w)
        v[j] = 0

    extend(n - 1, Fraction(bound))
    return results


def mat_inverse(a):
    """Exact inverse of a square rational matrix (Gauss-Jordan over Q)."""
    n = len(a)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((i for i in range(col, n) if work[i][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        d = work[col][col]
        work[col] = [x / d for x in work[col]]
        for i in range(n):
            if i != col and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return [row[n:] for row in work]
