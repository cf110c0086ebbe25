"""Lattice models of the real del Pezzo surfaces whose real part is a
disjoint union of spheres and real projective planes.

Each model bundles the Picard lattice of the complexification, the
complex-conjugation involution on it, the real Picard lattice embedded as the
fixed sublattice, the canonical class on both sides, the finitely many
(-1)-classes, and the topological bookkeeping (s spheres, r projective
planes).

Conventions.  Complex lattices are either the blow-up lattice Z^{1,n} with
basis H, E1, ..., En, pairing diag(1, -1, ..., -1) and canonical class
-3H + E1 + ... + En, or - for the quadric sphere Q31 and its blow-ups - the
hyperbolic plane spanned by the two rulings l1, l2 (l1.l2 = 1, l1^2 = l2^2
= 0, canonical -2 l1 - 2 l2) extended by exceptional classes.  Minimal conic
bundles carry the conjugation that swaps the two components of every singular
fiber; the degree 2 and degree 1 minimal surfaces with real Picard rank one
carry the anticanonical reflection D |-> -D + 2 (D.K / K.K) K, whose fixed
lattice is exactly ZK.  Real lattices keep the honest canonical class K as a
distinguished basis vector whenever one exists in the basis.

Real points may only be blown up on sphere components: blowing up a point of
a projective plane would create a Klein bottle, which is outside the
sphere/projective-plane regime modelled here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import intlinalg
from .lattice import ClassVector, IntLattice, LatticeMap, enumerate_classes, geiser_bertini

# Catalogue order: descending degree, blow-ups of the plane and the quadric
# interleaved with the minimal conic bundles.  Also the CLI identifiers.
SURFACE_NAMES = (
    "P2",
    "Q31",
    "P2_0_2",
    "Q31_0_2",
    "P2_0_4",
    "Q31_0_4",
    "D4",
    "P2_0_6",
    "D4_1_0",
    "D4_2_0_11",
    "Q31_0_6",
    "D4_0_2",
    "D2",
    "G2",
    "P2_0_8",
    "D4_1_2",
    "D2_1_0",
    "G2_1_0",
    "B1",
)


@dataclass(frozen=True)
class SurfaceModel:
    name: str
    degree: int
    s: int
    r: int
    real_lattice: IntLattice
    canonical: ClassVector
    complex_lattice: IntLattice
    complex_canonical: ClassVector
    embedding: LatticeMap
    involution: LatticeMap
    minus_one_classes: tuple


@dataclass(frozen=True)
class BlowupSpec:
    base: SurfaceModel
    real_points: int = 0
    conj_pairs: int = 0
    component_assignment: str = "different"  # only consulted when real_points == 2

    def __post_init__(self):
        if self.real_points not in (0, 1, 2):
            raise ValueError("real_points must be 0, 1 or 2")
        if self.conj_pairs < 0:
            raise ValueError("conj_pairs must be nonnegative")
        if self.component_assignment not in ("same", "different"):
            raise ValueError("component_assignment must be 'same' or 'different'")


def minus_one_curves(l_complex: IntLattice, k: ClassVector):
    """All classes c with c.c = -1 and c.K = -1, in lexicographic order."""
    return enumerate_classes(l_complex, k, -1, -1, -1)


def real_to_complex(model: SurfaceModel, d: ClassVector) -> ClassVector:
    """Image of a real divisor class under the embedding into Pic of X_C."""
    return model.embedding.apply(d)


def _real_gram(cx: IntLattice, columns):
    vecs = [cx.vector(col) for col in columns]
    return tuple(tuple(u.dot(v) for v in vecs) for u in vecs)


def _model(name, degree, s, r, cx, k_cx_coeffs, invol_rows, real_labels, real_columns, canonical_coeffs):
    """Assemble a SurfaceModel from complex-lattice data and a real basis.

    `real_columns` are the real basis vectors written in complex coordinates;
    the real pairing matrix is computed from them, so the embedding is an
    isometry by construction.
    """
    k_cx = cx.vector(k_cx_coeffs)
    if k_cx.dot(k_cx) != degree:
        raise ValueError(f"{name}: canonical self-intersection does not match the degree")
    real = IntLattice(len(real_labels), tuple(real_labels), _real_gram(cx, real_columns))
    embedding = LatticeMap(real, cx, tuple(zip(*real_columns)))
    involution = LatticeMap(cx, cx, tuple(tuple(row) for row in invol_rows))
    canonical = real.vector(canonical_coeffs)
    if embedding.apply(canonical) != k_cx:
        raise ValueError(f"{name}: real canonical class does not embed onto K")
    return SurfaceModel(
        name=name,
        degree=degree,
        s=s,
        r=r,
        real_lattice=real,
        canonical=canonical,
        complex_lattice=cx,
        complex_canonical=k_cx,
        embedding=embedding,
        involution=involution,
        minus_one_classes=tuple(minus_one_curves(cx, k_cx)),
    )


def _blowup_lattice(n_exceptional):
    """Z^{1,n}: basis H, E1, ..., En with pairing diag(1, -1, ..., -1)."""
    labels = ("H",) + tuple(f"E{i}" for i in range(1, n_exceptional + 1))
    gram = tuple(
        tuple((1 if i == 0 else -1) if i == j else 0 for j in range(n_exceptional + 1))
        for i in range(n_exceptional + 1)
    )
    return IntLattice(n_exceptional + 1, labels, gram)


def _conic_bundle_involution(n_exceptional):
    """Conjugation of a minimal conic bundle on Z^{1,n}, n odd.

    Fixes F = H - E1 and K, and swaps the two lines through the first blown-up
    point in every singular fiber: E_j <-> H - E1 - E_j for j >= 2.  Columns
    follow by solving sigma(F) = F, sigma(K) = K.
    """
    if n_exceptional % 2 == 0:
        raise ValueError("a minimal conic bundle has an odd number of blown-up points")
    n = n_exceptional + 1
    half = (n_exceptional + 1) // 2
    cols = []
    cols.append([half, -(half - 1)] + [-1] * (n_exceptional - 1))  # image of H
    cols.append([half - 1, -(half - 2)] + [-1] * (n_exceptional - 1))  # image of E1
    for j in range(2, n_exceptional + 1):
        col = [1, -1] + [0] * (n_exceptional - 1)
        col[j] = -1  # image of E_j is H - E1 - E_j
        cols.append(col)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def _anticanonical_reflection(cx: IntLattice, k: ClassVector):
    """Matrix of D |-> -D + 2 (D.K / K.K) K (requires K.K in {1, 2})."""
    cols = [geiser_bertini(cx.basis_vector(j), k).coeffs for j in range(cx.rank)]
    return tuple(tuple(cols[j][i] for j in range(cx.rank)) for i in range(cx.rank))


def _build_p2():
    cx = IntLattice(1, ("H",), ((1,),))
    return _model(
        "P2", 9, 0, 1,
        cx, (-3,),
        intlinalg.identity(1),
        ("H",), [(1,)], (-3,),
    )


def _build_q31():
    cx = IntLattice(2, ("l1", "l2"), ((0, 1), (1, 0)))
    # Conjugation swaps the two rulings; the fixed lattice is generated by the
    # hyperplane class H = l1 + l2 with H.H = 2 and K = -2H.
    return _model(
        "Q31", 8, 1, 0,
        cx, (-2, -2),
        ((0, 1), (1, 0)),
        ("H",), [(1, 1)], (-2,),
    )


def _build_minimal_conic(degree):
    n_exc = 9 - degree
    s = (8 - degree) // 2
    cx = _blowup_lattice(n_exc)
    k = (-3,) + (1,) * n_exc
    f_col = (1, -1) + (0,) * (n_exc - 1)
    return _model(
        f"D{degree}", degree, s, 0,
        cx, k,
        _conic_bundle_involution(n_exc),
        ("F", "K"), [f_col, k], (0, 1),
    )


def _build_anticanonical_minimal(name, degree, s, r):
    n_exc = 9 - degree
    cx = _blowup_lattice(n_exc)
    k = (-3,) + (1,) * n_exc
    return _model(
        name, degree, s, r,
        cx, k,
        _anticanonical_reflection(cx, cx.vector(k)),
        ("K",), [k], (1,),
    )


def _next_exceptional_index(labels):
    best = 0
    for lab in labels:
        if lab.startswith("E") and lab[1:].isdigit():
            best = max(best, int(lab[1:]))
    return best + 1


def blow_up(spec: BlowupSpec) -> SurfaceModel:
    """Blow up a model in `real_points` real points and `conj_pairs` pairs.

    Real centers must lie on sphere components (a real point of a projective
    plane would produce a Klein bottle component, which is rejected); each one
    turns a sphere into a projective plane.  Conjugate pairs leave the
    topology unchanged.  The conjugation extends by the identity on real
    exceptional classes and by the swap on each conjugate pair, and the real
    lattice is rebuilt as the fixed sublattice of the extended involution.
    """
    base = spec.base
    a, b = spec.real_points, spec.conj_pairs
    if a == 2 and spec.component_assignment == "same":
        # The first blow-up turns its sphere into a projective plane, so the
        # second center would sit on a projective plane.
        raise ValueError("unsupported topology: two real points on one component give a Klein bottle")
    if a > base.s:
        raise ValueError("unsupported topology: a real blow-up center must lie on a sphere")
    new_degree = base.degree - a - 2 * b
    if new_degree < 1:
        raise ValueError("degree underflow: blow-up would drop the degree below 1")

    cx_old = base.complex_lattice
    n_old = cx_old.rank
    n_new = n_old + a + 2 * b
    first = _next_exceptional_index(cx_old.basis_labels)
    new_labels = cx_old.basis_labels + tuple(f"E{first + i}" for i in range(a + 2 * b))
    gram = [[0] * n_new for _ in range(n_new)]
    for i in range(n_old):
        for j in range(n_old):
            gram[i][j] = cx_old.gram[i][j]
    for i in range(n_old, n_new):
        gram[i][i] = -1
    cx = IntLattice(n_new, new_labels, tuple(tuple(row) for row in gram))

    invol = [[0] * n_new for _ in range(n_new)]
    for i in range(n_old):
        for j in range(n_old):
            invol[i][j] = base.involution.matrix[i][j]
    for i in range(a):  # real exceptional classes are conjugation-fixed
        idx = n_old + i
        invol[idx][idx] = 1
    for p in range(b):  # conjugate pairs are swapped
        i = n_old + a + 2 * p
        invol[i][i + 1] = 1
        invol[i + 1][i] = 1

    k_cx = list(base.complex_canonical.coeffs) + [1] * (a + 2 * b)

    # Real basis: base columns (K-slot updated to the new canonical), then the
    # real exceptional classes, then the sums over conjugate pairs.
    old_cols = [list(col) + [0] * (a + 2 * b) for col in zip(*base.embedding.matrix)]
    k_slot = None
    for i, col in enumerate(old_cols):
        if col[:n_old] == list(base.complex_canonical.coeffs):
            k_slot = i
            break
    columns = [list(c) for c in old_cols]
    labels = list(base.real_lattice.basis_labels)
    if k_slot is not None:
        columns[k_slot] = list(k_cx)
    for i in range(a):
        col = [0] * n_new
        col[n_old + i] = 1
        columns.append(col)
        labels.append(new_labels[n_old + i])
    for p in range(b):
        col = [0] * n_new
        col[n_old + a + 2 * p] = 1
        col[n_old + a + 2 * p + 1] = 1
        columns.append(col)
        labels.append(f"{new_labels[n_old + a + 2 * p]}+{new_labels[n_old + a + 2 * p + 1]}")

    if k_slot is not None:
        canonical = tuple(int(i == k_slot) for i in range(len(columns)))
    else:
        canonical = base.canonical.coeffs + (1,) * (a + b)

    name = f"{base.name}_{a}_{2 * b}" + ("_11" if a == 2 else "")
    return _model(
        name, new_degree, base.s - a, base.r + a,
        cx, tuple(k_cx),
        tuple(tuple(row) for row in invol),
        tuple(labels), columns, canonical,
    )


def _rebase(model: SurfaceModel, rows, labels, name=None):
    """Present the real lattice of `model` in a new unimodular basis.

    `rows` express the new basis vectors in the current real coordinates.
    """
    t = [list(r) for r in rows]
    new_cols = [model.embedding.apply(model.real_lattice.vector(row)).coeffs for row in t]
    t_inv = intlinalg.mat_inverse(intlinalg.transpose(t))
    canon = [x * 1 for x in intlinalg.mat_vec(t_inv, model.canonical.coeffs)]
    if any(c.denominator != 1 for c in canon):
        raise ValueError("rebase matrix is not unimodular")
    return _model(
        name or model.name, model.degree, model.s, model.r,
        model.complex_lattice, model.complex_canonical.coeffs,
        model.involution.matrix,
        tuple(labels), [list(c) for c in new_cols],
        tuple(int(c) for c in canon),
    )


def _build_d2_1_0():
    # Declared presentation <K, Ft, E>: K.K = 1, Ft = F - E is a (-1)-curve,
    # and every pairing of two distinct generators of <-K, Ft, E> equals one.
    model = blow_up(BlowupSpec(builtin("D2"), real_points=1))
    return _rebase(model, ((0, 1, 0), (1, 0, -1), (0, 0, 1)), ("K", "Ft", "E"), "D2_1_0")


def _build_g2_1_0():
    model = blow_up(BlowupSpec(builtin("G2"), real_points=1))
    return _rebase(model, ((1, 0), (0, 1)), ("K", "E"), "G2_1_0")


_BUILDERS = {
    "P2": _build_p2,
    "Q31": _build_q31,
    "D4": lambda: _build_minimal_conic(4),
    "D2": lambda: _build_minimal_conic(2),
    "G2": lambda: _build_anticanonical_minimal("G2", 2, 4, 0),
    "B1": lambda: _build_anticanonical_minimal("B1", 1, 4, 1),
    "P2_0_2": lambda: blow_up(BlowupSpec(builtin("P2"), conj_pairs=1)),
    "P2_0_4": lambda: blow_up(BlowupSpec(builtin("P2"), conj_pairs=2)),
    "P2_0_6": lambda: blow_up(BlowupSpec(builtin("P2"), conj_pairs=3)),
    "P2_0_8": lambda: blow_up(BlowupSpec(builtin("P2"), conj_pairs=4)),
    "Q31_0_2": lambda: blow_up(BlowupSpec(builtin("Q31"), conj_pairs=1)),
    "Q31_0_4": lambda: blow_up(BlowupSpec(builtin("Q31"), conj_pairs=2)),
    "Q31_0_6": lambda: blow_up(BlowupSpec(builtin("Q31"), conj_pairs=3)),
    "D4_1_0": lambda: blow_up(BlowupSpec(builtin("D4"), real_points=1)),
    "D4_2_0_11": lambda: blow_up(BlowupSpec(builtin("D4"), real_points=2)),
    "D4_0_2": lambda: blow_up(BlowupSpec(builtin("D4"), conj_pairs=1)),
    "D4_1_2": lambda: blow_up(BlowupSpec(builtin("D4"), real_points=1, conj_pairs=1)),
    "D2_1_0": _build_d2_1_0,
    "G2_1_0": _build_g2_1_0,
}


@lru_cache(maxsize=None)
def builtin(name: str) -> SurfaceModel:
    """Return the built-in model for one of the catalogued surface names."""
    if name not in _BUILDERS:
        raise ValueError(f"unknown surface {name!r}; known: {', '.join(SURFACE_NAMES)}")
    return _BUILDERS[name]()
