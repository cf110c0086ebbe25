import random

import pytest

from realdp import (
    analyze,
    candidate_divisor,
    chow_degree,
    chow_e,
    chow_h,
    construct_section,
    discriminant,
    necbundle_conditions,
    surface_class_identities,
)
from realdp.conic import (
    BinaryForm,
    ConicMatrix,
    diagonal_matrix,
    factored_str,
    form_from_roots,
    form_str,
    zero_form,
)
from conftest import degenerate_fiber_matrix, worked_conic_matrix


def test_binary_form_arithmetic():
    uv = BinaryForm(2, (0, 1, 0))
    u2_minus_v2 = BinaryForm(2, (-1, 0, 1))
    prod = uv * u2_minus_v2
    assert prod.degree == 4
    assert prod.coeffs == (0, -1, 0, 1, 0)
    assert (uv + uv).coeffs == (0, 2, 0)
    with pytest.raises(ValueError):
        uv + BinaryForm(3, (0, 0, 0, 1))
    assert zero_form(2).is_zero()
    assert BinaryForm(4, (0, -1, 0, 1, 0)).infinity_multiplicity() == 1


def test_form_from_roots():
    form = form_from_roots(2, [1, -1])
    assert form.coeffs == (-1, 0, 1)  # u^2 - v^2
    half = form_from_roots(1, ["1/2"])
    assert half.coeffs == (-1, 2)  # 2u - v


def test_conic_matrix_validation():
    good = worked_conic_matrix()
    assert good.is_diagonal()
    with pytest.raises(ValueError):  # degree pattern broken
        diagonal_matrix((1, 1, 1), (BinaryForm(1, (1, 1)), BinaryForm(2, (1, 0, 1)), BinaryForm(2, (1, 0, 1))))
    with pytest.raises(ValueError):  # negative twist means forced zero entries
        diagonal_matrix((-1, 1, 1), (zero_form(-2), BinaryForm(2, (1, 0, 1)), BinaryForm(2, (1, 0, 1))))
    with pytest.raises(ValueError):  # not symmetric
        entries = [[zero_form(2)] * 3 for _ in range(3)]
        entries[0][1] = BinaryForm(2, (1, 0, 0))
        ConicMatrix((1, 1, 1), tuple(tuple(r) for r in entries))
    with pytest.raises(ValueError):  # splitting not sorted
        diagonal_matrix((2, 1, 1), (BinaryForm(4, (1, 0, 0, 0, 1)), BinaryForm(2, (1, 0, 1)), BinaryForm(2, (1, 0, 1))))


def test_necbundle_worked_examples():
    assert necbundle_conditions(3, 1, 1).passed
    assert necbundle_conditions(3, -1, 3).passed
    for s in range(1, 25):
        assert necbundle_conditions(s, s - 2, 1).passed
    report = necbundle_conditions(3, 1, 2)
    assert not report.passed and not report.c3
    with pytest.raises(ValueError):
        necbundle_conditions(0, 1, 1)


def test_condition3_pins_down_a_for_b_one():
    for s in range(2, 21):
        solutions = [a for a in range(-10, 11) if necbundle_conditions(s, a, 1).c3]
        assert solutions == ([s - 2] if abs(s - 2) <= 10 else [])


def test_candidate_divisor():
    assert candidate_divisor(3) == {"a": 1, "b": 1, "genus": 2, "ell_lower_bound": 6}
    assert candidate_divisor(2) == {"a": 0, "b": 1, "genus": 1, "ell_lower_bound": 5}
    assert candidate_divisor(10) == {"a": 8, "b": 1, "genus": 9, "ell_lower_bound": 13}
    with pytest.raises(ValueError):
        candidate_divisor(1)


def test_candidate_matches_spheres_only_genus_count():
    for s in range(2, 21):
        data = candidate_divisor(s)
        assert data["genus"] == s - 1  # r = 0, so genus = r + s - 1
        assert data["ell_lower_bound"] == s + 3


def test_chow_relations():
    c = 3
    h, e = chow_h(c), chow_e(c)
    assert (e * e).coeffs == (0,) * 6
    assert chow_degree(e * h * h) == 1  # the point class
    assert h * h * h == c * (e * h * h)
    assert chow_degree(h * h * h) == c
    with pytest.raises(ValueError):
        chow_h(1) * chow_e(2)


def test_surface_class_identities_examples():
    assert surface_class_identities(0, 3) == {"KX2": 2, "s": 3, "x": 1, "y": -1}
    assert surface_class_identities(0, 0) == {"KX2": 8, "s": 0, "x": -2, "y": -1}
    assert surface_class_identities(2, 1) == {"KX2": 0, "s": 4, "x": 2, "y": -1}
    with pytest.raises(ValueError):
        surface_class_identities(1, 1)


def test_surface_class_identities_sweep():
    for a in range(-6, 7, 2):
        for c in range(0, 9):
            data = surface_class_identities(a, c)
            assert data["KX2"] == 8 - 3 * a - 2 * c
            assert data["s"] == 3 * (a // 2) + c
            assert (data["x"], data["y"]) == (data["s"] - 2, -1)


def test_discriminant_of_diagonal_is_product():
    rng = random.Random(5)
    for _ in range(25):
        split = sorted(rng.randint(0, 2) for _ in range(3))
        forms = [
            BinaryForm(2 * a, tuple(rng.randint(-5, 5) for _ in range(2 * a + 1)))
            for a in split
        ]
        m = diagonal_matrix(tuple(split), tuple(forms))
        expected = forms[0] * forms[1] * forms[2]
        assert discriminant(m).coeffs == expected.coeffs


def test_discriminant_worked_example():
    disc = discriminant(worked_conic_matrix())
    assert disc.degree == 6
    # u v (u^2 - v^2)(u^2 - 4 v^2) expanded
    assert disc.coeffs == (0, 4, 0, -5, 0, 1, 0)
    assert factored_str(disc) == "u*v*(u - v)*(u + v)*(u - 2*v)*(u + 2*v)"


def test_discriminant_constant_section():
    m = diagonal_matrix((0, 0, 0), (BinaryForm(0, (1,)),) * 3)
    disc = discriminant(m)
    assert disc.degree == 0 and disc.coeffs == (1,)


def test_off_diagonal_discriminant():
    # [[v^2, uv], [uv, u^2]] block inside the 3x3 matrix has determinant zero
    entries = [
        [BinaryForm(2, (0, 0, 1)), BinaryForm(2, (0, 1, 0)), zero_form(2)],
        [BinaryForm(2, (0, 1, 0)), BinaryForm(2, (1, 0, 0)), zero_form(2)],
        [zero_form(2), zero_form(2), BinaryForm(2, (1, 0, 1))],
    ]
    m = ConicMatrix((1, 1, 1), tuple(tuple(r) for r in entries))
    assert discriminant(m).is_zero()
    result = analyze(m)
    assert result.squarefree is False and result.s is None


def test_non_diagonal_smoothness_is_only_necessary():
    # off-diagonal section with squarefree determinant: the smoothness flag
    # stays at the necessary-condition level
    entries = [
        [BinaryForm(2, (1, 1, 0)), BinaryForm(2, (0, 1, 0)), zero_form(2)],
        [BinaryForm(2, (0, 1, 0)), BinaryForm(2, (-1, 0, 1)), zero_form(2)],
        [zero_form(2), zero_form(2), BinaryForm(2, (-9, 0, 1))],
    ]
    m = ConicMatrix((1, 1, 1), tuple(tuple(r) for r in entries))
    assert not m.is_diagonal()
    result = analyze(m)
    assert not discriminant(m).is_zero()
    assert result.smooth_exact is None
    assert result.smooth_necessary == result.squarefree


def test_analyze_worked_example():
    result = analyze(worked_conic_matrix())
    assert result.total_fibers == 6
    assert result.real_fibers == 6
    assert result.squarefree and result.smooth_exact
    assert result.s == 3


def test_analyze_fiber_at_infinity():
    result = analyze(degenerate_fiber_matrix())
    assert result.total_fibers == 4
    assert result.real_fibers == 4
    assert result.s == 2
    disc = discriminant(degenerate_fiber_matrix())
    assert disc.infinity_multiplicity() == 1
    # affine singular fibers at t = -1, 0, 1
    assert [t for t in (-2, -1, 0, 1, 2) if sum(c * t**i for i, c in enumerate(disc.coeffs)) == 0] == [-1, 0, 1]


def test_analyze_square_factors():
    m = diagonal_matrix(
        (1, 1, 1),
        (BinaryForm(2, (0, 0, 1)), BinaryForm(2, (0, 0, 1)), BinaryForm(2, (1, 2, 1))),
    )
    result = analyze(m)
    assert result.squarefree is False
    assert result.s is None
    assert result.smooth_exact is False


def test_analyze_nonreal_pairs():
    m = diagonal_matrix(
        (1, 1, 1),
        (BinaryForm(2, (0, 1, 0)), BinaryForm(2, (1, 0, 1)), BinaryForm(2, (4, 0, 1))),
    )
    result = analyze(m)
    assert (result.total_fibers, result.real_fibers, result.s) == (6, 2, 1)


def test_real_total_parity_property():
    rng = random.Random(17)
    for _ in range(30):
        split = sorted(rng.randint(1, 2) for _ in range(3))
        forms = []
        for a in split:
            coeffs = [rng.randint(-4, 4) for _ in range(2 * a + 1)]
            if not any(coeffs):
                coeffs[0] = 1
            forms.append(BinaryForm(2 * a, tuple(coeffs)))
        m = diagonal_matrix(tuple(split), tuple(forms))
        disc = discriminant(m)
        if disc.is_zero():
            continue
        result = analyze(m)
        assert result.real_fibers % 2 == result.total_fibers % 2


def test_construct_section():
    m = construct_section(1, 1, 1, [[0, 5], [1, -1], [2, -2]])
    result = analyze(m)
    assert result.squarefree and result.s == 3
    assert result.total_fibers == result.real_fibers == 6
    m = construct_section(2, 1, 1, [[0, 5, 7, -7], [1, -1], [2, -2]])
    result = analyze(m)
    assert result.s == 4 and result.real_fibers == 8


def test_construct_section_always_smooth_property():
    rng = random.Random(23)
    for _ in range(10):
        split = [rng.randint(1, 2) for _ in range(3)]
        pool = list(range(-20, 21))
        rng.shuffle(pool)
        lists, used = [], 0
        for a in split:
            lists.append(pool[used: used + 2 * a])
            used += 2 * a
        result = analyze(construct_section(split[0], split[1], split[2], lists))
        assert result.squarefree and result.smooth_exact
        assert result.s == sum(split)


def test_construct_section_rejects_bad_roots():
    with pytest.raises(ValueError):
        construct_section(1, 1, 1, [[0, 5], [1, -1], [1, -2]])  # shared root
    with pytest.raises(ValueError):
        construct_section(1, 1, 1, [[0, 0], [1, -1], [2, -2]])  # repeated root
    with pytest.raises(ValueError):
        construct_section(1, 1, 1, [[0], [1, -1], [2, -2]])  # wrong count
    with pytest.raises(ValueError):
        construct_section(0, 1, 1, [[], [1, -1], [2, -2]])  # nonpositive twist


def test_form_str():
    assert form_str(BinaryForm(2, (-1, 0, 1))) == "u^2 - v^2"
    assert form_str(BinaryForm(1, (2, 3))) == "3*u + 2*v"
    assert form_str(zero_form(3)) == "0"
