"""Exact polynomial arithmetic and determinants."""

from __future__ import annotations

from fractions import Fraction
from random import Random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import IHARA_COEFFS
from loosezeta.polyring import (
    ExactDivisionError,
    L,
    Poly,
    PolyMatrix,
    divmod_exact,
    exact_div,
    format_poly,
)

coeff_lists = st.lists(st.integers(min_value=-50, max_value=50), max_size=8)


def test_add_examples():
    assert (L + 1) + (L - 1) == 2 * L
    p = Poly((3, 0, -2, 7))
    assert p + Poly.zero() == p
    s = Poly((2, 0, 1)) + Poly((2, -2, 3))
    assert s == Poly((4, -2, 4))
    for x in (-3, 2, 11):  # independent check by evaluation
        assert s.evaluate(x) == (x * x + 2) + (3 * x * x - 2 * x + 2)


def test_mul_examples():
    assert (L - 1) * (L + 1) == L**2 - 1
    p = Poly((5, -1, 2))
    assert p * Poly.one() == p
    prod = (L**2 + L) * (L**2 - 1)
    assert prod == L**4 + L**3 - L**2 - L
    for x in (-2, 3, 7):
        assert prod.evaluate(x) == (x * x + x) * (x * x - 1)


def test_eval_examples():
    assert (L**4 + L**3 + L**2 + L + 1).evaluate(2) == 31  # (2^5 - 1)/(2 - 1)
    p = Poly((42, 7, -3))
    assert p.evaluate(0) == 42
    assert (8 * L**3 - 12 * L + 12).evaluate(3) == 192


def test_normalization_and_zero():
    assert Poly((0, 0, 0)) == Poly.zero()
    assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
    assert not Poly.zero()
    assert Poly.zero().degree == -1
    assert Poly.zero().evaluate(17) == 0


def test_format():
    assert format_poly(5 * L**4 - 4 * L + 4, "L") == "5L^4 - 4L + 4"
    assert format_poly(Poly.zero(), "L") == "0"
    assert format_poly(-(L**2) + 1, "u") == "-u^2 + 1"
    assert format_poly(L, "t") == "t"


def test_json_round_trip():
    p = L**4 + L**3 + L**2 + L + 1
    assert p.to_json() == ["1", "1", "1", "1", "1"]
    assert Poly.from_json(p.to_json()) == p
    big = Poly((10**30, -(10**25), 3))
    assert Poly.from_json(big.to_json()) == big


@given(coeff_lists, coeff_lists)
def test_eval_is_ring_homomorphism(a, b):
    p, q = Poly(a), Poly(b)
    rng = Random(str((tuple(a), tuple(b))))
    for _ in range(5):
        x = rng.randint(-20, 20)
        assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)
        assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)


@given(coeff_lists, coeff_lists)
def test_ring_laws(a, b):
    p, q = Poly(a), Poly(b)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + Poly.one()) == p * q + p


def test_divmod_exact():
    p = (L**2 - 1) * (3 * L + 2) + 5
    q, r = divmod_exact(p, L**2 - 1)
    assert q == 3 * L + 2 and r == Poly.const(5)
    assert exact_div((L - 1) * (L + 1), L - 1) == L + 1
    with pytest.raises(ExactDivisionError):
        exact_div(L**2 + 1, L - 1)


def test_det_identity_and_small():
    for n in range(0, 6):
        assert PolyMatrix.identity(n).det() == Poly.one()
    m = PolyMatrix([[L, Poly.one()], [Poly.one(), L]])
    assert m.det() == L**2 - 1
    zero_col = PolyMatrix([[Poly.zero(), L], [Poly.zero(), L]])
    assert zero_col.det() == Poly.zero()
    needs_pivot = PolyMatrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert needs_pivot.det() == Poly.const(2)


def _bass_hashimoto_matrix(adjacency: list[list[int]], degrees: list[int]) -> PolyMatrix:
    n = len(degrees)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            c0 = 1 if i == j else 0
            c2 = degrees[i] - 1 if i == j else 0
            row.append(Poly((c0, -adjacency[i][j], c2)))
        rows.append(row)
    return PolyMatrix(rows)


def test_det_k4_matrix_reproduces_ihara():
    adjacency = [[0 if i == j else 1 for j in range(4)] for i in range(4)]
    m = _bass_hashimoto_matrix(adjacency, [3, 3, 3, 3])
    assert Poly((1, 0, -1)) ** 2 * m.det() == Poly(IHARA_COEFFS["K4"])


def _fraction_det(rows: list[list[int]]) -> int:
    """Independent integer determinant via Gaussian elimination over Q."""
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            return 0
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    assert det.denominator == 1
    return det.numerator


def _newton_interpolation(xs: list[int], ys: list[int]) -> list[Fraction]:
    """Coefficients of the unique degree < len(xs) polynomial through the points."""
    n = len(xs)
    d = [Fraction(y) for y in ys]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - level])
    acc = [d[n - 1]]
    for i in range(n - 2, -1, -1):
        shifted = [Fraction(0)] + acc
        for k in range(len(acc)):
            shifted[k] -= xs[i] * acc[k]
        shifted[0] += d[i]
        acc = shifted
    return acc


def _det_by_interpolation(m: PolyMatrix) -> Poly:
    """Evaluate entrywise at degree-bound + 1 points, take exact integer
    determinants and interpolate back; coefficients must come out integral."""
    bound = sum(max((e.degree for e in row), default=0) for row in m.entries) + 1
    xs = list(range(bound + 1))
    ys = [_fraction_det(m.evaluate(x)) for x in xs]
    coeffs = _newton_interpolation(xs, ys)
    assert all(c.denominator == 1 for c in coeffs)
    return Poly([c.numerator for c in coeffs])


def test_interpolation_helper_is_sane():
    # p(x) = x^2 - 3x + 2 through 4 points
    xs = [0, 1, 2, 3]
    ys = [2, 0, 0, 2]
    coeffs = _newton_interpolation(xs, ys)
    assert [int(c) for c in coeffs] == [2, -3, 1, 0]


def test_det_bareiss_matches_interpolation_on_corpus_matrices():
    from conftest import corpus_graphs

    for name, g in corpus_graphs().items():
        vs = list(g.vertices)
        pos = {v: i for i, v in enumerate(vs)}
        adjacency = [[0] * len(vs) for _ in vs]
        for a, b in g.edges:
            adjacency[pos[a]][pos[b]] = adjacency[pos[b]][pos[a]] = 1
        m = _bass_hashimoto_matrix(adjacency, [g.graph_degree(v) for v in vs])
        assert m.det() == _det_by_interpolation(m), name


def test_det_commutes_with_evaluation():
    rng = Random(7)
    for _ in range(10):
        n = rng.randint(1, 4)
        m = PolyMatrix(
            [
                [Poly([rng.randint(-4, 4) for _ in range(rng.randint(0, 3))]) for _ in range(n)]
                for _ in range(n)
            ]
        )
        d = m.det()
        for _ in range(3):
            x = rng.randint(-6, 6)
            assert d.evaluate(x) == _fraction_det(m.evaluate(x))
