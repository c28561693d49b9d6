"""The generating matrix T(u) and its inverse."""

import pytest

from superyangian.algebra import algebra
from superyangian.matrices import SeriesMatrix, element_ring, invert_t, t_matrix
from superyangian.morphisms import counit
from superyangian.series import SeriesTail


def test_t_matrix_1x1():
    alg = algebra(1, 0)
    t = t_matrix(alg, 2)
    entry = t.entry(1, 1)
    assert entry.coefficient(0) == alg.one(1)
    assert entry.coefficient(1) == alg.gen(1, 1, 1)
    assert entry.coefficient(2) == alg.gen(1, 1, 2)


def test_entry_parity():
    alg = algebra(1, 1)
    t = t_matrix(alg, 3)
    for r in range(1, 4):
        assert t.entry(1, 2).coefficient(r).parity() == 1
        assert t.entry(1, 1).coefficient(r).parity() == 0


def test_counit_of_t_matrix_is_identity():
    alg = algebra(1, 1)
    t = t_matrix(alg, 3)
    for i in (1, 2):
        for j in (1, 2):
            for r in range(4):
                val = counit(t.entry(i, j).coefficient(r))
                assert val == (1 if (i == j and r == 0) else 0)


def test_parity_violation_rejected():
    alg = algebra(1, 1)
    ring = element_ring(alg)
    rows = [[SeriesTail.constant(ring, alg.one(1), 1) for _ in range(2)] for _ in range(2)]
    # the (1,2) entry must be odd; the unit is even
    with pytest.raises(ValueError):
        SeriesMatrix(alg, 1, rows)


def test_inverse_first_coefficient():
    for (m, n) in [(1, 1), (2, 1)]:
        alg = algebra(m, n)
        tinv = invert_t(t_matrix(alg, 3))
        for i in range(1, alg.dim + 1):
            for j in range(1, alg.dim + 1):
                assert tinv.entry(i, j).coefficient(1) == -alg.gen(i, j, 1)


def test_inverse_1x1_is_series_inverse():
    alg = algebra(1, 0)
    t = t_matrix(alg, 4)
    tinv = invert_t(t)
    assert tinv.entry(1, 1) == t.entry(1, 1).inverse()


def test_two_sided_inverse_and_ttp_identity():
    alg = algebra(1, 1)
    order = 4
    t = t_matrix(alg, order)
    tinv = invert_t(t)
    assert (t * tinv).is_identity()
    assert (tinv * t).is_identity()
    # entrywise: sum_k T_ik Ttilde_kj (-1)^((ib+kb)(jb+kb)) = delta_ij
    ring = element_ring(alg)
    for i in (1, 2):
        for j in (1, 2):
            acc = SeriesTail.zero(ring, order)
            for k in (1, 2):
                sgn = (-1) ** (
                    (alg.index_parity(i) + alg.index_parity(k))
                    * (alg.index_parity(j) + alg.index_parity(k))
                )
                acc = acc + (t.entry(i, k) * tinv.entry(k, j)).scale(sgn)
            want = SeriesTail.constant(ring, alg.one(1) if i == j else alg.zero(1), order)
            assert acc == want


def test_inverse_needs_identity_constant_term():
    alg = algebra(1, 1)
    t = t_matrix(alg, 2)
    bad = t * t  # constant term still identity; tweak instead
    ring = element_ring(alg)
    rows = [[t.entry(i + 1, j + 1) for j in range(2)] for i in range(2)]
    rows[0][0] = rows[0][0] + SeriesTail.constant(ring, alg.one(1), 2)
    broken = SeriesMatrix(alg, 2, rows, check=False)
    with pytest.raises(ValueError):
        invert_t(broken)


def test_parity_preserved_by_products_and_inverse():
    alg = algebra(1, 1)
    t = t_matrix(alg, 3)
    tinv = invert_t(t)
    prod = t * tinv
    for mat in (tinv, prod, t.shift(2)):
        SeriesMatrix(alg, 3, mat.rows)  # constructor re-checks parity
