"""Mixed operator/algebra identities and fusion commutation."""

from superyangian.mixed import (
    fusion_commutation_check,
    qresi_identity_check,
    qtt_identity_check,
    t_leg_series,
    trater_identity_check,
)


def test_qtt_identity():
    assert qtt_identity_check(1, 1, 3).ok
    assert qtt_identity_check(1, 0, 3).ok


def test_qresi_identity():
    assert qresi_identity_check(1, 1, 3).ok
    assert qresi_identity_check(0, 2, 2).ok


def test_trater_identity():
    assert trater_identity_check(1, 1, 3).ok


def test_fusion_commutation():
    # antisymmetrizer version for the ordinary rank-1 Yangian, order 3
    assert fusion_commutation_check(1, 0, 2, 3).ok
    # both versions for gl(1|1) at order 2
    assert fusion_commutation_check(1, 1, 2, 2).ok
    assert fusion_commutation_check(0, 1, 2, 3).ok


def test_fusion_guard():
    import pytest

    with pytest.raises(ValueError):
        fusion_commutation_check(2, 1, 2, 2)


def test_t_leg_matrix_shape():
    mat = t_leg_series(1, 1, 2, 1, 2)
    # entries exist for all index pairs that are diagonal on the other leg
    assert (((1, 1), (1, 1))) in mat.entries
    assert (((1, 1), (2, 1))) in mat.entries
