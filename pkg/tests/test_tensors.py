"""The exact tensor engine: operators, traces, symmetrizers, reps."""

from fractions import Fraction
from pathlib import Path

import pytest

from superyangian.algebra import algebra, embed_gl
from superyangian.tensor_checks import (
    eval_embedding_identity_check,
    eval_relations_check,
    multi_eval_consistency_check,
    normal_monomials,
    p_q_basics_check,
    pbw_confluence_check,
    pbw_rank_check,
    q_identity_check,
    rep_rtt_check,
    supertrace_cyclicity_check,
    symmetrizer_agreement_check,
    unitarity_check,
    yang_baxter_check,
)
from superyangian.tensors import (
    EndoOperator,
    SpaceGuardError,
    dump_operator,
    embed,
    eval_rep,
    matrix_unit,
    multi_eval_rep,
    parse_operator_dump,
    partial_supertrace,
    perm_p,
    projectors_ij,
    q_op,
    supertrace,
    tau_leg,
    tensor,
)

GOLDEN = Path(__file__).parent / "golden"


def test_perm_p_action_and_square():
    alg = algebra(1, 1)
    p = perm_p(alg)
    # P(e_2 (x) e_2) = -e_2 (x) e_2 ; P(e_1 (x) e_2) = e_2 (x) e_1
    assert p.entries[((2, 2), (2, 2))] == -1
    assert p.entries[((2, 1), (1, 2))] == 1
    for (m, n) in [(1, 1), (2, 1), (2, 2)]:
        a = algebra(m, n)
        assert perm_p(a) * perm_p(a) == EndoOperator.identity(a, 2)


def test_q_rank_and_square():
    for (m, n) in [(1, 1), (2, 1), (1, 3)]:
        alg = algebra(m, n)
        q = q_op(alg)
        assert q.rank() == 1
        assert q * q == q.scale(m - n)
    assert (q_op(algebra(1, 1)) * q_op(algebra(1, 1))).is_zero()


def test_projectors():
    alg = algebra(2, 1)
    i_proj, j_proj = projectors_ij(alg)
    assert supertrace(i_proj) == 2
    assert supertrace(j_proj) == -1
    assert partial_supertrace(i_proj, [1]).scalar_value() + \
        partial_supertrace(j_proj, [1]).scalar_value() == 2 - 1
    q = q_op(alg)
    ij = tensor([i_proj, j_proj])
    assert (ij * q).is_zero() and (q * ij).is_zero()
    ii = tensor([i_proj, i_proj])
    jj = tensor([j_proj, j_proj])
    assert q * (ii + jj) == q


def test_tau_leg():
    alg = algebra(1, 1)
    assert tau_leg(perm_p(alg), 2) == q_op(alg)
    # tau^2 on E_ij gives (-1)^(ibar+jbar) E_ij
    e12 = matrix_unit(alg, 1, 2)
    assert tau_leg(tau_leg(e12, 1), 1) == e12.scale(-1)
    e11 = matrix_unit(alg, 1, 1)
    assert tau_leg(tau_leg(e11, 1), 1) == e11
    p = perm_p(alg)
    assert tau_leg(tau_leg(p, 1), 2) == p


def test_supertrace_examples():
    alg = algebra(2, 1)
    assert supertrace(matrix_unit(alg, 1, 1)) == 1
    assert supertrace(matrix_unit(alg, 3, 3)) == -1
    assert supertrace(EndoOperator.identity(alg, 1)) == 2 - 1
    # brute-force value of str (x) str on P: sum over the abstract terms
    # E_ij (x) E_ji (-1)^jbar of delta_ij * (-1)^(ibar+jbar+jbar)
    p = perm_p(alg)
    brute = Fraction(0)
    for i in range(1, 4):
        brute += (-1) ** alg.index_parity(i)
    assert supertrace(p) == brute  # = M - N


def test_partial_supertrace_against_brute_force():
    import random

    alg = algebra(1, 1)
    rng = random.Random(3)
    idx = [(i, j) for i in (1, 2) for j in (1, 2)]
    for _ in range(25):
        abstract = {}
        for _ in range(rng.randrange(1, 5)):
            rows = (rng.choice((1, 2)), rng.choice((1, 2)), rng.choice((1, 2)))
            cols = (rng.choice((1, 2)), rng.choice((1, 2)), rng.choice((1, 2)))
            abstract[(rows, cols)] = Fraction(rng.randrange(-4, 5))
        op = EndoOperator.from_abstract(alg, 3, abstract)
        traced = partial_supertrace(op, [2])
        brute: dict = {}
        for (rows, cols), c in abstract.items():
            if rows[1] != cols[1]:
                continue
            sign = (-1) ** alg.index_parity(rows[1])
            key = ((rows[0], rows[2]), (cols[0], cols[2]))
            brute[key] = brute.get(key, Fraction(0)) + c * sign
        assert traced == EndoOperator.from_abstract(alg, 2, brute)


def test_supertrace_cyclicity():
    assert supertrace_cyclicity_check(1, 1, samples=60).ok
    assert supertrace_cyclicity_check(2, 2, samples=40).ok


def test_golden_dumps():
    from superyangian.tensors import symmetrizers_direct

    for (m, n) in [(1, 1), (2, 1)]:
        alg = algebra(m, n)
        assert dump_operator(perm_p(alg)) == (GOLDEN / f"p_{m}{n}.txt").read_text()
        assert dump_operator(q_op(alg)) == (GOLDEN / f"q_{m}{n}.txt").read_text()
    g3, h3 = symmetrizers_direct(algebra(1, 1), 3)
    assert dump_operator(g3) == (GOLDEN / "g3_11.txt").read_text()
    assert dump_operator(h3) == (GOLDEN / "h3_11.txt").read_text()


def test_dump_round_trip():
    alg = algebra(2, 1)
    q = q_op(alg)
    assert parse_operator_dump(dump_operator(q)) == q


def test_space_guard():
    alg = algebra(2, 2)
    with pytest.raises(SpaceGuardError):
        EndoOperator.identity(alg, 9)


def test_yang_baxter_and_unitarity():
    for (m, n) in [(1, 1), (0, 3), (2, 1)]:
        assert yang_baxter_check(m, n).ok
        assert unitarity_check(m, n).ok
    assert p_q_basics_check(1, 2).ok


def test_q_identities():
    assert q_identity_check(1, 1).ok
    assert q_identity_check(2, 1).ok


def test_q_identities_reject_pure_cases():
    with pytest.raises(ValueError):
        q_identity_check(2, 0)


def test_symmetrizer_agreement():
    assert symmetrizer_agreement_check(1, 1, 4).ok
    assert symmetrizer_agreement_check(2, 1, 3).ok
    assert symmetrizer_agreement_check(1, 0, 2).ok


def test_symmetrizer_n2_explicit():
    from superyangian.tensors import symmetrizers_direct

    alg = algebra(1, 1)
    g, h = symmetrizers_direct(alg, 2)
    p = perm_p(alg)
    ident = EndoOperator.identity(alg, 2)
    assert g == ident - p
    assert h == ident + p


def test_eval_rep_examples():
    alg = algebra(1, 1)
    # T[1,1,1] -> -E_11 at any z
    assert eval_rep(alg.gen(1, 1, 1), 3) == matrix_unit(alg, 1, 1).scale(-1)
    # z = 0 kills higher levels: the evaluation homomorphism
    assert eval_rep(alg.gen(1, 2, 2), 0).is_zero()
    # homomorphism property on a product
    x, y = alg.gen(1, 2, 1), alg.gen(2, 1, 2)
    z = Fraction(2)
    assert eval_rep(x * y, z) == eval_rep(x, z) * eval_rep(y, z)


def test_eval_rep_kills_relations():
    assert eval_relations_check(1, 1, (0, 1, -2), 2).ok
    assert eval_relations_check(2, 1, (0, 1, -2), 2).ok


def test_eval_embedding_identity():
    for (m, n) in [(1, 1), (2, 1), (1, 0)]:
        assert eval_embedding_identity_check(m, n).ok
    alg = algebra(1, 1)
    assert eval_rep(embed_gl(alg, 1, 2), 0) == matrix_unit(alg, 1, 2)


def test_multi_eval_single_point_reduction():
    alg = algebra(1, 1)
    x = alg.gen(1, 2, 2) * alg.gen(2, 1, 1)
    assert multi_eval_rep(x, (Fraction(3),)) == eval_rep(x, 3)


def test_multi_eval_routes_agree():
    assert multi_eval_consistency_check(1, 1, (0, 1), 3).ok
    assert multi_eval_consistency_check(1, 1, (0, 1, 5), 2).ok
    assert multi_eval_consistency_check(2, 1, (0, 1), 2).ok


def test_rep_rtt():
    assert rep_rtt_check(1, 1, 2, samples=5).ok


def test_pbw_confluence():
    assert pbw_confluence_check(1, 1, schedules=120, filt_max=5).ok


def test_pbw_rank_deficiency_is_structural():
    """The fixed-point multi-point representation can never separate all
    bounded-level monomials: the even central element of gl(M|N) acts by
    the scalar n, so T[1,1,1] - T[2,2,1] + n is in the kernel."""
    alg = algebra(1, 1)
    kernel_element = alg.gen(1, 1, 1) - alg.gen(2, 2, 1) + alg.scalar(3)
    assert multi_eval_rep(kernel_element, (0, 1, 5)).is_zero()
    assert multi_eval_rep(kernel_element, (2, 3, 7)).is_zero()
    report = pbw_rank_check(1, 1, 3, (0, 1, 5))
    assert not report.ok
    assert report.info["monomials"] == 49
    assert report.info["rank"] == 26  # regression: the achieved rank


def test_normal_monomial_enumeration():
    alg = algebra(1, 1)
    words = normal_monomials(alg, 2)
    assert len(words) == 17
    for w in words:
        assert sum(g.r for g in w) <= 2
        assert list(w) == sorted(w)
        for a, b in zip(w, w[1:]):
            assert not (a == b and alg.gen_parity(a))
