from fractions import Fraction

import pytest

from hecke_fusion.combinat import StandardTableau
from hecke_fusion.exact import Parameters, RatFun
from hecke_fusion.fusion import (
    fuse_all, fused_idempotent, jm_idempotent, phi, raw_phi_product_check,
    verify_idempotent_suite, verify_key_lemma,
)
from hecke_fusion.rep import AlgebraElement, SeminormalRep
from hecke_fusion.suites import DEFAULT_GRID
from hecke_fusion.weights import theta_multipartition


def tab(rows):
    return StandardTableau.from_rows(rows)


def test_phi_one_is_t_of_z():
    R = SeminormalRep(Parameters.generic(2, 2))
    assert phi(R, 1, []) == R.t_of_z


def test_phi_two_one_component():
    P = Parameters.generic(1, 2)
    R = SeminormalRep(P)
    (q,) = P.qvalues
    z = RatFun.z()
    want = (R.gen(1) + (z - q).inverse()) * R.gen(1)
    assert phi(R, 2, [q]) == want
    assert phi(R, 2, [q]).substitute(q + 1) == R.gen(1) + 1


def test_phi_prefix_length():
    R = SeminormalRep(Parameters.default(1, 2))
    with pytest.raises(ValueError):
        phi(R, 2, [])


def test_symmetrizer_and_antisymmetrizer():
    R = SeminormalRep(Parameters.generic(1, 2))
    one, t1 = R.identity(), R.gen(1)
    E, _ = fused_idempotent(tab([[[1, 2]]]), R)
    assert E == (one + t1) * Fraction(1, 2)
    E, _ = fused_idempotent(tab([[[1], [2]]]), R)
    assert E == (one - t1) * Fraction(1, 2)


def test_two_components_one_strand():
    P = Parameters.generic(2, 1)
    R = SeminormalRep(P)
    q1, q2 = P.qvalues
    E, tr = fused_idempotent(tab([[[1]], []]), R)
    assert E == (R.t - q2) * (1 / (q1 - q2))
    assert tr.normalization == 1 / (q1 - q2)
    assert [s.k for s in tr.steps] == [1]


def test_empty_tableau():
    R = SeminormalRep(Parameters.default(2, 0))
    E, tr = fused_idempotent(tab([[], []]), R)
    assert E == R.identity() and tr.steps == ()


def test_trace_telescopes():
    P = Parameters.default(2, 3)
    R = SeminormalRep(P)
    for t in R.tableaux:
        E, tr = fused_idempotent(t, R)
        assert tr.normalization == theta_multipartition(t.shape, P)
        assert tr.steps[-1].checksum == 1
        assert tr.final is E


def test_raw_phi_product_examples():
    for P in (Parameters.default(1, 2), Parameters.default(2, 1), Parameters.default(2, 2),
              Parameters.generic(2, 2), Parameters.default(3, 2)):
        R = SeminormalRep(P)
        for t in R.tableaux:
            assert raw_phi_product_check(t, R)


def test_raw_phi_product_guard():
    R = SeminormalRep(Parameters.default(1, 4))
    with pytest.raises(ValueError):
        raw_phi_product_check(R.tableaux[0], R)


def test_jm_idempotent_examples():
    R = SeminormalRep(Parameters.default(1, 1))
    assert jm_idempotent(R.tableaux[0], R) == R.identity()
    R = SeminormalRep(Parameters.specialized(1, 2, [0]))
    E = jm_idempotent(tab([[[1, 2]]]), R)
    assert E == (R.jm(2) + 1) * Fraction(1, 2)
    assert E == (R.gen(1) + 1) * Fraction(1, 2)


@pytest.mark.parametrize("P", [Parameters.default(1, 1), Parameters.default(1, 2), Parameters.default(2, 1),
                               Parameters.default(2, 3), Parameters.generic(2, 2)], ids=str)
def test_key_lemma(P):
    R = SeminormalRep(P)
    for t in R.tableaux:
        assert verify_key_lemma(t, R)


@pytest.mark.parametrize("m,n", [(1, 3), (2, 2), (3, 2), (2, 3)])
def test_idempotent_suite(m, n):
    checks = verify_idempotent_suite(SeminormalRep(Parameters.default(m, n)))
    assert checks and all(checks), [c for c in checks if not c]


def test_idempotent_suite_generic():
    checks = verify_idempotent_suite(SeminormalRep(Parameters.generic(2, 2)))
    assert all(checks)


def test_idempotent_suite_negative_control():
    R = SeminormalRep(Parameters.default(1, 3))
    fused = {t: fused_idempotent(t, R)[0] for t in R.tableaux}
    t = R.tableaux[1]
    blocks = [list(map(list, b)) for b in fused[t].blocks]
    b, k = R.position[t]
    blocks[b][k][k] += Fraction(1, 7)
    fused[t] = AlgebraElement(R, [tuple(map(tuple, blk)) for blk in blocks])
    failed = {c.name for c in verify_idempotent_suite(R, fused=fused) if not c}
    assert {"idempotent", "matrix_unit"} <= failed


@pytest.mark.parametrize("m,n", DEFAULT_GRID)
def test_fusion_equals_matrix_unit_on_grid(m, n):
    R = SeminormalRep(Parameters.default(m, n))
    for t in R.tableaux:
        assert fused_idempotent(t, R)[0] == R.matrix_unit(t)


def test_parallel_fusion_matches_serial():
    R = SeminormalRep(Parameters.default(2, 3))
    tabs = list(R.tableaux)
    serial = fuse_all(R, tabs, 1)
    par = fuse_all(R, tabs, 2)
    assert [E.blocks for E, _ in serial] == [E.blocks for E, _ in par]
    assert [tr.steps for _, tr in serial] == [tr.steps for _, tr in par]


def test_branching_of_smaller_tableau():
    R = SeminormalRep(Parameters.default(2, 3))
    u = tab([[[1]], [[2]]])
    E_u, _ = fused_idempotent(u, R)
    children = [t for t in R.tableaux if t.restrict(2) == u]
    total = R.zero()
    for t in children:
        total = total + R.matrix_unit(t)
    assert len(children) == 4 and E_u == total
