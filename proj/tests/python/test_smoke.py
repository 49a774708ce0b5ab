import math

import numpy as np
import pytest

import instmod


def test_dirac_index_is_charge_on_cp2():
    for k in range(1, 8):
        for r in (2, 5, 20):
            assert instmod.dirac_index(q=1, k=k, r=r, c=[1]) == k
            assert instmod.dirac_index(q=1, k=k, r=r, c=[-1]) == k


def test_dirac_index_with_nontrivial_c1e():
    assert instmod.dirac_index(q=2, k=1, r=2, c=[1, 1], c1e=[1, 0]) == 2


def test_spinc_enumeration():
    classes = instmod.enumerate_spinc(3)
    assert len(classes) == 8
    assert all(instmod.intersection(c, c) == 3 for c in classes)
    assert instmod.chosen_classes(2) == [[1, 1], [-1, 1], [1, -1]]
    assert instmod.coupled_line_index([1, -1], 2, 1) == 0


def test_kernel_report():
    report = instmod.kernel_report(q=2, k=1, max_degree=8)
    assert report["all_equal"]
    assert report["relations_in_kernel"]
    by_degree = {row["d"]: row for row in report["degrees"]}
    assert by_degree[4]["dim_kernel"] == 1
    assert by_degree[4]["dim_ideal"] == 1
    assert instmod.relations_in_kernel(2)


def test_identity():
    assert instmod.identity_check()


def test_hilbert_anchors():
    q = 3
    report = instmod.hilbert_report(q=q, max_degree=12)
    assert report["all_equal"]
    rows = {row["d"]: row for row in report["per_degree"]}
    assert int(rows[2]["lhs"]) == q + 1
    assert int(rows[4]["lhs"]) == 2 + 3 * q + q * (q - 1) // 2


def test_surjectivity():
    report = instmod.surjectivity_report(q=2, m_max=4)
    assert report["surjective"]
    assert len(report["certificates"]) == 3 * 4


def test_monad_roundtrip():
    rng = np.random.default_rng(0)
    m = rng.normal(size=(7, 4)) + 1j * rng.normal(size=(7, 4))
    q, _ = np.linalg.qr(m)
    v1, v2 = q[:, :2], q[:, 2:4]

    b, c = instmod.m0_config(v1, v2)
    zero = np.zeros((2, 2), dtype=complex)
    assert instmod.integrability_residual(zero, zero, zero, b, c) < 1e-14

    w1, w2 = instmod.m0_subspaces(b, c)
    for got, want in ((w1, v1), (w2, v2)):
        gap = got @ got.conj().T - want @ want.conj().T
        assert np.linalg.norm(gap) < 1e-10


def test_monad_maps_compose_to_zero():
    rng = np.random.default_rng(1)
    m = rng.normal(size=(6, 2)) + 1j * rng.normal(size=(6, 2))
    q, _ = np.linalg.qr(m)
    b, c = instmod.m0_config(q[:, :1], q[:, 1:2])
    for x, s in instmod.sample_blowup_points(25):
        a_mat, b_mat = instmod.monad_maps(b, c, x, s)
        assert a_mat.shape == (4 * 1 + 6, 2)
        assert b_mat.shape == (2, 4 * 1 + 6)
        denom = np.linalg.norm(a_mat) * np.linalg.norm(b_mat)
        assert np.linalg.norm(b_mat @ a_mat) <= 1e-12 * denom


def test_dimension_formula():
    for k, r in ((1, 3), (1, 4), (2, 5), (2, 6), (3, 8)):
        report = instmod.m0_dimension_check(k, r)
        assert report["match"]
        assert report["measured"] == 4 * r * k - 6 * k * k


def test_monad_report_and_determinism():
    report = instmod.monad_report(k=2, r=6, samples=30)
    assert report["pass"]
    assert report["dimension"]["match"]
    assert report["integrability_residual"] < 1e-13

    a = instmod.sample_blowup_points(3, seed=99)
    b = instmod.sample_blowup_points(3, seed=99)
    for (xa, sa), (xb, sb) in zip(a, b):
        assert np.array_equal(xa, xb)
        assert np.array_equal(sa, sb)


def test_gauge_action_preserves_m0():
    rng = np.random.default_rng(2)
    m = rng.normal(size=(6, 4)) + 1j * rng.normal(size=(6, 4))
    q, _ = np.linalg.qr(m)
    b, c = instmod.m0_config(q[:, :2], q[:, 2:4])
    zero = np.zeros((2, 2), dtype=complex)
    g = np.eye(2) + 0.1 * (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    h = np.eye(2) + 0.1 * (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    a1, a2, d, b2, c2 = instmod.gauge_act(g, h, zero, zero, zero, b, c)
    assert instmod.integrability_residual(a1, a2, d, b2, c2) < 1e-12


def test_invalid_arguments_raise():
    with pytest.raises(Exception):
        instmod.dirac_index(q=1, k=1, r=2, c=[2])  # even entry
    with pytest.raises(Exception):
        instmod.kernel_report(q=2, k=3)
