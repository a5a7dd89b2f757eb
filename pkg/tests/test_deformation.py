import random

import pytest

from diadeform.cochain import Cochain, product_cochain
from diadeform.deformation import (FormalIso, TruncatedDeformation,
                                   apply_formal_iso, extend_step,
                                   extend_to_order, infinitesimal,
                                   leading_cocycle_check, obstruction,
                                   obstruction_cocycle_check, random_cocycle,
                                   random_deformation, rigidity_probe,
                                   series_inverse, trivialize_step,
                                   _sum_prime_triples)
from diadeform.errors import (BaseMismatch, NonIdentityConstantTerm,
                              NotACoboundary, OrderMismatch, OrderTooLow)
from diadeform.fields import QQ
from diadeform.linalg import Matrix
from diadeform.morphism_complex import MorphismComplex


def z_family(psi, cx, l, r, lp, rp, s):
    """Order-1 deformation of the identity on the 1-dim zero dialgebra:
    first-order products (l, r) on the source, (lp, rp) on the target,
    first-order morphism coefficient s."""
    f = psi.field
    d, e = psi.source, psi.target
    fd1 = Cochain(2, d, cx.rep_d, [f.from_int(l), f.from_int(r)])
    fe1 = Cochain(2, e, cx.rep_e, [f.from_int(lp), f.from_int(rp)])
    return TruncatedDeformation(
        psi,
        [product_cochain(d), fd1],
        [product_cochain(e), fe1],
        [psi.matrix, Matrix(f, 1, 1, [[f.from_int(s)]])])


@pytest.fixture(scope="module")
def zsetup(bundled_models):
    psi = bundled_models["zero1"].morphisms["id"]
    return psi, MorphismComplex(psi)


@pytest.fixture(scope="module")
def ksetup(bundled_models):
    psi = bundled_models["mult1"].morphisms["id"]
    return psi, MorphismComplex(psi)


def test_bundled_deformations_valid(bundled_models):
    from diadeform.deformation import verify_deformation
    for model in bundled_models.values():
        for th in model.deformations.values():
            assert verify_deformation(th), th


def test_z_family_validity(zsetup):
    from diadeform.deformation import verify_deformation
    psi, cx = zsetup
    assert verify_deformation(z_family(psi, cx, 1, -1, 1, -1, 2))
    report = verify_deformation(z_family(psi, cx, 1, -1, 1, 0, 2))
    assert not report
    assert report.first_failing_order == 1
    assert "morphism equation" in report.failing_identity


def test_trivial_deformation(zsetup):
    from diadeform.deformation import verify_deformation
    psi, cx = zsetup
    th = TruncatedDeformation.trivial(psi, 3)
    assert th.order == 3
    assert verify_deformation(th)
    for k in range(1, 4):
        assert th.theta(k, cx).is_zero()


def test_base_mismatch_rejected(zsetup, ksetup):
    psi, cx = zsetup
    d = psi.source
    wrong = Cochain(2, d, cx.rep_d, [QQ.one, QQ.one])
    with pytest.raises(BaseMismatch):
        TruncatedDeformation(psi, [wrong], [product_cochain(psi.target)],
                             [psi.matrix])
    with pytest.raises(BaseMismatch):
        TruncatedDeformation(psi, [product_cochain(d)],
                             [product_cochain(psi.target)],
                             [Matrix.zero(QQ, 1, 1)])


def test_infinitesimal(zsetup):
    psi, cx = zsetup
    th = z_family(psi, cx, 1, -1, 1, -1, 0)
    theta1 = infinitesimal(th, cx)
    assert theta1 == th.theta(1, cx)
    assert cx.coboundary(theta1).is_zero()
    with pytest.raises(OrderTooLow):
        infinitesimal(TruncatedDeformation.trivial(psi), cx)


def test_leading_cocycle_detects_failure(zsetup):
    psi, cx = zsetup
    # on the zero dialgebra the third coboundary block reduces to xi - pi,
    # so unequal first-order products give a non-cocycle leading term
    th = z_family(psi, cx, 1, 0, 0, 0, 0)
    report = leading_cocycle_check(th, cx)
    assert not report.passed
    assert report.leading_order == 1
    assert "block" in report.residual_location


def test_leading_cocycle_skips_zero_orders(zsetup):
    psi, cx = zsetup
    th = TruncatedDeformation.trivial(psi, 1)
    th = th.extended_with(cx.zero(2))  # order 2, still all zero
    report = leading_cocycle_check(th, cx)
    assert report.passed and report.leading_order is None


def test_obstruction_values_z(zsetup):
    psi, cx = zsetup
    l, r, s = 1, -1, 2
    th = z_family(psi, cx, l, r, l, r, s)
    ob = obstruction(th, cx)
    # composition square: l(l-r) on [213], r(l-r) on [312], 0 elsewhere
    expected = [0, l * (l - r), 0, r * (l - r), 0]
    got = [ob.cochain.xi.value(t, (0, 0, 0))[0] for t in range(5)]
    assert got == [QQ.from_int(v) for v in expected]
    assert ob.cochain.pi == ob.cochain.xi
    # morphism block: s*l on the left slot, s*r on the right slot
    assert ob.cochain.phi.value(0, (0, 0)) == (QQ.from_int(s * l),)
    assert ob.cochain.phi.value(1, (0, 0)) == (QQ.from_int(s * r),)
    assert obstruction_cocycle_check(ob, cx).passed


def test_obstruction_vanishes_when_equal(zsetup):
    psi, cx = zsetup
    th = z_family(psi, cx, 2, 2, 2, 2, 0)
    assert obstruction(th, cx).is_zero()


def test_extend_step_blocked(zsetup):
    psi, cx = zsetup
    assert extend_step(z_family(psi, cx, 1, -1, 1, -1, 0), cx) is None


def test_extend_step_succeeds(zsetup):
    from diadeform.deformation import verify_deformation
    psi, cx = zsetup
    nxt = extend_step(z_family(psi, cx, 2, 2, 2, 2, 1), cx)
    assert nxt is not None
    assert nxt.order == 2
    assert verify_deformation(nxt)


def test_extend_to_order(zsetup):
    psi, cx = zsetup
    good = extend_to_order(z_family(psi, cx, 1, 1, 1, 1, 0), 4, cx)
    assert good.succeeded and good.reached == 4
    blocked = extend_to_order(z_family(psi, cx, 1, -1, 1, -1, 0), 3, cx)
    assert not blocked.succeeded
    assert blocked.reached == 1
    assert "not a coboundary" in blocked.certificate
    assert "[213]" in blocked.certificate and "[312]" in blocked.certificate


def test_extension_guaranteed_flag(ksetup):
    psi, cx = ksetup
    th = TruncatedDeformation.trivial(psi, 1)
    report = extend_to_order(th, 3, cx)
    assert report.hy3_dim == 0
    assert report.guaranteed
    assert report.reached == 3


def test_series_inverse():
    rng = random.Random(7)
    n = 2
    series = [Matrix.identity(QQ, n)] + [
        Matrix(QQ, n, n, [[QQ.from_int(rng.randint(-3, 3))
                           for _ in range(n)] for _ in range(n)])
        for _ in range(4)]
    inv = series_inverse(series)
    # the convolution of the series with its inverse is 1 + O(t^5)
    for k in range(1, 5):
        acc = Matrix.zero(QQ, n, n)
        for i in range(k + 1):
            acc = acc + series[i] * inv[k - i]
        assert acc.is_zero()
    assert inv[0] == Matrix.identity(QQ, n)


def test_apply_identity_iso(zsetup):
    psi, cx = zsetup
    th = z_family(psi, cx, 1, 2, 1, 2, 3)
    out = apply_formal_iso(th, FormalIso.identity(psi, 1))
    assert out.fd == th.fd and out.fe == th.fe and out.psis == th.psis


def test_apply_iso_preserves_validity(bundled_models, rng):
    from diadeform.deformation import verify_deformation
    psi = bundled_models["dim2"].morphisms["id"]
    cx = MorphismComplex(psi)
    th = random_deformation(psi, 2, rng, cx)
    f = psi.field
    nd = psi.source.dim
    mats = lambda: Matrix(f, nd, nd, [[f.from_int(rng.randint(-2, 2))
                                       for _ in range(nd)]
                                      for _ in range(nd)])
    iso = FormalIso([Matrix.identity(f, nd)] + [mats()
                                                for _ in range(th.order)],
                    [Matrix.identity(f, nd)] + [mats()
                                                for _ in range(th.order)])
    assert verify_deformation(apply_formal_iso(th, iso))


def test_iso_order_mismatch(zsetup):
    psi, cx = zsetup
    th = z_family(psi, cx, 1, 1, 1, 1, 0)
    with pytest.raises(OrderMismatch):
        apply_formal_iso(th, FormalIso.identity(psi, 3))


def test_iso_requires_identity_constant_term():
    two = Matrix(QQ, 1, 1, [[QQ.from_int(2)]])
    with pytest.raises(NonIdentityConstantTerm):
        FormalIso([two], [two])


def test_trivialize_oneplus(bundled_models):
    th = bundled_models["mult1"].deformations["oneplus"]
    cx = MorphismComplex(th.psi)
    iso, result = trivialize_step(th, cx)
    for k in range(1, result.order + 1):
        assert result.theta(k, cx).is_zero()


def test_trivialize_rejects_noncoboundary(zsetup):
    psi, cx = zsetup
    th = z_family(psi, cx, 1, 1, 1, 1, 0)
    with pytest.raises(NotACoboundary) as exc:
        trivialize_step(th, cx)
    assert "rank" in exc.value.certificate


def test_rigidity_probe_mult(ksetup):
    psi, cx = ksetup
    report = rigidity_probe(psi, cx, order_cap=3, samples=4)
    assert report.hy2_dim == 0
    assert report.verdict.startswith("rigid")
    assert report.trivialized_samples == 4


def test_rigidity_probe_undecided(zsetup):
    psi, cx = zsetup
    report = rigidity_probe(psi, cx, order_cap=2, samples=1)
    assert report.hy2_dim == 2
    assert "not decided" in report.verdict


def test_random_cocycle_in_kernel(zsetup, rng):
    psi, cx = zsetup
    for n in (1, 2):
        c = random_cocycle(cx, n, rng)
        assert cx.coboundary(c).is_zero()


def test_random_deformation_valid(all_morphisms, rng):
    from diadeform.deformation import verify_deformation
    for tag, psi in all_morphisms:
        cx = MorphismComplex(psi)
        th = random_deformation(psi, 2, rng, cx)
        assert verify_deformation(th), tag


def test_prime_sum_small_orders():
    # at total 2 only triples with a zero index occur
    assert sorted(set(_sum_prime_triples(2))) == [(0, 1, 1), (1, 0, 1),
                                                  (1, 1, 0)]
    triples = list(_sum_prime_triples(3))
    assert len(triples) == len(set(triples))
    assert (1, 1, 1) in triples
    assert all(sum(t) == 3 for t in triples)
