import itertools

import pytest

from conftest import mult_dialgebra, zero_dialgebra

from diadeform.dialgebra import (Dialgebra, DialgebraMorphism, adjoint_rep,
                                 check_dialgebra, check_morphism,
                                 check_representation, pullback_rep)
from diadeform.errors import ShapeMismatch
from diadeform.fields import QQ
from diadeform.trees import ProductLabel

L, R = ProductLabel.LEFT, ProductLabel.RIGHT


def test_zero_dialgebra_valid():
    for dim in (1, 2, 3):
        assert check_dialgebra(zero_dialgebra(dim)).valid


def test_mult_dialgebra_valid():
    d = mult_dialgebra()
    assert check_dialgebra(d).valid
    e = d.basis_vector(0)
    assert d.product(L, e, e) == e
    assert d.product(R, e, e) == e


def test_invalid_products_reported():
    # x -| y = y on a 1-dim space fails the first axiom
    t = [[[QQ.one]]]
    z = [[[QQ.zero]]]
    bad = Dialgebra(1, QQ, left=t, right=z)
    report = check_dialgebra(bad)
    assert not report.valid
    assert report.violations


def _brute_force_valid(lval, rval):
    """Directly test the five defining identities of a 1-dim structure
    with x -| y = l*xy and x |- y = r*xy, on the basis element."""
    l, r = lval, rval
    # all five identities reduce to scalar equations in l and r
    eqs = [
        l * l - l * l,        # (x -| y) -| z = x -| (y -| z)
        l * l - l * r,        # x -| (y -| z) = x -| (y |- z)
        r * l - l * r,        # (x |- y) -| z = x |- (y -| z)
        l * r - r * r,        # (x -| y) |- z = (x |- y) |- z
        r * r - r * r,        # x |- (y |- z) = (x |- y) |- z
    ]
    return all(e == 0 for e in eqs)


def test_dim1_grid_matches_brute_force():
    # enumerate all 1-dim structures with coefficients in {-1, 0, 1}
    for l, r in itertools.product((-1, 0, 1), repeat=2):
        d = Dialgebra(1, QQ, left=[[[QQ.from_int(l)]]],
                      right=[[[QQ.from_int(r)]]])
        assert check_dialgebra(d).valid == _brute_force_valid(l, r)


def test_adjoint_rep_valid(all_dialgebras):
    for tag, d in all_dialgebras:
        rep = adjoint_rep(d)
        assert check_representation(d, rep).valid, tag


def test_pullback_rep_valid(all_morphisms):
    for tag, psi in all_morphisms:
        rep = pullback_rep(psi)
        assert check_representation(psi.source, rep).valid, tag
        assert rep.module_dim == psi.target.dim


def test_bundled_dialgebras_valid(all_dialgebras):
    for tag, d in all_dialgebras:
        assert check_dialgebra(d).valid, tag


def test_bundled_morphisms_valid(all_morphisms):
    for tag, psi in all_morphisms:
        assert check_morphism(psi).valid, tag


def test_morphism_violation_detected():
    d = mult_dialgebra()
    z = zero_dialgebra(1)
    # the identity matrix is not a morphism K -> Z
    from diadeform.linalg import Matrix
    bad = DialgebraMorphism(d, z, Matrix.identity(QQ, 1))
    assert not check_morphism(bad).valid


def test_morphism_compose_and_apply():
    d = mult_dialgebra()
    ident = DialgebraMorphism.identity(d)
    twice = ident.compose(ident)
    v = d.basis_vector(0)
    assert twice(v) == v


def test_noncommutative_example(bundled_models):
    d = bundled_models["dim2"].dialgebras["P2"]
    x, y = d.basis_vector(0), d.basis_vector(1)
    assert d.product(L, x, y) != d.product(L, y, x)
    assert check_dialgebra(d).valid


def test_product_shape_check():
    d = mult_dialgebra()
    with pytest.raises(ShapeMismatch):
        d.product(L, (QQ.one,), (QQ.one, QQ.zero))
