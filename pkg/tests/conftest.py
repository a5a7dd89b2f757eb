import random

import pytest

from diadeform.cochain import Cochain, cy_dim
from diadeform.dialgebra import Dialgebra, DialgebraMorphism
from diadeform.fields import QQ
from diadeform.models import bundled_model_names, load_bundled_model


def zero_dialgebra(dim, name="Z"):
    return Dialgebra(dim, QQ, name=name)


def mult_dialgebra(name="K"):
    # 1-dim, both products = ordinary multiplication
    one = [[[QQ.one]]]
    return Dialgebra(1, QQ, left=one, right=one, name=name)


def random_cochain(d, rep, n, rng, lo=-3, hi=3):
    f = d.field
    return Cochain(n, d, rep,
                   [f.from_int(rng.randint(lo, hi))
                    for _ in range(cy_dim(d, rep, n))])


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(scope="session")
def bundled_models():
    return {name: load_bundled_model(name) for name in bundled_model_names()}


@pytest.fixture(scope="session")
def all_dialgebras(bundled_models):
    out = []
    for mname, model in bundled_models.items():
        for d in model.dialgebras.values():
            out.append(("%s.%s" % (mname, d.name), d))
    return out


@pytest.fixture(scope="session")
def all_morphisms(bundled_models):
    out = []
    for mname, model in bundled_models.items():
        for psi in model.morphisms.values():
            out.append(("%s.%s" % (mname, psi.name), psi))
    return out


@pytest.fixture
def zd1():
    return zero_dialgebra(1)


@pytest.fixture
def mult():
    return mult_dialgebra()


@pytest.fixture
def mult_id(mult):
    return DialgebraMorphism.identity(mult)


@pytest.fixture
def zd1_id(zd1):
    return DialgebraMorphism.identity(zd1)
