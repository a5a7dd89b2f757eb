import pytest

from diadeform.errors import (BadScalar, ParseError, UnknownReference)
from diadeform.fields import PrimeField, QQ
from diadeform.modelfile import parse_model, serialize_model, validate_model
from diadeform.models import bundled_model_names, bundled_model_text


MINIMAL = """
field rationals
dialgebra Z
  dim 1
end
"""

MULT = """
field rationals
dialgebra K
  dim 1
  left 0 0 0 1/1
  right 0 0 0 1
end
"""


def test_minimal_zero_model():
    model = parse_model(MINIMAL)
    d = model.dialgebras["Z"]
    assert d.dim == 1
    z = (QQ.zero,)
    from diadeform.trees import ProductLabel
    assert d.product(ProductLabel.LEFT, d.basis_vector(0),
                     d.basis_vector(0)) == z


def test_mult_model():
    model = parse_model(MULT)
    d = model.dialgebras["K"]
    e = d.basis_vector(0)
    from diadeform.trees import ProductLabel
    assert d.product(ProductLabel.LEFT, e, e) == e
    assert d.product(ProductLabel.RIGHT, e, e) == e


def test_unknown_reference():
    text = MINIMAL + """
morphism f
  source Z
  target W
end
"""
    with pytest.raises(UnknownReference) as exc:
        parse_model(text)
    assert "W" in str(exc.value)


def test_bad_scalar():
    with pytest.raises(BadScalar):
        parse_model("""
field rationals
dialgebra D
  dim 1
  left 0 0 0 oops
end
""")


def test_parse_error_reports_line():
    with pytest.raises(ParseError) as exc:
        parse_model("""
field rationals
dialgebra D
  dim 1
  wibble 3
end
""")
    assert exc.value.line is not None


def test_comments_and_blank_lines():
    model = parse_model("# leading comment\n\n" + MINIMAL + "\n# trailing\n")
    assert "Z" in model.dialgebras


def test_field_override():
    model = parse_model(MULT, field_override=PrimeField(5))
    assert model.field == PrimeField(5)
    d = model.dialgebras["K"]
    assert d.field == PrimeField(5)


def test_gf_field_declaration():
    model = parse_model("""
field gf 7
dialgebra D
  dim 2
end
""")
    assert model.field == PrimeField(7)


def test_roundtrip_bundled_models():
    # serialize o parse is the identity on serialized text
    for name in bundled_model_names():
        model = parse_model(bundled_model_text(name))
        text = serialize_model(model)
        again = serialize_model(parse_model(text))
        assert text == again, name


def test_roundtrip_preserves_contents():
    for name in bundled_model_names():
        model = parse_model(bundled_model_text(name))
        reparsed = parse_model(serialize_model(model))
        assert set(model.dialgebras) == set(reparsed.dialgebras)
        assert set(model.morphisms) == set(reparsed.morphisms)
        assert set(model.deformations) == set(reparsed.deformations)
        for dname, d in model.dialgebras.items():
            assert reparsed.dialgebras[dname] == d
        for mname, psi in model.morphisms.items():
            assert reparsed.morphisms[mname].matrix == psi.matrix
        for tname, th in model.deformations.items():
            other = reparsed.deformations[tname]
            assert th.fd == other.fd
            assert th.fe == other.fe
            assert th.psis == other.psis


def test_validate_model():
    for name in bundled_model_names():
        model = parse_model(bundled_model_text(name))
        results = validate_model(model)
        assert results
        assert all(report.valid for _, _, report in results), name


def test_validate_flags_bad_dialgebra():
    model = parse_model("""
field rationals
dialgebra B
  dim 1
  left 0 0 0 1
end
""")
    results = validate_model(model)
    assert any(not report.valid for _, _, report in results)


def test_deformation_entries(bundled_models):
    th = bundled_models["zero1"].deformations["theta_blocked"]
    assert th.order == 1
    f = th.field
    assert th.fd[1].value(0, (0, 0)) == (f.one,)
    assert th.fd[1].value(1, (0, 0)) == (-f.one,)
    assert th.psis[1].is_zero()


def test_formal_iso_parsed(bundled_models):
    iso = bundled_models["mult1"].isos["scale"]
    assert iso.order == 1
    assert iso.phi_d[1][0, 0] == QQ.one
