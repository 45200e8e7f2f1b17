from pathlib import Path

import pytest

import eqtorus

DATA = Path(__file__).resolve().parent.parent / "data"


def ranks(table):
    return [(r["rank"], r["torsion"]) for r in table["rows"]]


def test_homology_of_the_sphere():
    t = eqtorus.homology(str(DATA / "sphere.space"), max_degree=2)
    assert ranks(t) == [(1, []), (0, []), (1, [])]
    assert t["ring"] == "Z"


def test_pullback_sees_lens_space_torsion():
    t = eqtorus.pullback(str(DATA / "sphere_bundle_d2.space"), max_degree=3)
    assert ranks(t) == [(1, []), (0, [2]), (0, []), (1, [])]


def test_cartan_model_of_a_point():
    t = eqtorus.cartan("builtin:point", rank=2, max_degree=4)
    assert [r["rank"] for r in t["rows"]] == [1, 0, 2, 0, 3]
    assert t["actions"][0]["matrix"]


def test_intersection_homology_of_the_pinched_torus():
    t = eqtorus.ih(str(DATA / "pinched_torus.space"), max_degree=2)
    assert ranks(t) == [(1, []), (0, []), (1, [])]
    e = eqtorus.ih_equivariant(str(DATA / "pinched_torus.space"), max_degree=4)
    assert [r["rank"] for r in e["rows"]] == [1, 0, 2, 0, 2]


def test_errors():
    with pytest.raises(eqtorus.ValidationError, match="t"):
        eqtorus.homology(str(DATA / "malformed_face.space"))
    with pytest.raises(eqtorus.ParseError):
        eqtorus.homology(str(DATA / "unknown_section.space"))
    with pytest.raises(ValueError):
        eqtorus.homology("builtin:point", ring="F6x")


def test_verify_intersection_suite():
    rep = eqtorus.verify("ih", seed=7, rank=1)
    assert rep["ok"]
    assert all(c["criterion"] == 11 for c in rep["checks"])
    assert "em" in eqtorus.suite_names()
