from fractions import Fraction

import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from pointres import ResidueMapping


def test_fit_predict_transform():
    est = ResidueMapping(variables=("x", "y"), weights=(7, 3))
    est.fit(["3*x^2+y^5", "5*x*y^4+7*y^6"])
    assert est.n_basis_ == 12
    assert est.predict(["1", "x*y^5"]) == [Fraction(30517578125, 218041257467152161), Fraction(1, 21)]
    row = est.transform(["x^3+x*y"])[0]
    assert row[est.basis_.index((1, 1))] == 1 and row[est.basis_.index((1, 5))] == Fraction(-1, 3)


def test_params_and_clone():
    est = ResidueMapping(variables=("x", "y"), params=("t",), weights=(7, 3), max_degree=32)
    assert est.get_params()["max_degree"] == 32
    est2 = clone(est).set_params(max_degree=40)
    assert est2.max_degree == 40 and not hasattr(est2, "residue_map_")
    est.fit(["3*x^2+t*y^5", "5*t*x*y^4+7*y^6"])
    assert "t" in est.genericity_


def test_polynomial_input(e12):
    est = ResidueMapping().fit(e12)
    assert est.predict([e12[0]]) == [0]


def test_errors(e12):
    with pytest.raises(NotFittedError):
        ResidueMapping().predict(["1"])
    with pytest.raises(ValueError):
        ResidueMapping().fit(["x", "y"])
