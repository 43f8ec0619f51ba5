from fractions import Fraction

import pytest

import oddzeta


def test_zeta_routes_agree():
    lerch = oddzeta.zeta(3, digits=60, method="lerch")
    direct = oddzeta.zeta(3, digits=60)
    assert lerch["value"] == direct["value"]
    assert lerch["value"].startswith("1.2020569031595942")
    assert oddzeta.zeta(5, 40, "ramanujan")["value"].startswith("1.0369277551433699")


def test_coefficients_are_fractions():
    assert oddzeta.coeff("even-zeta", 3) == Fraction(1, 945)
    assert oddzeta.coeff("lerch", 3) == Fraction(19, 56700)
    assert oddzeta.coeff("euler", 6) == -61
    with pytest.raises(ValueError):
        oddzeta.coeff("lerch", 2)


def test_continued_fraction_of_pi():
    cf = oddzeta.continued_fraction("pi", terms=13, digits=40)
    assert cf["quotients"] == [3, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14]
    assert cf["convergents"][3] == Fraction(355, 113)


def test_split_and_checks():
    assert oddzeta.split(5, 30)["a"] == Fraction(1, 294)
    assert all(row["passed"] for row in oddzeta.check_dioph("zeta3/pi^3", max_n=30))
    report = oddzeta.weyl("zeta3", 1000)
    assert report["brute_matches_closed"] and report["within_bound"]
    assert oddzeta.probe("zeta3", 100)["concavity_holds"]


def test_derive_and_errors():
    four = oddzeta.derive(-4)
    assert four["numeric_matches_closed_form"]
    assert not four["numeric_matches_published"]
    with pytest.raises(oddzeta.NearSingularity):
        oddzeta.weyl("pi", 10)
    with pytest.raises(ValueError):
        oddzeta.evaluate("pi +")
