from fractions import Fraction

import pytest

from fano3.basket import Basket
from fano3.rr import (
    CrepantCurve,
    CurveConfig,
    UnknownTerm,
    c_curve,
    c_orbifold,
    delta_lower_bound,
    km_bound,
    nabla,
    residue_term_builder,
)


def test_c_orbifold_periodicity():
    # c_Q(D) shifts by an integer over a period: the residue part repeats
    for r in range(2, 25):
        for b in range(1, r // 2 + 1):
            try:
                c_orbifold(r, b, 0)
            except ValueError:
                continue
            for i in range(r):
                diff = c_orbifold(r, b, i + r) - c_orbifold(r, b, i)
                assert diff.denominator == 1, (r, b, i)


def test_c_orbifold_values():
    assert c_orbifold(2, 1, 0) == 0
    assert c_orbifold(2, 1, 1) == Fraction(-1, 8) + Fraction(0)
    with pytest.raises(ValueError):
        c_orbifold(4, 2, 1)


def test_c_curve():
    assert c_curve(3, 1, 3) == 0
    assert c_curve(3, 1, 1) == -Fraction(1, 3)
    assert c_curve(4, 3, 2) == c_curve(4, 1, 2)
    with pytest.raises(ValueError):
        c_curve(4, 2, 1)


def test_nabla():
    # budget formula against a hand evaluation
    assert nabla(66, 198, 162) == Fraction(162) - Fraction(66**2 + 2 * 66 - 4, 4 * 66**2) * 198


def test_km_bound_shapes():
    assert km_bound(1, 3) == 3
    assert km_bound(2, 1) == Fraction(16, 5)
    assert km_bound(3, 1, p=66, q=70) == Fraction(4 * 70 * 70, -4 * 66 * 66 + 6 * 66 * 70 - 70 * 70)
    with pytest.raises(ValueError):
        km_bound(4, 4)


def test_unknown_term_values():
    t = UnknownTerm(Fraction(-6), 3, "quadratic", "demo")
    assert t.value(0) == 0
    assert t.value(1) == -6 * Fraction(2, 6)
    lin = UnknownTerm(Fraction(-5, 9), 9, "linear", "x_A1")
    assert lin.value(3) == Fraction(-5, 3)


def test_curve_config_rejects_low_j():
    with pytest.raises(ValueError):
        CurveConfig((CrepantCurve(2, 5),))


def test_delta_lower_bound():
    cfg = CurveConfig((CrepantCurve(5, 33),), x_A1=33)
    assert delta_lower_bound(cfg) == Fraction(3, 2) * 33 + Fraction(24, 5) * 33
    with pytest.raises(ValueError):
        delta_lower_bound(CurveConfig((), x_A1=None))


def test_builder_drops_and_keeps():
    basket = Basket([(2, 1), (2, 1), (3, 1), (9, 4)])
    cfg = CurveConfig((CrepantCurve(5, 18),), x_A1=None, a1_allowed=True)
    sys = residue_term_builder(70, 980, basket, cfg, r_prime=40, s=1)
    labels = [t.label for t in sys.unknown_terms]
    # A_4 curve drops (5 | 40 * 18 / 18 is false; 40*18/18=40, 5|40), the
    # half points drop (4 | 40), the (9,4) point and x_A1 stay
    assert "x_A1" in labels
    assert any(lab.startswith("point (9") for lab in labels)
    assert not any(lab.startswith("point (2") for lab in labels)
    assert not any(lab.startswith("A_4") for lab in labels)


def test_builder_keep_curve_terms_flag():
    basket = Basket([(2, 1), (2, 1), (3, 1), (9, 4)])
    cfg = CurveConfig((CrepantCurve(5, 18),), x_A1=None, a1_allowed=True)
    kept = residue_term_builder(
        70, 980, basket, cfg, r_prime=40, s=1, drop_curve_terms=False
    )
    assert any(t.label.startswith("A_4") for t in kept.unknown_terms)


def test_builder_cartier_codim2():
    basket = Basket([(2, 1), (3, 1)])
    cfg = CurveConfig((CrepantCurve(3, 6),), x_A1=None, a1_allowed=True)
    sys = residue_term_builder(66, 66, basket, cfg, r_prime=1, s=6, cartier_codim2=True)
    assert all(not t.label.startswith("A_") for t in sys.unknown_terms)
    assert all(t.label != "x_A1" for t in sys.unknown_terms)


def test_builder_even_multiple_drops_a1():
    basket = Basket([(2, 1)])
    cfg = CurveConfig((), x_A1=None, a1_allowed=True)
    sys = residue_term_builder(66, 66, basket, cfg, r_prime=3, s=2)
    assert all(t.label != "x_A1" for t in sys.unknown_terms)
    assert any("A_1" in note for note in sys.notes)
