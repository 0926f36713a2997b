"""Polynomial symmetry machinery, the main identity, and the named theorems."""

import random
from fractions import Fraction

import pytest

from sigmaprime.identities import (
    PROOF_POLYNOMIALS,
    THEOREM_BY_RS,
    THEOREM_RS,
    Poly4,
    TheoremId,
    besge_check,
    eval_theorem,
    glaisher_check,
    main_identity_sides,
    parse_theorem_id,
    random_symmetric_poly,
    symmetry_holds,
    theorem_form,
    verify_theorem,
)
from sigmaprime.lattice import brute_convolution, quadruples


def test_parser_round_trip():
    for text in ("1x^2", "1x^2y^2 - 10a b", "3a^7 - 2b^3x + 5y", "-1xy^5 + 1x^3y^3"):
        poly = Poly4.from_text(text)
        assert Poly4.from_text(poly.to_text()) == poly


def test_parser_whitespace_and_implicit_exponent():
    assert Poly4.from_text("2 x y") == Poly4.from_text("2xy")
    assert Poly4.from_text("1a^1b^1") == Poly4.from_text("1ab")


def test_parser_rejects_bad_input():
    # every monomial needs an explicit integer coefficient
    with pytest.raises(ValueError):
        Poly4.from_text("x^2")
    with pytest.raises(ValueError):
        Poly4.from_text("2x +")
    with pytest.raises(ValueError):
        Poly4.from_text("3z^2")
    with pytest.raises(ValueError):
        Poly4.from_text("")


def test_poly_evaluation():
    poly = Poly4.from_text("1x^2y^2 - 2ab")
    assert poly(3, 5, 2, 7) == (2 * 7) ** 2 - 2 * 3 * 5


def test_symmetry_spot_checks():
    assert not symmetry_holds(Poly4.from_text("1a"))
    assert not symmetry_holds(Poly4.from_text("1x"))
    assert symmetry_holds(Poly4.from_text("1xy"))
    assert symmetry_holds(Poly4.from_text("1x^2"))
    assert symmetry_holds(Poly4.from_text("1a^2"))
    # mixed front/back polynomial built as g + swap(g)
    g = Poly4.from_text("1a^2x")
    assert symmetry_holds(g + g.swapped())


def test_all_proof_polynomials_qualify():
    assert len(PROOF_POLYNOMIALS) == 9
    for poly in PROOF_POLYNOMIALS:
        assert symmetry_holds(poly)


def test_main_identity_shape_check_square():
    # f = x^2 collapses to 4 * sum(x y) on the left, and on the right to a
    # polynomial in t of degree two
    f = Poly4.from_text("1x^2")
    for n in range(2, 31):
        lhs, rhs = main_identity_sides(f, n, "Bprime")
        assert lhs == rhs
        assert lhs == 4 * brute_convolution(1, 1, n, "Bprime")
        coprime_t = [t for t in range(1, n + 1) if __import__("math").gcd(t, n) == 1]
        assert rhs == sum(2 * t * t - 2 * n * t + 2 * n * n - 2 for t in coprime_t)


def test_main_identity_shape_check_quartic():
    f = Poly4.from_text("1x^2y^2")
    for n in range(2, 25):
        lhs, rhs = main_identity_sides(f, n, "Bprime")
        assert lhs == rhs
        assert lhs == 8 * brute_convolution(3, 1, n, "Bprime")


def test_main_identity_proof_polynomials_both_sets():
    for poly in PROOF_POLYNOMIALS:
        for n in range(2, 16):
            lhs, rhs = main_identity_sides(poly, n, "Bprime")
            assert lhs == rhs, (poly.to_text(), n)
            lhs, rhs = main_identity_sides(poly, n, "B")
            assert lhs == rhs, (poly.to_text(), n)


def test_main_identity_random_polynomials():
    rng = random.Random(1201)
    for _ in range(25):
        poly = random_symmetric_poly(rng)
        for n in range(2, 11):
            lhs, rhs = main_identity_sides(poly, n, "Bprime")
            assert lhs == rhs, (poly.to_text(), n)
            lhs, rhs = main_identity_sides(poly, n, "B")
            assert lhs == rhs, (poly.to_text(), n)


def test_main_identity_rejects_unqualified_poly():
    with pytest.raises(ValueError):
        main_identity_sides(Poly4.from_text("1a"), 6, "B")
    with pytest.raises(ValueError):
        main_identity_sides(Poly4.from_text("1x^2"), 1, "B")


def test_theorem_id_parsing():
    tid = parse_theorem_id("t13:printed")
    assert tid == TheoremId("t13", "printed")
    assert str(tid) == "t13:printed"
    assert parse_theorem_id("t11") == TheoremId("t11", "corrected")
    assert str(parse_theorem_id("t11")) == "t11"
    with pytest.raises(ValueError):
        parse_theorem_id("t12")
    with pytest.raises(ValueError):
        parse_theorem_id("t13:guessed")
    # only t13 has genuinely distinct variants; elsewhere both names
    # resolve to the same stored form
    assert theorem_form(parse_theorem_id("t11:printed")) == theorem_form(parse_theorem_id("t11"))


def test_theorem_rs_table():
    assert THEOREM_RS["t11"] == (1, 1)
    assert THEOREM_RS["t57"] == (5, 7)
    assert THEOREM_BY_RS[(1, 3)] == "t13"
    assert len(THEOREM_RS) == 9


def test_eval_theorem_spot_values():
    assert eval_theorem(parse_theorem_id("t11"), 3) == 6
    assert eval_theorem(parse_theorem_id("t33"), 3) == 18
    assert eval_theorem(parse_theorem_id("t15"), 3) == 36
    assert eval_theorem(parse_theorem_id("t13"), 2) == 1
    assert eval_theorem(parse_theorem_id("t13:printed"), 2) == 8
    for name in ("t17", "t35", "t111", "t39", "t57"):
        assert eval_theorem(parse_theorem_id(name), 2) == 1


def test_theorem_form_coefficients_are_exact():
    form = theorem_form(parse_theorem_id("t11"))
    coeffs = {(power, order): coeff for coeff, power, order in form.terms}
    assert coeffs[(3, -1)] == Fraction(5, 12)
    assert coeffs[(1, -1)] == Fraction(-1, 2)
    assert coeffs[(1, 1)] == Fraction(1, 12)


def test_verify_theorem_corrected_forms_small_range():
    for name in ("t11", "t13", "t15", "t33"):
        report = verify_theorem(parse_theorem_id(name), 2, 40)
        assert report.all_pass
        assert report.first_counterexample is None
        assert len(report.rows) == 39


def test_verify_theorem_printed_t13_fails_with_factor_eight():
    report = verify_theorem(parse_theorem_id("t13:printed"), 2, 10)
    assert not report.all_pass
    assert report.first_counterexample is not None
    assert report.first_counterexample.n == 2
    for row in report.rows:
        assert not row.ok
        assert row.closed == 8 * row.oracle


def test_verify_theorem_parallel_matches_serial():
    serial = verify_theorem(parse_theorem_id("t15"), 2, 30, jobs=1)
    parallel = verify_theorem(parse_theorem_id("t15"), 2, 30, jobs=2)
    assert serial == parallel


def test_verify_theorem_rejects_bad_range():
    with pytest.raises(ValueError):
        verify_theorem(parse_theorem_id("t11"), 1, 10)
    with pytest.raises(ValueError):
        verify_theorem(parse_theorem_id("t11"), 10, 5)


def test_besge_and_glaisher():
    for n in range(2, 51):
        assert besge_check(n)
        assert glaisher_check(n)
