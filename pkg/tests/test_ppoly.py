import pytest

from qpartition.appendix_data import TABLE_ERRATA, parse_qpoly
from qpartition.ppoly import (
    P00X,
    P0X0,
    P0XX,
    PX00,
    PX0X,
    closed_form,
    exponent_discrepancy_report,
    p,
    p_oracle,
    p_parity,
    qbinomial,
    support_window,
)
from qpartition.series import QPoly


def test_initial_values():
    assert p_parity(0, 0, 0, 1, 0) == QPoly((1,))
    assert p_parity(0, 0, 0, 1, 1) == QPoly()
    assert p(0, 0, 0, 5) == QPoly()
    assert p(1, 0, 0, 0) == QPoly()
    assert p(-1, 0, 0, 1) == QPoly()


def test_small_tabulated_values():
    assert p_parity(0, 0, 1, 5, 0).format_q() == "q^13"
    assert p(1, 1, 0, 3).format_q() == "q^7"
    assert p(2, 2, 0, 6).format_q() == "q^30 + 2q^28 + 2q^26 + 2q^24"
    assert p(0, 0, 2, 9).format_q() == "q^46"
    top = p(2, 2, 2, 15)
    assert (top[154], top[153], top[152], top[151], top[150]) == (1, 0, 2, 1, 5)


def test_qbinomial_examples():
    assert qbinomial(2, 1, 2).format_q() == "q^2 + 1"
    assert qbinomial(7, 0, 3) == QPoly((1,))
    # independent product route: (1-q^4)(1-q^3)/((1-q)(1-q^2))
    assert qbinomial(4, 2, 1).coeffs == (1, 1, 2, 1, 1)
    assert qbinomial(-1, 0, 2) == QPoly()
    assert qbinomial(3, 5, 1) == QPoly()


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("k", range(0, 8))
@pytest.mark.parametrize("base", (1, 2, 3))
def test_qbinomial_pascal_relation(n, k, base):
    lhs = qbinomial(n, k, base)
    rhs = qbinomial(n - 1, k, base).shifted(k * base) + qbinomial(n - 1, k - 1, base)
    assert lhs == rhs
    if 0 <= k <= n and lhs:
        assert lhs.degree == k * (n - k) * base


def test_qbinomial_symmetry():
    for n in range(8):
        for k in range(n + 1):
            assert qbinomial(n, k, 2) == qbinomial(n, n - k, 2)


def test_p_oracle_examples():
    assert p_oracle(0, 0, 1, 5, 0).format_q() == "q^13"
    assert p_oracle(1, 0, 0, 2, 0).format_q() == "q^2"
    assert p_oracle(0, 1, 0, 2, 1).format_q() == "q^3"
    assert p_oracle(0, 0, 0, 1, 0) == QPoly((1,))
    assert p_oracle(0, 0, 0, 1, 1) == QPoly()


def test_recursion_matches_oracle_small():
    for m1 in range(3):
        for m2 in range(3):
            for m3 in range(2):
                for s in range(1, 10):
                    for parity in (0, 1):
                        assert p_parity(m1, m2, m3, s, parity) == p_oracle(
                            m1, m2, m3, s, parity
                        ), (m1, m2, m3, s, parity)


def test_support_window_against_recursion():
    for m1 in range(4):
        for m2 in range(4):
            for m3 in range(2):
                lo, hi = support_window(m1, m2, m3)
                for s in range(1, hi + 4):
                    inside = lo <= s <= hi
                    if not inside:
                        assert not p(m1, m2, m3, s), (m1, m2, m3, s)


def test_all_coefficients_nonnegative():
    for m1 in range(4):
        for m2 in range(4):
            for m3 in range(3):
                _, hi = support_window(m1, m2, m3)
                for s in range(1, hi + 1):
                    assert p(m1, m2, m3, s).is_nonnegative()


def test_closed_form_examples():
    # m1 = m: a single tight stack of repeating pairs
    for m in range(6):
        assert closed_form(PX00, m1=m, s=m + 1) == QPoly.monomial(1, m * m + m)
    assert closed_form(P00X, m3=2, s=9).format_q() == "q^46"
    assert closed_form(P00X, m3=2, s=8) == QPoly()  # out of shape: zero
    assert closed_form(PX0X, m1=1, m3=1, s=6).format_q() == "q^23 + q^20"
    with pytest.raises(ValueError):
        closed_form(PX0X, m1=1, m3=1, s=7)
    with pytest.raises(ValueError):
        closed_form("nonsense", m1=1, s=1)


def test_closed_forms_match_recursion():
    for m1 in range(5):
        for s in range(1, 2 * m1 + 3):
            assert closed_form(PX00, m1=m1, s=s) == p(m1, 0, 0, s)
    for m2 in range(5):
        for s in range(1, 2 * m2 + 3):
            assert closed_form(P0X0, m2=m2, s=s) == p(0, m2, 0, s)
    for m3 in range(3):
        for s in range(1, 4 * m3 + 3):
            assert closed_form(P00X, m3=m3, s=s) == p(0, 0, m3, s)
    for m1 in range(4):
        for m3 in range(3):
            s = m1 + 4 * m3 + 1
            assert closed_form(PX0X, m1=m1, m3=m3, s=s) == p(m1, 0, m3, s)
    for m2 in range(4):
        for m3 in range(3):
            s = m2 + 4 * m3 + 1
            assert closed_form(P0XX, m2=m2, m3=m3, s=s) == p(0, m2, m3, s)


def test_exponent_discrepancy_report():
    report = exponent_discrepancy_report()
    assert report["corrected"] == "10*m3^2 + 3*m3"
    for witness in report["witnesses"]:
        assert witness["corrected_matches"]
        assert not witness["printed_matches"]


def test_parse_qpoly():
    assert parse_qpoly("q^7") == QPoly.monomial(1, 7)
    assert parse_qpoly("q^11 + q^9").terms() == [(9, 1), (11, 1)]
    assert parse_qpoly("0") == QPoly()
    assert parse_qpoly("2q + 1").coeffs == (1, 2)
    with pytest.raises(ValueError):
        parse_qpoly("qq^2")


def test_table_errata_are_independently_confirmed():
    # the stored corrections must agree with the enumeration oracle, which
    # never touches the recursion
    for erratum in TABLE_ERRATA:
        m1, m2, m3, s = erratum["key"]
        assert p(m1, m2, m3, s) == p_oracle(m1, m2, m3, s, 0) + p_oracle(
            m1, m2, m3, s, 1
        )
