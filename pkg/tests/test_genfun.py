import pytest

from qpartition.genfun import (
    Form,
    GenFunSpec,
    SeriesFamily,
    apply_staircase,
    compare,
    h_brute,
    h_positive,
    h_product,
    kr_alternating,
    kr_brute,
    kr_positive,
    marginal_max_t,
    product_side,
    product_side_mod12,
    series_for,
)
from qpartition.partitions import KrVariant, check_kr, iter_partitions
from qpartition.seeds import product_A, product_B
from qpartition.series import BiSeries

D = KrVariant.D
DP = KrVariant.DPRIME
DPP = KrVariant.DPRIMEPRIME


@pytest.mark.parametrize("variant", [D, DP, DPP])
def test_three_forms_agree_on_a_small_window(variant):
    brute = kr_brute(variant, 18, 7)
    alt = kr_alternating(variant, 18, 7)
    pos = kr_positive(variant, 18, 7)
    assert compare(brute, alt).equal
    assert compare(brute, pos).equal


def test_alternating_low_coefficients():
    s = kr_alternating(D, 10, 6)
    assert sum(s.coeff(4, m) for m in range(7)) == 2  # 4 and 1+3
    assert s.coeff(0, 0) == 1
    assert s.coeff(1, 1) == 1
    # the alternating sum has nonnegative coefficients after cancellation
    assert s.is_nonnegative()


def test_first_mismatch_between_classes():
    report = compare(kr_alternating(D, 12, 6), kr_alternating(DP, 12, 6))
    assert not report.equal
    n, m, left, right = report.mismatches[0]
    assert (n, m, left, right) == (1, 1, 1, 0)  # the partition "1"


def test_listed_partitions_have_the_right_counts():
    # the eight listed class-1 partitions of 128 with 9 parts, and the four
    # class-2 partitions of 116: checked against the alternating series,
    # which equals the brute count on every window where both are computed
    s1 = kr_alternating(D, 128, 9)
    assert s1.coeff(128, 9) >= 8
    s2 = kr_alternating(DP, 116, 9)
    assert s2.coeff(116, 9) >= 4


def test_staircase_assembles_the_marker_products():
    for max_q, max_t in ((18, 8),):
        assert apply_staircase(product_A(2, max_q, max_t)) == kr_alternating(
            D, max_q, max_t
        )
        assert apply_staircase(product_B(2, max_q, max_t)) == kr_alternating(
            DP, max_q, max_t
        )


def test_class3_is_class2_shifted():
    kr2 = kr_brute(DP, 24, 8)
    kr3 = kr_brute(DPP, 24, 8)
    assert compare(kr2.substitute_scale(2, 1), kr3).equal


def test_h_identities_small():
    brute = h_brute(16, 8)
    assert compare(brute, h_product(16, 8)).equal
    assert compare(brute, h_positive(16, 8)).equal
    assert sum(brute.coeff(3, m) for m in range(9)) == 2
    assert brute.coeff(0, 0) == 1 and all(brute.coeff(n, 0) == 0 for n in range(1, 17))
    assert brute.coeff(1, 1) == 1


def test_h_doubled_is_the_marker_numerator():
    # substituting q -> q^2 in the at-most-twice product gives the
    # prod (1 + t q^{2n} + t^2 q^{4n}) numerator
    h = h_product(20, 6)
    direct = BiSeries.one(20, 6)
    for n in range(1, 11):
        factor = BiSeries.one(20, 6) + BiSeries.monomial(1, 2 * n, 1, 20, 6)
        if 4 * n <= 20:
            factor = factor + BiSeries.monomial(1, 4 * n, 2, 20, 6)
        direct = direct * factor
    assert h.substitute_scale(0, 2) == direct


def test_empty_structure_slice_counts_gap_two_partitions():
    # with no pairs at all, the positive sum collapses to the staircase term
    # q^{n12^2} t^{n12} / (q; q)_{n12}: partitions whose adjacent parts
    # differ by at least 2 (the pair-free at-most-twice partitions)
    max_q, max_t = 14, 6
    slice_sum = BiSeries.zero(max_q, max_t)
    for n12 in range(max_t + 1):
        if n12 * n12 > max_q:
            break
        term = BiSeries.monomial(1, n12 * n12, n12, max_q, max_t)
        for r in range(1, n12 + 1):
            term = term.mul_geometric_inverse(0, r)
        slice_sum = slice_sum + term
    from qpartition.partitions import brute_series

    gap_two = brute_series(
        lambda parts: all(b - a >= 2 for a, b in zip(parts, parts[1:])),
        max_q,
        max_t,
    )
    assert slice_sum == gap_two


@pytest.mark.parametrize("variant", [D, DP, DPP])
def test_products_at_small_truncation(variant):
    max_q = 30
    marg = kr_alternating(variant, max_q, marginal_max_t(max_q)).t_marginal()
    assert compare(marg, product_side(variant, max_q)).equal


def test_product_low_coefficients_from_residues():
    # independent residue oracle: partitions into parts == 1,4,6,8,11 mod 12
    allowed = {a for a in range(1, 25) if a % 12 in (1, 4, 6, 8, 11)}
    s = product_side(D, 24)
    for n in range(25):
        count = sum(
            1
            for parts in iter_partitions(n)
            if all(x in allowed for x in parts)
        )
        assert s.coeff(n, 0) == count
    assert s.coeff(4, 0) == 2


def test_product_two_printings_agree():
    assert compare(product_side(DP, 36), product_side_mod12(DP, 36)).equal


def test_marginal_window_is_exhaustive():
    # t-degrees above isqrt(max_q) cannot contribute below max_q
    max_q = 25
    wide = kr_alternating(D, max_q, 12).t_marginal()
    tight = kr_alternating(D, max_q, marginal_max_t(max_q)).t_marginal()
    assert wide == tight


def test_compare_reports():
    a = BiSeries.one(6, 2)
    assert compare(a, a).equal
    b = a + BiSeries.monomial(3, 2, 1, 6, 2)
    report = compare(a, b)
    assert report.mismatches == ((2, 1, 0, 3),)
    assert "mismatch at q^2 t^1" in report.lines()[0]


def test_series_for_dispatch():
    spec = GenFunSpec(SeriesFamily.KR1, Form.ALTERNATING, 12, 5)
    assert series_for(spec) == kr_alternating(D, 12, 5)
    spec = GenFunSpec(SeriesFamily.H, Form.PRODUCT, 10, 4)
    assert series_for(spec) == h_product(10, 4)
    with pytest.raises(ValueError):
        GenFunSpec(SeriesFamily.KR1, Form.PRODUCT, 12, 5)
    with pytest.raises(ValueError):
        series_for(GenFunSpec(SeriesFamily.H, Form.ALTERNATING, 10, 4))


def test_brute_matches_explicit_membership():
    # spot check: the listed class-1 partitions all pass the predicate
    listed = [
        (3, 5, 8, 11, 13, 19, 21, 23, 25),
        (4, 4, 8, 12, 12, 20, 20, 24, 24),
    ]
    for parts in listed:
        assert check_kr(parts, D)
