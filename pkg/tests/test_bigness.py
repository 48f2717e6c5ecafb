"""Per-index inequalities, certificates, and the (g, k) scan."""

from __future__ import annotations

from fractions import Fraction

import pytest

from hurwitzdiv import (
    BoundaryIndex,
    HypothesisError,
    InputError,
    Partition,
    best_recipe,
    boundary_index_set,
    coarse_inequality_lhs,
    coarse_range_ok,
    scan,
    second_hilbert_divisor,
    sigma_delta_lower_bound,
    stack_inequality_lhs,
    syzygy_divisor_g7,
    user_divisor,
    verify_coarse,
    verify_stack,
)

F = Fraction
P = Partition


def _index(i, parts):
    return BoundaryIndex(i, P(parts))


def test_sigma_delta_lower_bounds():
    assert sigma_delta_lower_bound(_index(2, (1, 1, 1))).bound == 2
    assert sigma_delta_lower_bound(_index(2, (1, 1, 1))).justification == "TwoNodes"
    assert sigma_delta_lower_bound(_index(3, (2, 1, 1))).bound == 1
    assert sigma_delta_lower_bound(_index(3, (2, 1, 1))).justification == "OneNode"
    branch = sigma_delta_lower_bound(_index(3, (2, 1, 1)), branch_component=True)
    assert branch.bound == 2
    assert branch.justification == "BranchComponentTwoNodes"
    assert sigma_delta_lower_bound(_index(2, (2, 2, 1))).bound == 0
    assert sigma_delta_lower_bound(_index(2, (2, 2, 1))).justification == "None"
    # the unramified bound does not depend on the branch context
    assert sigma_delta_lower_bound(_index(2, (1, 1, 1)), branch_component=True).bound == 2


def test_stack_lhs_unramified_at_slope_eight_vanishes():
    for g, k in ((2, 3), (4, 4)):
        for index in boundary_index_set(g, k):
            if index.mu.parts == (1,) * k:
                assert stack_inequality_lhs(g, k, F(8), index) == 0


def test_stack_lhs_frozen_example():
    # g=8, k=3 (b=20), s=31/4, index (3, (2,1)); hand substitution gives 2/19
    assert stack_inequality_lhs(8, 3, F(31, 4), _index(3, (2, 1))) == F(2, 19)


def test_stack_lhs_single_two_cycle_closed_form():
    # for mu = (2, 1^{k-2}) the margin factors as (8-s)(i(b-i)-(b-1))/(4(b-1))
    for g, k, s in ((8, 3, F(31, 4)), (7, 4, F(54, 7)), (15, 3, F(62621, 7830))):
        b = 2 * g + 2 * k - 2
        mu = (2,) + (1,) * (k - 2)
        for i in (3, 5):
            expected = (8 - s) * F(i * (b - i) - (b - 1), 4 * (b - 1))
            assert stack_inequality_lhs(g, k, s, _index(i, mu)) == expected


def test_stack_lhs_positive_for_big_cycles_at_moderate_slope():
    # every index with a part >= 3 has a positive margin already at s = 45/8
    s = F(45, 8)
    for g, k in ((2, 3), (3, 4), (2, 5), (4, 6)):
        for index in boundary_index_set(g, k):
            if max(index.mu.parts) >= 3:
                assert stack_inequality_lhs(g, k, s, index) > 0


def test_stack_margins_nonnegative_at_decisive_slopes():
    # exhaustive over the grid: every margin at the three slopes that matter
    slopes = (F(31, 4), F(54, 7), F(62621, 7830))
    for g in range(2, 21):
        for k in range(3, 7):
            for index in boundary_index_set(g, k):
                for s in slopes:
                    assert stack_inequality_lhs(g, k, s, index) >= 0


def test_stack_lhs_slope_bounds():
    with pytest.raises(InputError):
        stack_inequality_lhs(2, 3, F(0), _index(2, (3,)))
    with pytest.raises(InputError):
        stack_inequality_lhs(2, 3, F(9), _index(2, (3,)))


def test_stack_lhs_monotone_in_slope_for_unramified_indices():
    slopes = [F(6), F(13, 2), F(7), F(15, 2), F(31, 4)]
    for g, k in ((2, 3), (3, 4)):
        for index in boundary_index_set(g, k):
            if index.mu.parts == (1,) * k:
                values = [stack_inequality_lhs(g, k, s, index) for s in slopes]
                assert all(a >= b for a, b in zip(values, values[1:]))


def test_coarse_lhs_frozen_examples():
    k = 6
    assert coarse_inequality_lhs(4, k, _index(3, (2, 1, 1, 1, 1))) == 0
    assert coarse_inequality_lhs(4, k, _index(2, (2, 2, 1, 1))) == 0
    assert coarse_inequality_lhs(4, k, _index(3, (2, 2, 2))) == 2
    assert coarse_inequality_lhs(4, k, _index(2, (1,) * 6)) == 0
    assert coarse_inequality_lhs(2, 5, _index(3, (3, 2))) == F(26, 3)


def test_verify_stack_certifies_the_three_headline_cells():
    for g, k in ((8, 3), (15, 3), (7, 4)):
        cert = verify_stack(g, k, best_recipe(g, k))
        assert cert.verdict == "Certified"
        assert cert.alpha > 0
        assert all(entry.margin > 0 for entry in cert.per_index)


def test_verify_stack_alpha_frozen_values():
    # alpha is minimised on the single-2-cycle indices, where it equals (8-s)/8
    cert = verify_stack(8, 3, best_recipe(8, 3))
    assert cert.alpha == F(1, 32)
    cert74 = verify_stack(7, 4, best_recipe(7, 4))
    assert cert74.alpha == F(1, 28)
    cert15 = verify_stack(15, 3, best_recipe(15, 3))
    assert cert15.alpha == (8 - F(62621, 7830)) / 8 == F(19, 62640)


def test_verify_stack_hypothesis_errors():
    with pytest.raises(HypothesisError):
        verify_stack(6, 3, second_hilbert_divisor(6))  # slope exactly 8
    with pytest.raises(HypothesisError):
        verify_stack(7, 3, syzygy_divisor_g7())  # 4-gonal avoidance does not cover k=3
    with pytest.raises(InputError):
        verify_stack(9, 3, second_hilbert_divisor(8))  # genus mismatch


def test_verify_stack_user_supplied():
    cert = verify_stack(6, 4, user_divisor(6, F(54, 7), 4))
    assert cert.verdict == "Certified"
    assert cert.slope_used == F(54, 7)


def test_verify_stack_certifies_any_slope_below_eight():
    # the content of the verification: the per-index inequality holds for
    # every slope below 8, so a valid user divisor always certifies
    for s in (F(1, 2), F(3), F(6), F(22, 3), F(799, 100)):
        cert = verify_stack(6, 4, user_divisor(6, s, 4))
        assert cert.verdict == "Certified"
        assert cert.alpha > 0


def test_certificate_entries_are_sorted():
    for cert in (
        verify_stack(8, 3, best_recipe(8, 3)),
        verify_coarse(8, 3, best_recipe(8, 3)),
    ):
        keys = [(e.index.i, tuple(-p for p in e.index.mu.parts)) for e in cert.per_index]
        assert keys == sorted(keys)
        assert [e.index.key for e in cert.per_index] == [
            x.key for x in boundary_index_set(cert.g, cert.k)
        ]


def test_coarse_range():
    assert coarse_range_ok(8, 3)
    assert coarse_range_ok(16, 9)
    assert not coarse_range_ok(8, 6)
    assert not coarse_range_ok(7, 5)


def test_verify_coarse_certifies_with_expected_zero_margins():
    cert = verify_coarse(8, 3, best_recipe(8, 3))
    assert cert.verdict == "Certified"
    zero = {entry.index.mu.parts for entry in cert.per_index if entry.margin == 0}
    assert zero == {(2, 1), (1, 1, 1)}
    for entry in cert.per_index:
        assert entry.margin >= 0
        if entry.margin == 0:
            assert entry.note == "absorbed by ample term"
        else:
            assert entry.note == ""
        assert entry.sharp == (1 if 2 in entry.index.mu.parts else 0)


def test_verify_coarse_boundary_of_range():
    cert = verify_coarse(16, 9, best_recipe(16, 9))
    assert cert.verdict == "Certified"
    with pytest.raises(HypothesisError):
        verify_coarse(8, 6, best_recipe(8, 6))


def test_verify_coarse_records_finiteness_hypothesis():
    cert = verify_coarse(8, 3, best_recipe(8, 3))
    assert any("generically finite" in h for h in cert.hypotheses)


def test_scan_k3_matches_expected_certified_set():
    table = scan(3, 3, 6, 20)
    certified = {row.g for row in table.rows if row.stack_verdict == "Certified"}
    assert certified == {8, 10, 12, 14, 15, 16, 17, 18, 19, 20}
    for row in table.rows:
        assert row.coarse_verdict == row.stack_verdict  # k=3 is always in coarse range
    none_rows = [row for row in table.rows if row.recipe == "none"]
    assert {row.g for row in none_rows} == {6, 7, 9, 11, 13}
    assert all(row.slope is None and row.min_margin is None for row in none_rows)


def test_scan_covers_syzygy_cell():
    table = scan(4, 4, 7, 7)
    (row,) = table.rows
    assert row.recipe == "SyzygyG7"
    assert row.stack_verdict == "Certified"
    assert row.coarse_verdict == "Certified"


def test_scan_marks_out_of_range_coarse_cells():
    table = scan(6, 6, 8, 8)
    (row,) = table.rows
    assert row.recipe == "Hilbert2Even"
    assert row.stack_verdict == "Certified"
    assert row.coarse_verdict == "n/a"


def test_scan_empty_range():
    assert scan(4, 3, 6, 20).rows == ()
    assert scan(3, 3, 10, 6).rows == ()


def test_scan_deterministic_and_parallel_consistent():
    sequential = scan(3, 4, 6, 12, jobs=1)
    parallel = scan(3, 4, 6, 12, jobs=4)
    assert sequential == parallel


def test_scan_range_limits():
    with pytest.raises(InputError):
        scan(3, 11, 6, 8)
    with pytest.raises(InputError):
        scan(3, 4, 6, 61)
    with pytest.raises(InputError):
        scan(2, 4, 6, 8)
