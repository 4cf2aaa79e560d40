import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slncrystals.partitions import (
    BeadRow,
    Partition,
    add_ribbon,
    bead_row_to_partition,
    combine_quotient,
    ell_core,
    ell_quotient,
    partition_to_bead_row,
    partitions_of,
    partitions_up_to,
    remove_ribbon,
)

from helpers import (
    FIG1,
    FIG1_SLOTS,
    FIG2,
    occupied_slots_oracle,
    ribbons_by_skew_shapes,
    strip_cores,
)

P = Partition


def test_partition_validation():
    with pytest.raises(ValueError):
        P((1, 2))
    with pytest.raises(ValueError):
        P((2, 0))
    assert P(()).size == 0
    assert P((3, 1)).conjugate() == P((2, 1, 1))


def test_figure1_bead_positions():
    row = partition_to_bead_row(FIG1, 0)
    got = [b for b in range(-13, 12) if row.occupied(b)]
    assert got == FIG1_SLOTS
    # everything below the listed window is occupied, everything above empty
    assert row.occupied(-14) and row.occupied(-50)
    assert not row.occupied(12) and not row.occupied(100)


def test_empty_partition_rows():
    row = partition_to_bead_row(P(()), 0)
    assert all(row.occupied(b) for b in range(-10, 0))
    assert not any(row.occupied(b) for b in range(0, 10))
    shifted = partition_to_bead_row(P(()), 3)
    assert shifted.occupied(2) and not shifted.occupied(3)


def test_bead_row_to_partition_is_inverse():
    for lam in partitions_up_to(12):
        for c in range(-3, 4):
            row = partition_to_bead_row(lam, c)
            assert bead_row_to_partition(row) == (c, lam)


def test_from_occupied_against_oracle():
    for lam in partitions_up_to(6):
        for c in (-2, 0, 1):
            lo = -len(lam) - 5 + c
            slots = occupied_slots_oracle(lam, c, lo, 20)
            row = BeadRow.from_occupied(slots, lo)
            assert (row.charge, row.partition) == (c, lam)


def test_slot_sets_of_partitions_of_three():
    # independent bijection table: slot sets of all charge-0 partitions of 3
    table = {}
    for lam in partitions_of(3):
        slots = tuple(occupied_slots_oracle(lam, 0, -5, 10))
        table[slots] = lam
    assert len(table) == 3
    # (2,1) is the one with slot 0 empty and slot 1 full
    row = BeadRow.from_occupied([-5, -4, -3, -1, 1], -5)
    assert bead_row_to_partition(row) == (0, P((2, 1)))
    assert table[tuple(occupied_slots_oracle(P((2, 1)), 0, -5, 10))] == P((2, 1))


@settings(max_examples=150)
@given(
    st.lists(st.integers(min_value=1, max_value=30), max_size=8),
    st.integers(min_value=-4, max_value=4),
)
def test_roundtrip_property(parts, charge):
    lam = P(sorted(parts, reverse=True))
    row = partition_to_bead_row(lam, charge)
    assert bead_row_to_partition(row) == (charge, lam)
    lo, hi = row.bracket_window()
    slots = [s for s in range(lo, hi + 1) if row.occupied(s)]
    assert BeadRow.from_occupied(slots, lo) == row


def test_figure2_ribbon():
    got = add_ribbon(FIG1, 4, 3)
    assert got == FIG2
    # the moved bead: slot -1 emptied, slot 3 filled
    row = partition_to_bead_row(got, 0)
    assert not row.occupied(-1) and row.occupied(3)
    assert remove_ribbon(FIG2, 4, 3) == FIG1


def test_single_box():
    assert add_ribbon(P(()), 1, 0) == P((1,))
    assert remove_ribbon(P((1,)), 1, 0) == P(())


def test_add_ribbon_errors():
    with pytest.raises(ValueError):
        add_ribbon(P(()), 4, 10)  # source slot empty
    with pytest.raises(ValueError):
        add_ribbon(P(()), 4, -1)  # target slot occupied


@pytest.mark.parametrize("length", [1, 2, 3, 4])
def test_add_ribbon_matches_skew_oracle(length):
    for lam in partitions_up_to(8):
        expected = ribbons_by_skew_shapes(lam, length)
        lo = -len(lam) - length - 1
        hi = lam.part(1) + length + 1
        for col in range(lo, hi + 1):
            if col in expected:
                mu = add_ribbon(lam, length, col)
                assert mu == expected[col]
                assert mu.size == lam.size + length
                assert remove_ribbon(mu, length, col) == lam
            else:
                with pytest.raises(ValueError):
                    add_ribbon(lam, length, col)


def test_quotient_one_strand():
    for lam in partitions_up_to(6):
        (q,) = ell_quotient(lam, 1)
        assert q.charge == 0 and q.partition == lam


def test_figure1_quotient():
    q = ell_quotient(FIG1, 4)
    assert [(c.charge, c.partition.parts) for c in q] == [
        (-1, (1,)),
        (0, (3, 3)),
        (-1, (2, 1)),
        (2, (1, 1)),
    ]
    assert combine_quotient([BeadRow(c.charge, c.partition) for c in q], 4) == FIG1


def test_figure1_core():
    assert ell_core(FIG1, 4) == P((8, 5, 2, 1))


@pytest.mark.parametrize("length", [1, 2, 3, 4])
def test_core_and_quotient_sizes(length):
    for lam in partitions_up_to(8):
        q = ell_quotient(lam, length)
        core = ell_core(lam, length)
        assert lam.size == length * sum(c.partition.size for c in q) + core.size
        cores = strip_cores(lam, length)
        assert cores == {core}, "core must not depend on removal order"


def test_core_small_example():
    assert ell_core(P((2, 1, 1)), 2) == P(())


def test_core_invariant_under_add_ribbon():
    for lam in partitions_up_to(6):
        for length in (2, 3):
            for col, mu in ribbons_by_skew_shapes(lam, length).items():
                assert ell_core(mu, length) == ell_core(lam, length)


@pytest.mark.parametrize("length", [1, 2, 3])
def test_ribbon_move_enumeration_matches_oracle(length):
    from slncrystals.partitions import addable_ribbons, removable_ribbons

    for lam in partitions_up_to(7):
        moves = addable_ribbons(lam, length)
        expected = ribbons_by_skew_shapes(lam, length)
        assert sorted(m.rightmost_col for m in moves) == sorted(expected)
        for m in moves:
            assert add_ribbon(lam, length, m.rightmost_col) == expected[m.rightmost_col]
        back = removable_ribbons(
            add_ribbon(lam, length, moves[0].rightmost_col), length
        )
        assert moves[0].rightmost_col in {m.rightmost_col for m in back}


def test_normalized_quotient():
    from slncrystals.partitions import normalized_quotient

    assert normalized_quotient(FIG1, 4) == (
        P((1,)),
        P((3, 3)),
        P((2, 1)),
        P((1, 1)),
    )


def test_partitions_of_counts():
    counts = [sum(1 for _ in partitions_of(m)) for m in range(10)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_json_roundtrip():
    lam = P((3, 1, 1))
    assert P.from_json(lam.to_json()) == lam
    row = BeadRow(2, lam)
    assert BeadRow.from_json(row.to_json()) == row
