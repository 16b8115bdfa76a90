from __future__ import annotations

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from spaceform_psc.gf2 import Echelon, GF2Matrix, in_span, rank


def brute_span(rows: list[int]) -> set[int]:
    span = {0}
    for r in rows:
        span |= {s ^ r for s in span}
    return span


def brute_kernel(rows: list[int], cols: int) -> set[int]:
    return {v for v in range(1 << cols) if all((r & v).bit_count() % 2 == 0 for r in rows)}


matrices = st.integers(1, 7).flatmap(
    lambda cols: st.tuples(st.just(cols), st.lists(st.integers(0, (1 << cols) - 1), max_size=8))
)


@given(matrices)
@settings(max_examples=200, deadline=None)
def test_rank_matches_span_size(data):
    cols, rows = data
    assert 2 ** rank(rows, cols) == len(brute_span(rows))


@given(matrices)
@settings(max_examples=200, deadline=None)
def test_kernel_basis_spans_exact_kernel(data):
    cols, rows = data
    kernel = GF2Matrix(cols, rows).kernel_basis()
    assert brute_span(kernel) == brute_kernel(rows, cols)
    assert len(kernel) == cols - rank(rows, cols)


@given(matrices, st.integers(0, 127))
@settings(max_examples=200, deadline=None)
def test_reduce_gives_least_coset_element(data, v):
    cols, rows = data
    v &= (1 << cols) - 1
    ech = GF2Matrix(cols, rows).echelon()
    span = brute_span(rows)
    assert ech.reduce(v) == min(v ^ s for s in span)
    assert ech.contains(v) == (v in span) == in_span(v, rows, cols)


def test_dense_round_trip_and_mul_vec():
    M = GF2Matrix.from_dense([[1, 0, 1], [0, 1, 1]])
    assert M.to_dense() == [[1, 0, 1], [0, 1, 1]]
    assert M.rank() == 2
    # v = (1, 1, 1): row sums 0 and 0
    assert M.mul_vec(0b111) == 0
    assert M.mul_vec(0b001) == 0b01


def test_reduced_form_has_isolated_pivots():
    ech = Echelon(6)
    for r in (0b111000, 0b011100, 0b001110, 0b000111, 0b101010):
        ech.insert(r)
    red = ech.reduced()
    for p, row in red.pivots.items():
        assert row.bit_length() - 1 == p
        for q in red.pivots:
            if q != p:
                assert not (row >> q) & 1
    assert brute_span(red.basis()) == brute_span(ech.basis())


def test_insert_reports_rank_growth():
    ech = Echelon(4)
    assert ech.insert(0b1010)
    assert ech.insert(0b0110)
    assert not ech.insert(0b1100)
    assert not ech.insert(0)
    assert ech.rank == 2
    assert list(itertools.islice(ech.basis(), 2)) == [0b1010, 0b0110]
