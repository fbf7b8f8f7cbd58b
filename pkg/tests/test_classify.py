"""Structure recognizers: column forms, the radius-2 normal form,
two-weight generator shape, exhaustive small-parameter confirmation."""

import random

import pytest

from crcodes.budgets import Budgets, BudgetExceeded
from crcodes.classify import (
    NoZeroColumnReachable,
    NotOfForm,
    NotTwoWeight,
    Rho1Form,
    TrivialCode,
    classify_rho1,
    enumerate_rho1,
    rho1_intersection_array,
    two_weight_structure,
    verify_theorem31,
    verify_theorem41,
)
from crcodes.codes import LinearCode, iter_rowspace
from crcodes.constructions import (
    construction_I,
    construction_II,
    difference_matrix_code,
    external_lines_code,
    hamming_code,
    hamming_parity,
    hyperoval,
    latin_square_code,
)
from crcodes.field import GF
from crcodes.matrix import MatrixGF, rank
from crcodes.regularity import complete_regularity


def test_rho1_form_invariants():
    form = Rho1Form(m=2, ell=2, u=1)
    assert form.length(3) == 9
    for bad in ((0, 1, 0), (2, 0, 0), (2, 1, -1)):
        with pytest.raises(ValueError):
            Rho1Form(*bad)


def test_classify_rho1_on_hamming():
    assert classify_rho1(hamming_code(3, 2)) == Rho1Form(m=2, ell=1, u=0)
    assert classify_rho1(hamming_code(2, 3)) == Rho1Form(m=3, ell=1, u=0)


def test_classify_rho1_scaled_and_padded():
    H = construction_I(construction_II(hamming_parity(3, 2), [1, 2]), 2)
    got = classify_rho1(LinearCode.from_parity(H))
    assert got == Rho1Form(m=2, ell=2, u=2)


def test_classify_rho1_rejections():
    f = GF(2)
    # one projective point missing
    partial = MatrixGF(f, [[1, 0, 1, 1], [0, 1, 0, 1]])
    got = classify_rho1(LinearCode.from_parity(partial))
    assert isinstance(got, NotOfForm)
    assert got.reason
    # unequal multiplicities
    uneven = MatrixGF(f, [[1, 1, 0, 1, 1], [0, 0, 1, 1, 1]])
    assert isinstance(classify_rho1(LinearCode.from_parity(uneven)), NotOfForm)
    with pytest.raises(TrivialCode):
        classify_rho1(LinearCode.from_generator(MatrixGF(f, [[1, 1, 1]])))


def test_classify_rho1_is_presentation_invariant():
    # the answer may not depend on which parity check presents the code:
    # scale columns, shuffle them, and change the row basis
    rng = random.Random(7)
    base = construction_I(construction_II(hamming_parity(3, 2), [1, 2]), 1)
    f = base.field
    expect = Rho1Form(m=2, ell=2, u=1)
    for _ in range(20):
        cols = [list(c) for c in base.columns()]
        rng.shuffle(cols)
        scaled = []
        for col in cols:
            s = rng.randrange(1, f.q)
            scaled.append([f.mul(s, x) for x in col])
        M = MatrixGF.from_columns(f, scaled)
        T = _random_invertible(rng, f, M.nrows)
        assert classify_rho1(LinearCode.from_parity(T.mul(M))) == expect


def _random_invertible(rng, f, size):
    while True:
        T = MatrixGF(
            f,
            [[rng.randrange(f.q) for _ in range(size)] for _ in range(size)],
            size,
        )
        if rank(T) == size:
            return T


def test_rho1_intersection_array_matches_measurement():
    for code in (hamming_code(3, 2), hamming_code(2, 3), hamming_code(4, 2)):
        form = classify_rho1(code)
        rep = complete_regularity(code)
        assert rep.array == rho1_intersection_array(code.field.q, form)


def test_verify_theorem31():
    assert verify_theorem31(hamming_code(3, 2))
    assert verify_theorem31(hamming_code(2, 3))
    padded = LinearCode.from_parity(construction_I(hamming_parity(3, 2), 2))
    assert verify_theorem31(padded)
    # not completely regular at radius 1, and not of the form either, so
    # the biconditional holds; the checker reports that coherently
    partial = LinearCode.from_parity(MatrixGF(GF(2), [[1, 0, 1, 1], [0, 1, 0, 1]]))
    assert verify_theorem31(partial)
    with pytest.raises(TrivialCode):
        verify_theorem31(LinearCode.from_generator(MatrixGF(GF(2), [[1, 1, 1]])))


def test_verify_theorem41_extended_hamming():
    rep = verify_theorem41(hamming_code(2, 3).extended())
    assert rep.dual_antipodal
    assert rep.column_scaling == (1,) * 8
    assert rep.M.nrows == 3
    assert rep.equidistant_ok
    assert rep.symbol_frequency_ok
    assert rep.punctured_rho1_form == Rho1Form(m=3, ell=1, u=0)
    assert rep.puncture_column == 0
    assert rep.all_flags


def test_verify_theorem41_difference_matrix():
    rep = verify_theorem41(difference_matrix_code(3, 2))
    assert rep.all_flags
    assert rep.column_scaling == (1,) * 9
    assert rep.punctured_rho1_form == Rho1Form(m=2, ell=2, u=0)
    assert rep.puncture_column == 0
    # the k = 1 member participates as well
    rep = verify_theorem41(difference_matrix_code(3, 1))
    assert rep.all_flags
    assert rep.punctured_rho1_form == Rho1Form(m=1, ell=2, u=0)


def test_verify_theorem41_flags_fall_on_corruption():
    ext = hamming_code(2, 3).extended()
    cols = [list(c) for c in ext.H.columns()]
    cols[0] = [0] * len(cols[0])
    broken = LinearCode.from_parity(MatrixGF.from_columns(ext.field, cols))
    rep = verify_theorem41(broken)
    assert not rep.dual_antipodal
    assert not rep.all_flags


def test_verify_theorem41_trivial_inputs():
    f = GF(2)
    with pytest.raises(TrivialCode):
        verify_theorem41(LinearCode.from_parity(MatrixGF(f, [[1, 1, 1]])))
    with pytest.raises(TrivialCode):
        verify_theorem41(LinearCode.from_parity(MatrixGF.identity(f, 2)))
    assert issubclass(NoZeroColumnReachable, RuntimeError)


def test_two_weight_structure_full_length():
    tw = two_weight_structure(external_lines_code(hyperoval(4)))
    assert (tw.w1, tw.w2) == (6, 4)
    assert tw.w1_is_length
    assert tw.equidistant_ok and tw.symbol_frequency_ok
    G = tw.generator
    assert G.data[0] == (1,) * 6
    assert all(row[-1] == 0 for row in G.data[1:])
    assert tw.M.ncols == 5
    # the normal form still generates the scaled code
    f = G.field
    scaled_words = {
        tuple(f.mul(tw.column_scaling[j], w[j]) for j in range(6))
        for w in iter_rowspace(external_lines_code(hyperoval(4)).G)
    }
    assert set(iter_rowspace(G)) == scaled_words


def test_two_weight_structure_latin_square():
    tw = two_weight_structure(latin_square_code(5, 4))
    assert (tw.w1, tw.w2) == (4, 3)
    assert tw.w1_is_length
    assert tw.equidistant_ok and tw.symbol_frequency_ok


def test_two_weight_structure_short_first_weight():
    G = MatrixGF(GF(2), [[1, 1, 1, 0, 0], [0, 0, 1, 1, 1]])
    tw = two_weight_structure(LinearCode.from_generator(G))
    assert (tw.w1, tw.w2) == (4, 3)
    assert not tw.w1_is_length
    assert tw.column_scaling is None
    assert tw.generator is None and tw.M is None
    assert not tw.equidistant_ok and not tw.symbol_frequency_ok


def test_two_weight_structure_rejects_other_weight_counts():
    with pytest.raises(NotTwoWeight):
        two_weight_structure(hamming_code(2, 3))
    simplex = hamming_code(2, 3).dual()
    with pytest.raises(NotTwoWeight):
        two_weight_structure(simplex)


def test_enumerate_rho1_census(census_2_2_8):
    small = enumerate_rho1(2, 2, 6)
    assert len(small.entries) == 127
    assert len(small.non_cr_witnesses) == 102
    got = [(e.form.ell, e.form.u) for e in small.positives]
    assert got == [(1, 1), (1, 2), (1, 3), (2, 0)]
    for e in small.positives:
        assert e.rho == 1 and e.array is not None
        rebuilt = e.code(2)
        assert (rebuilt.n, rebuilt.k) == (e.n, e.k)
    # the longer run extends, never contradicts, the shorter one
    assert len(census_2_2_8.positives) == 8
    prefixes = [
        (e.form.m, e.form.ell, e.form.u) for e in census_2_2_8.positives
    ]
    assert set(got) <= {(ell, u) for _, ell, u in prefixes}


def test_enumerate_rho1_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_rho1(2, 2, 8, Budgets(max_vectors=100))
