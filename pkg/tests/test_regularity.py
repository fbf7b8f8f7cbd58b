"""Coset geometry: syndrome BFS, regularity decisions, packing coefficients."""

import random
from fractions import Fraction
from itertools import product
from math import comb

import pytest

from crcodes.budgets import Budgets, BudgetExceeded
from crcodes.codes import LinearCode, external_distance, weight_distribution
from crcodes.constructions import hamming_code
from crcodes.field import GF
from crcodes.matrix import MatrixGF
from crcodes.regularity import (
    IntersectionArray,
    SyndromeTable,
    beta_solve,
    complete_regularity,
    complete_regularity_bruteforce,
    coset_low_weight_counts,
    coset_weight_counts,
    covering_radius,
    decode_vector,
    encode_vector,
    uniformly_packed_wide,
)

NON_CR_PROBE = MatrixGF(GF(2), [[1, 0, 1, 1], [0, 1, 0, 1]])


def _random_code(rng, q, n, redundancy):
    f = GF(q)
    while True:
        H = MatrixGF(
            f, [[rng.randrange(q) for _ in range(n)] for _ in range(redundancy)], n
        )
        code = LinearCode.from_parity(H)
        if 1 <= code.k < code.n:
            return code


def _leader_weight_oracle(code):
    """Minimum weight per syndrome by scanning every ambient vector."""
    f = code.field
    q, n = f.q, code.n
    best = {}
    for vec in product(range(q), repeat=n):
        s = encode_vector(q, code.H.mul_vector(vec))
        w = sum(1 for x in vec if x)
        if s not in best or w < best[s]:
            best[s] = w
    return best


def test_encode_decode_round_trip():
    for q in (2, 3, 4, 9):
        for vec in product(range(q), repeat=3):
            e = encode_vector(q, vec)
            assert decode_vector(q, e, 3) == vec
    # coordinate 0 is the least significant digit
    assert encode_vector(3, (1, 0, 0)) == 1
    assert encode_vector(3, (0, 0, 1)) == 9


@pytest.mark.parametrize("q,n,r", [(2, 5, 3), (3, 4, 2), (4, 4, 2)])
def test_syndrome_table_against_vector_scan(q, n, r):
    rng = random.Random(q * 100 + n)
    code = _random_code(rng, q, n, r)
    st = SyndromeTable(code)
    oracle = _leader_weight_oracle(code)
    assert st.size == q**code.redundancy
    for s in range(st.size):
        assert st.leader_weight[s] == oracle[s]
    assert st.rho == max(oracle.values())
    # shift tables really add beta * e_j
    f = code.field
    for j in range(code.n):
        for beta in range(1, q):
            col = [f.mul(beta, x) for x in code.H.column(j)]
            assert st.shift[j][beta - 1][0] == encode_vector(q, col)
    assert st.column_syndrome == [
        encode_vector(q, code.H.column(j)) for j in range(code.n)
    ]


def test_covering_radius_known_codes():
    assert covering_radius(hamming_code(2, 3)) == 1
    assert covering_radius(hamming_code(3, 2)) == 1
    assert covering_radius(hamming_code(2, 3).extended()) == 2
    for n, expect in ((4, 2), (5, 2), (6, 3)):
        rep = LinearCode.from_generator(MatrixGF(GF(2), [[1] * n]))
        assert covering_radius(rep) == expect


def test_syndrome_budget():
    with pytest.raises(BudgetExceeded) as err:
        SyndromeTable(hamming_code(2, 3), Budgets(max_syndromes=7))
    assert err.value.budget == "max_syndromes"


def test_complete_regularity_hamming():
    rep = complete_regularity(hamming_code(2, 3))
    assert rep.is_completely_regular
    assert rep.rho == 1
    assert str(rep.array) == "(7;1)"
    assert rep.array.a == (0, 6)
    assert rep.witness is None


def test_complete_regularity_extended_hamming():
    rep = complete_regularity(hamming_code(2, 3).extended())
    assert rep.is_completely_regular
    assert str(rep.array) == "(8,7;1,8)"
    assert rep.array.a == (0, 0, 0)


def test_complete_regularity_ternary_hamming():
    rep = complete_regularity(hamming_code(3, 2))
    assert rep.is_completely_regular
    assert str(rep.array) == "(8;1)"
    assert rep.array.a == (0, 7)


def test_non_cr_witness():
    rep = complete_regularity(LinearCode.from_parity(NON_CR_PROBE))
    assert not rep.is_completely_regular
    assert rep.array is None
    w = rep.witness
    assert w.level == 1
    assert w.syndrome_a != w.syndrome_b
    assert {w.profile_a, w.profile_b} == {(2, 0), (1, 0)}


def test_fast_and_bruteforce_reports_agree():
    rng = random.Random(83)
    for _ in range(30):
        q = rng.choice((2, 3, 4))
        code = _random_code(rng, q, rng.randrange(3, 7), rng.randrange(1, 4))
        fast = complete_regularity(code)
        slow = complete_regularity_bruteforce(code)
        assert fast.is_completely_regular == slow.is_completely_regular
        assert fast.rho == slow.rho
        assert fast.array == slow.array
        if fast.witness is not None:
            assert fast.witness.level == slow.witness.level


def test_coset_weight_counts_shape_and_marginals():
    code = hamming_code(2, 3)
    counts = coset_weight_counts(code)
    q, n = 2, 7
    assert counts[0] == weight_distribution(code)
    for w in range(n + 1):
        assert sum(row[w] for row in counts) == comb(n, w) * (q - 1) ** w
    for s, row in enumerate(counts):
        assert sum(row) == q ** code.k
        # the first nonzero distance is the leader weight
        first = next(w for w in range(n + 1) if row[w])
        assert first == SyndromeTable(code).leader_weight[s]


def test_low_weight_counts_truncate_the_full_pass():
    rng = random.Random(97)
    for _ in range(10):
        q = rng.choice((2, 3))
        code = _random_code(rng, q, rng.randrange(3, 6), rng.randrange(1, 3))
        full = coset_weight_counts(code)
        wmax = covering_radius(code)
        low = coset_low_weight_counts(code, wmax)
        assert low == [row[: wmax + 1] for row in full]


def test_coset_count_budgets():
    code = hamming_code(2, 3)
    with pytest.raises(BudgetExceeded):
        coset_weight_counts(code, Budgets(max_vectors=127))
    with pytest.raises(BudgetExceeded):
        coset_low_weight_counts(code, 1, Budgets(max_vectors=7))


def test_beta_solve_known_values():
    assert beta_solve(hamming_code(2, 3)) == [1, 1]
    assert beta_solve(hamming_code(2, 3).extended()) == [
        Fraction(1),
        Fraction(1),
        Fraction(1, 4),
    ]


def test_beta_solve_unsolvable_when_radius_below_external_distance():
    code = LinearCode.from_parity(MatrixGF(GF(2), [[1, 1, 0, 1], [0, 0, 0, 1]]))
    assert covering_radius(code) == 2
    assert external_distance(code) == 3
    assert beta_solve(code) is None
    assert not uniformly_packed_wide(code)


def test_packing_predicate_matches_beta_solvability():
    rng = random.Random(101)
    for _ in range(25):
        q = rng.choice((2, 3))
        code = _random_code(rng, q, rng.randrange(3, 7), rng.randrange(1, 4))
        rho = covering_radius(code)
        s = external_distance(code)
        assert rho <= s
        assert uniformly_packed_wide(code) == (beta_solve(code) is not None)


def test_intersection_array_validation():
    arr = IntersectionArray.from_levels(2, 8, (8, 7), (1, 8))
    assert arr.rho == 2
    assert str(arr) == "(8,7;1,8)"
    with pytest.raises(ValueError):
        IntersectionArray.from_levels(2, 8, (8,), (1, 8))
    with pytest.raises(ValueError):
        IntersectionArray.from_levels(2, 8, (0,), (1,))
    with pytest.raises(ValueError):
        IntersectionArray.from_levels(2, 3, (9,), (1,))
