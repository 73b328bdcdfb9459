import math
import random
from fractions import Fraction
from itertools import permutations

import pytest

from cuspmotive import genus1_fiber as fib
from cuspmotive.combinatorics import (
    Partition,
    class_sign,
    compose_perms,
    cycle_type,
    identity_perm,
    partitions_of,
)
from cuspmotive.motive import L, ONE, MotiveClass


def P(*parts):
    return Partition(parts)


def test_word_grading():
    assert fib.word_degree((1, 2, 3)) == 4
    assert fib.word_weight((1, 2, 3)) == 0
    assert fib.word_weight((1, 1)) == 2


def test_word_mul_slotwise_relations():
    # alpha * beta = point, beta * alpha = -point, squares vanish
    assert fib.word_mul((1,), (2,)) == (1, (3,))
    assert fib.word_mul((2,), (1,)) == (-1, (3,))
    assert fib.word_mul((1,), (1,)) is None
    assert fib.word_mul((3,), (3,)) is None
    assert fib.word_mul((0,), (3,)) == (1, (3,))


def test_word_mul_koszul_cross_slot():
    # odd letter passing an odd letter in an earlier slot picks up a sign
    assert fib.word_mul((1, 0), (0, 2)) == (1, (1, 2))
    assert fib.word_mul((0, 2), (1, 0)) == (-1, (1, 2))


def test_word_mul_graded_commutative():
    rng = random.Random(7)
    words = list(fib.FiberAlgebra(3).words())
    for _ in range(300):
        u = rng.choice(words)
        v = rng.choice(words)
        uv = fib.word_mul(u, v)
        vu = fib.word_mul(v, u)
        sign = (-1) ** (fib.word_degree(u) * fib.word_degree(v))
        if uv is None:
            assert vu is None
        else:
            assert vu is not None
            assert uv[1] == vu[1]
            assert uv[0] == sign * vu[0]


def test_word_mul_associative():
    rng = random.Random(13)
    words = list(fib.FiberAlgebra(3).words())

    def as_combo(res):
        return {} if res is None else {res[1]: res[0]}

    for _ in range(200):
        u, v, w = (rng.choice(words) for _ in range(3))
        uv = fib.word_mul(u, v)
        left = {}
        if uv is not None:
            res = fib.word_mul(uv[1], w)
            if res is not None:
                left = {res[1]: res[0] * uv[0]}
        vw = fib.word_mul(v, w)
        right = {}
        if vw is not None:
            res = fib.word_mul(u, vw[1])
            if res is not None:
                right = {res[1]: res[0] * vw[0]}
        assert left == right


def test_algebra_dimension():
    for n in range(2, 5):
        alg = fib.FiberAlgebra(n)
        assert alg.dimension == 4 ** (n - 1)
        assert len(list(alg.words())) == 4 ** (n - 1)


def test_transposition_action_two_points():
    act = fib.transposition_action(2, 1)
    assert act[(0,)] == {(0,): 1}
    assert act[(1,)] == {(1,): -1}
    assert act[(2,)] == {(2,): -1}
    assert act[(3,)] == {(3,): 1}


def test_transposition_action_three_points_frozen():
    act = fib.transposition_action(3, 1)
    assert act[(1, 2)] == {(3, 0): 1, (1, 2): -1}
    assert act[(0, 1)] == {(0, 1): 1, (1, 0): -1}
    slot_swap = fib.transposition_action(3, 2)
    assert slot_swap[(1, 0)] == {(0, 1): 1}
    assert slot_swap[(1, 2)] == {(2, 1): -1}  # two odd letters cross


def test_action_respects_multiplication():
    # each generator acts by algebra homomorphisms
    rng = random.Random(23)
    for n in (2, 3, 4):
        words = list(fib.FiberAlgebra(n).words())
        for i in range(1, n):
            act = fib.transposition_action(n, i)
            for _ in range(60):
                u, v = rng.choice(words), rng.choice(words)
                prod = fib.word_mul(u, v)
                lhs = {} if prod is None else {
                    w: c * prod[0] for w, c in act[prod[1]].items()
                }
                rhs = fib._combo_mul(act[u], act[v])
                assert lhs == rhs


def test_permutation_action_contravariant():
    n = 4
    rng = random.Random(31)
    for _ in range(40):
        sig = list(identity_perm(n))
        tau = list(identity_perm(n))
        rng.shuffle(sig)
        rng.shuffle(tau)
        sig, tau = tuple(sig), tuple(tau)
        lhs = fib.permutation_action(n, compose_perms(sig, tau))
        m_s = fib.permutation_action(n, sig)
        m_t = fib.permutation_action(n, tau)
        rhs = {w: fib._apply_map(m_t, combo) for w, combo in m_s.items()}
        assert lhs == rhs


def test_graded_traces_identity_gives_dimensions():
    for n in (2, 3, 4):
        traces = fib.graded_traces(n, P(*([1] * n)))
        total = sum(traces.values())
        assert total == 4 ** (n - 1)
        for (m, w), tr in traces.items():
            count = sum(
                1
                for word in fib.FiberAlgebra(n).words()
                if fib.word_degree(word) == m and fib.word_weight(word) == w
            )
            assert tr == count


def test_alternating_component_small():
    for n in range(2, 6):
        dims = fib.alternating_component(n)
        assert dims == {(n - 1, w): 1 for w in range(-(n - 1), n, 2)}


def _projector_rank(n, m, w):
    """Rank of the sign projector on the (degree, weight) block, by
    exact Gaussian elimination over the rationals."""
    words = [
        word
        for word in fib.FiberAlgebra(n).words()
        if fib.word_degree(word) == m and fib.word_weight(word) == w
    ]
    index = {word: i for i, word in enumerate(words)}
    size = len(words)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for perm in permutations(range(1, n + 1)):
        act = fib.permutation_action(n, perm)
        sign = class_sign(cycle_type(perm))
        for word in words:
            for image, c in act[word].items():
                if image in index:
                    matrix[index[image]][index[word]] += Fraction(
                        sign * c, math.factorial(n)
                    )
    rank = 0
    for col in range(size):
        pivot = next(
            (r for r in range(rank, size) if matrix[r][col] != 0), None
        )
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inv = 1 / matrix[rank][col]
        matrix[rank] = [x * inv for x in matrix[rank]]
        for r in range(size):
            if r != rank and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [
                    a - factor * b for a, b in zip(matrix[r], matrix[rank])
                ]
        rank += 1
    return rank


def test_alternating_component_matches_projector_rank():
    for n in (2, 3, 4):
        dims = fib.alternating_component(n)
        blocks = set()
        for word in fib.FiberAlgebra(n).words():
            blocks.add((fib.word_degree(word), fib.word_weight(word)))
        for (m, w) in sorted(blocks):
            assert _projector_rank(n, m, w) == dims.get((m, w), 0)


def test_ec_open_stratum_two_points_frozen():
    ec = fib.ec_open_stratum(2)
    assert ec.bins == {
        (1, 1): {P(1, 1): -1, P(2): 1},
        (1, -1): {P(1, 1): -1, P(2): 1},
        (2, 0): {P(1, 1): 1, P(2): 1},
    }


def test_ec_open_stratum_traces():
    ec3 = fib.ec_open_stratum(3)
    # full e_c traces: sum over all (degree, weight) bins
    def full_trace(ec, ct):
        return sum(table.get(ct, 0) for table in ec.bins.values())

    assert full_trace(ec3, P(3)) == 8
    assert full_trace(ec3, P(2, 1)) == 0
    for n in range(1, 6):
        ec = fib.ec_open_stratum(n)
        assert ec.identity_trace() == (-1) ** (n - 1) * math.factorial(n - 1)
        assert ec.is_weight_symmetric()


def test_ec_open_stratum_alternating_parts():
    for n in range(1, 6):
        ec = fib.ec_open_stratum(n)
        assert ec.alternating_parts() == {(n - 1, 0): (-1) ** (n - 1)}


def test_sym_multiplicities_two_points():
    ec = fib.ec_open_stratum(2)
    mults = ec.sym_multiplicities()
    assert mults == {
        (0, 1): {P(1, 1): 1, P(2): 1},
        (1, 0): {P(1, 1): -1, P(2): 1},
    }


def test_local_system_euler():
    assert fib.local_system_euler(0) == L
    assert fib.local_system_euler(1).is_zero()
    assert fib.local_system_euler(3).is_zero()
    assert fib.local_system_euler(2) == -MotiveClass.cusp(4) - ONE
    assert fib.local_system_euler(10) == -MotiveClass.cusp(12) - ONE


def test_interior_alternating_table():
    assert fib.interior_alternating(1) == L
    assert fib.interior_alternating(2).is_zero()
    assert fib.interior_alternating(3) == -MotiveClass.cusp(4) - ONE
    assert fib.interior_alternating(4).is_zero()
    assert fib.interior_alternating(11) == -MotiveClass.cusp(12) - ONE


def test_interior_series_agree_where_both_defined():
    n_max = 4
    small = fib.interior_small_series(6, n_max)
    exact = fib.interior_exact_series(6)
    assert small.alt() == exact.truncate(n_max).zero_extended(6).alt()


def test_range_guards():
    with pytest.raises(ValueError):
        fib.alternating_component(fib.MAX_FIBER_POINTS + 1)
    with pytest.raises(ValueError):
        fib.ec_open_stratum(fib.MAX_STRATUM_POINTS + 1)
    with pytest.raises(ValueError):
        fib.ec_open_stratum(0)
