import pytest
from hypothesis import given, strategies as st

from compdual.compositions import ZERO, compositions_up_to, flatten, largest_part, size
from compdual.formal import (
    DT,
    ID,
    UT,
    D,
    FormalSum,
    LinearOp,
    U,
    commutator_minus,
    down_filtered,
    down_Q,
    up_L,
    up_R,
)
from compdual.operators import box_remove_set
from conftest import compositions
from reference import ref_d, ref_down_filtered, ref_flat, ref_t, ref_u


def fs(d):
    return FormalSum(d)


def test_formal_sum_basics():
    s = fs({(2, 0, 3): 1, (2, 3): 2, (1,): 0})
    assert s == fs({(2, 3): 3})
    assert len(s) == 1 and s[(2, 3)] == 3 and s[(9,)] == 0
    assert s - s == FormalSum() and not (s - s)
    assert 2 * s == s + s
    assert -s + s == FormalSum()
    assert FormalSum({ZERO: 5}) == FormalSum()
    assert FormalSum.from_json(s.to_json()) == s
    assert s.to_json() == [{"comp": [2, 3], "coeff": 3}]


def test_to_json_is_canonical():
    s = fs({(1, 1): 1, (3,): 1, (): 4, (2,): -1})
    assert [x["comp"] for x in s.to_json()] == [[], [2], [1, 1], [3]]


def test_up_R():
    assert up_R(fs({(2, 1, 3): 1})) == fs({(2, 1, 3, 1): 1, (2, 3, 2): 1, (1, 3, 3): 1, (2, 1, 4): 1})
    assert up_R(fs({(): 1})) == fs({(1,): 1})
    assert up_R(fs({(1,): 2})) == fs({(1, 1): 2, (2,): 2})


def test_down_Q():
    assert down_Q(fs({(2, 1, 3): 1})) == fs({(2, 3): 1, (1, 1, 3): 1, (2, 1, 2): 1})
    assert down_Q(fs({(): 1})) == FormalSum()
    assert down_Q(fs({(1, 2): 1})) == fs({(2,): 1, (1, 1): 1})


def test_up_L():
    assert up_L(fs({(2, 1, 3): 1})) == fs({(1, 2, 1, 3): 1, (2, 2, 3): 1, (3, 1, 3): 1, (2, 1, 4): 1})
    assert up_L(fs({(): 1})) == fs({(1,): 1})
    assert up_L(fs({(1, 2): 1})) == fs({(1, 1, 2): 1, (2, 2): 1, (1, 3): 1})


def test_down_filtered():
    assert down_filtered(fs({(1, 2): 1})) == fs({(2,): 1, (1, 1): 1, (1,): 1})
    assert down_filtered(fs({(): 1})) == FormalSum()
    assert down_filtered(fs({(2, 1): 1})) == fs({(2,): 1, (1, 1): 1, (1,): 1})


def _oracle_sum(alpha, step, top):
    out = {}
    for i in range(1, top + 1):
        r = step(i, list(alpha))
        if r is not None:
            out[ref_flat(r)] = out.get(ref_flat(r), 0) + 1
    return FormalSum(out)


def test_operators_against_reference_on_all_small_compositions():
    for alpha in compositions_up_to(7):
        x = FormalSum.basis(alpha)
        top = largest_part(alpha) + 4
        assert up_R(x) == _oracle_sum(alpha, ref_u, top)
        assert up_L(x) == _oracle_sum(alpha, ref_t, top)
        assert down_Q(x) == _oracle_sum(alpha, ref_d, top)
        assert down_filtered(x) == FormalSum(ref_down_filtered(alpha))


def test_subsets_beyond_largest_part_annihilate():
    for alpha in compositions_up_to(7):
        m = largest_part(alpha)
        for extra in range(m + 1, m + 4):
            for I in ({extra}, {1, extra}, {m, extra}):
                assert box_remove_set(I - {0}, alpha) is ZERO


@pytest.mark.parametrize("A, B, alpha, expected", [
    (D, U, (2, 1, 3), {(2, 1, 3): 1}),
    (DT, U, (1, 2), {(2,): 1, (1, 1): 1, (1,): 1, (1, 2): 1}),
    (D, UT, (2, 1, 3), {(2, 1, 3): 1}),
    (DT, UT, (1, 2), {(2,): 1, (1, 1): 1, (1,): 1, (1, 2): 1}),
])
def test_commutator_examples(A, B, alpha, expected):
    assert commutator_minus(A, B, {alpha: 1}) == fs(expected)


def test_multiplicity_witness():
    x = fs({(2, 1, 3): 1})
    assert D(UT(x))[(2, 1, 3)] == 2
    assert UT(D(x))[(2, 1, 3)] == 1


sums = st.dictionaries(compositions, st.integers(-5, 5), max_size=4).map(FormalSum)


@given(sums, sums, st.integers(-3, 3), st.integers(-3, 3))
def test_linearity(s, t, p, q):
    for op in (U, D, UT, DT):
        assert op(p * s + q * t) == p * op(s) + q * op(t)


@given(sums)
def test_rank_homogeneity_and_integrality(s):
    for k, c in U(s).items():
        assert isinstance(c, int)
    for x, _ in s.items():
        n = size(x)
        b = FormalSum.basis(x)
        assert all(size(y) == n + 1 for y in U(b)) and all(size(y) == n + 1 for y in UT(b))
        assert all(size(y) == n - 1 for y in D(b))
        assert all(size(y) < n for y in DT(b))


def test_linear_op_arithmetic():
    x = fs({(1, 2): 1})
    assert (D * U - U * D)(x) == ID(x)
    assert (DT * U - U * DT)(x) == (DT + ID)(x)
    assert (2 * ID)(x) == 2 * x
    assert (-ID)(x) == -x
    assert isinstance(D * U, LinearOp) and (D * U).name == "DU"
