import pytest
from hypothesis import given, strategies as st

from compdual.compositions import ZERO, flatten, largest_part, size
from compdual.operators import (
    Atom,
    a,
    append,
    box_add,
    box_remove,
    box_remove_set,
    d,
    d_word,
    eval_word,
    jdt_add,
    jdt_add_set,
    t,
    u,
    u_word,
    word_from_json,
    word_to_json,
)
from conftest import weak_compositions
from reference import REF, as_tuple, ref_word

ALPHA = (2, 1, 3)
BETA = (3, 1, 4, 2, 1)


@pytest.mark.parametrize("i, w, expected", [
    (1, ALPHA, (2, 0, 3)),
    (2, ALPHA, (1, 1, 3)),
    (3, ALPHA, (2, 1, 2)),
    (4, ALPHA, ZERO),
    (1, (), ZERO),
])
def test_box_remove(i, w, expected):
    assert box_remove(i, w) == expected


@pytest.mark.parametrize("I, w, expected", [
    ({1, 2, 3}, BETA, (2, 1, 4, 1, 0)),
    ({2, 4}, (4, 1, 4, 2, 1), (4, 1, 3, 1, 1)),
    (set(), ALPHA, ALPHA),
])
def test_box_remove_set(I, w, expected):
    assert box_remove_set(I, w) == expected


def test_box_remove_set_order_is_largest_first():
    # on (1, 2): d_1 d_2 gives (1, 0); the other order would give (0, 1)
    assert box_remove_set({1, 2}, (1, 2)) == (1, 0)
    assert eval_word([d(2), d(1)], (1, 2)) == (0, 1)


@pytest.mark.parametrize("i, w, expected", [
    (2, ALPHA, (2, 1, 3, 2)),
    (0, ALPHA, (2, 1, 3, 0)),
    (1, (), (1,)),
])
def test_append(i, w, expected):
    assert append(i, w) == expected


def test_a0_flattens_to_identity():
    assert flatten(append(0, ALPHA)) == ALPHA


@pytest.mark.parametrize("i, w, expected", [
    (4, BETA, (2, 1, 4, 1, 0, 4)),
    (1, (2, 1), (2, 1, 1)),
    (2, ALPHA, (2, 0, 3, 2)),
    (5, ALPHA, ZERO),
])
def test_jdt_add(i, w, expected):
    assert jdt_add(i, w) == expected


def test_jdt_add_zero_matches_four_term_U():
    nonzero = [i for i in range(1, 10) if jdt_add(i, ALPHA) is not ZERO]
    assert nonzero == [1, 2, 3, 4]


@pytest.mark.parametrize("I, w, expected", [
    (set(), (1, 2), (1, 2)),
    ({1}, (2,), (2, 1)),
    ({1, 2}, (1,), (1, 0, 2)),
])
def test_jdt_add_set(I, w, expected):
    assert jdt_add_set(I, w) == expected


def test_jdt_add_set_against_step_by_step_oracle():
    assert as_tuple(REF["u"](2, REF["u"](1, [1]))) == jdt_add_set({1, 2}, (1,))


@pytest.mark.parametrize("i, expected", [
    (1, (1, 3, 1, 4, 2, 1)),
    (2, (3, 2, 4, 2, 1)),
    (3, (3, 1, 4, 3, 1)),
    (4, (4, 1, 4, 2, 1)),
    (5, (3, 1, 5, 2, 1)),
    (6, ZERO),
    (7, ZERO),
])
def test_box_add(i, expected):
    assert box_add(i, BETA) == expected


def test_box_add_on_empty():
    assert box_add(1, ()) == (1,)


@pytest.mark.parametrize("word, w, expected", [
    ([a(4), d(1), d(2), d(3)], BETA, (2, 1, 4, 1, 0, 4)),
    ([], ALPHA, ALPHA),
    ([t(4), d(1), d(4), d(5), d(6)], (2, 6, 1, 4), (2, 4, 0, 4)),
])
def test_eval_word(word, w, expected):
    assert eval_word(word, w) == expected


def test_index_zero_atoms_are_identity_except_append():
    for op in "dut":
        assert eval_word([Atom(op, 0)], ALPHA) == ALPHA
    assert eval_word([a(0)], ALPHA) == (2, 1, 3, 0)


def test_zero_is_absorbing():
    assert eval_word([a(1), d(9)], ALPHA) is ZERO
    for op in (box_remove, append, jdt_add, box_add):
        assert op(1, ZERO) is ZERO


def test_word_helpers_and_json():
    assert d_word({3, 1, 2}) == [d(1), d(2), d(3)]
    assert u_word({1, 2}) == [u(2), u(1)]
    word = [a(4), d(1), d(2), d(3)]
    data = word_to_json(word)
    assert data[0] == {"op": "a", "i": 4}
    assert word_from_json(data) == word
    with pytest.raises(ValueError):
        word_from_json([{"op": "x", "i": 1}])
    with pytest.raises(ValueError):
        word_from_json([{"op": "d", "i": -1}])


words = st.lists(st.tuples(st.sampled_from("daut"), st.integers(0, 8)), max_size=6)


@given(words, weak_compositions)
def test_eval_word_agrees_with_reference(word, w):
    got = eval_word([Atom(*x) for x in word], w)
    want = as_tuple(ref_word(word, w))
    assert (got is ZERO and want is None) or got == want


OPS = {"d": box_remove, "u": jdt_add, "t": box_add, "a": append}


def test_size_shift(weak_universe):
    for w in weak_universe:
        n = size(w)
        for i in range(1, 9):
            for op, shift in (("d", -1), ("u", 1), ("t", 1), ("a", i)):
                r = OPS[op](i, w)
                if r is not ZERO:
                    assert size(r) == n + shift, (op, i, w)


def test_zero_part_inertness(weak_universe):
    for w in weak_universe:
        f = flatten(w)
        for i in range(1, 9):
            for fn in OPS.values():
                r, rf = fn(i, w), fn(i, f)
                assert (r is ZERO) == (rf is ZERO), (fn.__name__, i, w)
                if r is not ZERO:
                    assert flatten(r) == flatten(rf)


def test_last_part_law_and_distinctness(weak_universe):
    for w in weak_universe:
        ups = [(i, jdt_add(i, w)) for i in range(1, 10)]
        ups = [(i, r) for i, r in ups if r is not ZERO]
        assert all(r[-1] == i for i, r in ups)
        assert len({flatten(r) for _, r in ups}) == len(ups)
        ts = [box_add(i, w) for i in range(1, 10)]
        ts = [flatten(r) for r in ts if r is not ZERO]
        assert len(set(ts)) == len(ts)


def test_finiteness(weak_universe):
    for w in weak_universe:
        m = largest_part(w)
        for i in range(m + 2, m + 5):
            assert jdt_add(i, w) is ZERO
            assert box_add(i, w) is ZERO
        for i in range(m + 1, m + 4):
            assert box_remove(i, w) is ZERO
