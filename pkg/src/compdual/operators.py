"""The four operator families on weak compositions.

``d`` (box removing), ``a`` (appending), ``u`` (jeu de taquin) and ``t`` (box
adding).  Every operator accepts ``ZERO`` and returns it unchanged, so
operator words can be evaluated without special-casing annihilation.

Index 0 is the identity for ``d``, ``u`` and ``t``.  ``a_0`` appends a literal
zero part, which flattening later discards.
"""

from typing import NamedTuple

from .compositions import ZERO

OPS = ("d", "a", "u", "t")


def box_remove(i: int, w):
    """Subtract 1 from the rightmost part equal to ``i``; ``ZERO`` if there is none."""
    if w is ZERO or i == 0:
        return w
    for pos in range(len(w) - 1, -1, -1):
        if w[pos] == i:
            return w[:pos] + (i - 1,) + w[pos + 1:]
    return ZERO


def box_remove_set(I, w):
    """``d_I = d_{i_1} d_{i_2} ... d_{i_k}``: the largest index is applied first."""
    for i in sorted(I, reverse=True):
        w = box_remove(i, w)
        if w is ZERO:
            break
    return w


def append(i: int, w):
    if w is ZERO:
        return w
    return w + (i,)


def jdt_add(i: int, w):
    """``u_i = a_i d_{[i-1]}``."""
    if w is ZERO or i == 0:
        return w
    for j in range(i - 1, 0, -1):
        w = box_remove(j, w)
        if w is ZERO:
            return ZERO
    return w + (i,)


def jdt_add_set(I, w):
    """``u_I = u_{i_k} ... u_{i_1}``: the smallest index is applied first."""
    for i in sorted(I):
        w = jdt_add(i, w)
        if w is ZERO:
            break
    return w


def box_add(i: int, w):
    """Prepend a 1 when ``i == 1``, else bump the leftmost part equal to ``i - 1``."""
    if w is ZERO or i == 0:
        return w
    if i == 1:
        return (1,) + w
    try:
        pos = w.index(i - 1)
    except ValueError:
        return ZERO
    return w[:pos] + (i,) + w[pos + 1:]


_APPLY = {"d": box_remove, "a": append, "u": jdt_add, "t": box_add}


class Atom(NamedTuple):
    op: str
    i: int

    def __call__(self, w):
        return _APPLY[self.op](self.i, w)

    def __str__(self):
        return f"{self.op}{self.i}"


def d(i):
    return Atom("d", i)


def a(i):
    return Atom("a", i)


def u(i):
    return Atom("u", i)


def t(i):
    return Atom("t", i)


def check_word(word):
    for atom in word:
        op, i = atom
        if op not in _APPLY:
            raise ValueError(f"unknown operator {op!r}")
        if not isinstance(i, int) or i < 0:
            raise ValueError(f"operator index must be a nonnegative int, got {i!r}")


def eval_word(word, w):
    """Apply ``word`` to ``w`` right to left, stopping early on ``ZERO``."""
    for op, i in reversed(word):
        w = _APPLY[op](i, w)
        if w is ZERO:
            return ZERO
    return w


def d_word(I):
    """The word for ``d_I`` (ascending indices, so ``max(I)`` is rightmost)."""
    return [Atom("d", i) for i in sorted(I)]


def u_word(I):
    """The word for ``u_I`` (descending indices, so ``min(I)`` is rightmost)."""
    return [Atom("u", i) for i in sorted(I, reverse=True)]


def word_to_json(word):
    return [{"op": op, "i": i} for op, i in word]


def word_from_json(data):
    word = [Atom(item["op"], item["i"]) for item in data]
    check_word(word)
    return word


def word_str(word) -> str:
    return " ".join(str(Atom(*x)) for x in word) or "Id"
