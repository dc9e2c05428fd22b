"""Weak compositions, compositions and the enumerations used as test universes.

Weak compositions are plain tuples of nonnegative ints.  Operators that can
annihilate return the ``ZERO`` sentinel, which is never equal to ``()``.
"""

from itertools import product


class _Zero:
    """The annihilating operator output.  A singleton; compare with ``is``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


def is_zero(w) -> bool:
    return w is ZERO


def flatten(w):
    """Drop zero parts, keeping order: ``(2, 0, 3) -> (2, 3)``."""
    return tuple(p for p in w if p)


def size(w) -> int:
    return sum(w)


def largest_part(w) -> int:
    return max(w, default=0)


def is_composition(w) -> bool:
    return isinstance(w, tuple) and all(isinstance(p, int) and p >= 1 for p in w)


def is_weak_composition(w) -> bool:
    return isinstance(w, tuple) and all(isinstance(p, int) and p >= 0 for p in w)


def canonical_key(c):
    """Sort key: size, then length, then parts lexicographically."""
    return (sum(c), len(c), c)


def _compositions_of(n):
    if n == 0:
        yield ()
        return
    # each of the n-1 gaps between n unit boxes is either a cut or not
    for cuts in product((False, True), repeat=n - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def enumerate_compositions(n: int) -> list:
    """All compositions of ``n`` in canonical order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return sorted(_compositions_of(n), key=canonical_key)


def compositions_up_to(n: int) -> list:
    """All compositions of size at most ``n``, canonical order."""
    out = []
    for k in range(n + 1):
        out.extend(enumerate_compositions(k))
    return out


def enumerate_weak(max_part: int, max_len: int) -> list:
    """All weak compositions with at most ``max_len`` parts, each in ``[0, max_part]``.

    Ordered by length, then lexicographically.
    """
    if max_part < 0 or max_len < 0:
        raise ValueError("bounds must be nonnegative")
    out = []
    for k in range(max_len + 1):
        out.extend(product(range(max_part + 1), repeat=k))
    return out


def display(w) -> str:
    """Display form matching the figure labels, e.g. ``(2, 1, 3)`` and ``()``."""
    if w is ZERO:
        return "0"
    if len(w) == 1:
        return f"({w[0]})"
    return "(" + ", ".join(str(p) for p in w) + ")"


def compact(w) -> str:
    """Commas and parentheses suppressed, e.g. ``213``; only unambiguous for parts < 10."""
    if w is ZERO:
        return "0"
    if not w:
        return "()"
    if all(p < 10 for p in w):
        return "".join(str(p) for p in w)
    return display(w)


def parse(text: str):
    """Parse ``"2,1,3"`` (or ``"empty"``, or ``"()"``) into a tuple."""
    text = text.strip()
    if text in ("empty", "()", "[]", ""):
        return ()
    text = text.strip("()[]")
    try:
        parts = tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise ValueError(f"not a composition: {text!r}") from None
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {text!r}")
    return parts
