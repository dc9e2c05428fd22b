"""Integer linear combinations of compositions and the four up/down operators."""

from collections import defaultdict
from functools import lru_cache
from itertools import combinations

from .compositions import ZERO, canonical_key, compact, display, flatten, largest_part
from .operators import box_add, box_remove, box_remove_set, jdt_add


class FormalSum:
    """A finitely supported map composition -> int.

    Keys are flattened on the way in and zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc = defaultdict(int)
        if terms is not None:
            items = terms.items() if hasattr(terms, "items") else terms
            for comp, coeff in items:
                if comp is ZERO:
                    continue
                acc[flatten(tuple(comp))] += coeff
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def basis(cls, comp):
        return cls({comp: 1})

    @classmethod
    def from_results(cls, results):
        """Sum operator outputs, dropping ``ZERO`` entries."""
        return cls((r, 1) for r in results)

    def __getitem__(self, comp):
        return self._terms.get(flatten(tuple(comp)), 0)

    def __contains__(self, comp):
        return flatten(tuple(comp)) in self._terms

    def __iter__(self):
        return iter(self.keys())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def keys(self):
        return sorted(self._terms, key=canonical_key)

    def items(self):
        return [(k, self._terms[k]) for k in self.keys()]

    def to_dict(self):
        return dict(self._terms)

    def __eq__(self, other):
        if isinstance(other, FormalSum):
            return self._terms == other._terms
        if isinstance(other, dict):
            return self == FormalSum(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return FormalSum(out)

    def __neg__(self):
        return FormalSum({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return FormalSum({k: scalar * v for k, v in self._terms.items()})

    __mul__ = __rmul__

    def __repr__(self):
        return f"FormalSum({dict(self.items())!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for k, v in self.items():
            term = compact(k)
            if v == 1:
                chunks.append(f"+ {term}")
            elif v == -1:
                chunks.append(f"- {term}")
            else:
                chunks.append(f"{'+' if v > 0 else '-'} {abs(v)}*{term}")
        s = " ".join(chunks)
        return s[2:] if s.startswith("+ ") else s

    def pretty(self):
        return " + ".join(f"{v}*{display(k)}" for k, v in self.items()) or "0"

    def to_json(self):
        return [{"comp": list(k), "coeff": v} for k, v in self.items()]

    @classmethod
    def from_json(cls, data):
        return cls((tuple(item["comp"]), item["coeff"]) for item in data)


# Per-composition expansions.  Each returns the raw list of nonzero weak
# compositions, one entry per contributing operator.

@lru_cache(maxsize=None)
def up_R_terms(alpha):
    m = largest_part(alpha)
    return tuple(r for r in (jdt_add(i, alpha) for i in range(1, m + 2)) if r is not ZERO)


@lru_cache(maxsize=None)
def up_L_terms(alpha):
    m = largest_part(alpha)
    return tuple(r for r in (box_add(i, alpha) for i in range(1, m + 2)) if r is not ZERO)


@lru_cache(maxsize=None)
def down_Q_terms(alpha):
    m = largest_part(alpha)
    return tuple(r for r in (box_remove(i, alpha) for i in range(1, m + 1)) if r is not ZERO)


def nonempty_subsets(n):
    """Nonempty subsets of ``{1..n}`` as sorted tuples."""
    for k in range(1, n + 1):
        yield from combinations(range(1, n + 1), k)


@lru_cache(maxsize=None)
def down_filtered_terms(alpha):
    m = largest_part(alpha)
    out = []
    for I in nonempty_subsets(m):
        r = box_remove_set(I, alpha)
        if r is not ZERO:
            out.append(r)
    return tuple(out)


def _extend(term_fn):
    def op(s):
        acc = defaultdict(int)
        for comp, coeff in s.items():
            for r in term_fn(comp):
                acc[flatten(r)] += coeff
        return FormalSum(acc)
    return op


up_R = _extend(up_R_terms)
up_R.__doc__ = "U = sum of u_i over i >= 1 (up operator of the right composition poset)."
up_L = _extend(up_L_terms)
up_L.__doc__ = "U~ = sum of t_i over i >= 1 (up operator of the left composition poset)."
down_Q = _extend(down_Q_terms)
down_Q.__doc__ = "D = sum of d_i over i >= 1."
down_filtered = _extend(down_filtered_terms)
down_filtered.__doc__ = "D~ = sum of d_I over nonempty finite I, counted with multiplicity."


def identity(s):
    return s


class LinearOp:
    """A linear endomorphism of FormalSum with ring-style arithmetic.

    ``A * B`` is composition (``B`` first), ``A + B`` and ``A - B`` are pointwise.
    """

    def __init__(self, fn, name):
        self.fn = fn
        self.name = name

    def __call__(self, s):
        if not isinstance(s, FormalSum):
            s = FormalSum(s)
        return self.fn(s)

    def __mul__(self, other):
        if isinstance(other, int):
            return LinearOp(lambda s: other * self(s), f"{other}{self.name}")
        return LinearOp(lambda s: self(other(s)), f"{self.name}{other.name}")

    def __rmul__(self, scalar):
        return self * scalar

    def __add__(self, other):
        return LinearOp(lambda s: self(s) + other(s), f"({self.name} + {other.name})")

    def __sub__(self, other):
        return LinearOp(lambda s: self(s) - other(s), f"({self.name} - {other.name})")

    def __neg__(self):
        return LinearOp(lambda s: -self(s), f"-{self.name}")

    def __repr__(self):
        return f"LinearOp({self.name})"


U = LinearOp(up_R, "U")
UT = LinearOp(up_L, "U~")
D = LinearOp(down_Q, "D")
DT = LinearOp(down_filtered, "D~")
ID = LinearOp(identity, "Id")


def commutator_minus(A, B, s):
    """``A(B(s)) - B(A(s))`` with exact cancellation."""
    if not isinstance(s, FormalSum):
        s = FormalSum(s)
    return A(B(s)) - B(A(s))
