"""The bijection Phi: Y -> Z (inverse Psi) behind the L_c cancellations.

For a fixed composition ``alpha`` the words in play are

* left words  ``t_i d_I`` (apply ``d_I`` first), and
* right words ``d_I t_i`` (apply ``t_i`` first),

always with ``i`` in ``I``.  ``X``/``Y`` collect the right/left words that do not
annihilate ``alpha``; ``Z`` is the part of ``X`` that never adds a box to a
largest part; ``P``/``Q`` are the one-element-``I`` members of ``X``/``Y``.
"""

from dataclasses import dataclass, field

from .compositions import ZERO, compact, flatten, largest_part
from .formal import FormalSum, down_filtered, nonempty_subsets
from .operators import box_remove_set, d_word, eval_word, t

LEFT = "L"
RIGHT = "R"


@dataclass(frozen=True, order=True)
class TWord:
    side: str
    I: tuple
    i: int

    def __post_init__(self):
        object.__setattr__(self, "I", tuple(sorted(self.I)))
        if self.side not in (LEFT, RIGHT):
            raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}")
        if self.i not in self.I:
            raise ValueError(f"{self.i} is not in {self.I}")

    @property
    def A(self):
        return tuple(j for j in self.I if j < self.i)

    @property
    def B(self):
        return tuple(j for j in self.I if j > self.i)

    def word(self):
        if self.side == LEFT:
            return [t(self.i)] + d_word(self.I)
        return d_word(self.I) + [t(self.i)]

    def __call__(self, alpha):
        return eval_word(self.word(), alpha)

    def __str__(self):
        I = "{" + ",".join(map(str, self.I)) + "}"
        if self.side == LEFT:
            return f"t{self.i} d{I}"
        return f"d{I} t{self.i}"


def left(I, i):
    return TWord(LEFT, tuple(I), i)


def right(I, i):
    return TWord(RIGHT, tuple(I), i)


@dataclass
class WordSets:
    alpha: tuple
    X: frozenset
    Y: frozenset
    Z: frozenset
    P: frozenset
    Q: frozenset

    @property
    def m(self):
        return largest_part(self.alpha)


def build_word_sets(alpha, index_bound=None) -> WordSets:
    """Enumerate X, Y, Z, P, Q for ``alpha`` with ``I`` inside ``{1..index_bound}``."""
    alpha = tuple(alpha)
    m = largest_part(alpha)
    if index_bound is None:
        index_bound = m + 1
    if index_bound < m + 1:
        raise ValueError(f"index_bound must be at least {m + 1}")
    X, Y = set(), set()
    for I in nonempty_subsets(index_bound):
        for i in I:
            for w, target in ((right(I, i), X), (left(I, i), Y)):
                if w(alpha) is not ZERO:
                    target.add(w)
    Z = {w for w in X if w.i <= m}
    P = {w for w in X if len(w.I) == 1}
    Q = {w for w in Y if len(w.I) == 1}
    return WordSets(alpha, frozenset(X), frozenset(Y), frozenset(Z), frozenset(P), frozenset(Q))


def _largest_part_below(alpha, i):
    return max((p for p in alpha if p < i), default=0)


def phi(w: TWord, alpha) -> TWord:
    """``t_i d_I  ->  d_{I'} t_{i'}`` with ``i' = k + 1``, ``k`` the largest part of alpha below ``i``."""
    if w.side != LEFT or w(alpha) is ZERO:
        raise ValueError(f"{w} is not in Y for {alpha}")
    i_new = _largest_part_below(alpha, w.i) + 1
    return right(w.A + (i_new,) + w.B, i_new)


def psi(w: TWord, alpha) -> TWord:
    """``d_I t_i  ->  t_{i''} d_{I''}`` with ``i''`` the smallest part of ``d_B(alpha)`` that is ``>= i``."""
    if w.side != RIGHT or w(alpha) is ZERO or w.i > largest_part(alpha):
        raise ValueError(f"{w} is not in Z for {alpha}")
    reduced = box_remove_set(w.B, alpha)
    candidates = [p for p in reduced if p >= w.i]
    if not candidates:
        raise ValueError(f"no part of d_B(alpha) is >= {w.i}")
    i_new = min(candidates)
    return left(w.A + (i_new,) + w.B, i_new)


def lemma_case(w: TWord, alpha) -> int:
    """Case 1, 2 or 3 of the Phi-properties lemma for ``w`` in Y."""
    if w.i == 1:
        return 1
    reduced = box_remove_set(w.B, alpha)
    smallest = min((p for p in reduced if p), default=None)
    return 3 if smallest == w.i else 2


def _sum_at(words, alpha):
    return FormalSum.from_results(w(alpha) for w in words)


@dataclass
class PhiReport:
    alpha: tuple
    sizes: dict
    clauses: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(ok for ok, _ in self.clauses.values())

    def record(self, name, ok, witness=None):
        self.clauses[name] = (bool(ok), None if ok else witness)


def verify_phi(alpha) -> PhiReport:
    alpha = tuple(alpha)
    ws = build_word_sets(alpha)
    m = ws.m
    report = PhiReport(alpha, {k: len(getattr(ws, k)) for k in "XYZPQ"})

    wider = build_word_sets(alpha, m + 3)
    report.record("larger indices annihilate",
                  (wider.X, wider.Y) == (ws.X, ws.Y))

    image = {w: phi(w, alpha) for w in sorted(ws.Y)}
    bad = [str(w) for w, v in image.items() if v not in ws.Z]
    report.record("Phi maps Y into Z", not bad, bad[:5])
    report.record("Phi(Y) = Z", set(image.values()) == ws.Z)
    report.record("Phi injective", len(set(image.values())) == len(image))

    bad = [str(w) for w, v in image.items() if psi(v, alpha) != w]
    report.record("Psi o Phi = id on Y", not bad, bad[:5])
    bad = [str(z) for z in sorted(ws.Z) if phi(psi(z, alpha), alpha) != z]
    report.record("Phi o Psi = id on Z", not bad, bad[:5])

    flat_bad, case_bad = [], []
    for w, v in image.items():
        before, after = w(alpha), v(alpha)
        if flatten(before) != flatten(after):
            flat_bad.append(str(w))
        expected = (0,) + before if lemma_case(w, alpha) == 3 else before
        if after != expected:
            case_bad.append((str(w), lemma_case(w, alpha), compact(before), compact(after)))
    report.record("Phi(w)(alpha) = w(alpha) after flattening", not flat_bad, flat_bad[:5])
    report.record("lemma cases hold strictly", not case_bad, case_bad[:5])

    top = right((m + 1,), m + 1)
    q_image = {phi(q, alpha) for q in ws.Q}
    report.record("Phi(Q) = P minus d_{m+1} t_{m+1}", q_image == ws.P - {top})

    top_value = top(alpha)
    ok = top_value is not ZERO and flatten(top_value) == alpha
    if m >= 1:
        ok = ok and top_value == alpha
    report.record("d_{m+1} t_{m+1}(alpha) = alpha", ok, top_value)

    report.record("|Y| = |Z|", len(ws.Y) == len(ws.Z))

    basis = FormalSum.basis(alpha)
    report.record("sum over P minus sum over Q = alpha",
                  _sum_at(ws.P, alpha) - _sum_at(ws.Q, alpha) == basis)
    report.record("sum over X minus Z = (D~ + Id)(alpha)",
                  _sum_at(ws.X - ws.Z, alpha) == down_filtered(basis) + basis)
    return report


def phi_table(alpha) -> list:
    """One row per word of Y: the word, its image and both evaluations."""
    alpha = tuple(alpha)
    ws = build_word_sets(alpha)
    rows = []
    for w in sorted(ws.Y, key=lambda w: (len(w.I), w.I, w.i)):
        v = phi(w, alpha)
        rows.append({
            "w": str(w),
            "phi_w": str(v),
            "w_alpha": list(w(alpha)),
            "phi_w_alpha": list(v(alpha)),
            "case": lemma_case(w, alpha),
        })
    return rows
