"""Exhaustive checks of the operator relations and the dual graph identities.

Two equality levels are used and kept apart on purpose:

* ``strict_equal`` compares weak compositions part by part, zeros included.
  The operator lemmas are checked this way.
* ``flat_equal`` compares after flattening.  The theorems live at this level,
  and they are checked through ``FormalSum`` equality.
"""

import time
from dataclasses import asdict, dataclass, field
from typing import Optional

from .compositions import ZERO, compositions_up_to, display, enumerate_weak, flatten
from .formal import DT, D, FormalSum, U, UT, commutator_minus
from .operators import a, d, eval_word, t, u, word_str


def strict_equal(x, y) -> bool:
    if x is ZERO or y is ZERO:
        return x is y
    return x == y


def flat_equal(x, y) -> bool:
    if x is ZERO or y is ZERO:
        return x is y
    return flatten(x) == flatten(y)


def trace(word, w):
    """Intermediate values of ``word`` applied to ``w``, innermost letter first."""
    steps = [(None, w)]
    for atom in reversed(word):
        w = atom(w)
        steps.append((str(atom), w))
        if w is ZERO:
            break
    return [(op, display(x)) for op, x in steps]


@dataclass
class RelationCheck:
    name: str
    statement: str
    universe: str
    cases: int = 0
    passed: bool = True
    counterexample: Optional[dict] = None
    seconds: float = 0.0
    notes: dict = field(default_factory=dict)

    def fail(self, **info):
        if self.passed:
            self.counterexample = info
        self.passed = False

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status}: {self.name} [{self.statement}] on {self.universe} ({self.cases} cases, {self.seconds:.2f}s)"

    def to_json(self):
        return asdict(self)


# name -> (statement, index tuples(max_index), word pair builder)
RELATIONS = {
    "a": ("a_i = d_{i+1} a_{i+1}, i >= 0",
          lambda n: [(i,) for i in range(0, n)],
          lambda i: ([a(i)], [d(i + 1), a(i + 1)])),
    "b": ("d_j d_{j+1} ... d_i a_i = a_{j-1}, i >= j >= 1",
          lambda n: [(i, j) for i in range(1, n + 1) for j in range(1, i + 1)],
          lambda i, j: ([d(k) for k in range(j, i + 1)] + [a(i)], [a(j - 1)])),
    "c": ("d_i a_j = a_j d_i, i != j",
          lambda n: [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j],
          lambda i, j: ([d(i), a(j)], [a(j), d(i)])),
    "d": ("d_i d_j = d_j d_i, |i - j| >= 2",
          lambda n: [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if abs(i - j) >= 2],
          lambda i, j: ([d(i), d(j)], [d(j), d(i)])),
    "e": ("d_i^2 d_{i+1} = d_i d_{i+1} d_i",
          lambda n: [(i,) for i in range(1, n)],
          lambda i: ([d(i), d(i), d(i + 1)], [d(i), d(i + 1), d(i)])),
    "f": ("d_i d_{i+1}^2 = d_{i+1} d_i d_{i+1}",
          lambda n: [(i,) for i in range(1, n)],
          lambda i: ([d(i), d(i + 1), d(i + 1)], [d(i + 1), d(i), d(i + 1)])),
    "g": ("u_i d_j = d_j u_i, i != j",
          lambda n: [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j],
          lambda i, j: ([u(i), d(j)], [d(j), u(i)])),
    "h": ("u_i d_i = d_{i+1} u_{i+1}",
          lambda n: [(i,) for i in range(1, n)],
          lambda i: ([u(i), d(i)], [d(i + 1), u(i + 1)])),
    "i": ("t_i d_j = d_j t_i, i != j",
          lambda n: [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j],
          lambda i, j: ([t(i), d(j)], [d(j), t(i)])),
}


def _weak_universe(max_part, max_len, max_index):
    return f"weak compositions with <= {max_len} parts, parts <= {max_part}, indices <= {max_index}"


def verify_relation(name, max_part=6, max_len=5, max_index=8) -> RelationCheck:
    """Check one operator relation strictly over a bounded weak-composition universe.

    Every index used on either side of the relation stays within ``max_index``.
    """
    if min(max_part, max_len, max_index) < 1:
        raise ValueError("bounds must be >= 1")
    statement, index_fn, words = RELATIONS[name]
    check = RelationCheck(name, statement, _weak_universe(max_part, max_len, max_index))
    start = time.perf_counter()
    pairs = [(idx, *words(*idx)) for idx in index_fn(max_index)]
    universe = enumerate_weak(max_part, max_len)
    for w in universe:
        for idx, lhs, rhs in pairs:
            left, right = eval_word(lhs, w), eval_word(rhs, w)
            if not strict_equal(left, right):
                check.fail(input=display(w), indices=idx,
                           lhs=word_str(lhs), rhs=word_str(rhs),
                           lhs_trace=trace(lhs, w), rhs_trace=trace(rhs, w))
    check.cases = len(universe) * len(pairs)
    check.seconds = time.perf_counter() - start
    return check


def zero_contribution_case(i, w):
    """Which case of the d_i t_i / t_i d_i lemma applies: ``(1, k)`` or ``(2, k)``.

    The first entry says whether ``i == 1`` or ``i >= 2``; the second is the
    case number within that group.
    """
    if i == 1:
        return (1, 1) if 1 in w else (1, 2)
    has_i, has_prev = i in w, (i - 1) in w
    if has_i and has_prev:
        return (2, 1)
    if has_i:
        return (2, 2)
    if has_prev:
        return (2, 3)
    return (2, 4)


def _zero_contribution_ok(case, w, dt, td):
    if case in ((1, 1), (2, 1)):
        return dt is not ZERO and strict_equal(dt, td)
    if case == (1, 2):
        # t_1 prepends a 1 and d_1 then lowers that same part, so the strict
        # value is (0,) + w; it equals w once zeros are ignored.
        return dt == (0,) + w and td is ZERO
    if case == (2, 2):
        return dt is ZERO and strict_equal(td, w)
    if case == (2, 3):
        return strict_equal(dt, w) and td is ZERO
    return dt is ZERO and td is ZERO


def verify_zero_contribution(max_part=6, max_len=5, max_index=8) -> RelationCheck:
    """Check the six-case lemma on ``d_i t_i`` against ``t_i d_i``.

    Case ``i = 1`` without parts 1 is asserted as ``d_1 t_1(w) = (0,) + w``,
    which is ``w`` after flattening.  Every other case is asserted strictly.
    The closing claim (both nonzero implies equal) is checked separately.
    """
    check = RelationCheck("zero-contribution",
                          "d_i t_i vs t_i d_i, six cases by parts i and i-1",
                          _weak_universe(max_part, max_len, max_index))
    start = time.perf_counter()
    universe = enumerate_weak(max_part, max_len)
    case_counts = {}
    closing_ok = True
    literal_alpha_failures = 0
    for w in universe:
        for i in range(1, max_index + 1):
            dt = eval_word([d(i), t(i)], w)
            td = eval_word([t(i), d(i)], w)
            case = zero_contribution_case(i, w)
            case_counts[case] = case_counts.get(case, 0) + 1
            if case == (1, 2) and not strict_equal(dt, w):
                literal_alpha_failures += 1
            if not _zero_contribution_ok(case, w, dt, td):
                check.fail(input=display(w), i=i, case=case, dt=display(dt), td=display(td))
            if dt is not ZERO and td is not ZERO and not strict_equal(dt, td):
                closing_ok = False
                check.fail(input=display(w), i=i, claim="both nonzero implies equal",
                           dt=display(dt), td=display(td))
    check.cases = len(universe) * max_index
    check.seconds = time.perf_counter() - start
    check.notes = {
        "case_counts": {f"{k[0]}.{k[1]}": v for k, v in sorted(case_counts.items())},
        "closing_claim": closing_ok,
        "case_1.2_strict_alpha_mismatches": literal_alpha_failures,
    }
    return check


def lemma_suite(max_part=6, max_len=5, max_index=8) -> list:
    checks = [verify_relation(name, max_part, max_len, max_index) for name in RELATIONS]
    checks.append(verify_zero_contribution(max_part, max_len, max_index))
    return checks


UP_SIDES = {"rc": U, "lc": UT}


def _pair_up(pair):
    try:
        left, right = pair.lower().split("-")
        up = UP_SIDES[left]
    except (ValueError, KeyError):
        raise ValueError(f"unknown pair {pair!r}") from None
    return left, right, up


def verify_dual_graded(pair="rc-qc", N=8) -> RelationCheck:
    """``D Up - Up D = Id`` on every composition of size at most ``N``."""
    left, right, up = _pair_up(pair)
    if right != "qc":
        raise ValueError(f"dual graded pairs are rc-qc and lc-qc, got {pair!r}")
    check = RelationCheck(f"dual-graded {pair}", f"D{up.name} - {up.name}D = Id",
                          f"compositions of size <= {N}")
    start = time.perf_counter()
    comps = compositions_up_to(N)
    for alpha in comps:
        x = FormalSum.basis(alpha)
        diff = commutator_minus(D, up, x)
        if diff != x:
            check.fail(input=display(alpha),
                       D_up=str(D(up(x))), up_D=str(up(D(x))), difference=str(diff))
    check.cases = len(comps)
    check.seconds = time.perf_counter() - start
    return check


def verify_dual_filtered(pair="rc-qct", N=7) -> RelationCheck:
    """``D~ Up - Up D~ = D~ + Id`` on every composition of size at most ``N``."""
    left, right, up = _pair_up(pair)
    if right != "qct":
        raise ValueError(f"dual filtered pairs are rc-qct and lc-qct, got {pair!r}")
    check = RelationCheck(f"dual-filtered {pair}", f"D~{up.name} - {up.name}D~ = D~ + Id",
                          f"compositions of size <= {N}")
    start = time.perf_counter()
    comps = compositions_up_to(N)
    for alpha in comps:
        x = FormalSum.basis(alpha)
        diff = commutator_minus(DT, up, x)
        expected = DT(x) + x
        if diff != expected:
            check.fail(input=display(alpha), difference=str(diff), expected=str(expected))
    check.cases = len(comps)
    check.seconds = time.perf_counter() - start
    return check


def verify_du_minus_ud_is_d1u1(N=8) -> RelationCheck:
    """The intermediate step of the R_c/Q_c argument: ``DU - UD = d_1 u_1`` pointwise."""
    check = RelationCheck("DU-UD = d_1 u_1", "DU - UD = d_1 u_1", f"compositions of size <= {N}")
    start = time.perf_counter()
    comps = compositions_up_to(N)
    for alpha in comps:
        x = FormalSum.basis(alpha)
        lhs = commutator_minus(D, U, x)
        rhs = FormalSum.from_results([eval_word([d(1), u(1)], alpha)])
        if lhs != rhs:
            check.fail(input=display(alpha), lhs=str(lhs), rhs=str(rhs))
    check.cases = len(comps)
    check.seconds = time.perf_counter() - start
    return check


def theorem_suite(graded_N=8, filtered_N=7) -> list:
    return [
        verify_dual_graded("rc-qc", graded_N),
        verify_dual_graded("lc-qc", graded_N),
        verify_dual_filtered("rc-qct", filtered_N),
        verify_dual_filtered("lc-qct", filtered_N),
        verify_du_minus_ud_is_d1u1(graded_N),
    ]
