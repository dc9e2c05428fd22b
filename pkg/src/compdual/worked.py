"""Every worked example from the source text, with its expected value embedded.

Expansions are written the way they are printed there: commas and parentheses
suppressed, zero parts kept (``"2032"`` is the weak composition (2,0,3,2)).
"""

import time
from dataclasses import dataclass
from typing import Any, Callable

from .compositions import ZERO, display, flatten
from .formal import DT, UT, D, FormalSum, U, commutator_minus
from .graphs import check_nontransitivity
from .operators import a, append, box_add, box_remove, box_remove_set, d, eval_word, jdt_add
from .phi import left, phi, psi, right


def weak(digits: str):
    return tuple(int(c) for c in digits)


def expansion(text: str) -> FormalSum:
    """``"2130 1131"`` -> the flattened sum (2,1,3) + (1,1,3,1), multiplicities kept."""
    return FormalSum((weak(tok), 1) for tok in text.split())


@dataclass
class WorkedExample:
    name: str
    compute: Callable[[], Any]
    expected: Any

    def run(self):
        got = self.compute()
        return got == self.expected, got


def _shift_down(I):
    return {i - 1 for i in I} - {0}


EX = WorkedExample
ALPHA = (2, 1, 3)
BETA = (3, 1, 4, 2, 1)

CATALOG = [
    EX("I - 1 for I = {1,2,4}", lambda: _shift_down({1, 2, 4}), {1, 3}),
    EX("d_1(213)", lambda: box_remove(1, ALPHA), (2, 0, 3)),
    EX("d_2(213)", lambda: box_remove(2, ALPHA), (1, 1, 3)),
    EX("d_3(213)", lambda: box_remove(3, ALPHA), (2, 1, 2)),
    EX("d_i(213) = 0 for 4 <= i <= 9", lambda: [box_remove(i, ALPHA) for i in range(4, 10)], [ZERO] * 6),
    EX("d_3(31421)", lambda: box_remove(3, BETA), (2, 1, 4, 2, 1)),
    EX("d_2 d_3(31421)", lambda: eval_word([d(2), d(3)], BETA), (2, 1, 4, 1, 1)),
    EX("d_[3](31421)", lambda: box_remove_set({1, 2, 3}, BETA), (2, 1, 4, 1, 0)),
    EX("a_2(213)", lambda: append(2, ALPHA), (2, 1, 3, 2)),
    EX("a_2 d_4(213) = 0", lambda: eval_word([a(2), d(4)], ALPHA), ZERO),
    EX("u_4(31421)", lambda: jdt_add(4, BETA), (2, 1, 4, 1, 0, 4)),
    EX("t_1(31421)", lambda: box_add(1, BETA), (1, 3, 1, 4, 2, 1)),
    EX("t_2(31421)", lambda: box_add(2, BETA), (3, 2, 4, 2, 1)),
    EX("t_3(31421)", lambda: box_add(3, BETA), (3, 1, 4, 3, 1)),
    EX("t_4(31421)", lambda: box_add(4, BETA), (4, 1, 4, 2, 1)),
    EX("t_5(31421)", lambda: box_add(5, BETA), (3, 1, 5, 2, 1)),
    EX("t_i(31421) = 0 for 6 <= i <= 10", lambda: [box_add(i, BETA) for i in range(6, 11)], [ZERO] * 5),
    EX("R_c cover 31421 -> 21414", lambda: flatten(jdt_add(4, BETA)), (2, 1, 4, 1, 4)),
    EX("L_c cover 31421 -> 41421", lambda: box_add(4, BETA), (4, 1, 4, 2, 1)),
    EX("Q_c cover 41321 <- 41421", lambda: box_remove(4, (4, 1, 4, 2, 1)), (4, 1, 3, 2, 1)),
    EX("U(213) weak terms", lambda: [jdt_add(i, ALPHA) for i in range(1, 5)],
       [weak("2131"), weak("2032"), weak("1033"), weak("2104")]),
    EX("U(213)", lambda: U({ALPHA: 1}), expansion("2131 232 133 214")),
    EX("D(213)", lambda: D({ALPHA: 1}), expansion("203 113 212")),
    EX("DU(213)", lambda: D(U({ALPHA: 1})),
       expansion("2130 1131 2121 2031 2022 0033 1032 2004 1104 2103")),
    EX("UD(213)", lambda: U(D({ALPHA: 1})),
       expansion("2031 0033 2004 1131 1032 1104 2121 2022 2103")),
    EX("(DU - UD)(213) = 213", lambda: commutator_minus(D, U, {ALPHA: 1}), expansion("213")),
    EX("Q~_c edge 41311 <- 41421 via d_{2,4}", lambda: box_remove_set({2, 4}, (4, 1, 4, 2, 1)), (4, 1, 3, 1, 1)),
    EX("non-transitivity: d_{1,4}(4141)", lambda: check_nontransitivity()["step1"], (4, 1, 3)),
    EX("non-transitivity: d_{1,4}(413)", lambda: check_nontransitivity()["step2"], (3, 3)),
    EX("non-transitivity: no I sends 4141 to 33", lambda: check_nontransitivity()["direct_witness"], []),
    EX("D~(12)", lambda: DT({(1, 2): 1}), expansion("02 11 10")),
    EX("U(12)", lambda: U({(1, 2): 1}), expansion("121 022 103")),
    EX("D~U(12)", lambda: DT(U({(1, 2): 1})),
       expansion("120 111 110 021 020 003 102 002 101 100")),
    EX("UD~(12)", lambda: U(DT({(1, 2): 1})), expansion("021 003 111 102 101 002")),
    EX("(D~U - UD~)(12) = (D~ + Id)(12)", lambda: commutator_minus(DT, U, {(1, 2): 1}),
       expansion("2 11 1 12")),
    EX("U~(213)", lambda: UT({ALPHA: 1}), expansion("1213 223 313 214")),
    EX("DU~(213)", lambda: D(UT({ALPHA: 1})),
       expansion("1203 1113 1212 213 222 303 312 204 114 213")),
    EX("U~D(213)", lambda: UT(D({ALPHA: 1})),
       expansion("1203 303 204 1113 213 114 1212 222 312")),
    EX("(DU~ - U~D)(213) = 213", lambda: commutator_minus(D, UT, {ALPHA: 1}), expansion("213")),
    EX("U~(12)", lambda: UT({(1, 2): 1}), expansion("112 22 13")),
    EX("D~U~(12)", lambda: DT(UT({(1, 2): 1})),
       expansion("102 111 110 21 20 03 12 02 11 10")),
    EX("U~D~(12)", lambda: UT(DT({(1, 2): 1})), expansion("102 03 111 21 110 20")),
    EX("(D~U~ - U~D~)(12) = (D~ + Id)(12)", lambda: commutator_minus(DT, UT, {(1, 2): 1}),
       expansion("2 11 1 12")),
    EX("w = t_4 d_{1,4,5,6}: w(2614)", lambda: left((1, 4, 5, 6), 4)((2, 6, 1, 4)), (2, 4, 0, 4)),
    EX("Phi(w)", lambda: phi(left((1, 4, 5, 6), 4), (2, 6, 1, 4)), right((1, 3, 5, 6), 3)),
    EX("Phi(w)(2614)", lambda: phi(left((1, 4, 5, 6), 4), (2, 6, 1, 4))((2, 6, 1, 4)), (2, 4, 0, 4)),
    EX("d_B(2614) for B = {5,6}", lambda: box_remove_set({5, 6}, (2, 6, 1, 4)), (2, 4, 1, 4)),
    EX("Psi(Phi(w)) = w", lambda: psi(right((1, 3, 5, 6), 3), (2, 6, 1, 4)), left((1, 4, 5, 6), 4)),
]


def replay(catalog=CATALOG):
    """Run every example; returns a list of result dicts."""
    out = []
    for ex in catalog:
        start = time.perf_counter()
        ok, got = ex.run()
        out.append({
            "name": ex.name,
            "passed": ok,
            "got": _show(got),
            "expected": _show(ex.expected),
            "seconds": time.perf_counter() - start,
        })
    return out


def _show(value):
    if value is ZERO or isinstance(value, tuple) and all(isinstance(p, int) for p in value):
        return display(value)
    return str(value)
