# DU - UD = Id for the right and left composition posets paired with Q_c.
from compdual.formal import D, FormalSum, U, UT, commutator_minus
from compdual.verifier import verify_dual_graded

x = FormalSum.basis((2, 1, 3))

print("U(213)  =", U(x))
print("D(213)  =", D(x))
print("DU(213) =", D(U(x)))
print("UD(213) =", U(D(x)))
print("(DU - UD)(213) =", commutator_minus(D, U, x))

# with box adding, 213 shows up twice in DU~ and once in U~D
print("DU~(213) =", D(UT(x)))
print("U~D(213) =", UT(D(x)))
print("(DU~ - U~D)(213) =", commutator_minus(D, UT, x))

for pair in ("rc-qc", "lc-qc"):
    print(verify_dual_graded(pair, 9).line())
