# The filtered graph Q~_c: edges d_I(alpha) -> alpha for every nonempty I.
from compdual.formal import DT, FormalSum, U, UT, commutator_minus
from compdual.graphs import build_Qct, check_nontransitivity, multiplicity_survey
from compdual.verifier import verify_dual_filtered

x = FormalSum.basis((1, 2))
print("D~(12) =", DT(x))
print("(D~U - UD~)(12)   =", commutator_minus(DT, U, x))
print("(D~U~ - U~D~)(12) =", commutator_minus(DT, UT, x))
print("(D~ + Id)(12)     =", DT(x) + x)

for pair in ("rc-qct", "lc-qct"):
    print(verify_dual_filtered(pair, 7).line())

# the relation "beta = d_I(alpha)" is not transitive
report = check_nontransitivity()
print("d_{1,4}(4141) =", report["step1"], " d_{1,4}(413) =", report["step2"])
print("direct witnesses from 4141 to 33:", report["direct_witness"])
print("but Q_c has the chain", " < ".join(map(str, report["qc_path"])))

G = build_Qct(5)
print(f"Q~_c up to rank 5: {len(G.vertices)} vertices, {len(G.edges)} edges")
print("multiplicities up to size 8:", multiplicity_survey(8)["by_multiplicity"])
