# Phi: Y -> Z pairs the left words t_i d_I with the right words d_I t_i.
from compdual.compositions import compositions_up_to
from compdual.phi import build_word_sets, left, phi, phi_table, psi, verify_phi

alpha = (2, 6, 1, 4)
w = left((1, 4, 5, 6), 4)
image = phi(w, alpha)
print(f"w = {w},  w(alpha) = {w(alpha)}")
print(f"Phi(w) = {image},  Phi(w)(alpha) = {image(alpha)}")
print(f"Psi(Phi(w)) = {psi(image, alpha)}")

ws = build_word_sets(alpha)
print({k: len(getattr(ws, k)) for k in "XYZPQ"})

for row in phi_table((2, 1, 3)):
    print(f"  {row['w']:<12} -> {row['phi_w']:<12} case {row['case']}")

report = verify_phi(alpha)
for name, (ok, _) in report.clauses.items():
    print("PASS" if ok else "FAIL", name)

failures = [a for a in compositions_up_to(7) if not verify_phi(a).passed]
print("compositions of size <= 7 failing any clause:", failures)
