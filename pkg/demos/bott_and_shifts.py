"""Bott's theorem on small flag varieties, then the two shift identities at character level."""
from veryeven.bmod import nilradical_weights, sym_power_weights
from veryeven.charlib import bott_line_bundle, euler_characteristic
from veryeven.prover import verify_shift_identity
from veryeven.rootsys import ParabolicMarker, build_root_system

a2 = build_root_system("A", 2)
for lam in [(0, 0), (-1, 0), (3, -2), (-2, -2), (-3, 0)]:
    print(f"L{lam}:", bott_line_bundle(a2, lam))

# chi(S^2 u_1^* (x) -w_1) on SL3/B
u1 = nilradical_weights(a2, ParabolicMarker([1]))
print("chi(S^2 u1* x -w1) =", euler_characteristic(a2, sym_power_weights(u1, 2), (-1, 0)))

# type A shift: both sides for every admissible r, l = 3
a3 = build_root_system("A", 3)
for m in (1, 2, 3):
    for r in range(-2, 1):
        try:
            rows = [verify_shift_identity(a3, "A", {"m": m, "r": r}, n) for n in range(5)]
        except ValueError as e:
            print(f"  m={m} r={r}: refused ({e})")
            continue
        print(f"  m={m} r={r}: holds for n<=4: {all(x.holds for x in rows)}")

# odd orthogonal shift, D5
d5 = build_root_system("D", 5)
rep = verify_shift_identity(d5, "D", {"r": -1}, 2)
print("D5, r=-1, n=2:", rep.left, "=", rep.right, rep.holds)
