"""The three-term sequence for (k,a,b) = (1,4,2) and (1,6,2), and where its degree drop comes from."""
from veryeven.prover import audit_stages, build_scenario, verify_main_ses

for kab in [(1, 4, 2), (1, 6, 2)]:
    sc = build_scenario(*kab)
    print(sc.id, sc.rs.name, "P", sorted(sc.P.removed), "P'", sorted(sc.P_prime.removed),
          "P''", sorted(sc.P_dprime.removed), "nu", sc.nu)
    print("   Levi:", sc.levi["P"], sc.levi["P_prime"])
    for s in sc.stages:
        print(f"   {s.name:4s} on {s.marker}: composed drop {s.offset:2d}, written {s.stated_offset:2d}  ({s.shift_steps})")
    print("   written exponent", sc.stated_exponent, " composed", sc.composed_exponent)

sc = build_scenario(1, 4, 2)
cache = {}
for n in range(8):
    a = verify_main_ses(sc, n, cache=cache)
    b = verify_main_ses(sc, n, sc.composed_exponent, cache=cache)
    print(f"n={n}: drop {sc.stated_exponent}: {a.holds}   drop {sc.composed_exponent}: {b.holds}"
          + (f"   gap = {a.upper - a.lower}" if not a.holds else ""))

# the chain link by link in D8; only the written mu3 -> mu4 drop fails
for row in audit_stages(build_scenario(1, 6, 2), 3):
    print(row)
