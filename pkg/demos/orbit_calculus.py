"""Partitions for so(2n): validity, closure order, Richardson orbits and the A1 reduction."""
from veryeven.bmod import nilradical_weights
from veryeven.orbits import (hasse_dot, kp_reduction, minimal_degenerations, orbit_dimension,
                             richardson_orbit, sample_jordan_types, validate_partition)
from veryeven.rootsys import ParabolicMarker, build_root_system

for p in [(4, 4, 2, 2), (4, 4, 3, 1), (3, 3, 2, 2, 1, 1), (6, 2, 2, 2)]:
    print(p, validate_partition(p, 6))

print([str(o) for o in minimal_degenerations((4, 4, 3, 1), 6)])
print(kp_reduction((4, 4, 3, 1), (4, 4, 2, 2)))

d6 = build_root_system("D", 6)
for P in ([3, 6], [3, 5], [2, 6], [2, 5], [6], [5], range(1, 7)):
    P = ParabolicMarker(P)
    o = richardson_orbit(d6, P, seed=1)
    print(P, "->", o, "dim", orbit_dimension(o, 6), "= 2 dim u_P:",
          orbit_dimension(o, 6) == 2 * len(nilradical_weights(d6, P)))

# non-generic samples show up as smaller Jordan types
print([str(s) for s in sample_jordan_types(d6, ParabolicMarker([2, 6]), seed=0, trials=4)])

print(hasse_dot(4))
