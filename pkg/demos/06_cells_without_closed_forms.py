"""Cells with no known closed form, computed exactly anyway (at small rank).

Some (group, generators, measure) combinations have no published formula:
the type-B generator walk measured by length, the adjacent-transposition walk
measured by minimal reflection count (equivalently, expected cycle count),
and descent counts under any walk.  The full-distribution engine evaluates
them all as exact rationals while the group fits in memory -- useful both for
exploration and as ground truth for future conjectures.
"""
from coxwalk import (
    Family,
    Gens,
    GroupSpec,
    Measure,
    expectation,
    iterate_distributions,
    make_statistic,
)

T = 8

print("type B_3, generator walk, expected length (no closed form known):")
spec = GroupSpec(Family.B, 3)
stat = make_statistic(spec, Measure.LENGTH)
for t, dist in enumerate(iterate_distributions(spec, Gens.SIMPLE, T)):
    v = expectation(dist, stat)
    print(f"  t={t}: {str(v):>12} = {float(v):.6f}")

print("\nsymmetric group on 6 letters, adjacent swaps, expected minimal")
print("reflection count = 6 - E(number of cycles) (no closed form known):")
spec = GroupSpec(Family.A, 6)
stat = make_statistic(spec, Measure.ABSLENGTH)
for t, dist in enumerate(iterate_distributions(spec, Gens.SIMPLE, T)):
    v = expectation(dist, stat)
    print(f"  t={t}: {str(v):>14} = {float(v):.6f}  (E cycles = {float(6 - v):.6f})")

print("\nexpected descent count under both walks on the same group:")
stat_d = make_statistic(spec, Measure.DESCENTS)
simple = [
    expectation(d, stat_d) for d in iterate_distributions(spec, Gens.SIMPLE, T)
]
refl = [
    expectation(d, stat_d) for d in iterate_distributions(spec, Gens.REFLECTIONS, T)
]
print(f"  {'t':>3} {'adjacent swaps':>16} {'all swaps':>16}")
for t in range(T + 1):
    print(f"  {t:>3} {float(simple[t]):>16.6f} {float(refl[t]):>16.6f}")
print("\n(the stationary expectation for descents is (n-1)/2 = 2.5 here)")
