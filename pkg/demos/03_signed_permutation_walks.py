"""Reflection walks on signed permutations (types B and D).

A rank-n signed permutation rearranges 1..n and may negate entries.  The
type-B walk draws from all n^2 reflections (signed swaps plus sign changes);
the type-D walk omits the sign changes and preserves the parity of negative
entries.  The expected length again has two-geometric closed forms, and every
pair probability is exact, including the probability that a given entry has
gone negative (the "sign pair" (-i, i), present in type B only).
"""
from coxwalk import (
    Family,
    Gens,
    GroupSpec,
    Measure,
    evolve_distribution,
    expectation,
    expected_length_B_T,
    expected_length_D_T,
    make_statistic,
    pair_prob_B,
    pair_prob_D,
    simulate,
)

N = 3
for family, closed in ((Family.B, expected_length_B_T), (Family.D, expected_length_D_T)):
    spec = GroupSpec(family, N)
    stat = make_statistic(spec, Measure.LENGTH)
    print(f"type {family.value}, rank {N}: expected length of the reflection walk")
    print(f"{'t':>3} {'closed':>14} {'chain':>14} {'mc':>10}")
    for t in range(0, 7):
        c = closed(N, t)
        chain = expectation(evolve_distribution(spec, Gens.REFLECTIONS, t), stat)
        assert c == chain
        mc = simulate(spec, Gens.REFLECTIONS, Measure.LENGTH, t, trials=5000, seed=40 + t)
        print(f"{t:>3} {str(c):>14} {str(chain):>14} {mc.mean:>10.3f}")
    print()

print("probability that entry i has been negated after t type-B steps")
print("(the walk drives each entry negative with probability -> 1/2):")
for t in (0, 1, 2, 4, 8, 16):
    p = pair_prob_B(N, -1, 1, t)
    print(f"  t={t:>2}: {p} = {float(p):.6f}")

print("\nthe same pair probabilities never exist in type D (no sign changes),")
print("but generic pairs do; at rank 3, position pair (1,2) after 3 steps:")
print(f"  type B: {pair_prob_B(3, 1, 2, 3)}")
print(f"  type D: {pair_prob_D(3, 1, 2, 3)}")
