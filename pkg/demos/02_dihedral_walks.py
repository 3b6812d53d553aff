"""Random walks on the symmetries of a regular m-gon.

The dihedral group of order 2m is small enough to see everything happen.
Four exact formulas cover the expected word length and the expected minimal
reflection count, under both the two-generator walk and the all-reflections
walk.  Two things stand out:

* under the all-reflections walk the expectation is *constant in t* when m
  is even, and oscillates with a tiny parity term 1/(2m) when m is odd;
* the minimal reflection count alternates between exactly 1 (odd t) and a
  value approaching 2 (even t).
"""
import math

from coxwalk import (
    Family,
    Gens,
    GroupSpec,
    Measure,
    evolve_distribution,
    expectation,
    expected_abslength_I2_S,
    expected_abslength_I2_T,
    expected_length_I2_S_troili,
    expected_length_I2_T,
    make_statistic,
)

for m in (6, 7):
    print(f"m = {m} ({'even' if m % 2 == 0 else 'odd'}), group order {2 * m}")
    print(f"{'t':>3} {'E len, refl walk':>18} {'E abs, refl walk':>18}")
    spec = GroupSpec(Family.I2, m)
    len_stat = make_statistic(spec, Measure.LENGTH)
    for t in range(1, 7):
        closed = expected_length_I2_T(m, t)
        chain = expectation(evolve_distribution(spec, Gens.REFLECTIONS, t), len_stat)
        assert closed == chain
        print(f"{t:>3} {str(closed):>18} {str(expected_abslength_I2_T(m, t)):>18}")
    print()

print("generator walk on m = 5: the exact binomial double sum, against the chain")
m = 5
spec = GroupSpec(Family.I2, m)
len_stat = make_statistic(spec, Measure.LENGTH)
for t in range(0, 9):
    closed = expected_length_I2_S_troili(m, t)
    chain = expectation(evolve_distribution(spec, Gens.SIMPLE, t), len_stat)
    assert closed == chain
    print(f"  t={t}: {closed} = {float(closed):.6f}")

print("\nthe infinite dihedral group: same generator walk, no wrap-around;")
print("a finite m larger than t gives identical values")
for t in (4, 8, 12):
    inf_val = expected_abslength_I2_S(math.inf, t)
    fin_val = expected_abslength_I2_S(t + 1, t)
    print(f"  t={t}: E abs = {inf_val} (m=inf) = {fin_val} (m={t + 1})")
