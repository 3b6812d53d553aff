"""Cross-verification suites tying the closed forms, the exact engines, and
the Monte Carlo estimator to one another.

Every check compares two independent routes to the same quantity and demands
exact rational equality (or the stated float tolerance where one side is
float valued).  The CLI ``verify`` subcommand runs whole suites and prints
one line per check; the acceptance test module asserts each check.
"""
from __future__ import annotations

import random
from collections import namedtuple
from fractions import Fraction

from . import closedform as cf
from .elements import Family, Gens, GroupSpec, Measure
from .exactengine import (
    AntisymMatrix,
    DSpaceFunction,
    apply_Q_A,
    apply_Q_BD,
    expectation,
    iterate_distributions,
    iterate_pairtables,
    make_statistic,
    pair_probability,
)
from .montecarlo import simulate

CheckResult = namedtuple("CheckResult", ["name", "ok", "detail"])

# shared grids (chain = full-distribution engine, pair = pairwise engine)
CHAIN_A_NS = range(2, 7)
CHAIN_A_TMAX = 10
PAIR_NS = (2, 3, 4, 6, 12, 25, 40)
PAIR_TMAX = 30
MARGINAL_TMAX = 8


class _Tally:
    """Counts comparisons and remembers the first failure."""

    def __init__(self):
        self.count = 0
        self.first_bad = None

    def eq(self, lhs, rhs, label):
        self.count += 1
        if lhs != rhs and self.first_bad is None:
            self.first_bad = f"{label}: {lhs} != {rhs}"

    def ok(self, cond, label):
        self.count += 1
        if not cond and self.first_bad is None:
            self.first_bad = label

    def result(self, name: str, unit: str = "equalities") -> CheckResult:
        if self.first_bad is None:
            return CheckResult(name, True, f"{self.count} {unit}")
        return CheckResult(name, False, self.first_bad)


def check_type_a_expectation() -> CheckResult:
    """Closed-form expected inversion count == full-distribution engine."""
    tally = _Tally()
    for n in CHAIN_A_NS:
        spec = GroupSpec(Family.A, n)
        stat = make_statistic(spec, Measure.LENGTH)
        for t, dist in enumerate(
            iterate_distributions(spec, Gens.REFLECTIONS, CHAIN_A_TMAX)
        ):
            tally.eq(
                cf.expected_length_A_T(n, t),
                expectation(dist, stat),
                f"A n={n} t={t}",
            )
    return tally.result("typeA expectation: closed form == exact chain")


def check_type_a_pairwise() -> CheckResult:
    """Pair inversion probabilities: closed form == pairwise engine
    (ranks up to 40), and pairwise engine == full-distribution marginals
    (small ranks)."""
    tally = _Tally()
    for n in PAIR_NS:
        pows = {}
        for table in iterate_pairtables(Family.A, n, PAIR_TMAX):
            t = table.t
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    key = (j - i, t)
                    if key not in pows:
                        pows[key] = cf.pair_prob_A(n, i, j, t)
                    tally.eq(
                        pows[key], 1 - table.entry(i, j), f"A pair n={n} ({i},{j}) t={t}"
                    )
    for n in CHAIN_A_NS:
        spec = GroupSpec(Family.A, n)
        tables = iterate_pairtables(Family.A, n, MARGINAL_TMAX)
        for dist, table in zip(
            iterate_distributions(spec, Gens.REFLECTIONS, MARGINAL_TMAX), tables
        ):
            for (i, j), p in table.entries.items():
                tally.eq(
                    pair_probability(dist, i, j), p, f"A marginal n={n} t={table.t}"
                )
    return tally.result("typeA pairwise: closed == pair engine == marginals")


def _check_signed_family(family: Family) -> CheckResult:
    """Shared body of the type B and type D criteria."""
    if family == Family.B:
        chain_ns, closed_exp, closed_pair = range(1, 5), cf.expected_length_B_T, cf.pair_prob_B
    else:
        chain_ns, closed_exp, closed_pair = range(2, 5), cf.expected_length_D_T, cf.pair_prob_D
    tally = _Tally()
    for n in chain_ns:
        spec = GroupSpec(family, n)
        stat = make_statistic(spec, Measure.LENGTH)
        tables = iterate_pairtables(family, n, MARGINAL_TMAX)
        for (t, dist), table in zip(
            enumerate(iterate_distributions(spec, Gens.REFLECTIONS, MARGINAL_TMAX)),
            tables,
        ):
            tally.eq(closed_exp(n, t), expectation(dist, stat), f"{family.value} n={n} t={t}")
            for (i, j), p in table.entries.items():
                tally.eq(pair_probability(dist, i, j), p, f"{family.value} marginal n={n} t={t} ({i},{j})")
    pair_ns = ((1,) + PAIR_NS) if family == Family.B else PAIR_NS
    for n in pair_ns:
        for table in iterate_pairtables(family, n, PAIR_TMAX):
            t = table.t
            memo = {}
            for (i, j) in table.entries:
                if j > abs(i):
                    key = (i > 0, j - i, t)
                    if key not in memo:
                        memo[key] = closed_pair(n, i, j, t)
                    tally.eq(memo[key], 1 - table.entry(i, j), f"{family.value} pair n={n} ({i},{j}) t={t}")
            if family == Family.B:
                diag = cf.pair_prob_B(n, -1, 1, t)
                for i in range(1, n + 1):
                    tally.eq(diag, 1 - table.entry(-i, i), f"B diag n={n} i={i} t={t}")
            tally.eq(closed_exp(n, t), table.expected_length(), f"{family.value} pair-sum n={n} t={t}")
    return tally.result(
        f"type{family.value}: closed forms == chain == pair engine"
    )


def check_type_b() -> CheckResult:
    return _check_signed_family(Family.B)


def check_type_d() -> CheckResult:
    return _check_signed_family(Family.D)


def check_dihedral_closed_forms() -> CheckResult:
    """All four dihedral closed forms == full-distribution engine for
    m in 2..12, t in 0..20."""
    tally = _Tally()
    tmax = 20
    for m in range(2, 13):
        spec = GroupSpec(Family.I2, m)
        len_stat = make_statistic(spec, Measure.LENGTH)
        abs_stat = make_statistic(spec, Measure.ABSLENGTH)
        for t, dist in enumerate(iterate_distributions(spec, Gens.REFLECTIONS, tmax)):
            tally.eq(cf.expected_length_I2_T(m, t), expectation(dist, len_stat), f"T,len m={m} t={t}")
            tally.eq(cf.expected_abslength_I2_T(m, t), expectation(dist, abs_stat), f"T,abs m={m} t={t}")
        for t, dist in enumerate(iterate_distributions(spec, Gens.SIMPLE, tmax)):
            tally.eq(cf.expected_length_I2_S_troili(m, t), expectation(dist, len_stat), f"S,len m={m} t={t}")
            tally.eq(cf.expected_abslength_I2_S(m, t), expectation(dist, abs_stat), f"S,abs m={m} t={t}")
    return tally.result("dihedral: all four closed forms == exact chain")


def check_known_formula_concordance() -> CheckResult:
    """Binomial expansion == exact chain on the adjacent-transposition walk;
    trigonometric expansion agrees within 1e-9."""
    tally = _Tally()
    for n_gens in range(1, 6):
        spec = GroupSpec(Family.A, n_gens + 1)
        stat = make_statistic(spec, Measure.LENGTH)
        for t, dist in enumerate(iterate_distributions(spec, Gens.SIMPLE, 10)):
            tally.eq(
                cf.expected_length_A_S_eriksen(n_gens, t),
                expectation(dist, stat),
                f"eriksen n={n_gens} t={t}",
            )
    for n_gens in range(1, 9):
        for t in range(0, 51):
            exact = float(cf.expected_length_A_S_eriksen(n_gens, t))
            approx = cf.expected_length_A_S_bm(n_gens, t)
            tally.ok(
                abs(exact - approx) < 1e-9,
                f"bm n={n_gens} t={t}: |{exact} - {approx}| >= 1e-9",
            )
    return tally.result("known formulas: eriksen == chain, bm == eriksen @1e-9")


def check_eriksen_hultman() -> CheckResult:
    """Colored-group absolute-length formula == exact chains (r = 1 on the
    symmetric groups, r = 2 on the signed permutations), plus the t = 0 and
    t = 1 pins."""
    tally = _Tally()
    for n in range(2, 6):
        spec = GroupSpec(Family.A, n)
        stat = make_statistic(spec, Measure.ABSLENGTH)
        for t, dist in enumerate(iterate_distributions(spec, Gens.REFLECTIONS, 8)):
            tally.eq(
                cf.expected_abslength_G_EH(1, n, t),
                expectation(dist, stat),
                f"EH r=1 n={n} t={t}",
            )
    for n in range(1, 4):
        spec = GroupSpec(Family.B, n)
        stat = make_statistic(spec, Measure.ABSLENGTH)
        for t, dist in enumerate(iterate_distributions(spec, Gens.REFLECTIONS, 8)):
            tally.eq(
                cf.expected_abslength_G_EH(2, n, t),
                expectation(dist, stat),
                f"EH r=2 n={n} t={t}",
            )
    for r in range(1, 5):
        for n in range(1, 7):
            if r == 1 and n == 1:
                continue
            tally.eq(cf.expected_abslength_G_EH(r, n, 0), Fraction(0), f"EH({r},{n},0)")
            tally.eq(cf.expected_abslength_G_EH(r, n, 1), Fraction(1), f"EH({r},{n},1)")
    return tally.result("eriksen-hultman: formula == chain, E(0)=0, E(1)=1")


def _random_antisym(n: int, rng: random.Random) -> AntisymMatrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = Fraction(rng.randint(-60, 60), rng.randint(1, 12))
            rows[i][j], rows[j][i] = x, -x
    return AntisymMatrix(n, tuple(tuple(r) for r in rows))


def _random_dspace(n: int, rng: random.Random) -> DSpaceFunction:
    entries = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for (a, b) in ((i, j), (-i, j)):
                x = Fraction(rng.randint(-60, 60), rng.randint(1, 12))
                for (c, d, val) in ((a, b, x), (b, a, -x), (-b, -a, x), (-a, -b, -x)):
                    entries[(c, d)] = val
    return DSpaceFunction(n, entries)


def check_operator_identities(samples: int = 100) -> CheckResult:
    """Q.Q = n.Q on random antisymmetric matrices and Q.Q = (2n-2).Q on
    random doubly symmetric pair functions, exact equality."""
    rng = random.Random(20101123)
    tally = _Tally()
    for n in range(2, 9):
        for _ in range(samples):
            qv = apply_Q_A(_random_antisym(n, rng))
            tally.eq(apply_Q_A(qv), qv.scale(n), f"Q^2=nQ n={n}")
    for n in range(2, 7):
        for _ in range(samples):
            qv = apply_Q_BD(_random_dspace(n, rng))
            tally.eq(apply_Q_BD(qv), qv.scale(2 * n - 2), f"Q^2=(2n-2)Q n={n}")
    return tally.result("operator identities: Q.Q = n.Q and Q.Q = (2n-2).Q")


def check_translation_invariance() -> CheckResult:
    """Engine pair probabilities depend on (i, j) only through j - i."""
    tally = _Tally()
    for n in range(2, 7):
        for table in iterate_pairtables(Family.A, n, 6):
            for gap in range(1, n):
                ref = table.entry(1, 1 + gap)
                for i in range(2, n - gap + 1):
                    tally.eq(
                        table.entry(i, i + gap), ref,
                        f"shift n={n} t={table.t} gap={gap} i={i}",
                    )
    return tally.result("translation invariance of engine pair probabilities")


# Monte Carlo calibration grid: 20 points spanning the four families, both
# generating sets and both measures, every cell backed by a closed form.
MC_GRID = (
    (Family.A, 6, Gens.REFLECTIONS, Measure.LENGTH, 3),
    (Family.A, 10, Gens.REFLECTIONS, Measure.LENGTH, 5),
    (Family.A, 7, Gens.SIMPLE, Measure.LENGTH, 6),
    (Family.A, 5, Gens.SIMPLE, Measure.LENGTH, 9),
    (Family.A, 8, Gens.REFLECTIONS, Measure.ABSLENGTH, 4),
    (Family.A, 12, Gens.REFLECTIONS, Measure.ABSLENGTH, 6),
    (Family.B, 3, Gens.REFLECTIONS, Measure.LENGTH, 2),
    (Family.B, 5, Gens.REFLECTIONS, Measure.LENGTH, 6),
    (Family.B, 4, Gens.REFLECTIONS, Measure.LENGTH, 10),
    (Family.B, 3, Gens.REFLECTIONS, Measure.ABSLENGTH, 3),
    (Family.D, 3, Gens.REFLECTIONS, Measure.LENGTH, 3),
    (Family.D, 4, Gens.REFLECTIONS, Measure.LENGTH, 5),
    (Family.D, 6, Gens.REFLECTIONS, Measure.LENGTH, 8),
    (Family.I2, 5, Gens.REFLECTIONS, Measure.LENGTH, 3),
    (Family.I2, 6, Gens.REFLECTIONS, Measure.LENGTH, 2),
    (Family.I2, 7, Gens.REFLECTIONS, Measure.ABSLENGTH, 4),
    (Family.I2, 6, Gens.SIMPLE, Measure.ABSLENGTH, 6),
    (Family.I2, 4, Gens.SIMPLE, Measure.ABSLENGTH, 4),
    (Family.I2, 5, Gens.SIMPLE, Measure.LENGTH, 7),
    (Family.I2, 9, Gens.SIMPLE, Measure.LENGTH, 12),
)
MC_TRIALS = 10**5
MC_BASE_SEED = 7000


def check_montecarlo_calibration(trials: int = MC_TRIALS) -> CheckResult:
    """Every grid point within 4 standard errors of its closed form, and
    bit-identical reruns under a different worker count."""
    tally = _Tally()
    for idx, (family, n, gens, measure, t) in enumerate(MC_GRID):
        spec = GroupSpec(family, n)
        target = float(cf.closed_form(spec, gens, measure, t).value)
        sim = simulate(spec, gens, measure, t, trials=trials, seed=MC_BASE_SEED + idx)
        tally.ok(
            abs(sim.mean - target) < 4 * sim.stderr,
            f"point {idx} {family.value} n={n} {gens.value}/{measure.value} t={t}: "
            f"|{sim.mean} - {target}| >= 4*{sim.stderr}",
        )
    for idx in (0, 6):
        family, n, gens, measure, t = MC_GRID[idx]
        spec = GroupSpec(family, n)
        one = simulate(spec, gens, measure, t, trials=trials, seed=MC_BASE_SEED + idx)
        par = simulate(
            spec, gens, measure, t, trials=trials, seed=MC_BASE_SEED + idx, workers=3
        )
        tally.ok(
            (one.mean, one.stderr) == (par.mean, par.stderr),
            f"point {idx}: parallel rerun differs",
        )
    return tally.result("monte carlo calibration within 4 sigma, reruns identical", "checks")


def check_dihedral_spot_values() -> CheckResult:
    """Pinned dihedral values: m/2 for even m, 2 - 2/m for even t, and 1 for
    odd t under the generator walk."""
    tally = _Tally()
    for m in range(2, 13, 2):
        for t in range(1, 21):
            tally.eq(cf.expected_length_I2_T(m, t), Fraction(m, 2), f"T,len m={m} t={t}")
    for m in range(2, 13):
        for t in range(2, 21, 2):
            tally.eq(cf.expected_abslength_I2_T(m, t), 2 - Fraction(2, m), f"T,abs m={m} t={t}")
        for t in range(1, 21, 2):
            tally.eq(cf.expected_abslength_I2_S(m, t), Fraction(1), f"S,abs m={m} t={t}")
    for t in range(1, 21, 2):
        tally.eq(cf.expected_abslength_I2_S(cf.INFINITE, t), Fraction(1), f"S,abs m=inf t={t}")
    return tally.result("dihedral spot values pinned")


SUITES = {
    "typeA": (check_type_a_expectation, check_type_a_pairwise, check_translation_invariance),
    "typeB": (check_type_b,),
    "typeD": (check_type_d,),
    "dihedral": (check_dihedral_closed_forms, check_dihedral_spot_values),
    "known-formulas": (check_known_formula_concordance, check_eriksen_hultman),
    "operators": (check_operator_identities,),
    "montecarlo": (check_montecarlo_calibration,),
}


def run_suite(name: str) -> list[CheckResult]:
    """Run one named suite, capturing exceptions as failed checks."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    results = []
    for check in SUITES[name]:
        try:
            results.append(check())
        except Exception as exc:  # a crashed check is a failed check
            results.append(CheckResult(check.__name__, False, f"raised {exc!r}"))
    return results
