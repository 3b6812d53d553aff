"""Exact rational walk engines.

Two complementary engines:

* a full-distribution engine that evolves the probability vector over the
  whole group under uniform right-multiplication by a generating set, and
* a pairwise engine that evolves, for every admissible index pair (i, j),
  the exact probability that the walk's window satisfies w(i) < w(j),
  by one linear recurrence per family.

The pairwise state scales as O(n^2) and therefore reaches ranks far beyond
full enumeration.  Both engines use exact big-rational arithmetic throughout;
the pairwise tables are renormalized every step so entries stay in [0, 1].

Also here: the row-plus-column summation operators on antisymmetric matrices
and on the doubly symmetric signed-pair space, with their projection
identities Q.Q = n.Q and Q.Q = (2n-2).Q used by the pairwise closed forms.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .elements import (
    Family,
    Gens,
    GroupElement,
    GroupSpec,
    Measure,
    enumerate_group,
    guard_limit,
    index_pairs,
    multiply,
    reflections_of,
    simple_reflections_of,
)
from .errors import InvalidRank, OrderLimitExceeded
from . import lengths


@dataclass(frozen=True, eq=False)
class ExactDist:
    """Exact distribution over a finite group: element -> probability.

    Only the support is stored; probabilities sum to exactly 1.
    """

    spec: GroupSpec
    probs: dict

    def total(self) -> Fraction:
        return sum(self.probs.values(), start=Fraction(0))


def iterate_distributions(
    spec: GroupSpec, gens: Gens, t_max: int, limit: int | None = None
):
    """Yield the walk distribution at t = 0, 1, ..., t_max in order.

    Work is t_max * |W| * |R| index operations after a one-time setup that
    tabulates right multiplication by each generator.
    """
    if t_max < 0:
        raise ValueError("t must be >= 0")
    cap = guard_limit() if limit is None else limit
    elems = enumerate_group(spec, limit=cap)
    gen_list = (
        simple_reflections_of(spec) if gens == Gens.SIMPLE else reflections_of(spec)
    )
    if not gen_list:
        raise InvalidRank(f"{spec} has no generators to walk on")
    work = len(elems) * len(gen_list) * max(t_max, 1)
    if work > cap:
        raise OrderLimitExceeded(f"walk work estimate {work} exceeds guard {cap}")

    index = {w: k for k, w in enumerate(elems)}
    actions = [[index[multiply(w, g)] for w in elems] for g in gen_list]

    size = len(elems)
    vec = [Fraction(0)] * size
    vec[index[spec.identity()]] = Fraction(1)
    n_gens = len(gen_list)
    yield ExactDist(spec, {elems[index[spec.identity()]]: Fraction(1)})
    for _ in range(t_max):
        new = [Fraction(0)] * size
        for act in actions:
            for k, p in enumerate(vec):
                if p:
                    new[act[k]] += p
        vec = [p / n_gens for p in new]
        yield ExactDist(spec, {elems[k]: p for k, p in enumerate(vec) if p})


def evolve_distribution(
    spec: GroupSpec, gens: Gens, t: int, limit: int | None = None
) -> ExactDist:
    """Distribution of a product of t generators drawn uniformly with
    replacement, starting from the identity."""
    for dist in iterate_distributions(spec, gens, t, limit):
        pass
    return dist


def expectation(dist: ExactDist, statistic: Callable[[GroupElement], int]) -> Fraction:
    """Exact expected value of an integer statistic under the distribution."""
    return sum(
        (p * statistic(w) for w, p in dist.probs.items()), start=Fraction(0)
    )


def pair_probability(dist: ExactDist, i: int, j: int) -> Fraction:
    """Prob(w(i) < w(j)) under the distribution, summed over the support."""
    return sum(
        (p for w, p in dist.probs.items() if w.value(i) < w.value(j)),
        start=Fraction(0),
    )


def make_statistic(
    spec: GroupSpec, measure: Measure, limit: int | None = None
) -> Callable[[GroupElement], int]:
    """Statistic function for the measure on this group's elements.

    Absolute length in families B and D is backed by the breadth-first table
    over the full reflection set, so the group must be within the guard.
    """
    f = spec.family
    if measure == Measure.LENGTH:
        return lambda w: lengths.coxeter_length(spec, w)
    if measure == Measure.ABSLENGTH:
        if f == Family.A:
            return lengths.abs_length_A
        if f == Family.I2:
            m = spec.n
            return lambda w: lengths.abs_length_dihedral(m, w)
        table = lengths.abs_length_table(spec, limit)
        return table.__getitem__
    if measure == Measure.DESCENTS:
        return lambda w: lengths.descent_count(spec, w)
    raise ValueError(f"unknown measure {measure!r}")


# ---------------------------------------------------------------------------
# Pairwise engine
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class PairTable:
    """Pairwise quantities indexed by ordered index pairs.

    kind "P": entries are Prob(w(i) < w(j)).  kind "U": the same scaled by
    |R|^t.  kind "V": the antisymmetrized differences p(i,j) - p(j,i).

    Family A indexes ordered pairs (i, j) with 1 <= i != j <= n; families B
    and D index signed pairs, with the pairs (i, -i) present for B only.
    """

    family: Family
    n: int
    t: int
    kind: str
    entries: dict

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[(i, j)]

    def num_generators(self) -> int:
        n = self.n
        if self.family == Family.A:
            return n * (n - 1) // 2
        if self.family == Family.B:
            return n * n
        return n * (n - 1)

    def to_v(self) -> "PairTable":
        """Antisymmetrized table v(i,j) = p(i,j) - p(j,i)."""
        if self.kind != "P":
            raise ValueError("to_v expects a P table")
        v = {ij: self.entries[ij] - self.entries[(ij[1], ij[0])] for ij in self.entries}
        return PairTable(self.family, self.n, self.t, "V", v)

    def to_u(self) -> "PairTable":
        """Unnormalized table u = |R|^t * p."""
        if self.kind != "P":
            raise ValueError("to_u expects a P table")
        scale = Fraction(self.num_generators()) ** self.t
        return PairTable(
            self.family, self.n, self.t, "U",
            {ij: scale * p for ij, p in self.entries.items()},
        )

    def expected_length(self) -> Fraction:
        """Expected inversion-type length: the sum of Prob(w(i) > w(j)) over
        the family's inversion pair set."""
        if self.kind != "P":
            raise ValueError("expected_length expects a P table")
        n, e = self.n, self.entries
        total = Fraction(0)
        if self.family == Family.A:
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    total += 1 - e[(i, j)]
            return total
        for i, j in e:
            if j > abs(i):
                total += 1 - e[(i, j)]
        if self.family == Family.B:
            for i in range(1, n + 1):
                total += 1 - e[(-i, i)]
        return total


def _initial_pairs(family: Family, n: int) -> dict:
    if family == Family.A:
        domain = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    elif family == Family.B:
        support = [i for i in range(-n, n + 1) if i != 0]
        domain = [(i, j) for i in support for j in support if i != j]
    else:
        domain = index_pairs(n)
    return {(i, j): Fraction(1 if i < j else 0) for (i, j) in domain}


def _step_A(n: int, p: dict) -> dict:
    nrefl = n * (n - 1) // 2
    col = {j: sum(p[(i, j)] for i in range(1, n + 1) if i != j) for j in range(1, n + 1)}
    row = {i: sum(p[(i, j)] for j in range(1, n + 1) if j != i) for i in range(1, n + 1)}
    new = {}
    for (i, j), pij in p.items():
        acc = nrefl * pij
        acc += p[(j, i)] - pij
        acc += col[j] - (n - 1) * pij
        acc += row[i] - (n - 1) * pij
        new[(i, j)] = acc / nrefl
    return new


def _step_B(n: int, p: dict) -> dict:
    nrefl = n * n
    support = [i for i in range(-n, n + 1) if i != 0]
    col = {j: sum(p[(i, j)] for i in support if i != j) for j in support}
    row = {i: sum(p[(i, j)] for j in support if j != i) for i in support}
    antidiag = sum(p[(-i, i)] for i in support)
    new = {}
    for (i, j), pij in p.items():
        if j == -i:
            acc = nrefl * pij
            acc += p[(j, i)] - pij
            acc += antidiag - pij - p[(j, i)] - (2 * n - 2) * pij
        else:
            acc = nrefl * pij
            acc += p[(j, i)] - pij
            acc += p[(-j, -i)] - pij
            acc += col[j] - p[(-j, j)] - (2 * n - 2) * pij
            acc += row[i] - p[(i, -i)] - (2 * n - 2) * pij
        new[(i, j)] = acc / nrefl
    return new


def _step_D(n: int, p: dict) -> dict:
    nrefl = n * n - n
    support = [i for i in range(-n, n + 1) if i != 0]
    col = {
        j: sum(p[(i, j)] for i in support if abs(i) != abs(j)) for j in support
    }
    row = {
        i: sum(p[(i, j)] for j in support if abs(j) != abs(i)) for i in support
    }
    new = {}
    for (i, j), pij in p.items():
        acc = nrefl * pij
        acc += p[(j, i)] - pij
        acc += p[(-j, -i)] - pij
        acc += col[j] - pij - p[(-i, j)] - (2 * n - 4) * pij
        acc += row[i] - pij - p[(i, -j)] - (2 * n - 4) * pij
        new[(i, j)] = acc / nrefl
    return new


_STEPS = {Family.A: _step_A, Family.B: _step_B, Family.D: _step_D}


def iterate_pairtables(family: Family, n: int, t_max: int):
    """Yield the P-kind pair tables for t = 0, 1, ..., t_max in order."""
    if family not in _STEPS:
        raise ValueError(f"pairwise engine supports families A, B, D, not {family}")
    if family == Family.D and n < 2:
        raise InvalidRank("family D needs n >= 2")
    if n < 1 or (family == Family.A and n < 2):
        raise InvalidRank(f"invalid rank {n} for family {family.value}")
    cap = guard_limit()
    work = 4 * n * n * max(t_max, 1)
    if work > cap:
        raise OrderLimitExceeded(f"pair-table work estimate {work} exceeds guard {cap}")
    step = _STEPS[family]
    p = _initial_pairs(family, n)
    yield PairTable(family, n, 0, "P", dict(p))
    for t in range(1, t_max + 1):
        p = step(n, p)
        yield PairTable(family, n, t, "P", dict(p))


def evolve_pairtable(family: Family, n: int, t: int) -> PairTable:
    """The P-kind pair table after t uniform reflection steps."""
    for table in iterate_pairtables(family, n, t):
        if table.t == t:
            return table
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# Row-plus-column summation operators
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class AntisymMatrix:
    """Exact antisymmetric n x n matrix (zero diagonal)."""

    n: int
    rows: tuple

    def __post_init__(self):
        r = self.rows
        if len(r) != self.n or any(len(row) != self.n for row in r):
            raise ValueError("shape mismatch")
        for i in range(self.n):
            if r[i][i] != 0:
                raise ValueError("nonzero diagonal")
            for j in range(i + 1, self.n):
                if r[j][i] != -r[i][j]:
                    raise ValueError("not antisymmetric")

    @classmethod
    def from_rows(cls, rows) -> "AntisymMatrix":
        tup = tuple(tuple(Fraction(x) for x in row) for row in rows)
        return cls(len(tup), tup)

    @classmethod
    def upper_ones(cls, n: int) -> "AntisymMatrix":
        """The start table of the pairwise recurrence: +1 above the diagonal,
        -1 below."""
        return cls.from_rows(
            [[(0 if i == j else (1 if j > i else -1)) for j in range(n)] for i in range(n)]
        )

    def entry(self, i: int, j: int) -> Fraction:
        """1-based access."""
        return self.rows[i - 1][j - 1]

    def __eq__(self, other):
        return isinstance(other, AntisymMatrix) and self.rows == other.rows

    def scale(self, c) -> "AntisymMatrix":
        c = Fraction(c)
        return AntisymMatrix(self.n, tuple(tuple(c * x for x in row) for row in self.rows))


def apply_Q_A(v: AntisymMatrix) -> AntisymMatrix:
    """Row sum plus column sum at every entry; satisfies Q.Q = n.Q on
    antisymmetric matrices."""
    n = v.n
    rowsum = [sum(v.rows[i]) for i in range(n)]
    colsum = [sum(v.rows[i][j] for i in range(n)) for j in range(n)]
    rows = tuple(
        tuple(colsum[j] + rowsum[i] if i != j else Fraction(0) for j in range(n))
        for i in range(n)
    )
    return AntisymMatrix(n, rows)


@dataclass(frozen=True, eq=False)
class DSpaceFunction:
    """Function on the admissible signed pairs (i, j), |i| != |j|, with
    v(j,i) = -v(i,j) and v(-j,-i) = v(i,j)."""

    n: int
    entries: dict

    def __post_init__(self):
        domain = set(index_pairs(self.n))
        if set(self.entries) != domain:
            raise ValueError("domain must be exactly the admissible pairs")
        for (i, j), val in self.entries.items():
            if self.entries[(j, i)] != -val:
                raise ValueError("not antisymmetric")
            if self.entries[(-j, -i)] != val:
                raise ValueError("missing negation symmetry")

    @classmethod
    def from_entries(cls, n: int, entries: dict) -> "DSpaceFunction":
        return cls(n, {ij: Fraction(x) for ij, x in entries.items()})

    @classmethod
    def sign_start(cls, n: int) -> "DSpaceFunction":
        """The start table v(i,j) = sign(j - i)."""
        return cls(n, {(i, j): Fraction(1 if j > i else -1) for i, j in index_pairs(n)})

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[(i, j)]

    def __eq__(self, other):
        return isinstance(other, DSpaceFunction) and self.entries == other.entries

    def scale(self, c) -> "DSpaceFunction":
        c = Fraction(c)
        return DSpaceFunction(self.n, {ij: c * x for ij, x in self.entries.items()})


def apply_Q_BD(v: DSpaceFunction) -> DSpaceFunction:
    """Column sum over |i'| != |j| plus row sum over |j'| != |i|; satisfies
    Q.Q = (2n-2).Q on the doubly symmetric pair space."""
    n = v.n
    support = [i for i in range(-n, n + 1) if i != 0]
    col = {j: sum(v.entries[(i, j)] for i in support if abs(i) != abs(j)) for j in support}
    row = {i: sum(v.entries[(i, j)] for j in support if abs(j) != abs(i)) for i in support}
    return DSpaceFunction(
        n, {(i, j): col[j] + row[i] for (i, j) in v.entries}
    )
