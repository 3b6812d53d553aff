"""Concrete group elements for the families A, B, D and I2.

Elements are immutable and hashable.  Permutations are stored in one-line
window notation, signed permutations as a length-n window with the negative
half of the domain implicit through w(-i) = -w(i), dihedral elements as a
(rotation, flip) pair.

Composition convention: (a * b)(x) = a(b(x)), i.e. b acts first.  All walk
statistics in this package are invariant under the opposite convention at the
distribution level, but every element-level test assumes this one.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from math import factorial
from typing import Union

from .errors import InvalidRank, OrderLimitExceeded, SpecMismatch, UnsupportedFamily

DEFAULT_GUARD_LIMIT = 10**7
GUARD_ENV_VAR = "COXWALK_GUARD_LIMIT"


def guard_limit() -> int:
    """Current group-order guard (COXWALK_GUARD_LIMIT overrides the default)."""
    raw = os.environ.get(GUARD_ENV_VAR)
    return int(raw) if raw else DEFAULT_GUARD_LIMIT


class Family(str, Enum):
    A = "A"
    B = "B"
    D = "D"
    I2 = "I2"
    G = "G"


class Gens(str, Enum):
    """Which generating set drives the walk."""

    SIMPLE = "simple"
    REFLECTIONS = "reflections"


class Measure(str, Enum):
    """Which length statistic is averaged."""

    LENGTH = "length"
    ABSLENGTH = "abslength"
    DESCENTS = "descents"


@dataclass(frozen=True)
class GroupSpec:
    """A group in one of the families.

    ``n`` is the number of letters for A (the group is the symmetric group on
    n letters), the rank for B and D, the polygon size m for I2, and the
    number of letters for G(r,1,n).  ``r`` is only meaningful for family G.
    """

    family: Family
    n: int
    r: int = 1

    def __post_init__(self):
        f, n, r = self.family, self.n, self.r
        if f == Family.A and n < 2:
            raise InvalidRank(f"family A needs at least 2 letters, got {n}")
        if f in (Family.B, Family.D) and n < 1:
            raise InvalidRank(f"family {f.value} needs rank >= 1, got {n}")
        if f == Family.I2 and n < 2:
            raise InvalidRank(f"family I2 needs m >= 2, got {n}")
        if f == Family.G:
            if n < 1 or r < 1:
                raise InvalidRank(f"family G needs r, n >= 1, got r={r}, n={n}")
            if n == 1 and r == 1:
                raise InvalidRank("family G needs r, n not both 1")
        if f != Family.G and r != 1:
            raise InvalidRank(f"parameter r is only meaningful for family G, got r={r}")

    @property
    def m(self) -> int:
        """Alias for n under family I2."""
        if self.family != Family.I2:
            raise InvalidRank("m is only defined for family I2")
        return self.n

    def order(self) -> int:
        f, n = self.family, self.n
        if f == Family.A:
            return factorial(n)
        if f == Family.B:
            return 2**n * factorial(n)
        if f == Family.D:
            return 2 ** (n - 1) * factorial(n)
        if f == Family.I2:
            return 2 * n
        return self.r**n * factorial(n)

    def identity(self) -> "GroupElement":
        f, n = self.family, self.n
        if f == Family.A:
            return Permutation(tuple(range(1, n + 1)))
        if f in (Family.B, Family.D):
            return SignedPermutation(tuple(range(1, n + 1)))
        if f == Family.I2:
            return DihedralElement(n, 0, 0)
        raise UnsupportedFamily("no element model for family G")

    def element_model(self) -> "GroupSpec":
        """The isomorphic A/B spec carrying the element model of G(r,1,n)
        for r in {1, 2}."""
        if self.family != Family.G:
            return self
        if self.r == 1:
            return GroupSpec(Family.A, self.n)
        if self.r == 2:
            return GroupSpec(Family.B, self.n)
        raise UnsupportedFamily(f"no element model for G(r,1,n) with r={self.r}")


@dataclass(frozen=True)
class Permutation:
    """Permutation of 1..n in one-line notation: window[i-1] is the image
    of i."""

    window: tuple[int, ...]

    def __post_init__(self):
        if tuple(sorted(self.window)) != tuple(range(1, len(self.window) + 1)):
            raise ValueError(f"not a permutation window: {self.window}")

    @property
    def n(self) -> int:
        return len(self.window)

    def value(self, i: int) -> int:
        return self.window[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise SpecMismatch("permutation sizes differ")
        return Permutation(tuple(self.window[x - 1] for x in other.window))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.window):
            inv[x - 1] = i + 1
        return Permutation(tuple(inv))

    def cycle_count(self) -> int:
        """Number of cycles, fixed points included."""
        seen = [False] * self.n
        cycles = 0
        for start in range(self.n):
            if seen[start]:
                continue
            cycles += 1
            x = start
            while not seen[x]:
                seen[x] = True
                x = self.window[x] - 1
        return cycles


@dataclass(frozen=True)
class SignedPermutation:
    """Signed permutation stored as the positive window w(1)..w(n); the
    negative half of the domain is implicit through w(-i) = -w(i)."""

    window: tuple[int, ...]

    def __post_init__(self):
        absw = tuple(sorted(abs(x) for x in self.window))
        if absw != tuple(range(1, len(self.window) + 1)):
            raise ValueError(f"not a signed permutation window: {self.window}")

    @property
    def n(self) -> int:
        return len(self.window)

    def value(self, i: int) -> int:
        """Image of i for i in [-n, n] without 0."""
        if i > 0:
            return self.window[i - 1]
        return -self.window[-i - 1]

    @property
    def negative_count(self) -> int:
        return sum(1 for x in self.window if x < 0)

    @property
    def in_type_d(self) -> bool:
        """True iff the number of negative window entries is even."""
        return self.negative_count % 2 == 0

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        if self.n != other.n:
            raise SpecMismatch("signed permutation sizes differ")
        return SignedPermutation(tuple(self.value(x) for x in other.window))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.n
        for i, x in enumerate(self.window):
            if x > 0:
                inv[x - 1] = i + 1
            else:
                inv[-x - 1] = -(i + 1)
        return SignedPermutation(tuple(inv))


@dataclass(frozen=True)
class DihedralElement:
    """Element rho^rot * sigma^flip of the dihedral group of order 2m, where
    rho is the unit rotation and sigma a fixed reflection."""

    m: int
    rot: int
    flip: int

    def __post_init__(self):
        if self.m < 2:
            raise InvalidRank(f"dihedral group needs m >= 2, got {self.m}")
        if not 0 <= self.rot < self.m:
            raise ValueError(f"rotation index out of range: {self.rot}")
        if self.flip not in (0, 1):
            raise ValueError(f"flip must be 0 or 1: {self.flip}")

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        if not isinstance(other, DihedralElement):
            return NotImplemented
        if self.m != other.m:
            raise SpecMismatch("dihedral group sizes differ")
        sign = -1 if self.flip else 1
        return DihedralElement(
            self.m, (self.rot + sign * other.rot) % self.m, self.flip ^ other.flip
        )

    def inverse(self) -> "DihedralElement":
        if self.flip:
            return self
        return DihedralElement(self.m, (-self.rot) % self.m, 0)


GroupElement = Union[Permutation, SignedPermutation, DihedralElement]


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    """Group product a * b, with b acting first: (a*b)(x) = a(b(x))."""
    if type(a) is not type(b):
        raise SpecMismatch(f"cannot multiply {type(a).__name__} by {type(b).__name__}")
    out = a * b
    if out is NotImplemented:
        raise SpecMismatch("incompatible elements")
    return out


def in_index_domain(n: int, i: int, j: int) -> bool:
    """True iff (i, j) is an admissible off-diagonal index pair: both nonzero
    in [-n, n] with distinct absolute values."""
    return (
        i != 0
        and j != 0
        and -n <= i <= n
        and -n <= j <= n
        and abs(i) != abs(j)
    )


def index_pairs(n: int) -> list[tuple[int, int]]:
    """All admissible pairs (i, j), ordered lexicographically."""
    support = [i for i in range(-n, n + 1) if i != 0]
    return [(i, j) for i in support for j in support if abs(i) != abs(j)]


# ---------------------------------------------------------------------------
# Reflection sets.  Descriptors are the single source of the canonical order;
# both the element constructors and the Monte Carlo fast paths consume them.
#
# Descriptor kinds:
#   ("swap", i, j)        transposition (i, j) on 1..n                (A)
#   ("sswap", a, j, s)    the signed pair map sending a -> s*j and
#                         j -> s*a, i.e. (i,j)(-i,-j) with i = s*a    (B, D)
#   ("neg", i)            sign change at i, i.e. (i, -i)              (B)
#   ("dih", rot)          the reflection with the given rotation part (I2)
# ---------------------------------------------------------------------------

Descriptor = tuple


def reflection_descriptors(spec: GroupSpec) -> list[Descriptor]:
    f, n = spec.family, spec.n
    if f == Family.A:
        return [("swap", i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if f == Family.B:
        out: list[Descriptor] = []
        for a in range(1, n + 1):
            for j in range(a + 1, n + 1):
                out.append(("sswap", a, j, 1))
                out.append(("sswap", a, j, -1))
        out.extend(("neg", i) for i in range(1, n + 1))
        return out
    if f == Family.D:
        out = []
        for a in range(1, n + 1):
            for j in range(a + 1, n + 1):
                out.append(("sswap", a, j, 1))
                out.append(("sswap", a, j, -1))
        return out
    if f == Family.I2:
        return [("dih", r) for r in range(n)]
    raise UnsupportedFamily(
        "no element-level reflections for family G; use the A/B model for r in {1, 2}"
    )


def simple_reflection_descriptors(spec: GroupSpec) -> list[Descriptor]:
    f, n = spec.family, spec.n
    if f == Family.A:
        return [("swap", i, i + 1) for i in range(1, n)]
    if f == Family.B:
        return [("neg", 1)] + [("swap", i, i + 1) for i in range(1, n)]
    if f == Family.D:
        if n == 1:
            return []  # trivial group
        return [("sswap", 1, 2, -1)] + [("swap", i, i + 1) for i in range(1, n)]
    if f == Family.I2:
        return [("dih", 0), ("dih", 1)]
    raise UnsupportedFamily("no element-level generators for family G")


def element_from_descriptor(spec: GroupSpec, desc: Descriptor) -> GroupElement:
    n = spec.n
    kind = desc[0]
    if kind == "dih":
        return DihedralElement(n, desc[1], 1)
    w = list(range(1, n + 1))
    if kind == "swap":
        _, i, j = desc
        w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    elif kind == "sswap":
        _, a, j, s = desc
        w[a - 1], w[j - 1] = s * j, s * a
    elif kind == "neg":
        w[desc[1] - 1] = -desc[1]
    else:
        raise ValueError(f"unknown descriptor {desc!r}")
    if spec.family == Family.A:
        return Permutation(tuple(w))
    return SignedPermutation(tuple(w))


def reflections_of(spec: GroupSpec) -> list[GroupElement]:
    """The full reflection set in a fixed, documented order.

    A on n letters: transpositions (i,j), lexicographic.  B_n: the signed
    pair maps ordered by (|i|, j) with the positive-sign copy first, then the
    sign changes by position.  D_n: the signed pair maps only.  I2(m): the m
    reflections ordered by rotation part.
    """
    return [element_from_descriptor(spec, d) for d in reflection_descriptors(spec)]


def simple_reflections_of(spec: GroupSpec) -> list[GroupElement]:
    """The standard generating set.

    A: adjacent transpositions.  B: sign change at 1, then adjacents.
    D: the signed map exchanging 1 and 2 with a double sign flip, then
    adjacents (empty for n = 1, where the group is trivial).  I2: the two
    reflections with rotation part 0 and 1.
    """
    return [element_from_descriptor(spec, d) for d in simple_reflection_descriptors(spec)]


def enumerate_group(spec: GroupSpec, limit: int | None = None) -> list[GroupElement]:
    """Every group element exactly once (breadth-first from the identity over
    the simple reflections), identity first.

    Raises OrderLimitExceeded when the group order exceeds the guard.
    """
    cap = guard_limit() if limit is None else limit
    order = spec.order()
    if order > cap:
        raise OrderLimitExceeded(f"group order {order} exceeds guard {cap}")
    gens = simple_reflections_of(spec)
    start = spec.identity()
    out = [start]
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                wg = w * g
                if wg not in seen:
                    seen.add(wg)
                    out.append(wg)
                    nxt.append(wg)
        frontier = nxt
    if len(out) != order:
        raise AssertionError(
            f"enumeration produced {len(out)} elements, expected {order}"
        )
    return out
