"""Independent brute-force oracles for the test suite.

These deliberately avoid the package's engines: expectations are computed by
enumerating every generator tuple, and word lengths by a fresh breadth-first
search, so that engine bugs cannot mask each other.
"""
from fractions import Fraction
from itertools import product

from coxwalk import multiply


def brute_force_expectation(spec, generators, statistic, t):
    """Average of statistic over all |R|^t ordered generator products."""
    total = Fraction(0)
    count = 0
    for combo in product(generators, repeat=t):
        w = spec.identity()
        for g in combo:
            w = multiply(w, g)
        total += statistic(w)
        count += 1
    return total / count


def brute_force_distribution(spec, generators, t):
    """Exact distribution over all |R|^t ordered generator products."""
    counts = {}
    total = 0
    for combo in product(generators, repeat=t):
        w = spec.identity()
        for g in combo:
            w = multiply(w, g)
        counts[w] = counts.get(w, 0) + 1
        total += 1
    return {w: Fraction(c, total) for w, c in counts.items()}


def bfs_word_length(identity, generators):
    """Word length of every reachable element over the generators."""
    dist = {identity: 0}
    frontier = [identity]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for w in frontier:
            for g in generators:
                wg = multiply(w, g)
                if wg not in dist:
                    dist[wg] = d
                    nxt.append(wg)
        frontier = nxt
    return dist
