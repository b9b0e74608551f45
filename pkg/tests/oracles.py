"""Independent oracles used by the test suite.

Everything in this module is deliberately written from first principles
(tableau enumeration, naive path walks) so that it shares no code with the
library implementations it is used to check.
"""

import itertools
from fractions import Fraction


# -- semistandard tableau enumeration ----------------------------------------


def _cells(lam, mu):
    """Row-major list of (row, col) cells of the skew diagram lam/mu,
    0-based columns; None if the shape is invalid (mu not inside lam)."""
    lam = tuple(lam)
    mu = tuple(mu) + (0,) * (len(lam) - len(mu))
    if len(mu) > len(lam):
        if any(mu[len(lam):]):
            return None
        mu = mu[: len(lam)]
    if any(m > l for l, m in zip(lam, mu)):
        return None
    out = []
    for r, (l, m) in enumerate(zip(lam, mu)):
        for c in range(m, l):
            out.append((r, c))
    return out


def tableau_weights(lam, mu, nvars):
    """Yield one weight vector (occurrences of each value 1..nvars) per
    semistandard tableau of shape lam/mu: rows weakly increase, columns
    strictly increase."""
    cells = _cells(lam, mu)
    if cells is None:
        return
    filling = {}

    def rec(k):
        if k == len(cells):
            weight = [0] * nvars
            for v in filling.values():
                weight[v - 1] += 1
            yield tuple(weight)
            return
        r, c = cells[k]
        lo = 1
        left = filling.get((r, c - 1))
        if left is not None:
            lo = max(lo, left)
        above = filling.get((r - 1, c))
        if above is not None:
            lo = max(lo, above + 1)
        for v in range(lo, nvars + 1):
            filling[(r, c)] = v
            yield from rec(k + 1)
        filling.pop((r, c), None)

    yield from rec(0)


def tableau_schur(ring, lam, mu, block):
    """Skew Schur polynomial summed directly over semistandard tableaux."""
    total = ring.zero
    for weight in tableau_weights(lam, mu, len(block)):
        term = ring.one
        for var, k in zip(block, weight):
            if k:
                term = ring.mul(term, var**k)
        total = ring.add(total, term)
    return total


# -- naive lattice path counting ----------------------------------------------
# Steps must have nonnegative coordinates and at least one positive entry,
# so pruning on overshoot is sound and every walk terminates.


def lattice_paths(start, end, steps=((1, 0), (0, 1))):
    """All paths start -> end as tuples of visited points (inclusive)."""
    out = []

    def walk(pt, acc):
        if pt == end:
            out.append(tuple(acc))
            return
        if pt[0] > end[0] or pt[1] > end[1]:
            return
        for dx, dy in steps:
            nxt = (pt[0] + dx, pt[1] + dy)
            acc.append(nxt)
            walk(nxt, acc)
            acc.pop()

    walk(tuple(start), [tuple(start)])
    return out


def count_disjoint_families(starts, ends, steps=((1, 0), (0, 1))):
    """Families of vertex-disjoint paths joining the start set to the end
    set, summed over every assignment of endpoints to starts.  For staircase
    configurations with monotone steps only one assignment can contribute,
    which is exactly what the tests rely on."""
    path_sets = {}
    for s in starts:
        for e in ends:
            path_sets[(s, e)] = [
                frozenset(p) for p in lattice_paths(s, e, steps)
            ]

    total = 0
    for perm in itertools.permutations(range(len(ends)), len(starts)):
        def fill(i, used):
            if i == len(starts):
                return 1
            acc = 0
            for vs in path_sets[(tuple(starts[i]), tuple(ends[perm[i]]))]:
                if not (vs & used):
                    acc += fill(i + 1, used | vs)
            return acc

        total += fill(0, frozenset())
    return total


def count_free_families(starts, candidate_ends, steps=((1, 0), (0, 1))):
    """Free-endpoint count: disjoint families onto every subset of the
    candidate endpoints of the right size."""
    m = len(starts)
    total = 0
    for combo in itertools.combinations(candidate_ends, m):
        total += count_disjoint_families(starts, list(combo), steps)
    return total


# -- misc ---------------------------------------------------------------------


def binomial(n, k):
    if k < 0 or k > n:
        return 0
    out = 1
    for t in range(k):
        out = out * (n - t) // (t + 1)
    return out
