"""Enumeration primitives: index sets, perfect matchings, partitions.

All index values are 1-based, matching the usual determinant/Pfaffian
notation.  Enumerators are lazy generators with a deterministic order so
that seeded runs and reports are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import IndexRangeError


@dataclass(frozen=True)
class IndexSet:
    """A strictly increasing tuple of 1-based indices inside [1, ambient]."""

    ambient: int
    indices: tuple

    def __init__(self, ambient: int, indices: Iterable[int]):
        idx = tuple(sorted(indices))
        if any(not isinstance(i, int) or isinstance(i, bool) for i in idx):
            raise IndexRangeError(f"indices must be ints: {idx}")
        for a, b in zip(idx, idx[1:]):
            if a == b:
                raise IndexRangeError(f"duplicate index {a}")
        if idx and (idx[0] < 1 or idx[-1] > ambient):
            raise IndexRangeError(f"indices {idx} outside [1, {ambient}]")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "indices", idx)

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def __getitem__(self, k):
        return self.indices[k]

    def __contains__(self, v):
        return v in self.indices

    def complement(self) -> "IndexSet":
        inside = set(self.indices)
        return IndexSet(self.ambient, (i for i in range(1, self.ambient + 1) if i not in inside))

    def __repr__(self):
        return f"IndexSet({self.ambient}, {self.indices})"


def subsets(n: int, k: int) -> Iterator[IndexSet]:
    """All k-subsets of {1..n} in lexicographic order, lazily."""
    if k < 0 or k > n:
        return
    for combo in combinations(range(1, n + 1), k):
        yield IndexSet(n, combo)


@dataclass(frozen=True)
class PerfectMatching:
    """Pairs (a, b) with a < b, listed in increasing order of a."""

    pairs: tuple

    def __post_init__(self):
        for a, b in self.pairs:
            if a >= b:
                raise IndexRangeError(f"pair {(a, b)} not increasing")
        firsts = [p[0] for p in self.pairs]
        if firsts != sorted(firsts):
            raise IndexRangeError("pairs not ordered by first endpoint")

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


def perfect_matchings(ground) -> Iterator[PerfectMatching]:
    """All perfect matchings of an even ground set.

    `ground` is either an int m (meaning the set {1..m}) or an ordered
    sequence of distinct labels.  Deterministic order: the smallest
    remaining element is paired with each larger remaining element in
    increasing order, recursively.
    """
    if isinstance(ground, int):
        items = tuple(range(1, ground + 1))
    else:
        items = tuple(ground)
    if len(items) % 2:
        raise IndexRangeError(f"odd ground set of size {len(items)}")

    def rec(rest: tuple):
        if not rest:
            yield ()
            return
        a = rest[0]
        for t in range(1, len(rest)):
            b = rest[t]
            remaining = rest[1:t] + rest[t + 1:]
            for tail in rec(remaining):
                yield ((a, b),) + tail

    for pairs in rec(items):
        yield PerfectMatching(pairs)


def crossing_number(matching: PerfectMatching) -> int:
    """Number of crossing pairs {i,k},{j,l} with i < j < k < l."""
    pairs = matching.pairs
    count = 0
    for t, (a, b) in enumerate(pairs):
        for c, d in pairs[t + 1:]:
            # pairs are ordered by first endpoint, so a < c always
            if a < c < b < d:
                count += 1
    return count


def matching_sign(matching: PerfectMatching) -> int:
    return -1 if crossing_number(matching) % 2 else 1


def inv_word(J: Iterable[int], K: Iterable[int]) -> int:
    """Inversions of the concatenated word JK: pairs (j, k) with j in J,
    k in K and j > k."""
    K = tuple(K)
    return sum(1 for j in J for k in K if j > k)


def lambda_of(I: Sequence[int]) -> tuple:
    """Partition (i_k - k, ..., i_2 - 2, i_1 - 1) of a strictly increasing
    index tuple, largest part first."""
    idx = tuple(I)
    k = len(idx)
    for a, b in zip(idx, idx[1:]):
        if a >= b:
            raise IndexRangeError(f"index tuple {idx} not strictly increasing")
    return tuple(idx[k - 1 - a] - (k - a) for a in range(k))


def index_of_lambda(lam: Sequence[int], k: int, n: int) -> IndexSet:
    """Inverse of lambda_of: the k-subset of [n] whose partition is lam."""
    lam = tuple(lam) + (0,) * (k - len(lam))
    if len(lam) > k:
        raise IndexRangeError(f"partition {lam} has more than {k} parts")
    idx = tuple(lam[k - 1 - (a - 1)] + a for a in range(1, k + 1))
    return IndexSet(n, idx)


def as_partition(parts: Sequence[int]) -> tuple:
    parts = tuple(parts)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise IndexRangeError(f"parts {parts} not weakly decreasing")
    if parts and parts[-1] < 0:
        raise IndexRangeError(f"negative part in {parts}")
    return parts


def is_horizontal_strip(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True when lam/mu is a horizontal strip:
    lam_1 >= mu_1 >= lam_2 >= mu_2 >= ...  (zero padding on the right)."""
    lam = as_partition(lam)
    mu = as_partition(mu)
    size = max(len(lam), len(mu))
    lam = lam + (0,) * (size - len(lam))
    mu = mu + (0,) * (size - len(mu))
    for t in range(size):
        if lam[t] < mu[t]:
            return False
        if t + 1 < size and mu[t] < lam[t + 1]:
            return False
    return True
