"""Exhaustive corpora of topological trees by leaf count, and extremal checks.

Topological trees with n >= 2 leaves are exactly the root-joins of multisets
of at least two smaller topological trees whose leaf counts sum to n, which
gives both a complete generator (by induction on n) and an independent
counting recurrence to validate the generator's corpus sizes against.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Iterator

from .enumeration import induced_set
from .errors import ResourceLimitError
from .induction import InducedSet
from .trees import (
    CanonicalCode,
    RootedTree,
    binary_caterpillar,
    canonical_code,
    complete_dary,
    leaf,
    star,
)

DEFAULT_CORPUS_CAP = 10

_CORPUS_CACHE: dict[int, tuple[RootedTree, ...]] = {}


def _partitions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Nonincreasing partitions of n with parts bounded by max_part."""
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _corpus(n: int) -> tuple[RootedTree, ...]:
    if n in _CORPUS_CACHE:
        return _CORPUS_CACHE[n]
    if n == 1:
        trees: dict[str, RootedTree] = {"()": leaf()}
    else:
        trees = {}
        for part in _partitions(n, n - 1):
            if len(part) < 2:
                continue
            groups = Counter(part)
            pools = [
                combinations_with_replacement(_corpus(size), mult)
                for size, mult in sorted(groups.items())
            ]
            for chosen in product(*pools):
                children: tuple[RootedTree, ...] = ()
                for group in chosen:
                    children += group
                t = RootedTree(children)
                trees.setdefault(canonical_code(t).code, t)
    result = tuple(trees[c] for c in sorted(trees))
    _CORPUS_CACHE[n] = result
    return result


@dataclass(frozen=True)
class TreeCorpus:
    """One representative per isomorphism class of n-leaf topological trees."""

    n: int
    trees: tuple[RootedTree, ...]

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self) -> Iterator[RootedTree]:
        return iter(self.trees)


def generate_topological(n: int, cap: int = DEFAULT_CORPUS_CAP) -> TreeCorpus:
    """All isomorphism classes of topological trees with exactly n leaves."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > cap:
        raise ResourceLimitError(
            f"corpus generation for n={n} exceeds the cap of {cap} leaves"
        )
    return TreeCorpus(n, _corpus(n))


def series_reduced_leaf_counts(n_max: int) -> list[int]:
    """Class counts of topological trees by leaf count, by recurrence only.

    Uses the multiset (Euler-transform) relation for root-joins of smaller
    trees, with no tree construction at all, so it is an independent check
    on the exhaustive generator: a[1] = 1 and, for n >= 2,
    n * a[n] = sum_{d | n, d < n} d * a[d] + sum_{k < n} c[k] * b[n - k]
    where c[k] = sum_{d | k} d * a[d] and b[m] = (number of nonempty
    multisets of trees totaling m leaves) = 2 * a[m] for m >= 2, b[1] = 1.
    """
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    a = [0] * (n_max + 1)
    b = [0] * (n_max + 1)
    c = [0] * (n_max + 1)
    a[1] = b[1] = c[1] = 1
    for n in range(2, n_max + 1):
        total = sum(d * a[d] for d in range(1, n) if n % d == 0)
        total += sum(c[k] * b[n - k] for k in range(1, n))
        q, r = divmod(total, n)
        assert r == 0, "multiset recurrence must divide exactly"
        a[n] = q
        b[n] = 2 * q
        c[n] = sum(d * a[d] for d in range(1, n + 1) if n % d == 0)
    return a


@dataclass(frozen=True)
class MinimumReport:
    """Outcome of the minimum induced-class count check over one corpus."""

    n: int
    corpus_size: int
    min_count: int
    minimizers: tuple[CanonicalCode, ...]
    expected_minimizers: tuple[CanonicalCode, ...]
    histogram: tuple[tuple[int, int], ...]  # (count value, classes attaining it)

    @property
    def passed(self) -> bool:
        return self.min_count == self.n and set(self.minimizers) == set(
            self.expected_minimizers
        )


def verify_minimum(n: int, cap: int = DEFAULT_CORPUS_CAP) -> MinimumReport:
    """Check that n-leaf topological trees have at least n induced classes,
    with equality exactly for the star and the binary caterpillar.

    That statement holds for n >= 5; smaller n may be run to see the
    boundary behavior, and simply reports passed=False when extra
    minimizers exist (at n = 4 the complete binary tree of height 2 also
    attains the minimum).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    corpus = generate_topological(n, cap)
    counts = {t: len(induced_set(t)) for t in corpus}
    min_count = min(counts.values())
    minimizers = tuple(
        sorted(canonical_code(t) for t, c in counts.items() if c == min_count)
    )
    expected = tuple(
        sorted({canonical_code(star(n)), canonical_code(binary_caterpillar(n))})
    )
    histogram = tuple(sorted(Counter(counts.values()).items()))
    return MinimumReport(
        n=n,
        corpus_size=len(corpus),
        min_count=min_count,
        minimizers=minimizers,
        expected_minimizers=expected,
        histogram=histogram,
    )


class ProofWitnessError(RuntimeError):
    """A required witness class is missing from a host's induced set."""


@dataclass(frozen=True)
class WitnessReport:
    host_code: CanonicalCode
    case: int  # 1: has a vertex of outdegree >= 3; 2: strictly binary
    witnesses: tuple[CanonicalCode, CanonicalCode]


def _max_outdegree(t: RootedTree) -> int:
    if t.is_leaf():
        return 0
    return max(len(t.children), max(_max_outdegree(c) for c in t.children))


def distinguishing_witnesses(t: RootedTree) -> WitnessReport:
    """Exhibit the two induced classes that push a non-extremal host above
    the minimum.

    Hosts with a vertex of outdegree >= 3 contain both the 3-leaf star and
    the 3-leaf binary caterpillar; strictly binary hosts with >= 5 leaves
    contain both 4-leaf binary classes (the height-2 complete tree and the
    binary caterpillar).
    """
    if not t.is_topological():
        raise ValueError("host must be topological")
    n = t.leaf_count()
    if n < 5:
        raise ValueError(f"host must have at least 5 leaves, got {n}")
    code = canonical_code(t)
    if code == canonical_code(star(n)):
        raise ValueError("host must not be a star")
    if code == canonical_code(binary_caterpillar(n)):
        raise ValueError("host must not be a binary caterpillar")
    if _max_outdegree(t) >= 3:
        case = 1
        witnesses = (canonical_code(star(3)), canonical_code(binary_caterpillar(3)))
    else:
        case = 2
        witnesses = (
            canonical_code(complete_dary(2, 2)),
            canonical_code(binary_caterpillar(4)),
        )
    classes: InducedSet = induced_set(t)
    for w in witnesses:
        if w not in classes:
            raise ProofWitnessError(
                f"witness {w.code} missing from induced classes of host {code.code}"
            )
    return WitnessReport(host_code=code, case=case, witnesses=witnesses)
