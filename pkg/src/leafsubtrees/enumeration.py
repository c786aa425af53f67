"""Bottom-up enumeration of induced-subtree classes without a subset sweep.

For an internal vertex, every induced class either lives inside a single
child, is the single vertex, or joins one class from each of r >= 2 chosen
children at the root.  Recursing with that decomposition and deduplicating
by canonical code yields the exact class set in time driven by the answer
size rather than by 2**n.
"""

from __future__ import annotations

from itertools import combinations, product

from .errors import ResourceLimitError
from .induction import InducedSet
from .trees import LEAF_CODE, CanonicalCode, RootedTree, canonical_code, join_codes

DEFAULT_CODE_BUDGET = 10_000_000

# class sets keyed by host code; values are pure functions of the class,
# so the cache is shared across calls and safe under concurrent insertion
_SET_CACHE: dict[str, frozenset[CanonicalCode]] = {}


def clear_cache() -> None:
    _SET_CACHE.clear()


def induced_set(
    t: RootedTree,
    *,
    memoize: bool = True,
    budget: int = DEFAULT_CODE_BUDGET,
) -> InducedSet:
    """All induced-subtree classes of a topological host tree."""
    if not t.is_topological():
        raise ValueError("induced_set requires a topological host (no outdegree-1 vertex)")
    produced = 0

    def classes(node: RootedTree) -> frozenset[CanonicalCode]:
        nonlocal produced
        code = canonical_code(node)
        if memoize and code.code in _SET_CACHE:
            return _SET_CACHE[code.code]
        if node.is_leaf():
            result = frozenset((LEAF_CODE,))
        else:
            child_sets = [classes(c) for c in node.children]
            out: set[CanonicalCode] = {LEAF_CODE}
            for s in child_sets:
                out |= s
            for r in range(2, len(child_sets) + 1):
                for chosen in combinations(child_sets, r):
                    for parts in product(*chosen):
                        out.add(join_codes(parts))
                        produced += 1
                        if produced > budget:
                            raise ResourceLimitError(
                                f"enumeration exceeded the intermediate-set "
                                f"budget of {budget} codes"
                            )
            result = frozenset(out)
        if memoize:
            _SET_CACHE[code.code] = result
        return result

    return InducedSet(classes(t), canonical_code(t))


def count(t: RootedTree, *, budget: int = DEFAULT_CODE_BUDGET) -> int:
    """Number of nonisomorphic induced-subtree classes of ``t``.

    Recognized families (stars, caterpillars, complete d-ary trees) are
    answered by their exact closed forms; everything else is enumerated.
    """
    from .formulas import family_count

    known = family_count(t)
    if known is not None:
        return known
    return len(induced_set(t, budget=budget))
