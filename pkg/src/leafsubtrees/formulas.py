"""Exact closed-form and recursive counts for the named tree families.

Everything here is integer arithmetic: counts grow doubly exponentially,
so all values are exact Python ints end-to-end.
"""

from __future__ import annotations

import math

from .trees import RootedTree, binary_caterpillar, canonical_code, complete_dary, dary_caterpillar, star


def big_binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 when n < k."""
    if k < 0:
        raise ValueError(f"binomial lower index must be >= 0, got {k}")
    if n < 0:
        raise ValueError(f"binomial upper index must be >= 0, got {n}")
    return math.comb(n, k)


def star_count(n: int) -> int:
    """Induced-class count of the n-leaf star: every class is a smaller star."""
    if n < 1:
        raise ValueError(f"star needs n >= 1, got {n}")
    return n


def binary_caterpillar_count(n: int) -> int:
    """Induced-class count of the n-leaf binary caterpillar."""
    if n < 1:
        raise ValueError(f"binary caterpillar needs n >= 1, got {n}")
    return n


def caterpillar_count(d: int, n: int) -> int:
    """Induced-class count of the strict d-ary caterpillar with n leaves.

    Closed form ((d-1)**((n+d-2)/(d-1)) - 1) / (d-2) for d >= 3, equal to
    the geometric sum 1 + (d-1) + ... + (d-1)**h with h = (n-1)/(d-1).
    """
    if d == 2:
        raise ValueError(
            "the closed form divides by d-2; use binary_caterpillar_count for d=2"
        )
    if d < 2:
        raise ValueError(f"caterpillar arity must be >= 2, got {d}")
    if n < 1:
        raise ValueError(f"caterpillar needs n >= 1 leaves, got {n}")
    if (n - 1) % (d - 1) != 0:
        raise ValueError(
            f"no strict {d}-ary caterpillar with {n} leaves: need n == 1 (mod {d - 1})"
        )
    exponent = (n + d - 2) // (d - 1)  # = height + 1
    value, rem = divmod((d - 1) ** exponent - 1, d - 2)
    assert rem == 0, "geometric series must divide exactly"
    return value


def complete_dary_count(d: int, h: int) -> int:
    """Induced-class count of the complete d-ary tree of height h.

    Iterates N_h = -N_{h-1} + C(N_{h-1} + d, d) from N_0 = 1; iterative so
    that h in the dozens is stack-safe (the values, not the loop, explode).
    """
    if d <= 1:
        raise ValueError(f"complete d-ary tree needs d >= 2, got {d}")
    if h < 0:
        raise ValueError(f"height must be >= 0, got {h}")
    value = 1
    for _ in range(h):
        value = -value + big_binomial(value + d, d)
    return value


def complete_dary_sequence(d: int, h_max: int) -> list[int]:
    """The counts [N_0, ..., N_{h_max}] for the complete d-ary family."""
    if d <= 1:
        raise ValueError(f"complete d-ary tree needs d >= 2, got {d}")
    if h_max < 0:
        raise ValueError(f"height must be >= 0, got {h_max}")
    seq = [1]
    for _ in range(h_max):
        seq.append(-seq[-1] + big_binomial(seq[-1] + d, d))
    return seq


def family_count(t: RootedTree) -> int | None:
    """Exact count if ``t`` matches a recognized family, else None.

    Recognition is by canonical-code equality against freshly constructed
    family trees with the same leaf count.
    """
    n = t.leaf_count()
    code = canonical_code(t)
    if code == canonical_code(star(n)):
        return star_count(n)
    if code == canonical_code(binary_caterpillar(n)):
        return binary_caterpillar_count(n)
    # complete d-ary: n = d**h with h >= 2 (h <= 1 is already a star)
    h = 2
    while 2**h <= n:
        d = round(n ** (1.0 / h))
        for cand in (d - 1, d, d + 1):
            if cand >= 2 and cand**h == n:
                if code == canonical_code(complete_dary(cand, h)):
                    return complete_dary_count(cand, h)
        h += 1
    # d-ary caterpillar with d >= 3 and height >= 2 (height 1 is a star)
    for d in range(3, (n - 1) // 2 + 2):
        if (n - 1) % (d - 1) == 0 and (n - 1) // (d - 1) >= 2:
            if code == canonical_code(dary_caterpillar(d, n)):
                return caterpillar_count(d, n)
    return None
