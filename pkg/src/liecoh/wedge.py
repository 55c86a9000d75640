"""Wedge-monomial bookkeeping shared by exterior powers and cochain spaces.

One global convention, used everywhere:

* the degree-p basis of an exterior power of an n-dimensional space is
  indexed by strictly increasing index tuples S = (s_0 < ... < s_{p-1}),
  listed in lexicographic order;
* signs come from counting the adjacent transpositions needed to sort a
  wedge word into increasing order;
* dual wedges pair by the determinant rule, so the basis cochain labelled
  S takes value 1 on the basis wedge S and 0 on every other basis wedge.
"""

from itertools import combinations

__all__ = ["subsets", "subset_index", "insert_sign", "replace_sign"]


def subsets(n: int, p: int) -> list[tuple[int, ...]]:
    """All increasing p-tuples from range(n), in lexicographic order."""
    return list(combinations(range(n), p))


def subset_index(n: int, p: int) -> dict[tuple[int, ...], int]:
    """Position of each p-subset in the lexicographic enumeration."""
    return {S: i for i, S in enumerate(subsets(n, p))}


def insert_sign(rest: tuple[int, ...], k: int):
    """Sort e_k into the increasing wedge e_rest.

    Returns (sign, sorted tuple) with  e_k ^ e_rest = sign * e_sorted,
    or None when k already occurs in rest (the wedge vanishes).
    """
    if k in rest:
        return None
    below = 0
    for r in rest:
        if r < k:
            below += 1
        else:
            break
    sign = -1 if below % 2 else 1
    return sign, rest[:below] + (k,) + rest[below:]


def replace_sign(subset: tuple[int, ...], pos: int, k: int):
    """Replace the entry at `pos` of an increasing wedge by e_k and re-sort.

    Returns (sign, sorted tuple), or None when the wedge vanishes because
    k collides with another entry.  Used for derivation-style actions,
    where one tensor factor at a time is hit by an operator.
    """
    if k == subset[pos]:
        return 1, subset
    rest = subset[:pos] + subset[pos + 1:]
    if k in rest:
        return None
    below = 0
    for r in rest:
        if r < k:
            below += 1
        else:
            break
    sign = -1 if (pos - below) % 2 else 1
    return sign, rest[:below] + (k,) + rest[below:]
