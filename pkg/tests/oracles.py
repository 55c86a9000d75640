"""Independent recomputations used by the tests.

Nothing here imports the library's cohomology or elimination code: the
differential is evaluated verbatim from its defining formula with a
bubble-sort sign function, ranks come from a local Gaussian elimination,
and determinants from the permutation expansion.  Agreement with the
library is therefore a genuine two-route check.
"""

from fractions import Fraction
from itertools import combinations, permutations
from math import comb


def gauss_rank(rows):
    """Row rank of a list of Fraction tuples, by plain elimination."""
    rows = [list(r) for r in rows if any(r)]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [a * inv for a in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def bubble_sign(seq):
    """(sign, sorted tuple) by counting bubble-sort swaps; None on repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return None
    sign = 1
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    return sign, tuple(seq)


def ce_dims(c, rho, m):
    """Cohomology dimensions straight from the defining formula.

    c is an n x n x n structure-constant table, rho a list of n square
    matrices (as nested lists) giving the coefficient action on an
    m-dimensional space.
    """
    n = len(c)

    def subsets(p):
        return list(combinations(range(n), p))

    def sign_on(S, args):
        """Sign with which the basis wedge S shows up in the wedge of args."""
        hit = bubble_sign(args)
        if hit is None or hit[1] != S:
            return None
        return hit[0]

    def delta_rank(p):
        """Rank of the differential out of degree p, one column per basis cochain."""
        rows_T = subsets(p + 1)
        cols_S = subsets(p)
        matrix = []
        for S in cols_S:
            for b in range(m):
                col = [Fraction(0)] * (len(rows_T) * m)
                for tpos, T in enumerate(rows_T):
                    acc = [Fraction(0)] * m
                    for i in range(p + 1):
                        sgn = sign_on(S, T[:i] + T[i + 1:])
                        if sgn is not None:
                            for beta in range(m):
                                acc[beta] += (-1) ** i * sgn * Fraction(rho[T[i]][beta][b])
                    for a in range(p + 1):
                        for bpos in range(a + 1, p + 1):
                            rest = T[:a] + T[a + 1:bpos] + T[bpos + 1:]
                            for k in range(n):
                                coeff = Fraction(c[T[a]][T[bpos]][k])
                                if not coeff:
                                    continue
                                sgn = sign_on(S, (k,) + rest)
                                if sgn is not None:
                                    acc[b] += (-1) ** (a + bpos) * sgn * coeff
                    for beta in range(m):
                        col[tpos * m + beta] = acc[beta]
                matrix.append(tuple(col))
        return gauss_rank(matrix)

    dims = []
    prev_rank = 0
    for q in range(n + 1):
        cdim = comb(n, q) * m
        rank_q = delta_rank(q) if q < n else 0
        dims.append(cdim - rank_q - prev_rank)
        prev_rank = rank_q
    return tuple(dims)


def det_permutation(mat):
    """Determinant by the permutation expansion, parity via inversions."""
    n = len(mat)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n)
                         if perm[i] > perm[j])
        term = Fraction(1) if inversions % 2 == 0 else Fraction(-1)
        for i in range(n):
            term *= Fraction(mat[i][perm[i]])
            if not term:
                break
        total += term
    return total
