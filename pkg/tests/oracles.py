"""Independent oracles used by the test suite.

Everything here recomputes quantities from first principles, by routes
different from the library's, so tests compare two genuinely separate
derivations.
"""

from hookshift import Partition


def hook_by_box_count(lam, cell):
    """Count the boxes of the hook one by one: the box itself, the boxes to
    its right in the same row, and the boxes in its column on the leg side."""
    r, c = cell
    right = sum(1 for j in range(c + 1, lam[r - 1] + 1))
    leg = sum(1 for i in range(r + 1, len(lam) + 1) if lam[i - 1] >= c)
    return 1 + right + leg


def partitions_bruteforce(n, max_part=None):
    """All weakly decreasing positive tuples summing to n."""
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_bruteforce(n - first, first):
            yield (first,) + rest


def pentagonal_counts(limit):
    """Partition numbers p(0..limit) by Euler's pentagonal recurrence."""
    p = [1] + [0] * limit
    for n in range(1, limit + 1):
        total, k = 0, 1
        while k * (3 * k - 1) // 2 <= n:
            sign = 1 if k % 2 else -1
            total += sign * p[n - k * (3 * k - 1) // 2]
            if k * (3 * k + 1) // 2 <= n:
                total += sign * p[n - k * (3 * k + 1) // 2]
            k += 1
        p[n] = total
    return p


def conjugate_by_cells(lam):
    """Transpose the diagram as a literal set of cells."""
    cells = {(r, c) for r, p in enumerate(lam, 1) for c in range(1, p + 1)}
    flipped = {(c, r) for r, c in cells}
    rows = {}
    for r, _ in flipped:
        rows[r] = rows.get(r, 0) + 1
    return Partition(sorted(rows.values(), reverse=True))


def det_bareiss(matrix):
    """Exact integer determinant by fraction-free Bareiss elimination."""
    m = [row[:] for row in matrix]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def schur_value_bialternant(lam, xs):
    """s_lam evaluated at distinct integers xs, as a ratio of alternants.

    Completely independent of tableau or Pieri combinatorics: the value is
    det(x_i^(lam_j + k - j)) / det(x_i^(k - j)), an exact integer ratio.
    """
    k = len(xs)
    if len(lam) > k:
        raise ValueError("need at least as many variables as rows")
    exps = [lam.part(j) + k - j for j in range(1, k + 1)]
    num = det_bareiss([[x ** e for e in exps] for x in xs])
    den = det_bareiss([[x ** (k - j) for j in range(1, k + 1)] for x in xs])
    q, r = divmod(num, den)
    assert r == 0
    return q


def elementary_value(m, xs):
    """e_m at the values xs, summed over m-subsets directly."""
    from itertools import combinations
    from math import prod

    return sum(prod(c) for c in combinations(xs, m)) if m <= len(xs) else 0
