"""Pure-python oracles, independent of the package's numpy/numba counting paths."""

from itertools import combinations


def brute_quotient_counts(group, members):
    """Dict z -> #{(x,y), x != y : x * y^-1 = z} by direct tabulation."""
    counts = {}
    for x in members:
        for y in members:
            if x == y:
                continue
            z = group.mul(x, group.inv(y))
            counts[z] = counts.get(z, 0) + 1
    return counts


def brute_is_difference_set(group, members, lam):
    counts = brute_quotient_counts(group, members)
    for z in range(group.order):
        if z == group.identity:
            if counts.get(z, 0) != 0:
                return False
        elif counts.get(z, 0) != lam:
            return False
    return True


def brute_pair_coverage(blocks, v):
    """Dict (p,q) -> number of blocks containing both, over all point pairs."""
    cover = {pair: 0 for pair in combinations(range(v), 2)}
    for block in blocks:
        for pair in combinations(sorted(set(block)), 2):
            cover[pair] += 1
    return cover


def brute_array_stats(cell_rows):
    """TA counting on a standard-form array given as lists of symbol values.

    Returns (per-symbol counts, row-pair overlaps, col-pair overlaps,
    row-col overlaps) as plain dicts/lists of ints.
    """
    r = len(cell_rows)
    c = len(cell_rows[0])
    sym_counts = {}
    for row in cell_rows:
        for s in row:
            sym_counts[s] = sym_counts.get(s, 0) + 1
    row_sets = [set(row) for row in cell_rows]
    col_sets = [set(cell_rows[i][j] for i in range(r)) for j in range(c)]
    rr = [len(row_sets[i] & row_sets[j]) for i in range(r) for j in range(i + 1, r)]
    cc = [len(col_sets[i] & col_sets[j]) for i in range(c) for j in range(i + 1, c)]
    rc = [len(row_sets[i] & col_sets[j]) for i in range(r) for j in range(c)]
    return sym_counts, rr, cc, rc


def brute_triple_criterion_values(group, members):
    """All |x^-1 D  intersect  D^(-1) y| for x in D, y outside D."""
    inside = set(members)
    outside = [y for y in range(group.order) if y not in inside]
    inv_d = {group.inv(x) for x in members}
    values = []
    for x in members:
        xd = {group.mul(group.inv(x), d) for d in members}
        for y in outside:
            dy = {group.mul(z, y) for z in inv_d}
            values.append(len(xd & dy))
    return values
