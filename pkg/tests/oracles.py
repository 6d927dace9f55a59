"""Slow, independent reference implementations used as test oracles.

Nothing here imports the package; matrices are tuples of tuples of ints.
"""

from itertools import combinations, product

import networkx as nx


def brute_bcts(r, c):
    """All 0/1 matrices with row sums r and column sums c, sorted by bitstring."""
    n = len(c)
    if sum(r) != sum(c):
        return []
    choices = []
    for x in r:
        rows = []
        for cols in combinations(range(n), x):
            rows.append(tuple(1 if q in cols else 0 for q in range(n)))
        choices.append(rows)
    out = []
    for rows in product(*choices):
        if tuple(sum(col) for col in zip(*rows)) == tuple(c):
            out.append(tuple(rows))
    out.sort(key=lambda M: "".join(str(b) for row in M for b in row))
    return out


def corner_sums(M):
    m, n = len(M), len(M[0])
    return [[sum(M[p][q] for p in range(i + 1) for q in range(j + 1)) for j in range(n)]
            for i in range(m)]


def brute_bruhat_leq(A, B):
    SA, SB = corner_sums(A), corner_sums(B)
    return all(a >= b for ra, rb in zip(SA, SB) for a, b in zip(ra, rb))


def l2_corners(M):
    """Every (i, j, k, l), 1-based, whose corner reads [[0,1],[1,0]]."""
    m, n = len(M), len(M[0])
    out = []
    for i, j in combinations(range(m), 2):
        for k, l in combinations(range(n), 2):
            if (M[i][k], M[i][l], M[j][k], M[j][l]) == (0, 1, 1, 0):
                out.append((i + 1, j + 1, k + 1, l + 1))
    return out


def flip(M, sel):
    i, j, k, l = (x - 1 for x in sel)
    rows = [list(row) for row in M]
    for p, q in ((i, k), (i, l), (j, k), (j, l)):
        rows[p][q] ^= 1
    return tuple(tuple(row) for row in rows)


def interchange_digraph(members):
    g = nx.DiGraph()
    g.add_nodes_from(members)
    for M in members:
        for sel in l2_corners(M):
            g.add_edge(M, flip(M, sel))
    return g


def secondary_below(members):
    """{M: set of matrices weakly below M}, by graph reachability."""
    g = interchange_digraph(members)
    return {M: nx.descendants(g, M) | {M} for M in members}


def hasse_edges(members, below):
    """Transitive reduction via networkx, as (upper, lower) matrix pairs."""
    g = nx.DiGraph()
    g.add_nodes_from(members)
    for M in members:
        for N in below[M]:
            if N != M:
                g.add_edge(M, N)
    return set(nx.transitive_reduction(g).edges())


def is_matched(M, k, l, i, j):
    """Columns k, l (0-based) have equal sums over rows i..j inclusive."""
    return sum(M[p][k] for p in range(i, j + 1)) == sum(M[p][l] for p in range(i, j + 1))


def brute_minimal_blocks(pairs):
    """Split a matched two-column block into minimal matched pieces.

    ``pairs`` is a list of (x, y) rows.  A piece is a maximal-by-inclusion
    segment of affected rows that is matched and admits no proper matched
    split; found by trying every contiguous partition of the affected rows.
    """
    affected = [p for p, (x, y) in enumerate(pairs) if x != y]

    def matched(a, b):
        seg = pairs[a:b + 1]
        return sum(x for x, _ in seg) == sum(y for _, y in seg)

    def minimal(a, b):
        # no split point s with both a..s and s+1..b matched
        return matched(a, b) and not any(matched(a, s) and matched(s + 1, b) for s in range(a, b))

    best = None
    idx = affected
    # choose cut points among affected rows: pieces start/end on affected rows
    for cuts in range(len(idx)):
        for chosen in combinations(range(1, len(idx)), cuts):
            bounds = [0, *chosen, len(idx)]
            pieces = [(idx[bounds[t]], idx[bounds[t + 1] - 1]) for t in range(len(bounds) - 1)]
            if all(minimal(a, b) for a, b in pieces):
                if best is None or len(pieces) > len(best):
                    best = pieces
    return best or []


def permutation_matrices_of_resolution(M):
    """Maximal resolutions by brute force: BCT(r, 1^d) members merging to M."""
    r = [sum(row) for row in M]
    c = [sum(col) for col in zip(*M)]
    d = sum(c)
    out = set()
    for R in brute_bcts(r, [1] * d):
        merged, start = [], 0
        for size in c:
            merged.append(start)
            start += size
        rows = []
        for row in R:
            rows.append(tuple(sum(row[s:s + size]) for s, size in zip(merged, c)))
        if tuple(rows) == tuple(tuple(row) for row in M):
            out.add(R)
    return out
