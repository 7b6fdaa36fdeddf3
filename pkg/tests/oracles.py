"""Independent brute-force oracles, kept deliberately naive and separate
from the library's search paths."""

from itertools import combinations, permutations

from dicycles.graph import Digraph


def naive_edge_count(G: Digraph, A, B) -> int:
    count = 0
    for u in A:
        for v in B:
            if (u, v) in G.edges:
                count += 1
    return count


def reachability_scc(G: Digraph) -> list[list[int]]:
    """SCCs as equivalence classes of pairwise reachability (Floyd-Warshall)."""
    n = G.n
    reach = [[False] * n for _ in range(n)]
    for v in range(n):
        reach[v][v] = True
    for u, v in G.edges:
        reach[u][v] = True
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    comps = []
    assigned = [False] * n
    for v in range(n):
        if assigned[v]:
            continue
        comp = [u for u in range(n) if reach[v][u] and reach[u][v]]
        for u in comp:
            assigned[u] = True
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps


def permutation_longest_cycle(G: Digraph, undirected: bool = False) -> int:
    """Longest cycle by enumerating vertex subsets and their cyclic orders,
    anchored at each subset's minimum element. Factorial time; n <= 8."""
    minlen = 3 if undirected else 2
    best = 0
    vertices = list(range(G.n))
    for size in range(minlen, G.n + 1):
        if size <= best:
            continue
        found = False
        for subset in combinations(vertices, size):
            anchor, rest = subset[0], subset[1:]
            for perm in permutations(rest):
                order = (anchor,) + perm
                if all(
                    (order[i], order[(i + 1) % size]) in G.edges for i in range(size)
                ):
                    found = True
                    break
            if found:
                break
        if found:
            best = size
    return best


def naive_longest_path(G: Digraph) -> int:
    """Longest directed path (edge count) via subset DP; n <= 16."""
    n = G.n
    masks = G.out_masks()
    endpoints = [0] * (1 << n)
    for v in range(n):
        endpoints[1 << v] = 1 << v
    best = 0
    for mask in range(1, 1 << n):
        ep = endpoints[mask]
        if not ep:
            continue
        best = max(best, mask.bit_count() - 1)
        rest = ep
        while rest:
            vbit = rest & -rest
            rest ^= vbit
            ext = masks[vbit.bit_length() - 1] & ~mask
            while ext:
                wbit = ext & -ext
                ext ^= wbit
                endpoints[mask | wbit] |= wbit
    return best


def naive_regular_pair(G: Digraph, U, W, delta: float, p: float) -> bool:
    """Second, independent enumeration of the regularity definition."""
    U, W = sorted(U), sorted(W)

    def d(A, B):
        return naive_edge_count(G, A, B) / (p * len(A) * len(B))

    base_uw = d(U, W)
    base_wu = d(W, U)
    for a in range(1, len(U) + 1):
        if a < delta * len(U) - 1e-9:
            continue
        for b in range(1, len(W) + 1):
            if b < delta * len(W) - 1e-9:
                continue
            for Up in combinations(U, a):
                for Wp in combinations(W, b):
                    if abs(base_uw - d(Up, Wp)) >= delta:
                        return False
                    if abs(base_wu - d(Wp, Up)) >= delta:
                        return False
    return True


def has_topological_order(G: Digraph) -> bool:
    """Kahn's algorithm: a topological order exists iff G is acyclic."""
    indeg = [0] * G.n
    for _u, v in G.edges:
        indeg[v] += 1
    queue = [v for v in range(G.n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for u in G.out_neighbors(v):
            indeg[u] -= 1
            if indeg[u] == 0:
                queue.append(u)
    return seen == G.n
