"""Path and cycle discovery.

The stack of a depth-first search always forms a directed path; the DFS
long-path routines exploit that, tracing S (finished), T (unvisited) and
the stack U and recording the state at the first moment |S| = |T|, which is
the moment the bipartite expansion argument bounds the stack from below.
An exact longest-cycle solver (subset DP per SCC) serves as the oracle at
small n, and the paste operation stitches vertex-disjoint paths into one
cycle through short connecting edges.

Length conventions, fixed package-wide: a path's length is its edge count,
a cycle's length is its vertex count.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    InvalidParameterError,
    PasteFailureError,
    PreconditionFailure,
    SizeLimitError,
)
from .graph import CycleWitness, Digraph, PathWitness, scc_decomposition
from .pseudorandom import regular_pair_check

DEFAULT_EXACT_LIMIT = 20


@dataclass(frozen=True)
class DfsTrace:
    """Event log of a DFS run restricted to `vertices`.

    Each event is (step, vertex, from_set, to_set) with set labels in
    {"T", "U", "S"}. `snapshot` holds (S, T, stack) at the first moment
    |S| = |T|, when such a moment exists (it always does when the number of
    considered vertices is even).
    """

    vertices: frozenset[int]
    events: tuple[tuple[int, int, str, str], ...]
    snapshot: Optional[tuple[frozenset[int], frozenset[int], tuple[int, ...]]]

    def iter_states(self):
        """Replay the run, yielding (S, T, stack) after every event.

        The initial state (everything in T) is yielded first.
        """
        S: set[int] = set()
        T = set(self.vertices)
        stack: list[int] = []
        yield frozenset(S), frozenset(T), tuple(stack)
        for _step, v, src, dst in self.events:
            if src == "T" and dst == "U":
                T.remove(v)
                stack.append(v)
            elif src == "U" and dst == "S":
                assert stack and stack[-1] == v
                stack.pop()
                S.add(v)
            else:
                raise ValueError(f"impossible move {src}->{dst}")
            yield frozenset(S), frozenset(T), tuple(stack)


def _run_dfs(
    adj: dict[int, Sequence[int]], order: Sequence[int]
) -> tuple[tuple[int, ...], DfsTrace]:
    """Core DFS over the given adjacency, exploring in `order` priority.

    Returns the longest stack ever observed and the full trace.
    """
    vertices = list(order)
    T = set(vertices)
    S: set[int] = set()
    stack: list[int] = []
    ptr = {v: 0 for v in vertices}
    events: list[tuple[int, int, str, str]] = []
    snapshot = None
    best: tuple[int, ...] = ()
    step = 0
    restart_idx = 0  # position in `order` for restarts when the stack empties
    total = len(vertices)

    def after_move() -> None:
        nonlocal snapshot, best
        if snapshot is None and len(S) == len(T):
            snapshot = (frozenset(S), frozenset(T), tuple(stack))
        if len(stack) > len(best):
            best = tuple(stack)

    while len(S) < total:
        if not stack:
            while vertices[restart_idx] not in T:
                restart_idx += 1
            v = vertices[restart_idx]
            T.remove(v)
            stack.append(v)
            events.append((step, v, "T", "U"))
            step += 1
            after_move()
            continue
        v = stack[-1]
        neighbors = adj.get(v, ())
        pushed = False
        i = ptr[v]
        while i < len(neighbors):
            u = neighbors[i]
            i += 1
            if u in T:
                ptr[v] = i
                T.remove(u)
                stack.append(u)
                events.append((step, u, "T", "U"))
                step += 1
                after_move()
                pushed = True
                break
        if not pushed:
            ptr[v] = i
            stack.pop()
            S.add(v)
            events.append((step, v, "U", "S"))
            step += 1
            after_move()
    trace = DfsTrace(frozenset(vertices), tuple(events), snapshot)
    return best, trace


def dfs_long_path_bipartite(
    G: Digraph,
    V1: Iterable[int],
    V2: Iterable[int],
    order: Optional[Sequence[int]] = None,
) -> tuple[PathWitness, DfsTrace]:
    """DFS long path in the bipartite digraph between V1 and V2.

    Only edges running between the sides are considered. The priority order
    defaults to ascending label. When every pair of k-subsets of the sides
    has an edge in both directions, the stack at the first |S| = |T| moment
    has at least 2t - 4k + 4 vertices, i.e. a path of >= 2t - 4k + 3 edges;
    the returned witness is the best stack observed, never shorter.
    """
    s1, s2 = set(V1), set(V2)
    if s1 & s2:
        raise InvalidParameterError("V1 and V2 must be disjoint")
    if len(s1) != len(s2):
        raise InvalidParameterError("V1 and V2 must have equal size")
    if not s1:
        raise InvalidParameterError("sides must be nonempty")
    both = s1 | s2
    if order is None:
        order = sorted(both)
    else:
        order = list(order)
        if set(order) != both:
            raise InvalidParameterError("order must enumerate V1 and V2 exactly")
    rank = {v: i for i, v in enumerate(order)}
    adj = {
        v: sorted(
            (u for u in G.out_neighbors(v) if (u in s2 if v in s1 else u in s1)),
            key=rank.__getitem__,
        )
        for v in both
    }
    best, trace = _run_dfs(adj, order)
    return PathWitness(best), trace


def _random_dfs_once(G: Digraph, rng: random.Random) -> tuple[int, ...]:
    order = list(range(G.n))
    rng.shuffle(order)
    rank = {v: i for i, v in enumerate(order)}
    adj = {v: sorted(G.out_neighbors(v), key=rank.__getitem__) for v in range(G.n)}
    best, _trace = _run_dfs(adj, order)
    return best


def _better_path(a: Optional[tuple[int, ...]], b: tuple[int, ...]) -> tuple[int, ...]:
    """Deterministic merge: longer wins, ties broken lexicographically."""
    if a is None or len(b) > len(a) or (len(b) == len(a) and b < a):
        return b
    return a


def dfs_long_path(G: Digraph, seed: int, restarts: int = 1) -> PathWitness:
    """Best stack path over randomized DFS orders; always a valid path."""
    if restarts < 1:
        raise InvalidParameterError("restarts must be >= 1")
    rng = random.Random(seed)
    best: Optional[tuple[int, ...]] = None
    for _ in range(restarts):
        best = _better_path(best, _random_dfs_once(G, rng))
    return PathWitness(best)


def best_cycle_on_path(
    G: Digraph, witness: PathWitness, undirected: bool = False
) -> tuple[int, Optional[CycleWitness]]:
    """Longest cycle closable along a path: a segment vs[i..j] plus a back
    edge (vs[j], vs[i]). Returns (0, None) when no segment closes."""
    vs = witness.vertices
    minlen = 3 if undirected else 2
    best = 0
    best_w: Optional[CycleWitness] = None
    for i in range(len(vs)):
        for j in range(len(vs) - 1, i + minlen - 2, -1):
            if j - i + 1 <= best:
                break
            if (vs[j], vs[i]) in G.edges:
                best = j - i + 1
                best_w = CycleWitness(vs[i : j + 1])
                break
    return best, best_w


def dfs_long_cycle(
    G: Digraph, seed: int, restarts: int = 1
) -> tuple[int, Optional[CycleWitness]]:
    """Heuristic cycle finder: close the best cycle along each randomized
    DFS stack path, keep the longest."""
    if restarts < 1:
        raise InvalidParameterError("restarts must be >= 1")
    rng = random.Random(seed)
    best = 0
    best_w: Optional[CycleWitness] = None
    for _ in range(restarts):
        path = PathWitness(_random_dfs_once(G, rng))
        length, wit = best_cycle_on_path(G, path)
        if length > best or (
            length == best and wit is not None and best_w is not None
            and wit.vertices < best_w.vertices
        ):
            best, best_w = length, wit
    return best, best_w


def scc_cycle_upper_bound(G: Digraph) -> int:
    """Max SCC size: every directed cycle fits inside one SCC."""
    return max(len(c) for c in scc_decomposition(G))


def exact_longest_cycle(
    G: Digraph, exact_limit: int = DEFAULT_EXACT_LIMIT, undirected: bool = False
) -> tuple[int, Optional[CycleWitness]]:
    """Exact longest directed cycle via subset DP per SCC.

    Each cycle is anchored at its minimum-label vertex: for every SCC and
    every anchor a in it, the DP runs over the SCC's vertices >= a, so each
    cycle is counted exactly once. Memory is O(2^s * s) per component.

    Returns (0, None) when no qualifying cycle exists. With undirected=True
    the graph is a symmetric undirected encoding: antiparallel 2-cycles are
    excluded and the result is the undirected circumference.
    """
    if G.n > exact_limit:
        raise SizeLimitError(f"exact solver limited to n <= {exact_limit}")
    minlen = 3 if undirected else 2
    best_len = 0
    best_wit: Optional[CycleWitness] = None
    for comp in scc_decomposition(G):
        if len(comp) < max(2, minlen) or len(comp) <= best_len:
            continue
        for ai, anchor in enumerate(comp):
            verts = comp[ai:]
            s = len(verts)
            if s <= best_len:
                break
            local = {v: i for i, v in enumerate(verts)}
            out_local = [0] * s
            in_local = [0] * s
            for i, v in enumerate(verts):
                for u in G.out_neighbors(v):
                    j = local.get(u)
                    if j is not None:
                        out_local[i] |= 1 << j
                        in_local[j] |= 1 << i
            back_mask = in_local[0]  # local vertices with an edge to the anchor
            endpoints = [0] * (1 << s)
            endpoints[1] = 1
            for mask in range(1, 1 << s):
                if not mask & 1:
                    continue
                ep = endpoints[mask]
                if not ep:
                    continue
                popc = mask.bit_count()
                if popc > best_len and popc >= minlen and ep & back_mask:
                    vbit = ep & back_mask
                    vbit &= -vbit
                    best_len = popc
                    best_wit = _reconstruct_cycle(
                        verts, endpoints, in_local, mask, vbit
                    )
                rest = ep
                while rest:
                    vbit = rest & -rest
                    rest ^= vbit
                    ext = out_local[vbit.bit_length() - 1] & ~mask
                    while ext:
                        wbit = ext & -ext
                        ext ^= wbit
                        endpoints[mask | wbit] |= wbit
    return best_len, best_wit


def _reconstruct_cycle(
    verts: list[int], endpoints: list[int], in_local: list[int], mask: int, vbit: int
) -> CycleWitness:
    """Walk the DP table backwards from endpoint `vbit` over `mask`."""
    path_bits = [vbit]
    cur = vbit
    m = mask
    while m != 1:
        m ^= cur
        cand = endpoints[m] & in_local[cur.bit_length() - 1]
        assert cand, "DP table inconsistent"
        cur = cand & -cand
        path_bits.append(cur)
    path_bits.reverse()  # anchor first
    return CycleWitness(tuple(verts[b.bit_length() - 1] for b in path_bits))


def paste_paths_to_cycle(
    G: Digraph,
    paths: Sequence[PathWitness],
    window: int,
    connector: Optional[Iterable[int]] = None,
) -> CycleWitness:
    """Paste vertex-disjoint paths into one directed cycle.

    For each consecutive pair (cyclically) an edge is sought from the last
    `window` vertices of one path to the first `window` vertices of the
    next, preferring the latest tail and earliest head so as little as
    possible is trimmed. When `connector` is given, the final junction must
    route through a single connector vertex instead (in-edge from the last
    path's window, out-edge to the first path's window).

    Raises PasteFailureError naming the first junction with no usable edge.
    """
    if window < 1:
        raise InvalidParameterError("window must be >= 1")
    if not paths:
        raise InvalidParameterError("need at least one path")
    seen: set[int] = set()
    for pw in paths:
        vs = set(pw.vertices)
        if vs & seen:
            raise InvalidParameterError("paths must be vertex-disjoint")
        seen |= vs
    connector_set: Optional[list[int]] = None
    if connector is not None:
        connector_set = sorted(set(connector) - seen)
        if not connector_set:
            raise InvalidParameterError("connector has no usable vertices")

    m = len(paths)
    starts = [0] * m
    ends = [len(p.vertices) - 1 for p in paths]
    connector_vertex: Optional[int] = None

    for q in range(m):
        tail = paths[q].vertices
        nxt = (q + 1) % m
        head = paths[nxt].vertices
        tail_idxs = range(len(tail) - 1, max(-1, len(tail) - 1 - window), -1)
        head_idxs = range(0, min(window, len(head)))
        found = False
        if connector_set is not None and q == m - 1:
            for i in tail_idxs:
                for j in head_idxs:
                    for c in connector_set:
                        if (tail[i], c) in G.edges and (c, head[j]) in G.edges:
                            ends[q], starts[nxt] = i, j
                            connector_vertex = c
                            found = True
                            break
                    if found:
                        break
                if found:
                    break
        else:
            for i in tail_idxs:
                for j in head_idxs:
                    if (tail[i], head[j]) in G.edges:
                        ends[q], starts[nxt] = i, j
                        found = True
                        break
                if found:
                    break
        if not found:
            raise PasteFailureError(q)

    for q in range(m):
        if starts[q] > ends[q]:
            raise PasteFailureError(q, f"trims crossed on path {q}")

    cycle: list[int] = []
    for q in range(m):
        cycle.extend(paths[q].vertices[starts[q] : ends[q] + 1])
    if connector_vertex is not None:
        cycle.append(connector_vertex)
    witness = CycleWitness(tuple(cycle))
    witness.validate(G)
    return witness


def regular_pair_path(
    G: Digraph,
    U: Iterable[int],
    W: Iterable[int],
    delta: float,
    p: float,
    mode: str = "exact",
    trials: int = 0,
    seed: int = 0,
    exact_limit: int = 12,
) -> PathWitness:
    """Long path in a regular pair: verify bi-density >= 2*delta*p, derive
    the expansion bound k <= ceil(delta * t) from regularity, run the
    bipartite DFS, and drop a leading W-vertex so the path starts in U.

    When the exact regularity check passes, the result is asserted to have
    length >= 2t - 4*ceil(delta*t) + 2 (equal to (1-2*delta)*2t + 2 when
    delta*t is an integer).
    """
    tU, tW = sorted(set(U)), sorted(set(W))
    if len(tU) != len(tW):
        raise InvalidParameterError("U and W must have equal size")
    t = len(tU)
    check = regular_pair_check(
        G, tU, tW, delta, p, mode=mode, trials=trials, seed=seed,
        exact_limit=exact_limit,
    )
    threshold = 2 * delta * p
    if check.edge_density_uw < threshold:
        raise PreconditionFailure(
            f"bi-density below {threshold}: U->W density {check.edge_density_uw}"
        )
    if check.edge_density_wu < threshold:
        raise PreconditionFailure(
            f"bi-density below {threshold}: W->U density {check.edge_density_wu}"
        )
    witness, _trace = dfs_long_path_bipartite(G, tU, tW)
    if witness.vertices and witness.vertices[0] in set(tW) and len(witness.vertices) > 1:
        witness = PathWitness(witness.vertices[1:])
    if mode == "exact" and check.regular:
        k = math.ceil(delta * t - 1e-9)
        bound = 2 * t - 4 * k + 2
        if witness.length < bound:
            raise AssertionError(
                f"regular-pair path length {witness.length} below bound {bound}"
            )
    return witness
