"""Directed graph core: representation, random generation, counting, SCCs, I/O.

Graphs are simple digraphs on vertices 0..n-1. Antiparallel edges are
allowed, self-loops are not. A `Digraph` is immutable after construction
and safe to share between threads.

Randomness comes from `random.Random`, the stdlib Mersenne Twister, which
is portable: equal seeds reproduce bit-identical graphs on every platform.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GraphParseError, InvalidParameterError


class Digraph:
    """Immutable simple directed graph on n labeled vertices."""

    __slots__ = ("n", "edges", "_out_masks", "_in_masks", "_out_lists")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise InvalidParameterError("n must be >= 1")
        edge_set = frozenset((int(u), int(v)) for u, v in edges)
        for u, v in edge_set:
            if u == v:
                raise InvalidParameterError(f"self-loop ({u},{v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u},{v}) out of range [0,{n})")
        self.n = n
        self.edges = edge_set
        self._out_masks: list[int] | None = None
        self._in_masks: list[int] | None = None
        self._out_lists: list[tuple[int, ...]] | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def out_masks(self) -> list[int]:
        """Per-vertex bitmask of out-neighbors (arbitrary n; Python ints)."""
        if self._out_masks is None:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u] |= 1 << v
            self._out_masks = masks
        return self._out_masks

    def in_masks(self) -> list[int]:
        if self._in_masks is None:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[v] |= 1 << u
            self._in_masks = masks
        return self._in_masks

    def out_neighbors(self, u: int) -> tuple[int, ...]:
        """Out-neighbors of u in ascending label order."""
        if self._out_lists is None:
            lists: list[list[int]] = [[] for _ in range(self.n)]
            for a, b in sorted(self.edges):
                lists[a].append(b)
            self._out_lists = [tuple(l) for l in lists]
        return self._out_lists[u]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class PathWitness:
    """A directed path given by its vertex sequence; length counts edges."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def validate(self, G: Digraph) -> None:
        """Independent re-check of the path invariant against G."""
        vs = self.vertices
        if len(vs) < 1:
            raise ValueError("path witness must contain at least one vertex")
        if len(set(vs)) != len(vs):
            raise ValueError("path witness repeats a vertex")
        for v in vs:
            if not (0 <= v < G.n):
                raise ValueError(f"vertex {v} out of range")
        for a, b in zip(vs, vs[1:]):
            if (a, b) not in G.edges:
                raise ValueError(f"missing edge ({a},{b})")


@dataclass(frozen=True)
class CycleWitness:
    """A directed cycle given by its vertex sequence; length counts vertices."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def validate(self, G: Digraph, undirected: bool = False) -> None:
        """Independent re-check of the cycle invariant against G.

        With undirected=True the graph is a symmetric encoding of an
        undirected graph and 2-cycles built from an antiparallel pair are
        rejected (they reuse one undirected edge).
        """
        vs = self.vertices
        minimum = 3 if undirected else 2
        if len(vs) < minimum:
            raise ValueError(f"cycle witness needs >= {minimum} vertices")
        if len(set(vs)) != len(vs):
            raise ValueError("cycle witness repeats a vertex")
        for v in vs:
            if not (0 <= v < G.n):
                raise ValueError(f"vertex {v} out of range")
        for a, b in zip(vs, vs[1:] + vs[:1]):
            if (a, b) not in G.edges:
                raise ValueError(f"missing edge ({a},{b})")


def generate_random(n: int, p: float, seed: int) -> Digraph:
    """Sample a random digraph: each ordered pair (x,y), x != y, is an edge
    independently with probability p.

    The two directions of each unordered pair are drawn one after the other,
    in ascending pair order, so equal seeds give bit-identical graphs.
    """
    if not (0.0 <= p <= 1.0):
        raise InvalidParameterError(f"p must lie in [0,1], got {p}")
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    rng = random.Random(seed)
    edges = []
    for x in range(n):
        for y in range(x + 1, n):
            if rng.random() < p:
                edges.append((x, y))
            if rng.random() < p:
                edges.append((y, x))
    return Digraph(n, edges)


def vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def edge_count_between(G: Digraph, A: Iterable[int], B: Iterable[int]) -> int:
    """Number of edges directed from A to B; A and B must be disjoint."""
    sa, sb = set(A), set(B)
    if sa & sb:
        raise InvalidParameterError("A and B must be disjoint")
    for v in sa | sb:
        if not (0 <= v < G.n):
            raise InvalidParameterError(f"vertex {v} out of range")
    masks = G.out_masks()
    bmask = vertex_mask(sb)
    return sum((masks[u] & bmask).bit_count() for u in sa)


def density(G: Digraph) -> float:
    """Edge density |E| / n^2."""
    return G.m / (G.n * G.n)


def scc_decomposition(G: Digraph) -> list[list[int]]:
    """Strongly connected components (iterative Tarjan).

    Returns a partition of the vertices; each component sorted ascending,
    components ordered by their minimum vertex.
    """
    n = G.n
    index = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    comps: list[list[int]] = []

    for root in range(n):
        if index[root] != -1:
            continue
        # (vertex, iterator position) work stack
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            neighbors = G.out_neighbors(v)
            advanced = False
            for i in range(pi, len(neighbors)):
                u = neighbors[i]
                if index[u] == -1:
                    work.append((v, i + 1))
                    work.append((u, 0))
                    advanced = True
                    break
                if on_stack[u]:
                    lowlink[v] = min(lowlink[v], index[u])
            if advanced:
                continue
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp.append(u)
                    if u == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
    comps.sort(key=lambda c: c[0])
    return comps


def serialize(G: Digraph) -> str:
    """Text form: header "n m", then one "u v" line per edge, sorted."""
    lines = [f"{G.n} {G.m}"]
    for u, v in sorted(G.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def parse(text: str) -> Digraph:
    """Inverse of serialize. Lines starting with '#' are comments.

    Raises GraphParseError (naming the line) on a malformed header,
    out-of-range endpoint, self-loop, or duplicate edge.
    """
    n = -1
    m = -1
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    header_done = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if not header_done:
            if len(parts) != 2:
                raise GraphParseError("header must be 'n m'", line_no)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphParseError("header must be two integers", line_no)
            if n < 1 or m < 0:
                raise GraphParseError(f"invalid header values n={n} m={m}", line_no)
            header_done = True
            continue
        if len(parts) != 2:
            raise GraphParseError("edge line must be 'u v'", line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError("edge endpoints must be integers", line_no)
        if u == v:
            raise GraphParseError(f"self-loop {u} {v}", line_no)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"endpoint out of range in '{u} {v}'", line_no)
        if (u, v) in seen:
            raise GraphParseError(f"duplicate edge {u} {v}", line_no)
        seen.add((u, v))
        edges.append((u, v))
    if not header_done:
        raise GraphParseError("missing header", 1)
    if len(edges) != m:
        raise GraphParseError(f"header declares m={m} but found {len(edges)} edges", 1)
    return Digraph(n, edges)


def induced_subgraph_edges(G: Digraph, keep: Sequence[tuple[int, int]]) -> Digraph:
    """New graph on the same vertex set with only the given edges."""
    return Digraph(G.n, keep)
