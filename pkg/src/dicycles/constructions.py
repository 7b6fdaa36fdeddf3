"""Adversarial constructions: acyclic split, layered subgraph, Woodall
extremal graph, and a random-deletion baseline.

Undirected graphs are encoded as symmetric digraphs (both directions of
every edge present); the finders module knows to compute circumference on
that encoding without counting antiparallel 2-cycles.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DomainError, InvalidParameterError
from .graph import Digraph
from .thresholds import w


@dataclass(frozen=True)
class LayeredPartition:
    """Ordered vertex classes of the layered adversary.

    The first k classes have equal size floor((1-alpha)*n); the last class
    holds the remaining vertices (intended size w(alpha)*n, realized up to
    rounding). Kept edges run within a class or forward between classes.
    """

    classes: tuple[frozenset[int], ...]

    def class_index(self) -> dict[int, int]:
        idx: dict[int, int] = {}
        for i, cls in enumerate(self.classes):
            for v in cls:
                idx[v] = i
        return idx

    @property
    def max_class_size(self) -> int:
        return max(len(c) for c in self.classes)

    def validate(self, n: int) -> None:
        seen: set[int] = set()
        for cls in self.classes:
            if seen & cls:
                raise ValueError("classes overlap")
            seen |= cls
        if seen != set(range(n)):
            raise ValueError("classes do not partition the vertex set")


def check_permutation(sigma: Sequence[int], n: int) -> None:
    if len(sigma) != n or sorted(sigma) != list(range(n)):
        raise InvalidParameterError("sigma must be a permutation of 0..n-1")


def acyclic_split(G: Digraph, sigma: Sequence[int]) -> tuple[Digraph, Digraph]:
    """Split E(G) by a vertex permutation into two acyclic halves.

    G1 gets the edges with sigma(u) > sigma(v), G2 the rest. Every cycle must
    cross both orientations, so each half is acyclic, and the larger half
    keeps at least |E|/2 edges.
    """
    check_permutation(sigma, G.n)
    down = [e for e in G.edges if sigma[e[0]] > sigma[e[1]]]
    up = [e for e in G.edges if sigma[e[0]] < sigma[e[1]]]
    return Digraph(G.n, down), Digraph(G.n, up)


def layered_subgraph(
    G: Digraph, alpha: float, seed: Optional[int] = None
) -> tuple[Digraph, LayeredPartition]:
    """The layered adversary: order the vertices into k classes of size
    floor((1-alpha)*n) plus a remainder class, keep within-class and
    forward-between-class edges, delete all backward edges.

    Every surviving cycle stays inside one class, so the longest directed
    cycle is at most the maximum class size. Assignment is by label order;
    pass a seed for a shuffled assignment.
    """
    n = G.n
    a = float(alpha)
    if not (0 <= a < 1):
        raise DomainError(f"alpha must lie in [0, 1), got {alpha}")
    size = math.floor((1 - a) * n + 1e-9)
    if size < 1:
        raise DomainError(f"class size floor((1-alpha)*n) = {size} is degenerate")
    k = math.floor(1 / (1 - a) + 1e-9)

    order = list(range(n))
    if seed is not None:
        random.Random(seed).shuffle(order)
    classes: list[frozenset[int]] = []
    pos = 0
    for _ in range(k):
        if pos + size > n:
            break
        classes.append(frozenset(order[pos : pos + size]))
        pos += size
    if pos < n:
        classes.append(frozenset(order[pos:]))
    partition = LayeredPartition(tuple(classes))

    idx = partition.class_index()
    kept = [(u, v) for (u, v) in G.edges if idx[u] <= idx[v]]
    return Digraph(n, kept), partition


def expected_kept_fraction(alpha: float) -> float:
    """Asymptotic fraction of edges the layered adversary keeps:
    1 - (1 - w(alpha)) * (alpha + w(alpha)) / 2."""
    wa = float(w(alpha))
    return 1 - (1 - wa) * (float(alpha) + wa) / 2


def woodall_extremal(n: int, ell: int) -> Digraph:
    """The extremal graph showing the Woodall bound is tight, encoded as a
    symmetric digraph: floor((n-1)/(ell-2)) disjoint cliques of size ell-2,
    one clique of size (n-1) mod (ell-2), and one universal vertex.

    Its circumference is at most ell-1 and its undirected edge count is
    woodall_bound(n, ell) - 1.
    """
    if not (3 <= ell <= n):
        raise DomainError(f"need 3 <= ell <= n, got ell={ell}, n={n}")
    c = ell - 2
    q = (n - 1) // c
    universal = n - 1
    undirected: list[tuple[int, int]] = []
    blocks = [list(range(i * c, (i + 1) * c)) for i in range(q)]
    rest = list(range(q * c, n - 1))
    if rest:
        blocks.append(rest)
    for block in blocks:
        for i, u in enumerate(block):
            for v in block[i + 1 :]:
                undirected.append((u, v))
    for v in range(n - 1):
        undirected.append((universal, v))
    edges = [(u, v) for (u, v) in undirected] + [(v, u) for (u, v) in undirected]
    return Digraph(n, edges)


def random_delete(G: Digraph, keep_fraction: float, seed: int) -> Digraph:
    """Keep a uniformly random subset of exactly floor(keep_fraction * |E|)
    edges; deterministic per seed."""
    if not (0 <= keep_fraction <= 1):
        raise InvalidParameterError(f"keep_fraction must lie in [0,1], got {keep_fraction}")
    m_keep = math.floor(keep_fraction * G.m + 1e-9)
    rng = random.Random(seed)
    kept = rng.sample(sorted(G.edges), m_keep)
    return Digraph(G.n, kept)
