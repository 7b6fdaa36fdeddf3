"""Pseudorandomness witnesses: jumbledness, boundedness, regular pairs, expansion.

Exact modes enumerate every qualifying set pair and certify the reported
value. Sampled modes only examine random pairs, so they are refutation-only:
a sampled jumbledness witness is a lower bound on the exact one, and a
sampled "bounded"/"regular" verdict means "no violation found", never a
certificate. Every report records its mode.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import (
    InvalidParameterError,
    SizeLimitError,
    UndefinedDensityError,
)
from .graph import Digraph, density, edge_count_between, vertex_mask

DEFAULT_EXACT_LIMIT = 12


@dataclass(frozen=True)
class PseudorandomnessReport:
    """Witnessed jumbledness parameter r with the worst pair found."""

    p: float
    r_witnessed: float
    mode: str  # "exact" | "sampled"
    trials: int
    worst_pair: Optional[tuple[frozenset[int], frozenset[int], float]]
    degenerate_density: bool = False


@dataclass(frozen=True)
class BoundednessReport:
    delta: float
    D: float
    p: float
    bounded: bool
    mode: str
    trials: int
    worst_pair: Optional[tuple[frozenset[int], frozenset[int], int, float]]
    # worst_pair: (U, W, e(U,W), bound Dp|U||W|); worst by excess e - bound


@dataclass(frozen=True)
class RegularityCheck:
    delta: float
    p: float
    d_p_uw: float
    d_p_wu: float
    edge_density_uw: float
    edge_density_wu: float
    regular: bool
    mode: str
    trials: int
    worst_subpair: Optional[tuple[frozenset[int], frozenset[int], str, float]]
    # worst_subpair: (U', W', direction "U->W"|"W->U", deviation)


@dataclass(frozen=True)
class ExpansionCertificate:
    t: int
    k: int  # t+1 means the expansion hypothesis fails for every k <= t
    mode: str
    trials: int = 0
    violating_pair: Optional[tuple[frozenset[int], frozenset[int]]] = None
    # In exact mode with k >= 2, violating_pair is a (k-1)-sized pair with a
    # missing direction; in sampled mode, the largest violating pair found.


def _deviation(e: int, p: float, a: int, b: int, n: int) -> float:
    """|e(A,B) - p|A||B|| / (|A| sqrt(pn)); raw |e| when p == 0."""
    if p == 0.0:
        return float(e)
    return abs(e - p * a * b) / (a * math.sqrt(p * n))


def witnessed_r(
    G: Digraph,
    mode: str = "exact",
    trials: int = 0,
    seed: int = 0,
    p: Optional[float] = None,
    exact_limit: int = DEFAULT_EXACT_LIMIT,
) -> PseudorandomnessReport:
    """Jumbledness witness: max over examined disjoint equal-size pairs (A,B)
    of |e(A,B) - p|A||B|| / (|A| sqrt(pn)).

    p defaults to the measured density of G. Exact mode enumerates all pairs
    with |A| = |B| in [1, n//2]; sampled mode draws `trials` uniform pairs
    and yields a lower bound.
    """
    n = G.n
    if p is None:
        p = density(G)
    if p < 0:
        raise InvalidParameterError("p must be nonnegative")
    best = 0.0
    worst: Optional[tuple[frozenset[int], frozenset[int], float]] = None
    degenerate = False
    masks = G.out_masks()

    def dev_masked(a_verts: tuple[int, ...], b_mask: int, b_size: int) -> float:
        e = sum((masks[u] & b_mask).bit_count() for u in a_verts)
        nonlocal degenerate
        if p == 0.0 and e > 0:
            degenerate = True
        return _deviation(e, p, len(a_verts), b_size, n)

    if mode == "exact":
        if n > exact_limit:
            raise SizeLimitError(f"exact mode limited to n <= {exact_limit}")
        universe = range(n)
        for a in range(1, n // 2 + 1):
            for A in combinations(universe, a):
                rest = [v for v in universe if v not in A]
                for B in combinations(rest, a):
                    d = dev_masked(A, vertex_mask(B), a)
                    if d > best or worst is None:
                        best = d
                        worst = (frozenset(A), frozenset(B), d)
        return PseudorandomnessReport(p, best, "exact", 0, worst, degenerate)

    if mode != "sampled":
        raise InvalidParameterError(f"unknown mode {mode!r}")
    if trials < 1:
        raise InvalidParameterError("sampled mode requires trials >= 1")
    rng = random.Random(seed)
    for _ in range(trials):
        a = rng.randint(1, max(1, n // 2))
        chosen = rng.sample(range(n), 2 * a)
        A, B = tuple(chosen[:a]), chosen[a:]
        d = dev_masked(A, vertex_mask(B), a)
        if d > best or worst is None:
            best = d
            worst = (frozenset(A), frozenset(B), d)
    return PseudorandomnessReport(p, best, "sampled", trials, worst, degenerate)


def sampled_r_at_size(
    G: Digraph, size: int, trials: int, seed: int, p: Optional[float] = None
) -> float:
    """Sampled jumbledness lower bound restricted to pairs of one fixed size."""
    n = G.n
    if not (1 <= size <= n // 2):
        raise InvalidParameterError("size must lie in [1, n//2]")
    if p is None:
        p = density(G)
    rng = random.Random(seed)
    masks = G.out_masks()
    best = 0.0
    for _ in range(trials):
        chosen = rng.sample(range(n), 2 * size)
        bmask = vertex_mask(chosen[size:])
        e = sum((masks[u] & bmask).bit_count() for u in chosen[:size])
        best = max(best, _deviation(e, p, size, size, n))
    return best


def _size_floor(fraction: float, total: int) -> int:
    """Smallest integer size satisfying size >= fraction * total."""
    return max(1, math.ceil(fraction * total - 1e-9))


def is_bounded(
    G: Digraph,
    delta: float,
    D: float,
    p: float,
    mode: str = "exact",
    trials: int = 0,
    seed: int = 0,
    exact_limit: int = DEFAULT_EXACT_LIMIT,
) -> BoundednessReport:
    """Check e(U,W) <= D p |U||W| for all examined disjoint pairs with
    |U|,|W| >= delta*n. Sampled mode can only refute."""
    if not (0 < delta <= 1):
        raise InvalidParameterError("delta must lie in (0, 1]")
    if D <= 0:
        raise InvalidParameterError("D must be positive")
    if p < 0:
        raise InvalidParameterError("p must be nonnegative")
    n = G.n
    floor = _size_floor(delta, n)
    masks = G.out_masks()
    worst: Optional[tuple[frozenset[int], frozenset[int], int, float]] = None
    worst_excess = -math.inf
    bounded = True

    def consider(U: Iterable[int], W: Iterable[int]) -> None:
        nonlocal worst, worst_excess, bounded
        U, W = tuple(U), tuple(W)
        wmask = vertex_mask(W)
        e = sum((masks[u] & wmask).bit_count() for u in U)
        bound = D * p * len(U) * len(W)
        excess = e - bound
        if excess > worst_excess:
            worst_excess = excess
            worst = (frozenset(U), frozenset(W), e, bound)
        if e > bound:
            bounded = False

    if mode == "exact":
        if n > exact_limit:
            raise SizeLimitError(f"exact mode limited to n <= {exact_limit}")
        universe = range(n)
        for a in range(floor, n - floor + 1):
            for U in combinations(universe, a):
                rest = [v for v in universe if v not in U]
                for b in range(floor, len(rest) + 1):
                    for W in combinations(rest, b):
                        consider(U, W)
        return BoundednessReport(delta, D, p, bounded, "exact", 0, worst)

    if mode != "sampled":
        raise InvalidParameterError(f"unknown mode {mode!r}")
    if trials < 1:
        raise InvalidParameterError("sampled mode requires trials >= 1")
    if 2 * floor > n:
        return BoundednessReport(delta, D, p, True, "sampled", trials, None)
    rng = random.Random(seed)
    for _ in range(trials):
        a = rng.randint(floor, n - floor)
        b = rng.randint(floor, n - a)
        chosen = rng.sample(range(n), a + b)
        consider(chosen[:a], chosen[a:])
    return BoundednessReport(delta, D, p, bounded, "sampled", trials, worst)


def p_density(G: Digraph, U: Iterable[int], W: Iterable[int], p: float) -> float:
    """Directed p-density e(U,W) / (p |U||W|)."""
    su, sw = set(U), set(W)
    if not su or not sw:
        raise InvalidParameterError("U and W must be nonempty")
    if p == 0:
        raise UndefinedDensityError("p-density undefined for p = 0")
    return edge_count_between(G, su, sw) / (p * len(su) * len(sw))


def _directed_deviations_exact(
    masks: list[int],
    U: tuple[int, ...],
    W: tuple[int, ...],
    floor_u: int,
    floor_w: int,
    p: float,
    base: float,
):
    """Yield (U', W', deviation) for all qualifying subpairs, direction U->W.

    Subset sums over W' reuse a DP over W-masks per choice of U'.
    """
    w_count = len(W)
    for su in range(1, 1 << len(U)):
        usize = su.bit_count()
        if usize < floor_u:
            continue
        uverts = [U[i] for i in range(len(U)) if su >> i & 1]
        col = [sum(masks[u] >> W[j] & 1 for u in uverts) for j in range(w_count)]
        esum = [0] * (1 << w_count)
        for sw in range(1, 1 << w_count):
            low = (sw & -sw).bit_length() - 1
            esum[sw] = esum[sw & (sw - 1)] + col[low]
            wsize = sw.bit_count()
            if wsize < floor_w:
                continue
            d = esum[sw] / (p * usize * wsize)
            yield (
                frozenset(uverts),
                frozenset(W[j] for j in range(w_count) if sw >> j & 1),
                abs(base - d),
            )


def regular_pair_check(
    G: Digraph,
    U: Iterable[int],
    W: Iterable[int],
    delta: float,
    p: float,
    mode: str = "exact",
    trials: int = 0,
    seed: int = 0,
    exact_limit: int = DEFAULT_EXACT_LIMIT,
) -> RegularityCheck:
    """(delta,p)-regularity of the pair (U,W): every subpair with
    |U'| >= delta|U|, |W'| >= delta|W| has directed p-density within delta of
    the pair's, in both directions.

    Also reports the plain edge densities in both directions, which drive the
    bi-density >= 2*delta*p hypothesis used by the path finders.
    """
    tU, tW = tuple(sorted(set(U))), tuple(sorted(set(W)))
    if set(tU) & set(tW):
        raise InvalidParameterError("U and W must be disjoint")
    if not (0 < delta <= 1):
        raise InvalidParameterError("delta must lie in (0, 1]")
    if p <= 0:
        raise UndefinedDensityError("regularity check needs p > 0")
    masks = G.out_masks()
    e_uw = edge_count_between(G, tU, tW)
    e_wu = edge_count_between(G, tW, tU)
    d_uw = e_uw / (p * len(tU) * len(tW))
    d_wu = e_wu / (p * len(tU) * len(tW))
    ed_uw = e_uw / (len(tU) * len(tW))
    ed_wu = e_wu / (len(tU) * len(tW))
    floor_u = _size_floor(delta, len(tU))
    floor_w = _size_floor(delta, len(tW))

    worst: Optional[tuple[frozenset[int], frozenset[int], str, float]] = None
    worst_dev = -1.0
    regular = True

    def consider(sub_u, sub_w, direction: str, dev: float) -> None:
        nonlocal worst, worst_dev, regular
        if dev > worst_dev:
            worst_dev = dev
            worst = (sub_u, sub_w, direction, dev)
        if dev >= delta:
            regular = False

    if mode == "exact":
        if len(tU) > exact_limit or len(tW) > exact_limit:
            raise SizeLimitError(f"exact mode limited to sides <= {exact_limit}")
        for su, sw, dev in _directed_deviations_exact(
            masks, tU, tW, floor_u, floor_w, p, d_uw
        ):
            consider(su, sw, "U->W", dev)
        for sw, su, dev in _directed_deviations_exact(
            masks, tW, tU, floor_w, floor_u, p, d_wu
        ):
            consider(su, sw, "W->U", dev)
        return RegularityCheck(
            delta, p, d_uw, d_wu, ed_uw, ed_wu, regular, "exact", 0, worst
        )

    if mode != "sampled":
        raise InvalidParameterError(f"unknown mode {mode!r}")
    if trials < 1:
        raise InvalidParameterError("sampled mode requires trials >= 1")
    rng = random.Random(seed)
    for _ in range(trials):
        a = rng.randint(floor_u, len(tU))
        b = rng.randint(floor_w, len(tW))
        sub_u = frozenset(rng.sample(tU, a))
        sub_w = frozenset(rng.sample(tW, b))
        e1 = sum((masks[u] & vertex_mask(sub_w)).bit_count() for u in sub_u)
        e2 = sum((masks[u] & vertex_mask(sub_u)).bit_count() for u in sub_w)
        consider(sub_u, sub_w, "U->W", abs(d_uw - e1 / (p * a * b)))
        consider(sub_u, sub_w, "W->U", abs(d_wu - e2 / (p * a * b)))
    return RegularityCheck(
        delta, p, d_uw, d_wu, ed_uw, ed_wu, regular, "sampled", trials, worst
    )


def expansion_parameter(
    G: Digraph,
    V1: Iterable[int],
    V2: Iterable[int],
    mode: str = "exact",
    trials: int = 0,
    seed: int = 0,
    exact_limit: int = DEFAULT_EXACT_LIMIT,
) -> ExpansionCertificate:
    """Bipartite expansion parameter: minimum k such that every pair of
    k-subsets A of V1 and B of V2 has at least one edge in each direction.

    Exact mode enumerates k = 1, 2, ... up to t; k = t+1 reports that no
    k <= t works. Sampled mode returns a lower bound: the largest k with a
    violating pair found, plus one.
    """
    t1, t2 = tuple(sorted(set(V1))), tuple(sorted(set(V2)))
    if set(t1) & set(t2):
        raise InvalidParameterError("V1 and V2 must be disjoint")
    if len(t1) != len(t2):
        raise InvalidParameterError("V1 and V2 must have equal size")
    t = len(t1)
    masks = G.out_masks()

    def pair_ok(a_union_out: int, b_mask: int, b_union_out: int, a_mask: int) -> bool:
        return bool(a_union_out & b_mask) and bool(b_union_out & a_mask)

    if mode == "exact":
        if t > exact_limit:
            raise SizeLimitError(f"exact mode limited to t <= {exact_limit}")
        prev_violation: Optional[tuple[frozenset[int], frozenset[int]]] = None
        for k in range(1, t + 1):
            a_data = []
            for A in combinations(t1, k):
                ua = 0
                for u in A:
                    ua |= masks[u]
                a_data.append((A, vertex_mask(A), ua))
            b_data = []
            for B in combinations(t2, k):
                ub = 0
                for v in B:
                    ub |= masks[v]
                b_data.append((B, vertex_mask(B), ub))
            violation = None
            for A, amask, ua in a_data:
                for B, bmask, ub in b_data:
                    if not pair_ok(ua, bmask, ub, amask):
                        violation = (frozenset(A), frozenset(B))
                        break
                if violation:
                    break
            if violation is None:
                return ExpansionCertificate(t, k, "exact", 0, prev_violation)
            prev_violation = violation
        return ExpansionCertificate(t, t + 1, "exact", 0, prev_violation)

    if mode != "sampled":
        raise InvalidParameterError(f"unknown mode {mode!r}")
    if trials < 1:
        raise InvalidParameterError("sampled mode requires trials >= 1")
    rng = random.Random(seed)
    largest_violating = 0
    witness: Optional[tuple[frozenset[int], frozenset[int]]] = None
    for _ in range(trials):
        k = rng.randint(1, t)
        A = rng.sample(t1, k)
        B = rng.sample(t2, k)
        ua = 0
        for u in A:
            ua |= masks[u]
        ub = 0
        for v in B:
            ub |= masks[v]
        if not pair_ok(ua, vertex_mask(B), ub, vertex_mask(A)):
            if k > largest_violating:
                largest_violating = k
                witness = (frozenset(A), frozenset(B))
    return ExpansionCertificate(t, largest_violating + 1, "sampled", trials, witness)
