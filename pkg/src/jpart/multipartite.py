"""Good bisections of complete multipartite graphs.

A bisection H of G is *good* if 2*d_H(v) >= d_G(v) - 1 for every vertex.
For G = K_{r_1,...,r_k} with even order a good bisection always exists (split
every part as evenly as possible).  For odd order there is an exact
criterion: writing S1/S0 for the families of odd/even parts, G has a good
bisection iff some family A of parts admits A' subseteq A with

    s(A') = s(A)/2 + (m + 2n - 1)/2,

where s sums part sizes, m = |S1 \\ A| and 0 <= n <= |S0 \\ A|.  The
criterion is constructive: from a witness (A, A', n) one reads off how many
vertices of each part go to each side.

Because vertices inside a part are interchangeable, a bisection of a
complete multipartite graph is determined up to isomorphism by its *count
vector* x, with x_i = |X_i cap V_1|.  The oracles here enumerate count
vectors exhaustively and exist purely to cross-check the criterion and its
edge-deleted variant; they refuse instead of approximating when the space
exceeds ``ORACLE_CAP`` vectors.

Part indices are 1-based throughout, matching the vertex convention.  Part i
occupies the vertex range (sum of earlier sizes, +1 ... +r_i].
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Iterator, Optional, Sequence

from .errors import CounterexampleError
from .graph_core import Bipartition, Bisection, LabeledGraph, bisection_slack, build_graph, max_bisection

ORACLE_CAP = 10**7


@dataclass(frozen=True)
class MultipartiteSpec:
    """Part sizes (r_1, ..., r_k) of a complete multipartite graph."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(r) for r in self.parts))
        if len(self.parts) < 1:
            raise ValueError("at least one part required")
        if any(r < 1 for r in self.parts):
            raise ValueError(f"part sizes must be positive: {self.parts}")

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def order(self) -> int:
        return sum(self.parts)

    def part_range(self, i: int) -> range:
        """Vertices of part i (1-based), as a range of 1-based labels."""
        start = sum(self.parts[: i - 1])
        return range(start + 1, start + self.parts[i - 1] + 1)


@dataclass(frozen=True)
class GoodSubsetWitness:
    """Certificate (A, A', n) for the odd-order good-bisection criterion."""

    a: frozenset[int]
    a_prime: frozenset[int]
    n: int


@dataclass(frozen=True)
class CrossingCounts:
    """Per-part sizes of side V1; canonical form of a bisection."""

    x: tuple[int, ...]


@dataclass(frozen=True)
class MinusEdgeAssignment:
    """Good bisection of G minus one edge: totals per part plus the sides of
    the two endpoints u (first part) and w (second part) of the deleted edge."""

    counts: tuple[int, ...]
    u_side: int
    w_side: int


def complete_multipartite(spec: MultipartiteSpec) -> LabeledGraph:
    """K_{r_1,...,r_k}: edges exactly between distinct parts."""
    edges = []
    for i in range(1, spec.k + 1):
        for j in range(i + 1, spec.k + 1):
            for u in spec.part_range(i):
                for v in spec.part_range(j):
                    edges.append((u, v))
    return build_graph(spec.order, edges)


def _counts_good(parts: Sequence[int], x: Sequence[int], floor_variant: bool = False) -> bool:
    """Does the count vector induce a good (or floor-good) bisection?"""
    total = sum(parts)
    s1 = sum(x)
    s2 = total - s1
    for r, xi in zip(parts, x):
        dg = total - r
        need = 2 * ((dg - 1) // 2) if floor_variant else dg - 1
        if xi >= 1 and 2 * (s2 - (r - xi)) < need:
            return False
        if xi <= r - 1 and 2 * (s1 - xi) < need:
            return False
    return True


def bisection_from_counts(spec: MultipartiteSpec, counts: CrossingCounts) -> Bisection:
    """Concrete bisection: the first x_i vertices of each part go to side 1."""
    x = counts.x
    if len(x) != spec.k or any(not 0 <= xi <= r for xi, r in zip(x, spec.parts)):
        raise ValueError(f"count vector {x} invalid for parts {spec.parts}")
    if abs(2 * sum(x) - spec.order) > 1:
        raise ValueError(f"count vector {x} is not balanced for order {spec.order}")
    v1 = []
    for i in range(1, spec.k + 1):
        v1.extend(list(spec.part_range(i))[: x[i - 1]])
    P = Bipartition.from_v1(spec.order, v1)
    return max_bisection(complete_multipartite(spec), P)


def _count_vectors(parts: Sequence[int], sums: set[int]) -> Iterator[tuple[int, ...]]:
    """All count vectors with total in ``sums``, most-balanced entries first.

    The per-coordinate order visits values near r_i/2 before extreme ones, so
    searches that stop at the first hit find balanced witnesses quickly; the
    order is fixed, which keeps results deterministic.
    """
    k = len(parts)
    lo, hi = min(sums), max(sums)
    suffix = [0] * (k + 1)
    for i in reversed(range(k)):
        suffix[i] = suffix[i + 1] + parts[i]
    orders = [
        sorted(range(r + 1), key=lambda v, r=r: (abs(2 * v - r), v)) for r in parts
    ]
    x = [0] * k

    def rec(i: int, acc: int) -> Iterator[tuple[int, ...]]:
        if i == k:
            if acc in sums:
                yield tuple(x)
            return
        for v in orders[i]:
            if acc + v > hi or acc + v + suffix[i + 1] < lo:
                continue
            x[i] = v
            yield from rec(i + 1, acc + v)

    yield from rec(0, 0)


def _check_cap(space: int, what: str) -> None:
    if space > ORACLE_CAP:
        raise ValueError(
            f"{what} would enumerate {space} vectors, above the cap {ORACLE_CAP}; "
            "the oracle exists for verification and refuses rather than sampling"
        )


def good_bisection_oracle(spec: MultipartiteSpec) -> Optional[CrossingCounts]:
    """Exhaustively search count vectors for a good bisection."""
    _check_cap(prod(r + 1 for r in spec.parts), "good_bisection_oracle")
    total = spec.order
    sums = {total // 2, (total + 1) // 2}
    for x in _count_vectors(spec.parts, sums):
        if _counts_good(spec.parts, x):
            return CrossingCounts(x)
    return None


def even_order_good_bisection(spec: MultipartiteSpec) -> Bisection:
    """Good bisection for even total order: split every part as evenly as
    possible, alternating the surplus vertex of odd parts between the sides."""
    if spec.order % 2 != 0:
        raise ValueError(f"total order {spec.order} is odd; use the witness search")
    x = []
    flip = True
    for r in spec.parts:
        if r % 2 == 0:
            x.append(r // 2)
        else:
            x.append((r + 1) // 2 if flip else r // 2)
            flip = not flip
    counts = CrossingCounts(tuple(x))
    H = bisection_from_counts(spec, counts)
    graph = complete_multipartite(spec)
    slacks = bisection_slack(graph, H)
    if min(slacks) < 0:
        raise CounterexampleError(
            "even-order split failed to be good", spec=spec.parts, slacks=slacks,
        )
    return H


def _lex_first_subset_sum(
    sizes: Sequence[int], indices: Sequence[int], target: int
) -> Optional[list[int]]:
    """Lexicographically-first subset of ``indices`` whose sizes sum to target."""
    k = len(sizes)
    ach = [0] * (k + 1)
    ach[k] = 1
    for j in reversed(range(k)):
        ach[j] = ach[j + 1] | (ach[j + 1] << sizes[j])
    if target < 0 or not (ach[0] >> target) & 1:
        return None
    chosen: list[int] = []
    t = target
    for j in range(k):
        if t == 0:
            break
        if sizes[j] <= t and (ach[j + 1] >> (t - sizes[j])) & 1:
            chosen.append(indices[j])
            t -= sizes[j]
    if t != 0:
        raise AssertionError("subset-sum reconstruction lost feasibility")
    return chosen


def good_subset_search(spec: MultipartiteSpec) -> Optional[GoodSubsetWitness]:
    """Find a witness (A, A', n) for odd total order, or None.

    Search order is deterministic: A by increasing size then lexicographic,
    n ascending, A' the lexicographically-first subset with the required sum.
    Targets that are not integral are skipped rather than rounded.
    """
    if spec.order % 2 == 0:
        raise ValueError(
            f"total order {spec.order} is even; even_order_good_bisection applies"
        )
    parts = spec.parts
    odd = [i for i in range(1, spec.k + 1) if parts[i - 1] % 2 == 1]
    even = [i for i in range(1, spec.k + 1) if parts[i - 1] % 2 == 0]
    for size in range(spec.k + 1):
        for a in combinations(range(1, spec.k + 1), size):
            a_set = set(a)
            m = sum(1 for i in odd if i not in a_set)
            n_max = sum(1 for i in even if i not in a_set)
            s_a = sum(parts[i - 1] for i in a)
            for n in range(n_max + 1):
                numerator = s_a + m + 2 * n - 1
                if numerator % 2 != 0:
                    continue
                target = numerator // 2
                if not 0 <= target <= s_a:
                    continue
                sizes = [parts[i - 1] for i in a]
                a_prime = _lex_first_subset_sum(sizes, list(a), target)
                if a_prime is not None:
                    return GoodSubsetWitness(
                        a=frozenset(a), a_prime=frozenset(a_prime), n=n
                    )
    return None


def _witness_counts(spec: MultipartiteSpec, w: GoodSubsetWitness) -> CrossingCounts:
    parts = spec.parts
    if not w.a_prime <= w.a or not w.a <= set(range(1, spec.k + 1)):
        raise ValueError("witness sets are not nested part-index sets")
    odd_out = [i for i in range(1, spec.k + 1) if parts[i - 1] % 2 == 1 and i not in w.a]
    even_out = [i for i in range(1, spec.k + 1) if parts[i - 1] % 2 == 0 and i not in w.a]
    if not 0 <= w.n <= len(even_out):
        raise ValueError(f"witness n={w.n} outside 0..{len(even_out)}")
    s_a = sum(parts[i - 1] for i in w.a)
    s_ap = sum(parts[i - 1] for i in w.a_prime)
    if 2 * s_ap != s_a + len(odd_out) + 2 * w.n - 1:
        raise ValueError("witness equation s(A') = s(A)/2 + (m + 2n - 1)/2 fails")
    surplus2 = set(even_out[: w.n])
    x = []
    for i in range(1, spec.k + 1):
        r = parts[i - 1]
        if i in w.a_prime:
            x.append(0)
        elif i in w.a:
            x.append(r)
        elif i in surplus2:
            x.append(r // 2 + 1)
        elif r % 2 == 0:
            x.append(r // 2)
        else:
            x.append((r + 1) // 2)
    return CrossingCounts(tuple(x))


def good_bisection_from_witness(
    spec: MultipartiteSpec, w: GoodSubsetWitness
) -> Bisection:
    """Construct the good bisection encoded by a witness.

    Each odd part outside A sends its surplus vertex to V1, n even parts
    outside A send a surplus of two, the remaining even parts split evenly,
    A \\ A' goes wholly to V1 and A' wholly to V2.  The result has
    |V1| = |V2| + 1 and every slack nonnegative; both facts are rechecked and
    a failure aborts loudly.
    """
    counts = _witness_counts(spec, w)
    if 2 * sum(counts.x) - spec.order != 1:
        raise CounterexampleError(
            "witness counts do not give |V1| = |V2| + 1",
            spec=spec.parts, witness=w, counts=counts.x,
        )
    H = bisection_from_counts(spec, counts)
    slacks = bisection_slack(complete_multipartite(spec), H)
    if min(slacks) < 0:
        raise CounterexampleError(
            "witness-built bisection is not good",
            spec=spec.parts, witness=w, counts=counts.x, slacks=slacks,
        )
    return H


def find_good_bisection(spec: MultipartiteSpec) -> Optional[Bisection]:
    """Good bisection via the even-order split or the witness criterion."""
    if spec.order % 2 == 0:
        return even_order_good_bisection(spec)
    w = good_subset_search(spec)
    if w is None:
        return None
    return good_bisection_from_witness(spec, w)


def floor_good_bisection(spec: MultipartiteSpec) -> Bisection:
    """Bisection with d_H(v) >= floor((d_G(v) - 1)/2) everywhere.

    Splitting every part as evenly as possible and topping up odd parts to
    balance the sides achieves this directly; should that ever miss, an
    exhaustive search restricted to the floor criterion runs as a fallback,
    and its failure would be reportable as a counterexample.
    """
    parts = spec.parts
    x = [r // 2 for r in parts]
    deficit = (spec.order + 1) // 2 - sum(x)
    for i, r in enumerate(parts):
        if deficit == 0:
            break
        if r % 2 == 1:
            x[i] += 1
            deficit -= 1
    counts = CrossingCounts(tuple(x))
    if not _counts_good(parts, counts.x, floor_variant=True):
        total = spec.order
        sums = {total // 2, (total + 1) // 2}
        _check_cap(prod(r + 1 for r in parts), "floor_good_bisection fallback")
        counts = None
        for cand in _count_vectors(parts, sums):
            if _counts_good(parts, cand, floor_variant=True):
                counts = CrossingCounts(cand)
                break
        if counts is None:
            raise CounterexampleError(
                "no floor-good bisection exists", spec=spec.parts,
            )
    return bisection_from_counts(spec, counts)


def check_bs3_hypothesis(r1: int, r2: int, r3: int) -> bool:
    """Hypotheses of the three-part no-good-bisection family: pairwise
    distinct odd sizes, none equal to 1 or to either rounding of half the
    total order."""
    sizes = (r1, r2, r3)
    if any(r % 2 == 0 for r in sizes) or len(set(sizes)) != 3:
        return False
    total = sum(sizes)
    banned = {1, total // 2, (total + 1) // 2}
    return all(r not in banned for r in sizes)


def minus_edge_oracle(
    spec: MultipartiteSpec, which_parts: tuple[int, int]
) -> Optional[MinusEdgeAssignment]:
    """Exhaustive search for a good bisection of G minus one edge.

    The deleted edge runs between parts i and j (which must be distinct --
    parts are independent sets).  Within-part symmetry is broken only at the
    two endpoints, so the enumeration adds just their two side choices to the
    bulk count vectors.
    """
    i, j = which_parts
    if i == j:
        raise ValueError("the deleted edge must join two distinct parts")
    if not (1 <= i <= spec.k and 1 <= j <= spec.k):
        raise ValueError(f"part indices {which_parts} out of range 1..{spec.k}")
    parts = spec.parts
    total = spec.order
    bulk = [r - 1 if p in (i, j) else r for p, r in enumerate(parts, start=1)]
    _check_cap(4 * prod(b + 1 for b in bulk), "minus_edge_oracle")
    sums = {total // 2, (total + 1) // 2}

    for u_side in (1, 2):
        for w_side in (1, 2):
            extra = (u_side == 1) + (w_side == 1)
            targets = {s - extra for s in sums if s - extra >= 0}
            if not targets:
                continue
            for b in _count_vectors(bulk, targets):
                x = list(b)
                x[i - 1] += u_side == 1
                x[j - 1] += w_side == 1
                if _minus_edge_good(parts, bulk, b, x, i, j, u_side, w_side):
                    return MinusEdgeAssignment(
                        counts=tuple(x), u_side=u_side, w_side=w_side
                    )
    return None


def _minus_edge_good(parts, bulk, b, x, i, j, u_side, w_side) -> bool:
    total = sum(parts)
    s1 = sum(x)
    s2 = total - s1
    if abs(s1 - s2) > 1:
        return False
    for p, r in enumerate(parts, start=1):
        dg = total - r
        xp = x[p - 1]
        bulk1 = b[p - 1]
        bulk2 = bulk[p - 1] - bulk1
        if bulk1 >= 1 and 2 * (s2 - (r - xp)) < dg - 1:
            return False
        if bulk2 >= 1 and 2 * (s1 - xp) < dg - 1:
            return False
    for p, side, other_side in ((i, u_side, w_side), (j, w_side, u_side)):
        r = parts[p - 1]
        dg = total - r - 1
        xp = x[p - 1]
        opp = s2 - (r - xp) if side == 1 else s1 - xp
        if other_side != side:
            opp -= 1
        if 2 * opp < dg - 1:
            return False
    return True
