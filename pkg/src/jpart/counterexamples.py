"""Triple-clique graphs on which every bipartition has a heavy side.

An integer-pair recurrence produces arbitrarily large pairs (a, b) with a
even, b odd, 3b(b-1) = a(a-1) and b <= 7a/12.  For such a pair, the disjoint
union of three b-cliques has C(a,2) edges, yet every bipartition V1, V2
leaves max{e(V1), e(V2)} >= C(a/2, 2) + 5(a/2)/48: splitting each clique as
evenly as the side sizes allow is optimal, and the balanced split already
carries (3b^2 - 4b + 1)/8 edges on the larger side.

The recurrence is

    (n_0, t_0) = (36, 21),  (n_1, t_1) = (133, 77),
    n_{i+1} = 4 n_i - n_{i-1} - 1,  t_{i+1} = 4 t_i - t_{i-1} - 1,

whose terms satisfy n_i(n_i-1) = 3 t_i(t_i-1) identically; the pairs with
the right parities are (a_j, b_j) = (n_{4j}, t_{4j}).  Terms grow
geometrically, so everything here runs on arbitrary-precision integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .errors import CounterexampleError
from .graph_core import LabeledGraph, build_graph

MIN_MAX_SIDE_CAP = 2000


@dataclass(frozen=True)
class PairSeq:
    """Prefix of the integer-pair recurrence, invariants verified."""

    pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class AbPair:
    """A pair (a, b) with a even, b odd, 3b(b-1) = a(a-1), b <= 7a/12."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 36 or self.a % 2 != 0:
            raise ValueError(f"a must be an even integer >= 36, got {self.a}")
        if self.b < 21 or self.b % 2 != 1:
            raise ValueError(f"b must be an odd integer >= 21, got {self.b}")
        if 3 * self.b * (self.b - 1) != self.a * (self.a - 1):
            raise ValueError(f"pair ({self.a},{self.b}) violates 3b(b-1) = a(a-1)")
        if 12 * self.b > 7 * self.a:
            raise ValueError(f"pair ({self.a},{self.b}) violates b <= 7a/12")


def _alpha(n: int, t: int) -> int:
    return n * (n - 1) - 3 * t * (t - 1)


def _beta(n1: int, t1: int, n0: int, t0: int) -> int:
    return 2 * n1 * n0 - n1 - n0 - 6 * t1 * t0 + 3 * t1 + 3 * t0 + 1


def pair_sequence(count: int) -> PairSeq:
    """First ``count`` pairs of the recurrence, with all identities asserted.

    The identities (alpha_i = 0, beta_i = 0, t_i <= 7 n_i / 12) are theorems
    about the recurrence; a violation would mean the arithmetic is broken, so
    it aborts rather than returning bad data.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    pairs = [(36, 21), (133, 77)][:count]
    while len(pairs) < count:
        (n0, t0), (n1, t1) = pairs[-2], pairs[-1]
        pairs.append((4 * n1 - n0 - 1, 4 * t1 - t0 - 1))
    for i, (n, t) in enumerate(pairs):
        if _alpha(n, t) != 0:
            raise CounterexampleError("alpha identity failed", index=i, pair=(n, t))
        if 12 * t > 7 * n:
            raise CounterexampleError("t <= 7n/12 failed", index=i, pair=(n, t))
        if i >= 1:
            n0, t0 = pairs[i - 1]
            if _beta(n, t, n0, t0) != 0:
                raise CounterexampleError("beta identity failed", index=i)
    return PairSeq(pairs=tuple(pairs))


def ab_pairs(count: int) -> list[AbPair]:
    """The pairs (a_j, b_j) = (n_{4j}, t_{4j}) for j = 0..count-1.

    Also verifies the parity pattern of the full recurrence prefix: n_i is
    even iff i = 0,3 (mod 4) and t_i is odd iff i = 0,1 (mod 4), which is
    what makes every fourth term usable.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    seq = pair_sequence(4 * (count - 1) + 1)
    for i, (n, t) in enumerate(seq.pairs):
        if (n % 2 == 0) != (i % 4 in (0, 3)):
            raise CounterexampleError("n parity pattern failed", index=i, pair=(n, t))
        if (t % 2 == 1) != (i % 4 in (0, 1)):
            raise CounterexampleError("t parity pattern failed", index=i, pair=(n, t))
    return [AbPair(*seq.pairs[4 * j]) for j in range(count)]


def triple_clique(t: int) -> LabeledGraph:
    """Disjoint union of three t-cliques; 3t vertices, 3*C(t,2) edges."""
    if t < 1 or t % 2 == 0:
        raise ValueError(f"t must be a positive odd integer, got {t}")
    edges = []
    for block in range(3):
        base = block * t
        for u in range(1, t + 1):
            for v in range(u + 1, t + 1):
                edges.append((base + u, base + v))
    return build_graph(3 * t, edges)


@dataclass(frozen=True)
class MinMaxSideResult:
    """Exact minimum of max{e(V1), e(V2)} with a witnessing count triple."""

    value: int
    counts: tuple[int, int, int]


def min_max_side(t: int, cap: int = MIN_MAX_SIDE_CAP) -> MinMaxSideResult:
    """Minimize max{e(V1), e(V2)} over bipartitions of three t-cliques.

    Vertices within a clique are interchangeable, so it suffices to choose
    how many vertices of each clique go to V1; cliques are interchangeable
    too, and max is complement-invariant, so the search runs over descending
    triples (a, b, c) with a+b+c >= ceil(3t/2).  The reported counts are the
    lexicographically least such triple attaining the minimum.
    """
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    if t > cap:
        raise ValueError(f"t={t} exceeds the enumeration cap {cap}")
    need = (3 * t + 1) // 2
    vals = np.arange(t + 1, dtype=np.int64)
    c2 = vals * (vals - 1) // 2
    b_grid = vals[:, None]
    c_grid = vals[None, :]
    inner1 = c2[b_grid] + c2[c_grid]
    inner2 = c2[t - b_grid] + c2[t - c_grid]
    sum_bc = b_grid + c_grid
    shape_ok = c_grid <= b_grid
    sentinel = np.int64(2**62)

    best_val: Optional[int] = None
    best_triple: Optional[tuple[int, int, int]] = None
    for a in range(t + 1):
        valid = shape_ok & (b_grid <= a) & (sum_bc >= need - a)
        if not valid.any():
            continue
        m_side = np.maximum(c2[a] + inner1, c2[t - a] + inner2)
        m_side = np.where(valid, m_side, sentinel)
        flat = int(np.argmin(m_side))
        val = int(m_side.flat[flat])
        if best_val is None or val < best_val:
            best_val = val
            best_triple = (a, flat // (t + 1), flat % (t + 1))
    return MinMaxSideResult(value=best_val, counts=best_triple)


@dataclass(frozen=True)
class Thm2nVerification:
    """Outcome of checking one (a, b) pair against the heavy-side bound.

    ``method`` records the evidence strength: "enumerated" means the exact
    minimum was computed, "algebraic" means only the inequality chain was
    verified (still exact, but the minimum itself is bounded, not computed).
    """

    ok: bool
    method: str
    bound: Fraction
    e1_lower: int
    enumerated_value: Optional[int] = None
    counts: Optional[tuple[int, int, int]] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_thm_2n(pair: Union[AbPair, tuple[int, int]], cap: int = MIN_MAX_SIDE_CAP) -> Thm2nVerification:
    """Check max{e(V1),e(V2)} >= C(n,2) + 5n/48 for the pair's triple-clique.

    All arithmetic is exact (integers and rationals).  The inequality chain

        min max side >= (3b^2-4b+1)/8 = (4n^2-2n-b+1)/8 >= C(n,2) + 5n/48

    is re-derived step by step; when b is within the enumeration cap the
    left-hand minimum is additionally computed exactly and compared directly.
    """
    if not isinstance(pair, AbPair):
        pair = AbPair(int(pair[0]), int(pair[1]))
    a, b = pair.a, pair.b
    n = a // 2

    num = 3 * b * b - 4 * b + 1
    if num % 8 != 0:
        raise CounterexampleError("(3b^2-4b+1)/8 is not an integer", pair=(a, b))
    e1_lower = num // 8
    if 8 * e1_lower != 4 * n * n - 2 * n - b + 1:
        raise CounterexampleError(
            "identity (3b^2-4b+1)/8 = (4n^2-2n-b+1)/8 failed", pair=(a, b)
        )
    # The balanced split realizes the lower bound: two blocks of (b+1)/2 and
    # one of (b-1)/2 on the larger side.
    half_up, half_down = (b + 1) // 2, (b - 1) // 2
    balanced = 2 * (half_up * (half_up - 1) // 2) + half_down * (half_down - 1) // 2
    if balanced != e1_lower:
        raise CounterexampleError("balanced-split value mismatch", pair=(a, b))

    bound = Fraction(n * (n - 1), 2) + Fraction(5 * n, 48)
    chain_ok = Fraction(e1_lower) >= bound

    if b <= cap:
        res = min_max_side(b, cap=cap)
        if res.value < e1_lower:
            raise CounterexampleError(
                "enumeration fell below the certified lower bound",
                pair=(a, b), value=res.value, lower=e1_lower,
            )
        return Thm2nVerification(
            ok=Fraction(res.value) >= bound,
            method="enumerated",
            bound=bound,
            e1_lower=e1_lower,
            enumerated_value=res.value,
            counts=res.counts,
        )
    return Thm2nVerification(
        ok=chain_ok, method="algebraic", bound=bound, e1_lower=e1_lower
    )


def binomial_shift_strict(m: int, n: int) -> bool:
    """C(m,2) + C(n,2) > C(m-1,2) + C(n+1,2), valid whenever m - n >= 2.

    This is the exchange step showing that balancing clique splits can only
    lower the heavier side; exposed so the inequality itself is testable.
    """
    if m - n < 2:
        raise ValueError("the shift inequality requires m - n >= 2")
    lhs = m * (m - 1) // 2 + n * (n - 1) // 2
    rhs = (m - 1) * (m - 2) // 2 + (n + 1) * n // 2
    return lhs > rhs
