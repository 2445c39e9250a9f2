"""Build a realization of a graphic sequence whose parity bisection is good.

Given a nonincreasing graphic sequence pi = (d_1, ..., d_n), this module
constructs a graph G with d_G(v_i) = d_i whose parity bisection H satisfies
2*d_H(v_i) >= d_G(v_i) - 1 for every vertex.

The construction is inductive.  Pick the smallest position ell with
d_ell = d_{ell+1} = k (two equal consecutive entries always exist in a
graphic sequence of length >= 3).  Lay off position ell+1 with order, then
lay off the surviving entry at position ell with order; both reductions stay
graphic.  Write omega, omega', omega'' for the three sequences restricted to
the n-2 untouched positions and re-indexed consecutively, and let

    X1 = {i : omega''_i = omega_i - 1},   X2 = {i : omega''_i = omega_i - 2},
    K  = value of the laid-off second entry, so |X1| + 2|X2| = 2K.

Recursively realize omega'' with a good parity bisection, then re-insert two
vertices a (the odd-index one of positions ell, ell+1) and b.  The indices of
X1 split by parity decide how a and b connect: X2 vertices take edges to both
a and b, X1 vertices take one edge each, directed so that the new degrees
come out right.  |X1 cap odd| - |X1 cap even| is always in {-2, 0, 2}; in the
unbalanced cases one X1 vertex z with 2*d_J(w_z) >= d_F(w_z) is re-routed to
its own side's new vertex, and a parity argument guarantees such a pivot
exists among the two candidate blocks of X1.

The block decomposition of X1 and X2 (``claim1_decompose``) and the pivot
selection (``select_pivot_z``) are exposed separately so their structural
guarantees can be tested directly.  Every internal guarantee is asserted at
runtime: a violation would be a counterexample to the construction and raises
``CounterexampleError`` with the offending instance attached -- it is never
silently repaired.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Sequence

from .degree_sequences import (
    DegreeSequence,
    SequenceLike,
    _lay_off_with_order_raw,
    as_degree_sequence,
    is_graphic,
)
from .errors import CounterexampleError
from .graph_core import Bisection, LabeledGraph, bisection_slack, build_graph, parity_bisection

IndexSet = frozenset[int]


@dataclass(frozen=True)
class Claim1Decomposition:
    """Block structure of the doubly-decremented index sets.

    X1 (decremented once overall) splits into two consecutive blocks r1p and
    r2p; X2 (decremented twice) into r1 and r2.  The blocks r1, r1p, q, r2p
    are consecutive in that order and start at index 1, r2 is either empty or
    equal to q, and the omega'' values on r1p exceed those on r2p by exactly
    one.  ``s`` is the threshold value of the lay-off (the K-th largest entry
    of omega); ``epsilon`` records whether the two re-inserted vertices are
    adjacent to each other.
    """

    x1: IndexSet
    x2: IndexSet
    r1: IndexSet
    r2: IndexSet
    r1p: IndexSet
    r2p: IndexSet
    q: IndexSet
    K: int
    epsilon: int
    s: int


@dataclass(frozen=True)
class StepRecord:
    """One reduction step: everything needed to re-insert the two vertices."""

    n: int
    ell: int
    k: int
    K: int
    epsilon: int
    x1: IndexSet
    x2: IndexSet
    decomp: Claim1Decomposition
    case: int
    omega_pp: tuple[int, ...]


@dataclass(frozen=True)
class RealizationCertificate:
    """Realization plus its parity bisection and the per-vertex slacks."""

    graph: LabeledGraph
    bisection: Bisection
    slacks: tuple[int, ...]


def _is_consecutive(block: IndexSet) -> bool:
    if not block:
        return True
    return max(block) - min(block) + 1 == len(block)


def _blocks_consecutive(blocks: Sequence[IndexSet]) -> bool:
    """Each block consecutive, in increasing order, with no gaps overall."""
    nonempty = [b for b in blocks if b]
    if not all(_is_consecutive(b) for b in nonempty):
        return False
    for left, right in zip(nonempty, nonempty[1:]):
        if max(left) + 1 != min(right):
            return False
    return True


def _last(block: list[int], count: int) -> list[int]:
    return block[len(block) - count :] if count > 0 else []


def claim1_decompose(
    omega: Sequence[int],
    omega_p: Sequence[int],
    omega_pp: Sequence[int],
    K: int,
) -> Claim1Decomposition:
    """Recover the consecutive block structure of X1 and X2.

    Inputs are the three re-indexed sequences (before, after one lay-off,
    after both), each over the same 1-based index range, and the number K of
    entries decremented by each lay-off.  Raises ``ValueError`` if the inputs
    are not a valid double lay-off, and ``CounterexampleError`` if they are
    but the guaranteed block structure fails to materialize.
    """
    f = tuple(omega)
    fp = tuple(omega_p)
    fpp = tuple(omega_pp)
    n2 = len(f)
    if len(fp) != n2 or len(fpp) != n2:
        raise ValueError("sequences must have equal length")
    drop1 = [i for i in range(1, n2 + 1) if fp[i - 1] != f[i - 1]]
    drop2 = [i for i in range(1, n2 + 1) if fpp[i - 1] != fp[i - 1]]
    if any(f[i - 1] - fp[i - 1] != 1 for i in drop1) or any(
        fp[i - 1] - fpp[i - 1] != 1 for i in drop2
    ):
        raise ValueError("entries may only decrease by one per lay-off")
    if len(drop1) != K or len(drop2) != K:
        raise ValueError(
            f"decrement counts {len(drop1)}, {len(drop2)} inconsistent with K={K}"
        )

    x1 = frozenset(i for i in range(1, n2 + 1) if fpp[i - 1] == f[i - 1] - 1)
    x2 = frozenset(i for i in range(1, n2 + 1) if fpp[i - 1] == f[i - 1] - 2)

    empty: IndexSet = frozenset()
    if K == 0:
        return Claim1Decomposition(
            x1=empty, x2=empty, r1=empty, r2=empty, r1p=empty, r2p=empty,
            q=empty, K=0, epsilon=0, s=0,
        )

    s = f[K - 1]
    first_dropped = set(drop1)
    a_blk = [i for i in range(1, n2 + 1) if f[i - 1] >= s + 2]
    b_blk = [i for i in range(1, n2 + 1) if f[i - 1] == s + 1]
    c_blk = [i for i in range(1, n2 + 1) if f[i - 1] == s and i not in first_dropped]
    d_blk = [i for i in range(1, n2 + 1) if f[i - 1] == s and i in first_dropped]
    e_blk = [i for i in range(1, n2 + 1) if f[i - 1] == s - 1]

    def breach(msg: str) -> CounterexampleError:
        return CounterexampleError(
            msg, omega=f, omega_p=fp, omega_pp=fpp, K=K, s=s,
        )

    if any(i not in first_dropped for i in a_blk + b_blk):
        raise breach("entry above the lay-off threshold was not decremented")
    if any(i in first_dropped for i in e_blk):
        raise breach("entry below the lay-off threshold was decremented")

    y = set(drop2)
    nb, nc, nd, ne = len(b_blk), len(c_blk), len(d_blk), len(e_blk)
    if nc >= nb + nd:
        c2 = _last(c_blk, nb + nd)
        expected_y = set(a_blk) | set(c2)
        r1, r2 = frozenset(a_blk), empty
        r1p = frozenset(b_blk)
        r2p = frozenset(c2) | frozenset(d_blk)
        q = frozenset(c_blk[: nc - (nb + nd)])
    elif nd <= nc < nb + nd:
        b2 = _last(b_blk, nb + nd - nc)
        expected_y = set(a_blk) | set(b2) | set(c_blk)
        r1 = frozenset(a_blk)
        r2 = q = frozenset(b2)
        r1p = frozenset(b_blk[: nb - len(b2)])
        r2p = frozenset(c_blk) | frozenset(d_blk)
    elif nc < nd <= nc + ne:
        e2 = _last(e_blk, nd - nc)
        expected_y = set(a_blk) | set(b_blk) | set(c_blk) | set(e2)
        r1 = frozenset(a_blk) | frozenset(b_blk)
        r2 = empty
        r1p = frozenset(c_blk) | frozenset(d_blk)
        r2p = frozenset(e2)
        q = frozenset(e_blk[: ne - len(e2)])
    else:
        d2 = _last(d_blk, nd - nc - ne)
        expected_y = set(a_blk) | set(b_blk) | set(c_blk) | set(d2) | set(e_blk)
        r1 = frozenset(a_blk) | frozenset(b_blk)
        r2 = q = frozenset(d2)
        r1p = frozenset(c_blk) | frozenset(d_blk[: nd - len(d2)])
        r2p = frozenset(e_blk)

    if y != expected_y:
        raise breach("second lay-off decremented an unexpected index set")
    if r1p | r2p != x1 or r1 | r2 != x2:
        raise breach("block decomposition does not reproduce X1/X2")
    if len(x1) + 2 * len(x2) != 2 * K:
        raise breach("|X1| + 2|X2| != 2K")
    if not _blocks_consecutive([r1, r1p, q, r2p]):
        raise breach("blocks R1, R1', Q, R2' are not consecutive")
    union = r1 | r1p | q | r2p
    if union and min(union) != 1:
        raise breach("block union does not start at index 1")
    if r2 and r2 != q:
        raise breach("R2 is neither empty nor equal to Q")
    if r1p and r2p:
        v1 = {fpp[i - 1] for i in r1p}
        v2 = {fpp[i - 1] for i in r2p}
        if len(v1) != 1 or len(v2) != 1 or v1.pop() != v2.pop() + 1:
            raise breach("omega'' not constant-with-gap-1 across R1'/R2'")

    return Claim1Decomposition(
        x1=x1, x2=x2, r1=r1, r2=r2, r1p=r1p, r2p=r2p, q=q, K=K, epsilon=0, s=s,
    )


def select_pivot_z(
    decomp: Claim1Decomposition,
    j_degrees: Sequence[int],
    f_degrees: Sequence[int],
    case: int,
) -> int:
    """Pick the X1 index rerouted to its own side's new vertex.

    ``j_degrees[i-1]`` / ``f_degrees[i-1]`` are the bisection degree and full
    degree of the vertex at index i in the already-built smaller graph.  In
    case 2 the candidates sit at even indices of the two X1 blocks, in case 3
    at odd indices.  The chosen z must satisfy 2*d_J(w_z) >= d_F(w_z); the
    block values differ by one, so exactly one candidate has even degree and
    even per-vertex slack, which forces qualification.  Preference: the r1p
    candidate, then the r2p one; within a block the smallest index.
    """
    if case not in (2, 3):
        raise ValueError(f"pivot selection only applies to cases 2 and 3, got {case}")
    want_parity = 0 if case == 2 else 1
    xs = sorted(i for i in decomp.r1p if i % 2 == want_parity)
    ys = sorted(i for i in decomp.r2p if i % 2 == want_parity)
    diff = sum(1 for i in decomp.x1 if i % 2 == 1) - sum(
        1 for i in decomp.x1 if i % 2 == 0
    )
    expected = -2 if case == 2 else 2
    if diff != expected:
        raise ValueError(
            f"case {case} requires |X1 cap I1| - |X1 cap I2| = {expected}, got {diff}"
        )
    if not xs or not ys:
        raise CounterexampleError(
            "pivot candidate block is empty", decomp=decomp, case=case,
        )
    for z in (xs[0], ys[0]):
        if 2 * j_degrees[z - 1] - f_degrees[z - 1] >= 0:
            return z
    raise CounterexampleError(
        "no pivot with 2*d_J >= d_F among the candidates",
        decomp=decomp, case=case, candidates=(xs[0], ys[0]),
        j_degrees=tuple(j_degrees), f_degrees=tuple(f_degrees),
    )


def _reduce_step(values: tuple[int, ...]) -> StepRecord:
    n = len(values)
    ell = next(
        (i for i in range(1, n) if values[i - 1] == values[i]), None
    )
    if ell is None:
        raise CounterexampleError(
            "graphic sequence of length >= 3 without equal consecutive entries",
            pi=values,
        )
    k = values[ell - 1]

    red1, aff1 = _lay_off_with_order_raw(values, ell + 1)
    K = red1[ell - 1]
    if K not in (k, k - 1):
        raise CounterexampleError("lay-off changed d_ell by more than one", pi=values)
    epsilon = 1 if K == k - 1 else 0

    red2, aff2_list = _lay_off_with_order_raw(red1, ell)
    affected2 = {(p if p < ell else p + 1) for p in aff2_list}

    def orig(i: int) -> int:
        # omega index -> position in the full sequence
        return i if i < ell else i + 2

    f = tuple(values[orig(i) - 1] for i in range(1, n - 1))
    fp = tuple(f[i - 1] - (orig(i) in aff1) for i in range(1, n - 1))
    fpp = tuple(red2)
    if any(fpp[i - 1] != fp[i - 1] - (orig(i) in affected2) for i in range(1, n - 1)):
        raise CounterexampleError("lay-off bookkeeping mismatch", pi=values, ell=ell)
    if any(fpp[i] < fpp[i + 1] for i in range(len(fpp) - 1)):
        raise CounterexampleError("reduced sequence not nonincreasing", pi=values)

    decomp = claim1_decompose(f, fp, fpp, K)
    decomp = dataclasses.replace(decomp, epsilon=epsilon)

    x1, x2 = decomp.x1, decomp.x2
    odd1 = sum(1 for i in x1 if i % 2 == 1)
    diff = odd1 - (len(x1) - odd1)
    if diff == 0:
        case = 1
    elif diff == -2:
        case = 2
    elif diff == 2:
        case = 3
    else:
        raise CounterexampleError(
            "|X1 cap I1| - |X1 cap I2| outside {-2, 0, 2}",
            pi=values, ell=ell, x1=x1, diff=diff,
        )

    odd2 = sum(1 for i in x2 if i % 2 == 1)
    x2diff = (len(x2) - odd2) - odd2  # |X2 cap I2| - |X2 cap I1|
    bounds = {1: (-1, 1), 2: (-2, -1), 3: (0, 1)}[case]
    if not bounds[0] <= x2diff <= bounds[1]:
        raise CounterexampleError(
            "X2 parity split outside the certified range",
            pi=values, ell=ell, case=case, x2diff=x2diff, bounds=bounds,
        )

    return StepRecord(
        n=n, ell=ell, k=k, K=K, epsilon=epsilon,
        x1=x1, x2=x2, decomp=decomp, case=case, omega_pp=fpp,
    )


def reduction_trace(pi: SequenceLike) -> tuple[tuple[int, ...], list[StepRecord]]:
    """Run the reduction to a base sequence, returning every step record.

    Exposed for direct inspection of the per-step guarantees; the records are
    in reduction order (first record corresponds to the full sequence).
    """
    seq = as_degree_sequence(pi)
    if not is_graphic(seq):
        raise ValueError(f"sequence {tuple(seq.values)} is not graphic")
    values = seq.values
    records = []
    while len(values) >= 3:
        rec = _reduce_step(values)
        records.append(rec)
        values = rec.omega_pp
    return values, records


def _base_edges(values: tuple[int, ...]) -> list[tuple[int, int]]:
    if values == (1, 1):
        return [(1, 2)]
    if values in ((), (0,), (0, 0)):
        return []
    raise CounterexampleError("reduction ended in a non-graphic base", base=values)


def _expand_step(
    edges: list[tuple[int, int]], nc: int, rec: StepRecord
) -> list[tuple[int, int]]:
    ell = rec.ell

    def new_pos(i: int) -> int:
        return i if i < ell else i + 2

    if rec.case in (2, 3):
        deg = [0] * (nc + 1)
        jdeg = [0] * (nc + 1)
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
            if u % 2 != v % 2:
                jdeg[u] += 1
                jdeg[v] += 1
        z = select_pivot_z(rec.decomp, jdeg[1:], deg[1:], rec.case)
    else:
        z = None

    a_pos = ell if ell % 2 == 1 else ell + 1
    b_pos = ell + 1 if ell % 2 == 1 else ell

    x1_odd = {i for i in rec.x1 if i % 2 == 1}
    x1_even = rec.x1 - x1_odd
    a_nbrs = set(rec.x2) | x1_even
    b_nbrs = set(rec.x2) | x1_odd
    if rec.case == 2:
        a_nbrs.discard(z)
        b_nbrs.add(z)
    elif rec.case == 3:
        a_nbrs.add(z)
        b_nbrs.discard(z)

    out = [(new_pos(u), new_pos(v)) for u, v in edges]
    out.extend((a_pos, new_pos(i)) for i in sorted(a_nbrs))
    out.extend((b_pos, new_pos(j)) for j in sorted(b_nbrs))
    if rec.epsilon:
        out.append((a_pos, b_pos))
    return out


def build_realization(pi: SequenceLike) -> RealizationCertificate:
    """Realize a graphic sequence with a good parity bisection.

    The returned graph has d_G(v_i) equal to the i-th entry of ``pi`` and its
    parity bisection has every slack 2*d_H(v) - (d_G(v) - 1) nonnegative.
    Non-graphic input raises ``ValueError`` before any construction starts.
    The reduction is iterative (explicit record stack), so sequences with
    thousands of entries are fine.
    """
    seq = as_degree_sequence(pi)
    base, records = reduction_trace(seq)
    edges = _base_edges(base)
    nc = len(base)
    for rec in reversed(records):
        edges = _expand_step(edges, nc, rec)
        nc += 2

    graph = build_graph(len(seq), edges)
    if graph.degrees() != seq.values:
        raise CounterexampleError(
            "constructed graph does not realize the target sequence",
            pi=seq.values, degrees=graph.degrees(),
        )
    bisection = parity_bisection(graph)
    slacks = tuple(bisection_slack(graph, bisection))
    if min(slacks, default=0) < 0:
        raise CounterexampleError(
            "parity bisection of the constructed realization is not good",
            pi=seq.values, slacks=slacks,
        )
    return RealizationCertificate(graph=graph, bisection=bisection, slacks=slacks)


def verify_certificate(cert: RealizationCertificate, pi: SequenceLike) -> bool:
    """Recompute everything the certificate claims; True iff it all holds.

    Checks that the graph's ordered degrees equal ``pi``, that the stored
    bisection is the parity bisection of the graph, and that the recomputed
    slacks match the stored ones and are all nonnegative.
    """
    try:
        seq = as_degree_sequence(pi)
    except ValueError:
        return False
    if cert.graph.degrees() != seq.values:
        return False
    expected = parity_bisection(cert.graph)
    if cert.bisection != expected:
        return False
    slacks = tuple(bisection_slack(cert.graph, expected))
    return slacks == tuple(cert.slacks) and all(s >= 0 for s in slacks)
