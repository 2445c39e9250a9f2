"""Graphic degree sequences and the laying-off operations.

A nonincreasing sequence of nonnegative integers is *graphic* if some simple
graph has exactly those vertex degrees.  Laying off the i-th entry removes it
and subtracts 1 from d_i other entries; a sequence is graphic iff the laid-off
sequence is.  Two variants are provided:

* ``lay_off``: subtract 1 from the d_i remaining entries with *lowest* index.
  The result need not be nonincreasing.
* ``lay_off_with_order``: subtract 1 from the entries with the d_i largest
  values, breaking ties at the threshold value toward the *largest* indices.
  The result is always nonincreasing, and is a permutation of the plain
  lay-off result.

The with-order tie-break (largest indices among equal values) is load-bearing:
the realization builder in ``hs_realization`` depends on the block structure
it induces, so no alternative tie-break is allowed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union


@dataclass(frozen=True)
class DegreeSequence:
    """Nonincreasing sequence of candidate vertex degrees."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        for v in vals:
            if v < 0:
                raise ValueError(f"degree sequence has negative entry {v}")
        if any(vals[i] < vals[i + 1] for i in range(len(vals) - 1)):
            raise ValueError(f"degree sequence not nonincreasing: {vals}")
        if vals and vals[0] > len(vals) - 1:
            raise ValueError(
                f"leading degree {vals[0]} exceeds n-1 = {len(vals) - 1}"
            )

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


SequenceLike = Union[DegreeSequence, Sequence[int], Iterable[int]]


def as_degree_sequence(seq: SequenceLike) -> DegreeSequence:
    """Coerce to ``DegreeSequence``, validating the invariants."""
    if isinstance(seq, DegreeSequence):
        return seq
    return DegreeSequence(tuple(seq))


@dataclass(frozen=True)
class LayoffResult:
    """Outcome of laying off one entry with order.

    ``reduced`` is the shortened (still nonincreasing) sequence, ``affected``
    the set of 1-based positions of the *input* sequence that were
    decremented, and ``removed_index`` the 1-based position removed.
    """

    reduced: DegreeSequence
    affected: frozenset[int]
    removed_index: int


def _check_layoff_args(values: tuple[int, ...], i: int) -> None:
    n = len(values)
    if not 1 <= i <= n:
        raise ValueError(f"lay-off index {i} out of range 1..{n}")
    if values[i - 1] > n - 1:
        raise ValueError(
            f"cannot lay off entry {values[i - 1]} at position {i}: "
            f"only {n - 1} other entries available"
        )


def lay_off(seq: SequenceLike, i: int) -> tuple[int, ...]:
    """Remove the i-th entry, decrementing the d_i lowest-index survivors.

    Positions are 1-based.  The returned tuple is generally *not*
    nonincreasing.
    """
    values = as_degree_sequence(seq).values
    _check_layoff_args(values, i)
    d = values[i - 1]
    out = []
    remaining = d
    for j, v in enumerate(values, start=1):
        if j == i:
            continue
        if remaining > 0:
            out.append(v - 1)
            remaining -= 1
        else:
            out.append(v)
    return tuple(out)


def _lay_off_with_order_raw(
    values: Sequence[int], i: int
) -> tuple[tuple[int, ...], frozenset[int]]:
    """With-order lay-off on a plain value tuple; no output validation.

    Returns (reduced values in position order, affected 1-based positions).
    Entries of the result may be negative when the input is not graphic;
    callers that care (``is_graphic``) check for that themselves.
    """
    n = len(values)
    d = values[i - 1]
    if d == 0:
        return tuple(v for j, v in enumerate(values, 1) if j != i), frozenset()
    others = [(values[j - 1], j) for j in range(1, n + 1) if j != i]
    # s = smallest value among the d largest entries, excluding position i.
    ranked = sorted(others, key=lambda p: -p[0])
    s = ranked[d - 1][0]
    big = [j for v, j in others if v > s]
    ties = [j for v, j in others if v == s]
    need = d - len(big)
    affected = frozenset(big) | frozenset(sorted(ties)[-need:] if need else [])
    reduced = tuple(
        v - (j in affected) for v, j in ((values[j - 1], j) for j in range(1, n + 1)) if j != i
    )
    return reduced, affected


def lay_off_with_order(seq: SequenceLike, i: int) -> LayoffResult:
    """Remove the i-th entry, decrementing the d_i largest survivors.

    Ties at the threshold value are resolved toward the largest indices,
    which keeps the reduced sequence nonincreasing.
    """
    values = as_degree_sequence(seq).values
    _check_layoff_args(values, i)
    reduced, affected = _lay_off_with_order_raw(values, i)
    return LayoffResult(
        reduced=DegreeSequence(reduced), affected=affected, removed_index=i
    )


def is_graphic(seq: SequenceLike) -> bool:
    """Decide whether a simple graph with these degrees exists.

    Runs the lay-off recursion on the first entry (with order, so the input
    to each round stays sorted) until the sequence is empty/all-zero or a
    violation appears.  Input must be nonincreasing with nonnegative entries.
    """
    if isinstance(seq, DegreeSequence):
        values = seq.values
    else:
        values = tuple(int(v) for v in seq)
        for v in values:
            if v < 0:
                raise ValueError(f"degree sequence has negative entry {v}")
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            raise ValueError(f"is_graphic requires nonincreasing input: {values}")
    if sum(values) % 2 == 1:
        return False
    while values and values[0] > 0:
        if values[0] > len(values) - 1:
            return False
        values, _ = _lay_off_with_order_raw(values, 1)
        if values and values[-1] < 0:
            return False
    return True


def parse_degree_file(text: str) -> tuple[tuple[int, ...], bool]:
    """Parse whitespace-separated degrees from file text, any line structure.

    Returns the values sorted nonincreasing plus a flag telling whether the
    input had to be reordered (callers may want to warn).  Kept as a plain
    tuple so that sequences violating d_1 <= n-1 can still be *answered*
    (they are simply not graphic) rather than rejected as malformed.
    """
    tokens = text.split()
    try:
        raw = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"degree file contains a non-integer token: {exc}") from None
    ordered = sorted(raw, reverse=True)
    return tuple(ordered), ordered != raw
