"""Graph and partition data model with exact partition statistics.

Vertices are labeled 1..n and the labeling is meaningful: the parity
bisection puts odd-indexed vertices on one side and even-indexed vertices on
the other, and the realization machinery constructs graphs whose *ordered*
degree sequence matches a target.  Everything here is immutable and counted
in exact integers.

File formats (0-based externally, converted at this boundary): a graph file
starts with a line ``n m`` followed by m lines ``u v``; ``#`` starts a
comment line.  Partition output is a JSON object with 0-based sorted vertex
lists and the three edge counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .degree_sequences import DegreeSequence

Edge = tuple[int, int]


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph on vertices 1..n with an ordered labeling."""

    n: int
    edges: frozenset[Edge]

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> tuple[int, ...]:
        """Degree of each vertex in label order (not sorted)."""
        deg = [0] * (self.n + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg[1:])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> LabeledGraph:
    """Validate, deduplicate and freeze an edge list on vertices 1..n."""
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    normalized = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
        normalized.add((u, v) if u < v else (v, u))
    return LabeledGraph(n=n, edges=frozenset(normalized))


def complete_graph(n: int) -> LabeledGraph:
    return build_graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


@dataclass(frozen=True)
class Bipartition:
    """Total assignment of vertices to sides 1 and 2; ``side[v-1]`` is v's side."""

    side: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (1, 2) for s in self.side):
            raise ValueError("bipartition sides must be 1 or 2")

    @property
    def n(self) -> int:
        return len(self.side)

    def side_of(self, v: int) -> int:
        return self.side[v - 1]

    def part(self, which: int) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if self.side[v - 1] == which)

    @staticmethod
    def from_v1(n: int, v1: Iterable[int]) -> "Bipartition":
        v1set = set(v1)
        for v in v1set:
            if not 1 <= v <= n:
                raise ValueError(f"vertex {v} out of range 1..{n}")
        return Bipartition(tuple(1 if v in v1set else 2 for v in range(1, n + 1)))


@dataclass(frozen=True)
class Bisection:
    """Balanced bipartition together with the bipartite subgraph across it.

    ``cross_edges`` are host edges with one endpoint on each side.  Here they
    are stored explicitly because the realization algorithm assembles them
    incrementally rather than recomputing from scratch.
    """

    bipartition: Bipartition
    cross_edges: frozenset[Edge]

    def __post_init__(self):
        sizes = [0, 0, 0]
        for s in self.bipartition.side:
            sizes[s] += 1
        if abs(sizes[1] - sizes[2]) > 1:
            raise ValueError(
                f"bisection sides differ by {abs(sizes[1] - sizes[2])} > 1"
            )
        for u, v in self.cross_edges:
            if self.bipartition.side_of(u) == self.bipartition.side_of(v):
                raise ValueError(f"edge ({u},{v}) does not cross the bisection")

    def cross_degrees(self) -> tuple[int, ...]:
        deg = [0] * (self.bipartition.n + 1)
        for u, v in self.cross_edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg[1:])


def max_bisection(G: LabeledGraph, P: Bipartition) -> Bisection:
    """The bisection on P whose edge set is *every* crossing edge of G."""
    if P.n != G.n:
        raise ValueError("bipartition size does not match graph")
    cross = frozenset(
        (u, v) for u, v in G.edges if P.side_of(u) != P.side_of(v)
    )
    return Bisection(bipartition=P, cross_edges=cross)


def parity_bisection(G: LabeledGraph) -> Bisection:
    """Bisection by index parity: odd labels on side 1, even labels on side 2.

    The sides differ in size by at most one for every n, so the balance
    invariant holds automatically.
    """
    P = Bipartition(tuple(1 if v % 2 == 1 else 2 for v in range(1, G.n + 1)))
    return max_bisection(G, P)


@dataclass(frozen=True)
class PartitionStats:
    """Exact edge counts of a bipartition: inside side 1, inside side 2, across."""

    e1: int
    e2: int
    cut: int


def evaluate_bipartition(G: LabeledGraph, P: Bipartition) -> PartitionStats:
    if P.n != G.n:
        raise ValueError(
            f"bipartition covers {P.n} vertices but graph has {G.n}"
        )
    e1 = e2 = cut = 0
    for u, v in G.edges:
        su, sv = P.side_of(u), P.side_of(v)
        if su != sv:
            cut += 1
        elif su == 1:
            e1 += 1
        else:
            e2 += 1
    return PartitionStats(e1=e1, e2=e2, cut=cut)


def bisection_slack(G: LabeledGraph, H: Bisection) -> list[int]:
    """Per-vertex values 2*d_H(v) - (d_G(v) - 1), in label order.

    H is *good* iff every entry is >= 0.  Each entry has the parity of
    d_G(v) + 1 since 2*d_H(v) is even.
    """
    if H.bipartition.n != G.n:
        raise ValueError("bisection does not match graph")
    dg = G.degrees()
    dh = H.cross_degrees()
    return [2 * dh[i] - (dg[i] - 1) for i in range(G.n)]


def degree_sequence(G: LabeledGraph) -> DegreeSequence:
    """Degrees sorted nonincreasing; sums to twice the edge count."""
    return DegreeSequence(tuple(sorted(G.degrees(), reverse=True)))


# ---------------------------------------------------------------------------
# External file formats (0-based on disk, 1-based in memory)
# ---------------------------------------------------------------------------


def format_graph(G: LabeledGraph) -> str:
    lines = [f"{G.n} {G.m}"]
    for u, v in sorted(G.edges):
        lines.append(f"{u - 1} {v - 1}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> LabeledGraph:
    rows = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise ValueError("empty graph file")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"expected header 'n m', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header promises {m} edges, file has {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {row!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range 0..{n - 1}")
        edges.append((u + 1, v + 1))
    return build_graph(n, edges)


def write_graph_file(G: LabeledGraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(G))


def read_graph_file(path) -> LabeledGraph:
    with open(path) as fh:
        return parse_graph(fh.read())


def partition_json(G: LabeledGraph, P: Bipartition) -> dict:
    """Partition as a JSON-ready dict with 0-based sorted vertex lists."""
    stats = evaluate_bipartition(G, P)
    return {
        "V1": [v - 1 for v in P.part(1)],
        "V2": [v - 1 for v in P.part(2)],
        "e1": stats.e1,
        "e2": stats.e2,
        "cut": stats.cut,
    }
