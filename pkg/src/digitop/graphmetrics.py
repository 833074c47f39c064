"""Exact metric and structural computations on finite graphs.

Images, hyperspace views and function graphs all project to
:class:`FiniteGraph` via :func:`as_finite_graph`; everything here then
works uniformly: shortest/longest cycles, dominating sets, eccentricity,
center, radius, diameter, disconnecting sets, DOT and CSV emission.
The longest-cycle and minimum-dominating-set searches are exact
branch-and-bound kernels over bitmask adjacency rows.
"""

from __future__ import annotations

import io
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import BudgetError
from .hyperspace import DEFAULT_POINT_BUDGET, SubsetFamily, enumerate_all_subsets
from .lattice import DigitalImage, Point, _bits, is_connected

#: Vertex cap for the exponential longest-cycle search.
DEFAULT_CYCLE_BUDGET = 20
#: Vertex cap for the exact dominating-set search.
DEFAULT_DOMINATING_BUDGET = 40


@dataclass(frozen=True)
class FiniteGraph:
    """An undirected simple graph over vertices 0..n-1 with bitmask rows."""

    n: int
    adj: tuple[int, ...]
    labels: tuple | None = None

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency row count must equal the vertex count")
        for i, row in enumerate(self.adj):
            if row >> self.n:
                raise ValueError(f"adjacency row {i} references unknown vertices")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            for j in _bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"edge {i}-{j} is not symmetric")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("label count must equal the vertex count")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: tuple | None = None) -> "FiniteGraph":
        rows = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows), labels)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def neighbors(self, i: int) -> Iterator[int]:
        return _bits(self.adj[i])

    def degree(self, i: int) -> int:
        return bin(self.adj[i]).count("1")

    def edges(self) -> Iterator[tuple[int, int]]:
        for i in range(self.n):
            for j in _bits(self.adj[i]):
                if i < j:
                    yield (i, j)

    @cached_property
    def edge_count(self) -> int:
        return sum(1 for _ in self.edges())

    def label_of(self, i: int):
        return self.labels[i] if self.labels is not None else i


def as_finite_graph(space, with_labels: bool = True) -> FiniteGraph:
    """Project any vertex space (image, family, view, function graph)."""
    verts = space.vertices
    labels = tuple(verts) if with_labels else None
    return FiniteGraph.from_edges(len(verts), space.edge_index_pairs(), labels)


def induced_subgraph(G: FiniteGraph, keep: Iterable[int]) -> FiniteGraph:
    """The subgraph on the kept vertices (ascending), labels carried over."""
    kept = sorted(set(keep))
    pos = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = 0
        for w in _bits(G.adj[v]):
            if w in pos:
                row |= 1 << pos[w]
        rows.append(row)
    labels = tuple(G.label_of(v) for v in kept) if G.labels is not None else None
    return FiniteGraph(len(kept), tuple(rows), labels)


# -- traversal ---------------------------------------------------------------


def bfs_distances(G: FiniteGraph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        i = queue.popleft()
        for j in _bits(G.adj[i]):
            if dist[j] is None:
                dist[j] = dist[i] + 1
                queue.append(j)
    return dist


def connected_components(G: FiniteGraph) -> tuple[tuple[int, ...], ...]:
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            i = queue.popleft()
            for j in _bits(G.adj[i]):
                if not seen[j]:
                    seen[j] = True
                    comp.append(j)
                    queue.append(j)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def is_connected_graph(G: FiniteGraph) -> bool:
    if G.n == 0:
        return True
    return sum(1 for d in bfs_distances(G, 0) if d is not None) == G.n


# -- cycles ------------------------------------------------------------------


@dataclass(frozen=True)
class CycleWitness:
    """A cyclic sequence of at least 3 distinct, consecutively adjacent vertices."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


def is_valid_cycle(G: FiniteGraph, vertices: Iterable[int]) -> bool:
    seq = tuple(vertices)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < G.n for v in seq):
        return False
    return all(G.adjacent(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def girth(G: FiniteGraph) -> CycleWitness | None:
    """A shortest cycle, or None when the graph is acyclic.

    For each edge, the shortest path between its ends avoiding the edge
    closes a shortest cycle through it.
    """
    best: tuple[int, ...] | None = None
    for u, v in G.edges():
        path = _shortest_path_avoiding_edge(G, u, v)
        if path is not None and (best is None or len(path) < len(best)):
            best = path
            if len(best) == 3:
                break
    return CycleWitness(best) if best is not None else None


def _shortest_path_avoiding_edge(G: FiniteGraph, u: int, v: int) -> tuple[int, ...] | None:
    prev = {u: -1}
    queue = deque([u])
    while queue:
        i = queue.popleft()
        for j in _bits(G.adj[i]):
            if (i, j) in ((u, v), (v, u)):
                continue
            if j not in prev:
                prev[j] = i
                if j == v:
                    path = [v]
                    while path[-1] != u:
                        path.append(prev[path[-1]])
                    return tuple(reversed(path))
                queue.append(j)
    return None


def longest_cycle(G: FiniteGraph, budget: int = DEFAULT_CYCLE_BUDGET) -> CycleWitness | None:
    """A maximum-length cycle by exact depth-first search with pruning.

    Simple paths are grown over vertices above the anchor (the cycle's
    minimum vertex); a branch is cut when the vertices still reachable
    cannot beat the incumbent or cannot close back to the anchor.
    """
    if G.n > budget:
        raise BudgetError("longest-cycle search", f"{G.n} vertices", budget)
    best_len = 2  # cycles have length >= 3
    best_path: tuple[int, ...] | None = None
    adj = G.adj
    full_mask = (1 << G.n) - 1

    def reachable_from(v: int, allowed: int) -> int:
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for i in _bits(frontier):
                nxt |= adj[i]
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    path: list[int] = []

    def dfs(v: int, free: int, anchor: int) -> None:
        nonlocal best_len, best_path
        path.append(v)
        if len(path) >= 3 and adj[v] >> anchor & 1 and len(path) > best_len:
            best_len = len(path)
            best_path = tuple(path)
        reach = reachable_from(v, free)
        if len(path) + bin(reach & free).count("1") > best_len and adj[anchor] & reach:
            for w in _bits(adj[v] & free):
                dfs(w, free & ~(1 << w), anchor)
        path.pop()

    for anchor in range(G.n):
        above = full_mask & ~((1 << (anchor + 1)) - 1)
        path.append(anchor)
        for w in _bits(adj[anchor] & above):
            dfs(w, above & ~(1 << w), anchor)
        path.pop()
    return CycleWitness(best_path) if best_path is not None else None


# -- domination ----------------------------------------------------------------


def is_dominating(D: Iterable[int], G: FiniteGraph) -> bool:
    """Every vertex is in D or adjacent to a member of D."""
    cover = 0
    for d in D:
        if not 0 <= d < G.n:
            raise ValueError(f"vertex {d} is not in the graph")
        cover |= G.adj[d] | (1 << d)
    return cover == (1 << G.n) - 1


def minimum_dominating_set(G: FiniteGraph,
                           budget: int = DEFAULT_DOMINATING_BUDGET) -> frozenset[int]:
    """A dominating set of minimum size, by exact branch and bound."""
    if G.n > budget:
        raise BudgetError("dominating-set search", f"{G.n} vertices", budget)
    full = (1 << G.n) - 1
    closed = tuple(G.adj[i] | (1 << i) for i in range(G.n))
    # greedy cover for the initial upper bound
    chosen: list[int] = []
    covered = 0
    while covered != full:
        v = max(range(G.n), key=lambda i: bin(closed[i] & ~covered).count("1"))
        chosen.append(v)
        covered |= closed[v]
    best = list(chosen)
    max_gain = max(bin(c).count("1") for c in closed)

    def branch(covered: int, picked: list[int]) -> None:
        nonlocal best
        if covered == full:
            if len(picked) < len(best):
                best = list(picked)
            return
        missing = bin(full & ~covered).count("1")
        lower = (missing + max_gain - 1) // max_gain
        if len(picked) + lower >= len(best):
            return
        # branch on the undominated vertex with the fewest closed dominators
        target = min(_bits(full & ~covered),
                     key=lambda v: bin(closed[v]).count("1"))
        for d in _bits(closed[target]):
            picked.append(d)
            branch(covered | closed[d], picked)
            picked.pop()

    branch(0, [])
    return frozenset(best)


def lift_dominating(D: Iterable[Point], X: DigitalImage,
                    family: SubsetFamily | None = None,
                    budget: int = DEFAULT_POINT_BUDGET) -> frozenset[int]:
    """Indices (into the family's member order) of members meeting D."""
    if family is None:
        family = enumerate_all_subsets(X, budget)
    dmask = X.mask_of(D)
    return frozenset(i for i, m in enumerate(family.masks) if m & dmask)


# -- eccentricity, center, radius, diameter ------------------------------------


def _all_eccentricities(G: FiniteGraph) -> list[int]:
    eccs = []
    for v in range(G.n):
        dist = bfs_distances(G, v)
        if any(d is None for d in dist):
            raise ValueError("metric is undefined on a disconnected graph")
        eccs.append(max(dist))  # type: ignore[type-var]
    return eccs


def eccentricity(G: FiniteGraph, v: int) -> int:
    dist = bfs_distances(G, v)
    if any(d is None for d in dist):
        raise ValueError("metric is undefined on a disconnected graph")
    return max(dist)  # type: ignore[return-value]


def center(G: FiniteGraph) -> frozenset[int]:
    eccs = _all_eccentricities(G)
    r = min(eccs)
    return frozenset(v for v, e in enumerate(eccs) if e == r)


def radius(G: FiniteGraph) -> int:
    return min(_all_eccentricities(G))


def diameter(G: FiniteGraph) -> int:
    return max(_all_eccentricities(G))


# -- disconnecting sets ---------------------------------------------------------


def disconnects(Y: Iterable[Point], X: DigitalImage) -> bool:
    """True iff removing Y leaves the image disconnected."""
    removed = {tuple(p) for p in Y}
    for p in removed:
        if p not in X.point_set:
            raise ValueError(f"point {p} is not in the image")
    rest = [p for p in X.points if p not in removed]
    if not rest:
        raise ValueError("cannot remove every point of the image")
    return not is_connected(rest, X)


# -- export -------------------------------------------------------------------


def format_label(obj) -> str:
    """Human-readable vertex labels for points, members and functions."""
    if isinstance(obj, tuple):
        return str(obj[0]) if len(obj) == 1 else "(" + ",".join(map(str, obj)) + ")"
    if isinstance(obj, frozenset):
        return "{" + ",".join(format_label(p) for p in sorted(obj)) + "}"
    from .functions import FiniteFunction

    if isinstance(obj, FiniteFunction):
        return "[" + " ".join(f"{format_label(x)}>{format_label(y)}" for x, y in obj.pairs) + "]"
    return str(obj)


def to_dot(G: FiniteGraph, name: str = "G",
           highlight: CycleWitness | None = None) -> str:
    """Graphviz source for the graph; an optional cycle is drawn bold."""
    hot = set()
    if highlight is not None:
        seq = highlight.vertices
        hot = {tuple(sorted((seq[i], seq[(i + 1) % len(seq)]))) for i in range(len(seq))}
    out = io.StringIO()
    out.write(f"graph {name} {{\n")
    for i in range(G.n):
        out.write(f'  n{i} [label="{format_label(G.label_of(i))}"];\n')
    for i, j in G.edges():
        style = " [style=bold color=red]" if (i, j) in hot else ""
        out.write(f"  n{i} -- n{j}{style};\n")
    out.write("}\n")
    return out.getvalue()


def metrics_csv(G: FiniteGraph) -> str:
    """Per-vertex metric table: vertex, label, degree, eccentricity."""
    eccs = _all_eccentricities(G)
    lines = ["vertex,label,degree,eccentricity"]
    for v in range(G.n):
        label = format_label(G.label_of(v)).replace('"', "'")
        lines.append(f'{v},"{label}",{G.degree(v)},{eccs[v]}')
    return "\n".join(lines) + "\n"
