"""Function graphs and homotopy decision by component search.

The vertices of a function graph are the continuous maps X -> Y.  Two
distinct maps are pointwise-adjacent ("phi") when their values at every
point are adjacent or equal, and cross-adjacent ("psi") when values at any
two adjacent-or-equal domain points are adjacent or equal.  Homotopy is
decided by reachability in the phi graph and strong homotopy by
reachability in the psi graph; each witness path converts to a step table
that an independent verifier accepts.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterator

from .errors import BudgetError
from .functions import (FiniteFunction, constant_map, identity_map,
                        induced_map, is_continuous)
from .lattice import DigitalImage, _bits

#: Cap on the raw search space #Y ** #X of a function enumeration.
DEFAULT_FUNCTION_BUDGET = 10 ** 6

PHI = "phi"
PSI = "psi"


def _check_same_signature(f: FiniteFunction, g: FiniteFunction) -> None:
    if f.domain != g.domain or f.codomain != g.codomain:
        raise ValueError("functions must share domain and codomain")


def phi_adjacent(f: FiniteFunction, g: FiniteFunction) -> bool:
    """Pointwise closeness: f != g and f(x), g(x) adjacent or equal for all x."""
    _check_same_signature(f, g)
    if f.pairs == g.pairs:
        return False
    cod = f.codomain
    return all(cod.adjacent_or_equal(y, g.table[x]) for x, y in f.pairs)


def psi_adjacent(f: FiniteFunction, g: FiniteFunction) -> bool:
    """Cross closeness: f != g and f(x0), g(x1) adjacent or equal whenever x0, x1 are."""
    _check_same_signature(f, g)
    if f.pairs == g.pairs:
        return False
    dom, cod = f.domain, f.codomain
    for x0 in dom.vertices:
        fx = f.table[x0]
        for x1 in dom.vertices:
            if dom.adjacent_or_equal(x0, x1) and not cod.adjacent_or_equal(fx, g.table[x1]):
                return False
    return True


def psi_counterexample(f: FiniteFunction, g: FiniteFunction):
    """A domain pair x0, x1 violating the cross condition, or None."""
    _check_same_signature(f, g)
    dom, cod = f.domain, f.codomain
    for x0 in dom.vertices:
        for x1 in dom.vertices:
            if dom.adjacent_or_equal(x0, x1) and not cod.adjacent_or_equal(f.table[x0], g.table[x1]):
                return (x0, x1)
    return None


# -- enumeration of continuous maps -----------------------------------------


def enumerate_continuous_maps(X: DigitalImage, Y: DigitalImage,
                              budget: int = DEFAULT_FUNCTION_BUDGET) -> tuple[FiniteFunction, ...]:
    """Exactly the continuous maps X -> Y, in value order.

    Backtracks over the points of X in a connectivity-respecting order so a
    partial assignment is pruned as soon as an adjacent pair violates the
    adjacency-preservation criterion.
    """
    if len(Y) ** len(X) > budget:
        raise BudgetError("continuous-map enumeration", f"{len(Y)}^{len(X)} tables", budget)
    order: list[int] = []
    placed = set()
    nbr = X.neighbor_masks
    for comp in X.components():
        root = X.point_index[min(comp)]
        queue = deque([root])
        placed.add(root)
        while queue:
            i = queue.popleft()
            order.append(i)
            for j in _bits(nbr[i]):
                if j not in placed:
                    placed.add(j)
                    queue.append(j)
    # for each position in the order, the earlier positions it is adjacent to
    earlier: list[list[int]] = []
    for k, i in enumerate(order):
        earlier.append([t for t in range(k) if nbr[i] >> order[t] & 1])
    closed = Y.closed_neighbor_masks
    ny = len(Y)
    full = (1 << ny) - 1
    assignment = [0] * len(order)
    tables: list[tuple[int, ...]] = []

    def backtrack(k: int) -> None:
        if k == len(order):
            tables.append(tuple(assignment))
            return
        allowed = full
        for t in earlier[k]:
            allowed &= closed[assignment[t]]
            if not allowed:
                return
        for yi in _bits(allowed):
            assignment[k] = yi
            backtrack(k + 1)

    backtrack(0)
    # normalize: value tuple indexed by X's canonical point order
    pos_of = {i: k for k, i in enumerate(order)}
    norm = sorted(tuple(tab[pos_of[i]] for i in range(len(X))) for tab in tables)
    ypts = Y.points
    xpts = X.points
    return tuple(FiniteFunction(X, Y, tuple((xpts[i], ypts[tab[i]]) for i in range(len(xpts))))
                 for tab in norm)


# -- function graphs ---------------------------------------------------------


@dataclass(frozen=True)
class FunctionGraph:
    """The graph of continuous maps X -> Y under the phi or psi adjacency."""

    domain: DigitalImage
    codomain: DigitalImage
    flavor: str
    vertices: tuple[FiniteFunction, ...]
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def vertex_index(self) -> dict[FiniteFunction, int]:
        return {f: i for i, f in enumerate(self.vertices)}

    @cached_property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @cached_property
    def _neighbor_lists(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in self.vertices]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    def index_of(self, f: FiniteFunction) -> int:
        try:
            return self.vertex_index[f]
        except KeyError:
            raise ValueError("function is not a vertex of this graph") from None

    def adjacent(self, f: FiniteFunction, g: FiniteFunction) -> bool:
        i, j = self.index_of(f), self.index_of(g)
        if i == j:
            return False
        return (min(i, j), max(i, j)) in self._edge_set

    def adjacent_or_equal(self, f, g) -> bool:
        return f == g or self.adjacent(f, g)

    def edge_index_pairs(self) -> Iterator[tuple[int, int]]:
        return iter(self.edges)

    def find_path(self, f: FiniteFunction, g: FiniteFunction,
                  allowed=None) -> tuple[FiniteFunction, ...] | None:
        """A shortest path of vertices from f to g, or None if separated.

        ``allowed`` optionally restricts the search to a vertex subgraph.
        """
        src, dst = self.index_of(f), self.index_of(g)
        if allowed is not None and not (allowed(self.vertices[src])
                                        and allowed(self.vertices[dst])):
            return None
        if src == dst:
            return (self.vertices[src],)
        prev = {src: -1}
        queue = deque([src])
        nbrs = self._neighbor_lists
        while queue:
            i = queue.popleft()
            for j in nbrs[i]:
                if j not in prev and (allowed is None or allowed(self.vertices[j])):
                    prev[j] = i
                    if j == dst:
                        path = [j]
                        while path[-1] != src:
                            path.append(prev[path[-1]])
                        return tuple(self.vertices[k] for k in reversed(path))
                    queue.append(j)
        return None

    def component_of(self, f: FiniteFunction) -> frozenset[int]:
        src = self.index_of(f)
        seen = {src}
        queue = deque([src])
        nbrs = self._neighbor_lists
        while queue:
            i = queue.popleft()
            for j in nbrs[i]:
                if j not in seen:
                    seen.add(j)
                    queue.append(j)
        return frozenset(seen)


def _phi_edges(X: DigitalImage, Y: DigitalImage,
               value_rows: list[tuple[int, ...]]) -> list[tuple[int, int]]:
    """Phi edges by generating pointwise-close candidate tables."""
    closed = Y.closed_neighbor_masks
    closed_lists = [tuple(_bits(m)) for m in closed]
    index = {row: i for i, row in enumerate(value_rows)}
    edges = []
    for i, row in enumerate(value_rows):
        for cand in product(*(closed_lists[v] for v in row)):
            j = index.get(cand)
            if j is not None and j > i:
                edges.append((i, j))
    return edges


def _psi_filter(X: DigitalImage, Y: DigitalImage, value_rows: list[tuple[int, ...]],
                phi_edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Keep the phi edges satisfying the cross condition (psi implies phi)."""
    closed_x = X.closed_neighbor_masks
    closed_y = Y.closed_neighbor_masks
    n = len(X)
    # per table, the mask of values taken on each closed neighborhood
    nbhd_values = []
    for row in value_rows:
        masks = []
        for i in range(n):
            m = 0
            for j in _bits(closed_x[i]):
                m |= 1 << row[j]
            masks.append(m)
        nbhd_values.append(tuple(masks))
    edges = []
    for i, j in phi_edges:
        fi, gj = value_rows[i], nbhd_values[j]
        if all(gj[k] & ~closed_y[fi[k]] == 0 for k in range(n)):
            edges.append((i, j))
    return edges


@lru_cache(maxsize=32)
def build_function_graph(X: DigitalImage, Y: DigitalImage, flavor: str = PHI,
                         budget: int = DEFAULT_FUNCTION_BUDGET) -> FunctionGraph:
    if flavor not in (PHI, PSI):
        raise ValueError(f"unknown function-graph flavor {flavor!r}")
    maps = enumerate_continuous_maps(X, Y, budget=budget)
    yindex = Y.point_index
    value_rows = [tuple(yindex[y] for _, y in f.pairs) for f in maps]
    phi = _phi_edges(X, Y, value_rows)
    edges = phi if flavor == PHI else _psi_filter(X, Y, value_rows, phi)
    return FunctionGraph(X, Y, flavor, maps, tuple(edges))


# -- homotopy tables ---------------------------------------------------------


@dataclass(frozen=True)
class HomotopyTable:
    """A step table H(x, t) given by its time slices H_0 ... H_m."""

    domain: object
    codomain: object
    slices: tuple[FiniteFunction, ...]

    def __post_init__(self):
        if not self.slices:
            raise ValueError("a homotopy table needs at least one slice")
        for h in self.slices:
            if h.domain != self.domain or h.codomain != self.codomain:
                raise ValueError("slice signature does not match the table")

    @property
    def m(self) -> int:
        return len(self.slices) - 1

    def __call__(self, x, t: int):
        return self.slices[t].table[x]


@dataclass(frozen=True)
class HomotopyDecision:
    """Outcome of a homotopy search: related or not, plus the witness path."""

    related: bool
    path: tuple[FiniteFunction, ...] | None

    def __bool__(self) -> bool:
        return self.related

    def table(self) -> HomotopyTable | None:
        if self.path is None:
            return None
        first = self.path[0]
        return HomotopyTable(first.domain, first.codomain, self.path)


def homotopic(f: FiniteFunction, g: FiniteFunction,
              budget: int = DEFAULT_FUNCTION_BUDGET,
              graph: FunctionGraph | None = None) -> HomotopyDecision:
    """Decide homotopy of continuous f, g by pointwise-adjacency reachability."""
    _check_same_signature(f, g)
    if graph is None:
        graph = build_function_graph(f.domain, f.codomain, PHI, budget)
    path = graph.find_path(f, g)
    return HomotopyDecision(path is not None, path)


def strongly_homotopic(f: FiniteFunction, g: FiniteFunction,
                       budget: int = DEFAULT_FUNCTION_BUDGET,
                       graph: FunctionGraph | None = None) -> HomotopyDecision:
    """Decide strong homotopy by cross-adjacency reachability."""
    _check_same_signature(f, g)
    if graph is None:
        graph = build_function_graph(f.domain, f.codomain, PSI, budget)
    path = graph.find_path(f, g)
    return HomotopyDecision(path is not None, path)


def pointed_homotopic(f: FiniteFunction, g: FiniteFunction, basepoint,
                      budget: int = DEFAULT_FUNCTION_BUDGET,
                      strong: bool = False,
                      graph: FunctionGraph | None = None) -> HomotopyDecision:
    """Decide (strong) homotopy holding the basepoint fixed.

    The search runs in the subgraph of maps agreeing with f at the
    basepoint, so every step of a witness keeps the basepoint still.
    """
    _check_same_signature(f, g)
    if basepoint not in f.table:
        raise ValueError(f"basepoint {basepoint!r} is not a domain vertex")
    fixed = f.table[basepoint]
    if g.table[basepoint] != fixed:
        return HomotopyDecision(False, None)
    if graph is None:
        graph = build_function_graph(f.domain, f.codomain,
                                     PSI if strong else PHI, budget)
    path = graph.find_path(f, g, allowed=lambda h: h.table[basepoint] == fixed)
    return HomotopyDecision(path is not None, path)


def verify_homotopy(H: HomotopyTable, f: FiniteFunction, g: FiniteFunction,
                    mode: str = "plain", fixed_point=None) -> bool:
    """Check a step table against the deformation conditions.

    Plain mode: endpoint slices equal f and g, every slice is continuous,
    and every track moves by at most one adjacency step at a time.  Strong
    mode additionally requires values at adjacent-or-equal domain points in
    consecutive (or equal) time steps to be adjacent or equal.  A fixed
    point must never move.
    """
    if mode not in ("plain", "strong"):
        raise ValueError(f"unknown homotopy mode {mode!r}")
    if H.domain != f.domain or H.codomain != f.codomain:
        return False
    if f.domain != g.domain or f.codomain != g.codomain:
        return False
    if H.slices[0].pairs != f.pairs or H.slices[-1].pairs != g.pairs:
        return False
    cod = H.codomain
    for h in H.slices:
        if not is_continuous(h):
            return False
    for h0, h1 in zip(H.slices, H.slices[1:]):
        for x in _space_vertices(H.domain):
            if not cod.adjacent_or_equal(h0.table[x], h1.table[x]):
                return False
    if mode == "strong":
        dom = H.domain
        verts = _space_vertices(dom)
        for t0, h0 in enumerate(H.slices):
            for t1 in (t0, t0 + 1):
                if t1 > H.m:
                    continue
                h1 = H.slices[t1]
                for x in verts:
                    for y in verts:
                        if dom.adjacent_or_equal(x, y):
                            if not cod.adjacent_or_equal(h0.table[x], h1.table[y]):
                                return False
    if fixed_point is not None:
        base = H.slices[0].table[fixed_point]
        if any(h.table[fixed_point] != base for h in H.slices):
            return False
    return True


def _space_vertices(space):
    return space.vertices


# -- induced homotopies ------------------------------------------------------


def lift_homotopy_to_hyperspace(H: HomotopyTable, kind: str = "connected",
                                budget: int = 24) -> HomotopyTable:
    """The family-level table A, t |-> H_t(A) over the chosen family kind."""
    dom_fam = _family_cached(H.domain, kind, budget)
    cod_fam = _family_cached(H.codomain, kind, budget)
    lifted = tuple(induced_map(h, dom_fam, codomain_family=cod_fam) for h in H.slices)
    return HomotopyTable(dom_fam, cod_fam, lifted)


@lru_cache(maxsize=64)
def _family_cached(image: DigitalImage, kind: str, budget: int):
    from .functions import _family_over

    return _family_over(image, kind, budget)


# -- contractibility and post-composition ------------------------------------


def is_contractible(X: DigitalImage, budget: int = DEFAULT_FUNCTION_BUDGET) -> bool:
    """True iff the identity reaches some constant map in the phi graph of X^X."""
    graph = build_function_graph(X, X, PHI, budget)
    ident = identity_map(X)
    component = graph.component_of(ident)
    constants = {graph.index_of(constant_map(X, X, p)) for p in X.points}
    return bool(component & constants)


def postcompose_map(f: FiniteFunction, W: DigitalImage,
                    budget: int = DEFAULT_FUNCTION_BUDGET) -> FiniteFunction:
    """The vertex map F |-> f o F from the phi graph of X^W to that of Y^W."""
    if not is_continuous(f):
        raise ValueError("post-composition needs a continuous map")
    source = build_function_graph(W, f.domain, PHI, budget)
    target = build_function_graph(W, f.codomain, PHI, budget)
    from .functions import compose

    table = tuple((F, compose(f, F)) for F in source.vertices)
    return FiniteFunction(source, target, table)


# -- JSON ------------------------------------------------------------------


def homotopy_to_json(H: HomotopyTable) -> dict:
    from .functions import function_to_json

    return {"m": H.m, "slices": [function_to_json(h) for h in H.slices]}


def homotopy_from_json(doc: dict) -> HomotopyTable:
    from .functions import function_from_json

    if not isinstance(doc, dict):
        raise ValueError("homotopy document must be a JSON object")
    try:
        m = doc["m"]
        slices = [function_from_json(s) for s in doc["slices"]]
    except KeyError as missing:
        raise ValueError(f"homotopy document is missing {missing}") from None
    if not slices or m != len(slices) - 1:
        raise ValueError("homotopy document slice count does not match m")
    return HomotopyTable(slices[0].domain, slices[0].codomain, tuple(slices))
