"""Hyperspaces of digital images: (2^X, kappa') and K(X, kappa').

Members of a hyperspace are nonempty subsets of the base image, encoded as
bit-vectors over the image's canonical point order.  Two distinct members
A, B are adjacent when every point of A is within one step of B and every
point of B is within one step of A (the closed-coverage reading of the
hyperspace adjacency), which reduces to two bitmask coverage checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import BudgetError
from .lattice import DigitalImage, Point, _bits

#: Images with more points than this may not be expanded into hyperspaces.
DEFAULT_POINT_BUDGET = 24

FAMILY_KINDS = ("full", "connected", "custom")


def _check_budget(X: DigitalImage, budget: int) -> None:
    if len(X) > budget:
        raise BudgetError("hyperspace enumeration", f"{len(X)} points", budget)


@dataclass(frozen=True)
class SubsetFamily:
    """A family of nonempty subsets of a base image, with the lifted adjacency.

    ``masks`` holds the members as bit-vectors in ascending order; the
    ``members`` view materializes them as frozensets of points.  ``kind``
    records whether this is all of 2^X, all of K(X), or a custom subfamily.
    """

    base: DigitalImage
    masks: tuple[int, ...]
    kind: str

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        masks = tuple(sorted(self.masks))
        full = (1 << len(self.base)) - 1
        for m in masks:
            if m == 0:
                raise ValueError("the empty set is not a hyperspace member")
            if m & ~full:
                raise ValueError(f"member mask {m:#x} is not a subset of the base")
        for a, b in zip(masks, masks[1:]):
            if a == b:
                raise ValueError("duplicate family member")
        if self.kind == "full" and len(masks) != (1 << len(self.base)) - 1:
            raise ValueError("full family must contain every nonempty subset")
        if self.kind == "connected":
            for m in masks:
                if not self.base.is_connected_subset(self.base.points_of(m)):
                    raise ValueError("connected family contains a disconnected member")
        object.__setattr__(self, "masks", masks)

    def __len__(self) -> int:
        return len(self.masks)

    @cached_property
    def members(self) -> tuple[frozenset[Point], ...]:
        return tuple(self.base.points_of(m) for m in self.masks)

    @cached_property
    def member_index(self) -> dict[frozenset[Point], int]:
        return {mem: i for i, mem in enumerate(self.members)}

    @cached_property
    def _mask_index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.masks)}

    @cached_property
    def _covers(self) -> tuple[int, ...]:
        """Per member, the union of closed neighborhoods of its points."""
        closed = self.base.closed_neighbor_masks
        out = []
        for m in self.masks:
            c = 0
            for i in _bits(m):
                c |= closed[i]
            out.append(c)
        return tuple(out)

    def index_of(self, member: Iterable[Point]) -> int:
        mem = frozenset(member)
        try:
            return self.member_index[mem]
        except KeyError:
            raise ValueError(f"not a member of the family: {sorted(mem)}") from None

    def __contains__(self, member) -> bool:
        return frozenset(member) in self.member_index

    # -- vertex-space protocol -------------------------------------------

    @property
    def vertices(self) -> tuple[frozenset[Point], ...]:
        return self.members

    def adjacent(self, A: frozenset[Point], B: frozenset[Point]) -> bool:
        if A == B:
            return False
        i, j = self.index_of(A), self.index_of(B)
        return self._adjacent_by_index(i, j)

    def adjacent_or_equal(self, A, B) -> bool:
        return frozenset(A) == frozenset(B) or self.adjacent(A, B)

    def _adjacent_by_index(self, i: int, j: int) -> bool:
        masks, covers = self.masks, self._covers
        return (masks[i] & ~covers[j]) == 0 and (masks[j] & ~covers[i]) == 0

    def edge_index_pairs(self) -> Iterator[tuple[int, int]]:
        masks, covers = self.masks, self._covers
        n = len(masks)
        for i in range(n):
            mi, ci = masks[i], covers[i]
            for j in range(i + 1, n):
                if (mi & ~covers[j]) == 0 and (masks[j] & ~ci) == 0:
                    yield (i, j)

    def subfamily(self, members: Iterable[Iterable[Point]], kind: str = "custom") -> SubsetFamily:
        masks = tuple(self.base.mask_of(m) for m in members)
        for m in masks:
            if m not in self._mask_index:
                raise ValueError("subfamily member is not a member of this family")
        return SubsetFamily(self.base, masks, kind)


def hyper_adjacent(A: Iterable[Point], B: Iterable[Point], X: DigitalImage) -> bool:
    """Hyperspace adjacency of two distinct nonempty subsets of X.

    True iff every point of A has a partner in B within the closed adjacency
    and every point of B has one in A.
    """
    a = X.mask_of(A)
    b = X.mask_of(B)
    if a == 0 or b == 0:
        raise ValueError("hyperspace members must be nonempty")
    if a == b:
        raise ValueError("hyperspace adjacency is between distinct members")
    closed = X.closed_neighbor_masks
    cover_a = 0
    for i in _bits(a):
        cover_a |= closed[i]
    if b & ~cover_a:
        return False
    cover_b = 0
    for i in _bits(b):
        cover_b |= closed[i]
    return (a & ~cover_b) == 0


def enumerate_all_subsets(X: DigitalImage, budget: int = DEFAULT_POINT_BUDGET) -> SubsetFamily:
    """The full hyperspace 2^X: every nonempty subset, 2^n - 1 members."""
    _check_budget(X, budget)
    n = len(X)
    return SubsetFamily(X, tuple(range(1, 1 << n)), "full")


def enumerate_connected_subsets(X: DigitalImage, budget: int = DEFAULT_POINT_BUDGET) -> SubsetFamily:
    """K(X): exactly the connected nonempty subsets, each generated once.

    Incremental growth: for each root point, connected sets whose smallest
    point is the root are grown by adding exclusive neighbors with larger
    index, so no set is ever produced twice and the power set is never
    scanned.
    """
    _check_budget(X, budget)
    nbr = X.neighbor_masks
    n = len(X)
    out: list[int] = []

    def extend(sub: int, ext: int, snb: int, above: int) -> None:
        out.append(sub)
        while ext:
            low = ext & -ext
            ext ^= low
            w = low.bit_length() - 1
            grown = nbr[w] & above & ~snb
            extend(sub | low, ext | grown, snb | nbr[w] | low, above)

    for v in range(n):
        above = ~((1 << (v + 1)) - 1)
        extend(1 << v, nbr[v] & above, nbr[v] | (1 << v), above)
    return SubsetFamily(X, tuple(out), "connected")


@dataclass(frozen=True)
class HypergraphView:
    """A subset family together with its explicit edge list."""

    family: SubsetFamily
    edges: tuple[tuple[int, int], ...]

    @property
    def base(self) -> DigitalImage:
        return self.family.base

    @property
    def members(self) -> tuple[frozenset[Point], ...]:
        return self.family.members

    @cached_property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    # -- vertex-space protocol -------------------------------------------

    @property
    def vertices(self) -> tuple[frozenset[Point], ...]:
        return self.family.members

    def adjacent(self, A, B) -> bool:
        i, j = self.family.index_of(A), self.family.index_of(B)
        return (min(i, j), max(i, j)) in self._edge_set

    def adjacent_or_equal(self, A, B) -> bool:
        return frozenset(A) == frozenset(B) or self.adjacent(A, B)

    def edge_index_pairs(self) -> Iterator[tuple[int, int]]:
        return iter(self.edges)


def hyperspace_graph(family: SubsetFamily) -> HypergraphView:
    """The graph on the family's members under the lifted adjacency."""
    return HypergraphView(family, tuple(family.edge_index_pairs()))


def union_of_family(W: Iterable[Iterable[Point]]) -> frozenset[Point]:
    """The union of a nonempty collection of members."""
    members = [frozenset(m) for m in W]
    if not members:
        raise ValueError("union of an empty collection of members")
    out: frozenset[Point] = frozenset()
    for m in members:
        out |= m
    return out


def triangle_image(a: int, b: int) -> DigitalImage:
    """The staircase triangle {(x, y) : a <= x <= y <= b} under c_2."""
    if a > b:
        raise ValueError(f"empty triangle for a={a} > b={b}")
    pts = tuple((x, y) for x in range(a, b + 1) for y in range(x, b + 1))
    return DigitalImage(2, pts, 2)


def interval_triangle_iso(a: int, b: int):
    """The map [m, n] |-> (m, n) from K([a, b]_Z) onto the c_2 triangle.

    Returned as a function object whose domain is the connected-subset
    family, so the isomorphism checker in :mod:`digitop.functions` can
    certify it directly.
    """
    from .functions import FiniteFunction

    if a > b:
        raise ValueError(f"empty interval [{a}, {b}]")
    from .lattice import interval

    family = enumerate_connected_subsets(interval(a, b))
    tri = triangle_image(a, b)
    table = {}
    for member in family.members:
        xs = sorted(p[0] for p in member)
        table[member] = (xs[0], xs[-1])
    return FiniteFunction.from_table(family, tri, table)


# -- JSON ------------------------------------------------------------------


def family_to_json(family: SubsetFamily) -> dict:
    from .lattice import image_to_json

    return {
        "base": image_to_json(family.base),
        "kind": family.kind,
        "members": [[list(p) for p in sorted(m)] for m in family.members],
    }


def family_from_json(doc: dict) -> SubsetFamily:
    from .lattice import image_from_json

    if not isinstance(doc, dict):
        raise ValueError("family document must be a JSON object")
    try:
        base = image_from_json(doc["base"])
        kind = doc["kind"]
        members = doc["members"]
    except KeyError as missing:
        raise ValueError(f"family document is missing {missing}") from None
    masks = tuple(base.mask_of(tuple(tuple(p) for p in m)) for m in members)
    return SubsetFamily(base, masks, kind)
