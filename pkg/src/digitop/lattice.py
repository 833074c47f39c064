"""Digital images: finite sets of lattice points in Z^n under a c_u adjacency.

A digital image is treated as a graph whose vertices are lattice points and
whose edges are given by the c_u relation: two distinct points are adjacent
when at most u coordinates differ by exactly 1 and all other coordinates
agree.  Everything here is immutable and safe to share between threads.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

Point = tuple[int, ...]

#: The c_u selector is a plain positive integer u with 1 <= u <= dim.
AdjacencyKind = int


def cu_adjacent(x: Point, y: Point, u: AdjacencyKind) -> bool:
    """c_u adjacency: x != y, at most u coordinates differ by exactly 1, rest equal."""
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: point {x} vs point {y}")
    if not 1 <= u <= len(x):
        raise ValueError(f"adjacency c_{u} is invalid for dimension {len(x)}")
    if x == y:
        return False
    ones = 0
    for a, b in zip(x, y):
        d = a - b
        if d == 0:
            continue
        if d == 1 or d == -1:
            ones += 1
        else:
            return False
    return ones <= u


def adjacent_or_equal(x: Point, y: Point, u: AdjacencyKind) -> bool:
    """The closed relation: equal or c_u-adjacent."""
    return x == y or cu_adjacent(x, y, u)


@lru_cache(maxsize=None)
def _step_offsets(dim: int, u: int) -> tuple[Point, ...]:
    """All nonzero offsets in {-1,0,1}^dim with at most u nonzero entries."""
    out = []
    for delta in itertools.product((-1, 0, 1), repeat=dim):
        k = sum(1 for d in delta if d != 0)
        if 1 <= k <= u:
            out.append(delta)
    return tuple(out)


def _as_point(p, dim: int | None = None) -> Point:
    pt = tuple(p)
    if not pt or not all(isinstance(c, int) for c in pt):
        raise ValueError(f"not a lattice point: {p!r}")
    if dim is not None and len(pt) != dim:
        raise ValueError(f"point {pt} has dimension {len(pt)}, expected {dim}")
    return pt


@dataclass(frozen=True)
class DigitalImage:
    """A finite digital image (X, c_u): lattice points plus a c_u selector.

    Points are stored sorted lexicographically and must be distinct, so two
    images are equal exactly when they have the same point set, dimension
    and adjacency.
    """

    dim: int
    points: tuple[Point, ...]
    adjacency: AdjacencyKind

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if not 1 <= self.adjacency <= self.dim:
            raise ValueError(
                f"adjacency c_{self.adjacency} is invalid for dimension {self.dim}")
        pts = tuple(sorted(_as_point(p, self.dim) for p in self.points))
        if not pts:
            raise ValueError("a digital image needs at least one point")
        for a, b in zip(pts, pts[1:]):
            if a == b:
                raise ValueError(f"duplicate point {a}")
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, points: Iterable, adjacency: AdjacencyKind = 1) -> DigitalImage:
        pts = [_as_point(p) for p in points]
        if not pts:
            raise ValueError("a digital image needs at least one point")
        return cls(len(pts[0]), tuple(pts), adjacency)

    # -- the generic vertex-space protocol (shared with families and
    #    function graphs): vertices / adjacent / adjacent_or_equal /
    #    edge_index_pairs ------------------------------------------------

    @property
    def vertices(self) -> tuple[Point, ...]:
        return self.points

    def adjacent(self, x: Point, y: Point) -> bool:
        return cu_adjacent(x, y, self.adjacency)

    def adjacent_or_equal(self, x: Point, y: Point) -> bool:
        return x == y or cu_adjacent(x, y, self.adjacency)

    def edge_index_pairs(self) -> Iterator[tuple[int, int]]:
        idx = self.point_index
        for i, p in enumerate(self.points):
            for q in self.neighbors(p):
                j = idx[q]
                if i < j:
                    yield (i, j)

    # -- basic queries ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.point_set

    @cached_property
    def point_set(self) -> frozenset[Point]:
        return frozenset(self.points)

    @cached_property
    def point_index(self) -> dict[Point, int]:
        return {p: i for i, p in enumerate(self.points)}

    def neighbors(self, x: Point) -> frozenset[Point]:
        """N(X, x, c_u): the points of the image adjacent to x."""
        x = _as_point(x, self.dim)
        if x not in self.point_set:
            raise ValueError(f"point {x} is not in the image")
        if 3 ** self.dim <= 4 * len(self.points):
            found = []
            for delta in _step_offsets(self.dim, self.adjacency):
                y = tuple(a + d for a, d in zip(x, delta))
                if y in self.point_set:
                    found.append(y)
            return frozenset(found)
        return frozenset(y for y in self.points if cu_adjacent(x, y, self.adjacency))

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Per point, the bitmask (over the point order) of its open neighborhood."""
        idx = self.point_index
        masks = [0] * len(self.points)
        for i, p in enumerate(self.points):
            for q in self.neighbors(p):
                masks[i] |= 1 << idx[q]
        return tuple(masks)

    @cached_property
    def closed_neighbor_masks(self) -> tuple[int, ...]:
        return tuple(m | (1 << i) for i, m in enumerate(self.neighbor_masks))

    def mask_of(self, pts: Iterable[Point]) -> int:
        idx = self.point_index
        mask = 0
        for p in pts:
            p = _as_point(p, self.dim)
            if p not in idx:
                raise ValueError(f"point {p} is not in the image")
            mask |= 1 << idx[p]
        return mask

    def points_of(self, mask: int) -> frozenset[Point]:
        return frozenset(self.points[i] for i in _bits(mask))

    # -- connectivity ----------------------------------------------------

    def is_connected_subset(self, pts: Iterable[Point]) -> bool:
        return is_connected(pts, self)

    def is_connected(self) -> bool:
        return is_connected(self.points, self)

    def components(self) -> tuple[frozenset[Point], ...]:
        """The c_u components of the image, in order of their smallest point."""
        remaining = set(self.points)
        comps = []
        for start in self.points:
            if start not in remaining:
                continue
            seen = {start}
            queue = deque([start])
            while queue:
                p = queue.popleft()
                for q in self.neighbors(p):
                    if q in remaining and q not in seen:
                        seen.add(q)
                        queue.append(q)
            remaining -= seen
            comps.append(frozenset(seen))
        return tuple(comps)

    def restrict(self, pts: Iterable[Point]) -> DigitalImage:
        """The image on a nonempty subset of the points, same adjacency."""
        sub = [_as_point(p, self.dim) for p in pts]
        for p in sub:
            if p not in self.point_set:
                raise ValueError(f"point {p} is not in the image")
        return DigitalImage(self.dim, tuple(sub), self.adjacency)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def interval(a: int, b: int) -> DigitalImage:
    """The digital interval [a, b]_Z with c_1 adjacency."""
    if a > b:
        raise ValueError(f"empty interval [{a}, {b}]")
    return DigitalImage(1, tuple((i,) for i in range(a, b + 1)), 1)


def neighbors(X: DigitalImage, x: Point) -> frozenset[Point]:
    return X.neighbors(x)


def is_connected(A: Iterable[Point], X: DigitalImage) -> bool:
    """True iff every pair of points of A is joined by a c_u path inside A."""
    pts = {_as_point(p, X.dim) for p in A}
    if not pts:
        raise ValueError("connectivity of the empty set is undefined here")
    for p in pts:
        if p not in X.point_set:
            raise ValueError(f"point {p} is not in the image")
    start = next(iter(pts))
    seen = {start}
    queue = deque([start])
    u = X.adjacency
    small_dim = 3 ** X.dim <= 4 * len(pts)
    while queue:
        p = queue.popleft()
        if small_dim:
            cand = (tuple(a + d for a, d in zip(p, delta))
                    for delta in _step_offsets(X.dim, u))
        else:
            cand = (q for q in pts if cu_adjacent(p, q, u))
        for q in cand:
            if q in pts and q not in seen:
                seen.add(q)
                queue.append(q)
    return len(seen) == len(pts)


# -- paths ----------------------------------------------------------------


@dataclass(frozen=True)
class LatticePath:
    """A c_u path y_0 ... y_m in an image: consecutive steps adjacent or equal."""

    image: DigitalImage
    steps: tuple[Point, ...]

    def __post_init__(self):
        steps = tuple(_as_point(p, self.image.dim) for p in self.steps)
        if not steps:
            raise ValueError("a path needs at least one point")
        for p in steps:
            if p not in self.image.point_set:
                raise ValueError(f"path point {p} is not in the image")
        for a, b in zip(steps, steps[1:]):
            if not self.image.adjacent_or_equal(a, b):
                raise ValueError(f"consecutive path points {a}, {b} are not adjacent")
        object.__setattr__(self, "steps", steps)

    @property
    def start(self) -> Point:
        return self.steps[0]

    @property
    def end(self) -> Point:
        return self.steps[-1]

    @property
    def length(self) -> int:
        """Number of steps m (one less than the number of entries)."""
        return len(self.steps) - 1


def concatenate(p1: LatticePath, p2: LatticePath) -> LatticePath:
    """The product path p1 . p2; the shared endpoint appears once."""
    if p1.image != p2.image:
        raise ValueError("paths live in different images")
    if p1.end != p2.start:
        raise ValueError(f"cannot concatenate: {p1.end} != {p2.start}")
    return LatticePath(p1.image, p1.steps + p2.steps[1:])


# -- small named images ----------------------------------------------------

# A 5-point cycle cannot be realized with c_1 (those graphs are bipartite)
# and does not embed in (Z^2, c_2) without chords, so S_5 lives in Z^3
# under c_3.  Even lengths >= 6 use a flattened hexagon in (Z^2, c_2).
_PENTAGON = ((0, 0, 0), (1, 0, 1), (2, 1, 0), (1, 2, -1), (0, 1, -1))


def cycle_points(n: int) -> tuple[Point, ...]:
    """The points of an n-cycle image, in cyclic order."""
    if n == 4:
        return ((0, 0), (1, 0), (1, 1), (0, 1))
    if n == 5:
        return _PENTAGON
    if n >= 6 and n % 2 == 0:
        k = n // 2 - 1
        top = [(i, 1) for i in range(1, k + 1)]
        bottom = [(i, -1) for i in range(k, 0, -1)]
        return tuple([(0, 0)] + top + [(k + 1, 0)] + bottom)
    raise ValueError(f"no cycle construction for n={n} (need 4, 5 or even >= 6)")


def cycle_image(n: int) -> DigitalImage:
    """A digital image whose adjacency graph is exactly an n-cycle."""
    pts = cycle_points(n)
    u = {4: 1, 5: 3}.get(n, 2)
    return DigitalImage.of(pts, u)


# -- JSON ------------------------------------------------------------------


def image_to_json(X: DigitalImage) -> dict:
    return {
        "dim": X.dim,
        "adjacency": f"c{X.adjacency}",
        "points": [list(p) for p in X.points],
    }


def image_from_json(doc: dict) -> DigitalImage:
    if not isinstance(doc, dict):
        raise ValueError("image document must be a JSON object")
    try:
        dim = doc["dim"]
        adjacency = doc["adjacency"]
        points = doc["points"]
    except KeyError as missing:
        raise ValueError(f"image document is missing {missing}") from None
    if not isinstance(dim, int):
        raise ValueError(f"dim must be an integer, got {dim!r}")
    if not isinstance(points, list):
        raise ValueError("points must be an array of point arrays")
    if not isinstance(adjacency, str) or not adjacency.startswith("c"):
        raise ValueError(f"bad adjacency selector {adjacency!r} (expected e.g. 'c1')")
    try:
        u = int(adjacency[1:])
    except ValueError:
        raise ValueError(f"bad adjacency selector {adjacency!r}") from None
    return DigitalImage(dim, tuple(tuple(p) for p in points), u)
