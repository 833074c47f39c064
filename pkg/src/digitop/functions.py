"""Single-valued maps between digital images and their induced hyperspace maps.

A :class:`FiniteFunction` is a total table between two finite vertex spaces.
The usual case is image -> image, but the same class carries maps whose
domain or codomain is a subset family or a function graph: every space
exposes ``vertices``, ``adjacent`` and ``adjacent_or_equal``, and the
continuity, isomorphism and retraction checkers only use that protocol.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .hyperspace import SubsetFamily, enumerate_all_subsets, enumerate_connected_subsets
from .lattice import DigitalImage, Point


def adjacent_vertex_pairs(space) -> Iterator[tuple]:
    """All unordered adjacent vertex pairs of a space, in canonical order."""
    verts = space.vertices
    for i, j in space.edge_index_pairs():
        yield verts[i], verts[j]


@dataclass(frozen=True)
class FiniteFunction:
    """A total map between two vertex spaces, stored as a canonical pair table."""

    domain: object
    codomain: object
    pairs: tuple[tuple[object, object], ...]

    def __post_init__(self):
        table = dict(self.pairs)
        verts = self.domain.vertices
        if len(self.pairs) != len(verts) or set(table) != set(verts):
            raise ValueError("function table must be total on the domain")
        cod = set(self.codomain.vertices)
        for x, y in table.items():
            if y not in cod:
                raise ValueError(f"value {y!r} at {x!r} is outside the codomain")
        object.__setattr__(self, "pairs", tuple((x, table[x]) for x in verts))

    @classmethod
    def from_table(cls, domain, codomain, table: Mapping) -> "FiniteFunction":
        return cls(domain, codomain, tuple(table.items()))

    @cached_property
    def table(self) -> dict:
        return dict(self.pairs)

    def __call__(self, x):
        return self.table[x]

    def image_of(self, A: Iterable) -> frozenset:
        return frozenset(self.table[x] for x in A)

    def values(self) -> tuple:
        return tuple(y for _, y in self.pairs)

    def __repr__(self):
        body = ", ".join(f"{x}->{y}" for x, y in self.pairs)
        return f"<map {body}>"


class FamilyFunction(FiniteFunction):
    """A map between subset families; members go to members."""


def identity_map(space) -> FiniteFunction:
    return FiniteFunction(space, space, tuple((v, v) for v in space.vertices))


def constant_map(domain, codomain, value) -> FiniteFunction:
    return FiniteFunction(domain, codomain, tuple((v, value) for v in domain.vertices))


def compose(g: FiniteFunction, f: FiniteFunction) -> FiniteFunction:
    """g after f."""
    if g.domain.vertices != f.codomain.vertices:
        raise ValueError("composition mismatch: codomain of f is not domain of g")
    cls = FamilyFunction if isinstance(f, FamilyFunction) and isinstance(g, FamilyFunction) else FiniteFunction
    return cls(f.domain, g.codomain, tuple((x, g.table[y]) for x, y in f.pairs))


# -- continuity -------------------------------------------------------------


def is_continuous(f: FiniteFunction) -> bool:
    """True iff adjacent domain vertices map to adjacent-or-equal values."""
    return continuity_counterexample(f) is None


def continuity_counterexample(f: FiniteFunction):
    """An adjacent domain pair whose images are neither adjacent nor equal, or None."""
    table = f.table
    cod = f.codomain
    for x, y in adjacent_vertex_pairs(f.domain):
        if not cod.adjacent_or_equal(table[x], table[y]):
            return (x, y)
    return None


def is_family_continuous(F: FamilyFunction) -> bool:
    """Continuity of a family map under the lifted adjacencies."""
    return is_continuous(F)


def is_isomorphism(f: FiniteFunction) -> bool:
    """True iff f is a continuous bijection with a continuous inverse."""
    dom, cod = f.domain.vertices, f.codomain.vertices
    if len(dom) != len(cod):
        return False
    seen = set(f.table.values())
    if len(seen) != len(cod):
        return False
    if not is_continuous(f):
        return False
    inverse = FiniteFunction(f.codomain, f.domain, tuple((y, x) for x, y in f.pairs))
    return is_continuous(inverse)


def is_retraction(r: FiniteFunction, Y: Iterable[Point]) -> bool:
    """True iff r is continuous onto Y and fixes every point of Y."""
    pts = frozenset(Y)
    if not pts:
        raise ValueError("a retraction target cannot be empty")
    dom = set(r.domain.vertices)
    if not pts <= dom:
        raise ValueError("retraction target is not a subset of the domain")
    if set(r.codomain.vertices) != pts:
        raise ValueError("retraction codomain must equal the target set")
    table = r.table
    if any(table[y] != y for y in pts):
        return False
    return is_continuous(r)


# -- induced maps on hyperspaces --------------------------------------------


def _family_over(image: DigitalImage, kind: str, budget: int) -> SubsetFamily:
    if kind == "full":
        return enumerate_all_subsets(image, budget)
    if kind == "connected":
        return enumerate_connected_subsets(image, budget)
    raise ValueError(f"cannot derive a {kind!r} family over the codomain; pass one explicitly")


def induced_map(f: FiniteFunction, family: SubsetFamily,
                codomain_family: SubsetFamily | None = None,
                budget: int = 24) -> FamilyFunction:
    """The set-image map A |-> f(A) between families.

    The codomain family defaults to the family of the same kind over
    f's codomain.  If some member's image is not a member there (for a
    connected family this happens exactly when the image is disconnected),
    the map does not exist and a ValueError names the offending member.
    """
    if family.base != f.domain:
        raise ValueError("family is not over the domain of f")
    if codomain_family is None:
        codomain_family = _family_over(f.codomain, family.kind, budget)
    table = {}
    for member in family.members:
        img = f.image_of(member)
        if img not in codomain_family:
            raise ValueError(
                f"image of member {sorted(member)} is {sorted(img)}, "
                f"not a member of the codomain family")
        table[member] = img
    return FamilyFunction.from_table(family, codomain_family, table)


def find_inducing_map(F: FamilyFunction, budget: int = 10 ** 6) -> FiniteFunction | None:
    """A continuous f with f_* = F, or None when no continuous map induces F.

    Values on singletons pin down the only candidate table positions, so the
    search runs over continuous maps only and skips any whose singleton
    images disagree with F.
    """
    from .homotopy import enumerate_continuous_maps

    dom_family: SubsetFamily = F.domain
    cod_family: SubsetFamily = F.codomain
    if dom_family.kind not in ("full", "connected") or cod_family.kind not in ("full", "connected"):
        raise ValueError("inducing-map search needs full or connected families")
    X, Y = dom_family.base, cod_family.base
    singleton_value: dict[Point, frozenset[Point]] = {}
    for x in X.points:
        member = frozenset((x,))
        img = F.table[member]
        if len(img) != 1:
            return None
        singleton_value[x] = img
    for f in enumerate_continuous_maps(X, Y, budget=budget):
        if any(frozenset((f.table[x],)) != singleton_value[x] for x in X.points):
            continue
        try:
            candidate = induced_map(f, dom_family, codomain_family=cod_family)
        except ValueError:
            continue
        if candidate.pairs == F.pairs:
            return f
    return None


# -- JSON ------------------------------------------------------------------


def function_to_json(f: FiniteFunction) -> dict:
    from .lattice import image_to_json

    if not isinstance(f.domain, DigitalImage) or not isinstance(f.codomain, DigitalImage):
        raise ValueError("only image-to-image functions have a JSON document form")
    return {
        "domain": image_to_json(f.domain),
        "codomain": image_to_json(f.codomain),
        "pairs": [[list(x), list(y)] for x, y in f.pairs],
    }


def function_from_json(doc: dict) -> FiniteFunction:
    from .lattice import image_from_json

    if not isinstance(doc, dict):
        raise ValueError("function document must be a JSON object")
    try:
        dom = image_from_json(doc["domain"])
        cod = image_from_json(doc["codomain"])
        pairs = doc["pairs"]
    except KeyError as missing:
        raise ValueError(f"function document is missing {missing}") from None
    return FiniteFunction(dom, cod, tuple((tuple(x), tuple(y)) for x, y in pairs))


def family_function_to_json(F: FamilyFunction) -> dict:
    from .hyperspace import family_to_json

    return {
        "domain": family_to_json(F.domain),
        "codomain": family_to_json(F.codomain),
        "pairs": [[[list(p) for p in sorted(a)], [list(p) for p in sorted(b)]]
                  for a, b in F.pairs],
    }


def family_function_from_json(doc: dict) -> FamilyFunction:
    from .hyperspace import family_from_json

    if not isinstance(doc, dict):
        raise ValueError("family function document must be a JSON object")
    try:
        dom = family_from_json(doc["domain"])
        cod = family_from_json(doc["codomain"])
        pairs = doc["pairs"]
    except KeyError as missing:
        raise ValueError(f"family function document is missing {missing}") from None
    table = tuple((frozenset(tuple(p) for p in a), frozenset(tuple(p) for p in b))
                  for a, b in pairs)
    return FamilyFunction(dom, cod, table)
