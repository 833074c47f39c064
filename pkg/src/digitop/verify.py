"""Randomized verification harness: re-checks the library's theorems.

Each suite draws small random images (boxes in Z^1/Z^2 under c_1/c_2) from
a seeded generator, runs one family of universally quantified claims on
them, and reports one pass/fail line per claim.  Output is deterministic
for a fixed seed: no clocks, no set-iteration order leaks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import graphmetrics as gm
from .functions import (FamilyFunction, FiniteFunction, compose, constant_map,
                        identity_map, induced_map, is_continuous,
                        is_family_continuous, is_isomorphism, is_retraction,
                        find_inducing_map)
from .homotopy import (PHI, PSI, build_function_graph, enumerate_continuous_maps,
                       homotopic, is_contractible, lift_homotopy_to_hyperspace,
                       phi_adjacent, postcompose_map, strongly_homotopic,
                       verify_homotopy, HomotopyTable)
from .hyperspace import (enumerate_all_subsets, enumerate_connected_subsets,
                         hyper_adjacent, hyperspace_graph, union_of_family)
from .lattice import DigitalImage, Point, cycle_image, cycle_points, interval
from .multivalued import (MultiFunction, Subdivision, as_multifunction, generates,
                          has_strong_continuity, has_weak_continuity,
                          induced_multifunction_map, is_connectivity_preserving,
                          is_egs_continuous)


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        extra = f": {self.details}" if self.details and not self.passed else ""
        return f"{tag} {self.name}{extra}"


# -- random instance generators ------------------------------------------------

_BOX1 = tuple((i,) for i in range(6))
_BOX2 = tuple((i, j) for i in range(4) for j in range(4))


def random_image(rng: random.Random, max_points: int = 6) -> DigitalImage:
    dim = rng.choice((1, 2))
    box = _BOX1 if dim == 1 else _BOX2
    k = rng.randint(1, min(max_points, len(box)))
    pts = rng.sample(box, k)
    u = 1 if dim == 1 else rng.choice((1, 2))
    return DigitalImage(dim, tuple(pts), u)


def random_connected_image(rng: random.Random, max_points: int = 6,
                           min_points: int = 1) -> DigitalImage:
    dim = rng.choice((1, 2))
    box = _BOX1 if dim == 1 else _BOX2
    u = 1 if dim == 1 else rng.choice((1, 2))
    k = rng.randint(min_points, max(min_points, min(max_points, len(box))))
    pts = {rng.choice(box)}
    while len(pts) < k:
        probe = DigitalImage(dim, tuple(sorted(pts)), u)
        frontier = sorted({q for p in pts for q in _box_neighbors(p, box, u)} - pts)
        if not frontier:
            break
        pts.add(rng.choice(frontier))
    return DigitalImage(dim, tuple(sorted(pts)), u)


def _box_neighbors(p: Point, box: tuple[Point, ...], u: int) -> set[Point]:
    from .lattice import cu_adjacent

    return {q for q in box if cu_adjacent(p, q, u)}


def random_function(rng: random.Random, X: DigitalImage, Y: DigitalImage) -> FiniteFunction:
    return FiniteFunction(X, Y, tuple((x, rng.choice(Y.points)) for x in X.points))


def random_continuous_function(rng: random.Random, X: DigitalImage,
                               Y: DigitalImage) -> FiniteFunction:
    return rng.choice(enumerate_continuous_maps(X, Y))


def random_multifunction(rng: random.Random, X: DigitalImage, Y: DigitalImage,
                         max_values: int = 3) -> MultiFunction:
    table = {}
    for x in X.points:
        k = rng.randint(1, min(max_values, len(Y)))
        table[x] = frozenset(rng.sample(Y.points, k))
    return MultiFunction.from_table(X, Y, table)


def random_graph(rng: random.Random, max_n: int = 9) -> gm.FiniteGraph:
    n = rng.randint(3, max_n)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
    return gm.FiniteGraph.from_edges(n, edges)


def rotations(n: int) -> list[FiniteFunction]:
    img = cycle_image(n)
    pts = cycle_points(n)
    return [FiniteFunction.from_table(img, img, {pts[i]: pts[(i + j) % n] for i in range(n)})
            for j in range(n)]


# -- independent oracles ---------------------------------------------------------


def oracle_longest_cycle(G: gm.FiniteGraph) -> int | None:
    """Longest cycle length by checking vertex permutations of every subset."""
    from itertools import combinations, permutations

    best = None
    for k in range(G.n, 2, -1):
        if best is not None:
            break
        for sub in combinations(range(G.n), k):
            anchor, rest = sub[0], sub[1:]
            for perm in permutations(rest):
                if k > 3 and perm[0] > perm[-1]:
                    continue  # each cycle once per direction
                seq = (anchor,) + perm
                if all(G.adjacent(seq[i], seq[(i + 1) % k]) for i in range(k)):
                    best = k
                    break
            if best is not None:
                break
    return best


def oracle_homotopic(f: FiniteFunction, g: FiniteFunction) -> bool:
    """Step-table search: grow the set of slices reachable from f by tables
    whose two-slice steps satisfy the deformation conditions directly."""
    X, Y = f.domain, f.codomain
    maps = enumerate_continuous_maps(X, Y)

    def step_ok(h0, h1):
        return all(Y.adjacent_or_equal(h0.table[x], h1.table[x]) for x in X.points)

    seen = {f}
    frontier = [f]
    for _ in range(len(maps)):
        if g in seen:
            return True
        frontier = [h1 for h0 in frontier for h1 in maps
                    if h1 not in seen and step_ok(h0, h1)]
        if not frontier:
            break
        seen.update(frontier)
    return g in seen


def oracle_pairwise_connected(pts, X: DigitalImage) -> bool:
    """Connectivity by explicitly finding a path inside A for every pair."""
    from itertools import combinations

    pts = sorted(set(pts))
    inside = set(pts)
    for a, b in combinations(pts, 2):
        stack, seen = [a], {a}
        found = False
        while stack:
            p = stack.pop()
            if p == b:
                found = True
                break
            for q in inside:
                if q not in seen and X.adjacent(p, q):
                    seen.add(q)
                    stack.append(q)
        if not found:
            return False
    return True


# -- suites -----------------------------------------------------------------------


def suite_cardinality(rng, max_points=None, samples=None) -> list[CheckResult]:
    out = []
    bad = [n for n in range(1, 13)
           if len(enumerate_all_subsets(interval(1, n))) != 2 ** n - 1]
    for _ in range(samples or 20):
        X = random_image(rng, max_points or 6)
        if len(enumerate_all_subsets(X)) != 2 ** len(X) - 1:
            bad.append(X)
    out.append(CheckResult("full-hyperspace-cardinality", not bad,
                           f"failed for {bad[:3]}" if bad else "2^n - 1 on intervals n<=12 and random images"))
    bad2 = [n for n in range(1, 9)
            if len(enumerate_connected_subsets(interval(1, n))) != n * (n + 1) // 2]
    out.append(CheckResult("interval-connected-count", not bad2,
                           f"failed for n={bad2}" if bad2 else "n(n+1)/2 for n<=8"))
    from .hyperspace import interval_triangle_iso

    ok_iso = all(is_isomorphism(interval_triangle_iso(1, b)) for b in range(1, 7))
    out.append(CheckResult("interval-triangle-isomorphism", ok_iso))
    return out


def suite_induced(rng, max_points=None, samples=None) -> list[CheckResult]:
    out = []
    n_samples = samples or 200
    max_pts = max_points or 4
    violations = []
    for _ in range(n_samples):
        X = random_image(rng, max_pts)
        Y = random_image(rng, max_pts)
        f = random_function(rng, X, Y)
        cont = is_continuous(f)
        full_ok = is_family_continuous(induced_map(f, enumerate_all_subsets(X)))
        try:
            conn_ok = is_family_continuous(induced_map(f, enumerate_connected_subsets(X)))
        except ValueError:
            conn_ok = False  # some connected member has a disconnected image
        if not (cont == full_ok == conn_ok):
            violations.append((f, cont, full_ok, conn_ok))
    out.append(CheckResult("induced-continuity-iff", not violations,
                           f"{len(violations)} violations, first {violations[:1]}"
                           if violations else f"{n_samples} samples"))

    iso_viol = []
    for _ in range(n_samples // 4):
        X = random_image(rng, max_pts)
        shift = rng.choice(((1,) * X.dim, (0,) * X.dim, (2,) + (0,) * (X.dim - 1)))
        Y = DigitalImage(X.dim, tuple(tuple(c + d for c, d in zip(p, shift))
                                      for p in X.points), X.adjacency)
        f = FiniteFunction(X, Y, tuple((p, tuple(c + d for c, d in zip(p, shift)))
                                       for p in X.points))
        g = random_function(rng, X, Y)
        for cand in (f, g):
            a = is_isomorphism(cand)
            b = is_isomorphism(induced_map(cand, enumerate_all_subsets(X)))
            try:
                c = is_isomorphism(induced_map(cand, enumerate_connected_subsets(X)))
            except ValueError:
                c = False
            if not (a == b == c):
                iso_viol.append((cand, a, b, c))
    out.append(CheckResult("induced-isomorphism-iff", not iso_viol,
                           f"first {iso_viol[:1]}" if iso_viol else ""))

    functor_viol = []
    for _ in range(n_samples // 4):
        X, Y, Z = (random_image(rng, max_pts) for _ in range(3))
        f = random_continuous_function(rng, X, Y)
        g = random_continuous_function(rng, Y, Z)
        for kind, build in (("full", enumerate_all_subsets),
                            ("connected", enumerate_connected_subsets)):
            gf_star = induced_map(compose(g, f), build(X))
            star_gf = compose(induced_map(g, build(Y)), induced_map(f, build(X)))
            if gf_star.pairs != star_gf.pairs:
                functor_viol.append((kind, f, g))
        if induced_map(identity_map(X), enumerate_all_subsets(X)).pairs != \
                identity_map(enumerate_all_subsets(X)).pairs:
            functor_viol.append(("identity", X))
    out.append(CheckResult("induced-functor-laws", not functor_viol,
                           f"first {functor_viol[:1]}" if functor_viol else ""))

    retr_viol = []
    for _ in range(n_samples // 4):
        a, c, b = sorted(rng.sample(range(0, 7), 3))
        X, Y = interval(a, b), interval(a, c)
        r = FiniteFunction(X, Y, tuple((p, (min(p[0], c),)) for p in X.points))
        if not is_retraction(r, Y.points):
            retr_viol.append(("not-a-retraction", r))
            continue
        for build in (enumerate_all_subsets, enumerate_connected_subsets):
            rs = induced_map(r, build(X))
            if not is_family_continuous(rs):
                retr_viol.append(("lift-discontinuous", r))
            fixed = [m for m in rs.domain.members if m <= Y.point_set]
            if any(rs.table[m] != m for m in fixed):
                retr_viol.append(("lift-moves-fixed-member", r))
    out.append(CheckResult("retraction-lifts-to-hyperspace", not retr_viol,
                           f"first {retr_viol[:1]}" if retr_viol else ""))

    img_viol = []
    for _ in range(n_samples // 4):
        X = random_connected_image(rng, max_pts)
        Y = random_image(rng, max_pts)
        maps = enumerate_continuous_maps(X, Y)
        f = rng.choice(maps)
        partners = [h for h in maps if h.pairs != f.pairs and phi_adjacent(f, h)]
        if not partners:
            continue
        g = rng.choice(partners)
        for member in enumerate_all_subsets(X).members:
            fa, ga = f.image_of(member), g.image_of(member)
            if fa != ga and not hyper_adjacent(fa, ga, Y):
                img_viol.append((f, g, member))
    out.append(CheckResult("pointwise-close-maps-have-close-set-images", not img_viol,
                           f"first {img_viol[:1]}" if img_viol else ""))

    K = enumerate_connected_subsets(interval(0, 1))
    F = FamilyFunction.from_table(K, K, {m: frozenset(interval(0, 1).points) for m in K.members})
    absent = find_inducing_map(F) is None
    out.append(CheckResult("constant-family-map-not-induced", absent))
    witnessed = []
    for _ in range(n_samples // 10):
        X = random_image(rng, 3)
        Y = random_image(rng, 3)
        g = random_continuous_function(rng, X, Y)
        F2 = induced_map(g, enumerate_connected_subsets(X))
        f2 = find_inducing_map(F2)
        if f2 is None or induced_map(f2, enumerate_connected_subsets(X)).pairs != F2.pairs:
            witnessed.append(g)
    out.append(CheckResult("induced-map-search-roundtrip", not witnessed,
                           f"first {witnessed[:1]}" if witnessed else ""))
    return out


def suite_homotopy(rng, max_points=None, samples=None) -> list[CheckResult]:
    out = []
    n_samples = samples or 200
    max_pts = max_points or 3

    onestep_viol = []
    for _ in range(n_samples):
        X = random_image(rng, max_pts)
        Y = random_image(rng, max_pts)
        maps = enumerate_continuous_maps(X, Y)
        f, g = rng.choice(maps), rng.choice(maps)
        H = HomotopyTable(X, Y, (f, g))
        accepted = verify_homotopy(H, f, g)
        expected = f.pairs == g.pairs or phi_adjacent(f, g)
        if accepted != expected:
            onestep_viol.append((f, g))
    out.append(CheckResult("one-step-deformation-iff-pointwise-close", not onestep_viol,
                           f"first {onestep_viol[:1]}" if onestep_viol else f"{n_samples} samples"))

    oracle_viol = []
    for _ in range(min(n_samples, 60)):
        X = random_image(rng, 3)
        Y = random_image(rng, 3)
        maps = enumerate_continuous_maps(X, Y)
        f, g = rng.choice(maps), rng.choice(maps)
        decision = homotopic(f, g)
        if bool(decision) != oracle_homotopic(f, g):
            oracle_viol.append((f, g))
        if decision and not verify_homotopy(decision.table(), f, g):
            oracle_viol.append(("bad-witness", f, g))
    out.append(CheckResult("component-search-matches-table-oracle", not oracle_viol,
                           f"first {oracle_viol[:1]}" if oracle_viol else ""))

    edge_viol = []
    for _ in range(n_samples // 10):
        X = random_image(rng, 3)
        Y = random_image(rng, 3)
        phi = build_function_graph(X, Y, PHI)
        psi = build_function_graph(X, Y, PSI)
        if not set(psi.edges) <= set(phi.edges):
            edge_viol.append((X, Y))
    out.append(CheckResult("cross-edges-within-pointwise-edges", not edge_viol,
                           f"first {edge_viol[:1]}" if edge_viol else ""))

    rots = rotations(5)
    S5 = rots[0].domain
    ok = True
    details = ""
    for j in range(5):
        for k in range(5):
            d = homotopic(rots[j], rots[k])
            if not d or not verify_homotopy(d.table(), rots[j], rots[k]):
                ok, details = False, f"rotation pair ({j},{k})"
            if j != k and strongly_homotopic(rots[j], rots[k]):
                ok, details = False, f"strongly related rotations ({j},{k})"
    ident = identity_map(S5)
    if homotopic(ident, constant_map(S5, S5, S5.points[0])):
        ok, details = False, "identity deformed to a constant on the 5-cycle"
    comp = build_function_graph(S5, S5, PHI).component_of(ident)
    rot_idx = {build_function_graph(S5, S5, PHI).index_of(r) for r in rots}
    if comp != rot_idx:
        ok, details = False, "identity component is not exactly the rotations"
    out.append(CheckResult("cycle-rotation-homotopy", ok, details))

    contract_viol = []
    for _ in range(n_samples // 10):
        X = random_connected_image(rng, 4)
        if is_contractible(X):
            if not gm.is_connected_graph(gm.as_finite_graph(build_function_graph(X, X, PHI))):
                contract_viol.append(X)
    out.append(CheckResult("contractible-gives-connected-selfmap-graph", not contract_viol,
                           f"first {contract_viol[:1]}" if contract_viol else ""))

    lift_viol = []
    for _ in range(n_samples // 20):
        X = random_connected_image(rng, 3)
        Y = random_connected_image(rng, 3)
        maps = enumerate_continuous_maps(X, Y)
        f = rng.choice(maps)
        d = homotopic(f, rng.choice(maps))
        if not d:
            continue
        H = d.table()
        g = H.slices[-1]
        for kind in ("full", "connected"):
            lifted = lift_homotopy_to_hyperspace(H, kind)
            fs = induced_map(f, lifted.domain, codomain_family=lifted.codomain)
            gs = induced_map(g, lifted.domain, codomain_family=lifted.codomain)
            if not verify_homotopy(lifted, fs, gs):
                lift_viol.append((kind, f, g))
        x0 = f.pairs[0][0]
        if all(h.table[x0] == f.table[x0] for h in H.slices):
            lifted = lift_homotopy_to_hyperspace(H, "connected")
            if not verify_homotopy(lifted,
                                   induced_map(f, lifted.domain, codomain_family=lifted.codomain),
                                   induced_map(g, lifted.domain, codomain_family=lifted.codomain),
                                   fixed_point=frozenset((x0,))):
                lift_viol.append(("pointed", f, g))
    out.append(CheckResult("deformation-lifts-to-hyperspace", not lift_viol,
                           f"first {lift_viol[:1]}" if lift_viol else ""))

    post_viol = []
    for _ in range(n_samples // 20):
        W = random_connected_image(rng, 3)
        X = random_image(rng, 3)
        Y = random_image(rng, 3)
        f = random_continuous_function(rng, X, Y)
        fstar = postcompose_map(f, W)
        if not is_continuous(fstar):
            post_viol.append(("discontinuous", f))
        Z = random_image(rng, 3)
        g = random_continuous_function(rng, Y, Z)
        gf_star = postcompose_map(compose(g, f), W)
        star_gf = compose(postcompose_map(g, W), fstar)
        if gf_star.pairs != star_gf.pairs:
            post_viol.append(("composition", f, g))
    out.append(CheckResult("postcomposition-continuity-and-functor", not post_viol,
                           f"first {post_viol[:1]}" if post_viol else ""))

    retract_viol = []
    for _ in range(n_samples // 20):
        a, c, b = sorted(rng.sample(range(0, 6), 3))
        Y, W = interval(a, b), interval(a, c)
        X = random_connected_image(rng, 3)
        r = FiniteFunction(Y, W, tuple((p, (min(p[0], c),)) for p in Y.points))
        incl = FiniteFunction(W, Y, tuple((p, p) for p in W.points))
        YX = build_function_graph(X, Y, PHI)
        table = {F: compose(incl, compose(r, F)) for F in YX.vertices}
        T = FiniteFunction(YX, YX, tuple(table.items()))
        if not is_continuous(T):
            retract_viol.append(("discontinuous", r, X))
        w_valued = [F for F in YX.vertices if all(y in W.point_set for _, y in F.pairs)]
        if any(T.table[F] != F for F in w_valued):
            retract_viol.append(("moves-fixed-function", r, X))
        if any(T.table[F] not in set(w_valued) for F in YX.vertices):
            retract_viol.append(("image-escapes", r, X))
    out.append(CheckResult("retract-lifts-to-function-graph", not retract_viol,
                           f"first {retract_viol[:1]}" if retract_viol else ""))

    equiv_ok = True
    X, Ypt = interval(0, 2), interval(0, 0)
    f = constant_map(X, Ypt, (0,))
    g = constant_map(Ypt, X, (0,))
    gf = compose(g, f)
    idX = identity_map(X)
    steps = [idX]
    while steps[-1].pairs != gf.pairs:
        nxt = {x: (max(y[0] - 1, 0),) for x, y in steps[-1].pairs}
        steps.append(FiniteFunction.from_table(X, X, nxt))
    H1 = HomotopyTable(X, X, tuple(steps))
    H2 = HomotopyTable(Ypt, Ypt, (identity_map(Ypt),))
    if not verify_homotopy(H1, idX, gf) or not verify_homotopy(H2, identity_map(Ypt),
                                                               compose(f, g)):
        equiv_ok = False
    for kind in ("full", "connected"):
        L1 = lift_homotopy_to_hyperspace(H1, kind)
        fs = induced_map(f, L1.domain, codomain_family=lift_homotopy_to_hyperspace(H2, kind).domain)
        gs = induced_map(g, fs.codomain, codomain_family=L1.domain)
        if not verify_homotopy(L1, identity_map(L1.domain), compose(gs, fs)):
            equiv_ok = False
        L2 = lift_homotopy_to_hyperspace(H2, kind)
        if not verify_homotopy(L2, identity_map(L2.domain), compose(fs, gs)):
            equiv_ok = False
    out.append(CheckResult("homotopy-equivalence-lifts-to-hyperspaces", equiv_ok))
    return out


def suite_connectivity(rng, max_points=None, samples=None) -> list[CheckResult]:
    out = []
    n_samples = samples or 200
    max_pts = max_points or 7

    iff_viol = []
    corr_viol = []
    for _ in range(n_samples):
        X = random_image(rng, max_pts)
        K = enumerate_connected_subsets(X)
        G = gm.as_finite_graph(hyperspace_graph(K))
        if X.is_connected() != gm.is_connected_graph(G):
            iff_viol.append(X)
        comps = X.components()
        comp_of_point = {}
        for ci, comp in enumerate(comps):
            for p in comp:
                comp_of_point[p] = ci
        by_graph = gm.connected_components(G)
        partition_graph = sorted(sorted(c) for c in by_graph)
        groups: dict[int, list[int]] = {}
        for i, member in enumerate(K.members):
            groups.setdefault(comp_of_point[next(iter(member))], []).append(i)
        partition_image = sorted(sorted(v) for v in groups.values())
        if partition_graph != partition_image:
            corr_viol.append(X)
    out.append(CheckResult("connectivity-lifting-iff", not iff_viol,
                           f"first {iff_viol[:1]}" if iff_viol else f"{n_samples} samples"))
    out.append(CheckResult("component-correspondence", not corr_viol,
                           f"first {corr_viol[:1]}" if corr_viol else ""))

    union_viol = []
    path_viol = []
    for _ in range(n_samples // 4):
        X = random_connected_image(rng, min(max_pts, 5))
        K = enumerate_connected_subsets(X)
        G = gm.as_finite_graph(hyperspace_graph(K))
        start = rng.randrange(len(K))
        seen = {start}
        frontier = [start]
        size = rng.randint(1, len(K))
        while frontier and len(seen) < size:
            nxt = sorted({j for i in frontier for j in G.neighbors(i)} - seen)
            if not nxt:
                break
            pick = rng.choice(nxt)
            seen.add(pick)
            frontier.append(pick)
        W = [K.members[i] for i in sorted(seen)]
        if not X.is_connected_subset(union_of_family(W)):
            union_viol.append((X, W))
        A = rng.choice(K.members)
        KA = enumerate_connected_subsets(X.restrict(A))
        GA = gm.as_finite_graph(hyperspace_graph(KA))
        dist = gm.bfs_distances(GA, KA.index_of(frozenset((min(A),))))
        if dist[KA.index_of(A)] is None:
            path_viol.append((X, A))
    out.append(CheckResult("union-of-close-connected-subfamily", not union_viol,
                           f"first {union_viol[:1]}" if union_viol else ""))
    out.append(CheckResult("singleton-reaches-every-member", not path_viol,
                           f"first {path_viol[:1]}" if path_viol else ""))

    cut_viol = []
    checked = 0
    for _ in range(n_samples // 4):
        X = random_connected_image(rng, max_pts)
        if len(X) < 3:
            continue
        K = enumerate_connected_subsets(X)
        G = gm.as_finite_graph(hyperspace_graph(K))
        for ymask in range(1, (1 << len(X)) - 1):
            Y = [X.points[i] for i in range(len(X)) if ymask >> i & 1]
            if not gm.disconnects(Y, X):
                continue
            checked += 1
            keep = [i for i, m in enumerate(K.masks) if not m & ymask]
            sub = gm.induced_subgraph(G, keep)
            if gm.is_connected_graph(sub):
                cut_viol.append((X, Y))
    out.append(CheckResult("disconnection-lifting", not cut_viol,
                           f"first {cut_viol[:1]}" if cut_viol else f"{checked} cuts checked"))
    return out


def suite_multivalued(rng, max_points=None, samples=None) -> list[CheckResult]:
    out = []
    n_samples = samples or 200
    max_pts = max_points or 5

    X, Y = interval(0, 1), interval(0, 2)
    F = MultiFunction.from_table(X, Y, {(0,): {(0,)}, (1,): {(1,), (2,)}})
    egs = is_egs_continuous(F, 3)
    ladder_ok = (has_weak_continuity(F) and not has_strong_continuity(F)
                 and is_connectivity_preserving(F) and egs.found and egs.r == 2
                 and generates(egs.generator, F, Subdivision(X, 2))
                 and not is_family_continuous(induced_multifunction_map(F, "full")))
    out.append(CheckResult("weak-not-strong-ladder-example", ladder_ok))

    impl_viol = []
    seen_nonstrong_weak = False
    sample = [F]  # the named example keeps the non-implication witnessed
    sample.extend(random_multifunction(rng, random_image(rng, max_pts),
                                       random_image(rng, max_pts))
                  for _ in range(n_samples))
    for M in sample:
        weak = has_weak_continuity(M)
        strong = has_strong_continuity(M)
        cp = is_connectivity_preserving(M)
        if strong and not weak:
            impl_viol.append(("strong-without-weak", M))
        if cp and not weak:
            impl_viol.append(("cp-without-weak", M))
        if weak and cp and not strong:
            seen_nonstrong_weak = True
    if not seen_nonstrong_weak:
        impl_viol.append(("no weak+cp+non-strong sample found", None))
    out.append(CheckResult("continuity-implication-lattice", not impl_viol,
                           f"first {impl_viol[:1]}" if impl_viol else f"{n_samples} samples"))

    strong_viol = []
    produced = 0
    attempts = 0
    while produced < (samples or 200) and attempts < 20 * (samples or 200):
        attempts += 1
        A = random_image(rng, 4)
        B = random_image(rng, 4)
        if attempts % 2:
            M = as_multifunction(random_continuous_function(rng, A, B))
        else:
            M = random_multifunction(rng, A, B)
            if not has_strong_continuity(M):
                continue
        produced += 1
        if not is_family_continuous(induced_multifunction_map(M, "full")):
            strong_viol.append(M)
        try:
            lifted = induced_multifunction_map(M, "connected")
        except ValueError:
            lifted = None  # some connected member has a disconnected image
        if lifted is not None and not is_family_continuous(lifted):
            strong_viol.append(("connected", M))
    out.append(CheckResult("strong-continuity-lifts", not strong_viol,
                           f"first {strong_viol[:1]}" if strong_viol else f"{produced} samples"))

    sub_viol = []
    for _ in range(n_samples // 10):
        A = random_image(rng, 4)
        r = rng.randint(1, 3)
        if len(A) * r ** A.dim > 64:
            continue
        S = Subdivision(A, r)
        if len(S.image) != len(A) * r ** A.dim:
            sub_viol.append((A, r))
        if r == 1 and S.image.points != tuple(A.points):
            sub_viol.append((A, "identity"))
    out.append(CheckResult("subdivision-cardinality", not sub_viol,
                           f"first {sub_viol[:1]}" if sub_viol else ""))
    return out


def suite_cycles(rng, max_points=None, samples=None) -> list[CheckResult]:
    out = []
    n_samples = samples or 100
    max_pts = max_points or 6

    iff_viol = []
    for _ in range(n_samples):
        X = random_image(rng, max_pts)
        K = enumerate_connected_subsets(X)
        G = gm.as_finite_graph(hyperspace_graph(K))
        w = gm.girth(G)
        has_nonisolated = any(X.neighbors(p) for p in X.points)
        if has_nonisolated != (w is not None and w.length == 3):
            iff_viol.append(X)
        if not has_nonisolated and w is not None:
            iff_viol.append(("isolated-but-cyclic", X))
    out.append(CheckResult("three-cycle-iff-nonisolated", not iff_viol,
                           f"first {iff_viol[:1]}" if iff_viol else f"{n_samples} samples"))

    six_viol = []
    for _ in range(n_samples // 2):
        X = random_image(rng, max_pts)
        found = None
        for x in X.points:
            nb = sorted(X.neighbors(x))
            for i, u in enumerate(nb):
                for v in nb[i + 1:]:
                    if not X.adjacent(u, v):
                        found = (x, u, v)
                        break
                if found:
                    break
            if found:
                break
        if not found:
            continue
        x, u, v = found
        K = enumerate_connected_subsets(X)
        G = gm.as_finite_graph(hyperspace_graph(K))
        seq = [frozenset(s) for s in
               ({u}, {u, x}, {u, x, v}, {x, v}, {v}, {x})]
        idx = [K.index_of(s) for s in seq]
        if not gm.is_valid_cycle(G, idx):
            six_viol.append((X, found))
        if G.n <= 16:
            w = gm.longest_cycle(G, budget=16)
            if w is None or w.length < 6:
                six_viol.append(("long-cycle-shorter-than-six", X))
    out.append(CheckResult("six-cycle-from-nonadjacent-neighbors", not six_viol,
                           f"first {six_viol[:1]}" if six_viol else ""))

    fam = enumerate_all_subsets(interval(1, 4))
    G = gm.as_finite_graph(hyperspace_graph(fam))
    w = gm.longest_cycle(G)
    listed = [{1, 2}, {1, 2, 3}, {1, 3}, {1, 4}, {1, 3, 4}, {1, 2, 4},
              {1, 2, 3, 4}, {2, 3, 4}, {2, 3}, {2, 4}, {3, 4}, {4}, {3}, {2}, {1}]
    idx = [fam.index_of(frozenset((v,) for v in s)) for s in listed]
    ok = (w is not None and w.length == 15 and gm.is_valid_cycle(G, w.vertices)
          and gm.is_valid_cycle(G, idx))
    out.append(CheckResult("full-hyperspace-spanning-cycle", ok))

    oracle_viol = []
    for _ in range(min(n_samples // 4, 30)):
        G = random_graph(rng, 8)
        w = gm.longest_cycle(G)
        expect = oracle_longest_cycle(G)
        got = w.length if w is not None else None
        if got != expect:
            oracle_viol.append((G, got, expect))
        if w is not None and not gm.is_valid_cycle(G, w.vertices):
            oracle_viol.append(("invalid-witness", G))
    out.append(CheckResult("long-cycle-matches-permutation-oracle", not oracle_viol,
                           f"first {oracle_viol[:1]}" if oracle_viol else ""))
    return out


def suite_dominating(rng, max_points=None, samples=None) -> list[CheckResult]:
    out = []
    n_samples = samples or 100
    max_pts = max_points or 5
    viol = []
    for _ in range(n_samples):
        X = random_image(rng, max_pts)
        fam = enumerate_all_subsets(X)
        G = gm.as_finite_graph(hyperspace_graph(fam))
        GX = gm.as_finite_graph(X)
        n = len(X)
        for dmask in range(1 << n):
            D = [X.points[i] for i in range(n) if dmask >> i & 1]
            lifted = gm.lift_dominating(D, X, family=fam)
            lo = gm.is_dominating([X.point_index[p] for p in D], GX)
            hi = gm.is_dominating(lifted, G)
            if lo != hi:
                viol.append((X, D))
    out.append(CheckResult("domination-lifting-iff", not viol,
                           f"first {viol[:1]}" if viol else f"{n_samples} images, all subsets"))

    mds_viol = []
    for _ in range(n_samples // 5):
        G = random_graph(rng, 7)
        best = gm.minimum_dominating_set(G)
        if not gm.is_dominating(best, G):
            mds_viol.append(("not-dominating", G))
        size = min(bin(m).count("1") for m in range(1, 1 << G.n)
                   if gm.is_dominating([i for i in range(G.n) if m >> i & 1], G))
        if len(best) != size:
            mds_viol.append(("not-minimum", G, len(best), size))
    out.append(CheckResult("minimum-domination-exactness", not mds_viol,
                           f"first {mds_viol[:1]}" if mds_viol else ""))
    return out


def suite_diameter(rng, max_points=None, samples=None) -> list[CheckResult]:
    out = []
    n_samples = samples or 200
    max_pts = max_points or 7
    bound_viol = []
    ineq_viol = []
    for _ in range(n_samples):
        # the strict bound degenerates to 0 < 0 on one-point images, so the
        # claim is sampled over images with at least one adjacency step
        X = random_connected_image(rng, max_pts, min_points=2)
        GX = gm.as_finite_graph(X)
        K = enumerate_connected_subsets(X)
        G = gm.as_finite_graph(hyperspace_graph(K))
        r = gm.radius(GX)
        d = gm.diameter(G)
        if not d < 2 * (len(X) + r - 1):
            bound_viol.append((X, d, r))
        for H in (GX, G):
            rr, dd = gm.radius(H), gm.diameter(H)
            if not rr <= dd <= 2 * rr:
                ineq_viol.append((X, rr, dd))
    out.append(CheckResult("hyperspace-diameter-bound", not bound_viol,
                           f"first {bound_viol[:1]}" if bound_viol else f"{n_samples} samples"))
    out.append(CheckResult("radius-diameter-inequalities", not ineq_viol,
                           f"first {ineq_viol[:1]}" if ineq_viol else ""))
    return out


SUITES = {
    "cardinality": suite_cardinality,
    "induced": suite_induced,
    "homotopy": suite_homotopy,
    "connectivity": suite_connectivity,
    "multivalued": suite_multivalued,
    "cycles": suite_cycles,
    "dominating": suite_dominating,
    "diameter": suite_diameter,
}


def run_suites(names, seed: int = 0, max_points=None, samples=None) -> list[CheckResult]:
    if "all" in names:
        names = list(SUITES)
    results = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r} (choose from {', '.join(SUITES)})")
        rng = random.Random(f"{seed}:{name}")
        for res in SUITES[name](rng, max_points=max_points, samples=samples):
            res.name = f"{name}/{res.name}"
            results.append(res)
    return results
