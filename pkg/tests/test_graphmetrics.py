"""Graph metrics layer: cycles, domination, eccentricity, disconnection."""

import random

import pytest

from digitop import (BudgetError, DigitalImage, FiniteGraph,
                     as_finite_graph, center, diameter,
                     disconnects, eccentricity, enumerate_all_subsets,
                     enumerate_connected_subsets, girth, hyperspace_graph,
                     induced_subgraph, interval, is_connected_graph,
                     is_dominating, is_valid_cycle, lift_dominating,
                     longest_cycle, metrics_csv, minimum_dominating_set,
                     radius, to_dot, cycle_image)
from digitop.verify import (oracle_longest_cycle, random_connected_image,
                            random_graph, random_image)


def path_graph(n):
    return FiniteGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n):
    return FiniteGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


class TestFiniteGraph:
    def test_symmetry_enforced(self):
        with pytest.raises(ValueError):
            FiniteGraph(2, (0b10, 0b00))

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            FiniteGraph.from_edges(1, [(0, 0)])

    def test_projection_from_image(self):
        X = interval(0, 2)
        G = as_finite_graph(X)
        assert G.n == 3 and sorted(G.edges()) == [(0, 1), (1, 2)]
        assert G.labels == X.points

    def test_induced_subgraph(self):
        G = path_graph(4)
        sub = induced_subgraph(G, [0, 1, 3])
        assert sub.n == 3 and sorted(sub.edges()) == [(0, 1)]


class TestGirth:
    def test_isolated_hyperspace_acyclic(self):
        X = DigitalImage.of([(0,), (2,), (4,)], 1)
        G = as_finite_graph(hyperspace_graph(enumerate_connected_subsets(X)))
        assert girth(G) is None

    def test_nonisolated_hyperspace_has_triangle(self):
        rng = random.Random(1)
        for _ in range(40):
            X = random_image(rng, 6)
            G = as_finite_graph(hyperspace_graph(enumerate_connected_subsets(X)))
            w = girth(G)
            nonisolated = any(X.neighbors(p) for p in X.points)
            assert (w is not None and w.length == 3) == nonisolated
            if w is not None:
                assert is_valid_cycle(G, w.vertices)

    def test_five_cycle(self):
        G = as_finite_graph(cycle_image(5))
        assert girth(G).length == 5

    def test_tree_acyclic(self):
        assert girth(path_graph(6)) is None


class TestLongestCycle:
    def test_triangle(self):
        assert longest_cycle(complete_graph(3)).length == 3

    def test_spanning_cycle_of_full_hyperspace(self):
        fam = enumerate_all_subsets(interval(1, 4))
        G = as_finite_graph(hyperspace_graph(fam))
        w = longest_cycle(G)
        assert w.length == 15
        assert is_valid_cycle(G, w.vertices)

    def test_listed_spanning_sequence_validates(self):
        fam = enumerate_all_subsets(interval(1, 4))
        G = as_finite_graph(hyperspace_graph(fam))
        listed = [{1, 2}, {1, 2, 3}, {1, 3}, {1, 4}, {1, 3, 4}, {1, 2, 4},
                  {1, 2, 3, 4}, {2, 3, 4}, {2, 3}, {2, 4}, {3, 4},
                  {4}, {3}, {2}, {1}]
        idx = [fam.index_of(frozenset((v,) for v in s)) for s in listed]
        assert is_valid_cycle(G, idx)

    def test_six_cycle_around_branch_point(self):
        X = interval(0, 2)  # 1 has the non-adjacent neighbors 0 and 2
        K = enumerate_connected_subsets(X)
        G = as_finite_graph(hyperspace_graph(K))
        seq = [{(0,)}, {(0,), (1,)}, {(0,), (1,), (2,)}, {(1,), (2,)}, {(2,)}, {(1,)}]
        idx = [K.index_of(frozenset(s)) for s in seq]
        assert is_valid_cycle(G, idx)
        assert longest_cycle(G).length >= 6

    def test_matches_permutation_oracle(self):
        rng = random.Random(2)
        for _ in range(30):
            G = random_graph(rng, 8)
            w = longest_cycle(G)
            got = w.length if w else None
            assert got == oracle_longest_cycle(G)
            if w is not None:
                assert is_valid_cycle(G, w.vertices)

    def test_girth_at_most_longest(self):
        rng = random.Random(3)
        for _ in range(30):
            G = random_graph(rng, 8)
            short, long_ = girth(G), longest_cycle(G)
            assert (short is None) == (long_ is None)
            if short is not None:
                assert 3 <= short.length <= long_.length

    def test_budget(self):
        with pytest.raises(BudgetError):
            longest_cycle(complete_graph(21))


class TestDominating:
    def test_all_vertices(self):
        G = path_graph(5)
        assert is_dominating(range(5), G)

    def test_alternating_on_path(self):
        assert is_dominating([1, 3], path_graph(5))

    def test_empty_fails(self):
        assert not is_dominating([], path_graph(3))

    def test_minimum_on_singleton(self):
        assert minimum_dominating_set(FiniteGraph(1, (0,))) == {0}

    def test_minimum_on_path3(self):
        assert minimum_dominating_set(path_graph(3)) == {1}

    def test_minimum_on_five_cycle(self):
        G = as_finite_graph(cycle_image(5))
        assert len(minimum_dominating_set(G)) == 2

    def test_minimum_matches_enumeration(self):
        rng = random.Random(4)
        for _ in range(25):
            G = random_graph(rng, 7)
            best = minimum_dominating_set(G)
            assert is_dominating(best, G)
            brute = min(
                (bin(m).count("1") for m in range(1, 1 << G.n)
                 if is_dominating([i for i in range(G.n) if m >> i & 1], G)))
            assert len(best) == brute

    def test_lift_whole_image(self):
        X = interval(0, 2)
        fam = enumerate_all_subsets(X)
        assert lift_dominating(X.points, X, family=fam) == frozenset(range(len(fam)))

    def test_lift_iff(self):
        rng = random.Random(5)
        for _ in range(40):
            X = random_image(rng, 5)
            fam = enumerate_all_subsets(X)
            G = as_finite_graph(hyperspace_graph(fam))
            GX = as_finite_graph(X)
            for dmask in range(1 << len(X)):
                D = [X.points[i] for i in range(len(X)) if dmask >> i & 1]
                low = is_dominating([X.point_index[p] for p in D], GX)
                high = is_dominating(lift_dominating(D, X, family=fam), G)
                assert low == high


class TestMetrics:
    def test_path_center(self):
        G = path_graph(5)
        assert center(G) == {2}
        assert radius(G) == 2
        assert diameter(G) == 4
        assert eccentricity(G, 0) == 4

    def test_complete(self):
        G = complete_graph(4)
        assert radius(G) == diameter(G) == 1

    def test_disconnected_rejected(self):
        G = FiniteGraph.from_edges(3, [(0, 1)])
        with pytest.raises(ValueError):
            diameter(G)
        with pytest.raises(ValueError):
            eccentricity(G, 0)

    def test_against_floyd_warshall(self):
        rng = random.Random(6)
        for _ in range(20):
            G = random_graph(rng, 7)
            if not is_connected_graph(G):
                continue
            dist = [[0 if i == j else (1 if G.adjacent(i, j) else 10 ** 6)
                     for j in range(G.n)] for i in range(G.n)]
            for k in range(G.n):
                for i in range(G.n):
                    for j in range(G.n):
                        d = dist[i][k] + dist[k][j]
                        if d < dist[i][j]:
                            dist[i][j] = d
            eccs = [max(row) for row in dist]
            assert radius(G) == min(eccs)
            assert diameter(G) == max(eccs)
            for v in range(G.n):
                assert eccentricity(G, v) == eccs[v]

    def test_radius_diameter_bounds(self):
        rng = random.Random(7)
        for _ in range(30):
            G = random_graph(rng, 8)
            if not is_connected_graph(G):
                continue
            r, d = radius(G), diameter(G)
            assert r <= d <= 2 * r

    def test_hyperspace_diameter_bound(self):
        rng = random.Random(8)
        for _ in range(40):
            X = random_connected_image(rng, 6, min_points=2)
            K = enumerate_connected_subsets(X)
            G = as_finite_graph(hyperspace_graph(K))
            assert diameter(G) < 2 * (len(X) + radius(as_finite_graph(X)) - 1)


class TestDisconnects:
    def test_cut_vertex(self):
        assert disconnects([(1,)], interval(0, 2))

    def test_leaf_removal(self):
        assert not disconnects([(0,)], interval(0, 2))

    def test_removing_everything_rejected(self):
        with pytest.raises(ValueError):
            disconnects(interval(0, 1).points, interval(0, 1))

    def test_lifts_to_hyperspace(self):
        X = interval(0, 4)
        K = enumerate_connected_subsets(X)
        G = as_finite_graph(hyperspace_graph(K))
        Y = [(2,)]
        assert disconnects(Y, X)
        ymask = X.mask_of(Y)
        keep = [i for i, m in enumerate(K.masks) if not m & ymask]
        assert not is_connected_graph(induced_subgraph(G, keep))


class TestExport:
    def test_dot_contains_labels_and_highlight(self):
        fam = enumerate_connected_subsets(interval(1, 2))
        G = as_finite_graph(hyperspace_graph(fam))
        w = longest_cycle(G)
        dot = to_dot(G, highlight=w)
        assert dot.startswith("graph G {")
        assert '"{1,2}"' in dot
        assert "style=bold" in dot

    def test_csv_shape(self):
        G = path_graph(3)
        lines = metrics_csv(G).strip().splitlines()
        assert lines[0] == "vertex,label,degree,eccentricity"
        assert len(lines) == 4

    def test_cycle_witness_validation(self):
        G = path_graph(4)
        assert not is_valid_cycle(G, (0, 1, 2))
        assert not is_valid_cycle(G, (0, 1, 1))
        assert is_valid_cycle(complete_graph(4), (0, 1, 2, 3))
