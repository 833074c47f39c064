"""Lattice layer: c_u adjacency, neighborhoods, connectivity, paths."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from digitop import (DigitalImage, LatticePath, concatenate, cu_adjacent,
                     cycle_image, cycle_points, image_from_json, image_to_json,
                     interval, is_connected, neighbors)

points_1d = st.integers(-5, 5).map(lambda v: (v,))
dims = st.integers(1, 4)


def lattice_points(dim):
    return st.tuples(*([st.integers(-4, 4)] * dim))


class TestCuAdjacent:
    def test_diagonal_needs_u2(self):
        assert cu_adjacent((0, 0), (1, 1), 2)
        assert not cu_adjacent((0, 0), (1, 1), 1)

    def test_irreflexive(self):
        assert not cu_adjacent((3,), (3,), 1)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            cu_adjacent((0,), (0, 0), 1)

    def test_bad_u(self):
        with pytest.raises(ValueError):
            cu_adjacent((0,), (1,), 2)

    @given(dims.flatmap(lambda d: st.tuples(lattice_points(d), lattice_points(d),
                                            st.integers(1, d))))
    @settings(max_examples=200)
    def test_symmetric_and_irreflexive(self, data):
        x, y, u = data
        assert cu_adjacent(x, y, u) == cu_adjacent(y, x, u)
        assert not cu_adjacent(x, x, u)

    @given(dims.flatmap(lambda d: st.tuples(lattice_points(d), lattice_points(d),
                                            st.integers(1, d), st.integers(1, d))))
    @settings(max_examples=200)
    def test_monotone_in_u(self, data):
        x, y, u, v = data
        if u > v:
            u, v = v, u
        if cu_adjacent(x, y, u):
            assert cu_adjacent(x, y, v)


class TestNeighbors:
    def test_interval_interior(self):
        X = interval(0, 2)
        assert neighbors(X, (1,)) == {(0,), (2,)}
        assert neighbors(X, (0,)) == {(1,)}

    def test_c1_diagonal_isolated(self):
        X = DigitalImage.of([(0, 0), (1, 1)], 1)
        assert neighbors(X, (0, 0)) == frozenset()

    def test_outside_point_rejected(self):
        with pytest.raises(ValueError):
            neighbors(interval(0, 2), (5,))

    def test_neighbor_count_bounds(self):
        line = interval(-3, 3)
        for p in line.points:
            assert len(line.neighbors(p)) <= 2
        box4 = DigitalImage.of([(i, j) for i in range(4) for j in range(4)], 1)
        box8 = DigitalImage.of(box4.points, 2)
        for p in box4.points:
            assert len(box4.neighbors(p)) <= 4
            assert len(box8.neighbors(p)) <= 8
        # interior points of a full rectangle meet the bound exactly
        assert len(box4.neighbors((1, 1))) == 4
        assert len(box8.neighbors((2, 2))) == 8


def brute_force_connected(pts, X):
    """Pairwise path existence inside the set, by exhaustive DFS."""
    pts = sorted(set(pts))
    for a, b in itertools.combinations(pts, 2):
        stack, seen = [a], {a}
        while stack:
            p = stack.pop()
            for q in pts:
                if q not in seen and X.adjacent(p, q):
                    seen.add(q)
                    stack.append(q)
        if b not in seen:
            return False
    return True


class TestConnectivity:
    def test_interval_connected(self):
        assert is_connected(interval(0, 3).points, interval(0, 3))

    def test_gap_disconnected(self):
        X = interval(0, 2)
        assert not is_connected([(0,), (2,)], X)

    def test_diagonal_c2_connected(self):
        X = DigitalImage.of([(0, 0), (1, 1)], 2)
        assert is_connected(X.points, X)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            is_connected([], interval(0, 1))

    def test_against_brute_force(self):
        rng = random.Random(11)
        box = [(i, j) for i in range(4) for j in range(3)]
        for _ in range(150):
            k = rng.randint(1, 12)
            pts = rng.sample(box, min(k, len(box)))
            u = rng.choice((1, 2))
            X = DigitalImage.of(box, u)
            assert is_connected(pts, X) == brute_force_connected(pts, X)

    def test_components_partition(self):
        X = DigitalImage.of([(0,), (1,), (3,), (5,), (6,)], 1)
        comps = X.components()
        assert sorted(sorted(c) for c in comps) == [
            [(0,), (1,)], [(3,)], [(5,), (6,)]]


class TestPaths:
    def test_concatenate(self):
        X = interval(0, 3)
        p1 = LatticePath(X, ((0,), (1,), (2,)))
        p2 = LatticePath(X, ((2,), (3,)))
        assert concatenate(p1, p2).steps == ((0,), (1,), (2,), (3,))

    def test_singleton_identity(self):
        X = interval(0, 2)
        p = LatticePath(X, ((0,), (1,)))
        assert concatenate(p, LatticePath(X, ((1,),))).steps == p.steps

    def test_endpoint_mismatch(self):
        X = interval(0, 3)
        with pytest.raises(ValueError):
            concatenate(LatticePath(X, ((0,),)), LatticePath(X, ((2,),)))

    def test_invalid_step_rejected(self):
        with pytest.raises(ValueError):
            LatticePath(interval(0, 3), ((0,), (2,)))

    def test_associative_on_random_triples(self):
        rng = random.Random(5)
        X = interval(0, 6)
        for _ in range(100):
            def walk(start, n):
                steps = [start]
                for _ in range(n):
                    nxt = steps[-1][0] + rng.choice((-1, 0, 1))
                    steps.append((min(6, max(0, nxt)),))
                return steps
            a = walk((rng.randint(0, 6),), rng.randint(0, 4))
            b = walk(a[-1], rng.randint(0, 4))
            c = walk(b[-1], rng.randint(0, 4))
            p1, p2, p3 = (LatticePath(X, tuple(s)) for s in (a, b, c))
            left = concatenate(concatenate(p1, p2), p3)
            right = concatenate(p1, concatenate(p2, p3))
            assert left == right
            assert left.length == p1.length + p2.length + p3.length


class TestImageConstruction:
    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            DigitalImage(1, ((0,), (0,)), 1)

    def test_points_sorted(self):
        X = DigitalImage(1, ((2,), (0,), (1,)), 1)
        assert X.points == ((0,), (1,), (2,))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            DigitalImage(1, (), 1)

    def test_bad_adjacency(self):
        with pytest.raises(ValueError):
            DigitalImage(1, ((0,),), 2)

    def test_json_round_trip(self):
        X = DigitalImage.of([(0, 1), (1, 1), (2, 0)], 2)
        assert image_from_json(image_to_json(X)) == X

    def test_json_rejects_garbage(self):
        with pytest.raises(ValueError):
            image_from_json({"dim": 1, "adjacency": "k1", "points": [[0]]})
        with pytest.raises(ValueError):
            image_from_json({"dim": 1, "points": [[0]]})


class TestCycleImages:
    @pytest.mark.parametrize("n", [4, 5, 6, 8, 10])
    def test_cycle_is_two_regular_and_cyclic(self, n):
        img = cycle_image(n)
        pts = cycle_points(n)
        assert len(img) == n
        for i, p in enumerate(pts):
            expect = {pts[(i - 1) % n], pts[(i + 1) % n]}
            assert img.neighbors(p) == expect

    def test_odd_large_unsupported(self):
        with pytest.raises(ValueError):
            cycle_image(7)
