"""Function layer: continuity, induced maps, isomorphism, retraction."""

import itertools
import random

import pytest

from digitop import (DigitalImage, FamilyFunction, FiniteFunction, compose,
                     constant_map, enumerate_all_subsets,
                     enumerate_connected_subsets, find_inducing_map,
                     function_from_json, function_to_json, identity_map,
                     induced_map, interval, is_continuous, is_family_continuous,
                     is_isomorphism, is_retraction)
from digitop.functions import (continuity_counterexample,
                               family_function_from_json,
                               family_function_to_json)
from digitop.verify import random_continuous_function, random_image


def fn(X, Y, *values):
    return FiniteFunction(X, Y, tuple(zip(X.points, values)))


class TestContinuity:
    def test_identity(self):
        assert is_continuous(identity_map(interval(0, 4)))

    def test_remark_pair(self):
        X = interval(0, 2)
        f = fn(X, X, (0,), (1,), (2,))
        g = fn(X, X, (1,), (2,), (2,))
        assert is_continuous(f) and is_continuous(g)

    def test_stretch_discontinuous(self):
        f = fn(interval(0, 1), interval(0, 2), (0,), (2,))
        assert not is_continuous(f)
        assert continuity_counterexample(f) == ((0,), (1,))

    def test_table_must_be_total(self):
        X = interval(0, 1)
        with pytest.raises(ValueError):
            FiniteFunction(X, X, (((0,), (0,)),))
        with pytest.raises(ValueError):
            FiniteFunction(X, X, (((0,), (0,)), ((1,), (7,))))


class TestInducedMap:
    def test_constant(self):
        X = interval(0, 2)
        F = induced_map(constant_map(X, X, (1,)), enumerate_all_subsets(X))
        assert all(v == frozenset({(1,)}) for _, v in F.pairs)

    def test_identity_law(self):
        X = DigitalImage.of([(0, 0), (1, 0), (1, 1)], 2)
        for fam in (enumerate_all_subsets(X), enumerate_connected_subsets(X)):
            assert induced_map(identity_map(X), fam).pairs == identity_map(fam).pairs

    def test_composition_law(self):
        rng = random.Random(2)
        for _ in range(40):
            X, Y, Z = (random_image(rng, 4) for _ in range(3))
            f = random_continuous_function(rng, X, Y)
            g = random_continuous_function(rng, Y, Z)
            left = induced_map(compose(g, f), enumerate_all_subsets(X))
            right = compose(induced_map(g, enumerate_all_subsets(Y)),
                            induced_map(f, enumerate_all_subsets(X)))
            assert left.pairs == right.pairs

    def test_family_mismatch_rejected(self):
        X, Y = interval(0, 1), interval(0, 2)
        f = fn(X, Y, (0,), (1,))
        with pytest.raises(ValueError):
            induced_map(f, enumerate_all_subsets(Y))

    def test_disconnected_image_named(self):
        X, Y = interval(0, 1), interval(0, 2)
        f = fn(X, Y, (0,), (2,))  # discontinuous; {0,1} maps to a gap
        with pytest.raises(ValueError, match="not a member"):
            induced_map(f, enumerate_connected_subsets(X))


class TestFamilyContinuity:
    def test_continuity_iff_exhaustive_small(self):
        cases = [
            (interval(0, 2), interval(0, 1)),
            (DigitalImage.of([(0, 0), (1, 0), (0, 1)], 1),
             DigitalImage.of([(0, 0), (1, 1), (1, 0)], 2)),
        ]
        for X, Y in cases:
            for values in itertools.product(Y.points, repeat=len(X)):
                f = fn(X, Y, *values)
                cont = is_continuous(f)
                full = is_family_continuous(induced_map(f, enumerate_all_subsets(X)))
                try:
                    conn = is_family_continuous(
                        induced_map(f, enumerate_connected_subsets(X)))
                except ValueError:
                    conn = False
                assert cont == full == conn

    def test_constant_family_map_continuous(self):
        X = interval(0, 1)
        K = enumerate_connected_subsets(X)
        F = FamilyFunction.from_table(K, K, {m: frozenset(X.points) for m in K.members})
        assert is_family_continuous(F)


class TestIsomorphism:
    def test_identity(self):
        assert is_isomorphism(identity_map(interval(0, 3)))

    def test_gap_embedding_not_iso(self):
        X = interval(0, 1)
        Y = DigitalImage.of([(0,), (2,)], 1)
        f = fn(X, Y, (0,), (2,))
        assert not is_isomorphism(f)

    def test_non_bijective(self):
        X = interval(0, 1)
        assert not is_isomorphism(constant_map(X, X, (0,)))

    def test_iso_iff_induced_iso(self):
        X = DigitalImage.of([(0, 0), (0, 1), (1, 1)], 2)
        Y = DigitalImage.of([(5, 5), (5, 6), (6, 6)], 2)
        shift = fn(X, Y, (5, 5), (5, 6), (6, 6))
        assert is_isomorphism(shift)
        assert is_isomorphism(induced_map(shift, enumerate_all_subsets(X)))
        assert is_isomorphism(induced_map(shift, enumerate_connected_subsets(X)))


class TestRetraction:
    def test_identity_retraction(self):
        X = interval(0, 2)
        assert is_retraction(identity_map(X), X.points)

    def test_clamp(self):
        X, Y = interval(0, 2), interval(0, 1)
        r = fn(X, Y, (0,), (1,), (1,))
        assert is_retraction(r, Y.points)

    def test_moved_point(self):
        X, Y = interval(0, 2), interval(0, 1)
        r = fn(X, Y, (1,), (0,), (1,))
        assert not is_retraction(r, Y.points)

    def test_empty_target_rejected(self):
        X = interval(0, 1)
        with pytest.raises(ValueError):
            is_retraction(identity_map(X), [])

    def test_lift_fixes_small_members(self):
        X, Y = interval(0, 3), interval(0, 1)
        r = fn(X, Y, (0,), (1,), (1,), (1,))
        assert is_retraction(r, Y.points)
        for build in (enumerate_all_subsets, enumerate_connected_subsets):
            rs = induced_map(r, build(X))
            assert is_family_continuous(rs)
            for member in rs.domain.members:
                if member <= Y.point_set:
                    assert rs.table[member] == member


class TestFindInducingMap:
    def test_identity_found(self):
        X = interval(0, 2)
        K = enumerate_connected_subsets(X)
        F = induced_map(identity_map(X), K)
        found = find_inducing_map(F)
        assert found is not None and found.pairs == identity_map(X).pairs

    def test_constant_to_whole_absent(self):
        X = interval(0, 1)
        K = enumerate_connected_subsets(X)
        F = FamilyFunction.from_table(K, K, {m: frozenset(X.points) for m in K.members})
        assert find_inducing_map(F) is None

    def test_roundtrip_of_random_induced(self):
        rng = random.Random(8)
        for _ in range(25):
            X, Y = random_image(rng, 3), random_image(rng, 3)
            g = random_continuous_function(rng, X, Y)
            F = induced_map(g, enumerate_all_subsets(X))
            f = find_inducing_map(F)
            assert f is not None
            assert induced_map(f, enumerate_all_subsets(X)).pairs == F.pairs


class TestSerialization:
    def test_function_round_trip(self):
        X = DigitalImage.of([(0, 0), (1, 1)], 2)
        f = fn(X, X, (1, 1), (0, 0))
        assert function_from_json(function_to_json(f)) == f

    def test_family_function_round_trip(self):
        X = interval(0, 1)
        K = enumerate_connected_subsets(X)
        F = induced_map(identity_map(X), K)
        doc = family_function_to_json(F)
        back = family_function_from_json(doc)
        assert back.pairs == F.pairs and back.domain == F.domain

    def test_family_domain_has_no_function_doc(self):
        with pytest.raises(ValueError):
            function_to_json(induced_map(identity_map(interval(0, 1)),
                                         enumerate_all_subsets(interval(0, 1))))
