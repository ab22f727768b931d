import random
from itertools import product

import pytest

from conftest import SMALL_SPACES, random_monotone
from topadjoint.category import (
    HomSet,
    Inclusion,
    MonotoneMap,
    check_naturality,
    compose,
    compose_morphisms,
    constant_functor,
    hom,
    identity_functor,
    is_functor,
)
from topadjoint.errors import BijectionMissing, MalformedTable, NotClosed, SpaceMismatch
from topadjoint.topology import discrete, enumerate_spaces


def all_monotone(S, T):
    for table in product(range(len(T.closed_family)), repeat=len(S.closed_family)):
        m = MonotoneMap(S, T, table)
        if is_functor(m):
            yield m


class TestHom:
    def test_empty_source(self, sierpinski):
        for m in sierpinski.closed_family:
            assert hom(sierpinski, sierpinski.make(0), sierpinski.make(m)) is HomSet.SINGLETON_INCLUSION

    def test_inclusion(self, sierpinski):
        assert hom(sierpinski, sierpinski.make(2), sierpinski.make(3)) is HomSet.SINGLETON_INCLUSION

    def test_not_subset(self, sierpinski):
        assert hom(sierpinski, sierpinski.make(3), sierpinski.make(2)) is HomSet.EMPTY

    def test_not_closed(self, sierpinski):
        with pytest.raises(NotClosed):
            hom(sierpinski, sierpinski.make(1), sierpinski.make(3))

    @pytest.mark.parametrize("X", SMALL_SPACES, ids=repr)
    def test_identity_and_dichotomy(self, X):
        for u in X.closed_subsets():
            assert hom(X, u, u) is HomSet.SINGLETON_INCLUSION
            for v in X.closed_subsets():
                h = hom(X, u, v)
                assert h in (HomSet.EMPTY, HomSet.SINGLETON_INCLUSION)
                assert bool(h) == (u.mask & ~v.mask == 0)


class TestIsFunctor:
    def test_constant_to_full(self, sierpinski):
        assert is_functor(constant_functor(sierpinski, sierpinski, 3))

    @pytest.mark.parametrize("X", SMALL_SPACES, ids=repr)
    def test_identity(self, X):
        assert is_functor(identity_functor(X))

    def test_witness(self, sierpinski):
        # {} -> {0,1}, {1} -> {}, {0,1} -> {0,1}
        m = MonotoneMap(sierpinski, sierpinski, (2, 0, 2))
        check = is_functor(m)
        assert not check
        assert (check.witness[0].mask, check.witness[1].mask) == (0, 2)

    def test_malformed(self, sierpinski):
        with pytest.raises(MalformedTable):
            MonotoneMap(sierpinski, sierpinski, (0, 1))
        with pytest.raises(MalformedTable):
            MonotoneMap(sierpinski, sierpinski, (0, 1, 3))


class TestCompose:
    def test_identity_laws(self):
        rng = random.Random(1)
        for X in SMALL_SPACES:
            for Y in SMALL_SPACES[::5]:
                f = random_monotone(X, Y, rng)
                assert compose(identity_functor(Y), f) == f
                assert compose(f, identity_functor(X)) == f

    def test_identity_idempotent(self, sierpinski):
        i = identity_functor(sierpinski)
        assert compose(i, i) == i

    def test_associativity(self):
        rng = random.Random(2)
        for _ in range(500):
            A, B, C, D = (rng.choice(SMALL_SPACES) for _ in range(4))
            f, g, h = random_monotone(A, B, rng), random_monotone(B, C, rng), random_monotone(C, D, rng)
            assert compose(h, compose(g, f)) == compose(compose(h, g), f)

    def test_composite_is_monotone(self):
        rng = random.Random(3)
        for _ in range(300):
            A, B, C = (rng.choice(SMALL_SPACES) for _ in range(3))
            assert is_functor(compose(random_monotone(B, C, rng), random_monotone(A, B, rng)))

    def test_mismatch(self, sierpinski):
        with pytest.raises(SpaceMismatch):
            compose(identity_functor(sierpinski), identity_functor(discrete(2)))


class TestFunctorLaws:
    """On poset categories, monotone tables preserve identities and composites."""

    @pytest.mark.parametrize("X", SMALL_SPACES[:6], ids=repr)
    def test_monotone_maps_preserve_structure(self, X):
        for Y in enumerate_spaces(2):
            for m in all_monotone(X, Y):
                fam = X.closed_family
                for u in fam:
                    assert m.fmap(Inclusion(u, u)) == Inclusion(m.apply_mask(u), m.apply_mask(u))
                for a, b, c in product(fam, repeat=3):
                    if a & ~b == 0 and b & ~c == 0:
                        j, k = Inclusion(a, b), Inclusion(b, c)
                        assert m.fmap(compose_morphisms(k, j)) == compose_morphisms(m.fmap(k), m.fmap(j))

    def test_sampled_n3(self):
        rng = random.Random(4)
        three = list(enumerate_spaces(3))
        for _ in range(300):
            X, Y = rng.choice(three), rng.choice(three)
            m = random_monotone(X, Y, rng)
            for a, b, c in product(X.closed_family, repeat=3):
                if a & ~b == 0 and b & ~c == 0:
                    k, j = Inclusion(b, c), Inclusion(a, b)
                    assert m.fmap(compose_morphisms(k, j)) == compose_morphisms(m.fmap(k), m.fmap(j))

    def test_non_monotone_has_no_morphism_image(self, sierpinski):
        m = MonotoneMap(sierpinski, sierpinski, (2, 0, 2))
        with pytest.raises(ValueError):
            m.fmap(Inclusion(0, 2))


class TestNaturality:
    @pytest.mark.parametrize("X", SMALL_SPACES, ids=repr)
    def test_identity_pair(self, X):
        assert check_naturality(identity_functor(X), identity_functor(X))

    def test_non_adjoint_constant_pair(self, sierpinski):
        const = constant_functor(sierpinski, sierpinski, 0)
        with pytest.raises(BijectionMissing) as exc:
            check_naturality(const, const)
        assert (exc.value.u, exc.value.v) == (2, 0)

    def test_direction_mismatch(self, sierpinski):
        with pytest.raises(SpaceMismatch):
            check_naturality(identity_functor(sierpinski), identity_functor(discrete(2)))
