import random

import pytest
from hypothesis import given, settings, strategies as st

from brauer_dessins import _accel
from brauer_dessins.dessin import (
    Dessin,
    InvalidDessinError,
    NotTransitiveError,
    canonical_form,
    dual,
    example_3,
    example_fig1,
    from_cycles,
    is_isomorphic,
    mirror,
    nakayama,
    new_dessin,
    oriented_dual,
    passport,
    polygon,
    star,
    trivial,
)
from brauer_dessins.permutation import Permutation, compose, cycles
from oracles import brute_canonical, brute_isomorphic, images


def random_relabel(d, rng):
    g = list(range(1, d.n + 1))
    rng.shuffle(g)
    return d.relabel(Permutation(tuple(g)))


def test_new_dessin_worked_example():
    d = from_cycles(5, [(2, 3, 4)], [(1, 2), (3, 5, 4)])
    assert d.phi == Permutation.from_cycles(5, [(1, 4, 5, 2)])
    assert compose(compose(d.sigma, d.alpha), d.phi).is_identity()


def test_trivial_dessin():
    d = trivial()
    assert d.n == 1 and d.phi.is_identity()
    p = passport(d)
    assert (p.black_degrees, p.white_degrees, p.face_degrees, p.genus) == ((1,), (1,), (1,), 0)


def test_not_transitive():
    with pytest.raises(NotTransitiveError):
        from_cycles(4, [(1, 2)], [(3, 4)])


def test_bad_triple_rejected():
    s = Permutation.from_cycles(3, [(1, 2, 3)])
    with pytest.raises(InvalidDessinError):
        Dessin(s, Permutation.identity(3), s)


def test_fig1_passport():
    d = example_fig1()
    # phi = (sigma alpha)^-1, composed independently here
    sa = [d.alpha(d.sigma(i)) for i in range(1, 12)]
    phi = [0] * 11
    for i, x in enumerate(sa, start=1):
        phi[x - 1] = i
    assert tuple(phi) == d.phi.image
    assert cycles(d.phi) == [(1, 5, 3, 8, 6, 2, 11, 10), (4,), (7, 9)]
    p = passport(d)
    assert p.black_degrees == (5, 2, 2, 1, 1)
    assert p.white_degrees == (3, 3, 2, 2, 1)
    assert p.face_degrees == (8, 2, 1)
    assert p.genus == 0


def test_nakayama_passport():
    p = passport(nakayama(4))
    assert (p.black_degrees, p.white_degrees, p.face_degrees, p.genus) == ((4,), (1, 1, 1, 1), (4,), 0)


def test_polygon_and_star_generators():
    p = passport(polygon(3))
    assert (p.black_degrees, p.white_degrees, p.face_degrees, p.genus) == ((2, 2, 2), (2, 2, 2), (3, 3), 0)
    assert passport(star(3)).black_degrees == (1, 1, 1)
    assert passport(example_3()).white_degrees == (3, 3, 2, 2, 2)
    for bad in (lambda: nakayama(1), lambda: polygon(2), lambda: star(0)):
        with pytest.raises(ValueError):
            bad()


@pytest.mark.parametrize("n", range(2, 9))
def test_nakayama_self_dual(n):
    d = nakayama(n)
    assert dual(d) == d


def test_dual_examples():
    assert dual(trivial()) == trivial()
    assert passport(dual(example_fig1())).black_degrees == (8, 2, 1)


def test_mirror_examples():
    m = mirror(from_cycles(3, [(1, 2, 3)], []))
    assert m.sigma == Permutation.from_cycles(3, [(1, 3, 2)])
    assert m.alpha.is_identity()
    assert m.phi == Permutation.from_cycles(3, [(1, 2, 3)])
    d = example_fig1()
    assert mirror(mirror(d)) == d
    assert passport(mirror(d)) == passport(d)
    assert [set(c) for c in cycles(mirror(d).sigma)] == [set(c) for c in cycles(d.sigma)]


def test_oriented_dual_examples():
    assert oriented_dual(trivial()) == trivial()
    s3 = star(3)
    assert oriented_dual(s3).sigma == s3.phi
    nk = nakayama(4)
    assert oriented_dual(nk).sigma == nk.sigma.inverse()


def test_dual_involution_and_passport_swap(corpus6):
    for d in corpus6:
        e = dual(d)
        assert dual(e) == d
        p, q = passport(d), passport(e)
        assert q.black_degrees == p.face_degrees
        assert q.face_degrees == p.black_degrees
        assert q.white_degrees == p.white_degrees
        assert q.genus == p.genus
        assert compose(compose(e.sigma, e.alpha), e.phi).is_identity()


def test_genus_parity(corpus6):
    for d in corpus6:
        euler = len(cycles(d.sigma)) + len(cycles(d.alpha)) + len(cycles(d.phi)) - d.n
        assert euler % 2 == 0
        assert passport(d).genus >= 0


def test_isomorphism_examples():
    rng = random.Random(7)
    d = example_fig1()
    assert is_isomorphic(d, random_relabel(d, rng))
    assert not is_isomorphic(nakayama(3), star(3))
    assert not is_isomorphic(d, dual(d))


def test_is_isomorphic_agrees_with_brute_force(corpus4):
    rng = random.Random(11)
    small = [d for d in corpus4 if d.n == 4]
    for d1 in small:
        for d2 in small[:8] + [random_relabel(d1, rng)]:
            assert is_isomorphic(d1, d2) == brute_isomorphic(d1, d2)


def test_canonical_form_examples():
    c = canonical_form(nakayama(2))
    assert c.sigma == Permutation.from_cycles(2, [(1, 2)])
    d = example_3()
    rng = random.Random(3)
    small = from_cycles(6, [(1, 2, 3), (4, 5)], [(3, 4), (5, 6)])
    cf = canonical_form(small)
    assert canonical_form(cf) == cf
    assert canonical_form(random_relabel(small, rng)) == cf
    assert d.n == 12  # too large for brute force; canonical form stays an n <= 7 tool


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_canonical_form_matches_brute_force(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    while True:
        s = list(range(1, n + 1))
        a = list(range(1, n + 1))
        rng.shuffle(s)
        rng.shuffle(a)
        try:
            d = new_dessin(n, Permutation(tuple(s)), Permutation(tuple(a)))
            break
        except NotTransitiveError:
            continue
    expected = brute_canonical(*images(d))
    for backend in ("numba", "numpy"):
        c = canonical_form(d, backend=backend)
        assert images(c) == expected
    assert canonical_form(random_relabel(d, rng)) == canonical_form(d)


def test_canonical_form_complete_invariant_n4(corpus4):
    # distinct corpus entries are pairwise non-isomorphic; canonical forms separate them
    by_n = [d for d in corpus4 if d.n == 4]
    keys = {images(canonical_form(d)) for d in by_n}
    assert len(keys) == len(by_n)
    for d in by_n:
        assert canonical_form(d) == d


def test_accel_transitivity_matches():
    s = (1, 0, 2, 3)
    a = (0, 1, 3, 2)
    for backend in ("numba", "numpy"):
        assert not _accel.is_transitive(s, a, backend=backend)
        assert _accel.is_transitive((1, 2, 3, 0), a, backend=backend)
