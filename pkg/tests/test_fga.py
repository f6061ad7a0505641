"""Finitely generated abelian groups against brute-force enumeration."""

import random

import pytest

from hypercenter.zlattice.fga import FgAbelian, Hom, SubgroupOfFgA
from hypercenter.zlattice.intmat import identity_matrix, mat_vec


def brute_closure(X, gens):
    elems = {tuple(X.zero())}
    frontier = [tuple(X.reduce(g)) for g in gens]
    while frontier:
        e = frontier.pop()
        if e in elems:
            continue
        elems.add(e)
        for g in gens:
            frontier.append(tuple(X.add(list(e), g)))
    return elems


def random_finite_group(rng, max_order=400):
    while True:
        d1 = rng.choice([2, 3, 4])
        parts = [d1]
        for _ in range(rng.randint(0, 2)):
            parts.append(parts[-1] * rng.choice([1, 2, 3]))
        X = FgAbelian(0, tuple(parts))
        if X.order() <= max_order:
            return X


def test_constructor_validation():
    with pytest.raises(ValueError):
        FgAbelian(-1)
    with pytest.raises(ValueError):
        FgAbelian(0, (1,))
    with pytest.raises(ValueError):
        FgAbelian(0, (2, 3))
    assert FgAbelian(2, (2, 4)).width == 4


def test_reduce_and_arithmetic():
    X = FgAbelian(1, (4, 8))
    assert X.reduce([3, 9, -1]) == [3, 1, 7]
    assert X.add([1, 3, 7], [1, 1, 1]) == [2, 0, 0]
    assert X.neg([1, 1, 1]) == [-1, 3, 7]
    assert X.order() is None
    assert FgAbelian(0, (2, 4)).order() == 8
    assert FgAbelian(0, ()).order() == 1


def test_from_relations_known_forms():
    grp, _, _ = FgAbelian.from_relations(2, [[2, 0], [0, 2]])
    assert grp == FgAbelian(0, (2, 2))
    grp, _, _ = FgAbelian.from_relations(2, [[1, 0]])
    assert grp == FgAbelian(1, ())
    grp, _, _ = FgAbelian.from_relations(3, [[0, 6, 0]])
    assert grp == FgAbelian(2, (6,))
    grp, _, _ = FgAbelian.from_relations(0, [])
    assert grp == FgAbelian(0, ())
    # 2x + 4y = 0 in Z^2 presents Z x Z/2
    grp, _, _ = FgAbelian.from_relations(2, [[2, 4]])
    assert grp == FgAbelian(1, (2,))


def test_from_relations_projection_section():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(1, 4)
        rels = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(rng.randint(0, 4))]
        grp, proj, sec = FgAbelian.from_relations(n, rels)
        w = grp.width
        if w:
            pe = [
                [sum(proj[i][k] * sec[k][j] for k in range(n)) for j in range(w)]
                for i in range(w)
            ]
            assert pe == identity_matrix(w)
        for r in rels:
            assert not w or grp.is_zero(mat_vec(proj, r))


def test_subgroup_ops_against_enumeration():
    rng = random.Random(11)
    for _ in range(80):
        X = random_finite_group(rng)
        ga = [[rng.randrange(d) for d in X.invariants] for _ in range(rng.randint(0, 2))]
        gb = [[rng.randrange(d) for d in X.invariants] for _ in range(rng.randint(0, 2))]
        A, B = X.subgroup(ga), X.subgroup(gb)
        ea, eb = brute_closure(X, ga), brute_closure(X, gb)
        assert A.order() == len(ea)
        assert B.order() == len(eb)
        assert A.sum_with(B).order() == len(brute_closure(X, ga + gb))
        assert A.intersect(B).order() == len(ea & eb)
        for e in list(ea)[:15]:
            assert A.contains_element(list(e))
        outside = [e for e in map(tuple, X.elements()) if e not in ea]
        for e in outside[:10]:
            assert not A.contains_element(list(e))


def test_quotient_and_as_group_roundtrip():
    rng = random.Random(13)
    for _ in range(60):
        X = random_finite_group(rng)
        gens = [[rng.randrange(d) for d in X.invariants] for _ in range(rng.randint(0, 2))]
        A = X.subgroup(gens)
        Q, proj, _ = A.quotient()
        assert Q.order() * A.order() == X.order()
        assert proj.kernel() == A
        assert proj.image().is_full()
        G2, incl, cproj = A.as_group()
        assert G2.order() == A.order()
        for e in list(brute_closure(X, gens))[:10]:
            c = A.member_coords(list(e), cproj)
            assert X.eq(incl.apply(c), list(e))


def test_quotient_mixed_rank():
    X = FgAbelian(1, (4, 8))
    S = X.subgroup([[0, 2, 0]])
    assert S.order() == 2
    Q, _, _ = S.quotient()
    assert Q == FgAbelian(1, (2, 8))


def test_hom_validation_and_equality():
    X, Y = FgAbelian(0, (2,)), FgAbelian(0, (3,))
    with pytest.raises(ValueError):
        Hom(X, Y, [[1]])
    Z4 = FgAbelian(0, (4,))
    a = Hom(Z4, Z4, [[1]])
    b = Hom(Z4, Z4, [[5]])
    assert a.eq(b)
    assert a.is_identity() and b.is_identity()


def test_hom_kernel_image_preimage_bruteforce():
    rng = random.Random(5)
    tested = 0
    while tested < 60:
        d1 = rng.choice([2, 3, 4])
        d2 = d1 * rng.choice([1, 2, 3])
        X = FgAbelian(0, (d1, d2))
        mat = [[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)]
        try:
            h = Hom(X, X, mat)
        except ValueError:
            continue
        tested += 1
        sub = X.subgroup([[rng.randrange(d1), rng.randrange(d2)]])
        pre = h.preimage(sub)
        for e in X.elements():
            assert pre.contains_element(e) == sub.contains_element(h.apply(e))
        im = h.image(sub)
        imgs = {tuple(h.apply(e)) for e in X.elements() if sub.contains_element(e)}
        assert sum(1 for e in X.elements() if im.contains_element(e)) == len(imgs)


def test_order_of_rotation_automorphism():
    X = FgAbelian(2, (2,))
    f = Hom(X, X, [[0, -1, 0], [1, -1, 0], [0, 0, 1]])
    assert f.order_as_automorphism() == 3
    g = f.sub(Hom.identity(X))
    # det(f - 1) = 3 on the free block and the Z/2 coordinate is untouched
    assert g.image().index_in_ambient() == 6


def test_saturation_and_torsion():
    X = FgAbelian(2, (4,))
    S = X.subgroup([[2, 0, 0]])
    sat = S.saturation()
    assert sat.contains_element([1, 0, 0])
    assert sat.contains_element([0, 0, 1])
    assert not sat.contains_element([0, 1, 0])
    assert X.full_subgroup().torsion_part().order() == 4
    # S itself meets the torsion coordinate only in zero
    assert S.torsion_part().is_trivial()


def test_hom_power():
    X = FgAbelian(2)
    f = Hom(X, X, [[0, -1], [1, -1]])
    assert f.power(3).is_identity()
    assert not f.power(2).is_identity()
    assert f.power(0).is_identity()


def test_trivial_and_full():
    X = FgAbelian(1, (3,))
    t, f = X.trivial_subgroup(), X.full_subgroup()
    assert t.is_trivial() and not t.is_full()
    assert f.is_full() and not f.is_trivial()
    assert f.contains(t)
    assert t.index_in_ambient() is None
    assert t.order() == 1
    assert f.order() is None
