import itertools
import random

import pytest

from addiso.codes import GenMatrix, codewords, space_tuple, weight
from addiso.errors import DimensionMismatchError, TooLargeError
from addiso.gf_tower import make_field_pair
from addiso.isometry import (
    CodeMap,
    MonomialMap,
    apply_monomial,
    factor_through_aut,
    image_space_tuple,
    is_extendible_bruteforce,
    is_extendible_tuples,
    is_isometry_criterion,
    is_isometry_direct,
    is_monomial_valid,
    monomial_group_order,
    same_dual_image,
    witness_agrees,
)
from addiso.kspace import (
    all_vectors,
    enumerate_invertible,
    enumerate_subspaces,
    full_space,
    identity,
    mat_mul,
    mat_vec,
    span,
    transpose,
    zero_space,
)
from addiso.solutions import build_counterexample

from conftest import OMEGA


def _identity_map(A):
    return CodeMap(A, A.rows)


def test_codemap_validation(ex2):
    with pytest.raises(DimensionMismatchError):
        CodeMap(ex2, ex2.rows[:2])
    with pytest.raises(DimensionMismatchError):
        CodeMap(ex2, ((1, 1), (1, 0), (0, 1)))
    with pytest.raises(ValueError):
        CodeMap(ex2, ((1, 1, 7), (1, 0, 1), (0, 1, 0)))


def test_monomial_validation():
    with pytest.raises(ValueError):
        MonomialMap((0, 0), (identity(2), identity(2)))
    with pytest.raises(DimensionMismatchError):
        MonomialMap((0, 1), (identity(2),))


def test_apply_identity_monomial(f4):
    h = MonomialMap.identity(3, 2)
    assert is_monomial_valid(h, f4)
    for x in itertools.product(range(4), repeat=3):
        assert apply_monomial(h, x, f4) == x


def test_monomial_maps_preserve_weight(f4):
    rng = random.Random(0)
    G = enumerate_invertible(f4.K, 2)
    words = list(itertools.product(range(4), repeat=3))
    for _ in range(30):
        perm = list(range(3))
        rng.shuffle(perm)
        h = MonomialMap(tuple(perm), tuple(rng.choice(G) for _ in range(3)))
        images = [apply_monomial(h, x, f4) for x in words]
        assert len(set(images)) == 64
        assert all(weight(x) == weight(y) for x, y in zip(words, images))


def test_linear_isometries_of_f4_squared_are_monomial(f4):
    """Every weight-preserving F_2-linear bijection of F_4^2 is F_2-monomial."""
    K = f4.K
    vecs = list(all_vectors(4, 2))

    def block_weight(v):
        return int(any(v[:2])) + int(any(v[2:]))

    isometries = {M for M in enumerate_invertible(K, 4)
                  if all(block_weight(mat_vec(M, v, K)) == block_weight(v) for v in vecs)}
    units = [tuple(int(i == j) for i in range(4)) for j in range(4)]
    monomial = set()
    for perm in itertools.permutations(range(2)):
        for g1, g2 in itertools.product(enumerate_invertible(K, 2), repeat=2):
            h = MonomialMap(perm, (g1, g2))
            images = [apply_monomial(h, (f4.uncoords(u[:2]), f4.uncoords(u[2:])), f4) for u in units]
            monomial.add(transpose([f4.coords(y[0]) + f4.coords(y[1]) for y in images]))
    assert len(isometries) == 72 == monomial_group_order(2, 2, 2)
    assert isometries == monomial


def test_worked_examples_are_isometries(ex1, ex3):
    assert is_isometry_direct(ex1) and is_isometry_criterion(ex1)
    assert is_isometry_direct(ex3) and is_isometry_criterion(ex3)


def test_non_isometry(f4):
    A = GenMatrix.from_rows(f4, [(1, 1, 0)])
    f = CodeMap.from_rows(A, [(1, 0, 0)])
    assert not is_isometry_direct(f)
    assert not is_isometry_criterion(f)
    assert not is_extendible_tuples(f)
    assert is_extendible_bruteforce(f) is None


def test_ex3_unextendible(ex3):
    assert not is_extendible_tuples(ex3)
    assert is_extendible_bruteforce(ex3) is None
    assert [str(U) for U in image_space_tuple(ex3)] == [
        "[(1,1,0),(0,0,1)]", "[(1,0,0),(0,0,1)]", "[(0,1,0)]"]


def test_identity_map_is_extendible(ex2):
    f = _identity_map(ex2)
    assert is_isometry_direct(f) and is_isometry_criterion(f) and is_extendible_tuples(f)
    w = is_extendible_bruteforce(f)
    assert w == MonomialMap.identity(3, 2)
    assert witness_agrees(w, f)


def test_counterexample_tuples(f4):
    f = build_counterexample(f4, 3)
    K = f4.K
    V = space_tuple(f.source).multiset()
    U = image_space_tuple(f).multiset()
    assert set(V) == {span([(1, 0)], K, 2), span([(1, 1)], K, 2), span([(0, 1)], K, 2)}
    assert U == (zero_space(K, 2), full_space(K, 2), full_space(K, 2))
    assert not is_extendible_tuples(f)


def _least_factor(sigma, tau, fp):
    for g in enumerate_invertible(fp.K, fp.n):
        if mat_mul(tau, transpose(g), fp.K) == tuple(tuple(r) for r in sigma):
            return g
    return None


def test_factor_through_aut_examples(ex2, ex3, f4):
    tau = tuple(f4.coords(a) for a in ex2.column(0))
    g = factor_through_aut(tau, tau, f4)
    assert g is not None and mat_mul(tau, transpose(g), f4.K) == tau
    sigma = tuple(f4.coords(a) for a in ex3.image_columns()[0])
    assert factor_through_aut(sigma, tau, f4) is None
    assert not same_dual_image(sigma, tau, f4)


@pytest.mark.parametrize("spec", [(2, 1, 2), (3, 1, 2), (2, 1, 3)])
def test_factor_through_aut_random(spec):
    fp = make_field_pair(*spec)
    K = fp.K
    G = enumerate_invertible(K, fp.n)
    rng = random.Random(7)
    for _ in range(500):
        k = rng.randint(1, 3)
        tau = tuple(tuple(rng.randrange(fp.q) for _ in range(fp.n)) for _ in range(k))
        g = rng.choice(G)
        sigma = mat_mul(tau, transpose(g), K)
        found = factor_through_aut(sigma, tau, fp)
        assert found is not None
        assert mat_mul(tau, transpose(found), K) == sigma
        assert found == _least_factor(sigma, tau, fp)
        assert same_dual_image(sigma, tau, fp)


def test_factor_exists_iff_same_dual_image(f4):
    cols = list(itertools.product(itertools.product(range(2), repeat=2), repeat=2))
    for sigma, tau in itertools.product(cols, repeat=2):
        found = factor_through_aut(sigma, tau, f4)
        assert (found is not None) == same_dual_image(sigma, tau, f4)
        assert found == _least_factor(sigma, tau, f4)


def test_exhaustive_m2_agreement(f4):
    """All maps from every code of dimension <= 2 in F_4^2 into F_4^2."""
    K = f4.K
    disagreements = 0
    maps = 0
    for k in range(3):
        for C in enumerate_subspaces(K, 4, k):
            rows = tuple((f4.uncoords(r[:2]), f4.uncoords(r[2:])) for r in C.basis)
            A = GenMatrix(f4, rows, 2)
            for image in itertools.product(itertools.product(range(4), repeat=2), repeat=k):
                f = CodeMap(A, image)
                maps += 1
                direct, crit = is_isometry_direct(f), is_isometry_criterion(f)
                witness = is_extendible_bruteforce(f)
                disagreements += direct != crit
                disagreements += is_extendible_tuples(f) != (witness is not None)
                if witness is not None:
                    assert direct and witness_agrees(witness, f)
    assert maps == 1 + 15 * 16 + 35 * 256
    assert disagreements == 0


def test_bruteforce_too_large():
    fp = make_field_pair(2, 1, 2)
    A = GenMatrix.from_rows(fp, [(1,) * 7])
    with pytest.raises(TooLargeError):
        is_extendible_bruteforce(CodeMap(A, A.rows))


def test_witness_is_first_permutation(f4):
    # swapping two equal columns: the identity permutation already works
    A = GenMatrix.from_rows(f4, [(1, 1, OMEGA)])
    f = CodeMap.from_rows(A, [(1, 1, OMEGA)])
    w = is_extendible_bruteforce(f)
    assert w.perm == (0, 1, 2)
    g = CodeMap.from_rows(A, [(OMEGA, 1, 1)])
    w = is_extendible_bruteforce(g)
    assert w.perm == (0, 1, 2) and witness_agrees(w, g)


def test_codewords_images_match_witness(ex2):
    f = _identity_map(ex2)
    w = is_extendible_bruteforce(f)
    assert [apply_monomial(w, c, ex2.fields) for c in codewords(ex2)] == codewords(ex2)
