"""Acceptance criteria 1-8.  Each test prints its measured numbers; the
terminal summary lists one PASS/FAIL line per criterion."""

import random
import time

import pytest

from addiso.characters import coordinate_weight_identity, weight_representation_check
from addiso.cli import _character_fields, random_gen_matrix, run
from addiso.codes import space_tuple
from addiso.gf_tower import field_of_order, make_field_pair
from addiso.isometry import (
    image_space_tuple,
    is_extendible_bruteforce,
    is_extendible_tuples,
    is_isometry_criterion,
    is_isometry_direct,
)
from addiso.kspace import (
    all_vectors,
    enumerate_invertible,
    enumerate_subspaces,
    full_space,
    gaussian_binomial,
    span,
    subspaces_of,
)
from addiso.solutions import (
    Classification,
    SolutionPair,
    build_counterexample,
    check_covering_bound,
    classify_min_coverings,
    classify_pair,
    family_A,
    indicator_table,
    oracle_grid,
    sweep_theorem,
)


def _timed(fn, *args, **kwargs):
    start = time.perf_counter()
    result = fn(*args, **kwargs)
    return result, time.perf_counter() - start


@pytest.mark.slow
@pytest.mark.criterion(1, "sweep GF(2)^2, m=2, max_k=4: 0 unextendible in <= 60 s")
def test_criterion_1_forward_sweep():
    report, elapsed = _timed(sweep_theorem, make_field_pair(2, 1, 2), 2, 4,
                             sample_oracle=200, seed=1, workers=1)
    print(f"codes={report.codes} isometries={report.isometries} "
          f"unextendible={report.unextendible} oracle={report.oracle_checked} time={elapsed:.2f}s")
    assert report.codes == sum(gaussian_binomial(4, k, 2) for k in range(5))
    assert report.unextendible == 0
    assert report.extendible == report.isometries == 2104
    assert report.oracle_checked == 200
    assert elapsed <= 60


@pytest.mark.criterion(2, "counterexamples (2,3), (2,4), (3,4): isometry, no extension, <= 5 s each")
@pytest.mark.parametrize("p, m", [(2, 3), (2, 4), (3, 4)])
def test_criterion_2_counterexamples(p, m):
    fp = make_field_pair(p, 1, 2)
    start = time.perf_counter()
    f = build_counterexample(fp, m)
    direct = is_isometry_direct(f)
    witness = is_extendible_bruteforce(f)
    elapsed = time.perf_counter() - start
    print(f"q={p} m={m} isometry={direct} witness={witness} time={elapsed:.3f}s")
    assert direct and witness is None
    assert not is_extendible_tuples(f)
    assert elapsed <= 5


@pytest.mark.criterion(3, "example ex-3 reproduced exactly")
def test_criterion_3_ex3(ex3, datadir):
    K = ex3.fields.K
    V = space_tuple(ex3.source)
    U = image_space_tuple(ex3)
    assert tuple(V) == (span([(1, 0, 1), (0, 1, 0)], K, 3), span([(1, 0, 0), (0, 1, 0)], K, 3),
                        span([(0, 0, 1)], K, 3))
    assert tuple(U) == (span([(1, 1, 0), (0, 0, 1)], K, 3), span([(1, 0, 0), (0, 0, 1)], K, 3),
                        span([(0, 1, 0)], K, 3))
    assert indicator_table(V) == indicator_table(U)
    assert not V.equivalent(U)
    assert is_isometry_direct(ex3) and is_isometry_criterion(ex3)
    assert not is_extendible_tuples(ex3) and is_extendible_bruteforce(ex3) is None
    code, out = run(["check-map", str(datadir / "ex3.map")])
    assert code == 0 and "isometry: yes; extendible: no" in out


@pytest.mark.slow
@pytest.mark.criterion(4, "criterion/oracle agreement on q=2, n=2, m<=3, k<=2: 0 disagreements")
def test_criterion_4_oracle_equivalence():
    fp = make_field_pair(2, 1, 2)
    disagreements = []
    for m in (1, 2, 3):
        sample = None if m <= 2 else 3000
        grid, elapsed = _timed(oracle_grid, fp, m, 2, public_sample=sample, seed=13)
        print(f"m={m} codes={grid.codes} maps={grid.maps} isometries={grid.isometries} "
              f"extendible={grid.extendible} public_checked={grid.public_checked} "
              f"disagreements={len(grid.disagreements)} time={elapsed:.1f}s")
        disagreements += grid.disagreements
        if m == 3:
            assert grid.maps == sum(64 ** C.dim for k in range(3)
                                    for C in enumerate_subspaces(fp.K, 6, k))
            assert grid.isometries == 153469 and grid.extendible == 147637
    assert disagreements == []


@pytest.mark.criterion(5, "character identities exact: |L| <= 64, 1000 random (A, u), ex-2 grid")
def test_criterion_5_characters(ex2):
    elements = 0
    for fp in _character_fields():
        for a in fp.L.elements():
            assert coordinate_weight_identity(a, fp)
            elements += 1
    rng = random.Random(2024)
    grid = [make_field_pair(2, 1, 2), make_field_pair(3, 1, 2)]
    for _ in range(1000):
        fp = rng.choice(grid)
        m = rng.randint(1, 4)
        A = random_gen_matrix(fp, min(rng.randint(1, 3), fp.n * m), m, rng)
        u = tuple(rng.randrange(fp.q) for _ in range(A.k))
        assert weight_representation_check(A, u)
    for u in all_vectors(3, 2):
        assert weight_representation_check(ex2, u)
    print(f"field pairs={len(_character_fields())} elements={elements} random=1000 ex2=8")


@pytest.mark.criterion(6, "covering lemmas for (q, k) in {2,3}x{2,3}; family_A nontrivial")
def test_criterion_6_coverings():
    for q in (2, 3):
        K = field_of_order(q)
        for k in (2, 3):
            bound = check_covering_bound(k, K)
            covers = classify_min_coverings(full_space(K, k))
            print(f"q={q} k={k} bound={bound.holds} checked={bound.checked} coverings={len(covers)}")
            assert bound.holds
            assert len(covers) == gaussian_binomial(k, k - 2, q)
            for c in covers:
                assert c.S.dim == k - 2
                assert all(W.dim == k - 1 and W & c.S == c.S for W in c.spaces)
            for dimV in range(2, k + 1):
                for V in enumerate_subspaces(K, k, dimV):
                    for S in subspaces_of(V, dimV - 2):
                        assert classify_pair(family_A(V, S)) is Classification.NONTRIVIAL
    assert classify_pair(SolutionPair.of(enumerate_subspaces(field_of_order(2), 2, 1),
                                         enumerate_subspaces(field_of_order(2), 2, 1))) \
        is Classification.TRIVIAL


@pytest.mark.criterion(7, "classical MacWilliams sweep K=L=F_2, m=3, max_k=3: 0 unextendible in <= 60 s")
def test_criterion_7_classical():
    report, elapsed = _timed(sweep_theorem, make_field_pair(2, 1, 1), 3, 3, sample_oracle=59, seed=0)
    print(f"codes={report.codes} isometries={report.isometries} "
          f"unextendible={report.unextendible} time={elapsed:.2f}s")
    assert report.codes == 16 and report.unextendible == 0
    assert report.oracle_checked == report.isometries
    assert elapsed <= 60


@pytest.mark.criterion(8, "subspace counts are Gaussian binomials (k<=4, q in {2,3}); |GL_2| = 6, 48")
def test_criterion_8_structural_counts():
    for q in (2, 3):
        K = field_of_order(q)
        for k in range(5):
            counts = [len(enumerate_subspaces(K, k, r)) for r in range(k + 1)]
            assert counts == [gaussian_binomial(k, r, q) for r in range(k + 1)]
    assert [len(enumerate_subspaces(field_of_order(2), 4, r)) for r in range(5)] == [1, 15, 35, 15, 1]
    assert [len(enumerate_subspaces(field_of_order(3), 4, r)) for r in range(5)] == [1, 40, 130, 40, 1]
    assert len(enumerate_invertible(field_of_order(2), 2)) == 6
    assert len(enumerate_invertible(field_of_order(3), 2)) == 48
