"""Solutions of the indicator-sum equation, subspace coverings and the sweep.

A pair of tuples of subspaces of K^k is a *solution* when the functions
``sum_i 1_{V_i} / |V_i|`` and ``sum_i 1_{U_i} / |U_i|`` agree on K^k; it is
*trivial* when the two tuples are equal as multisets.  Tables are scaled by
``q^k`` so every entry is an integer.
"""

from __future__ import annotations

import enum
import itertools
import math
import random
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .codes import GenMatrix, SpaceTuple, column_matrix, column_space, space_tuple, vector_from_flat
from .errors import (
    BadCodimensionError,
    BudgetExceededError,
    LengthTooShortError,
    TooLargeError,
    VerificationError,
)
from .gf_tower import Field, FieldPair, field_of_order, format_field
from .isometry import (
    CodeMap,
    factor_through_aut,
    image_space_tuple,
    is_extendible_bruteforce,
    is_extendible_tuples,
    is_isometry_criterion,
    is_isometry_direct,
    witness_agrees,
)
from .kspace import (
    KSubspace,
    Matrix,
    all_vectors,
    enumerate_points,
    enumerate_subspaces,
    gaussian_binomial,
    hyperplanes_containing,
    lattice,
    point_index,
    point_mask,
    rref,
    subspaces_of,
    vec_add,
    vec_scale,
)

MAX_TABLE_POINTS = 1 << 20
MAX_MULTISETS = 10 ** 6
DEFAULT_BUDGET = 10 ** 9


# --- indicator tables ----------------------------------------------------------

@dataclass(frozen=True)
class IndicatorTable:
    """``q^k * sum_i 1_{V_i} / |V_i|`` at every point of K^k (point-index order)."""

    k: int
    q: int
    values: tuple[int, ...]

    def at(self, v: Sequence[int]) -> int:
        return self.values[point_index(v, self.q)]


def indicator_table(T: SpaceTuple | Sequence[KSubspace], k: Optional[int] = None,
                    K: Optional[Field] = None) -> IndicatorTable:
    spaces = list(T)
    if spaces:
        K, k = spaces[0].K, spaces[0].ambient_dim
    if K is None or k is None:
        raise ValueError("an empty tuple needs explicit k and K")
    q = K.size
    if q ** k > MAX_TABLE_POINTS:
        raise TooLargeError(f"indicator table over {q}^{k} points")
    values = [0] * (q ** k)
    for V in spaces:
        w = q ** (k - V.dim)
        for v in enumerate_points(V):
            values[point_index(v, q)] += w
    return IndicatorTable(k, q, tuple(values))


# --- solution pairs --------------------------------------------------------------

class Classification(str, enum.Enum):
    NOT_SOLUTION = "not_solution"
    TRIVIAL = "trivial"
    NONTRIVIAL = "nontrivial"


@dataclass(frozen=True)
class SolutionPair:
    U: SpaceTuple
    V: SpaceTuple

    @classmethod
    def of(cls, U: Sequence[KSubspace], V: Sequence[KSubspace]) -> SolutionPair:
        return cls(SpaceTuple(tuple(U)), SpaceTuple(tuple(V)))

    def key(self) -> tuple:
        return (tuple(s.sort_key() for s in self.U.multiset()),
                tuple(s.sort_key() for s in self.V.multiset()))


def classify_pair(P: SolutionPair) -> Classification:
    if indicator_table(P.U) != indicator_table(P.V):
        return Classification.NOT_SOLUTION
    if P.U.equivalent(P.V):
        return Classification.TRIVIAL
    return Classification.NONTRIVIAL


def family_A(V: KSubspace, S: KSubspace) -> SolutionPair:
    """``V`` repeated q times plus ``S``, against the q+1 hyperplanes of V through S."""
    if V.dim < 2:
        raise BadCodimensionError("V must have dimension at least 2")
    hyperplanes = hyperplanes_containing(S, V)
    return SolutionPair.of(hyperplanes, (V,) * V.q + (S,))


# --- coverings ---------------------------------------------------------------------

@dataclass(frozen=True)
class CoveringBound:
    """Outcome of the exhaustive search for a cover of K^k by at most q proper subspaces."""

    holds: bool
    checked: int
    cover: Optional[tuple[KSubspace, ...]] = None

    def __bool__(self) -> bool:
        return self.holds


def _as_field(q: int | Field) -> Field:
    return field_of_order(q) if isinstance(q, int) else q


def check_covering_bound(k: int, q: int | Field) -> CoveringBound:
    """No multiset of at most q proper subspaces covers K^k.

    Only hyperplanes are tried: every proper subspace sits inside one, so a
    cover by proper subspaces yields a cover by hyperplanes of the same size.
    Multisets with repetition of size exactly q include every smaller one.
    """
    K = _as_field(q)
    hyper = enumerate_subspaces(K, k, k - 1)
    masks = [point_mask(H) for H in hyper]
    full = (1 << (K.size ** k)) - 1
    checked = 0
    for combo in itertools.combinations_with_replacement(range(len(hyper)), K.size):
        checked += 1
        union = 0
        for i in combo:
            union |= masks[i]
        if union == full:
            return CoveringBound(False, checked, tuple(hyper[i] for i in combo))
    return CoveringBound(True, checked)


@dataclass(frozen=True)
class MinCovering:
    spaces: tuple[KSubspace, ...]
    S: KSubspace


def classify_min_coverings(V: KSubspace) -> list[MinCovering]:
    """Every multiset of q+1 proper subspaces of ``V`` whose union is ``V``.

    Each is checked to be the full bundle of hyperplanes of ``V`` through a
    common subspace ``S`` of codimension 2; a ``VerificationError`` is raised
    otherwise.
    """
    if V.dim < 2:
        raise BadCodimensionError("V must have dimension at least 2")
    q = V.q
    proper = [W for W in subspaces_of(V) if W.dim < V.dim]
    n_multi = math.comb(len(proper) + q, q + 1)
    if n_multi > MAX_MULTISETS:
        raise TooLargeError(f"{n_multi} candidate multisets")
    masks = [point_mask(W) for W in proper]
    full = point_mask(V)
    out = []
    for combo in itertools.combinations_with_replacement(range(len(proper)), q + 1):
        union = 0
        for i in combo:
            union |= masks[i]
        if union != full:
            continue
        spaces = tuple(proper[i] for i in combo)
        S = spaces[0]
        for W in spaces[1:]:
            S = S & W
        if S.dim != V.dim - 2 or list(spaces) != hyperplanes_containing(S, V):
            raise VerificationError(
                "covering is not a hyperplane bundle",
                "\n".join(str(W) for W in spaces))
        out.append(MinCovering(spaces, S))
    return out


# --- exhaustive search for nontrivial solutions -----------------------------------

def search_nontrivial(k: int, m: int, q: int | Field, dim_hypothesis: bool = False
                      ) -> list[SolutionPair]:
    """All ordered nontrivial solutions ``(U, V)`` of length m in K^k, up to equivalence.

    With ``dim_hypothesis`` only pairs with ``max dim V_i > max dim U_i`` are
    kept, and each is checked against the (U^A, V^A) family.  When ``m <= q``
    the result is checked to be empty.
    """
    K = _as_field(q)
    subspaces = enumerate_subspaces(K, k)
    n_multi = math.comb(len(subspaces) + m - 1, m)
    if n_multi > MAX_MULTISETS:
        raise TooLargeError(f"{n_multi} multisets of {m} subspaces")
    qq = K.size
    contrib = []
    for W in subspaces:
        w = qq ** (k - W.dim)
        contrib.append([(point_index(v, qq), w) for v in enumerate_points(W)])
    buckets: dict[tuple[int, ...], list[tuple[int, ...]]] = defaultdict(list)
    for combo in itertools.combinations_with_replacement(range(len(subspaces)), m):
        values = [0] * (qq ** k)
        for i in combo:
            for idx, w in contrib[i]:
                values[idx] += w
        buckets[tuple(values)].append(combo)
    out = []
    for combos in buckets.values():
        for a, b in itertools.permutations(combos, 2):
            pair = SolutionPair.of([subspaces[i] for i in a], [subspaces[i] for i in b])
            if dim_hypothesis and max(pair.V.dims()) <= max(pair.U.dims()):
                continue
            out.append(pair)
    out.sort(key=SolutionPair.key)
    if m <= qq and out:
        raise VerificationError(f"nontrivial solution with m={m} <= q={qq}", _dump_pair(out[0]))
    if dim_hypothesis:
        for pair in out:
            if not matches_family_A(pair):
                raise VerificationError("solution outside the (U^A, V^A) family", _dump_pair(pair))
    return out


def matches_family_A(pair: SolutionPair) -> bool:
    """Is ``pair`` equivalent to ``family_A(V, S)`` for some ``V`` and ``S``?"""
    V = max(pair.V, key=lambda W: W.dim)
    if V.dim < 2:
        return False
    S = pair.U[0]
    for W in pair.U:
        S = S & W
    if S.dim != V.dim - 2 or not lattice(V, S, "contains"):
        return False
    ref = family_A(V, S)
    return ref.U.equivalent(pair.U) and ref.V.equivalent(pair.V)


def _dump_pair(pair: SolutionPair) -> str:
    return ("U: " + " ".join(str(W) for W in pair.U) + "\n"
            "V: " + " ".join(str(W) for W in pair.V))


# --- counterexample constructor -----------------------------------------------------

def build_counterexample(fp: FieldPair, m: int) -> CodeMap:
    """An isometry that is not extendible, for any length ``m >= q + 1``.

    Generators ``(1,..,1,0)`` and ``(x_1,..,x_q,1)`` (the ``x_i`` run over K)
    map to ``(1,..,1,0)`` and ``(w,..,w,0)`` with ``w`` the first element of
    L outside K.  Longer codes are padded with zero columns.
    """
    q = fp.q
    if m <= q:
        raise LengthTooShortError(f"m = {m} must exceed q = {q}")
    if fp.n < 2:
        raise LengthTooShortError("L must be a proper extension of K")
    omega = next(a for a in fp.L.elements() if not fp.in_K(a))
    pad = (0,) * (m - q - 1)
    v1 = (1,) * q + (0,) + pad
    v2 = tuple(range(q)) + (1,) + pad
    u1 = (1,) * q + (0,) + pad
    u2 = (omega,) * q + (0,) + pad
    return CodeMap(GenMatrix(fp, (v1, v2), m), (u1, u2))


def canonicalize_map(f: CodeMap) -> CodeMap:
    """Rewrite ``f`` on the reduced echelon basis of its code (as a subspace of K^(nm))."""
    fp = f.fields
    K, nm = fp.K, fp.n * f.m
    flat_src = f.source.flattened()
    flat_img = tuple(tuple(c for a in r for c in fp.coords(a)) for r in f.image)
    aug = [s + t for s, t in zip(flat_src, flat_img)]
    R, _, _ = rref(aug, K, nm)
    src = tuple(vector_from_flat(r[:nm], fp) for r in R)
    img = tuple(vector_from_flat(r[nm:], fp) for r in R)
    return CodeMap(GenMatrix(fp, src, f.m), img)


# --- sweep over all codes and all isometries ---------------------------------------

class _FlatSpace:
    """K^(nm) with vectors as point indices; addition is digitwise mod p."""

    def __init__(self, fp: FieldPair, m: int) -> None:
        K, n, q = fp.K, fp.n, fp.q
        self.p = fp.p
        self.size = q ** (n * m)
        if self.size > MAX_TABLE_POINTS:
            raise TooLargeError(f"{self.size} vectors in K^{n * m}")
        vectors = list(all_vectors(n * m, q))
        self.vectors = vectors
        self.weight = [sum(1 for i in range(0, n * m, n) if any(v[i:i + n])) for v in vectors]
        self.scale = {c: [point_index(vec_scale(c, v, K), q) for v in vectors]
                      for c in range(1, q)}
        self._add_t = None
        if self.p != 2 and self.size <= 1024:
            self._add_t = [[point_index(vec_add(u, v, K), q) for v in vectors] for u in vectors]

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_t is not None:
            return self._add_t[a][b]
        p, out, place = self.p, 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * place
            place *= p
        return out


def code_isometries(basis: Sequence[Sequence[int]], fp: FieldPair, m: int,
                    space: Optional[_FlatSpace] = None) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every image tuple of a weight-preserving K-linear map on the code spanned by ``basis``.

    ``basis`` rows and yielded rows are vectors of K^(nm).  Images are chosen
    generator by generator among vectors of matching weight; after each
    choice every new combination ``x + c g`` is checked against its image.
    """
    S = space or _FlatSpace(fp, m)
    q = fp.q
    wt, add, scale = S.weight, S.add, S.scale
    by_weight: dict[int, list[int]] = defaultdict(list)
    for idx, w in enumerate(wt):
        by_weight[w].append(idx)
    gens = [point_index(g, q) for g in basis]

    def extend(j: int, pairs: list[tuple[int, int]], chosen: list[int]
               ) -> Iterator[tuple[tuple[int, ...], ...]]:
        if j == len(gens):
            yield tuple(S.vectors[y] for y in chosen)
            return
        g = gens[j]
        scaled_g = [scale[c][g] for c in range(1, q)]
        for y in by_weight[wt[g]]:
            new_pairs = []
            ok = True
            for c, cg in zip(range(1, q), scaled_g):
                cy = scale[c][y]
                for x, xi in pairs:
                    a, b = add(x, cg), add(xi, cy)
                    if wt[a] != wt[b]:
                        ok = False
                        break
                    new_pairs.append((a, b))
                if not ok:
                    break
            if ok:
                yield from extend(j + 1, pairs + new_pairs, chosen + [y])

    yield from extend(0, [(0, 0)], [])


@dataclass
class SweepReport:
    field: str
    q: int
    n: int
    m: int
    max_k: int
    codes: int = 0
    isometries: int = 0
    extendible: int = 0
    unextendible: int = 0
    oracle_checked: int = 0
    dedupe: bool = False
    witness_cap: int = 0
    witnesses: list[tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]] = (
        field(default_factory=list))

    def check(self) -> None:
        if self.extendible + self.unextendible != self.isometries:
            raise VerificationError("extendible + unextendible != isometries")


def sweep_budget(q: int, n: int, m: int, max_k: int) -> int:
    """Upper bound on candidate image tuples the sweep may visit."""
    nm = n * m
    return sum(gaussian_binomial(nm, k, q) * (q ** nm) ** k for k in range(max_k + 1))


def _code_rows(basis: Sequence[Sequence[int]], fp: FieldPair) -> tuple[tuple[int, ...], ...]:
    return tuple(vector_from_flat(r, fp) for r in basis)


def _sweep_code(args: tuple) -> tuple[int, int, list]:
    """Worker: classify every isometry of one code. Returns (iso, unext, witness keys)."""
    fp, m, basis, cap = args
    rows = _code_rows(basis, fp)
    A = GenMatrix(fp, rows, m)
    V = space_tuple(A)
    V_multiset = V.multiset()
    table = indicator_table(V, k=A.k, K=fp.K)
    spaces: dict[tuple[int, ...], KSubspace] = {}
    tables: dict[tuple[KSubspace, ...], IndicatorTable] = {V_multiset: table}
    iso = unext = 0
    witnesses = []
    for images in code_isometries(basis, fp, m, _flat_space(fp, m)):
        iso += 1
        image = _code_rows(images, fp)
        U = []
        for i in range(m):
            col = tuple(r[i] for r in image)
            if col not in spaces:
                spaces[col] = column_space(col, fp)
            U.append(spaces[col])
        U_multiset = tuple(sorted(U))
        if U_multiset not in tables:
            tables[U_multiset] = indicator_table(U_multiset, k=A.k, K=fp.K)
        if tables[U_multiset] != table:
            raise VerificationError("weight-preserving map fails the indicator equation",
                                    _dump_map(CodeMap(A, image)))
        if U_multiset != V_multiset:
            unext += 1
            if len(witnesses) < cap:
                witnesses.append((rows, image))
    return iso, unext, witnesses


_FLAT_CACHE: dict[tuple[FieldPair, int], _FlatSpace] = {}


def _flat_space(fp: FieldPair, m: int) -> _FlatSpace:
    key = (fp, m)
    if key not in _FLAT_CACHE:
        _FLAT_CACHE[key] = _FlatSpace(fp, m)
    return _FLAT_CACHE[key]


def _dump_map(f: CodeMap) -> str:
    return "A:  " + repr(f.source.rows) + "\nA': " + repr(f.image)


def sweep_theorem(fp: FieldPair, m: int, max_k: int, *, sample_oracle: int = 0, seed: int = 0,
                  dedupe: bool = False, budget: int = DEFAULT_BUDGET, workers: int = 1,
                  witness_cap: int = 20) -> SweepReport:
    """Enumerate every K-linear code of dimension <= max_k in L^m and all its isometries.

    Each isometry is classified by comparing tuples of column spaces; a
    seeded random sample of ``sample_oracle`` instances is re-checked with
    the brute-force extension search.  Raises ``VerificationError`` if an
    unextendible isometry appears with ``m <= q``.
    """
    q, n = fp.q, fp.n
    nm = n * m
    max_k = min(max_k, nm)
    estimate = sweep_budget(q, n, m, max_k)
    if estimate > budget:
        raise BudgetExceededError(f"estimated {estimate} steps exceed budget {budget}")
    report = SweepReport(format_field(fp), q, n, m, max_k, dedupe=dedupe, witness_cap=witness_cap)

    bases: list[Matrix] = []
    seen: set = set()
    for k in range(max_k + 1):
        for C in enumerate_subspaces(fp.K, nm, k):
            if dedupe:
                sig = space_tuple(GenMatrix(fp, _code_rows(C.basis, fp), m)).multiset()
                if sig in seen:
                    continue
                seen.add(sig)
            bases.append(C.basis)
    report.codes = len(bases)

    jobs = [(fp, m, b, witness_cap) for b in bases]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_sweep_code, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [_sweep_code(j) for j in jobs]

    per_code = []
    for iso, unext, wit in results:
        report.isometries += iso
        report.unextendible += unext
        report.witnesses.extend(wit)
        per_code.append(iso)
    report.extendible = report.isometries - report.unextendible
    report.witnesses = sorted(report.witnesses)[:witness_cap]

    if sample_oracle:
        rng = random.Random(seed)
        picks = sorted(rng.sample(range(report.isometries), min(sample_oracle, report.isometries)))
        report.oracle_checked = _oracle_check(fp, m, bases, per_code, picks)
    for rows, image in report.witnesses:
        f = CodeMap(GenMatrix(fp, rows, m), image)
        if is_extendible_bruteforce(f) is not None:
            raise VerificationError("tuple criterion and brute force disagree", _dump_map(f))
    report.check()
    if m <= q and report.unextendible:
        raise VerificationError(f"unextendible isometry at m={m} <= q={q}",
                                _dump_map(CodeMap(GenMatrix(fp, report.witnesses[0][0], m),
                                                  report.witnesses[0][1])))
    return report


def _oracle_check(fp: FieldPair, m: int, bases: list, per_code: list[int], picks: list[int]) -> int:
    """Re-check selected global instance indices against the brute-force search."""
    checked = 0
    offset = 0
    it = iter(picks)
    nxt = next(it, None)
    for basis, count in zip(bases, per_code):
        if nxt is None:
            break
        if nxt >= offset + count:
            offset += count
            continue
        A = GenMatrix(fp, _code_rows(basis, fp), m)
        V = space_tuple(A)
        for local, images in enumerate(code_isometries(basis, fp, m, _flat_space(fp, m))):
            if nxt is None or nxt >= offset + count:
                break
            if offset + local != nxt:
                continue
            f = CodeMap(A, _code_rows(images, fp))
            tuples_say = V.equivalent(image_space_tuple(f))
            witness = is_extendible_bruteforce(f)
            if tuples_say != (witness is not None) or (witness and not witness_agrees(witness, f)):
                raise VerificationError("tuple criterion and brute force disagree", _dump_map(f))
            checked += 1
            nxt = next(it, None)
        offset += count
    return checked


# --- exhaustive cross-check of the criteria against their oracles -------------------

@dataclass
class GridReport:
    """Counts from :func:`oracle_grid`; ``disagreements`` holds dumps of failing maps."""

    m: int
    max_k: int
    codes: int = 0
    maps: int = 0
    isometries: int = 0
    extendible: int = 0
    public_checked: int = 0
    disagreements: list[str] = field(default_factory=list)


def oracle_grid(fp: FieldPair, m: int, max_k: int, *, public_sample: Optional[int] = None,
                seed: int = 0) -> GridReport:
    """Every K-linear map from every code of dimension <= max_k in L^m into L^m.

    For each map the four predicates are evaluated: weights of all image
    words, equality of indicator tables, equivalence of tuples and
    existence of a monomial extension (per-pair factorizations solved once
    and memoised, then permutations tried).  Direct-vs-criterion and
    tuples-vs-extension must agree on every map.

    The public functions ``is_isometry_direct``, ``is_isometry_criterion``,
    ``is_extendible_tuples`` and ``is_extendible_bruteforce`` are also run,
    on every map when ``public_sample`` is None and otherwise on a seeded
    sample of that many maps, and must return the same verdicts.
    """
    q, n, K = fp.q, fp.n, fp.K
    nm = n * m
    S = _flat_space(fp, m)
    N = S.size
    blocks = [vector_from_flat(v, fp) for v in S.vectors]
    report = GridReport(m, max_k)
    space_id: dict[KSubspace, int] = {}
    spaces: list[KSubspace] = []
    col_id: dict[tuple[int, ...], int] = {}
    col_space: list[int] = []
    col_mat: list[Matrix] = []
    same_table: dict[tuple[tuple[int, ...], tuple[int, ...]], bool] = {}
    matchings: dict[int, bool] = {}
    factor_ok: dict[tuple[int, int], bool] = {}
    perms = list(itertools.permutations(range(m)))

    def cid(col: tuple[int, ...]) -> int:
        if col not in col_id:
            W = column_space(col, fp)
            if W not in space_id:
                space_id[W] = len(spaces)
                spaces.append(W)
            col_id[col] = len(col_space)
            col_space.append(space_id[W])
            col_mat.append(column_matrix(col, fp))
        return col_id[col]

    def tables_equal(u_ids: tuple[int, ...], v_ids: tuple[int, ...], k: int) -> bool:
        key = (u_ids, v_ids)
        if key not in same_table:
            same_table[key] = (indicator_table([spaces[i] for i in u_ids], k=k, K=K)
                               == indicator_table([spaces[i] for i in v_ids], k=k, K=K))
        return same_table[key]

    def extendible(u: tuple[int, ...], v: tuple[int, ...]) -> bool:
        mask = 0
        for a in u:
            for b in v:
                if (a, b) not in factor_ok:
                    factor_ok[a, b] = factor_through_aut(col_mat[a], col_mat[b], fp) is not None
                mask = (mask << 1) | factor_ok[a, b]
        if mask not in matchings:
            bits = [[(mask >> (m * m - 1 - i * m - j)) & 1 for j in range(m)] for i in range(m)]
            matchings[mask] = any(all(bits[i][perm[i]] for i in range(m)) for perm in perms)
        return matchings[mask]

    codes = [C for k in range(min(max_k, nm) + 1) for C in enumerate_subspaces(K, nm, k)]
    report.codes = len(codes)
    total = sum(N ** C.dim for C in codes)
    picks: Optional[set[int]] = None
    if public_sample is not None:
        picks = set(random.Random(seed).sample(range(total), min(public_sample, total)))
    index = 0
    for C in codes:
        k = C.dim
        rows = _code_rows(C.basis, fp)
        A = GenMatrix(fp, rows, m)
        gens = [point_index(g, q) for g in C.basis]
        coeffs = [u for u in all_vectors(k, q) if any(u)]

        def combine(vs: Sequence[int], u: Sequence[int]) -> int:
            acc = 0
            for c, v in zip(u, vs):
                if c:
                    acc = S.add(acc, S.scale[c][v])
            return acc

        code_wts = [S.weight[combine(gens, u)] for u in coeffs]
        v_cols = tuple(cid(tuple(r[i] for r in rows)) for i in range(m))
        v_ids = tuple(sorted(col_space[c] for c in v_cols))
        for images in itertools.product(range(N), repeat=k):
            report.maps += 1
            direct = all(S.weight[combine(images, u)] == w for u, w in zip(coeffs, code_wts))
            image_rows = tuple(blocks[y] for y in images)
            u_cols = tuple(cid(tuple(r[i] for r in image_rows)) for i in range(m))
            u_ids = tuple(sorted(col_space[c] for c in u_cols))
            crit = tables_equal(u_ids, v_ids, k)
            tuples = u_ids == v_ids
            brute = extendible(u_cols, v_cols)
            report.isometries += direct
            report.extendible += brute
            f = None
            if direct != crit or tuples != brute or (brute and not direct):
                f = CodeMap(A, image_rows)
                report.disagreements.append(_dump_map(f))
            if picks is None or index in picks:
                f = f or CodeMap(A, image_rows)
                witness = is_extendible_bruteforce(f)
                public = (is_isometry_direct(f), is_isometry_criterion(f),
                          is_extendible_tuples(f), witness is not None)
                if public != (direct, crit, tuples, brute) or (
                        witness is not None and not witness_agrees(witness, f)):
                    report.disagreements.append("public functions: " + _dump_map(f))
                report.public_checked += 1
            index += 1
    return report
