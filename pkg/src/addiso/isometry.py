"""K-linear maps between codes: isometry and extendibility tests."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .codes import (
    GenMatrix,
    SpaceTuple,
    codewords,
    column_space,
    encode,
    lambda_matrices,
    space_tuple,
    weight,
)
from .errors import DimensionMismatchError, TooLargeError
from .gf_tower import FieldPair
from .kspace import Matrix, all_vectors, gl_order, identity, is_invertible, mat_vec, solve, span, transpose

MAX_FACTOR_CANDIDATES = 10 ** 6


@dataclass(frozen=True)
class CodeMap:
    """The K-linear map sending row ``r`` of ``source`` to row ``r`` of ``image``."""

    source: GenMatrix
    image: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.image) != self.source.k:
            raise DimensionMismatchError(
                f"{len(self.image)} image rows for a code of dimension {self.source.k}")
        size = self.fields.L.size
        for r in self.image:
            if len(r) != self.source.m:
                raise DimensionMismatchError(f"image row of length {len(r)}, expected {self.source.m}")
            if any(not 0 <= a < size for a in r):
                raise ValueError(f"image entry outside L = GF({size})")

    @classmethod
    def from_rows(cls, source: GenMatrix, image: Sequence[Sequence[int]]) -> CodeMap:
        return cls(source, tuple(tuple(int(a) for a in r) for r in image))

    @property
    def fields(self) -> FieldPair:
        return self.source.fields

    @property
    def k(self) -> int:
        return self.source.k

    @property
    def m(self) -> int:
        return self.source.m

    def image_matrix(self) -> GenMatrix:
        """``A'`` as a generator matrix; valid only when the map is injective."""
        return GenMatrix(self.fields, self.image, self.m)

    def image_columns(self) -> list[tuple[int, ...]]:
        return [tuple(r[i] for r in self.image) for i in range(self.m)]


def image_space_tuple(f: CodeMap) -> SpaceTuple:
    """Column spaces of ``A'`` (no independence requirement on its rows)."""
    return SpaceTuple(tuple(column_space(c, f.fields) for c in f.image_columns()))


def image_word(f: CodeMap, u: Sequence[int]) -> tuple[int, ...]:
    L = f.fields.L
    word = [0] * f.m
    for c, row in zip(u, f.image):
        if c:
            word = [L.add(w, L.mul(c, a)) for w, a in zip(word, row)]
    return tuple(word)


@dataclass(frozen=True)
class MonomialMap:
    """``x -> (g_1(x_perm[0]), ..., g_m(x_perm[m-1]))`` with each ``g_i`` in GL_n(K).

    ``perm`` is 0-based; ``maps[i]`` acts on the K-coordinates of an element of L
    as a column vector.
    """

    perm: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation")
        if len(self.maps) != len(self.perm):
            raise DimensionMismatchError("one coordinate map per position is required")

    @classmethod
    def identity(cls, m: int, n: int) -> MonomialMap:
        return cls(tuple(range(m)), (identity(n),) * m)


def apply_monomial(h: MonomialMap, x: Sequence[int], fp: FieldPair) -> tuple[int, ...]:
    if len(x) != len(h.perm):
        raise DimensionMismatchError(f"vector of length {len(x)}, map of length {len(h.perm)}")
    return tuple(fp.uncoords(mat_vec(g, fp.coords(x[j]), fp.K)) for g, j in zip(h.maps, h.perm))


def is_monomial_valid(h: MonomialMap, fp: FieldPair) -> bool:
    return all(is_invertible(g, fp.K) for g in h.maps)


def is_isometry_direct(f: CodeMap) -> bool:
    """Compare weights of ``A^T u`` and ``A'^T u`` for every ``u`` in K^k."""
    words = codewords(f.source)
    for u, w in zip(all_vectors(f.k, f.fields.q), words):
        if weight(w) != weight(image_word(f, u)):
            return False
    return True


def is_isometry_criterion(f: CodeMap) -> bool:
    """Compare the exact scaled indicator sums of the two tuples of column spaces."""
    from .solutions import indicator_table

    return indicator_table(space_tuple(f.source)) == indicator_table(image_space_tuple(f))


def is_extendible_tuples(f: CodeMap) -> bool:
    return space_tuple(f.source).equivalent(image_space_tuple(f))


def factor_through_aut(sigma: Matrix, tau: Matrix, fp: FieldPair) -> Optional[Matrix]:
    """Least invertible ``g`` (row-major order) with ``sigma = g tau``, if any.

    ``sigma`` and ``tau`` are k x n matrices of maps ``U -> L`` (``u -> M^T u``),
    so the condition reads ``tau g^T = sigma``.
    """
    K, n = fp.K, fp.n
    sol = solve(tau, sigma, K, n, width=n)
    if sol is None:
        return None
    X0, N = sol                      # X = g^T = X0 + kernel part in each column
    q = K.size
    free = len(N) * n
    if q ** free > MAX_FACTOR_CANDIDATES:
        raise TooLargeError(f"{q}^{free} candidate factorizations")
    best: Optional[Matrix] = None
    for coeffs in itertools.product(range(q), repeat=free):
        X = [list(r) for r in X0]
        for col in range(n):
            for t, vec in enumerate(N):
                c = coeffs[col * len(N) + t]
                if c:
                    for row in range(n):
                        X[row][col] = K.add(X[row][col], K.mul(c, vec[row]))
        g = transpose(X)
        if (best is None or g < best) and is_invertible(g, K):
            best = g
    return best


def is_extendible_bruteforce(f: CodeMap, max_m: int = 6, max_gl: int = 10 ** 4
                             ) -> Optional[MonomialMap]:
    """Search for a K-monomial map agreeing with ``f`` on the generators.

    For each position pair ``(i, j)`` the equation ``mu_i = g lambda_j`` is
    solved once; permutations are then tried in lexicographic order and the
    first one with every factor available wins.
    """
    fp = f.fields
    if f.m > max_m or gl_order(fp.n, fp.q) > max_gl:
        raise TooLargeError(f"brute-force extension search at m={f.m}, n={fp.n}, q={fp.q}")
    lam = lambda_matrices(f.source)
    mu = [tuple(fp.coords(a) for a in col) for col in f.image_columns()]
    factor = [[factor_through_aut(mu[i], lam[j], fp) for j in range(f.m)] for i in range(f.m)]
    for perm in itertools.permutations(range(f.m)):
        gs = [factor[i][perm[i]] for i in range(f.m)]
        if all(g is not None for g in gs):
            return MonomialMap(perm, tuple(gs))  # type: ignore[arg-type]
    return None


def witness_agrees(h: MonomialMap, f: CodeMap) -> bool:
    """``h(A^T u) = A'^T u`` for all ``u`` in K^k."""
    fp = f.fields
    for u in all_vectors(f.k, fp.q):
        if apply_monomial(h, encode(f.source, u), fp) != image_word(f, u):
            return False
    return True


def same_dual_image(sigma: Matrix, tau: Matrix, fp: FieldPair) -> bool:
    k = len(sigma)
    return span(transpose(sigma, fp.n), fp.K, k) == span(transpose(tau, fp.n), fp.K, k)


def monomial_group_order(m: int, n: int, q: int) -> int:
    return math.factorial(m) * gl_order(n, q) ** m
