"""K-linear codes in L^m given by generator matrices, and their column spaces."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DimensionMismatchError, TooLargeError
from .gf_tower import FieldPair
from .kspace import (
    KSubspace,
    Matrix,
    Vector,
    all_vectors,
    rank,
    span,
    transpose,
)

MAX_CODEWORDS = 1 << 20


def column_matrix(col: Sequence[int], fp: FieldPair) -> Matrix:
    """The k x n matrix over K whose row ``r`` holds the coordinates of ``col[r]``."""
    return tuple(fp.coords(a) for a in col)


def column_space(col: Sequence[int], fp: FieldPair) -> KSubspace:
    """K-span of the expansion components ``v_1 .. v_n`` of a column of L^k."""
    k = len(col)
    return span(transpose(column_matrix(col, fp), fp.n), fp.K, k)


def column_space_dual(col: Sequence[int], fp: FieldPair) -> KSubspace:
    """Image of the dual of ``u -> sum u_r col[r]``, by evaluating the map.

    The matrix of the map is read off from its values on unit vectors
    (computed with field arithmetic in L), then every image point ``M b`` for
    ``b`` in K^n is enumerated.
    """
    L, K = fp.L, fp.K
    k = len(col)

    def lam(u: Sequence[int]) -> int:
        value = 0
        for c, a in zip(u, col):
            value = L.add(value, L.mul(c, a))
        return value

    M = [fp.coords(lam([int(r == s) for s in range(k)])) for r in range(k)]
    points = []
    for b in all_vectors(fp.n, fp.q):
        pt = []
        for row in M:
            acc = 0
            for x, y in zip(row, b):
                acc = K.add(acc, K.mul(x, y))
            pt.append(acc)
        points.append(pt)
    return span(points, K, k)


@dataclass(frozen=True)
class SpaceTuple:
    """Ordered column spaces ``(V_1, ..., V_m)`` of a generator matrix."""

    spaces: tuple[KSubspace, ...]

    def __len__(self) -> int:
        return len(self.spaces)

    def __iter__(self) -> Iterator[KSubspace]:
        return iter(self.spaces)

    def __getitem__(self, i: int) -> KSubspace:
        return self.spaces[i]

    @property
    def m(self) -> int:
        return len(self.spaces)

    def multiset(self) -> tuple[KSubspace, ...]:
        return tuple(sorted(self.spaces))

    def equivalent(self, other: SpaceTuple) -> bool:
        """Equal as multisets (some permutation matches them entrywise)."""
        return Counter(self.spaces) == Counter(other.spaces)

    def dims(self) -> tuple[int, ...]:
        return tuple(V.dim for V in self.spaces)


@dataclass(frozen=True)
class GenMatrix:
    """A k x m matrix over L with K-independent rows."""

    fields: FieldPair
    rows: tuple[tuple[int, ...], ...]
    m: int

    def __post_init__(self) -> None:
        size = self.fields.L.size
        for r in self.rows:
            if len(r) != self.m:
                raise DimensionMismatchError(f"row of length {len(r)} in a code of length {self.m}")
            if any(not 0 <= a < size for a in r):
                raise ValueError(f"entry outside L = GF({size})")
        if rank(self.flattened(), self.fields.K, self.fields.n * self.m) != self.k:
            raise DimensionMismatchError("generator rows are K-linearly dependent")

    @classmethod
    def from_rows(cls, fields: FieldPair, rows: Sequence[Sequence[int]], m: int | None = None
                  ) -> GenMatrix:
        rows = tuple(tuple(int(a) for a in r) for r in rows)
        if m is None:
            if not rows:
                raise DimensionMismatchError("length m is required for an empty generator matrix")
            m = len(rows[0])
        return cls(fields, rows, m)

    @property
    def k(self) -> int:
        return len(self.rows)

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(r[i] for r in self.rows)

    def flattened(self) -> Matrix:
        """k x nm matrix over K: each entry replaced by its n coordinates."""
        fp = self.fields
        return tuple(tuple(c for a in r for c in fp.coords(a)) for r in self.rows)


def space_tuple(A: GenMatrix) -> SpaceTuple:
    return SpaceTuple(tuple(column_space(A.column(i), A.fields) for i in range(A.m)))


def encode(A: GenMatrix, u: Sequence[int]) -> tuple[int, ...]:
    """The codeword ``A^T u`` for ``u`` in K^k."""
    L = A.fields.L
    word = [0] * A.m
    for c, row in zip(u, A.rows):
        if c:
            word = [L.add(w, L.mul(c, a)) for w, a in zip(word, row)]
    return tuple(word)


def codewords(A: GenMatrix) -> list[tuple[int, ...]]:
    """All ``q^k`` codewords, indexed like the points of K^k."""
    q = A.fields.q
    if q ** A.k > MAX_CODEWORDS:
        raise TooLargeError(f"{q}^{A.k} codewords exceed the enumeration cap")
    return [encode(A, u) for u in all_vectors(A.k, q)]


def weight(x: Sequence[int]) -> int:
    return sum(1 for a in x if a)


def weight_distribution(A: GenMatrix) -> list[int]:
    dist = [0] * (A.m + 1)
    for w in codewords(A):
        dist[weight(w)] += 1
    return dist


def check_dim_sum(A: GenMatrix) -> bool:
    """K-dimension of the code equals the dimension of the sum of its column spaces."""
    lhs = rank(A.flattened(), A.fields.K, A.fields.n * A.m)
    total = span((), A.fields.K, A.k)
    for V in space_tuple(A):
        total = total + V
    return lhs == total.dim


def lambda_matrices(A: GenMatrix) -> list[Matrix]:
    """Per-coordinate k x n matrices ``M_i`` with ``lambda_i(u) = M_i^T u``."""
    return [column_matrix(A.column(i), A.fields) for i in range(A.m)]


def vector_from_flat(v: Sequence[int], fp: FieldPair) -> Vector:
    """Regroup a vector of K^(nm) into m elements of L."""
    n = fp.n
    return tuple(fp.uncoords(v[i:i + n]) for i in range(0, len(v), n))
