"""Linear algebra over a finite field K.

Vectors are tuples of element codes; matrices are tuples of row tuples.
Subspaces of K^k are held in canonical form: the nonzero rows of their
reduced row echelon basis, so two subspaces are equal exactly when their
bases are equal.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field as dc_field
from functools import total_ordering
from typing import Iterable, Iterator, Optional, Sequence

from .errors import BadCodimensionError, DimensionMismatchError, TooLargeError
from .gf_tower import Field

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]

MAX_POINTS = 1 << 20
MAX_SUBSPACES = 10 ** 7
MAX_GL = 10 ** 6


# --- elementary matrix operations -------------------------------------------

def rref(rows: Iterable[Sequence[int]], K: Field, ncols: Optional[int] = None
         ) -> tuple[Matrix, int, tuple[int, ...]]:
    """Gauss-Jordan reduction.

    Returns the reduced matrix (same shape, zero rows last), its rank and the
    pivot columns.
    """
    M = [list(r) for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    add, mul, neg, inv = K.add, K.mul, K.neg, K.inv
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(M):
            break
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        row = M[r]
        if row[c] != 1:
            s = inv(row[c])
            row = M[r] = [mul(s, x) for x in row]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = neg(M[i][c])
                Mi = M[i]
                M[i] = [add(a, mul(f, b)) if b else a for a, b in zip(Mi, row)]
        pivots.append(c)
        r += 1
    return tuple(tuple(x) for x in M), r, tuple(pivots)


def rank(rows: Iterable[Sequence[int]], K: Field, ncols: Optional[int] = None) -> int:
    return rref(rows, K, ncols)[1]


def transpose(M: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Matrix:
    if not M:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*M))


def mat_mul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], K: Field) -> Matrix:
    add, mul = K.add, K.mul
    Bt = list(zip(*B))
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            s = 0
            for a, b in zip(row, col):
                if a and b:
                    s = add(s, mul(a, b))
            out_row.append(s)
        out.append(tuple(out_row))
    return tuple(out)


def mat_vec(M: Sequence[Sequence[int]], v: Sequence[int], K: Field) -> Vector:
    """``M v`` with ``v`` treated as a column."""
    add, mul = K.add, K.mul
    out = []
    for row in M:
        s = 0
        for a, b in zip(row, v):
            if a and b:
                s = add(s, mul(a, b))
        out.append(s)
    return tuple(out)


def vec_add(u: Sequence[int], v: Sequence[int], K: Field) -> Vector:
    add = K.add
    return tuple(add(a, b) for a, b in zip(u, v))


def vec_scale(c: int, v: Sequence[int], K: Field) -> Vector:
    mul = K.mul
    return tuple(mul(c, a) for a in v)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def is_invertible(M: Sequence[Sequence[int]], K: Field) -> bool:
    n = len(M)
    return all(len(r) == n for r in M) and rank(M, K, n) == n


def mat_inv(M: Sequence[Sequence[int]], K: Field) -> Optional[Matrix]:
    n = len(M)
    if n == 0:
        return ()
    aug = [tuple(r) + identity(n)[i] for i, r in enumerate(M)]
    R, rk, piv = rref(aug, K, 2 * n)
    if rk < n or piv[n - 1] >= n:
        return None
    return tuple(r[n:] for r in R)


def kernel(M: Sequence[Sequence[int]], K: Field, ncols: int) -> Matrix:
    """Basis of ``{x : M x = 0}``, one free variable per vector."""
    R, rk, piv = rref(M, K, ncols)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for i, pc in enumerate(piv):
            x[pc] = K.neg(R[i][f])
        basis.append(tuple(x))
    return tuple(basis)


def solve(P: Sequence[Sequence[int]], Q: Sequence[Sequence[int]], K: Field, ncols: int,
          width: Optional[int] = None) -> Optional[tuple[Matrix, Matrix]]:
    """Solve ``P X = Q`` for ``X`` with ``ncols`` rows.

    Returns ``(X0, N)`` where ``X0`` is one solution and the rows of ``N``
    span the kernel of ``P`` (every solution is ``X0`` plus kernel vectors in
    each column), or ``None`` when the system is inconsistent.
    """
    if width is None:
        width = len(Q[0]) if Q else 0
    aug = [tuple(p) + tuple(q) for p, q in zip(P, Q)]
    R, rk, piv = rref(aug, K, ncols + width)
    if piv and piv[-1] >= ncols:
        return None
    X = [[0] * width for _ in range(ncols)]
    for i, pc in enumerate(piv):
        X[pc] = list(R[i][ncols:])
    return tuple(tuple(r) for r in X), kernel(P, K, ncols)


# --- points and subspaces ----------------------------------------------------

def point_index(v: Sequence[int], q: int) -> int:
    """Index of ``v`` in the enumeration of K^k (first coordinate least significant)."""
    idx = 0
    for a in reversed(v):
        idx = idx * q + a
    return idx


def all_vectors(k: int, q: int) -> Iterator[Vector]:
    """K^k in point-index order."""
    if q ** k > MAX_POINTS:
        raise TooLargeError(f"{q}^{k} points exceed the enumeration cap")
    for t in itertools.product(range(q), repeat=k):
        yield t[::-1]


@total_ordering
@dataclass(frozen=True, eq=False)
class KSubspace:
    """A subspace of K^k held by its canonical reduced echelon basis."""

    K: Field = dc_field(repr=False)
    ambient_dim: int
    basis: Matrix

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KSubspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __lt__(self, other: KSubspace) -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        return (self.ambient_dim, len(self.basis), self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def q(self) -> int:
        return self.K.size

    @property
    def size(self) -> int:
        return self.K.size ** self.dim

    def __str__(self) -> str:
        return format_subspace(self)

    def contains_vector(self, v: Sequence[int]) -> bool:
        return rank(self.basis + (tuple(v),), self.K, self.ambient_dim) == self.dim

    def __add__(self, other: KSubspace) -> KSubspace:
        return lattice(self, other, "sum")

    def __and__(self, other: KSubspace) -> KSubspace:
        return lattice(self, other, "intersect")

    def points(self) -> list[Vector]:
        return enumerate_points(self)


def zero_space(K: Field, k: int) -> KSubspace:
    return KSubspace(K, k, ())


def full_space(K: Field, k: int) -> KSubspace:
    return KSubspace(K, k, identity(k))


def span(vectors: Iterable[Sequence[int]], K: Field, k: int) -> KSubspace:
    rows = [tuple(v) for v in vectors]
    for v in rows:
        if len(v) != k:
            raise DimensionMismatchError(f"vector of length {len(v)} in K^{k}")
    if not rows:
        return zero_space(K, k)
    R, rk, _ = rref(rows, K, k)
    return KSubspace(K, k, R[:rk])


def lattice(A: KSubspace, B: KSubspace, op: str):
    """``sum`` / ``intersect`` return subspaces; ``equal`` / ``contains`` (B in A) return bools."""
    if A.ambient_dim != B.ambient_dim:
        raise DimensionMismatchError("subspaces live in different ambient spaces")
    K, k = A.K, A.ambient_dim
    if op == "sum":
        return span(A.basis + B.basis, K, k)
    if op == "equal":
        return A.basis == B.basis
    if op == "contains":
        return span(A.basis + B.basis, K, k).dim == A.dim
    if op == "intersect":
        if not A.basis or not B.basis:
            return zero_space(K, k)
        # x A + y B = 0  <=>  (x, y) in the left kernel of the stacked bases
        stacked = A.basis + B.basis
        coeffs = kernel(transpose(stacked), K, len(stacked))
        vecs = []
        for c in coeffs:
            v = [0] * k
            for ci, row in zip(c[:A.dim], A.basis):
                if ci:
                    v = [K.add(a, K.mul(ci, b)) for a, b in zip(v, row)]
            vecs.append(v)
        return span(vecs, K, k)
    raise ValueError(f"unknown lattice operation {op!r}")


def enumerate_points(A: KSubspace) -> list[Vector]:
    """All ``q^dim`` vectors of ``A``, ordered by their coordinates in the canonical basis."""
    if A.size > MAX_POINTS:
        raise TooLargeError(f"subspace has {A.size} points")
    K, k = A.K, A.ambient_dim
    pts: list[Vector] = [(0,) * k]
    for row in A.basis:
        multiples = [vec_scale(c, row, K) for c in range(1, K.size)]
        pts = pts + [vec_add(p, m, K) for m in multiples for p in pts]
    return pts


def point_mask(A: KSubspace) -> int:
    """Bitset over point indices of K^k marking the points of ``A``."""
    q = A.q
    mask = 0
    for v in enumerate_points(A):
        mask |= 1 << point_index(v, q)
    return mask


def gaussian_binomial(k: int, r: int, q: int) -> int:
    if r < 0 or r > k:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (k - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def gl_order(n: int, q: int) -> int:
    out = 1
    for i in range(n):
        out *= q ** n - q ** i
    return out


def enumerate_subspaces(K: Field, k: int, dim: Optional[int] = None) -> list[KSubspace]:
    """Every subspace of K^k (or only those of dimension ``dim``), each once.

    Built directly from reduced echelon profiles: a set of pivot columns and
    free entries to the right of each pivot that are not themselves pivots.
    Sorted by (dim, basis).
    """
    q = K.size
    dims = range(k + 1) if dim is None else [dim]
    total = sum(gaussian_binomial(k, r, q) for r in dims)
    if total > MAX_SUBSPACES:
        raise TooLargeError(f"{total} subspaces exceed the enumeration cap")
    out = []
    for r in dims:
        for pivots in itertools.combinations(range(k), r):
            pset = set(pivots)
            slots = [(i, c) for i, pc in enumerate(pivots)
                     for c in range(pc + 1, k) if c not in pset]
            for values in itertools.product(range(q), repeat=len(slots)):
                rows = [[0] * k for _ in range(r)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, c), x in zip(slots, values):
                    rows[i][c] = x
                out.append(KSubspace(K, k, tuple(tuple(row) for row in rows)))
    out.sort()
    return out


def subspace_coordinates(W: KSubspace, V: KSubspace) -> KSubspace:
    """``W`` (a subspace of ``V``) expressed in the canonical basis of ``V``."""
    coords = []
    for w in W.basis:
        sol = solve(transpose(V.basis), tuple((x,) for x in w), V.K, V.dim)
        if sol is None:
            raise DimensionMismatchError("W is not contained in V")
        coords.append(tuple(r[0] for r in sol[0]))
    return span(coords, V.K, V.dim)


def embed_subspace(W: KSubspace, V: KSubspace) -> KSubspace:
    """Inverse of :func:`subspace_coordinates`: map a subspace of K^dim(V) into V."""
    K = V.K
    vecs = []
    for c in W.basis:
        v = (0,) * V.ambient_dim
        for ci, row in zip(c, V.basis):
            if ci:
                v = vec_add(v, vec_scale(ci, row, K), K)
        vecs.append(v)
    return span(vecs, K, V.ambient_dim)


def subspaces_of(V: KSubspace, dim: Optional[int] = None) -> list[KSubspace]:
    """Every subspace of ``V`` (optionally of one dimension), sorted."""
    return sorted(embed_subspace(W, V) for W in enumerate_subspaces(V.K, V.dim, dim))


def hyperplanes_containing(S: KSubspace, V: KSubspace) -> list[KSubspace]:
    """The ``q + 1`` subspaces strictly between ``S`` and ``V`` when codim is 2."""
    if V.dim - S.dim != 2:
        raise BadCodimensionError(f"dim V - dim S = {V.dim - S.dim}, expected 2")
    if not lattice(V, S, "contains"):
        raise BadCodimensionError("S is not contained in V")
    K, k = V.K, V.ambient_dim
    complement = []
    current = S
    for row in V.basis:
        bigger = span(current.basis + (row,), K, k)
        if bigger.dim > current.dim:
            complement.append(row)
            current = bigger
    a, b = complement
    out = [span(S.basis + (vec_add(a, vec_scale(t, b, K), K),), K, k) for t in range(K.size)]
    out.append(span(S.basis + (b,), K, k))
    return sorted(out)


def enumerate_invertible(K: Field, n: int) -> list[Matrix]:
    """GL_n(K), in row-major lexicographic order."""
    q = K.size
    if gl_order(n, q) > MAX_GL:
        raise TooLargeError(f"|GL_{n}({q})| = {gl_order(n, q)} exceeds the cap")
    vectors = list(itertools.product(range(q), repeat=n))
    out: list[Matrix] = []

    def extend(rows: list[Vector], spanned: set[Vector]) -> None:
        if len(rows) == n:
            out.append(tuple(rows))
            return
        for v in vectors:
            if v in spanned:
                continue
            grown = {vec_add(s, vec_scale(c, v, K), K) for s in spanned for c in range(q)}
            extend(rows + [v], grown)

    extend([], {(0,) * n})
    return out


def format_subspace(A: KSubspace) -> str:
    return "[" + ",".join("(" + ",".join(map(str, r)) + ")" for r in A.basis) + "]"


def parse_subspace(text: str, K: Field, k: int) -> KSubspace:
    rows = re.findall(r"\(([^()]*)\)", text)
    vecs = [tuple(int(x) for x in r.split(",") if x.strip()) for r in rows]
    return span(vecs, K, k)
