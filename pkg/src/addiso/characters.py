"""Exact evaluation of additive characters and the character-sum weight formula.

Character values live in Q(zeta_p) and are held as :class:`CycloRat`, a
rational coefficient vector on ``1, zeta, ..., zeta^(p-1)`` normalised so the
last coefficient is zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .codes import GenMatrix, encode, space_tuple, weight
from .gf_tower import Field, FieldPair
from .kspace import Matrix, all_vectors, mat_vec, transpose

MAX_P = 13

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class CycloRat:
    p: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not 2 <= self.p <= MAX_P:
            raise ValueError(f"cyclotomic arithmetic supports p <= {MAX_P}, got {self.p}")
        if len(self.coeffs) != self.p:
            raise ValueError("need exactly p coefficients")
        if self.coeffs[-1] != 0:
            raise ValueError("not in canonical form; build values with CycloRat.make")

    @classmethod
    def make(cls, p: int, coeffs: Sequence[Rational]) -> CycloRat:
        """Canonicalise using ``1 + zeta + ... + zeta^(p-1) = 0``."""
        c = [Fraction(x) for x in coeffs]
        c += [Fraction(0)] * (p - len(c))
        top = c[-1]
        if top:
            c = [x - top for x in c]
        return cls(p, tuple(c))

    @classmethod
    def rational(cls, p: int, value: Rational) -> CycloRat:
        return cls.make(p, [value])

    @classmethod
    def zeta(cls, p: int, j: int = 1) -> CycloRat:
        c = [0] * p
        c[j % p] = 1
        return cls.make(p, c)

    def __add__(self, other: CycloRat) -> CycloRat:
        return CycloRat.make(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: CycloRat) -> CycloRat:
        return CycloRat.make(self.p, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> CycloRat:
        return CycloRat.make(self.p, [-a for a in self.coeffs])

    def __mul__(self, other: Union[CycloRat, Rational]) -> CycloRat:
        if not isinstance(other, CycloRat):
            return CycloRat.make(self.p, [a * other for a in self.coeffs])
        p = self.p
        out = [Fraction(0)] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % p] += a * b
        return CycloRat.make(p, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CycloRat:
        result = CycloRat.rational(self.p, 1)
        for _ in range(e):
            result = result * self
        return result

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])


def absolute_trace(a: int, K: Field) -> int:
    """``a + a^p + ... + a^(p^(d-1))``, returned as an element of F_p."""
    p = K.characteristic
    s, t = a, a
    for _ in range(K.degree - 1):
        t = K.pow(t, p)
        s = K.add(s, t)
    if s >= p:
        raise AssertionError(f"trace {s} is not in the prime field")
    return s


def dot(v: Sequence[int], u: Sequence[int], K: Field) -> int:
    s = 0
    for a, b in zip(v, u):
        if a and b:
            s = K.add(s, K.mul(a, b))
    return s


def char_exponent(v: Sequence[int], u: Sequence[int], K: Field, scale: int = 1) -> int:
    """Exponent ``j`` with ``chi_v(u) = zeta_p^j`` under ``pi(x) = zeta^tr(scale * x)``."""
    if len(v) != len(u):
        raise ValueError("character index and argument differ in length")
    return absolute_trace(K.mul(scale, dot(v, u, K)), K)


def char_value(v: Sequence[int], u: Sequence[int], K: Field, scale: int = 1) -> CycloRat:
    return CycloRat.zeta(K.characteristic, char_exponent(v, u, K, scale))


def coordinate_weight_sum(a: int, fp: FieldPair, scale: int = 1) -> CycloRat:
    """``(1/|L|) sum_b chi_b(a)`` with the coordinate bilinear form on L over K."""
    p, K = fp.p, fp.K
    ca = fp.coords(a)
    counts = [0] * p
    for b in fp.L.elements():
        counts[char_exponent(fp.coords(b), ca, K, scale)] += 1
    return CycloRat.make(p, counts) * Fraction(1, fp.L.size)


def coordinate_weight_identity(a: int, fp: FieldPair, scale: int = 1) -> bool:
    expected = CycloRat.rational(fp.p, 1 - int(a != 0))
    return coordinate_weight_sum(a, fp, scale) == expected


def character_sum(table_values: Sequence[int], k: int, u: Sequence[int], K: Field,
                  scale: int = 1) -> CycloRat:
    """``sum_v table[v] chi_v(u)`` for a table indexed like the points of K^k."""
    p = K.characteristic
    counts = [0] * p
    for v, t in zip(all_vectors(k, K.size), table_values):
        if t:
            counts[char_exponent(v, u, K, scale)] += t
    return CycloRat.make(p, counts)


def weight_representation(A: GenMatrix, u: Sequence[int], scale: int = 1) -> CycloRat:
    """``m - sum_v (sum_i 1_{V_i}(v) / |V_i|) chi_v(u)`` evaluated exactly."""
    from .solutions import indicator_table

    fp = A.fields
    table = indicator_table(space_tuple(A), k=A.k, K=fp.K)
    s = character_sum(table.values, A.k, u, fp.K, scale) * Fraction(1, fp.q ** A.k)
    return CycloRat.rational(fp.p, A.m) - s


def weight_representation_check(A: GenMatrix, u: Sequence[int], scale: int = 1) -> bool:
    return weight_representation(A, u, scale) == CycloRat.rational(A.fields.p, weight(encode(A, u)))


def diagram_commutes(M: Matrix, fp: FieldPair, scale: int = 1) -> bool:
    """``chi_b(sigma(u)) = chi_{sigma*(b)}(u)`` for ``sigma(u) = M^T u``, ``sigma*(b) = M b``."""
    K = fp.K
    k = len(M)
    Mt = transpose(M, fp.n)
    for b in all_vectors(fp.n, fp.q):
        sb = mat_vec(M, b, K)
        for u in all_vectors(k, fp.q):
            if char_exponent(b, mat_vec(Mt, u, K), K, scale) != char_exponent(sb, u, K, scale):
                return False
    return True
