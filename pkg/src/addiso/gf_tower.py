"""Exact arithmetic for a field pair K = GF(p^d) inside L = K[x]/(h).

Elements of every field are plain ``int`` codes.  An element of an extension
of degree ``e`` over a base field ``B`` with coefficient sequence
``(c_0, ..., c_{e-1})`` (low to high, each ``c_j`` a code of ``B``) has code
``sum(c_j * |B|**j)``.  Enumeration order is therefore just ``range(size)``,
and the coordinates of an element of L in the K-basis ``1, a, ..., a^(n-1)``
are its base-``q`` digits.

Because the codes nest, the fully flattened base-``p`` digits of an element of
L are its coordinates over F_p, so addition anywhere in the tower is digitwise
addition mod ``p``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from .errors import (
    DegreeMismatchError,
    DivisionByZeroError,
    NonPrimeError,
    ParseError,
    ReducibleError,
    TooLargeError,
)

MAX_PRIME = 251
MAX_ENUMERATION = 1 << 20
_TABLE_LIMIT = 256       # full add/mul tables at or below this size
_LOG_LIMIT = 1 << 16     # exp/log tables at or below this size


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class PrimeField:
    """The prime field F_p with elements ``0 .. p-1``."""

    def __init__(self, p: int) -> None:
        if not is_prime(p):
            raise NonPrimeError(f"{p} is not prime")
        if p > MAX_PRIME:
            raise TooLargeError(f"characteristic {p} exceeds supported maximum {MAX_PRIME}")
        self.p = p
        self.size = p
        self.characteristic = p
        self.degree = 1
        self._inv = [0] + [pow(a, p - 2, p) for a in range(1, p)]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("F", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    @property
    def prime_field(self) -> PrimeField:
        return self

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise DivisionByZeroError("inverse of zero")
        return self._inv[a % self.p]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def elements(self) -> range:
        return range(self.p)


Field = Union[PrimeField, "ExtensionField"]


# --- polynomials over a field: coefficient lists, low to high ------------

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_rem(f: Sequence[int], g: Sequence[int], F: Field) -> list[int]:
    """Remainder of ``f`` modulo the monic polynomial ``g`` over ``F``."""
    r = _trim(list(f))
    dg = len(g) - 1
    while len(r) - 1 >= dg and r:
        lead = r[-1]
        shift = len(r) - 1 - dg
        if lead:
            for j in range(dg + 1):
                r[shift + j] = F.sub(r[shift + j], F.mul(lead, g[j]))
        _trim(r)
    return r


def poly_mul(f: Sequence[int], g: Sequence[int], F: Field) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return out


def _digits(code: int, base: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        code, r = divmod(code, base)
        out.append(r)
    return out


def monic_polys(degree: int, F: Field) -> Iterator[list[int]]:
    """All monic polynomials of ``degree`` over ``F``, lexicographically least first."""
    for code in range(F.size ** degree):
        yield _digits(code, F.size, degree) + [1]


def is_irreducible(f: Sequence[int], base: Field) -> bool:
    """Trial division by every monic polynomial of degree 1 .. deg(f)//2."""
    deg = len(f) - 1
    if deg < 1 or f[-1] != 1:
        raise DegreeMismatchError("expected a monic polynomial of degree >= 1")
    for d in range(1, deg // 2 + 1):
        for g in monic_polys(d, base):
            if not poly_rem(f, g, base):
                return False
    return True


def default_modulus(degree: int, base: Field) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible (compared high to low)."""
    for f in monic_polys(degree, base):
        if is_irreducible(f, base):
            return tuple(f)
    raise AssertionError("unreachable: irreducibles exist in every degree")


class ExtensionField:
    """``base[x]/(modulus)`` for a monic irreducible ``modulus`` of ``degree``."""

    def __init__(self, base: Field, degree: int, modulus: Optional[Sequence[int]] = None) -> None:
        if degree < 1:
            raise DegreeMismatchError(f"extension degree must be >= 1, got {degree}")
        if modulus is None:
            modulus = default_modulus(degree, base)
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != degree + 1 or modulus[-1] != 1:
            raise DegreeMismatchError(
                f"modulus {list(modulus)} is not monic of degree {degree}")
        if any(not 0 <= c < base.size for c in modulus):
            raise DegreeMismatchError(f"modulus coefficients must lie in 0..{base.size - 1}")
        if not is_irreducible(modulus, base):
            raise ReducibleError(f"modulus {list(modulus)} is reducible over {base!r}")
        self.base = base
        self.degree = degree
        self.modulus = modulus
        self.size = base.size ** degree
        self.characteristic = base.characteristic
        self._exp: Optional[list[int]] = None
        self._log: Optional[list[int]] = None
        self._add_t: Optional[list[list[int]]] = None
        self._mul_t: Optional[list[list[int]]] = None
        if self.size <= _TABLE_LIMIT:
            self._build_tables()

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ExtensionField) and other.degree == self.degree
                and other.modulus == self.modulus and other.base == self.base)

    def __hash__(self) -> int:
        return hash(("E", self.base, self.degree, self.modulus))

    def __repr__(self) -> str:
        return f"ExtensionField({self.base!r}, {self.degree}, {list(self.modulus)})"

    @property
    def prime_field(self) -> PrimeField:
        return self.base.prime_field

    @property
    def generator(self) -> int:
        """Residue of the extension variable."""
        if self.degree == 1:
            return self.base.neg(self.modulus[0])
        return self.base.size

    # coordinates
    def to_coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(_digits(a, self.base.size, self.degree))

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.degree:
            raise DegreeMismatchError(f"expected {self.degree} coefficients, got {len(coeffs)}")
        code = 0
        for c in reversed(coeffs):
            if not 0 <= c < self.base.size:
                raise ValueError(f"coefficient {c} outside base field")
            code = code * self.base.size + c
        return code

    def elements(self) -> range:
        if self.size > MAX_ENUMERATION:
            raise TooLargeError(f"field of size {self.size} is too large to enumerate")
        return range(self.size)

    # arithmetic
    def _build_tables(self) -> None:
        n = self.size
        self._add_t = [[self._add_raw(a, b) for b in range(n)] for a in range(n)]
        self._ensure_logs()
        self._mul_t = [[self._mul_log(a, b) for b in range(n)] for a in range(n)]

    def _add_raw(self, a: int, b: int) -> int:
        p = self.characteristic
        out, place = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * place
            place *= p
        return out

    def _mul_raw(self, a: int, b: int) -> int:
        B = self.base
        prod = poly_mul(self.to_coeffs(a), self.to_coeffs(b), B)
        r = poly_rem(prod, self.modulus, B)
        return self.from_coeffs(r + [0] * (self.degree - len(r)))

    def _ensure_logs(self) -> bool:
        if self._exp is not None:
            return True
        if self.size > _LOG_LIMIT:
            return False
        order = self.size - 1
        for g in range(1, self.size):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._mul_raw(x, g)
            if len(exp) == order:
                log = [0] * self.size
                for i, v in enumerate(exp):
                    log[v] = i
                self._exp, self._log = exp, log
                return True
        raise AssertionError("unreachable: multiplicative group is cyclic")

    def _mul_log(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        assert self._exp is not None and self._log is not None
        return self._exp[(self._log[a] + self._log[b]) % (self.size - 1)]

    def add(self, a: int, b: int) -> int:
        if self._add_t is not None:
            return self._add_t[a][b]
        return self._add_raw(a, b)

    def neg(self, a: int) -> int:
        p = self.characteristic
        if p == 2:
            return a
        out, place = 0, 1
        while a:
            a, x = divmod(a, p)
            out += ((-x) % p) * place
            place *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_t is not None:
            return self._mul_t[a][b]
        if self._ensure_logs():
            return self._mul_log(a, b)
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZeroError("inverse of zero")
        if self._ensure_logs():
            assert self._exp is not None and self._log is not None
            return self._exp[(-self._log[a]) % (self.size - 1)]
        return self.pow(a, self.size - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def arith(self, op: str, a: int, b: Optional[int] = None) -> int:
        """Dispatch ``add``, ``sub``, ``mul``, ``inv`` or ``pow`` by name."""
        if op == "inv":
            return self.inv(a)
        if b is None:
            raise ValueError(f"operation {op!r} needs two operands")
        if op in ("add", "sub", "mul", "pow"):
            return getattr(self, op)(a, b)
        raise ValueError(f"unknown operation {op!r}")


@dataclass(frozen=True)
class FieldPair:
    """A subfield K = GF(p^d) and L, an extension of degree n over K."""

    K: ExtensionField
    L: ExtensionField

    @property
    def p(self) -> int:
        return self.K.characteristic

    @property
    def q(self) -> int:
        return self.K.size

    @property
    def n(self) -> int:
        return self.L.degree

    @property
    def d(self) -> int:
        return self.K.degree

    def coords(self, a: int) -> tuple[int, ...]:
        """Coordinates of ``a`` in the K-basis ``1, a, ..., a^(n-1)`` of L."""
        return self.L.to_coeffs(a)

    def uncoords(self, v: Sequence[int]) -> int:
        return self.L.from_coeffs(v)

    def in_K(self, a: int) -> bool:
        return a < self.q

    def describe(self) -> str:
        return format_field(self)


def make_field_pair(p: int, d: int = 1, n: int = 1,
                    modulus_g: Optional[Sequence[int]] = None,
                    modulus_h: Optional[Sequence[int]] = None) -> FieldPair:
    F = PrimeField(p)
    K = ExtensionField(F, d, modulus_g)
    L = ExtensionField(K, n, modulus_h)
    return FieldPair(K, L)


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**d``; raises ``NonPrimeError`` otherwise."""
    if q >= 2:
        p = 2
        while q % p:
            p += 1
        d, r = 0, q
        while r % p == 0:
            r //= p
            d += 1
        if r == 1:
            return p, d
    raise NonPrimeError(f"{q} is not a prime power")


def field_of_order(q: int) -> ExtensionField:
    """K = GF(q) with its default modulus."""
    p, d = prime_power(q)
    return ExtensionField(PrimeField(p), d)


_DESCRIPTOR = re.compile(
    r"^GF\((?P<p>\d+)(?:\^(?P<d>\d+))?\)(?:\[(?P<g>[\d,\s]*)\])?"
    r"(?:\^(?P<n>\d+)(?:\[(?P<h>[\d,\s]*)\])?)?$")


def parse_field(text: str) -> FieldPair:
    """Parse ``GF(p^d)[g]^n[h]``; omitted brackets select default moduli."""
    m = _DESCRIPTOR.match(text.strip())
    if not m:
        raise ParseError(f"bad field descriptor {text!r}; expected GF(p^d)[g]^n[h]")

    def coeffs(s: Optional[str]) -> Optional[list[int]]:
        if s is None:
            return None
        return [int(c) for c in s.split(",") if c.strip()]

    return make_field_pair(int(m["p"]), int(m["d"] or 1), int(m["n"] or 1),
                           coeffs(m["g"]), coeffs(m["h"]))


def format_field(fp: FieldPair) -> str:
    K, L = fp.K, fp.L
    out = f"GF({fp.p})" if K.degree == 1 else f"GF({fp.p}^{K.degree})"
    if K.modulus != default_modulus(K.degree, K.base):
        out += "[" + ",".join(map(str, K.modulus)) + "]"
    out += f"^{L.degree}"
    if L.modulus != default_modulus(L.degree, K):
        out += "[" + ",".join(map(str, L.modulus)) + "]"
    return out
