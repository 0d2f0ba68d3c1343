"""Arithmetic in GF(p^r) through dense discrete-log tables.

Elements are integer labels in [0, p^r): the base-p encoding of the
polynomial-basis coordinate vector, least significant coefficient first.
Label 0 is the zero element and labels 1..p-1 are the prime-field
constants, so vertex labels of the Cayley graphs downstream are stable
under any choice of modulus.

Construction cost is one pass of polynomial multiplication to fill the
exp table; after that multiplication, inversion, powers and discrete
logs are table lookups and only addition works on coordinates.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Optional, Sequence

from .errors import (
    LogOfZero,
    NonPrimeCharacteristic,
    NotProperSubfield,
    OddDegreeField,
    OverflowingOrder,
    ReducibleModulus,
)

ORDER_CAP = 1 << 20

# coordinate caching is worth it only for small tables; above this the
# per-call divmod loop wins on memory
_COORD_CACHE_CAP = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


# ----- polynomial helpers over GF(p), coefficients ascending -----------

def _poly_trim(a: Sequence[int]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> tuple[int, ...]:
    # m is monic
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _poly_trim(a[:dm])


def _poly_powmod(a: Sequence[int], e: int, m: Sequence[int], p: int) -> tuple[int, ...]:
    result: tuple[int, ...] = (1,)
    base = _poly_mod(a, m, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), m, p)
        base = _poly_mod(_poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def _poly_is_irreducible(m: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(m)/2."""
    r = len(m) - 1
    if r <= 0:
        return False
    if r == 1:
        return True
    for d in range(1, r // 2 + 1):
        for lower in itertools.product(range(p), repeat=d):
            div = lower + (1,)
            if not _poly_mod(m, div, p):
                return False
    return True


def _element_has_full_order(poly, modulus, p, n, n_factors) -> bool:
    if _poly_powmod(poly, n, modulus, p) != (1,):
        return False
    return all(_poly_powmod(poly, n // f, modulus, p) != (1,) for f in n_factors)


def _default_modulus(p: int, r: int) -> tuple[int, ...]:
    """Least monic irreducible of degree r with x primitive.

    Candidates are ordered lexicographically by the ascending coefficient
    tuple (c0, ..., c_{r-1}); the leading coefficient is pinned to 1.
    """
    n = p**r - 1
    n_factors = _prime_factors(n)
    for lower in itertools.product(range(p), repeat=r):
        if lower[0] == 0:
            continue  # x divides the candidate
        mod = lower + (1,)
        if not _poly_is_irreducible(mod, p):
            continue
        if _element_has_full_order((0, 1), mod, p, n, n_factors):
            return mod
    raise ReducibleModulus(f"no primitive polynomial found for p={p}, r={r}")


class FieldElement:
    """A field element bound to its context; arithmetic via operators."""

    __slots__ = ("ctx", "label")

    def __init__(self, ctx: "FieldCtx", label: int):
        self.ctx = ctx
        self.label = label

    def _peer(self, other) -> int:
        if isinstance(other, FieldElement):
            assert other.ctx is self.ctx, "elements from different fields"
            return other.label
        return int(other) % self.ctx.p

    def __add__(self, other):
        return FieldElement(self.ctx, self.ctx.add(self.label, self._peer(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.ctx, self.ctx.sub(self.label, self._peer(other)))

    def __rsub__(self, other):
        return FieldElement(self.ctx, self.ctx.sub(self._peer(other), self.label))

    def __mul__(self, other):
        return FieldElement(self.ctx, self.ctx.mul(self.label, self._peer(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.ctx, self.ctx.div(self.label, self._peer(other)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.label))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.label, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx is other.ctx and self.label == other.label
        if isinstance(other, int):
            return self.label == other % self.ctx.p if 0 <= other < self.ctx.p else NotImplemented
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ctx), self.label))

    @property
    def coords(self) -> tuple[int, ...]:
        return self.ctx.coords(self.label)

    def __repr__(self):
        return f"GF({self.ctx.order})[{self.label}]"


class FieldCtx:
    """GF(p^r) with exp/log tables keyed by integer labels."""

    def __init__(self, p: int, r: int, modulus: Optional[Sequence[int]] = None):
        if not _is_prime(p) or p == 2:
            raise NonPrimeCharacteristic(f"characteristic must be an odd prime, got {p}")
        if r < 1:
            raise ValueError(f"extension degree must be >= 1, got {r}")
        order = p**r
        if order > ORDER_CAP:
            raise OverflowingOrder(f"p^r = {order} exceeds {ORDER_CAP}")

        if modulus is None:
            mod = _default_modulus(p, r)
        else:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != r + 1 or mod[-1] != 1:
                raise ReducibleModulus(
                    f"modulus must be monic of degree {r}, got {list(modulus)}")
            if not _poly_is_irreducible(mod, p):
                raise ReducibleModulus(f"modulus {list(mod)} is reducible over GF({p})")

        self.p = p
        self.r = r
        self.order = order
        self.modulus = mod

        n = order - 1
        n_factors = _prime_factors(n)
        gen_poly = self._find_generator_poly(n, n_factors)
        self.generator = self._label_of_poly(gen_poly)

        self.exp, self.log = self._build_tables(gen_poly)
        assert self.exp[0] == 1
        self._coords_cache: Optional[list[tuple[int, ...]]] = None
        self._subfield: Optional[tuple[int, ...]] = None

    # ----- construction ------------------------------------------------

    def _find_generator_poly(self, n, n_factors):
        # x first; otherwise the least label with full multiplicative order
        x = _poly_mod((0, 1), self.modulus, self.p)
        if _element_has_full_order(x, self.modulus, self.p, n, n_factors):
            return x
        for label in range(2, self.order):
            cand = self._poly_of_label(label)
            if _element_has_full_order(cand, self.modulus, self.p, n, n_factors):
                return cand
        raise ReducibleModulus("no generator found; modulus cannot be irreducible")

    def _poly_of_label(self, label: int) -> tuple[int, ...]:
        coeffs = []
        while label:
            label, c = divmod(label, self.p)
            coeffs.append(c)
        return tuple(coeffs)

    def _label_of_poly(self, poly: Sequence[int]) -> int:
        label = 0
        for c in reversed(poly):
            label = label * self.p + c
        return label

    def _build_tables(self, gen_poly):
        n = self.order - 1
        exp = [0] * n
        log: list[Optional[int]] = [None] * self.order
        cur: tuple[int, ...] = (1,)
        for k in range(n):
            lab = self._label_of_poly(cur)
            assert log[lab] is None, "generator order below field order"
            exp[k] = lab
            log[lab] = k
            cur = _poly_mod(_poly_mul(cur, gen_poly, self.p), self.modulus, self.p)
        assert cur == (1,), "generator does not close the cycle"
        return exp, log

    # ----- coordinates ---------------------------------------------------

    def coords(self, a: int) -> tuple[int, ...]:
        """Coordinate vector of a label, length r, ascending powers."""
        out = []
        for _ in range(self.r):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def label(self, coords: Iterable[int]) -> int:
        lab = 0
        for c in reversed([c % self.p for c in coords]):
            lab = lab * self.p + c
        return lab

    def element(self, label: int) -> FieldElement:
        assert 0 <= label < self.order
        return FieldElement(self, label)

    def _coord_table(self):
        if self._coords_cache is None and self.order <= _COORD_CACHE_CAP:
            self._coords_cache = [self.coords(a) for a in range(self.order)]
        return self._coords_cache

    # ----- arithmetic on labels -----------------------------------------

    def add(self, a: int, b: int) -> int:
        table = self._coord_table()
        if table is not None:
            ca, cb = table[a], table[b]
        else:
            ca, cb = self.coords(a), self.coords(b)
        p = self.p
        lab = 0
        for i in range(self.r - 1, -1, -1):
            lab = lab * p + (ca[i] + cb[i]) % p
        return lab

    def neg(self, a: int) -> int:
        table = self._coord_table()
        ca = table[a] if table is not None else self.coords(a)
        p = self.p
        lab = 0
        for i in range(self.r - 1, -1, -1):
            lab = lab * p + (-ca[i]) % p
        return lab

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        n = self.order - 1
        return self.exp[(self.log[a] + self.log[b]) % n]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        n = self.order - 1
        return self.exp[(n - self.log[a]) % n]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self.exp[(self.log[a] * e) % (self.order - 1)]

    def dlog(self, a: int) -> int:
        """Discrete log base the generator; LogOfZero on the zero element."""
        if a == 0:
            raise LogOfZero("dlog(0) is undefined")
        return self.log[a]

    def gen_pow(self, k: int) -> int:
        return self.exp[k % (self.order - 1)]

    # ----- quadratic-extension structure ---------------------------------

    @property
    def subfield_order(self) -> int:
        """q with order = q^2; requires even total degree."""
        if self.r % 2:
            raise OddDegreeField(f"degree {self.r} field has no square root order")
        return self.p ** (self.r // 2)

    def subfield_elements(self) -> tuple[int, ...]:
        """Sorted labels of the index-2 subfield F_q inside GF(q^2)."""
        q = self.subfield_order
        if self._subfield is None:
            elems = {0}
            step = q + 1  # (q^2 - 1) / (q - 1)
            for k in range(q - 1):
                elems.add(self.exp[k * step])
            assert len(elems) == q
            for x in elems:
                assert self.pow(x, q) == x, "subfield element fails Frobenius fix"
            self._subfield = tuple(sorted(elems))
        return self._subfield

    def subfield_of_order(self, m: int) -> tuple[int, ...]:
        """Sorted labels of the subfield with m elements, m = p^s, s | r."""
        if m < 2 or (self.order - 1) % (m - 1) != 0:
            raise NotProperSubfield(f"{m} does not divide into GF({self.order})")
        s = round(math.log(m, self.p))
        if self.p**s != m or self.r % s != 0:
            raise NotProperSubfield(f"{m} is not p^s with s | {self.r}")
        step = (self.order - 1) // (m - 1)
        elems = {0} | {self.exp[k * step] for k in range(m - 1)}
        assert len(elems) == m
        return tuple(sorted(elems))

    def coset_index(self, a: int) -> int:
        """Index in [0, q] of the F_q^* multiplicative coset containing a."""
        q = self.subfield_order
        return self.dlog(a) % (q + 1)

    def coset_elements(self, index: int) -> tuple[int, ...]:
        """Sorted labels of the coset g^index * F_q^*, size q - 1."""
        q = self.subfield_order
        assert 0 <= index <= q
        return tuple(sorted(self.exp[(index + k * (q + 1)) % (self.order - 1)]
                            for k in range(q - 1)))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, r={self.r}, modulus={list(self.modulus)})"


def create(p: int, r: int, modulus: Optional[Sequence[int]] = None) -> FieldCtx:
    """Build GF(p^r).

    With no modulus, picks the lexicographically least monic irreducible
    (ascending coefficients) for which x is primitive, so the generator is
    the class of x and table contents are deterministic.  A user modulus
    is reduced mod p, verified irreducible, and the generator falls back
    to the least primitive label when x is not primitive.
    """
    return FieldCtx(p, r, modulus)
