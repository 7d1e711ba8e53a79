"""The tower F_p -> F_q = F_p[y]/(m(y)) -> F_q[x]/Phi_r(x).

Elements of F_q are plain ints in ``[0, q)``: the base-p digits of the int are
the coefficients of 1, y, ..., y**(k-1).  Elements of the cyclotomic quotient
are :class:`FieldElem` instances holding ``r - 1`` such coefficients, always
reduced modulo Phi_r = 1 + x + ... + x**(r-1).

Canonical byte encoding
-----------------------
``canonical_encoding`` writes the ``(r - 1) * k`` base-p digits in order
(coefficient of x**0 first; inside one coefficient, the y**0 digit first).
Each digit takes ``w = max(1, ceil(bit_length(p - 1) / 8))`` bytes, unsigned
little-endian.  For p < 257 this is one byte per digit, so an element of
F_2[x]/Phi_5 encodes to exactly 4 bytes.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from ..errors import (
    CtxMismatch,
    DegreeTooLarge,
    DivisionByZero,
    IrreducibilityViolation,
    NotPrime,
)
from ..numtheory import is_prime, mult_order_mod
from . import kernel

MAX_CHARACTERISTIC = (1 << 31) - 1
MAX_DEGREE = 64
MAX_FIELD_ORDER = 1 << 64


# -- dense polynomials over F_p, coefficient lists low degree first ---------

def _trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f, g, p):
    f = _trim([c % p for c in f])
    inv_lead = pow(g[-1], -1, p)
    dg = len(g) - 1
    while len(f) > dg:
        c = f[-1] * inv_lead % p
        shift = len(f) - 1 - dg
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gc) % p
        _trim(f)
    return f


def _pmulmod(f, g, m, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _pmod(out, m, p)


def _ppowmod(f, e, m, p):
    result = [1]
    base = _pmod(list(f), m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(f, g, p):
    f, g = _trim([c % p for c in f]), _trim([c % p for c in g])
    while g:
        f, g = g, _pmod(f, g, p)
    return f


def is_irreducible(modulus, p: int) -> bool:
    """Ben-Or test: ``modulus`` (low-first, monic) is irreducible over F_p."""
    k = len(modulus) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    f = list(modulus)
    h = [0, 1]
    for _ in range(k // 2):
        h = _ppowmod(h, p, f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] -= 1
        if len(_pgcd(f, diff, p)) > 1:
            return False
    return True


# -- contexts ----------------------------------------------------------------

@dataclass(frozen=True)
class BaseFieldCtx:
    """F_q = F_p[y]/(modulus) with scalar arithmetic on int-encoded elements."""

    p: int
    k: int
    modulus: tuple[int, ...]
    q: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p ** self.k)
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not is_irreducible(self.modulus, self.p):
            raise ValueError(f"modulus {self.modulus} is reducible over F_{self.p}")

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    def from_digits(self, ds) -> int:
        a = 0
        for d in reversed(ds):
            a = a * self.p + d % self.p
        return a

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        return self.from_digits([-x for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        prod = _pmulmod(self.digits(a), self.digits(b), list(self.modulus), self.p)
        return self.from_digits(prod)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero in F_q")
        if self.k == 1:
            return pow(a, -1, self.p)
        return self.from_digits(_ppowmod(self.digits(a), self.q - 2, list(self.modulus), self.p))

    @property
    def mod_low(self) -> tuple[int, ...]:
        return self.modulus[:-1]


def make_base_field(p: int, k: int) -> BaseFieldCtx:
    """Build F_{p^k} with the lexicographically smallest monic irreducible modulus.

    Candidates ``y**k + c_{k-1} y**(k-1) + ... + c_0`` are ordered by the
    tuple ``(c_0, c_1, ..., c_{k-1})``; for k = 1 this yields the modulus y.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be positive")
    if p > MAX_CHARACTERISTIC or k > MAX_DEGREE or p ** k >= MAX_FIELD_ORDER:
        raise DegreeTooLarge(f"F_{p}^{k} is beyond the supported machine bounds")
    if k == 1:
        return BaseFieldCtx(p, 1, (0, 1))
    # counting upward in base p with c_0 as the leading digit walks the
    # candidates in lexicographic order; c_0 = 0 is divisible by y
    for index in range(p ** (k - 1), p ** k):
        low = []
        for _ in range(k):
            index, d = divmod(index, p)
            low.append(d)
        modulus = tuple(reversed(low)) + (1,)
        if is_irreducible(modulus, p):
            return BaseFieldCtx(p, k, modulus)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class CycloCtx:
    """F_q[x]/Phi_r(x) for a prime r with q a primitive root mod r."""

    base: BaseFieldCtx
    r: int
    n: int = field(init=False)
    phi_r: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "n", (self.r - 1) // 2)
        object.__setattr__(self, "phi_r", (1,) * self.r)

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def k(self) -> int:
        return self.base.k

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def degree(self) -> int:
        """Degree of the quotient over F_q, i.e. r - 1 = 2n."""
        return self.r - 1

    @property
    def order(self) -> int:
        """Number of elements of the quotient field, q**(2n)."""
        return self.q ** self.degree

    def _elem(self, digits) -> FieldElem:
        return FieldElem(self, tuple(digits))

    @property
    def zero(self) -> FieldElem:
        return self._elem([0] * (self.degree * self.k))

    @property
    def one(self) -> FieldElem:
        return self.scalar(1)

    @property
    def x(self) -> FieldElem:
        """The residue class of x, a primitive r-th root of unity."""
        return self.monomial(1)

    def scalar(self, c: int) -> FieldElem:
        """The integer c viewed in the prime field, as a constant."""
        v = [0] * (self.degree * self.k)
        v[0] = c % self.p
        return self._elem(v)

    def constant(self, a: int) -> FieldElem:
        """The int-encoded F_q element ``a`` as a constant."""
        v = [0] * (self.degree * self.k)
        v[:self.k] = self.base.digits(a)
        return self._elem(v)

    def monomial(self, e: int) -> FieldElem:
        """x**e for any integer e, using x**r = 1."""
        e %= self.r
        k, p = self.k, self.p
        if e < self.degree:
            v = [0] * (self.degree * k)
            v[e * k] = 1
            return self._elem(v)
        # x**(r-1) = -(1 + x + ... + x**(r-2))
        v = [0] * (self.degree * k)
        for i in range(self.degree):
            v[i * k] = p - 1
        return self._elem(v)

    def from_coeffs(self, coeffs) -> FieldElem:
        """Element with the given F_q coefficients of 1, x, x**2, ...

        Polynomials of any length are accepted and reduced modulo Phi_r.
        """
        k = self.k
        folded = [0] * self.r
        for i, c in enumerate(coeffs):
            folded[i % self.r] = self.base.add(folded[i % self.r], c)
        top = folded[-1]
        v = []
        for c in folded[:-1]:
            v.extend(self.base.digits(self.base.sub(c, top)))
        assert len(v) == self.degree * k
        return self._elem(v)

    def random_element(self, rng: random.Random) -> FieldElem:
        return self._elem([rng.randrange(self.p) for _ in range(self.degree * self.k)])


def make_cyclo_ctx(base: BaseFieldCtx, r: int) -> CycloCtx:
    if not is_prime(r):
        raise NotPrime(f"{r} is not prime")
    if r == 2:
        raise IrreducibilityViolation("r = 2 gives a Gauss period of type (1/2, 2)")
    if math.gcd(base.q, r) != 1:
        raise IrreducibilityViolation(f"q = {base.q} is not coprime to r = {r}")
    t = mult_order_mod(base.q, r)
    if t != r - 1:
        raise IrreducibilityViolation(
            f"q = {base.q} has order {t} != {r - 1} modulo {r}; Phi_{r} splits over F_q")
    return CycloCtx(base, r)


# -- elements ----------------------------------------------------------------

class FieldElem:
    """An element of F_q[x]/Phi_r(x); immutable and hashable."""

    __slots__ = ("ctx", "_v")

    def __init__(self, ctx: CycloCtx, digits: tuple[int, ...]):
        self.ctx = ctx
        self._v = digits

    @property
    def digits(self) -> tuple[int, ...]:
        """Flat base-p digits, see the module docstring for the layout."""
        return self._v

    @property
    def coeffs(self) -> tuple[int, ...]:
        k, base = self.ctx.k, self.ctx.base
        if k == 1:
            return self._v
        return tuple(base.from_digits(self._v[i:i + k]) for i in range(0, len(self._v), k))

    def _check(self, other) -> FieldElem:
        if not isinstance(other, FieldElem):
            if isinstance(other, int):
                return self.ctx.scalar(other)
            return NotImplemented
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise CtxMismatch("operands belong to different quotient rings")
        return other

    def __eq__(self, other):
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.ctx == other.ctx and self._v == other._v

    def __hash__(self):
        return hash((self.ctx.r, self.ctx.p, self.ctx.k, self._v))

    def __bool__(self):
        return any(self._v)

    def __repr__(self):
        return f"FieldElem(r={self.ctx.r}, q={self.ctx.q}, coeffs={list(self.coeffs)})"

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((a + b) % p for a, b in zip(self._v, other._v)))

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FieldElem(self.ctx, tuple(-a % p for a in self._v))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((a - b) % p for a, b in zip(self._v, other._v)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        c = self.ctx
        return FieldElem(c, tuple(kernel.mul(self._v, other._v, c.r, c.k, c.p, c.base.mod_low)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        c = self.ctx
        return FieldElem(c, tuple(kernel.power(self._v, e, c.r, c.k, c.p, c.base.mod_low)))

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def inv(self) -> FieldElem:
        if not self:
            raise DivisionByZero("zero has no inverse")
        return self ** (self.ctx.order - 2)


def add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def sub(a: FieldElem, b: FieldElem) -> FieldElem:
    return a - b


def mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def neg(a: FieldElem) -> FieldElem:
    return -a


def inv(a: FieldElem) -> FieldElem:
    return a.inv()


def power(a: FieldElem, e: int) -> FieldElem:
    """a**e by square-and-multiply; ``power(0, 0)`` is 1 by convention."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return a ** e


def mul_by_remainder(a: FieldElem, b: FieldElem) -> FieldElem:
    """Reference product: full polynomial product, then long division by Phi_r.

    Shares no code with the kernel; used to cross-check it.
    """
    if a.ctx != b.ctx:
        raise CtxMismatch("operands belong to different quotient rings")
    ctx = a.ctx
    F = ctx.base
    ca, cb = a.coeffs, b.coeffs
    prod = [0] * (len(ca) + len(cb) - 1)
    for i, u in enumerate(ca):
        if u:
            for j, w in enumerate(cb):
                prod[i + j] = F.add(prod[i + j], F.mul(u, w))
    deg_phi = ctx.r - 1
    # Phi_r is monic with all coefficients 1
    for top in range(len(prod) - 1, deg_phi - 1, -1):
        c = prod[top]
        if c:
            for i in range(top - deg_phi, top + 1):
                prod[i] = F.sub(prod[i], c)
    prod = (prod + [0] * deg_phi)[:deg_phi]
    v = []
    for c in prod:
        v.extend(F.digits(c))
    return FieldElem(ctx, tuple(v))


def frobenius(a: FieldElem, i: int, method: str = "pow") -> FieldElem:
    """Return a**(q**i).

    ``method="pow"`` raises to q**i directly (with i taken mod 2n, since
    a**(q**(2n)) = a); ``method="iterate"`` applies the q-power map i times.
    """
    ctx = a.ctx
    if method == "pow":
        return a ** (ctx.q ** (i % ctx.degree))
    if method == "iterate":
        for _ in range(i):
            a = a ** ctx.q
        return a
    raise ValueError(f"unknown method {method!r}")


def gauss_period(ctx: CycloCtx) -> FieldElem:
    """The Gauss period x + x**(r-1) = beta + beta**-1."""
    return ctx.monomial(1) + ctx.monomial(ctx.r - 1)


def canonical_encoding(a: FieldElem) -> bytes:
    p = a.ctx.p
    if p < 257:
        return bytes(a._v)
    width = max(1, ((p - 1).bit_length() + 7) // 8)
    return b"".join(d.to_bytes(width, "little") for d in a._v)
