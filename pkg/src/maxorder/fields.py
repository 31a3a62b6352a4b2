"""Finite fields: F_p and quotient extensions F[u]/(m).

Elements are immutable plain values. An element of F_p is an int in
[0, p); an element of a quotient extension is a tuple of base-field
elements of fixed length deg(m), lowest power first. Field objects are
stateless after construction and safe to share between threads.

Every field exposes the same small method surface (add, sub, neg, mul,
inv, pow, pth_root, index, element, from_int), so the polynomial code in
ffpoly never needs to know which concrete field it is working over.
"""

from . import ffpoly
from .errors import InputError

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin; exact for every n below 3.3e24."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The integers modulo a prime p; elements are ints in [0, p)."""

    def __init__(self, p):
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
        self.p = p
        self.q = p
        self.zero = 0
        self.one = 1 % p

    def __repr__(self):
        return f"GF({self.p})"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, n):
        return pow(a, n, self.p)

    def pth_root(self, a):
        return a

    def index(self, a):
        return a

    def element(self, i):
        return i % self.p

    def from_int(self, n):
        return n % self.p


class QuotientField:
    """A quotient F[u]/(m) of a polynomial ring over a finite field.

    The modulus must be monic irreducible of degree >= 2 over the base.
    Used both for F_{p^e} over F_p and for the residue fields of
    higher-degree places of F_q(t); the two uses nest cleanly.
    """

    def __init__(self, base, modulus):
        d = ffpoly.deg(modulus)
        if d is ffpoly.MINUS_INF or d < 2:
            raise ValueError("modulus must have degree >= 2")
        if not ffpoly.is_monic(base, modulus):
            raise ValueError("modulus must be monic")
        if not ffpoly.is_irreducible(base, modulus):
            raise ValueError("modulus must be irreducible")
        self.base = base
        self.modulus = modulus
        self.dim = d
        self.p = base.p
        self.q = base.q ** d
        self.zero = (base.zero,) * d
        self.one = (base.one,) + (base.zero,) * (d - 1)

    def __repr__(self):
        return f"GF({self.q})"

    def wrap(self, poly):
        """Pad a trimmed polynomial over the base up to fixed length."""
        return tuple(poly) + (self.base.zero,) * (self.dim - len(poly))

    def unwrap(self, a):
        return ffpoly.trim(self.base, a)

    def add(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(self.base.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        prod = ffpoly.mul(self.base, self.unwrap(a), self.unwrap(b))
        return self.wrap(ffpoly.rem(self.base, prod, self.modulus))

    def inv(self, a):
        pa = self.unwrap(a)
        if not pa:
            raise ZeroDivisionError("inverse of zero")
        _, s, _ = ffpoly.egcd(self.base, pa, self.modulus)
        return self.wrap(s)

    def pow(self, a, n):
        out = self.one
        while n:
            if n & 1:
                out = self.mul(out, a)
            n >>= 1
            if n:
                a = self.mul(a, a)
        return out

    def pth_root(self, a):
        return self.pow(a, self.q // self.p)

    def index(self, a):
        v = 0
        for c in reversed(a):
            v = v * self.base.q + self.base.index(c)
        return v

    def element(self, i):
        out = []
        for _ in range(self.dim):
            out.append(self.base.element(i % self.base.q))
            i //= self.base.q
        return tuple(out)

    def from_int(self, n):
        return self.wrap(ffpoly.constant(self.base, self.base.from_int(n)))


def smallest_irreducible(field, d):
    """The canonical monic irreducible of degree d over the field.

    Candidates are ordered by the integer value of their non-leading
    coefficient vector in base q, constant term least significant; the
    first irreducible wins. Deterministic, table-free.
    """
    for idx in range(field.q ** d):
        coeffs, i = [], idx
        for _ in range(d):
            coeffs.append(field.element(i % field.q))
            i //= field.q
        poly = tuple(coeffs) + (field.one,)
        if ffpoly.is_irreducible(field, poly):
            return poly
    raise ArithmeticError("unreachable: an irreducible of every degree exists")


def extension_field(p, e):
    """F_{p^e}, built on the canonical smallest modulus when e > 1."""
    if e < 1:
        raise InputError("extension degree must be >= 1")
    base = PrimeField(p)
    if e == 1:
        return base
    return QuotientField(base, smallest_irreducible(base, e))
