"""Valued bases and polynomial arithmetic over their rings of integers.

A base is either the rationals with a p-adic valuation, or a rational
function field F_q(t) with the place of a monic irreducible pi(t). The
engine computes inside the global rings Z and F_q[t]: both are closed
under everything it needs (division by monic polynomials, resultants,
reduction, canonical lifts), so no fractions ever appear and every value
is exact.

Ring elements are Python ints for Z and trimmed tuples of F_q elements
for F_q[t]. A polynomial in x over a ring is a trimmed tuple of ring
elements, constant term first; the zero polynomial is the empty tuple
and its degree is the MINUS_INF sentinel. Valuations of zero are the
INF sentinel.
"""

import math

from . import ffpoly
from .errors import InputError
from .fields import PrimeField, QuotientField, extension_field, is_prime
from .ffpoly import MINUS_INF

INF = math.inf


class IntegerRing:
    """Z carrying the p-adic valuation data."""

    kind = "Q"

    def __init__(self, p):
        if not is_prime(p):
            raise InputError(f"prime expected, got {p}")
        self.p = p
        self.zero = 0
        self.one = 1
        self.prime_element = p
        self.residue_field = PrimeField(p)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def elem_pow(self, a, n):
        return a ** n

    def exact_div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    def valuation(self, a):
        if a == 0:
            return INF
        a = abs(a)
        v = 0
        while a % self.p == 0:
            a //= self.p
            v += 1
        return v

    def prime_pow(self, k):
        return self.p ** k

    def mod_prime_pow(self, a, k):
        return a % self.p ** k

    def reduce(self, a):
        return a % self.p

    def lift(self, c):
        return c

    def from_int(self, n):
        return n


class FunctionRing:
    """F_q[t] carrying the pi-adic valuation data."""

    kind = "Fq"

    def __init__(self, field, pi):
        pi = ffpoly.trim(field, pi)
        d = ffpoly.deg(pi)
        if d is MINUS_INF or d < 1:
            raise InputError("pi must be a non-constant polynomial in t")
        if not ffpoly.is_monic(field, pi):
            raise InputError("pi must be monic")
        if not ffpoly.is_irreducible(field, pi):
            raise InputError("pi must be irreducible over the coefficient field")
        self.field = field
        self.p = field.p
        self.pi = pi
        self.pi_degree = d
        self._pi_is_t = pi == (field.zero, field.one)
        self.zero = ()
        self.one = (field.one,)
        self.prime_element = pi
        if d == 1:
            self.residue_field = field
            self._pi_root = field.neg(pi[0])
        else:
            self.residue_field = QuotientField(field, pi)

    def add(self, a, b):
        return ffpoly.add(self.field, a, b)

    def sub(self, a, b):
        return ffpoly.sub(self.field, a, b)

    def neg(self, a):
        return ffpoly.neg(self.field, a)

    def mul(self, a, b):
        return ffpoly.mul(self.field, a, b)

    def is_zero(self, a):
        return not a

    def elem_pow(self, a, n):
        return ffpoly.pow_(self.field, a, n)

    def exact_div(self, a, b):
        q, r = ffpoly.divmod_(self.field, a, b)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    def valuation(self, a):
        if not a:
            return INF
        if self._pi_is_t:
            v = 0
            while a[v] == self.field.zero:
                v += 1
            return v
        v = 0
        while True:
            q, r = ffpoly.divmod_(self.field, a, self.pi)
            if r:
                return v
            a = q
            v += 1

    def prime_pow(self, k):
        if self._pi_is_t:
            return (self.field.zero,) * k + (self.field.one,)
        return ffpoly.pow_(self.field, self.pi, k)

    def mod_prime_pow(self, a, k):
        if self._pi_is_t:
            return ffpoly.trim(self.field, a[:k])
        return ffpoly.rem(self.field, a, self.prime_pow(k))

    def reduce(self, a):
        if self.pi_degree == 1:
            return ffpoly.evaluate(self.field, a, self._pi_root)
        return self.residue_field.wrap(ffpoly.rem(self.field, a, self.pi))

    def lift(self, c):
        if self.pi_degree == 1:
            return ffpoly.constant(self.field, c)
        return self.residue_field.unwrap(c)

    def from_int(self, n):
        return ffpoly.constant(self.field, self.field.from_int(n))


class ValuedBase:
    """A ground field with one fixed discrete rank-one place.

    Either (Q, p) or (F_q(t), pi). The least positive value of the value
    group, sigma, is always 1 for these bases. The attached ``ring`` is
    the global ring of integers the engine computes in, and
    ``residue_field`` is the residue field of the place.
    """

    sigma = 1

    def __init__(self, ring):
        self.ring = ring
        self.kind = ring.kind
        self.residue_field = ring.residue_field
        self.prime_element = ring.prime_element

    @classmethod
    def rational(cls, p):
        base = cls(IntegerRing(p))
        base.prime = p
        base.char = 0
        return base

    @classmethod
    def function_field(cls, p, e, pi_coeffs):
        """F_{p^e}(t) at the place of the monic irreducible pi.

        ``pi_coeffs`` is a polynomial in t over F_{p^e}, given as a
        trimmed tuple of field elements.
        """
        field = extension_field(p, e)
        base = cls(FunctionRing(field, pi_coeffs))
        base.p = p
        base.e = e
        base.char = p
        base.coefficient_field = field
        return base

    def describe(self):
        if self.kind == "Q":
            return f"Q at p = {self.prime}"
        return f"F_{self.coefficient_field.q}(t) at pi = {element_to_text(self.ring.pi, self)}"


# ---------------------------------------------------------------------------
# polynomials in x over a base ring


def poly_trim(coeffs, ring):
    n = len(coeffs)
    while n and ring.is_zero(coeffs[n - 1]):
        n -= 1
    return tuple(coeffs[:n])


def poly_deg(P):
    return len(P) - 1 if P else MINUS_INF


def poly_const(c, ring):
    return () if ring.is_zero(c) else (c,)


def poly_x(ring):
    return (ring.zero, ring.one)


def is_monic_poly(P, ring):
    return bool(P) and P[-1] == ring.one


def poly_add(P, Q, ring):
    if len(P) < len(Q):
        P, Q = Q, P
    out = list(P)
    for i, c in enumerate(Q):
        out[i] = ring.add(out[i], c)
    return poly_trim(out, ring)


def poly_neg(P, ring):
    return tuple(ring.neg(c) for c in P)


def poly_sub(P, Q, ring):
    return poly_add(P, poly_neg(Q, ring), ring)


def poly_scale(P, c, ring):
    if ring.is_zero(c):
        return ()
    return poly_trim([ring.mul(x, c) for x in P], ring)


def poly_mul(P, Q, ring):
    if not P or not Q:
        return ()
    out = [ring.zero] * (len(P) + len(Q) - 1)
    for i, a in enumerate(P):
        if ring.is_zero(a):
            continue
        for j, b in enumerate(Q):
            out[i + j] = ring.add(out[i + j], ring.mul(a, b))
    return poly_trim(out, ring)


def poly_pow(P, n, ring):
    out = (ring.one,)
    while n:
        if n & 1:
            out = poly_mul(out, P, ring)
        n >>= 1
        if n:
            P = poly_mul(P, P, ring)
    return out


def poly_eval(P, a, ring):
    acc = ring.zero
    for c in reversed(P):
        acc = ring.add(ring.mul(acc, a), c)
    return acc


def poly_derivative(P, ring):
    return poly_trim([ring.mul(ring.from_int(i), P[i]) for i in range(1, len(P))], ring)


def compose_x_power(P, m, ring):
    """P(x^m), densely."""
    if m == 1 or not P:
        return P
    out = [ring.zero] * ((len(P) - 1) * m + 1)
    for i, c in enumerate(P):
        out[i * m] = c
    return poly_trim(out, ring)


def poly_divmod_monic(f, phi, ring):
    """Euclidean division by a monic divisor; exact over the ring."""
    dphi = poly_deg(phi)
    if dphi is MINUS_INF or dphi < 1 or not is_monic_poly(phi, ring):
        raise InputError("divisor must be monic of degree >= 1")
    if len(f) <= dphi:
        return (), f
    r = list(f)
    q = [ring.zero] * (len(f) - dphi)
    for i in range(len(f) - dphi - 1, -1, -1):
        c = r[i + dphi]
        if ring.is_zero(c):
            continue
        q[i] = c
        for j in range(dphi):
            r[i + j] = ring.sub(r[i + j], ring.mul(c, phi[j]))
        r[i + dphi] = ring.zero
    return poly_trim(q, ring), poly_trim(r[:dphi], ring)


def element_valuation(a, base):
    """Exponent of the prime element in a; INF at zero."""
    return base.ring.valuation(a)


def gauss_valuation(P, base):
    """Minimum coefficient valuation; INF for the zero polynomial."""
    v = INF
    for c in P:
        cv = base.ring.valuation(c)
        if cv < v:
            v = cv
            if v == 0:
                break
    return v


def normalize_primitive(P, base):
    """Split off the full prime power: returns (P0, a) with P = a * P0."""
    if not P:
        raise InputError("the zero polynomial has no primitive part")
    v = gauss_valuation(P, base)
    a = base.ring.prime_pow(v)
    if v == 0:
        return P, a
    return tuple(base.ring.exact_div(c, a) for c in P), a


def reduce_mod(P, base):
    """Coefficient-wise image of P in the residue field."""
    return ffpoly.trim(base.residue_field, [base.ring.reduce(c) for c in P])


def lift_residue_poly(Pbar, base):
    """Canonical coefficient-wise lift of a residue polynomial."""
    return poly_trim([base.ring.lift(c) for c in Pbar], base.ring)


# ---------------------------------------------------------------------------
# resultants and discriminants (fraction-free)


def _prem(A, B, ring):
    """Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A reduced by B."""
    dB = len(B) - 1
    lB = B[-1]
    R = A
    e = len(A) - len(B) + 1
    while R and len(R) - 1 >= dB:
        dR = len(R) - 1
        lead = R[-1]
        shifted = (ring.zero,) * (dR - dB) + B
        R = poly_trim(
            [ring.sub(ring.mul(lB, R[i]), ring.mul(lead, shifted[i])) for i in range(dR + 1)],
            ring,
        )
        e -= 1
    if e > 0:
        s = ring.elem_pow(lB, e)
        R = tuple(ring.mul(c, s) for c in R)
    return R


def resultant(f, g, ring):
    """Resultant over the base ring via the subresultant remainder scheme.

    Fraction-free: all interior divisions are exact in the ring, so the
    intermediate coefficients stay determinant-sized instead of growing
    exponentially. Row convention: Res(f, g) = lc(g)^deg(f) * prod f(beta)
    over the roots beta of g, up to the usual (-1)^(deg f * deg g) swap.
    """
    if not f or not g:
        raise InputError("resultant of a zero polynomial")
    A, B = f, g
    s = 1
    if poly_deg(A) < poly_deg(B):
        A, B = B, A
        if (poly_deg(A) * poly_deg(B)) % 2 == 1:
            s = -s
    if poly_deg(A) == 0:
        return ring.one
    gpart = ring.one
    h = ring.one
    while poly_deg(B) > 0:
        dA, dB = poly_deg(A), poly_deg(B)
        delta = dA - dB
        if dA % 2 == 1 and dB % 2 == 1:
            s = -s
        R = _prem(A, B, ring)
        A = B
        if not R:
            return ring.zero
        div = ring.mul(gpart, ring.elem_pow(h, delta))
        B = tuple(ring.exact_div(c, div) for c in R)
        gpart = A[-1]
        if delta == 1:
            h = gpart
        elif delta > 1:
            h = ring.exact_div(ring.elem_pow(gpart, delta), ring.elem_pow(h, delta - 1))
    dA = poly_deg(A)
    res = ring.exact_div(ring.elem_pow(B[0], dA), ring.elem_pow(h, dA - 1))
    return ring.neg(res) if s < 0 else res


def discriminant(f, ring):
    """Discriminant of monic f, as (-1)^(n(n-1)/2) Res(f, f').

    In positive characteristic the derivative can vanish identically;
    the discriminant is zero then.
    """
    n = poly_deg(f)
    if n is MINUS_INF or n < 1 or not is_monic_poly(f, ring):
        raise InputError("monic polynomial of degree >= 1 expected")
    fp = poly_derivative(f, ring)
    if not fp:
        return ring.zero
    r = resultant(f, fp, ring)
    return ring.neg(r) if (n * (n - 1) // 2) % 2 == 1 else r


# ---------------------------------------------------------------------------
# canonical text form


def _fq_elem_text(field, c):
    """An F_q element as a polynomial in the generator u (plain int at e=1)."""
    if isinstance(field, PrimeField):
        return str(c)
    terms = []
    for i in range(field.dim - 1, -1, -1):
        a = c[i]
        if a == field.base.zero:
            continue
        if i == 0:
            terms.append(str(a))
        elif a == field.base.one:
            terms.append("u" if i == 1 else f"u^{i}")
        else:
            terms.append(f"{a}*u" if i == 1 else f"{a}*u^{i}")
    return " + ".join(terms) if terms else "0"


def _tpoly_text(ring, a):
    """An F_q[t] element in the t/u grammar the parser accepts back."""
    if not a:
        return "0"
    field = ring.field
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == field.zero:
            continue
        ct = _fq_elem_text(field, c)
        if i == 0:
            terms.append(ct)
            continue
        tpow = "t" if i == 1 else f"t^{i}"
        if c == field.one:
            terms.append(tpow)
        elif "+" in ct:
            terms.append(f"({ct})*{tpow}")
        else:
            terms.append(f"{ct}*{tpow}")
    return " + ".join(terms)


def poly_to_text(P, base, var="x"):
    """Canonical, re-parseable text form of a polynomial over the base."""
    if not P:
        return "0"
    ring = base.ring
    pieces = []
    for i in range(len(P) - 1, -1, -1):
        c = P[i]
        if ring.is_zero(c):
            continue
        if base.kind == "Q":
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif mag == 1:
                body = var if i == 1 else f"{var}^{i}"
            else:
                body = f"{mag}*{var}" if i == 1 else f"{mag}*{var}^{i}"
        else:
            sign = "+"
            ct = _tpoly_text(ring, c)
            if i == 0:
                body = ct
            else:
                xpow = var if i == 1 else f"{var}^{i}"
                if c == ring.one:
                    body = xpow
                elif "+" in ct:
                    body = f"({ct})*{xpow}"
                else:
                    body = f"{ct}*{xpow}"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = first_body if first_sign == "+" else f"-{first_body}"
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def element_to_text(a, base):
    """Canonical text of one ring element (prime elements, remainders)."""
    if base.kind == "Q":
        return str(a)
    return _tpoly_text(base.ring, a)
