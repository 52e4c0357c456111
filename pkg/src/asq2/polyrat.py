"""Exact polynomials over GF(2^k) and reduced rational functions GF(2^k)(T).

A polynomial is a single Python int in which consecutive k-bit limbs hold the
coefficients: limb i is the coefficient of T^i. Addition is xor (no limb ever
carries into the next), which makes the hot arithmetic paths plain integer
work driven by the field's lookup tables.

Rational functions are kept in canonical form at all times: den != 0,
gcd(num, den) = 1, den monic. Equality is therefore structural.

The zero polynomial's degree is reported as None, never an arithmetic value.
"""

from __future__ import annotations

from .errors import DivisorBudgetExceeded, ZeroPolynomialError
from .gf2k import FqElem, FqField, gf2_bits_str, gf2_divmod, gf2_mod, gf2_mul
from ._rng import SplitMix64

DEFAULT_DIVISOR_BUDGET = 4096

_EDF_SEED = 0x0A5F_C0DE_5EED


# ---------------------------------------------------------------------------
# raw helpers on limb-packed ints

def _deg(k, v):
    """Internal degree, -1 for zero. Public API converts to None."""
    return (v.bit_length() - 1) // k if v else -1


def _coeff(field, v, i):
    return (v >> (i * field.k)) & field.mask


def _scale(field, v, c):
    """Multiply every coefficient by the constant c."""
    if c == 1 or v == 0:
        return v
    if c == 0:
        return 0
    k, mask, mul = field.k, field.mask, field._mul
    n = field.order
    r = 0
    pos = 0
    while v:
        limb = v & mask
        if limb:
            r |= mul[limb * n + c] << pos
        v >>= k
        pos += k
    return r


def _pmul(field, a, b):
    if a == 0 or b == 0:
        return 0
    k = field.k
    if k == 1:
        return gf2_mul(a, b)
    if a.bit_length() < b.bit_length():
        a, b = b, a
    mask = field.mask
    r = 0
    pos = 0
    while b:
        limb = b & mask
        if limb:
            r ^= _scale(field, a, limb) << pos
        b >>= k
        pos += k
    return r


def _psqr(field, a):
    """Square via Frobenius: coefficients square, exponents double."""
    k, mask = field.k, field.mask
    r = 0
    i = 0
    while a:
        limb = a & mask
        if limb:
            r |= field.mul(limb, limb) << (2 * i * k)
        a >>= k
        i += 1
    return r


def _pdivmod(field, a, b):
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    k = field.k
    if k == 1:
        return gf2_divmod(a, b)
    db = _deg(k, b)
    da = _deg(k, a)
    if da < db:
        return 0, a
    ilc = field.inv(_coeff(field, b, db))
    q = 0
    while da >= db and a:
        c = field.mul(_coeff(field, a, da), ilc)
        shift = da - db
        q |= c << (shift * k)
        a ^= _scale(field, b, c) << (shift * k)
        da = _deg(k, a)
    return q, a


def _pmod(field, a, b):
    return _pdivmod(field, a, b)[1]


def _pgcd(field, a, b):
    """Monic gcd (0 for two zero inputs)."""
    while b:
        a, b = b, _pmod(field, a, b)
    return _pmonic(field, a)[0]


def _pmonic(field, v):
    """(monic multiple, leading coefficient)."""
    if v == 0:
        return 0, 0
    lc = _coeff(field, v, _deg(field.k, v))
    if lc == 1:
        return v, 1
    return _scale(field, v, field.inv(lc)), lc


def _pderiv(field, v):
    """Formal derivative; in characteristic 2 only odd-degree terms survive."""
    k, mask = field.k, field.mask
    r = 0
    i = 1
    v >>= k
    pos = 0
    while v:
        limb = v & mask
        if limb and (i & 1):
            r |= limb << pos
        v >>= k
        i += 1
        pos += k
    return r


def _psqrt(field, v):
    """Exact square root or None: every odd exponent must be absent."""
    k, mask = field.k, field.mask
    r = 0
    i = 0
    while v:
        limb = v & mask
        if limb:
            if i & 1:
                return None
            r |= field.sqrt(limb) << ((i // 2) * k)
        v >>= k
        i += 1
    return r


def _ppowmod(field, base, e, modulus):
    acc = 1
    base = _pmod(field, base, modulus)
    while e:
        if e & 1:
            acc = _pmod(field, _pmul(field, acc, base), modulus)
        base = _pmod(field, _psqr(field, base), modulus)
        e >>= 1
    return acc


# ---------------------------------------------------------------------------
# factorization machinery (monic inputs, raw values)

def _squarefree_monic(field, v):
    """Musser decomposition, characteristic-2 aware: [(factor, multiplicity)]."""
    if v == 1:
        return []
    out = []
    dv = _pderiv(field, v)
    if dv == 0:
        # v is a polynomial in T^2, hence a perfect square
        root = _psqrt(field, v)
        for f, e in _squarefree_monic(field, root):
            out.append((f, 2 * e))
        return out
    c = _pgcd(field, v, dv)
    w = _pdivmod(field, v, c)[0]
    i = 1
    while w != 1:
        y = _pgcd(field, w, c)
        z = _pdivmod(field, w, y)[0]
        if z != 1:
            out.append((z, i))
        w = y
        c = _pdivmod(field, c, y)[0]
        i += 1
    if c != 1:
        root = _psqrt(field, c)
        for f, e in _squarefree_monic(field, root):
            out.append((f, 2 * e))
    return out


def _distinct_degree(field, v):
    """Distinct-degree split of a monic squarefree v: [(product, degree)]."""
    out = []
    k = field.k
    tpoly = 1 << k  # the polynomial T
    h = tpoly
    d = 0
    g = v
    while _deg(k, g) >= 2 * (d + 1):
        d += 1
        for _ in range(k):
            h = _pmod(field, _psqr(field, h), g)
        w = _pgcd(field, h ^ tpoly, g)
        if w != 1:
            out.append((w, d))
            g = _pdivmod(field, g, w)[0]
            h = _pmod(field, h, g)
    if g != 1:
        out.append((g, _deg(k, g)))
    return out


def _equal_degree(field, v, d):
    """Split a monic squarefree product of degree-d irreducibles completely.

    Cantor-Zassenhaus for characteristic 2: the absolute trace of a random
    element is 0 or 1 modulo each irreducible factor, so its gcd with v
    splits with probability >= 1/2. Trials come from a seeded generator so
    factorization output is bit-reproducible.
    """
    k = field.k
    n = _deg(k, v)
    if n == d:
        return [v]
    rng = SplitMix64(_EDF_SEED ^ v ^ d)
    nbits = n * k
    while True:
        h = rng.next_u64()
        for _ in range((nbits - 1) // 64):
            h = (h << 64) | rng.next_u64()
        h &= (1 << nbits) - 1
        if h == 0:
            continue
        acc = cur = _pmod(field, h, v)
        for _ in range(k * d - 1):
            cur = _pmod(field, _psqr(field, cur), v)
            acc ^= cur
        for cand in (acc, acc ^ 1):
            g = _pgcd(field, cand, v)
            if 0 < _deg(k, g) < n:
                rest = _pdivmod(field, v, g)[0]
                return _equal_degree(field, g, d) + _equal_degree(field, rest, d)


def _factor_raw(field, v):
    """(leading coefficient, sorted [(monic irreducible, multiplicity)])."""
    monic, unit = _pmonic(field, v)
    factors = []
    for part, mult in _squarefree_monic(field, monic):
        for prod, d in _distinct_degree(field, part):
            for irr in _equal_degree(field, prod, d):
                factors.append((irr, mult))
    factors.sort(key=lambda fe: (_deg(field.k, fe[0]), fe[0]))
    return unit, factors


# ---------------------------------------------------------------------------

class Poly:
    """A polynomial in T over GF(2^k), always normalized (packed int value)."""

    __slots__ = ("field", "val")

    def __init__(self, field, val=0):
        self.field = field
        self.val = val

    @classmethod
    def from_coeffs(cls, field, coeffs):
        """Build from low-to-high coefficients (FqElem or raw ints)."""
        v = 0
        for i, c in enumerate(coeffs):
            bits = c.bits if isinstance(c, FqElem) else c & field.mask
            v |= bits << (i * field.k)
        return cls(field, v)

    @classmethod
    def constant(cls, field, c):
        bits = c.bits if isinstance(c, FqElem) else c & field.mask
        return cls(field, bits)

    @classmethod
    def T(cls, field):
        return cls(field, 1 << field.k)

    def degree(self):
        """Degree, or None for the zero polynomial (a sentinel, not a number)."""
        d = _deg(self.field.k, self.val)
        return None if d < 0 else d

    def coeff(self, i):
        return FqElem(self.field, _coeff(self.field, self.val, i))

    def coeffs(self):
        d = _deg(self.field.k, self.val)
        return tuple(self.coeff(i) for i in range(d + 1))

    def lc(self):
        if self.val == 0:
            return self.field.zero
        return self.coeff(_deg(self.field.k, self.val))

    def is_monic(self):
        return self.val != 0 and self.lc().bits == 1

    def monic(self):
        return Poly(self.field, _pmonic(self.field, self.val)[0])

    def _chk(self, other):
        if not isinstance(other, Poly):
            return None
        if other.field is not self.field and other.field != self.field:
            raise ValueError("polynomials over different fields")
        return other

    def __add__(self, other):
        o = self._chk(other)
        if o is None:
            return NotImplemented
        return Poly(self.field, self.val ^ o.val)

    __sub__ = __add__

    def __mul__(self, other):
        o = self._chk(other)
        if o is None:
            return NotImplemented
        return Poly(self.field, _pmul(self.field, self.val, o.val))

    def __divmod__(self, other):
        o = self._chk(other)
        if o is None:
            return NotImplemented
        q, r = _pdivmod(self.field, self.val, o.val)
        return Poly(self.field, q), Poly(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        acc = Poly(self.field, 1)
        cur = self
        while e:
            if e & 1:
                acc = acc * cur
            cur = Poly(self.field, _psqr(self.field, cur.val))
            e >>= 1
        return acc

    def gcd(self, other):
        o = self._chk(other)
        return Poly(self.field, _pgcd(self.field, self.val, o.val))

    def derivative(self):
        return Poly(self.field, _pderiv(self.field, self.val))

    def sqrt(self):
        """Exact square root, or None when no square root exists."""
        r = _psqrt(self.field, self.val)
        return None if r is None else Poly(self.field, r)

    def squarefree(self):
        """[(monic squarefree part, multiplicity)], pairwise coprime; unit dropped.

        The product of part^multiplicity equals self up to its leading
        coefficient.
        """
        if self.val == 0:
            raise ZeroPolynomialError("squarefree decomposition of zero")
        monic, _ = _pmonic(self.field, self.val)
        if monic == 1:
            return []
        return [(Poly(self.field, f), e) for f, e in _squarefree_monic(self.field, monic)]

    def factor(self):
        """(unit, [(monic irreducible, multiplicity)]); re-multiplying gives self."""
        if self.val == 0:
            raise ZeroPolynomialError("factorization of zero")
        unit, factors = _factor_raw(self.field, self.val)
        return (FqElem(self.field, unit),
                [(Poly(self.field, f), e) for f, e in factors])

    def is_irreducible(self):
        if self.val == 0 or self.degree() == 0:
            return False
        _, factors = _factor_raw(self.field, self.val)
        return len(factors) == 1 and factors[0][1] == 1

    def monic_divisors(self, budget=DEFAULT_DIVISOR_BUDGET):
        """All monic divisors, sorted by (degree, coefficient order).

        The count is the product of (multiplicity + 1) over the irreducible
        factorization; anything beyond `budget` raises rather than enumerates.
        """
        if self.val == 0:
            raise ZeroPolynomialError("divisors of zero")
        _, factors = _factor_raw(self.field, self.val)
        count = 1
        for _, e in factors:
            count *= e + 1
        if count > budget:
            raise DivisorBudgetExceeded(
                f"{count} divisors exceed the budget of {budget}")
        divisors = [1]
        for f, e in factors:
            powers = [1]
            for _ in range(e):
                powers.append(_pmul(self.field, powers[-1], f))
            divisors = [_pmul(self.field, d, p) for d in divisors for p in powers]
        divisors.sort(key=lambda v: (_deg(self.field.k, v), v))
        return [Poly(self.field, v) for v in divisors]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.val == other.val and self.field == other.field

    def __hash__(self):
        return hash((self.val, self.field.modulus))

    def __bool__(self):
        return self.val != 0

    def __str__(self):
        if self.val == 0:
            return "0"
        field = self.field
        parts = []
        for i in range(_deg(field.k, self.val), -1, -1):
            c = _coeff(field, self.val, i)
            if c == 0:
                continue
            if i == 0:
                parts.append(gf2_bits_str(c))
                continue
            tpow = "T" if i == 1 else f"T^{i}"
            if c == 1:
                parts.append(tpow)
            elif c & (c - 1) == 0:
                parts.append(f"{gf2_bits_str(c)}*{tpow}")
            else:
                parts.append(f"({gf2_bits_str(c)})*{tpow}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self})"

    def _term_count(self):
        n = 0
        v = self.val
        mask = self.field.mask
        while v:
            if v & mask:
                n += 1
            v >>= self.field.k
        return n

    def _is_single_factor(self):
        """True when str(self) is usable as a bare '/' operand."""
        if self._term_count() != 1:
            return False
        d = _deg(self.field.k, self.val)
        c = _coeff(self.field, self.val, d)
        return c == 1 or d == 0


# ---------------------------------------------------------------------------

def _reduce(field, n, d):
    """Canonical (num, den) raw pair: den monic, gcd 1."""
    if d == 0:
        raise ZeroDivisionError("rational function with zero denominator")
    if n == 0:
        return 0, 1
    if d != 1:
        g = _pgcd(field, n, d)
        if _deg(field.k, g) > 0:
            n = _pdivmod(field, n, g)[0]
            d = _pdivmod(field, d, g)[0]
        d, lc = _pmonic(field, d)
        if lc not in (0, 1):
            n = _scale(field, n, field.inv(lc))
    return n, d


class RatFun:
    """An element of F = GF(2^k)(T) in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = Poly(num.field, 1)
        n, d = _reduce(num.field, num.val, den.val)
        self.num = Poly(num.field, n)
        self.den = Poly(num.field, d)

    @classmethod
    def _raw(cls, field, n, d):
        """Trusted constructor: (n, d) already canonical."""
        self = object.__new__(cls)
        self.num = Poly(field, n)
        self.den = Poly(field, d)
        return self

    @classmethod
    def of(cls, poly):
        return cls._raw(poly.field, poly.val, 1)

    @classmethod
    def constant(cls, field, c):
        bits = c.bits if isinstance(c, FqElem) else c & field.mask
        return cls._raw(field, bits, 1)

    @classmethod
    def zero(cls, field):
        return cls._raw(field, 0, 1)

    @classmethod
    def one(cls, field):
        return cls._raw(field, 1, 1)

    @classmethod
    def T(cls, field):
        return cls._raw(field, 1 << field.k, 1)

    @property
    def field(self):
        return self.num.field

    def is_zero(self):
        return self.num.val == 0

    def is_one(self):
        return self.num.val == 1 and self.den.val == 1

    def is_polynomial(self):
        return self.den.val == 1

    def _chk(self, other):
        if not isinstance(other, RatFun):
            return None
        if other.field is not self.field and other.field != self.field:
            raise ValueError("rational functions over different fields")
        return other

    def __add__(self, other):
        o = self._chk(other)
        if o is None:
            return NotImplemented
        f = self.field
        n1, d1, n2, d2 = self.num.val, self.den.val, o.num.val, o.den.val
        if d1 == 1 and d2 == 1:
            return RatFun._raw(f, n1 ^ n2, 1)
        n = _pmul(f, n1, d2) ^ _pmul(f, n2, d1)
        return RatFun._raw(f, *_reduce(f, n, _pmul(f, d1, d2)))

    __sub__ = __add__

    def __mul__(self, other):
        o = self._chk(other)
        if o is None:
            return NotImplemented
        f = self.field
        n1, d1, n2, d2 = self.num.val, self.den.val, o.num.val, o.den.val
        if n1 == 0 or n2 == 0:
            return RatFun._raw(f, 0, 1)
        if d1 == 1 and d2 == 1:
            return RatFun._raw(f, _pmul(f, n1, n2), 1)
        # cross-cancel before multiplying to keep intermediates small
        g1 = _pgcd(f, n1, d2)
        if _deg(f.k, g1) > 0:
            n1 = _pdivmod(f, n1, g1)[0]
            d2 = _pdivmod(f, d2, g1)[0]
        g2 = _pgcd(f, n2, d1)
        if _deg(f.k, g2) > 0:
            n2 = _pdivmod(f, n2, g2)[0]
            d1 = _pdivmod(f, d1, g2)[0]
        return RatFun._raw(f, *_reduce(f, _pmul(f, n1, n2), _pmul(f, d1, d2)))

    def __truediv__(self, other):
        o = self._chk(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def inverse(self):
        if self.num.val == 0:
            raise ZeroDivisionError("inverse of zero rational function")
        f = self.field
        n, lc = _pmonic(f, self.num.val)
        d = self.den.val
        if lc != 1:
            d = _scale(f, d, f.inv(lc))
        return RatFun._raw(f, d, n)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        f = self.field
        acc = RatFun.one(f)
        cur = self
        while e:
            if e & 1:
                acc = acc * cur
            cur = RatFun._raw(f, _psqr(f, cur.num.val), _psqr(f, cur.den.val))
            e >>= 1
        return acc

    def square(self):
        f = self.field
        return RatFun._raw(f, _psqr(f, self.num.val), _psqr(f, self.den.val))

    def sqrt(self):
        """Exact square root in F, or None.

        A reduced n/d is a square iff n and d are squares of polynomials:
        every T-exponent even (coefficients are automatically squares, the
        Frobenius being onto the finite constant field).
        """
        f = self.field
        n = _psqrt(f, self.num.val)
        if n is None:
            return None
        d = _psqrt(f, self.den.val)
        if d is None:
            return None
        return RatFun._raw(f, n, d)

    def __eq__(self, other):
        if not isinstance(other, RatFun):
            return NotImplemented
        return (self.num.val == other.num.val and self.den.val == other.den.val
                and self.field == other.field)

    def __hash__(self):
        return hash((self.num.val, self.den.val, self.field.modulus))

    def __bool__(self):
        return self.num.val != 0

    def sort_key(self):
        return (self.den.val, self.num.val)

    def __str__(self):
        if self.den.val == 1:
            return str(self.num)
        num_s = str(self.num)
        if self.num._term_count() > 1:
            num_s = f"({num_s})"
        den_s = str(self.den)
        if not self.den._is_single_factor():
            den_s = f"({den_s})"
        return f"{num_s}/{den_s}"

    def __repr__(self):
        return f"RatFun({self})"
