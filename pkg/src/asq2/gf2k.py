"""Exact arithmetic in GF(2^k), realized as GF(2)[g] modulo an irreducible polynomial.

Field elements are coefficient bit vectors packed into Python ints: bit i is
the coefficient of g^i. Addition is xor, so every element is its own additive
inverse. For the small k in scope (k <= 8) the constructor precomputes full
multiplication, inverse and square-root tables; the polynomial layer then
works on raw ints through the field object and never allocates per-coefficient
wrappers on hot paths.
"""

from __future__ import annotations

MAX_K = 8

# Degree-k default moduli, irreducible over GF(2), as packed bit ints.
DEFAULT_MODULI = {
    1: 0b10,          # g
    2: 0b111,         # g^2+g+1
    3: 0b1011,        # g^3+g+1
    4: 0b10011,       # g^4+g+1
    5: 0b100101,      # g^5+g^2+1
    6: 0b1000011,     # g^6+g+1
    7: 0b10000011,    # g^7+g+1
    8: 0b100011011,   # g^8+g^4+g^3+g+1
}


def gf2_degree(a):
    """Degree of a GF(2) bit polynomial (-1 for zero)."""
    return a.bit_length() - 1


def gf2_mul(a, b):
    """Carry-less product of GF(2) bit polynomials."""
    if a < b:
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def gf2_divmod(a, b):
    """Quotient and remainder of GF(2) bit polynomials, b != 0."""
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = gf2_degree(b)
    q = 0
    da = gf2_degree(a)
    while da >= db:
        shift = da - db
        q ^= 1 << shift
        a ^= b << shift
        da = gf2_degree(a)
    return q, a


def gf2_mod(a, b):
    return gf2_divmod(a, b)[1]


def gf2_gcd(a, b):
    while b:
        a, b = b, gf2_mod(a, b)
    return a


def gf2_is_irreducible(a):
    """Trial division by every lower-degree polynomial; fine for degree <= 8."""
    d = gf2_degree(a)
    if d < 1:
        return False
    for f in range(2, 1 << (d // 2 + 1)):
        if gf2_degree(f) < 1:
            continue
        if gf2_mod(a, f) == 0:
            return False
    return True


def gf2_bits_str(bits, sym="g"):
    """Render a GF(2) bit polynomial as a sum of powers of `sym`."""
    if bits == 0:
        return "0"
    terms = []
    for i in range(gf2_degree(bits), -1, -1):
        if (bits >> i) & 1:
            if i == 0:
                terms.append("1")
            elif i == 1:
                terms.append(sym)
            else:
                terms.append(f"{sym}^{i}")
    return "+".join(terms)


class FqField:
    """The field GF(2^k) = GF(2)[g] / (modulus), modulus irreducible of degree k.

    k = 1 is the degenerate case GF(2): elements {0, 1}, modulus g or g+1.
    Instances are immutable and safely shareable.
    """

    __slots__ = ("k", "modulus", "order", "mask", "_mul", "_inv", "_sqrt",
                 "_zero", "_one")

    def __init__(self, k, modulus=None):
        if not isinstance(k, int) or k < 1:
            raise ValueError("k must be a positive integer")
        if k > MAX_K:
            raise ValueError(f"k > {MAX_K} is out of scope")
        if modulus is None:
            modulus = DEFAULT_MODULI[k]
        if gf2_degree(modulus) != k:
            raise ValueError(f"modulus must have degree {k}")
        if not gf2_is_irreducible(modulus):
            raise ValueError(f"modulus {gf2_bits_str(modulus)} is reducible over GF(2)")
        self.k = k
        self.modulus = modulus
        self.order = 1 << k
        self.mask = self.order - 1
        self._build_tables()
        self._zero = FqElem(self, 0)
        self._one = FqElem(self, 1)

    def _build_tables(self):
        n = self.order
        mul = [0] * (n * n)
        for a in range(n):
            row = a * n
            for b in range(a, n):
                p = gf2_mod(gf2_mul(a, b), self.modulus)
                mul[row + b] = p
                mul[b * n + a] = p
        inv = [0] * n
        sqrt = [0] * n
        for a in range(1, n):
            # a^(2^k - 2) = a^{-1}; repeated squaring keeps this table-free
            acc, cur, e = 1, a, n - 2
            while e:
                if e & 1:
                    acc = mul[acc * n + cur]
                cur = mul[cur * n + cur]
                e >>= 1
            inv[a] = acc
        for a in range(n):
            # sqrt(a) = a^(2^(k-1)): Frobenius is bijective on finite fields
            cur = a
            for _ in range(self.k - 1):
                cur = mul[cur * n + cur]
            sqrt[a] = cur
        self._mul = mul
        self._inv = inv
        self._sqrt = sqrt

    # --- raw operations on packed ints ---

    def mul(self, a, b):
        return self._mul[a * self.order + b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(2^k)")
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def sqrt(self, a):
        return self._sqrt[a]

    def artin_schreier_roots_raw(self, c):
        """All e with e^2 + e = c, as raw ints: empty or a pair {e, e+1}."""
        out = []
        for e in range(self.order):
            if self.mul(e, e) ^ e == c:
                out.append(e)
        return tuple(out)

    # --- element-level API ---

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def elem(self, bits):
        if isinstance(bits, FqElem):
            if bits.field != self:
                raise ValueError("element from a different field")
            return bits
        return FqElem(self, bits & self.mask if bits >> self.k else bits)

    def elements(self):
        for b in range(self.order):
            yield FqElem(self, b)

    def artin_schreier_roots(self, c):
        c = self.elem(c)
        return {FqElem(self, e) for e in self.artin_schreier_roots_raw(c.bits)}

    def __eq__(self, other):
        if not isinstance(other, FqField):
            return NotImplemented
        return self.k == other.k and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.k, self.modulus))

    def __repr__(self):
        return f"FqField(k={self.k}, modulus={gf2_bits_str(self.modulus)})"


class FqElem:
    """An element of GF(2^k), reduced modulo the field polynomial."""

    __slots__ = ("field", "bits")

    def __init__(self, field, bits):
        self.field = field
        self.bits = bits

    def __add__(self, other):
        if not isinstance(other, FqElem):
            return NotImplemented
        return FqElem(self.field, self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other):
        if not isinstance(other, FqElem):
            return NotImplemented
        return FqElem(self.field, self.field.mul(self.bits, other.bits))

    def __truediv__(self, other):
        if not isinstance(other, FqElem):
            return NotImplemented
        return FqElem(self.field, self.field.div(self.bits, other.bits))

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        acc, cur = self.field.one, self
        while e:
            if e & 1:
                acc = acc * cur
            cur = cur * cur
            e >>= 1
        return acc

    def inverse(self):
        return FqElem(self.field, self.field.inv(self.bits))

    def sqrt(self):
        """The unique square root (Frobenius is bijective)."""
        return FqElem(self.field, self.field.sqrt(self.bits))

    def __eq__(self, other):
        if not isinstance(other, FqElem):
            return NotImplemented
        return self.bits == other.bits and self.field == other.field

    def __hash__(self):
        return hash((self.bits, self.field.modulus))

    def __bool__(self):
        return self.bits != 0

    def __str__(self):
        return gf2_bits_str(self.bits)

    def __repr__(self):
        return f"FqElem({gf2_bits_str(self.bits)})"
