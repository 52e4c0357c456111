"""Scalar equation solving over F = GF(2^k)(T) and its quadratic extensions.

Everything here is exact and complete within its stated contract:

* `artin_schreier_roots` returns the full solution set of y^2 + y = c in F.
  A reduced solution u/v forces the denominator of c to be v^2, so the
  denominator must be a polynomial square; the numerator equation
  u^2 + u*v = p is GF(2)-affine in the coefficient bits of u with
  deg(u) <= deg(p), and is solved exactly.
* `rational_roots` finds every F-root of a low-degree polynomial by the
  rational root theorem over GF(2^k)[T]: clear denominators, then a reduced
  root u/v has v dividing the leading and u dividing the trailing
  coefficient up to constants.
* `bounded_witness` is a semi-decision: a returned assignment satisfies the
  form exactly (never a false positive); None only means "no witness among
  polynomial assignments of degree <= bound".

Characteristic 2 is what makes the affine reductions work: squaring is
GF(2)-linear on coefficient bits.
"""

from __future__ import annotations

from .errors import (IdentityEquationError, InvariantViolation,
                     SplitAlgebraError, UnsupportedFormShape,
                     ZeroPolynomialError)
from .polyrat import (DEFAULT_DIVISOR_BUDGET, Poly, RatFun, _pmul, _psqr,
                      _scale)

_KERNEL_WALK_CAP = 4096


def solve_affine_gf2(columns, rhs):
    """Solve sum_j x_j * columns[j] = rhs over GF(2), columns as bit ints.

    Returns (particular, kernel_basis) with free variables zeroed, or None
    when the system is inconsistent.
    """
    n = len(columns)
    width = max([rhs.bit_length()] + [c.bit_length() for c in columns], default=0)
    rows = []
    for i in range(width):
        row = 0
        for j in range(n):
            row |= ((columns[j] >> i) & 1) << j
        if row or (rhs >> i) & 1:
            rows.append((row, (rhs >> i) & 1))
    pivots = []
    r = 0
    for col in range(n):
        piv = None
        for idx in range(r, len(rows)):
            if (rows[idx][0] >> col) & 1:
                piv = idx
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow, pb = rows[r]
        for idx in range(len(rows)):
            if idx != r and (rows[idx][0] >> col) & 1:
                rows[idx] = (rows[idx][0] ^ prow, rows[idx][1] ^ pb)
        pivots.append(col)
        r += 1
    for row, b in rows[r:]:
        if b:
            return None
    particular = 0
    for i, col in enumerate(pivots):
        if rows[i][1]:
            particular |= 1 << col
    pivset = set(pivots)
    kernel = []
    for col in range(n):
        if col in pivset:
            continue
        vec = 1 << col
        for i, pcol in enumerate(pivots):
            if (rows[i][0] >> col) & 1:
                vec |= 1 << pcol
        kernel.append(vec)
    return particular, kernel


def artin_schreier_roots(c):
    """The complete set {y in F : y^2 + y = c}; empty or a pair {y, y+1}."""
    f = c.field
    if c.is_zero():
        return {RatFun.zero(f), RatFun.one(f)}
    p, q = c.num, c.den
    v = q.sqrt()
    if v is None:
        return set()
    vval = v.val
    n = f.k * (p.degree() + 1)
    cols = [_psqr(f, 1 << j) ^ _pmul(f, 1 << j, vval) for j in range(n)]
    sol = solve_affine_gf2(cols, p.val)
    if sol is None:
        return set()
    particular, kernel = sol
    if len(kernel) > 1:
        # kernel elements satisfy u(u+v) = 0, so u in {0, v}: dim <= 1
        raise InvariantViolation("Artin-Schreier kernel larger than expected")
    candidates = {particular}
    for vec in kernel:
        candidates.add(particular ^ vec)
    out = set()
    for u in candidates:
        y = RatFun(Poly(f, u), v)
        if y.square() + y == c:
            out.add(y)
    return out


def quadratic_roots(a, b, c):
    """The complete set {s in F : a*s^2 + b*s + c = 0}.

    The all-zero equation is rejected (IdentityEquationError): callers never
    produce it legitimately and answering "all of F" would mask bugs.
    """
    az, bz, cz = a.is_zero(), b.is_zero(), c.is_zero()
    if az and bz:
        if cz:
            raise IdentityEquationError("0 = 0 quadratic; every s solves it")
        return set()
    if az:
        return {c / b}
    if bz:
        r = (c / a).sqrt()
        return set() if r is None else {r}
    # s = (b/a) w turns it into w^2 + w = ac/b^2
    t = b / a
    ws = artin_schreier_roots(a * c / b.square())
    return {t * w for w in ws}


def _lcm(a, b):
    return a * (b // a.gcd(b))


def rational_roots(coeffs, budget=DEFAULT_DIVISOR_BUDGET):
    """All F-roots of sum coeffs[i] * s^i, degree <= 4, coefficients in F."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    if not coeffs:
        raise ZeroPolynomialError("root finding on the zero polynomial")
    if len(coeffs) - 1 > 4:
        raise ValueError("degree above 4 is out of scope")
    f = coeffs[0].field
    roots = set()
    if len(coeffs) == 1:
        return roots
    den = Poly(f, 1)
    for cf in coeffs:
        den = _lcm(den, cf.den)
    polys = [cf.num * (den // cf.den) for cf in coeffs]
    content = Poly(f, 0)
    for pl in polys:
        content = content.gcd(pl)
    if content.degree():
        polys = [pl // content for pl in polys]
    m = 0
    while polys[m].val == 0:
        m += 1
    if m:
        roots.add(RatFun.zero(f))
        polys = polys[m:]
    deg = len(polys) - 1
    if deg == 0:
        return roots
    numerators = polys[0].monic_divisors(budget)
    denominators = polys[-1].monic_divisors(budget)
    units = list(range(1, f.order))
    pvals = [pl.val for pl in polys]
    for v in denominators:
        vpow = [1]
        for _ in range(deg):
            vpow.append(_pmul(f, vpow[-1], v.val))
        for u in numerators:
            upow = [1]
            for _ in range(deg):
                upow.append(_pmul(f, upow[-1], u.val))
            # homogeneous evaluation: sum a_i u^i v^(deg-i), one per unit e:
            # the u^i term picks up e^i
            terms = [_pmul(f, _pmul(f, pvals[i], upow[i]), vpow[deg - i])
                     for i in range(deg + 1)]
            for unit in units:
                total = 0
                epow = 1
                for i in range(deg + 1):
                    total ^= _scale(f, terms[i], epow)
                    epow = f.mul(epow, unit)
                if total == 0:
                    roots.add(RatFun(Poly(f, _scale(f, u.val, unit)), v))
    return roots


class QuadExt:
    """A quadratic field extension K = F[w] with w^2 + w = alpha.

    Valid only when alpha has no Artin-Schreier root in F (checked at
    construction); elements are (u0, u1) pairs over F meaning u0 + u1*w.
    """

    __slots__ = ("alpha",)

    def __init__(self, alpha):
        if artin_schreier_roots(alpha):
            raise SplitAlgebraError(
                "w^2 + w = alpha already splits over F; K is not a field")
        self.alpha = alpha

    @property
    def field(self):
        return self.alpha.field

    def zero(self):
        z = RatFun.zero(self.field)
        return (z, z)

    def one(self):
        return (RatFun.one(self.field), RatFun.zero(self.field))

    def add(self, u, v):
        return (u[0] + v[0], u[1] + v[1])

    def mul(self, u, v):
        a0, a1 = u
        b0, b1 = v
        cross = a1 * b1
        return (a0 * b0 + cross * self.alpha, a0 * b1 + a1 * b0 + cross)

    def conj(self, u):
        return (u[0] + u[1], u[1])

    def norm(self, u):
        return u[0].square() + u[0] * u[1] + u[1].square() * self.alpha

    def inverse(self, u):
        n = self.norm(u)
        if n.is_zero():
            raise ZeroDivisionError("inverse of zero in quadratic extension")
        ninv = n.inverse()
        c = self.conj(u)
        return (c[0] * ninv, c[1] * ninv)

    def is_zero(self, u):
        return u[0].is_zero() and u[1].is_zero()

    def solve_quadratic(self, mu, nu):
        """All z in K with z^2 + mu*z + nu = 0, sorted deterministically."""
        candidates = []
        if self.is_zero(mu):
            # componentwise: z = p + q*w needs q^2 = nu1, p^2 = nu0 + q^2*alpha
            q = nu[1].sqrt()
            if q is not None:
                p = (nu[0] + nu[1] * self.alpha).sqrt()
                if p is not None:
                    candidates.append((p, q))
        else:
            minv = self.inverse(mu)
            c = self.mul(nu, self.mul(minv, minv))
            c0, c1 = c
            for y1 in artin_schreier_roots(c1):
                rhs = c0 + y1.square() * self.alpha
                for y0 in artin_schreier_roots(rhs):
                    candidates.append(self.mul(mu, (y0, y1)))
        out = []
        seen = set()
        for z in candidates:
            key = (z[0].sort_key(), z[1].sort_key())
            if key in seen:
                continue
            seen.add(key)
            check = self.add(self.add(self.mul(z, z), self.mul(mu, z)), nu)
            if self.is_zero(check):
                out.append(z)
        out.sort(key=lambda z: (z[0].sort_key(), z[1].sort_key()))
        if len(out) > 2:
            raise InvariantViolation("quadratic over a field with > 2 roots")
        return out


class QuadraticForm:
    """A sparse quadratic-plus-linear form over at most three F-variables.

    Terms are (kind, vars, coeff) with kind one of "sq", "lin", "cross",
    "const"; at most one cross term is allowed, and the bounded witness
    search enumerates the second variable of that pair.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms):
        self.variables = tuple(variables)
        if len(self.variables) > 3:
            raise UnsupportedFormShape("more than three variables")
        if len(set(self.variables)) != len(self.variables):
            raise UnsupportedFormShape("repeated variable name")
        norm_terms = []
        cross_seen = False
        for kind, vs, coeff in terms:
            vs = tuple(vs)
            if kind in ("sq", "lin"):
                if len(vs) != 1 or vs[0] not in self.variables:
                    raise UnsupportedFormShape(f"bad {kind} term {vs}")
            elif kind == "cross":
                if cross_seen:
                    raise UnsupportedFormShape("more than one cross term")
                if len(vs) != 2 or vs[0] == vs[1] or not set(vs) <= set(self.variables):
                    raise UnsupportedFormShape(f"bad cross term {vs}")
                cross_seen = True
            elif kind == "const":
                if vs:
                    raise UnsupportedFormShape("const term with variables")
            else:
                raise UnsupportedFormShape(f"unknown term kind {kind!r}")
            norm_terms.append((kind, vs, coeff))
        self.terms = tuple(norm_terms)

    def cross_pair(self):
        for kind, vs, _ in self.terms:
            if kind == "cross":
                return vs
        return None

    def evaluate(self, assignment):
        total = None
        for kind, vs, coeff in self.terms:
            if kind == "sq":
                val = coeff * assignment[vs[0]].square()
            elif kind == "lin":
                val = coeff * assignment[vs[0]]
            elif kind == "cross":
                val = coeff * assignment[vs[0]] * assignment[vs[1]]
            else:
                val = coeff
            total = val if total is None else total + val
        return total


def bounded_witness(form, target, bound, accept=None):
    """Search for polynomial assignments of degree <= bound satisfying the form.

    The cross-pair's second variable is enumerated over all polynomials of
    degree <= bound with constant-field coefficients; for each value the
    residual is GF(2)-affine in the coefficient bits of the remaining
    variables and solved exactly. A returned assignment re-evaluates to the
    target exactly; None is only "nothing within this bound". When `accept`
    is given, the affine solution space is walked (deterministically, capped)
    until an accepted assignment appears.
    """
    f = target.field
    den = target.den
    for _, _, coeff in form.terms:
        den = _lcm(den, coeff.den)
    lam = {}
    for idx, (kind, vs, coeff) in enumerate(form.terms):
        lam[idx] = (coeff.num * (den // coeff.den)).val
    rhs_base = (target.num * (den // target.den)).val

    pair = form.cross_pair()
    enum_var = pair[1] if pair else None
    unknowns = [v for v in form.variables if v != enum_var]
    nbits = f.k * (bound + 1)
    enum_range = range(1 << nbits) if enum_var is not None else (None,)

    for ev in enum_range:
        rhs = rhs_base
        cols = [0] * (nbits * len(unknowns))
        ok = True
        for idx, (kind, vs, _) in enumerate(form.terms):
            lv = lam[idx]
            if kind == "const":
                rhs ^= lv
                continue
            if kind == "cross":
                other = vs[0] if vs[1] == enum_var else vs[1]
                mult = _pmul(f, lv, ev)
                base = unknowns.index(other) * nbits
                for j in range(nbits):
                    cols[base + j] ^= _pmul(f, mult, 1 << j)
                continue
            var = vs[0]
            if var == enum_var:
                contrib = _psqr(f, ev) if kind == "sq" else ev
                rhs ^= _pmul(f, lv, contrib)
                continue
            base = unknowns.index(var) * nbits
            for j in range(nbits):
                e = 1 << j
                contrib = _psqr(f, e) if kind == "sq" else e
                cols[base + j] ^= _pmul(f, lv, contrib)
        if not ok:
            continue
        sol = solve_affine_gf2(cols, rhs)
        if sol is None:
            continue
        particular, kernel = sol
        walk = min(1 << len(kernel), _KERNEL_WALK_CAP) if accept else 1
        for mask in range(walk):
            vec = particular
            mm = mask
            ki = 0
            while mm:
                if mm & 1:
                    vec ^= kernel[ki]
                mm >>= 1
                ki += 1
            assignment = {}
            for ui, var in enumerate(unknowns):
                chunk = (vec >> (ui * nbits)) & ((1 << nbits) - 1)
                assignment[var] = RatFun.of(Poly(f, chunk))
            if enum_var is not None:
                assignment[enum_var] = RatFun.of(Poly(f, ev))
            if form.evaluate(assignment) != target:
                raise InvariantViolation("affine witness failed exact re-evaluation")
            if accept is None or accept(assignment):
                return assignment
    return None
