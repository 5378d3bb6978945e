"""Exact arithmetic in Z[beta] for a real algebraic-integer base beta > 1.

The base is given by its monic irreducible minimal polynomial f of degree
d >= 2 together with a rational isolating interval (lo, hi), lo > 1,
bracketing exactly one real root.  Elements of Z[beta] are integer vectors
of length d in the power basis 1, beta, ..., beta**(d-1); since f is the
minimal polynomial, the vector representation is unique, so equality of
values is equality of vectors.

A :class:`QuotientValue` represents beta**(-e) * (c_0 + c_1 beta + ... +
c_{d-1} beta**(d-1)) with a non-negative integer scale e.  Every digit
string evaluates to such a value, and exact equality of two values is
decided by cross-multiplying the scales and comparing vectors.  This is the
oracle every conversion in the package is verified against.

Certified comparisons (floors, signs) use dyadic interval enclosures of the
powers of beta obtained by bisection of f, with precision escalated until
the enclosure decides the question; exact vector tests settle the boundary
cases, so floors always terminate.

All classes are immutable after construction and all functions are pure;
everything here is safe to share between threads without locking.
"""

from __future__ import annotations

from fractions import Fraction

from .digits import DigitString

_SIGN_BITS_START = 64
_SIGN_BITS_LIMIT = 1 << 14


class RationalInterval:
    """Closed rational interval [lo, hi]."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise ValueError("empty interval")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("RationalInterval is immutable")

    @property
    def width(self):
        return self.hi - self.lo

    def __contains__(self, x):
        return self.lo <= x <= self.hi

    def __repr__(self):
        return "RationalInterval(%s, %s)" % (self.lo, self.hi)


class MinimalPolynomial:
    """Monic integer polynomial, coefficients highest degree first, d >= 2.

    Irreducibility is asserted by the caller and only spot-checked: a
    rational (hence integer) root is always rejected, which is a complete
    irreducibility test up to degree 3.  Full factorization is out of scope.
    """

    __slots__ = ("coefficients", "degree")

    def __init__(self, coefficients):
        coeffs = tuple(int(c) for c in coefficients)
        if len(coeffs) < 3:
            raise ValueError("degree must be at least 2")
        if coeffs[0] != 1:
            raise ValueError("polynomial must be monic")
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "degree", len(coeffs) - 1)
        if coeffs[-1] == 0:
            raise ValueError("X divides the polynomial; not irreducible")
        for r in _divisors(abs(coeffs[-1])):
            if self.eval_int(r) == 0 or self.eval_int(-r) == 0:
                raise ValueError("rational root %d; polynomial is reducible" % r)

    def __setattr__(self, name, value):
        raise AttributeError("MinimalPolynomial is immutable")

    def eval_int(self, x):
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def eval_fraction(self, x):
        x = Fraction(x)
        acc = Fraction(0)
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def sign_at_dyadic(self, num, bits):
        """Sign of f(num / 2**bits), computed exactly in integers."""
        d = self.degree
        acc = 0
        for j, c in enumerate(self.coefficients):
            acc += c * num ** (d - j) * (1 << (bits * j))
        return (acc > 0) - (acc < 0)

    def reduction_vector(self):
        """Vector r with beta**d = sum r[i] * beta**i (ascending)."""
        coeffs = self.coefficients
        d = self.degree
        return tuple(-coeffs[d - i] for i in range(d))

    def derivative_coefficients(self):
        d = self.degree
        return tuple(c * (d - j) for j, c in enumerate(self.coefficients[:-1]))

    def __eq__(self, other):
        return isinstance(other, MinimalPolynomial) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return "MinimalPolynomial(%r)" % (list(self.coefficients),)

    def __str__(self):
        terms = []
        d = self.degree
        for j, c in enumerate(self.coefficients):
            if c == 0:
                continue
            p = d - j
            mono = "X^%d" % p if p > 1 else ("X" if p == 1 else "")
            if p == 0:
                terms.append("%+d" % c)
            elif c == 1:
                terms.append("+" + mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append("%+d%s" % (c, mono))
        out = "".join(terms)
        return out[1:] if out.startswith("+") else out


def _divisors(n):
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


class BetaBase:
    """A real algebraic-integer base beta > 1.

    Holds the minimal polynomial, a rational isolating interval with
    lo > 1 and a sign change across it, cached reduced power vectors of
    beta, and cached dyadic enclosures of the powers at escalating
    precision.  The cached state only ever tightens; results never depend
    on how far the cache has been refined.
    """

    def __init__(self, poly, isolating_interval, name=None):
        if not isinstance(poly, MinimalPolynomial):
            poly = MinimalPolynomial(poly)
        lo, hi = isolating_interval
        lo = Fraction(lo)
        hi = Fraction(hi)
        if not lo > 1:
            raise ValueError("isolating interval must have lo > 1")
        slo = _fraction_sign(poly.eval_fraction(lo))
        shi = _fraction_sign(poly.eval_fraction(hi))
        if slo == 0 or shi == 0 or slo == shi:
            raise ValueError("isolating interval endpoints must straddle a root")
        self.poly = poly
        self.interval = RationalInterval(lo, hi)
        self.name = name
        self.degree = poly.degree
        self._red = poly.reduction_vector()
        self._sign_at_lo = slo
        self._powvecs = [tuple([1] + [0] * (poly.degree - 1))]
        # dyadic cache: beta in [num, num+1] / 2**bits, plus power enclosures
        self._dy_bits = 0
        self._dy_num = None
        self._dy_powers = {}
        self._refine_dyadic(_SIGN_BITS_START)

    # -- exact vector arithmetic -------------------------------------------

    def zero_vector(self):
        return (0,) * self.degree

    def unit_vector(self):
        return self._powvecs[0]

    def shift_vector(self, v):
        """Vector of beta * value(v), reduced by the minimal polynomial."""
        red = self._red
        d = self.degree
        c = v[-1]
        if c:
            return tuple((v[i - 1] if i else 0) + c * red[i] for i in range(d))
        return (0,) + v[:-1]

    def power_vector(self, n):
        """Reduced vector of beta**n, n >= 0; cached."""
        pv = self._powvecs
        while len(pv) <= n:
            pv.append(self.shift_vector(pv[-1]))
        return pv[n]

    def mul_power(self, v, n):
        for _ in range(n):
            v = self.shift_vector(v)
        return v

    def divide_by_beta(self, v):
        """Vector w with beta * value(w) = value(v), or None if not in Z[beta]."""
        red = self._red
        d = self.degree
        a0 = red[0]
        top, rem = divmod(v[0], a0)
        if rem:
            return None
        w = [0] * d
        w[d - 1] = top
        for i in range(1, d):
            w[i - 1] = v[i] - top * red[i]
        return tuple(w)

    # -- dyadic enclosures ---------------------------------------------------

    def _refine_dyadic(self, bits):
        if bits <= self._dy_bits:
            return
        iv = self.interval
        lo_num = (iv.lo.numerator << bits) // iv.lo.denominator
        hi_num = -((-iv.hi.numerator << bits) // iv.hi.denominator)
        slo = self._sign_at_lo
        while hi_num - lo_num > 1:
            mid = (lo_num + hi_num) // 2
            s = self.poly.sign_at_dyadic(mid, bits)
            if s == 0 or s == slo:
                lo_num = mid
            else:
                hi_num = mid
        self._dy_bits = bits
        self._dy_num = lo_num
        self._dy_powers = {}

    def _powers_dyadic(self, bits, n):
        """Integer enclosures [plo[i], phi[i]] / 2**bits of beta**i, i <= n."""
        self._refine_dyadic(bits)
        bits = self._dy_bits
        cache = self._dy_powers.get(bits)
        if cache is None:
            one = 1 << bits
            cache = ([one], [one])
            self._dy_powers[bits] = cache
        plo, phi = cache
        blo = self._dy_num
        bhi = blo + 1
        while len(plo) <= n:
            plo.append((plo[-1] * blo) >> bits)
            phi.append(-((-phi[-1] * bhi) >> bits))
        return plo, phi, bits

    def _value_enclosure(self, v, bits):
        """Integer pair (L, H) with value(v) in [L, H] / 2**bits."""
        plo, phi, bits = self._powers_dyadic(bits, len(v) - 1)
        L = H = 0
        for i, c in enumerate(v):
            if c > 0:
                L += c * plo[i]
                H += c * phi[i]
            elif c < 0:
                L += c * phi[i]
                H += c * plo[i]
        return L, H, bits

    def sign_of_vector(self, v):
        """Certified sign of value(v); exact zero test first, so this terminates."""
        if not any(v):
            return 0
        bits = _SIGN_BITS_START
        while True:
            L, H, bits = self._value_enclosure(v, bits)
            if L > 0:
                return 1
            if H < 0:
                return -1
            bits *= 2
            if bits > _SIGN_BITS_LIMIT:  # minimal polynomial guarantees value != 0
                raise RuntimeError("sign undecided at precision limit: %r" % (v,))

    def floor_of_vector(self, v, scale=0):
        """Exact floor of beta**(-scale) * value(v)."""
        # dyadic estimate first; the exact adjustment below certifies it
        L, H, bits = self._value_enclosure(v, _SIGN_BITS_START)
        if scale:
            plo, phi, bits = self._powers_dyadic(bits, scale)
            n = L // phi[scale] if L >= 0 else L // plo[scale]
        else:
            n = L >> bits
        pw = self.power_vector(scale)
        while True:
            diff = tuple(v[i] - (n + 1) * pw[i] for i in range(self.degree))
            s = self.sign_of_vector(diff)
            if s < 0:
                break
            n += 1
            if s == 0:
                return n
        while True:
            diff = tuple(v[i] - n * pw[i] for i in range(self.degree))
            if self.sign_of_vector(diff) >= 0:
                return n
            n -= 1

    def float_value(self, v, scale=0):
        """Double-precision approximation of beta**(-scale)*value(v) (reporting only)."""
        L, H, bits = self._value_enclosure(v, 128)
        x = (L + H) / 2.0 / (1 << bits)
        return x / (self.beta_float() ** scale)

    def beta_float(self):
        self._refine_dyadic(_SIGN_BITS_START)
        return (2 * self._dy_num + 1) / 2.0 / (1 << self._dy_bits)

    def __eq__(self, other):
        # same polynomial AND overlapping isolating intervals: a polynomial
        # can have several real roots > 1, and intervals isolating the same
        # root always intersect (both contain it) while intervals isolating
        # different roots cannot
        return (isinstance(other, BetaBase) and self.poly == other.poly
                and self.interval.lo <= other.interval.hi
                and other.interval.lo <= self.interval.hi)

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        if self.name:
            return "BetaBase(%s)" % self.name
        return "BetaBase(%s)" % self.poly


def _fraction_sign(x):
    return (x > 0) - (x < 0)


class QuotientValue:
    """beta**(-scale) * (c_0 + c_1 beta + ... + c_{d-1} beta**(d-1)), scale >= 0.

    Canonical form: the scale is minimal (the vector is not divisible by
    beta while the scale is positive) and zero has scale 0.  With the scale
    canonical, equal values have equal (coeffs, scale) pairs, but
    :func:`values_equal` decides equality by cross-multiplication anyway.
    """

    __slots__ = ("base", "coeffs", "scale")

    def __init__(self, base, coeffs, scale=0):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != base.degree:
            raise ValueError("coefficient vector must have length %d" % base.degree)
        if scale < 0:
            raise ValueError("scale must be non-negative")
        if not any(coeffs):
            scale = 0
        else:
            while scale > 0:
                w = base.divide_by_beta(coeffs)
                if w is None:
                    break
                coeffs = w
                scale -= 1
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "scale", scale)

    def __setattr__(self, name, value):
        raise AttributeError("QuotientValue is immutable")

    @classmethod
    def from_int(cls, base, n):
        return cls(base, (n,) + (0,) * (base.degree - 1))

    @classmethod
    def beta_power(cls, base, n):
        """The value beta**n for any integer n (negative n raises the scale)."""
        if n >= 0:
            return cls(base, base.power_vector(n))
        return cls(base, base.unit_vector(), -n)

    def is_zero(self):
        return not any(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, QuotientValue) and self.base == other.base
                and self.coeffs == other.coeffs and self.scale == other.scale)

    def __hash__(self):
        return hash((self.coeffs, self.scale))

    def __repr__(self):
        return "QuotientValue(%r, scale=%d)" % (list(self.coeffs), self.scale)

    def __float__(self):
        return self.base.float_value(self.coeffs, self.scale)


def _check_same_base(a, b):
    if a.base != b.base:
        raise ValueError("values live over different bases: %r vs %r" % (a.base, b.base))


def qv_add(a, b):
    """Exact sum; the result is canonical over the common base."""
    _check_same_base(a, b)
    base = a.base
    e = max(a.scale, b.scale)
    va = base.mul_power(a.coeffs, e - a.scale)
    vb = base.mul_power(b.coeffs, e - b.scale)
    return QuotientValue(base, tuple(x + y for x, y in zip(va, vb)), e)


def qv_neg(a):
    return QuotientValue(a.base, tuple(-c for c in a.coeffs), a.scale)


def qv_sub(a, b):
    return qv_add(a, qv_neg(b))


def qv_mul_int(a, n):
    return QuotientValue(a.base, tuple(n * c for c in a.coeffs), a.scale)


def qv_mul_beta_pow(a, n):
    """Exact product value(a) * beta**n; negative n increases the scale."""
    if n == 0:
        return a
    if n > 0:
        if n <= a.scale:
            return QuotientValue(a.base, a.coeffs, a.scale - n)
        v = a.base.mul_power(a.coeffs, n - a.scale)
        return QuotientValue(a.base, v, 0)
    return QuotientValue(a.base, a.coeffs, a.scale - n)


def values_equal(a, b):
    """True iff value(a) = value(b), decided exactly.

    Cross-multiplying the scales reduces the question to equality of two
    integer vectors, which is valid because f is the minimal polynomial of
    beta (the power basis is Q-linearly independent).
    """
    _check_same_base(a, b)
    base = a.base
    va = base.mul_power(a.coeffs, b.scale)
    vb = base.mul_power(b.coeffs, a.scale)
    return va == vb


def qv_sign(a):
    """Certified sign of the value (-1, 0, +1)."""
    return a.base.sign_of_vector(a.coeffs)


def qv_compare(a, b):
    """Certified three-way comparison of values."""
    return qv_sign(qv_sub(a, b))


def eval_digit_string(s, base):
    """Exact value of sum s_j beta**j as a QuotientValue.

    The scale of the result equals the number of fractional positions of s
    (before canonical reduction).
    """
    if not isinstance(s, DigitString):
        raise TypeError("expected DigitString")
    v = base.zero_vector()
    unit = base.unit_vector()
    for d in s.digits:
        v = base.shift_vector(v)
        if d:
            v = tuple(v[i] + d * unit[i] for i in range(base.degree))
    if s.is_zero():
        return QuotientValue(base, v)
    lsd = s.lsd_exponent
    if lsd >= 0:
        return QuotientValue(base, base.mul_power(v, lsd))
    return QuotientValue(base, v, -lsd)


def refine_beta(base, target_width):
    """Interval of width <= target_width containing beta, by sign bisection.

    Returns a new interval; the base's stored interval is not mutated.
    """
    target_width = Fraction(target_width)
    if target_width <= 0:
        raise ValueError("target_width must be positive")
    lo, hi = base.interval.lo, base.interval.hi
    slo = base._sign_at_lo
    while hi - lo > target_width:
        mid = (lo + hi) / 2
        s = _fraction_sign(base.poly.eval_fraction(mid))
        if s == 0:
            # mid is a rational root; excluded at construction time
            raise RuntimeError("rational root inside isolating interval")
        if s == slo:
            lo = mid
        else:
            hi = mid
    return RationalInterval(lo, hi)


def certified_floor(v, base=None):
    """Exact floor of the real value of v.

    Interval arithmetic is tightened until the enclosure of value(v)
    contains no integer in its interior; exact integer detection (vector
    comparison against n * beta**scale) settles boundary cases, so the
    procedure always terminates.
    """
    if base is not None and v.base != base:
        raise ValueError("value does not live over the given base")
    return v.base.floor_of_vector(v.coeffs, v.scale)


def certified_ceil(v):
    f = certified_floor(v)
    if values_equal(v, QuotientValue.from_int(v.base, f)):
        return f
    return f + 1


def self_reciprocal(poly):
    """True iff the coefficient list is palindromic or anti-palindromic.

    A real algebraic integer with a conjugate on the unit circle forces its
    minimal polynomial to equal plus or minus its own reciprocal, so this is
    a cheap necessary-condition detector (never a proof).
    """
    if not isinstance(poly, MinimalPolynomial):
        poly = MinimalPolynomial(poly)
    c = poly.coefficients
    rev = tuple(reversed(c))
    return c == rev or c == tuple(-x for x in rev)


def root_moduli(poly, eps=Fraction(1, 10 ** 8), max_precision=2000):
    """Certified enclosures of the moduli of all complex roots of poly.

    Roots are approximated numerically (mpmath) and validated a posteriori:
    for any point z, the disc around z of radius d*|f(z)/f'(z)| contains at
    least one root, and d pairwise disjoint such discs match the d roots
    bijectively.  Returns a list of (modulus_lo, modulus_hi) Fraction pairs
    of width <= eps sorted increasingly, with None marking a root whose
    enclosure could not be certified within the precision budget.  This is
    a reporter: an enclosure straddling 1 is evidence, never a proof, of a
    unit-circle conjugate.
    """
    import mpmath as mp

    if not isinstance(poly, MinimalPolynomial):
        poly = MinimalPolynomial(poly)
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    d = poly.degree
    coeffs = [mp.mpf(c) for c in poly.coefficients]
    dcoeffs = [mp.mpf(c) for c in poly.derivative_coefficients()]
    dps = 40
    while dps <= max_precision:
        with mp.workdps(dps):
            try:
                roots = mp.polyroots(coeffs, maxsteps=200, extraprec=4 * dps)
            except mp.libmp.libhyper.NoConvergence:
                dps *= 2
                continue
            entries = []
            ok = True
            for z in roots:
                fz = mp.polyval(coeffs, z)
                dfz = mp.polyval(dcoeffs, z)
                if dfz == 0:
                    ok = False
                    break
                # the disc of radius d*|f/f'| around z contains a root; pad
                # generously for evaluation and representation rounding
                rad = 2 * d * abs(fz / dfz) + mp.ldexp(abs(z) + 1, -(mp.mp.prec - 8))
                if 2 * rad > mp.mpf(eps.numerator) / eps.denominator:
                    ok = False
                    break
                entries.append((z, rad))
            if ok:
                for i in range(len(entries)):
                    for j in range(i + 1, len(entries)):
                        zi, ri = entries[i]
                        zj, rj = entries[j]
                        if abs(zi - zj) <= ri + rj:
                            ok = False
            if ok:
                out = []
                for z, rad in entries:
                    m = abs(z)
                    lo = _mpf_to_fraction(m - rad)
                    hi = _mpf_to_fraction(m + rad)
                    out.append((max(lo, Fraction(0)), hi))
                out.sort(key=lambda p: p[0])
                return out
        dps *= 2
    return [None] * d


def _mpf_to_fraction(x):
    import mpmath as mp

    sign, man, exp, _ = mp.mpf(x)._mpf_
    if man == 0:
        return Fraction(0)
    # binary floats convert exactly, no rounding direction to worry about
    return Fraction(-man if sign else man) * Fraction(2) ** exp


# -- presets -----------------------------------------------------------------

def fibonacci_base():
    return dbonacci_base(2)


def tribonacci_base():
    return dbonacci_base(3)


def dbonacci_base(d):
    """Root > 1 of X^d = X^(d-1) + ... + X + 1; lies in (3/2, 2) for d >= 2."""
    if d < 2:
        raise ValueError("d-bonacci needs d >= 2")
    coeffs = [1] + [-1] * d
    name = {2: "fibonacci", 3: "tribonacci"}.get(d, "dbonacci:%d" % d)
    return BetaBase(coeffs, (Fraction(3, 2), Fraction(2)), name=name)


def quadratic_plus_base(a, b):
    """Positive root of X**2 = a X + b, 1 <= b <= a; lies in (a, a+1)."""
    if not (1 <= b <= a):
        raise ValueError("quadratic-plus needs 1 <= b <= a")
    lo = Fraction(a) if a >= 2 else Fraction(5, 4)
    return BetaBase([1, -a, -b], (lo, Fraction(a + b)), name="quadratic-plus:%d,%d" % (a, b))


def quadratic_minus_base(a, b):
    """Larger root of X**2 = a X - b, a >= b+2 >= 3; lies in (a-1, a)."""
    if not (b >= 1 and a >= b + 2):
        raise ValueError("quadratic-minus needs b >= 1 and a >= b + 2")
    return BetaBase([1, -a, b], (Fraction(a - 1), Fraction(a)), name="quadratic-minus:%d,%d" % (a, b))


def base_from_spec(spec):
    """Resolve a base preset name or raw coefficient list.

    Accepted forms: ``fibonacci``, ``tribonacci``, ``dbonacci:d``,
    ``quadratic-plus:a,b``, ``quadratic-minus:a,b``, or a comma-separated
    monic coefficient list highest degree first such as ``1,-1,-1``.
    """
    spec = spec.strip().lower()
    if spec == "fibonacci":
        return fibonacci_base()
    if spec == "tribonacci":
        return tribonacci_base()
    if spec.startswith("dbonacci:"):
        return dbonacci_base(int(spec.split(":", 1)[1]))
    if spec.startswith("quadratic-plus:"):
        a, b = (int(t) for t in spec.split(":", 1)[1].split(","))
        return quadratic_plus_base(a, b)
    if spec.startswith("quadratic-minus:"):
        a, b = (int(t) for t in spec.split(":", 1)[1].split(","))
        return quadratic_minus_base(a, b)
    try:
        coeffs = [int(t) for t in spec.split(",")]
    except ValueError:
        raise ValueError("unknown base spec %r" % spec) from None
    return BetaBase(coeffs, _bracket_dominant_root(MinimalPolynomial(coeffs)))


def _bracket_dominant_root(poly):
    """Bracket the largest real root > 1 by grid search plus sign change.

    Good enough for the presets' cousins; callers with awkward polynomials
    should pass an explicit isolating interval to BetaBase.
    """
    bound = 1 + max(abs(c) for c in poly.coefficients[1:])
    step = Fraction(1)
    for _ in range(12):
        x = Fraction(bound)
        fx = poly.eval_fraction(x)
        while x - step > 1:
            y = x - step
            fy = poly.eval_fraction(y)
            if fy == 0:
                break
            if (fy > 0) != (fx > 0):
                return (y, x)
            x, fx = y, fy
        step /= 2
    raise ValueError("could not isolate a real root > 1; supply an interval")
