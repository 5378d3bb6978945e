"""Greedy (Renyi) expansions, d_beta(1), Parry classification, admissibility.

The greedy expansion of x in [0, 1) is produced digit by digit by
x_j = floor(beta * r_{j-1}), r_j = beta * r_{j-1} - x_j, with exact
remainders in Z[beta]; digits land in the canonical alphabet
{0, ..., ceil(beta) - 1}.  Applied to 1 this yields d_beta(1), whose
eventual periodicity (detected by exact remainder repetition) classifies
beta as a simple or non-simple Parry number.  Admissibility of a digit
sequence means every suffix is strictly lexicographically below the
quasi-greedy expansion d*_beta(1).

Eventually periodic strings serialize as ``pre(per)``, e.g. ``2(1)``;
digits are concatenated when all fit in 0..9 and comma-separated otherwise.

Everything here is pure and immutable; see :mod:`betapar.algebraic` for the
exact-arithmetic layer.
"""

from __future__ import annotations

from math import gcd
from typing import NamedTuple

from .algebraic import (
    QuotientValue,
    certified_floor,
    eval_digit_string,
    qv_compare,
    qv_mul_beta_pow,
    qv_sign,
    qv_sub,
)
from .digits import Alphabet, DigitString

F = "F"
PF = "PF"
INCONCLUSIVE = "inconclusive"

DEFAULT_MAX_STEPS = 10000


class EventuallyPeriodicString:
    """Digit sequence pre . per^omega; empty period means a finite string.

    Normal form: the period is primitive (not a proper power) and the
    preperiod is minimal (its last digit differs from the period's last
    digit).  Normalization only changes the (preperiod, period) presentation,
    never the underlying sequence.
    """

    __slots__ = ("preperiod", "period")

    def __init__(self, preperiod, period=()):
        pre = list(int(d) for d in preperiod)
        per = list(int(d) for d in period)
        if per:
            for q in range(1, len(per) + 1):
                if len(per) % q == 0 and per == per[:q] * (len(per) // q):
                    per = per[:q]
                    break
            while pre and pre[-1] == per[-1]:
                pre.pop()
                per = [per[-1]] + per[:-1]
        object.__setattr__(self, "preperiod", tuple(pre))
        object.__setattr__(self, "period", tuple(per))

    def __setattr__(self, name, value):
        raise AttributeError("EventuallyPeriodicString is immutable")

    def is_finite(self):
        return not self.period

    def digit_at(self, i):
        """0-based digit t_{i+1}; positions beyond a finite string are 0."""
        if i < len(self.preperiod):
            return self.preperiod[i]
        if not self.period:
            return 0
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def suffix(self, k):
        """The sequence shifted left by k positions, as a normalized string."""
        if k <= len(self.preperiod):
            return EventuallyPeriodicString(self.preperiod[k:], self.period)
        if not self.period:
            return EventuallyPeriodicString(())
        r = (k - len(self.preperiod)) % len(self.period)
        return EventuallyPeriodicString((), self.period[r:] + self.period[:r])

    def distinct_suffixes(self):
        """All distinct suffixes: one per preperiod position plus the rotations."""
        out = [self.suffix(k) for k in range(len(self.preperiod))]
        if self.period:
            out.extend(self.suffix(len(self.preperiod) + r) for r in range(len(self.period)))
        else:
            out.append(EventuallyPeriodicString(()))
        return out

    def __eq__(self, other):
        return (isinstance(other, EventuallyPeriodicString)
                and self.preperiod == other.preperiod and self.period == other.period)

    def __hash__(self):
        return hash((self.preperiod, self.period))

    def __repr__(self):
        return "EventuallyPeriodicString(%r, %r)" % (self.preperiod, self.period)

    def __str__(self):
        return format_eventually_periodic(self)


def format_eventually_periodic(s):
    digits = list(s.preperiod) + list(s.period)
    compact = all(0 <= d <= 9 for d in digits)

    def fmt(part):
        return "".join(str(d) for d in part) if compact else ",".join(str(d) for d in part)

    out = fmt(s.preperiod)
    if s.period:
        out += "(" + fmt(s.period) + ")"
    return out


def parse_eventually_periodic(text):
    """Parse ``pre(per)`` with digits concatenated (0..9) or comma-separated."""
    text = text.strip()

    def digits_of(part):
        part = part.strip()
        if not part:
            return ()
        if "," in part or "-" in part:
            return tuple(int(t) for t in part.split(","))
        return tuple(int(ch) for ch in part)

    if "(" in text:
        if not text.endswith(")"):
            raise ValueError("malformed eventually periodic string %r" % text)
        pre, per = text[:-1].split("(", 1)
        return EventuallyPeriodicString(digits_of(pre), digits_of(per))
    return EventuallyPeriodicString(digits_of(text))


def lex_compare(x, y):
    """Three-way lexicographic comparison of eventually periodic sequences.

    Proof sketch for the decision horizon: let P = max(|pre_x|, |pre_y|).
    Beyond position P both sequences are periodic, with periods |per_x| and
    |per_y|, hence both are also periodic with period L = lcm of the two
    (a finite string counts as period 1, being 0^omega).  Suppose the
    sequences agree on all positions < P + L.  For n >= P + L, both
    x_n = x_{n-L} and y_n = y_{n-L} since n - L >= P, so by induction on n
    they agree at every position.  Contrapositive: the first disagreement,
    if any, occurs at some position < P + L, so examining P + L positions
    decides the order (one extra position is examined out of caution).
    """
    px = len(x.preperiod)
    py = len(y.preperiod)
    lx = len(x.period) or 1
    ly = len(y.period) or 1
    horizon = max(px, py) + (lx * ly) // gcd(lx, ly) + 1
    for i in range(horizon):
        a = x.digit_at(i)
        b = y.digit_at(i)
        if a != b:
            return -1 if a < b else 1
    return 0


def canonical_alphabet(base):
    """{0, ..., ceil(beta) - 1}; for our irrational bases the max is floor(beta)."""
    beta = QuotientValue.beta_power(base, 1)
    return Alphabet(0, certified_floor(beta))


class GreedyExpansion(NamedTuple):
    """Expansion result; ``exact`` is False when digits were truncated."""

    string: DigitString
    exact: bool

    def __str__(self):
        return str(self.string) + ("" if self.exact else "...")


def greedy_expand(x, base, max_digits):
    """First max_digits digits of the greedy expansion of x in [0, 1).

    Terminates early (exact) when a remainder hits 0; otherwise the result
    carries a truncation marker instead of raising, because d_beta(1)
    probing needs prefixes of non-terminating expansions.
    """
    if max_digits < 1:
        raise ValueError("max_digits must be at least 1")
    if qv_sign(x) < 0 or qv_compare(x, QuotientValue.from_int(base, 1)) >= 0:
        raise ValueError("greedy_expand needs 0 <= x < 1")
    digits = []
    r = x
    exact = x.is_zero()
    for _ in range(max_digits):
        if r.is_zero():
            exact = True
            break
        t = qv_mul_beta_pow(r, 1)
        d = certified_floor(t)
        digits.append(d)
        r = qv_sub(t, QuotientValue.from_int(base, d))
    else:
        exact = r.is_zero()
    return GreedyExpansion(DigitString(tuple(digits), -1), exact)


def greedy_expand_ge1(x, base, max_frac=64):
    """Greedy expansion of x >= 0; integer part exact, fractional part may truncate.

    Scales x by beta**(-n) into [0, 1), expands, and shifts back; the digit
    sequence of the result is beta-admissible by construction.
    """
    if qv_sign(x) < 0:
        raise ValueError("greedy_expand_ge1 needs x >= 0")
    if x.is_zero():
        return GreedyExpansion(DigitString(), True)
    n = _integer_length(x, base)
    scaled = qv_mul_beta_pow(x, -n)
    res = greedy_expand(scaled, base, n + max_frac)
    return GreedyExpansion(res.string.shifted(n), res.exact)


def _integer_length(x, base):
    """Smallest n >= 0 with x < beta**n (so x scaled by beta**-n is < 1)."""
    est = base.float_value(x.coeffs, x.scale)
    n = 0
    if est > 1.0:
        import math

        n = max(0, int(math.log(est) / math.log(base.beta_float())))
    while qv_compare(x, QuotientValue.beta_power(base, n)) >= 0:
        n += 1
    while n > 0 and qv_compare(x, QuotientValue.beta_power(base, n - 1)) < 0:
        n -= 1
    return n


def renyi_dbeta(base, max_steps=DEFAULT_MAX_STEPS):
    """d_beta(1) by the greedy algorithm with exact remainders in Z[beta].

    A zero remainder gives a finite d_beta(1) (simple Parry number); a
    repeated remainder vector gives the eventually periodic form (Parry
    number).  Returns None when neither happens within max_steps: the
    honest third answer, since preperiod and period of d_beta(1) are not
    bounded for a general base.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    unit = base.unit_vector()
    r = unit
    seen = {r: 0}
    digits = []
    for j in range(1, max_steps + 1):
        rv = base.shift_vector(r)
        t = base.floor_of_vector(rv)
        r = tuple(rv[i] - t * unit[i] for i in range(base.degree))
        digits.append(t)
        if not any(r):
            return EventuallyPeriodicString(digits)
        i = seen.get(r)
        if i is not None:
            return EventuallyPeriodicString(digits[:i], digits[i:])
        seen[r] = j
    return None


def classify_parry(base, max_steps=DEFAULT_MAX_STEPS):
    """('simple' | 'non-simple' | 'unknown', d_beta(1) or None)."""
    d = renyi_dbeta(base, max_steps)
    if d is None:
        return ("unknown", None)
    return ("simple" if d.is_finite() else "non-simple", d)


def quasi_greedy(d):
    """d*_beta(1): finite t_1..t_m becomes (t_1 .. t_{m-1} (t_m - 1))^omega."""
    if not d.is_finite():
        return d
    pre = d.preperiod
    if not pre or pre[0] < 1:
        raise ValueError("not a valid d_beta(1): leading digit must be >= 1")
    per = pre[:-1] + (pre[-1] - 1,)
    if not any(per):
        raise ValueError("quasi-greedy period would be all zeros (integer base?)")
    return EventuallyPeriodicString((), per)


def _as_sequence(s):
    if isinstance(s, EventuallyPeriodicString):
        return s
    if isinstance(s, DigitString):
        return EventuallyPeriodicString(s.digits)
    raise TypeError("expected DigitString or EventuallyPeriodicString")


def is_admissible(s, dstar):
    """True iff every suffix of s is strictly lexicographically below dstar.

    This is Parry's characterization of greedy digit sequences.  Finite
    strings are padded with 0^omega; eventually periodic inputs have only
    finitely many distinct suffixes, all of which are checked.
    """
    seq = _as_sequence(s)
    for suf in seq.distinct_suffixes():
        if lex_compare(suf, dstar) >= 0:
            return False
    return True


def pf_sufficient(d):
    """Sufficient-condition check for the (F) / (PF) classes.

    F when d_beta(1) = t_1..t_m finite with t_1 >= ... >= t_m >= 1; PF when
    d_beta(1) = t_1..t_m t^omega with t_1 >= ... >= t_m > t >= 1.  Returns
    'inconclusive' otherwise, which is NOT a negative certificate.
    """
    if d.is_finite():
        ts = d.preperiod
        if ts and all(t >= 1 for t in ts) and all(a >= b for a, b in zip(ts, ts[1:])):
            return F
        return INCONCLUSIVE
    if len(d.period) == 1:
        t = d.period[0]
        ts = d.preperiod
        if (ts and t >= 1 and ts[-1] > t
                and all(x >= 1 for x in ts)
                and all(a >= b for a, b in zip(ts, ts[1:]))):
            return PF
    return INCONCLUSIVE


def greedy_vector_digits(base, vec, max_frac):
    """Greedy digits of a non-negative Z[beta] vector, on raw vectors.

    Returns (int_digits, frac_digits, exact) with int_digits ascending
    (index = position) and frac_digits[i] the digit at position -(i+1).
    This is the hot-loop variant of the greedy algorithm shared by block
    decomposition and the fractional-depth sweeps; it avoids QuotientValue
    construction entirely.
    """
    d = base.degree
    unit = base.unit_vector()
    if not any(vec):
        return [], [], True
    if base.sign_of_vector(vec) < 0:
        raise ValueError("greedy expansion needs a non-negative value")
    est = base.float_value(vec)
    n = 0
    if est > 1.0:
        import math

        n = max(0, int(math.log(est) / math.log(base.beta_float())))
    while base.floor_of_vector(vec, n + 1) > 0:
        n += 1
    while n > 0 and base.floor_of_vector(vec, n) == 0:
        n -= 1
    int_digits = [0] * (n + 1)
    r = vec
    for j in range(n, -1, -1):
        dig = base.floor_of_vector(r, j)
        if dig:
            pw = base.power_vector(j)
            r = tuple(r[i] - dig * pw[i] for i in range(d))
        int_digits[j] = dig
    frac = []
    exact = not any(r)
    while not exact and len(frac) < max_frac:
        r = base.shift_vector(r)
        dig = base.floor_of_vector(r)
        if dig:
            r = tuple(r[i] - dig * unit[i] for i in range(d))
        frac.append(dig)
        exact = not any(r)
    return int_digits, frac, exact


def greedy_fractional_depth(base, vec, cap=500):
    """Number of fractional digits of the greedy expansion of value(vec) >= 0.

    Raises if the expansion has not terminated after cap fractional digits;
    for (PF) bases and the sums considered here this never happens.
    """
    _, frac, exact = greedy_vector_digits(base, vec, cap)
    if not exact:
        raise RuntimeError("greedy expansion did not terminate within %d fractional digits" % cap)
    return len(frac)


# -- admissible word enumeration (test and estimation support) ----------------

def iter_beta_integer_words(base, max_len, dstar=None):
    """Yield digit tuples (msd first, no leading zero) of all beta-integers
    with at most max_len digits, the zero word included as ().

    A word w is the greedy expansion of its value iff every suffix of
    w 0^omega is strictly below d*_beta(1); extensions of inadmissible
    prefixes stay inadmissible, so a DFS with pruning enumerates exactly
    the admissible words.
    """
    if dstar is None:
        d = renyi_dbeta(base)
        if d is None:
            raise ValueError("d_beta(1) unknown; cannot enumerate beta-integers")
        dstar = quasi_greedy(d)
    top = canonical_alphabet(base).max_digit

    def ok(word):
        # only suffixes touching the appended digit need rechecking, but the
        # words are short here; check them all
        w = EventuallyPeriodicString(word)
        return all(lex_compare(suf, dstar) < 0 for suf in w.distinct_suffixes())

    yield ()

    def rec(word):
        yield tuple(word)
        if len(word) == max_len:
            return
        for d in range(top, -1, -1):
            word.append(d)
            if ok(word):
                yield from rec(word)
            word.pop()

    for first in range(1, top + 1):
        if ok([first]):
            yield from rec([first])


def word_value(base, word):
    """Exact value of an integer-part digit word (msd first)."""
    return eval_digit_string(DigitString(word, len(word) - 1), base)


def random_admissible_string(rng, base, dstar, length, frac=False):
    """Rejection-sample an admissible word over the canonical alphabet."""
    top = canonical_alphabet(base).max_digit
    while True:
        word = tuple(rng.randint(0, top) for _ in range(length))
        if is_admissible(EventuallyPeriodicString(word), dstar):
            return DigitString(word, -1 if frac else length - 1)
