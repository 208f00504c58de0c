"""High-precision numerics for zeta values and multiple polylogarithms.

All routines take a requested precision ``digits`` (decimal) and work
internally at ``digits + GUARD`` so that the reported digits are trusted;
results come back as ``BigReal`` values that carry their precision.
Arbitrary-precision arithmetic, pi and the elementary functions come from
mpmath; every series, truncation bound and algorithm on top of that is
implemented here.

Evaluation strategy for a convergent multiple zeta value: encode it as an
iterated integral word over {0, 1} on the path from 0 to 1, split the path
at 1/2, and rewrite the upper half through t -> 1-t (reverse the subword
and exchange the letters).  Both halves become multiple polylogarithms at
z = 1/2, where the defining nested sums converge geometrically: about
3.33 * digits terms each, for any weight.  The polylogarithm itself is
summed by the prefix-sum dynamic program, costing depth * N scalar
operations, never N^depth.

Simple zeta values have two independent routes for cross-checking: the
Euler-Maclaurin corrected partial sum (any integer s >= 2), and for even s
the closed form (2 pi)^s |B_s| / (2 s!) from the Bernoulli numbers, which
are generated exactly by their convolution recurrence.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np
from mpmath import mp, mpf

from .words import Composition

GUARD = 10
DEFAULT_SEED = 42


class BigReal:
    """A real number rounded to an explicit number of decimal digits."""

    __slots__ = ("value", "digits")

    def __init__(self, value, digits):
        digits = int(digits)
        if digits < 1:
            raise ValueError("digits must be >= 1")
        if isinstance(value, Fraction):
            with mp.workdps(digits):
                value = mpf(value.numerator) / value.denominator
        else:
            with mp.workdps(digits):
                value = mpf(value)
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "digits", digits)

    def __setattr__(self, name, value):
        raise AttributeError("BigReal is immutable")

    def nstr(self, significant=None):
        return mp.nstr(self.value, significant or self.digits)

    def __float__(self):
        return float(self.value)

    def __str__(self):
        return self.nstr()

    def __repr__(self):
        return "BigReal(%r, digits=%d)" % (self.nstr(), self.digits)

    def to_json_obj(self):
        return {"value": self.nstr(), "digits": self.digits}


class MonteCarloEstimate(NamedTuple):
    value: float
    stderr: float
    samples: int
    seed: int


_BERNOULLI = [Fraction(1)]


def bernoulli(n):
    """The n-th Bernoulli number as an exact Fraction.

    Multiplying the generating series by (e^t - 1) and matching
    coefficients gives sum_{k=0}^{n} C(n+1, k) B_k = [n == 0], hence the
    recurrence solved here.  Convention: B_1 = -1/2.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        acc = sum(math.comb(m + 1, k) * _BERNOULLI[k] for k in range(m))
        _BERNOULLI.append(Fraction(-acc, m + 1))
    return _BERNOULLI[n]


def zeta_even_closed_form(s, digits):
    """zeta(s) for even s >= 2 via (2 pi)^s |B_s| / (2 s!)."""
    if s < 2 or s % 2:
        raise ValueError("closed form needs an even integer s >= 2")
    b = bernoulli(s)
    with mp.workdps(digits + GUARD):
        value = ((2 * mp.pi) ** s * abs(mpf(b.numerator)) / b.denominator
                 / (2 * mp.factorial(s)))
    return BigReal(value, digits)


def zeta_euler_maclaurin(s, digits, cutoff=None, correction_terms=None):
    """zeta(s) for integer s >= 2 by the Euler-Maclaurin corrected partial sum.

    With cutoff n, the approximation is

        sum_{k<=n} k^-s + n^(1-s)/(s-1) - n^-s/2
        + sum_j B_{2j}/(2j)! * (s)(s+1)...(s+2j-2) * n^(-s-2j+1).

    By default the cutoff and the number of correction terms are chosen so
    the first omitted term is below 10^-(digits+guard).  Passing ``cutoff``
    and ``correction_terms`` explicitly returns that specific truncation
    with no accuracy promise (the corrections are even-indexed Bernoulli
    terms: correction_terms=4 means through the B_8, n^(-s-7) term).
    """
    s = int(s)
    if s < 2:
        raise ValueError("need an integer s >= 2")
    target = digits + GUARD
    n = cutoff if cutoff is not None else max(12, target)
    with mp.workdps(target + 10):
        eps = mpf(10) ** (-target)
        while True:
            partial = sum(mpf(k) ** (-s) for k in range(1, n + 1))
            value = partial + mpf(n) ** (1 - s) / (s - 1) - mpf(n) ** (-s) / 2
            ok = True
            prev_mag = mp.inf
            j = 1
            while True:
                if correction_terms is not None and j > correction_terms:
                    break
                b = bernoulli(2 * j)
                rising = 1
                for i in range(2 * j - 1):
                    rising *= s + i
                term = (mpf(b.numerator) / b.denominator / mp.factorial(2 * j)
                        * rising * mpf(n) ** (-s - 2 * j + 1))
                mag = abs(term)
                if correction_terms is None:
                    if mag < eps:
                        break
                    if mag >= prev_mag:
                        ok = False  # divergent tail reached before the target
                        break
                value += term
                prev_mag = mag
                j += 1
            if ok or correction_terms is not None:
                break
            n *= 2
    return BigReal(value, digits)


def _truncation_index(parts, z, dps):
    """Smallest N with the series tail below 10^-dps.

    The inner sums are bounded by k^(depth-1), so for z < 1 the tail after N
    is at most (N+1)^(r-1) z^(N+1) (r-1)! / (1-z)^r; for z = 1 (convergent
    words only) it is at most N^(r-w) / (w-r), which converges so slowly
    that a hard cap guards against infeasible requests.
    """
    r = len(parts)
    if z == 1:
        w = sum(parts)
        # Guard digits exist for round-off, not truncation: aiming the tail
        # at the padded precision would cost 10^GUARD times more terms, so
        # target the delivered digits plus a small slack instead.
        target = dps - GUARD + 2
        log_n = (target - math.log10(w - r)) / (w - r)
        if log_n > 7:
            raise ValueError("z=1 converges polynomially; %d digits would need "
                             "about 10^%.1f terms" % (dps - GUARD, log_n))
        return int(10 ** log_n) + 2
    log_z = math.log10(float(z))
    log_fact = math.log10(math.factorial(r - 1)) if r > 1 else 0.0
    log_1mz = math.log10(1.0 - float(z))

    def log_bound(n):
        return (r - 1) * math.log10(n + 1) + (n + 1) * log_z + log_fact - r * log_1mz

    n = max(8, int(dps / -log_z) + 4)
    while log_bound(n) > -(dps + 1):
        n += max(4, n // 8)
    return n


def _polylog_raw(parts, z, dps):
    """Sum the nested series for Li_{parts}(1,...,1,z) at dps digits (mpf).

    ``z`` is an exact Fraction in (0, 1].
    """
    r = len(parts)
    if r == 0:
        with mp.workdps(dps):
            return mpf(1)
    n = _truncation_index(parts, z, dps)
    with mp.workdps(dps + 5):
        zm = mpf(z.numerator) / z.denominator
        col = [mpf(k) ** (-parts[0]) for k in range(1, n + 1)]
        for ni in parts[1:]:
            prefix = mpf(0)
            new = []
            for k in range(1, n + 1):
                new.append(prefix * mpf(k) ** (-ni))
                prefix += col[k - 1]
            col = new
        total = mpf(0)
        zp = mpf(1)
        for k in range(n):
            zp *= zm
            total += col[k] * zp
        return total


@lru_cache(maxsize=None)
def _polylog_half(parts, dps):
    return _polylog_raw(parts, Fraction(1, 2), dps)


def multiple_polylog(comp, z, digits):
    """The one-variable multiple polylogarithm sum_{k1<...<kr} z^{kr} / prod ki^{ni}.

    ``z`` may be a Fraction, int or float with 0 < z < 1, or exactly 1 when
    the composition is convergent.  Divergent compositions (last part 1)
    are fine for z < 1, where convergence is geometric.
    """
    parts = comp.parts if isinstance(comp, Composition) else tuple(comp)
    zq = Fraction(z)  # exact for int, Fraction and (dyadic) float inputs
    if not 0 < zq <= 1:
        raise ValueError("z must satisfy 0 < z <= 1, got %s" % (z,))
    if zq == 1 and parts and parts[-1] < 2:
        raise ValueError("the series diverges at z = 1 for %s" % (Composition(parts),))
    value = _polylog_raw(parts, zq, digits + GUARD)
    return BigReal(value, digits)


@lru_cache(maxsize=None)
def _mzv_raw(parts, dps):
    word = Composition(parts).to_binary()
    letters = word.letters
    n = len(letters)
    with mp.workdps(dps + 5):
        total = mpf(0)
        for k in range(n + 1):
            lower = letters[:k]
            upper = tuple(1 - a for a in reversed(letters[k:]))
            f1 = _polylog_half(_letters_to_parts(lower), dps)
            f2 = _polylog_half(_letters_to_parts(upper), dps)
            total += f1 * f2
        return total


def _letters_to_parts(letters):
    # letters here always start with 1 (path pieces of a convergent word)
    parts = []
    for a in letters:
        if a == 1:
            parts.append(1)
        else:
            parts[-1] += 1
    return tuple(parts)


def mzv_eval(comp, digits):
    """Evaluate a convergent multiple zeta value to the requested digits.

    Splits the iterated-integral path at 1/2; each half is a multiple
    polylogarithm at z = 1/2 (the upper half after t -> 1-t), so the work
    grows linearly in digits and weight.
    """
    comp = comp if isinstance(comp, Composition) else Composition(comp)
    if not comp.is_convergent:
        raise ValueError("%s diverges; regularize before evaluating" % (comp,))
    if not comp.parts:
        return BigReal(1, digits)
    return BigReal(_mzv_raw(comp.parts, digits + GUARD), digits)


def hypercube_integrand(x, y):
    """The two-dimensional integrand 1/(1-xy) whose unit-square integral is zeta(2)."""
    return 1.0 / (1.0 - x * y)


_BATCH = 1 << 16


def _substream(seed, index):
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))


def hypercube_zeta2(samples, seed=DEFAULT_SEED):
    """Monte-Carlo estimate of the integral of 1/(1-xy) over the unit square.

    The sample budget is split into fixed-size batches, each drawn from its
    own seed-derived substream, so the combined estimate depends only on
    (samples, seed) and not on how the batches are scheduled.
    """
    samples = int(samples)
    if samples < 2:
        raise ValueError("need at least 2 samples")
    s1 = 0.0
    s2 = 0.0
    done = 0
    batch = 0
    while done < samples:
        count = min(_BATCH, samples - done)
        u = _substream(seed, batch).random((count, 2))
        f = 1.0 / (1.0 - u[:, 0] * u[:, 1])
        s1 += float(f.sum())
        s2 += float((f * f).sum())
        done += count
        batch += 1
    mean = s1 / samples
    var = max(s2 / samples - mean * mean, 0.0) * samples / (samples - 1)
    return MonteCarloEstimate(mean, math.sqrt(var / samples), samples, seed)
