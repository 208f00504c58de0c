"""Formal rational linear combinations of words.

A ``LinComb`` is a finite map from words (all of one kind) to nonzero
``fractions.Fraction`` coefficients.  Zero coefficients are dropped
eagerly, so equality is plain map equality and the zero combination is the
empty map.  Iteration is always in the canonical graded-lexicographic word
order, which makes printing and serialization deterministic.

Serialization format: ``{"kind": <word kind>, "terms": [{"word": str,
"numerator": int, "denominator": int}, ...]}`` with terms in canonical
order and denominators > 0.
"""

from __future__ import annotations

from fractions import Fraction

from .words import WORD_KINDS, word_kind


class LinComb:
    """A rational linear combination of words of a single kind."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        d = {}
        if hasattr(coeffs, "items"):
            coeffs = coeffs.items()
        for word, c in coeffs:
            c = Fraction(c)
            if c:
                d[word] = d.get(word, Fraction(0)) + c
                if not d[word]:
                    del d[word]
        kinds = {type(w) for w in d}
        if len(kinds) > 1:
            raise TypeError("cannot mix word kinds in one combination: %s"
                            % sorted(t.__name__ for t in kinds))
        object.__setattr__(self, "_coeffs", d)

    def __setattr__(self, name, value):
        raise AttributeError("LinComb is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def term(cls, word, coeff=1):
        return cls([(word, Fraction(coeff))])

    def coeff(self, word):
        return self._coeffs.get(word, Fraction(0))

    def terms(self):
        """(word, coefficient) pairs in canonical order."""
        return sorted(self._coeffs.items(), key=lambda t: t[0].sort_key())

    def words(self):
        return sorted(self._coeffs, key=lambda w: w.sort_key())

    def apply(self, f):
        """Linear extension: sum coeff * f(word), where f maps a word to a
        word or to another LinComb."""
        total = LinComb()
        for word, c in self._coeffs.items():
            image = f(word)
            if not isinstance(image, LinComb):
                image = LinComb.term(image)
            total = total + c * image
        return total

    def __add__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        d = dict(self._coeffs)
        for w, c in other._coeffs.items():
            s = d.get(w, Fraction(0)) + c
            if s:
                d[w] = s
            elif w in d:
                del d[w]
        return LinComb(d)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LinComb({w: -c for w, c in self._coeffs.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, LinComb):
            return NotImplemented
        scalar = Fraction(scalar)
        if not scalar:
            return LinComb()
        return LinComb({w: c * scalar for w, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (Fraction(1) / Fraction(scalar))

    def __eq__(self, other):
        return isinstance(other, LinComb) and self._coeffs == other._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self.terms())

    def __str__(self):
        if not self._coeffs:
            return "0"
        bits = []
        for w, c in self.terms():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else str(mag) + "*"
            bits.append((sign, coef + str(w)))
        first_sign, first = bits[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in bits[1:]:
            out += " %s %s" % (sign, text)
        return out

    def __repr__(self):
        return "LinComb(%s)" % (self,)

    def to_json_obj(self):
        if not self._coeffs:
            return {"kind": None, "terms": []}
        kind = word_kind(next(iter(self._coeffs)))
        terms = [{"word": str(w), "numerator": c.numerator, "denominator": c.denominator}
                 for w, c in self.terms()]
        return {"kind": kind, "terms": terms}

    @classmethod
    def from_json_obj(cls, obj):
        kind = obj.get("kind")
        terms = obj.get("terms", [])
        if not terms:
            return cls()
        if kind not in WORD_KINDS:
            raise ValueError("unknown word kind %r" % (kind,))
        parse = WORD_KINDS[kind]
        return cls([(parse(t["word"]), Fraction(t["numerator"], t["denominator"]))
                    for t in terms])
