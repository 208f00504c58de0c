"""Index words for multiple zeta values.

Two word types share the weight grading:

* ``Composition`` -- a tuple of integer parts >= 1, written ``(n1,...,nr)``.
  It indexes the nested sum over 1 <= k1 < ... < kr with factor
  1/(k1^n1 ... kr^nr).  The *last* index runs fastest to infinity, so the
  series converges exactly when the last part is >= 2 (or the word is empty,
  which denotes the empty product 1).
* ``BinaryWord`` -- a word in the two letters 0 and 1, written like ``"110"``.
  It indexes an iterated integral over the simplex 0 <= t1 <= ... <= tn <= 1
  with dt/(1-t) for letter 1 and dt/t for letter 0, reading letters left to
  right along increasing t.  The integral converges exactly when the word is
  empty or starts with 1 and ends with 0.

The encoding between the two sends a part n to one letter 1 followed by n-1
letters 0, concatenated over the parts.  Under it, convergent compositions
correspond exactly to convergent binary words.

``GenericWord`` is a plain word over an arbitrary alphabet of hashable,
orderable letters; it carries the shuffle product for alphabets such as
f3, f5, f7, ... where no integral encoding is involved.

Canonical order everywhere is graded lexicographic: first by weight (word
length for letter words), then lexicographically.
"""

from __future__ import annotations


class Composition:
    """An index word (n1,...,nr) with integer parts >= 1."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 1:
                raise ValueError("composition parts must be integers >= 1, got %r" % (p,))
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Composition is immutable")

    @property
    def weight(self):
        return sum(self.parts)

    @property
    def depth(self):
        return len(self.parts)

    @property
    def is_convergent(self):
        """True when the indexed series converges: empty, or last part >= 2."""
        return not self.parts or self.parts[-1] >= 2

    def to_binary(self):
        """Encode as a binary word: each part n becomes 1 followed by n-1 zeros."""
        letters = []
        for p in self.parts:
            letters.append(1)
            letters.extend([0] * (p - 1))
        return BinaryWord(letters)

    def sort_key(self):
        return (self.weight, self.parts)

    def __eq__(self, other):
        return isinstance(other, Composition) and self.parts == other.parts

    def __hash__(self):
        return hash(("Composition", self.parts))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __repr__(self):
        return "Composition(%r)" % (self.parts,)


class BinaryWord:
    """A word in the letters 0 and 1, indexing an iterated integral."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        if isinstance(letters, str):
            letters = tuple(int(ch) for ch in letters)
        else:
            letters = tuple(int(a) for a in letters)
        for a in letters:
            if a not in (0, 1):
                raise ValueError("binary word letters must be 0 or 1, got %r" % (a,))
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryWord is immutable")

    @property
    def weight(self):
        return len(self.letters)

    @property
    def is_convergent(self):
        """True when empty, or the word starts with 1 and ends with 0."""
        w = self.letters
        return not w or (w[0] == 1 and w[-1] == 0)

    def dual(self):
        """Reverse the word and exchange the letters (the t -> 1-t symmetry)."""
        return BinaryWord(tuple(1 - a for a in reversed(self.letters)))

    def sort_key(self):
        return (len(self.letters), self.letters)

    def __eq__(self, other):
        return isinstance(other, BinaryWord) and self.letters == other.letters

    def __hash__(self):
        return hash(("BinaryWord", self.letters))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return "".join(str(a) for a in self.letters)

    def __repr__(self):
        return "BinaryWord(%r)" % (str(self),)


class GenericWord:
    """A word over an arbitrary alphabet of hashable, orderable letters."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        object.__setattr__(self, "letters", tuple(letters))

    def __setattr__(self, name, value):
        raise AttributeError("GenericWord is immutable")

    @property
    def weight(self):
        return len(self.letters)

    def sort_key(self):
        return (len(self.letters), self.letters)

    def __eq__(self, other):
        return isinstance(other, GenericWord) and self.letters == other.letters

    def __hash__(self):
        return hash(("GenericWord", self.letters))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return ".".join(str(a) for a in self.letters)

    def __repr__(self):
        return "GenericWord(%r)" % (self.letters,)


def from_binary(word):
    """Decode a binary word into the composition it encodes.

    The word must be empty or start with the letter 1 (a leading 0 belongs to
    no composition); it may end with 1, giving a divergent composition.
    """
    w = word.letters if isinstance(word, BinaryWord) else BinaryWord(word).letters
    if not w:
        return Composition()
    if w[0] != 1:
        raise ValueError("binary word %s starts with 0 and encodes no composition"
                         % ("".join(map(str, w)),))
    parts = []
    for a in w:
        if a == 1:
            parts.append(1)
        else:
            parts[-1] += 1
    return Composition(parts)


def enumerate_compositions(weight, convergent_only=False):
    """All compositions of the given weight, in graded-lexicographic order.

    There are 2^(weight-1) in total and 2^(weight-2) convergent ones for
    weight >= 2.  The order is deterministic: lexicographic on the part
    tuples (the weight is fixed).
    """
    if weight < 0:
        raise ValueError("weight must be >= 0")
    if weight == 0:
        out = [Composition()]
    else:
        out = []

        def rec(prefix, remaining):
            if remaining == 0:
                out.append(Composition(prefix))
                return
            for p in range(1, remaining + 1):
                rec(prefix + [p], remaining - p)

        rec([], weight)
        out.sort()
    if convergent_only:
        out = [c for c in out if c.is_convergent]
    return out


def parse_composition(text):
    """Parse ``"(1,2)"`` (or ``"()"``) into a Composition."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError("composition literal must look like (1,2), got %r" % (text,))
    inner = s[1:-1].strip()
    if not inner:
        return Composition()
    try:
        parts = [int(tok) for tok in inner.split(",")]
    except ValueError:
        raise ValueError("composition literal must contain integers, got %r" % (text,))
    return Composition(parts)


def parse_binary_word(text):
    """Parse a string over {0,1} (empty string allowed) into a BinaryWord."""
    s = text.strip()
    if any(ch not in "01" for ch in s):
        raise ValueError("binary word literal must use only 0 and 1, got %r" % (text,))
    return BinaryWord(s)


def parse_generic_word(text):
    """Parse a dot-separated letter list such as ``"f3.f5"`` into a GenericWord."""
    s = text.strip()
    if not s:
        return GenericWord()
    return GenericWord(s.split("."))


WORD_KINDS = {
    "composition": parse_composition,
    "binary": parse_binary_word,
    "letters": parse_generic_word,
}


def word_kind(word):
    if isinstance(word, Composition):
        return "composition"
    if isinstance(word, BinaryWord):
        return "binary"
    if isinstance(word, GenericWord):
        return "letters"
    raise TypeError("not a word type: %r" % (word,))
