"""Double-shuffle relations, exact rank bounds and Hoffman decompositions.

A pair of nonempty convergent compositions m, n gives the relation

    (product as iterated integrals) - (product as nested sums) = 0:

the shuffle of the binary encodings, pulled back to compositions, minus the
stuffle of the compositions.  Mixing in the single divergent word (1)
still produces a valid relation because the lone divergent term appears
once on both sides and cancels: x1 sh X_n minus (1) st n is supported on
convergent compositions only (asserted, not assumed).

Collecting all such rows at a fixed weight and eliminating exactly yields
an upper bound 2^(weight-2) - rank for the dimension of the span of that
weight's zeta values, and the reduced echelon form doubles as a rewriting
table into the Hoffman words (parts in {2, 3}): the pivot priority visits
non-Hoffman columns first, so the free columns land on Hoffman words
whenever the relations allow it.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import shuffle, stuffle
from .dims import count_hoffman_words, dimension
from .lincomb import LinComb
from .linalg import SparseRREF
from .words import Composition, enumerate_compositions, from_binary

DEFAULT_MAX_WEIGHT = 12

HOFFMAN_PARTS = (2, 3)


def is_hoffman(comp):
    """True when every part of the composition lies in {2, 3}."""
    return all(p in HOFFMAN_PARTS for p in comp.parts)


class InsufficientRelationsError(ValueError):
    """The double-shuffle rows at this weight do not pin the requested word."""

    def __init__(self, comp, free_words):
        self.comp = comp
        self.free_words = tuple(free_words)
        super().__init__(
            "relations at weight %d leave %s unresolved; free non-Hoffman "
            "coordinates: %s" % (comp.weight, comp,
                                 ", ".join(str(w) for w in self.free_words)))


class Relation:
    """A rational combination of convergent compositions summing to zero."""

    __slots__ = ("combo", "weight", "provenance")

    def __init__(self, combo, provenance):
        words = combo.words()
        for w in words:
            if not w.is_convergent:
                raise ValueError("relation touches divergent word %s" % (w,))
        weights = {w.weight for w in words}
        if len(weights) > 1:
            raise ValueError("relation mixes weights %s" % (sorted(weights),))
        object.__setattr__(self, "combo", combo)
        object.__setattr__(self, "weight", weights.pop() if weights else 0)
        object.__setattr__(self, "provenance", provenance)

    def __setattr__(self, name, value):
        raise AttributeError("Relation is immutable")

    def __str__(self):
        return "%s = 0   [%s]" % (self.combo, self.provenance)

    def __repr__(self):
        return "Relation(%s)" % (self,)

    def to_json_obj(self):
        return {"weight": self.weight, "provenance": self.provenance,
                "combo": self.combo.to_json_obj()}


def _shuffle_on_compositions(m, n):
    """Shuffle of the binary encodings, pulled back to compositions.

    Both encodings start with the letter 1, so every interleaving does too
    and decodes to a composition.
    """
    prod = shuffle(m.to_binary(), n.to_binary())
    return prod.apply(from_binary)


def double_shuffle_relation(m, n):
    """The relation (shuffle - stuffle) applied to two nonempty convergent
    compositions."""
    for c in (m, n):
        if not isinstance(c, Composition):
            raise TypeError("expected a Composition, got %r" % (c,))
        if not c.parts or not c.is_convergent:
            raise ValueError("double shuffle needs nonempty convergent words, got %s" % (c,))
    combo = _shuffle_on_compositions(m, n) - stuffle(m, n)
    return Relation(combo, "double-shuffle %s|%s" % (m, n))


def hoffman_relation(n):
    """The relation from multiplying by the divergent word (1) both ways.

    Computes x1 sh X_n minus (1) st n on the full composition span and
    asserts that the divergent terms cancel exactly before wrapping the
    rest as a Relation.
    """
    if not isinstance(n, Composition):
        raise TypeError("expected a Composition, got %r" % (n,))
    if not n.parts or not n.is_convergent:
        raise ValueError("needs a nonempty convergent word, got %s" % (n,))
    one = Composition((1,))
    combo = _shuffle_on_compositions(one, n) - stuffle(one, n)
    bad = [w for w, _ in combo.terms() if not w.is_convergent]
    assert not bad, "divergent terms failed to cancel: %s" % (bad,)
    return Relation(combo, "hoffman %s" % (n,))


class RelationMatrix:
    """All double-shuffle (and optionally Hoffman) rows at one weight,
    expressed over the convergent compositions of that weight in canonical
    order."""

    __slots__ = ("weight", "basis", "relations", "_index")

    def __init__(self, weight, basis, relations):
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "basis", list(basis))
        object.__setattr__(self, "relations", list(relations))
        object.__setattr__(self, "_index", {w: i for i, w in enumerate(self.basis)})

    def __setattr__(self, name, value):
        raise AttributeError("RelationMatrix is immutable")

    @property
    def n_columns(self):
        return len(self.basis)

    @property
    def n_rows(self):
        return len(self.relations)

    def rows(self):
        """Sparse rows as {column index: Fraction} maps, in generation order."""
        out = []
        for rel in self.relations:
            out.append({self._index[w]: c for w, c in rel.combo.terms()})
        return out

    def column_of(self, comp):
        return self._index[comp]


def build_relation_matrix(weight, include_hoffman=True, max_weight=DEFAULT_MAX_WEIGHT):
    """Collect the relation rows at the given weight, deterministically.

    Row order: double-shuffle rows over unordered pairs (m, n) with
    weight(m) <= weight(n), pairs ordered by weight(m) then canonically by
    m then n; then the Hoffman rows over convergent words of weight-1 in
    canonical order.
    """
    if weight < 2:
        raise ValueError("weight must be >= 2")
    if weight > max_weight:
        raise ValueError("weight %d exceeds the cap %d; raise max_weight "
                         "explicitly for longer runs" % (weight, max_weight))
    basis = enumerate_compositions(weight, convergent_only=True)
    relations = []
    for wm in range(2, weight - 1):
        wn = weight - wm
        if wm > wn:
            break
        ms = enumerate_compositions(wm, convergent_only=True)
        ns = enumerate_compositions(wn, convergent_only=True)
        for i, m in enumerate(ms):
            for n in (ns[i:] if wm == wn else ns):
                relations.append(double_shuffle_relation(m, n))
    if include_hoffman:
        for n in enumerate_compositions(weight - 1, convergent_only=True):
            relations.append(hoffman_relation(n))
    return RelationMatrix(weight, basis, relations)


def _hoffman_last_priority(basis):
    """Pivot priority that visits non-Hoffman columns first, each group in
    canonical order, so free columns land on Hoffman words when possible."""
    order = {}
    nxt = 0
    for i, w in enumerate(basis):
        if not is_hoffman(w):
            order[i] = nxt
            nxt += 1
    for i, w in enumerate(basis):
        if is_hoffman(w):
            order[i] = nxt
            nxt += 1
    return order.__getitem__


def echelon_form(matrix):
    """Exact reduced row echelon form of a RelationMatrix (SparseRREF)."""
    rref = SparseRREF(priority=_hoffman_last_priority(matrix.basis))
    rref.insert_all(matrix.rows())
    return rref


def matrix_rank(matrix):
    return echelon_form(matrix).rank


def dimension_upper_bound(weight, include_hoffman=True, max_weight=DEFAULT_MAX_WEIGHT):
    """2^(weight-2) minus the exact rank of the relation rows.

    Every row is a true relation, so this is a rigorous upper bound for the
    dimension of the weight-graded span of zeta values; a value below the
    d_n of the dimension recurrence would mean a false relation and is
    asserted against."""
    matrix = build_relation_matrix(weight, include_hoffman, max_weight)
    bound = 2 ** (weight - 2) - matrix_rank(matrix)
    assert bound >= dimension(weight), \
        "bound %d fell below d_%d = %d: some relation is false" \
        % (bound, weight, dimension(weight))
    return bound


_ECHELON_CACHE = {}


def _cached_echelon(weight, max_weight):
    if weight not in _ECHELON_CACHE:
        matrix = build_relation_matrix(weight, True, max_weight)
        _ECHELON_CACHE[weight] = (matrix, echelon_form(matrix))
    return _ECHELON_CACHE[weight]


def decompose_in_hoffman_basis(comp, max_weight=DEFAULT_MAX_WEIGHT):
    """Rewrite a convergent composition as a rational combination of
    Hoffman words of the same weight, using the double-shuffle rows.

    Raises InsufficientRelationsError when the relations at that weight do
    not pin the word down to Hoffman coordinates.
    """
    if not isinstance(comp, Composition):
        raise TypeError("expected a Composition, got %r" % (comp,))
    if not comp.is_convergent:
        raise ValueError("%s diverges; only convergent words decompose" % (comp,))
    weight = comp.weight
    if weight < 2:
        return LinComb.term(comp)  # the empty word; weight-1 words all diverge
    matrix, rref = _cached_echelon(weight, max_weight)
    col = matrix.column_of(comp)
    if col in rref.pivot_rows:
        terms = []
        bad = []
        for cc, v in rref.pivot_rows[col].items():
            if cc == col:
                continue
            w = matrix.basis[cc]
            if is_hoffman(w):
                terms.append((w, -v))
            else:
                bad.append(w)
        if bad:
            raise InsufficientRelationsError(comp, sorted(bad))
        return LinComb(terms)
    if is_hoffman(comp):
        return LinComb.term(comp)
    raise InsufficientRelationsError(comp, [comp])


def hoffman_words(weight):
    """The Hoffman words of a weight, in canonical order."""
    out = [c for c in enumerate_compositions(weight, convergent_only=True)
           if is_hoffman(c)]
    assert len(out) == count_hoffman_words(weight)
    return out
