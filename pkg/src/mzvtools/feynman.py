"""Graph polynomials and numeric periods of log-divergent graphs.

The Kirchhoff (first graph) polynomial of a connected multigraph G is

    Psi_G = sum over spanning trees T of prod_{e not in T} x_e,

one squarefree monomial per tree, homogeneous of degree equal to the loop
number h = edges - vertices + 1.  It is computed by recursive
deletion-contraction (trees avoiding a non-bridge edge vs trees through
it), never by iterating over all edge subsets, and the monomial count is
cross-checked against the matrix-tree determinant.

A graph is primitive log-divergent when edges = 2h and every proper
connected subgraph with a cycle has strictly more than twice as many edges
as independent cycles.  For such graphs the projective period

    integral over x_i >= 0 (chart x_N = 1) of dx_1 ... dx_{N-1} / Psi_G^2

converges, and is estimated by plain Monte-Carlo after the substitution
x = u/(1-u).  The integrand is evaluated in the stable form 1/Phi^2 with
Phi = sum over monomials of prod_{e in M} u_e prod_{e not in M} (1-u_e),
whose terms all lie in (0,1], so no overflow occurs near the boundary.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .linalg import bareiss_det
from .relations import DEFAULT_MAX_WEIGHT
from .numerics import (DEFAULT_SEED, GUARD, MonteCarloEstimate, _substream,
                       mzv_eval, zeta_euler_maclaurin)

_BATCH = 1 << 16


class Graph:
    """A connected multigraph on vertices 1..n without self-loops."""

    __slots__ = ("n_vertices", "edges")

    def __init__(self, n_vertices, edges):
        n = int(n_vertices)
        if n < 1:
            raise ValueError("need at least one vertex")
        es = []
        for u, v in edges:
            u, v = int(u), int(v)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError("edge (%d,%d) leaves the vertex range 1..%d" % (u, v, n))
            if u == v:
                raise ValueError("self-loop at vertex %d is not allowed" % u)
            es.append((min(u, v), max(u, v)))
        if not _connected(frozenset(range(1, n + 1)),
                          [(u, v, i) for i, (u, v) in enumerate(es)]):
            raise ValueError("graph must be connected")
        object.__setattr__(self, "n_vertices", n)
        object.__setattr__(self, "edges", tuple(es))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def n_edges(self):
        return len(self.edges)

    @property
    def loop_number(self):
        return self.n_edges - self.n_vertices + 1

    @classmethod
    def parse(cls, text):
        """Parse ``"V=4; 1-2,1-3,1-4,2-3,2-4,3-4"`` or the JSON equivalent
        ``{"vertices": 4, "edges": [[1,2],...]}``."""
        s = text.strip()
        if s.startswith("{"):
            obj = json.loads(s)
            return cls(obj["vertices"], obj["edges"])
        head, _, tail = s.partition(";")
        head = head.replace(" ", "")
        if not head.upper().startswith("V="):
            raise ValueError("graph text must start with V=<count>;")
        n = int(head[2:])
        edges = []
        tail = tail.strip()
        if tail:
            for tok in tail.split(","):
                u, _, v = tok.strip().partition("-")
                edges.append((int(u), int(v)))
        return cls(n, edges)

    def to_json_obj(self):
        return {"vertices": self.n_vertices, "edges": [list(e) for e in self.edges]}

    def __str__(self):
        return "V=%d; %s" % (self.n_vertices,
                             ",".join("%d-%d" % e for e in self.edges))

    def __repr__(self):
        return "Graph(%r)" % (str(self),)


def _connected(vertices, edges):
    if len(vertices) <= 1:
        return True
    adj = {v: [] for v in vertices}
    for u, v, _ in edges:
        if u != v:
            adj[u].append(v)
            adj[v].append(u)
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def _spanning_trees(vertices, edges):
    """All spanning trees as frozensets of edge ids.

    ``edges`` holds (u, v, id) triples; loops are dropped, a disconnected
    graph yields nothing, and bridges skip the deletion branch.
    """
    if len(vertices) == 1:
        return [frozenset()]
    live = [(u, v, i) for u, v, i in edges if u != v]
    if not live:
        return []
    u0, v0, id0 = live[0]
    contracted = [(u0 if u == v0 else u, u0 if v == v0 else v, i)
                  for u, v, i in live[1:]]
    out = [t | {id0} for t in _spanning_trees(vertices - {v0}, contracted)]
    rest = live[1:]
    if _connected(vertices, rest):  # not a bridge: trees can avoid it
        out.extend(_spanning_trees(vertices, rest))
    return out


def spanning_tree_count(graph):
    """Number of spanning trees by the matrix-tree theorem (exact integers)."""
    n = graph.n_vertices
    lap = [[0] * n for _ in range(n)]
    for u, v in graph.edges:
        lap[u - 1][u - 1] += 1
        lap[v - 1][v - 1] += 1
        lap[u - 1][v - 1] -= 1
        lap[v - 1][u - 1] -= 1
    minor = [row[:-1] for row in lap[:-1]]
    return bareiss_det(minor)


class GraphPolynomial:
    """A set of squarefree monomials in the edge variables, all of one degree."""

    __slots__ = ("n_variables", "degree", "monomials")

    def __init__(self, n_variables, monomials):
        monomials = frozenset(frozenset(m) for m in monomials)
        degrees = {len(m) for m in monomials}
        if len(degrees) > 1:
            raise ValueError("monomials of mixed degree: %s" % sorted(degrees))
        object.__setattr__(self, "n_variables", n_variables)
        object.__setattr__(self, "degree", degrees.pop() if degrees else 0)
        object.__setattr__(self, "monomials", monomials)

    def __setattr__(self, name, value):
        raise AttributeError("GraphPolynomial is immutable")

    def __len__(self):
        return len(self.monomials)

    def __eq__(self, other):
        return (isinstance(other, GraphPolynomial)
                and self.n_variables == other.n_variables
                and self.monomials == other.monomials)

    def __hash__(self):
        return hash((self.n_variables, self.monomials))

    def sorted_monomials(self):
        return sorted(tuple(sorted(m)) for m in self.monomials)

    def evaluate(self, values):
        total = 0
        for m in self.monomials:
            term = 1
            for e in m:
                term = term * values[e]
            total = total + term
        return total

    def __str__(self):
        if not self.monomials:
            return "0"
        bits = []
        for m in self.sorted_monomials():
            bits.append("*".join("x%d" % (e + 1) for e in m) if m else "1")
        return " + ".join(bits)

    def __repr__(self):
        return "GraphPolynomial(%s)" % (self,)


def kirchhoff_polynomial(graph):
    """Psi_G: one monomial per spanning tree, on the complementary edges."""
    all_ids = frozenset(range(graph.n_edges))
    trees = _spanning_trees(frozenset(range(1, graph.n_vertices + 1)),
                            [(u, v, i) for i, (u, v) in enumerate(graph.edges)])
    assert len(trees) == spanning_tree_count(graph), \
        "deletion-contraction disagrees with the matrix-tree count"
    return GraphPolynomial(graph.n_edges, [all_ids - t for t in trees])


def is_primitive_log_divergent(graph):
    """edges = 2 * loops, and every proper connected subgraph with a cycle
    has edges > 2 * loops.  Checked by exhaustive subgraph enumeration."""
    n_edges = graph.n_edges
    if n_edges != 2 * graph.loop_number:
        return False
    if graph.loop_number < 1:
        return False
    edges = graph.edges
    for mask in range(1, (1 << n_edges) - 1):
        subset = [i for i in range(n_edges) if mask >> i & 1]
        verts = set()
        for i in subset:
            verts.update(edges[i])
        triples = [(edges[i][0], edges[i][1], i) for i in subset]
        if not _connected(frozenset(verts), triples):
            continue
        loops = len(subset) - len(verts) + 1
        if loops >= 1 and len(subset) <= 2 * loops:
            return False
    return True


def period_monte_carlo(graph, samples, seed=DEFAULT_SEED):
    """Monte-Carlo estimate of the period integral of 1/Psi_G^2.

    Chart: the last edge variable is set to 1; the others map to u/(1-u)
    over the unit cube.  The sample budget is split into fixed-size batches
    on seed-derived substreams, so the estimate depends only on
    (samples, seed), not on scheduling.
    """
    samples = int(samples)
    if samples < 2:
        raise ValueError("need at least 2 samples")
    if not is_primitive_log_divergent(graph):
        raise ValueError("%s is not primitive log-divergent; the period "
                         "integral does not converge" % (graph,))
    psi = kirchhoff_polynomial(graph)
    n_free = graph.n_edges - 1
    masks = np.zeros((len(psi), n_free), dtype=bool)
    for row, m in enumerate(psi.sorted_monomials()):
        for e in m:
            if e < n_free:
                masks[row, e] = True
    s1 = 0.0
    s2 = 0.0
    done = 0
    batch = 0
    while done < samples:
        count = min(_BATCH, samples - done)
        u = _substream(seed, batch).random((count, n_free))
        one_minus = 1.0 - u
        phi = np.zeros(count)
        for row in range(masks.shape[0]):
            sel = masks[row]
            phi += u[:, sel].prod(axis=1) * one_minus[:, ~sel].prod(axis=1)
        f = 1.0 / (phi * phi)
        s1 += float(f.sum())
        s2 += float((f * f).sum())
        done += count
        batch += 1
    mean = s1 / samples
    var = max(s2 / samples - mean * mean, 0.0) * samples / (samples - 1)
    return MonteCarloEstimate(mean, math.sqrt(var / samples), samples, seed)


def _partitions(total, largest):
    if total == 0:
        yield ()
        return
    for p in range(min(total, largest), 1, -1):
        for rest in _partitions(total - p, p):
            yield (p,) + rest


@lru_cache(maxsize=None)
def _zeta_value(s, digits):
    return zeta_euler_maclaurin(s, digits).value


@lru_cache(maxsize=None)
def period_candidates(weight, digits=30):
    """Known constants of a weight: products of simple zetas over the
    partitions into parts >= 2, the depth-2 zeta values, and for weight 8
    the wheel-type combination."""
    from mpmath import mp
    out = []
    with mp.workdps(digits + GUARD):
        for parts in _partitions(weight, weight):
            label = "*".join("zeta(%d)" % p for p in parts)
            value = 1
            for p in parts:
                value = value * _zeta_value(p, digits)
            out.append((label, value))
        for a in range(1, weight - 1):
            b = weight - a
            out.append(("zeta(%d,%d)" % (a, b), mzv_eval((a, b), digits).value))
        if weight == 8:
            # The wheel-type combination, in both index orders: sources that
            # sum over decreasing indices write the depth-2 factor with its
            # parts swapped, so both readings count as known constants.
            tail = (Fraction(45, 4) * _zeta_value(5, digits) * _zeta_value(3, digits)
                    - Fraction(261, 20) * _zeta_value(8, digits))
            for parts in ((5, 3), (3, 5)):
                value = Fraction(27, 5) * mzv_eval(parts, digits).value + tail
                out.append(("27/5*zeta(%d,%d)+45/4*zeta(5)*zeta(3)-261/20*zeta(8)"
                            % parts, value))
    return tuple(out)


class PeriodMatch:
    __slots__ = ("coefficient", "label", "value", "score")

    def __init__(self, coefficient, label, value, score):
        object.__setattr__(self, "coefficient", coefficient)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "score", score)

    def __setattr__(self, name, value):
        raise AttributeError("PeriodMatch is immutable")

    def __str__(self):
        c = self.coefficient
        coef = "" if c == 1 else ("%s*" % c)
        return "%s%s = %.8g  (%.2f sigma)" % (coef, self.label, self.value, self.score)

    __repr__ = __str__

    def to_json_obj(self):
        return {"coefficient": str(self.coefficient), "label": self.label,
                "value": self.value, "score": self.score}


def match_period(estimate, error, weight, max_denominator=12, max_numerator=1000,
                 accept_sigma=3.0):
    """All candidates q * constant within accept_sigma standard errors of the
    estimate, q a small rational, ranked by residual / error.

    Every reduced fraction whose denominator and numerator fit the bounds is
    considered, not just the closest one: at Monte-Carlo precision many
    rationals fit the window, and the caller wants the simple ones listed
    alongside the best-scoring ones.  Ties in score break toward smaller
    denominators.
    """
    if error <= 0:
        raise ValueError("error must be positive")
    if not 2 <= weight <= DEFAULT_MAX_WEIGHT:
        raise ValueError("weight must be between 2 and %d" % DEFAULT_MAX_WEIGHT)
    matches = []
    for label, value in period_candidates(weight):
        v = float(value)
        lo = (estimate - accept_sigma * error) / v
        hi = (estimate + accept_sigma * error) / v
        for b in range(1, max_denominator + 1):
            for a in range(math.ceil(lo * b), math.floor(hi * b) + 1):
                if a == 0 or abs(a) > max_numerator or math.gcd(a, b) != 1:
                    continue
                q = Fraction(a, b)
                score = abs(estimate - float(q) * v) / error
                matches.append(PeriodMatch(q, label, float(q) * v, score))
    matches.sort(key=lambda m: (m.score, m.coefficient.denominator,
                                abs(m.coefficient.numerator), m.label))
    return matches
