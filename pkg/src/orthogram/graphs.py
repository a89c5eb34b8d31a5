"""Labeled multigraphs behind monomials in the entries of a symmetric matrix.

A multigraph on m labeled vertices encodes the monomial  prod X_{ij}  over
its edge multiset; loops mean diagonal entries.  Degrees count loops twice,
so the monomials fixed by the row-and-column scaling torus are exactly the
even-regular multigraphs, and the expansion of det(X) groups into classes
indexed by the 2-regular ones.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .config import DEFAULT_CAPS, CapExceeded

Edge = tuple[int, int]


@dataclass(frozen=True)
class Multigraph:
    """Multigraph on vertices 0..vertex_count-1; loops and parallel edges allowed.

    ``edges`` is the canonical form: every pair normalized to (min, max) and
    the multiset sorted, so dataclass equality is edge-multiset equality.
    """

    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("need at least one vertex")
        for (a, b) in self.edges:
            if not (0 <= a <= b < self.vertex_count):
                raise ValueError("edge %r out of range or not normalized" % ((a, b),))
        if list(self.edges) != sorted(self.edges):
            raise ValueError("edges not in canonical sorted order")

    @classmethod
    def of(cls, vertex_count: int, edges) -> "Multigraph":
        norm = sorted((min(a, b), max(a, b)) for a, b in edges)
        return cls(vertex_count, tuple(norm))

    # -- structure ----------------------------------------------------------

    def degree_vector(self) -> tuple[int, ...]:
        """Vertex degrees; a loop adds 2 to its vertex."""
        deg = [0] * self.vertex_count
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return tuple(deg)

    def regular_valency(self) -> int | None:
        """The common degree if the graph is regular, else None."""
        deg = self.degree_vector()
        return deg[0] if all(d == deg[0] for d in deg) else None

    def edge_multiplicities(self) -> Counter:
        return Counter(self.edges)

    def union(self, other: "Multigraph") -> "Multigraph":
        if self.vertex_count != other.vertex_count:
            raise ValueError("vertex counts differ")
        return Multigraph.of(self.vertex_count, self.edges + other.edges)

    def is_submultigraph_of(self, other: "Multigraph") -> bool:
        if self.vertex_count != other.vertex_count:
            return False
        mine, theirs = self.edge_multiplicities(), other.edge_multiplicities()
        return all(theirs[e] >= k for e, k in mine.items())

    def difference(self, other: "Multigraph") -> "Multigraph":
        """Edge-multiset difference; ``other`` must be a sub-multigraph."""
        if not other.is_submultigraph_of(self):
            raise ValueError("not a sub-multigraph")
        remaining = self.edge_multiplicities()
        remaining.subtract(other.edge_multiplicities())
        edges = []
        for e, k in remaining.items():
            edges.extend([e] * k)
        return Multigraph.of(self.vertex_count, edges)

    def cycle_lengths(self) -> list[int]:
        """Component cycle lengths of a 2-regular multigraph.

        Loops count as length-1 cycles, parallel pairs as length-2.
        """
        if self.regular_valency() != 2:
            raise ValueError("cycle decomposition needs a 2-regular multigraph")
        mult = self.edge_multiplicities()
        neighbors: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for (a, b), k in mult.items():
            if a == b:
                continue
            neighbors[a].extend([b] * k)
            neighbors[b].extend([a] * k)
        seen = [False] * self.vertex_count
        lengths = []
        for v in range(self.vertex_count):
            if seen[v]:
                continue
            seen[v] = True
            if mult[(v, v)] == 1:
                lengths.append(1)
                continue
            if len(neighbors[v]) == 2 and neighbors[v][0] == neighbors[v][1]:
                seen[neighbors[v][0]] = True
                lengths.append(2)
                continue
            # single edges to two distinct neighbors: walk the cycle
            prev, cur, steps = v, neighbors[v][0], 1
            while cur != v:
                seen[cur] = True
                a, b = neighbors[cur]
                nxt = b if a == prev else a
                prev, cur = cur, nxt
                steps += 1
            lengths.append(steps)
        return lengths

    # -- JSON (external form is 1-based) -------------------------------------

    def to_json(self) -> dict:
        return {"m": self.vertex_count, "edges": [[a + 1, b + 1] for a, b in self.edges]}

    @classmethod
    def from_json(cls, data) -> "Multigraph":
        m = data["m"]
        edges = [(int(a) - 1, int(b) - 1) for a, b in data["edges"]]
        return cls.of(m, edges)


def all_loops(m: int) -> Multigraph:
    return Multigraph.of(m, [(i, i) for i in range(m)])


def cycle_graph(vertices: list[int], total: int) -> Multigraph:
    """The cycle through the given vertices, in order."""
    k = len(vertices)
    if k == 1:
        return Multigraph.of(total, [(vertices[0], vertices[0])])
    if k == 2:
        return Multigraph.of(total, [tuple(sorted(vertices))] * 2)
    edges = [(vertices[i], vertices[(i + 1) % k]) for i in range(k)]
    return Multigraph.of(total, edges)


@dataclass(frozen=True)
class DeterminantalClass:
    """One unoriented class of determinantal terms of a symmetric matrix.

    ``graph`` is 2-regular; ``sign`` is the shared sign of the class's
    permutations; each cycle of length >= 3 can be traversed two ways, so
    the class stands for 2**long_cycle_count permutations.
    """

    graph: Multigraph
    sign: int
    long_cycle_count: int

    @property
    def permutation_count(self) -> int:
        return 2 ** self.long_cycle_count


def _enumerate_regular(m: int, valency: int) -> list[Multigraph]:
    """All multigraphs on m labeled vertices with every degree == valency."""
    cells = [(i, j) for i in range(m) for j in range(i, m)]
    residual = [valency] * m
    chosen: list[tuple[Edge, int]] = []
    found: list[Multigraph] = []

    def rec(idx: int) -> None:
        if idx == len(cells):
            edges = []
            for edge, count in chosen:
                edges.extend([edge] * count)
            found.append(Multigraph.of(m, edges))
            return
        i, j = cells[idx]
        last_in_row = j == m - 1
        if i == j:
            cap = residual[i] // 2
            for e in range(cap + 1):
                residual[i] -= 2 * e
                chosen.append(((i, j), e))
                if not (last_in_row and residual[i] != 0):
                    rec(idx + 1)
                chosen.pop()
                residual[i] += 2 * e
        else:
            cap = min(residual[i], residual[j])
            for e in range(cap + 1):
                residual[i] -= e
                residual[j] -= e
                chosen.append(((i, j), e))
                if not (last_in_row and residual[i] != 0):
                    rec(idx + 1)
                chosen.pop()
                residual[i] += e
                residual[j] += e

    rec(0)
    found.sort(key=lambda g: g.edges)
    return found


def enumerate_regular_multigraphs(
    m: int,
    valency: int,
    *,
    max_vertices: int | None = None,
    max_valency: int | None = None,
) -> list[Multigraph]:
    """All valency-regular multigraphs on m labeled vertices, canonical order.

    Valency must be even and positive (loops count twice toward degree).
    """
    max_vertices = DEFAULT_CAPS.regular_vertices if max_vertices is None else max_vertices
    max_valency = DEFAULT_CAPS.regular_valency if max_valency is None else max_valency
    if m < 1:
        raise ValueError("m must be positive")
    if valency < 2 or valency % 2 != 0:
        raise ValueError("valency must be an even positive integer")
    if m > max_vertices or valency > max_valency:
        raise CapExceeded(
            "regular enumeration capped at m <= %d, valency <= %d" % (max_vertices, max_valency)
        )
    return _enumerate_regular(m, valency)


def enumerate_determinantal_classes(
    m: int, *, max_vertices: int | None = None
) -> list[DeterminantalClass]:
    """All determinantal-term classes for an m x m symmetric matrix.

    One class per 2-regular multigraph on m labeled vertices, in canonical
    (lexicographic) order.
    """
    max_vertices = (
        DEFAULT_CAPS.determinantal_vertices if max_vertices is None else max_vertices
    )
    if m < 1:
        raise ValueError("m must be positive")
    if m > max_vertices:
        raise CapExceeded("class enumeration capped at m <= %d" % max_vertices)
    classes = []
    for g in _enumerate_regular(m, 2):
        lengths = g.cycle_lengths()
        sign = -1 if (m - len(lengths)) % 2 else 1
        long_cycles = sum(1 for L in lengths if L >= 3)
        classes.append(DeterminantalClass(g, sign, long_cycles))
    return classes


def determinantal_term_counts(max_m: int, *, max_order: int | None = None) -> list[int]:
    """Counts of determinantal-term classes for m = 1..max_m via the
    exponential generating function exp(t/2 + t^2/4) / sqrt(1 - t).

    Exact rational series arithmetic throughout; the m-th count is
    m! times the t^m coefficient.
    """
    cap = DEFAULT_CAPS.series_order if max_order is None else max_order
    if max_m < 1:
        raise ValueError("max_m must be positive")
    if max_m > cap:
        raise CapExceeded("series expansion capped at order %d" % cap)
    # f = exp(p) with p = t/2 + t^2/4, via f' = p' f
    p1, p2 = Fraction(1, 2), Fraction(1, 4)
    f = [Fraction(1)] + [Fraction(0)] * max_m
    for n in range(1, max_m + 1):
        acc = p1 * f[n - 1]
        if n >= 2:
            acc += 2 * p2 * f[n - 2]
        f[n] = acc / n
    # g = (1 - t)^(-1/2)
    g = [Fraction(math.comb(2 * n, n), 4**n) for n in range(max_m + 1)]
    counts = []
    for m in range(1, max_m + 1):
        coeff = sum(f[i] * g[m - i] for i in range(m + 1))
        value = coeff * math.factorial(m)
        assert value.denominator == 1
        counts.append(int(value))
    return counts


# -- 2-factorization -------------------------------------------------------


def _euler_orientation(m: int, edges: list[Edge]) -> list[tuple[int, int, int]]:
    """Orient all edges along Euler circuits of each component.

    Returns directed triples (tail, head, edge_index).  Every vertex ends
    up with equal out- and in-degree; this is asserted, not assumed.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(m)]
    for eid, (a, b) in enumerate(edges):
        adj[a].append((b, eid))
        if a != b:
            adj[b].append((a, eid))
    used = [False] * len(edges)
    ptr = [0] * m
    directed: list[tuple[int, int, int]] = []
    for start in range(m):
        stack = [start]
        while stack:
            v = stack[-1]
            while ptr[v] < len(adj[v]) and used[adj[v][ptr[v]][1]]:
                ptr[v] += 1
            if ptr[v] == len(adj[v]):
                stack.pop()
                continue
            u, eid = adj[v][ptr[v]]
            used[eid] = True
            directed.append((v, u, eid))
            stack.append(u)
    out_deg = [0] * m
    in_deg = [0] * m
    for a, b, _ in directed:
        out_deg[a] += 1
        in_deg[b] += 1
    assert out_deg == in_deg, "Euler orientation failed to balance degrees"
    return directed


def _directed_perfect_matching(m: int, arcs: list[tuple[int, int, int]], alive: list[bool]) -> list[int]:
    """Pick one alive out-arc per tail so every head is hit exactly once.

    Kuhn's augmenting-path matching on the tail/head bipartite graph; the
    arc pool is out/in-regular so a perfect matching always exists.
    """
    out_arcs: list[list[int]] = [[] for _ in range(m)]
    for idx, (a, _, _) in enumerate(arcs):
        if alive[idx]:
            out_arcs[a].append(idx)
    match_head = [-1] * m  # head vertex -> arc index

    def assign(tail: int, seen: list[bool]) -> bool:
        for idx in out_arcs[tail]:
            head = arcs[idx][1]
            if seen[head]:
                continue
            seen[head] = True
            if match_head[head] == -1 or assign(arcs[match_head[head]][0], seen):
                match_head[head] = idx
                return True
        return False

    for tail in range(m):
        if not assign(tail, [False] * m):
            raise AssertionError("regular bipartite graph must have a perfect matching")
    return [match_head[v] for v in range(m)]


def two_factorization(g: Multigraph) -> list[Multigraph]:
    """Split an even-regular multigraph into spanning 2-regular parts.

    Classical construction: orient each component along an Euler circuit,
    so every vertex has out- and in-degree d; a perfect matching of the
    tail/head bipartite graph is a spanning set of directed cycles, i.e.
    one 2-regular part.  Extract d parts this way.  The parts' edge
    multisets partition the input's edges exactly.
    """
    valency = g.regular_valency()
    if valency is None or valency % 2 != 0:
        raise ValueError("input must be regular of even valency (loops count twice)")
    if valency == 0:
        return []
    if valency == 2:
        return [g]
    m = g.vertex_count
    edges = list(g.edges)
    arcs = _euler_orientation(m, edges)
    alive = [True] * len(arcs)
    factors = []
    for _ in range(valency // 2):
        picked = _directed_perfect_matching(m, arcs, alive)
        part_edges = []
        for idx in picked:
            alive[idx] = False
            a, b, eid = arcs[idx]
            part_edges.append(edges[eid])
        part = Multigraph.of(m, part_edges)
        assert part.regular_valency() == 2
        factors.append(part)
    assert not any(alive)
    factors.sort(key=lambda f: f.edges)
    return factors


def factor_avoiding(g: Multigraph, avoid: Multigraph) -> Multigraph:
    """A 2-regular spanning part of ``g`` that fits inside ``g`` minus ``avoid``.

    Requires ``g`` regular of valency 2k with ``avoid`` a sub-multigraph of
    fewer than k edges.  A counting argument over the 2-factorization
    guarantees such a part exists; failing to find one is a bug, not a
    legitimate outcome.
    """
    valency = g.regular_valency()
    if valency is None or valency % 2 != 0:
        raise ValueError("input must be regular of even valency")
    k = valency // 2
    if not avoid.is_submultigraph_of(g):
        raise ValueError("the avoided graph must be a sub-multigraph")
    if len(avoid.edges) >= k:
        raise ValueError("need strictly fewer avoided edges than 2-factors")
    remaining = g.difference(avoid).edge_multiplicities()
    for part in two_factorization(g):
        if all(remaining[e] >= c for e, c in part.edge_multiplicities().items()):
            return part
    raise RuntimeError("no avoiding 2-factor found; this is an implementation bug")


def maximum_bipartite_matching(adjacency: list[list[int]], n_right: int) -> list[int]:
    """Kuhn's algorithm; returns right-match per left vertex (-1 if unmatched)."""
    match_right = [-1] * n_right
    match_left = [-1] * len(adjacency)

    def assign(u: int, seen: list[bool]) -> bool:
        for v in adjacency[u]:
            if seen[v]:
                continue
            seen[v] = True
            if match_right[v] == -1 or assign(match_right[v], seen):
                match_right[v] = u
                match_left[u] = v
                return True
        return False

    for u in range(len(adjacency)):
        assign(u, [False] * n_right)
    return match_left
