"""Finite simple undirected graphs and the structural queries the labeling theory needs."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GraphError


def _edge(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; edges are stored with endpoints in identifier order."""

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    def __init__(self, vertices: Iterable[str], edges: Iterable[Iterable[str]] = ()):
        vs = tuple(str(v) for v in vertices)
        if len(set(vs)) != len(vs):
            raise GraphError("vertex identifiers must be unique")
        known = set(vs)
        es = set()
        for e in edges:
            u, v = (str(p) for p in e)
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            if u not in known or v not in known:
                raise GraphError(f"edge ({u!r}, {v!r}) uses an undeclared vertex")
            key = _edge(u, v)
            if key in es:
                raise GraphError(f"parallel edge ({u!r}, {v!r})")
            es.add(key)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", frozenset(es))

    def __contains__(self, v) -> bool:
        return v in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(self.edges)

    def neighbors(self, v: str) -> list[str]:
        self._require(v)
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def adjacency(self) -> list[list[int]]:
        """Neighbour lists by vertex position."""
        pos = {v: i for i, v in enumerate(self.vertices)}
        adj: list[list[int]] = [[] for _ in self.vertices]
        for a, b in self.edges:
            adj[pos[a]].append(pos[b])
            adj[pos[b]].append(pos[a])
        for nb in adj:
            nb.sort()
        return adj

    def _require(self, v: str) -> None:
        if v not in self.vertices:
            raise GraphError(f"unknown vertex {v!r}")


def degree(g: Graph, v: str) -> int:
    g._require(v)
    return sum(1 for e in g.edges if v in e)


def degrees(g: Graph) -> dict[str, int]:
    out = {v: 0 for v in g.vertices}
    for a, b in g.edges:
        out[a] += 1
        out[b] += 1
    return out


def pendant_vertices(g: Graph) -> list[str]:
    d = degrees(g)
    return [v for v in g.vertices if d[v] == 1]


def isolated_vertices(g: Graph) -> list[str]:
    d = degrees(g)
    return [v for v in g.vertices if d[v] == 0]


def components(g: Graph) -> list[list[str]]:
    adj = {v: [] for v in g.vertices}
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    seen: set[str] = set()
    out = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return len(g.vertices) > 0 and len(components(g)) == 1


def is_star(g: Graph) -> bool:
    """One centre adjacent to every other vertex and no further edges (K_{1,k}, k >= 1)."""
    n = len(g.vertices)
    if n < 2 or len(g.edges) != n - 1:
        return False
    d = degrees(g)
    return any(d[v] == n - 1 for v in g.vertices)


def is_tree(g: Graph) -> bool:
    return is_connected(g) and len(g.edges) == len(g.vertices) - 1


# -- small named graphs -----------------------------------------------------

def _ids(n: int, prefix: str = "v") -> list[str]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def path(n: int) -> Graph:
    vs = _ids(n)
    return Graph(vs, zip(vs, vs[1:]))


def cycle(n: int) -> Graph:
    vs = _ids(n)
    return Graph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def complete(n: int) -> Graph:
    vs = _ids(n)
    return Graph(vs, itertools.combinations(vs, 2))


def star(k: int) -> Graph:
    """K_{1,k} with centre ``v1``."""
    vs = _ids(k + 1)
    return Graph(vs, ((vs[0], v) for v in vs[1:]))


def disjoint_union(g: Graph, h: Graph, prefix: str = "w") -> Graph:
    ren = {v: f"{prefix}{i}" for i, v in enumerate(h.vertices, 1)}
    clash = set(ren.values()) & set(g.vertices)
    if clash:
        raise GraphError(f"identifier clash {sorted(clash)}")
    return Graph(
        list(g.vertices) + [ren[v] for v in h.vertices],
        list(g.edges) + [(ren[a], ren[b]) for a, b in h.edges],
    )


# -- canonical forms and enumeration ---------------------------------------

def _refined_classes(n: int, adj: list[set[int]]) -> list[list[int]]:
    """Partition vertices by an isomorphism-invariant colour, refined to a fixpoint."""
    colour = [len(adj[v]) for v in range(n)]
    while True:
        sig = [(colour[v], tuple(sorted(colour[w] for w in adj[v]))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            colour = new
            break
        colour = new
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(colour[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def _code(order: tuple[int, ...], adj: list[set[int]]) -> tuple[int, ...]:
    n = len(order)
    return tuple(
        1 if order[j] in adj[order[i]] else 0 for i in range(n) for j in range(i + 1, n)
    )


def canonical_form(n: int, edges: Iterable[tuple[int, int]]) -> tuple[int, tuple[int, ...]]:
    """Canonical code of a graph on vertices ``0..n-1``.

    The upper-triangle adjacency string is maximised over every vertex order that
    lists the refined colour classes in colour order; the colouring is invariant,
    so isomorphic graphs share a code.
    """
    adj: list[set[int]] = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    classes = _refined_classes(n, adj)
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = tuple(v for p in parts for v in p)
        code = _code(order, adj)
        if best is None or code > best:
            best = code
    return n, best


def graph_canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    pos = {v: i for i, v in enumerate(g.vertices)}
    return canonical_form(len(g.vertices), [(pos[a], pos[b]) for a, b in g.edges])


def _from_code(n: int, code: tuple[int, ...]) -> Graph:
    vs = _ids(n)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph(vs, [(vs[i], vs[j]) for (i, j), bit in zip(pairs, code) if bit])


MAX_ENUMERATION_VERTICES = 7


def _all_codes(n: int) -> list[tuple[int, ...]]:
    # grow every class on n-1 vertices by one vertex with every neighbourhood
    if n == 1:
        return [()]
    seen = set()
    for code in _all_codes(n - 1):
        m = n - 1
        pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
        base = [p for p, bit in zip(pairs, code) if bit]
        for mask in range(1 << m):
            edges = base + [(i, m) for i in range(m) if mask >> i & 1]
            seen.add(canonical_form(n, edges)[1])
    return sorted(seen, reverse=True)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of simple graphs on ``n`` vertices."""
    if not 1 <= n <= MAX_ENUMERATION_VERTICES:
        raise GraphError(f"n must be between 1 and {MAX_ENUMERATION_VERTICES}, got {n}")
    for code in _all_codes(n):
        yield _from_code(n, code)


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    if not 1 <= n <= 6:
        raise GraphError(f"n must be between 1 and 6, got {n}")
    return (g for g in enumerate_graphs(n) if is_connected(g))


def enumerate_trees(n: int) -> list[Graph]:
    """Trees on ``n`` vertices up to isomorphism, grown leaf by leaf."""
    if n < 1:
        raise GraphError("n must be positive")
    codes = {canonical_form(1, [])[1]}
    for m in range(1, n):
        nxt = set()
        for code in codes:
            pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
            base = [p for p, bit in zip(pairs, code) if bit]
            for i in range(m):
                nxt.add(canonical_form(m + 1, base + [(i, m)])[1])
        codes = nxt
    return [_from_code(n, c) for c in sorted(codes, reverse=True)]


def automorphism_orbits(g: Graph) -> list[list[str]]:
    """Vertex orbits under the automorphism group, each listed in vertex order.

    For each pair of same-colour vertices not yet known to share an orbit, look
    for a single automorphism mapping one onto the other.
    """
    n = len(g.vertices)
    adj = [set(nb) for nb in g.adjacency()]
    colour = [0] * n
    for c, members in enumerate(_refined_classes(n, adj)):
        for v in members:
            colour[v] = c
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def maps(src: int, dst: int) -> list[int] | None:
        image = [-1] * n
        used = [False] * n
        order = [src] + [v for v in range(n) if v != src]

        def consistent(v, w):
            return all(
                (u in adj[v]) == (image[u] in adj[w]) for u in range(n) if image[u] >= 0
            )

        def extend(k):
            if k == n:
                return True
            v = order[k]
            cands = [dst] if k == 0 else range(n)
            for w in cands:
                if used[w] or colour[w] != colour[v] or not consistent(v, w):
                    continue
                image[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                image[v] = -1
                used[w] = False
            return False

        return image if extend(0) else None

    for v in range(n):
        for w in range(v + 1, n):
            if colour[v] != colour[w] or find(v) == find(w):
                continue
            image = maps(v, w)
            if image is None:
                continue
            # every cycle of the automorphism lies inside one orbit
            for a in range(n):
                ra, rb = find(a), find(image[a])
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)

    orbits: dict[int, list[str]] = {}
    for i, v in enumerate(g.vertices):
        orbits.setdefault(find(i), []).append(v)
    return sorted(orbits.values(), key=lambda o: g.vertices.index(o[0]))
