"""Coloured complete-graph poset operad.

An element decorates every pair of vertices of a complete graph with a
positive integer level and an orientation, subject to monochromatic
acyclicity.  Vertices are closed or open; the filtration bounds levels per
the colour pattern of each pair.  The morphism ``q`` sends an integer-string
to the graph of its pairwise complexities, orienting each edge towards the
letter whose first occurrence comes earlier.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .strings import (
    IntegerString,
    arity,
    c_count,
    _first_occurrence,
    _is_open,
)

__all__ = [
    "GraphElement",
    "validate",
    "leq",
    "in_filtration",
    "compose",
    "sym_act",
    "q",
    "is_fully_acyclic",
    "enumerate_graphs",
]


@dataclass(frozen=True)
class GraphElement:
    """Vertex colours plus one (level, orientation) per vertex pair.

    ``edges[(i, j)] = (mu, orient)`` for ``i < j``, with ``orient = +1``
    meaning ``i -> j`` and ``-1`` meaning ``j -> i``.
    """

    vertex_open: tuple[bool, ...]
    edges: "frozenset[tuple[tuple[int, int], tuple[int, int]]]"
    output_open: bool

    def __init__(self, vertex_open, edges, output_open):
        vertex_open = tuple(bool(v) for v in vertex_open)
        n = len(vertex_open)
        edict = dict(edges.items()) if isinstance(edges, dict) else dict(edges)
        expected = set(combinations(range(1, n + 1), 2))
        if set(edict) != expected:
            raise ValueError("edges must cover exactly the pairs i < j")
        for (i, j), (mu, orient) in edict.items():
            if mu < 1 or orient not in (1, -1):
                raise ValueError(f"bad decoration on edge {(i, j)}")
        object.__setattr__(self, "vertex_open", vertex_open)
        object.__setattr__(
            self, "edges", frozenset((p, tuple(d)) for p, d in edict.items())
        )
        object.__setattr__(self, "output_open", bool(output_open))

    @property
    def n(self) -> int:
        return len(self.vertex_open)

    def edge_dict(self) -> dict[tuple[int, int], tuple[int, int]]:
        return {p: d for p, d in self.edges}

    def decoration(self, i: int, j: int) -> tuple[int, int]:
        """(mu, orient) for the ordered pair (i, j), any order of arguments."""
        if i < j:
            return self.edge_dict()[(i, j)]
        mu, orient = self.edge_dict()[(j, i)]
        return mu, -orient


def validate(alpha: GraphElement) -> bool:
    """Monochromatic acyclicity plus the closed-output colour condition."""
    if not alpha.output_open and any(alpha.vertex_open):
        return False
    by_level: dict[int, list[tuple[int, int]]] = {}
    for (i, j), (mu, orient) in alpha.edges:
        arc = (i, j) if orient == 1 else (j, i)
        by_level.setdefault(mu, []).append(arc)
    return all(_acyclic(arcs, alpha.n) for arcs in by_level.values())


def _acyclic(arcs: list[tuple[int, int]], n: int) -> bool:
    succ: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for a, b in arcs:
        succ[a].append(b)
    state = {v: 0 for v in succ}  # 0 new, 1 on stack, 2 done

    def dfs(v: int) -> bool:
        state[v] = 1
        for w in succ[v]:
            if state[w] == 1 or (state[w] == 0 and not dfs(w)):
                return False
        state[v] = 2
        return True

    return all(state[v] != 0 or dfs(v) for v in succ)


def leq(alpha: GraphElement, beta: GraphElement) -> bool:
    """Poset order: every pair agrees or has strictly smaller level in alpha."""
    if alpha.vertex_open != beta.vertex_open or alpha.output_open != beta.output_open:
        raise ValueError("poset order needs identical colours")
    eb = beta.edge_dict()
    for pair, (mu, orient) in alpha.edge_dict().items():
        mu2, orient2 = eb[pair]
        if (mu, orient) != (mu2, orient2) and not mu < mu2:
            return False
    return True


def in_filtration(alpha: GraphElement, m: int) -> bool:
    """Level bounds: closed pairs m, open pairs m-1, mixed pairs m or m-1
    according to whether the edge leaves the open vertex or enters it."""
    if m < 1:
        raise ValueError("filtration level m must be >= 1")
    for (i, j), (mu, orient) in alpha.edges:
        oi, oj = alpha.vertex_open[i - 1], alpha.vertex_open[j - 1]
        if not oi and not oj:
            bound = m
        elif oi and oj:
            bound = m - 1
        else:
            source_open = oi if orient == 1 else oj
            bound = m if source_open else m - 1
        if mu > bound:
            return False
    return True


def compose(alpha: GraphElement, betas: list[GraphElement]) -> GraphElement:
    """Blockwise substitution: intra-block pairs copy the block, cross-block
    pairs copy the corresponding edge of ``alpha``."""
    if len(betas) != alpha.n:
        raise ValueError("need one argument per vertex")
    for v, beta in enumerate(betas, start=1):
        if beta.output_open != alpha.vertex_open[v - 1]:
            raise ValueError(f"slot {v} openness does not match argument {v}")
    offsets = [0]
    for beta in betas:
        offsets.append(offsets[-1] + beta.n)
    vertex_open = tuple(o for beta in betas for o in beta.vertex_open)
    edges: dict[tuple[int, int], tuple[int, int]] = {}
    for v, beta in enumerate(betas, start=1):
        for (i, j), dec in beta.edges:
            edges[(i + offsets[v - 1], j + offsets[v - 1])] = dec
    ea = alpha.edge_dict()
    for v in range(1, alpha.n + 1):
        for w in range(v + 1, alpha.n + 1):
            dec = ea[(v, w)]
            for a in range(offsets[v - 1] + 1, offsets[v] + 1):
                for b in range(offsets[w - 1] + 1, offsets[w] + 1):
                    edges[(a, b)] = dec
    return GraphElement(vertex_open, edges, alpha.output_open)


def sym_act(sigma, alpha: GraphElement) -> GraphElement:
    """Relabel vertex ``i`` to ``sigma[i-1]``, decorations unchanged."""
    n = alpha.n
    if len(sigma) != n or sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma!r} is not a permutation of 1..{n}")
    vertex_open = [False] * n
    for i in range(1, n + 1):
        vertex_open[sigma[i - 1] - 1] = alpha.vertex_open[i - 1]
    edges = {}
    for (i, j), (mu, orient) in alpha.edges:
        a, b = sigma[i - 1], sigma[j - 1]
        if a < b:
            edges[(a, b)] = (mu, orient)
        else:
            edges[(b, a)] = (mu, -orient)
    return GraphElement(tuple(vertex_open), edges, alpha.output_open)


def q(x: IntegerString) -> GraphElement:
    """Pairwise complexities with first-occurrence-reversing orientations."""
    k = arity(x)
    vertex_open = tuple(_is_open(x, i) for i in range(1, k + 1))
    edges = {}
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            mu = c_count(x, i, j)  # >= 1 since both letters occur
            orient = 1 if _first_occurrence(x, i) > _first_occurrence(x, j) else -1
            edges[(i, j)] = (mu, orient)
    return GraphElement(vertex_open, edges, x.output_open)


def is_fully_acyclic(alpha: GraphElement) -> bool:
    """True when the orientation is acyclic ignoring levels (permutation-like)."""
    arcs = [
        (i, j) if orient == 1 else (j, i) for (i, j), (_, orient) in alpha.edges
    ]
    return _acyclic(arcs, alpha.n)


def enumerate_graphs(
    vertex_open, output_open: bool, m: int
) -> list[GraphElement]:
    """All valid filtration-m elements on the given coloured vertices."""
    vertex_open = tuple(bool(v) for v in vertex_open)
    if not output_open and any(vertex_open):
        return []
    pairs = list(combinations(range(1, len(vertex_open) + 1), 2))
    out = []
    for decs in product(product(range(1, m + 1), (1, -1)), repeat=len(pairs)):
        alpha = GraphElement(vertex_open, dict(zip(pairs, decs)), output_open)
        if validate(alpha) and in_filtration(alpha, m):
            out.append(alpha)
    return out
