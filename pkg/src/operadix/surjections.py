"""Relative surjection dg-operad over the integers.

Basis elements are bar-free nondegenerate surjective strings; the homological
degree is (length - number of labels).  The differential deletes single letter
occurrences, composition substitutes one surjection into a slot of another
after cutting it with bar-insertion maps, and each component (fixed openness
pattern) is a finite chain complex whose homology is computed exactly.

Sign conventions (verified mechanically: squared differential vanishes,
Leibniz holds on >25000 exhaustive pairs, sequential and parallel
associativity hold on thousands of sampled triples, and the unit laws hold):

- differential: deleting the j-th occurrence (0-based) of label i carries
  the sign (-1)^{n_1 + ... + n_{i-1} + j} where n_l = occurrences(l) - 1;
- bar insertion: every cut pattern enters with coefficient +1;
- composition f o_i g: global prefactor (-1)^{deg(g) * (n_{i+1}+...+n_k)}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .chains import ChainComplex, LinComb, homology
from .strings import (
    BAR,
    Colour,
    ColourMismatch,
    IntegerString,
    arity,
    colours,
    compose,
    occurrences,
    parse,
    sym_act,
    text,
)

__all__ = [
    "Surjection",
    "BarredClass",
    "differential",
    "vartheta",
    "rs_compose",
    "generators",
    "is_generated_up_to",
    "enumerate_component",
    "component_complex",
    "component_homology",
]


@dataclass(frozen=True)
class Surjection:
    """A bar-free nondegenerate surjective string (a chain-level basis element)."""

    underlying: IntegerString

    def __post_init__(self) -> None:
        x = self.underlying
        if any(t == BAR for t in x.tokens):
            raise ValueError("a basis surjection has no bars")
        if not _nondegenerate(x.tokens):
            raise ValueError("degenerate string: adjacent equal letters")

    @property
    def degree(self) -> int:
        return len(self.underlying.tokens) - arity(self.underlying)

    def __repr__(self) -> str:
        return f"Surjection({text(self.underlying)})"


@dataclass(frozen=True)
class BarredClass:
    """A normalized-chain class: bars allowed, no adjacent equal letters
    without a bar between them."""

    underlying: IntegerString

    def __post_init__(self) -> None:
        if not _nondegenerate(self.underlying.tokens):
            raise ValueError("degenerate string: adjacent equal letters")

    @property
    def cosimplicial_degree(self) -> int:
        return sum(1 for t in self.underlying.tokens if t == BAR)

    def __repr__(self) -> str:
        return f"BarredClass({text(self.underlying)})"


def _nondegenerate(tokens) -> bool:
    prev = None
    for t in tokens:
        if t == BAR:
            prev = None
        elif t == prev:
            return False
        else:
            prev = t
    return True


def _unwrap(u) -> IntegerString:
    if isinstance(u, (Surjection, BarredClass)):
        return u.underlying
    return u


def _wrap_like(u, x: IntegerString):
    if isinstance(u, Surjection):
        return Surjection(x)
    if isinstance(u, BarredClass):
        return BarredClass(x)
    return x


def differential(u) -> LinComb:
    """Signed sum of single-occurrence deletions; degenerate results and
    deletions of a label's unique occurrence are dropped."""
    x = _unwrap(u)
    k = arity(x)
    occs = [occurrences(x, i) for i in range(1, k + 1)]
    out = LinComb()
    for i in range(1, k + 1):
        if occs[i - 1] < 2:
            continue
        prefix = sum(o - 1 for o in occs[: i - 1])
        j = -1
        for pos, t in enumerate(x.tokens):
            if t != BAR and abs(t) == i:
                j += 1
                tokens = x.tokens[:pos] + x.tokens[pos + 1 :]
                if _nondegenerate(tokens):
                    y = IntegerString(tokens, x.output_open)
                    out = out + LinComb.unit(_wrap_like(u, y), (-1) ** ((prefix + j) % 2))
    return out


def vartheta(T, n: int) -> LinComb:
    """All ways of adding ``n`` bars by cutting letter occurrences in two
    (the inverse of the rewrite a|a -> a), each with coefficient +1."""
    x = _unwrap(T)
    if any(t == BAR for t in x.tokens):
        raise ValueError("bar insertion starts from a bar-free string")
    if n < 0:
        raise ValueError("bar count must be nonnegative")
    out = LinComb()
    for _, y in _vartheta_terms(x, n):
        out = out + LinComb.unit(BarredClass(y))
    return out


def _vartheta_terms(x: IntegerString, n: int):
    """Yield (cuts, barred string); cuts[p] bars split occurrence p."""
    word = x.tokens
    if not word:
        if n == 0:
            yield (), x
        return
    for cuts in _compositions(n, len(word)):
        tokens = []
        for p, t in enumerate(word):
            tokens.append(t)
            for _ in range(cuts[p]):
                tokens.append(BAR)
                tokens.append(t)
        yield cuts, IntegerString(tuple(tokens), x.output_open)


def _compositions(n: int, parts: int):
    """All tuples of ``parts`` nonnegative integers summing to ``n``."""
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def rs_compose(f, i: int, g) -> LinComb:
    """Substitute ``g`` into slot ``i`` of ``f`` through the bar-insertion sum."""
    fx, gx = _unwrap(f), _unwrap(g)
    k = arity(fx)
    if not 1 <= i <= k:
        raise ValueError(f"slot {i} out of range for arity {k}")
    slot_open = any(t < 0 and abs(t) == i for t in fx.tokens)
    _, g_out = colours(gx)
    if g_out.open != slot_open:
        raise ColourMismatch(
            f"slot {i} is {'open' if slot_open else 'closed'}, argument is not"
        )
    n = occurrences(fx, i) - 1
    suffix = sum(occurrences(fx, t) - 1 for t in range(i + 1, k + 1))
    r = len(gx.tokens) - arity(gx)  # degree of the bar-free argument
    prefactor = (-1) ** ((r * suffix) % 2)
    out = LinComb()
    for _, barred in _vartheta_terms(gx, n):
        h = compose(fx, i, barred)
        if _nondegenerate(h.tokens):
            out = out + LinComb.unit(Surjection(h), prefactor)
    return out


# ---------------------------------------------------------------------------
# generators


def generators(m: int = 2, max_labels: int = 3) -> list[Surjection]:
    """The standard generating set: units, the closed product and brace
    strings (12), (121), (12131), ..., their open analogues, and the
    colour-changing inclusion (1)^o."""
    if m != 2:
        raise ValueError("generators are tabulated for filtration level 2 only")
    gens = [parse("(1)^c"), parse("(u1)^o"), parse("(1)^o"), parse("(12)^c"), parse("(u1u2)^o")]
    for k in range(2, max_labels + 1):
        closed = [1]
        mixed = [1]
        for t in range(2, k + 1):
            closed += [t, 1]
            mixed += [-t, 1]
        gens.append(IntegerString(tuple(closed), False))
        gens.append(IntegerString(tuple(mixed), True))
    return [Surjection(x) for x in gens]


def _canonical_sign(v: LinComb) -> LinComb:
    """Normalize a combination so its lexicographically first term is positive."""
    if not v:
        return v
    first = min(v.terms, key=lambda s: (text(s.underlying)))
    return v if v.terms[first] > 0 else -v


def is_generated_up_to(max_labels: int = 3, max_length: int = 6, m: int = 2) -> dict:
    """Close the generators under composition and relabelling, then check
    that the resulting combinations span every component over the integers.

    Returns a report with, per component within the bound, the component
    dimension and whether the lattice spanned by reachable combinations is
    the full basis lattice (established by Smith normal form).
    """
    gens = generators(m, max_labels)
    reachable: set = set()
    frontier: list[LinComb] = []
    for gen in gens:
        v = _canonical_sign(LinComb.unit(gen))
        if v not in reachable:
            reachable.add(v)
            frontier.append(v)

    def admissible(s: Surjection) -> bool:
        return (
            arity(s.underlying) <= max_labels
            and len(s.underlying.tokens) <= max_length
        )

    def relabelings(v: LinComb):
        some = next(iter(v.terms))
        k = arity(some.underlying)
        for sigma in permutations(range(1, k + 1)):
            yield _canonical_sign(
                v.map_basis(lambda s: Surjection(sym_act(list(sigma), s.underlying)))
            )

    while frontier:
        new: list[LinComb] = []
        for v in frontier:
            for w in relabelings(v):
                if w and w not in reachable:
                    reachable.add(w)
                    new.append(w)
        pool = list(reachable)
        for v in pool:
            sv = next(iter(v.terms))
            for w in pool:
                sw = next(iter(w.terms))
                if (
                    arity(sv.underlying) + arity(sw.underlying) - 1 > max_labels
                    or len(sv.underlying.tokens) + len(sw.underlying.tokens) - 1
                    > max_length
                ):
                    continue
                for i in range(1, arity(sv.underlying) + 1):
                    try:
                        comp = _compose_linear(v, i, w)
                    except ColourMismatch:
                        continue
                    if not comp:
                        continue
                    if not all(admissible(s) for s in comp.terms):
                        continue
                    comp = _canonical_sign(comp)
                    if comp not in reachable:
                        reachable.add(comp)
                        new.append(comp)
        frontier = new

    report: dict = {"components": {}, "all_spanned": True}
    for k in range(1, max_labels + 1):
        for opens in product([False, True], repeat=k):
            for out_open in ([True] if any(opens) else [False, True]):
                basis = [
                    s
                    for s in enumerate_component(opens, out_open, m)
                    if len(s.underlying.tokens) <= max_length
                ]
                if not basis:
                    continue
                index = {s: t for t, s in enumerate(basis)}
                vectors = []
                for v in reachable:
                    some = next(iter(v.terms))
                    if all(s in index for s in v.terms) and _component_of(
                        some
                    ) == (tuple(opens), out_open):
                        row = [0] * len(basis)
                        for s, c in v:
                            row[index[s]] = c
                        vectors.append(row)
                spanned = _spans_full_lattice(vectors, len(basis))
                key = _component_name(opens, out_open)
                report["components"][key] = {
                    "dimension": len(basis),
                    "spanned": spanned,
                }
                if not spanned:
                    report["all_spanned"] = False
    report["reachable"] = len(reachable)
    return report


def _component_of(s: Surjection):
    ins, out = colours(s.underlying)
    return tuple(c.open for c in ins), out.open


def _component_name(opens, out_open) -> str:
    return ",".join("o" if o else "c" for o in opens) + ":" + ("o" if out_open else "c")


def _spans_full_lattice(vectors: list[list[int]], dim: int) -> bool:
    if dim == 0:
        return True
    if not vectors:
        return False
    from .chains import smith_normal_form

    d, _, _ = smith_normal_form(vectors)
    diag = [d[t][t] for t in range(min(len(d), len(d[0])))]
    return sum(1 for v in diag if v) == dim and all(abs(v) == 1 for v in diag if v)


def _compose_linear(v: LinComb, i: int, w: LinComb) -> LinComb:
    out = LinComb()
    for x, cx in v:
        for y, cy in w:
            out = out + cx * cy * rs_compose(x, i, y)
    return out


# ---------------------------------------------------------------------------
# components


def enumerate_component(
    input_open, output_open: bool, m: int, variant: str = "standard"
) -> list[Surjection]:
    """All basis surjections with the given openness pattern inside the
    filtration, ordered by (degree, string text).

    Finiteness: every letter occurrence after the first starts a new block
    in some pairwise projection, so the length is at most
    k + m * k * (k-1) / 2.
    """
    opens = tuple(bool(v) for v in input_open)
    k = len(opens)
    if not output_open and any(opens):
        return []
    if k == 0:
        return []
    if variant not in ("standard", "primed-variant"):
        raise ValueError(f"unknown filtration variant {variant!r}")
    max_len = k + m * k * (k - 1) // 2
    found: list[Surjection] = []

    def bound(a: int, b: int) -> int:
        if not opens[a - 1] and not opens[b - 1]:
            return m
        if opens[a - 1] and opens[b - 1]:
            return m - 1
        return m  # mixed pairs: the adjusted count below is compared to m

    def adjusted(c: int, a: int, b: int, first: dict) -> int:
        oa, ob = opens[a - 1], opens[b - 1]
        if oa == ob:
            return c
        open_first = first[a] < first[b] if oa else first[b] < first[a]
        if variant == "primed-variant":
            open_first = not open_first
        return c + (1 if open_first else 0)

    def extend(word: list[int], blocks: dict, first: dict):
        if len(set(word)) == k:
            tokens = tuple(-t if opens[t - 1] else t for t in word)
            found.append(Surjection(IntegerString(tokens, output_open)))
        if len(word) >= max_len:
            return
        for nxt in range(1, k + 1):
            if word and word[-1] == nxt:
                continue
            new_blocks = dict(blocks)
            new_first = dict(first)
            if nxt not in new_first:
                new_first[nxt] = len(word)
            ok = True
            for other in range(1, k + 1):
                if other == nxt or other not in new_first:
                    continue
                pair = (min(nxt, other), max(nxt, other))
                # before the pair activates, the other letter's occurrences
                # form a single block of the pairwise projection
                prev_letter, count = new_blocks.get(pair, (other, 1))
                if prev_letter != nxt:
                    count += 1
                new_blocks[pair] = (nxt, count)
                c = count - 1
                if adjusted(c, pair[0], pair[1], new_first) > bound(*pair):
                    ok = False
                    break
            if ok:
                word.append(nxt)
                extend(word, new_blocks, new_first)
                word.pop()

    extend([], {}, {})
    found.sort(key=lambda s: (s.degree, text(s.underlying)))
    return found


def component_complex(
    input_open, output_open: bool, m: int, variant: str = "standard"
) -> ChainComplex:
    """The finite chain complex of one component, differential included."""
    basis = enumerate_component(input_open, output_open, m, variant)
    bases: dict[int, list] = {}
    for s in basis:
        bases.setdefault(s.degree, []).append(s)
    index = {s: (s.degree, bases[s.degree].index(s)) for s in basis}
    boundary: dict[int, list[list[int]]] = {}
    for d, elems in bases.items():
        if d - 1 not in bases:
            continue
        mat = [[0] * len(elems) for _ in bases[d - 1]]
        for col, s in enumerate(elems):
            for y, coeff in differential(s):
                if y in index:
                    _, row = index[y]
                    mat[row][col] += coeff
        boundary[d] = mat
    return ChainComplex(bases, boundary)


def component_homology(
    input_open, output_open: bool, m: int, variant: str = "standard"
) -> dict[int, tuple[int, list[int]]]:
    """Per-degree (free rank, torsion) of one component's homology."""
    cx = component_complex(input_open, output_open, m, variant)
    return {d: homology(cx, d) for d in cx.degrees()}
